from experiments.config import default_precision_bits
from experiments.sweep import SweepConfig, SweepRow, header, sweep
