from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Tuple
import csv

from numerics.real import Numerics, Real
from numerics.rendering import render_fixed
from search.errors import DomainError

Vertex = Tuple[Real, Real]

DEFAULT_TRAJECTORY_DIGITS = 40


@dataclass(frozen=True)
class Trajectory:
    """A piecewise-linear searcher path given by its (t, x) vertices."""
    vertices: Tuple[Vertex, ...]

    def __post_init__(self):
        if len(self.vertices) == 0:
            raise DomainError("a trajectory needs at least one vertex")

    def segments(self) -> Iterator[Tuple[Vertex, Vertex]]:
        return zip(self.vertices, self.vertices[1:])

    @property
    def duration(self) -> Real:
        return self.vertices[-1][0]

    def __len__(self) -> int:
        return len(self.vertices)

    def rows(self, digits: int = DEFAULT_TRAJECTORY_DIGITS) -> Iterator[Tuple[str, str]]:
        for t, x in self.vertices:
            yield render_fixed(t, digits), render_fixed(x, digits)

    def write_csv(self, path: Path, digits: int = DEFAULT_TRAJECTORY_DIGITS):
        with open(path, "w", newline="") as f:
            self.write_rows(f, digits)

    def write_rows(self, stream, digits: int = DEFAULT_TRAJECTORY_DIGITS):
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["t", "x"])
        writer.writerows(self.rows(digits))

    @staticmethod
    def read_csv(path: Path, numerics: Numerics) -> 'Trajectory':
        with open(path, newline="") as f:
            return Trajectory.read_rows(f, numerics)

    @staticmethod
    def read_rows(stream, numerics: Numerics) -> 'Trajectory':
        reader = csv.DictReader(stream)
        if reader.fieldnames != ["t", "x"]:
            raise DomainError(f"expected a 't,x' header, got {reader.fieldnames}")
        vertices = tuple((numerics.real(row["t"]), numerics.real(row["x"])) for row in reader)
        return Trajectory(vertices)
