class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ZigzagValidationError(ValueError):
    """A sequence of evasiveness values does not define a zigzag strategy."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"invalid zigzag sequence at index {index}: {reason}")
        self.index = index
        self.reason = reason


class HorizonExhaustedError(RuntimeError):
    """No round within the horizon catches the requested target."""

    def __init__(self, side: int, horizon: int, detail: str = ""):
        message = f"no round on side {side} within horizon {horizon}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)
        self.side = side
        self.horizon = horizon
