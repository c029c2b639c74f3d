class GameError(Exception):
    """Base class for domain errors raised by hylogame."""


class WellFoundednessError(GameError):
    def __init__(self, cycle, message=None):
        self.cycle = list(cycle)
        super().__init__(message or f"option relation has a cycle: {self.cycle}")


class BudgetExceeded(GameError):
    pass


class GraphConditionError(GameError):
    """A move x -> x' whose image f(x) -> f(x') is not a move."""

    def __init__(self, edge, message=None):
        self.edge = edge
        super().__init__(message or f"graph condition fails on edge {edge}")


class PathLiftingError(GameError):
    """A move f(x) -> y that no move out of x lifts."""

    def __init__(self, edge, message=None):
        self.edge = edge
        super().__init__(message or f"path-lifting fails: state {edge[0]} cannot lift move to {edge[1]}")


class DepthGuardError(GameError):
    pass


class SizeGuardError(GameError):
    pass


class CarrierError(GameError, TypeError):
    pass


class SourceMismatch(GameError):
    pass


class UnknownSignature(GameError):
    pass


class InstabilityError(GameError):
    pass


class GameFileError(GameError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")
