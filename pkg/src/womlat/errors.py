"""Exception hierarchy shared by every module of the package."""


class LatticeError(Exception):
    """Base class for all errors raised by womlat."""


class DuplicateLabel(LatticeError):
    pass


class UnknownLabel(LatticeError):
    pass


class NotAntisymmetric(LatticeError):
    """The cover relation contains a cycle; ``cycle`` lists its labels."""

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("order relation has a cycle: " + " < ".join(self.cycle + self.cycle[:1]))


class NotALattice(LatticeError):
    """Some pair of elements lacks a unique join or meet."""

    def __init__(self, pair, missing):
        self.pair = tuple(pair)
        self.missing = missing
        super().__init__(f"pair ({pair[0]},{pair[1]}) has no unique {missing}")


class CapExceeded(LatticeError):
    pass


class Unbounded(LatticeError):
    pass


class NoBottom(Unbounded):
    pass


class NoTop(Unbounded):
    pass


class PreconditionViolated(LatticeError):
    """A theorem-backed construction was called outside its hypotheses."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class InvariantFailed(LatticeError):
    """A construction produced a structure violating a guaranteed law."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class TermSyntaxError(LatticeError):
    def __init__(self, message, pos):
        self.pos = pos
        super().__init__(f"{message} at position {pos}")


class UnknownSymbol(TermSyntaxError):
    pass


class MissingOperation(LatticeError):
    pass


class MissingConstant(LatticeError):
    pass


class UnboundVariable(LatticeError):
    pass


class UnknownFixture(LatticeError):
    pass


class FormatError(LatticeError):
    """Malformed .lat or .msr input."""
