"""Exception hierarchy.

``ValidationError`` subclasses describe bad user input (CLI exit status 1);
``InconsistencyError`` means two independent computations disagreed, which
the theory rules out, so it signals a bug (CLI exit status 2).
"""


class LiePosetError(Exception):
    pass


class ValidationError(LiePosetError):
    pass


class GroundSetError(ValidationError):
    pass


class OrderViolation(ValidationError):
    pass


class CoverViolation(ValidationError):
    pass


class ZeroRelation(ValidationError):
    pass


class HeightError(ValidationError):
    pass


class UnsupportedPoset(ValidationError):
    pass


class NonSquare(LiePosetError):
    pass


class ClosureViolation(LiePosetError):
    pass


class EvenDimension(LiePosetError):
    pass


class SeparableInput(LiePosetError):
    pass


class NotConnected(LiePosetError):
    pass


class NoEvenCycle(LiePosetError):
    pass


class RewriteStuck(LiePosetError):
    pass


class NotTree(LiePosetError):
    pass


class TrivialGraph(LiePosetError):
    pass


class TooManyRows(LiePosetError):
    pass


class InconsistencyError(LiePosetError):
    pass
