"""Exception hierarchy.

Two families matter to callers: ``InputError`` (malformed or out-of-range
input, the CLI maps it to exit code 2) and ``MathCheckFailed`` (a computation
finished but a mathematical assertion did not hold, exit code 1).
"""


class BraidGlueError(Exception):
    """Base class for every error raised by the package."""


class InputError(BraidGlueError):
    """Input could not be parsed or violates a stated precondition."""

    def __init__(self, message, location=None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class MathCheckFailed(BraidGlueError):
    """A verified identity or invariant turned out to be false."""


# coxeter
class InvalidMatrix(InputError):
    pass


class InfiniteGroup(InputError):
    pass


class MixedSystems(InputError):
    pass


class PreconditionFailed(InputError):
    pass


class NotAReflection(InputError):
    pass


class PathExplosion(BraidGlueError):
    pass


# exact
class DivisionByZero(BraidGlueError, ZeroDivisionError):
    pass


class NotSquare(InputError):
    pass


class KindMismatch(InputError):
    pass


class AmbientMismatch(InputError):
    pass


class NonInteger(InputError):
    pass


class ZeroModulus(InputError):
    pass


class UnitObstruction(BraidGlueError):
    pass


class ParseError(InputError):
    pass


# braidrep
class BadIndex(InputError):
    pass


class RelationFailed(MathCheckFailed):
    pass


class ValidationFailed(MathCheckFailed):
    pass


# kwglue
class WellDefinednessFailure(MathCheckFailed):
    pass


class NotGood(MathCheckFailed):
    pass


class NotASection(InputError):
    pass


# simplicial
class IncoherentSystem(InputError):
    pass


# gluedalg
class AssociativityFailure(MathCheckFailed):
    def __init__(self, i, j, k, l, message=None):
        self.sites = (i, j, k, l)
        super().__init__(message or f"associativity fails on sites {(i, j, k, l)}")


class CapExceeded(InputError):
    pass


class FieldTooSmall(InputError):
    pass


class DerivedCorrectionRequired(InputError):
    pass


class SplittingFailed(BraidGlueError):
    pass


# counterexample
class SizeMismatch(InputError):
    pass
