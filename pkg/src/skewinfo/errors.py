"""Exception hierarchy shared by every module of the package."""


class SkewInfoError(ValueError):
    """Base class for all validation and domain errors raised here."""


class NotSquare(SkewInfoError):
    pass


class NonFiniteEntries(SkewInfoError):
    pass


class NotHermitian(SkewInfoError):
    pass


class NotPositiveSemidefinite(SkewInfoError):
    pass


class TraceNotOne(SkewInfoError):
    pass


class IncompleteChannel(SkewInfoError):
    """Kraus operators do not satisfy sum_i K_i^dag K_i = I."""


class ConvergenceFailure(SkewInfoError):
    pass


class DimMismatch(SkewInfoError):
    pass


class EmptyList(SkewInfoError):
    pass


class RequiresAtLeastTwo(SkewInfoError):
    pass


class RequiresAtLeastThree(SkewInfoError):
    pass


class SearchSpaceTooLarge(SkewInfoError):
    pass


class BadPermutation(SkewInfoError):
    pass


class OutsideBlochBall(SkewInfoError):
    pass


class OutsideParameterDomain(SkewInfoError):
    pass


class ParamOutOfRange(SkewInfoError):
    pass


class DomainError(SkewInfoError):
    pass


class ParseError(SkewInfoError):
    pass
