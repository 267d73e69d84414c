"""Exception hierarchy shared by all walg modules."""


class WalgError(Exception):
    """Base class for every error raised deliberately by walg."""


class DivisionByZero(WalgError, ZeroDivisionError):
    pass


class PoleError(DivisionByZero):
    """Evaluation of a rational function at one of its poles."""


class DimensionMismatch(WalgError, ValueError):
    pass


class InconsistentSystem(WalgError, ValueError):
    pass


class UnsupportedType(WalgError, ValueError):
    pass


class CapExceeded(WalgError, ValueError):
    pass


class NonDominant(WalgError, ValueError):
    pass


class NonUnitConstantTerm(WalgError, ZeroDivisionError):
    pass


class RankUnsupported(WalgError, ValueError):
    pass


class GammaZero(DivisionByZero):
    pass
