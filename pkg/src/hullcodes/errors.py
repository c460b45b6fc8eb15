"""Exception hierarchy shared by all hullcodes modules."""

from __future__ import annotations


class HullCodesError(Exception):
    """Base class for every error raised by this package."""


# field layer
class NonPrimeP(HullCodesError, ValueError):
    pass


class FieldTooLarge(HullCodesError, ValueError):
    pass


class DivisionByZero(HullCodesError, ZeroDivisionError):
    pass


class NotASquare(HullCodesError, ValueError):
    pass


class WrongResidueClass(HullCodesError, ValueError):
    pass


# linear algebra / codes
class DimensionMismatch(HullCodesError, ValueError):
    pass


class InstanceTooLarge(HullCodesError, ValueError):
    pass


# constructions
class ParamOutOfRange(HullCodesError, ValueError):
    pass


class NoValidOmega(HullCodesError, ValueError):
    pass


class NoApplicableFamily(HullCodesError, ValueError):
    """No construction family accepts a request.

    ``reasons`` maps each family name to the reason it declined.
    """

    def __init__(self, message: str, reasons: dict[str, str] | None = None):
        super().__init__(message)
        self.reasons = dict(reasons or {})

    def __str__(self) -> str:
        base = super().__str__()
        if not self.reasons:
            return base
        lines = [base] + [f"  {fam}: {why}" for fam, why in self.reasons.items()]
        return "\n".join(lines)


class OracleMismatch(HullCodesError, RuntimeError):
    """Two independent checks disagreed about a constructed code."""


# eaqecc
class HullOutOfRange(HullCodesError, ValueError):
    pass


class BoundViolated(HullCodesError, ValueError):
    pass
