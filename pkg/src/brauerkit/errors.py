"""Typed error taxonomy shared across the package.

Every domain failure carries a stable machine-readable ``code`` so the
CLI can map errors to exit codes and scripted callers can dispatch
without parsing messages.
"""


class BrauerKitError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "BrauerKitError"

    def payload(self):
        return {"code": self.code, "message": str(self)}


class MalformedInput(BrauerKitError):
    """Structurally invalid input document; CLI exit code 2."""

    code = "MalformedInput"


class InvalidInput(BrauerKitError):
    """A documented precondition on operation arguments was violated."""

    code = "InvalidInput"


class NotSquarefree(BrauerKitError):
    code = "NotSquarefree"


class NotMonic(BrauerKitError):
    code = "NotMonic"


class NonMonogenicAtP(BrauerKitError):
    """Dedekind's criterion failed at p: the equation order is not maximal
    there, so prime splitting cannot be read off the factorization mod p.
    Callers may supply an abstract local-degree profile instead."""

    code = "NonMonogenicAtP"


class DegreeLimitExceeded(BrauerKitError):
    code = "DegreeLimitExceeded"


class AmbiguousArchimedeanMatch(BrauerKitError):
    """A complex place cannot be matched to a unique place below it from
    the stored data (complex places carry no isolating information)."""

    code = "AmbiguousArchimedeanMatch"


class ReciprocityViolation(BrauerKitError):
    code = "ReciprocityViolation"


class BadArchimedean(BrauerKitError):
    code = "BadArchimedean"


class CenterMismatch(BrauerKitError):
    code = "CenterMismatch"


class ProfileIncomplete(BrauerKitError):
    code = "ProfileIncomplete"


class DimensionNotRealizable(BrauerKitError):
    code = "DimensionNotRealizable"


class NotDivision(BrauerKitError):
    code = "NotDivision"


class NonIntegralD(BrauerKitError):
    code = "NonIntegralD"


class DegreeMismatch(BrauerKitError):
    code = "DegreeMismatch"


class AmbiguousSlopeMatching(BrauerKitError):
    """Newton-polygon slopes cannot be attached to places from the
    available splitting data.  Reported, never guessed."""

    code = "AmbiguousSlopeMatching"


class NonIntegralDimension(BrauerKitError):
    """Internal consistency failure: e * [Q(pi):Q] came out odd."""

    code = "NonIntegralDimension"


class NotIndefinite(BrauerKitError):
    code = "NotIndefinite"


class RamifiedAtP(BrauerKitError):
    code = "RamifiedAtP"


class InternalCheckFailed(BrauerKitError):
    """A postcondition that must hold on valid input was violated."""

    code = "InternalCheckFailed"
