"""Exception hierarchy shared by all integra modules."""


class IntegraError(Exception):
    """Base class for every error raised by this package."""


class NonConvergence(IntegraError):
    """A series or quadrature failed to reach the requested tolerance."""


class InsufficientTerms(IntegraError):
    """Too few terms were supplied for an acceleration transform."""


class PoleAtOrigin(IntegraError):
    """Evaluation requested at z = 0 where the function has a pole."""


class PoleAtNonpositiveInteger(IntegraError):
    """Evaluation requested at a non-positive integer pole."""


class PoleAtSOne(IntegraError):
    """Hurwitz zeta requested at its s = 1 pole."""


class UnsupportedDomain(IntegraError):
    """Arguments outside the implemented domain (e.g. Re(a) <= 0)."""


class DomainOutsideUnitDisk(IntegraError):
    """Series argument outside the closed unit disk."""


class DomainViolation(IntegraError):
    """Theorem precondition violated, or a term hit a pole."""


class LowerParameterPole(IntegraError):
    """A lower hypergeometric parameter is a non-positive integer."""


class NonIntegrableSingularity(IntegraError):
    """Integrand grows too fast at a singular point to be integrable."""


class UnboundParameter(IntegraError):
    """An expression leaf refers to a parameter with no bound value."""


class EvaluationError(IntegraError):
    """A closed-form node failed to evaluate; carries the node path."""


class ParseError(IntegraError):
    """Manifest text failed to parse; carries position and message."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(IntegraError):
    """A parsed record violates an invariant; carries record id + field."""

    def __init__(self, record_id, field, message):
        self.record_id = record_id
        self.field = field
        super().__init__(f"record {record_id!r}, field {field!r}: {message}")


class ConstraintViolation(IntegraError):
    """Supplied parameters do not satisfy a record's constraints."""


class UnknownId(IntegraError):
    """No catalog record with the requested id."""
