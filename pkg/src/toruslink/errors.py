"""Error types shared across the package.

Every exception carries a stable machine-readable ``code`` so the CLI can
prefix messages uniformly and scripts can match on it.
"""


class InvariantError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "INTERNAL"


class NotDivisible(InvariantError):
    """Exact polynomial division left a nonzero remainder."""

    code = "NOT_DIVISIBLE"


class DivByZero(InvariantError):
    code = "DIV_BY_ZERO"


class ZeroInput(InvariantError):
    """An operation that needs a nonzero polynomial got the zero polynomial."""

    code = "ZERO_INPUT"


class LinkCase(InvariantError):
    """Operation is defined for knots only (gcd(p, q) = 1 required)."""

    code = "LINK_CASE"


class KnotCase(InvariantError):
    """Operation is defined for links only (gcd(p, q) >= 2 required)."""

    code = "KNOT_CASE"


class NonAdmissible(InvariantError):
    """Specialization vector fails the admissibility conditions."""

    code = "NON_ADMISSIBLE"


class ZeroAlpha(InvariantError):
    """Component sum of the specialization vector is zero; the closed form
    degenerates and the value is undefined, so we refuse rather than guess."""

    code = "ZERO_ALPHA"


class NotAPole(InvariantError):
    code = "NOT_A_POLE"


class NearPole(InvariantError):
    """Floating-point evaluation was requested too close to a pole."""

    code = "NEAR_POLE"


class NonFinite(InvariantError):
    """A quadrature sample landed on (numerically) a zero of the integrand."""

    code = "NON_FINITE"


class Internal(InvariantError):
    """A proven identity failed to hold; this is a bug, not a user error."""

    code = "INTERNAL"


class FormulaMismatch(InvariantError):
    """Two independent routes to the same invariant disagreed."""

    code = "FORMULA_MISMATCH"
