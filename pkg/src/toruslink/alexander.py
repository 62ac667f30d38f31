"""Torus-link structure: parameters, Alexander polynomials, cyclotomic
multiplicities, determinants, colorability, and the Hosokawa polynomial.

T(p, q) is a knot when d = gcd(p, q) = 1 and a d-component link otherwise.
Degenerate parameters (p = 1 or q = 1) are the unknot-like cases: the
polynomial is 1 and the multiplicity table is empty, which is forced by the
root count (p-1)(q-1) = 0.
"""

from dataclasses import dataclass
from math import gcd

from . import polyring
from .arith import divisors, is_prime, totient
from .errors import Internal, KnotCase, NonAdmissible, NotDivisible, ZeroAlpha


@dataclass(frozen=True)
class TorusParams:
    """Validated pair (p, q) with the derived quantities every module uses."""

    p: int
    q: int
    d: int
    p_prime: int
    q_prime: int
    L: int

    def is_knot(self) -> bool:
        return self.d == 1


def torus_params(p: int, q: int) -> TorusParams:
    """Build the parameter record for T(p, q).

    >>> torus_params(4, 6)
    TorusParams(p=4, q=6, d=2, p_prime=2, q_prime=3, L=12)
    """
    if p <= 0 or q <= 0:
        raise ValueError(f"need positive p, q; got ({p}, {q})")
    d = gcd(p, q)
    return TorusParams(p=p, q=q, d=d, p_prime=p // d, q_prime=q // d, L=(p * q) // d)


@dataclass(frozen=True)
class CycFactorization:
    """Map r -> M_r of cyclotomic multiplicities of the Alexander polynomial.

    Zero multiplicities are omitted, so the table doubles as the exact root
    inventory: sum of M_r * phi(r) is (p-1)(q-1).
    """

    params: TorusParams
    entries: dict[int, int]


@dataclass(frozen=True)
class AdmissibleVector:
    z: tuple[int, ...]
    alpha: int


def admissible_vector(params: TorusParams, z) -> AdmissibleVector:
    """Validate a specialization vector: length d, no zero entry, gcd 1."""
    zt = tuple(int(c) for c in z)
    if len(zt) != params.d:
        raise NonAdmissible(
            f"z must have d = {params.d} entries, got {len(zt)}"
        )
    if any(c == 0 for c in zt):
        raise NonAdmissible("z must have no zero entry")
    g = 0
    for c in zt:
        g = gcd(g, c)
    if g != 1:
        raise NonAdmissible(f"gcd of z entries must be 1, got {g}")
    return AdmissibleVector(z=zt, alpha=sum(zt))


def _binomial_power(k: int, d: int) -> list[int]:
    # (t^k - 1)^d expanded directly; dense lists would be wasteful to multiply.
    out = [0] * (k * d + 1)
    c = 1
    for j in range(d + 1):
        out[k * j] = c if (d - j) % 2 == 0 else -c
        c = c * (d - j) // (j + 1)
    return out


def alexander_poly(params: TorusParams) -> list[int]:
    """Alexander polynomial of T(p, q): exact division of (t^L - 1)^d (t - 1)
    by (t^p - 1)(t^q - 1).  Monic of degree (p-1)(q-1).

    >>> alexander_poly(torus_params(2, 3))
    [1, -1, 1]
    """
    p, q, d = params.p, params.q, params.d
    if p == 1 or q == 1:
        return [1]
    num = polyring.poly_mul(_binomial_power(params.L, d), [-1, 1])
    try:
        f = polyring.poly_exact_div(num, polyring.x_pow_minus_one(p))
        f = polyring.poly_exact_div(f, polyring.x_pow_minus_one(q))
    except NotDivisible as exc:  # pragma: no cover
        raise Internal("Alexander closed form failed to divide") from exc
    return polyring.laurent_normalize(f)


def cyclotomic_multiplicities(params: TorusParams) -> CycFactorization:
    """Multiplicity of each cyclotomic factor by the indicator formula
    M_r = d*[r | L] - [r | p] - [r | q] + [r = 1], zero entries dropped.

    >>> cyclotomic_multiplicities(torus_params(3, 3)).entries
    {1: 2, 3: 1}
    """
    p, q, d = params.p, params.q, params.d
    if p == 1 or q == 1:
        return CycFactorization(params=params, entries={})
    entries = {}
    for r in divisors(params.L):
        m = d - (p % r == 0) - (q % r == 0) + (r == 1)
        if m > 0:
            entries[r] = m
    return CycFactorization(params=params, entries=entries)


def root_count(params: TorusParams) -> int:
    """(p-1)(q-1), the total number of roots counted with multiplicity."""
    return (params.p - 1) * (params.q - 1)


def check_root_count(fact: CycFactorization) -> None:
    total = sum(m * totient(r) for r, m in fact.entries.items())
    if total != root_count(fact.params):
        raise Internal(
            f"root count mismatch for {fact.params}: {total}"
        )


def specialize_z(params: TorusParams, z) -> list[int]:
    """One-variable specialization of the multivariable polynomial along z:
    (X^(a*p'*q') - 1)^d (X - 1) / ((X^(a*p') - 1)(X^(a*q') - 1)) with
    a = sum(z).  Knots ignore z entirely (the polynomial is symmetric), and
    a < 0 is folded to |a|, which only changes the representative by a unit.
    """
    vec = z if isinstance(z, AdmissibleVector) else admissible_vector(params, z)
    if params.d == 1:
        return alexander_poly(params)
    if vec.alpha == 0:
        raise ZeroAlpha("component sum of z is 0; the specialization degenerates")
    a = abs(vec.alpha)
    pp, qp, d = params.p_prime, params.q_prime, params.d
    num = polyring.poly_mul(_binomial_power(a * pp * qp, d), [-1, 1])
    f = polyring.poly_exact_div(num, polyring.x_pow_minus_one(a * pp))
    f = polyring.poly_exact_div(f, polyring.x_pow_minus_one(a * qp))
    return polyring.laurent_normalize(f)


def hosokawa(params: TorusParams, z) -> list[int]:
    """Hosokawa polynomial g_(a*p'*q')^d / (g_(a*p') g_(a*q')), the reduced
    link polynomial: specialize_z = (X - 1)^(d-1) * hosokawa."""
    if params.d == 1:
        raise KnotCase("Hosokawa polynomial is defined for links (d >= 2)")
    vec = z if isinstance(z, AdmissibleVector) else admissible_vector(params, z)
    if vec.alpha == 0:
        raise ZeroAlpha("component sum of z is 0; the specialization degenerates")
    a = abs(vec.alpha)
    pp, qp, d = params.p_prime, params.q_prime, params.d
    num = [1]
    base = polyring.geometric(a * pp * qp)
    for _ in range(d):
        num = polyring.poly_mul(num, base)
    f = polyring.poly_exact_div(num, polyring.geometric(a * pp))
    f = polyring.poly_exact_div(f, polyring.geometric(a * qp))
    return polyring.laurent_normalize(f)


def determinant(params: TorusParams) -> int:
    """|Delta(-1)|, the link determinant; 0 means infinite double-cover
    homology (happens for some links, never for knots)."""
    return abs(polyring.poly_eval_int(alexander_poly(params), -1))


def _odd_case_determinant(params: TorusParams) -> int:
    # Knot-case parity table: p odd/q even -> p, p even/q odd -> q, both odd -> 1.
    p, q = params.p, params.q
    if p % 2 == 1 and q % 2 == 0:
        return p
    if p % 2 == 0 and q % 2 == 1:
        return q
    return 1


def ell_colorable(params: TorusParams, ell: int) -> bool:
    """Whether T(p, q) admits a nontrivial ell-coloring: ell | determinant."""
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    return determinant(params) % ell == 0


def coloring_zero_order(params: TorusParams, ell: int) -> int:
    """Multiplicity of (t + 1) in the Alexander polynomial reduced mod ell.

    Upper-bounds the coloring rank.  Computed by repeated synthetic division
    over the field with ell elements; Delta is monic, so the reduction is
    never the zero polynomial.
    """
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    f = [c % ell for c in alexander_poly(params)]
    while f and f[-1] == 0:
        f.pop()
    order = 0
    while f:
        # one synthetic-division pass at the root -1; the running value ends
        # as the remainder f(-1) and the intermediate values are the quotient
        quot = []
        acc = 0
        for a in reversed(f):
            acc = (a - acc) % ell
            quot.append(acc)
        if quot.pop() != 0:
            break
        f = quot[::-1]
        while f and f[-1] == 0:
            f.pop()
        order += 1
    return order
