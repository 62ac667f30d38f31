"""Moment sequence of the roots of a torus-knot Alexander polynomial, its
generating function, residues, and the Parseval identity.

Everything is knot-only (d = 1): the moment sum S_m runs over the pq-th
roots of unity that are roots of neither t^p - 1 nor t^q - 1, which is the
exact root set of Delta only in the coprime case.
"""

import cmath
from dataclasses import dataclass
from math import gcd

import numpy as np

from .alexander import TorusParams, torus_params
from .errors import Internal, LinkCase, NearPole, NotAPole

# Poles and roots of unity are carried as exact pairs (k, n) meaning
# e^(2*pi*i*k/n); complex doubles appear only at evaluation boundaries.
RootOfUnity = tuple[int, int]


def _require_knot(params: TorusParams) -> None:
    if params.d != 1:
        raise LinkCase(f"moments need gcd(p, q) = 1, got d = {params.d}")


def moment(params: TorusParams, m: int) -> int:
    """Closed-form moment S_m = pq*[pq|m] - p*[p|m] - q*[q|m] + 1, exact.

    >>> [moment(torus_params(2, 3), m) for m in range(6)]
    [2, 1, -1, -2, -1, 1]
    """
    _require_knot(params)
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    p, q = params.p, params.q
    pq = p * q
    return pq * (m % pq == 0) - p * (m % p == 0) - q * (m % q == 0) + 1


def moment_bruteforce(params: TorusParams, m: int) -> complex:
    """Oracle for `moment`: the literal root sum in floating point."""
    _require_knot(params)
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    p, q = params.p, params.q
    pq = p * q
    k = np.arange(pq)
    k = k[(k % p != 0) & (k % q != 0)]
    if k.size == 0:
        return 0j
    return complex(np.exp(2j * np.pi * m / pq * k).sum())


@dataclass(frozen=True)
class MomentRecord:
    """One exact period of the moment sequence; strictly periodic in m."""

    params: TorusParams
    period: int
    values: tuple[int, ...]


def moment_record(params: TorusParams) -> MomentRecord:
    _require_knot(params)
    pq = params.p * params.q
    return MomentRecord(
        params=params,
        period=pq,
        values=tuple(moment(params, m) for m in range(pq)),
    )


def mean_variance(record: MomentRecord) -> tuple[int, int]:
    """Exact (mean, variance) over one period: (0, (p-1)(q-1)).

    Both equalities are theorems, so a failure is reported as an internal
    error rather than returned.
    """
    p, q = record.params.p, record.params.q
    pq = record.period
    total = sum(record.values)
    square = sum(v * v for v in record.values)
    if total != 0:
        raise Internal(f"moment mean over a period is {total}, not 0")
    if square != pq * (p - 1) * (q - 1):
        raise Internal("moment variance identity failed")
    return 0, (p - 1) * (q - 1)


def generating_fn(params: TorusParams, z: complex) -> complex:
    """G(z) = pq/(1 - z^pq) - p/(1 - z^p) - q/(1 - z^q) + 1/(1 - z)."""
    _require_knot(params)
    p, q = params.p, params.q
    pq = p * q
    out = 0j
    for coef, n in ((pq, pq), (-p, p), (-q, q), (1, 1)):
        den = 1 - z**n
        if abs(den) < 1e-12:
            raise NearPole(f"z^{n} is within 1e-12 of 1")
        out += coef / den
    return out


def _root_power(xi: RootOfUnity, e: int) -> complex:
    # xi^e with the exponent reduced exactly, so huge e costs nothing
    # and the pole/order classification never drifts.
    k, n = xi
    return cmath.exp(2j * cmath.pi * ((k * e) % n) / n)


def residue_at(params: TorusParams, xi: RootOfUnity) -> complex:
    """Residue of G at the root of unity xi = (k, n) ~ e^(2*pi*i*k/n).

    Of the four candidate summands, exactly those whose congruence
    xi^n = 1 actually holds are included; at points where cancellation
    makes G regular the returned residue is 0.
    """
    _require_knot(params)
    k, n = xi
    if n <= 0:
        raise ValueError(f"root of unity needs order n >= 1, got {n}")
    p, q = params.p, params.q
    pq = p * q
    order = n // gcd(k % n, n) if k % n else 1
    if pq % order != 0:
        raise NotAPole(f"order {order} does not divide pq = {pq}")
    out = 0j
    out -= _root_power(xi, -(pq - 1))          # xi^pq = 1 always holds here
    if p % order == 0:
        out += _root_power(xi, -(p - 1))
    if q % order == 0:
        out += _root_power(xi, -(q - 1))
    if order == 1:
        out -= 1
    return out


def residue_table(params: TorusParams) -> dict[RootOfUnity, complex]:
    """Residues at every pq-th root of unity, keeping only actual poles
    (nonzero residue)."""
    _require_knot(params)
    pq = params.p * params.q
    out = {}
    for k in range(pq):
        r = residue_at(params, (k, pq))
        if abs(r) > 1e-12:
            out[(k, pq)] = r
    return out


def parseval_check(params: TorusParams) -> float:
    """|variance - sum of |residue|^2 over the pq-th roots of unity|.

    The two sides are computed by unrelated routes (exact integers vs
    floating-point residues), so a small gap is genuine evidence.
    """
    _require_knot(params)
    p, q = params.p, params.q
    pq = p * q
    lhs = float((p - 1) * (q - 1))
    rhs = sum(abs(residue_at(params, (k, pq))) ** 2 for k in range(pq))
    return abs(lhs - rhs)
