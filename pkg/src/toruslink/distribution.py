"""Family-scan harness: enumerate torus knots/links up to a height bound,
count polynomial roots inside arcs of the circle, and compute the empirical
densities, divisor frequencies and Weyl sums that the closed-form limits
predict.

Arc endpoints are exact rationals and containment is a closed-interval
rational comparison, so boundary roots are never subject to float rounding.
The angles 0 and 1 name the same root; an arc containing either endpoint of
[0, 1] counts that root exactly once.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional

import numpy as np

from .alexander import TorusParams, cyclotomic_multiplicities, torus_params
from .arith import divisors, mobius
from .errors import Internal

KNOTS_COPRIME = "knots_coprime"
ALL_LINKS = "all_links"
FAMILIES = (KNOTS_COPRIME, ALL_LINKS)


@dataclass(frozen=True)
class Arc:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        if not (0 <= self.a <= self.b <= 1):
            raise ValueError(f"need 0 <= a <= b <= 1, got [{self.a}, {self.b}]")


def arc(a, b) -> Arc:
    """Build an arc from anything Fraction accepts (ints, strings, Fractions)."""
    return Arc(Fraction(a), Fraction(b))


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _multiples_in(e: int, lo: Fraction, hi: Fraction) -> int:
    """Count of integers in [lo, hi] divisible by e."""
    n = _floor(hi / e) - _ceil(lo / e) + 1
    return n if n > 0 else 0


@lru_cache(maxsize=None)
def _primitive_in_arc(r: int, a: Arc) -> int:
    """N_r: primitive r-th roots of unity with angle in the closed arc."""
    if r == 1:
        return 1 if (a.a == 0 or a.b == 1) else 0
    # Moebius over divisors; j = 0 and j = r drop out since gcd(j, r) = r > 1.
    total = 0
    lo, hi = a.a * r, a.b * r
    for e in divisors(r):
        mu = mobius(e)
        if mu:
            total += mu * _multiples_in(e, lo, hi)
    return total


def _arc_count_knot(params: TorusParams, a: Arc) -> int:
    # Direct inclusion-exclusion on k in [1, pq-1]: k/pq in the arc and
    # k divisible by neither p nor q.  O(1) per pair, which is what makes
    # X = 200 scans cheap.
    pq = params.p * params.q
    lo = max(a.a * pq, Fraction(1))
    hi = min(a.b * pq, Fraction(pq - 1))
    if lo > hi:
        return 0
    return (
        _multiples_in(1, lo, hi)
        - _multiples_in(params.p, lo, hi)
        - _multiples_in(params.q, lo, hi)
        + _multiples_in(pq, lo, hi)
    )


def arc_count_single(params: TorusParams, a: Arc) -> int:
    """Roots of the Alexander polynomial of T(p, q) with angle in the arc,
    counted with multiplicity."""
    if params.p == 1 or params.q == 1:
        return 0
    if params.d == 1:
        return _arc_count_knot(params, a)
    entries = cyclotomic_multiplicities(params).entries
    return sum(m * _primitive_in_arc(r, a) for r, m in entries.items())


def arc_count_direct(params: TorusParams, a: Arc) -> int:
    """Oracle route for arc_count_single: walk every angle k/L and look the
    multiplicity up in the cyclotomic table.  O(L) per pair; tests compare
    this against the fast route."""
    entries = cyclotomic_multiplicities(params).entries
    L = params.L
    total = 0
    for k in range(L):
        r = L // gcd(k, L) if k else 1
        m = entries.get(r, 0)
        if not m:
            continue
        if k == 0:
            inside = a.a == 0 or a.b == 1
        else:
            inside = a.a <= Fraction(k, L) <= a.b
        if inside:
            total += m
    return total


@dataclass(frozen=True)
class ScanReport:
    X: int
    family: str
    t_count: int
    omega_count: int
    arc: Optional[Arc]
    arc_count: int
    predicted_ratio: Fraction
    observed_ratio: Fraction


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def count_coprime_pairs(X: int) -> int:
    """#{(p, q) : 1 <= p, q <= X, gcd(p, q) = 1} by direct enumeration."""
    if X < 1:
        raise ValueError(f"need X >= 1, got {X}")
    P = np.arange(1, X + 1)
    return int((np.gcd.outer(P, P) == 1).sum())


def count_coprime_pairs_mobius(X: int) -> int:
    """Same count through the Moebius sum over d of mu(d) * floor(X/d)^2;
    must agree exactly with the enumeration."""
    if X < 1:
        raise ValueError(f"need X >= 1, got {X}")
    return sum(mobius(e) * (X // e) ** 2 for e in range(1, X + 1))


def count_roots_total(X: int, family: str) -> int:
    """Sum of (p-1)(q-1) over the family up to X."""
    if X < 1:
        raise ValueError(f"need X >= 1, got {X}")
    _check_family(family)
    P = np.arange(1, X + 1)
    W = P - 1
    if family == ALL_LINKS:
        total = int(W.sum()) ** 2
        if total != (X * (X - 1)) ** 2 // 4:
            raise Internal("all-links root total disagrees with its closed form")
        return total
    mask = np.gcd.outer(P, P) == 1
    return int(np.outer(W, W)[mask].sum())


def _scan_chunk(args) -> tuple[int, int, int, list]:
    X, family, a, p_lo, p_hi, want_rows = args
    t_count = omega = in_arc = 0
    rows = [] if want_rows else None
    for p in range(p_lo, p_hi):
        for q in range(1, X + 1):
            if family == KNOTS_COPRIME and gcd(p, q) != 1:
                continue
            params = torus_params(p, q)
            t_count += 1
            roots = (p - 1) * (q - 1)
            omega += roots
            count = arc_count_single(params, a) if a is not None else 0
            in_arc += count
            if want_rows:
                rows.append((p, q, params.d, roots, count))
    return t_count, omega, in_arc, rows


def scan(
    X: int,
    family: str,
    a: Optional[Arc],
    jobs: int = 1,
    want_rows: bool = False,
) -> tuple[ScanReport, Optional[list]]:
    """Aggregate arc counts over the whole family, row-major in (p, q).

    Returns the report and, when want_rows is set, the per-pair list of
    (p, q, d, roots_total, roots_in_arc).  Results are identical for any
    jobs value: chunk sums are associative and chunks are reduced in order.
    """
    if X < 1:
        raise ValueError(f"need X >= 1, got {X}")
    _check_family(family)
    if jobs > 1:
        step = max(1, (X + jobs - 1) // jobs)
        chunks = [
            (X, family, a, lo, min(lo + step, X + 1), want_rows)
            for lo in range(1, X + 1, step)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_chunk, chunks))
    else:
        parts = [_scan_chunk((X, family, a, 1, X + 1, want_rows))]
    t_count = sum(p[0] for p in parts)
    omega = sum(p[1] for p in parts)
    in_arc = sum(p[2] for p in parts)
    rows = [r for p in parts for r in p[3]] if want_rows else None
    predicted = (a.b - a.a) if a is not None else Fraction(0)
    observed = Fraction(in_arc, omega) if omega else Fraction(0)
    report = ScanReport(
        X=X,
        family=family,
        t_count=t_count,
        omega_count=omega,
        arc=a,
        arc_count=in_arc,
        predicted_ratio=predicted,
        observed_ratio=observed,
    )
    return report, rows


def frequency_Fr(X: int, r: int) -> Fraction:
    """Share of coprime pairs up to X with r | pq but r dividing neither
    p nor q, as an exact rational."""
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    if X < 1:
        raise ValueError(f"need X >= 1, got {X}")
    P = np.arange(1, X + 1)
    coprime = np.gcd.outer(P, P) == 1
    ndiv = (P % r) != 0
    hits = coprime & (np.outer(P, P) % r == 0) & ndiv[:, None] & ndiv[None, :]
    return Fraction(int(hits.sum()), int(coprime.sum()))


def weyl_sum(X: int, k: int) -> complex:
    """Moment average (1/#roots) * sum of S_k over coprime pairs up to X.

    Tends to 0 for k != 0 as X grows; k = 0 is the normalization and gives
    exactly 1.  Exact integer arithmetic until the final division.
    """
    if X < 1:
        raise ValueError(f"need X >= 1, got {X}")
    total = 0
    omega = 0
    for p in range(1, X + 1):
        for q in range(1, X + 1):
            if gcd(p, q) != 1:
                continue
            omega += (p - 1) * (q - 1)
            pq = p * q
            total += (
                pq * (k % pq == 0) - p * (k % p == 0) - q * (k % q == 0) + 1
            )
    if omega == 0:
        return 0j
    return complex(total / omega)
