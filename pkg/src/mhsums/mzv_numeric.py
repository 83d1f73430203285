"""High-precision truncated series for zeta*(m+2, {1}_{r-1}) and its polylogarithmic form.

Precision is set per call through ``mpmath.workdps``; nothing here touches the
global mpmath context outside of those blocks.

Cost model: a truncated nested sum of depth d up to N takes about N*d
high-precision multiply-adds. ``default_truncation`` keeps N*d near 60000,
i.e. N = 20000 for depth <= 3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from .harmonic import mhts_table, weak_chain_prefix
from .numeric_core import DomainError, RationalLike, as_rational

DEFAULT_DIGITS = 50
WORK_BUDGET = 60000


@dataclass(frozen=True)
class ApproxValue:
    value: mpmath.mpf
    err_estimate: mpmath.mpf
    digits: int
    truncation: int

    def __post_init__(self):
        if self.err_estimate < 0:
            raise ValueError("error estimate must be nonnegative")
        if not mpmath.isfinite(self.value):
            raise ValueError("value must be finite")

    def to_string(self, digits: int | None = None) -> str:
        return mpmath.nstr(self.value, digits or self.digits, strip_zeros=False)


@dataclass(frozen=True)
class ConvergenceTrace:
    ns: tuple[int, ...]
    values: tuple[mpmath.mpf, ...]
    limit: mpmath.mpf
    deltas: tuple[mpmath.mpf, ...]
    weight_sums: tuple[Fraction, ...]


def default_truncation(depth: int) -> int:
    return max(1000, min(20000, WORK_BUDGET // max(depth, 1)))


def _check_y(y: Fraction) -> None:
    if not 0 < y < 1:
        raise DomainError(f"y must lie strictly between 0 and 1, got {y}")


def _doubling(prefix: Sequence, n: int, digits: int) -> ApproxValue:
    half = math.ceil(n / 2)
    return ApproxValue(+prefix[n], abs(prefix[n] - prefix[half]), digits, n)


def mzsv_star_numeric(m: int, r: int, N: int | None = None, digits: int = DEFAULT_DIGITS) -> ApproxValue:
    """zeta*_N(m+2, {1}_{r-1}) in ``digits`` decimal digits with a doubling error estimate."""
    if m < 0 or r < 1:
        raise ValueError("need m >= 0 and r >= 1")
    if digits < 15:
        raise ValueError("use at least 15 digits")
    N = default_truncation(m + r + 1) if N is None else N
    if N < 1:
        raise ValueError("truncation bound must be positive")
    with mpmath.workdps(digits + 10):
        one = mpmath.mpf(1)
        prefix = weak_chain_prefix(N, (m + 2,) + (1,) * (r - 1), lambda i: one)
        with mpmath.workdps(digits):
            return _doubling(prefix, N, digits)


def thm4_prefix(m: int, r: int, y, N: int) -> list:
    """Prefix values of sum y^{n_1 - n_{m+2}} (1 - y^{n_d}) / (n_1 ... n_d), d = m + r + 1.

    The two star polylogarithms with argument 1/y are never formed separately:
    y^{n_1 - n_{m+2}} is split into factors y^{n_j - n_{j+1}} with nonnegative
    exponents, so every summand and every partial sum stays positive and bounded.
    """
    d = m + r + 1
    ratios = [y if i <= m else 1 for i in range(d - 1)]
    return weak_chain_prefix(N, (1,) * d, lambda i: 1 - y**i, ratios)


def thm4_rhs_numeric(
    m: int, r: int, y: RationalLike, N: int | None = None, digits: int = DEFAULT_DIGITS
) -> ApproxValue:
    """Difference of the two star polylogarithms, evaluated as one combined series."""
    if m < 0 or r < 1:
        raise ValueError("need m >= 0 and r >= 1")
    yq = as_rational(y)
    _check_y(yq)
    N = default_truncation(m + r + 1) if N is None else N
    if N < 1:
        raise ValueError("truncation bound must be positive")
    with mpmath.workdps(digits + 10):
        ym = mpmath.mpf(yq.numerator) / yq.denominator
        prefix = thm4_prefix(m, r, ym, N)
        with mpmath.workdps(digits):
            return _doubling(prefix, N, digits)


def toeplitz_weights_sum(y: Fraction, n: int) -> Fraction:
    """sum_k C(n,k) (1-y)^k y^(n-k), exactly."""
    return sum((math.comb(n, k) * (1 - y) ** k * y ** (n - k) for k in range(n + 1)), Fraction(0))


def binomial_partial_sums(m: int, r: int, y: RationalLike, ns: Sequence[int]) -> dict[int, Fraction]:
    """Exact sum_k C(n,k) (1-y)^k y^(n-k) zeta*_k(m+2, {1}_{r-1}) for each n."""
    yq = as_rational(y)
    table = mhts_table(max(ns), (m + 2,) + (1,) * (r - 1))
    out = {}
    for n in ns:
        out[n] = sum(
            (math.comb(n, k) * (1 - yq) ** k * yq ** (n - k) * table[k] for k in range(1, n + 1)), Fraction(0)
        )
    return out


def toeplitz_trace(
    m: int,
    r: int,
    y: RationalLike,
    n_list: Sequence[int],
    digits: int = DEFAULT_DIGITS,
    limit: mpmath.mpf | None = None,
) -> ConvergenceTrace:
    """Binomially weighted averages of zeta*_k approaching the star value.

    ``limit`` defaults to ``mzsv_star_numeric(m, r)`` at its default truncation.
    """
    yq = as_rational(y)
    _check_y(yq)
    ns = tuple(n_list)
    if any(n < 1 for n in ns):
        raise ValueError("every n must be positive")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("n_list must be strictly increasing")
    exact = binomial_partial_sums(m, r, yq, ns)
    if limit is None:
        limit = mzsv_star_numeric(m, r, digits=digits).value
    with mpmath.workdps(digits):
        values = tuple(mpmath.mpf(exact[n].numerator) / exact[n].denominator for n in ns)
        deltas = tuple(v - limit for v in values)
    return ConvergenceTrace(ns, values, limit, deltas, tuple(toeplitz_weights_sum(yq, n) for n in ns))
