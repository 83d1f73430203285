"""Unsigned Stirling numbers of the first kind and complete Bell polynomials."""

from __future__ import annotations

import math
import threading
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from .harmonic import harmonic_number, mhs
from .numeric_core import ones_composition


class StirlingTable:
    """Grow-only triangle of s(n, k), 0 <= k <= n <= max_n.

    Rows are appended under a lock and the row list is swapped in one
    assignment, so readers never see a half-built row.
    """

    def __init__(self, max_n: int = 0):
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()
        self.extend(max_n)

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def extend(self, max_n: int) -> None:
        if max_n <= self.max_n:
            return
        with self._lock:
            rows = list(self._rows)
            while len(rows) <= max_n:
                n = len(rows)
                prev = rows[-1]
                row = [0] * (n + 1)
                for k in range(1, n + 1):
                    # s(n,k) = s(n-1,k-1) + (n-1) s(n-1,k)
                    above = prev[k] if k < n else 0
                    row[k] = prev[k - 1] + (n - 1) * above
                rows.append(tuple(row))
            self._rows = rows

    def __call__(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError("Stirling numbers need nonnegative arguments")
        if k > n:
            return 0
        if n > self.max_n:
            self.extend(n)
        return self._rows[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        self.extend(n)
        return self._rows[n]


_TABLE = StirlingTable(32)


def stirling1(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind (permutations of n with k cycles)."""
    return _TABLE(n, k)


def stirling1_via_mhs(n: int, k: int) -> Fraction:
    """(n-1)! * zeta_{n-1}({1}_{k-1}); an independent route to s(n, k)."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    return math.factorial(n - 1) * mhs(n - 1, ones_composition(k - 1))


def complete_bell(xs: Sequence) -> Fraction:
    """Y_n(x_1, ..., x_n) from Y_n = sum_j C(n-1, j) x_{n-j} Y_j."""
    ys = [Fraction(1)]
    for n in range(1, len(xs) + 1):
        ys.append(sum((math.comb(n - 1, j) * xs[n - j - 1] * ys[j] for j in range(n)), Fraction(0)))
    return ys[-1]


def bell_inputs(k: int, n: int) -> list[Fraction]:
    # (H_n, 1! H_n^(2), ..., (k-1)! H_n^(k))
    return [math.factorial(i - 1) * harmonic_number(n, i) for i in range(1, k + 1)]


@lru_cache(maxsize=4096)
def bell_number_Y(k: int, n: int) -> Fraction:
    """Y_k evaluated at the generalized harmonic numbers of n."""
    return complete_bell(bell_inputs(k, n))


def mhss_ones_via_bell(n: int, m: int) -> Fraction:
    return bell_number_Y(m, n) / math.factorial(m)


def bell_stirling_bracket(p: int, n: int, j: int) -> Fraction:
    """sum_{i=0}^{p-1} (-1)^i Y_i(n)/i! * s(j, p-i)/j!, shared by the Stirling/Bell forms."""
    total = Fraction(0)
    jf = math.factorial(j)
    for i in range(p):
        term = mhss_ones_via_bell(n, i) * Fraction(stirling1(j, p - i), jf)
        total += term if i % 2 == 0 else -term
    return total
