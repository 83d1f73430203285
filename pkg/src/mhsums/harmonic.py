"""Multiple harmonic sums, their star and z-weighted variants, and enumeration oracles.

All evaluators run innermost-first: the table of partial sums for the last
index is folded into the next layer, so a depth-r sum up to n costs O(n*r)
arithmetic operations and produces every prefix value n' <= n for free.
"""

from __future__ import annotations

import itertools
import threading
from collections import OrderedDict
from fractions import Fraction
from typing import Callable, NamedTuple, Optional, Sequence, TypeVar

from .numeric_core import Composition, RationalLike, as_rational, binomial

T = TypeVar("T")

DEFAULT_CACHE_SIZE = 2**20
DEFAULT_ENUMERATION_CAP = 10**7


class EnumerationTooLarge(RuntimeError):
    pass


class MemoKey(NamedTuple):
    n: int
    k: tuple[int, ...]
    z: Optional[Fraction]


class LRUCache:
    """Entry-bounded LRU map, safe to share between threads."""

    def __init__(self, maxsize: int = DEFAULT_CACHE_SIZE):
        if maxsize < 1:
            raise ValueError("cache must hold at least one entry")
        self.maxsize = maxsize
        self._data: OrderedDict = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key, default=None):
        with self._lock:
            try:
                value = self._data[key]
            except KeyError:
                self.misses += 1
                return default
            self._data.move_to_end(key)
            self.hits += 1
            return value

    def put(self, key, value) -> None:
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self.maxsize:
                self._data.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = self.misses = 0

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key) -> bool:
        return key in self._data


star_cache = LRUCache()
strict_cache = LRUCache()


def set_cache_size(maxsize: int) -> None:
    """Rebound both module caches (existing entries are dropped)."""
    global star_cache, strict_cache
    star_cache = LRUCache(maxsize)
    strict_cache = LRUCache(maxsize)


def weak_chain_prefix(
    n: int,
    exponents: Sequence[int],
    innermost: Callable[[int], T],
    ratios: Optional[Sequence] = None,
) -> list[T]:
    """Prefix table of a weakly nested sum with geometric couplings between layers.

    Returns ``[S(0), ..., S(n)]`` where::

        S(N) = sum_{N >= n_1 >= ... >= n_d >= 1}  innermost(n_d)
               * prod_j n_j^(-k_j) * prod_{j<d} ratios[j]^(n_j - n_{j+1})

    ``ratios[j]`` couples layer j to layer j+1 (0-based); ``None`` means all ones.
    Works for any number type closed under ``+``, ``*`` and division by int
    (Fraction, mpmath.mpf, float).
    """
    d = len(exponents)
    if d == 0:
        raise ValueError("a nested sum needs at least one index")
    if ratios is not None and len(ratios) != d - 1:
        raise ValueError("need exactly one ratio per adjacent pair of layers")

    if n < 1:
        # empty range; innermost may not be defined at 1
        return [Fraction(0)]
    zero = innermost(1) * 0
    k_last = exponents[-1]
    layer = [zero] + [innermost(i) / i**k_last for i in range(1, n + 1)]
    for j in range(d - 2, -1, -1):
        k = exponents[j]
        c = None if ratios is None else ratios[j]
        acc = zero
        nxt = [zero] * (n + 1)
        if c is None or c == 1:
            for i in range(1, n + 1):
                acc = acc + layer[i]
                nxt[i] = acc / i**k
        else:
            for i in range(1, n + 1):
                acc = c * acc + layer[i]
                nxt[i] = acc / i**k
        layer = nxt

    out = [zero] * (n + 1)
    acc = zero
    for i in range(1, n + 1):
        acc = acc + layer[i]
        out[i] = acc
    return out


def mhts_table(n: int, k, z: Optional[RationalLike] = None) -> tuple[Fraction, ...]:
    """(zeta*_0(k; z), ..., zeta*_n(k; z)); ``z=None`` is the plain star sum."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    k = Composition.of(k)
    zq = None if z is None else as_rational(z)
    key = MemoKey(n, k.parts, zq)
    cached = star_cache.get(key)
    if cached is not None:
        return cached

    if k.depth == 0:
        table = tuple(Fraction(1) for _ in range(n + 1))
    elif zq is None:
        table = tuple(weak_chain_prefix(n, k.parts, lambda i: Fraction(1)))
    else:
        powers = [Fraction(1)]
        for _ in range(n):
            powers.append(powers[-1] * zq)
        table = tuple(weak_chain_prefix(n, k.parts, powers.__getitem__))
    star_cache.put(key, table)
    return table


def mhs_table(n: int, k) -> tuple[Fraction, ...]:
    """(zeta_0(k), ..., zeta_n(k)) for strictly decreasing indices."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    k = Composition.of(k)
    key = MemoKey(n, k.parts, None)
    cached = strict_cache.get(key)
    if cached is not None:
        return cached

    if k.depth == 0:
        table = tuple(Fraction(1) for _ in range(n + 1))
    else:
        # prev[i] = inner sum over indices <= i; the next layer needs index < i
        prev = [Fraction(1)] * (n + 1)
        for kj in reversed(k.parts):
            cur = [Fraction(0)] * (n + 1)
            acc = Fraction(0)
            for i in range(1, n + 1):
                acc += prev[i - 1] / i**kj
                cur[i] = acc
            prev = cur
        table = tuple(prev)
    strict_cache.put(key, table)
    return table


def mhs(n: int, k) -> Fraction:
    """zeta_n(k): sum over n >= n_1 > ... > n_r > 0 of prod n_j^(-k_j)."""
    return mhs_table(n, k)[n]


def mhss(n: int, k) -> Fraction:
    """zeta*_n(k): the same sum over weakly decreasing indices."""
    return mhts_table(n, k)[n]


def mhts(n: int, k, z: RationalLike) -> Fraction:
    """zeta*_n(k; z): star sum whose innermost index n_r carries the weight z**n_r."""
    return mhts_table(n, k, z)[n]


def harmonic_number(n: int, p: int = 1) -> Fraction:
    return mhss(n, (p,))


def alt_harmonic_number(n: int, p: int = 1) -> Fraction:
    """sum_{j=1}^n (-1)^(j-1) / j^p."""
    return -mhts(n, (p,), -1)


def _count_or_raise(count: int, cap: int) -> None:
    if count > cap:
        raise EnumerationTooLarge(f"{count} index tuples exceed the enumeration cap {cap}")


def _tuple_term(tup, parts, z) -> Fraction:
    den = 1
    for ni, ki in zip(tup, parts):
        den *= ni**ki
    return Fraction(z**tup[-1] if z is not None else 1) / den


def mhts_bruteforce(n: int, k, z: Optional[RationalLike] = 1, cap: int = DEFAULT_ENUMERATION_CAP) -> Fraction:
    """Direct enumeration of all tuples n >= n_1 >= ... >= n_r >= 1."""
    k = Composition.of(k)
    if k.depth == 0:
        return Fraction(1)
    if n <= 0:
        return Fraction(0)
    _count_or_raise(binomial(n + k.depth - 1, k.depth), cap)
    zq = None if z is None else as_rational(z)
    total = Fraction(0)
    for tup in itertools.combinations_with_replacement(range(n, 0, -1), k.depth):
        total += _tuple_term(tup, k.parts, zq)
    return total


def mhss_bruteforce(n: int, k, cap: int = DEFAULT_ENUMERATION_CAP) -> Fraction:
    return mhts_bruteforce(n, k, None, cap)


def mhs_bruteforce(n: int, k, cap: int = DEFAULT_ENUMERATION_CAP) -> Fraction:
    """Direct enumeration of all tuples n >= n_1 > ... > n_r >= 1."""
    k = Composition.of(k)
    if k.depth == 0:
        return Fraction(1)
    if n < k.depth:
        return Fraction(0)
    _count_or_raise(binomial(n, k.depth), cap)
    total = Fraction(0)
    for tup in itertools.combinations(range(n, 0, -1), k.depth):
        total += _tuple_term(tup, k.parts, None)
    return total
