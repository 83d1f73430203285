"""Exact left- and right-hand sides of binomial sums over harmonic-type sums.

Left-hand sides are always evaluated term by term from memoized harmonic-type
sums; right-hand sides go through Stirling/Bell weights or independent nested
sums, so the two sides share no closed-form shortcut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from ..harmonic import harmonic_number, mhs, mhts, mhts_table, mhs_table, weak_chain_prefix
from ..numeric_core import Composition, DomainError, ones_composition
from ..stirling_bell import bell_stirling_bracket
from .params import ParamPoint

ONE = Fraction(1)
ZERO = Fraction(0)


@dataclass(frozen=True)
class Evaluation:
    lhs: Fraction
    rhs: Fraction
    extras: Mapping[str, Fraction] = field(default_factory=dict)


@dataclass(frozen=True)
class Identity:
    id: str
    title: str
    params: tuple[str, ...]
    evaluate: Callable[[ParamPoint], Evaluation]
    # raises DomainError for points where a side is undefined; returns the
    # list of stated-range violations that an override may skip past
    domain: Callable[[ParamPoint], list[str]]
    sampler: Mapping = field(default_factory=dict)
    conjectural: bool = False


class UnknownIdentity(KeyError):
    pass


# ---------------------------------------------------------------- helpers


def _need(params: ParamPoint, *names: str) -> None:
    missing = [n for n in names if getattr(params, n) is None]
    if missing:
        raise DomainError(f"missing parameter(s): {', '.join(missing)}")


def _int(value, name: str, minimum: int = 0) -> int:
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise DomainError(f"{name} must be an integer, got {value}")
        value = int(value)
    if value < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {value}")
    return value


def binomial_sum(x: Fraction, y: Fraction, n: int, values: Sequence[Fraction]) -> Fraction:
    """sum_{k=0}^n x^k y^(n-k) C(n, k) values[k]."""
    total = ZERO
    for k in range(n + 1):
        if values[k]:
            total += x**k * y ** (n - k) * math.comb(n, k) * values[k]
    return total


def _powers(base: Fraction, n: int) -> list[Fraction]:
    out = [ONE]
    for _ in range(n):
        out.append(out[-1] * base)
    return out


def telescoped_chain(n: int, depth: int, q: Fraction, coupled: Sequence[bool], inner) -> Fraction:
    """sum_{n >= n_1 >= ... >= n_depth >= 1} q^(sum of coupled gaps) * inner(n_depth) / (n_1 ... n_depth).

    ``coupled[i]`` (0-based) says whether the gap n_{i+1} - n_{i+2} carries a factor q.
    """
    if depth == 0:
        raise DomainError("nested sum with no indices")
    ratios = [q if c else ONE for c in coupled]
    return weak_chain_prefix(n, (1,) * depth, inner, ratios)[n]


def _ratio_domain(params: ParamPoint, *, need_y: bool, check_z: bool, check_sign: bool = True) -> list[str]:
    x, y = params.x, params.y
    if x + y == 0:
        raise DomainError("x + y must be nonzero")
    if need_y and y == 0:
        raise DomainError("y must be nonzero")
    soft = []
    if check_sign and x / (x + y) < 0:
        soft.append("x/(x+y) < 0")
    if check_z and params.z is not None and params.z > 1:
        soft.append("z > 1")
    return soft


def _wq(params: ParamPoint) -> tuple[Fraction, Fraction]:
    x, y, z = params.x, params.y, params.z
    return (x * z + y) / (x + y), y / (x + y)


# ---------------------------------------------------------------- Mneimneh and Gencev


def _mneimneh(params: ParamPoint) -> Evaluation:
    n, p = params.n, params.p
    h = [harmonic_number(k) for k in range(n + 1)]
    lhs = binomial_sum(p, 1 - p, n, h)
    rhs = sum(((1 - (1 - p) ** i) / i for i in range(1, n + 1)), ZERO)
    return Evaluation(lhs, rhs)


def _mneimneh_domain(params: ParamPoint) -> list[str]:
    _need(params, "n", "p")
    _int(params.n, "n")
    return []


def _powers_of_two(params: ParamPoint) -> Evaluation:
    n = params.n
    lhs = sum((math.comb(n, k) * harmonic_number(k) for k in range(n + 1)), ZERO)
    rhs = 2**n * (harmonic_number(n) - sum((Fraction(1, j * 2**j) for j in range(1, n + 1)), ZERO))
    return Evaluation(lhs, rhs)


def _n_only_domain(params: ParamPoint) -> list[str]:
    _need(params, "n")
    _int(params.n, "n")
    return []


def _gencev_rhs(n: int, r: int, p: Fraction, z: Fraction) -> Fraction:
    # (1-p)^{n_1} ((1 + zp/(1-p))^{n_r} - 1) spread over the gaps as (1-p)^{n_i - n_{i+1}}
    c, w = 1 - p, 1 - p + z * p
    pw, pc = _powers(w, n), _powers(c, n)
    ratios = [c] * (r - 1)
    return weak_chain_prefix(n, (1,) * r, lambda i: pw[i] - pc[i], ratios)[n]


def _gencev(params: ParamPoint, printed: bool = False) -> Evaluation:
    n, r, p, z = params.n, params.r, params.p, params.z
    table = mhts_table(n, (r,), z)
    total = ZERO
    for k in range(n + 1):
        tail = (1 - p) ** k if printed else (1 - p) ** (n - k)
        total += math.comb(n, k) * table[k] * p**k * tail
    return Evaluation(total, _gencev_rhs(n, r, p, z))


def _gencev_domain(params: ParamPoint) -> list[str]:
    _need(params, "n", "r", "p", "z")
    _int(params.n, "n")
    _int(params.r, "r", 1)
    if params.p == 1:
        raise DomainError("p must differ from 1")
    return []


# ---------------------------------------------------------------- binomial sums of star and harmonic-type sums


def thm1_closed_form(params: ParamPoint) -> Fraction:
    x, y, n, p = params.x, params.y, params.n, int(params.p)
    w, q = _wq(params)
    ones = ones_composition(p)
    return (x + y) ** n * (mhts(n, ones, w) - mhts(n, ones, q))


def _thm1(params: ParamPoint) -> Evaluation:
    x, y, z, n, p = params.x, params.y, params.z, params.n, int(params.p)
    lhs = binomial_sum(x, y, n, mhts_table(n, ones_composition(p), z))
    w, q = _wq(params)
    pw, pq = _powers(w, n), _powers(q, n)
    acc = ZERO
    for j in range(1, n + 1):
        diff = pw[j] - pq[j]
        if diff:
            acc += diff * bell_stirling_bracket(p, n, j)
    rhs = (-1) ** (p - 1) * (x + y) ** n * acc
    return Evaluation(lhs, rhs, {"closed_form": thm1_closed_form(params)})


def _thm1_domain(params: ParamPoint) -> list[str]:
    _need(params, "x", "y", "z", "n", "p")
    _int(params.n, "n")
    _int(params.p, "p", 1)
    return _ratio_domain(params, need_y=False, check_z=True)


def thm2_stirling_rhs(x, y, z, n: int, p: int, m: int) -> Fraction:
    q = y / (x + y)
    u = 1 + x * z / y
    pq, pu = _powers(q, n), _powers(u, n)
    acc = ZERO
    for j in range(1, n + 1):
        outer = bell_stirling_bracket(p, n, j)
        if not outer:
            continue
        inner = ZERO
        for l in range(1, j + 1):
            if pu[l] != 1:
                inner += (pu[l] - 1) * bell_stirling_bracket(m, j, l)
        acc += pq[j] * outer * inner
    return (-1) ** (m + p) * (x + y) ** n * acc


def thm2_nested_rhs(x, y, z, n: int, p: int, m: int) -> Fraction:
    """Nested form, valid for m >= 0: depth p+m with gaps p..p+m-1 coupled by y/(x+y)."""
    d = p + m
    w = (x * z + y) / (x + y)
    q = y / (x + y)
    pw, pq = _powers(w, n), _powers(q, n)
    coupled = [p - 1 <= i <= d - 2 for i in range(d - 1)]
    return (x + y) ** n * telescoped_chain(n, d, q, coupled, lambda i: pw[i] - pq[i])


def _thm2_lhs(params: ParamPoint, p: int, m: int) -> Fraction:
    comp = ones_composition(p - 1) + (m + 1,)
    return binomial_sum(params.x, params.y, params.n, mhts_table(params.n, comp, params.z))


def _thm2(params: ParamPoint) -> Evaluation:
    x, y, z, n, p, m = params.x, params.y, params.z, params.n, int(params.p), params.m
    lhs = _thm2_lhs(params, p, m)
    rhs = thm2_stirling_rhs(x, y, z, n, p, m)
    return Evaluation(lhs, rhs, {"rhs_alt": thm2_nested_rhs(x, y, z, n, p, m)})


def _thm2_domain(params: ParamPoint, m_min: int = 1) -> list[str]:
    _need(params, "x", "y", "z", "n", "p", "m")
    _int(params.n, "n")
    _int(params.p, "p", 1)
    _int(params.m, "m", m_min)
    return _ratio_domain(params, need_y=True, check_z=True)


def _thm2_nested(params: ParamPoint) -> Evaluation:
    x, y, z, n, p, m = params.x, params.y, params.z, params.n, int(params.p), params.m
    return Evaluation(_thm2_lhs(params, p, m), thm2_nested_rhs(x, y, z, n, p, m))


def thm3_composition(p: int, m: int, r: int) -> Composition:
    return ones_composition(p - 1) + (m + 2,) + ones_composition(r - 1)


def thm3_rhs(x, y, n: int, p: int, m: int, r: int) -> Fraction:
    d = p + m + r
    q = y / (x + y)
    pq = _powers(q, n)
    # (y/(x+y))^{n_p} ((x+y)/y)^{n_{p+m+1}} couples the gaps between n_p and n_{p+m+1}
    coupled = [p - 1 <= i <= p + m - 1 for i in range(d - 1)]
    return (x + y) ** n * telescoped_chain(n, d, q, coupled, lambda i: 1 - pq[i])


def _thm3(params: ParamPoint) -> Evaluation:
    x, y, n, p, m, r = params.x, params.y, params.n, int(params.p), params.m, params.r
    lhs = binomial_sum(x, y, n, mhts_table(n, thm3_composition(p, m, r)))
    return Evaluation(lhs, thm3_rhs(x, y, n, p, m, r))


def _thm3_domain(params: ParamPoint) -> list[str]:
    _need(params, "x", "y", "n", "p", "m", "r")
    _int(params.n, "n")
    _int(params.p, "p", 1)
    _int(params.m, "m", 0)
    _int(params.r, "r", 1)
    return _ratio_domain(params, need_y=True, check_z=False)


# ---------------------------------------------------------------- specializations of thm2


def _cor1(params: ParamPoint) -> Evaluation:
    x, y, z, n, p = params.x, params.y, params.z, params.n, int(params.p)
    lhs = _thm2_lhs(params, p, 1)
    q, u = y / (x + y), 1 + x * z / y
    pq, pu = _powers(q, n), _powers(u, n)
    acc = ZERO
    for j in range(1, n + 1):
        inner = sum(((pu[l] - 1) / l for l in range(1, j + 1)), ZERO)
        acc += pq[j] * inner * bell_stirling_bracket(p, n, j)
    rhs = (-1) ** (p - 1) * (x + y) ** n * acc
    return Evaluation(lhs, rhs, {"thm2": thm2_stirling_rhs(x, y, z, n, p, 1)})


def _cor2(params: ParamPoint) -> Evaluation:
    x, y, z, n, m = params.x, params.y, params.z, params.n, params.m
    lhs = _thm2_lhs(params, 1, m)
    q, u = y / (x + y), 1 + x * z / y
    pq, pu = _powers(q, n), _powers(u, n)
    acc = ZERO
    for j in range(1, n + 1):
        inner = sum(((pu[l] - 1) * bell_stirling_bracket(m, j, l) for l in range(1, j + 1)), ZERO)
        acc += pq[j] / j * inner
    rhs = (-1) ** (m - 1) * (x + y) ** n * acc
    return Evaluation(lhs, rhs, {"thm2": thm2_stirling_rhs(x, y, z, n, 1, m)})


def _cor1_domain(params: ParamPoint) -> list[str]:
    _need(params, "x", "y", "z", "n", "p")
    _int(params.n, "n")
    _int(params.p, "p", 1)
    return _ratio_domain(params, need_y=True, check_z=True)


def _cor2_domain(params: ParamPoint) -> list[str]:
    _need(params, "x", "y", "z", "n", "m")
    _int(params.n, "n")
    _int(params.m, "m", 1)
    return _ratio_domain(params, need_y=True, check_z=True)


# ---------------------------------------------------------------- worked examples

EXAMPLE_SELECTORS = ("altH2", "H3", "z12", "z21", "HkHk2", "Y3", "Hk3")


def _pairs(n: int):
    for j in range(1, n + 1):
        for l in range(1, j + 1):
            yield j, l


def _geometric_tail(l: int, t: Fraction) -> Fraction:
    # H_l - sum_{h<=l} t^h / h
    return sum(((1 - t**h) / h for h in range(1, l + 1)), ZERO)


def _examples_rhs(selector: str, x: Fraction, y: Fraction, n: int) -> Fraction:
    s = x + y
    H = harmonic_number
    q = y / s
    if selector == "altH2":
        return sum((Fraction(1, j * l) * s ** (n - j) * y ** (j - l) * (y**l - (y - x) ** l) for j, l in _pairs(n)), ZERO)
    if selector == "H3":
        return sum(
            (Fraction(1, j * l) * s ** (n - j) * y ** (j - l) * (s**l - y**l) * (H(j) - H(l - 1)) for j, l in _pairs(n)),
            ZERO,
        )
    if selector == "z12":
        return sum(
            (Fraction(1, j * l) * s ** (n - j) * y ** (j - l) * (s**l - y**l) * (H(n) - H(j - 1)) for j, l in _pairs(n)),
            ZERO,
        )
    if selector == "z21":
        total = ZERO
        for j, l in _pairs(n):
            for h in range(1, l + 1):
                total += Fraction(1, j * l * h) * s ** (n - j) * y ** (j - l) * s**l * (1 - q**h)
        return total
    if selector == "HkHk2":
        first = sum(
            (
                Fraction(1, j * l) * s ** (n - j) * y ** (j - l) * (s**l - y**l)
                * (H(n) - 2 * H(j) + H(l) + Fraction(1, j) - Fraction(1, l))
                for j, l in _pairs(n)
            ),
            ZERO,
        )
        second = sum(
            (Fraction(1, j * l) * s ** (n - j) * y ** (j - l) * s**l * _geometric_tail(l, q) for j, l in _pairs(n)),
            ZERO,
        )
        return first + second
    if selector in ("Y3", "Hk3"):
        bell_part = 3 * s**n * sum(
            (
                Fraction(1, j) * (1 - q**j)
                * (H(n) ** 2 + H(n, 2) - 2 * H(n) * H(j - 1) + H(j - 1) ** 2 - H(j - 1, 2))
                for j in range(1, n + 1)
            ),
            ZERO,
        )
        if selector == "Y3":
            return bell_part
        first = sum(
            (
                Fraction(1, j * l) * s ** (n - j) * y ** (j - l) * (s**l - y**l)
                * (3 * H(n) - 4 * H(j) + H(l) + Fraction(3, j) - Fraction(1, l))
                for j, l in _pairs(n)
            ),
            ZERO,
        )
        second = sum(
            (Fraction(1, j * l) * s ** (n - j) * y ** (j - l) * s**l * _geometric_tail(l, q) for j, l in _pairs(n)),
            ZERO,
        )
        return bell_part - first - 3 * second
    raise DomainError(f"unknown example selector {selector!r}")


def _examples_lhs_values(selector: str, n: int) -> list[Fraction]:
    H = harmonic_number
    if selector == "altH2":
        return [-v for v in mhts_table(n, (2,), -1)]
    if selector == "H3":
        return list(mhts_table(n, (3,)))
    if selector == "z12":
        return list(mhts_table(n, (1, 2)))
    if selector == "z21":
        return list(mhts_table(n, (2, 1)))
    if selector == "HkHk2":
        return [H(k) * H(k, 2) for k in range(n + 1)]
    if selector == "Y3":
        return [H(k) ** 3 + 3 * H(k) * H(k, 2) + 2 * H(k, 3) for k in range(n + 1)]
    if selector == "Hk3":
        return [H(k) ** 3 for k in range(n + 1)]
    raise DomainError(f"unknown example selector {selector!r}")


def _examples(params: ParamPoint) -> Evaluation:
    x, y, n, sel = params.x, params.y, params.n, params.selector
    lhs = binomial_sum(x, y, n, _examples_lhs_values(sel, n))
    extras = {}
    if sel == "HkHk2":
        # H_k H_k^(2) = zeta*_k(1,2) + zeta*_k(2,1) - H_k^(3)
        a, b, c = mhts_table(n, (1, 2)), mhts_table(n, (2, 1)), mhts_table(n, (3,))
        extras["stuffle"] = binomial_sum(x, y, n, [a[k] + b[k] - c[k] for k in range(n + 1)])
    return Evaluation(lhs, _examples_rhs(sel, x, y, n), extras)


def _examples_domain(params: ParamPoint) -> list[str]:
    _need(params, "x", "y", "n", "selector")
    _int(params.n, "n")
    if params.selector not in EXAMPLE_SELECTORS:
        raise DomainError(f"selector must be one of {', '.join(EXAMPLE_SELECTORS)}")
    return _ratio_domain(params, need_y=False, check_z=False)


# ---------------------------------------------------------------- shifted sums and nested log-integral sums


def shifted_star_sum(n: int, k: Composition, l: int) -> Fraction:
    """sum_{n >= n_1 >= ... >= n_r > 0} prod 1/(n_j + l)^(k_j), by direct layered summation."""
    parts = k.parts
    layer = [ZERO] + [Fraction(1, (i + l) ** parts[-1]) for i in range(1, n + 1)]
    for kj in reversed(parts[:-1]):
        acc = ZERO
        nxt = [ZERO] * (n + 1)
        for i in range(1, n + 1):
            acc += layer[i]
            nxt[i] = acc / (i + l) ** kj
        layer = nxt
    return sum(layer, ZERO)


def _lemma_shift(params: ParamPoint) -> Evaluation:
    k, n, l = Composition.of(params.k), params.n, params.l
    r = k.depth
    lhs = shifted_star_sum(n, k, l)
    rhs = ZERO
    for j in range(r + 1):
        term = mhts_table(n + l, k[:j])[n + l] * mhs_table(l, k[j:].reversed())[l]
        rhs += term if j % 2 == 0 else -term
    return Evaluation(lhs, (-1) ** r * rhs)


def _lemma_shift_domain(params: ParamPoint) -> list[str]:
    _need(params, "k", "n", "l")
    _int(params.n, "n", 1)
    _int(params.l, "l", 0)
    if not params.k:
        raise DomainError("k must be a nonempty composition")
    Composition.of(params.k)
    return []


def prop_nested_sum(j: int, m: int, u: Fraction) -> Fraction:
    """sum_{j >= j_1 >= ... >= j_m >= 1} (u^{j_m} - 1) / (j_1 ... j_m)."""
    pu = _powers(u, j)
    return weak_chain_prefix(j, (1,) * m, lambda i: pu[i] - 1)[j]


def prop_stirling_form(j: int, m: int, u: Fraction) -> Fraction:
    pu = _powers(u, j)
    total = sum(((pu[l] - 1) * bell_stirling_bracket(m, j, l) for l in range(1, j + 1)), ZERO)
    return (-1) ** (m - 1) * total


def _prop_nested(params: ParamPoint) -> Evaluation:
    u = params.a * params.z + 1
    return Evaluation(prop_nested_sum(params.j, params.m, u), prop_stirling_form(params.j, params.m, u))


def _prop_nested_domain(params: ParamPoint) -> list[str]:
    _need(params, "a", "z", "m", "j")
    _int(params.j, "j", 1)
    _int(params.m, "m", 1)
    if params.a == 0:
        raise DomainError("a must be nonzero")
    return []


def _prop5(params: ParamPoint) -> Evaluation:
    alpha, j, m = params.alpha, params.j, params.m
    fm = math.factorial(m)
    lhs = (-1) ** (m + 1) * fm * (alpha + 1) ** j / (alpha * j) * prop_nested_sum(j, m, 1 / (alpha + 1))
    a = -alpha / (1 + alpha)
    rhs = (-1) ** m * fm / (a * (a + 1) ** (j - 1) * j) * prop_stirling_form(j, m, a + 1)
    return Evaluation(lhs, rhs)


def _prop5_domain(params: ParamPoint) -> list[str]:
    _need(params, "alpha", "j", "m")
    _int(params.j, "j", 1)
    _int(params.m, "m", 1)
    if params.alpha in (0, -1):
        raise DomainError("alpha must avoid 0 and -1")
    return []


# ---------------------------------------------------------------- the conjecture


def conjecture_composition(pvec: Sequence[int], mvec: Sequence[int]) -> Composition:
    parts: tuple[int, ...] = ()
    for pi, mi in zip(pvec, mvec):
        parts += (1,) * (pi - 1) + (mi + 2,)
    parts += (1,) * (pvec[-1] - 1)
    return Composition(parts)


def conjecture_depth(pvec: Sequence[int], mvec: Sequence[int]) -> int:
    return sum(pvec) + sum(mvec) + len(mvec) - 1


def conjecture_rhs(x, y, n: int, pvec: Sequence[int], mvec: Sequence[int]) -> Fraction:
    r = len(mvec)
    d = conjecture_depth(pvec, mvec)
    q = y / (x + y)
    pq = _powers(q, n)
    coupled = [False] * (d - 1)
    for blk in range(1, r + 1):
        # q^{n_start - n_end}, 1-based indices
        start = sum(pvec[:blk]) + sum(mvec[: blk - 1]) + blk - 1
        end = sum(pvec[:blk]) + sum(mvec[:blk]) + blk
        for gap in range(start, end):
            coupled[gap - 1] = True
    return (x + y) ** n * telescoped_chain(n, d, q, coupled, lambda i: 1 - pq[i])


def _conjecture(params: ParamPoint) -> Evaluation:
    x, y, n, pvec, mvec = params.x, params.y, params.n, params.pvec, params.mvec
    lhs = binomial_sum(x, y, n, mhts_table(n, conjecture_composition(pvec, mvec)))
    return Evaluation(lhs, conjecture_rhs(x, y, n, pvec, mvec))


def _conjecture_domain(params: ParamPoint) -> list[str]:
    _need(params, "x", "y", "n", "pvec")
    _int(params.n, "n", 1)
    pvec, mvec = params.pvec, params.mvec or ()
    if len(pvec) != len(mvec) + 1:
        raise DomainError("pvec must have exactly one more entry than mvec")
    if any(p < 1 for p in pvec) or any(m < 0 for m in mvec):
        raise DomainError("pvec entries must be >= 1 and mvec entries >= 0")
    if conjecture_depth(pvec, mvec) < 1:
        raise DomainError("degenerate shape with no summation indices")
    return _ratio_domain(params, need_y=True, check_z=False, check_sign=False)


def _with_mvec_default(fn):
    def wrapped(params: ParamPoint):
        if params.mvec is None and params.pvec is not None:
            params = params.with_(mvec=())
        return fn(params)

    return wrapped


# ---------------------------------------------------------------- registry

_RAT = {"num": "-6..6", "den": "1..5"}
_POS = {"num": "1..6", "den": "1..5"}

REGISTRY: dict[str, Identity] = {}


def register(identity: Identity) -> Identity:
    REGISTRY[identity.id] = identity
    return identity


register(Identity("mneimneh", "Mneimneh's binomial sum of harmonic numbers", ("n", "p"),
                  _mneimneh, _mneimneh_domain, {"n": "0..15", "p": _RAT}))
register(Identity("powers_of_two", "sum C(n,k) H_k in powers of two", ("n",),
                  _powers_of_two, _n_only_domain, {"n": "0..25"}))
register(Identity("gencev", "Gencev's weighted generalization (exponent n-k)", ("n", "r", "p", "z"),
                  _gencev, _gencev_domain, {"n": "0..8", "r": "1..3", "p": _RAT, "z": _RAT}))
register(Identity("gencev_printed", "Gencev's formula with the exponent as printed, (1-p)^k",
                  ("n", "r", "p", "z"), lambda pt: _gencev(pt, printed=True), _gencev_domain,
                  {"n": "0..8", "r": "1..3", "p": _RAT, "z": _RAT}, conjectural=True))
register(Identity("thm1", "binomial sums of zeta*_k({1}_p; z)", ("x", "y", "z", "n", "p"),
                  _thm1, _thm1_domain, {"n": "1..10", "p": "1..4", "x": _POS, "y": _POS, "z": _RAT}))
register(Identity("thm2", "binomial sums of zeta*_k({1}_{p-1}, m+1; z)", ("x", "y", "z", "n", "p", "m"),
                  _thm2, _thm2_domain, {"n": "1..8", "p": "1..3", "m": "1..3", "x": _POS, "y": _POS, "z": _RAT}))
register(Identity("thm2_nested", "nested form of thm2, valid for m >= 0", ("x", "y", "z", "n", "p", "m"),
                  _thm2_nested, lambda pt: _thm2_domain(pt, m_min=0),
                  {"n": "1..8", "p": "1..3", "m": "0..3", "x": _POS, "y": _POS, "z": _RAT}))
register(Identity("thm3", "binomial sums of zeta*_k({1}_{p-1}, m+2, {1}_{r-1})", ("x", "y", "n", "p", "m", "r"),
                  _thm3, _thm3_domain, {"n": "1..8", "p": "1..2", "m": "0..2", "r": "1..2", "x": _POS, "y": _POS}))
register(Identity("cor1", "thm2 at m = 1", ("x", "y", "z", "n", "p"),
                  _cor1, _cor1_domain, {"n": "1..8", "p": "1..3", "x": _POS, "y": _POS, "z": _RAT}))
register(Identity("cor2", "thm2 at p = 1", ("x", "y", "z", "n", "m"),
                  _cor2, _cor2_domain, {"n": "1..8", "m": "1..3", "x": _POS, "y": _POS, "z": _RAT}))
register(Identity("examples", "worked harmonic-number examples", ("x", "y", "n", "selector"),
                  _examples, _examples_domain, {"n": "1..8", "selector": list(EXAMPLE_SELECTORS), "x": _POS, "y": _POS}))
register(Identity("lemma_shift", "shifted star sums via star/non-star products", ("k", "n", "l"),
                  _lemma_shift, _lemma_shift_domain,
                  {"k": ["1", "2", "1,1", "2,1", "1,2", "3", "1,1,1", "2,1,1"], "n": "1..8", "l": "0..6"}))
register(Identity("prop_nested", "nested sum of ((az+1)^l - 1) in Stirling/Bell form", ("a", "z", "m", "j"),
                  _prop_nested, _prop_nested_domain, {"a": _RAT, "z": _RAT, "m": "1..3", "j": "1..10"}))
register(Identity("prop5", "change of variables a = -alpha/(1+alpha) in the nested sum", ("alpha", "j", "m"),
                  _prop5, _prop5_domain, {"alpha": _RAT, "j": "1..8", "m": "1..3"}))
register(Identity("conjecture", "interleaved-composition binomial sums (conjectured)", ("x", "y", "n", "pvec", "mvec"),
                  _with_mvec_default(_conjecture), _with_mvec_default(_conjecture_domain),
                  {"n": "1..8", "shape": {"r": "0..2", "p": "1..2", "m": "0..1"}, "x": _POS, "y": _POS},
                  conjectural=True))


def get_identity(identity_id: str, registry: Optional[Mapping[str, Identity]] = None) -> Identity:
    registry = REGISTRY if registry is None else registry
    try:
        return registry[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None
