"""Numbered acceptance criteria, each at its stated tolerance and time limit.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import math
import time
from fractions import Fraction as F

import mpmath
import pytest

from mhsums import harmonic
from mhsums.harmonic import mhs, mhs_bruteforce, mhss, mhss_bruteforce, mhts, mhts_bruteforce
from mhsums.identities import ParamPoint, expand_grid, search_counterexample, sweep, verify
from mhsums.identities.harness import PASS
from mhsums.identities.specs import conjecture_shapes
from mhsums.mzv_numeric import mzsv_star_numeric, thm4_rhs_numeric, toeplitz_trace, toeplitz_weights_sum
from mhsums.numeric_core import compositions_up_to, ones_composition
from mhsums.stirling_bell import bell_number_Y, mhss_ones_via_bell, stirling1, stirling1_via_mhs

from oracles import bell_closed_form, stirling_closed_form

XYZ = [(F(1, 3), F(1, 2), F(1, 5)), (F(1, 2), F(1, 2), F(-1)), (F(2), F(1), F(1)), (F(1), F(3), F(0))]
XY3 = [(F(1, 2), F(1, 2)), (F(1), F(2)), (F(1, 3), F(2, 3))]


class Timer:
    def __enter__(self):
        harmonic.star_cache.clear()
        harmonic.strict_cache.clear()
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def assert_all_pass(reports, expected_count=None):
    bad = [r for r in reports if r.status != PASS]
    assert not bad, f"{len(bad)} failing, first: {bad[0].params} {bad[0].status} {bad[0].message}"
    if expected_count is not None:
        assert len(reports) == expected_count


@pytest.mark.acceptance(1, "Mneimneh identity, exact, < 5 s")
def test_criterion_01_mneimneh():
    with Timer() as t:
        rep = verify("mneimneh", ParamPoint.from_mapping(dict(n=2, p="1/2")))
        assert rep.lhs == rep.rhs == F(7, 8)
        grid = {"n": "1..25", "p": ["0", "1/7", "1/3", "1/2", "9/10", "1"]}
        assert_all_pass(sweep("mneimneh", grid, workers=1), 150)
    assert t.elapsed < 5


@pytest.mark.acceptance(2, "thm1 with closed form, exact, < 30 s")
def test_criterion_02_thm1():
    with Timer() as t:
        points = []
        for x, y, z in XYZ:
            points += expand_grid({"x": x, "y": y, "z": z, "n": "1..20", "p": "1..4"})
        reports = sweep("thm1", points, workers=1)
        assert_all_pass(reports, 320)
        assert all(r.extras["closed_form"] == r.lhs for r in reports)
    assert t.elapsed < 30


@pytest.mark.acceptance(3, "thm2 three-way check, exact, < 60 s")
def test_criterion_03_thm2():
    with Timer() as t:
        points = []
        for x, y, z in XYZ:
            assert y != 0
            points += expand_grid({"x": x, "y": y, "z": z, "n": "1..15", "p": "1..3", "m": "1..3"})
        reports = sweep("thm2", points, workers=1)
        assert_all_pass(reports, 540)
        assert all(r.lhs == r.rhs == r.extras["rhs_alt"] for r in reports)
    assert t.elapsed < 60


@pytest.mark.acceptance(4, "thm3, exact, < 120 s")
def test_criterion_04_thm3():
    with Timer() as t:
        points = []
        for x, y in XY3:
            points += expand_grid({"x": x, "y": y, "n": "1..12", "p": "1..2", "m": "0..2", "r": "1..2"})
        assert_all_pass(sweep("thm3", points, workers=1), 432)
    assert t.elapsed < 120


@pytest.mark.acceptance(5, "Stirling/Bell bridges and explicit expansions, exact")
def test_criterion_05_bridges():
    for n in range(1, 31):
        for k in range(1, n + 1):
            assert stirling1_via_mhs(n, k) == stirling1(n, k)
    for n in range(0, 31):
        for m in range(0, 7):
            star = mhss(n, ones_composition(m)) if m else 1
            assert star == bell_number_Y(m, n) / math.factorial(m) == mhss_ones_via_bell(n, m)
    for n in range(1, 26):
        for k in range(2, 6):
            assert stirling1(n, k) == stirling_closed_form(n, k)
        for k in range(1, 6):
            assert bell_number_Y(k, n) == bell_closed_form(k, n)


@pytest.mark.acceptance(6, "shifted star sums, exact")
def test_criterion_06_lemma_shift():
    comps = [",".join(map(str, c.parts)) for c in compositions_up_to(4)]
    reports = sweep("lemma_shift", {"k": comps, "n": "1..10", "l": "0..6"}, workers=1)
    assert_all_pass(reports, 15 * 10 * 7)


@pytest.mark.acceptance(7, "prop_nested and prop5, exact")
def test_criterion_07_propositions():
    points = []
    for a, z in ((F(1, 2), F(1, 3)), (F(-2), F(1)), (F(3), F(-1, 2))):
        points += expand_grid({"a": a, "z": z, "m": "1..3", "j": "1..15"})
    assert_all_pass(sweep("prop_nested", points, workers=1), 135)
    grid = {"alpha": ["-1/2", "1/4", "2"], "j": "1..10", "m": "1..3"}
    assert_all_pass(sweep("prop5", grid, workers=1), 90)


@pytest.mark.acceptance(8, "worked harmonic-number examples, exact")
def test_criterion_08_examples():
    selectors = ["altH2", "H3", "z12", "z21", "HkHk2", "Hk3", "Y3"]
    points = []
    for x, y in XY3:
        points += expand_grid({"x": x, "y": y, "n": "1..12", "selector": selectors})
    reports = sweep("examples", points, workers=1)
    assert_all_pass(reports, 3 * 12 * 7)
    assert all(r.extras["stuffle"] == r.lhs for r in reports if r.params.selector == "HkHk2")


@pytest.mark.acceptance(9, "conjecture sweep, seeded search and reductions")
def test_criterion_09_conjecture():
    shapes = list(conjecture_shapes(range(0, 3), (1, 2), (0, 1)))
    assert len(shapes) == 1 + 8 + 32
    points = []
    for x, y in XY3[:1] + [(F(1, 3), F(2, 3)), (F(2), F(1))]:
        for pvec, mvec in shapes:
            for n in range(1, 11):
                points.append(ParamPoint(n=n, x=x, y=y, pvec=pvec, mvec=mvec))
    assert_all_pass(sweep("conjecture", points, workers=1), 3 * 41 * 10)
    assert search_counterexample("conjecture", seed=42, budget=200) is None
    for x, y in ((F(1, 2), F(1, 2)), (F(1, 3), F(2, 3)), (F(2), F(1))):
        for n in range(1, 11):
            for m in (0, 1, 2):
                c = verify("conjecture", ParamPoint(n=n, x=x, y=y, pvec=(1, 1), mvec=(m,)))
                t = verify("thm3", ParamPoint(n=n, x=x, y=y, p=F(1), m=m, r=1))
                assert c.status == t.status == PASS and (c.lhs, c.rhs) == (t.lhs, t.rhs)
            for p1 in (2, 3, 4):
                c = verify("conjecture", ParamPoint(n=n, x=x, y=y, pvec=(p1,), mvec=()))
                t = verify("thm1", ParamPoint(n=n, x=x, y=y, z=F(1), p=F(p1 - 1)))
                assert c.status == t.status == PASS and c.lhs == t.lhs == c.rhs == t.rhs


THM4_YS = (F(1, 3), F(1, 2), F(2, 3))


@pytest.mark.acceptance(10, "polylog difference vs star value, |diff| < 1e-3, < 60 s per point")
@pytest.mark.slow
def test_criterion_10_thm4_numeric():
    for m, r in ((0, 1), (0, 2), (1, 1)):
        start = time.perf_counter()
        ref = mzsv_star_numeric(m, r, 20000, 50)
        ref_time = time.perf_counter() - start
        values = {}
        for y in THM4_YS:
            start = time.perf_counter()
            comb = thm4_rhs_numeric(m, r, y, 20000, 50)
            assert ref_time + time.perf_counter() - start < 60
            with mpmath.workdps(50):
                diff = abs(comb.value - ref.value)
            assert diff < 1e-3, f"(m,r)=({m},{r}) y={y}: diff {mpmath.nstr(diff, 5)}"
            values[y] = comb
        with mpmath.workdps(50):
            for a in THM4_YS:
                for b in THM4_YS:
                    gap = abs(values[a].value - values[b].value)
                    assert gap <= values[a].err_estimate + values[b].err_estimate


@pytest.mark.acceptance(11, "Toeplitz convergence toward 2 zeta(3), exact row sums")
def test_criterion_11_toeplitz():
    with mpmath.workdps(50):
        limit = 2 * mpmath.zeta(3)
    trace = toeplitz_trace(0, 2, F(1, 2), (10, 50, 200), limit=limit)
    assert abs(trace.deltas[2]) < abs(trace.deltas[1])
    assert all(w == 1 for w in trace.weight_sums)
    assert all(toeplitz_weights_sum(F(1, 2), n) == 1 for n in range(1, 201))


@pytest.mark.acceptance(12, "recursive evaluators equal brute-force enumeration")
def test_criterion_12_oracle_equivalence():
    comps = compositions_up_to(5)
    assert len(comps) == 31
    for k in comps:
        for n in range(0, 11):
            for z in (F(1), F(1, 2), F(-1)):
                assert mhts(n, k, z) == mhts_bruteforce(n, k, z)
            assert mhss(n, k) == mhss_bruteforce(n, k)
            assert mhs(n, k) == mhs_bruteforce(n, k)
