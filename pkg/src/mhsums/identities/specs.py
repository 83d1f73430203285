"""Declarative grid and sampler documents.

A grid maps parameter names to value sets and enumerates their Cartesian
product in document order (the last key varies fastest)::

    n: 1..10            # inclusive integer range
    p: [1, 2, 3]        # explicit list
    x: 1/3              # single rational literal
    k: ["1", "2,1"]     # vector parameters as comma lists
    shape: {r: 0..2, p: 1..2, m: 0..1}   # conjecture (pvec, mvec) families

A sampler uses the same vocabulary but draws one value per key per sample:
lists are sampled uniformly, ``lo..hi`` ranges uniformly over the integers,
``{num: lo..hi, den: lo..hi}`` produces random rationals, and ``shape`` draws
``r`` then every entry of ``pvec``/``mvec`` independently, redrawing shapes
that would leave no summation index.
"""

from __future__ import annotations

import itertools
import random
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterator, Mapping

import yaml

from .params import INT_FIELDS, RATIONAL_FIELDS, VECTOR_FIELDS, ParamPoint, coerce_param

_RANGE_RE = re.compile(r"^\s*([+-]?\d+)\s*\.\.\s*([+-]?\d+)\s*$")


class SpecError(ValueError):
    pass


def load_document(path: str | Path) -> dict:
    """Read a YAML (or JSON, which is valid YAML) configuration document."""
    with open(path, encoding="utf-8") as fh:
        doc = yaml.safe_load(fh)
    if doc is None:
        return {}
    if not isinstance(doc, dict):
        raise SpecError(f"{path}: top level must be a mapping")
    return doc


def parse_range(text: str) -> range | None:
    m = _RANGE_RE.match(text)
    if not m:
        return None
    lo, hi = int(m.group(1)), int(m.group(2))
    return range(lo, hi + 1)


def _values_for(name: str, spec: Any) -> list:
    if isinstance(spec, str):
        rng = parse_range(spec)
        if rng is not None:
            if name not in INT_FIELDS and name not in RATIONAL_FIELDS:
                raise SpecError(f"integer range not meaningful for {name!r}")
            return [coerce_param(name, v) for v in rng]
        return [coerce_param(name, spec)]
    if isinstance(spec, (list, tuple)):
        if name in VECTOR_FIELDS and spec and all(isinstance(v, int) for v in spec):
            # a bare list of ints is a single vector, not a list of scalars
            return [coerce_param(name, spec)]
        return [coerce_param(name, v) for v in spec]
    if isinstance(spec, (int, Fraction)):
        return [coerce_param(name, spec)]
    raise SpecError(f"cannot read values for {name!r} from {spec!r}")


def _int_choices(spec: Any, what: str) -> list[int]:
    if isinstance(spec, int):
        return [spec]
    if isinstance(spec, str):
        rng = parse_range(spec)
        if rng is None:
            return [int(spec)]
        return list(rng)
    if isinstance(spec, (list, tuple)):
        return [int(v) for v in spec]
    raise SpecError(f"bad {what} specification: {spec!r}")


def conjecture_shapes(r_values, p_values, m_values) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every (pvec, mvec) with len(pvec) = r + 1, len(mvec) = r; degenerate weight-0 shapes skipped."""
    for r in r_values:
        for pvec in itertools.product(p_values, repeat=r + 1):
            for mvec in itertools.product(m_values, repeat=r):
                if sum(pvec) + sum(mvec) + r - 1 >= 1:
                    yield tuple(pvec), tuple(mvec)


def _shape_values(spec: Mapping) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    r_vals = _int_choices(spec.get("r", 1), "shape.r")
    p_vals = _int_choices(spec.get("p", 1), "shape.p")
    m_vals = _int_choices(spec.get("m", 0), "shape.m")
    return list(conjecture_shapes(r_vals, p_vals, m_vals))


def expand_grid(grid: Mapping[str, Any]) -> list[ParamPoint]:
    """All points of a grid document, in deterministic enumeration order."""
    axes: list[tuple[str, list]] = []
    for name, spec in grid.items():
        if name == "shape":
            axes.append(("shape", _shape_values(spec)))
        else:
            axes.append((name, _values_for(name, spec)))
    if not axes:
        return []
    points = []
    for combo in itertools.product(*(vals for _, vals in axes)):
        values: dict[str, Any] = {}
        for (name, _), v in zip(axes, combo):
            if name == "shape":
                values["pvec"], values["mvec"] = v
            else:
                values[name] = v
        points.append(ParamPoint.from_mapping(values))
    return points


class Sampler:
    """Draws random ParamPoints from a sampler document with a private RNG."""

    def __init__(self, spec: Mapping[str, Any], seed: int):
        self.spec = dict(spec)
        self.rng = random.Random(seed)
        for name in self.spec:
            if name != "shape" and name not in INT_FIELDS + RATIONAL_FIELDS + VECTOR_FIELDS + ("selector",):
                raise SpecError(f"unknown sampler key {name!r}")

    def _draw(self, name: str, spec: Any):
        rng = self.rng
        if name == "shape":
            r_vals = _int_choices(spec.get("r", 1), "shape.r")
            p_vals = _int_choices(spec.get("p", 1), "shape.p")
            m_vals = _int_choices(spec.get("m", 0), "shape.m")
            if not any(True for _ in conjecture_shapes(r_vals, p_vals, m_vals)):
                raise SpecError("shape sampler admits only degenerate shapes")
            while True:
                r = rng.choice(r_vals)
                pvec = tuple(rng.choice(p_vals) for _ in range(r + 1))
                mvec = tuple(rng.choice(m_vals) for _ in range(r))
                # weight-0 shapes have no summation index; redraw
                if sum(pvec) + sum(mvec) + r - 1 >= 1:
                    return pvec, mvec
        if isinstance(spec, Mapping):
            num = rng.choice(_int_choices(spec["num"], f"{name}.num"))
            den = rng.choice([d for d in _int_choices(spec.get("den", 1), f"{name}.den") if d != 0])
            return coerce_param(name, Fraction(num, den))
        return rng.choice(_values_for(name, spec))

    def sample(self) -> ParamPoint:
        values: dict[str, Any] = {}
        for name, spec in self.spec.items():
            v = self._draw(name, spec)
            if name == "shape":
                values["pvec"], values["mvec"] = v
            else:
                values[name] = v
        return ParamPoint.from_mapping(values)
