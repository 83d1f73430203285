from __future__ import annotations

from dataclasses import dataclass, fields, replace
from fractions import Fraction
from typing import Any, Mapping, Optional

from ..numeric_core import Composition, format_rational, parse_rational

INT_FIELDS = ("n", "m", "r", "l", "j")
RATIONAL_FIELDS = ("x", "y", "z", "p", "a", "alpha")
VECTOR_FIELDS = ("k", "pvec", "mvec")
TEXT_FIELDS = ("selector",)


@dataclass(frozen=True)
class ParamPoint:
    """A point at which an identity is evaluated.

    ``p`` is rational because it doubles as the probability in Mneimneh's and
    Gencev's formulas; identities that use it as a shape parameter insist on an
    integer value. Unused fields stay ``None``.
    """

    n: Optional[int] = None
    x: Optional[Fraction] = None
    y: Optional[Fraction] = None
    z: Optional[Fraction] = None
    p: Optional[Fraction] = None
    m: Optional[int] = None
    r: Optional[int] = None
    l: Optional[int] = None  # noqa: E741
    j: Optional[int] = None
    a: Optional[Fraction] = None
    alpha: Optional[Fraction] = None
    k: Optional[tuple[int, ...]] = None
    pvec: Optional[tuple[int, ...]] = None
    mvec: Optional[tuple[int, ...]] = None
    selector: Optional[str] = None

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any]) -> "ParamPoint":
        known = {f.name for f in fields(cls)}
        unknown = set(values) - known
        if unknown:
            raise ValueError(f"unknown parameter(s): {', '.join(sorted(unknown))}")
        return cls(**{name: coerce_param(name, v) for name, v in values.items() if v is not None})

    def with_(self, **changes) -> "ParamPoint":
        return replace(self, **{k: coerce_param(k, v) for k, v in changes.items()})

    def to_dict(self) -> dict[str, str]:
        """Parameters as strings: rationals as ``a/b``, vectors as comma lists."""
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if v is None:
                continue
            if f.name in VECTOR_FIELDS:
                out[f.name] = ",".join(map(str, v))
            elif f.name in RATIONAL_FIELDS:
                out[f.name] = format_rational(v)
            else:
                out[f.name] = str(v)
        return out

    def __str__(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.to_dict().items())


def coerce_param(name: str, value: Any):
    if value is None:
        return None
    if name in INT_FIELDS:
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{name} must be an integer, got {value}")
            return int(value)
        if isinstance(value, bool):
            raise ValueError(f"{name} must be an integer")
        return int(value)
    if name in RATIONAL_FIELDS:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, str):
            return parse_rational(value)
        raise ValueError(f"{name} must be an exact rational, got {value!r}")
    if name in VECTOR_FIELDS:
        if isinstance(value, Composition):
            return value.parts
        if isinstance(value, str):
            value = [t for t in value.strip().strip("()[]").split(",") if t.strip()]
        if isinstance(value, int):
            value = [value]
        return tuple(int(v) for v in value)
    if name in TEXT_FIELDS:
        return str(value)
    raise ValueError(f"unknown parameter {name!r}")
