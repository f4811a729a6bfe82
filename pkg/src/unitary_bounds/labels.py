"""Canonical names for bound values and parsing of bound selectors.

Canonical names double as CSV column names: ``product``, ``I1prime``,
``I2``, ``S31``, ``M121z``, ``M121`` (axis maximum), ``yu_d2``. Indices of
10 or more switch to the parenthesised form, e.g. ``S(10,3)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import CoordinateError


def _join(prefix: str, idx: tuple[int, ...], suffix: str = "") -> str:
    if all(0 <= i <= 9 for i in idx):
        return prefix + "".join(map(str, idx)) + suffix
    inner = ",".join(map(str, idx)) + ("," + suffix if suffix else "")
    return f"{prefix}({inner})"


def label_I(d: int) -> str:
    return _join("I", (d,))


def label_S(p: int, q: int) -> str:
    return _join("S", (p, q))


def label_M(t: int, p: int, q: int, axis: Optional[str] = None) -> str:
    return _join("M", (t, p, q), axis or "")


def label_yu(d: int) -> str:
    return f"yu_d{d}"


@dataclass(frozen=True)
class BoundSpec:
    """A parsed bound selector.

    ``family`` is one of ``product``, ``I``, ``I1prime``, ``S``, ``M`` or
    ``yu``; ``index`` holds its integer coordinates and ``axis`` is set only
    for a single-axis ``M`` bound.
    """

    family: str
    index: tuple[int, ...] = ()
    axis: Optional[str] = None

    @property
    def operators(self) -> int:
        """Number of operators the bound needs."""
        return 3 if self.family in ("M", "yu") else 2

    @property
    def name(self) -> str:
        if self.family == "product":
            return "product"
        if self.family == "I1prime":
            return "I1prime"
        if self.family == "I":
            return label_I(*self.index)
        if self.family == "S":
            return label_S(*self.index)
        if self.family == "M":
            return label_M(*self.index, self.axis)
        return label_yu(*self.index)


_PAREN = re.compile(r"^([ISM]|yu_?d?)\(([\d,\sxyz]+)\)$")
_COMPACT = re.compile(r"^(I|S|M|yu_?d?)(\d+)([xyz]?)$")


def parse_bound(text: str) -> BoundSpec:
    """Parse a selector such as ``I1'``, ``I2``, ``S(3,1)``, ``M121z``, ``yu2``."""
    s = text.strip()
    if s.lower() in ("product", "prod"):
        return BoundSpec("product")
    if s in ("I1'", "I1p", "I1prime", "I1_prime"):
        return BoundSpec("I1prime")
    m = _PAREN.match(s)
    if m:
        family = m.group(1)
        parts = [t.strip() for t in m.group(2).split(",") if t.strip()]
        axis = None
        if parts and parts[-1] in ("x", "y", "z"):
            axis = parts.pop()
        try:
            index = tuple(int(t) for t in parts)
        except ValueError:
            raise CoordinateError(f"cannot parse bound selector {text!r}") from None
    else:
        m = _COMPACT.match(s)
        if not m:
            raise CoordinateError(f"cannot parse bound selector {text!r}")
        family, digits, axis = m.group(1), m.group(2), m.group(3) or None
        index = (int(digits),) if family.startswith(("I", "yu")) else tuple(int(c) for c in digits)
    if family.startswith("yu"):
        family = "yu"
    arity = {"I": 1, "S": 2, "M": 3, "yu": 1}[family]
    if len(index) != arity:
        raise CoordinateError(f"{family} bound needs {arity} index value(s), got {text!r}")
    if axis is not None and family != "M":
        raise CoordinateError(f"only M bounds take an axis, got {text!r}")
    return BoundSpec(family, index, axis)
