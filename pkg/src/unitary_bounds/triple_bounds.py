"""Lower bounds on the product of three unitary variances.

``M_tpq`` along axis ``z`` starts from the full triple product and, for
each ``z_r`` in turn, replaces the pair product ``S_10`` of ``(x, y)`` by a
smaller member of the ``(x, y)`` S-chain. Axes ``x`` and ``y`` do the same
with the scale and pair roles rotated:

====  =====  =======
axis  scale  pair
====  =====  =======
x     x      (y, z)
y     y      (x, z)
z     z      (x, y)
====  =====  =======
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .chain import BoundChain
from .errors import CoordinateError, DimensionError
from .labels import label_M
from .pair_bounds import (
    FloatArray,
    PairContext,
    as_amplitudes,
    bound_I,
    bound_S,
    chain_S,
    check_pq,
    s_coordinates,
)
from .search import Exhaustive, PermutationMax, Strategy, maximize

AXES = ("x", "y", "z")
# preference order on exact ties when taking the maximum over axes
_TIE_ORDER = ("z", "y", "x")
SENTINEL = (0, 1, 0)


@dataclass(frozen=True, eq=False)
class TripleContext:
    """Amplitude vectors of three operators on the same state."""

    xs: FloatArray
    ys: FloatArray
    zs: FloatArray

    def __post_init__(self):
        vecs = [as_amplitudes(v) for v in (self.xs, self.ys, self.zs)]
        if len({v.shape for v in vecs}) != 1:
            raise DimensionError("amplitude vectors must have equal length")
        for name, v in zip(("xs", "ys", "zs"), vecs):
            object.__setattr__(self, name, v)

    @property
    def n(self) -> int:
        return self.xs.shape[0]

    def product(self) -> float:
        return float(np.dot(self.xs, self.xs) * np.dot(self.ys, self.ys) * np.dot(self.zs, self.zs))

    def axis_parts(self, axis: str) -> tuple[FloatArray, PairContext]:
        """Scale vector and pair context entering ``M^(axis)``."""
        if axis == "z":
            return self.zs, PairContext(self.xs, self.ys)
        if axis == "x":
            return self.xs, PairContext(self.ys, self.zs)
        if axis == "y":
            return self.ys, PairContext(self.xs, self.zs)
        raise CoordinateError(f"axis must be one of x, y, z; got {axis!r}")

    def pairs(self) -> tuple[PairContext, PairContext, PairContext]:
        """Pair contexts for the operator pairs (A, B), (B, C), (A, C)."""
        return (
            PairContext(self.xs, self.ys),
            PairContext(self.ys, self.zs),
            PairContext(self.xs, self.zs),
        )

    def permuted(self, px, py, pz) -> "TripleContext":
        return TripleContext(self.xs[list(px)], self.ys[list(py)], self.zs[list(pz)])


def check_tpq(n: int, t: int, p: int, q: int) -> None:
    if (t, p, q) == SENTINEL:
        return
    if not 1 <= t <= n:
        raise CoordinateError(f"t must satisfy 1 <= t <= {n}, got {t}")
    if (p, q) == (1, 0):
        raise CoordinateError("(p, q) = (1, 0) is only valid in the sentinel (0, 1, 0)")
    check_pq(n, p, q)


def bound_M(ctx: TripleContext, t: int, p: int, q: int, axis: str = "z") -> float:
    """Single-axis bound ``M_tpq^(axis)``; ``(0, 1, 0)`` gives the full product."""
    check_tpq(ctx.n, t, p, q)
    scale, pair = ctx.axis_parts(axis)
    head = ctx.product()
    if (t, p, q) == SENTINEL:
        return head
    s10 = pair.product()
    s_end = bound_S(pair, pair.n, pair.n - 1)
    s2 = scale**2
    return head + float(s2[: t - 1].sum()) * (s_end - s10) + float(s2[t - 1]) * (
        bound_S(pair, p, q) - s10
    )


def best_axis(ctx: TripleContext, t: int, p: int, q: int) -> tuple[str, float]:
    """Axis attaining ``max_axis M_tpq^(axis)``; exact ties prefer z, then y, then x."""
    best = None
    for axis in _TIE_ORDER:
        value = bound_M(ctx, t, p, q, axis)
        if best is None or value > best[1]:
            best = (axis, value)
    return best


def bound_M_max(ctx: TripleContext, t: int, p: int, q: int) -> float:
    """``M_tpq``: the maximum of the three single-axis bounds."""
    return best_axis(ctx, t, p, q)[1]


@lru_cache(maxsize=None)
def m_coordinates(n: int) -> tuple[tuple[int, int, int], ...]:
    """Chain order: the sentinel, then ``t`` ascending with S-chain order inside."""
    pq = s_coordinates(n)[1:]
    return (SENTINEL,) + tuple((t, p, q) for t in range(1, n + 1) for p, q in pq)


@lru_cache(maxsize=None)
def _m_labels(n: int, axis: str) -> tuple[str, ...]:
    return tuple(label_M(*c, axis) for c in m_coordinates(n))


def chain_M(ctx: TripleContext, axis: str = "z") -> BoundChain:
    """``M^(axis)`` over every coordinate, sentinel first."""
    if ctx.n < 2:
        raise CoordinateError("M-chain requires N >= 2")
    scale, pair = ctx.axis_parts(axis)
    s_chain = chain_S(pair).values
    s10, s_end = s_chain[0], s_chain[-1]
    s2 = scale**2
    earlier = np.concatenate(([0.0], np.cumsum(s2)[:-1]))
    head = ctx.product()
    body = head + earlier[:, None] * (s_end - s10) + s2[:, None] * (s_chain[None, 1:] - s10)
    coords = m_coordinates(ctx.n)
    values = np.concatenate(([head], body.reshape(-1)))
    return BoundChain(_m_labels(ctx.n, axis), coords, values)


def yu_triple_bound(
    ctx_ab: PairContext, ctx_bc: PairContext, ctx_ac: PairContext, d: int
) -> float:
    """Geometric-mean comparator ``sqrt(I_d(A,B) * I_d(B,C) * I_d(A,C))``."""
    if not ctx_ab.n == ctx_bc.n == ctx_ac.n:
        raise DimensionError("pair contexts must have equal length")
    value = bound_I(ctx_ab, d) * bound_I(ctx_bc, d) * bound_I(ctx_ac, d)
    # each I_d is >= (sum x_i y_i)^2 >= 0, so only rounding can push this below 0
    return float(np.sqrt(max(value, 0.0)))


def perm_bound_M(
    ctx: TripleContext, t: int, p: int, q: int, strategy: Strategy = Exhaustive()
) -> PermutationMax:
    """Maximise ``M_tpq`` over relabelings of ``x``, ``y`` and ``z`` and over axes.

    The reported ``axis`` is the one attaining the maximum at the winning
    permutation triple.
    """
    check_tpq(ctx.n, t, p, q)
    result = maximize(
        lambda perms: bound_M_max(ctx.permuted(*perms), t, p, q), ctx.n, 3, strategy
    )
    axis, _ = best_axis(ctx.permuted(*result.permutations), t, p, q)
    return PermutationMax(
        result.value, result.permutations, result.baseline, result.evaluations, axis
    )
