"""Lower bounds on the product of two unitary variances.

All bounds are functions of a pair of nonnegative amplitude vectors
``(x, y)`` (see :mod:`unitary_bounds.moments`). Index arguments follow the
1-based convention of the bound families: ``I_d`` for ``1 <= d <= N`` and
``S_pq`` for ``(p, q) = (1, 0)`` or ``2 <= p <= N, 1 <= q < p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import numpy.typing as npt

from .chain import BoundChain
from .errors import CoordinateError, DimensionError
from .labels import label_S
from .search import Exhaustive, PermutationMax, Strategy, maximize

FloatArray = npt.NDArray[np.float64]


def as_amplitudes(v: npt.ArrayLike) -> FloatArray:
    if isinstance(v, np.ndarray) and v.dtype == np.float64 and not v.flags.writeable:
        # already validated by an earlier context or by amplitude_vector
        if v.ndim == 1 and v.size:
            return v
    arr = np.array(v, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise DimensionError(f"amplitude vector must be non-empty and 1-D, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise DimensionError("amplitude entries must be finite and nonnegative")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PairContext:
    """Amplitude vectors of two operators on the same state."""

    xs: FloatArray
    ys: FloatArray

    def __post_init__(self):
        xs = as_amplitudes(self.xs)
        ys = as_amplitudes(self.ys)
        if xs.shape != ys.shape:
            raise DimensionError(f"length mismatch {xs.shape[0]} vs {ys.shape[0]}")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    @property
    def n(self) -> int:
        return self.xs.shape[0]

    def product(self) -> float:
        """``|x|^2 |y|^2``, the product of the two variances."""
        return float(np.dot(self.xs, self.xs) * np.dot(self.ys, self.ys))

    def defects(self) -> FloatArray:
        """Matrix ``D[j, i] = (x_j y_i - x_i y_j)^2`` (0-based)."""
        cross = np.outer(self.xs, self.ys)
        return (cross - cross.T) ** 2

    def permuted(self, px, py) -> "PairContext":
        """Relabel ``x_i -> x_{px(i)}`` and ``y_i -> y_{py(i)}``."""
        return PairContext(self.xs[list(px)], self.ys[list(py)])


def _check_d(ctx: PairContext, d: int) -> None:
    if not 1 <= d <= ctx.n:
        raise CoordinateError(f"d must satisfy 1 <= d <= {ctx.n}, got {d}")


def check_pq(n: int, p: int, q: int) -> None:
    if (p, q) == (1, 0):
        return
    if not (2 <= p <= n and 1 <= q <= p - 1):
        raise CoordinateError(
            f"(p, q) must be (1, 0) or satisfy 2 <= p <= {n}, 1 <= q < p; got ({p}, {q})"
        )


def bound_I(ctx: PairContext, d: int) -> float:
    """Bound ``I_d``: diagonal terms, unpaired cross terms beyond ``d``, and
    the ``2 x_i y_i x_j y_j`` products inside the leading ``d`` block."""
    _check_d(ctx, d)
    x2, y2 = ctx.xs**2, ctx.ys**2
    xy = ctx.xs * ctx.ys
    n = ctx.n
    i, j = np.triu_indices(n, k=1)
    outside = j >= d  # 0-based j >= d  <=>  1-based j > d
    total = float(np.sum(x2 * y2))
    total += float(np.sum(x2[i[outside]] * y2[j[outside]] + x2[j[outside]] * y2[i[outside]]))
    inside = ~outside
    total += float(np.sum(2.0 * xy[i[inside]] * xy[j[inside]]))
    return total


def bound_I1_prime(ctx: PairContext) -> float:
    """Bound ``I_1'`` for ``N >= 3``.

    Equal to the full product with the ``y_1^2 (x_2^2 + x_3^2)`` terms
    replaced by ``2 y_1^2 x_2 x_3``.
    """
    if ctx.n < 3:
        raise CoordinateError("I1' requires N >= 3")
    x, y = ctx.xs, ctx.ys
    x2, y2 = x**2, y**2
    n = ctx.n
    total = float(np.sum(x2 * y2))
    # sum over j != 1, i != j of x_i^2 y_j^2
    off = np.outer(x2, y2)
    np.fill_diagonal(off, 0.0)
    total += float(off[:, 1:].sum())
    total += float(y2[0] * x2[3:n].sum())
    total += float(2.0 * y2[0] * x[1] * x[2])
    return total


def bound_S(ctx: PairContext, p: int, q: int) -> float:
    """Refined bound ``S_pq``.

    The full product minus every defect ``(x_j y_i - x_i y_j)^2`` with
    ``i < j <= p - 1``, minus the first ``q`` defects of row ``p``.
    """
    check_pq(ctx.n, p, q)
    total = ctx.product()
    if (p, q) == (1, 0):
        return total
    D = ctx.defects()
    block = D[: p - 1, : p - 1]
    total -= float(np.triu(block, k=1).sum())
    total -= float(D[p - 1, :q].sum())
    return total


@lru_cache(maxsize=None)
def s_coordinates(n: int) -> tuple[tuple[int, int], ...]:
    """Chain order ``(1,0), (2,1), (3,1), (3,2), ..., (n, n-1)``."""
    return ((1, 0),) + tuple((p, q) for p in range(2, n + 1) for q in range(1, p))


@lru_cache(maxsize=None)
def _s_labels(n: int) -> tuple[str, ...]:
    return tuple(label_S(p, q) for p, q in s_coordinates(n))


def chain_S(ctx: PairContext) -> BoundChain:
    """All ``S_pq`` in descending-chain order.

    Each entry is evaluated from its own closed form, not by accumulating
    the previous entry, so consecutive differences can be checked against
    the single-defect decrements independently.
    """
    if ctx.n < 2:
        raise CoordinateError("S-chain requires N >= 2")
    coords = s_coordinates(ctx.n)
    full = ctx.product()
    D = ctx.defects()
    # lower-triangle row sums: before_row[p-1] = sum_{i<j<=p-1} D[j, i]
    lower = np.tril(D, k=-1)
    before_row = np.concatenate(([0.0], np.cumsum(lower.sum(axis=1))))
    values = [full]
    for p in range(2, ctx.n + 1):
        base = full - before_row[p - 1]
        row = np.cumsum(D[p - 1, : p - 1])
        values.extend((base - row).tolist())
    return BoundChain(_s_labels(ctx.n), coords, np.array(values))


def _i1_prime_literal(ctx: PairContext, px, py) -> float:
    # y index permuted by px, x indices by py in the AM-GM replacement term
    x1, y2p = ctx.xs[list(px)], ctx.ys[list(py)]
    total = float(np.sum(x1**2 * y2p**2))
    off = np.outer(x1**2, y2p**2)
    np.fill_diagonal(off, 0.0)
    total += float(off[:, 1:].sum())
    xl = ctx.xs[list(py)]
    yl = ctx.ys[px[0]] ** 2
    total += float(yl * (xl[3:] ** 2).sum())
    total += float(2.0 * yl * xl[1] * xl[2])
    return total


def perm_bound_I1_prime(
    ctx: PairContext,
    strategy: Strategy = Exhaustive(),
    convention: str = "consistent",
) -> PermutationMax:
    """Maximise ``I_1'`` over independent relabelings of ``x`` and ``y``.

    ``convention="consistent"`` applies the x-permutation to every x index
    and the y-permutation to every y index. ``"literal"`` swaps the two
    permutations inside the ``2 y_1^2 x_2 x_3`` term; it is kept for
    comparison only and is not guaranteed to stay below the product.
    """
    if ctx.n < 3:
        raise CoordinateError("I1' requires N >= 3")
    if convention == "consistent":
        def objective(perms):
            return bound_I1_prime(ctx.permuted(*perms))
    elif convention == "literal":
        def objective(perms):
            return _i1_prime_literal(ctx, *perms)
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return maximize(objective, ctx.n, 2, strategy)


def perm_bound_S(
    ctx: PairContext, p: int, q: int, strategy: Strategy = Exhaustive()
) -> PermutationMax:
    """Maximise ``S_pq`` over independent relabelings of ``x`` and ``y``."""
    check_pq(ctx.n, p, q)
    return maximize(lambda perms: bound_S(ctx.permuted(*perms), p, q), ctx.n, 2, strategy)
