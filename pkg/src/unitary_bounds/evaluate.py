"""Evaluate a list of bound selectors on a state and two or three operators."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import CoordinateError, DimensionError
from .labels import BoundSpec, parse_bound
from .moments import amplitude_vector, expectation, variance
from .pair_bounds import PairContext, bound_I, bound_I1_prime, bound_S
from .states import QuantumState
from .triple_bounds import TripleContext, best_axis, bound_M, yu_triple_bound

DEFAULT_PAIR_BOUNDS = ("product", "I1prime", "I2")
DEFAULT_TRIPLE_BOUNDS = ("product", "M121z", "M131z", "M132z", "M121", "yu_d2", "yu_d3")


@dataclass
class Evaluation:
    dim: int
    length: int
    expectations: list[complex]
    variances: list[float]
    amplitudes: list[np.ndarray]
    bounds: dict[str, float] = field(default_factory=dict)
    axes: dict[str, str] = field(default_factory=dict)

    @property
    def product(self) -> float:
        return float(np.prod(self.variances))


def amplitudes_for(state: QuantumState, operators: Sequence, tol: float = 1e-10):
    return [amplitude_vector(u, state, tol) for u in operators]


def pair_context(amps) -> PairContext:
    return PairContext(amps[0], amps[1])


def triple_context(amps) -> TripleContext:
    if len(amps) < 3:
        raise CoordinateError("three-operator bounds need three operators")
    return TripleContext(amps[0], amps[1], amps[2])


def evaluate_spec(spec: BoundSpec, amps) -> tuple[float, str | None]:
    """Value of one bound, plus the winning axis for an axis-maximised ``M``."""
    if spec.family == "product":
        return float(np.prod([np.dot(a, a) for a in amps])), None
    if spec.family in ("I", "I1prime", "S"):
        ctx = pair_context(amps)
        if spec.family == "I":
            return bound_I(ctx, *spec.index), None
        if spec.family == "S":
            return bound_S(ctx, *spec.index), None
        return bound_I1_prime(ctx), None
    ctx = triple_context(amps)
    if spec.family == "yu":
        return yu_triple_bound(*ctx.pairs(), *spec.index), None
    if spec.axis is not None:
        return bound_M(ctx, *spec.index, spec.axis), None
    axis, value = best_axis(ctx, *spec.index)
    return value, axis


def evaluate(
    state: QuantumState,
    operators: Sequence,
    selectors: Sequence[str] | None = None,
    tol: float = 1e-10,
) -> Evaluation:
    if len(operators) not in (2, 3):
        raise DimensionError(f"expected 2 or 3 operators, got {len(operators)}")
    if selectors is None:
        selectors = DEFAULT_PAIR_BOUNDS if len(operators) == 2 else DEFAULT_TRIPLE_BOUNDS
    specs = [parse_bound(s) for s in selectors]
    amps = amplitudes_for(state, operators, tol)
    result = Evaluation(
        dim=state.dim,
        length=amps[0].shape[0],
        expectations=[expectation(u, state) for u in operators],
        variances=[variance(u, state, tol) for u in operators],
        amplitudes=amps,
    )
    for spec in specs:
        if spec.operators > len(operators):
            raise CoordinateError(f"{spec.name} needs three operators")
        value, axis = evaluate_spec(spec, amps)
        result.bounds[spec.name] = value
        if axis is not None:
            result.axes[spec.name] = axis
    return result
