"""Invariant checks over random corpora and scenario grids.

Every check reduces an instance to a nonnegative residual; a check passes
when its residual is at most its tolerance. Default tolerances are 1e-10
for quantities that pass through the quantum layer (variances, oracle
sums) and 1e-12 for the purely algebraic identities between bounds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .evaluate import amplitudes_for
from .fileio import format_matrix, format_state
from .moments import (
    expectation,
    product_decomposition_check,
    triple_decomposition_check,
    variance,
)
from .pair_bounds import PairContext, bound_I, bound_I1_prime, bound_S, chain_S
from .scenarios import get_scenario, random_instance
from .states import QuantumState
from .triple_bounds import AXES, TripleContext, bound_M, chain_M, yu_triple_bound

STATE_TOL = 1e-10
ALGEBRA_TOL = 1e-12

DEFAULT_TOLERANCES = {
    "variance_expectation": STATE_TOL,
    "amplitude_norm": STATE_TOL,
    "oracle_equivalence": STATE_TOL,
    "triple_oracle": STATE_TOL,
}


def s_chain_decrements(ctx: PairContext, chain=None) -> float:
    """Largest mismatch between S-chain steps and their single-defect decrements."""
    chain = chain_S(ctx) if chain is None else chain
    x, y = ctx.xs, ctx.ys
    expected = [-((x[p - 1] * y[q - 1] - x[q - 1] * y[p - 1]) ** 2) for p, q in chain.coords[1:]]
    return float(np.max(np.abs(chain.steps() - expected)))


def m_chain_decrements(ctx: TripleContext, axis: str, chain=None) -> float:
    """Largest mismatch between M-chain steps and ``scale_t^2 * (S step)``."""
    chain = chain_M(ctx, axis) if chain is None else chain
    scale, pair = ctx.axis_parts(axis)
    s = chain_S(pair)
    # within a t-block each step is the S-chain step; a block opens with S21 - S10
    s_steps = np.diff(s.values)
    s_steps_block = np.concatenate(([s.values[1] - s.values[0]], s_steps[1:]))
    expected = (scale[:, None] ** 2 * s_steps_block[None, :]).reshape(-1)
    return float(np.max(np.abs(chain.steps() - expected)))


def pair_residuals(ctx: PairContext, var_a: float, var_b: float) -> dict[str, float]:
    x, y = ctx.xs, ctx.ys
    n = ctx.n
    chain = chain_S(ctx)
    product = ctx.product()
    dot_sq = float(np.dot(x, y)) ** 2
    i_values = [bound_I(ctx, d) for d in range(1, n + 1)]
    out = {
        "oracle_equivalence": product_decomposition_check(x, y, var_a, var_b),
        "s_chain_monotone": chain.max_violation(),
        "s_chain_decrements": s_chain_decrements(ctx, chain),
        "s_chain_direct": max(
            abs(v - bound_S(ctx, p, q)) for (p, q), v in zip(chain.coords, chain.values)
        ),
        "identity_embedding": max(
            [abs(chain["S10"] - i_values[0])]
            + [abs(bound_S(ctx, p, p - 1) - i_values[p - 1]) for p in range(2, n + 1)]
        ),
        "terminal_I": abs(i_values[-1] - dot_sq),
        "nonnegativity": max(0.0, dot_sq - float(chain.values.min())),
        "below_product": max(0.0, float(chain.values.max()) - product, max(i_values) - product),
    }
    # I_{d+1} - I_d = -sum_{i<=d} (x_i y_{d+1} - x_{d+1} y_i)^2
    rec = 0.0
    for d in range(1, n):
        step = -sum((x[i] * y[d] - x[d] * y[i]) ** 2 for i in range(d))
        rec = max(rec, abs(i_values[d] - i_values[d - 1] - step))
    out["I_recursion"] = rec
    if n >= 3:
        i1p = bound_I1_prime(ctx)
        out["refined_gap_identity"] = abs(i_values[0] - i1p - y[0] ** 2 * (x[1] - x[2]) ** 2)
        out["below_product"] = max(out["below_product"], i1p - product)
    return out


def triple_residuals(ctx: TripleContext, variances: Sequence[float]) -> dict[str, float]:
    head = ctx.product()
    n = ctx.n
    out = {
        "triple_oracle": triple_decomposition_check(ctx.xs, ctx.ys, ctx.zs, *variances),
        "yu_d1": abs(yu_triple_bound(*ctx.pairs(), 1) - head),
    }
    mono = dec = direct = term = rng = 0.0
    for axis in AXES:
        chain = chain_M(ctx, axis)
        scale, pair = ctx.axis_parts(axis)
        mono = max(mono, chain.max_violation())
        dec = max(dec, m_chain_decrements(ctx, axis, chain))
        for k in (0, 1, len(chain) - 1):
            direct = max(direct, abs(chain.values[k] - bound_M(ctx, *chain.coords[k], axis)))
        end = bound_M(ctx, n, n, n - 1, axis)
        term = max(term, abs(end - float(np.dot(scale, scale)) * float(np.dot(pair.xs, pair.ys)) ** 2))
        rng = max(rng, float(chain.values.max()) - head, -float(chain.values.min()), 0.0)
    out.update(
        m_chain_monotone=mono,
        m_chain_decrements=dec,
        m_chain_direct=direct,
        terminal_identity=term,
        m_range=rng,
    )
    return out


def state_residuals(state: QuantumState, operators, amps) -> dict[str, float]:
    out = {"variance_expectation": 0.0, "amplitude_norm": 0.0, "amplitude_length": 0.0}
    want = state.dim if state.is_pure else state.dim**2
    for u, a in zip(operators, amps):
        var = variance(u, state)
        out["variance_expectation"] = max(
            out["variance_expectation"], abs(var - (1 - abs(expectation(u, state)) ** 2))
        )
        out["amplitude_norm"] = max(out["amplitude_norm"], abs(float(np.dot(a, a)) - var))
        out["amplitude_length"] = max(out["amplitude_length"], float(a.shape[0] != want))
    return out


def instance_residuals(state: QuantumState, operators) -> dict[str, float]:
    amps = amplitudes_for(state, operators)
    variances = [variance(u, state) for u in operators]
    out = state_residuals(state, operators, amps)
    out.update(pair_residuals(PairContext(amps[0], amps[1]), *variances[:2]))
    if len(operators) >= 3:
        out.update(triple_residuals(TripleContext(*amps[:3]), variances[:3]))
    return out


@dataclass
class CheckSummary:
    name: str
    tol: float
    worst: float = 0.0
    failures: int = 0
    count: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class VerificationReport:
    checks: dict[str, CheckSummary] = field(default_factory=dict)
    instances: int = 0
    failing: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def record(self, residuals: dict[str, float], tol: float | None, describe) -> None:
        self.instances += 1
        bad = []
        for name, value in residuals.items():
            limit = tol if tol is not None else DEFAULT_TOLERANCES.get(name, ALGEBRA_TOL)
            summary = self.checks.setdefault(name, CheckSummary(name, limit))
            summary.count += 1
            summary.worst = max(summary.worst, value)
            if not value <= limit:
                summary.failures += 1
                bad.append(name)
        if bad and len(self.failing) < 10:
            self.failing.append({**describe(), "failed": bad})

    def lines(self) -> list[str]:
        out = []
        for c in self.checks.values():
            status = "PASS" if c.passed else "FAIL"
            out.append(
                f"{status} {c.name}: worst residual {c.worst:.3e} (tol {c.tol:.1e}), "
                f"{c.failures}/{c.count} failing"
            )
        return out


def _describe(state, operators, **extra):
    def build():
        return {
            **extra,
            "state": format_state(state),
            "operators": [format_matrix(u) for u in operators],
        }

    return build


def verify_random(
    dims: Iterable[int],
    trials: int,
    seed: int,
    n_ops: int = 3,
    mixed: bool = False,
    tol: float | None = None,
) -> VerificationReport:
    """Run every invariant on ``trials`` seeded random instances per dimension."""
    report = VerificationReport()
    rng = np.random.default_rng(seed)
    for n in dims:
        for trial in range(trials):
            state, ops = random_instance(n, n_ops, rng, mixed=mixed)
            report.record(
                instance_residuals(state, ops), tol, _describe(state, ops, n=n, trial=trial, seed=seed)
            )
    return report


def verify_scenario(
    scenario_id: str, grid: Iterable[float], tol: float | None = None
) -> VerificationReport:
    """Run every invariant at each grid point of a scenario."""
    scenario = get_scenario(scenario_id)
    report = VerificationReport()
    for theta in grid:
        state = scenario.state_at(float(theta))
        report.record(
            instance_residuals(state, scenario.operators),
            tol,
            _describe(state, scenario.operators, scenario=scenario_id, theta=float(theta)),
        )
    return report


def dump_failures(report: VerificationReport, path) -> None:
    """Write failing instances as JSON lines for replay."""
    with open(path, "w") as fh:
        for item in report.failing:
            fh.write(json.dumps(item, sort_keys=True) + "\n")
