"""Bound values over a theta grid, one table per figure."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .evaluate import amplitudes_for, evaluate_spec
from .labels import parse_bound
from .scenarios import default_grid, get_scenario, scenario_vector

# figure id -> (scenario, bound columns, difference columns as (name, a, b))
FIGURES = {
    "fig1": ("ex1", ["I2", "I1prime"], [("diff_I1prime_minus_I2", "I1prime", "I2")]),
    "fig2": ("ex2", ["I2", "I1prime"], [("diff_I1prime_minus_I2", "I1prime", "I2")]),
    "fig4": ("ex3:3", ["I2", "I3", "S21", "S31", "S32"], []),
    "fig5": (
        "ex3:4",
        ["I2", "I3", "I4", "S21", "S31", "S32", "S41", "S42", "S43"],
        [],
    ),
    "fig6": (
        "ex4",
        ["M121z", "M131z", "M132z", "yu_d2", "yu_d3"],
        [("diff_M121z_minus_yu_d2", "M121z", "yu_d2")],
    ),
    "fig7": (
        "ex4",
        ["M121", "M131", "M132", "yu_d2", "yu_d3"],
        [("diff_M121_minus_yu_d2", "M121", "yu_d2")],
    ),
}

BOUND_SLACK = 1e-9


@dataclass
class SweepResult:
    """Columns of bound values sharing one parameter grid.

    ``bounds`` names the columns that are lower bounds on ``product``;
    other columns (differences, normalisation records) are informational.
    """

    parameter: str
    grid: np.ndarray
    columns: dict[str, np.ndarray] = field(default_factory=dict)
    bounds: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        for name, col in self.columns.items():
            col = np.asarray(col, dtype=float)
            if col.shape != self.grid.shape:
                raise ValueError(f"column {name!r} has {col.size} rows, grid has {self.grid.size}")
            self.columns[name] = col

    @property
    def header(self) -> list[str]:
        return [self.parameter, *self.columns]

    def bound_violations(self, slack: float = BOUND_SLACK) -> list[tuple[str, float]]:
        """``(column, theta)`` for every bound value above the product."""
        product = self.columns["product"]
        out = []
        for name in self.bounds:
            bad = np.nonzero(self.columns[name] > product + slack)[0]
            out.extend((name, float(self.grid[k])) for k in bad)
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header)
        cols = [self.grid, *self.columns.values()]
        for row in zip(*cols):
            writer.writerow([f"{v:.17g}" for v in row])
        return buf.getvalue()

    def write_csv(self, path: str | Path) -> None:
        Path(path).write_text(self.to_csv())

    @classmethod
    def from_csv(cls, text: str, bounds: list[str] | None = None) -> "SweepResult":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows:
            raise ValueError("empty CSV")
        header, body = rows[0], rows[1:]
        data = np.array([[float(v) for v in r] for r in body], dtype=float).reshape(len(body), len(header))
        columns = {name: data[:, k] for k, name in enumerate(header[1:], start=1)}
        return cls(header[0], data[:, 0], columns, list(bounds or []))


def sweep(figure: str, grid=None) -> SweepResult:
    """Evaluate the series of ``figure`` at every theta in ``grid``."""
    try:
        scenario_id, bound_names, diffs = FIGURES[figure]
    except KeyError:
        raise ValueError(f"unknown figure {figure!r}; choose from {', '.join(FIGURES)}") from None
    grid = default_grid() if grid is None else np.asarray(grid, dtype=float)
    scenario = get_scenario(scenario_id)
    specs = [parse_bound(b) for b in ["product", *bound_names]]
    table = {s.name: np.empty(grid.size) for s in specs}
    norm_sq = np.empty(grid.size)
    for k, theta in enumerate(grid):
        amps = amplitudes_for(scenario.state_at(float(theta)), scenario.operators)
        for spec in specs:
            table[spec.name][k], _ = evaluate_spec(spec, amps)
        raw = scenario_vector(scenario_id, float(theta))
        norm_sq[k] = float(np.vdot(raw, raw).real)
    for name, a, b in diffs:
        table[name] = table[a] - table[b]
    if scenario_id == "ex4":
        table["state_norm_sq"] = norm_sq
    return SweepResult("theta", grid, table, [parse_bound(b).name for b in bound_names])


def gnuplot_script(result: SweepResult, csv_name: str, title: str = "") -> str:
    """A gnuplot script that plots every column of ``csv_name`` against theta."""
    header = result.header
    plots = ", \\\n     ".join(
        f"'{csv_name}' skip 1 using 1:{k} with lines title '{name}'"
        for k, name in enumerate(header[1:], start=2)
        if name != "state_norm_sq"
    )
    return (
        "set datafile separator ','\n"
        f"set title '{title}'\n"
        f"set xlabel '{header[0]}'\n"
        "set key outside right\n"
        f"plot {plots}\n"
    )
