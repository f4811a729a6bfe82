"""Labelled descending sequences of bound values."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np
import numpy.typing as npt


@dataclass(frozen=True, eq=False)
class BoundChain:
    """Ordered bound values, largest first.

    ``coords`` holds the chain coordinate of each entry, e.g. ``(3, 1)`` for
    ``S31`` or ``(1, 2, 1)`` for ``M121``.
    """

    labels: tuple[str, ...]
    coords: tuple[tuple[int, ...], ...]
    values: npt.NDArray[np.float64]

    def __post_init__(self):
        if not len(self.labels) == len(self.coords) == len(self.values):
            raise ValueError("labels, coords and values must have equal length")
        self.values.setflags(write=False)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[tuple[str, float]]:
        return iter(zip(self.labels, self.values.tolist()))

    def __getitem__(self, label: str) -> float:
        return float(self.values[self.labels.index(label)])

    def steps(self) -> npt.NDArray[np.float64]:
        """Consecutive differences ``value[k+1] - value[k]``."""
        return np.diff(self.values)

    def max_violation(self) -> float:
        """Largest increase between consecutive entries (0 for a descending chain)."""
        if len(self) < 2:
            return 0.0
        return float(max(0.0, self.steps().max()))

    def is_monotone(self, tol: float = 1e-12) -> bool:
        return self.max_violation() <= tol
