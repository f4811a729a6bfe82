"""Maximisation of a bound over relabelings of its amplitude vectors.

An objective receives a tuple of ``k`` permutations of ``range(n)`` (one
per amplitude vector) and returns a bound value. Ties are broken towards
the lexicographically smallest permutation tuple, so every search is
deterministic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .errors import SearchCapError

EXHAUSTIVE_CAP = 10**7

Perms = tuple[tuple[int, ...], ...]
Objective = Callable[[Perms], float]


@dataclass(frozen=True)
class Exhaustive:
    """Enumerate every permutation tuple (at most ``EXHAUSTIVE_CAP`` of them)."""


@dataclass(frozen=True)
class Sampled:
    """Seeded random sampling followed by adjacent-transposition hill climbing."""

    samples: int = 1000
    seed: int = 0


Strategy = Union[Exhaustive, Sampled]


@dataclass(frozen=True)
class PermutationMax:
    value: float
    permutations: Perms
    baseline: float
    evaluations: int
    axis: str | None = None

    @property
    def improvement(self) -> float:
        """Gain over the identity labelling."""
        return self.value - self.baseline


def search_space_size(n: int, k: int) -> int:
    return math.factorial(n) ** k


def _better(value, perms, best_value, best_perms) -> bool:
    return value > best_value or (value == best_value and perms < best_perms)


def maximize(objective: Objective, n: int, k: int, strategy: Strategy) -> PermutationMax:
    identity = tuple(tuple(range(n)) for _ in range(k))
    baseline = objective(identity)
    if isinstance(strategy, Exhaustive):
        size = search_space_size(n, k)
        if size > EXHAUSTIVE_CAP:
            raise SearchCapError(
                f"exhaustive search over (N!)^{k} = {size} labelings exceeds the cap "
                f"{EXHAUSTIVE_CAP}; use the sampled strategy instead"
            )
        best_value, best_perms = -math.inf, identity
        count = 0
        for perms in itertools.product(itertools.permutations(range(n)), repeat=k):
            value = objective(perms)
            count += 1
            if value > best_value:  # enumeration is lexicographic, so first max wins
                best_value, best_perms = value, perms
        return PermutationMax(best_value, best_perms, baseline, count)
    if isinstance(strategy, Sampled):
        return _sampled(objective, n, k, strategy, identity, baseline)
    raise TypeError(f"unknown strategy {strategy!r}")


def _sampled(objective, n, k, strategy, identity, baseline) -> PermutationMax:
    if strategy.samples < 0:
        raise ValueError("samples must be nonnegative")
    rng = np.random.default_rng(strategy.seed)
    best_value, best_perms = baseline, identity
    count = 1
    for _ in range(strategy.samples):
        perms = tuple(tuple(int(v) for v in rng.permutation(n)) for _ in range(k))
        value = objective(perms)
        count += 1
        if _better(value, perms, best_value, best_perms):
            best_value, best_perms = value, perms
    # steepest-ascent over adjacent transpositions in any one permutation
    while True:
        step_value, step_perms = best_value, best_perms
        for slot in range(k):
            for pos in range(n - 1):
                perm = list(best_perms[slot])
                perm[pos], perm[pos + 1] = perm[pos + 1], perm[pos]
                cand = best_perms[:slot] + (tuple(perm),) + best_perms[slot + 1 :]
                value = objective(cand)
                count += 1
                if value > step_value or (value == step_value > best_value and cand < step_perms):
                    step_value, step_perms = value, cand
        if step_value <= best_value:
            break
        best_value, best_perms = step_value, step_perms
    return PermutationMax(best_value, best_perms, baseline, count)
