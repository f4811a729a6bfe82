"""State families and operator sets of the worked examples.

Scenario ids: ``ex1``, ``ex2``, ``ex3:<d>`` (``d >= 3``) and ``ex4``.
Seeded random instances use ``random:<n>`` and are built by
:func:`random_instance`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import CoordinateError
from .linalg import ComplexArray, as_matrix, as_vector
from .states import QuantumState, make_mixed, make_pure

DEFAULT_STEP = 0.01


def default_grid() -> np.ndarray:
    """629 points from 0 to 6.28 in steps of 0.01."""
    return np.arange(0.0, 2 * np.pi, DEFAULT_STEP)


def clock_shift(d: int) -> tuple[ComplexArray, ComplexArray]:
    """Clock ``diag(omega^k)`` and cyclic shift ``|a> -> |a+1 mod d>``."""
    if d < 2:
        raise CoordinateError("clock/shift operators need d >= 2")
    omega = np.exp(2j * np.pi / d)
    clock = np.diag(omega ** np.arange(d))
    shift = np.roll(np.eye(d), 1, axis=0)
    return as_matrix(clock), as_matrix(shift)


def _parse_id(scenario_id: str) -> tuple[str, int]:
    sid = scenario_id.strip()
    if sid in ("ex1", "ex2", "ex4"):
        return sid, 3
    if sid.startswith("ex3:"):
        try:
            d = int(sid[4:])
        except ValueError:
            raise CoordinateError(f"bad dimension in scenario id {scenario_id!r}") from None
        if d < 3:
            raise CoordinateError("ex3 needs d >= 3")
        return "ex3", d
    raise CoordinateError(f"unknown scenario {scenario_id!r}")


def scenario_operators(scenario_id: str) -> list[ComplexArray]:
    family, d = _parse_id(scenario_id)
    if family in ("ex1", "ex2", "ex3"):
        return list(clock_shift(d))
    a = as_matrix(np.diag([1.0, np.exp(1j * np.pi / 2), np.exp(3j * np.pi / 2)]))
    _, b = clock_shift(3)
    c = as_matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    return [a, b, c]


def scenario_vector(scenario_id: str, theta: float) -> ComplexArray:
    """Unnormalised amplitudes exactly as the family is written."""
    family, d = _parse_id(scenario_id)
    c, s = np.cos(theta), np.sin(theta)
    if family == "ex1":
        v = [c, 0.0, s]
    elif family == "ex2":
        h = np.sqrt(2) / 2
        v = [h * c, h * c, s]
    elif family == "ex3":
        v = [c * np.sqrt(d - 1) / (d - 1)] * (d - 1) + [-s]
    else:
        h = np.sqrt(2) / 2
        v = [h * np.cos(theta / 2), h * np.sin(theta / 2), -np.sin(theta / 2)]
    return as_vector(v)


def scenario_state(scenario_id: str, theta: float) -> QuantumState:
    """Normalised state of the family at ``theta``.

    Only ``ex4`` is not normalised as written; it is rescaled here, see
    :func:`scenario_vector` for the raw amplitudes.
    """
    family, _ = _parse_id(scenario_id)
    return make_pure(scenario_vector(scenario_id, theta), normalize=family == "ex4")


@dataclass(frozen=True)
class Scenario:
    id: str
    operators: tuple[ComplexArray, ...]
    state_at: Callable[[float], QuantumState]

    @property
    def dim(self) -> int:
        return self.operators[0].shape[0]


def get_scenario(scenario_id: str) -> Scenario:
    ops = tuple(scenario_operators(scenario_id))
    return Scenario(scenario_id, ops, lambda theta: scenario_state(scenario_id, theta))


def random_unitary(n: int, rng: np.random.Generator) -> ComplexArray:
    """Haar-random unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return as_matrix(q * (d / np.abs(d)))


def random_pure_state(n: int, rng: np.random.Generator) -> QuantumState:
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return make_pure(v, normalize=True)


def random_mixed_state(n: int, rng: np.random.Generator, rank: int | None = None) -> QuantumState:
    """Random density matrix ``G G^dagger / Tr`` with ``G`` of shape ``(n, rank)``."""
    rank = n if rank is None else rank
    g = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    return make_mixed((rho + rho.conj().T) / 2)


def random_instance(
    n: int, n_ops: int, rng: np.random.Generator, mixed: bool = False
) -> tuple[QuantumState, list[ComplexArray]]:
    state = random_mixed_state(n, rng) if mixed else random_pure_state(n, rng)
    return state, [random_unitary(n, rng) for _ in range(n_ops)]
