"""Plain-text state/operator files.

A file holds one or more blocks. Each block starts with a header line
``dim <n> <kind>`` where ``kind`` is ``pure``, ``mixed`` or ``matrix``,
followed by ``n`` (pure) or ``n*n`` (mixed, matrix; row-major) complex
entries written as whitespace-separated ``re im`` pairs, usually one pair
per line. ``#`` starts a comment::

    # Example-1 state at theta = pi/4
    dim 3 pure
    0.7071067811865476 0
    0 0
    0.7071067811865476 0
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import DimensionError, FormatError, NotUnitaryError
from .linalg import DEFAULT_TOL, as_square, is_unitary
from .states import QuantumState, make_mixed, make_pure

KINDS = ("pure", "mixed", "matrix")


def parse_blocks(text: str) -> list[tuple[str, np.ndarray]]:
    """Parse every block in ``text`` into ``(kind, array)`` pairs."""
    blocks = []
    header = None
    tokens: list[str] = []
    lineno_of_header = 0

    def finish():
        kind, n = header
        want = n if kind == "pure" else n * n
        if len(tokens) != 2 * want:
            raise FormatError(
                f"block at line {lineno_of_header}: expected {want} 're im' pairs, "
                f"got {len(tokens) / 2:g}"
            )
        try:
            vals = np.array([float(t) for t in tokens], dtype=float)
        except ValueError as exc:
            raise FormatError(f"block at line {lineno_of_header}: {exc}") from None
        arr = vals[0::2] + 1j * vals[1::2]
        blocks.append((kind, arr if kind == "pure" else arr.reshape(n, n)))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "dim":
            if header is not None:
                finish()
            if len(parts) != 3 or parts[2] not in KINDS:
                raise FormatError(f"line {lineno}: header must read 'dim <n> pure|mixed|matrix'")
            try:
                n = int(parts[1])
            except ValueError:
                raise FormatError(f"line {lineno}: dimension {parts[1]!r} is not an integer") from None
            if n < 1:
                raise FormatError(f"line {lineno}: dimension must be positive")
            header = (parts[2], n)
            tokens = []
            lineno_of_header = lineno
            continue
        if header is None:
            raise FormatError(f"line {lineno}: data before any 'dim' header")
        if len(parts) % 2:
            raise FormatError(f"line {lineno}: odd number of values, expected 're im' pairs")
        tokens.extend(parts)
    if header is None:
        raise FormatError("no 'dim' header found")
    finish()
    return blocks


def read_blocks(path: str | Path) -> list[tuple[str, np.ndarray]]:
    return parse_blocks(Path(path).read_text())


def load_state(path: str | Path, tol: float = DEFAULT_TOL) -> QuantumState:
    blocks = read_blocks(path)
    if len(blocks) != 1:
        raise FormatError(f"{path}: a state file must contain exactly one block")
    kind, arr = blocks[0]
    if kind == "pure":
        return make_pure(arr, tol)
    return make_mixed(arr, tol)


def load_operators(paths: Iterable[str | Path], tol: float = DEFAULT_TOL) -> list[np.ndarray]:
    """Read operator matrices from one or more files, checking unitarity."""
    ops = []
    for path in paths:
        for kind, arr in read_blocks(path):
            if kind != "matrix":
                raise FormatError(f"{path}: operator blocks must have kind 'matrix', got {kind!r}")
            ops.append(as_square(arr))
    if not ops:
        raise FormatError("no operators given")
    dims = {u.shape[0] for u in ops}
    if len(dims) != 1:
        raise DimensionError(f"operators have differing dimensions {sorted(dims)}")
    for k, u in enumerate(ops):
        if not is_unitary(u, tol):
            raise NotUnitaryError(f"operator {k + 1} is not unitary within tol {tol:g}")
    return ops


def _pairs(values) -> list[str]:
    return [f"{float(v.real)!r} {float(v.imag)!r}" for v in np.asarray(values).reshape(-1)]


def format_state(state: QuantumState) -> str:
    if state.is_pure:
        lines = [f"dim {state.dim} pure", *_pairs(state.vector)]
    else:
        lines = [f"dim {state.dim} mixed", *_pairs(state.density)]
    return "\n".join(lines) + "\n"


def format_matrix(m) -> str:
    m = np.asarray(m)
    return "\n".join([f"dim {m.shape[0]} matrix", *_pairs(m)]) + "\n"
