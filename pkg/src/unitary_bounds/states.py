"""Pure and mixed quantum states."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np
import numpy.typing as npt

from .errors import DimensionError, InvalidStateError
from .linalg import DEFAULT_TOL, ComplexArray, as_square, as_vector, max_deviation


@dataclass(frozen=True, eq=False)
class QuantumState:
    """A validated state: either a unit vector or a density matrix.

    Build instances with :func:`make_pure` or :func:`make_mixed`; the
    constructor itself does not validate.
    """

    kind: Literal["pure", "mixed"]
    vector: Optional[ComplexArray] = None
    density: Optional[ComplexArray] = None

    @property
    def dim(self) -> int:
        if self.kind == "pure":
            return self.vector.shape[0]
        return self.density.shape[0]

    @property
    def is_pure(self) -> bool:
        return self.kind == "pure"

    def density_matrix(self) -> ComplexArray:
        """Density matrix of the state (``|psi><psi|`` for pure states)."""
        if self.kind == "mixed":
            return self.density
        rho = np.outer(self.vector, self.vector.conj())
        rho.setflags(write=False)
        return rho

    def __repr__(self) -> str:
        return f"QuantumState(kind={self.kind!r}, dim={self.dim})"


def make_pure(
    v: npt.ArrayLike, tol: float = DEFAULT_TOL, normalize: bool = False
) -> QuantumState:
    """Validate ``v`` as a pure state.

    Parameters
    ----------
    v : array_like
        State amplitudes in the computational basis.
    tol : float
        Allowed deviation of the squared norm from 1.
    normalize : bool
        Rescale ``v`` to unit norm instead of rejecting it.
    """
    vec = as_vector(v)
    norm_sq = float(np.vdot(vec, vec).real)
    if norm_sq == 0.0:
        raise InvalidStateError("zero vector cannot be normalized")
    if normalize:
        vec = as_vector(vec / np.sqrt(norm_sq))
    elif abs(norm_sq - 1.0) > tol:
        raise InvalidStateError(f"state is not normalized: squared norm {norm_sq!r}")
    return QuantumState("pure", vector=vec)


def make_mixed(rho: npt.ArrayLike, tol: float = DEFAULT_TOL) -> QuantumState:
    """Validate ``rho`` as a density matrix.

    All three checks (Hermitian, unit trace, positive semidefinite) are run
    and the error message lists every one that failed.
    """
    rho = as_square(rho)
    failed = []
    if max_deviation(rho, rho.conj().T) > tol:
        failed.append("hermiticity")
    if abs(np.trace(rho) - 1.0) > tol:
        failed.append(f"trace (got {complex(np.trace(rho))!r})")
    herm = (rho + rho.conj().T) / 2
    min_eig = float(np.linalg.eigvalsh(herm).min())
    if min_eig < -tol:
        failed.append(f"positivity (minimum eigenvalue {min_eig!r})")
    if failed:
        raise InvalidStateError("density matrix failed: " + ", ".join(failed))
    return QuantumState("mixed", density=rho)


def sqrt_density(s: QuantumState, tol: float = DEFAULT_TOL) -> ComplexArray:
    """Positive semidefinite square root of a mixed state's density matrix.

    Eigenvalues in ``[-tol, 0)`` are clamped to zero.
    """
    if s.kind != "mixed":
        raise InvalidStateError("sqrt_density requires a mixed state")
    rho = s.density
    evals, evecs = np.linalg.eigh((rho + rho.conj().T) / 2)
    evals = np.where((evals < 0) & (evals >= -tol), 0.0, evals)
    if np.any(evals < 0):
        raise InvalidStateError("density matrix has a negative eigenvalue")
    root = (evecs * np.sqrt(evals)) @ evecs.conj().T
    root.setflags(write=False)
    return root


def check_dim(s: QuantumState, u: ComplexArray) -> None:
    if u.shape != (s.dim, s.dim):
        raise DimensionError(
            f"operator of shape {u.shape} does not act on a state of dim {s.dim}"
        )
