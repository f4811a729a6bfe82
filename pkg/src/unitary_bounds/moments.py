"""Expectations, variances and amplitude vectors of unitary operators.

The amplitude vector of ``U`` on a pure state is the entrywise modulus of
``(U - <U>)|psi>`` in the computational basis, so its squared norm is the
variance. For a mixed state the same role is played by the row-major
flattening of ``(U - <U>) sqrt(rho)``, which has length ``n**2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .errors import DimensionError, NotUnitaryError
from .linalg import DEFAULT_TOL, as_square, is_unitary
from .states import QuantumState, check_dim, sqrt_density

FloatArray = npt.NDArray[np.float64]


def _unitary(u: npt.ArrayLike, s: QuantumState, tol: float):
    u = as_square(u)
    check_dim(s, u)
    if not is_unitary(u, tol):
        raise NotUnitaryError("operator is not unitary")
    return u


def expectation(u: npt.ArrayLike, s: QuantumState) -> complex:
    """``<psi|U|psi>`` for pure states, ``Tr(rho U)`` for mixed ones."""
    u = as_square(u)
    check_dim(s, u)
    if s.is_pure:
        return complex(np.vdot(s.vector, u @ s.vector))
    return complex(np.trace(s.density @ u))


def variance(u: npt.ArrayLike, s: QuantumState, tol: float = DEFAULT_TOL) -> float:
    """Variance ``<(U - <U>)^dagger (U - <U>)>`` of a unitary operator."""
    u = _unitary(u, s, tol)
    centred = u - expectation(u, s) * np.eye(s.dim)
    gram = centred.conj().T @ centred
    if s.is_pure:
        return float(np.vdot(s.vector, gram @ s.vector).real)
    return float(np.trace(s.density @ gram).real)


def amplitude_vector(
    u: npt.ArrayLike, s: QuantumState, tol: float = DEFAULT_TOL
) -> FloatArray:
    """Nonnegative amplitudes whose squared norm is ``variance(u, s)``.

    Length ``n`` for a pure state and ``n**2`` for a mixed one.
    """
    u = _unitary(u, s, tol)
    mean = expectation(u, s)
    if s.is_pure:
        f = u @ s.vector - mean * s.vector
    else:
        f = ((u - mean * np.eye(s.dim)) @ sqrt_density(s)).reshape(-1)
    out = np.abs(f)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class VarianceReport:
    expectation: complex
    variance: float
    amplitudes: FloatArray


def variance_report(
    u: npt.ArrayLike, s: QuantumState, tol: float = DEFAULT_TOL
) -> VarianceReport:
    return VarianceReport(expectation(u, s), variance(u, s, tol), amplitude_vector(u, s, tol))


def product_decomposition_check(
    xs: npt.ArrayLike, ys: npt.ArrayLike, var_a: float, var_b: float
) -> float:
    """Residual ``|sum_ij x_i^2 y_j^2 - var_a * var_b|`` from an explicit double sum."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.shape != ys.shape:
        raise DimensionError(f"length mismatch {xs.shape} vs {ys.shape}")
    total = 0.0
    for xi in xs:
        for yj in ys:
            total += xi * xi * yj * yj
    return abs(total - var_a * var_b)


def triple_decomposition_check(
    xs: npt.ArrayLike,
    ys: npt.ArrayLike,
    zs: npt.ArrayLike,
    var_a: float,
    var_b: float,
    var_c: float,
) -> float:
    """Residual of the explicit triple sum against ``var_a * var_b * var_c``."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    zs = np.asarray(zs, dtype=float)
    if not xs.shape == ys.shape == zs.shape:
        raise DimensionError("amplitude vectors must have equal length")
    total = 0.0
    for xi in xs:
        for yj in ys:
            for zk in zs:
                total += xi * xi * yj * yj * zk * zk
    return abs(total - var_a * var_b * var_c)
