"""Dense complex matrix/vector helpers.

Vectors and matrices are plain ``numpy`` arrays of ``complex128``. The
helpers here only add shape checks and the few predicates the bounds need.
"""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

from .errors import DimensionError

DEFAULT_TOL = 1e-10

ComplexArray = npt.NDArray[np.complex128]


def as_vector(v: npt.ArrayLike) -> ComplexArray:
    """Return ``v`` as a read-only 1-D complex array."""
    arr = np.array(v, dtype=np.complex128)
    if arr.ndim != 1 or arr.size == 0:
        raise DimensionError(f"expected a non-empty 1-D vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DimensionError("vector has non-finite entries")
    arr.setflags(write=False)
    return arr


def as_matrix(m: npt.ArrayLike) -> ComplexArray:
    """Return ``m`` as a read-only 2-D complex array."""
    arr = np.array(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.size == 0:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DimensionError("matrix has non-finite entries")
    arr.setflags(write=False)
    return arr


def as_square(m: npt.ArrayLike) -> ComplexArray:
    arr = as_matrix(m)
    if arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {arr.shape}")
    return arr


def identity(n: int) -> ComplexArray:
    return as_matrix(np.eye(n))


def apply(m: npt.ArrayLike, v: npt.ArrayLike) -> ComplexArray:
    """Matrix-vector product ``m @ v`` with a dimension check."""
    m = as_matrix(m)
    v = as_vector(v)
    if m.shape[1] != v.shape[0]:
        raise DimensionError(
            f"cannot apply a {m.shape[0]}x{m.shape[1]} matrix to a vector of dim {v.shape[0]}"
        )
    out = m @ v
    out.setflags(write=False)
    return out


def adjoint(m: npt.ArrayLike) -> ComplexArray:
    """Conjugate transpose."""
    out = np.ascontiguousarray(as_matrix(m).conj().T)
    out.setflags(write=False)
    return out


def max_deviation(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    """Largest entrywise modulus of ``a - b``."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b))) if a.size else 0.0


def is_unitary(m: npt.ArrayLike, tol: float = DEFAULT_TOL) -> bool:
    """True iff every entry of ``m^dagger m - I`` has modulus at most ``tol``."""
    m = as_square(m)
    return max_deviation(m.conj().T @ m, np.eye(m.shape[0])) <= tol


def is_hermitian(m: npt.ArrayLike, tol: float = DEFAULT_TOL) -> bool:
    m = as_square(m)
    return max_deviation(m, m.conj().T) <= tol


def commutation_phase_check(
    a: npt.ArrayLike, b: npt.ArrayLike, d: int, tol: float = DEFAULT_TOL
) -> bool:
    """Check the Weyl relation ``AB = omega BA`` with ``omega = exp(2 pi i / d)``."""
    a = as_square(a)
    b = as_square(b)
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")
    if d < 2:
        raise DimensionError("d must be at least 2")
    omega = np.exp(2j * np.pi / d)
    return max_deviation(a @ b, omega * (b @ a)) <= tol
