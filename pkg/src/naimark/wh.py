"""Weyl-Heisenberg operator family, Fourier transform, and generalized Bell basis.

Conventions used throughout the package:

* shift:  X|k> = |k+1 mod d>
* clock:  Z|k> = w^k |k>  with  w = exp(2*pi*i/d)
* displacement:  D(j, k) = X^j Z^k  (no extra phase prefactor, also for even d)
* Fourier:  F = d^{-1/2} sum_{jk} w^{jk} |j><k|,  so that  X = F^dag Z F
* pair indices (j, k) flatten to the linear index j*d + k everywhere

All functions are pure and return freshly allocated arrays.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidDimensionError, InvalidInputError

# Default tolerances: exact-algebra fixtures vs physical-property checks.
DEFAULT_TOL = 1e-12
PHYSICAL_TOL = 1e-10


def max_abs(a: np.ndarray) -> float:
    """Max-norm of an array, as a plain float."""
    return float(np.max(np.abs(a))) if np.size(a) else 0.0


def require_unitary(a: np.ndarray, tol: float = DEFAULT_TOL, what: str = "matrix") -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInputError(f"{what} must be square, got shape {a.shape}")
    resid = max_abs(a.conj().T @ a - np.eye(a.shape[0]))
    if resid > tol:
        raise InvalidInputError(f"{what} is not unitary: ||A^dag A - I||_max = {resid:.3e}")
    return a


def root_of_unity(d: int) -> complex:
    """Principal d-th root of unity, exp(2*pi*i/d)."""
    if d < 1:
        raise InvalidDimensionError(f"dimension must be >= 1, got {d}")
    return complex(np.exp(2j * np.pi / d))


def _phases(exponents: np.ndarray, d: int) -> np.ndarray:
    # Reduce exponents mod d before exponentiating; keeps phases exact-ish.
    return np.exp(2j * np.pi * (np.asarray(exponents) % d) / d)


def shift_op(d: int) -> np.ndarray:
    """Cyclic shift X on C^d: X|k> = |k+1 mod d>."""
    if d < 2:
        raise InvalidDimensionError(f"shift operator needs d >= 2, got {d}")
    x = np.zeros((d, d), dtype=complex)
    x[(np.arange(d) + 1) % d, np.arange(d)] = 1.0
    return x


def clock_op(d: int) -> np.ndarray:
    """Diagonal clock Z on C^d: Z|k> = w^k |k>."""
    if d < 2:
        raise InvalidDimensionError(f"clock operator needs d >= 2, got {d}")
    return np.diag(_phases(np.arange(d), d))


def displacement(d: int, j: int, k: int) -> np.ndarray:
    """Displacement operator D(j, k) = X^j Z^k; index arithmetic is mod d.

    Closed form: D(j, k)|l> = w^{kl} |l+j>, i.e. entry (l+j mod d, l) is w^{kl}.
    """
    if d < 2:
        raise InvalidDimensionError(f"displacement needs d >= 2, got {d}")
    j, k = j % d, k % d
    ell = np.arange(d)
    out = np.zeros((d, d), dtype=complex)
    out[(ell + j) % d, ell] = _phases(k * ell, d)
    return out


def fourier(d: int) -> np.ndarray:
    """Discrete Fourier matrix F with entries w^{jk} / sqrt(d)."""
    if d < 1:
        raise InvalidDimensionError(f"dimension must be >= 1, got {d}")
    grid = np.outer(np.arange(d), np.arange(d))
    return _phases(grid, d) / np.sqrt(d)


def bell_vector(d: int, j: int, k: int) -> np.ndarray:
    """Maximally entangled basis vector obtained by vectorizing D(j, k).

    |D(j,k)> = d^{-1/2} sum_l w^{kl} |j+l, l>, with |a, b> at linear index a*d + b.
    """
    if d < 2:
        raise InvalidDimensionError(f"Bell vectors need d >= 2, got {d}")
    j, k = j % d, k % d
    ell = np.arange(d)
    v = np.zeros(d * d, dtype=complex)
    v[((j + ell) % d) * d + ell] = _phases(k * ell, d)
    return v / np.sqrt(d)


def bell_change_of_basis(d: int) -> np.ndarray:
    """Unitary mapping the generalized Bell basis to the computational basis.

    Row j*d + k is the conjugate transpose of bell_vector(d, j, k), so the
    matrix sends |D(j,k)> to |j,k>.
    """
    if d < 2:
        raise InvalidDimensionError(f"Bell change of basis needs d >= 2, got {d}")
    out = np.zeros((d * d, d * d), dtype=complex)
    for j in range(d):
        for k in range(d):
            out[j * d + k, :] = bell_vector(d, j, k).conj()
    return out
