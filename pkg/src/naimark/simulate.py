"""Embedding, outcome statistics, sampling, and linear-inversion tomography."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .block import NaimarkExtension
from .errors import (
    InvalidInputError,
    NumericalFailureError,
    RankDeficientFrameError,
)
from .fiducials import Fiducial, as_ket, wh_orbit
from .wh import PHYSICAL_TOL, max_abs

_CLAMP = 1e-14


@dataclass(frozen=True, eq=False)
class OutcomeDistribution:
    """Probabilities over the d^2 outcomes (j, k), flattened as j*d + k."""

    dim: int
    probs: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.probs, dtype=float).reshape(-1)
        if p.shape[0] != self.dim**2:
            raise InvalidInputError(f"expected {self.dim ** 2} probabilities, got {p.shape[0]}")
        if np.min(p) < -_CLAMP:
            raise InvalidInputError(f"negative probability {np.min(p):.3e}")
        p = np.where(p < 0, 0.0, p)
        total = float(p.sum())
        if abs(total - 1.0) > PHYSICAL_TOL:
            raise InvalidInputError(f"probabilities sum to {total:.12g}, expected 1")
        object.__setattr__(self, "probs", p)

    def prob(self, j: int, k: int) -> float:
        return float(self.probs[(j % self.dim) * self.dim + (k % self.dim)])


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A reconstructed state with numerical diagnostics attached.

    `min_eigenvalue` may be negative when the distribution came from finite
    samples; it is reported, never repaired.
    """

    dim: int
    matrix: np.ndarray
    min_eigenvalue: float | None = None
    gram_condition: float | None = None

    def __post_init__(self):
        rho = np.asarray(self.matrix, dtype=complex)
        if rho.shape != (self.dim, self.dim):
            raise InvalidInputError(f"expected a {self.dim}x{self.dim} matrix, got {rho.shape}")
        if max_abs(rho - rho.conj().T) > 1e-10:
            raise InvalidInputError("density matrix must be Hermitian")
        tr = complex(np.trace(rho))
        if abs(tr - 1.0) > 1e-8:
            raise InvalidInputError(f"density matrix must have unit trace, got {tr:.12g}")
        object.__setattr__(self, "matrix", rho)


def embed(psi: np.ndarray, i: int) -> np.ndarray:
    """Place a d-vector into C^{d^2} with component t at index t*d + i."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    d = psi.shape[0]
    if not 0 <= i < d:
        raise InvalidInputError(f"embedding index {i} out of range for d={d}")
    out = np.zeros(d * d, dtype=complex)
    out[np.arange(d) * d + i] = psi
    return out


def direct_probabilities(phi: Fiducial | np.ndarray, psi: np.ndarray) -> OutcomeDistribution:
    """Born-rule oracle P(j,k) = |<phi_jk|psi>|^2 / d, straight from the orbit.

    Every Naimark route must reproduce this distribution.
    """
    ket = as_ket(phi)
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    d = ket.shape[0]
    if psi.shape[0] != d:
        raise InvalidInputError(f"state has dim {psi.shape[0]}, fiducial has dim {d}")
    amps = wh_orbit(ket).vectors.conj() @ psi
    return OutcomeDistribution(dim=d, probs=np.abs(amps) ** 2 / d)


def measure_probabilities(
    ext: NaimarkExtension, psi: np.ndarray, i: int = 0
) -> OutcomeDistribution:
    """Outcome distribution from the extension unitary acting on |psi, i>."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if psi.shape[0] != ext.d:
        raise InvalidInputError(f"state has dim {psi.shape[0]}, extension has d={ext.d}")
    amps = ext.U @ embed(psi, i)
    return OutcomeDistribution(dim=ext.d, probs=np.abs(amps) ** 2)


def sample(dist: OutcomeDistribution, n_shots: int, seed: int) -> np.ndarray:
    """Multinomial counts per (j, k); deterministic for a fixed seed."""
    if n_shots < 1:
        raise InvalidInputError(f"need at least one shot, got {n_shots}")
    rng = np.random.default_rng(seed)
    p = dist.probs / dist.probs.sum()
    return rng.multinomial(n_shots, p)


def frame_gram(phi: Fiducial | np.ndarray) -> np.ndarray:
    """Real Gram matrix G[a, b] = tr(E_a E_b) of the orbit's measurement operators."""
    flat = np.array([e.reshape(-1) for e in wh_orbit(as_ket(phi)).elements()])
    return (flat.conj() @ flat.T).real


def tomography_reconstruct(
    phi: Fiducial | np.ndarray, dist: OutcomeDistribution
) -> DensityMatrix:
    """Linear inversion on the frame {E(j,k)}: solve G x = p, set rho = sum x_a E_a.

    Requires an informationally complete fiducial; a rank-deficient Gram
    matrix is rejected rather than pseudo-inverted.  Positivity of the result
    is diagnosed (min eigenvalue), not enforced.
    """
    ket = as_ket(phi)
    d = ket.shape[0]
    if dist.dim != d:
        raise InvalidInputError(f"distribution has d={dist.dim}, fiducial has d={d}")
    elements = wh_orbit(ket).elements()
    flat = np.array([e.reshape(-1) for e in elements])
    gram = (flat.conj() @ flat.T).real
    rank = int(np.linalg.matrix_rank(gram))
    if rank < d * d:
        raise RankDeficientFrameError(
            f"frame Gram matrix has rank {rank} < {d * d}; fiducial is not "
            "informationally complete"
        )
    eigs = np.linalg.eigvalsh(gram)
    if eigs[0] <= 0:
        raise NumericalFailureError("frame Gram matrix is numerically singular")
    try:
        x = np.linalg.solve(gram, dist.probs)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - guarded by rank check
        raise NumericalFailureError(f"Gram system solve failed: {exc}") from exc
    rho = np.tensordot(x, np.array(elements), axes=1)
    rho = (rho + rho.conj().T) / 2
    lam = np.linalg.eigvalsh(rho)
    return DensityMatrix(
        dim=d,
        matrix=rho,
        min_eigenvalue=float(lam[0]),
        gram_condition=float(eigs[-1] / eigs[0]),
    )
