"""Fiducial-state catalog, Weyl-Heisenberg orbits, and POVM property checks."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CatalogMissError, InvalidInputError
from .wh import DEFAULT_TOL, PHYSICAL_TOL, displacement, max_abs, require_unitary


@dataclass(frozen=True, eq=False)
class Fiducial:
    """A normalized state whose WH orbit defines a covariant measurement."""

    dim: int
    ket: np.ndarray
    label: str = ""

    def __post_init__(self):
        ket = np.asarray(self.ket, dtype=complex).reshape(-1)
        if ket.shape[0] != self.dim:
            raise InvalidInputError(f"ket has length {ket.shape[0]}, expected {self.dim}")
        norm = float(np.linalg.norm(ket))
        if abs(norm - 1.0) > PHYSICAL_TOL:
            raise InvalidInputError(f"fiducial must be normalized, got ||ket|| = {norm:.12g}")
        object.__setattr__(self, "ket", ket)


@dataclass(frozen=True, eq=False)
class WHFrame:
    """The d^2 orbit vectors D(j,k)|phi>, stored as rows ordered by j*d + k."""

    dim: int
    vectors: np.ndarray

    def gram(self) -> np.ndarray:
        return self.vectors.conj() @ self.vectors.T

    def resolution_residual(self) -> float:
        """Max-norm distance of (1/d) sum |phi_jk><phi_jk| from the identity."""
        acc = (self.vectors.T @ self.vectors.conj()) / self.dim
        return max_abs(acc - np.eye(self.dim))

    def elements(self) -> list[np.ndarray]:
        """Measurement operators E(j,k) = (1/d)|phi_jk><phi_jk|."""
        return [np.outer(v, v.conj()) / self.dim for v in self.vectors]


def as_ket(phi: Fiducial | np.ndarray) -> np.ndarray:
    if isinstance(phi, Fiducial):
        return phi.ket
    return np.asarray(phi, dtype=complex).reshape(-1)


def _qubit_sic_ket() -> np.ndarray:
    return np.array(
        [np.sqrt(3 + np.sqrt(3)), np.exp(1j * np.pi / 4) * np.sqrt(3 - np.sqrt(3))]
    ) / np.sqrt(6)


def _ququart_sic_ket() -> np.ndarray:
    # Stored via alpha = sqrt(2 + sqrt 5) and the nested-radical normalization,
    # not as decimal literals.
    alpha = np.sqrt(2 + np.sqrt(5))
    scale = np.sqrt((1 - 1 / np.sqrt(5)) / 8)
    u = np.exp(-1j * np.pi / 4)
    return scale * np.array(
        [u + 1, -1j * (alpha * u + 1), u - 1, 1j * (alpha * u - 1)]
    )


_CATALOG: dict[tuple[int, str], np.ndarray] = {
    (2, "qubit-sic"): _qubit_sic_ket(),
    (3, "hesse"): np.array([0, 1, -1]) / np.sqrt(2),
    (3, "hesse-partner"): np.array([0, 1, 1]) / np.sqrt(2),
    (4, "ququart-sic"): _ququart_sic_ket(),
}

FIDUCIAL_LABELS = tuple(sorted(label for (_, label) in _CATALOG))


def builtin_fiducial(d: int, label: str) -> Fiducial:
    """Look up a cataloged fiducial state by (dimension, label)."""
    try:
        ket = _CATALOG[(d, label)]
    except KeyError:
        known = ", ".join(f"({dd}, {lb!r})" for dd, lb in sorted(_CATALOG))
        raise CatalogMissError(f"no fiducial ({d}, {label!r}); catalog has {known}") from None
    return Fiducial(dim=d, ket=ket.copy(), label=label)


def wh_orbit(phi: Fiducial | np.ndarray) -> WHFrame:
    """All d^2 orbit vectors D(j,k)|phi> in (j, k) order."""
    ket = as_ket(phi)
    d = ket.shape[0]
    vecs = np.zeros((d * d, d), dtype=complex)
    for j in range(d):
        for k in range(d):
            vecs[j * d + k] = displacement(d, j, k) @ ket
    return WHFrame(dim=d, vectors=vecs)


@dataclass(frozen=True)
class ICResult:
    """Outcome of an informational-completeness check.

    The Gram-rank criterion is authoritative; the minimum displacement overlap
    and its index are reported as the witness.
    """

    is_ic: bool
    witness_index: tuple[int, int]
    witness_overlap: float
    gram_rank: int
    overlaps: np.ndarray = field(repr=False)

    def __bool__(self) -> bool:
        return self.is_ic


def is_informationally_complete(phi: Fiducial | np.ndarray, tol: float = PHYSICAL_TOL) -> ICResult:
    """Check whether the WH orbit of phi spans operator space.

    Scans |<phi| D(j,k)^dag |phi>| over all (j, k) in row-major order; the
    first minimizer is the witness.  The rank of the d^2 x d^2 Gram matrix of
    the measurement operators decides the result.
    """
    ket = as_ket(phi)
    d = ket.shape[0]
    overlaps = np.zeros((d, d))
    for j in range(d):
        for k in range(d):
            overlaps[j, k] = abs(np.vdot(displacement(d, j, k) @ ket, ket))
    flat_arg = int(np.argmin(overlaps))
    witness = (flat_arg // d, flat_arg % d)

    frame = wh_orbit(ket)
    flat = np.array([e.reshape(-1) for e in frame.elements()])
    gram = (flat.conj() @ flat.T).real
    rank = int(np.linalg.matrix_rank(gram))
    return ICResult(
        is_ic=bool(rank == d * d and overlaps[witness] > tol),
        witness_index=witness,
        witness_overlap=float(overlaps[witness]),
        gram_rank=rank,
        overlaps=overlaps,
    )


def sic_report(phi: Fiducial | np.ndarray) -> float:
    """Largest deviation of squared orbit overlaps from the simplex values.

    A fiducial generates a SIC exactly when every |<phi_jk|phi_j'k'>|^2 equals
    (d*delta + 1)/(d + 1); the returned number is the max-norm violation.
    """
    ket = as_ket(phi)
    d = ket.shape[0]
    gram2 = np.abs(wh_orbit(ket).gram()) ** 2
    target = (d * np.eye(d * d) + 1.0) / (d + 1.0)
    return max_abs(gram2 - target)


def compound_sic_report(m: np.ndarray, tol: float = DEFAULT_TOL) -> list[float]:
    """SIC deviation of each row of a unitary, rows conjugated to kets."""
    m = require_unitary(m, tol=max(tol, PHYSICAL_TOL), what="compound-SIC matrix")
    return [sic_report(m[i].conj()) for i in range(m.shape[0])]
