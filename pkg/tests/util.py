"""Shared randomness helpers and expected-matrix fixtures for the test suite."""

import numpy as np


def rand_unitary(d, rng):
    """Haar-ish random unitary via QR with phase-fixed diagonal."""
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def rand_ket(d, rng):
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def rand_density(d, rng, n_mix=None):
    """Random mixed state as a convex combination of pure states."""
    n_mix = n_mix or d + 1
    weights = rng.random(n_mix)
    weights /= weights.sum()
    rho = np.zeros((d, d), dtype=complex)
    for w in weights:
        k = rand_ket(d, rng)
        rho += w * np.outer(k, k.conj())
    return rho


def qubit_fiducial_components():
    return (
        np.sqrt(3 + np.sqrt(3)) / np.sqrt(6),
        np.exp(1j * np.pi / 4) * np.sqrt(3 - np.sqrt(3)) / np.sqrt(6),
    )


def expected_qubit_u():
    """4x4 extension unitary for the qubit SIC fiducial, written out entrywise."""
    p0, p1 = qubit_fiducial_components()
    return np.array(
        [
            [p0.conj(), -p1, p1.conj(), p0],
            [p0.conj(), -p1, -p1.conj(), -p0],
            [p1.conj(), p0, p0.conj(), -p1],
            [-p1.conj(), -p0, p0.conj(), -p1],
        ]
    ) / np.sqrt(2)


def expected_qubit_diag_blocks():
    p0, p1 = qubit_fiducial_components()
    u0 = np.array(
        [[p0.conj() + p1.conj(), p0 - p1], [p0.conj() - p1.conj(), -(p0 + p1)]]
    ) / np.sqrt(2)
    u1 = np.array(
        [[p0.conj() - p1.conj(), -(p0 + p1)], [p0.conj() + p1.conj(), p0 - p1]]
    ) / np.sqrt(2)
    return [u0, u1]


def expected_hesse_u():
    """9x9 extension unitary for the Hesse fiducial, w = exp(2*pi*i/3)."""
    w = np.exp(2j * np.pi / 3)
    r2 = np.sqrt(2)
    rows = [
        [0, r2, 0, 1, 0, 1, -1, 0, 1],
        [0, r2, 0, w**2, 0, w**2, -w, 0, w],
        [0, r2, 0, w, 0, w, -(w**2), 0, w**2],
        [-1, 0, 1, 0, r2, 0, 1, 0, 1],
        [-w, 0, w, 0, r2, 0, w**2, 0, w**2],
        [-(w**2), 0, w**2, 0, r2, 0, w, 0, w],
        [1, 0, 1, -1, 0, 1, 0, r2, 0],
        [w**2, 0, w**2, -w, 0, w, 0, r2, 0],
        [w, 0, w, -(w**2), 0, w**2, 0, r2, 0],
    ]
    return np.array(rows, dtype=complex) / np.sqrt(6)


def expected_hesse_diag_blocks():
    s3 = 1j * np.sqrt(3)
    r2 = np.sqrt(2)
    u0 = np.array([[0, r2, 2], [-s3, r2, -1], [s3, r2, -1]]) / np.sqrt(6)
    u1 = np.array([[-s3, r2, -1], [s3, r2, -1], [0, r2, 2]]) / np.sqrt(6)
    u2 = np.array([[s3, r2, -1], [0, r2, 2], [-s3, r2, -1]]) / np.sqrt(6)
    return [u0, u1, u2]


def expected_ququart_diag_blocks():
    """Tabulated ququart blocks in their two-summand form c*(e^{i pi/4} A + B)."""
    alpha = np.sqrt(2 + np.sqrt(5))
    scale = np.sqrt((1 - 1 / np.sqrt(5)) / 8)
    e = np.exp(1j * np.pi / 4)
    a = alpha

    def build(mat_a, mat_b):
        return scale * (e * np.array(mat_a) + np.array(mat_b))

    u0 = build(
        [[1j, 1j, 1j, 1j * a], [1, -a, -1, 1], [-1j, -1j, -1j, -1j * a], [1, -a, -1, 1]],
        [[1, -1, a, -1], [a, 1, -1, -1], [1, -1, a, -1], [-a, -1, 1, 1]],
    )
    u1 = build(
        [[1, -a, -1, 1], [-1j, -1j, -1j, -1j * a], [1, -a, -1, 1], [1j, 1j, 1j, 1j * a]],
        [[a, 1, -1, -1], [1, -1, a, -1], [-a, -1, 1, 1], [1, -1, a, -1]],
    )
    u2 = build(
        [[-1j, -1j, -1j, -1j * a], [1, -a, -1, 1], [1j, 1j, 1j, 1j * a], [1, -a, -1, 1]],
        [[1, -1, a, -1], [-a, -1, 1, 1], [1, -1, a, -1], [a, 1, -1, -1]],
    )
    u3 = build(
        [[1, -a, -1, 1], [1j, 1j, 1j, 1j * a], [1, -a, -1, 1], [-1j, -1j, -1j, -1j * a]],
        [[-a, -1, 1, 1], [1, -1, a, -1], [a, 1, -1, -1], [1, -1, a, -1]],
    )
    return [u0, u1, u2, u3]
