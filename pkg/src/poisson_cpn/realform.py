"""Realification helpers for C^n and complex matrices.

Layout convention: a complex vector w maps to the interleaved real vector
(Re w_1, Im w_1, ..., Re w_n, Im w_n), so multiplication by i becomes the
block-diagonal rotation J with 2x2 blocks [[0,-1],[1,0]].
"""

import numpy as np


def realify_vector(w):
    """Interleaved real form of a complex vector."""
    w = np.asarray(w, dtype=complex)
    out = np.empty(2 * w.shape[0])
    out[0::2] = w.real
    out[1::2] = w.imag
    return out


def complexify_vector(x):
    """Inverse of realify_vector."""
    x = np.asarray(x, dtype=float)
    return x[0::2] + 1j * x[1::2]


def realify_matrix(a):
    """Real 2n x 2n matrix acting on interleaved coordinates as a does on C^n."""
    a = np.asarray(a, dtype=complex)
    n, m = a.shape
    out = np.zeros((2 * n, 2 * m))
    out[0::2, 0::2] = a.real
    out[0::2, 1::2] = -a.imag
    out[1::2, 0::2] = a.imag
    out[1::2, 1::2] = a.real
    return out


def ambient_complex_structure(n):
    """The matrix of multiplication by i on R^{2n}."""
    return realify_matrix(1j * np.eye(n))


def flatten_matrix(x):
    """Flatten a complex matrix to a real vector compatible with the
    Frobenius inner product: dot(flatten(x), flatten(y)) = Re tr(x^* y)."""
    x = np.asarray(x, dtype=complex)
    return np.concatenate([x.real.ravel(), x.imag.ravel()])


def frobenius_ip(x, y):
    """Real Frobenius inner product Re tr(x^* y)."""
    return float(np.real(np.sum(np.conj(x) * y)))
