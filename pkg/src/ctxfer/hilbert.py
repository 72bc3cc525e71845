"""Small complex linear algebra on the three-path Hilbert space.

Kets are complex numpy arrays of shape ``(3,)``; operators and density
matrices are ``(3, 3)``.  The weak-probe code additionally uses the
six-dimensional path (x) polarization space, with index ``2 * path + pol``.
"""

import numpy as np

from .errors import BadTrace, NotHermitian, NotPositive, ZeroNorm

DIM = 3

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
POSITIVITY_TOL = -1e-10


def ket(*amplitudes):
    """Complex vector from three amplitudes (no normalization)."""
    v = np.asarray(amplitudes, dtype=complex).reshape(-1)
    if v.shape != (DIM,):
        raise ValueError(f"expected {DIM} amplitudes, got {v.size}")
    return v


def basis(k):
    """Input-port basis vector e_k for k in {1, 2, 3}."""
    v = np.zeros(DIM, dtype=complex)
    v[k - 1] = 1.0
    return v


def inner(a, b):
    """<a|b>, conjugate-linear in the first argument."""
    return complex(np.vdot(a, b))


def norm(a):
    return float(np.sqrt(inner(a, a).real))


def normalize(a):
    n = norm(a)
    if n < 1e-12:
        raise ZeroNorm(f"cannot normalize a vector of norm {n:.3g}")
    return np.asarray(a, dtype=complex) / n


def projector(a):
    a = np.asarray(a, dtype=complex)
    return np.outer(a, a.conj())


def pure_density(psi):
    """|psi><psi| for a unit vector psi."""
    n = norm(psi)
    if n < 1e-12:
        raise ZeroNorm("pure_density of a zero vector")
    if abs(n - 1.0) > 1e-9:
        raise ZeroNorm(f"state is not normalized (|psi| = {n:.12g})")
    return projector(psi)


def maximally_mixed():
    return np.eye(DIM, dtype=complex) / DIM


def hermitian_residual(m):
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T)))


def unitary_residual(m):
    m = np.asarray(m)
    return float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))


def min_eigenvalue(rho):
    rho = np.asarray(rho)
    return float(np.linalg.eigvalsh((rho + rho.conj().T) / 2).min())


def validate_density(rho):
    """Check Hermiticity, unit trace and positivity; return rho as a complex array."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (DIM, DIM):
        raise ValueError(f"density matrix must be {DIM}x{DIM}, got {rho.shape}")
    h = hermitian_residual(rho)
    if h > HERMITIAN_TOL:
        raise NotHermitian(f"max |rho - rho^dagger| = {h:.3g}")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise BadTrace(f"trace = {tr:.12g}")
    lam = min_eigenvalue(rho)
    if lam < POSITIVITY_TOL:
        raise NotPositive(f"minimum eigenvalue {lam:.3g}")
    return rho


def random_density(seed):
    """Seeded full-rank density matrix G G^dagger / tr(G G^dagger)."""
    rng = np.random.default_rng(seed)
    g = (rng.standard_normal((DIM, DIM)) + 1j * rng.standard_normal((DIM, DIM))) / np.sqrt(2)
    m = g @ g.conj().T
    return m / np.trace(m).real


def expectation(rho, op):
    return complex(np.trace(np.asarray(rho) @ np.asarray(op)))
