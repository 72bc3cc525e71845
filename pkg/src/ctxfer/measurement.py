"""Simulated readout: photon counting, polarization path marking, weak probing."""

from dataclasses import dataclass

import numpy as np

from .errors import CouplingTooLarge, ImpossiblePostselection
from .hilbert import basis, projector
from .interferometer import CONTEXTS, OUTPUTS
from .weak import postselection_probability

MAX_COUPLING = 0.3
DEFAULT_EPSILONS = (0.04, 0.02, 0.01)

# polarization basis: index 0 = H, 1 = V
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
HH = np.array([[1, 0], [0, 0]], dtype=complex)


@dataclass(frozen=True)
class CountRecord:
    context: tuple
    shots: int
    counts: dict
    seed: int

    def frequencies(self):
        return {p: n / self.shots for p, n in self.counts.items()}


@dataclass(frozen=True)
class MarkerDistribution:
    path: str
    flipped: dict
    unflipped: dict

    def marginal_flipped(self):
        return sum(self.flipped.values())


@dataclass(frozen=True)
class ProbeResult:
    path: str
    outcome: str
    epsilon: float
    estimate: complex
    mode: str = "exact"
    shots: int = None
    seed: int = None


def _context(context):
    if isinstance(context, str):
        context = tuple(p.strip() for p in context.split(","))
    context = tuple(context)
    for ctx in CONTEXTS:
        if set(ctx) == set(context) and len(context) == 3:
            return context
    raise ValueError(f"{context} is not one of the five measurement contexts")


def born_probabilities(rho, table, context):
    rho = np.asarray(rho)
    p = np.array([np.real(np.vdot(table.vectors[i], rho @ table.vectors[i])) for i in context])
    p[p < 1e-12] = 0.0
    return p / p.sum()


def sample_context(rho, table, context, shots, seed):
    """Count ``shots`` single-photon detections in one context.

    Outcomes are drawn by inverse CDF; zero-probability paths are never hit.
    """
    context = _context(context)
    shots = int(shots)
    if shots < 1:
        raise ValueError("shots must be >= 1")
    cdf = np.cumsum(born_probabilities(rho, table, context))
    rng = np.random.default_rng(seed)
    u = rng.random(shots) * cdf[-1]
    idx = np.searchsorted(cdf, u, side="right")
    n = np.bincount(idx, minlength=3)
    return CountRecord(context, shots, {p: int(n[k]) for k, p in enumerate(context)}, int(seed))


def sample_all_contexts(rho, table, shots, seed):
    """One CountRecord per context; context k uses seed + k."""
    return [sample_context(rho, table, ctx, shots, seed + k) for k, ctx in enumerate(CONTEXTS)]


def mark_path(rho, table, path):
    """Joint output/polarization statistics after a full polarization flip on ``path``."""
    rho = np.asarray(rho)
    pi = projector(table.vectors[path])
    rest = np.eye(3) - pi
    flipped_state = pi @ rho @ pi
    unflipped_state = rest @ rho @ rest
    flipped = {}
    unflipped = {}
    for o in OUTPUTS:
        e = basis(int(o))
        flipped[o] = float(np.real(np.vdot(e, flipped_state @ e)))
        unflipped[o] = float(np.real(np.vdot(e, unflipped_state @ e)))
    return MarkerDistribution(path, flipped, unflipped)


def coupling_unitary(table, path, epsilon):
    """exp(-i eps Pi_path (x) Y) on the 6-dim path (x) polarization space."""
    pi = projector(table.vectors[path])
    rot = np.cos(epsilon) * np.eye(2) - 1j * np.sin(epsilon) * PAULI_Y
    return np.kron(np.eye(3) - pi, np.eye(2)) + np.kron(pi, rot)


def postselected_polarization(rho, table, path, outcome, epsilon):
    """Normalized polarization state of photons detected at ``outcome``, plus its probability."""
    u = coupling_unitary(table, path, epsilon)
    joint = u @ np.kron(np.asarray(rho), HH) @ u.conj().T
    e = basis(int(outcome))
    post = np.kron(e.conj(), np.eye(2))  # <o| (x) 1
    pol = post @ joint @ post.conj().T
    p = float(np.real(np.trace(pol)))
    return pol / p, p


def _check_probe(rho, table, outcome, epsilon):
    if not (0.0 < epsilon <= MAX_COUPLING):
        raise CouplingTooLarge(f"epsilon={epsilon!r} outside (0, {MAX_COUPLING}]")
    p = postselection_probability(rho, table, outcome)
    if p <= 1e-9:
        raise ImpossiblePostselection(f"P({outcome}) = {p:.3g}")


def weak_probe(rho, table, path, outcome, epsilon, mode="exact", shots=None, seed=None):
    """Estimate W(path|rho, outcome) from a weak polarization rotation.

    The diagonal-basis expectation gives the real part and the circular-basis
    expectation the imaginary part, each divided by ``2 * epsilon``.  In
    ``"sampled"`` mode each basis is measured on ``shots`` postselected
    photons (seeds ``seed`` and ``seed + 1``).
    """
    outcome = str(outcome)
    _check_probe(rho, table, outcome, epsilon)
    pol, _ = postselected_polarization(rho, table, path, outcome, epsilon)
    ex = float(np.real(np.trace(pol @ PAULI_X)))
    ey = float(np.real(np.trace(pol @ PAULI_Y)))
    if mode == "exact":
        return ProbeResult(path, outcome, float(epsilon), complex(ex, ey) / (2 * epsilon))
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    if shots is None or seed is None or int(shots) < 1:
        raise ValueError("sampled mode needs shots >= 1 and a seed")
    shots = int(shots)
    estimates = []
    for k, e in enumerate((ex, ey)):
        rng = np.random.default_rng(seed + k)
        plus = rng.binomial(shots, min(max((1 + e) / 2, 0.0), 1.0))
        estimates.append((2 * plus - shots) / shots)
    return ProbeResult(path, outcome, float(epsilon),
                       complex(*estimates) / (2 * epsilon), "sampled", shots, int(seed))


def probe_extrapolate(rho, table, path, outcome, epsilons=DEFAULT_EPSILONS,
                      mode="exact", shots=None, seed=None, power=2):
    """Zero-coupling limit of weak_probe by a least-squares line in ``epsilon**power``.

    The probe estimate is even in epsilon, so its leading error is quadratic
    and ``power=2`` is the natural variable; ``power=1`` fits against epsilon.
    """
    eps = np.asarray(sorted(set(float(e) for e in epsilons)))
    if eps.size < 3:
        raise ValueError("need at least three distinct couplings")
    if np.any(eps <= 0) or np.any(eps > 0.1):
        raise ValueError("couplings for extrapolation must lie in (0, 0.1]")
    est = []
    for k, e in enumerate(eps):
        s = None if seed is None else seed + 2 * k
        est.append(weak_probe(rho, table, path, outcome, e, mode, shots, s).estimate)
    est = np.asarray(est)
    x = eps ** power
    re = np.polyfit(x, est.real, 1)[1]
    im = np.polyfit(x, est.imag, 1)[1]
    return complex(re, im)
