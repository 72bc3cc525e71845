"""Weak values, Kirkwood-Dirac elements and coherence coefficients.

Conventions
-----------
``W(i|rho, o) = <o|i><i|rho|o> / <o|rho|o>`` is the conditional current
through path ``i`` for photons detected at ``o``.  The Kirkwood-Dirac (KD)
element is the numerator alone, so it stays defined when ``P(o) = 0``.
``C(i|n, o) = <o|i><i|n>`` weights the output-basis density matrix element
``<n|rho|o>`` in the KD element.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ImpossiblePostselection
from .hilbert import basis, inner
from .interferometer import OUTPUTS, PATHS, splitter_vectors

POSTSELECTION_TOL = 1e-12


@dataclass(frozen=True)
class WeakValue:
    value: complex
    path: str
    outcome: str
    postselection_probability: float


@dataclass(frozen=True)
class KDElement:
    value: complex
    path: str
    outcome: str


@dataclass(frozen=True)
class CoherenceCoefficient:
    value: complex
    path: str
    ket: str
    bra: str


@dataclass
class WeakReport:
    """Full 10 x 3 table of weak values and KD elements for one state.

    ``weak[(i, o)]`` is ``None`` where ``P(o)`` vanishes.
    """

    outcome_probabilities: dict
    weak: dict
    kd: dict
    residuals: dict = field(default_factory=dict)

    @property
    def undefined_outcomes(self):
        return [o for o in OUTPUTS if self.weak[(PATHS[0], o)] is None]

    def max_residual(self):
        vals = [abs(r) for rs in self.residuals.values() for r in rs]
        return max(vals) if vals else 0.0


def _vec(table, label):
    """Path vector; bare integers and '1'..'3' map to input ports."""
    if isinstance(label, int):
        return basis(label)
    return table.vectors[label]


def kd_value(rho, table, i, o):
    """<o|i><i|rho|o> as a complex number; ``o`` may be any path label."""
    vi = _vec(table, i)
    vo = _vec(table, o)
    return inner(vo, vi) * inner(vi, np.asarray(rho) @ vo)


def postselection_probability(rho, table, o):
    vo = _vec(table, o)
    return float(np.real(inner(vo, np.asarray(rho) @ vo)))


def weak_value(rho, table, i, o):
    p = postselection_probability(rho, table, o)
    if p <= POSTSELECTION_TOL:
        raise ImpossiblePostselection(f"P({o}) = {p:.3g}; W({i}|{o}) is undefined")
    return WeakValue(kd_value(rho, table, i, o) / p, i, o, p)


def kd_element(rho, table, i, o):
    return KDElement(kd_value(rho, table, i, o), i, o)


def continuity_residuals(rho, table, o):
    """W(a|o) + W(b|o) - W(u|o) - W(v|o) for each of the five splitters."""
    p = postselection_probability(rho, table, o)
    if p <= POSTSELECTION_TOL:
        raise ImpossiblePostselection(f"P({o}) = {p:.3g}")
    rho = np.asarray(rho)
    vo = _vec(table, o)
    rho_o = rho @ vo

    def w(v):
        return inner(vo, v) * inner(v, rho_o) / p

    out = []
    for bs in table.splitters:
        a, b, u, v = splitter_vectors(table, bs)
        out.append(w(a) + w(b) - w(u) - w(v))
    return out


def dcont_check(rho, table):
    """Residuals of the two f-current balances through the empty-able paths D1, D2.

    W(f|D1)P(D1) = W(f|2)P(2) + W(f|3)P(3)
    W(f|D2)P(D2) = W(f|1)P(1) + W(f|3)P(3)
    """
    kd = {o: kd_value(rho, table, "f", o) for o in ("1", "2", "3", "D1", "D2")}
    return (
        kd["D1"] - (kd["2"] + kd["3"]),
        kd["D2"] - (kd["1"] + kd["3"]),
    )


def coherence_coefficient(table, i, n, o):
    vi = _vec(table, i)
    return CoherenceCoefficient(inner(_vec(table, o), vi) * inner(vi, _vec(table, n)), i, n, o)


def kd_reconstruction_residual(rho, table, i, o):
    """|KD(i, o) - sum_n C(i|n,o) <n|rho|o>| with n over the output basis."""
    rho = np.asarray(rho)
    vo = _vec(table, o)
    total = sum(
        coherence_coefficient(table, i, n, o).value * inner(_vec(table, n), rho @ vo) for n in OUTPUTS
    )
    return abs(kd_value(rho, table, i, o) - total)


_DIFFERENCE_ROUTES = {
    # target: (coherence bra o, path-defining state s, the state's output port)
    "31": ("1", "S2"),
    "32": ("2", "S1"),
}


def current_difference_coefficients(table, target):
    """C(i|3,o) from the difference of two conditional-current patterns.

    For o = 1 the well-defined path state is |S2>; for o = 2 it is |S1>:

        C(i|3,o) = <o|s>/<3|s> * (W(i|s,o) - |<i|o>|^2)

    The subtracted term uses the detected output ``o`` in both cases.
    """
    target = str(target)
    if target not in _DIFFERENCE_ROUTES:
        raise ValueError(f"target must be '31' or '32', got {target!r}")
    o, s = _DIFFERENCE_ROUTES[target]
    rho_s = np.outer(table.vectors[s], table.vectors[s].conj())
    vo = basis(int(o))
    ratio = inner(vo, table.vectors[s]) / inner(basis(3), table.vectors[s])
    out = {}
    for i in PATHS:
        w = weak_value(rho_s, table, i, o).value
        out[i] = ratio * (w - abs(inner(table.vectors[i], vo)) ** 2)
    return out


def weak_report(rho, table):
    """Evaluate every (path, outcome) pair plus continuity residuals."""
    probs = {o: postselection_probability(rho, table, o) for o in OUTPUTS}
    weak = {}
    kd = {}
    residuals = {}
    for o in OUTPUTS:
        for i in PATHS:
            kd[(i, o)] = kd_value(rho, table, i, o)
            weak[(i, o)] = kd[(i, o)] / probs[o] if probs[o] > POSTSELECTION_TOL else None
        if probs[o] > POSTSELECTION_TOL:
            residuals[o] = continuity_residuals(rho, table, o)
    return WeakReport(outcome_probabilities=probs, weak=weak, kd=kd, residuals=residuals)
