"""Noncontextual inequality P(f) <= P(D1) + P(D2) and reflectivity scans."""

import csv
import io
from dataclasses import dataclass
from math import sqrt

import numpy as np

from .errors import DegenerateReflectivity, ImpossiblePostselection
from .interferometer import build_network, derive_reflectivities
from .states import make_nf, nf_closed_forms, path_probability
from .weak import POSTSELECTION_TOL, kd_value, postselection_probability

VIOLATION_TOL = 1e-10


@dataclass
class ContextualityReport:
    """Margin P(D1) + P(D2) - P(f) and its split over the three outcomes.

    The three terms are the real parts of W(P2|1)P(1), W(P1|2)P(2) and
    (W(f|3) + W(P1|3) + W(P2|3))P(3).  ``identity_residual`` also absorbs the
    imaginary parts, which must cancel for any Hermitian state.
    """

    margin: float
    p_f: float
    p_d1: float
    p_d2: float
    decomposition_terms: tuple
    identity_residual: float
    violated: bool
    undefined_outcomes: tuple = ()

    @property
    def weak_values_defined(self):
        return not self.undefined_outcomes


def noncontextual_margin(rho, table, strict=False):
    """Evaluate the inequality for ``rho``.

    The decomposition is accumulated from KD numerators, so it is available
    for every state.  With ``strict=True`` an outcome of vanishing
    probability raises :class:`ImpossiblePostselection`; the report is still
    attached to the exception.
    """
    p_f = path_probability(rho, table, "f")
    p_d1 = path_probability(rho, table, "D1")
    p_d2 = path_probability(rho, table, "D2")
    margin = p_d1 + p_d2 - p_f

    t1 = kd_value(rho, table, "P2", "1")
    t2 = kd_value(rho, table, "P1", "2")
    t3 = sum(kd_value(rho, table, i, "3") for i in ("f", "P1", "P2"))
    terms = (t1.real, t2.real, t3.real)
    residual = abs(margin - (t1 + t2 + t3))

    undefined = tuple(
        o for o in ("1", "2", "3") if postselection_probability(rho, table, o) <= POSTSELECTION_TOL
    )
    report = ContextualityReport(
        margin=margin,
        p_f=p_f,
        p_d1=p_d1,
        p_d2=p_d2,
        decomposition_terms=terms,
        identity_residual=float(residual),
        violated=margin < -VIOLATION_TOL,
        undefined_outcomes=undefined,
    )
    if strict and undefined:
        raise ImpossiblePostselection(
            f"weak values undefined for outcome(s) {', '.join(undefined)}", report=report
        )
    return report


@dataclass
class ScanResult:
    r1_grid: np.ndarray
    r2_grid: np.ndarray
    pf_closed: np.ndarray
    pf_propagated: np.ndarray
    argmax: tuple
    max_value: float

    @property
    def delta(self):
        return np.abs(self.pf_closed - self.pf_propagated)

    def rows(self):
        for a, r1 in enumerate(self.r1_grid):
            for b, r2 in enumerate(self.r2_grid):
                yield (float(r1), float(r2), float(self.pf_closed[a, b]),
                       float(self.pf_propagated[a, b]), float(self.delta[a, b]))

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["r1", "r2", "pf_closed", "pf_propagated", "delta"])
        for row in self.rows():
            w.writerow([f"{x:.12g}" for x in row])
        return buf.getvalue()


def propagated_pf(config):
    table = build_network(config)
    nf = make_nf(table)
    return float(abs(np.vdot(table.vectors["f"], nf)) ** 2)


def scan_violation(r1_grid, r2_grid, agreement_tol=1e-12):
    """P(f|N_f) over a reflectivity grid, by closed form and by propagation."""
    r1_grid = np.asarray(r1_grid, dtype=float)
    r2_grid = np.asarray(r2_grid, dtype=float)
    if r1_grid.size < 2 or r2_grid.size < 2:
        raise ValueError("each grid needs at least two points")
    for g in (r1_grid, r2_grid):
        if np.any(g <= 0.0) or np.any(g >= 1.0):
            raise DegenerateReflectivity("scan grid values must lie strictly inside (0, 1)")
    closed = np.empty((r1_grid.size, r2_grid.size))
    prop = np.empty_like(closed)
    for a, r1 in enumerate(r1_grid):
        for b, r2 in enumerate(r2_grid):
            cfg = derive_reflectivities(r1, r2)
            closed[a, b] = nf_closed_forms(cfg)["pf"]
            prop[a, b] = propagated_pf(cfg)
    worst = float(np.max(np.abs(closed - prop)))
    if worst > agreement_tol:
        raise AssertionError(f"closed form and propagation disagree by {worst:.3g}")
    idx = np.unravel_index(int(np.argmax(prop)), prop.shape)
    return ScanResult(r1_grid, r2_grid, closed, prop, (int(idx[0]), int(idx[1])), float(prop[idx]))


def symmetric_reflectivity():
    """Reflectivity R with R = (1 - R)^2, making all five splitters equal."""
    return (3.0 - sqrt(5.0)) / 2.0
