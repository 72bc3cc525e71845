"""Exit criteria, one function each.

Every criterion returns ``(ok, detail)``.  Results are echoed as one
PASS/FAIL line per criterion in the pytest terminal summary, and the module
can also be run directly: ``python -m tests.test_acceptance``.
"""

import numpy as np
import pytest

from ctxfer.contextuality import noncontextual_margin, scan_violation, symmetric_reflectivity
from ctxfer.hilbert import maximally_mixed, pure_density, random_density
from ctxfer.interferometer import CONTEXTS, OUTPUTS, PATHS, closure_residual, derive_reflectivities, network
from ctxfer.measurement import mark_path, probe_extrapolate, sample_context, weak_probe
from ctxfer.states import make_nf, nf_closed_forms, nf_density, path_probability
from ctxfer.weak import (
    coherence_coefficient,
    continuity_residuals,
    current_difference_coefficients,
    dcont_check,
    kd_reconstruction_residual,
    weak_value,
)

from .common import GRID_CONFIGS

RESULTS = {}
RANDOM = [random_density(seed) for seed in range(100)]


def _grid():
    return [network(a, b) for a, b in GRID_CONFIGS]


def c01_reflectivity_closure():
    cfg = derive_reflectivities(0.5, 0.5)
    err = max(abs(cfg.rf - 0.25), abs(cfg.rs1 - 1 / 3), abs(cfg.rs2 - 1 / 3))
    return err <= 1e-15, f"max deviation {err:.2e} (tol 1e-15)"


def c02_cycle_closure():
    worst = max(closure_residual(t) for t in _grid())
    return worst <= 1e-10, f"max closure residual {worst:.2e} over {len(GRID_CONFIGS)} configs (tol 1e-10)"


def c03_paradox_state():
    t = network(0.5, 0.5)
    nf = make_nf(t)
    rho = nf_density(t)
    errs = [float(np.max(np.abs(nf - np.ones(3) / np.sqrt(3))))]
    errs += [abs(path_probability(rho, t, o) - 1 / 3) for o in OUTPUTS]
    errs += [abs(path_probability(rho, t, "f") - 1 / 9)]
    errs += [path_probability(rho, t, "D1"), path_probability(rho, t, "D2")]
    return max(errs) <= 1e-12, f"max deviation {max(errs):.2e} (tol 1e-12)"


def c04_closed_forms():
    worst = 0.0
    for t in _grid():
        cf = nf_closed_forms(t.config)
        rho = nf_density(t)
        for key, path in (("p1", "1"), ("p2", "2"), ("p3", "3"), ("pf", "f")):
            worst = max(worst, abs(cf[key] - path_probability(rho, t, path)))
        worst = max(worst, abs(cf["pf"] - t.config.rs1 * cf["p1"]))
    return worst <= 1e-12, f"max deviation {worst:.2e} (tol 1e-12)"


HALF_WEAK_TABLE = {
    ("f", "1"): 1 / 3, ("f", "2"): 1 / 3, ("f", "3"): -1 / 3,
    ("P1", "2"): -1 / 3, ("P2", "1"): -1 / 3,
    ("P1", "3"): 1 / 3, ("P2", "3"): 1 / 3,
    ("P1", "1"): 2 / 3, ("P2", "2"): 2 / 3,
    ("S2", "1"): 1.0, ("S1", "2"): 1.0,
    **{(d, o): 0.0 for d in ("D1", "D2") for o in OUTPUTS},
}


def c05_weak_table():
    t = network(0.5, 0.5)
    rho = nf_density(t)
    worst = max(abs(weak_value(rho, t, i, o).value - w) for (i, o), w in HALF_WEAK_TABLE.items())
    return worst <= 1e-12, f"{len(HALF_WEAK_TABLE)} entries, max deviation {worst:.2e} (tol 1e-12)"


def c06_continuity():
    t = network(0.5, 0.5)
    bs = max(abs(r) for rho in RANDOM for o in OUTPUTS for r in continuity_residuals(rho, t, o))
    dc = max(abs(r) for rho in RANDOM for r in dcont_check(rho, t))
    worst = max(bs, dc)
    return worst <= 1e-10, f"splitters {bs:.2e}, f-balance {dc:.2e} (tol 1e-10)"


def c07_kd_reconstruction():
    t = network(0.5, 0.5)
    rec = max(kd_reconstruction_residual(rho, t, i, o) for rho in RANDOM for i in PATHS for o in OUTPUTS)
    sums = max(
        abs(sum(coherence_coefficient(t, i, n, o).value for i in ctx) - (n == o))
        for ctx in CONTEXTS for n in OUTPUTS for o in OUTPUTS
    )
    c = {i: coherence_coefficient(t, i, "1", "2").value for i in ("P1", "P2", "f")}
    named = max(abs(c["P1"] + 1 / 3), abs(c["P2"] + 1 / 3), abs(c["f"] - 1 / 3))
    ok = rec <= 1e-12 and sums <= 1e-12 and named <= 1e-12
    return ok, f"reconstruction {rec:.2e}, context sums {sums:.2e}, C(.|1,2) {named:.2e} (tol 1e-12)"


def c08_difference_route():
    worst = 0.0
    for t in _grid():
        for target, o in (("31", "1"), ("32", "2")):
            route = current_difference_coefficients(t, target)
            for i in PATHS:
                worst = max(worst, abs(route[i] - coherence_coefficient(t, i, "3", o).value))
    return worst <= 1e-12, f"max route disagreement {worst:.2e} (tol 1e-12)"


def c09_inequality():
    nf_ok = True
    for t in _grid():
        rep = noncontextual_margin(nf_density(t), t)
        pf = nf_closed_forms(t.config)["pf"]
        nf_ok &= rep.margin < 0 and abs(rep.margin + pf) <= 1e-12
    t = network(0.5, 0.5)
    ident = max(noncontextual_margin(random_density(s), t).identity_residual for s in range(1000))
    s2 = noncontextual_margin(pure_density(t["S2"]), t).margin
    mixed = noncontextual_margin(maximally_mixed(), t).margin
    ok = nf_ok and ident <= 1e-10 and s2 >= 0 and abs(mixed - 1 / 3) <= 1e-12
    return ok, (f"N_f margin=-pf on grid: {nf_ok}; identity {ident:.2e} (tol 1e-10); "
                f"margin(S2)={s2:.3g}; margin(I/3)-1/3={mixed - 1 / 3:.1e}")


def c10_scan():
    grid = np.linspace(0.05, 0.95, 21)
    scan = scan_violation(grid, grid)
    a, b = scan.argmax
    at_half = abs(grid[a] - 0.5) <= 1e-12 and abs(grid[b] - 0.5) <= 1e-12
    r = symmetric_reflectivity()
    sym = scan_violation([r, 0.5], [r, 0.5]).pf_propagated[0, 0]
    ok = at_half and abs(scan.max_value - 1 / 9) <= 1e-12 and abs(sym - 0.1055728090) <= 1e-9
    return ok, f"argmax ({grid[a]:.3f}, {grid[b]:.3f}), max {scan.max_value:.15f}, symmetric {sym:.12f}"


def c11_monte_carlo():
    t = network(0.5, 0.5)
    rho = nf_density(t)
    shots = 10**6
    worst = 0.0
    for ctx in (("1", "S1", "D1"), ("f", "S1", "P1")):
        rec = sample_context(rho, t, ctx, shots, 2024)
        for path, freq in rec.frequencies().items():
            p = path_probability(rho, t, path)
            sigma = np.sqrt(p * (1 - p) / shots)
            z = abs(freq - p) / sigma if sigma > 0 else (0.0 if freq == 0 else np.inf)
            worst = max(worst, z)
    same = sample_context(rho, t, "f,S1,P1", shots, 7) == sample_context(rho, t, "f,S1,P1", shots, 7)
    return worst <= 5 and same, f"max |z| {worst:.2f} (tol 5), reproducible: {same}"


def c12_weak_probe():
    t = network(0.5, 0.5)
    rho = nf_density(t)
    worst = 0.0
    decreasing = True
    for (i, o), w in ((("f", "3"), -1 / 3), (("P2", "1"), -1 / 3), (("S2", "1"), 1.0)):
        worst = max(worst, abs(probe_extrapolate(rho, t, i, o, (0.04, 0.02, 0.01)) - w))
        errs = [abs(weak_probe(rho, t, i, o, e).estimate - w) for e in (0.04, 0.02, 0.01)]
        decreasing &= errs[0] > errs[1] > errs[2]
    return worst <= 1e-4 and decreasing, f"max extrapolation error {worst:.2e} (tol 1e-4), decreasing: {decreasing}"


def c13_marker():
    t = network(0.5, 0.5)
    worst = max(
        abs(mark_path(rho, t, i).marginal_flipped() - path_probability(rho, t, i))
        for rho in RANDOM for i in PATHS
    )
    return worst <= 1e-12, f"max deviation {worst:.2e} (tol 1e-12)"


CRITERIA = [
    ("1 reflectivity closure", c01_reflectivity_closure),
    ("2 cycle closure", c02_cycle_closure),
    ("3 paradox state", c03_paradox_state),
    ("4 closed form vs propagation", c04_closed_forms),
    ("5 weak-value table", c05_weak_table),
    ("6 continuity", c06_continuity),
    ("7 KD reconstruction", c07_kd_reconstruction),
    ("8 current-difference route", c08_difference_route),
    ("9 inequality and decomposition", c09_inequality),
    ("10 scan maximum", c10_scan),
    ("11 Monte Carlo", c11_monte_carlo),
    ("12 weak probe", c12_weak_probe),
    ("13 marker identity", c13_marker),
]


@pytest.mark.parametrize("name, check", CRITERIA, ids=[n for n, _ in CRITERIA])
def test_criterion(name, check):
    ok, detail = check()
    RESULTS[name] = (bool(ok), detail)
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {name}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for name, check in CRITERIA:
        ok, detail = check()
        failed += not ok
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {name}: {detail}")
    raise SystemExit(1 if failed else 0)
