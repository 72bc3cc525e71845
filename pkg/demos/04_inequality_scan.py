"""Non-contextual bound P(f) <= P(D1) + P(D2) and its violation over reflectivities."""

import numpy as np

from ctxfer.contextuality import noncontextual_margin, scan_violation, symmetric_reflectivity
from ctxfer.hilbert import maximally_mixed, pure_density
from ctxfer.interferometer import network
from ctxfer.states import nf_closed_forms, nf_density

t = network(0.5, 0.5)
for label, rho in (("N_f", nf_density(t)), ("I/3", maximally_mixed()), ("S2", pure_density(t["S2"]))):
    rep = noncontextual_margin(rho, t)
    print(f"{label:>4}: margin {rep.margin:+.6f}  violated={rep.violated}  undefined={rep.undefined_outcomes}")

grid = np.linspace(0.05, 0.95, 19)
scan = scan_violation(grid, grid)
a, b = scan.argmax
print(f"\nstrongest violation {scan.max_value:.6f} at r1={grid[a]:.2f}, r2={grid[b]:.2f}")
print("max |closed form - propagated|: %.1e" % np.max(np.abs(scan.delta)))

r = symmetric_reflectivity()
print(f"all splitters equal at r={r:.6f}: P(f)={nf_closed_forms(network(r, r).config)['pf']:.10f}")
