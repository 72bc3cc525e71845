"""Weak values of every path projector for N_f, postselected on each output."""

from ctxfer.interferometer import OUTPUTS, PATHS, network
from ctxfer.states import nf_density
from ctxfer.weak import weak_report

t = network(0.5, 0.5)
rep = weak_report(nf_density(t), t)

print("path  " + "".join(f"{o:>10}" for o in OUTPUTS))
for i in PATHS:
    cells = []
    for o in OUTPUTS:
        w = rep.weak[(i, o)]
        cells.append(f"{w.real:10.4f}" if w is not None else f"{'undef':>10}")
    print(f"{i:>4}  " + "".join(cells))

# negative entries are the negative currents: f contributes -1/3 when output 3 clicks
print("\nmax continuity residual: %.2e" % rep.max_residual())
