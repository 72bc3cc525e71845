"""Counting statistics, a which-path marker, and a weak probe converging on a negative weak value."""

from ctxfer.interferometer import network
from ctxfer.measurement import mark_path, probe_extrapolate, sample_all_contexts, weak_probe
from ctxfer.states import nf_density

t = network(0.5, 0.5)
rho = nf_density(t)

for rec in sample_all_contexts(rho, t, 100_000, seed=11):
    print(rec.context, {k: round(v, 4) for k, v in rec.frequencies().items()})

# a strong marker on f flips with exactly the detection probability
m = mark_path(rho, t, "f")
print("\nmarker on f flipped with probability %.6f" % m.marginal_flipped())

for eps in (0.04, 0.02, 0.01):
    est = weak_probe(rho, t, "f", "3", eps).estimate
    print(f"eps={eps:.2f}  estimate {est.real:+.6f}")
print("extrapolated: %+.8f (weak value -1/3)" % probe_extrapolate(rho, t, "f", "3").real)
