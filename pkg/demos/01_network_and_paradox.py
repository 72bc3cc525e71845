"""Build the interferometer, check that it closes, and look at the paradox state."""

import numpy as np

from ctxfer.interferometer import CONTEXTS, closure_residual, network
from ctxfer.states import nf_closed_forms, nf_density, probability_table

t = network(0.5, 0.5)
print("reflectivities:", t.config.reflectivities())
print("closure residual: %.2e" % closure_residual(t))

# every path vector in the input basis
for name, vec in t.vectors.items():
    print(f"{name:>3}", np.round(vec, 4))

rho = nf_density(t)
probs = probability_table(rho, t)
print("\npath probabilities for N_f")
for ctx in CONTEXTS:
    print("  " + "  ".join(f"P({p})={probs[p]:.4f}" for p in ctx))

# D1 and D2 never fire, so the photon passed through 1 or f, and through 2 or f.
# Yet f alone fires with probability 1/9, far below what that would imply.
print("\nclosed forms:", {k: round(v, 6) for k, v in nf_closed_forms(t.config).items()})
