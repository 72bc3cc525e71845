"""How a coherence between two outputs spreads over the intermediate paths."""

from ctxfer.interferometer import CONTEXTS, network
from ctxfer.weak import coherence_coefficient, current_difference_coefficients

t = network(0.5, 0.5)

print("C(i|3,1)")
for i in ("f", "P1", "S2", "P2", "D2"):
    print(f"  {i:>3} {coherence_coefficient(t, i, '3', '1').value.real:+.4f}")

# each context resolves the coherence completely: the coefficients sum to zero
for ctx in CONTEXTS:
    total = sum(coherence_coefficient(t, i, "1", "2").value for i in ctx)
    print("context", ctx, "sum of C(i|1,2) = %.1e" % abs(total))

# same coefficients from differences of path currents
route = current_difference_coefficients(t, "31")
print("\nfrom current differences:", {k: round(v.real, 4) for k, v in route.items()})
