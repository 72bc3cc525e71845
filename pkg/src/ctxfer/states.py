"""Input states and path probabilities.

The state of interest is |N_f>, the unique (up to phase) input that leaves
both D1 and D2 empty and still sends photons through f.
"""

import json
from pathlib import Path

import numpy as np

from .errors import ContextSumViolation, DegenerateKernel, NegativeProbability, ZeroNorm
from .hilbert import inner, norm, pure_density, validate_density
from .interferometer import CONTEXTS, PATHS

NEG_PROB_TOL = 1e-12
CONTEXT_SUM_TOL = 1e-9


def make_nf(table):
    """Unit vector orthogonal to |D1> and |D2>, phased so <1|N_f> > 0."""
    d1 = table.vectors["D1"]
    d2 = table.vectors["D2"]
    # sum_k conj(d)_k n_k = 0 for n = conj(d1) x conj(d2)
    n = np.cross(d1.conj(), d2.conj())
    size = norm(n)
    if size < 1e-12:
        raise DegenerateKernel("|D1> and |D2> are parallel")
    n = n / size
    k = int(np.argmax(np.abs(n) > 1e-12))
    n = n * (abs(n[k]) / n[k])
    if abs(inner(d1, n)) > 1e-12 or abs(inner(d2, n)) > 1e-12:
        raise DegenerateKernel("kernel vector failed orthogonality check")
    return n


def nf_density(table):
    return pure_density(make_nf(table))


def path_probability(rho, table, path):
    """Born probability <i|rho|i> of finding the photon in ``path``."""
    v = table.vectors[path]
    p = float(np.real(np.vdot(v, np.asarray(rho) @ v)))
    if p < -NEG_PROB_TOL:
        raise NegativeProbability(f"P({path}) = {p:.3g}")
    return min(max(p, 0.0), 1.0)


def probability_table(rho, table):
    probs = {path: path_probability(rho, table, path) for path in PATHS}
    for ctx in CONTEXTS:
        total = sum(probs[p] for p in ctx)
        if abs(total - 1.0) > CONTEXT_SUM_TOL:
            raise ContextSumViolation(f"context {ctx} sums to {total:.12g}")
    return probs


def nf_closed_forms(config):
    """Analytic |N_f> probabilities of outputs 1, 2, 3 and of path f."""
    r1, r2 = config.r1, config.r2
    denom = 1.0 - r1 * r2
    p1 = r2 * (1.0 - r1) / denom
    p2 = r1 * (1.0 - r2) / denom
    p3 = (1.0 - r1) * (1.0 - r2) / denom
    pf = r1 * r2 * (1.0 - r1) * (1.0 - r2) / (denom * (1.0 - (1.0 - r1) * (1.0 - r2)))
    # the probability in 1 is split at the second splitter
    if abs(pf - config.rs1 * p1) > 1e-12:
        raise AssertionError(f"P(f) = {pf!r} differs from R_S1 P(1) = {config.rs1 * p1!r}")
    return {"p1": p1, "p2": p2, "p3": p3, "pf": pf}


def _amplitudes_to_density(amps):
    psi = np.asarray(amps, dtype=complex).reshape(-1)
    if psi.shape != (3,):
        raise ValueError(f"expected 3 amplitudes, got {psi.size}")
    n = norm(psi)
    if n < 1e-12:
        raise ZeroNorm("all amplitudes are zero")
    return pure_density(psi / n)


def _complex_from_json(x):
    if isinstance(x, dict):
        return complex(x.get("re", 0.0), x.get("im", 0.0))
    if isinstance(x, (list, tuple)) and len(x) == 2:
        return complex(x[0], x[1])
    return complex(x)


def load_state_file(path):
    """Read a state from JSON.

    Accepted payloads: ``{"density": {"re": [[...]], "im": [[...]]}}``,
    ``{"density": [[{"re":..,"im":..}, ...], ...]}`` or
    ``{"amplitudes": [{"re":..,"im":..}, ...]}``.
    """
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    if "amplitudes" in doc:
        return _amplitudes_to_density([_complex_from_json(a) for a in doc["amplitudes"]])
    dens = doc["density"]
    if isinstance(dens, dict):
        m = np.asarray(dens["re"], dtype=float) + 1j * np.asarray(dens.get("im", np.zeros((3, 3))), dtype=float)
    else:
        m = np.array([[_complex_from_json(x) for x in row] for row in dens], dtype=complex)
    return validate_density(m)


def parse_state(spec, table=None):
    """Turn a user-supplied state description into a validated density matrix.

    ``spec`` may be ``"nf"`` (needs ``table``), comma-separated complex
    amplitudes such as ``"1,1j,0"``, ``"@file.json"``, a length-3 sequence of
    amplitudes or a 3x3 matrix.  Amplitude lists are normalized.
    """
    if isinstance(spec, str):
        s = spec.strip()
        if s.lower() == "nf":
            if table is None:
                raise ValueError("state 'nf' needs an interferometer table")
            return nf_density(table)
        if s.startswith("@"):
            return load_state_file(s[1:])
        try:
            amps = [complex(tok.strip().replace(" ", "")) for tok in s.split(",")]
        except ValueError as exc:
            raise ValueError(f"cannot parse amplitudes {spec!r}") from exc
        return _amplitudes_to_density(amps)
    arr = np.asarray(spec, dtype=complex)
    if arr.shape == (3,):
        return _amplitudes_to_density(arr)
    return validate_density(arr)
