"""The five-beam-splitter network built from two free reflectivities.

Every path of the interferometer is a fixed unit vector in the input basis
{|1>, |2>, |3>}.  Consecutive beam splitters swap two of the three paths, so
the ten paths group into five overlapping orthonormal contexts, and the
last splitter maps the network back onto the input basis.
"""

from dataclasses import dataclass, field
from math import sqrt

import numpy as np

from .errors import DegenerateReflectivity, NonOrthogonalInputs
from .hilbert import basis, inner, norm

PATHS = ("1", "2", "3", "S1", "D1", "f", "P1", "S2", "P2", "D2")
OUTER_PATHS = ("1", "S1", "f", "S2", "2")
INNER_PATHS = ("3", "D1", "P1", "P2", "D2")
OUTPUTS = ("1", "2", "3")

# fixed order of the construction sequence
CONTEXTS = (
    ("1", "2", "3"),
    ("1", "S1", "D1"),
    ("f", "S1", "P1"),
    ("f", "S2", "P2"),
    ("2", "S2", "D2"),
)

ORTHO_TOL = 1e-12


@dataclass(frozen=True)
class InterferometerConfig:
    r1: float
    r2: float
    rf: float
    rs1: float
    rs2: float

    def reflectivities(self):
        return {"r1": self.r1, "r2": self.r2, "rf": self.rf, "rs1": self.rs1, "rs2": self.rs2}


@dataclass(frozen=True)
class BeamSplitter:
    """One splitter: outer input ``a`` and inner input ``b`` mapped to ``u``, ``v``."""

    name: str
    inputs: tuple
    outputs: tuple
    reflectivity: float


@dataclass(frozen=True)
class Network:
    config: InterferometerConfig
    vectors: dict
    splitters: tuple
    outputs: dict = field(default_factory=dict)

    def __getitem__(self, path):
        return self.vectors[path]


def _check_open_unit(name, r):
    if not (0.0 < r < 1.0):
        raise DegenerateReflectivity(f"{name}={r!r} must lie strictly inside (0, 1)")


def derive_reflectivities(r1, r2):
    """Complete (r1, r2) with the three reflectivities fixed by cycle closure."""
    r1 = float(r1)
    r2 = float(r2)
    _check_open_unit("r1", r1)
    _check_open_unit("r2", r2)
    rf = (1.0 - r1) * (1.0 - r2)
    rs1 = 1.0 - r2 / (1.0 - rf)
    rs2 = 1.0 - r1 / (1.0 - rf)
    for name, r in (("rf", rf), ("rs1", rs1), ("rs2", rs2)):
        _check_open_unit(name, r)
    return InterferometerConfig(r1=r1, r2=r2, rf=rf, rs1=rs1, rs2=rs2)


def beamsplitter_pair(a, b, reflectivity):
    """Mix outer path ``a`` with inner path ``b``.

    u = sqrt(R) a + sqrt(1-R) b,  v = sqrt(1-R) a - sqrt(R) b
    (the reflected inner path picks up the minus sign).
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if abs(inner(a, b)) > ORTHO_TOL:
        raise NonOrthogonalInputs(f"|<a|b>| = {abs(inner(a, b)):.3g}")
    if abs(norm(a) - 1) > ORTHO_TOL or abs(norm(b) - 1) > ORTHO_TOL:
        raise NonOrthogonalInputs("beam splitter inputs must be unit vectors")
    t = sqrt(reflectivity)
    s = sqrt(1.0 - reflectivity)
    return t * a + s * b, s * a - t * b


def build_network(config):
    e1, e2, e3 = basis(1), basis(2), basis(3)
    vec = {"1": e1, "2": e2, "3": e3}
    layout = (
        ("BS1", ("2", "3"), ("S1", "D1"), config.r1),
        ("BS2", ("1", "D1"), ("f", "P1"), config.rs1),
        ("BS3", ("S1", "P1"), ("S2", "P2"), config.rf),
        ("BS4", ("f", "P2"), ("2", "D2"), config.rs2),
        ("BS5", ("S2", "D2"), ("1", "3"), config.r2),
    )
    outputs = {}
    splitters = []
    for name, (a, b), (u, v), r in layout:
        vu, vv = beamsplitter_pair(vec[a], vec[b], r)
        for label, vector in ((u, vu), (v, vv)):
            if label in OUTPUTS:
                outputs[label] = vector
            else:
                vec[label] = vector
        splitters.append(BeamSplitter(name, (a, b), (u, v), r))
    for v in vec.values():
        v.setflags(write=False)
    return Network(config=config, vectors=vec, splitters=tuple(splitters), outputs=outputs)


def closure_residual(table):
    """Largest entrywise deviation of the three output vectors from e1, e2, e3 (no phase freedom)."""
    return max(
        float(np.max(np.abs(table.outputs[o] - basis(int(o))))) for o in OUTPUTS
    )


def path_vector(table, path):
    return table.vectors[path]


def contexts():
    return list(CONTEXTS)


def splitter_vectors(table, splitter):
    """(a, b, u, v) vectors of a splitter record; outputs 1/2/3 resolve to the closing vectors."""
    a, b = (table.vectors[p] for p in splitter.inputs)
    u, v = (table.outputs[p] if p in OUTPUTS else table.vectors[p] for p in splitter.outputs)
    return a, b, u, v


def network(r1=0.5, r2=0.5):
    """Shortcut: derive the reflectivities and build the network."""
    return build_network(derive_reflectivities(r1, r2))
