import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from ctxfer.errors import DegenerateReflectivity, NonOrthogonalInputs
from ctxfer.hilbert import basis, inner, projector
from ctxfer.interferometer import (
    CONTEXTS,
    INNER_PATHS,
    OUTER_PATHS,
    PATHS,
    beamsplitter_pair,
    build_network,
    closure_residual,
    contexts,
    derive_reflectivities,
    network,
    path_vector,
    splitter_vectors,
)

from .common import GRID_CONFIGS, R_SYM
from .oracle import exact_network, numeric_network

refl = st.floats(min_value=0.01, max_value=0.99)


def test_derive_half():
    cfg = derive_reflectivities(0.5, 0.5)
    assert cfg.rf == 0.25
    assert abs(cfg.rs1 - 1 / 3) <= 1e-15
    assert abs(cfg.rs2 - 1 / 3) <= 1e-15


def test_derive_symmetric():
    cfg = derive_reflectivities(R_SYM, R_SYM)
    for r in (cfg.rf, cfg.rs1, cfg.rs2):
        assert abs(r - R_SYM) <= 1e-12


@pytest.mark.parametrize("r1, r2", [(0.5, 1.0), (0.0, 0.5), (-0.1, 0.5), (0.5, 1.2)])
def test_derive_rejects(r1, r2):
    with pytest.raises(DegenerateReflectivity):
        derive_reflectivities(r1, r2)


@given(refl, refl)
def test_derive_identities(r1, r2):
    cfg = derive_reflectivities(r1, r2)
    assert cfg.rf == (1 - r1) * (1 - r2)
    assert abs((1 - cfg.rs1) - r2 / (1 - cfg.rf)) <= 1e-15
    assert abs((1 - cfg.rs2) - r1 / (1 - cfg.rf)) <= 1e-15
    assert all(0 < r < 1 for r in cfg.reflectivities().values())


def test_beamsplitter_central_example(half):
    s2, p2 = beamsplitter_pair(half["S1"], half["P1"], 0.25)
    assert np.allclose(s2, 0.5 * half["S1"] + np.sqrt(3) / 2 * half["P1"], atol=1e-15)
    assert np.allclose(p2, np.sqrt(3) / 2 * half["S1"] - 0.5 * half["P1"], atol=1e-15)
    assert np.allclose(s2, half["S2"], atol=1e-15)


def test_beamsplitter_limits():
    e1, e2 = basis(1), basis(2)
    u, v = beamsplitter_pair(e1, e2, 1.0)
    assert np.array_equal(u, e1) and np.array_equal(v, -e2)
    u, v = beamsplitter_pair(e1, e2, 0.5)
    assert np.allclose(u, (e1 + e2) / np.sqrt(2)) and np.allclose(v, (e1 - e2) / np.sqrt(2))


def test_beamsplitter_rejects_overlap():
    with pytest.raises(NonOrthogonalInputs):
        beamsplitter_pair(basis(1), (basis(1) + basis(2)) / np.sqrt(2), 0.3)


@given(refl)
def test_beamsplitter_preserves_span(r):
    a = (basis(1) + 1j * basis(3)) / np.sqrt(2)
    b = basis(2)
    u, v = beamsplitter_pair(a, b, r)
    assert abs(inner(u, v)) <= 1e-12
    assert np.allclose(projector(u) + projector(v), projector(a) + projector(b), atol=1e-12)


def test_half_vectors_match_exact_oracle(half):
    vecs, frame = exact_network(sp.Rational(1, 2), sp.Rational(1, 2))
    for label in PATHS:
        expected = np.array([float(x) for x in vecs[label]])
        assert np.max(np.abs(half[label] - expected)) <= 1e-15
    assert np.allclose(half["S1"], [0, 1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-15)
    assert np.allclose(half["f"], np.array([1, 1, -1]) / np.sqrt(3), atol=1e-15)
    assert np.allclose(half["P2"], -np.array([1, -2, -1]) / np.sqrt(6), atol=1e-15)
    # total frame product maps slots (0, 1, 2) to outputs (2, 1, 3)
    assert frame == sp.Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])


@pytest.mark.parametrize("r1, r2", GRID_CONFIGS[::37])
def test_vectors_match_numeric_oracle(r1, r2):
    table = network(r1, r2)
    vecs, frame = numeric_network(r1, r2)
    for label in PATHS:
        assert np.max(np.abs(table[label] - vecs[label])) <= 1e-13
    assert np.max(np.abs(frame - np.eye(3)[:, [1, 0, 2]])) <= 1e-12


def test_closure_examples(half, sym):
    assert closure_residual(half) <= 1e-12
    assert closure_residual(sym) <= 1e-12
    for o in ("1", "2", "3"):
        assert np.allclose(half.outputs[o], basis(int(o)), atol=1e-12)


def test_closure_grid(grid_tables):
    assert max(closure_residual(t) for t in grid_tables) <= 1e-10


def test_contexts_orthonormal(grid_tables):
    for t in grid_tables:
        for ctx in CONTEXTS:
            g = np.array([[inner(t[a], t[b]) for b in ctx] for a in ctx])
            assert np.max(np.abs(g - np.eye(3))) <= 1e-12


def test_dark_path_inner_products(grid_tables):
    for t in grid_tables:
        c = t.config
        assert abs(inner(t["D2"], t["1"]) - np.sqrt(1 - c.r2)) <= 1e-12
        assert abs(inner(t["D2"], t["S1"]) + np.sqrt(c.r2 * (1 - c.r1))) <= 1e-12


def test_splitter_projector_sums(grid_tables):
    for t in grid_tables[::7]:
        for bs in t.splitters:
            a, b, u, v = splitter_vectors(t, bs)
            lhs = projector(a) + projector(b)
            rhs = projector(u) + projector(v)
            assert np.max(np.abs(lhs - rhs)) <= 1e-12


def test_outer_reflection_equals_inner_transmission(grid_tables):
    """Direct S1 -> S2 amplitude equals the route through path 3."""
    for t in grid_tables[::11]:
        c = t.config
        direct = inner(t["S2"], t["S1"])
        assert abs(direct - np.sqrt(c.rf)) <= 1e-12
        assert abs(direct ** 2 - (1 - c.r1) * (1 - c.r2)) <= 1e-12


def test_accessors(half):
    assert np.array_equal(path_vector(half, "1"), basis(1))
    assert contexts()[0] == ("1", "2", "3")
    assert contexts()[2] == ("f", "S1", "P1")
    assert len(contexts()) == 5
    assert set(OUTER_PATHS) | set(INNER_PATHS) == set(PATHS)
    assert len(set(PATHS)) == 10


def test_vectors_are_frozen(half):
    with pytest.raises(ValueError):
        half["f"][0] = 0


@settings(max_examples=50)
@given(refl, refl)
def test_closure_property(r1, r2):
    assert closure_residual(build_network(derive_reflectivities(r1, r2))) <= 1e-10
