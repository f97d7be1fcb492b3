import pytest
from hypothesis import given
from hypothesis import strategies as st

from layered_hilbert import (
    boolean_graph,
    cassidy_shelton,
    complete_layered,
    hilbert_B,
    inv_hilbert_A,
    is_uniform,
    level_window_subgraph,
    minimal_vertices,
    palindromic_graph,
    prescribed_rs,
    random_uniform,
    reduced_cohomology_dims,
    validate,
)
from layered_hilbert.generators import FamilySpec, named_families, prescribed_rs_bounds, random_corpus


def test_complete_layered_counts():
    g = complete_layered(1, 1)
    assert len(g.vertices) == 2 and len(g.edges) == 1
    g = complete_layered(2, 3, 1)
    assert len(g.edges) == 2 * 3 + 3 * 1
    assert reduced_cohomology_dims(g)[2] == (2 - 1) * (3 - 1) * (1 - 1)
    with pytest.raises(ValueError):
        complete_layered(2, 0, 1)


@pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
def test_boolean_counts(N):
    g = boolean_graph(N)
    assert len(g.vertices) == 2**N
    assert len(g.edges) == N * 2 ** (N - 1)


def test_boolean_windows():
    g = boolean_graph(4)
    top = "{1,2,3,4}"
    assert reduced_cohomology_dims(level_window_subgraph(g, top, 3))[1] == 3
    assert reduced_cohomology_dims(level_window_subgraph(g, top, 4))[1] == 0
    with pytest.raises(ValueError):
        boolean_graph(0)


def test_cassidy_shelton_shape():
    g = cassidy_shelton()
    assert len(g.vertices) == 11 and len(g.edges) == 18
    assert is_uniform(g).uniform
    assert minimal_vertices(g).vertices == ("*",)
    d = cassidy_shelton(True)
    assert len(d.edges) == 17 and ("b3", "c2") not in d.edge_set
    assert is_uniform(d).uniform


def test_prescribed_rs_examples():
    assert hilbert_B(prescribed_rs(3, 0)).coeffs == (1, 3, 0, 0)
    assert hilbert_B(prescribed_rs(5, 3)).coeffs == (1, 5, 3, 1)
    with pytest.raises(ValueError):
        prescribed_rs(4, 3)
    with pytest.raises(ValueError):
        prescribed_rs(2, 0)


@pytest.mark.parametrize("r", range(3, 12))
def test_prescribed_rs_bounds_match_band(r):
    lo, hi = prescribed_rs_bounds(r)
    # integers s with r - 3 <= s <= -1 + (r-1)^2/4
    band = [s for s in range(-5, r * r) if r - 3 <= s and 4 * (s + 1) <= (r - 1) ** 2]
    assert (lo, hi) == (band[0], band[-1])
    for s in (lo, hi):
        g = prescribed_rs(r, s)
        assert len(g.positive_vertices) == r
        assert len(g.edges_from_level(2)) == s + 1
        assert is_uniform(g).uniform


def test_palindromic():
    for r in (9, 10, 12):
        g = palindromic_graph(r)
        assert is_uniform(g).uniform and validate(g) == []
        assert len(g.positive_vertices) == r
        assert hilbert_B(g)[1] == r
    assert inv_hilbert_A(palindromic_graph(12)).coeffs == (1, -12, 12, -1)
    with pytest.raises(ValueError):
        palindromic_graph(8)


def test_random_uniform_examples():
    assert is_uniform(random_uniform(0, (1, 2, 2, 1))).uniform
    assert random_uniform(0, (1, 2, 2, 1)).edge_set == random_uniform(0, (1, 2, 2, 1)).edge_set


@given(st.integers(0, 500), st.lists(st.integers(1, 4), min_size=1, max_size=5))
def test_random_uniform_invariants(seed, sizes):
    g = random_uniform(seed, sizes)
    assert validate(g) == []
    assert is_uniform(g).uniform
    assert minimal_vertices(g).all_level_zero
    assert [len(g.level_set(i)) for i in range(len(sizes) - 1, -1, -1)] == sizes


def test_family_specs_build():
    for spec in named_families() + random_corpus(20):
        g = spec.build()
        assert validate(g) == [], spec
        assert is_uniform(g).uniform, spec
    with pytest.raises(ValueError):
        FamilySpec("nope").build()
