import warnings
from math import comb

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from strategies import uniform_graphs

from layered_hilbert import (
    HypothesisError,
    HypothesisWarning,
    LayeredGraph,
    TruncatedSeries,
    boolean_graph,
    cassidy_shelton,
    complete_layered,
    hilbert_B,
    hilbert_B_low_degree,
    inv_hilbert_A,
    inv_hilbert_A_chain_count,
    numerically_koszul,
    palindromic_graph,
    series_inverse,
    series_mul,
    substitute_neg,
)
from layered_hilbert.series import koszul_product, render, signed_chain_counts

S = TruncatedSeries.of
t = sympy.Symbol("t")


def sympy_inverse(coeffs, D):
    """Oracle: Taylor expansion of 1/p(t) by sympy."""
    p = sum(c * t**k for k, c in enumerate(coeffs))
    poly = sympy.series(1 / p, t, 0, D + 1).removeO()
    return [int(poly.coeff(t, k)) for k in range(D + 1)]


@pytest.fixture
def chain():
    return LayeredGraph({"a": 2, "b": 1, "*": 0}, [("a", "b"), ("b", "*")])


def test_series_mul():
    assert series_mul(S([1, 1], 2), S([1, -1], 2)).coeffs == (1, 0, -1)
    s = S([3, -2, 5, 7])
    assert series_mul(s, TruncatedSeries.one(3)) == s
    with pytest.raises(ValueError):
        series_mul(S([1], 2), S([1], 3))


def test_series_inverse():
    assert series_inverse(S([1, -2], 3)).coeffs == (1, 2, 4, 8)
    assert series_inverse(TruncatedSeries.one(5)) == TruncatedSeries.one(5)
    assert series_mul(S([1, -2], 6), series_inverse(S([1, -2], 6))) == TruncatedSeries.one(6)
    with pytest.raises(ValueError):
        series_inverse(S([2, 1], 3))


def test_series_inverse_cubic_against_sympy():
    coeffs = [1, -9, 9, -1]
    assert sympy_inverse(coeffs, 3) == [1, 9, 72, 568]
    assert series_inverse(S(coeffs, 3)).coeffs == (1, 9, 72, 568)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.sampled_from([1, -1]), st.integers(0, 7))
def test_series_inverse_property(tail, c0, D):
    a = S([c0] + tail, D)
    b = series_inverse(a)
    assert series_mul(a, b) == TruncatedSeries.one(D)
    assert list(b.coeffs) == sympy_inverse(list(a.coeffs), D)


def test_substitute_neg():
    assert substitute_neg(S([1, 3, 1])).coeffs == (1, -3, 1)
    s = S([1, 4, -2, 9])
    assert substitute_neg(substitute_neg(s)) == s
    assert substitute_neg(hilbert_B(boolean_graph(2))).coeffs == (1, -3, 1)


def test_render():
    assert render(S([1, 3, 1])) == "1 + 3t + t^2"
    assert render(S([1, -9, 9, -1])) == "1 - 9t + 9t^2 - t^3"
    assert render(S([0, 0])) == "0"
    assert render(S([-1, 0, 2])) == "-1 + 2t^2"


def test_hilbert_B_examples():
    assert hilbert_B(complete_layered(2, 1)).coeffs == (1, 2)
    assert hilbert_B(boolean_graph(2)).coeffs == (1, 3, 1)
    # closed form for complete graphs at (m_2, m_1, m_0) = (2, 2, 1): 1 + (2+2) t + 2(2-1) t^2
    assert hilbert_B(complete_layered(2, 2, 1)).coeffs == (1, 4, 2)


@pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
def test_boolean_hilbert_B_from_window_dims(N):
    # windows of the Boolean graph below a k-set are Boolean windows of rank k
    expected = [1] + [sum(comb(N, k) * comb(k - 1, i - 1) for k in range(i, N + 1)) for i in range(1, N + 1)]
    assert list(hilbert_B(boolean_graph(N)).coeffs) == expected


def test_boolean_matches_known_inverse_series():
    # h(A(Theta_n), t)^{-1} = (1 - t(2 - t)^n) / (1 - t)
    for n in (1, 2, 3, 4):
        expr = sympy.cancel((1 - t * (2 - t) ** n) / (1 - t))
        expected = [int(sympy.Poly(expr, t).coeff_monomial(t**k)) for k in range(n + 1)]
        assert list(inv_hilbert_A(boolean_graph(n)).coeffs) == expected


def test_hilbert_B_warns_on_non_uniform():
    g = complete_layered(2, 2)
    with pytest.warns(HypothesisWarning):
        hilbert_B(g)
    with pytest.warns(HypothesisWarning):
        inv_hilbert_A(g)
    with pytest.raises(HypothesisError):
        hilbert_B_low_degree(g)
    with pytest.raises(HypothesisError):
        numerically_koszul(g)


def test_low_degree_examples():
    # |V_+| = 1+3+3+3; upper edges 3+6+6 minus upper vertices 1+3+3; depth-3 windows give 1 (a) and 0 (each b_i)
    assert hilbert_B_low_degree(cassidy_shelton()) == (1, 10, 8, 1)
    assert hilbert_B_low_degree(complete_layered(2, 2, 1)) == (1, 4, 2, 0)


def test_inv_hilbert_A_examples(chain):
    assert inv_hilbert_A(chain).coeffs == (1, -2, 0)
    assert inv_hilbert_A(palindromic_graph(9)).coeffs == (1, -9, 9, -1)
    assert inv_hilbert_A(boolean_graph(2)).coeffs == (1, -3, 1)


def test_chain_count_route(chain):
    s = signed_chain_counts(chain)
    assert s == {(1, 1): -1, (2, 2): -1, (2, 1): 1}
    assert inv_hilbert_A_chain_count(chain).coeffs == (1, -2, 0)
    assert inv_hilbert_A_chain_count(complete_layered(2, 1)).coeffs == (1, -2)


def test_chain_count_needs_unique_bottom():
    g = LayeredGraph({"a": 1, "x": 0, "b": 1, "y": 0}, [("a", "x"), ("b", "y")])
    with pytest.raises(HypothesisError):
        inv_hilbert_A_chain_count(g)


@given(uniform_graphs(unique_bottom=True))
def test_routes_agree(g):
    assert inv_hilbert_A(g) == inv_hilbert_A_chain_count(g)


def test_koszul_examples():
    for sizes in [(2, 1), (3, 2, 1), (2, 3, 2, 1)]:
        assert numerically_koszul(complete_layered(*sizes)).verdict
    for N in (1, 2, 3, 4):
        assert numerically_koszul(boolean_graph(N)).verdict
    rep = numerically_koszul(cassidy_shelton())
    assert not rep.verdict and rep.defects[4] >= 1 and rep.defects[3] == 0


def test_koszul_needs_minimal_vertices_on_level_zero():
    g = LayeredGraph({"a": 2, "b": 1, "c": 1, "*": 0}, [("a", "b"), ("b", "*")])
    with pytest.raises(HypothesisError):
        numerically_koszul(g)


@given(uniform_graphs())
def test_koszul_formulations_agree(g):
    rep = numerically_koszul(g)
    assert rep.low_defects == {i: 0 for i in (1, 2) if i <= g.height}
    assert rep.verdict == (substitute_neg(rep.hilbert_B) == rep.inv_hilbert_A)
    assert rep.verdict == (koszul_product(g) == TruncatedSeries.one(g.height))


def test_non_koszul_product_is_not_one():
    g = cassidy_shelton()
    prod = koszul_product(g)
    assert prod != TruncatedSeries.one(g.height)


@given(uniform_graphs())
def test_linear_coefficient_counts_positive_vertices(g):
    assert hilbert_B(g)[1] == len(g.positive_vertices)


@given(uniform_graphs())
def test_low_degree_matches_cohomology(g):
    hb = hilbert_B(g)
    low = hilbert_B_low_degree(g)
    assert list(low) == [hb[k] for k in range(4)]


@given(st.data())
def test_series_invariant_under_relabeling(data):
    g = data.draw(uniform_graphs())
    perm = data.draw(st.permutations(g.vertices))
    h = g.relabel(dict(zip(g.vertices, perm)))
    assert hilbert_B(g) == hilbert_B(h)
    assert inv_hilbert_A(g) == inv_hilbert_A(h)


def test_field_choice_does_not_change_named_families():
    from layered_hilbert import FieldSpec

    for g in (boolean_graph(3), cassidy_shelton(), palindromic_graph(10)):
        assert hilbert_B(g) == hilbert_B(g, FieldSpec(2)) == hilbert_B(g, FieldSpec(3))
