import math
import numpy
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from fuzzysigma.graph import (
    FuzzyGraph, ConstraintError, InvalidArgumentError, DegenerateInputError,
    degree, degrees, fuzzy_size, average_degree, sigma_star, sigma_pairwise,
    sigma_edge_sum, sigma_weighted, d_max_vertex, d_max_profile, lambda_max,
    excess_profile, max_deviation, is_regular, summarize,
)
from fuzzysigma.families import NuMode, triangle_example, regular_example
from fuzzysigma.tolerance import EXACT_TOL, IDENTITY_TOL, INVOLUTION_TOL
from .strategies import fuzzy_graphs


def test_triangle_example():
    g = triangle_example()
    assert degrees(g).tolist() == pytest.approx([1.1, 1.4, 0.9], abs=EXACT_TOL)
    assert fuzzy_size(g) == pytest.approx(1.7, abs=EXACT_TOL)
    assert average_degree(g) == pytest.approx(17 / 15, abs=EXACT_TOL)
    assert sigma_star(g) == pytest.approx(19 / 450, abs=EXACT_TOL)
    assert sigma_edge_sum(g) == pytest.approx(0.234, abs=EXACT_TOL)
    assert not is_regular(g)


def test_regular_example():
    g = regular_example()
    assert numpy.all(numpy.abs(degrees(g) - 1.0) <= INVOLUTION_TOL)
    assert fuzzy_size(g) == pytest.approx(3.0, abs=INVOLUTION_TOL)
    assert sigma_star(g) == pytest.approx(0.0, abs=INVOLUTION_TOL)
    assert is_regular(g)
    assert g.positive_edge_count() == 9


def test_degree_checks_vertex():
    g = triangle_example()
    assert degree(g, 1) == pytest.approx(1.4)
    with pytest.raises(InvalidArgumentError):
        degree(g, 3)
    with pytest.raises(InvalidArgumentError):
        degree(g, -1)


@pytest.mark.parametrize("nu, mu, where", [
    ([1.0, 1.0], [[0.0, 0.5], [0.4, 0.0]], r"edge \(0,1\)"),
    ([1.0, 1.0], [[0.2, 0.0], [0.0, 0.0]], r"vertex 0"),
    ([0.5, 1.0], [[0.0, 0.9], [0.9, 0.0]], r"edge \(0,1\)"),
    ([1.5, 1.0], [[0.0, 0.0], [0.0, 0.0]], r"vertex 0"),
    ([1.0, 1.0], [[0.0, -0.1], [-0.1, 0.0]], r"edge \(0,1\)"),
    ([1.0, float('nan')], [[0.0, 0.0], [0.0, 0.0]], r"finite"),
])
def test_constraint_errors(nu, mu, where):
    with pytest.raises(ConstraintError, match=where):
        FuzzyGraph(nu, mu)


def test_from_edges_rejects_bad_records():
    with pytest.raises(ConstraintError, match=r"duplicate"):
        FuzzyGraph.from_edges([1, 1], [(0, 1, 0.5), (1, 0, 0.5)])
    with pytest.raises(ConstraintError, match=r"loops"):
        FuzzyGraph.from_edges([1, 1], [(1, 1, 0.5)])
    with pytest.raises(ConstraintError, match=r"out of range"):
        FuzzyGraph.from_edges([1, 1], [(0, 2, 0.5)])


def test_graph_is_immutable():
    g = triangle_example()
    with pytest.raises(ValueError):
        g.mu[0, 1] = 0.1
    with pytest.raises(ValueError):
        g.nu[0] = 0.1


def test_empty_graph_is_degenerate():
    g = FuzzyGraph.edgeless(0)
    assert g.n == 0
    assert fuzzy_size(g) == 0.0
    with pytest.raises(DegenerateInputError):
        sigma_star(g)
    with pytest.raises(DegenerateInputError):
        summarize(g)
    with pytest.raises(InvalidArgumentError):
        FuzzyGraph.edgeless(-1)


def test_sigma_weighted_uses_unweighted_mean():
    g = FuzzyGraph.from_edges([1.0, 0.5, 1.0], [(0, 1, 0.4), (0, 2, 0.3), (1, 2, 0.5)])
    d = [0.7, 0.9, 0.8]
    nu = [1.0, 0.5, 1.0]
    lam = sum(d) / 3
    expected = sum(w * (x - lam) ** 2 for w, x in zip(nu, d)) / sum(nu)
    assert sigma_weighted(g) == pytest.approx(expected, abs=EXACT_TOL)
    assert sigma_weighted(g) == pytest.approx(0.006, abs=EXACT_TOL)


def test_sigma_weighted_without_membership():
    g = FuzzyGraph.edgeless(3, nu=[0.0, 0.0, 0.0])
    with pytest.raises(DegenerateInputError):
        sigma_weighted(g)
    report = summarize(g)
    assert math.isnan(report.sigma_weighted)
    assert not report.sigma_weighted_defined
    assert report.sigma_star == 0.0


def test_d_max_profile():
    g = FuzzyGraph.from_edges([1.0, 0.5, 1.0], [(0, 2, 1.0)])
    assert d_max_profile(g).tolist() == pytest.approx([1.5, 1.0, 1.5])
    assert d_max_vertex(g, 1) == pytest.approx(1.0)
    assert lambda_max(g) == pytest.approx(4 / 3)
    assert excess_profile(g).tolist() == pytest.approx([1 / 6, -1 / 3, 1 / 6])


def test_summarize_fields():
    report = summarize(triangle_example())
    assert report.n == 3
    assert report.delta_max == pytest.approx(1.4)
    assert report.delta_min == pytest.approx(0.9)
    assert report.lambda_ == pytest.approx(17 / 15)
    assert report.sigma_weighted == pytest.approx(report.sigma_star)
    d = report.to_dict()
    assert 'lambda' in d and 'lambda_' not in d
    assert d['degrees'] == pytest.approx([1.1, 1.4, 0.9])


@given(fuzzy_graphs())
@settings(max_examples=200, deadline=None)
def test_degree_sum_is_twice_the_size(g):
    assert degrees(g).sum() == pytest.approx(2 * fuzzy_size(g), abs=IDENTITY_TOL)


@given(fuzzy_graphs())
@settings(max_examples=200, deadline=None)
def test_pairwise_form_matches_variance(g):
    assert sigma_pairwise(g) == pytest.approx(sigma_star(g), abs=IDENTITY_TOL)
    assert sigma_star(g) >= 0.0


@given(fuzzy_graphs(nu_mode=NuMode.ONE))
@settings(max_examples=100, deadline=None)
def test_weighted_form_reduces_to_variance(g):
    assert sigma_weighted(g) == pytest.approx(sigma_star(g), abs=IDENTITY_TOL)


@given(fuzzy_graphs())
@settings(max_examples=100, deadline=None)
def test_zero_iff_regular(g):
    if is_regular(g):
        assert sigma_star(g) <= EXACT_TOL
    else:
        assert sigma_star(g) > 0.0
        assert max_deviation(g) > 0.0


def test_edges_and_equality():
    g = triangle_example()
    assert list(g.edges()) == [(0, 1, 0.8), (0, 2, 0.3), (1, 2, 0.6)]
    assert g == triangle_example()
    assert hash(g) == hash(triangle_example())
    assert g != regular_example()
    assert g.allclose(FuzzyGraph(g.nu, g.mu + 1e-13 * (1 - numpy.eye(3))), 1e-12)
    assert repr(g) == "FuzzyGraph(n=3, edges=3)"


@given(fuzzy_graphs(nu_mode=NuMode.ONE), st.floats(min_value=0.01, max_value=1.0))
@settings(max_examples=200, deadline=None)
def test_scaling_memberships(g, c):
    scaled = FuzzyGraph(g.nu, g.mu * c)
    assert sigma_star(scaled) == pytest.approx(c ** 2 * sigma_star(g), abs=IDENTITY_TOL)
    assert sigma_edge_sum(scaled) == pytest.approx(c ** 3 * sigma_edge_sum(g), abs=IDENTITY_TOL)
