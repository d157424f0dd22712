import math
import pytest
from fuzzysigma.graph import FuzzyGraph, InvalidArgumentError
from fuzzysigma.families import (
    FamilySpec, FamilyKind, NuMode, make_family, random_instance,
    triangle_example, regular_example,
)
from fuzzysigma.fileio import parse_graph
from fuzzysigma.claims import (
    ClaimStatus, Relation, Verdict, registry, get_claim, select_claims, evaluate,
    zero_agrees_with_regular, audit_remarks,
)


def _adversarial() -> FuzzyGraph:
    return make_family(FamilySpec(FamilyKind.TWO_VALUED_ADVERSARIAL, 5, epsilon=0.01))


def test_registry_order():
    claims = registry()
    assert [c.id for c in claims] == ["C%d" % i for i in range(1, 16)]
    assert [c.id for c in claims if c.arity == 2] == ["C12", "C13", "C15"]
    proved = [c.id for c in claims if c.expected_status == ClaimStatus.PROVED_HOLD]
    assert proved == ["C7", "C8", "C10", "C12", "C13", "C15"]
    assert get_claim('C5').expected_status == ClaimStatus.UNDETERMINED
    assert get_claim('c4').expected_status == ClaimStatus.EXPECTED_VIOLATION


def test_unknown_claim_lists_known_ids():
    with pytest.raises(InvalidArgumentError, match="C15"):
        get_claim('C16')


def test_select_claims():
    assert [c.id for c in select_claims("C4, c1")] == ["C1", "C4"]
    assert len(select_claims('all')) == 15
    assert len(select_claims(None)) == 15
    assert [c.id for c in select_claims(['C13', 'C13'])] == ["C13"]


def test_bound_on_largest_degree_fails_on_adversarial_graph():
    result = evaluate(get_claim('C4'), _adversarial(), instance_id="adversarial")
    assert result.lhs == pytest.approx(1.411344)
    assert result.rhs == pytest.approx(0.4752)
    assert result.margin == pytest.approx(-0.936144)
    assert result.violated
    assert not result.proven
    assert len(result.witness) == 1
    assert parse_graph(result.witness[0]).allclose(_adversarial(), 1e-9)


@pytest.mark.parametrize("claimId", ["C1", "C2", "C3", "C6", "C9", "C10", "C11", "C14"])
def test_bounds_hold_on_triangle_example(claimId):
    result = evaluate(get_claim(claimId), triangle_example())
    assert result.verdict == Verdict.HOLDS
    assert result.witness is None


def test_intermediate_step_fails_on_single_edge():
    g = make_family(FamilySpec(FamilyKind.SINGLE_EDGE, 4, alpha=0.9))
    result = evaluate(get_claim('C5'), g)
    assert result.lhs == pytest.approx(0.2025)
    assert result.rhs == pytest.approx(0.151875)
    assert result.violated
    assert not result.proven


def test_lower_bound_skips_regular_graphs():
    result = evaluate(get_claim('C7'), regular_example())
    assert result.verdict == Verdict.INAPPLICABLE
    assert math.isnan(result.lhs) and math.isnan(result.margin)
    assert evaluate(get_claim('C7'), triangle_example()).verdict == Verdict.HOLDS


def test_complement_invariance_needs_full_membership():
    g = FuzzyGraph.from_edges([1.0, 0.5, 1.0], [(0, 1, 0.4)])
    assert evaluate(get_claim('C8'), g).verdict == Verdict.INAPPLICABLE
    result = evaluate(get_claim('C8'), triangle_example())
    assert result.verdict == Verdict.HOLDS
    assert result.proven


def test_zero_characterisation():
    result = evaluate(get_claim('C10'), regular_example())
    assert result.relation == Relation.IFF.value
    assert result.margin == 0.0
    assert evaluate(get_claim('C10'), triangle_example()).margin == 0.0


def test_near_regular_graph_is_neither_zero_nor_regular():
    g = FuzzyGraph.from_edges([1.0, 1.0, 1.0], [(0, 1, 0.5), (0, 2, 0.5), (1, 2, 0.50000001)])
    result = evaluate(get_claim('C10'), g)
    assert result.proven
    assert result.lhs == pytest.approx(2.2e-17, rel=0.01)
    assert result.rhs == pytest.approx(6.67e-9, rel=0.01)
    assert result.margin == 0.0
    assert result.verdict == Verdict.HOLDS


@pytest.mark.parametrize("sigma, deviation, n, agree", [
    (0.0, 0.0, 3, True),
    (1e-12, 1e-6, 4, True),
    (5e-19, 1e-9, 4, True),
    (2.5e-19, 2e-9, 16, True),
    (2.5e-19, 1e-7, 16, False),
    (2e-18, 5e-10, 4, False),
])
def test_zero_and_regular_thresholds(sigma, deviation, n, agree):
    assert zero_agrees_with_regular(sigma, deviation, n) == agree


@pytest.mark.parametrize("n", [2, 4, 8, 16])
def test_single_edge_attains_extremal_bound(n):
    result = evaluate(get_claim('C11'), make_family(FamilySpec(FamilyKind.SINGLE_EDGE, n, alpha=0.9)))
    assert result.tight
    assert result.verdict == Verdict.HOLDS


def test_extremal_bound_needs_two_vertices():
    assert evaluate(get_claim('C11'), FuzzyGraph.edgeless(1)).verdict == Verdict.INAPPLICABLE


def test_single_edge_is_the_equality_case():
    result = evaluate(get_claim('C11'), make_family(FamilySpec(FamilyKind.SINGLE_EDGE, 4, alpha=0.9)))
    assert result.equality_case_ok is True
    assert result.witness is None


def test_tight_bound_outside_equality_case_still_holds():
    g = FuzzyGraph.from_edges([1.0] * 4, [(0, 1, 0.9), (2, 3, 1e-9)])
    result = evaluate(get_claim('C11'), g)
    assert result.lhs == pytest.approx(0.20249999955, abs=1e-12)
    assert result.rhs == pytest.approx(0.20250000045, abs=1e-12)
    assert result.margin == result.rhs - result.lhs
    assert result.margin > 0.0
    assert result.tight
    assert result.verdict == Verdict.HOLDS
    assert result.equality_case_ok is False
    assert len(result.witness) == 1


def test_loose_bound_skips_equality_case():
    assert evaluate(get_claim('C11'), triangle_example()).equality_case_ok is None


def test_cartesian_additivity_scope():
    g1 = triangle_example()
    g2 = make_family(FamilySpec(FamilyKind.PATH, 3, alpha=0.5))
    result = evaluate(get_claim('C12'), g1, g2)
    assert result.verdict == Verdict.HOLDS
    assert result.proven
    truncated = random_instance(FamilySpec(FamilyKind.RANDOM_UNIFORM, 4, edge_probability=1.0,
                                           nu_mode=NuMode.RANDOM), 0)
    assert not evaluate(get_claim('C12'), truncated, g2).proven


def test_union_pooled_variance():
    result = evaluate(get_claim('C13'), triangle_example(), regular_example())
    assert result.verdict == Verdict.HOLDS
    assert result.margin == pytest.approx(0.0, abs=1e-12)


def test_composition_identity_skips_rejected_construction():
    g1 = make_family(FamilySpec(FamilyKind.SINGLE_EDGE, 2, alpha=0.9))
    g2 = FuzzyGraph.edgeless(2, nu=[0.5, 0.5])
    assert evaluate(get_claim('C15'), g1, g2).verdict == Verdict.INAPPLICABLE
    assert evaluate(get_claim('C15'), triangle_example(), g1).verdict == Verdict.HOLDS


def test_complement_range_reports_nearer_bound():
    result = evaluate(get_claim('C14'), triangle_example())
    assert result.relation == Relation.RANGE.value
    assert result.tight
    assert result.verdict == Verdict.HOLDS


def test_arity_is_checked():
    with pytest.raises(InvalidArgumentError):
        evaluate(get_claim('C13'), triangle_example())
    with pytest.raises(InvalidArgumentError):
        evaluate(get_claim('C1'), triangle_example(), triangle_example())


def test_remarks():
    remarks = {r.id: r for r in audit_remarks()}
    assert sorted(remarks) == ["R%d" % i for i in range(1, 8)]
    # どの記述も数値とは合わない
    assert not any(r.consistent for r in remarks.values())
    assert "three cross edges" in remarks['R5'].observed


def test_tensor_minimum_breaks_degree_product():
    r = {r.id: r for r in audit_remarks()}['R7']
    assert not r.consistent
    assert "d(0,0) = 0.800000000" in r.observed
    assert r.expected.endswith("= 0.550000000")
