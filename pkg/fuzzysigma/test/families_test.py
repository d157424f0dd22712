import numpy
import pytest
from fuzzysigma.graph import InvalidArgumentError, degrees, sigma_star, fuzzy_size
from fuzzysigma.families import (
    FamilySpec, FamilyKind, NuMode, make_family, random_instance, random_stream,
    star_sigma_closed_form, star_sigma_verbatim, path_sigma_closed_form,
)
from fuzzysigma.tolerance import EXACT_TOL

ALPHAS = [k / 10 for k in range(1, 11)]


@pytest.mark.parametrize("n", range(2, 65))
def test_star_closed_form(n):
    for alpha in ALPHAS:
        g = make_family(FamilySpec(FamilyKind.STAR, n, alpha=alpha))
        assert sigma_star(g) == pytest.approx(star_sigma_closed_form(n, alpha), abs=EXACT_TOL)


@pytest.mark.parametrize("n", range(2, 65))
def test_path_closed_form(n):
    for alpha in ALPHAS:
        g = make_family(FamilySpec(FamilyKind.PATH, n, alpha=alpha))
        assert sigma_star(g) == pytest.approx(path_sigma_closed_form(n, alpha), abs=EXACT_TOL)


def test_star_display_disagrees_with_degrees():
    assert star_sigma_closed_form(5, 0.5) == pytest.approx(0.36)
    assert star_sigma_verbatim(5, 0.5) == pytest.approx(2.12)


def test_closed_forms_check_arguments():
    with pytest.raises(InvalidArgumentError):
        star_sigma_closed_form(1, 0.5)
    with pytest.raises(InvalidArgumentError):
        path_sigma_closed_form(4, 0.0)


def test_named_families():
    star = make_family(FamilySpec(FamilyKind.STAR, 4, alpha=0.5))
    assert degrees(star).tolist() == pytest.approx([1.5, 0.5, 0.5, 0.5])
    cycle = make_family(FamilySpec(FamilyKind.CYCLE, 5, alpha=0.3))
    assert degrees(cycle).tolist() == pytest.approx([0.6] * 5)
    complete = make_family(FamilySpec(FamilyKind.COMPLETE, 4))
    assert fuzzy_size(complete) == pytest.approx(6.0)
    single = make_family(FamilySpec(FamilyKind.SINGLE_EDGE, 4, alpha=0.9))
    assert sigma_star(single) == pytest.approx(0.2025)
    assert single.positive_edge_count() == 1


def test_regular_union():
    g = make_family(FamilySpec(FamilyKind.REGULAR_UNION, 6))
    assert degrees(g).tolist() == pytest.approx([1.0] * 6)
    assert fuzzy_size(g) == pytest.approx(3.0)
    assert g.mu[0, 3] == pytest.approx(0.2)


def test_two_valued_adversarial():
    g = make_family(FamilySpec(FamilyKind.TWO_VALUED_ADVERSARIAL, 5, epsilon=0.01))
    assert degrees(g).tolist() == pytest.approx([0.04, 3.01, 3.01, 3.01, 3.01])
    assert sigma_star(g) == pytest.approx(1.411344)


@pytest.mark.parametrize("spec, field", [
    (FamilySpec(FamilyKind.STAR, 1), "n"),
    (FamilySpec(FamilyKind.CYCLE, 2), "n"),
    (FamilySpec(FamilyKind.REGULAR_UNION, 7), "n"),
    (FamilySpec(FamilyKind.PATH, 4, alpha=0.0), "alpha"),
    (FamilySpec(FamilyKind.PATH, 4, alpha=1.5), "alpha"),
    (FamilySpec(FamilyKind.TWO_VALUED_ADVERSARIAL, 4, epsilon=1.0), "epsilon"),
    (FamilySpec(FamilyKind.RANDOM_UNIFORM, 4, edge_probability=1.5), "edge_probability"),
    (FamilySpec(FamilyKind.RANDOM_UNIFORM, 4, seed=-1), "seed"),
    (FamilySpec(FamilyKind.RANDOM_UNIFORM, 4, seed=2 ** 64), "seed"),
])
def test_spec_validation_names_field(spec, field):
    with pytest.raises(InvalidArgumentError, match="^%s:" % field):
        make_family(spec)


def test_kind_names():
    assert FamilyKind.from_name('single-edge') == FamilyKind.SINGLE_EDGE
    assert FamilyKind.from_name('STAR') == FamilyKind.STAR
    with pytest.raises(InvalidArgumentError, match="^kind:"):
        FamilyKind.from_name('wheel')


def test_labels():
    assert FamilySpec(FamilyKind.RANDOM_UNIFORM, 5, edge_probability=0.3).label() == "uniform-n05-p0.3"
    assert FamilySpec(FamilyKind.RANDOM_UNIFORM, 12, edge_probability=0.7,
                      nu_mode=NuMode.RANDOM).label() == "uniform-n12-p0.7-nu"
    assert FamilySpec(FamilyKind.TWO_VALUED_ADVERSARIAL, 5).label() == "adversarial-n05-e0.01"
    assert FamilySpec(FamilyKind.REGULAR_UNION, 6).label() == "regular-union-n06-a0.4"


def test_random_instances_are_reproducible():
    spec = FamilySpec(FamilyKind.RANDOM_UNIFORM, 7, edge_probability=0.5, seed=42)
    stream = random_stream(spec, 5)
    assert stream[3] == random_instance(spec, 3)
    assert stream[3] == random_instance(spec, 3)
    assert stream[3] != stream[4]
    assert random_instance(spec.with_seed(43), 3) != stream[3]


def test_random_edge_probability_extremes():
    empty = random_instance(FamilySpec(FamilyKind.RANDOM_UNIFORM, 6, edge_probability=0.0), 0)
    assert empty.positive_edge_count() == 0
    full = random_instance(FamilySpec(FamilyKind.RANDOM_UNIFORM, 6, edge_probability=1.0), 0)
    assert full.positive_edge_count() == 15
    weights = [w for _, _, w in full.edges()]
    assert all(0.0 < w <= 1.0 for w in weights)


def test_random_membership_mode():
    spec = FamilySpec(FamilyKind.RANDOM_UNIFORM, 8, edge_probability=1.0, seed=7,
                      nu_mode=NuMode.RANDOM)
    for g in random_stream(spec, 20):
        assert numpy.all((g.nu >= 0.5) & (g.nu <= 1.0))
        assert numpy.all(g.mu <= numpy.minimum.outer(g.nu, g.nu))


def test_random_instance_checks_arguments():
    with pytest.raises(InvalidArgumentError, match="^index:"):
        random_instance(FamilySpec(FamilyKind.RANDOM_UNIFORM, 3), -1)
    with pytest.raises(InvalidArgumentError, match="^kind:"):
        random_instance(FamilySpec(FamilyKind.STAR, 3), 0)
