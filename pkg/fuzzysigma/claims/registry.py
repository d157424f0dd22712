"""
主張の一覧 C1..C15

各 sides 関数は両辺を計算して Sides を返す. 適用条件を満たさないときは None.
"""
from typing import Dict, List, Optional
import math
import numpy
from fuzzysigma.graph import (
    FuzzyGraph, ConstraintError, InvalidArgumentError,
    summarize, sigma_star, excess_profile, is_regular, max_deviation,
)
from fuzzysigma.ops import union, cartesian, composition, complement
from fuzzysigma.families import FamilyKind
from .claim import Claim, ClaimStatus, Relation, Sides


def _max_min_bound(g: FuzzyGraph) -> Sides:
    r = summarize(g)
    spread = r.delta_max - r.delta_min
    return Sides(r.sigma_star, 2 * g.n + spread ** 2 / 4)


def _popoviciu(g: FuzzyGraph) -> Sides:
    r = summarize(g)
    return Sides(r.sigma_star, (r.delta_max - r.delta_min) ** 2 / 4)


def _size_bound(g: FuzzyGraph) -> Sides:
    r = summarize(g)
    n = g.n
    return Sides(r.sigma_star, (n - 1) ** 2 * (2 * r.ew) ** 2 / n ** 3)


def _ordered_degree_bound(g: FuzzyGraph) -> Sides:
    r = summarize(g)
    n = g.n
    return Sides(r.sigma_star, (n - 1) * (r.delta_max - r.lambda_) / n)


def _mean_square_bound(g: FuzzyGraph) -> Sides:
    r = summarize(g)
    return Sides(r.sigma_star, r.lambda_ ** 2 * (1 - 1 / g.n))


def _bhatia_davis(g: FuzzyGraph) -> Sides:
    r = summarize(g)
    return Sides(r.sigma_star, r.lambda_ * (r.delta_max - r.lambda_))


def _lower_bound(g: FuzzyGraph) -> Optional[Sides]:
    if is_regular(g):
        return None
    r = summarize(g)
    return Sides(r.sigma_star, (r.delta_max - r.delta_min) ** 2 / g.n ** 2)


def _complement_invariance(g: FuzzyGraph) -> Optional[Sides]:
    if not g.has_uniform_nu(1.0):
        return None
    return Sides(sigma_star(complement(g)), sigma_star(g))


def _complement_sum_bound(g: FuzzyGraph) -> Sides:
    r = summarize(g)
    n = g.n
    total = r.sigma_star + sigma_star(complement(g))
    return Sides(total, 8 * r.ew ** 2 * (n - 1) / n ** 2)


def _zero_iff_regular(g: FuzzyGraph) -> Sides:
    return Sides(sigma_star(g), max_deviation(g))


def _single_edge_bound(g: FuzzyGraph) -> Optional[Sides]:
    n = g.n
    if n < 2:
        return None
    r = summarize(g)
    return Sides(r.sigma_star, (2 * r.ew ** 2 / n) * (1 - 2 / n))


def _at_most_one_edge(g: FuzzyGraph) -> bool:
    return g.positive_edge_count() <= 1


def _cartesian_additivity(g1: FuzzyGraph, g2: FuzzyGraph) -> Sides:
    return Sides(sigma_star(cartesian(g1, g2)), sigma_star(g1) + sigma_star(g2))


def _both_nu_one(g1: FuzzyGraph, g2: FuzzyGraph) -> bool:
    return g1.has_uniform_nu(1.0) and g2.has_uniform_nu(1.0)


def _pooled_variance(g1: FuzzyGraph, g2: FuzzyGraph) -> Sides:
    r1 = summarize(g1)
    r2 = summarize(g2)
    n1, n2 = g1.n, g2.n
    n = n1 + n2
    pooled = ((n1 * r1.sigma_star + n2 * r2.sigma_star) / n
              + (n1 * n2 / n ** 2) * (r1.lambda_ - r2.lambda_) ** 2)
    return Sides(sigma_star(union(g1, g2)), pooled)


def _complement_cauchy_schwarz(g: FuzzyGraph) -> Sides:
    s = sigma_star(g)
    total = s + sigma_star(complement(g))
    e = excess_profile(g)
    meanSquare = float(numpy.mean(e ** 2))
    cross = 2 * math.sqrt(max(s * meanSquare, 0.0))
    base = 2 * s + meanSquare
    return Sides(total, base + cross, lower=base - cross)


def _composition_identity(g1: FuzzyGraph, g2: FuzzyGraph) -> Optional[Sides]:
    try:
        product = composition(g1, g2)
    except ConstraintError:
        return None
    return Sides(sigma_star(product), g2.n ** 2 * sigma_star(g1) + sigma_star(g2))


_CLAIMS = [
    Claim('C1', "sigma* <= 2n + (Delta - delta)^2 / 4",
          "max/min degree upper bound", "any graph",
          ClaimStatus.EXPECTED_HOLD, Relation.LE, 1, _max_min_bound),
    Claim('C2', "sigma* <= (Delta - delta)^2 / 4",
          "Popoviciu form of the max/min degree bound", "any graph",
          ClaimStatus.EXPECTED_HOLD, Relation.LE, 1, _popoviciu),
    Claim('C3', "sigma* <= (n-1)^2 (2 ew)^2 / n^3",
          "fuzzy size upper bound (stated as tight for stars)", "any graph",
          ClaimStatus.EXPECTED_HOLD, Relation.LE, 1, _size_bound),
    Claim('C4', "sigma* <= (n-1)(d1 - lambda) / n",
          "largest-degree upper bound", "any graph",
          ClaimStatus.EXPECTED_VIOLATION, Relation.LE, 1, _ordered_degree_bound,
          witness_family=FamilyKind.TWO_VALUED_ADVERSARIAL),
    Claim('C5', "sigma* <= lambda^2 (1 - 1/n)",
          "intermediate step of the largest-degree bound", "any graph",
          ClaimStatus.UNDETERMINED, Relation.LE, 1, _mean_square_bound),
    Claim('C6', "sigma* <= lambda (d1 - lambda)",
          "Bhatia-Davis bound with minimum 0", "any graph",
          ClaimStatus.EXPECTED_HOLD, Relation.LE, 1, _bhatia_davis),
    Claim('C7', "sigma* >= (Delta - delta)^2 / n^2",
          "lower bound for non-regular graphs", "requires non-regular",
          ClaimStatus.PROVED_HOLD, Relation.GE, 1, _lower_bound),
    Claim('C8', "sigma*(complement) == sigma*",
          "complement invariance", "requires nu == 1",
          ClaimStatus.PROVED_HOLD, Relation.EQ, 1, _complement_invariance),
    Claim('C9', "sigma* + sigma*(complement) <= 8 ew^2 (n-1) / n^2",
          "graph-plus-complement upper bound", "any graph",
          ClaimStatus.EXPECTED_HOLD, Relation.LE, 1, _complement_sum_bound),
    Claim('C10', "sigma* == 0 iff fuzzy-regular",
          "zero characterisation", "any graph",
          ClaimStatus.PROVED_HOLD, Relation.IFF, 1, _zero_iff_regular),
    Claim('C11', "sigma* <= (2 ew^2 / n)(1 - 2/n), equality iff one positive edge",
          "extremal single-edge bound", "requires n >= 2",
          ClaimStatus.EXPECTED_HOLD, Relation.LE, 1, _single_edge_bound,
          equality_case=_at_most_one_edge),
    Claim('C12', "sigma*(G1 box G2) == sigma*(G1) + sigma*(G2)",
          "Cartesian additivity", "pair; proved for nu == 1 on both factors",
          ClaimStatus.PROVED_HOLD, Relation.EQ, 2, _cartesian_additivity,
          proved_scope=_both_nu_one),
    Claim('C13', "sigma*(G1 u G2) == pooled variance of the parts",
          "union pooled variance", "pair",
          ClaimStatus.PROVED_HOLD, Relation.EQ, 2, _pooled_variance),
    Claim('C14', "2s + E - 2 sqrt(s E) <= sigma* + sigma*(complement) <= 2s + E + 2 sqrt(s E)",
          "graph-plus-complement bounds with e(v) = d_max(v) - lambda_max",
          "any graph (lambda_max = mean of d_max)",
          ClaimStatus.EXPECTED_HOLD, Relation.RANGE, 1, _complement_cauchy_schwarz),
    Claim('C15', "sigma*(G1[G2]) == n2^2 sigma*(G1) + sigma*(G2)",
          "composition variance identity", "pair; construction must be accepted",
          ClaimStatus.PROVED_HOLD, Relation.EQ, 2, _composition_identity),
]

_BY_ID: Dict[str, Claim] = {c.id: c for c in _CLAIMS}


def registry() -> List[Claim]:
    """
    登録された全主張 (C1..C15 の順)
    """
    return list(_CLAIMS)


def get_claim(claimId: str) -> Claim:
    """
    Throws
    ------
    InvalidArgumentError
        未知の id. メッセージに既知の id を並べる.
    """
    claim = _BY_ID.get(claimId.strip().upper())
    if claim is None:
        raise InvalidArgumentError(
            "unknown claim id %r (known: %s)" % (claimId, ", ".join(_BY_ID)))
    return claim


def select_claims(selection) -> List[Claim]:
    """
    'all', None, 'C1,C4' または id の列から主張を選ぶ
    """
    if selection is None:
        return registry()
    if isinstance(selection, str):
        if selection.strip().lower() == 'all':
            return registry()
        selection = [s for s in selection.split(',') if s.strip()]
    claims = {get_claim(s).id: get_claim(s) for s in selection}
    return sorted(claims.values(), key=lambda c: c.number)
