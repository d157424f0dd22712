"""
登録された主張とは別に, 本文中の付随的な記述を数値で確かめる
"""
from dataclasses import dataclass
from typing import List
import logging
import numpy
from fuzzysigma.graph import FuzzyGraph, sigma_star, degrees, fuzzy_size
from fuzzysigma.ops import TNorm, union, tensor, composition, complement
from fuzzysigma.families import (
    FamilySpec, FamilyKind, make_family, triangle_example,
    star_sigma_closed_form, star_sigma_verbatim,
)
from fuzzysigma.tolerance import EXACT_TOL


@dataclass(frozen=True)
class Remark:
    """
    記述1つの検証結果

    consistent が False なら記述どおりには成り立たない.
    """
    id: str
    statement: str
    expected: str
    observed: str
    consistent: bool


def _star_display() -> Remark:
    n, alpha = 5, 0.5
    verbatim = star_sigma_verbatim(n, alpha)
    direct = sigma_star(make_family(FamilySpec(FamilyKind.STAR, n, alpha=alpha)))
    center = 2 * (n - 1) * alpha
    degreeSum = center + (n - 1) * alpha
    return Remark(
        'R1', "star with uniform alpha: center degree 2(n-1)alpha",
        "degree sum 2ew = %g" % (2 * (n - 1) * alpha),
        "degree sum %g; display %.9f vs direct %.9f (n=%d, alpha=%g)"
        % (degreeSum, verbatim, direct, n, alpha),
        abs(verbatim - direct) <= EXACT_TOL)


def _union_of_regular() -> Remark:
    g1 = make_family(FamilySpec(FamilyKind.COMPLETE, 3, alpha=1.0))
    g2 = make_family(FamilySpec(FamilyKind.CYCLE, 4, alpha=0.5))
    value = sigma_star(union(g1, g2))
    return Remark(
        'R2', "the union of two fuzzy-regular graphs has sigma* = 0",
        "0", "sigma*(K3 u C4(0.5)) = %.9f (degrees 2 and 1)" % value,
        value <= EXACT_TOL)


def _composition_degree_line() -> Remark:
    g1 = make_family(FamilySpec(FamilyKind.SINGLE_EDGE, 2, alpha=0.5))
    g2 = make_family(FamilySpec(FamilyKind.COMPLETE, 3, alpha=1.0))
    d = degrees(composition(g1, g2)).reshape(g1.n, g2.n)
    d1, d2 = degrees(g1), degrees(g2)
    corrected = g2.n * d1[:, None] + d2[None, :]
    literal = g2.n * d1[:, None] + d1[None, :g1.n]
    literalError = float(numpy.max(numpy.abs(d[:, :g1.n] - literal)))
    correctedError = float(numpy.max(numpy.abs(d - corrected)))
    return Remark(
        'R3', "composition degrees d(u,v) = n2 d1(u) + d1(v)",
        "exact degrees of G1[G2]",
        "max error %.9f as written, %.9f with d2(v) in the second term"
        % (literalError, correctedError),
        literalError <= EXACT_TOL)


def _star_equality() -> Remark:
    n, alpha = 5, 0.5
    g = make_family(FamilySpec(FamilyKind.STAR, n, alpha=alpha))
    ew = fuzzy_size(g)
    bound = (n - 1) ** 2 * (2 * ew) ** 2 / n ** 3
    value = star_sigma_closed_form(n, alpha)
    return Remark(
        'R4', "the size bound (n-1)^2 (2ew)^2 / n^3 is attained by fuzzy stars",
        "sigma*(S_n) == bound", "sigma*(S_5) = %.9f, bound = %.9f" % (value, bound),
        abs(value - bound) <= EXACT_TOL)


def _regular_drawing() -> Remark:
    alpha = 0.4
    mu = numpy.zeros((6, 6))
    for offset in (0, 3):
        for u, v in ((0, 1), (1, 2), (0, 2)):
            mu[offset + u, offset + v] = alpha
    # 図のとおり対応辺は2本だけ
    mu[1, 4] = alpha / 2
    mu[2, 5] = alpha / 2
    drawn = FuzzyGraph(numpy.ones(6), mu + mu.T)
    d = degrees(drawn)
    return Remark(
        'R5', "6-vertex example drawn with two cross edges of weight alpha/2 is regular",
        "all degrees 1.0, ew = 3.0",
        "degrees %s, ew = %.9f; three cross edges are needed"
        % (" ".join("%g" % x for x in d), fuzzy_size(drawn)),
        bool(numpy.all(numpy.abs(d - 1.0) <= EXACT_TOL)))


def _complement_sum_equality() -> Remark:
    n = 5
    g = make_family(FamilySpec(FamilyKind.STAR, n, alpha=1.0))
    total = sigma_star(g) + sigma_star(complement(g))
    ew = fuzzy_size(g)
    bound = 8 * ew ** 2 * (n - 1) / n ** 2
    return Remark(
        'R6', "sigma* + sigma*(complement) = 8 ew^2 (n-1)/n^2 iff G and its complement are stars",
        "equality for S_5", "sum = %.9f, bound = %.9f" % (total, bound),
        abs(total - bound) <= EXACT_TOL)


def _tensor_degree_product() -> Remark:
    g1 = triangle_example()
    g2 = make_family(FamilySpec(FamilyKind.SINGLE_EDGE, 2, alpha=0.5))
    d = degrees(tensor(g1, g2, TNorm.MINIMUM)).reshape(g1.n, g2.n)
    product = numpy.outer(degrees(g1), degrees(g2))
    error = float(numpy.max(numpy.abs(d - product)))
    return Remark(
        'R7', "tensor product degrees d(u,v) = d1(u) d2(v) (t = minimum)",
        "d(0,0) = d1(0) d2(0) = %.9f" % product[0, 0],
        "d(0,0) = %.9f on the triangle x single edge (0.5); max error %.9f" % (d[0, 0], error),
        error <= EXACT_TOL)


def audit_remarks() -> List[Remark]:
    """
    全ての記述を確かめる. 食い違いは WARNING で記録する.
    """
    remarks = [
        _star_display(),
        _union_of_regular(),
        _composition_degree_line(),
        _star_equality(),
        _regular_drawing(),
        _complement_sum_equality(),
        _tensor_degree_product(),
    ]
    for r in remarks:
        if not r.consistent:
            logging.warning("%s: %s -- expected %s, observed %s"
                            % (r.id, r.statement, r.expected, r.observed))
    return remarks
