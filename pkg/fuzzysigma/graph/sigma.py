"""
ファジィ次数と sigma 指数の計算

どの関数も FuzzyGraph の純関数.
"""
import logging
import numpy
from fuzzysigma.tolerance import REGULAR_TOL
from .fuzzy_graph import FuzzyGraph
from .sigma_report import SigmaReport
from .graph_error import DegenerateInputError

__all__ = [
    "degree", "degrees", "fuzzy_size", "average_degree",
    "sigma_star", "sigma_pairwise", "sigma_edge_sum", "sigma_weighted",
    "d_max_vertex", "d_max_profile", "lambda_max", "excess_profile",
    "max_deviation", "is_regular", "summarize",
]


def degree(g: FuzzyGraph, v: int) -> float:
    """
    ファジィ次数 d(v) = Σ_{u≠v} μ(v,u)

    Throws
    ------
    InvalidArgumentError
        v が 0..n-1 の外のとき
    """
    v = g.check_vertex(v)
    return float(g.mu[v].sum())


def degrees(g: FuzzyGraph) -> numpy.ndarray:
    """
    全頂点のファジィ次数
    """
    return g.mu.sum(axis=1)


def fuzzy_size(g: FuzzyGraph) -> float:
    """
    ファジィサイズ ew = Σ_{u<v} μ(u,v)
    """
    return float(numpy.triu(g.mu, 1).sum())


def _require_vertices(g: FuzzyGraph) -> None:
    if g.n < 1:
        raise DegenerateInputError("the index is undefined for a graph without vertices")


def average_degree(g: FuzzyGraph) -> float:
    """
    平均ファジィ次数 λ = 2 ew / n
    """
    _require_vertices(g)
    return 2.0 * fuzzy_size(g) / g.n


def sigma_star(g: FuzzyGraph) -> float:
    """
    ファジィ sigma 指数 σ* = (1/n) Σ_v (d(v) - λ)^2

    次数列の母分散. 全次数が等しいときに限り0.
    """
    _require_vertices(g)
    lam = average_degree(g)
    return float(numpy.mean((degrees(g) - lam) ** 2))


def sigma_pairwise(g: FuzzyGraph) -> float:
    """
    σ* の対ごとの表示 (1/(2n^2)) Σ_i Σ_j (d_i - d_j)^2
    """
    _require_vertices(g)
    d = degrees(g)
    diff = numpy.subtract.outer(d, d)
    return float((diff ** 2).sum() / (2.0 * g.n * g.n))


def sigma_edge_sum(g: FuzzyGraph) -> float:
    """
    辺和形 Σ_{u<v} μ(u,v) (d(u) - d(v))^2
    """
    d = degrees(g)
    diff = numpy.subtract.outer(d, d)
    return float((numpy.triu(g.mu, 1) * diff ** 2).sum())


def sigma_weighted(g: FuzzyGraph) -> float:
    """
    ν重み付き形 Σ_v ν(v)(d(v) - λ)^2 / Σ_v ν(v)

    中心は sigma_star と同じ重みなしの λ = 2 ew / n (ν重み付き平均ではない).

    Throws
    ------
    DegenerateInputError
        Σ ν(v) = 0 のとき
    """
    _require_vertices(g)
    total = float(g.nu.sum())
    if total <= 0.0:
        raise DegenerateInputError(
            "sigma_weighted is undefined: all vertex memberships are zero")
    lam = average_degree(g)
    return float((g.nu * (degrees(g) - lam) ** 2).sum() / total)


def d_max_vertex(g: FuzzyGraph, v: int) -> float:
    """
    ν のもとで v が取りうる最大次数 Σ_{u≠v} min(ν(v), ν(u))
    """
    v = g.check_vertex(v)
    return float(d_max_profile(g)[v])


def d_max_profile(g: FuzzyGraph) -> numpy.ndarray:
    bound = numpy.minimum.outer(g.nu, g.nu)
    numpy.fill_diagonal(bound, 0.0)
    return bound.sum(axis=1)


def lambda_max(g: FuzzyGraph) -> float:
    """
    λ_max = (1/n) Σ_v d_max(v)
    """
    _require_vertices(g)
    return float(d_max_profile(g).mean())


def excess_profile(g: FuzzyGraph) -> numpy.ndarray:
    """
    e(v) = d_max(v) - λ_max
    """
    return d_max_profile(g) - lambda_max(g)


def max_deviation(g: FuzzyGraph) -> float:
    """
    max_v |d(v) - λ|
    """
    _require_vertices(g)
    return float(numpy.max(numpy.abs(degrees(g) - average_degree(g))))


def is_regular(g: FuzzyGraph) -> bool:
    """
    ファジィ正則 (全次数が等しい) かどうか
    """
    return max_deviation(g) <= REGULAR_TOL


def summarize(g: FuzzyGraph) -> SigmaReport:
    """
    全スカラー要約を計算する

    sigma_weighted が定義されないときは失敗せず NaN とフラグで返す.
    """
    _require_vertices(g)
    d = degrees(g)
    try:
        weighted = sigma_weighted(g)
        weightedDefined = True
    except DegenerateInputError:
        logging.debug("sigma_weighted undefined (sum of nu is zero)")
        weighted = float('nan')
        weightedDefined = False

    return SigmaReport(
        n=g.n,
        degrees=tuple(float(x) for x in d),
        ew=fuzzy_size(g),
        lambda_=average_degree(g),
        delta_max=float(d.max()),
        delta_min=float(d.min()),
        sigma_star=sigma_star(g),
        sigma_edge_sum=sigma_edge_sum(g),
        sigma_weighted=weighted,
        sigma_weighted_defined=weightedDefined,
        is_regular=is_regular(g),
    )
