"""
名前付きグラフ族の構成
"""
import logging
import numpy
from fuzzysigma.graph import FuzzyGraph
from .family_spec import FamilySpec, FamilyKind
from .random_stream import random_instance

__all__ = ["make_family", "triangle_example", "regular_example"]


def _uniform(n: int, pairs, alpha: float) -> FuzzyGraph:
    mu = numpy.zeros((n, n))
    for u, v in pairs:
        mu[u, v] = alpha
        mu[v, u] = alpha
    return FuzzyGraph(numpy.ones(n), mu)


def _star(n: int, alpha: float) -> FuzzyGraph:
    # 中心は頂点0
    return _uniform(n, [(0, leaf) for leaf in range(1, n)], alpha)


def _path(n: int, alpha: float) -> FuzzyGraph:
    return _uniform(n, [(i, i + 1) for i in range(n - 1)], alpha)


def _cycle(n: int, alpha: float) -> FuzzyGraph:
    pairs = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return _uniform(n, pairs, alpha)


def _complete(n: int, alpha: float) -> FuzzyGraph:
    return _uniform(n, [(u, v) for u in range(n) for v in range(u + 1, n)], alpha)


def _single_edge(n: int, alpha: float) -> FuzzyGraph:
    return _uniform(n, [(0, 1)], alpha)


def _regular_union(alpha: float) -> FuzzyGraph:
    # α の三角形2つと, 対応する頂点を結ぶ α/2 の辺3本
    mu = numpy.zeros((6, 6))
    for offset in (0, 3):
        for u, v in ((0, 1), (1, 2), (0, 2)):
            mu[offset + u, offset + v] = alpha
    for u in range(3):
        mu[u, u + 3] = alpha / 2
    return FuzzyGraph(numpy.ones(6), mu + mu.T)


def _two_valued_adversarial(n: int, epsilon: float) -> FuzzyGraph:
    # 完全グラフで重み1, ただし頂点0に接続する辺だけ ε
    mu = numpy.ones((n, n))
    mu[0, :] = epsilon
    mu[:, 0] = epsilon
    numpy.fill_diagonal(mu, 0.0)
    return FuzzyGraph(numpy.ones(n), mu)


def make_family(spec: FamilySpec) -> FuzzyGraph:
    """
    spec の名前付きグラフを作る

    ν ≡ 1 (random_uniform の nu_mode=random を除く).
    random_uniform は instance 0 を返す.

    Throws
    ------
    InvalidArgumentError
        spec が不正なとき
    """
    spec.validate()
    kind = spec.kind
    n = spec.n
    alpha = spec.resolved_alpha
    logging.debug("make_family %s" % spec.label())

    if kind == FamilyKind.STAR:
        return _star(n, alpha)
    if kind == FamilyKind.PATH:
        return _path(n, alpha)
    if kind == FamilyKind.CYCLE:
        return _cycle(n, alpha)
    if kind == FamilyKind.COMPLETE:
        return _complete(n, alpha)
    if kind == FamilyKind.SINGLE_EDGE:
        return _single_edge(n, alpha)
    if kind == FamilyKind.REGULAR_UNION:
        return _regular_union(alpha)
    if kind == FamilyKind.TWO_VALUED_ADVERSARIAL:
        return _two_valued_adversarial(n, spec.epsilon)
    return random_instance(spec, 0)


def triangle_example() -> FuzzyGraph:
    """
    3頂点の例 (μ(v1,v2)=0.8, μ(v1,v3)=0.3, μ(v2,v3)=0.6, ν ≡ 1). σ* = 19/450.
    """
    return FuzzyGraph.from_edges([1.0, 1.0, 1.0],
                                 [(0, 1, 0.8), (0, 2, 0.3), (1, 2, 0.6)])


def regular_example() -> FuzzyGraph:
    """
    6頂点のファジィ正則グラフ (全次数 1.0, ew = 3.0)
    """
    return make_family(FamilySpec(FamilyKind.REGULAR_UNION, 6))
