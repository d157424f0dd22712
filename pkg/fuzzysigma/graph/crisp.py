"""
普通の (crisp) グラフの古典 sigma 指数

μ ∈ {0,1}, ν ≡ 1 のグラフを整数次数で計算する.
"""
from fractions import Fraction
import numpy
from .fuzzy_graph import FuzzyGraph
from .graph_error import InvalidArgumentError


def crisp_degrees(g: FuzzyGraph) -> numpy.ndarray:
    """
    整数の次数列

    Throws
    ------
    InvalidArgumentError
        g が crisp でないとき
    """
    if not g.is_crisp():
        raise InvalidArgumentError("graph is not crisp (needs nu == 1 and mu in {0,1})")
    adjacency = g.mu.astype(numpy.int64)
    return adjacency.sum(axis=1)


def classical_sigma_edge_sum(g: FuzzyGraph) -> int:
    """
    Σ_{uv∈E} (d(u) - d(v))^2
    """
    d = crisp_degrees(g)
    total = 0
    for u, v, _ in g.edges():
        total += int(d[u] - d[v]) ** 2
    return total


def classical_sigma_variance(g: FuzzyGraph) -> float:
    """
    (1/n) Σ_i (d_i - 2m/n)^2 を有理数で計算して返す
    """
    d = [int(x) for x in crisp_degrees(g)]
    n = len(d)
    if n == 0:
        raise InvalidArgumentError("graph has no vertices")
    m = sum(d) // 2
    mean = Fraction(2 * m, n)
    return float(sum((Fraction(x) - mean) ** 2 for x in d) / n)
