"""
ファジィグラフの演算 (和・結合・直積・テンソル積・合成・補グラフ)

和と結合では Γ2 の頂点 i を n1+i に付け替える.
積グラフの頂点 (u, v) は u を主キーとした辞書順で u*n2 + v に置く.
"""
import logging
import numpy
from fuzzysigma.graph import FuzzyGraph, ConstraintError
from fuzzysigma.tnorm import TNorm

__all__ = [
    "pair_index", "union", "join", "cartesian", "tensor", "composition", "complement",
]


def pair_index(u: int, v: int, n2: int) -> int:
    """
    積グラフにおける頂点 (u, v) の番号
    """
    return u * n2 + v


def _product_nu(g1: FuzzyGraph, g2: FuzzyGraph) -> numpy.ndarray:
    # ν(u,v) = min(ν1(u), ν2(v))
    return numpy.minimum.outer(g1.nu, g2.nu).reshape(-1)


def _flatten(blocks: numpy.ndarray, n1: int, n2: int) -> numpy.ndarray:
    # blocks[u1, v1, u2, v2] -> (n1*n2) x (n1*n2)
    return blocks.reshape(n1 * n2, n1 * n2)


def union(g1: FuzzyGraph, g2: FuzzyGraph) -> FuzzyGraph:
    """
    和 Γ1 ∪ Γ2 (頂点集合は互いに素, 横断辺なし)
    """
    n1, n2 = g1.n, g2.n
    mu = numpy.zeros((n1 + n2, n1 + n2))
    mu[:n1, :n1] = g1.mu
    mu[n1:, n1:] = g2.mu
    return FuzzyGraph(numpy.concatenate([g1.nu, g2.nu]), mu)


def join(g1: FuzzyGraph, g2: FuzzyGraph) -> FuzzyGraph:
    """
    結合 Γ1 ∨ Γ2

    和に加えて, u ∈ Γ1, v ∈ Γ2 の全組に μ = min(ν1(u), ν2(v)) の辺を張る.
    """
    n1, n2 = g1.n, g2.n
    mu = numpy.zeros((n1 + n2, n1 + n2))
    mu[:n1, :n1] = g1.mu
    mu[n1:, n1:] = g2.mu
    cross = numpy.minimum.outer(g1.nu, g2.nu)
    mu[:n1, n1:] = cross
    mu[n1:, :n1] = cross.T
    return FuzzyGraph(numpy.concatenate([g1.nu, g2.nu]), mu)


def cartesian(g1: FuzzyGraph, g2: FuzzyGraph) -> FuzzyGraph:
    """
    直積 Γ1 □ Γ2

    ((u,v1),(u,v2)) には min(ν1(u), μ2(v1,v2)),
    ((u1,v),(u2,v)) には min(μ1(u1,u2), ν2(v)).
    ν1 ≡ ν2 ≡ 1 のときに限り次数は d1(u) + d2(v) になる.
    """
    n1, n2 = g1.n, g2.n
    # same[u, v1, v2] = min(ν1(u), μ2(v1,v2))
    same = numpy.minimum(g1.nu[:, None, None], g2.mu[None, :, :])
    # other[u1, u2, v] = min(μ1(u1,u2), ν2(v))
    other = numpy.minimum(g1.mu[:, :, None], g2.nu[None, None, :])
    blocks = (numpy.einsum('ij,ikl->ikjl', numpy.eye(n1), same)
              + numpy.einsum('ijk,kl->ikjl', other, numpy.eye(n2)))
    logging.debug("cartesian product: %d x %d vertices" % (n1, n2))
    return FuzzyGraph(_product_nu(g1, g2), _flatten(blocks, n1, n2))


def tensor(g1: FuzzyGraph, g2: FuzzyGraph, t: TNorm = TNorm.MINIMUM) -> FuzzyGraph:
    """
    テンソル積 Γ1 × Γ2

    u1≠u2 かつ v1≠v2 のとき μ = t(μ1(u1,u2), μ2(v1,v2)), それ以外0.
    t = PRODUCT のときに限り次数は d1(u) * d2(v) になる.

    Parameters
    ----------
    t : TNorm
        メンバーシップの合成方法 (既定は MINIMUM)
    """
    n1, n2 = g1.n, g2.n
    # 対角が0なので t(0, x) = 0 が u1=u2 や v1=v2 の組を消す
    blocks = t.apply(g1.mu[:, None, :, None], g2.mu[None, :, None, :])
    mu = _flatten(numpy.asarray(blocks, dtype=numpy.float64), n1, n2)
    nu = _product_nu(g1, g2)
    assert numpy.all(mu <= numpy.minimum.outer(nu, nu)), \
        "tensor product broke the membership constraint"
    logging.debug("tensor product (%s): %d x %d vertices" % (t.name, n1, n2))
    return FuzzyGraph(nu, mu)


def composition(g1: FuzzyGraph, g2: FuzzyGraph) -> FuzzyGraph:
    """
    合成 (辞書式積) Γ1[Γ2]

    同じ層 (u1 = u2) では μ2(v1,v2), 異なる層では μ1(u1,u2) (v1, v2 に依らない).
    次数は d(u,v) = n2 d1(u) + d2(v).

    Throws
    ------
    ConstraintError
        合成した μ が min(ν,ν) を超えるとき (ν の切り詰めで起こる). 丸めはしない.
    """
    n1, n2 = g1.n, g2.n
    inner = numpy.einsum('ij,kl->ikjl', numpy.eye(n1), g2.mu)
    outer = numpy.broadcast_to(g1.mu[:, None, :, None], (n1, n2, n1, n2))
    mu = _flatten(inner + outer, n1, n2)
    try:
        return FuzzyGraph(_product_nu(g1, g2), mu)
    except ConstraintError as err:
        logging.debug("composition rejected: %s" % err)
        raise ConstraintError(
            "composition rejected, combined membership exceeds min(nu,nu): %s" % err) from err


def complement(g: FuzzyGraph) -> FuzzyGraph:
    """
    補グラフ: ν は同じ, μ̄(u,v) = min(ν(u), ν(v)) - μ(u,v)
    """
    bound = numpy.minimum.outer(g.nu, g.nu)
    numpy.fill_diagonal(bound, 0.0)
    return FuzzyGraph(g.nu, bound - g.mu)
