from __future__ import annotations
from typing import Iterable, Iterator, Optional, Sequence, Tuple
import logging
import numpy
from .graph_error import ConstraintError, InvalidArgumentError

Edge = Tuple[int, int, float]


class FuzzyGraph(object):
    """
    ファジィグラフ Γ = (V, ν, μ)

    頂点は 0..n-1 でラベル付けされる. 生成後は変更できない.

    Fields
    ------
    n : int
        頂点数
    nu : numpy.ndarray
        頂点メンバーシップ ν(v), shape (n,)
    mu : numpy.ndarray
        辺メンバーシップ μ(u,v), shape (n, n). 対称で対角は0.
        上三角だけを保持し, 下三角はそれを鏡映したもの.

    Throws
    ------
    ConstraintError
        ν が [0,1] 外, μ が非対称・対角非0・負・min(ν(u),ν(v)) 超過のとき
    """
    n: int
    nu: numpy.ndarray
    mu: numpy.ndarray

    def __init__(self, nu: Sequence[float], mu):
        nu = numpy.array(nu, dtype=numpy.float64).reshape(-1)
        n = nu.shape[0]
        mu = numpy.array(mu, dtype=numpy.float64)
        if n == 0 and mu.size == 0:
            mu = numpy.zeros((0, 0))
        if mu.shape != (n, n):
            raise ConstraintError(
                "mu must be %dx%d, got shape %s" % (n, n, mu.shape))

        self.__check(nu, mu)

        upper = numpy.triu(mu, 1)
        mu = upper + upper.T
        nu.setflags(write=False)
        mu.setflags(write=False)
        self.n = n
        self.nu = nu
        self.mu = mu

    @staticmethod
    def __check(nu: numpy.ndarray, mu: numpy.ndarray) -> None:
        if not numpy.all(numpy.isfinite(nu)) or not numpy.all(numpy.isfinite(mu)):
            raise ConstraintError("memberships must be finite numbers")

        bad = numpy.flatnonzero((nu < 0.0) | (nu > 1.0))
        if bad.size > 0:
            v = int(bad[0])
            raise ConstraintError(
                "vertex %d: nu=%r is outside [0,1]" % (v, float(nu[v])))

        diagonal = numpy.flatnonzero(numpy.diagonal(mu) != 0.0)
        if diagonal.size > 0:
            v = int(diagonal[0])
            raise ConstraintError(
                "vertex %d: mu(v,v)=%r, loops are not allowed" % (v, float(mu[v, v])))

        asym = numpy.argwhere(mu != mu.T)
        if asym.size > 0:
            u, v = (int(x) for x in asym[0])
            raise ConstraintError(
                "edge (%d,%d): mu is not symmetric (%r vs %r)"
                % (u, v, float(mu[u, v]), float(mu[v, u])))

        negative = numpy.argwhere(mu < 0.0)
        if negative.size > 0:
            u, v = sorted(int(x) for x in negative[0])
            raise ConstraintError(
                "edge (%d,%d): mu=%r is negative" % (u, v, float(mu[u, v])))

        bound = numpy.minimum.outer(nu, nu)
        over = numpy.argwhere(mu > bound)
        if over.size > 0:
            u, v = sorted(int(x) for x in over[0])
            logging.debug("rejecting graph: mu(%d,%d) exceeds min(nu)" % (u, v))
            raise ConstraintError(
                "edge (%d,%d): mu=%r exceeds min(nu(%d), nu(%d))=%r"
                % (u, v, float(mu[u, v]), u, v, float(bound[u, v])))

    # 生成用の補助

    @classmethod
    def from_edges(cls,
                   nu: Sequence[float],
                   edges: Iterable[Edge]) -> FuzzyGraph:
        """
        辺レコード (u, v, μ) の列から生成する

        同じ無向辺が2回現れるとき ConstraintError.
        """
        nu = numpy.array(nu, dtype=numpy.float64).reshape(-1)
        n = nu.shape[0]
        mu = numpy.zeros((n, n))
        seen = set()
        for u, v, w in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ConstraintError(
                    "edge (%d,%d): vertex id out of range 0..%d" % (u, v, n - 1))
            if u == v:
                raise ConstraintError("edge (%d,%d): loops are not allowed" % (u, v))
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ConstraintError("edge (%d,%d): duplicate record" % key)
            seen.add(key)
            mu[u, v] = w
            mu[v, u] = w
        return cls(nu, mu)

    @classmethod
    def edgeless(cls, n: int, nu: Optional[Sequence[float]] = None) -> FuzzyGraph:
        """
        辺のないグラフ (n=0 も可. 和・結合の空オペランド用)
        """
        if n < 0:
            raise InvalidArgumentError("n must be >= 0 (given= %d)" % n)
        if nu is None:
            nu = numpy.ones(n)
        return cls(nu, numpy.zeros((n, n)))

    # 参照

    def edges(self) -> Iterator[Edge]:
        """
        μ > 0 の辺を (u, v, μ), u < v の辞書順で返す
        """
        us, vs = numpy.nonzero(numpy.triu(self.mu, 1))
        for u, v in zip(us.tolist(), vs.tolist()):
            yield u, v, float(self.mu[u, v])

    def positive_edge_count(self) -> int:
        return int(numpy.count_nonzero(numpy.triu(self.mu, 1)))

    def has_uniform_nu(self, value: float = 1.0) -> bool:
        """
        ν ≡ value かどうか
        """
        return bool(numpy.all(self.nu == value))

    def is_crisp(self) -> bool:
        """
        ν ≡ 1 かつ μ ∈ {0,1} (普通のグラフ) かどうか
        """
        return self.has_uniform_nu(1.0) and bool(
            numpy.all((self.mu == 0.0) | (self.mu == 1.0)))

    def check_vertex(self, v: int) -> int:
        """
        頂点番号を検査して返す

        Throws
        ------
        InvalidArgumentError
        """
        if isinstance(v, bool) or not isinstance(v, (int, numpy.integer)):
            raise InvalidArgumentError("vertex id must be an integer (given= %r)" % (v,))
        if not (0 <= v < self.n):
            raise InvalidArgumentError(
                "vertex id %d is out of range 0..%d" % (v, self.n - 1))
        return int(v)

    def allclose(self, that: FuzzyGraph, tol: float) -> bool:
        """
        同じラベル付けのもとで ν, μ が tol 以内で一致するか
        """
        if self.n != that.n:
            return False
        return bool(numpy.all(numpy.abs(self.nu - that.nu) <= tol)
                    and numpy.all(numpy.abs(self.mu - that.mu) <= tol))

    def __eq__(self, that) -> bool:
        if not isinstance(that, FuzzyGraph):
            return NotImplemented
        return (self.n == that.n
                and numpy.array_equal(self.nu, that.nu)
                and numpy.array_equal(self.mu, that.mu))

    def __hash__(self) -> int:
        return hash((self.n, self.nu.tobytes(), self.mu.tobytes()))

    def __repr__(self) -> str:
        return "FuzzyGraph(n=%d, edges=%d)" % (self.n, self.positive_edge_count())
