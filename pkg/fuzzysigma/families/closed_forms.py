"""
星グラフ・道グラフの σ* の閉じた式 (一様な辺メンバーシップ α)
"""
from fuzzysigma.graph import InvalidArgumentError


def _check(n: int, alpha: float) -> None:
    if n < 2:
        raise InvalidArgumentError("n: must be >= 2 (given= %d)" % n)
    if not (0.0 < alpha <= 1.0):
        raise InvalidArgumentError("alpha: must be in (0,1] (given= %r)" % alpha)


def star_sigma_closed_form(n: int, alpha: float) -> float:
    """
    σ*(S_n) = (1/n)[((n-1)α - λ)^2 + (n-1)(α - λ)^2], λ = 2(n-1)α/n

    中心の次数は (n-1)α (ew = (n-1)α と握手補題に整合する値).
    """
    _check(n, alpha)
    lam = 2.0 * (n - 1) * alpha / n
    return (((n - 1) * alpha - lam) ** 2 + (n - 1) * (alpha - lam) ** 2) / n


def star_sigma_verbatim(n: int, alpha: float) -> float:
    """
    中心の次数を 2(n-1)α とした式. 次数和が 2ew にならないため σ* とは一致しない.
    比較・報告用.
    """
    _check(n, alpha)
    lam = 2.0 * (n - 1) * alpha / n
    return ((2.0 * (n - 1) * alpha - lam) ** 2 + (n - 1) * (alpha - lam) ** 2) / n


def path_sigma_closed_form(n: int, alpha: float) -> float:
    """
    σ*(P_n) = (1/n)[2(α - λ)^2 + (n-2)(2α - λ)^2], λ = 2(n-1)α/n
    """
    _check(n, alpha)
    lam = 2.0 * (n - 1) * alpha / n
    return (2.0 * (alpha - lam) ** 2 + (n - 2) * (2.0 * alpha - lam) ** 2) / n
