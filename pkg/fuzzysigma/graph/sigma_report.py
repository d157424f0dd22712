from __future__ import annotations
from dataclasses import dataclass, asdict
from typing import Tuple


@dataclass(frozen=True)
class SigmaReport:
    """
    1つのファジィグラフのスカラー要約

    Fields
    ------
    n : int
    degrees : Tuple[float, ...]
        各頂点のファジィ次数 d(v)
    ew : float
        ファジィサイズ
    lambda_ : float
        平均ファジィ次数 λ = 2 ew / n
    delta_max, delta_min : float
        最大・最小ファジィ次数 Δ, δ
    sigma_star, sigma_edge_sum, sigma_weighted : float
        分散形・辺和形・ν重み付き形の sigma 指数.
        Σν = 0 のとき sigma_weighted は NaN で, sigma_weighted_defined が False.
    is_regular : bool
        max|d(v) - λ| <= REGULAR_TOL
    """
    n: int
    degrees: Tuple[float, ...]
    ew: float
    lambda_: float
    delta_max: float
    delta_min: float
    sigma_star: float
    sigma_edge_sum: float
    sigma_weighted: float
    sigma_weighted_defined: bool
    is_regular: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d['lambda'] = d.pop('lambda_')
        d['degrees'] = list(self.degrees)
        return d
