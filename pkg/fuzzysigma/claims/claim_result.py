from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple


class Verdict(Enum):
    HOLDS = 'holds'
    VIOLATED = 'violated'
    INAPPLICABLE = 'inapplicable'


@dataclass(frozen=True)
class ClaimResult:
    """
    1つの主張を1つのインスタンスで評価した結果

    Fields
    ------
    claim_id, instance_id : str
    lhs, rhs : float
        適用外のときは NaN
    margin : float
        違反なら < -VIOLATION_TOL
    verdict : Verdict
    relation : str
    tight : bool
        不等式で |margin| <= VIOLATION_TOL (等号成立)
    proven : bool
        proved_hold の主張で, インスタンスが証明の範囲内
    equality_case_ok : Optional[bool]
        等号成立の条件を持つ主張が tight のとき, その構造か. 確かめなかったら None.
        False でも verdict は margin だけで決まる.
    witness : Optional[Tuple[str, ...]]
        違反か equality_case_ok が False のときだけ, オペランドのグラフファイル文字列
    """
    claim_id: str
    instance_id: str
    lhs: float
    rhs: float
    margin: float
    verdict: Verdict
    relation: str
    tight: bool = False
    proven: bool = False
    equality_case_ok: Optional[bool] = None
    witness: Optional[Tuple[str, ...]] = None

    @property
    def violated(self) -> bool:
        return self.verdict == Verdict.VIOLATED

    def to_dict(self) -> dict:
        return {
            'claim_id': self.claim_id,
            'instance_id': self.instance_id,
            'lhs': self.lhs,
            'rhs': self.rhs,
            'margin': self.margin,
            'verdict': self.verdict.value,
            'relation': self.relation,
            'tight': self.tight,
            'proven': self.proven,
            'equality_case_ok': self.equality_case_ok,
        }
