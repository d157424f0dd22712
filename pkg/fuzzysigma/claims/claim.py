from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from typing import Callable, NamedTuple, Optional
from fuzzysigma.families import FamilyKind


class ClaimStatus(Enum):
    """
    各主張に対する立場
    """
    PROVED_HOLD = 'proved_hold'
    EXPECTED_HOLD = 'expected_hold'
    EXPECTED_VIOLATION = 'expected_violation'
    UNDETERMINED = 'undetermined'


class Relation(Enum):
    LE = 'le'        # lhs <= rhs
    GE = 'ge'        # lhs >= rhs
    EQ = 'eq'        # |lhs - rhs| <= tol
    IFF = 'iff'      # σ* == 0 <=> 正則
    RANGE = 'range'  # lower <= lhs <= upper


class Sides(NamedTuple):
    """
    主張の両辺. RANGE のときだけ lower を使い, rhs は上界.
    """
    lhs: float
    rhs: float
    lower: Optional[float] = None


@dataclass(frozen=True)
class Claim:
    """
    登録された不等式・恒等式

    Fields
    ------
    id : str
        C1..C15
    description : str
    reference : str
        元の主張の呼び名
    applicability : str
        適用条件の説明
    expected_status : ClaimStatus
    relation : Relation
    arity : int
        1 (単一グラフ) または 2 (グラフの組)
    sides : Callable
        グラフ (組なら2つ) から Sides を計算する. 適用外なら None.
    proved_scope : Optional[Callable]
        PROVED_HOLD のうち証明が及ぶ範囲を絞る述語 (None なら適用範囲全体)
    equality_case : Optional[Callable]
        等号成立のときに真であるべき述語 (C11)
    witness_family : Optional[FamilyKind]
        反例を与えるグラフ族
    """
    id: str
    description: str
    reference: str
    applicability: str
    expected_status: ClaimStatus
    relation: Relation
    arity: int
    sides: Callable
    proved_scope: Optional[Callable] = None
    equality_case: Optional[Callable] = None
    witness_family: Optional[FamilyKind] = None

    @property
    def number(self) -> int:
        return claim_number(self.id)


def claim_number(claimId: str) -> int:
    """
    'C12' -> 12. 並べ替え用.
    """
    try:
        return int(claimId.lstrip('Cc'))
    except ValueError:
        return 0
