import logging
import math
from fuzzysigma.graph import FuzzyGraph, InvalidArgumentError
from fuzzysigma.fileio import serialize_graph
from fuzzysigma.tolerance import VIOLATION_TOL, ZERO_TOL, REGULAR_TOL
from .claim import Claim, ClaimStatus, Relation
from .claim_result import ClaimResult, Verdict

NAN = float('nan')

# C10 で両辺が食い違ったときの margin
IFF_MISMATCH_MARGIN = -1.0


def zero_agrees_with_regular(sigma: float, deviation: float, n: int) -> bool:
    """
    σ* == 0 と正則性の判定が矛盾しないか

    零は σ* <= REGULAR_TOL², 正則は max|d - λ| <= REGULAR_TOL で判定する.
    max|d - λ|² / n <= σ* <= max|d - λ|² なので, 正則なら必ず零になる.
    零でも max|d - λ| が (REGULAR_TOL, √n REGULAR_TOL] にあるときは二つの尺度で区別できず, 一致とみなす.
    """
    zero = sigma <= REGULAR_TOL ** 2
    regular = deviation <= REGULAR_TOL
    if zero == regular:
        return True
    if zero:
        return deviation <= math.sqrt(n) * REGULAR_TOL
    return False


def evaluate(claim: Claim, *graphs: FuzzyGraph, instance_id: str = "") -> ClaimResult:
    """
    主張を1つのインスタンス (組の主張ならグラフ2つ) で評価する

    Parameters
    ----------
    claim : Claim
    graphs : FuzzyGraph
        claim.arity 個
    instance_id : str
        レポートに載せる識別子

    Returns
    -------
    result : ClaimResult
        違反か等号成立の条件の食い違いのときだけ witness にオペランドのシリアライズ結果が入る

    Throws
    ------
    InvalidArgumentError
        グラフの個数が claim.arity と違うとき
    """
    if len(graphs) != claim.arity:
        raise InvalidArgumentError(
            "%s takes %d graph(s), given %d" % (claim.id, claim.arity, len(graphs)))

    sides = claim.sides(*graphs)
    if sides is None:
        return ClaimResult(claim.id, instance_id, NAN, NAN, NAN,
                           Verdict.INAPPLICABLE, claim.relation.value)

    lhs, rhs = float(sides.lhs), float(sides.rhs)
    relation = claim.relation
    tight = False

    if relation == Relation.LE:
        margin = rhs - lhs
        tight = abs(margin) <= VIOLATION_TOL
    elif relation == Relation.GE:
        margin = lhs - rhs
        tight = abs(margin) <= VIOLATION_TOL
    elif relation == Relation.EQ:
        margin = -abs(lhs - rhs)
    elif relation == Relation.RANGE:
        lower = float(sides.lower)
        toLower = lhs - lower
        toUpper = rhs - lhs
        margin = min(toLower, toUpper)
        if toLower < toUpper:
            rhs = lower
        tight = abs(margin) <= VIOLATION_TOL
    else:
        agree = zero_agrees_with_regular(lhs, rhs, graphs[0].n)
        margin = 0.0 if agree else IFF_MISMATCH_MARGIN

    violated = margin < -VIOLATION_TOL

    # 等号は特定の構造でしか成り立たないはず. margin と verdict には触れない
    equalityCaseOk = None
    if tight and claim.equality_case is not None and lhs > ZERO_TOL:
        equalityCaseOk = bool(claim.equality_case(*graphs))
        if not equalityCaseOk:
            logging.info("%s tight on %s outside its equality case (margin=%r)"
                         % (claim.id, instance_id, margin))

    inScope = claim.proved_scope is None or claim.proved_scope(*graphs)
    proven = claim.expected_status == ClaimStatus.PROVED_HOLD and inScope

    witness = None
    if violated or equalityCaseOk is False:
        witness = tuple(serialize_graph(g) for g in graphs)
    if violated:
        if proven:
            logging.warning("%s violated on %s although proved (margin=%r)"
                            % (claim.id, instance_id, margin))
        else:
            logging.info("%s violated on %s (margin=%r)" % (claim.id, instance_id, margin))

    return ClaimResult(
        claim_id=claim.id,
        instance_id=instance_id,
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        verdict=Verdict.VIOLATED if violated else Verdict.HOLDS,
        relation=relation.value,
        tight=tight,
        proven=proven,
        equality_case_ok=equalityCaseOk,
        witness=witness,
    )
