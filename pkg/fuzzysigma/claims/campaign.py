from __future__ import annotations
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple
import logging
import numpy
from fuzzysigma import __version__
from fuzzysigma.graph import FuzzyGraph, InvalidArgumentError
from fuzzysigma.families import FamilySpec, make_family, random_stream
from fuzzysigma.tolerance import VIOLATION_TOL, REGULAR_TOL
from .claim import claim_number
from .claim_result import ClaimResult, Verdict
from .evaluator import evaluate
from .registry import get_claim, select_claims

ASSUMPTIONS = (
    "lambda_max = (1/n) * sum_v d_max(v)",
    "violation when margin < -%g" % VIOLATION_TOL,
    "identity claims: margin = -|lhs - rhs|",
    "C10: lhs = sigma*, rhs = max|d - lambda|; zero is sigma* <= %g, regular is max|d - lambda| <= %g; "
    "margin 0 when they agree (or max|d - lambda| <= sqrt(n) * %g), -1 otherwise"
    % (REGULAR_TOL ** 2, REGULAR_TOL, REGULAR_TOL),
    "C11: a tight result outside the single-positive-edge case is counted as an equality-case failure, "
    "the verdict follows the margin",
    "C14: rhs is the nearer bound, margin = min(lhs - lower, upper - lhs)",
    "pair claims use consecutive instances (2i, 2i+1); a deterministic family is paired with itself",
)


@dataclass
class ClaimSummary:
    """
    主張ごとの集計 (可換な足し合わせ)
    """
    holds: int = 0
    violated: int = 0
    inapplicable: int = 0
    tight: int = 0
    equality_case_failures: int = 0
    proven_violations: int = 0
    min_margin: Optional[float] = None

    def add(self, result: ClaimResult) -> None:
        if result.verdict == Verdict.INAPPLICABLE:
            self.inapplicable += 1
            return
        if result.verdict == Verdict.VIOLATED:
            self.violated += 1
            if result.proven:
                self.proven_violations += 1
        else:
            self.holds += 1
        if result.tight:
            self.tight += 1
        if result.equality_case_ok is False:
            self.equality_case_failures += 1
        if self.min_margin is None or result.margin < self.min_margin:
            self.min_margin = result.margin

    def merge(self, that: ClaimSummary) -> ClaimSummary:
        margins = [m for m in (self.min_margin, that.min_margin) if m is not None]
        return ClaimSummary(
            holds=self.holds + that.holds,
            violated=self.violated + that.violated,
            inapplicable=self.inapplicable + that.inapplicable,
            tight=self.tight + that.tight,
            equality_case_failures=self.equality_case_failures + that.equality_case_failures,
            proven_violations=self.proven_violations + that.proven_violations,
            min_margin=min(margins) if margins else None,
        )

    def to_dict(self) -> dict:
        return {
            'holds': self.holds,
            'violated': self.violated,
            'inapplicable': self.inapplicable,
            'tight': self.tight,
            'equality_case_failures': self.equality_case_failures,
            'proven_violations': self.proven_violations,
            'min_margin': self.min_margin,
        }


@dataclass
class CampaignReport:
    """
    キャンペーンの結果

    results は (主張番号, instance id) で整列済み.
    """
    version: str
    seed: int
    trials: int
    claim_ids: Tuple[str, ...]
    streams: Tuple[str, ...]
    results: List[ClaimResult]
    summary: Dict[str, ClaimSummary]
    assumptions: Tuple[str, ...] = field(default=ASSUMPTIONS)

    @property
    def instance_count(self) -> int:
        ids = set()
        for r in self.results:
            if '+' not in r.instance_id:
                ids.add(r.instance_id)
        return len(ids)

    def violations(self, claimId: Optional[str] = None) -> List[ClaimResult]:
        return [r for r in self.results
                if r.violated and (claimId is None or r.claim_id == claimId)]

    def proven_violations(self) -> List[ClaimResult]:
        return [r for r in self.results if r.violated and r.proven]

    def equality_case_failures(self) -> List[ClaimResult]:
        return [r for r in self.results if r.equality_case_ok is False]


def stream_seed(seed: int, ordinal: int) -> int:
    """
    (キャンペーンの種, ストリーム番号) から決まるストリームの種
    """
    state = numpy.random.SeedSequence([seed, ordinal]).generate_state(1, dtype=numpy.uint64)
    return int(state[0])


def stream_instances(spec: FamilySpec, ordinal: int, trials: int,
                     seed: int) -> List[Tuple[str, FuzzyGraph]]:
    """
    ストリームのインスタンスを (instance id, グラフ) の列で返す

    乱数族は trials 個, それ以外の族は1個.
    """
    label = spec.validate().label()
    if spec.kind.is_random:
        graphs = random_stream(spec.with_seed(stream_seed(seed, ordinal)), trials)
    else:
        graphs = [make_family(spec)]
    return [("%s.%06d" % (label, i), g) for i, g in enumerate(graphs)]


def _pairs(instances: List[Tuple[str, FuzzyGraph]]) -> List[Tuple[str, FuzzyGraph, FuzzyGraph]]:
    if len(instances) == 1:
        instanceId, g = instances[0]
        return [("%s+%06d" % (instanceId, 0), g, g)]
    pairs = []
    for i in range(len(instances) // 2):
        firstId, g1 = instances[2 * i]
        _, g2 = instances[2 * i + 1]
        pairs.append(("%s+%06d" % (firstId, 2 * i + 1), g1, g2))
    return pairs


def _run_stream(job) -> List[ClaimResult]:
    ordinal, spec, claimIds, trials, seed = job
    claims = [get_claim(c) for c in claimIds]
    instances = stream_instances(spec, ordinal, trials, seed)
    results = []
    singles = [c for c in claims if c.arity == 1]
    doubles = [c for c in claims if c.arity == 2]
    for instanceId, g in instances:
        for claim in singles:
            results.append(evaluate(claim, g, instance_id=instanceId))
    if doubles:
        for pairId, g1, g2 in _pairs(instances):
            for claim in doubles:
                results.append(evaluate(claim, g1, g2, instance_id=pairId))
    logging.info("stream %s: %d instance(s), %d result(s)"
                 % (spec.label(), len(instances), len(results)))
    return results


def summarize_results(results: Iterable[ClaimResult],
                      claimIds: Sequence[str]) -> Dict[str, ClaimSummary]:
    summary = {c: ClaimSummary() for c in claimIds}
    for r in results:
        summary[r.claim_id].add(r)
    return summary


def result_key(result: ClaimResult) -> Tuple[int, str]:
    return claim_number(result.claim_id), result.instance_id


def run_campaign(claims, streams: Sequence[FamilySpec], trials: int, seed: int,
                 workers: int = 1) -> CampaignReport:
    """
    選んだ主張を全ストリームの全インスタンスで評価する

    Parameters
    ----------
    claims
        'all', None, 'C1,C4' または id の列
    streams : Sequence[FamilySpec]
        種は無視され, (seed, ストリーム番号) から決め直される
    trials : int
        乱数ストリームあたりのインスタンス数 (>= 1)
    seed : int
    workers : int
        1 より大きければプロセスプールでストリームを並列に評価する.
        結果は並べ替えるので workers に依らない.

    Throws
    ------
    InvalidArgumentError
        trials < 1, 未知の主張 id, 不正な FamilySpec
    """
    if trials < 1:
        raise InvalidArgumentError("trials: must be >= 1 (given= %d)" % trials)
    if seed < 0:
        raise InvalidArgumentError("seed: must be >= 0 (given= %d)" % seed)
    selected = select_claims(claims)
    claimIds = tuple(c.id for c in selected)
    for spec in streams:
        spec.validate()

    jobs = [(ordinal, spec, claimIds, trials, seed) for ordinal, spec in enumerate(streams)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            chunks = list(executor.map(_run_stream, jobs))
    else:
        chunks = [_run_stream(job) for job in jobs]

    results = sorted((r for chunk in chunks for r in chunk), key=result_key)
    summary = {c: ClaimSummary() for c in claimIds}
    for chunk in chunks:
        partial = summarize_results(chunk, claimIds)
        summary = {c: summary[c].merge(partial[c]) for c in claimIds}
    for claimId, s in summary.items():
        if s.proven_violations:
            logging.warning("%s: %d violation(s) of a proved claim" % (claimId, s.proven_violations))

    return CampaignReport(
        version=__version__,
        seed=seed,
        trials=trials,
        claim_ids=claimIds,
        streams=tuple(spec.label() for spec in streams),
        results=results,
        summary=summary,
    )
