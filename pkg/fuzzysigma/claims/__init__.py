"""
主張 C1..C15 の登録と検証キャンペーンを扱うモジュール
"""
from .claim import Claim, ClaimStatus, Relation, Sides, claim_number
from .claim_result import ClaimResult, Verdict
from .registry import registry, get_claim, select_claims
from .evaluator import evaluate, zero_agrees_with_regular
from .campaign import (
    ASSUMPTIONS, ClaimSummary, CampaignReport,
    run_campaign, stream_seed, stream_instances, summarize_results,
)
from .presets import default_streams, PRESET_HELP
from .remarks import Remark, audit_remarks
