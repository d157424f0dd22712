"""
キャンペーンレポートの書き出し

タブ区切り. 先頭に '#' で始まるヘッダ (ツールの版, 種, 試行数, 主張, 前提, ストリーム, 主張ごとの集計,
等号成立の条件に合わなかった結果),
続いて1行1結果:

    claim_id  instance_id  lhs  rhs  margin  verdict  witness

浮動小数は repr (往復で同じ値に戻る) で書き, 値がないときは nan.
違反と等号成立の条件の食い違いの反例は <report>.witness/ に .fg ファイルとして置く.
"""
from typing import Dict, List, Optional
import json
import logging
import math
import os

COLUMNS = ("claim_id", "instance_id", "lhs", "rhs", "margin", "verdict", "witness")


def format_float(x: Optional[float]) -> str:
    if x is None or math.isnan(x):
        return "nan"
    return repr(float(x))


def witness_name(claimId: str, instanceId: str, index: int) -> str:
    """
    反例ファイルの名前. index は 0 が1つ目のオペランド
    """
    return "%s_%s_%s.fg" % (claimId, instanceId, "ab"[index])


def _header(report) -> List[str]:
    lines = [
        "# fuzzysigma %s" % report.version,
        "# seed\t%d" % report.seed,
        "# trials\t%d" % report.trials,
        "# claims\t%s" % ",".join(report.claim_ids),
    ]
    for a in report.assumptions:
        lines.append("# assumption\t%s" % a)
    for s in report.streams:
        lines.append("# stream\t%s" % s)
    for claimId in report.claim_ids:
        s = report.summary[claimId]
        lines.append("# summary\t%s\tholds=%d\tviolated=%d\tinapplicable=%d\ttight=%d\t"
                     "equality_case_failures=%d\tproven_violations=%d\tmin_margin=%s"
                     % (claimId, s.holds, s.violated, s.inapplicable, s.tight,
                        s.equality_case_failures, s.proven_violations, format_float(s.min_margin)))
    for r in report.equality_case_failures():
        lines.append("# equality_case_failure\t%s\t%s" % (r.claim_id, r.instance_id))
    lines.append("#" + "\t".join(COLUMNS))
    return lines


def report_lines(report, witnessDir: Optional[str] = None) -> List[str]:
    """
    レポートを行の列にする. witness 列には反例ファイルの置き場所を書く.
    witnessDir が None か反例がなければ '-'.
    """
    lines = _header(report)
    for r in report.results:
        ref = "-"
        if r.witness and witnessDir is not None:
            ref = ",".join(os.path.join(witnessDir, witness_name(r.claim_id, r.instance_id, i))
                           for i in range(len(r.witness)))
        lines.append("\t".join([
            r.claim_id, r.instance_id,
            format_float(r.lhs), format_float(r.rhs), format_float(r.margin),
            r.verdict.value, ref,
        ]))
    return lines


def write_report(report, path: str) -> int:
    """
    レポートと反例ファイルを書く

    Returns
    -------
    count : int
        書いた反例ファイルの数
    """
    witnessDir = path + ".witness"
    count = 0
    for r in report.results:
        if not r.witness:
            continue
        os.makedirs(witnessDir, exist_ok=True)
        for i, text in enumerate(r.witness):
            with open(os.path.join(witnessDir, witness_name(r.claim_id, r.instance_id, i)),
                      'w', encoding='ascii', newline='\n') as f:
                f.write(text)
            count += 1
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        # 反例はレポートからの相対パスで参照する
        f.write("\n".join(report_lines(report, os.path.basename(witnessDir))) + "\n")
    logging.info("wrote %s (%d result(s), %d witness file(s))" % (path, len(report.results), count))
    return count


def report_json(report) -> Dict:
    return {
        'version': report.version,
        'seed': report.seed,
        'trials': report.trials,
        'claims': list(report.claim_ids),
        'assumptions': list(report.assumptions),
        'streams': list(report.streams),
        'summary': {c: report.summary[c].to_dict() for c in report.claim_ids},
        'results': [r.to_dict() for r in report.results],
    }


def write_report_json(report, path: str) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        # NaN は null にする
        json.dump(_nan_to_none(report_json(report)), f, indent=2)
        f.write("\n")
    logging.info("wrote %s" % path)


def _nan_to_none(value):
    if isinstance(value, float) and math.isnan(value):
        return None
    if isinstance(value, dict):
        return {k: _nan_to_none(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_nan_to_none(v) for v in value]
    return value
