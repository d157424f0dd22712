"""
コマンドラインの入口

    fuzzysigma [-v] compute [FILE]
    fuzzysigma [-v] gen --family KIND --n N [--alpha A] [--epsilon E] [--p P] [--nu-mode M] --seed S [--index I] [-o FILE]
    fuzzysigma [-v] op --kind KIND [--tnorm T] A [B] [-o OUT]
    fuzzysigma [-v] check [--claims all|C1,C4,...] [--trials T] [--seed S] [--nmax N] [--report OUT] [--json OUT] [--workers W]
    fuzzysigma [-v] selftest
    fuzzysigma [-v] remarks

終了コード: 0 成功, 1 入出力・構文エラー, 2 値の検査エラー, 3 selftest の失敗か証明済み主張の違反
"""
from typing import Callable, Dict, IO, List, Optional, Sequence
import argparse
import logging
import sys
from fuzzysigma import __version__
from fuzzysigma.graph import (
    FuzzyGraph, InvalidArgumentError, ConstraintError, DegenerateInputError,
    summarize, classical_sigma_edge_sum, classical_sigma_variance,
)
from fuzzysigma.ops import TNorm, union, join, cartesian, tensor, composition, complement
from fuzzysigma.families import FamilySpec, FamilyKind, NuMode, make_family, random_instance
from fuzzysigma.claims import run_campaign, default_streams, audit_remarks, PRESET_HELP
from fuzzysigma.fileio import (
    GraphParseError, parse_graph, read_graph, write_graph, dump_graph,
    report_lines, write_report, write_report_json,
)
from fuzzysigma.selftest import run_selftest

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_FAILED = 3

BINARY_OPS = {
    'union': union,
    'join': join,
    'cartesian': cartesian,
    'composition': composition,
}

VERBOSITY = {0: logging.WARNING, 1: logging.INFO}


class _Parser(argparse.ArgumentParser):
    """
    引数エラーを InvalidArgumentError にする (終了コード 2)
    """

    def error(self, message: str):
        raise InvalidArgumentError(message)


def _float(x: float) -> str:
    return "%.9f" % x


class Cli(object):
    stdin: IO[str]
    stdout: IO[str]

    command_list: Dict[str, Callable[[argparse.Namespace], int]]

    def __init__(self, stdin: IO[str], stdout: IO[str]):
        self.stdin = stdin
        self.stdout = stdout

        self.command_list = {
            'compute': self.compute,
            'gen': self.gen,
            'op': self.op,
            'check': self.check,
            'selftest': self.selftest,
            'remarks': self.remarks,
        }

    def parser(self) -> argparse.ArgumentParser:
        parser = _Parser(prog='fuzzysigma', description="fuzzy sigma index toolkit")
        parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
        parser.add_argument('-v', '--verbose', action='count', default=0,
                            help="-v で INFO, -vv で DEBUG のログを出す")
        sub = parser.add_subparsers(dest='command', metavar='COMMAND')
        sub.required = True

        p = sub.add_parser('compute', help="グラフファイルの指数を表示する")
        p.add_argument('file', nargs='?', default='-', help="グラフファイル ('-' か省略で標準入力)")

        p = sub.add_parser('gen', help="名前付きグラフ族を生成する")
        p.add_argument('--family', required=True, help=", ".join(k.value for k in FamilyKind))
        p.add_argument('--n', type=int, required=True)
        p.add_argument('--alpha', type=float, default=None)
        p.add_argument('--epsilon', type=float, default=0.01)
        p.add_argument('--p', type=float, default=0.5, help="random_uniform の辺の確率")
        p.add_argument('--nu-mode', choices=[m.value for m in NuMode], default=NuMode.ONE.value)
        p.add_argument('--seed', type=int, default=0)
        p.add_argument('--index', type=int, default=0, help="random_uniform のインスタンス番号")
        p.add_argument('-o', '--output', default=None)

        p = sub.add_parser('op', help="グラフの演算")
        p.add_argument('--kind', required=True,
                       choices=sorted(list(BINARY_OPS) + ['tensor', 'complement']))
        p.add_argument('--tnorm', default='min', choices=['min', 'product'])
        p.add_argument('a')
        p.add_argument('b', nargs='?', default=None)
        p.add_argument('-o', '--output', default=None)

        p = sub.add_parser('check', help="主張の検証キャンペーン",
                           epilog=PRESET_HELP,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.add_argument('--claims', default='all')
        p.add_argument('--trials', type=int, default=100)
        p.add_argument('--seed', type=int, default=0)
        p.add_argument('--nmax', type=int, default=16)
        p.add_argument('--report', default=None, help="レポートの出力先 (省略で標準出力)")
        p.add_argument('--json', default=None, help="JSON の出力先")
        p.add_argument('--workers', type=int, default=1)

        sub.add_parser('selftest', help="受け入れ検査")
        sub.add_parser('remarks', help="本文の付随的な記述を確かめる")
        return parser

    def run(self, args: Sequence[str]) -> int:
        ns = self.parser().parse_args(list(args))
        level = VERBOSITY.get(ns.verbose, logging.DEBUG)
        logging.getLogger().setLevel(level)
        return self.command_list[ns.command](ns)

    def _write(self, lines: List[str]) -> None:
        for line in lines:
            self.stdout.write(line + "\n")

    def _load(self, path: str) -> FuzzyGraph:
        if path == '-':
            return parse_graph(self.stdin.read())
        return read_graph(path)

    def _emit(self, g: FuzzyGraph, output: Optional[str]) -> None:
        if output is None or output == '-':
            dump_graph(g, self.stdout)
        else:
            write_graph(g, output)

    def compute(self, ns: argparse.Namespace) -> int:
        """
        指数の表示コマンド
        """
        g = self._load(ns.file)
        r = summarize(g)
        lines = [
            "n = %d" % r.n,
            "ew = %s" % _float(r.ew),
            "lambda = %s" % _float(r.lambda_),
            "delta_max = %s" % _float(r.delta_max),
            "delta_min = %s" % _float(r.delta_min),
            "sigma_star = %s" % _float(r.sigma_star),
            "sigma_edge_sum = %s" % _float(r.sigma_edge_sum),
            "sigma_weighted = %s" % _float(r.sigma_weighted),
            "sigma_weighted_defined = %s" % str(r.sigma_weighted_defined).lower(),
            "is_regular = %s" % str(r.is_regular).lower(),
            "degrees = %s" % " ".join(_float(d) for d in r.degrees),
        ]
        if g.is_crisp():
            lines.append("classical_sigma_edge_sum = %d" % classical_sigma_edge_sum(g))
            lines.append("classical_sigma_variance = %s" % _float(classical_sigma_variance(g)))
        self._write(lines)
        return EXIT_OK

    def gen(self, ns: argparse.Namespace) -> int:
        """
        グラフ生成コマンド
        """
        spec = FamilySpec(
            kind=FamilyKind.from_name(ns.family),
            n=ns.n,
            alpha=ns.alpha,
            epsilon=ns.epsilon,
            seed=ns.seed,
            edge_probability=ns.p,
            nu_mode=NuMode(ns.nu_mode),
        )
        if spec.kind.is_random:
            g = random_instance(spec, ns.index)
        else:
            g = make_family(spec)
        self._emit(g, ns.output)
        return EXIT_OK

    def op(self, ns: argparse.Namespace) -> int:
        """
        演算コマンド
        """
        g1 = self._load(ns.a)
        if ns.kind == 'complement':
            if ns.b is not None:
                raise InvalidArgumentError("complement takes one graph, given two")
            self._emit(complement(g1), ns.output)
            return EXIT_OK

        if ns.b is None:
            raise InvalidArgumentError("%s takes two graphs, given one" % ns.kind)
        g2 = self._load(ns.b)
        if ns.kind == 'tensor':
            result = tensor(g1, g2, TNorm.from_name(ns.tnorm))
        else:
            result = BINARY_OPS[ns.kind](g1, g2)
        self._emit(result, ns.output)
        return EXIT_OK

    def check(self, ns: argparse.Namespace) -> int:
        """
        検証キャンペーンコマンド
        """
        report = run_campaign(ns.claims, default_streams(ns.nmax), ns.trials, ns.seed,
                              workers=ns.workers)
        if ns.report is None:
            self._write(report_lines(report))
        else:
            write_report(report, ns.report)
            for claimId in report.claim_ids:
                s = report.summary[claimId]
                self._write(["%s\tholds=%d\tviolated=%d\tinapplicable=%d\tequality_case_failures=%d\tproven_violations=%d"
                             % (claimId, s.holds, s.violated, s.inapplicable,
                                s.equality_case_failures, s.proven_violations)])
        if ns.json is not None:
            write_report_json(report, ns.json)

        if report.proven_violations():
            logging.error("%d violation(s) of proved claims" % len(report.proven_violations()))
            return EXIT_FAILED
        return EXIT_OK

    def selftest(self, ns: argparse.Namespace) -> int:
        """
        受け入れ検査コマンド
        """
        failures = run_selftest()
        for f in failures:
            self._write(["FAIL %s" % f])
        if failures:
            return EXIT_FAILED
        self._write(["ok"])
        return EXIT_OK

    def remarks(self, ns: argparse.Namespace) -> int:
        """
        記述の確認コマンド
        """
        for r in audit_remarks():
            self._write([
                "%s\t%s\t%s" % (r.id, "consistent" if r.consistent else "INCONSISTENT", r.statement),
                "\texpected: %s" % r.expected,
                "\tobserved: %s" % r.observed,
            ])
        return EXIT_OK


def cli_main(args: Sequence[str], stdin: Optional[IO[str]] = None,
             stdout: Optional[IO[str]] = None, stderr: Optional[IO[str]] = None) -> int:
    """
    引数を解釈して実行し, 終了コードを返す. 診断は stderr にだけ書く.
    """
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr

    cli = Cli(stdin=stdin, stdout=stdout)
    try:
        return cli.run(args)
    except GraphParseError as err:
        stderr.write("fuzzysigma: parse error: %s\n" % err)
        return EXIT_IO
    except OSError as err:
        stderr.write("fuzzysigma: %s\n" % err)
        return EXIT_IO
    except (ConstraintError, InvalidArgumentError, DegenerateInputError) as err:
        stderr.write("fuzzysigma: %s\n" % err)
        return EXIT_INVALID
    except SystemExit as err:
        # --help と --version
        return err.code if isinstance(err.code, int) else EXIT_OK
