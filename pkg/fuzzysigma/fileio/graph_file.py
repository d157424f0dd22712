"""
ファジィグラフのテキスト形式

    # コメント
    fuzzygraph 1
    vertices <n>
    v <id> <nu>        (n 行, id は 0 から昇順)
    edges <m>
    e <u> <v> <mu>     (m 行, u < v)

小数は小数点以下9桁以内で, 末尾の0を落とした形で書く.
"""
from typing import IO, List, Tuple, Union
import logging
import os
import re
from fuzzysigma.graph import FuzzyGraph, ConstraintError
from fuzzysigma.tolerance import DECIMAL_DIGITS

FORMAT_VERSION = 1

_NUMBER = re.compile(r'^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$')
_INTEGER = re.compile(r'^\d+$')


class GraphParseError(ValueError):
    "グラフファイルの行が文法に合わないときに投げるエラー"

    def __init__(self, lineno: int, message: str):
        super().__init__("line %d: %s" % (lineno, message))
        self.lineno = lineno


def format_decimal(x: float) -> str:
    """
    小数点以下 DECIMAL_DIGITS 桁に丸め, 末尾の0と小数点を落とす
    """
    text = "%.*f" % (DECIMAL_DIGITS, x)
    if '.' in text:
        text = text.rstrip('0').rstrip('.')
    if text in ('-0', ''):
        text = '0'
    return text


def serialize_graph(g: FuzzyGraph) -> str:
    """
    正規形で書き出す (頂点は昇順, μ > 0 の辺を (u, v) 順に)
    """
    lines = ["fuzzygraph %d" % FORMAT_VERSION, "vertices %d" % g.n]
    for v in range(g.n):
        lines.append("v %d %s" % (v, format_decimal(float(g.nu[v]))))
    edges = [(u, v, w) for u, v, w in g.edges() if format_decimal(w) != '0']
    lines.append("edges %d" % len(edges))
    for u, v, w in edges:
        lines.append("e %d %d %s" % (u, v, format_decimal(w)))
    return "\n".join(lines) + "\n"


class _Lines(object):
    """
    コメントと空行を飛ばしながら (行番号, トークン列) を返す
    """
    rows: List[Tuple[int, List[str]]]
    position: int
    lastLine: int

    def __init__(self, text: str):
        self.rows = []
        for i, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.strip()
            if stripped == '' or stripped.startswith('#'):
                continue
            self.rows.append((i, stripped.split()))
        self.position = 0
        self.lastLine = len(text.splitlines())

    def next(self, what: str) -> Tuple[int, List[str]]:
        if self.position >= len(self.rows):
            raise GraphParseError(self.lastLine + 1, "unexpected end of file, expected %s" % what)
        row = self.rows[self.position]
        self.position += 1
        return row

    def rest(self) -> List[Tuple[int, List[str]]]:
        return self.rows[self.position:]


def _integer(lineno: int, token: str, what: str) -> int:
    if not _INTEGER.match(token):
        raise GraphParseError(lineno, "%s must be a non-negative integer, got %r" % (what, token))
    return int(token)


def _decimal(lineno: int, token: str, what: str) -> float:
    if not _NUMBER.match(token):
        raise GraphParseError(lineno, "%s must be a decimal number, got %r" % (what, token))
    return float(token)


def _expect(lineno: int, tokens: List[str], keyword: str, arity: int) -> None:
    if tokens[0] != keyword or len(tokens) != arity + 1:
        raise GraphParseError(
            lineno, "expected '%s' with %d field(s), got %r" % (keyword, arity, " ".join(tokens)))


def parse_graph(text: Union[str, bytes]) -> FuzzyGraph:
    """
    テキストを読み, 検査済みの FuzzyGraph を返す

    Throws
    ------
    GraphParseError
        文法違反 (1始まりの行番号つき)
    ConstraintError
        id の欠番・重複辺・u > v の辺・μ > min(ν,ν) など. 該当レコードを名指しする.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode('utf-8')
        except UnicodeDecodeError as err:
            raise GraphParseError(1, "file is not valid UTF-8: %s" % err)
    lines = _Lines(text)

    lineno, tokens = lines.next("header 'fuzzygraph 1'")
    _expect(lineno, tokens, 'fuzzygraph', 1)
    version = _integer(lineno, tokens[1], "format version")
    if version != FORMAT_VERSION:
        raise GraphParseError(lineno, "unsupported format version %d" % version)

    lineno, tokens = lines.next("'vertices <n>'")
    _expect(lineno, tokens, 'vertices', 1)
    n = _integer(lineno, tokens[1], "vertex count")

    nu = []
    for expected in range(n):
        lineno, tokens = lines.next("vertex record 'v <id> <nu>'")
        _expect(lineno, tokens, 'v', 2)
        v = _integer(lineno, tokens[1], "vertex id")
        value = _decimal(lineno, tokens[2], "nu")
        if v != expected:
            raise ConstraintError(
                "vertex record at line %d: id %d, expected %d (ids must be 0-based, contiguous, ascending)"
                % (lineno, v, expected))
        if not (0.0 <= value <= 1.0):
            raise ConstraintError(
                "vertex record %d at line %d: nu=%s is outside [0,1]" % (v, lineno, tokens[2]))
        nu.append(value)

    lineno, tokens = lines.next("'edges <m>'")
    _expect(lineno, tokens, 'edges', 1)
    m = _integer(lineno, tokens[1], "edge count")

    edges = []
    seen = {}
    for _ in range(m):
        lineno, tokens = lines.next("edge record 'e <u> <v> <mu>'")
        _expect(lineno, tokens, 'e', 3)
        u = _integer(lineno, tokens[1], "edge endpoint")
        v = _integer(lineno, tokens[2], "edge endpoint")
        w = _decimal(lineno, tokens[3], "mu")
        if u >= n or v >= n:
            raise ConstraintError(
                "edge (%d,%d) at line %d: endpoint out of range 0..%d" % (u, v, lineno, n - 1))
        if u == v:
            raise ConstraintError("edge (%d,%d) at line %d: loops are not allowed" % (u, v, lineno))
        if u > v:
            raise ConstraintError(
                "edge (%d,%d) at line %d: endpoints must be written in ascending order (u < v)"
                % (u, v, lineno))
        key = (u, v)
        if key in seen:
            raise ConstraintError(
                "edge (%d,%d) at line %d: duplicate of the record at line %d"
                % (key[0], key[1], lineno, seen[key]))
        seen[key] = lineno
        bound = min(nu[u], nu[v])
        if not (0.0 <= w <= bound):
            raise ConstraintError(
                "edge (%d,%d) at line %d: mu=%s must lie in [0, min(nu(%d), nu(%d))=%s]"
                % (key[0], key[1], lineno, tokens[3], u, v, format_decimal(bound)))
        edges.append((u, v, w))

    extra = lines.rest()
    if extra:
        lineno, tokens = extra[0]
        raise GraphParseError(lineno, "unexpected content after the edge list: %r" % " ".join(tokens))

    return FuzzyGraph.from_edges(nu, edges)


def read_graph(path: str) -> FuzzyGraph:
    """
    ファイルから読む
    """
    with open(path, 'rb') as f:
        data = f.read()
    logging.info("read %s" % path)
    return parse_graph(data)


def write_graph(g: FuzzyGraph, path: str) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='ascii', newline='\n') as f:
        f.write(serialize_graph(g))
    logging.info("wrote %s" % path)


def dump_graph(g: FuzzyGraph, stream: IO[str]) -> None:
    stream.write(serialize_graph(g))
