"""
グラフファイルとレポートの読み書きを扱うモジュール
"""
from .graph_file import (
    FORMAT_VERSION, GraphParseError, format_decimal,
    serialize_graph, parse_graph, read_graph, write_graph, dump_graph,
)
from .report_writer import report_lines, write_report, report_json, write_report_json, witness_name
