"""
ファジィグラフのデータモデルと sigma 指数を扱うモジュール
"""
from .graph_error import InvalidArgumentError, ConstraintError, DegenerateInputError
from .fuzzy_graph import FuzzyGraph
from .sigma_report import SigmaReport
from .sigma import *
from .crisp import crisp_degrees, classical_sigma_edge_sum, classical_sigma_variance
