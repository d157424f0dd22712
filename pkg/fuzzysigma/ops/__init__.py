"""
ファジィグラフの演算を扱うモジュール
"""
from fuzzysigma.tnorm import TNorm
from .operations import *
