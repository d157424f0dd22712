"""
名前付きグラフ族と乱数グラフを扱うモジュール
"""
from .family_spec import FamilySpec, FamilyKind, NuMode
from .random_stream import random_instance, random_stream, child_rng
from .builders import make_family, triangle_example, regular_example
from .closed_forms import star_sigma_closed_form, star_sigma_verbatim, path_sigma_closed_form
