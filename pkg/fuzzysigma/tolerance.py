"""
数値比較の許容誤差
"""

# n^2 項の和を含む恒等式
IDENTITY_TOL = 1e-9
# 小さな例の直接再現
EXACT_TOL = 1e-12
# これ以下の σ* では等号成立の条件を確かめない
ZERO_TOL = 1e-12
# max|d(v) - λ| による正則判定 (C10 の零判定はこの2乗)
REGULAR_TOL = 1e-9
# 補グラフの対合性
INVOLUTION_TOL = 1e-15
# margin がこれより負なら違反
VIOLATION_TOL = 1e-9

# グラフファイル・乱数重みの小数桁数
DECIMAL_DIGITS = 9
