class InvalidArgumentError(ValueError):
    "引数が範囲外・不正なときに投げるエラー"


class ConstraintError(ValueError):
    "ファジィグラフの制約 (対称性・対角0・μ <= min(ν,ν)) を破るときに投げるエラー"


class DegenerateInputError(ValueError):
    "計算が定義されない入力 (Σν = 0 など) のときに投げるエラー"
