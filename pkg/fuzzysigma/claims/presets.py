"""
check サブコマンドが使う組み込みのストリーム
"""
from typing import List
from fuzzysigma.families import FamilySpec, FamilyKind, NuMode

MIN_SIZE = 3
EDGE_PROBABILITIES = (0.3, 0.7, 1.0)
TRUNCATING_SIZES = (4, 8, 12, 16)
TRUNCATING_PROBABILITY = 0.7
SINGLE_EDGE_SIZES = (2, 4, 8, 16)
SINGLE_EDGE_ALPHA = 0.9
ADVERSARIAL = FamilySpec(FamilyKind.TWO_VALUED_ADVERSARIAL, 5, epsilon=0.01)

PRESET_HELP = """
stream presets:
  random_uniform, nu == 1, n = 3..NMAX, edge probability 0.3 / 0.7 / 1.0 (TRIALS instances each)
  random_uniform, nu ~ U[0.5,1], n in {4,8,12,16} <= NMAX, edge probability 0.7 (TRIALS instances each)
  single_edge, n in {2,4,8,16} <= NMAX, alpha 0.9
  two_valued_adversarial, n = 5, epsilon 0.01
  regular_union (n = 6, alpha 0.4), star and path (n = NMAX, alpha 0.5)
""".strip()


def default_streams(nmax: int = 16) -> List[FamilySpec]:
    """
    組み込みストリームの一覧 (種はキャンペーンが決める)
    """
    nmax = max(nmax, MIN_SIZE)
    streams = []
    for n in range(MIN_SIZE, nmax + 1):
        for p in EDGE_PROBABILITIES:
            streams.append(FamilySpec(FamilyKind.RANDOM_UNIFORM, n, edge_probability=p))
    for n in TRUNCATING_SIZES:
        if n <= nmax:
            streams.append(FamilySpec(FamilyKind.RANDOM_UNIFORM, n,
                                      edge_probability=TRUNCATING_PROBABILITY,
                                      nu_mode=NuMode.RANDOM))
    for n in SINGLE_EDGE_SIZES:
        if n <= nmax:
            streams.append(FamilySpec(FamilyKind.SINGLE_EDGE, n, alpha=SINGLE_EDGE_ALPHA))
    streams.append(ADVERSARIAL)
    streams.append(FamilySpec(FamilyKind.REGULAR_UNION, 6))
    streams.append(FamilySpec(FamilyKind.STAR, nmax, alpha=0.5))
    streams.append(FamilySpec(FamilyKind.PATH, nmax, alpha=0.5))
    return streams
