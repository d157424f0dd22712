"""
シード付き乱数グラフの生成

インスタンス i は (seed, i) だけから決まる.
"""
from typing import List
import numpy
from fuzzysigma.graph import FuzzyGraph, InvalidArgumentError
from fuzzysigma.tolerance import DECIMAL_DIGITS
from .family_spec import FamilySpec, NuMode

NU_RANDOM_LOW = 0.5
WEIGHT_FLOOR = 10.0 ** -DECIMAL_DIGITS


def child_rng(seed: int, index: int) -> numpy.random.Generator:
    """
    (seed, index) から子の乱数生成器を作る
    """
    return numpy.random.default_rng(numpy.random.SeedSequence([seed, index]))


def random_instance(spec: FamilySpec, index: int) -> FuzzyGraph:
    """
    random_uniform のインスタンス index を作る

    各組 u<v が確率 edge_probability で現れ, 重みは (0,1] の一様乱数を
    小数9桁に丸めたもの.
    """
    spec.validate()
    if not spec.kind.is_random:
        raise InvalidArgumentError("kind: %s is not a random family" % spec.kind.value)
    if index < 0:
        raise InvalidArgumentError("index: must be >= 0 (given= %d)" % index)

    rng = child_rng(spec.seed, index)
    n = spec.n
    us, vs = numpy.triu_indices(n, 1)
    m = us.shape[0]
    # 確率に関係なく常に同じ個数だけ引く
    coins = rng.random(m)
    weights = numpy.round(1.0 - rng.random(m), DECIMAL_DIGITS)
    weights = numpy.maximum(weights, WEIGHT_FLOOR)

    if spec.nu_mode == NuMode.RANDOM:
        nu = numpy.round(rng.uniform(NU_RANDOM_LOW, 1.0, n), DECIMAL_DIGITS)
        weights = numpy.minimum(weights, numpy.minimum(nu[us], nu[vs]))
    else:
        nu = numpy.ones(n)

    present = coins < spec.edge_probability
    mu = numpy.zeros((n, n))
    mu[us[present], vs[present]] = weights[present]
    return FuzzyGraph(nu, mu + mu.T)


def random_stream(spec: FamilySpec, count: int) -> List[FuzzyGraph]:
    """
    random_uniform のインスタンス 0..count-1
    """
    if count < 0:
        raise InvalidArgumentError("count: must be >= 0 (given= %d)" % count)
    return [random_instance(spec, i) for i in range(count)]
