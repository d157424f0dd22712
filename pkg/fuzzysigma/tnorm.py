from enum import IntEnum, auto
import numpy


class TNorm(IntEnum):
    """
    積グラフでメンバーシップを合成する t-ノルム

    どの a, b ∈ [0,1] でも PRODUCT(a, b) <= MINIMUM(a, b)
    """
    MINIMUM = auto()
    PRODUCT = auto()

    def apply(self, a, b):
        """
        a, b (スカラーまたは numpy 配列) を合成する
        """
        if self == TNorm.MINIMUM:
            return numpy.minimum(a, b)
        return numpy.multiply(a, b)

    @classmethod
    def from_name(cls, name: str) -> 'TNorm':
        names = {
            'min': cls.MINIMUM,
            'minimum': cls.MINIMUM,
            'product': cls.PRODUCT,
            'prod': cls.PRODUCT,
        }
        try:
            return names[name.lower()]
        except KeyError:
            from .graph import InvalidArgumentError
            raise InvalidArgumentError(
                "unknown t-norm: %s (expected min or product)" % name)
