from .Chi0Params import Chi0Params
from .Csg0Params import Csg0Params
from .Family import Family
from .Gev0Params import GEV0_SHAPE_UPPER, Gev0Params

__all__ = ["Chi0Params", "Csg0Params", "Family", "Gev0Params", "GEV0_SHAPE_UPPER"]
