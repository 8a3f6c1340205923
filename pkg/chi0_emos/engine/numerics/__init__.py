from .quadrature import DEFAULT_SPEC, gauss_kronrod, integrate, integrate_batch
from .roots import find_root, find_roots_batch

__all__ = [
    "DEFAULT_SPEC",
    "find_root",
    "find_roots_batch",
    "gauss_kronrod",
    "integrate",
    "integrate_batch",
]
