from .QuadratureSpec import QuadratureSpec

__all__ = ["QuadratureSpec"]
