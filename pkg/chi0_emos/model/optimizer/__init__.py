from .SimplexConfig import SimplexConfig
from .SimplexResult import SimplexResult

__all__ = ["SimplexConfig", "SimplexResult"]
