from .nelder_mead import DEFAULT_CONFIG, initial_simplex, minimize

__all__ = ["DEFAULT_CONFIG", "initial_simplex", "minimize"]
