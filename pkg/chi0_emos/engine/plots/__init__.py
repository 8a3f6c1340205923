from .svg import emit_svg, write_svg

__all__ = ["emit_svg", "write_svg"]
