from .parser import parse, parse_file
from .printer import format_expr, format_recipe, format_statement
from .syntax import ParseError, Recipe

__all__ = ["ParseError", "Recipe", "format_expr", "format_recipe", "format_statement", "parse", "parse_file"]
