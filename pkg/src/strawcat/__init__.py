"""strawcat: finite pseudo double categories, strictification, and
exhaustive coherence checking at desk scale."""

from .core import (
    Frame,
    TableDouble,
    FiniteCategory,
    validate,
    underlying_category,
    underlying_bicategory,
    horizontal_category,
    product,
    terminal,
    unit_object,
    is_strict,
    is_bicategory,
    is_cofibrant,
    category_is_free,
)
from .report import Report, Finding, StructuralError

__all__ = [
    "Frame", "TableDouble", "FiniteCategory", "validate",
    "underlying_category", "underlying_bicategory", "horizontal_category",
    "product", "terminal", "unit_object", "is_strict", "is_bicategory",
    "is_cofibrant", "category_is_free",
    "Report", "Finding", "StructuralError",
]

__version__ = "0.1.0"
