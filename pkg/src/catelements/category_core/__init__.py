"""Finite categories, strict 2-categories, strict 2-functors and double categories."""

from .category import (FiniteCategory, FiniteFunctor, FiniteNatTrans, validate_category,
                       validate_functor, validate_nat_trans)
from .double import DoubleCategoryData, validate_double_category
from .report import ValidationReport, Violation
from .twocategory import FiniteTwoCategory, validate_two_category
from .twofunctor import TwoFunctorToCat, horizontal_nat_trans, validate_two_functor


def horizontal_paste(C: FiniteTwoCategory, alpha: int, beta: int) -> int:
    return C.horizontal_paste(alpha, beta)


def vertical_compose(C: FiniteTwoCategory, alpha: int, beta: int) -> int:
    """``β∘α``: ``alpha`` is applied first."""
    return C.vertical_compose(beta, alpha)


__all__ = [
    "FiniteCategory", "FiniteFunctor", "FiniteNatTrans", "FiniteTwoCategory",
    "TwoFunctorToCat", "DoubleCategoryData", "ValidationReport", "Violation",
    "validate_category", "validate_functor", "validate_nat_trans", "validate_two_category",
    "validate_two_functor", "validate_double_category", "horizontal_nat_trans",
    "horizontal_paste", "vertical_compose",
]
