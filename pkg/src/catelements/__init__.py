"""Categories of elements of strict 2-functors, their nerves, and the isomorphism
between the bar constructions of the 2-categorical and double-categorical nerves."""

from importlib import resources
from pathlib import Path

from .bar import BarConstruction, bar_construction
from .category_core import (DoubleCategoryData, FiniteCategory, FiniteTwoCategory, TwoFunctorToCat,
                            ValidationReport)
from .elements import double_category_of_elements, two_category_of_elements
from .errors import (CatElementsError, CompositionError, ConsistencyError, InputValidationError,
                     RangeError, ResourceLimitError, StructuralError)
from .hocolim import hocolim_bisimplicial, hocolim_simplicial_category
from .homology import compare_models, homology
from .io import load_two_functor
from .nerves import nerve_category, nerve_double_category, nerve_two_category
from .simplicial import TruncatedBisimplicialSet, TruncatedSimplicialSet, diagonal
from .thomason_iso import BarPair, run_negative_controls, verify_thomason_iso

__version__ = "0.1.0"

FIXTURES = ("point", "walking_two_cell", "poset_discrete", "parallel_pair", "three_object",
            "vertical_composition", "composable")


def fixture_path(name: str) -> Path:
    """Path of a bundled fixture by name."""
    return Path(str(resources.files("catelements").joinpath("fixtures", f"{name}.json")))


def load_fixture(name: str) -> TwoFunctorToCat:
    return load_two_functor(fixture_path(name))


__all__ = [
    "BarConstruction", "bar_construction", "DoubleCategoryData", "FiniteCategory", "FiniteTwoCategory",
    "TwoFunctorToCat", "ValidationReport", "double_category_of_elements", "two_category_of_elements",
    "CatElementsError", "CompositionError", "ConsistencyError", "InputValidationError", "RangeError",
    "ResourceLimitError", "StructuralError", "hocolim_bisimplicial", "hocolim_simplicial_category",
    "compare_models", "homology", "load_two_functor", "nerve_category", "nerve_double_category",
    "nerve_two_category", "TruncatedBisimplicialSet", "TruncatedSimplicialSet", "diagonal", "BarPair",
    "run_negative_controls", "verify_thomason_iso", "FIXTURES", "fixture_path", "load_fixture",
]
