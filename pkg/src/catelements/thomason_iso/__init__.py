"""The levelwise isomorphism between the bar constructions of the two nerves of elements."""

from .data import BarPair, DoubleSideSimplexData, TwoSideSimplexData
from .negative import run_negative_controls
from .verify import REPORT_VERSION, verify_thomason_iso

__all__ = ["BarPair", "TwoSideSimplexData", "DoubleSideSimplexData", "verify_thomason_iso",
           "run_negative_controls", "REPORT_VERSION"]
