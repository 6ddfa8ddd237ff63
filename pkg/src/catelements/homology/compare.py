"""Homology of the five models of the classifying space of ``F``, compared pairwise."""

from __future__ import annotations

from itertools import combinations

from ..category_core import TwoFunctorToCat
from ..hocolim import hocolim_bisimplicial
from ..simplicial import DEFAULT_MAX_DIM, diagonal
from ..thomason_iso import REPORT_VERSION, BarPair
from .homology import homology

MODEL_NAMES = ("diag N∫F", "W̄ N∫F", "W̄ N∬F", "diag N∬F", "diag N(hocolim F)")

NOTE = ("equal homology is consistent with the weak equivalences between these models; "
        "it is a necessary condition, not a proof")


def model_simplicial_sets(F: TwoFunctorToCat, D: int = DEFAULT_MAX_DIM, P: BarPair | None = None) -> dict:
    P = P or BarPair(F, D)
    _, hoco = hocolim_bisimplicial(F, D)
    return dict(zip(MODEL_NAMES, (diagonal(P.X2), P.W2, P.Wd, diagonal(P.Xd), hoco)))


def compare_models(F: TwoFunctorToCat, D: int = DEFAULT_MAX_DIM, P: BarPair | None = None) -> dict:
    """Homology in degrees ``0..D-1`` of every model plus the pairwise comparison."""
    if D < 1:
        raise ValueError("compare needs max_dim >= 1 to report H_0")
    models = {}
    tables = {}
    for name, S in model_simplicial_sets(F, D, P).items():
        H = homology(S, D - 1, name=name)
        tables[name] = H
        models[name] = {"sizes": S.sizes(), "nondegenerate": S.nondegenerate_counts(),
                        "homology": H.to_dict()["groups"], "display": H.to_dict()["display"]}
    pairs = [{"a": a, "b": b, "equal": tables[a].key() == tables[b].key()}
             for a, b in combinations(MODEL_NAMES, 2)]
    return {"report_version": REPORT_VERSION, "command": "compare", "functor": F.name, "max_dim": D,
            "trusted_up_to": D - 1, "models": models, "pairwise": pairs,
            "agree": all(p["equal"] for p in pairs), "note": NOTE}
