"""Integer homology of truncated simplicial sets."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import RangeError
from ..simplicial import TruncatedSimplicialSet
from .chain_complex import ChainComplex, chain_complex
from .snf import smith_normal_form


@dataclass
class HomologyGroup:
    degree: int
    betti: int
    torsion: list[int] = field(default_factory=list)

    def __str__(self) -> str:
        parts = (["Z" if self.betti == 1 else f"Z^{self.betti}"] if self.betti else [])
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"

    def to_dict(self) -> dict:
        return {"degree": self.degree, "betti": self.betti, "torsion": list(self.torsion)}


@dataclass
class HomologyTable:
    """``H_0..H_{trusted_up_to}``; higher degrees are not computed from a truncation."""

    name: str
    trusted_up_to: int
    groups: list[HomologyGroup]

    def betti(self) -> list[int]:
        return [g.betti for g in self.groups]

    def torsion(self) -> list[list[int]]:
        return [list(g.torsion) for g in self.groups]

    def key(self) -> tuple:
        return tuple((g.betti, tuple(g.torsion)) for g in self.groups)

    def to_dict(self) -> dict:
        return {"name": self.name, "trusted_up_to": self.trusted_up_to,
                "groups": [g.to_dict() for g in self.groups],
                "display": [str(g) for g in self.groups]}


def homology_of_complex(K: ChainComplex, up_to: int) -> HomologyTable:
    if up_to > K.max_dim - 1:
        raise RangeError(f"H_{up_to} needs simplices of degree {up_to + 1}, but the complex "
                         f"stops at degree {K.max_dim}; the trusted range is 0..{K.max_dim - 1}")
    if up_to < 0:
        raise RangeError("up_to must be non-negative")
    snf = [smith_normal_form(K.boundaries[k]) for k in range(up_to + 2)]
    groups = []
    for k in range(up_to + 1):
        rank_out = snf[k][0]
        rank_in, factors = snf[k + 1]
        groups.append(HomologyGroup(k, len(K.bases[k]) - rank_out - rank_in,
                                    [d for d in factors if d > 1]))
    return HomologyTable(K.name, up_to, groups)


def homology(S: TruncatedSimplicialSet, up_to: int | None = None, name: str = "") -> HomologyTable:
    """Homology up to ``up_to`` (default ``max_dim - 1``, the largest trustworthy degree)."""
    up_to = S.max_dim - 1 if up_to is None else up_to
    if up_to > S.max_dim - 1 or up_to < 0:
        raise RangeError(f"homology of a {S.max_dim}-truncated simplicial set is trusted in "
                         f"degrees 0..{S.max_dim - 1}, not up to {up_to}")
    return homology_of_complex(chain_complex(S.truncate(up_to + 1), name=name), up_to)
