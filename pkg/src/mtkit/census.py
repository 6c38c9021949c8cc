"""Per-space classification table for all labeled topologies on n points."""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import enumerate_topologies, space_id
from .frames import frame_profile
from .functors import functor_O
from .separation import Axiom, SeparationProfile, classify


@dataclass(frozen=True)
class CensusRow:
    n: int
    space_id: str
    profile: SeparationProfile
    frame_profile: dict

    def as_dict(self) -> dict:
        return {"n": self.n, "space_id": self.space_id,
                "profile": self.profile.as_dict(), "frame_profile": dict(self.frame_profile)}


def census(n: int, bound: int | None = None) -> list:
    rows = []
    for M in enumerate_topologies(n, bound):
        rows.append(CensusRow(n, space_id(M), classify(M), frame_profile(functor_O(M))))
    ids = [r.space_id for r in rows]
    assert len(set(ids)) == len(ids), "duplicate space id in census"
    return rows


def summary(rows) -> dict:
    """Number of rows satisfying each separation and frame axiom."""
    out = {"spaces": len(rows)}
    for ax in Axiom:
        out[ax.value] = sum(r.profile[ax] for r in rows)
    frame_keys = sorted({k for r in rows for k in r.frame_profile})
    for k in frame_keys:
        out[f"frame:{k}"] = sum(r.frame_profile[k] for r in rows)
    return out
