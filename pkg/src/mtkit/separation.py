"""Separation axioms for finite powerset MT-algebras.

Every axiom is evaluated directly from its defining generation or
approximation condition.  Failure witnesses are the least offending element
(by bitmask value) or the lexicographically least offending pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .core import (FinSpace, Kind, _family, closure, interior, is_subset,
                   join_generation_witness, meet_generation_witness)
from .errors import NotNormal, NotRatherBelow, PreconditionViolated, ensure
from .relations import interpolative_core, transpose


class Axiom(str, Enum):
    T0 = "T0"
    T_HALF = "T_HALF"
    T1 = "T1"
    WSOBER = "WSOBER"
    SOBER = "SOBER"
    T2 = "T2"
    T3 = "T3"
    T3HALF = "T3HALF"
    T4 = "T4"


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: object = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


# --------------------------------------------------------------------------
# ⊲ and ⊲⊲


def mt_rather(M: FinSpace, a: int, b: int) -> bool:
    """a ⊲ b iff ◇a ≤ □b."""
    return is_subset(closure(M, a), interior(M, b))


@lru_cache(maxsize=1 << 14)
def rather_rows(M: FinSpace) -> tuple:
    size = 1 << M.n
    cl = [closure(M, a) for a in range(size)]
    it = [interior(M, b) for b in range(size)]
    return tuple(sum(1 << b for b in range(size) if cl[a] & ~it[b] == 0) for a in range(size))


@lru_cache(maxsize=1 << 14)
def completely_rows(M: FinSpace) -> tuple:
    return interpolative_core(rather_rows(M), 1 << M.n)


def mt_completely(M: FinSpace, a: int, b: int) -> bool:
    return bool(completely_rows(M)[a] >> b & 1)


# --------------------------------------------------------------------------
# axioms


def _generation(M: FinSpace, kind: Kind, label: str) -> Verdict:
    w = join_generation_witness(_family(M, kind), M)
    if w is None:
        return Verdict(True)
    return Verdict(False, w, f"{label} does not join-generate: element not covered")


def join_irreducibles(elems) -> list:
    """Nonzero members that are not the join of two strictly smaller members."""
    elems = sorted(set(elems))
    out = []
    for p in elems:
        if p == 0:
            continue
        below = [q for q in elems if q != p and is_subset(q, p)]
        if not any(q | r == p for q in below for r in below):
            out.append(p)
    return out


def meet_irreducibles(elems, full: int) -> list:
    elems = sorted(set(elems))
    out = []
    for m in elems:
        if m == full:
            continue
        above = [q for q in elems if q != m and is_subset(m, q)]
        if not any(q & r == m for q in above for r in above):
            out.append(m)
    return out


def _approximation_witness(M: FinSpace, rows) -> int | None:
    # least open a with a ≠ ⋁{b open | b R a}
    cols = transpose(rows, 1 << M.n)
    for a in M.open_list:
        j = 0
        for b in M.open_list:
            if cols[a] >> b & 1:
                j |= b
        if j != a:
            return a
    return None


def _normality_witness(M: FinSpace):
    opens = M.open_list
    for c in M.closed_list:
        for d in M.closed_list:
            if c & d:
                continue
            if not any(a & b == 0 and is_subset(c, a) and is_subset(d, b)
                       for a in opens for b in opens):
                return (c, d)
    return None


@lru_cache(maxsize=1 << 16)
def mt_axiom(M: FinSpace, which: Axiom | str) -> Verdict:
    which = Axiom(which)
    if which is Axiom.T0:
        return _generation(M, Kind.WLC, "WLC")
    if which is Axiom.T_HALF:
        return _generation(M, Kind.LC, "LC")
    if which is Axiom.T1:
        return _generation(M, Kind.CLOSED, "C")
    if which is Axiom.T2:
        return _generation(M, Kind.GC, "GC")
    if which is Axiom.WSOBER:
        closures = {closure(M, x) for x in M.atoms}
        for p in join_irreducibles(M.closeds):
            if p not in closures:
                return Verdict(False, p, "join-irreducible closed element is not the closure of an atom")
        return Verdict(True)
    if which is Axiom.SOBER:
        ws = mt_axiom(M, Axiom.WSOBER)
        if not ws:
            return ws
        t0 = mt_axiom(M, Axiom.T0)
        if not t0:
            return t0
        for p in join_irreducibles(M.closeds):
            ensure(sum(closure(M, x) == p for x in M.atoms) == 1,
                   "sober algebra has a join-irreducible closed element with several generic atoms")
        return Verdict(True)
    t1 = mt_axiom(M, Axiom.T1)
    if not t1:
        return t1
    if which is Axiom.T3:
        w = _approximation_witness(M, rather_rows(M))
        return Verdict(w is None, w, "" if w is None else "open element not approximated by ⊲")
    if which is Axiom.T3HALF:
        w = _approximation_witness(M, completely_rows(M))
        return Verdict(w is None, w, "" if w is None else "open element not approximated by ⊲⊲")
    if which is Axiom.T4:
        w = _normality_witness(M)
        return Verdict(w is None, w, "" if w is None else "disjoint closed pair not separated")
    raise ValueError(which)


def dual_axiom_check(M: FinSpace, which: Axiom | str) -> bool:
    """Evaluate the order-dual formulation of an axiom."""
    which = Axiom(which)
    full = M.full
    if which is Axiom.T0:
        return meet_generation_witness(_family(M, Kind.WLO), M) is None
    if which is Axiom.T_HALF:
        return meet_generation_witness(_family(M, Kind.LO), M) is None
    if which is Axiom.T1:
        return meet_generation_witness(M.opens, M) is None
    if which is Axiom.T2:
        return meet_generation_witness(_family(M, Kind.GO), M) is None
    if which is Axiom.WSOBER:
        cocl = {full ^ closure(M, x) for x in M.atoms}
        return all(m in cocl for m in meet_irreducibles(M.opens, full))
    if which is Axiom.SOBER:
        return dual_axiom_check(M, Axiom.WSOBER) and dual_axiom_check(M, Axiom.T0)
    if not dual_axiom_check(M, Axiom.T1):
        return False
    if which in (Axiom.T3, Axiom.T3HALF):
        rows = rather_rows(M) if which is Axiom.T3 else completely_rows(M)
        for c in M.closed_list:
            m = full
            for d in M.closed_list:
                if rows[c] >> d & 1:
                    m &= d
            if m != c:
                return False
        return True
    if which is Axiom.T4:
        closeds = M.closed_list
        for a in M.open_list:
            for b in M.open_list:
                if a | b != full:
                    continue
                if not any(c | d == full and is_subset(c, a) and is_subset(d, b)
                           for c in closeds for d in closeds):
                    return False
        return True
    raise ValueError(which)


# --------------------------------------------------------------------------
# profile


LADDER = (Axiom.T4, Axiom.T3HALF, Axiom.T3, Axiom.T2, Axiom.T1, Axiom.T_HALF, Axiom.T0)


@dataclass(frozen=True)
class SeparationProfile:
    t0: bool
    t_half: bool
    t1: bool
    weakly_sober: bool
    sober: bool
    t2: bool
    t3: bool
    t3half: bool
    t4: bool
    witnesses: dict = field(default_factory=dict, compare=False, hash=False)

    def __getitem__(self, ax: Axiom | str) -> bool:
        return getattr(self, _FIELD[Axiom(ax)])

    def as_dict(self) -> dict:
        return {ax.value: self[ax] for ax in Axiom}

    def ladder_violations(self) -> list:
        out = []
        for hi, lo in zip(LADDER, LADDER[1:]):
            if self[hi] and not self[lo]:
                out.append(f"{hi.value} without {lo.value}")
        if self.t2 and not self.sober:
            out.append("T2 without SOBER")
        if self.sober and not self.weakly_sober:
            out.append("SOBER without WSOBER")
        if self.sober and not self.t0:
            out.append("SOBER without T0")
        return out


_FIELD = {
    Axiom.T0: "t0", Axiom.T_HALF: "t_half", Axiom.T1: "t1",
    Axiom.WSOBER: "weakly_sober", Axiom.SOBER: "sober", Axiom.T2: "t2",
    Axiom.T3: "t3", Axiom.T3HALF: "t3half", Axiom.T4: "t4",
}


def classify(M: FinSpace) -> SeparationProfile:
    verdicts = {ax: mt_axiom(M, ax) for ax in Axiom}
    prof = SeparationProfile(
        **{_FIELD[ax]: v.holds for ax, v in verdicts.items()},
        witnesses={ax.value: (v.witness, v.reason) for ax, v in verdicts.items() if not v.holds},
    )
    bad = prof.ladder_violations()
    ensure(not bad, f"separation ladder broken for {M!r}: {bad}")
    return prof


# --------------------------------------------------------------------------
# interpolation and Urysohn families


def interpolate(M: FinSpace, a: int, b: int) -> int:
    """First open ``u`` (ascending bitmask) with ``a ⊲ u ⊲ b``."""
    if not mt_axiom(M, Axiom.T4):
        raise NotNormal("algebra is not normal", mt_axiom(M, Axiom.T4).witness)
    if not mt_rather(M, a, b):
        raise NotRatherBelow(f"{a:#x} is not rather below {b:#x}", (a, b))
    for u in M.open_list:
        if mt_rather(M, a, u) and mt_rather(M, u, b):
            return u
    ensure(False, "normal algebra failed to interpolate")


@dataclass(frozen=True)
class UrysohnFamily:
    depth: int
    members: dict  # Fraction in [0, 1] with denominator 2**depth ↦ open element

    def indices(self) -> list:
        return sorted(self.members)

    def violations(self, M: FinSpace, c: int, a: int) -> list:
        out = []
        idx = self.indices()
        if not is_subset(c, self.members[Fraction(0)]):
            out.append("c ≰ u_0")
        if not is_subset(self.members[Fraction(1)], a):
            out.append("u_1 ≰ a")
        for p in idx:
            if self.members[p] not in M.opens:
                out.append(f"u_{p} not open")
        for i, p in enumerate(idx):
            for q in idx[i + 1:]:
                if not mt_rather(M, self.members[p], self.members[q]):
                    out.append(f"u_{p} ⋪ u_{q}")
        return out


def urysohn_family(M: FinSpace, c: int, a: int, depth: int = 4) -> UrysohnFamily:
    """Dyadic family of opens between closed ``c`` and open ``a ⊇ c``."""
    if not mt_axiom(M, Axiom.T4):
        raise NotNormal("algebra is not normal", mt_axiom(M, Axiom.T4).witness)
    if depth < 1:
        raise PreconditionViolated("depth must be at least 1", depth)
    if c not in M.closeds or a not in M.opens or not is_subset(c, a):
        raise PreconditionViolated("need c closed, a open and c ≤ a", (c, a))
    members = {Fraction(1): a, Fraction(0): interpolate(M, c, a)}
    for d in range(1, depth + 1):
        step = Fraction(1, 2 ** d)
        for k in range(1, 2 ** d, 2):
            r = k * step
            members[r] = interpolate(M, members[r - step], members[r + step])
    fam = UrysohnFamily(depth, dict(sorted(members.items())))
    bad = fam.violations(M, c, a)
    ensure(not bad, f"Urysohn family invariants failed: {bad}")
    return fam
