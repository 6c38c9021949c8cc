"""Exhaustive theorem checks over labeled finite topologies.

Each theorem is a predicate on one space.  A check returns ``None`` when the
instance holds and a witness otherwise; an :class:`InvariantViolation` raised
inside a check counts as a violation as well.  Violations carry the space
document, so any failure can be replayed with the command-line tool.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from .completions import generic_matches_shortcut, mt_from_frame
from .core import (FinSpace, Kind, _family, closure, closure_direct, generated_complete_boolean,
                   generated_complete_lattice, interior, interior_by_preorder, interior_by_table)
from .enumeration import enumerate_topologies, space_id
from .errors import InvariantViolation
from .frames import (completely_below_rows, find_isomorphism, frame_profile,
                     is_prime_filter, points, points_bruteforce,
                     rather_below_rows)
from .functors import (delta, eta, find_homeomorphism, functor_at, functor_O, is_homeomorphism,
                       omega, soberify, spatialize, vartheta_analysis)
from .io import space_document
from .oracles import CLASSICAL, chain_relation, classical_sober
from .separation import (Axiom, classify, completely_rows, dual_axiom_check, mt_axiom,
                         rather_rows, urysohn_family)


class Instance:
    """One space with lazily computed derived data shared by all checks."""

    def __init__(self, M: FinSpace):
        self.M = M

    @cached_property
    def profile(self):
        return classify(self.M)

    @cached_property
    def frame(self):
        return functor_O(self.M)

    @cached_property
    def fprofile(self):
        return frame_profile(self.frame)

    @cached_property
    def size(self) -> int:
        return 1 << self.M.n


# --------------------------------------------------------------------------
# relation helpers


def _relation_calculus(M: FinSpace, rows) -> object:
    """First failure of the order calculus shared by ⊲ and ⊲⊲, or ``None``."""
    size, full = 1 << M.n, M.full
    for a in range(size):
        row = rows[a]
        if row & ~sum(1 << b for b in range(size) if a & ~b == 0):
            return ("not contained in ≤", a)
        if not rows[0] >> a & 1 or not row >> full & 1:
            return ("0 R a R 1 fails", a)
    for a in range(size):
        for b in range(size):
            r = rows[a] >> b & 1
            if r != rows[full ^ b] >> (full ^ a) & 1:
                return ("contraposition", a, b)
            if not r:
                continue
            # squeezing: x ≤ a and b ≤ y
            for x in range(size):
                if x & ~a == 0 and not rows[x] >> b & 1:
                    return ("squeeze below", x, a, b)
            for y in range(size):
                if b & ~y == 0 and not rows[a] >> y & 1:
                    return ("squeeze above", a, b, y)
            for c in range(size):
                if rows[c] >> b & 1 and not rows[a | c] >> b & 1:
                    return ("join of left sides", a, c, b)
                if rows[a] >> c & 1 and not rows[a] >> (b & c) & 1:
                    return ("meet of right sides", a, b, c)
    return None


# --------------------------------------------------------------------------
# the checks


def check_kuratowski(I: Instance):
    M = I.M
    full = M.full
    box = [interior(M, a) for a in range(I.size)]
    if box[full] != full:
        return ("□1 ≠ 1",)
    for a in range(I.size):
        if interior_by_table(M, a) != interior_by_preorder(M, a):
            return ("interior paths differ", a)
        if box[a] & ~a or box[box[a]] != box[a]:
            return ("deflation or idempotence", a)
        if closure(M, a) != closure_direct(M, a):
            return ("closure paths differ", a)
        for b in range(a, I.size):
            if box[a & b] != box[a] & box[b]:
                return ("□ not meet-preserving", a, b)
    return None


def check_opens_frame(I: Instance):
    M = I.M
    for u in M.opens:
        for v in M.opens:
            if u & v not in M.opens or u | v not in M.opens:
                return ("opens not closed under ∧/∨", u, v)
    for c in M.closeds:
        for d in M.closeds:
            if c & d not in M.closeds or c | d not in M.closeds:
                return ("closeds not closed under ∧/∨", c, d)
    if len(I.frame.labels) != len(M.opens):
        return ("O(M) has the wrong size",)
    return None


def check_ladder(I: Instance):
    bad = I.profile.ladder_violations()
    return bad or None


def check_t1_iff_thalf_subfit(I: Instance):
    p = I.profile
    rhs = p.t_half and I.fprofile["SUBFIT"]
    return None if p.t1 == rhs else {"T1": p.t1, "T_HALF": p.t_half, "SUBFIT": I.fprofile["SUBFIT"]}


def check_t2_implies_sober(I: Instance):
    p = I.profile
    return None if not p.t2 or p.sober else {"T2": True, "SOBER": False}


def check_t2_implies_hausdorff(I: Instance):
    p = I.profile
    return None if not p.t2 or I.fprofile["HAUSDORFF"] else {"T2": True, "HAUSDORFF": False}


def check_regular_go_gc(I: Instance):
    M, p = I.M, I.profile
    if not p.t3:
        return None
    if _family(M, Kind.GO) != M.opens:
        return ("GO ≠ O",)
    if _family(M, Kind.GC) != M.closeds:
        return ("GC ≠ C",)
    if not p.t2:
        return ("regular but not T2",)
    return None


def check_t3half_iff_cregular(I: Instance):
    p = I.profile
    rhs = p.t1 and I.fprofile["CREGULAR"]
    return None if p.t3half == rhs else {"T3HALF": p.t3half, "T1": p.t1, "CREGULAR": I.fprofile["CREGULAR"]}


def check_t4_iff_normal(I: Instance):
    p = I.profile
    rhs = p.t1 and I.fprofile["NORMAL"]
    return None if p.t4 == rhs else {"T4": p.t4, "T1": p.t1, "NORMAL": I.fprofile["NORMAL"]}


def check_normal_rather_eq_completely(I: Instance):
    M, p = I.M, I.profile
    if not p.t4:
        return None
    if rather_rows(M) != completely_rows(M):
        a = next(a for a in range(I.size) if rather_rows(M)[a] != completely_rows(M)[a])
        return ("⊲ ≠ ⊲⊲", a)
    if not (p.t3half and p.t3):
        return ("normal but not completely regular or not regular",)
    return None


def check_t0_boolean_generation(I: Instance):
    M = I.M
    gen = generated_complete_boolean(M.opens, M) == frozenset(M.carrier())
    return None if gen == I.profile.t0 else {"T0": I.profile.t0, "boolean_generated": gen}


def check_t1_lattice_generation(I: Instance):
    M = I.M
    gen = generated_complete_lattice(M.opens, M) == frozenset(M.carrier())
    return None if gen == I.profile.t1 else {"T1": I.profile.t1, "lattice_generated": gen}


def check_thalf_envelope(I: Instance):
    M = I.M
    R = mt_from_frame(I.frame)
    if find_isomorphism(functor_O(R), I.frame) is None:
        return ("O(envelope) ≇ O(M)",)
    h = find_homeomorphism(R, M)
    iso = h is not None
    if iso != I.profile.t_half:
        return {"T_HALF": I.profile.t_half, "envelope_isomorphic": iso, "envelope": space_document(R)}
    return None


def check_envelope_frame(I: Instance):
    L = I.frame
    R = mt_from_frame(L)
    if not mt_axiom(R, Axiom.T_HALF):
        return ("envelope not T1/2",)
    if mt_axiom(R, Axiom.T1).holds != I.fprofile["SUBFIT"]:
        return {"envelope_T1": mt_axiom(R, Axiom.T1).holds, "SUBFIT": I.fprofile["SUBFIT"]}
    if L.m <= 6:
        generic_matches_shortcut(L)
    return None


def check_classical(I: Instance):
    bad = {k: f(I.M) for k, f in CLASSICAL.items() if f(I.M) != mt_axiom(I.M, k).holds}
    return bad or None


def check_dual(I: Instance):
    bad = [ax.value for ax in Axiom if dual_axiom_check(I.M, ax) != mt_axiom(I.M, ax).holds]
    return bad or None


def check_vartheta(I: Instance):
    r = vartheta_analysis(I.M)
    if I.profile.sober and not r.homeomorphism:
        return ("sober without ϑ homeomorphism",)
    return None


def check_eta(I: Instance):
    M = I.M
    e = eta(M)
    X = functor_at(M).space
    if sorted(e) != list(range(I.size)):
        return ("η not bijective",)
    for a in range(I.size):
        if e[interior(M, a)] != interior(X, e[a]):
            return ("η(□a) ≠ int η(a)", a)
        if e[closure(M, a)] != closure(X, e[a]):
            return ("η(◇a) ≠ cl η(a)", a)
    for k, x in enumerate(M.atoms):
        if e[closure(M, x)] != closure_direct(X, 1 << k):
            return ("η(◇x) ≠ cl{x}", x)
    return None


def check_o_p_omega(I: Instance):
    A, B = functor_O(I.M), omega(I.M)
    if A.labels != B.labels or A.up != B.up:
        return ("O(P(X)) ≠ Ω(X)",)
    return None


def check_delta(I: Instance):
    X = I.M
    S, _ = pt_space_of_omega(X)
    homeo = is_homeomorphism(X, S, delta(X))
    sober = classical_sober(X)
    if homeo != sober:
        return {"delta_homeomorphism": homeo, "sober": sober}
    soberify(X)
    return None


def pt_space_of_omega(X: FinSpace):
    from .frames import pt_space
    return pt_space(omega(X))


def check_points(I: Instance):
    L = I.frame
    pts = points(L)
    if L.m <= 12:
        if set(pts) != set(points_bruteforce(L)):
            return ("points by meet-irreducibles ≠ brute force",)
        return None
    # too large to enumerate all subsets: check each point and the count
    for p in pts:
        if not is_prime_filter(L, sum(1 << a for a in p.filter)):
            return ("not a completely prime filter", sorted(p.filter))
    if len(set(pts)) != len(L.meet_irreducibles):
        return ("points not distinct",)
    return None


def check_zeta(I: Instance):
    spatialize(I.frame)
    return None


def check_rather_frame(I: Instance):
    M, L = I.M, I.frame
    opens = L.labels
    fr, fc = rather_below_rows(L), completely_below_rows(L)
    mr, mc = rather_rows(M), completely_rows(M)
    for i, a in enumerate(opens):
        for j, b in enumerate(opens):
            if (mr[a] >> b & 1) != (fr[i] >> j & 1):
                return ("⊲ ≠ ≺ on opens", a, b)
            if (mc[a] >> b & 1) != (fc[i] >> j & 1):
                return ("⊲⊲ ≠ ≺≺ on opens", a, b)
    return None


def check_frame_inclusions(I: Instance):
    f = I.fprofile
    if f["REGULAR"] and not f["HAUSDORFF"]:
        return ("REGULAR without HAUSDORFF",)
    if f["CREGULAR"] and not f["REGULAR"]:
        return ("CREGULAR without REGULAR",)
    if f["NORMAL"] and f["SUBFIT"] and not f["CREGULAR"]:
        return ("NORMAL and SUBFIT without CREGULAR",)
    if not f["SPATIAL"]:
        return ("finite frame not spatial",)
    return None


def chain_depth(size: int) -> int:
    """Smallest depth whose chains are longer than ``size``."""
    d = 0
    while 2 ** d <= size:
        d += 1
    return d


def check_completely_oracle(I: Instance):
    M, L = I.M, I.frame
    size = I.size
    up = [sum(1 << b for b in range(size) if a & ~b == 0) for a in range(size)]
    down = [sum(1 << b for b in range(size) if b & ~a == 0) for a in range(size)]
    if chain_relation(size, rather_rows(M), up, down, chain_depth(size)) != completely_rows(M):
        return ("⊲⊲ fixpoint ≠ chain search on M",)
    if chain_relation(L.m, rather_below_rows(L), L.up, L.down, chain_depth(L.m)) != completely_below_rows(L):
        return ("≺≺ fixpoint ≠ chain search on O(M)",)
    return None


def check_rather_calculus(I: Instance):
    return _relation_calculus(I.M, rather_rows(I.M))


def check_completely_calculus(I: Instance):
    M = I.M
    rows, rr = completely_rows(M), rather_rows(M)
    w = _relation_calculus(M, rows)
    if w is not None:
        return w
    for a in range(I.size):
        if rows[a] & ~rr[a]:
            return ("⊲⊲ not contained in ⊲", a)
        for b in range(I.size):
            if rows[a] >> b & 1 and not any(rows[a] >> c & 1 and rows[c] >> b & 1 for c in range(I.size)):
                return ("⊲⊲ not interpolative", a, b)
    return None


def check_ro_rc(I: Instance):
    M = I.M
    full = M.full
    ro = _family(M, Kind.RO)
    rc = _family(M, Kind.RC)
    for b in range(I.size):
        if (b in ro) != (full ^ b in rc):
            return ("b ∈ RO ⇔ ¬b ∈ RC fails", b)
    for b in ro:
        neg = interior(M, full ^ b)
        if neg not in ro or b & neg or interior(M, closure(M, b | neg)) != full:
            return ("RO complement", b)
        for c in ro:
            j = interior(M, closure(M, b | c))
            least = [d for d in ro if (b | c) & ~d == 0]
            if b & c not in ro or j not in ro or any(j & ~d for d in least):
                return ("RO joins/meets", b, c)
            for d in ro:
                jd = interior(M, closure(M, c | d))
                if b & jd != interior(M, closure(M, (b & c) | (b & d))):
                    return ("RO not distributive", b, c, d)
    return None


def check_finite_collapse(I: Instance):
    M = I.M
    pairs = ((Kind.SATURATED, Kind.OPEN), (Kind.COSATURATED, Kind.CLOSED),
             (Kind.WLC, Kind.LC), (Kind.WLO, Kind.LO))
    bad = [f"{a.value} ≠ {b.value}" for a, b in pairs if _family(M, a) != _family(M, b)]
    return bad or None


def check_regular_opens(I: Instance):
    M = I.M
    if not I.profile.t3half:
        return None
    rows = completely_rows(M)
    ro = _family(M, Kind.RO)
    for a in M.opens:
        j = 0
        for b in ro:
            if rows[b] >> a & 1:
                j |= b
        if j != a:
            return ("open not a join of regular opens ⊲⊲ below it", a)
    return None


def check_urysohn(I: Instance):
    M = I.M
    if not I.profile.t4:
        return None
    for c in M.closed_list:
        for a in M.open_list:
            if c & ~a:
                continue
            fam = urysohn_family(M, c, a, depth=4)
            bad = fam.violations(M, c, a)
            if bad:
                return {"closed": c, "open": a, "violations": bad}
    return None


def check_degenerate(I: Instance):
    if I.M.n > 1:
        return None
    bad = [ax.value for ax in Axiom if not mt_axiom(I.M, ax)]
    return bad or None


@dataclass(frozen=True)
class Theorem:
    theorem_id: str
    statement: str
    check: Callable


THEOREMS = (
    Theorem("kuratowski", "□1 = 1, □(a∧b) = □a∧□b, □a ≤ a, □□a = □a; both interior and closure computations agree", check_kuratowski),
    Theorem("opens_frame", "O(M) is closed under finite meets and joins, C(M) dually, and O(M) is a frame", check_opens_frame),
    Theorem("ladder", "T4 ⇒ T3½ ⇒ T3 ⇒ T2 ⇒ T1 ⇒ T½ ⇒ T0 and T2 ⇒ sober ⇒ weakly sober", check_ladder),
    Theorem("t1_iff_thalf_subfit", "M is T1 iff M is T½ and O(M) is subfit", check_t1_iff_thalf_subfit),
    Theorem("t2_implies_sober", "every T2 algebra is sober", check_t2_implies_sober),
    Theorem("t2_implies_hausdorff_frame", "if M is T2 then O(M) is a Hausdorff frame", check_t2_implies_hausdorff),
    Theorem("regular_go_gc", "if M is regular then GO(M) = O(M), GC(M) = C(M), and M is T2", check_regular_go_gc),
    Theorem("t3half_iff_t1_cregular_frame", "M is T3½ iff M is T1 and O(M) is completely regular", check_t3half_iff_cregular),
    Theorem("t4_iff_t1_normal_frame", "M is T4 iff M is T1 and O(M) is normal", check_t4_iff_normal),
    Theorem("normal_rather_eq_completely", "in a normal algebra ⊲⊲ = ⊲, and normal ⇒ T3½ and regular", check_normal_rather_eq_completely),
    Theorem("t0_iff_boolean_generation", "M is T0 iff O(M) generates M as a complete Boolean algebra", check_t0_boolean_generation),
    Theorem("t1_iff_lattice_generation", "M is T1 iff O(M) generates M as a complete lattice", check_t1_lattice_generation),
    Theorem("thalf_iff_envelope_iso", "O of the envelope of O(M) is isomorphic to O(M), and M is isomorphic to the envelope iff M is T½", check_thalf_envelope),
    Theorem("envelope_of_frame", "the envelope of a finite frame is T½, and T1 iff the frame is subfit; the generic construction agrees", check_envelope_frame),
    Theorem("classical_agreement", "each axiom on P(X) agrees with its point-set form T0/Td/T1/T2/T3/T3½/T4/sober", check_classical),
    Theorem("dual_axioms", "each axiom agrees with its order-dual formulation", check_dual),
    Theorem("vartheta", "ϑ is injective iff at(M) is T0, surjective iff M is weakly sober, a homeomorphism if M is weakly sober with at(M) T0", check_vartheta),
    Theorem("eta", "η is a bijective MT-morphism with η(□a) = int η(a), η(◇a) = cl η(a), η(◇x) = cl{x}", check_eta),
    Theorem("o_p_eq_omega", "O(P(X)) = Ω(X)", check_o_p_omega),
    Theorem("delta_homeo_iff_sober", "δ: X → pt(Ω(X)) is a homeomorphism iff X is sober; soberification is sober", check_delta),
    Theorem("points_two_ways", "points of O(M) from meet-irreducibles equal the completely prime filters", check_points),
    Theorem("zeta_iso", "ζ: L → Ω(pt(L)) is an isomorphism for L = O(M)", check_zeta),
    Theorem("rather_matches_frame", "on open elements ⊲ equals ≺ and ⊲⊲ equals ≺≺ of O(M)", check_rather_frame),
    Theorem("frame_inclusions", "regular ⇒ Hausdorff, completely regular ⇒ regular, normal and subfit ⇒ completely regular, finite ⇒ spatial", check_frame_inclusions),
    Theorem("completely_below_oracle", "the interpolative fixpoint for ⊲⊲ and ≺≺ equals explicit long-chain search", check_completely_oracle),
    Theorem("rather_calculus", "⊲ ⊆ ≤, 0 ⊲ a ⊲ 1, squeezing, a ⊲ b ⇔ ¬b ⊲ ¬a, closure under ∨ on the left and ∧ on the right", check_rather_calculus),
    Theorem("completely_calculus", "⊲⊲ has the same calculus as ⊲, is contained in ⊲, and interpolates", check_completely_calculus),
    Theorem("ro_rc_boolean", "RO(M) and RC(M) are Boolean algebras with b ∈ RO ⇔ ¬b ∈ RC and join □◇(b∨c)", check_ro_rc),
    Theorem("finite_collapse", "SATURATED = O, COSATURATED = C, WLC = LC and WLO = LO on finite algebras", check_finite_collapse),
    Theorem("regular_opens_approximate", "in a T3½ algebra each open a is the join of regular opens b ⊲⊲ a", check_regular_opens),
    Theorem("urysohn", "in a normal algebra every closed c ≤ open a has a depth-4 dyadic family with c ≤ u_0, u_1 ≤ a, u_p ⊲ u_q for p < q", check_urysohn),
    Theorem("degenerate", "on 0- and 1-point spaces every axiom holds", check_degenerate),
)

THEOREM_IDS = tuple(t.theorem_id for t in THEOREMS)


@dataclass
class TheoremReport:
    theorem_id: str
    statement: str
    instances: int = 0
    violations: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"theorem": self.theorem_id, "statement": self.statement,
                "instances": self.instances, "violations": self.violations,
                "elapsed": round(self.elapsed, 4)}


def _jsonable(w):
    if isinstance(w, dict):
        return {str(k): _jsonable(v) for k, v in w.items()}
    if isinstance(w, (list, tuple, set, frozenset)):
        items = sorted(w) if isinstance(w, (set, frozenset)) else w
        return [_jsonable(v) for v in items]
    if isinstance(w, (bool, int, float, str)) or w is None:
        return w
    return str(w)


def run_checks(spaces, ids=None) -> list:
    selected = [t for t in THEOREMS if ids is None or t.theorem_id in ids]
    unknown = set(ids or ()) - set(THEOREM_IDS)
    if unknown:
        raise KeyError(f"unknown theorem ids: {sorted(unknown)}")
    reports = {t.theorem_id: TheoremReport(t.theorem_id, t.statement) for t in selected}
    for M in spaces:
        inst = Instance(M)
        for t in selected:
            rep = reports[t.theorem_id]
            start = time.perf_counter()
            try:
                w = t.check(inst)
            except InvariantViolation as exc:
                w = {"invariant": str(exc)}
            rep.elapsed += time.perf_counter() - start
            rep.instances += 1
            if w is not None:
                rep.violations.append({"space_id": space_id(M), "space": space_document(M),
                                       "witness": _jsonable(w)})
    return [reports[t.theorem_id] for t in selected]


def run_theorem_suite(n: int, ids=None, cumulative: bool = False, bound: int | None = None) -> list:
    """Check every theorem on every labeled topology with ``n`` points
    (or with at most ``n`` points when ``cumulative``)."""
    sizes = range(n + 1) if cumulative else (n,)
    spaces = []
    for k in sizes:
        spaces.extend(enumerate_topologies(k, bound))
    return run_checks(spaces, ids)
