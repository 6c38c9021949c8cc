"""Finite lattices and frames, their points, and the frame-side axioms.

Elements of an ``m``-element lattice are the ids ``0..m-1``.  Order is stored
as bitmask rows: ``up[i]`` holds every ``j`` with ``i ≤ j`` and ``down[j]``
every ``i`` with ``i ≤ j``.

On a finite lattice join-infinite distributivity is ordinary distributivity,
so a finite frame is a finite distributive lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .core import popcount, validate_space
from .errors import NotAFrameHom, NotALattice, NotDistributive, ensure
from .relations import interpolative_core, transpose


@dataclass(frozen=True)
class FiniteLattice:
    m: int
    up: tuple
    down: tuple
    meet_table: tuple
    join_table: tuple
    bot: int
    top: int
    labels: tuple | None = field(default=None, compare=False, hash=False)

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def join_all(self, xs: Iterable[int]) -> int:
        r = self.bot
        for x in xs:
            r = self.join_table[r][x]
        return r

    def meet_all(self, xs: Iterable[int]) -> int:
        r = self.top
        for x in xs:
            r = self.meet_table[r][x]
        return r

    def elements(self) -> range:
        return range(self.m)

    def leq_pairs(self) -> list:
        return [(i, j) for i in range(self.m) for j in range(self.m) if self.up[i] >> j & 1]

    @cached_property
    def lower_covers(self) -> tuple:
        out = []
        for a in range(self.m):
            below = self.down[a] & ~(1 << a)
            covers = [b for b in range(self.m)
                      if below >> b & 1 and (self.up[b] & below) == 1 << b]
            out.append(tuple(covers))
        return tuple(out)

    @cached_property
    def upper_covers(self) -> tuple:
        out = []
        for a in range(self.m):
            above = self.up[a] & ~(1 << a)
            covers = [b for b in range(self.m)
                      if above >> b & 1 and (self.down[b] & above) == 1 << b]
            out.append(tuple(covers))
        return tuple(out)

    @cached_property
    def join_irreducibles(self) -> tuple:
        return tuple(a for a in range(self.m) if len(self.lower_covers[a]) == 1)

    @cached_property
    def meet_irreducibles(self) -> tuple:
        return tuple(a for a in range(self.m) if len(self.upper_covers[a]) == 1)

    def label(self, a: int):
        return self.labels[a] if self.labels is not None else a


class FiniteFrame(FiniteLattice):
    """A :class:`FiniteLattice` that passed the distributivity check."""


def _rows_from_pairs(m: int, pairs: Iterable) -> list:
    up = [0] * m
    for p in pairs:
        i, j = p
        if not (0 <= i < m and 0 <= j < m):
            raise NotALattice(f"pair {p!r} outside 0..{m - 1}", tuple(p))
        up[i] |= 1 << j
    return up


def build_lattice(m: int, up: Sequence[int], labels=None) -> FiniteLattice:
    """Validate an order given as up-rows and tabulate meet and join."""
    up = list(up)
    for i in range(m):
        if not up[i] >> i & 1:
            raise NotALattice(f"not reflexive at {i}", (i, i))
    for i in range(m):
        for j in range(i + 1, m):
            if up[i] >> j & 1 and up[j] >> i & 1:
                raise NotALattice(f"not antisymmetric: {i} ≤ {j} ≤ {i}", (i, j))
    for i in range(m):
        reach = 0
        for j in range(m):
            if up[i] >> j & 1:
                reach |= up[j]
        if reach != up[i]:
            k = (reach & ~up[i]).bit_length() - 1
            raise NotALattice(f"not transitive: {i} ≤ … ≤ {k} but not {i} ≤ {k}", (i, k))
    down = transpose(up, m)
    if m == 0:
        raise NotALattice("empty order has no top", None)
    meet = [[0] * m for _ in range(m)]
    join = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            lb = down[i] & down[j]
            g = _greatest(lb, down, m)
            if g is None:
                raise NotALattice(f"no meet for {i}, {j}", ("meet", i, j))
            ub = up[i] & up[j]
            le = _greatest(ub, up, m)
            if le is None:
                raise NotALattice(f"no join for {i}, {j}", ("join", i, j))
            meet[i][j] = meet[j][i] = g
            join[i][j] = join[j][i] = le
    full = (1 << m) - 1
    bot = next((i for i in range(m) if up[i] == full), None)
    top = next((i for i in range(m) if down[i] == full), None)
    ensure(bot is not None and top is not None, "finite lattice must be bounded")
    return FiniteLattice(m, tuple(up), tuple(down), tuple(map(tuple, meet)),
                         tuple(map(tuple, join)), bot, top,
                         tuple(labels) if labels is not None else None)


def _greatest(s: int, cone: Sequence[int], m: int) -> int | None:
    # element g ∈ s with s ⊆ cone[g]
    for g in range(m):
        if s >> g & 1 and s & ~cone[g] == 0:
            return g
    return None


def validate_lattice(m: int, leq: Iterable) -> FiniteLattice:
    """``leq`` lists the pairs ``(i, j)`` with ``i ≤ j``."""
    return build_lattice(m, _rows_from_pairs(m, leq))


def lattice_from_sets(sets: Sequence[int]) -> FiniteLattice:
    """Lattice of bitmask sets ordered by inclusion; ids follow ``sets``."""
    m = len(sets)
    up = [sum(1 << j for j in range(m) if sets[i] & ~sets[j] == 0) for i in range(m)]
    return build_lattice(m, up, labels=sets)


def distributivity_witness(L: FiniteLattice):
    for a in range(L.m):
        for b in range(L.m):
            for c in range(b + 1, L.m):
                if L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)):
                    return (a, b, c)
    return None


def join_infinite_distributive(L: FiniteLattice) -> bool:
    """Brute force a ∧ ⋁S = ⋁{a ∧ s | s ∈ S} over every subset S."""
    for mask in range(1 << L.m):
        S = [s for s in range(L.m) if mask >> s & 1]
        js = L.join_all(S)
        for a in range(L.m):
            if L.meet(a, js) != L.join_all(L.meet(a, s) for s in S):
                return False
    return True


def validate_frame(L: FiniteLattice) -> FiniteFrame:
    w = distributivity_witness(L)
    if w is not None:
        raise NotDistributive(f"a∧(b∨c) ≠ (a∧b)∨(a∧c) at {w}", w)
    if L.m <= 8:
        ensure(join_infinite_distributive(L), "finite distributive lattice failed JID")
    return FiniteFrame(L.m, L.up, L.down, L.meet_table, L.join_table, L.bot, L.top, L.labels)


# --------------------------------------------------------------------------
# points


@dataclass(frozen=True)
class FramePoint:
    """A completely prime filter."""

    filter: frozenset

    def __contains__(self, a: int) -> bool:
        return a in self.filter


def points(L: FiniteLattice, check: bool = False) -> tuple:
    """Completely prime filters, one per meet-irreducible ``m``: ``{a | a ≰ m}``.

    Ordered by the id of the generating meet-irreducible.  With ``check``
    the result is compared against :func:`points_bruteforce`.
    """
    out = []
    for mi in L.meet_irreducibles:
        out.append(FramePoint(frozenset(a for a in range(L.m) if not L.leq(a, mi))))
    if check:
        ensure(set(out) == set(points_bruteforce(L)), "point computations disagree")
    return tuple(out)


def is_prime_filter(L: FiniteLattice, S: int) -> bool:
    """Whether the bitmask ``S`` of elements is a completely prime filter.

    Finitely, complete primeness is primeness together with ``0 ∉ S``.
    """
    if not S >> L.top & 1 or S >> L.bot & 1:
        return False
    members = [i for i in range(L.m) if S >> i & 1]
    if any(L.up[i] & ~S for i in members):
        return False
    if any(not S >> L.meet(i, j) & 1 for i, j in combinations(members, 2)):
        return False
    outside = [i for i in range(L.m) if not S >> i & 1]
    return not any(S >> L.join(i, j) & 1 for i, j in combinations(outside, 2))


def points_bruteforce(L: FiniteLattice) -> tuple:
    """Every subset of ``L`` tested against the completely-prime-filter axioms."""
    if L.m > 20:
        raise ValueError("brute-force point enumeration limited to 20 elements")
    return tuple(FramePoint(frozenset(i for i in range(L.m) if S >> i & 1))
                 for S in range(1 << L.m) if is_prime_filter(L, S))


def zeta(L: FiniteLattice, pts: Sequence[FramePoint] | None = None) -> tuple:
    """``zeta[a]`` = bitmask of the points containing ``a``."""
    pts = points(L) if pts is None else pts
    return tuple(sum(1 << k for k, p in enumerate(pts) if a in p) for a in range(L.m))


def pt_space(L: FiniteLattice) -> tuple:
    """Return ``(pt(L), zeta)`` with the topology ``zeta[L]``."""
    pts = points(L)
    z = zeta(L, pts)
    return validate_space(len(pts), set(z)), z


# --------------------------------------------------------------------------
# derived operations


def pseudocomplement(L: FiniteLattice, a: int) -> int:
    return L.join_all(b for b in range(L.m) if L.meet(b, a) == L.bot)


def heyting_impl(L: FiniteLattice, a: int, b: int) -> int:
    return L.join_all(c for c in range(L.m) if L.leq(L.meet(c, a), b))


def rather_below(L: FiniteLattice, b: int, a: int) -> bool:
    return L.join(pseudocomplement(L, b), a) == L.top


@lru_cache(maxsize=1 << 14)
def rather_below_rows(L: FiniteLattice) -> tuple:
    stars = [pseudocomplement(L, b) for b in range(L.m)]
    return tuple(sum(1 << a for a in range(L.m) if L.join(stars[b], a) == L.top)
                 for b in range(L.m))


@lru_cache(maxsize=1 << 14)
def completely_below_rows(L: FiniteLattice) -> tuple:
    return interpolative_core(rather_below_rows(L), L.m)


def completely_below(L: FiniteLattice, b: int, a: int) -> bool:
    return bool(completely_below_rows(L)[b] >> a & 1)


class FrameAxiom(str, Enum):
    SUBFIT = "SUBFIT"
    FIT = "FIT"
    HAUSDORFF = "HAUSDORFF"
    REGULAR = "REGULAR"
    CREGULAR = "CREGULAR"
    NORMAL = "NORMAL"
    SPATIAL = "SPATIAL"


def _approximated(L: FiniteLattice, rows: Sequence[int]) -> bool:
    cols = transpose(rows, L.m)
    return all(L.join_all(b for b in range(L.m) if cols[a] >> b & 1) == a
               for a in range(L.m))


def frame_axiom(L: FiniteLattice, which: FrameAxiom | str) -> bool:
    which = FrameAxiom(which)
    E = range(L.m)
    one = L.top
    if which is FrameAxiom.SUBFIT:
        return all(any(L.join(a, c) == one and L.join(b, c) != one for c in E)
                   for a in E for b in E if not L.leq(a, b))
    if which is FrameAxiom.FIT:
        return all(any(L.join(a, c) == one and not L.leq(heyting_impl(L, c, b), b) for c in E)
                   for a in E for b in E if not L.leq(a, b))
    if which is FrameAxiom.HAUSDORFF:
        stars = [pseudocomplement(L, u) for u in E]
        return all(L.join_all(u for u in E if L.leq(u, a) and not L.leq(stars[u], a)) == a
                   for a in E if a != one)
    if which is FrameAxiom.REGULAR:
        return _approximated(L, rather_below_rows(L))
    if which is FrameAxiom.CREGULAR:
        return _approximated(L, completely_below_rows(L))
    if which is FrameAxiom.NORMAL:
        return all(any(L.meet(u, v) == L.bot and L.join(a, v) == one and L.join(b, u) == one
                       for u in E for v in E)
                   for a in E for b in E if L.join(a, b) == one)
    if which is FrameAxiom.SPATIAL:
        pts = points(L)
        return all(any(a in p and b not in p for p in pts)
                   for a in E for b in E if not L.leq(a, b))
    raise ValueError(which)


def frame_profile(L: FiniteLattice) -> dict:
    return {ax.value: frame_axiom(L, ax) for ax in FrameAxiom}


# --------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class FrameHom:
    source: FiniteLattice
    target: FiniteLattice
    map: tuple

    def __call__(self, a: int) -> int:
        return self.map[a]


def validate_frame_hom(source: FiniteLattice, target: FiniteLattice, mapping: Iterable[int]) -> FrameHom:
    h = tuple(mapping)
    if len(h) != source.m or any(not 0 <= x < target.m for x in h):
        raise NotAFrameHom("map is not total source → target", h)
    if h[source.top] != target.top:
        raise NotAFrameHom("top not preserved", source.top)
    if h[source.bot] != target.bot:
        raise NotAFrameHom("bottom not preserved", source.bot)
    for a in range(source.m):
        for b in range(a + 1, source.m):
            if h[source.meet(a, b)] != target.meet(h[a], h[b]):
                raise NotAFrameHom(f"meet of {a}, {b} not preserved", (a, b))
            if h[source.join(a, b)] != target.join(h[a], h[b]):
                raise NotAFrameHom(f"join of {a}, {b} not preserved", (a, b))
    return FrameHom(source, target, h)


def apply_pt(h: FrameHom) -> tuple:
    """pt(h): pt(target) → pt(source), p ↦ h⁻¹[p], as point indices."""
    src_pts = points(h.source)
    tgt_pts = points(h.target)
    index = {p: k for k, p in enumerate(src_pts)}
    out = []
    for p in tgt_pts:
        pre = FramePoint(frozenset(a for a in range(h.source.m) if h(a) in p))
        ensure(pre in index, "preimage of a point is not a point")
        out.append(index[pre])
    z_src, z_tgt = zeta(h.source, src_pts), zeta(h.target, tgt_pts)
    for a in range(h.source.m):
        pre = sum(1 << k for k, j in enumerate(out) if z_src[a] >> j & 1)
        ensure(pre == z_tgt[h(a)], "pt(h) is not continuous")
    return tuple(out)


def is_order_isomorphism(L1: FiniteLattice, L2: FiniteLattice, f: Sequence[int]) -> bool:
    if L1.m != L2.m or sorted(f) != list(range(L2.m)):
        return False
    return all(L1.leq(a, b) == L2.leq(f[a], f[b]) for a in range(L1.m) for b in range(L1.m))


def find_isomorphism(L1: FiniteLattice, L2: FiniteLattice) -> tuple | None:
    """An order isomorphism ``L1 → L2`` as a tuple, or ``None``."""
    if L1.m != L2.m:
        return None
    sig1 = [(popcount(L1.down[a]), popcount(L1.up[a])) for a in range(L1.m)]
    sig2 = [(popcount(L2.down[a]), popcount(L2.up[a])) for a in range(L2.m)]
    if sorted(sig1) != sorted(sig2):
        return None
    order = sorted(range(L1.m), key=lambda a: sig1[a])
    f = [-1] * L1.m
    used = [False] * L2.m

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        a = order[k]
        for b in range(L2.m):
            if used[b] or sig2[b] != sig1[a]:
                continue
            if all(L1.leq(a, x) == L2.leq(b, f[x]) and L1.leq(x, a) == L2.leq(f[x], b)
                   for x in order[:k]):
                f[a], used[b] = b, True
                if extend(k + 1):
                    return True
                f[a], used[b] = -1, False
        return False

    if not extend(0):
        return None
    ensure(is_order_isomorphism(L1, L2, f), "isomorphism search returned a non-isomorphism")
    return tuple(f)


def chain(k: int) -> FiniteFrame:
    return validate_frame(validate_lattice(k, [(i, j) for i in range(k) for j in range(i, k)]))


def boolean_frame(atoms: int) -> FiniteFrame:
    sets = list(range(1 << atoms))
    return validate_frame(lattice_from_sets(sets))
