"""Finite powerset MT-algebras.

A finite topological space ``X`` on points ``0..n-1`` is stored as its family
of open sets.  The same object doubles as the MT-algebra ``(P(X), int)``: the
carrier is every subset of the points, encoded as an ``int`` bitmask (bit ``i``
set iff point ``i`` belongs to the subset), and the interior operator is the
topological interior.

Specialization convention, used everywhere in the package::

    x ⊑ y  iff  x ∈ closure({y})
    min_open(x) = ⋂ {U open | x ∈ U} = {y | x ⊑ y}
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .errors import NotATopology, NotClosed, NotContinuous, NotOpen, ensure

MAX_POINTS = 24

# Full interior tables are built lazily up to this many points.
TABLE_POINTS = 10

ElementSet = int


def points_of(mask: ElementSet) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(points: Iterable[int]) -> ElementSet:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class FinSpace:
    """A validated finite topology.  Build with :func:`validate_space`."""

    n: int
    opens: frozenset

    @cached_property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def open_list(self) -> tuple:
        return tuple(sorted(self.opens))

    @cached_property
    def closeds(self) -> frozenset:
        return frozenset(self.full ^ u for u in self.opens)

    @cached_property
    def closed_list(self) -> tuple:
        return tuple(sorted(self.closeds))

    @cached_property
    def min_open(self) -> tuple:
        out = []
        for i in range(self.n):
            m = self.full
            for u in self.opens:
                if u >> i & 1:
                    m &= u
            out.append(m)
        return tuple(out)

    @cached_property
    def atoms(self) -> tuple:
        return tuple(1 << i for i in range(self.n))

    def carrier(self) -> range:
        return range(1 << self.n)

    @cached_property
    def interior_table(self) -> tuple:
        """``table[a]`` = union of every open contained in ``a``."""
        table = []
        opens = self.open_list
        for a in range(1 << self.n):
            r = 0
            for u in opens:
                if u & ~a == 0:
                    r |= u
            table.append(r)
        return tuple(table)

    def __repr__(self) -> str:
        body = ", ".join(sorted(_fmt(u) for u in self.opens))
        return f"FinSpace(n={self.n}, opens=[{body}])"


def _fmt(mask: int) -> str:
    return "{" + ",".join(map(str, points_of(mask))) + "}"


def _as_mask(item, n: int) -> int:
    if isinstance(item, int):
        if item < 0 or item >> n:
            raise NotATopology(f"open {item:#x} is not a subset of {n} points", item)
        return item
    pts = list(item)
    for p in pts:
        if not isinstance(p, int) or not 0 <= p < n:
            raise NotATopology(f"point {p!r} outside 0..{n - 1}", p)
    return mask_of(pts)


def validate_space(n: int, opens: Iterable, check_laws: bool = True) -> FinSpace:
    """Check that ``opens`` is a topology on ``n`` points and return it.

    Each open may be given as a bitmask or as an iterable of point indices.
    """
    if not 0 <= n <= MAX_POINTS:
        raise NotATopology(f"point count {n} outside 0..{MAX_POINTS}", n)
    family = frozenset(_as_mask(u, n) for u in opens)
    full = (1 << n) - 1
    if 0 not in family:
        raise NotATopology("empty set missing", (0, 0))
    if full not in family:
        raise NotATopology("full set missing", (full, full))
    ordered = sorted(family)
    for i, u in enumerate(ordered):
        for v in ordered[i + 1:]:
            if u | v not in family:
                raise NotATopology(f"union of {_fmt(u)} and {_fmt(v)} is not open", (u, v))
            if u & v not in family:
                raise NotATopology(f"intersection of {_fmt(u)} and {_fmt(v)} is not open", (u, v))
    space = FinSpace(n, family)
    if check_laws:
        _assert_kuratowski(space)
    return space


def _assert_kuratowski(M: FinSpace) -> None:
    # Unary laws for n <= 12, binary law for n <= 6; above that the
    # topology check itself already guarantees the laws.
    if M.n > 12:
        return
    full = M.full
    ensure(interior(M, full) == full, "□1 != 1")
    for a in M.carrier():
        ia = interior(M, a)
        ensure(ia & ~a == 0, f"□a ⊄ a for a={a:#x}")
        ensure(interior(M, ia) == ia, f"□□a != □a for a={a:#x}")
    if M.n <= 6:
        for a in M.carrier():
            ia = interior(M, a)
            for b in range(a, 1 << M.n):
                ensure(interior(M, a & b) == ia & interior(M, b), f"□ not meet-preserving at {a:#x},{b:#x}")


# --------------------------------------------------------------------------
# interior / closure


def interior_by_table(M: FinSpace, a: ElementSet) -> ElementSet:
    return M.interior_table[a]


def interior_by_preorder(M: FinSpace, a: ElementSet) -> ElementSet:
    r = 0
    for i, mo in enumerate(M.min_open):
        if mo & ~a == 0:
            r |= 1 << i
    return r


def interior(M: FinSpace, a: ElementSet) -> ElementSet:
    """Largest open element below ``a``."""
    if M.n <= TABLE_POINTS:
        return M.interior_table[a]
    return interior_by_preorder(M, a)


def closure(M: FinSpace, a: ElementSet) -> ElementSet:
    """Least closed element above ``a``; computed as ¬□¬a."""
    return M.full ^ interior(M, M.full ^ a)


def closure_direct(M: FinSpace, a: ElementSet) -> ElementSet:
    r = M.full
    for c in M.closeds:
        if a & ~c == 0:
            r &= c
    return r


def is_open(M: FinSpace, a: ElementSet) -> bool:
    return a in M.opens


def is_closed(M: FinSpace, a: ElementSet) -> bool:
    return a in M.closeds


# --------------------------------------------------------------------------
# element families


class Kind(str, Enum):
    OPEN = "OPEN"
    CLOSED = "CLOSED"
    SATURATED = "SATURATED"
    COSATURATED = "COSATURATED"
    LC = "LC"
    LO = "LO"
    WLC = "WLC"
    WLO = "WLO"
    GO = "GO"
    GC = "GC"
    RO = "RO"
    RC = "RC"


@dataclass(frozen=True)
class ElementFamily:
    kind: Kind
    members: tuple  # ascending by bitmask value

    def __contains__(self, a: int) -> bool:
        return a in self.as_set

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def as_set(self) -> frozenset:
        return frozenset(self.members)


def _close_under(seed: Iterable[int], op) -> set:
    out = set(seed)
    frontier = list(out)
    while frontier:
        new = []
        for x in frontier:
            for y in list(out):
                z = op(x, y)
                if z not in out:
                    out.add(z)
                    new.append(z)
        frontier = new
    return out


def _go_members(M: FinSpace) -> set:
    # a ∈ GO iff a = ⋁{□◇b | ◇b ≤ a}
    pairs = [(closure(M, b), interior(M, closure(M, b))) for b in M.carrier()]
    out = set()
    for a in M.carrier():
        j = 0
        for cb, icb in pairs:
            if cb & ~a == 0:
                j |= icb
        if j == a:
            out.add(a)
    return out


def _gc_members(M: FinSpace) -> set:
    # a ∈ GC iff a = ⋀{◇□c | a ≤ □c}
    pairs = [(interior(M, c), closure(M, interior(M, c))) for c in M.carrier()]
    out = set()
    for a in M.carrier():
        m = M.full
        for ic, cic in pairs:
            if a & ~ic == 0:
                m &= cic
        if m == a:
            out.add(a)
    return out


@lru_cache(maxsize=1 << 16)
def _family(M: FinSpace, kind: Kind) -> frozenset:
    full = M.full
    if kind is Kind.OPEN:
        return M.opens
    if kind is Kind.CLOSED:
        return M.closeds
    if kind is Kind.SATURATED:
        # meets of arbitrary sets of opens; the empty meet is 1
        return frozenset(_close_under(set(M.opens) | {full}, lambda x, y: x & y))
    if kind is Kind.COSATURATED:
        return frozenset(_close_under(set(M.closeds) | {0}, lambda x, y: x | y))
    if kind is Kind.LC:
        return frozenset(u & c for u in M.opens for c in M.closeds)
    if kind is Kind.LO:
        return frozenset(u | c for u in M.opens for c in M.closeds)
    if kind is Kind.WLC:
        return frozenset(s & c for s in _family(M, Kind.SATURATED) for c in M.closeds)
    if kind is Kind.WLO:
        return frozenset(s | u for s in _family(M, Kind.COSATURATED) for u in M.opens)
    if kind is Kind.RO:
        return frozenset(b for b in M.opens if interior(M, closure(M, b)) == b)
    if kind is Kind.RC:
        return frozenset(c for c in M.closeds if closure(M, interior(M, c)) == c)
    if kind is Kind.GO:
        return frozenset(_go_members(M))
    if kind is Kind.GC:
        return frozenset(_gc_members(M))
    raise ValueError(kind)


def family(M: FinSpace, kind: Kind | str) -> ElementFamily:
    kind = Kind(kind)
    return ElementFamily(kind, tuple(sorted(_family(M, kind))))


# --------------------------------------------------------------------------
# generation


def join_generation_witness(S: Iterable[int], M: FinSpace) -> int | None:
    """Least element that is not a join of members of ``S`` below it."""
    S = tuple(set(S))
    for a in M.carrier():
        j = 0
        for s in S:
            if s & ~a == 0:
                j |= s
        if j != a:
            return a
    return None


def meet_generation_witness(S: Iterable[int], M: FinSpace) -> int | None:
    S = tuple(set(S))
    full = M.full
    for a in M.carrier():
        m = full
        for s in S:
            if a & ~s == 0:
                m &= s
        if m != a:
            return a
    return None


def join_generates(S: Iterable[int], M: FinSpace) -> bool:
    return join_generation_witness(S, M) is None


def meet_generates(S: Iterable[int], M: FinSpace) -> bool:
    return meet_generation_witness(S, M) is None


def generated_complete_boolean(S: Iterable[int], M: FinSpace) -> frozenset:
    """Closure of ``S`` under complement and arbitrary join."""
    full = M.full
    out = set(S) | {0}
    while True:
        grown = set(out)
        grown.update(full ^ x for x in out)
        grown = _close_under(grown, lambda x, y: x | y)
        if grown == out:
            return frozenset(out)
        out = grown


def generated_complete_lattice(S: Iterable[int], M: FinSpace) -> frozenset:
    """Closure of ``S`` under arbitrary join and arbitrary meet."""
    out = set(S) | {0, M.full}
    while True:
        grown = _close_under(out, lambda x, y: x | y)
        grown = _close_under(grown, lambda x, y: x & y)
        if grown == out:
            return frozenset(out)
        out = grown


# --------------------------------------------------------------------------
# Heyting / co-Heyting structure


def heyting_impl(M: FinSpace, a: ElementSet, b: ElementSet) -> ElementSet:
    """a → b = □(¬a ∨ b) on open elements."""
    for x in (a, b):
        if x not in M.opens:
            raise NotOpen(f"{_fmt(x)} is not open", x)
    return interior(M, (M.full ^ a) | b)


def coheyting_diff(M: FinSpace, a: ElementSet, b: ElementSet) -> ElementSet:
    """a ← b = ◇(b ∧ ¬a) on closed elements."""
    for x in (a, b):
        if x not in M.closeds:
            raise NotClosed(f"{_fmt(x)} is not closed", x)
    return closure(M, b & ~a)


# --------------------------------------------------------------------------
# MT-morphisms


@dataclass(frozen=True)
class MTMorphism:
    """The complete Boolean homomorphism ``h = pointmap⁻¹ : P(source) → P(target)``.

    ``pointmap[i]`` is the source point hit by target point ``i``.
    """

    source: FinSpace
    target: FinSpace
    pointmap: tuple

    def __call__(self, a: ElementSet) -> ElementSet:
        r = 0
        for i, j in enumerate(self.pointmap):
            if a >> j & 1:
                r |= 1 << i
        return r


def check_mt_morphism(source: FinSpace, target: FinSpace, pointmap: Iterable[int]) -> MTMorphism:
    g = tuple(pointmap)
    if len(g) != target.n or any(not 0 <= j < source.n for j in g):
        raise NotContinuous("point map is not a total function target → source", g)
    h = MTMorphism(source, target, g)
    for u in source.open_list:
        if h(u) not in target.opens:
            raise NotContinuous(f"preimage of open {_fmt(u)} is not open", u)
    if source.n <= TABLE_POINTS:
        for a in source.carrier():
            ensure(h(interior(source, a)) & ~interior(target, h(a)) == 0,
                   f"h(□a) ⊄ □h(a) at a={a:#x}")
    return h
