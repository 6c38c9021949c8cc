"""MacNeille completion, Boolean envelope, and the MT-algebra of a frame.

For a finite distributive lattice ``L`` the MacNeille completion of its
Boolean envelope is the powerset of the join-irreducibles ``J(L)``; ``L``
sits inside as the downsets ``e(a) = {j ∈ J(L) | j ≤ a}``.  That shortcut is
what :func:`boolean_envelope` and :func:`mt_from_frame` use.
:func:`envelope_generic` rebuilds the same object the long way (prime
filters, generated Boolean subalgebra, cut completion, lower extension) so
the two can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

from .core import FinSpace, is_subset, popcount, validate_space
from .errors import NotAPoset, ValidationError, ensure
from .frames import (FiniteFrame, FiniteLattice, is_order_isomorphism,
                     lattice_from_sets, points_bruteforce, validate_frame)
from .relations import transpose


@dataclass(frozen=True)
class FinPoset:
    m: int
    up: tuple

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    @property
    def down(self) -> tuple:
        return tuple(transpose(self.up, self.m))


def validate_poset(m: int, leq: Iterable) -> FinPoset:
    up = [1 << i for i in range(m)]
    for i, j in leq:
        if not (0 <= i < m and 0 <= j < m):
            raise NotAPoset(f"pair ({i}, {j}) outside 0..{m - 1}", (i, j))
        up[i] |= 1 << j
    for i in range(m):
        for j in range(i + 1, m):
            if up[i] >> j & 1 and up[j] >> i & 1:
                raise NotAPoset(f"not antisymmetric at {i}, {j}", (i, j))
    for i in range(m):
        reach = 0
        for j in range(m):
            if up[i] >> j & 1:
                reach |= up[j]
        if reach != up[i]:
            raise NotAPoset(f"not transitive from {i}", i)
    return FinPoset(m, tuple(up))


def poset_of(L: FiniteLattice) -> FinPoset:
    return FinPoset(L.m, L.up)


# --------------------------------------------------------------------------
# MacNeille


def _lower(P: FinPoset, down: Sequence[int], A: int) -> int:
    r = (1 << P.m) - 1
    for i in range(P.m):
        if A >> i & 1:
            r &= down[i]
    return r


def _upper(P: FinPoset, A: int) -> int:
    r = (1 << P.m) - 1
    for i in range(P.m):
        if A >> i & 1:
            r &= P.up[i]
    return r


def cuts_bruteforce(P: FinPoset) -> frozenset:
    """``lower(upper(A))`` for every subset ``A`` of ``P``."""
    down = P.down
    return frozenset(_lower(P, down, _upper(P, A)) for A in range(1 << P.m))


def macneille(P: FinPoset) -> tuple:
    """Return ``(lattice of cuts, embedding x ↦ ↓x)``.

    Cuts are the intersections of principal downsets (the empty intersection
    being all of ``P``).  Lattice ids order cuts by (size, bitmask), so the
    least cut gets id 0.
    """
    down = P.down
    full = (1 << P.m) - 1
    cuts = {full} | set(down)
    frontier = list(cuts)
    while frontier:
        new = []
        for x in frontier:
            for y in list(cuts):
                z = x & y
                if z not in cuts:
                    cuts.add(z)
                    new.append(z)
        frontier = new
    ordered = sorted(cuts, key=lambda c: (popcount(c), c))
    lat = lattice_from_sets(ordered)
    index = {c: k for k, c in enumerate(ordered)}
    embed = tuple(index[down[x]] for x in range(P.m))
    _check_embedding(P, lat, embed)
    return lat, embed


def _check_embedding(P: FinPoset, lat: FiniteLattice, embed: Sequence[int]) -> None:
    down = P.down
    for x in range(P.m):
        for y in range(P.m):
            ensure(P.leq(x, y) == lat.leq(embed[x], embed[y]), "cut embedding is not an order embedding")
            lb = down[x] & down[y]
            g = next((z for z in range(P.m) if lb >> z & 1 and is_subset(lb, down[z])), None)
            if g is not None:
                ensure(embed[g] == lat.meet(embed[x], embed[y]), "existing meet not preserved")
            ub = P.up[x] & P.up[y]
            j = next((z for z in range(P.m) if ub >> z & 1 and is_subset(ub, P.up[z])), None)
            if j is not None:
                ensure(embed[j] == lat.join(embed[x], embed[y]), "existing join not preserved")


# --------------------------------------------------------------------------
# Boolean envelope


@dataclass(frozen=True)
class Envelope:
    L: FiniteLattice
    joins: tuple       # J(L), ascending ids; point k of the carrier is joins[k]
    carrier: FinSpace  # opens are e[L]
    embed: tuple       # e(a) as a bitmask over J(L)

    def box(self, S: int) -> int:
        """Right adjoint of ``e``: e(⋁{b | e(b) ⊆ S})."""
        return self.embed[self.L.join_all(b for b in range(self.L.m) if is_subset(self.embed[b], S))]

    def opens_to_frame(self) -> dict:
        """Inverse of ``e`` on its image."""
        return {e: a for a, e in enumerate(self.embed)}


def boolean_envelope(L: FiniteLattice) -> Envelope:
    if not isinstance(L, FiniteFrame):
        L = validate_frame(L)  # raises NotDistributive
    J = L.join_irreducibles
    embed = tuple(sum(1 << k for k, j in enumerate(J) if L.leq(j, a)) for a in range(L.m))
    carrier = validate_space(len(J), set(embed), check_laws=len(J) <= 8)
    env = Envelope(L, J, carrier, embed)
    full = carrier.full
    ensure(embed[L.bot] == 0 and embed[L.top] == full, "e is not bounded")
    ensure(len(set(embed)) == L.m, "e is not injective")
    for a in range(L.m):
        for b in range(L.m):
            ensure(embed[L.meet(a, b)] == embed[a] & embed[b], "e does not preserve meets")
            ensure(embed[L.join(a, b)] == embed[a] | embed[b], "e does not preserve joins")
    if len(J) <= 10:
        image = set(embed)
        for S in range(full + 1):
            ensure(is_subset(env.box(S), S), "e∘□ is not deflationary")
            ensure((env.box(S) == S) == (S in image), "fixpoints of □ differ from e[L]")
    return env


def lattice_homs_into_powerset(L: FiniteLattice, k: int) -> list:
    """All bounded lattice homomorphisms ``L → P(k)`` by backtracking."""
    full = (1 << k) - 1
    order = sorted(range(L.m), key=lambda a: popcount(L.down[a]))
    found = []
    h = [-1] * L.m

    def consistent(a: int) -> bool:
        # every fully assigned pair in which a is an operand or the result
        for b in range(L.m):
            if h[b] < 0:
                continue
            for c in range(b, L.m):
                if h[c] < 0:
                    continue
                mt, jn = L.meet(b, c), L.join(b, c)
                if a not in (b, c, mt, jn):
                    continue
                if h[mt] >= 0 and h[mt] != h[b] & h[c]:
                    return False
                if h[jn] >= 0 and h[jn] != h[b] | h[c]:
                    return False
        return True

    def go(i: int) -> None:
        if i == len(order):
            found.append(tuple(h))
            return
        a = order[i]
        if a == L.bot and a == L.top:
            choices = [0] if full == 0 else []  # 0 = 1 has no bounded hom into P(k ≥ 1)
        else:
            choices = [0] if a == L.bot else [full] if a == L.top else range(full + 1)
        for v in choices:
            h[a] = v
            if consistent(a):
                go(i + 1)
            h[a] = -1

    go(0)
    return found


def verify_universal_property(env: Envelope, max_k: int = 2) -> int:
    """Check that each bounded hom ``L → P(k)`` factors uniquely through ``e``.

    Boolean homs ``P(J) → P(k)`` are the preimage maps of functions
    ``k → J``; every such map is tried.  Returns the number of homs checked.
    """
    nJ = len(env.joins)
    checked = 0
    for k in range(max_k + 1):
        for h in lattice_homs_into_powerset(env.L, k):
            extensions = 0
            for f in product(range(nJ), repeat=k):
                def g(S: int) -> int:
                    return sum(1 << i for i, j in enumerate(f) if S >> j & 1)
                if all(g(env.embed[a]) == h[a] for a in range(env.L.m)):
                    extensions += 1
            ensure(extensions == 1, f"hom {h} into P({k}) has {extensions} Boolean extensions")
            checked += 1
    return checked


def mt_from_frame(L: FiniteLattice) -> FinSpace:
    """The powerset MT-algebra whose frame of opens is ``L``."""
    from .separation import Axiom, mt_axiom

    env = boolean_envelope(L)
    M = env.carrier
    opens = sorted(M.opens)
    index = {u: k for k, u in enumerate(opens)}
    iso = [index[env.embed[a]] for a in range(env.L.m)]
    ensure(is_order_isomorphism(env.L, lattice_from_sets(opens), iso), "O(result) ≇ L")
    if M.n <= 8:
        ensure(mt_axiom(M, Axiom.T_HALF).holds, "completion of a frame is not T1/2")
    return M


# --------------------------------------------------------------------------
# lower extension


def lower_extension(n: int, subalgebra: Iterable[int], box: Mapping[int, int] | Callable[[int], int]) -> tuple:
    """Extend an interior operator on a Boolean subalgebra of ``P(n)`` to ``P(n)``.

    ``ext[x] = ⋁{box(a) | a in subalgebra, a ≤ x}``.
    """
    full = (1 << n) - 1
    B = sorted(set(subalgebra))
    Bs = set(B)
    if 0 not in Bs or any(full ^ a not in Bs for a in B) or any(a | b not in Bs for a in B for b in B):
        raise ValidationError("not a Boolean subalgebra", None)
    f = box.__getitem__ if isinstance(box, Mapping) else box
    boxed = {a: f(a) for a in B}
    _check_kuratowski(B, boxed, full, "box")
    ext = []
    for x in range(full + 1):
        r = 0
        for a in B:
            if is_subset(a, x):
                r |= boxed[a]
        ext.append(r)
    _check_kuratowski(range(full + 1), dict(enumerate(ext)), full, "lower extension")
    ensure(all(ext[a] == boxed[a] for a in B), "lower extension does not restrict to box")
    return tuple(ext)


def _check_kuratowski(elems: Iterable[int], op: Mapping[int, int], full: int, what: str) -> None:
    elems = list(elems)
    ensure(op[full] == full, f"{what}: □1 != 1")
    for a in elems:
        ensure(is_subset(op[a], a), f"{what}: □a ⊄ a")
        ensure(op[op[a]] == op[a], f"{what}: □□a != □a")
        for b in elems:
            ensure(op[a & b] == op[a] & op[b], f"{what}: □ not meet-preserving")


# --------------------------------------------------------------------------
# generic construction


@dataclass(frozen=True)
class GenericEnvelope:
    prime_filters: tuple   # point k of the ambient powerset
    phi: tuple             # a ↦ {k | a ∈ prime_filters[k]}
    algebra: tuple         # B(L) as bitmasks over prime filters, sorted
    completion: FiniteLattice
    embed: tuple           # B(L) element index ↦ completion id
    interior: tuple        # lower extension on completion ids
    opens: tuple           # completion ids fixed by the interior


def envelope_generic(L: FiniteLattice) -> GenericEnvelope:
    """Boolean envelope via prime filters, then cut completion and lower extension."""
    if not isinstance(L, FiniteFrame):
        L = validate_frame(L)
    pf = points_bruteforce(L)
    n = len(pf)
    full = (1 << n) - 1
    phi = tuple(sum(1 << k for k, p in enumerate(pf) if a in p) for a in range(L.m))
    B = set(phi) | {0}
    while True:
        grown = set(B) | {full ^ x for x in B} | {x | y for x in B for y in B}
        if grown == B:
            break
        B = grown
    algebra = tuple(sorted(B))
    # interior on B(L): right adjoint of phi
    box = {S: phi[L.join_all(a for a in range(L.m) if is_subset(phi[a], S))] for S in algebra}
    P = FinPoset(len(algebra), tuple(
        sum(1 << j for j, y in enumerate(algebra) if is_subset(x, y)) for x in algebra))
    comp, embed = macneille(P)
    # completion elements are cuts of B(L); each is ↓x for a unique x here
    inv = {c: i for i, c in enumerate(embed)}
    ensure(len(inv) == comp.m, "completion of a finite Boolean algebra added elements")
    interior = []
    for c in range(comp.m):
        x = algebra[inv[c]]
        r = 0
        for a in algebra:
            if is_subset(a, x):
                r |= box[a]
        interior.append(embed[algebra.index(r)])
    opens = tuple(c for c in range(comp.m) if interior[c] == c)
    return GenericEnvelope(pf, phi, algebra, comp, embed, tuple(interior), opens)


def generic_matches_shortcut(L: FiniteLattice) -> tuple:
    """Isomorphism certificate between the two envelope constructions.

    Returns ``(point bijection J(L) → prime filters, frame iso L → opens of
    the generic completion)``; raises if they disagree.
    """
    env = boolean_envelope(L)
    gen = envelope_generic(L)
    ensure(len(gen.prime_filters) == len(env.joins), "prime filters ≠ join-irreducibles in number")
    # a join-irreducible j corresponds to the prime filter ↑j
    bij = []
    for j in env.joins:
        f = frozenset(a for a in range(env.L.m) if env.L.leq(j, a))
        k = next((k for k, p in enumerate(gen.prime_filters) if p.filter == f), None)
        ensure(k is not None, f"↑{j} is not a prime filter")
        bij.append(k)
    def move(S: int) -> int:
        return sum(1 << bij[i] for i in range(len(bij)) if S >> i & 1)
    ensure(len(gen.algebra) == 1 << len(bij), "B(L) is not the full powerset")
    for a in range(env.L.m):
        ensure(move(env.embed[a]) == gen.phi[a], "embeddings disagree")
    frame_iso = []
    for a in range(env.L.m):
        c = gen.embed[gen.algebra.index(gen.phi[a])]
        ensure(c in gen.opens, "image of L is not open in the completion")
        frame_iso.append(c)
    ensure(sorted(frame_iso) == sorted(gen.opens), "opens of the completion ≠ image of L")
    return tuple(bij), tuple(frame_iso)
