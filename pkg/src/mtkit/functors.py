"""The functors P, Ω, O, at, pt and their unit maps at finite scale.

``FinSpace`` represents both a space and its powerset algebra, so ``P`` is the
identity on representations.  The views below keep the two roles apart:
``at`` and ``O`` read an :class:`AlgebraView` through algebraic definitions
(atoms, fixpoints of the interior), while ``Ω`` and the classical sober test
read a :class:`SpaceView` through open sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from .core import (FinSpace, MTMorphism, check_mt_morphism, interior, is_subset,
                   popcount, validate_space)
from .errors import ensure
from .frames import (FiniteFrame, FrameHom, lattice_from_sets, points, pt_space,
                     validate_frame, validate_frame_hom)
from .oracles import classical_sober, classical_t0
from .separation import Axiom, mt_axiom


@dataclass(frozen=True)
class SpaceView:
    space: FinSpace


@dataclass(frozen=True)
class AlgebraView:
    space: FinSpace

    def atoms(self) -> tuple:
        """Nonzero elements with nothing strictly between them and 0."""
        return tuple(a for a in range(1, self.space.full + 1) if a & (a - 1) == 0)

    def opens(self) -> tuple:
        return tuple(a for a in range(self.space.full + 1) if interior(self.space, a) == a)


def _as_space(X) -> FinSpace:
    return X.space if isinstance(X, (SpaceView, AlgebraView)) else X


def functor_P(X) -> AlgebraView:
    return AlgebraView(_as_space(X))


def functor_P_hom(X, Y, f) -> MTMorphism:
    """P(f) = f⁻¹ : P(Y) → P(X) for a continuous ``f: X → Y``."""
    return check_mt_morphism(_as_space(Y), _as_space(X), f)


def omega(X) -> FiniteFrame:
    """Frame of open sets of a space."""
    X = _as_space(X)
    return validate_frame(lattice_from_sets(sorted(X.opens)))


def functor_O(M) -> FiniteFrame:
    """Frame of open elements (fixpoints of □), ids ascending by bitmask."""
    return validate_frame(lattice_from_sets(AlgebraView(_as_space(M)).opens()))


def functor_O_hom(h: MTMorphism) -> FrameHom:
    src, tgt = functor_O(h.source), functor_O(h.target)
    index = {u: k for k, u in enumerate(tgt.labels)}
    mapping = []
    for u in src.labels:
        hu = h(u)
        ensure(interior(h.target, hu) == h(interior(h.source, u)), "h(□a) ≠ □h(a) on an open a")
        ensure(hu in index, "image of an open element is not open")
        mapping.append(index[hu])
    return validate_frame_hom(src, tgt, mapping)


def eta(M) -> tuple:
    """η(a) = {k | atom_k ≤ a}, as a bitmask over the atom list."""
    A = AlgebraView(_as_space(M))
    atoms = A.atoms()
    return tuple(sum(1 << k for k, x in enumerate(atoms) if is_subset(x, a))
                 for a in range(A.space.full + 1))


def functor_at(M) -> SpaceView:
    """(at(M), η[O(M)])."""
    A = AlgebraView(_as_space(M))
    e = eta(A)
    return SpaceView(validate_space(len(A.atoms()), {e[u] for u in A.opens()}))


def epsilon(X) -> tuple:
    """ε(x) = index of the atom {x} in at(P(X))."""
    X = _as_space(X)
    atoms = AlgebraView(X).atoms()
    return tuple(atoms.index(1 << x) for x in range(X.n))


def left_adjoint(h: MTMorphism, x: int) -> int:
    """h*(x) = ⋀{a | x ≤ h(a)}."""
    r = h.source.full
    for a in range(h.source.full + 1):
        if is_subset(x, h(a)):
            r &= a
    return r


def functor_at_hom(h: MTMorphism) -> tuple:
    """at(h): at(target) → at(source) via the left adjoint on atoms."""
    src_atoms = AlgebraView(h.source).atoms()
    tgt_atoms = AlgebraView(h.target).atoms()
    out = []
    for x in tgt_atoms:
        y = left_adjoint(h, x)
        ensure(y in src_atoms, "left adjoint does not send atoms to atoms")
        out.append(src_atoms.index(y))
    at_src, at_tgt = functor_at(h.source).space, functor_at(h.target).space
    check_mt_morphism(at_src, at_tgt, out)  # continuity
    return tuple(out)


def vartheta(M) -> tuple:
    """ϑ(x) = ↑x ∩ O(M), as the index of that point of O(M)."""
    M = _as_space(M)
    L = functor_O(M)
    pts = points(L)
    index = {p.filter: k for k, p in enumerate(pts)}
    out = []
    for x in AlgebraView(M).atoms():
        f = frozenset(k for k, u in enumerate(L.labels) if is_subset(x, u))
        ensure(f in index, "↑x ∩ O(M) is not a completely prime filter")
        out.append(index[f])
    return tuple(out)


def delta(X) -> tuple:
    """δ(x) = {U ∈ Ω(X) | x ∈ U}, as a point index of Ω(X)."""
    X = _as_space(X)
    L = omega(X)
    index = {p.filter: k for k, p in enumerate(points(L))}
    out = []
    for x in range(X.n):
        f = frozenset(k for k, u in enumerate(L.labels) if u >> x & 1)
        ensure(f in index, "neighbourhood filter is not a point")
        out.append(index[f])
    return tuple(out)


def is_homeomorphism(X: FinSpace, Y: FinSpace, f) -> bool:
    """Bijection ``X → Y`` with open images and open preimages."""
    if len(f) != X.n or sorted(f) != list(range(Y.n)):
        return False
    def image(U: int) -> int:
        return sum(1 << f[x] for x in range(X.n) if U >> x & 1)
    return {image(U) for U in X.opens} == set(Y.opens)


def find_homeomorphism(X: FinSpace, Y: FinSpace) -> tuple | None:
    if X.n != Y.n or len(X.opens) != len(Y.opens):
        return None
    sx = [popcount(m) for m in X.min_open]
    sy = [popcount(m) for m in Y.min_open]
    if sorted(sx) != sorted(sy):
        return None
    f = [-1] * X.n
    used = [False] * Y.n

    def go(x: int) -> bool:
        if x == X.n:
            return is_homeomorphism(X, Y, f)
        for y in range(Y.n):
            if used[y] or sx[x] != sy[y]:
                continue
            # specialization order must be preserved both ways
            if any((X.min_open[x] >> z & 1) != (Y.min_open[y] >> f[z] & 1)
                   or (X.min_open[z] >> x & 1) != (Y.min_open[f[z]] >> y & 1) for z in range(x)):
                continue
            f[x], used[y] = y, True
            if go(x + 1):
                return True
            f[x], used[y] = -1, False
        return False

    return tuple(f) if go(0) else None


@dataclass(frozen=True)
class VarthetaAnalysis:
    injective: bool
    surjective: bool
    homeomorphism: bool
    witness: object
    # re-derived from the axiom checkers
    at_t0: bool
    weakly_sober: bool
    sober: bool


def vartheta_analysis(M) -> VarthetaAnalysis:
    M = _as_space(M)
    th = vartheta(M)
    X = functor_at(M).space
    Ppt, _ = pt_space(functor_O(M))
    injective = len(set(th)) == len(th)
    surjective = set(th) == set(range(Ppt.n))
    homeo = injective and surjective and is_homeomorphism(X, Ppt, th)
    witness = None
    if not injective:
        seen = {}
        for x, p in enumerate(th):
            if p in seen:
                witness = ("collide", seen[p], x)
                break
            seen[p] = x
    elif not surjective:
        witness = ("missed", min(set(range(Ppt.n)) - set(th)))
    at_t0 = classical_t0(X)
    ws = mt_axiom(M, Axiom.WSOBER).holds
    sober = mt_axiom(M, Axiom.SOBER).holds
    ensure(injective == at_t0, "ϑ injectivity disagrees with T0 of at(M)")
    ensure(surjective == ws, "ϑ surjectivity disagrees with weak sobriety")
    ensure(homeo == (ws and at_t0), "ϑ homeomorphism disagrees with weak sobriety + T0")
    if sober:
        ensure(homeo, "sober algebra with ϑ not a homeomorphism")
    return VarthetaAnalysis(injective, surjective, homeo, witness, at_t0, ws, sober)


def soberify(X) -> FinSpace:
    """pt(Ω(X))."""
    S, _ = pt_space(omega(X))
    ensure(classical_sober(S), "soberification is not sober")
    return S


def spatialize(L) -> tuple:
    """Ω(pt(L)) with the ζ isomorphism L → Ω(pt(L)) as a certificate."""
    S, z = pt_space(L)
    out = omega(S)
    index = {u: k for k, u in enumerate(out.labels)}
    iso = tuple(index[z[a]] for a in range(L.m))
    ensure(len(set(iso)) == L.m == out.m, "ζ is not a bijection")
    ensure(all(L.leq(a, b) == out.leq(iso[a], iso[b]) for a in range(L.m) for b in range(L.m)),
           "ζ is not an order isomorphism")
    return out, iso


def o_not_faithful_witness() -> tuple:
    """Identity and atom swap on the two-point trivial algebra."""
    triv = validate_space(2, [0, 3])
    ident = check_mt_morphism(triv, triv, (0, 1))
    swap = check_mt_morphism(triv, triv, (1, 0))
    ensure(any(ident(a) != swap(a) for a in triv.carrier()), "morphisms coincide")
    ensure(functor_O_hom(ident) == functor_O_hom(swap), "O-restrictions differ")
    return ident, swap


def all_pointmaps(X: FinSpace, Y: FinSpace):
    """Every function X → Y as a tuple (small spaces only)."""
    from itertools import product
    return product(range(Y.n), repeat=X.n)


def continuous_maps(X: FinSpace, Y: FinSpace) -> list:
    out = []
    for f in all_pointmaps(X, Y):
        if all(sum(1 << x for x in range(X.n) if V >> f[x] & 1) in X.opens for V in Y.opens):
            out.append(f)
    return out


__all__ = [
    "SpaceView", "AlgebraView", "functor_P", "functor_P_hom", "omega", "functor_O",
    "functor_O_hom", "eta", "functor_at", "epsilon", "left_adjoint", "functor_at_hom",
    "vartheta", "delta", "is_homeomorphism", "find_homeomorphism", "VarthetaAnalysis",
    "vartheta_analysis", "soberify", "spatialize", "o_not_faithful_witness",
    "continuous_maps",
]
