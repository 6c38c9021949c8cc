from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import spaces
from mtkit.errors import NotAFrameHom, NotALattice, NotDistributive
from mtkit.frames import (FrameAxiom, FramePoint, apply_pt, boolean_frame, build_lattice, chain,
                          completely_below, completely_below_rows, distributivity_witness,
                          find_isomorphism, frame_axiom, frame_profile, heyting_impl,
                          lattice_from_sets, points, points_bruteforce, pseudocomplement,
                          pt_space, rather_below, rather_below_rows, validate_frame,
                          validate_frame_hom, validate_lattice, zeta)
from mtkit.functors import find_homeomorphism, functor_O, spatialize
from mtkit.oracles import chain_relation
from mtkit.theorems import chain_depth

from conftest import sierp


def m3():
    pairs = [(i, i) for i in range(5)] + [(0, i) for i in range(1, 5)] + [(i, 4) for i in range(1, 4)]
    return validate_lattice(5, pairs)


def n5():
    # 0 < a < b < 1 and 0 < c < 1
    rel = {(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (1, 4), (2, 4)}
    return validate_lattice(5, [(i, i) for i in range(5)] + sorted(rel))


class TestValidation:
    def test_boolean_diamond_is_frame(self, BOOL4):
        assert BOOL4.m == 4 and frame_profile(BOOL4)["REGULAR"]

    def test_m3_not_distributive(self):
        with pytest.raises(NotDistributive) as exc:
            validate_frame(m3())
        assert exc.value.witness is not None

    def test_n5_not_distributive(self):
        assert distributivity_witness(n5()) is not None

    def test_chain(self, CHAINFRM3):
        assert CHAINFRM3.bot == 0 and CHAINFRM3.top == 2 and CHAINFRM3.meet(1, 2) == 1

    def test_two_maximal_elements(self):
        with pytest.raises(NotALattice):
            validate_lattice(3, [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2)])

    def test_not_antisymmetric(self):
        with pytest.raises(NotALattice):
            build_lattice(2, [0b11, 0b11])

    def test_not_transitive(self):
        with pytest.raises(NotALattice):
            validate_lattice(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])

    def test_missing_meet(self):
        # a, b below both c and d: no join for a, b
        pairs = [(i, i) for i in range(6)] + [(0, i) for i in range(1, 6)]
        pairs += [(1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5), (1, 5), (2, 5)]
        with pytest.raises(NotALattice):
            validate_lattice(6, pairs)

    def test_one_element_frame(self):
        L = validate_frame(build_lattice(1, [1]))
        assert L.bot == L.top == 0
        assert points(L) == ()
        S, _ = pt_space(L)
        assert S.n == 0


class TestPoints:
    def test_chain3(self, CHAINFRM3):
        pts = points(CHAINFRM3)
        assert len(pts) == 2
        assert set(pts) == set(points_bruteforce(CHAINFRM3))

    def test_two_element(self):
        assert len(points(chain(2))) == 1

    def test_boolean4(self, BOOL4):
        pts = set(points(BOOL4))
        assert pts == {FramePoint(frozenset({1, 3})), FramePoint(frozenset({2, 3}))}

    def test_pt_space_chain3_is_sierpinski(self, CHAINFRM3):
        S, _ = pt_space(CHAINFRM3)
        assert S.n == 2 and len(S.opens) == 3
        assert find_homeomorphism(S, sierp()) is not None

    def test_pt_space_boolean4_is_discrete(self, BOOL4):
        S, _ = pt_space(BOOL4)
        assert S.opens == {0, 1, 2, 3}

    @settings(max_examples=80, deadline=None)
    @given(spaces(5))
    def test_meet_irreducibles_match_filters(self, M):
        L = functor_O(M)
        if L.m <= 12:
            assert set(points(L, check=True)) == set(points_bruteforce(L))

    @settings(max_examples=60, deadline=None)
    @given(spaces(5))
    def test_zeta_is_iso(self, M):
        L = functor_O(M)
        out, iso = spatialize(L)
        z = zeta(L)
        assert len(set(z)) == L.m
        for a in range(L.m):
            for b in range(L.m):
                assert z[L.meet(a, b)] == z[a] & z[b]
                assert z[L.join(a, b)] == z[a] | z[b]
        assert find_isomorphism(L, out) is not None


class TestDerived:
    def test_pseudocomplements(self, CHAINFRM3, BOOL4):
        assert pseudocomplement(CHAINFRM3, 1) == 0
        assert pseudocomplement(CHAINFRM3, 0) == 2
        assert pseudocomplement(BOOL4, 1) == 2 and pseudocomplement(BOOL4, 2) == 1

    def test_rather_below(self, CHAINFRM3, BOOL4):
        assert rather_below(BOOL4, 1, 1)
        assert rather_below(CHAINFRM3, 1, 2)
        assert not rather_below(CHAINFRM3, 1, 1)

    @settings(max_examples=60, deadline=None)
    @given(spaces(5))
    def test_completely_below_bounds(self, M):
        L = functor_O(M)
        for a in range(L.m):
            assert completely_below(L, L.bot, a) and completely_below(L, a, L.top)

    @settings(max_examples=60, deadline=None)
    @given(spaces(5))
    def test_heyting_residuation(self, M):
        L = functor_O(M)
        for a in range(L.m):
            for b in range(L.m):
                r = heyting_impl(L, a, b)
                for c in range(L.m):
                    assert L.leq(L.meet(c, a), b) == L.leq(c, r)

    @settings(max_examples=80, deadline=None)
    @given(spaces(5))
    def test_completely_below_matches_chain_search(self, M):
        L = functor_O(M)
        got = chain_relation(L.m, rather_below_rows(L), L.up, L.down, chain_depth(L.m))
        assert got == completely_below_rows(L)


class TestFrameAxioms:
    def test_chain3_not_subfit(self, CHAINFRM3):
        assert not frame_axiom(CHAINFRM3, FrameAxiom.SUBFIT)

    def test_boolean_frames(self):
        for k in range(4):
            prof = frame_profile(boolean_frame(k))
            assert prof["SUBFIT"] and prof["REGULAR"] and prof["NORMAL"]

    def test_two_element_frame_is_fit(self, TRIV2):
        # the trivial two-point algebra: O fit, M not T1
        from mtkit.separation import Axiom, mt_axiom
        L = functor_O(TRIV2)
        assert L.m == 2 and frame_axiom(L, "FIT") and frame_axiom(L, "SUBFIT")
        assert not mt_axiom(TRIV2, Axiom.T1)

    def test_chain3_not_fit(self, CHAINFRM3):
        assert not frame_axiom(CHAINFRM3, "FIT")

    @settings(max_examples=80, deadline=None)
    @given(spaces(5))
    def test_inclusions(self, M):
        p = frame_profile(functor_O(M))
        assert p["SPATIAL"]
        assert not p["REGULAR"] or p["HAUSDORFF"]
        assert not p["CREGULAR"] or p["REGULAR"]
        assert not (p["NORMAL"] and p["SUBFIT"]) or p["CREGULAR"]
        assert not p["FIT"] or p["SUBFIT"]


class TestHoms:
    def test_identity(self, CHAINFRM3):
        h = validate_frame_hom(CHAINFRM3, CHAINFRM3, range(3))
        assert apply_pt(h) == (0, 1)

    def test_boolean4_to_two(self, BOOL4):
        two = chain(2)
        homs = []
        for img in [(0, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1), (0, 1, 1, 1)]:
            try:
                homs.append(validate_frame_hom(BOOL4, two, img))
            except NotAFrameHom:
                pass
        assert [h.map for h in homs] == [(0, 1, 0, 1), (0, 0, 1, 1)]
        # each sends the single point of the two-element frame to an atom's filter
        images = {points(BOOL4)[apply_pt(h)[0]] for h in homs}
        assert images == set(points(BOOL4))

    def test_chain3_into_boolean4(self, CHAINFRM3, BOOL4):
        h = validate_frame_hom(CHAINFRM3, BOOL4, (0, 1, 3))
        assert apply_pt(h) == (1, 0)

    def test_not_a_hom(self, CHAINFRM3, BOOL4):
        with pytest.raises(NotAFrameHom):
            validate_frame_hom(CHAINFRM3, BOOL4, (0, 1, 2))

    def test_find_isomorphism(self, BOOL4):
        other = lattice_from_sets([0, 2, 1, 3])
        f = find_isomorphism(BOOL4, other)
        assert f is not None and f[0] == 0 and f[3] == 3
        assert find_isomorphism(BOOL4, chain(4)) is None
