from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import disc2, sierp, spaces, triv2
from mtkit.core import (Kind, check_mt_morphism, closure, closure_direct, coheyting_diff, family,
                        generated_complete_boolean, generated_complete_lattice, heyting_impl,
                        interior, interior_by_preorder, interior_by_table, join_generates,
                        join_generation_witness, mask_of, meet_generates, points_of,
                        validate_space)
from mtkit.errors import NotATopology, NotClosed, NotContinuous, NotOpen


def test_masks_roundtrip():
    assert mask_of([0, 2, 3]) == 0b1101
    assert list(points_of(0b1101)) == [0, 2, 3]


class TestValidateSpace:
    def test_sierpinski(self, SIERP):
        assert SIERP.n == 2 and SIERP.opens == {0, 0b10, 0b11}

    def test_discrete(self, DISC2):
        assert len(DISC2.opens) == 4

    def test_full_set_missing(self):
        with pytest.raises(NotATopology):
            validate_space(2, [0, 0b01])

    def test_empty_set_missing(self):
        with pytest.raises(NotATopology):
            validate_space(2, [0b01, 0b11])

    def test_union_escapes(self):
        with pytest.raises(NotATopology) as exc:
            validate_space(3, [0, 0b001, 0b010, 0b111])
        assert exc.value.witness is not None

    def test_point_lists_accepted(self):
        assert validate_space(2, [[], [1], [0, 1]]) == sierp()

    def test_empty_space(self):
        M = validate_space(0, [0])
        assert M.full == 0 and interior(M, 0) == 0


class TestInteriorClosure:
    def test_sierp_interior(self, SIERP):
        assert interior(SIERP, 0b01) == 0
        assert interior(SIERP, 0b10) == 0b10

    def test_discrete_interior_is_identity(self, DISC2):
        assert all(interior(DISC2, a) == a for a in range(4))

    def test_sierp_closure(self, SIERP):
        assert closure(SIERP, 0b10) == 0b11
        assert closure(SIERP, 0b01) == 0b01

    def test_closure_of_empty(self, SIERP, TRIV2):
        assert closure(SIERP, 0) == 0 and closure(TRIV2, 0) == 0

    @settings(max_examples=150, deadline=None)
    @given(spaces(6))
    def test_kuratowski_and_both_paths(self, M):
        full = M.full
        assert interior(M, full) == full
        for a in M.carrier():
            i = interior(M, a)
            assert interior_by_table(M, a) == interior_by_preorder(M, a) == i
            assert i & ~a == 0 and interior(M, i) == i
            assert closure(M, a) == closure_direct(M, a)
            for b in M.carrier():
                assert interior(M, a & b) == i & interior(M, b)

    @settings(max_examples=60, deadline=None)
    @given(spaces(6))
    def test_opens_and_closeds_closed_under_lattice_ops(self, M):
        for u in M.opens:
            for v in M.opens:
                assert u | v in M.opens and u & v in M.opens
        assert M.closeds == {M.full ^ u for u in M.opens}


def _brute_lc(M):
    return {u & c for u in M.opens for c in M.closeds}


def _brute_meets_of_opens(M):
    # all meets of nonempty subfamilies, plus the empty meet
    opens = sorted(M.opens)
    out = {M.full}
    for pick in range(1, 1 << len(opens)):
        r = M.full
        for k, u in enumerate(opens):
            if pick >> k & 1:
                r &= u
        out.add(r)
    return out


class TestFamilies:
    def test_sierp_lc(self, SIERP):
        assert family(SIERP, Kind.LC).as_set == {0, 1, 2, 3} == _brute_lc(SIERP)

    def test_sierp_saturated(self, SIERP):
        fam = family(SIERP, Kind.SATURATED)
        assert fam.as_set == {0, 0b10, 0b11} == _brute_meets_of_opens(SIERP)

    def test_disc2_gc(self, DISC2):
        assert family(DISC2, "GC").as_set == {0, 1, 2, 3}

    def test_members_sorted(self, SIERP):
        fam = family(SIERP, Kind.OPEN)
        assert list(fam.members) == sorted(fam.members)

    def test_regular_families_by_definition(self, SIERP):
        ro = {b for b in range(4) if interior(SIERP, closure(SIERP, b)) == b}
        rc = {c for c in range(4) if closure(SIERP, interior(SIERP, c)) == c}
        assert family(SIERP, Kind.RO).as_set == ro == {0, 3}
        assert family(SIERP, Kind.RC).as_set == rc == {0, 3}

    @settings(max_examples=60, deadline=None)
    @given(spaces(3))
    def test_lc_and_saturated_against_brute_force(self, M):
        # the subfamily enumeration is exponential in the number of opens
        assert family(M, Kind.LC).as_set == _brute_lc(M)
        assert family(M, Kind.SATURATED).as_set == _brute_meets_of_opens(M)
        assert family(M, Kind.WLC).as_set == family(M, Kind.LC).as_set


class TestGeneration:
    def test_atoms_of_disc2(self, DISC2):
        assert join_generates(DISC2.atoms, DISC2)

    def test_only_empty(self, SIERP):
        assert not join_generates({0}, SIERP)

    def test_closed_sets_of_sierp(self, SIERP):
        assert not join_generates(family(SIERP, Kind.CLOSED), SIERP)
        assert join_generation_witness(SIERP.closeds, SIERP) == 0b10

    def test_opens_meet_generate_discrete(self, DISC2, SIERP):
        assert meet_generates(DISC2.opens, DISC2)
        assert not meet_generates(SIERP.opens, SIERP)

    def test_generated_boolean(self, SIERP, TRIV2, DISC2):
        assert generated_complete_boolean(SIERP.opens, SIERP) == {0, 1, 2, 3}
        assert generated_complete_boolean(TRIV2.opens, TRIV2) == {0, 3}
        assert generated_complete_boolean(DISC2.opens, DISC2) == {0, 1, 2, 3}

    def test_generated_lattice(self, SIERP):
        assert generated_complete_lattice(SIERP.opens, SIERP) == SIERP.opens


class TestHeyting:
    def test_sierp(self, SIERP):
        assert heyting_impl(SIERP, 0b10, 0) == 0

    def test_self_implication(self, SIERP):
        for a in SIERP.opens:
            assert heyting_impl(SIERP, a, a) == SIERP.full

    def test_discrete(self, DISC2):
        for a in range(4):
            for b in range(4):
                assert heyting_impl(DISC2, a, b) == (3 ^ a) | b

    def test_requires_open(self, SIERP):
        with pytest.raises(NotOpen):
            heyting_impl(SIERP, 0b01, 0)

    def test_coheyting(self, SIERP):
        assert coheyting_diff(SIERP, 0b01, 0b11) == closure(SIERP, 0b10) == 0b11
        assert coheyting_diff(SIERP, 0b11, 0b01) == 0
        with pytest.raises(NotClosed):
            coheyting_diff(SIERP, 0b10, 0)


    @settings(max_examples=60, deadline=None)
    @given(spaces(5))
    def test_residuation(self, M):
        for a in M.opens:
            for b in M.opens:
                r = heyting_impl(M, a, b)
                assert r in M.opens
                for c in M.opens:
                    assert (c & a & ~b == 0) == (c & ~r == 0)
        for a in M.closeds:
            for b in M.closeds:
                r = coheyting_diff(M, a, b)
                assert r in M.closeds
                for c in M.closeds:
                    assert (r & ~c == 0) == (b & ~(a | c) == 0)


class TestMorphisms:
    def test_discrete_domain_always_continuous(self, SIERP, DISC2):
        for f in [(0, 0), (0, 1), (1, 0), (1, 1)]:
            check_mt_morphism(SIERP, DISC2, f)

    def test_constant_map(self, SIERP, TRIV2):
        h = check_mt_morphism(SIERP, TRIV2, (1, 1))
        assert h(0b10) == 0b11 and h(0b01) == 0

    def test_identity_like_not_continuous(self, SIERP, TRIV2):
        with pytest.raises(NotContinuous) as exc:
            check_mt_morphism(SIERP, TRIV2, (0, 1))
        assert exc.value.witness == 0b10

    def test_identity(self, SIERP):
        h = check_mt_morphism(SIERP, SIERP, (0, 1))
        assert all(h(a) == a for a in range(4))


def test_fixture_builders_agree():
    assert disc2().opens == {0, 1, 2, 3}
    assert triv2().opens == {0, 3}
