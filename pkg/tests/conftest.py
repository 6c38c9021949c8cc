from __future__ import annotations

import pytest
from hypothesis import strategies as st

from mtkit.core import FinSpace, validate_space
from mtkit.frames import boolean_frame, chain


def sierp():
    return validate_space(2, [0, 0b10, 0b11])


def disc2():
    return validate_space(2, [0, 0b01, 0b10, 0b11])


def triv2():
    return validate_space(2, [0, 0b11])


def disc(n):
    return validate_space(n, range(1 << n))


@pytest.fixture
def SIERP():
    return sierp()


@pytest.fixture
def DISC2():
    return disc2()


@pytest.fixture
def TRIV2():
    return triv2()


@pytest.fixture
def CHAINFRM3():
    return chain(3)


@pytest.fixture
def BOOL4():
    return boolean_frame(2)


def space_from_relation(n: int, rel: list) -> FinSpace:
    """Topology whose specialization preorder is the reflexive-transitive
    closure of ``rel`` (pairs ``(x, y)`` meaning x ≤ y)."""
    below = [1 << x for x in range(n)]
    for x, y in rel:
        below[y] |= 1 << x
    changed = True
    while changed:
        changed = False
        for y in range(n):
            acc = below[y]
            for x in range(n):
                if acc >> x & 1:
                    acc |= below[x]
            if acc != below[y]:
                below[y] = acc
                changed = True
    # opens are up-sets: x ∈ U and x ≤ y imply y ∈ U
    opens = [s for s in range(1 << n)
             if all(not s >> x & 1 or all(s >> y & 1 for y in range(n) if below[y] >> x & 1)
                    for x in range(n))]
    return validate_space(n, opens)


@st.composite
def spaces(draw, max_points: int = 5):
    n = draw(st.integers(0, max_points))
    pairs = st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)))
    rel = draw(st.lists(pairs, max_size=2 * n)) if n else []
    return space_from_relation(n, rel)

