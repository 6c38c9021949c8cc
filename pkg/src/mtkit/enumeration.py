"""Labeled finite topologies via their specialization preorders."""

from __future__ import annotations

import os
from typing import Iterator

from .core import FinSpace, validate_space
from .errors import BoundExceeded

DEFAULT_MAX_POINTS = 4


def max_points() -> int:
    raw = os.environ.get("MTKIT_MAX_POINTS")
    if raw is None:
        return DEFAULT_MAX_POINTS
    try:
        return int(raw)
    except ValueError:
        raise BoundExceeded(f"MTKIT_MAX_POINTS is not an integer: {raw!r}", raw) from None


def check_bound(n: int, bound: int | None = None) -> None:
    bound = max_points() if bound is None else bound
    if n < 0 or n > bound:
        raise BoundExceeded(f"point count {n} outside 0..{bound} (set MTKIT_MAX_POINTS to raise)", n)


def preorders(n: int) -> Iterator[tuple]:
    """Every preorder on ``range(n)`` as ``below[x]`` bitmasks (``y ∈ below[x]`` iff y ≤ x).

    Point ``k`` is added to a preorder on ``range(k)`` by choosing its
    strict-or-equal downset D and upset U among the old points; the choice is
    valid iff D is a down-set, U an up-set, and every element of D lies below
    every element of U (transitivity through the new point).
    """
    if n == 0:
        yield ()
        return
    for below in preorders(n - 1):
        k = n - 1
        above = [sum(1 << x for x in range(k) if below[x] >> y & 1) for y in range(k)]
        full = (1 << k) - 1
        downsets = [d for d in range(full + 1)
                    if all(below[x] & ~d == 0 for x in range(k) if d >> x & 1)]
        upsets = [u for u in range(full + 1)
                  if all(above[x] & ~u == 0 for x in range(k) if u >> x & 1)]
        for d in downsets:
            for u in upsets:
                if any(d >> x & 1 and above[x] & u != u for x in range(k)):
                    continue
                new = []
                for x in range(k):
                    b = below[x]
                    if u >> x & 1:
                        b |= d | 1 << k
                    new.append(b)
                new.append(d | 1 << k)
                yield tuple(new)


def opens_of_preorder(n: int, below: tuple) -> list:
    """Up-sets of the specialization preorder."""
    out = []
    for s in range(1 << n):
        # s is an up-set iff whenever x ∈ s and x ≤ y then y ∈ s
        if all(not (s >> x & 1) or all(s >> y & 1 for y in range(n) if below[y] >> x & 1)
               for x in range(n)):
            out.append(s)
    return out


def space_id(M: FinSpace) -> str:
    return f"n{M.n}:" + ",".join(format(u, "x") for u in sorted(M.opens))


def enumerate_topologies(n: int, bound: int | None = None) -> list:
    """Every topology on ``n`` labeled points, sorted by open family."""
    check_bound(n, bound)
    spaces = [validate_space(n, opens_of_preorder(n, below), check_laws=False)
              for below in preorders(n)]
    spaces.sort(key=lambda M: tuple(sorted(M.opens)))
    return spaces


def enumerate_up_to(n: int, bound: int | None = None) -> list:
    out = []
    for k in range(n + 1):
        out.extend(enumerate_topologies(k, bound))
    return out
