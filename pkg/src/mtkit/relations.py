"""Binary relations on ``range(size)`` stored as bitmask rows.

``rows[i]`` has bit ``j`` set iff ``i R j``.
"""

from __future__ import annotations

from typing import Callable, Sequence


def relation_rows(size: int, pred: Callable[[int, int], bool]) -> tuple:
    return tuple(
        sum(1 << j for j in range(size) if pred(i, j)) for i in range(size)
    )


def transpose(rows: Sequence[int], size: int) -> list:
    cols = [0] * size
    for i, r in enumerate(rows):
        j = 0
        while r:
            if r & 1:
                cols[j] |= 1 << i
            r >>= 1
            j += 1
    return cols


def interpolative_core(rows: Sequence[int], size: int) -> tuple:
    """Largest subrelation S of R with ``b S a ⇒ ∃c: b S c ∧ c S a``.

    Iterates R_{k+1} = {(b, a) ∈ R_k | ∃c: b R_k c ∧ c R_k a} to a fixpoint.
    """
    cur = list(rows)
    while True:
        cols = transpose(cur, size)
        nxt = []
        for b, r in enumerate(cur):
            keep = 0
            rr, a = r, 0
            while rr:
                if rr & 1 and r & cols[a]:
                    keep |= 1 << a
                rr >>= 1
                a += 1
            nxt.append(keep)
        if nxt == cur:
            return tuple(cur)
        cur = nxt
