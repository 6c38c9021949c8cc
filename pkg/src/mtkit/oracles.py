"""Independent reference implementations used to cross-check the algebraic code.

Nothing here calls the interior operator of :mod:`mtkit.core`, the family
machinery, or the separation checkers.  Everything works with points and
open sets directly.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .core import FinSpace


def _closure_of(X: FinSpace, A: int) -> int:
    r = X.full
    for u in X.opens:
        if A & u == 0:
            r &= X.full ^ u
    return r


def _closed(X: FinSpace) -> list:
    return [X.full ^ u for u in X.opens]


# --------------------------------------------------------------------------
# classical axioms on a finite space


def classical_t0(X: FinSpace) -> bool:
    return all(any((u >> x & 1) != (u >> y & 1) for u in X.opens)
               for x, y in combinations(range(X.n), 2))


def classical_td(X: FinSpace) -> bool:
    """Each singleton is an open set intersected with a closed set."""
    closed = _closed(X)
    return all(any(u & c == 1 << x for u in X.opens for c in closed) for x in range(X.n))


def classical_t1(X: FinSpace) -> bool:
    closed = set(_closed(X))
    return all(1 << x in closed for x in range(X.n))


def classical_t2(X: FinSpace) -> bool:
    return all(any(u >> x & 1 and v >> y & 1 and u & v == 0 for u in X.opens for v in X.opens)
               for x, y in combinations(range(X.n), 2))


def classical_t3(X: FinSpace) -> bool:
    if not classical_t1(X):
        return False
    for F in _closed(X):
        for x in range(X.n):
            if F >> x & 1:
                continue
            if not any(u >> x & 1 and F & ~v == 0 and u & v == 0 for u in X.opens for v in X.opens):
                return False
    return True


def classical_t3half(X: FinSpace) -> bool:
    """T1 plus: a point and a closed set missing it are separated by a
    continuous map into [0, 1].

    A continuous real-valued map on a finite space has finite image, and a
    finite subspace of [0, 1] is discrete, so each fibre is clopen.  Such a
    separating map therefore exists iff some clopen set contains the point
    and misses the closed set (its indicator is the map).
    """
    if not classical_t1(X):
        return False
    closed = set(_closed(X))
    clopens = [u for u in X.opens if u in closed]
    for F in closed:
        for x in range(X.n):
            if F >> x & 1:
                continue
            if not any(k >> x & 1 and k & F == 0 for k in clopens):
                return False
    return True


def classical_t4(X: FinSpace) -> bool:
    if not classical_t1(X):
        return False
    closed = _closed(X)
    for F in closed:
        for G in closed:
            if F & G:
                continue
            if not any(F & ~u == 0 and G & ~v == 0 and u & v == 0 for u in X.opens for v in X.opens):
                return False
    return True


def irreducible_closed_sets(X: FinSpace) -> list:
    closed = _closed(X)
    out = []
    for F in closed:
        if F == 0:
            continue
        proper = [G for G in closed if G != F and G & ~F == 0]
        if not any(G | H == F for G in proper for H in proper):
            out.append(F)
    return sorted(out)


def classical_sober(X: FinSpace) -> bool:
    """Each irreducible closed set is the closure of exactly one point."""
    for F in irreducible_closed_sets(X):
        generic = [x for x in range(X.n) if _closure_of(X, 1 << x) == F]
        if len(generic) != 1:
            return False
    return True


CLASSICAL = {
    "T0": classical_t0,
    "T_HALF": classical_td,
    "T1": classical_t1,
    "T2": classical_t2,
    "T3": classical_t3,
    "T3HALF": classical_t3half,
    "T4": classical_t4,
    "SOBER": classical_sober,
}


# --------------------------------------------------------------------------
# topology enumeration by subset-family filtering


def topologies_bruteforce(n: int) -> list:
    """Every family of subsets of ``n`` points containing ∅ and the full set
    and closed under binary union and intersection, as sorted tuples."""
    full = (1 << n) - 1
    middle = [s for s in range(1, full)]
    out = []
    for pick in range(1 << len(middle)):
        fam = {0, full} | {s for k, s in enumerate(middle) if pick >> k & 1}
        if all(u | v in fam and u & v in fam for u in fam for v in fam):
            out.append(tuple(sorted(fam)))
    return sorted(set(out))


# --------------------------------------------------------------------------
# completely-below by explicit chain search


def chain_relation(size: int, rows: Sequence[int], up: Sequence[int], down: Sequence[int],
                   depth: int) -> tuple:
    """``b ≺≺ a`` iff there are ``c_0 .. c_N`` (``N = 2**depth``) with
    ``b ≤ c_0``, ``c_N ≤ a`` and ``c_i R c_{i+1}``.

    ``up[b]`` / ``down[a]`` are bitmasks of the elements above ``b`` / below
    ``a``.  The chain layers are propagated step by step; once a layer
    repeats, the remaining steps are skipped by cycle arithmetic.
    """
    N = 2 ** depth
    out = []
    for b in range(size):
        layer = up[b]
        seen = {layer: 0}
        history = [layer]
        step = 0
        while step < N:
            nxt = 0
            x, i = layer, 0
            while x:
                if x & 1:
                    nxt |= rows[i]
                x >>= 1
                i += 1
            step += 1
            layer = nxt
            if layer in seen:
                start = seen[layer]
                period = step - start
                layer = history[start + (N - start) % period]
                break
            seen[layer] = step
            history.append(layer)
        out.append(sum(1 << a for a in range(size) if layer & down[a]))
    return tuple(out)


def explicit_chain(rows: Sequence[int], up: Sequence[int], down: Sequence[int],
                   b: int, a: int, length: int) -> list | None:
    """A concrete chain ``c_0 .. c_length`` as in :func:`chain_relation`."""
    layers = [up[b]]
    for _ in range(length):
        nxt = 0
        for i in _bits(layers[-1]):
            nxt |= rows[i]
        layers.append(nxt)
    end = layers[-1] & down[a]
    if not end:
        return None
    c = [0] * (length + 1)
    c[length] = next(_bits(end))
    for k in range(length - 1, -1, -1):
        c[k] = next(i for i in _bits(layers[k]) if rows[i] >> c[k + 1] & 1)
    return c


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1
