"""Brute-force ground truth: holes, wheels, antiwheels, fixed patterns.

A hole is a chordless cycle on at least 4 vertices.  A wheel is a hole
plus an outside vertex (the hub) with at least three neighbors on it; an
antiwheel is a wheel of the complement.  Every wheel that fits in seven
vertices uses a hole of length at most six, so the bounded searches below
only ever enumerate holes of length 4..6.

The searches here are deliberately simple and independent of the
structural recognizers: they are the reference the recognizers are
checked against.  All functions are pure; hole streams are single-consumer
generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .graph import Graph, complement, make_graph, cycle_graph, path_graph

DEFAULT_EXHAUSTIVE_CAP = 16


class CapExceeded(ValueError):
    """Exhaustive search refused: the graph exceeds the configured cap."""


@dataclass(frozen=True)
class Hole:
    """Chordless cycle, stored in canonical cyclic order.

    Canonical means: the minimum vertex first, and of the two traversal
    directions the one whose second vertex is smaller than its last.
    """

    cycle: tuple[int, ...]


@dataclass(frozen=True)
class WheelWitness:
    """A hole plus a hub with >= 3 neighbors on it.

    The witness lives in the host graph: G itself when in_complement is
    False, complement(G) otherwise.
    """

    hole: Hole
    hub: int
    in_complement: bool


def find_holes(g: Graph, min_len: int = 4,
               max_len: Optional[int] = None) -> Iterator[Hole]:
    """Yield every hole with length in [min_len, max_len] exactly once.

    Enumeration is a DFS over chordless paths anchored at the hole's
    minimum vertex; chordlessness is enforced incrementally by banning
    neighbors of interior path vertices.  Each hole appears once, as its
    canonical rotation/reflection, and the stream is in lexicographic
    order of those canonical tuples.
    """
    n = g.n
    if max_len is None:
        max_len = max(n, min_len)
    if not 4 <= min_len <= max_len:
        raise ValueError(f"need 4 <= min_len <= max_len, got [{min_len},{max_len}]")
    rows = g.rows
    full = (1 << n) - 1

    def extend(path: list[int], visited: int, banned: int,
               anchor_bit: int, above: int) -> Iterator[Hole]:
        last = path[-1]
        cand = rows[last] & above & ~visited & ~banned
        can_close = len(path) + 1 >= min_len
        can_grow = len(path) + 2 <= max_len
        while cand:
            b = cand & -cand
            cand ^= b
            w = b.bit_length() - 1
            if rows[w] & anchor_bit:
                # closes a cycle; a longer path through w would carry a chord
                if can_close and path[1] < w:
                    yield Hole(tuple(path) + (w,))
            elif can_grow:
                yield from extend(path + [w], visited | b,
                                  banned | rows[last], anchor_bit, above)

    for a in range(n):
        anchor_bit = 1 << a
        above = full & (-1 << (a + 1))
        firsts = rows[a] & above
        while firsts:
            b = firsts & -firsts
            firsts ^= b
            v = b.bit_length() - 1
            yield from extend([a, v], anchor_bit | b, 0, anchor_bit, above)


def _hub_for(host: Graph, hole: Hole) -> Optional[int]:
    """Least vertex outside the hole with >= 3 neighbors on it."""
    hmask = 0
    for v in hole.cycle:
        hmask |= 1 << v
    rows = host.rows
    outside = ((1 << host.n) - 1) & ~hmask
    while outside:
        b = outside & -outside
        outside ^= b
        w = b.bit_length() - 1
        if (rows[w] & hmask).bit_count() >= 3:
            return w
    return None


def find_small_wheel(g: Graph) -> Optional[WheelWitness]:
    """First wheel spanning at most 7 vertices (hole length 4..6), if any."""
    if g.n < 5:
        return None
    for hole in find_holes(g, 4, min(6, g.n - 1)):
        hub = _hub_for(g, hole)
        if hub is not None:
            return WheelWitness(hole, hub, False)
    return None


def find_small_antiwheel(g: Graph) -> Optional[WheelWitness]:
    """Small-wheel search in the complement, flagged accordingly."""
    w = find_small_wheel(complement(g))
    if w is None:
        return None
    return WheelWitness(w.hole, w.hub, True)


def find_wheel_exhaustive(g: Graph, in_complement: bool = False,
                          cap: int = DEFAULT_EXHAUSTIVE_CAP) -> Optional[WheelWitness]:
    """Search for a wheel over holes of every length (up to n-1).

    Hole enumeration is exponential, so graphs larger than the cap are
    refused outright rather than silently truncated.
    """
    if g.n > cap:
        raise CapExceeded(f"exhaustive wheel search refused: n={g.n} > cap={cap}")
    host = complement(g) if in_complement else g
    if host.n < 5:
        return None
    for hole in find_holes(host, 4, host.n - 1):
        hub = _hub_for(host, hole)
        if hub is not None:
            return WheelWitness(hole, hub, in_complement)
    return None


def verify_witness(g: Graph, w: WheelWitness) -> bool:
    """Independent re-check of a wheel witness against its host graph."""
    host = complement(g) if w.in_complement else g
    cyc = w.hole.cycle
    k = len(cyc)
    if k < 4 or len(set(cyc)) != k:
        return False
    if not all(0 <= v < host.n for v in cyc) or not 0 <= w.hub < host.n:
        return False
    if w.hub in cyc:
        return False
    rows = host.rows
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if (rows[cyc[i]] >> cyc[j] & 1) != consecutive:
                return False
    hmask = 0
    for v in cyc:
        hmask |= 1 << v
    return (rows[w.hub] & hmask).bit_count() >= 3


# ---------------------------------------------------------------------------
# fixed pattern catalog and induced-subgraph search
# ---------------------------------------------------------------------------

F1 = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2)])
F2 = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])
CO_F1 = complement(F1)
CO_F2 = complement(F2)
TWO_K2 = make_graph(4, [(0, 1), (2, 3)])
C4 = cycle_graph(4)
C5 = cycle_graph(5)
C6 = cycle_graph(6)
P5 = path_graph(5)
CO_C6 = complement(C6)

PATTERNS: dict[str, Graph] = {
    "F1": F1,
    "F2": F2,
    "co-F1": CO_F1,
    "co-F2": CO_F2,
    "2K2": TWO_K2,
    "C4": C4,
    "C5": C5,
    "P5": P5,
    "C6": C6,
    "co-C6": CO_C6,
}


def _iso_to(sub_rows: list[int], pat: Graph) -> bool:
    """Is the k-vertex graph given by sub_rows isomorphic to pat?

    Plain backtracking over vertex images with degree pruning; k <= 6
    throughout this module, so no cleverness needed.
    """
    k = pat.n
    prows = pat.rows
    pdeg = [r.bit_count() for r in prows]
    sdeg = [r.bit_count() for r in sub_rows]
    image = [-1] * k
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == k:
            return True
        want = prows[i]
        for c in range(k):
            if used >> c & 1 or sdeg[c] != pdeg[i]:
                continue
            ok = True
            for j in range(i):
                if (want >> j & 1) != (sub_rows[c] >> image[j] & 1):
                    ok = False
                    break
            if ok:
                image[i] = c
                used |= 1 << c
                if place(i + 1):
                    return True
                used ^= 1 << c
        return False

    return place(0)


def contains_pattern(g: Graph, pattern: Graph) -> Optional[tuple[int, ...]]:
    """Lexicographically least vertex set inducing a copy of pattern.

    Brute force over k-subsets with edge-count and degree-multiset
    pruning before the isomorphism check.
    """
    k = pattern.n
    if k > g.n:
        return None
    pat_m2 = sum(r.bit_count() for r in pattern.rows)
    pat_degs = sorted(r.bit_count() for r in pattern.rows)
    rows = g.rows
    for combo in combinations(range(g.n), k):
        cmask = 0
        for v in combo:
            cmask |= 1 << v
        degs = [(rows[v] & cmask).bit_count() for v in combo]
        if sum(degs) != pat_m2 or sorted(degs) != pat_degs:
            continue
        sub = []
        for v in combo:
            r = rows[v] & cmask
            m = 0
            for j, w in enumerate(combo):
                if r >> w & 1:
                    m |= 1 << j
            sub.append(m)
        if _iso_to(sub, pattern):
            return combo
    return None
