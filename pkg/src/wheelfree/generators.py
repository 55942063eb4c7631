"""Deterministic, parameterized constructors for every structural class.

Vertex layouts are fixed (roles in index order) so failed round trips
are readable; recognizers must not rely on the layout, which is what the
shuffled-relabeling tests are for.  All randomness flows through a seed:
identical parameters and seed give a byte-identical graph.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Sequence

from .graph import Graph, make_graph, relabel


def gen_class_a(x_size: int, e_mode: str = "none") -> Graph:
    """Class-A member: 4-hole a,b,c,d (vertices 0..3), apex e (4), clique X.

    e_mode picks e's single allowed neighbor among {c,d}, or neither.
    """
    if x_size < 1:
        raise ValueError("X must be non-empty")
    if e_mode not in ("none", "c", "d"):
        raise ValueError(f"e_mode must be one of none/c/d, got {e_mode!r}")
    a, b, c, d, e = 0, 1, 2, 3, 4
    xs = range(5, 5 + x_size)
    edges = [(a, b), (b, c), (c, d), (d, a)]
    edges += [(x, v) for x in xs for v in (c, d, e)]
    edges += list(combinations(xs, 2))
    if e_mode == "c":
        edges.append((e, c))
    elif e_mode == "d":
        edges.append((e, d))
    return make_graph(5 + x_size, edges)


def gen_chain(h: int, x_sizes: Sequence[int], y_sizes: Sequence[int]) -> Graph:
    """Bare staircase graph: X_i sees Y_j iff i + j <= h + 1.

    Layout: X blocks first (X_1..X_h), then Y blocks (Y_1..Y_h).
    """
    if h < 1 or len(x_sizes) != h or len(y_sizes) != h:
        raise ValueError("need exactly h block sizes per side")
    if any(s < 1 for s in x_sizes) or any(s < 1 for s in y_sizes):
        raise ValueError("staircase blocks must be non-empty")
    sx = sum(x_sizes)
    n = sx + sum(y_sizes)
    xstart = [0]
    for s in x_sizes:
        xstart.append(xstart[-1] + s)
    ystart = [sx]
    for s in y_sizes:
        ystart.append(ystart[-1] + s)
    # prefix masks over X_1..X_t and Y_1..Y_t; both sides follow the same
    # staircase law, so every row is one prefix mask
    prefx = [0]
    prefy = [0]
    for t in range(h):
        prefx.append(prefx[-1] | ((1 << x_sizes[t]) - 1) << xstart[t])
        prefy.append(prefy[-1] | ((1 << y_sizes[t]) - 1) << ystart[t])
    rows = [0] * n
    for i in range(1, h + 1):
        nb = prefy[h + 1 - i]
        for x in range(xstart[i - 1], xstart[i]):
            rows[x] = nb
    for j in range(1, h + 1):
        nb = prefx[h + 1 - j]
        for y in range(ystart[j - 1], ystart[j]):
            rows[y] = nb
    return Graph(n, tuple(rows))


def gen_class_b(h: int, x_sizes: Sequence[int], y_sizes: Sequence[int],
                z_size: int = 0, w_size: int = 0) -> Graph:
    """Class-B member: staircase X u Y, then Z attached to {x,y}, then W.

    x is the first vertex of X_1 and y the first vertex of Y_1; the
    staircase makes both complete to the other side.
    """
    if z_size < 0 or w_size < 0:
        raise ValueError("z_size and w_size must be non-negative")
    if sum(x_sizes) < 2 or sum(y_sizes) < 2:
        raise ValueError("both sides need at least 2 vertices")
    base = gen_chain(h, x_sizes, y_sizes)
    sx = sum(x_sizes)
    x, y = 0, sx
    n = base.n + z_size + w_size
    rows = list(base.rows) + [0] * (z_size + w_size)
    for z in range(base.n, base.n + z_size):
        rows[z] = 1 << x | 1 << y
        rows[x] |= 1 << z
        rows[y] |= 1 << z
    return Graph(n, tuple(rows))


def gen_class_c(x_size: int, y_size: int) -> Graph:
    """Class-C member: cliques {0..x-1} and the rest, cross matching
    (0, x) and (1, x+1)."""
    if x_size < 2 or y_size < 2:
        raise ValueError("both cliques need at least 2 vertices")
    n = x_size + y_size
    xm = (1 << x_size) - 1
    ym = ((1 << n) - 1) ^ xm
    rows = [0] * n
    for u in range(x_size):
        rows[u] = xm ^ (1 << u)
    for v in range(x_size, n):
        rows[v] = ym ^ (1 << v)
    for u, v in ((0, x_size), (1, x_size + 1)):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def gen_split(n: int, p: float, seed: int) -> Graph:
    """Random split graph: a p-coin sends each vertex to the clique side,
    clique edges are all present, each clique-stable pair gets a p-coin."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be a probability")
    rng = random.Random(seed)
    side = [rng.random() < p for _ in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if side[u] and side[v]:
                edges.append((u, v))
            elif (side[u] or side[v]) and rng.random() < p:
                edges.append((u, v))
    return make_graph(n, edges)


def gen_random(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), pairs flipped in lexicographic order."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be a probability")
    rng = random.Random(seed)
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def shuffled(g: Graph, seed: int) -> tuple[Graph, tuple[int, ...]]:
    """Relabel by a seeded random permutation; returns (graph, perm)."""
    rng = random.Random(seed)
    perm = list(range(g.n))
    rng.shuffle(perm)
    return relabel(g, perm), tuple(perm)
