"""Chain bipartite graphs: nested neighborhoods and the staircase partition.

A connected bipartite graph with sides X, Y is a chain graph when the
neighborhoods of the X vertices are pairwise comparable by inclusion
(equivalently: no induced pair of disjoint edges, equivalently no induced
5-vertex path).  Such a graph carries a unique staircase structure: X and
Y split into non-empty blocks X_1..X_h and Y_1..Y_h so that a vertex of
X_i sees a vertex of Y_j exactly when i + j <= h + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graph import Graph, bit_list, is_connected, mask_of


@dataclass(frozen=True)
class Bipartition:
    """Two stable sets covering V; per component, its minimum vertex is in x."""

    x: tuple[int, ...]
    y: tuple[int, ...]


@dataclass(frozen=True)
class OddCycle:
    """Witness that a graph is not bipartite (closed odd walk, cyclic order)."""

    cycle: tuple[int, ...]


@dataclass(frozen=True)
class ChainDecomposition:
    """Staircase blocks: X_i sees Y_j iff i + j <= h + 1."""

    h: int
    xparts: tuple[tuple[int, ...], ...]
    yparts: tuple[tuple[int, ...], ...]


def bipartition(g: Graph) -> Union[Bipartition, OddCycle]:
    """2-color g, or produce an odd cycle if that is impossible.

    Coloring is deterministic: each component is explored from its
    minimum vertex, which lands in the X side.  The happy path is a
    layered BFS on whole bitmasks (an intra-layer edge means an odd
    cycle); only when a conflict shows up does a vertex-level DFS run to
    extract the witness.
    """
    n = g.n
    rows = g.rows
    remaining = (1 << n) - 1
    xmask = 0
    ymask = 0
    while remaining:
        start = remaining & -remaining
        layer = start
        seen = start
        parity = 0
        while layer:
            m = layer
            nxt = 0
            while m:
                b = m & -m
                m ^= b
                r = rows[b.bit_length() - 1]
                if r & layer:
                    return OddCycle(_odd_cycle_dfs(g))
                nxt |= r
            if parity == 0:
                xmask |= layer
            else:
                ymask |= layer
            layer = nxt & ~seen
            seen |= layer
            parity ^= 1
        remaining &= ~seen
    return Bipartition(tuple(bit_list(xmask)), tuple(bit_list(ymask)))


def _odd_cycle_dfs(g: Graph) -> tuple[int, ...]:
    """Vertex-level 2-coloring that stops at the first conflict edge."""
    n = g.n
    rows = g.rows
    color = [-1] * n
    parent = [-1] * n
    for s in range(n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            cu = color[u]
            r = rows[u]
            while r:
                b = r & -r
                r ^= b
                v = b.bit_length() - 1
                if color[v] == -1:
                    color[v] = cu ^ 1
                    parent[v] = u
                    stack.append(v)
                elif color[v] == cu:
                    return _odd_cycle(parent, u, v)
    raise RuntimeError("odd-cycle extraction called on a bipartite graph")


def _odd_cycle(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    """Close the tree paths of u and v through their lowest common ancestor."""
    depth = {}
    w = u
    i = 0
    while w != -1:
        depth[w] = i
        w = parent[w]
        i += 1
    w = v
    vpath = []
    while w not in depth:
        vpath.append(w)
        w = parent[w]
    upath = []
    x = u
    while x != w:
        upath.append(x)
        x = parent[x]
    upath.append(w)
    return tuple(upath + vpath[::-1])


def _validate(g: Graph, b: Bipartition) -> tuple[int, int]:
    xm = mask_of(b.x)
    ym = mask_of(b.y)
    full = (1 << g.n) - 1
    if xm & ym or xm | ym != full:
        raise ValueError("bipartition sides must be disjoint and cover V")
    if len(b.x) != xm.bit_count() or len(b.y) != ym.bit_count():
        raise ValueError("bipartition sides contain duplicates")
    for v in b.x:
        if g.rows[v] & xm:
            raise ValueError(f"X side is not stable (vertex {v})")
    for v in b.y:
        if g.rows[v] & ym:
            raise ValueError(f"Y side is not stable (vertex {v})")
    return xm, ym


def incomparable_pair(g: Graph, b: Bipartition) -> Optional[tuple[int, int]]:
    """Two X vertices whose neighborhoods are incomparable, or None.

    X is sorted by degree; nesting then only needs consecutive
    containment checks, and any consecutive failure is itself an
    incomparable pair.
    """
    _validate(g, b)
    order = sorted(b.x, key=lambda v: (-g.rows[v].bit_count(), v))
    for prev, cur in zip(order, order[1:]):
        if g.rows[cur] & ~g.rows[prev]:
            return prev, cur
    return None


def is_chain(g: Graph, b: Bipartition) -> bool:
    """True iff any two X-side neighborhoods are comparable by inclusion."""
    return incomparable_pair(g, b) is None


def _grouped_by_neighborhood(g: Graph, side: tuple[int, ...]) -> list[tuple[int, list[int]]]:
    """(neighborhood mask, members) groups, largest neighborhood first."""
    groups: dict[int, list[int]] = {}
    for v in side:
        groups.setdefault(g.rows[v], []).append(v)
    return sorted(groups.items(), key=lambda kv: -kv[0].bit_count())


def chain_decomposition(g: Graph, b: Bipartition) -> Optional[ChainDecomposition]:
    """The staircase partition, or None when the graph is not a chain graph.

    Both sides are grouped independently and the i + j <= h + 1 adjacency
    law is re-verified against every vertex before the decomposition is
    returned; a mismatch would mean a bug, not a property of the input.
    """
    _validate(g, b)
    if not is_connected(g):
        raise ValueError("chain decomposition is defined for connected graphs")
    if not b.x or not b.y:
        raise ValueError("chain decomposition needs both sides non-empty")
    if incomparable_pair(g, b) is not None:
        return None
    xgroups = _grouped_by_neighborhood(g, b.x)
    ygroups = _grouped_by_neighborhood(g, b.y)
    h = len(xgroups)
    if len(ygroups) != h:
        raise RuntimeError("staircase side gridings disagree")
    xpart_masks = [mask_of(vs) for _, vs in xgroups]
    ypart_masks = [mask_of(vs) for _, vs in ygroups]
    prefx = [0]
    for m in xpart_masks:
        prefx.append(prefx[-1] | m)
    prefy = [0]
    for m in ypart_masks:
        prefy.append(prefy[-1] | m)
    for i, (nmask, _) in enumerate(xgroups, start=1):
        if nmask != prefy[h + 1 - i]:
            raise RuntimeError("staircase adjacency law failed on the X side")
    for j, (nmask, _) in enumerate(ygroups, start=1):
        if nmask != prefx[h + 1 - j]:
            raise RuntimeError("staircase adjacency law failed on the Y side")
    return ChainDecomposition(
        h,
        tuple(tuple(sorted(vs)) for _, vs in xgroups),
        tuple(tuple(sorted(vs)) for _, vs in ygroups),
    )


def dominating_vertices(g: Graph, b: Bipartition) -> tuple[int, int]:
    """Least vertex of X complete to Y and least vertex of Y complete to X.

    Requires a connected chain bipartite graph with both sides non-empty;
    existence is then guaranteed (the top staircase blocks).
    """
    xm, ym = _validate(g, b)
    if not b.x or not b.y:
        raise ValueError("dominating vertices need both sides non-empty")
    if not is_connected(g):
        raise ValueError("dominating vertices are defined for connected graphs")
    if incomparable_pair(g, b) is not None:
        raise ValueError("not a chain bipartite graph")
    x = min(v for v in b.x if g.rows[v] & ym == ym)
    y = min(v for v in b.y if g.rows[v] & xm == xm)
    return x, y
