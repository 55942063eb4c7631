"""Immutable simple graphs on dense integer vertices, with bitset adjacency.

Vertices are 0..n-1.  Adjacency is one integer bitmask per vertex
(``rows[u]`` has bit ``v`` set iff uv is an edge), which makes adjacency
tests, neighborhood intersection and popcounts cheap.  Everything
downstream (hole search, the structural recognizers, the enumeration
harness) leans on that representation.

Graphs are values: ``complement``, ``induced`` and ``relabel`` return new
objects and never mutate, so instances can be shared freely between
threads and worker processes.  External vertex labels do not exist here;
IO formats (graph6, edge lists) speak dense 0-based integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class FormatError(ValueError):
    """Malformed graph6 or edge-list input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; symmetric, irreflexive adjacency."""

    n: int
    rows: tuple[int, ...]

    def __repr__(self) -> str:
        if self.n > 16:
            return f"Graph(n={self.n}, m={edge_count(self)})"
        return f"Graph({self.n}, {edge_list(self)})"


# ---------------------------------------------------------------------------
# construction and elementary queries
# ---------------------------------------------------------------------------

def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered vertex pairs.

    Duplicate edges collapse silently; loops and out-of-range endpoints
    raise ValueError.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge ({u},{u}) rejected")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def adjacent(g: Graph, u: int, v: int) -> bool:
    return g.rows[u] >> v & 1 == 1


def degree(g: Graph, u: int) -> int:
    return g.rows[u].bit_count()


def edge_count(g: Graph) -> int:
    return sum(r.bit_count() for r in g.rows) // 2


def edge_list(g: Graph) -> list[tuple[int, int]]:
    """All edges as (u, v) with u < v, lexicographically sorted."""
    out = []
    for u in range(g.n):
        r = g.rows[u] >> (u + 1) << (u + 1)  # neighbors above u
        while r:
            b = r & -r
            out.append((u, b.bit_length() - 1))
            r ^= b
    return out


def bit_list(mask: int) -> list[int]:
    """Positions of set bits, ascending."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def mask_of(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _check_subset(g: Graph, s: Iterable[int]) -> list[int]:
    order = sorted(set(s))
    if order and not (0 <= order[0] and order[-1] < g.n):
        raise ValueError(f"vertex set {order} not within 0..{g.n - 1}")
    return order


# ---------------------------------------------------------------------------
# derived graphs
# ---------------------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ r ^ (1 << u) for u, r in enumerate(g.rows)))


def induced(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on s, plus the position -> original-vertex map.

    The map lets witnesses found in the subgraph be lifted back to g.
    Contiguous vertex ranges take a shift-only fast path, which matters
    for the recognizers on graphs with thousands of vertices.
    """
    order = _check_subset(g, s)
    k = len(order)
    if k and order[-1] - order[0] == k - 1:
        lo = order[0]
        m = (1 << k) - 1
        return Graph(k, tuple((g.rows[v] >> lo) & m for v in order)), tuple(order)
    pos = {v: i for i, v in enumerate(order)}
    smask = mask_of(order)
    rows = []
    for v in order:
        r = g.rows[v] & smask
        mm = 0
        while r:
            b = r & -r
            mm |= 1 << pos[b.bit_length() - 1]
            r ^= b
        rows.append(mm)
    return Graph(k, tuple(rows)), tuple(order)


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    """Rename vertex v to perm[v]; perm must be a permutation of range(n)."""
    p = list(perm)
    if sorted(p) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex set")
    rows = [0] * g.n
    for u in range(g.n):
        r = g.rows[u]
        nr = 0
        while r:
            b = r & -r
            nr |= 1 << p[b.bit_length() - 1]
            r ^= b
        rows[p[u]] = nr
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# vertex-set predicates
# ---------------------------------------------------------------------------

COMPLETE = "complete"
ANTICOMPLETE = "anticomplete"
MIXED = "mixed"


def set_relation(g: Graph, a: Iterable[int], b: Iterable[int]) -> str:
    """Classify all cross pairs between disjoint sets a and b.

    Returns "complete" if every cross pair is an edge, "anticomplete" if
    none is, "mixed" otherwise.  With no cross pairs at all (an empty
    side) the vacuous answer is "complete".  Overlapping sets are
    rejected.
    """
    am = mask_of(_check_subset(g, a))
    bm = mask_of(_check_subset(g, b))
    if am & bm:
        raise ValueError("set_relation requires disjoint sets")
    if not am or not bm:
        return COMPLETE
    saw_edge = saw_gap = False
    m = am
    while m:
        lb = m & -m
        m ^= lb
        inter = g.rows[lb.bit_length() - 1] & bm
        if inter:
            saw_edge = True
        if inter != bm:
            saw_gap = True
        if saw_edge and saw_gap:
            return MIXED
    return COMPLETE if not saw_gap else ANTICOMPLETE


def complete_to(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff every pair in a x b is an edge (vacuously true)."""
    bm = mask_of(b)
    return all(g.rows[v] & bm == bm for v in set(a))


def anticomplete_to(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff no pair in a x b is an edge (vacuously true)."""
    bm = mask_of(b)
    return all(g.rows[v] & bm == 0 for v in set(a))


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(_check_subset(g, s))
    r = m
    while r:
        b = r & -r
        r ^= b
        if g.rows[b.bit_length() - 1] & m != m ^ b:
            return False
    return True


def is_stable(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(_check_subset(g, s))
    r = m
    while r:
        b = r & -r
        r ^= b
        if g.rows[b.bit_length() - 1] & m:
            return False
    return True


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Maximal connected vertex sets, each sorted, ordered by minimum vertex."""
    remaining = (1 << g.n) - 1
    rows = g.rows
    comps = []
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= rows[b.bit_length() - 1]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        comps.append(tuple(bit_list(comp)))
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(connected_components(g)) == 1


# ---------------------------------------------------------------------------
# small standard graphs
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    return complement(empty_graph(n))


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# ---------------------------------------------------------------------------
# graph6 (bit-exact: 6-bit groups, column-major upper triangle)
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def serialize_graph6(g: Graph) -> str:
    """Encode in graph6: N(n) then the upper triangle by columns
    (0,1),(0,2),(1,2),(0,3),... packed big-endian into bytes 63..126."""
    n = g.n
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    elif n <= 258047:
        out.append(126)
        out.extend((n >> s & 63) + 63 for s in (12, 6, 0))
    elif n <= 68719476735:
        out.extend((126, 126))
        out.extend((n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0))
    else:
        raise FormatError("graph too large for graph6")
    acc = 0
    nbits = 0
    rows = g.rows
    for v in range(1, n):
        rv = rows[v]
        for u in range(v):
            acc = acc << 1 | (rv >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optional >>graph6<< header).

    Rejects illegal characters, a record whose length does not match its
    size prefix, and non-zero padding bits.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise FormatError("illegal character in graph6 string") from exc
    if any(b < 63 or b > 126 for b in data):
        raise FormatError("illegal character in graph6 string")
    if data[0] != 126:
        n = data[0] - 63
        idx = 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise FormatError("truncated graph6 size prefix")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        if n < 63:
            raise FormatError("malformed graph6 size prefix")
        idx = 4
    else:
        if len(data) < 8:
            raise FormatError("truncated graph6 size prefix")
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        if n < 258048:
            raise FormatError("malformed graph6 size prefix")
        idx = 8
    k = n * (n - 1) // 2
    body = data[idx:]
    if len(body) != (k + 5) // 6:
        raise FormatError(
            f"graph6 record length {len(body)} does not match n={n}")
    rows = [0] * n
    pos = 0
    v = 1
    u = 0
    for byte in body:
        bits = byte - 63
        for shift in range(5, -1, -1):
            if pos < k:
                if bits >> shift & 1:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                pos += 1
                u += 1
                if u == v:
                    v += 1
                    u = 0
            elif bits >> shift & 1:
                raise FormatError("non-zero padding bits in graph6 record")
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# edge-list text format: "n m" then m lines "u v"; '#' starts a comment
# ---------------------------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise FormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc
    if m != len(lines) - 1:
        raise FormatError(f"header says {m} edges, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"bad edge line {line!r}") from exc
    try:
        return make_graph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def serialize_edgelist(g: Graph) -> str:
    edges = edge_list(g)
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"
