"""Structural classification with independently checkable certificates.

``classify`` decides, for any simple graph, whether it is one of the six
structural shapes (a 5-hole, a 6-hole, a split graph, or a member of
the classes A/B/C below, possibly after complementing) and produces the
decomposition; otherwise it produces an explicit small wheel or antiwheel
witness.  The two outcomes are exhaustive: a graph escapes every
structural shape exactly when it contains a wheel or antiwheel on at most
seven vertices.

The classes:

* class A: a 4-hole a-b-c-d plus a non-empty clique X complete to {c,d}
  and anticomplete to {a,b}, plus one vertex e complete to X,
  anticomplete to {a,b}, with at most one neighbor in {c,d};
* class B: stable sets X, Y, Z, W where X u Y induces a connected chain
  bipartite graph with |X|,|Y| >= 2, a vertex x in X complete to Y and a
  vertex y in Y complete to X, every Z vertex has neighborhood exactly
  {x,y}, and W is isolated;
* class C: two cliques of size >= 2 joined by exactly two independent
  cross edges.

Recognizers are correct by verification: every candidate decomposition
is re-checked against the full class invariants (via the same
``classification_error`` used for external certificates) before it is
returned.  ``classification_error`` itself uses only plain adjacency
predicates, never recognizer internals, so a certificate check does not
trust the code that produced the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import (
    Graph,
    bit_list,
    complement,
    connected_components,
    induced,
    is_connected,
    mask_of,
)
from .oracle import WheelWitness, find_small_wheel, verify_witness
from .chain import (
    OddCycle,
    bipartition,
    dominating_vertices,
    incomparable_pair,
)

FIVE_HOLE = "five-hole"
SIX_HOLE = "six-hole"
SPLIT = "split"
CLASS_A = "class-a"
CLASS_B = "class-b"
CLASS_C = "class-c"
NOT_FREE = "not-free"

STRUCTURAL_VERDICTS = (FIVE_HOLE, SIX_HOLE, SPLIT, CLASS_A, CLASS_B, CLASS_C)

# a valid class-C member has at most 2 complement components (a universal
# vertex would force both matching edges through itself), so any bound
# >= 2 is sound; 12 keeps the bipartition sweep trivially cheap
_MAX_CO_COMPONENTS = 12


class ClassificationError(RuntimeError):
    """No structural decomposition and no small witness: impossible."""


@dataclass(frozen=True)
class SplitPartition:
    clique: tuple[int, ...]
    stable: tuple[int, ...]


@dataclass(frozen=True)
class ClassADecomposition:
    a: int
    b: int
    c: int
    d: int
    e: int
    X: tuple[int, ...]


@dataclass(frozen=True)
class ClassBDecomposition:
    X: tuple[int, ...]
    Y: tuple[int, ...]
    Z: tuple[int, ...]
    W: tuple[int, ...]
    x: int
    y: int


@dataclass(frozen=True)
class ClassCDecomposition:
    X: tuple[int, ...]
    Y: tuple[int, ...]
    m1: tuple[int, int]
    m2: tuple[int, int]


@dataclass(frozen=True)
class Classification:
    """Tagged certificate; ``complemented`` says which host the structural
    certificate lives in (a wheel witness carries its own flag instead)."""

    verdict: str
    certificate: object
    complemented: bool


# ---------------------------------------------------------------------------
# individual recognizers
# ---------------------------------------------------------------------------

def is_k_hole(g: Graph, k: int) -> bool:
    """Is g itself a chordless cycle on exactly k vertices (k = 5 or 6)?"""
    if k not in (5, 6):
        raise ValueError("only 5- and 6-holes are meaningful here")
    if g.n != k or any(r.bit_count() != 2 for r in g.rows):
        return False
    return is_connected(g)


def _cycle_order(g: Graph) -> tuple[int, ...]:
    """Vertices of a 2-regular connected graph in cyclic order from 0."""
    prev, cur = 0, min(bit_list(g.rows[0]))
    order = [0]
    while cur != 0:
        order.append(cur)
        a, b = bit_list(g.rows[cur])
        prev, cur = cur, b if a == prev else a
    return tuple(order)


def split_partition(g: Graph) -> Optional[SplitPartition]:
    """Degree-sequence split test, with the partition it induces.

    With d_1 >= ... >= d_n and m = max{i : d_i >= i-1}, the graph is
    split iff sum(d_1..d_m) = m(m-1) + sum(d_{m+1}..d_n); the m
    top-degree vertices are then the clique candidate.  When the
    threshold degree d_m equals m-1 the boundary vertex can sit on
    either side, so a failed verification gets one fix-up pass (move a
    deficient vertex out, or swap it for an outside vertex of threshold
    degree) before the candidate is rejected.
    """
    n = g.n
    if n == 0:
        return SplitPartition((), ())
    order = sorted(range(n), key=lambda v: (-g.rows[v].bit_count(), v))
    d = [g.rows[v].bit_count() for v in order]
    m = 0
    for i in range(1, n + 1):
        if d[i - 1] >= i - 1:
            m = i
    if sum(d[:m]) != m * (m - 1) + sum(d[m:]):
        return None
    clique = order[:m]
    stable = order[m:]
    part = _verified_split(g, clique, stable)
    if part is not None:
        return part
    if m >= 1 and d[m - 1] == m - 1:
        cm = mask_of(clique)
        deficient = [v for v in clique if (g.rows[v] & cm).bit_count() < m - 1]
        for v in deficient:
            rest = [u for u in clique if u != v]
            part = _verified_split(g, rest, stable + [v])
            if part is not None:
                return part
            for w in stable:
                if g.rows[w].bit_count() != m - 1:
                    continue
                wm = mask_of(rest)
                if g.rows[w] & wm == wm:
                    part = _verified_split(
                        g, rest + [w], [u for u in stable if u != w] + [v])
                    if part is not None:
                        return part
    raise RuntimeError("degree test says split but no partition verified")


def _verified_split(g: Graph, clique: list[int],
                    stable: list[int]) -> Optional[SplitPartition]:
    part = SplitPartition(tuple(sorted(clique)), tuple(sorted(stable)))
    if classification_error(g, Classification(SPLIT, part, False)) is None:
        return part
    return None


def recognize_class_a(g: Graph) -> Optional[ClassADecomposition]:
    """Find a class-A decomposition if one exists.

    In any member, the hole vertices a and b both have degree exactly 2,
    so scanning ordered adjacent degree-2 pairs and reading off d and c
    as their other neighbors covers every possible role assignment.
    """
    n = g.n
    if n < 6:
        return None
    rows = g.rows
    full = (1 << n) - 1
    for a in range(n):
        if rows[a].bit_count() != 2:
            continue
        for b in bit_list(rows[a]):
            if rows[b].bit_count() != 2:
                continue
            d = (rows[a] ^ (1 << b)).bit_length() - 1
            c = (rows[b] ^ (1 << a)).bit_length() - 1
            if c == d or not rows[c] >> d & 1:
                continue
            used = 1 << a | 1 << b | 1 << c | 1 << d
            rest = full & ~used
            xmask = rest & rows[c] & rows[d]
            emask = rest & ~xmask
            if not xmask or emask.bit_count() != 1:
                continue
            dec = ClassADecomposition(
                a, b, c, d, emask.bit_length() - 1, tuple(bit_list(xmask)))
            if classification_error(g, Classification(CLASS_A, dec, False)) is None:
                return dec
    return None


def recognize_class_b(g: Graph) -> Optional[ClassBDecomposition]:
    """Find a class-B decomposition if one exists.

    W must be the isolated vertices.  With Z empty the rest has to be a
    connected chain bipartite graph with both sides >= 2 and the special
    pair comes from the dominating vertices.  A non-empty Z consists of
    degree-2 vertices whose two neighbors are adjacent (those can never
    sit inside the stable sides), grouped by that neighbor pair; each
    group is tried as Z with its pair forced as (x, y).
    """
    rows = g.rows
    wmask = 0
    core = []
    for v in range(g.n):
        if rows[v]:
            core.append(v)
        else:
            wmask |= 1 << v
    w = tuple(bit_list(wmask))
    if len(core) < 4:
        return None
    dec = _class_b_on(g, core, w, None, ())
    if dec is not None:
        return dec
    groups: dict[tuple[int, int], list[int]] = {}
    for v in core:
        if rows[v].bit_count() == 2:
            p, q = bit_list(rows[v])
            if rows[p] >> q & 1:
                groups.setdefault((p, q), []).append(v)
    for (p, q), zs in sorted(groups.items()):
        zset = set(zs)
        rest = [v for v in core if v not in zset]
        dec = _class_b_on(g, rest, w, (p, q), tuple(zs))
        if dec is not None:
            return dec
    return None


def _class_b_on(g: Graph, core: list[int], w: tuple[int, ...],
                forced: Optional[tuple[int, int]],
                z: tuple[int, ...]) -> Optional[ClassBDecomposition]:
    if len(core) < 4:
        return None
    sub, back = induced(g, core)
    if not is_connected(sub):
        return None
    b = bipartition(sub)
    if isinstance(b, OddCycle):
        return None
    if len(b.x) < 2 or len(b.y) < 2:
        return None
    if incomparable_pair(sub, b) is not None:
        return None
    if forced is None:
        sx, sy = dominating_vertices(sub, b)
    else:
        inv = {orig: i for i, orig in enumerate(back)}
        sp, sq = inv[forced[0]], inv[forced[1]]
        xset = set(b.x)
        if sp in xset and sq not in xset:
            sx, sy = sp, sq
        elif sq in xset and sp not in xset:
            sx, sy = sq, sp
        else:
            return None
        xm, ym = mask_of(b.x), mask_of(b.y)
        if sub.rows[sx] & ym != ym or sub.rows[sy] & xm != xm:
            return None
    dec = ClassBDecomposition(
        tuple(sorted(back[i] for i in b.x)),
        tuple(sorted(back[i] for i in b.y)),
        tuple(sorted(z)),
        w,
        back[sx],
        back[sy],
    )
    if classification_error(g, Classification(CLASS_B, dec, False)) is None:
        return dec
    return None


def recognize_class_c(g: Graph) -> Optional[ClassCDecomposition]:
    """Find a class-C decomposition if one exists.

    The two cliques are exactly a bipartition of the complement, so the
    sweep runs over the 2^(components-1) complement bipartitions and
    keeps the first with both sides >= 2 and exactly two independent
    cross edges.
    """
    n = g.n
    if n < 4:
        return None
    co = complement(g)
    b = bipartition(co)
    if isinstance(b, OddCycle):
        return None
    comps = connected_components(co)
    if len(comps) > _MAX_CO_COMPONENTS:
        return None
    xm = mask_of(b.x)
    parts = []
    for comp in comps:
        cm = mask_of(comp)
        parts.append((cm & xm, cm & ~xm))
    rows = g.rows
    for flips in range(1 << max(0, len(comps) - 1)):
        xmask = parts[0][0]
        ymask = parts[0][1]
        for i in range(1, len(comps)):
            if flips >> (i - 1) & 1:
                xmask |= parts[i][1]
                ymask |= parts[i][0]
            else:
                xmask |= parts[i][0]
                ymask |= parts[i][1]
        if xmask.bit_count() < 2 or ymask.bit_count() < 2:
            continue
        cross = []
        m = xmask
        while m and len(cross) <= 2:
            lb = m & -m
            m ^= lb
            u = lb.bit_length() - 1
            inter = rows[u] & ymask
            while inter:
                ib = inter & -inter
                inter ^= ib
                cross.append((u, ib.bit_length() - 1))
                if len(cross) > 2:
                    break
        if len(cross) != 2:
            continue
        (u1, v1), (u2, v2) = cross
        if u1 == u2 or v1 == v2:
            continue
        m1 = tuple(sorted((u1, v1)))
        m2 = tuple(sorted((u2, v2)))
        if m2 < m1:
            m1, m2 = m2, m1
        dec = ClassCDecomposition(
            tuple(bit_list(xmask)), tuple(bit_list(ymask)), m1, m2)
        if classification_error(g, Classification(CLASS_C, dec, False)) is None:
            return dec
    return None


# ---------------------------------------------------------------------------
# the classifier
# ---------------------------------------------------------------------------

def classify(g: Graph) -> Classification:
    """Structural verdict or a small wheel/antiwheel witness.

    Precedence is fixed for reproducibility: 5-hole, 6-hole, split,
    class A, B, C on g, then the same on the complement (split is
    skipped there; the complement of a split graph is split).  The
    classes overlap, so other valid certificates may exist; the verifier
    accepts any of them.
    """
    co = complement(g)
    for complemented, host in ((False, g), (True, co)):
        if is_k_hole(host, 5):
            return Classification(FIVE_HOLE, _cycle_order(host), complemented)
        if is_k_hole(host, 6):
            return Classification(SIX_HOLE, _cycle_order(host), complemented)
        if not complemented:
            part = split_partition(g)
            if part is not None:
                return Classification(SPLIT, part, False)
        dec_a = recognize_class_a(host)
        if dec_a is not None:
            return Classification(CLASS_A, dec_a, complemented)
        dec_b = recognize_class_b(host)
        if dec_b is not None:
            return Classification(CLASS_B, dec_b, complemented)
        dec_c = recognize_class_c(host)
        if dec_c is not None:
            return Classification(CLASS_C, dec_c, complemented)
    witness = find_small_wheel(g)
    if witness is None:
        anti = find_small_wheel(co)
        if anti is not None:
            witness = WheelWitness(anti.hole, anti.hub, True)
    if witness is None:
        raise ClassificationError(
            "graph fits no structural shape yet has no small wheel or "
            "antiwheel; this cannot happen for a correct implementation")
    return Classification(NOT_FREE, witness, False)


# ---------------------------------------------------------------------------
# certificate verification (independent of the recognizers)
# ---------------------------------------------------------------------------

def verify_classification(g: Graph, c: Classification) -> bool:
    """Re-check every invariant of the embedded certificate against g."""
    return classification_error(g, c) is None


def classification_error(g: Graph, c: Classification) -> Optional[str]:
    """None if the certificate is valid, else a human-readable reason."""
    if c.verdict == NOT_FREE:
        w = c.certificate
        if not isinstance(w, WheelWitness):
            return "not-free verdict without a wheel witness"
        if not verify_witness(g, w):
            return "wheel witness fails re-verification"
        return None
    host = complement(g) if c.complemented else g
    if c.verdict in (FIVE_HOLE, SIX_HOLE):
        return _check_hole_graph(host, c.certificate,
                                 5 if c.verdict == FIVE_HOLE else 6)
    if c.verdict == SPLIT:
        return _check_split(host, c.certificate)
    if c.verdict == CLASS_A:
        return _check_class_a(host, c.certificate)
    if c.verdict == CLASS_B:
        return _check_class_b(host, c.certificate)
    if c.verdict == CLASS_C:
        return _check_class_c(host, c.certificate)
    return f"unknown verdict {c.verdict!r}"


def _in_range(host: Graph, vs) -> bool:
    return all(isinstance(v, int) and not isinstance(v, bool)
               and 0 <= v < host.n for v in vs)


def _is_partition(host: Graph, sets) -> bool:
    seen = 0
    for s in sets:
        m = mask_of(s)
        if m & seen or len(set(s)) != len(tuple(s)):
            return False
        seen |= m
    return seen == (1 << host.n) - 1


def _clique_mask(host: Graph, m: int) -> bool:
    r = m
    while r:
        b = r & -r
        r ^= b
        if host.rows[b.bit_length() - 1] & m != m ^ b:
            return False
    return True


def _stable_mask(host: Graph, m: int) -> bool:
    r = m
    while r:
        b = r & -r
        r ^= b
        if host.rows[b.bit_length() - 1] & m:
            return False
    return True


def _check_hole_graph(host: Graph, cyc, k: int) -> Optional[str]:
    if not isinstance(cyc, tuple) or len(cyc) != k:
        return f"certificate is not a {k}-cycle"
    if not _in_range(host, cyc) or sorted(cyc) != list(range(k)):
        return "cycle is not a permutation of the vertex set"
    if host.n != k:
        return f"graph has {host.n} vertices, not {k}"
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if bool(host.rows[cyc[i]] >> cyc[j] & 1) != consecutive:
                return "cycle adjacency does not match a chordless cycle"
    return None


def _check_split(host: Graph, part) -> Optional[str]:
    if not isinstance(part, SplitPartition):
        return "certificate is not a split partition"
    if not _in_range(host, part.clique) or not _in_range(host, part.stable):
        return "split partition references vertices out of range"
    if not _is_partition(host, (part.clique, part.stable)):
        return "clique and stable side do not partition the vertex set"
    if not _clique_mask(host, mask_of(part.clique)):
        return "clique side is not a clique"
    if not _stable_mask(host, mask_of(part.stable)):
        return "stable side is not stable"
    return None


def _check_class_a(host: Graph, dec) -> Optional[str]:
    if not isinstance(dec, ClassADecomposition):
        return "certificate is not a class-A decomposition"
    singles = (dec.a, dec.b, dec.c, dec.d, dec.e)
    if not _in_range(host, singles) or not _in_range(host, dec.X):
        return "class-A roles reference vertices out of range"
    if not _is_partition(host, (singles, dec.X)):
        return "class-A roles do not partition the vertex set"
    if not dec.X:
        return "X must be non-empty"
    rows = host.rows
    a, b, c, d, e = singles
    for u, v, want in ((a, b, 1), (b, c, 1), (c, d, 1), (d, a, 1),
                       (a, c, 0), (b, d, 0)):
        if rows[u] >> v & 1 != want:
            return "a,b,c,d do not induce the required 4-hole"
    xm = mask_of(dec.X)
    if not _clique_mask(host, xm):
        return "X is not a clique"
    for v in dec.X:
        if rows[v] >> c & 1 == 0 or rows[v] >> d & 1 == 0:
            return "X is not complete to {c,d}"
        if rows[v] >> a & 1 or rows[v] >> b & 1:
            return "X is not anticomplete to {a,b}"
    if rows[e] & xm != xm:
        return "e is not complete to X"
    if rows[e] >> a & 1 or rows[e] >> b & 1:
        return "e is not anticomplete to {a,b}"
    if (rows[e] >> c & 1) + (rows[e] >> d & 1) > 1:
        return "e has more than one neighbor in {c,d}"
    return None


def _check_class_b(host: Graph, dec) -> Optional[str]:
    if not isinstance(dec, ClassBDecomposition):
        return "certificate is not a class-B decomposition"
    for s in (dec.X, dec.Y, dec.Z, dec.W):
        if not _in_range(host, s):
            return "class-B sets reference vertices out of range"
    if not _is_partition(host, (dec.X, dec.Y, dec.Z, dec.W)):
        return "X,Y,Z,W do not partition the vertex set"
    if len(dec.X) < 2 or len(dec.Y) < 2:
        return "X and Y must both have at least 2 vertices"
    if dec.x not in dec.X or dec.y not in dec.Y:
        return "special vertices x,y must lie in X resp. Y"
    rows = host.rows
    xm, ym, zm = mask_of(dec.X), mask_of(dec.Y), mask_of(dec.Z)
    xym = xm | ym
    for m, label in ((xm, "X"), (ym, "Y"), (zm, "Z")):
        if not _stable_mask(host, m):
            return f"{label} is not stable"
    for v in dec.W:
        if rows[v]:
            return "W vertices must be isolated"
    sub, _ = induced(host, dec.X + dec.Y)
    if not is_connected(sub):
        return "X u Y does not induce a connected graph"
    order = sorted(dec.X, key=lambda v: (-(rows[v] & ym).bit_count(), v))
    for prev, cur in zip(order, order[1:]):
        if rows[cur] & ym & ~rows[prev]:
            return "X u Y is not a chain bipartite graph"
    if rows[dec.x] & ym != ym:
        return "x is not complete to Y"
    if rows[dec.y] & xm != xm:
        return "y is not complete to X"
    other = xym & ~(1 << dec.x) & ~(1 << dec.y)
    for v in dec.Z:
        if rows[v] >> dec.x & 1 == 0 or rows[v] >> dec.y & 1 == 0:
            return "Z is not complete to {x,y}"
        if rows[v] & other:
            return "Z has neighbors in (X u Y) \\ {x,y}"
    return None


def _check_class_c(host: Graph, dec) -> Optional[str]:
    if not isinstance(dec, ClassCDecomposition):
        return "certificate is not a class-C decomposition"
    if not _in_range(host, dec.X) or not _in_range(host, dec.Y):
        return "class-C cliques reference vertices out of range"
    if not _in_range(host, dec.m1) or not _in_range(host, dec.m2):
        return "class-C matching references vertices out of range"
    if not _is_partition(host, (dec.X, dec.Y)):
        return "X and Y do not partition the vertex set"
    if len(dec.X) < 2 or len(dec.Y) < 2:
        return "X and Y must both have at least 2 vertices"
    xm, ym = mask_of(dec.X), mask_of(dec.Y)
    if not _clique_mask(host, xm) or not _clique_mask(host, ym):
        return "X and Y must both be cliques"
    cross = set()
    rows = host.rows
    m = xm
    while m:
        b = m & -m
        m ^= b
        u = b.bit_length() - 1
        inter = rows[u] & ym
        while inter:
            ib = inter & -inter
            inter ^= ib
            cross.add(tuple(sorted((u, ib.bit_length() - 1))))
            if len(cross) > 2:
                return "cross edges between X and Y are not exactly 2"
    claimed = {tuple(sorted(dec.m1)), tuple(sorted(dec.m2))}
    if len(claimed) != 2 or cross != claimed:
        return "cross edges between X and Y do not match the claimed matching"
    if len({dec.m1[0], dec.m1[1], dec.m2[0], dec.m2[1]}) != 4:
        return "matching edges share an endpoint"
    return None
