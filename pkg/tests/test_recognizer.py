import random
from dataclasses import replace

import pytest

from wheelfree.graph import (
    complement,
    complete_graph,
    connected_components,
    cycle_graph,
    empty_graph,
    make_graph,
    path_graph,
)
from wheelfree.oracle import (
    C4,
    C5,
    F2,
    PATTERNS,
    contains_pattern,
    find_holes,
    find_small_antiwheel,
    find_small_wheel,
)
from wheelfree.recognizer import (
    CLASS_A,
    CLASS_B,
    CLASS_C,
    FIVE_HOLE,
    NOT_FREE,
    SPLIT,
    Classification,
    ClassCDecomposition,
    classification_error,
    classify,
    is_k_hole,
    recognize_class_a,
    recognize_class_b,
    recognize_class_c,
    split_partition,
    verify_classification,
)
from wheelfree.generators import (
    gen_class_a,
    gen_class_b,
    gen_class_c,
    gen_random,
    gen_split,
)
from wheelfree.harness import enumerate_labeled


def oracle_split(g):
    """Independent split test: no induced 2K2, C4 or C5."""
    return all(contains_pattern(g, PATTERNS[p]) is None
               for p in ("2K2", "C4", "C5"))


# -- k-holes -----------------------------------------------------------------

def test_c5_is_a_5_hole():
    assert is_k_hole(C5, 5)


def test_c5_plus_isolated_is_not():
    g = make_graph(6, [(i, (i + 1) % 5) for i in range(5)])
    assert not is_k_hole(g, 5)


def test_k5_is_not_a_5_hole():
    assert not is_k_hole(complete_graph(5), 5)


def test_is_k_hole_validates_k():
    with pytest.raises(ValueError):
        is_k_hole(C4, 4)


# -- split recognition -------------------------------------------------------

def test_p4_split_partition():
    part = split_partition(path_graph(4))
    assert part is not None
    assert part.clique == (1, 2) and part.stable == (0, 3)


def test_c4_is_not_split():
    # degrees (2,2,2,2): m = 3 and 6 != 3*2 + 2
    assert split_partition(C4) is None


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_graphs_are_split(n):
    part = split_partition(complete_graph(n))
    assert part.clique == tuple(range(n)) and part.stable == ()


def test_empty_graph_is_split():
    part = split_partition(empty_graph(0))
    assert part == split_partition(empty_graph(0))
    assert split_partition(empty_graph(4)) is not None


def test_split_formula_matches_oracle_exhaustively_n5():
    for g in enumerate_labeled(5):
        part = split_partition(g)
        assert (part is not None) == oracle_split(g)
        if part is not None:
            assert verify_classification(g, Classification(SPLIT, part, False))


def test_split_on_random_split_graphs():
    for seed in range(200):
        g = gen_split(10, 0.5, seed)
        part = split_partition(g)
        assert part is not None
        assert verify_classification(g, Classification(SPLIT, part, False))


# -- class A -----------------------------------------------------------------

def test_class_a_round_trip():
    g = gen_class_a(3, "c")
    dec = recognize_class_a(g)
    assert dec is not None
    assert verify_classification(g, Classification(CLASS_A, dec, False))


def test_c4_is_not_class_a():
    assert recognize_class_a(C4) is None


def test_minimal_class_a_member():
    g = gen_class_a(1, "none")
    assert g.n == 6
    assert recognize_class_a(g) is not None
    assert find_small_wheel(g) is None
    assert find_small_antiwheel(g) is None


@pytest.mark.parametrize("x_size,e_mode", [(1, "none"), (2, "d"), (4, "c")])
def test_class_a_members_are_free(x_size, e_mode):
    g = gen_class_a(x_size, e_mode)
    assert recognize_class_a(g) is not None
    assert classify(g).verdict != NOT_FREE
    assert find_small_wheel(g) is None and find_small_antiwheel(g) is None


# -- class B -----------------------------------------------------------------

def test_class_b_round_trip():
    g = gen_class_b(2, [1, 1], [1, 1], z_size=2, w_size=1)
    assert g.n == 7  # sum of the role sizes: 2 + 2 + 2 + 1
    dec = recognize_class_b(g)
    assert dec is not None
    assert verify_classification(g, Classification(CLASS_B, dec, False))
    assert dec.Z != () and dec.W != ()


def test_2k2_is_not_class_b():
    g = make_graph(4, [(0, 1), (2, 3)])
    assert recognize_class_b(g) is None


def test_k22_is_class_b_with_empty_z_w():
    g = gen_class_b(1, [2], [2])
    dec = recognize_class_b(g)
    assert dec is not None
    assert dec.Z == () and dec.W == ()
    assert dec.x == 0 and dec.y == 2


# -- class C -----------------------------------------------------------------

def test_c4_is_class_c():
    dec = recognize_class_c(C4)
    assert dec is not None
    assert verify_classification(C4, Classification(CLASS_C, dec, False))
    assert dec.X == (0, 1) and dec.Y == (2, 3)
    assert {dec.m1, dec.m2} == {(1, 2), (0, 3)}


def test_2k2_is_not_class_c():
    g = make_graph(4, [(0, 1), (2, 3)])
    assert recognize_class_c(g) is None


def test_class_c_round_trip():
    g = gen_class_c(4, 3)
    dec = recognize_class_c(g)
    assert dec is not None
    assert {dec.m1, dec.m2} == {(0, 4), (1, 5)}


def test_class_c_members_have_few_co_components():
    # the basis for refusing graphs whose complement has many components
    for x in range(2, 7):
        for y in range(2, 7):
            g = gen_class_c(x, y)
            assert len(connected_components(complement(g))) <= 2


def test_complete_graph_is_not_class_c():
    assert recognize_class_c(complete_graph(6)) is None
    assert recognize_class_c(complete_graph(14)) is None  # co-component fallback


# -- classify ----------------------------------------------------------------

def test_classify_c5():
    cls = classify(C5)
    assert cls.verdict == FIVE_HOLE and not cls.complemented


def test_classify_c7_not_free_antiwheel():
    cls = classify(cycle_graph(7))
    assert cls.verdict == NOT_FREE
    assert cls.certificate.in_complement


def test_classify_f2_not_free_wheel():
    cls = classify(F2)
    assert cls.verdict == NOT_FREE
    w = cls.certificate
    assert not w.in_complement and len(w.hole.cycle) == 4


def test_classify_degenerate_graphs_are_split():
    for g in (empty_graph(0), empty_graph(1), empty_graph(5)):
        assert classify(g).verdict == SPLIT


def test_classify_six_antihole_is_complemented():
    cls = classify(complement(cycle_graph(6)))
    assert cls.verdict == "six-hole" and cls.complemented


def test_classify_respects_precedence_on_c5():
    # C5 is self-complementary-free; precedence picks the direct verdict
    assert classify(C5).complemented is False


# -- verification ------------------------------------------------------------

def test_classify_then_verify_on_random_graphs():
    rng = random.Random(17)
    for _ in range(300):
        g = gen_random(rng.randrange(0, 9), rng.choice((0.2, 0.5, 0.8)),
                       rng.randrange(1 << 30))
        cls = classify(g)
        assert verify_classification(g, cls)


def test_tampered_class_c_matching_rejected():
    dec = recognize_class_c(C4)
    bad = ClassCDecomposition(dec.X, dec.Y, dec.m1, dec.m1)
    reason = classification_error(C4, Classification(CLASS_C, bad, False))
    assert reason is not None


def test_class_c_with_three_cross_edges_rejected():
    g = make_graph(4, [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3)])
    dec = ClassCDecomposition((0, 1), (2, 3), (0, 2), (1, 3))
    reason = classification_error(g, Classification(CLASS_C, dec, False))
    assert reason is not None and "cross edges" in reason


def test_moved_vertex_between_sides_rejected():
    g = gen_class_c(3, 3)
    dec = recognize_class_c(g)
    bad = ClassCDecomposition(dec.X[:-1], tuple(sorted(dec.Y + dec.X[-1:])),
                              dec.m1, dec.m2)
    assert not verify_classification(g, Classification(CLASS_C, bad, False))


def test_weak_hub_witness_rejected():
    from wheelfree.oracle import Hole, WheelWitness

    g = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)])
    w = WheelWitness(Hole((0, 1, 2, 3)), 4, False)
    assert not verify_classification(g, Classification(NOT_FREE, w, False))


def test_out_of_range_certificate_is_invalid_not_a_crash():
    from wheelfree.recognizer import SplitPartition

    bad = Classification(SPLIT, SplitPartition((0, 9), (1, 2)), False)
    assert classification_error(path_graph(3), bad) is not None


def test_verifier_accepts_any_valid_certificate():
    # complemented split certificates never come out of classify, but the
    # verifier accepts them when the complement really is split
    g = complement(path_graph(4))
    part = split_partition(path_graph(4))
    assert verify_classification(g, Classification(SPLIT, part, True))


# -- structural soundness ----------------------------------------------------

def test_structural_verdicts_have_no_small_witness():
    rng = random.Random(23)
    checked = 0
    for _ in range(400):
        g = gen_random(rng.randrange(0, 9), rng.choice((0.3, 0.5, 0.7)),
                       rng.randrange(1 << 30))
        cls = classify(g)
        if cls.verdict != NOT_FREE:
            checked += 1
            assert find_small_wheel(g) is None
            assert find_small_antiwheel(g) is None
    assert checked > 50


def test_hub_bound_on_structural_graphs():
    # any vertex outside any hole of a structurally classified graph has
    # at most two neighbors on that hole
    rng = random.Random(29)
    checked = 0
    for _ in range(300):
        g = gen_random(rng.randrange(4, 9), 0.5, rng.randrange(1 << 30))
        if classify(g).verdict == NOT_FREE:
            continue
        checked += 1
        for host in (g, complement(g)):
            for hole in find_holes(host, 4, host.n):
                hmask = 0
                for v in hole.cycle:
                    hmask |= 1 << v
                for w in range(host.n):
                    if not hmask >> w & 1:
                        assert (host.rows[w] & hmask).bit_count() <= 2
    assert checked > 20
