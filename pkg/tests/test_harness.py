import pytest

from wheelfree.graph import cycle_graph, serialize_graph6
from wheelfree.harness import (
    AgreementReport,
    check_theorem,
    enumerate_labeled,
    graph_from_mask,
    run_exhaustive,
    run_graph6_lines,
    run_sampled,
)
from wheelfree.oracle import F1
from wheelfree.recognizer import NOT_FREE


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_labeled(3)) == 8
    assert sum(1 for _ in enumerate_labeled(4)) == 64
    assert sum(1 for _ in enumerate_labeled(0)) == 1


def test_enumeration_is_duplicate_free():
    seen = {serialize_graph6(g) for g in enumerate_labeled(4)}
    assert len(seen) == 64


def test_enumeration_rejects_large_n():
    with pytest.raises(ValueError):
        next(enumerate_labeled(8))


def test_graph_from_mask_matches_pair_order():
    # mask bit 0 is the (0,1) edge, bit 2 is (1,2)
    g = graph_from_mask(3, 0b101)
    from wheelfree.graph import edge_list
    assert edge_list(g) == [(0, 1), (1, 2)]


def test_check_theorem_on_c5():
    rec = check_theorem(cycle_graph(5), run_condition1=True)
    assert rec.condition1 is False and rec.condition2 is False
    assert rec.verdict == "five-hole" and rec.certificate_ok and rec.agree


def test_check_theorem_on_f1():
    rec = check_theorem(F1, run_condition1=True)
    assert rec.condition1 and rec.condition2
    assert rec.verdict == NOT_FREE and rec.certificate_ok and rec.agree


def test_exhaustive_up_to_5_has_no_disagreements():
    rep = run_exhaustive(5)
    assert rep.graphs_checked == 1 + 1 + 2 + 8 + 64 + 1024
    assert rep.condition1_checked == rep.graphs_checked
    assert rep.disagreements == () and rep.certificate_failures == ()
    assert rep.ok


def test_parallel_report_is_deterministic():
    a = run_sampled(8, 300, 0.5, seed=5, jobs=1)
    b = run_sampled(8, 300, 0.5, seed=5, jobs=2)
    assert a == b
    assert a.graphs_checked == 300 and a.ok


def test_sampled_zero_count():
    rep = run_sampled(10, 0, 0.5, seed=1)
    assert rep.graphs_checked == 0 and rep.ok


def test_run_graph6_lines_corpus():
    lines = [serialize_graph6(g) for g in enumerate_labeled(4)]
    rep = run_graph6_lines(lines)
    assert rep.graphs_checked == 64 and rep.ok


def test_report_json_shape():
    rep = run_exhaustive(2)
    import json

    doc = json.loads(rep.to_json())
    assert doc["graphs_checked"] == 4
    assert doc["disagreements"] == [] and doc["ok"]


def test_report_equality_is_value_based():
    assert run_exhaustive(3) == run_exhaustive(3)
    assert isinstance(run_exhaustive(2), AgreementReport)
