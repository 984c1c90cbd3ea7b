"""Smoke tests for the sepsys extension module."""

from fractions import Fraction

import pytest

import sepsys


def frac(text):
    return Fraction(text)


def test_graph_roundtrip():
    g = sepsys.cycle_graph(3)
    text = sepsys.render_graph(g)
    back = sepsys.parse_graph(text)
    assert back.node_count == 3
    assert len(back.edges) == 3


def test_classify():
    assert sepsys.classify(sepsys.path_graph(5)) == ("TREE", 0)
    assert sepsys.classify(sepsys.cycle_graph(4)) == ("CYCLE", 1)
    assert sepsys.classify(sepsys.butterfly_graph()) == ("NONSEPARABLE", 2)


def test_counts_and_reliability():
    assert sepsys.spanning_tree_count(sepsys.complete_graph(4)) == "16"
    assert sepsys.edge_connectivity(sepsys.complete_graph(4)) == 3
    probs = ["1/2", "1/2", "1/2"]
    assert frac(sepsys.reliability_closed_form(sepsys.cycle_graph(3), probs)) == Fraction(1, 2)


def test_system_operations():
    sys3 = sepsys.graph_system(sepsys.cycle_graph(3))
    assert sys3.n == 3
    assert sepsys.eval_state(sys3, "110")
    assert not sepsys.eval_state(sys3, "100")
    assert sepsys.minpaths(sys3) == ["011", "101", "110"]
    assert len(sepsys.mincuts(sys3)) == 3
    assert frac(sepsys.reliability(sys3)) == Fraction(1, 2)


def test_separability():
    tree = sepsys.graph_system(sepsys.path_graph(4))
    verdict = sepsys.is_separable(tree)
    assert verdict["outcome"] == "separable"
    assert frac(verdict["margin"]) > 0
    assert sum(frac(w) for w in verdict["hyperplane"]["weights"]) == 1

    bf = sepsys.graph_system(sepsys.butterfly_graph())
    verdict = sepsys.is_separable(bf)
    assert verdict["outcome"] == "nonseparable"
    point = [frac(q) for q in verdict["common_point"]]
    combo = [Fraction(0)] * 6
    for word, weight in verdict["mincut_weights"]:
        for i, bit in enumerate(word):
            if bit == "1":
                combo[i] += frac(weight)
    assert combo == point


def test_sn_family():
    sn = sepsys.sn_family(4)
    assert sepsys.mincuts(sn) == ["0011", "1100"]
    assert sepsys.is_separable(sn)["outcome"] == "nonseparable"


def test_partition():
    yes = sepsys.partition_decide([3, 1, 1, 5])
    assert yes["yes"]
    assert sum([3, 1, 1, 5][i - 1] for i in yes["witness"]) == 5
    no = sepsys.partition_decide([1, 2, 4])
    assert not no["yes"]
    assert frac(no["reliability_diff"]) == 0


def test_dsep():
    bf = sepsys.graph_system(sepsys.butterfly_graph())
    result = sepsys.level_of_separability(bf, 4)
    assert result["found"]
    assert result["d"] == 2
    check = sepsys.verify_certificate(bf, result["certificate"])
    assert check["valid"]

    cert = sepsys.mincut_certificate(bf)
    assert sepsys.verify_certificate(bf, cert)["valid"]


def test_errors():
    with pytest.raises(sepsys.ParseError):
        sepsys.parse_graph("graph 2 1\ne 1 1\n")
    with pytest.raises(sepsys.SepsysError):
        sepsys.system_from_mincuts(2, ["11"])
