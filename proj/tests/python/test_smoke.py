from fractions import Fraction

import pytest

import flowvol


def test_kpf_and_volume():
    assert flowvol.kpf("3:1-2,2-3", [1, -1, 0]) == 1
    assert flowvol.kpf("3:1-2,1-3,2-3", [1, 1]) == 2
    assert flowvol.volume("car:4", [1, 1, 5]) == 3
    assert flowvol.volume("ps:5", [1, 1, 1, 1]) == 16
    assert len(flowvol.list_flows("3:1-2,1-3,2-3", [1, 1])) == 2


def test_ehrhart_paths_agree():
    for n in range(2, 5):
        for k in range(1, 4):
            closed = flowvol.ehrhart_ps_closed(n, k)
            assert flowvol.ehrhart(f"ps:{n + 1}", k) == closed
            assert flowvol.ct_evaluate(flowvol.ps_ct_expression(n, k)) == closed
            assert flowvol.count_ld(n - 1, k, zeros=0) == closed
    assert flowvol.ehrhart_car_closed(4, 1) == 7
    assert flowvol.count_dld(2, 1) == 7


def test_big_integers_are_python_ints():
    value = flowvol.ehrhart_ps_closed(12, 40)
    assert isinstance(value, int)
    assert value > 2**64


def test_fit_returns_fractions():
    assert flowvol.ehrhart_fit("car:4", 6) == [Fraction(0), Fraction(1, 2), Fraction(3, 2)]


def test_words():
    assert flowvol.enumerate_ld(2, 1, zeros=0) == ["UD1UD1", "UUD1D1"]
    word = "UUD0"
    j = flowvol.ind(word, 1)
    assert (flowvol.ind(flowvol.shift(word, 1), 1) - j - 1) % 2 == 0
    projected, shifts = flowvol.project(word, 1)
    assert projected == "UD0"
    assert (shifts + j) % 2 == 0
    assert flowvol.count_prefixes(2, 1, 1, [1, 0]) == 2


def test_series_and_constraint_agree():
    expr = "m:-1,0; p:1^1,2^1; d:1-2"
    assert flowvol.ct_evaluate(expr) == flowvol.ct_evaluate(expr, "series") == 2


def test_volume_identity():
    oracle, closed = flowvol.volume_identity("P58", 4, a=2, b=3, c=1)
    assert oracle == closed


def test_verify_report():
    report = flowvol.verify("ps-ehrhart", max_n=3, max_k=2)
    assert report["suite"] == "ps-ehrhart"
    assert report["summary"]["fail"] == 0
    assert [c["status"] for c in report["cases"]] == ["PASS"] * 4
    assert "volumes" in flowvol.suite_names()


def test_errors_become_value_errors():
    with pytest.raises(ValueError):
        flowvol.kpf("3:1-2", [1, -1, 0])
    with pytest.raises(ValueError):
        flowvol.count_ld(2, 0)
    with pytest.raises(ValueError):
        flowvol.verify("nope")
