import pytest

import config
from branch_analysis import (
    B1_VECTOR,
    BranchCase,
    BranchingVector,
    BranchingVerificationError,
    branching_number,
    branching_vector_of,
    case_to_graph,
    characteristic_residual,
    enumerate_b2_cases,
    enumerate_b3_cases,
    mirror_case,
    verify_all,
)
from edit_enum import minimal_editing_sets
from graph_core import P4Occurrence, is_bicluster, is_induced_p4

WORST_VECTOR = (2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 4)
WORST_CASE = BranchCase("B2", 0b0001, 0b00010)


@pytest.fixture(scope="module")
def report():
    return verify_all()


# -----------------------
# Enumeração
# -----------------------
def test_b2_case_count_and_order():
    cases = enumerate_b2_cases()
    assert len(cases) == 450 == 15 * 30
    assert cases[0] == BranchCase("B2", 0b0001, 0b00001)
    assert WORST_CASE in cases
    assert len(set(cases)) == 450


def test_b3_cases():
    cases = enumerate_b3_cases()
    assert len(cases) == 15
    for c in cases:
        g = case_to_graph(c)
        assert g.degree(5) == 1
        assert 2 <= g.degree(4) <= 5


def test_case_validation():
    with pytest.raises(ValueError):
        BranchCase("B2", 0, 0b00001)
    with pytest.raises(ValueError):
        BranchCase("B2", 0b0001, 0b10000)
    with pytest.raises(ValueError):
        BranchCase("B3", 0b0001, 0b00001)


def test_case_graphs():
    assert case_to_graph(WORST_CASE).edges == ((0, 1), (0, 4), (1, 2), (1, 5), (2, 3))
    assert case_to_graph(BranchCase("B3", 0b1111, 0b10000)).edge_count == 8
    for c in enumerate_b2_cases() + enumerate_b3_cases():
        g = case_to_graph(c)
        assert is_induced_p4(g, P4Occurrence(0, 1, 2, 3))
        assert not is_bicluster(g)


def test_mirror_reduce():
    reduced = enumerate_b2_cases(mirror_reduce=True)
    assert len(reduced) < 450
    assert WORST_CASE in reduced
    assert mirror_case(mirror_case(WORST_CASE)) == WORST_CASE
    assert mirror_case(WORST_CASE) == BranchCase("B2", 0b1000, 0b00100)
    assert len(enumerate_b3_cases(mirror_reduce=True)) < 15


# -----------------------
# Vetores
# -----------------------
def test_worst_case_vector():
    assert branching_vector_of(WORST_CASE).decrements == WORST_VECTOR


def test_vectors_match_fmin_sizes_and_are_positive():
    for c in enumerate_b2_cases() + enumerate_b3_cases():
        vector = branching_vector_of(c)
        assert vector.decrements == tuple(sorted(minimal_editing_sets(case_to_graph(c)).sizes))
        assert min(vector.decrements) >= 1
        assert len(vector) <= 2 ** 15


def test_reversal_symmetry():
    for c in enumerate_b2_cases() + enumerate_b3_cases():
        assert branching_vector_of(c) == branching_vector_of(mirror_case(c))


def test_vector_validation():
    with pytest.raises(ValueError):
        BranchingVector(())
    with pytest.raises(ValueError):
        BranchingVector((0, 1))
    assert str(BranchingVector((3, 1, 2))) == "(1,2,3)"


# -----------------------
# Números de ramificação
# -----------------------
def test_branching_number_examples():
    assert branching_number(B1_VECTOR) == pytest.approx(3.0, abs=1e-9)
    assert branching_number(BranchingVector((1,))) == 1.0
    worst = branching_number(BranchingVector(WORST_VECTOR))
    assert 3.11 < worst <= 3.116
    assert abs(characteristic_residual(BranchingVector(WORST_VECTOR), worst)) < 1e-9


def test_branching_number_accepts_plain_sequences():
    assert branching_number((1, 2)) == pytest.approx((1 + 5 ** 0.5) / 2, abs=1e-9)
    with pytest.raises(ValueError):
        branching_number(())


def test_shrinking_a_decrement_never_lowers_the_root():
    base = BranchingVector((2, 2, 3))
    for i in range(len(base)):
        shrunk = list(base.decrements)
        if shrunk[i] > 1:
            shrunk[i] -= 1
            assert branching_number(BranchingVector(tuple(shrunk))) > branching_number(base)


def test_residuals_for_every_case(report):
    for result in report.results:
        assert result.number >= 1
        assert abs(characteristic_residual(result.vector, result.number)) < 1e-9


# -----------------------
# Relatório
# -----------------------
def test_report_maximum(report):
    assert report.passed
    assert report.maximum <= 3.116 + 1e-6
    assert "B2-1000-01000" in report.argmax
    assert "B2-0001-00100" in report.argmax
    assert report.maximum == pytest.approx(report.rule_maximum("B2"))
    assert report.rule_maximum("B3") <= 3.116 + 1e-6
    assert report.rule_maximum("B1") == pytest.approx(3.0, abs=1e-9)


def test_report_lines(report):
    lines = report.lines()
    assert len(lines) == 1 + 450 + 15 + 2
    assert lines[0] == "B1 triangle vector=(1,1,1) root=3.000000"
    assert lines[-1].startswith("MAX 3.11")
    assert lines[-1].endswith("CASE B2-1000-01000")
    assert lines[-2].startswith("CASES raw B1=1 B2=450 B3=15")


def test_report_dataframe(report):
    df = report.to_dataframe()
    assert len(df) == 466
    assert list(df.columns) == ["rule", "case", "p_mask", "q_mask", "vector", "size", "branching_number"]
    assert df["branching_number"].max() == pytest.approx(report.maximum)


def test_mirror_reduced_report_keeps_maximum(report):
    reduced = verify_all(mirror_reduce=True)
    assert len(reduced.results) < len(report.results)
    assert reduced.maximum == pytest.approx(report.maximum)


def test_only_b1():
    only = verify_all(("b1",))
    assert len(only.results) == 1
    assert only.maximum == pytest.approx(3.0, abs=1e-9)


def test_bound_violation_is_reported(monkeypatch):
    monkeypatch.setattr(config, "BRANCHING_BOUND", 3.0)
    with pytest.raises(BranchingVerificationError):
        verify_all(("b2",))
    assert not verify_all(("b2",), strict=False).passed
