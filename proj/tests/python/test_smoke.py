import pytest

import pp4q


def test_counts_match_reference():
    rows = pp4q.counts(5, 10)
    assert rows[10]["s"] == 4201
    assert rows[9] == {"n": 9, "a": 378, "b": 609, "c": 16, "d": 239, "e": 370, "s": 1615}


def test_sums_and_matrix_route_agree():
    rows = pp4q.sums(5, 10)
    assert rows[9]["a"] == 7650
    assert rows[10]["s"] == 583665
    assert pp4q.sums_by_matrix(5, 10) == rows


def test_closed_forms():
    assert pp4q.closed_form_counts(5, 10)["s"] == 4201
    assert pp4q.closed_form_shat(5, 10) == 583665


def test_level_labels_sum_to_shat():
    level = pp4q.build_level(5, 6)
    assert len(level) == 101
    total = sum(level.label(i) for i in range(len(level)))
    assert total == pp4q.sums(5, 6)[6]["s"] == 1641
    assert level.value_sums()["s"] == total
    assert level.census()["s"] == 101


def test_labels_match_oracle():
    level = pp4q.build_level(6, 5)
    for i in range(len(level)):
        m = level.row(i)
        assert level.label(i) == pp4q.oracle_label(6, m, level.index_in_row(i), 5 - m)


def test_ascendants_are_previous_level_indices():
    level = pp4q.build_level(5, 3)
    below = pp4q.build_level(5, 2)
    for i in range(len(level)):
        for a in level.ascendants(i):
            assert 0 <= a < len(below)
    with pytest.raises(IndexError):
        level.label(len(level))


def test_generating_functions():
    assert pp4q.gf_series(5, "shat", 5) == [1, 3, 9, 29, 103]
    d = pp4q.gf(5, "s")
    assert d["denominator"] == [1, -5, 8, -5, 1]


def test_growth_ratio():
    gr = pp4q.growth_ratio(5)
    assert gr["exact"] == "3 + sqrt(2)"
    assert gr["decimal"].startswith("4.414213562373095")
    with pytest.raises(ValueError):
        pp4q.growth_ratio(4)


def test_euclidean_counts():
    rows = pp4q.euclidean_counts(6)
    assert [r["s"] for r in rows] == [1, 3, 6, 10, 15, 21, 28]
    assert [r["shat"] for r in rows] == [3**n for n in range(7)]


def test_verify_report():
    report = pp4q.verify(5, 8)
    assert report["all_passed"] is True
    assert report["exit_code"] == 0
    assert report["elapsed_seconds"] > 0
    assert {e["id"] for e in report["errata"]} >= {"dhat-feed-hatted", "closed-form-d"}


def test_verify_printed_d_feed():
    report = pp4q.verify(5, 4, printed_d_feed=True)
    assert report["printed_d_feed"] is True
    assert report["all_passed"] is False
    assert report["exit_code"] == 1
    failed = {c["name"] for c in report["checks"] if not c["passed"]}
    assert "label-sums-match-sum-system" in failed


def test_capacity_refusal():
    assert pp4q.level_size_bound(5, 6) == 101
    with pytest.raises(RuntimeError):
        pp4q.build_level(5, 6, cap=100)
