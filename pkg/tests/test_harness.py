import csv
import io
import json
from fractions import Fraction

import pytest

from qwatson import registry
from qwatson.harness import (
    CSV_COLUMNS, DISCREPANT, FAIL, PASS, SKIP_CONSTRAINT, SKIP_POLE, STATUSES,
    Report, VerificationRecord, cells, classify, compare_cell, run_grid,
)
from qwatson.qalg import ParamPoint
from qwatson.sampler import SampleConfig

from corrupt_jain_watson import CORRUPTED_ID, install

CFG = SampleConfig(seed=11)


@pytest.fixture
def corrupted():
    spec = install()
    yield spec
    registry.unregister(CORRUPTED_ID)


def test_classify():
    one, two = Fraction(1), Fraction(2)
    assert classify(one, one, None) == PASS
    assert classify(one, one, one) == PASS
    assert classify(one, two, None) == FAIL
    assert classify(one, one, two) == FAIL
    assert classify(one, two, one) == DISCREPANT
    assert classify(one, two, two) == FAIL


def test_jain_watson_small_grid():
    rep = run_grid(["jain-watson"], range(3), [0], [0], 1, CFG)
    assert [r.status for r in rep.records] == [PASS] * 3


def test_prop_b_side_condition_cells():
    rep = run_grid(["prop-b"], [1], [0], range(4), 1, CFG)
    assert {r.m: r.status for r in rep.records} == {0: PASS, 1: PASS, 2: SKIP_CONSTRAINT, 3: SKIP_CONSTRAINT}


def test_empty_grid():
    rep = run_grid([], range(3), range(2), range(2), 1, CFG)
    assert rep.records == [] and rep.summary["records"] == 0
    assert rep.summary["total"] == {s: 0 for s in STATUSES}


def test_thm_k_shadow_point():
    spec = registry.get("thm-k")
    p = spec.bind(ParamPoint(Fraction(2, 3), Fraction(3, 5), Fraction(-2, 5), 2, 0, 0))
    rec = compare_cell(spec, p)
    assert rec.status == PASS and rec.lhs == rec.rhs_closed == rec.rhs_derived
    aw = registry.get("andrews-whipple")
    assert rec.lhs == registry.eval_rhs_closed(aw, p)


def test_thm_l_outside_its_range():
    rep = run_grid(["thm-l"], [2], [3], [0], 1, CFG)
    assert rep.records[0].status == SKIP_CONSTRAINT


def test_compare_cell_pole():
    spec = registry.get("thm-k")
    rec = compare_cell(spec, ParamPoint(Fraction(2, 3), Fraction(3, 5), Fraction(5, 3), 2))
    assert rec.status == SKIP_POLE and "thm-k" in rec.note


def test_corrupted_copy_fails_with_both_values(corrupted):
    rep = run_grid([CORRUPTED_ID], range(4), [0], [0], 1, CFG)
    assert rep.records[0].status == PASS  # n = 0 cannot see the corruption
    failing = [r for r in rep.records if r.status == FAIL]
    assert len(failing) == 3
    for r in failing:
        assert r.lhs is not None and r.rhs_closed is not None and r.lhs != r.rhs_closed
    assert not rep.ok


def test_fail_fast_stops_early(corrupted):
    rep = run_grid([CORRUPTED_ID], range(8), [0], [0], 1, CFG, fail_fast=True)
    assert [r.n for r in rep.records] == [0, 1]


def test_summary_counts_match_records():
    rep = run_grid(["thm-b", "thm-l", "equation-aa"], range(4), range(3), range(4), 2, CFG)
    tally = {s: sum(r.status == s for r in rep.records) for s in STATUSES}
    assert rep.summary["total"] == tally
    per = rep.summary["identities"]
    assert sum(sum(v.values()) for v in per.values()) == len(rep.records)
    for r in rep.records:
        if r.status == PASS and r.rhs_derived is not None:
            assert r.rhs_derived == r.lhs == r.rhs_closed


def test_structural_pole_cells_are_reported_as_skips():
    rep = run_grid(["equation-aa"], [1], [0], [2], 1, SampleConfig(seed=0, max_resamples=5))
    assert rep.records[0].status == SKIP_POLE and rep.records[0].resamples == 5


def test_order_independent_of_parallelism():
    ids = ["thm-a", "thm-g", "prop-c", "sear"]
    serial = run_grid(ids, range(4), range(2), range(2), 2, CFG).stable()
    parallel = run_grid(ids, range(4), range(2), range(2), 2, CFG, parallelism=3).stable()
    assert serial.to_json() == parallel.to_json()
    assert [r.sort_key for r in serial.records] == sorted(r.sort_key for r in serial.records)


def test_fixed_shift_entries_run_only_at_their_shift():
    assert cells(["thm-a-ex-l1m1"], [2, 3], range(4), range(4)) == [
        ("thm-a-ex-l1m1", 2, 1, 1), ("thm-a-ex-l1m1", 3, 1, 1)
    ]


def test_report_formats():
    rep = run_grid(["jain-watson", "prop-b"], range(3), [0], range(2), 1, CFG, config_echo={"seed": 11})
    rep.stable()
    doc = json.loads(rep.to_json())
    assert set(doc) == {"config", "summary", "records"}
    first = doc["records"][0]
    assert {"rho", "alpha", "gamma", "q", "a", "c"} <= set(first["point"])
    assert all(r["elapsed_micros"] == 0 for r in doc["records"])
    # json round trip is byte identical
    assert json.dumps(doc, indent=2, ensure_ascii=False) + "\n" == rep.to_json()

    rows = list(csv.reader(io.StringIO(rep.to_csv())))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == len(rep.records) + 1
    assert Fraction(rows[1][6]) == rep.records[0].lhs

    md = rep.to_markdown()
    assert md.index("## jain-watson") < md.index("## prop-b")


def test_markdown_follows_theorem_order():
    rep = run_grid(["thm-a", "prop-a", "andrews-watson"], [0], [0], [0], 1, CFG)
    md = rep.to_markdown()
    assert md.index("## andrews-watson") < md.index("## prop-a") < md.index("## thm-a")


def test_record_serialises_missing_values_as_null():
    rec = VerificationRecord("x", 0, 0, 0, 0, SKIP_CONSTRAINT)
    d = rec.as_dict()
    assert d["lhs"] is None and d["point"] is None


def test_report_sorts_records():
    recs = [VerificationRecord("b", 0, 0, 0, 0, PASS), VerificationRecord("a", 1, 0, 0, 0, PASS),
            VerificationRecord("a", 0, 0, 0, 1, PASS)]
    rep = Report(recs)
    assert [r.sort_key for r in rep.records] == [("a", 0, 0, 0, 1), ("a", 1, 0, 0, 0), ("b", 0, 0, 0, 0)]
