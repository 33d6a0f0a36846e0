"""Acceptance criteria, one test each.

Every test prints a single ``ACCEPTANCE <k> PASS|FAIL`` line (visible even
under output capture) and then asserts the outcome.  Run this file directly
to see only these lines.
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from qwatson import registry
from qwatson.cli import main
from qwatson.sampler import SampleConfig, draw_point
from qwatson.registry import eval_lhs, eval_rhs_closed

from oracles import LATTICE, lattice_pairs, parity_values
from properties import check_monomial_multiplicativity, check_phi_termination, check_splitting_law

HERE = Path(__file__).parent
JOBS = min(4, os.cpu_count() or 1)
GRID_FLAGS = ["verify", "--identity", "all", "--n-min", "0", "--n-max", "12", "--ell-max", "3", "--m-max", "3",
              "--points", "3", "--seed", "42"]
DERIVED_IDS = [f"thm-{x}" for x in "abcdefghijklmnop"] + ["prop-a", "prop-b", "prop-c"]
CERTIFIED = ["sear", "terminating-65", "equation-a", "equation-c", "equation-aa", "equivalence-d",
             "dixon-relation-a", "dixon-relation-b", "whipple-relation-a", "whipple-relation-b"]


def verdict(capsys, number, title, check):
    try:
        ok, detail = check()
    except Exception as exc:  # a crash is a failed criterion, reported like one
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    with capsys.disabled():
        print(f"\nACCEPTANCE {number} {'PASS' if ok else 'FAIL'} {title}: {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def full_grid(tmp_path_factory):
    out = tmp_path_factory.mktemp("grid") / "full.json"
    code = main(GRID_FLAGS + ["--jobs", str(JOBS), "--stable-output", "--out", str(out)])
    return code, json.loads(out.read_text())


def test_full_grid(capsys, full_grid):
    def check():
        code, doc = full_grid
        tot = doc["summary"]["total"]
        stray = []
        for r in doc["records"]:
            if r["status"] == "SKIP_CONSTRAINT":
                spec = registry.get(r["identity_id"])
                if not spec.cell_violations(r["n"], r["ell"], r["m"]):
                    stray.append(r["identity_id"])
        ok = code == 0 and tot["FAIL"] == 0 and tot["DISCREPANT"] == 0 and not stray
        ids = len(doc["summary"]["identities"])
        return ok, (f"exit {code}, {ids} identities, {doc['summary']['records']} records, "
                    + ", ".join(f"{k}={v}" for k, v in tot.items())
                    + f", constraint skips outside side conditions={len(stray)}")

    verdict(capsys, 1, "full-grid verification", check)


def test_three_way_agreement(capsys, full_grid):
    def check():
        _, doc = full_grid
        derived_checks = certified = 0
        bad = []
        for r in doc["records"]:
            if r["n"] > 8 or r["status"] in ("SKIP_CONSTRAINT", "SKIP_POLE"):
                continue
            if r["identity_id"] in DERIVED_IDS:
                if r["status"] != "PASS" or r["rhs_derived"] is None or not (
                    r["lhs"] == r["rhs_closed"] == r["rhs_derived"]
                ):
                    bad.append((r["identity_id"], r["n"], r["ell"], r["m"]))
                derived_checks += 1
            elif r["identity_id"] in CERTIFIED:
                if r["status"] != "PASS":
                    bad.append((r["identity_id"], r["n"], r["ell"], r["m"]))
                certified += 1
        ok = not bad and derived_checks > 0 and certified > 0
        return ok, f"{derived_checks} three-way theorem checks, {certified} relation checks, mismatches={bad[:5]}"

    verdict(capsys, 2, "three-way oracle agreement", check)


def test_reduction_lattice(capsys):
    def check():
        cfg = SampleConfig(seed=42)
        bad, count = [], 0
        for general, special, mode in LATTICE:
            for n, gc, sc, gl, sl in lattice_pairs(general, special, mode, 10, 5, cfg):
                count += 1
                if not (gc == sc and gl == sl):
                    bad.append((general, special, n))
        return not bad, f"{len(LATTICE)} reductions, {count} shared-point comparisons, mismatches={bad[:5]}"

    verdict(capsys, 3, "reduction lattice", check)


def test_parity(capsys):
    def check():
        bad, cells = [], set()
        for n, *vals in parity_values(11, 3, SampleConfig(seed=42)):
            cells.add(n)
            if n % 2 and vals != [0, 0, 0, 0]:
                bad.append(n)
            if n % 2 == 0 and not (len(set(vals)) == 1 and vals[0] != 0):
                bad.append(n)
        return not bad and cells == set(range(12)), f"n=0..11, 3 shared points each, bad cells={bad}"

    verdict(capsys, 4, "parity behaviour", check)


def test_examples(capsys):
    def check():
        cfg = SampleConfig(seed=42)
        examples = [s for s in registry.roster() if s.family == "example"]
        bad, count = [], 0
        for ex in examples:
            parent = registry.get(ex.parent)
            for n in range(ex.n_min, 13):
                if ex.cell_violations(n, ex.ell_fixed, ex.m_fixed):
                    continue
                for idx in range(2):
                    p = draw_point(cfg, n, ex.ell_fixed, ex.m_fixed, ex, index=idx)
                    closed = eval_rhs_closed(ex, p)
                    count += 1
                    if not closed == eval_rhs_closed(parent, p) == eval_lhs(ex, p):
                        bad.append((ex.id, n))
        return not bad, f"{len(examples)} examples, {count} comparisons, n<=12, mismatches={bad[:5]}"

    verdict(capsys, 5, "example consistency", check)


def test_determinism(capsys, tmp_path):
    def check():
        flags = ["verify", "--identity", "all", "--n-max", "6", "--ell-max", "2", "--m-max", "2",
                 "--points", "2", "--seed", "42", "--stable-output"]
        blobs = {}
        for name, extra in (("first", ["--jobs", "1"]), ("again", ["--jobs", "1"]), ("jobs8", ["--jobs", "8"])):
            target = tmp_path / f"{name}.json"
            main(flags + extra + ["--out", str(target)])
            blobs[name] = target.read_bytes()
        same_runs = blobs["first"] == blobs["again"]
        same_jobs = blobs["first"] == blobs["jobs8"]
        return same_runs and same_jobs, (f"repeat identical={same_runs}, jobs 1 vs 8 identical={same_jobs}, "
                                         f"{len(blobs['first'])} bytes")

    verdict(capsys, 6, "determinism", check)


def test_negative_path(capsys):
    def check():
        proc = subprocess.run(
            [sys.executable, "corrupt_jain_watson.py", "verify", "--identity", "jain-watson-corrupted",
             "--n-max", "4", "--stable-output"],
            capture_output=True, text=True, cwd=HERE,
        )
        fails = [r for r in json.loads(proc.stdout)["records"] if r["status"] == "FAIL"]
        both = all(r["lhs"] is not None and r["rhs_closed"] is not None and r["lhs"] != r["rhs_closed"]
                   for r in fails)
        ok = proc.returncode == 1 and bool(fails) and both
        sample = f"{fails[0]['lhs']} vs {fails[0]['rhs_closed']}" if fails else "none"
        return ok, f"exit {proc.returncode}, {len(fails)} FAIL records, first: {sample}"

    verdict(capsys, 7, "corrupted fixture fails", check)


def test_core_properties(capsys):
    def check():
        for prop in (check_splitting_law, check_phi_termination, check_monomial_multiplicativity):
            prop(1000)()
        return True, "splitting law, phi termination, monomial multiplicativity: 1000 cases each"

    verdict(capsys, 8, "core algebra properties", check)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
