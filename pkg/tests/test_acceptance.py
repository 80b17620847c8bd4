"""The release gate: every acceptance criterion at full scale with its
stated time budget.  Each test prints its pass line so a bare pytest run
doubles as the acceptance report."""

import time

import pytest

from quadparts import acceptance


def _run(criterion, budget_seconds):
    name, fn = criterion
    start = time.monotonic()
    ok, detail = fn(False)
    elapsed = time.monotonic() - start
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail} ({elapsed:.1f}s)")
    assert ok, detail
    assert elapsed < budget_seconds, f"{name} took {elapsed:.1f}s, budget {budget_seconds}s"


def test_criterion_1_exhaustive_main():
    _run(acceptance.CRITERIA[0], budget_seconds=300)


def test_criterion_2_trace_invariants():
    _run(acceptance.CRITERIA[1], budget_seconds=300)


def test_criterion_3_counterexamples():
    _run(acceptance.CRITERIA[2], budget_seconds=60)


def test_criterion_4_tree_bound():
    _run(acceptance.CRITERIA[3], budget_seconds=10)


def test_criterion_5_label_algebra():
    _run(acceptance.CRITERIA[4], budget_seconds=5)


def test_criterion_6_oracle_differential():
    _run(acceptance.CRITERIA[5], budget_seconds=600)


def test_criterion_7_tree_partition_suite():
    _run(acceptance.CRITERIA[6], budget_seconds=60)


def test_criterion_8_exploration_smoke():
    _run(acceptance.CRITERIA[7], budget_seconds=300)


def test_run_all_reports_every_criterion(capsys):
    ok = acceptance.run_all(fast=True)
    out = capsys.readouterr().out
    assert ok
    assert out.count("[PASS]") == len(acceptance.CRITERIA)
