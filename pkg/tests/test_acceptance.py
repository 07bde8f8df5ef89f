"""The seven acceptance criteria, one test each.

Every test records a one-line PASS/FAIL verdict; the lines are printed in
the terminal summary (and by ``python3 tests/test_acceptance.py``).
"""

from __future__ import annotations

import math
import subprocess
import sys
import time

import numpy as np

from multivalent.operators import recurrence_check
from multivalent.regions import CLASS_IDS, class_check
from multivalent.series import series
from multivalent.verify import (
    ACCEPTANCE_EXAMPLES,
    FAMILIES,
    q_discrepancy_check,
    random_function,
    random_operator,
    reproduce_constants,
    run_acceptance_examples,
    run_identity_suite,
)

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # pragma: no cover
    ACCEPTANCE_LINES = []


def record(number: int, ok: bool, message: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {message}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_1_recurrences():
    rng = np.random.default_rng(7)
    start = time.perf_counter()
    worst = {}
    for fam in FAMILIES:
        errs = []
        for t in range(50):
            p = (1, 2, 3)[t % 3]
            op = random_operator(fam, p, rng)
            errs.append(recurrence_check(op, random_function(p, 64, 0.5, rng), tol=1e-9).max_error)
        worst[fam] = max(errs)
    elapsed = time.perf_counter() - start
    ok = all(e <= 1e-9 for e in worst.values()) and elapsed <= 5.0
    detail = ", ".join(f"{k}={v:.1e}" for k, v in worst.items())
    record(1, ok, f"recurrence max errors {detail}; {elapsed:.2f} s")


def test_criterion_2_q_discrepancy():
    rep = q_discrepancy_check(p=2, N=64)
    d = rep.details
    record(
        2,
        rep.passed,
        f"printed Q error {d['printed_max_error']:.3f} (need >= 0.1), "
        f"consistent {d['identity_consistent_max_error']:.1e} (need <= 1e-10)",
    )


def test_criterion_3_theorem_identities():
    reports = {r.id: r for r in run_identity_suite(trials=50, N=64, tol=1e-9)}
    wanted = [f"{k}:{fam}" for k in ("log_derivative", "phi_identity", "psi_identity", "bernardi") for fam in FAMILIES]
    wanted += ["psi_identity_printed:I", "psi_identity_printed:T", "shift_relation:I", "shift_relation:T"]
    worst = max(reports[k].max_error for k in wanted)
    failed = [k for k in wanted if not reports[k].passed]
    record(3, not failed, f"{len(wanted)} identity groups x 50 trials, max error {worst:.1e}; failing: {failed or 'none'}")


def test_criterion_4_constants():
    rep = reproduce_constants()
    rows = {r["name"]: r for r in rep.details["table"]}
    needed = ["k_min", "sqrt_k_min", "sqrt_dominant_radius_I"] + [f"delta_mu1_nu1_eta{e}" for e in (0.25, 0.5, 1.0)]
    ok = rep.passed and all(rows[n]["ok"] for n in needed)
    k = rows["k_min"]["computed"]
    record(
        4,
        ok,
        f"min k = {k:.12f} (sqrt 1.5 = {math.sqrt(1.5):.12f}), sqrt = {math.sqrt(k):.6f}, "
        f"I radius = {rows['sqrt_dominant_radius_I']['computed']:.12f}, delta cross-checks ok",
    )


def test_criterion_5_implication_trials():
    start = time.perf_counter()
    reports = run_acceptance_examples(trials=200, rho=0.08, seed=7)
    elapsed = time.perf_counter() - start
    parts = []
    ok = elapsed <= 60.0
    for r in reports:
        good = not r.violations and r.hypothesis_hold_count >= 50
        ok &= good
        parts.append(f"{r.id}: holds={r.hypothesis_hold_count} violations={len(r.violations)}")
    assert [r.id for r in reports] == list(ACCEPTANCE_EXAMPLES)
    record(5, ok, "; ".join(parts) + f"; {elapsed:.1f} s")


def test_criterion_6_class_checker():
    koebe = series(np.arange(1, 513, dtype=float), p=1)
    good = class_check(koebe, "S*", alpha=0.0)
    bad = class_check(koebe, "S*", alpha=0.6)
    trivial = {cid: class_check(series([1.0], p=1, N=16), cid) for cid in CLASS_IDS}
    ok = (
        good.holds
        and good.margin >= 1e-3
        and not bad.holds
        and bad.margin <= -1e-3
        and all(v.holds and v.margin >= 1e-3 for v in trivial.values())
    )
    record(
        6,
        ok,
        f"Koebe S*(0) margin {good.margin:.4f}, S*(0.6) margin {bad.margin:.4f}; "
        f"f = z min margin {min(v.margin for v in trivial.values()):.4f} over {len(trivial)} classes",
    )


def test_criterion_7_determinism():
    cmd = [sys.executable, "-m", "multivalent", "verify", "all", "--trials", "10"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    ok = first.stdout == second.stdout and len(first.stdout) > 0 and first.returncode in (0, 1)
    record(7, ok, f"two 'verify all --trials 10' runs, {len(first.stdout)} bytes each, identical={first.stdout == second.stdout}")


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
