from __future__ import annotations

import numpy as np
import pytest
from numpy.testing import assert_allclose

from multivalent.errors import ParameterError, UnsupportedDominant
from multivalent.regions import SamplingGrid
from multivalent.reports import dumps
from multivalent.verify import (
    ACCEPTANCE_EXAMPLES,
    EXAMPLES,
    FAMILIES,
    constants_table,
    example_config,
    q_discrepancy_check,
    random_function,
    reproduce_constants,
    run_identity_suite,
    run_implication_trial,
)

SMALL_GRID = SamplingGrid(radii=(0.3, 0.6, 0.9), angular_samples=64)


class TestRandomFunction:
    def test_shape_and_decay(self):
        f = random_function(2, 20, 0.5, seed=1)
        assert f.p == 2 and f.N == 20 and f.coeffs[0] == 1
        k = np.arange(1, 19)
        assert np.all(np.abs(f.coeffs[1:]) <= 0.5**k)

    def test_seed_types_agree(self):
        a = random_function(1, 16, 0.3, seed=5)
        b = random_function(1, 16, 0.3, seed=np.random.default_rng(5))
        assert np.array_equal(a.coeffs, b.coeffs)

    def test_rho_zero_is_monomial(self):
        assert_allclose(random_function(3, 10, 0.0, seed=1).coeffs, [1] + [0] * 7)

    def test_bad_rho(self):
        with pytest.raises(ParameterError):
            random_function(1, 8, 1.0)


def test_identity_suite_small():
    reports = run_identity_suite(trials=4, N=32)
    ids = {r.id for r in reports}
    for fam in FAMILIES:
        assert f"recurrence:{fam}" in ids and f"psi_identity:{fam}" in ids
    assert {"psi_identity_printed:I", "psi_identity_printed:T", "shift_relation:I", "shift_relation:T", "q_discrepancy"} <= ids
    assert all(r.passed for r in reports), [r.summary_line() for r in reports if not r.passed]


def test_identity_suite_rejects_family():
    with pytest.raises(ParameterError):
        run_identity_suite(families=("Z",), trials=1)


def test_q_discrepancy():
    rep = q_discrepancy_check(trials=3)
    assert rep.passed
    assert rep.details["printed_max_error"] >= 0.1


def test_constants():
    rep = reproduce_constants()
    assert rep.passed, rep.violations
    names = {r["name"] for r in constants_table()}
    assert {"k_min", "k_argmin", "k_argmin_half_angle", "sqrt_dominant_radius_I"} <= names


def test_registry():
    assert set(ACCEPTANCE_EXAMPLES) <= set(EXAMPLES)
    with pytest.raises(UnsupportedDominant):
        example_config("nope")
    with pytest.raises(ParameterError):
        example_config("u1", trials=0)


class TestImplication:
    def test_deterministic(self):
        cfg = example_config("u1", trials=6, grid=SMALL_GRID)
        a = dumps(run_implication_trial(cfg))
        b = dumps(run_implication_trial(cfg))
        assert a == b

    def test_jobs_do_not_change_result(self):
        cfg = example_config("c1.14", trials=6, grid=SMALL_GRID)
        assert dumps(run_implication_trial(cfg)) == dumps(run_implication_trial(cfg, jobs=2))

    def test_seed_changes_margins(self):
        a = run_implication_trial(example_config("u1", trials=4, grid=SMALL_GRID, seed=1))
        b = run_implication_trial(example_config("u1", trials=4, grid=SMALL_GRID, seed=2))
        assert a.details["hypothesis_min_margin"] != b.details["hypothesis_min_margin"]

    def test_tiny_rho_approaches_monomial(self):
        # f close to z: Omega close to 1, so the conclusion margin is the margin of psi(0) = 1
        cfg = example_config("ex1.2", trials=3, rho=1e-9, grid=SMALL_GRID)
        rep = run_implication_trial(cfg)
        assert rep.passed and rep.hypothesis_hold_count == 3
        spread = rep.details["hypothesis_max_margin"] - rep.details["hypothesis_min_margin"]
        assert spread <= 1e-6

    def test_experimental_flag(self):
        rep = run_implication_trial(example_config("cr1-example", trials=2, grid=SMALL_GRID))
        assert rep.details.get("experimental") is True
        assert rep.config_echo["min_hypothesis_holds"] == 0

    def test_superordination_probe_is_marked_heuristic(self):
        rep = run_implication_trial(example_config("u1", trials=2, grid=SMALL_GRID, superordination=True))
        assert rep.details["superordination_heuristic"]["rigorous"] is False

    def test_report_json_shape(self):
        rep = run_implication_trial(example_config("elm1.1", trials=2, grid=SMALL_GRID)).to_json()
        assert {"id", "kind", "pass", "max_error", "violations", "samples_tested", "hypothesis_hold_count"} <= set(rep)
        assert rep["kind"] == "implication"
