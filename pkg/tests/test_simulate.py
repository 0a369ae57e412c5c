import pytest

from rggdim import (
    DegenerateResult,
    EstimationFailedError,
    InvalidInputError,
    SimConfig,
    TestResult,
    estimate_rejection_rate,
    run_replicate,
)
from rggdim.simulate import SimReport, estimate_many


def test_replicate_is_deterministic():
    cfg = SimConfig(80, 1, 0.1, 1, seed=5)
    assert run_replicate(cfg, 3) == run_replicate(cfg, 3)
    assert run_replicate(cfg, 3) != run_replicate(cfg, 4)


def test_empty_graph_replicate_is_degenerate():
    out = run_replicate(SimConfig(5, 1, 0.0, 1), 0)
    assert isinstance(out, DegenerateResult)


def test_replicate_dn_scaled_is_integer():
    cfg = SimConfig(100, 1, 0.10, 1, seed=1)
    for k in range(5):
        res = run_replicate(cfg, k)
        assert isinstance(res, TestResult)
        assert (res.d_n * 4**res.m0).is_integer()


def test_all_degenerate_fails():
    with pytest.raises(EstimationFailedError):
        estimate_rejection_rate(SimConfig(6, 2, 0.0, 1, reps=3))


@pytest.mark.parametrize("kwargs", [dict(reps=0), dict(n=3), dict(m0=0), dict(alpha=0.0), dict(r=0.7)])
def test_config_validation(kwargs):
    base = dict(n=20, m=1, r=0.1, m0=1)
    base.update(kwargs)
    with pytest.raises(InvalidInputError):
        SimConfig(**base)


def test_report_accounting():
    rep = SimReport(SimConfig(20, 1, 0.1, 1, reps=10), rejections=2, degenerate_count=2)
    assert rep.valid_reps == 8
    assert rep.rejection_rate == 0.25
    assert rep.std_error == pytest.approx((0.25 * 0.75 / 8) ** 0.5)


def test_independent_of_schedule():
    cfgs = [SimConfig(40, m, 0.2, 1, reps=37, seed=9) for m in (1, 2)]
    serial = estimate_many(cfgs, workers=1, chunk=50)
    assert estimate_many(cfgs, workers=1, chunk=4) == serial
    assert estimate_many(cfgs, workers=3, chunk=5) == serial
    for rep in serial:
        assert rep.rejections + (rep.valid_reps - rep.rejections) + rep.degenerate_count == rep.config.reps


def test_one_replicate():
    rep = estimate_rejection_rate(SimConfig(30, 1, 0.2, 1, reps=1, seed=2))
    assert rep.rejection_rate in (0.0, 1.0)


def test_power_nondecreasing_in_n():
    reps = [estimate_rejection_rate(SimConfig(n, 2, 0.10, 1, reps=200, seed=11)) for n in (70, 100, 130)]
    for a, b in zip(reps, reps[1:]):
        assert b.rejection_rate >= a.rejection_rate - 2 * max(a.std_error, b.std_error, 1e-3)
