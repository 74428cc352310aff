"""The int64 grid engine against the Fraction reference path, plus
run_checks behavior."""

from fractions import Fraction as Q

import pytest

from grifchar import (
    RootSystemSpec,
    SweepConfig,
    adjoint_weight_system,
    deligne_gram,
    grif_pairings_closed,
    grif_pairings_direct,
    irrep_weight_system,
    length_invariant,
    root_system,
    run_checks,
    weight_pairing_sum,
)
from grifchar.sweep import (
    _RepContext,
    _baseline_pairings,
    dominant_mu_grid,
    dominant_weight_grid,
)


@pytest.mark.parametrize("family,rank", [("A", 1), ("A", 2), ("B", 2),
                                         ("C", 2), ("G", 2)])
def test_engine_matches_reference(rs_factory, family, rank):
    """Every det-scaled engine quantity equals the exact Fraction one."""
    rs = rs_factory(family, rank)
    det = rs.cartan_det
    mus = dominant_mu_grid(rank, 2)
    systems = [adjoint_weight_system(rs)] + [
        irrep_weight_system(rs, lam) for lam in dominant_weight_grid(rank, 2)
    ]
    for ws in systems:
        ctx = _RepContext(rs, ws)
        assert list(ctx.s_all) == [weight_pairing_sum(ws, r) for r in rs.roots]
        assert ctx.length_invariant == length_invariant(ws)
        gram = deligne_gram(ws)
        for i in range(rank):
            for j in range(rank):
                assert Q(int(ctx.gram[i][j]), det * det) == gram[i][j]
        gd = _baseline_pairings(ctx, mus)
        for t, mu in enumerate(mus.tolist()):
            ref = grif_pairings_direct(ws, tuple(mu))
            assert tuple(Q(int(x), det) for x in gd[t]) == ref
            assert ref == grif_pairings_closed(ws, tuple(mu))


def test_run_checks_green_and_deterministic():
    cfg = SweepConfig(
        families=(RootSystemSpec("A", 2), RootSystemSpec("B", 2),
                  RootSystemSpec("G", 2)),
        max_weight_coord=2,
        max_mu_coord=2,
        include_adjoint=True,
        seed=7,
        weyl_samples=5,
    )
    rep1 = run_checks(cfg)
    rep2 = run_checks(cfg)
    assert rep1.ok
    assert rep1.tallies == rep2.tallies
    assert rep1.reps_tested == rep2.reps_tested == 3 * 9
    assert all(f == 0 for _, f in rep1.tallies.values())


def test_run_checks_parallel_agrees_with_serial(monkeypatch):
    cfg = SweepConfig(
        families=(RootSystemSpec("A", 1), RootSystemSpec("A", 2),
                  RootSystemSpec("C", 2)),
        max_weight_coord=1,
        max_mu_coord=2,
        include_adjoint=True,
        weyl_samples=3,
    )
    serial = run_checks(cfg, workers=1)
    parallel = run_checks(cfg, workers=2)
    assert serial.tallies == parallel.tallies
    assert serial.mus_tested == parallel.mus_tested
    # worker count may also come from the environment
    monkeypatch.setenv("GRIF_THREADS", "2")
    from_env = run_checks(cfg)
    assert from_env.tallies == serial.tallies


def test_adjoint_only_config():
    cfg = SweepConfig(
        families=(RootSystemSpec("F", 4),),
        adjoint_only=True,
        max_mu_coord=1,
        weyl_samples=2,
    )
    rep = run_checks(cfg)
    assert rep.ok
    assert rep.reps_tested == 1
    assert rep.mus_tested == 15


def test_empty_grid():
    cfg = SweepConfig(families=(RootSystemSpec("A", 1),), max_weight_coord=0)
    rep = run_checks(cfg)
    assert rep.reps_tested == 0
    assert rep.ok


def test_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(families=(RootSystemSpec("A", 1),), max_mu_coord=-1)


def test_mu_grid_shape_and_order():
    grid = dominant_mu_grid(2, 1)
    assert grid.tolist() == [[0, 1], [1, 0], [1, 1]]
    assert dominant_mu_grid(1, 0).shape == (0, 1)


def test_corrupted_multiplicities_are_flagged():
    """A weight system with a tampered multiplicity must trip the suite
    and leave a counterexample behind."""
    import random

    from grifchar import WeightSystem
    from grifchar.sweep import SweepReport, _check_rep

    rs = root_system("A", 2)
    ws = adjoint_weight_system(rs)
    weights = dict(ws.weights)
    weights[(2, -1)] += 1  # breaks Weyl invariance and the zero sum
    bad = WeightSystem(rs, "ad", weights, ws.dimension + 1)
    cfg = SweepConfig(families=(RootSystemSpec("A", 2),), weyl_samples=4)
    report = SweepReport()
    _check_rep(_RepContext(rs, bad), dominant_mu_grid(2, 1), report, cfg,
               None, random.Random(0))
    assert not report.ok
    assert report.counts("weight_sum_zero") == (0, 1)
    assert report.counts("dimension_formula") == (0, 1)
    assert report.failures
    assert report.failures[0]["system"] == "A2"
