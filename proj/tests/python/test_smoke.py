"""End-to-end smoke checks for the python bindings."""

import math

import pytest

import fjhawkes


def test_version():
    assert fjhawkes.__version__ == "0.1.0"


def test_default_config_round_trip():
    cfg = fjhawkes.parse_config("{}")
    assert cfg.n == 5
    assert cfg.alpha == 0.005
    assert cfg.beta == 0.4
    assert cfg.gamma == 0.5
    again = fjhawkes.parse_config(fjhawkes.config_to_json(cfg))
    assert fjhawkes.config_to_json(again) == fjhawkes.config_to_json(cfg)


def test_validation_errors_surface():
    with pytest.raises(fjhawkes.FjhawkesError):
        fjhawkes.parse_config('{"gamma": 1.5}')


def test_simulation_reaches_the_equilibrium():
    sys = fjhawkes.materialize(fjhawkes.parse_config("{}"))
    traj = fjhawkes.run(sys.init, sys.params, sys.net)
    assert traj.verdict == fjhawkes.Verdict.converged

    sol = fjhawkes.solve(sys.params, sys.net, sys.init.t1)
    assert sol.valid
    gap = max(abs(a - b) for a, b in zip(traj.states[-1].trust, sol.t_star))
    assert gap < 1e-7


def test_spectrum_shape_and_stability():
    sys = fjhawkes.materialize(fjhawkes.parse_config("{}"))
    rep = fjhawkes.spectrum(sys.params, sys.net)
    assert len(rep.eigenvalues) == 2 * sys.net.n
    assert math.isclose(rep.rho, abs(rep.eigenvalues[0]), abs_tol=1e-15)
    assert rep.stable == (rep.rho < 1.0)
    mags = [abs(z) for z in rep.eigenvalues]
    assert mags == sorted(mags, reverse=True)


def test_uncoupled_boundary_is_exact():
    cfg = fjhawkes.parse_config('{"n": 3, "alpha": 0}')
    sys = fjhawkes.materialize(cfg)
    res = fjhawkes.find_boundary("beta", sys.params, sys.net, 0.0, 1.0)
    assert res.critical_value == 0.5
    assert res.iterations == 0


def test_generator_is_pinned():
    rng = fjhawkes.RngStream(0, fjhawkes.StreamId.influence)
    assert rng.next_u64() == 0x46B73E79F0C37C00
    assert fjhawkes.RngStream.algorithm() == "splitmix64"


def test_topology_rows_are_stochastic():
    spec = fjhawkes.TopologySpec()
    spec.n = 4
    spec.seed = 7
    w = fjhawkes.generate_w(spec)
    for row in w.to_rows():
        assert all(v >= 0.0 for v in row)
        assert math.isclose(sum(row), 1.0, abs_tol=1e-12)


def test_scan_writes_csv(tmp_path):
    cfg = fjhawkes.parse_config("{}")
    cfg.scan = fjhawkes.ScanSpec()
    cfg.scan.parameter = "beta"
    cfg.scan.lo = 0.0
    cfg.scan.hi = 1.0
    cfg.scan.count = 5
    cfg.output.directory = str(tmp_path)

    rows = fjhawkes.sensitivity_scan(cfg)
    assert len(rows) == 5
    assert [r.value for r in rows] == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert (tmp_path / "scan_beta.csv").exists()
