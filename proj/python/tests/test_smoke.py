import math

import numpy as np
import pytest

import groverian as g


def test_product_state_has_unit_pmax():
    amps = np.kron([0.6, 0.8j], [1 / math.sqrt(2), 1 / math.sqrt(2)])
    s = g.PureState(2, amps)
    r = g.groverian(s, g.Partition.full(2))
    assert r.pmax == pytest.approx(1.0, abs=1e-9)
    assert r.g == pytest.approx(0.0, abs=1e-4)


def test_w_state_full_split():
    r = g.measure(g.make_w(3), g.Partition.full(3), routing=g.Routing.optimizer_only)
    assert r.method == g.Method.optimizer
    assert r.pmax == pytest.approx(4 / 9, abs=1e-6)
    assert g.w_pmax(3) == pytest.approx(4 / 9)


def test_bipartite_matches_optimizer():
    s = g.make_random_state(4, 7)
    p = g.Partition.parse("0,2|1,3", 4)
    assert g.optimize(s, p).pmax == pytest.approx(g.bipartite_pmax(s, p), abs=1e-6)


def test_argmax_reproduces_pmax():
    s = g.make_random_state(3, 11)
    res = g.optimize(s, g.Partition.full(3), g.OptimizerConfig(restarts=5, mode=g.UpdateMode.party))
    phi = res.product_state
    assert abs(np.vdot(phi, s.amplitudes)) ** 2 == pytest.approx(res.pmax, abs=1e-12)


def test_gm_profile_is_monotone():
    prof = g.gm_profile(g.make_ghz(4, 1 / math.sqrt(2), 1 / math.sqrt(2)))
    assert prof.monotone()
    assert prof.g[0] == pytest.approx(0.0)


def test_state_round_trip():
    s = g.make_random_state(3, 2)
    back = g.parse_state(g.format_state(s))
    np.testing.assert_allclose(back.amplitudes, s.amplitudes, atol=1e-15)


def test_grover_eta_success():
    run = g.grover_run(g.make_eta(3), 0, 2)
    assert run.success_probability == pytest.approx(math.sin(5 * math.asin(1 / math.sqrt(8))) ** 2)


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        g.PureState(1, np.array([1.0, 1.0]))
    with pytest.raises(ValueError):
        g.Partition.parse("0||1", 2)
    with pytest.raises(g.BudgetError):
        g.g_m(g.make_random_state(12, 1), 4, budget=10)
