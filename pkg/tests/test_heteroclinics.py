"""Rebellion traces, symbol words, concatenation, and swarms."""

import numpy as np
import pytest

from kuramoto_rebellions import (
    LEFT,
    RIGHT,
    Partition,
    SwarmSpec,
    classify_state,
    concat_rebellions,
    lift,
    parse_symbols,
    perturb_near_target,
    predicted_phase_shift,
    run_swarm,
    swarm_initial_condition,
    three_cluster_target,
    trace_rebellion,
    wrap_angle,
)
from kuramoto_rebellions.errors import UnconstructibleSwarmError

ALPHA_311 = np.array([3.0, 1.0, 1.0]) / 5.0
TWO_PI = 2.0 * np.pi


def wrap_gaps(states):
    """Rebel and slim phases relative to the fat phase, mod 2*pi."""
    d2 = (states[:, 1] - states[:, 0]) % TWO_PI
    d3 = (states[:, 2] - states[:, 0]) % TWO_PI
    return d2, d3


class TestSymbols:
    def test_parse(self):
        assert parse_symbols("+-+") == (RIGHT, LEFT, RIGHT)
        assert parse_symbols("+ - +") == (RIGHT, LEFT, RIGHT)

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_symbols("")
        with pytest.raises(ValueError):
            parse_symbols("+x")

    def test_str_roundtrip(self):
        assert "".join(str(s) for s in parse_symbols("+--+")) == "+--+"

    def test_values(self):
        assert int(RIGHT) == 1 and int(LEFT) == -1


class TestPerturbNearTarget:
    def test_target_normalization(self):
        x = three_cluster_target(ALPHA_311)
        assert abs(ALPHA_311 @ x) <= 1e-14
        assert x[0] == pytest.approx((0.8 - 1.0) * np.pi)
        assert x[2] - x[0] == pytest.approx(np.pi)

    def test_instance_values(self):
        # s = + offsets the rebel by -eps_mag and the fat by +alpha2/alpha1*eps_mag
        y = perturb_near_target(ALPHA_311, RIGHT, eps_mag=1e-2)
        x = three_cluster_target(ALPHA_311)
        eps = y - x
        assert eps[1] == pytest.approx(-1e-2)
        assert eps[0] == pytest.approx(1e-2 / 3.0)
        assert eps[2] == 0.0

    def test_normalization_preserved(self):
        for s in (LEFT, RIGHT):
            y = perturb_near_target(ALPHA_311, s, eps_mag=1e-2)
            assert abs(ALPHA_311 @ y) <= 1e-14

    def test_symbol_flip_negates_offsets(self):
        x = three_cluster_target(ALPHA_311)
        plus = perturb_near_target(ALPHA_311, RIGHT) - x
        minus = perturb_near_target(ALPHA_311, LEFT) - x
        assert np.allclose(plus, -minus, atol=1e-15)


class TestPredictedPhaseShift:
    def test_single_one_man_rebel(self):
        assert predicted_phase_shift([RIGHT], [1 / 21]) == pytest.approx(np.pi / 21)

    def test_cancellation(self):
        assert predicted_phase_shift([RIGHT, LEFT], [0.1, 0.1]) == pytest.approx(0.0)

    def test_ten_symbol_word(self):
        word = parse_symbols("+-+--+-+++")
        shift = predicted_phase_shift(word, [1 / 21] * 10)
        assert shift == pytest.approx(2 * np.pi / 21)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            predicted_phase_shift([RIGHT], [0.1, 0.2])


@pytest.fixture(scope="module")
def traces():
    return {
        s: trace_rebellion(ALPHA_311, s, delta_stop=1e-2, eps_mag=1e-2)
        for s in (RIGHT, LEFT)
    }


@pytest.fixture(scope="module")
def chain():
    # N = 7, |J0| = 4, word of full slim length (ends in synchrony)
    return concat_rebellions(7, range(4), "+-+")


class TestTraceRebellion:
    def test_stop_condition_met(self, traces):
        for res in traces.values():
            x_end = res.trajectory.states[0]
            assert abs(wrap_angle(x_end[1] - x_end[2])) < 1e-2
            assert res.stop_time < 0.0
            assert np.isfinite(res.stop_time)

    def test_endpoint_is_source_equilibrium(self, traces):
        for res in traces.values():
            x_end = res.trajectory.states[0]
            # fat antipodal to the merged rebel/slim pair
            assert abs(wrap_angle(x_end[1] - x_end[0] - np.pi)) <= 5e-2
            assert abs(wrap_angle(x_end[2] - x_end[0] - np.pi)) <= 5e-2
            assert res.trajectory.R_values[0] == pytest.approx(0.2, abs=5e-2)

    def test_orderings_match_symbols(self, traces):
        d2, d3 = wrap_gaps(traces[RIGHT].trajectory.states)
        assert np.all(d2 < d3)  # right: x1 < x2 < x3
        d2, d3 = wrap_gaps(traces[LEFT].trajectory.states)
        assert np.all(d3 < d2)  # left: x1 < x3 < x2

    def test_shift_law(self, traces):
        for s, res in traces.items():
            assert res.predicted_shift == pytest.approx(float(s) * 0.2 * np.pi)
            assert abs(res.observed_shift - res.predicted_shift) <= 5e-2

    def test_R_monotone_forward(self, traces):
        for res in traces.values():
            assert np.all(np.diff(res.trajectory.R_values) >= -1e-8)

    def test_both_symbols_reach_same_source_class(self, traces):
        r_left = traces[LEFT].trajectory.R_values[0]
        r_right = traces[RIGHT].trajectory.R_values[0]
        assert r_left == pytest.approx(r_right, abs=1e-3)

    def test_fat_set_monotone_via_lift(self):
        part = Partition.consecutive([3, 1, 1])
        res = trace_rebellion(ALPHA_311, RIGHT, partition=part)
        assert res.source.fat_set == frozenset(range(3))
        assert res.target.fat_set == frozenset(range(4))
        src = classify_state(lift(part, res.trajectory.states[0]), tol=5e-2)
        tgt = classify_state(lift(part, res.trajectory.states[-1]), tol=5e-2)
        assert src.fat_set < tgt.fat_set

    def test_fraction_validation(self):
        with pytest.raises(ValueError):
            trace_rebellion(np.array([0.4, 0.3, 0.3]), RIGHT)  # alpha1 <= 1/2
        with pytest.raises(ValueError):
            trace_rebellion(np.array([0.6, 0.4, 0.1]), RIGHT)  # sum != 1

    def test_one_man_21_shift(self):
        alpha = np.array([11.0, 1.0, 9.0]) / 21.0
        res = trace_rebellion(alpha, LEFT)
        assert abs(res.observed_shift + np.pi / 21) <= 5e-2


class TestConcat:
    def test_segment_count_and_kinds(self, chain):
        assert len(chain.segments) == 3
        kinds = [eq.kind for eq in chain.equilibria]
        assert kinds == ["two_cluster", "two_cluster", "two_cluster", "synchrony"]
        fats = [len(eq.fat_set) if eq.fat_set else 7 for eq in chain.equilibria]
        assert fats == [4, 5, 6, 7]

    def test_rebel_selection_rule(self, chain):
        # lowest-numbered slim oscillator rebels first
        assert chain.rebels == (4, 5, 6)

    def test_cumulative_shift(self, chain):
        assert chain.predicted_shift == pytest.approx(np.pi / 7)
        assert abs(chain.cumulative_shift - chain.predicted_shift) <= 3 * 5e-2

    def test_anchored_at_standard_source(self, chain):
        x0 = chain.trajectory.states[0]
        assert x0[0] == pytest.approx((4 / 7 - 1) * np.pi, abs=1e-9)

    def test_terminates_at_synchrony(self, chain):
        assert chain.trajectory.R_values[-1] > 0.999
        assert chain.trajectory.R_values[0] == pytest.approx(1 / 7, abs=5e-2)

    def test_stitched_passes_near_intermediate_equilibria(self, chain):
        for ell, (row0, _) in enumerate(chain.segment_rows):
            theta = chain.trajectory.states[row0]
            eq = classify_state(theta, tol=5e-2)
            assert eq is not None and eq.kind == "two_cluster"
            assert eq.fat_set == chain.equilibria[ell].fat_set

    def test_boundary_residuals_small(self, chain):
        assert len(chain.boundary_residuals) == 2
        assert max(chain.boundary_residuals) <= 5e-2

    def test_times_strictly_increasing(self, chain):
        assert np.all(np.diff(chain.trajectory.times) > 0)

    def test_segmentwise_R_monotone(self, chain):
        for seg in chain.segments:
            assert np.all(np.diff(seg.trajectory.R_values) >= -1e-8)

    def test_opposite_words_give_opposite_shifts(self):
        up = concat_rebellions(7, range(4), "++")
        down = concat_rebellions(7, range(4), "--")
        assert abs(up.cumulative_shift - 2 * np.pi / 7) <= 0.1
        assert abs(down.cumulative_shift + 2 * np.pi / 7) <= 0.1

    def test_validation(self):
        with pytest.raises(ValueError):
            concat_rebellions(7, range(3), "+")  # not a majority
        with pytest.raises(ValueError):
            concat_rebellions(7, range(4), "++++")  # word longer than slim set


class TestSwarmInitialCondition:
    def spec21(self, **kw):
        return SwarmSpec(
            n=21,
            fat_source=frozenset(range(11)),
            fat_target=frozenset(range(20)),
            m_star=kw.pop("m_star", 5),
            **kw,
        )

    def test_fixed_blocks_exact(self):
        theta = swarm_initial_condition(self.spec21())
        assert np.ptp(theta[:11]) == 0.0  # constant on the source fat set
        assert theta[20] == pytest.approx(20 / 21 * np.pi)
        assert theta[0] == pytest.approx(-np.pi / 21)

    def test_rebel_offsets_zero_average_and_signs(self):
        spec = self.spec21()
        theta = swarm_initial_condition(spec)
        offsets = theta[11:20] - (-np.pi / 21)
        assert abs(offsets.mean()) <= 1e-14
        # first m_star - 1 = 4 transit between the majority angles
        # (positive offsets); the remaining 5 on the outer arc (negative)
        assert np.all(offsets[:4] > 0) and np.all(offsets[4:] < 0)
        assert np.max(np.abs(offsets)) == pytest.approx(spec.epsilon)
        # strictly graded so the nine rebels stay distinct
        assert np.all(np.diff(offsets[:4]) > 0)
        assert np.all(np.diff(offsets[4:]) > 0)

    def test_whole_state_keeps_normalization(self):
        theta = swarm_initial_condition(self.spec21())
        assert abs(theta.sum()) <= 1e-13

    def test_one_sided_split_rejected(self):
        with pytest.raises(UnconstructibleSwarmError):
            swarm_initial_condition(self.spec21(m_star=1))
        with pytest.raises(UnconstructibleSwarmError):
            swarm_initial_condition(self.spec21(m_star=10))

    def test_unilateral_mode(self):
        spec = self.spec21(m_star=1, unilateral=+1)
        theta = swarm_initial_condition(spec)
        offsets = theta[11:20] - (-np.pi / 21)
        assert np.all(offsets > 0)
        spread = offsets - offsets.mean()
        assert np.max(np.abs(spread)) <= 0.011 * spec.epsilon
        assert len(set(np.round(offsets, 12))) == 9  # pairwise distinct

    def test_seeded_jitter_deterministic(self):
        a = swarm_initial_condition(self.spec21(), seed=3)
        b = swarm_initial_condition(self.spec21(), seed=3)
        c = swarm_initial_condition(self.spec21(), seed=4)
        assert np.array_equal(a, b)
        assert not np.array_equal(a, c)
        offsets = a[11:20] - (-np.pi / 21)
        assert abs(offsets.mean()) <= 1e-14
        assert np.all(offsets[:4] > 0) and np.all(offsets[4:] < 0)

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            SwarmSpec(n=21, fat_source=frozenset(range(11)),
                      fat_target=frozenset(range(21)), m_star=2)
        with pytest.raises(ValueError):
            SwarmSpec(n=21, fat_source=frozenset(range(10)),
                      fat_target=frozenset(range(20)), m_star=2)
        with pytest.raises(ValueError):
            SwarmSpec(n=21, fat_source=frozenset(range(11)),
                      fat_target=frozenset(range(10)), m_star=2)


class TestRunSwarmSmall:
    def test_seven_oscillator_swarm(self):
        # two rebels, one on each side: the fat phase does not drift
        spec = SwarmSpec(
            n=7,
            fat_source=frozenset(range(4)),
            fat_target=frozenset(range(6)),
            m_star=2,
        )
        res = run_swarm(spec)
        x = res.trajectory.states
        assert res.details["n_right"] == 1 and res.details["n_left"] == 1
        assert res.predicted_shift == 0.0
        assert abs(res.observed_shift) <= 5e-2
        # gauge: source anchored at its standard representative
        assert x[0, 0] == pytest.approx((4 / 7 - 1) * np.pi, abs=1e-12)
        # exact fixed-subspace membership all along
        assert res.details["max_fixed_block_spread"] <= 1e-9
        # forward endpoint sits at the target 2-cluster (antipodal pair)
        gap = wrap_angle(x[-1, -1] - x[-1, 0] - np.pi)
        assert abs(gap) <= 5e-2

    def test_unilateral_drift(self):
        spec = SwarmSpec(
            n=7,
            fat_source=frozenset(range(4)),
            fat_target=frozenset(range(6)),
            m_star=1,
            unilateral=+1,
        )
        res = run_swarm(spec)
        assert res.predicted_shift == pytest.approx(2 * np.pi / 7)
        assert abs(res.observed_shift - res.predicted_shift) <= 0.1
