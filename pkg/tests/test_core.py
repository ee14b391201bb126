"""Core model: vector fields, order parameter, symmetries, lift/project."""

import numpy as np
import pytest

from kuramoto_rebellions import (
    GroupElement,
    IntegrationConfig,
    Partition,
    apply_group,
    cluster_order_parameter,
    cluster_vector_field,
    integrate,
    lift,
    lyapunov_rate,
    normalize_phases,
    order_parameter,
    project,
    rk4_step,
    vector_field,
    wrap_angle,
)
from kuramoto_rebellions.core import ClusterState, as_phase_state
from kuramoto_rebellions.errors import ClusterSpreadError


def random_state(rng, n, scale=np.pi):
    return rng.uniform(-scale, scale, n)


class TestVectorField:
    def test_synchrony_is_equilibrium(self):
        theta = np.full(6, 0.7)
        assert np.allclose(vector_field(theta), 0.0, atol=1e-15)

    def test_antipodal_pair_is_equilibrium(self):
        assert np.allclose(vector_field([0.0, np.pi]), 0.0, atol=1e-15)

    def test_equilateral_linkage_is_equilibrium(self):
        # phasors at 0, 2pi/3, 4pi/3 sum to zero, so every rate vanishes
        theta = np.array([0.0, 2 * np.pi / 3, 4 * np.pi / 3])
        assert np.allclose(vector_field(theta), 0.0, atol=1e-15)

    def test_matches_pairwise_sine_sum(self):
        rng = np.random.default_rng(7)
        for n in (2, 3, 8, 17):
            theta = random_state(rng, n)
            pairwise = np.sin(theta[None, :] - theta[:, None]).mean(axis=1)
            assert np.allclose(vector_field(theta), pairwise, atol=1e-14)

    def test_conservation_law(self):
        rng = np.random.default_rng(11)
        for n in (2, 5, 32, 64):
            theta = random_state(rng, n, scale=20.0)
            assert abs(vector_field(theta).mean()) <= 1e-13

    def test_two_pi_periodicity(self):
        rng = np.random.default_rng(3)
        theta = random_state(rng, 6)
        f0 = vector_field(theta)
        for j in range(6):
            shifted = theta.copy()
            shifted[j] += 2 * np.pi
            assert np.max(np.abs(vector_field(shifted) - f0)) <= 1e-13


class TestClusterVectorField:
    def test_two_cluster_midpoint_is_equilibrium(self):
        for a1 in (0.5, 0.6, 0.9):
            alpha = np.array([a1, 1 - a1])
            x = np.array([0.3, 0.3 + np.pi])
            assert np.allclose(cluster_vector_field(alpha, x), 0.0, atol=1e-15)

    def test_synchrony(self):
        assert np.allclose(
            cluster_vector_field(np.array([3, 1, 1]) / 5, np.zeros(3)), 0.0
        )

    def test_matches_lifted_full_field(self):
        # brute-force oracle: lift to 5 oscillators, evaluate, project back
        rng = np.random.default_rng(5)
        part = Partition.consecutive([3, 1, 1])
        for _ in range(20):
            x = random_state(rng, 3)
            reduced = cluster_vector_field(part, x)
            full = vector_field(lift(part, x))
            assert np.allclose(reduced, project(part, full, tol=1e-12), atol=1e-12)

    def test_weighted_conservation(self):
        rng = np.random.default_rng(9)
        alpha = np.array([0.37, 0.4, 0.23])
        for _ in range(10):
            x = random_state(rng, 3)
            assert abs(alpha @ cluster_vector_field(alpha, x)) <= 1e-14

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            cluster_vector_field(np.array([0.5, 0.5]), np.zeros(3))

    def test_real_fractions_allowed(self):
        alpha = np.array([1 / np.sqrt(2), 1 - 1 / np.sqrt(2)])
        assert cluster_vector_field(alpha, np.array([0.0, 1.0])).shape == (2,)


class TestOrderParameter:
    def test_synchrony_R_is_one(self):
        r, psi = order_parameter(np.full(7, 1.3))
        assert r == pytest.approx(1.0, abs=1e-14)
        assert psi == pytest.approx(1.3, abs=1e-12)

    def test_two_cluster_R(self):
        # fat fraction 3/5 gives R = 2*(3/5) - 1 = 1/5
        theta = np.array([0.0, 0.0, 0.0, np.pi, np.pi])
        assert order_parameter(theta).R == pytest.approx(0.2, abs=1e-14)

    def test_equilateral_linkage_R_is_zero(self):
        theta = np.array([0.0, 2 * np.pi / 3, 4 * np.pi / 3])
        assert order_parameter(theta).R <= 1e-15

    def test_psi_zero_when_R_vanishes(self):
        r, psi = order_parameter(np.array([0.0, np.pi]))
        assert r <= 1e-15
        assert psi == 0.0

    def test_R_at_most_one(self):
        rng = np.random.default_rng(1)
        for _ in range(50):
            assert 0.0 <= order_parameter(random_state(rng, 9)).R <= 1.0

    def test_cluster_weighted(self):
        r, _ = cluster_order_parameter(np.array([0.6, 0.4]), np.array([0.0, np.pi]))
        assert r == pytest.approx(0.2, abs=1e-14)


class TestLyapunovRate:
    def test_zero_at_equilibria(self):
        sync = np.full(5, 0.2)
        two_cluster = np.array([0.0, 0.0, 0.0, np.pi, np.pi])
        linkage = np.array([0.0, 2 * np.pi / 3, 4 * np.pi / 3])
        for theta in (sync, two_cluster, linkage):
            assert lyapunov_rate(theta) <= 1e-14

    def test_positive_off_equilibrium(self):
        rng = np.random.default_rng(23)
        found = 0
        for _ in range(20):
            theta = random_state(rng, 8)
            if order_parameter(theta).R > 0.05:
                assert lyapunov_rate(theta) > 0.0
                found += 1
        assert found > 5

    def test_matches_central_difference(self):
        rng = np.random.default_rng(4)
        h = 1e-5
        for _ in range(20):
            theta = random_state(rng, 10)
            f = vector_field(theta)
            fd = (
                order_parameter(theta + h * f).R - order_parameter(theta - h * f).R
            ) / (2 * h)
            assert lyapunov_rate(theta) == pytest.approx(fd, abs=1e-6)

    def test_monotone_along_trajectory(self):
        rng = np.random.default_rng(17)
        theta = random_state(rng, 12)
        r_prev = order_parameter(theta).R
        for _ in range(2000):
            theta = rk4_step(vector_field, theta, 1e-2)
            r = order_parameter(theta).R
            assert r >= r_prev - 1e-10
            r_prev = r


class TestNormalizeAndGroup:
    def test_normalize_zero_state(self):
        assert np.array_equal(normalize_phases(np.zeros(4)), np.zeros(4))

    def test_normalize_uniform(self):
        assert np.allclose(normalize_phases(np.full(6, np.pi)), 0.0)

    def test_normalize_mean_and_uniform_difference(self):
        rng = np.random.default_rng(2)
        theta = random_state(rng, 9)
        out = normalize_phases(theta)
        assert abs(out.mean()) <= 1e-14
        assert np.allclose(out - theta, (out - theta)[0])

    def test_identity_action(self):
        theta = np.array([0.1, 0.2, 0.3])
        g = GroupElement(sigma=np.arange(3), psi=0.0)
        assert np.array_equal(apply_group(g, theta), theta)

    def test_action_definition(self):
        theta = np.array([0.1, 0.2, 0.3, 0.4])
        sigma = np.array([2, 0, 3, 1])
        out = apply_group(GroupElement(sigma, psi=0.5), theta)
        for j in range(4):
            assert out[sigma[j]] == pytest.approx(theta[j] - 0.5)

    def test_equivariance(self):
        # f(g theta) = sigma f(theta) for 100 random group elements
        rng = np.random.default_rng(42)
        for _ in range(100):
            n = int(rng.integers(2, 12))
            theta = random_state(rng, n, scale=10.0)
            sigma = rng.permutation(n)
            g = GroupElement(sigma, psi=float(rng.uniform(-np.pi, np.pi)))
            lhs = vector_field(apply_group(g, theta))
            rhs = np.empty(n)
            rhs[sigma] = vector_field(theta)
            assert np.max(np.abs(lhs - rhs)) <= 1e-13

    def test_reflection_equivariance(self):
        rng = np.random.default_rng(8)
        for _ in range(20):
            theta = random_state(rng, 7)
            assert np.max(np.abs(vector_field(-theta) + vector_field(theta))) <= 1e-13

    def test_invalid_permutation_rejected(self):
        with pytest.raises(ValueError):
            GroupElement(sigma=np.array([0, 0, 1]))

    def test_size_mismatch(self):
        g = GroupElement(sigma=np.arange(3))
        with pytest.raises(ValueError):
            apply_group(g, np.zeros(4))


class TestPartitionLiftProject:
    def test_partition_validation(self):
        with pytest.raises(ValueError):
            Partition(((0, 1), (1, 2)), 3)  # overlap
        with pytest.raises(ValueError):
            Partition(((0, 1),), 3)  # not covering
        with pytest.raises(ValueError):
            Partition(((0, 1), ()), 2)  # empty block

    def test_fractions(self):
        part = Partition.consecutive([3, 1, 1])
        assert part.sizes == (3, 1, 1)
        assert np.allclose(part.fractions, [0.6, 0.2, 0.2])
        assert sum(part.exact_fractions) == 1

    def test_lift_project_roundtrip_exact(self):
        part = Partition.from_blocks([(0, 2, 4), (1, 3)], 5)
        x = np.array([0.123456, -2.71828])
        assert np.array_equal(project(part, lift(part, x)), x)

    def test_project_spread_error(self):
        part = Partition.consecutive([2, 2])
        theta = np.array([0.0, 1e-6, 1.0, 1.0])
        with pytest.raises(ClusterSpreadError) as err:
            project(part, theta, tol=1e-9)
        assert err.value.block_index == 0
        assert err.value.spread == pytest.approx(1e-6)

    def test_integration_preserves_clustering(self):
        part = Partition.from_blocks([(0, 3), (1, 2, 5), (4,)], 6)
        theta = lift(part, np.array([0.4, -1.0, 2.2]))
        for _ in range(500):
            theta = rk4_step(vector_field, theta, 1e-2)
        for block in part.blocks:
            assert np.ptp(theta[list(block)]) <= 1e-13

    def test_cluster_state_normalization_flag(self):
        part = Partition.consecutive([3, 2])
        x = np.array([2.0, -3.0])  # 0.6*2 - 0.4*3 = 0
        ClusterState(part, x, normalized=True)
        with pytest.raises(ValueError):
            ClusterState(part, np.array([1.0, 1.0]), normalized=True)


class TestReductionConsistency:
    def test_full_vs_reduced_integration(self):
        # clustered initial data: the N- and M-dimensional runs agree
        rng = np.random.default_rng(31)
        part = Partition.from_blocks([(0, 1, 2, 6), (3, 7), (4, 5)], 8)
        x0 = rng.uniform(-np.pi, np.pi, 3)
        cfg = IntegrationConfig(step=1e-2, max_steps=5000, record_every=100)
        full = integrate(vector_field, lift(part, x0), cfg)
        reduced = integrate(
            lambda x: cluster_vector_field(part, x), x0, cfg
        )
        projected = np.array([project(part, th, tol=1e-6) for th in full.states])
        assert np.max(np.abs(projected - reduced.states)) <= 1e-8


class TestPhaseStateValidation:
    def test_rejects_single_angle(self):
        with pytest.raises(ValueError):
            as_phase_state([0.1])

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            as_phase_state([0.0, np.nan])

    def test_wrap_angle_range(self):
        x = np.linspace(-10, 10, 201)
        w = wrap_angle(x)
        assert np.all(w > -np.pi) and np.all(w <= np.pi)
        assert np.allclose(np.exp(1j * w), np.exp(1j * x), atol=1e-12)
        assert wrap_angle(np.pi) == pytest.approx(np.pi)
        assert wrap_angle(-np.pi) == pytest.approx(np.pi)
