import pytest

from conftest import ref_is_nash
from qbraess.game import (
    best_response_step,
    candidate_paradox_interval,
    detect_braess,
    deviation_payoffs,
    find_nash,
    is_nash,
    paradox_interval,
    paradox_region,
    payoff,
    social_optimum,
)
from qbraess.network import (
    FlowAllocation,
    NetworkConfig,
    PathId,
    average_concurrence,
    enumerate_allocations,
)

C3 = NetworkConfig(3, 0.9)
C3_ORIG = C3.without_cd()
P_SET = [0.4, 0.7, 0.9, 0.95, 1.0]


def test_payoff_examples():
    assert payoff(C3, (6, 0, 0), PathId.ACDB) == pytest.approx(0.828427125, abs=1e-9)
    assert payoff(C3, (0, 3, 3), PathId.ADB) == pytest.approx(0.85, abs=1e-12)
    assert payoff(C3, (1, 2, 3), PathId.ACDB) == pytest.approx(0.981937201, abs=1e-9)


def test_best_response_examples():
    assert best_response_step(C3_ORIG, (0, 4, 2)) == (0, 3, 3)
    assert best_response_step(C3_ORIG, (0, 3, 3)) == (0, 3, 3)
    assert best_response_step(C3, (0, 3, 3)) == (1, 2, 3)
    cur, new = deviation_payoffs(C3_ORIG, (0, 4, 2), PathId.ACB, PathId.ADB)
    assert cur == pytest.approx(0.834646621, abs=1e-9)
    assert new == pytest.approx(0.85, abs=1e-12)


def test_find_nash_examples():
    orig = find_nash(C3_ORIG, (0, 6, 0))
    assert orig.allocation == (0, 3, 3) and orig.converged and orig.is_nash
    assert orig.avg_concurrence == pytest.approx(0.85, abs=1e-12)

    mod = find_nash(C3, (0, 3, 3))
    assert mod.allocation == (6, 0, 0) and mod.converged
    assert mod.avg_concurrence == pytest.approx(0.828427125, abs=1e-9)

    pure_limit = find_nash(NetworkConfig(3, 1.0), (0, 3, 3))
    assert pure_limit.allocation == (0, 3, 3)
    assert pure_limit.avg_concurrence == pytest.approx(1.0, abs=1e-12)


def test_find_nash_default_start_is_original_equilibrium():
    assert find_nash(C3).passes == find_nash(C3, (0, 3, 3)).passes


def test_find_nash_reports_non_convergence():
    report = find_nash(C3, (0, 3, 3), max_passes=2)
    assert not report.converged
    assert report.passes == 2
    assert not report.is_nash


def test_is_nash_examples():
    assert is_nash(C3_ORIG, (0, 3, 3))
    assert not is_nash(C3_ORIG, (0, 4, 2))
    assert is_nash(C3, (6, 0, 0))


@pytest.mark.parametrize("n_half", [1, 2, 3, 5])
@pytest.mark.parametrize("p", P_SET)
@pytest.mark.parametrize("cd", [True, False])
def test_is_nash_matches_brute_force(n_half, p, cd):
    config = NetworkConfig(n_half, p, has_cd_edge=cd)
    for alloc in enumerate_allocations(config):
        assert is_nash(config, alloc) == ref_is_nash(n_half, p, alloc, cd), alloc


@pytest.mark.parametrize("n_half", range(1, 11))
@pytest.mark.parametrize("cd", [True, False])
def test_converged_implies_nash(n_half, cd):
    for p in P_SET:
        config = NetworkConfig(n_half, p, has_cd_edge=cd)
        for start in enumerate_allocations(config):
            report = find_nash(config, start)
            assert report.converged
            assert report.is_nash and is_nash(config, report.allocation)


def test_social_optimum_examples():
    alloc, value = social_optimum(C3_ORIG)
    assert alloc == (0, 3, 3) and value == pytest.approx(0.85, abs=1e-12)
    alloc, value = social_optimum(C3)
    assert alloc == (2, 2, 2)
    assert value == pytest.approx(0.877831303377580747, abs=1e-12)
    alloc, value = social_optimum(NetworkConfig(3, 1.0))
    assert alloc == (0, 3, 3) and value == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("n_half", [1, 2, 3, 6])
@pytest.mark.parametrize("p", P_SET)
@pytest.mark.parametrize("cd", [True, False])
def test_optimum_dominates_equilibrium(n_half, p, cd):
    config = NetworkConfig(n_half, p, has_cd_edge=cd)
    _, best = social_optimum(config)
    assert best >= find_nash(config).avg_concurrence - 1e-12
    assert best == pytest.approx(max(average_concurrence(config, a) for a in enumerate_allocations(config)))


GAP = 2.85 - 2 * 2**0.5  # 0.85 - C_pure**2, and C_pure**2 = 2 sqrt 2 - 2


def test_detect_braess_examples():
    for n_half in (3, 20):
        report = detect_braess(NetworkConfig(n_half, 0.9))
        assert report.paradox
        assert report.gap == pytest.approx(GAP, abs=1e-12)
        assert report.modified_eq.allocation == (2 * n_half, 0, 0)
    assert not detect_braess(NetworkConfig(3, 1.0)).paradox
    with pytest.raises(ValueError):
        detect_braess(C3_ORIG)


def test_paradox_region_examples():
    scan = paradox_region(20, 2**-0.25, [0.5, 0.9, 1.0])
    assert [p for p, _ in scan] == [0.5, 0.9, 1.0]
    assert [r.paradox for _, r in scan] == [False, True, False]
    assert scan[0][1].modified_eq.avg_concurrence == pytest.approx(0.828427125, abs=1e-9)
    assert paradox_interval(scan) == (0.9, 0.9)
    assert paradox_interval(scan[:1]) is None


def test_candidate_interval_values():
    lo, hi = candidate_paradox_interval(20)
    # (2 C^2 + 1)/3 with C = 2^(3/4) sqrt(1 - 2^-1/2); upper from C at 21 copies
    assert lo == pytest.approx(0.885618083164126732, abs=1e-12)
    assert hi == pytest.approx((2 * 0.999436778990874060 + 1) / 3, abs=1e-12)


def test_dominance_of_new_path_n20():
    config = NetworkConfig(20, 0.9)
    for alloc in enumerate_allocations(config):
        for src in (PathId.ACB, PathId.ADB):
            if alloc.count(src):
                cur, new = deviation_payoffs(config, alloc, src, PathId.ACDB)
                assert new > cur


def test_determinism():
    a = detect_braess(NetworkConfig(7, 0.93))
    b = detect_braess(NetworkConfig(7, 0.93))
    assert a.to_dict() == b.to_dict()
