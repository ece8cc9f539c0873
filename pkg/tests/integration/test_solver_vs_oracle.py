import pytest

from doomsday import (BudgetExceeded, assemble_profile, check_profile, decide_doomsday,
                      oracle_decide_bounded, random_game)

CLASSES = ['reach', 'safety', 'buchi', 'cobuchi', 'parity']

SWEEP_SEEDS = 60


def instances(sizes, players, seeds, density=0.3):
    for objective_class in CLASSES:
        for states in sizes:
            for seed in seeds:
                yield objective_class, states, players, seed, density


def run_instance(objective_class, states, players, seed, density, memory_bound):
    """Check the solver on one random game against the oracle; returns False
    when the oracle ran out of budget."""
    arena, profile = random_game(states, players, objective_class,
                                 edge_density=density, seed=seed)
    verdict = decide_doomsday(arena, profile)
    if verdict.exists:
        strategies = assemble_profile(verdict.certificate, arena, profile)
        result = check_profile(arena, profile, strategies)
        assert result.is_de, (objective_class, seed, result.violation.describe())
    try:
        oracle = oracle_decide_bounded(arena, profile, memory_bound)
    except BudgetExceeded:
        return False
    assert verdict.exists or not oracle.found, (objective_class, seed)
    if oracle.found:
        assert check_profile(arena, profile, oracle.strategies).is_de
    return True


def run_or_skip(*args, **kwargs):
    if not run_instance(*args, **kwargs):
        pytest.skip('oracle budget exceeded')


@pytest.mark.parametrize('objective_class, states, players, seed, density',
                         list(instances([2, 3, 4, 5], 2, range(6))))
def test_two_players_positional(objective_class, states, players, seed, density):
    run_or_skip(objective_class, states, players, seed, density, memory_bound=1)


@pytest.mark.parametrize('objective_class, states, players, seed, density',
                         list(instances([2], 2, range(10), density=0.5)))
def test_two_players_memory_two(objective_class, states, players, seed, density):
    run_or_skip(objective_class, states, players, seed, density, memory_bound=2)


@pytest.mark.parametrize('objective_class, states, players, seed, density',
                         list(instances([2], 3, range(6), density=0.5)))
def test_three_players_memory_two(objective_class, states, players, seed, density):
    run_or_skip(objective_class, states, players, seed, density, memory_bound=2)


@pytest.mark.slow
@pytest.mark.parametrize('objective_class, states, players, seed, density',
                         list(instances([3], 2, range(4), density=0.2)))
def test_three_states_memory_two(objective_class, states, players, seed, density):
    run_or_skip(objective_class, states, players, seed, density, memory_bound=2)


@pytest.mark.slow
@pytest.mark.parametrize('objective_class, states, players, seed, density',
                         list(instances([3, 4], 3, range(4))))
def test_three_players_positional(objective_class, states, players, seed, density):
    run_or_skip(objective_class, states, players, seed, density, memory_bound=1)


@pytest.mark.slow
@pytest.mark.parametrize('objective_class', CLASSES)
def test_sweep_memory_two(objective_class):
    # states cycle through 2..4 and players through 2..3; every 2 state game
    # fits the oracle budget
    checked = 0
    for seed in range(SWEEP_SEEDS):
        states = 2 + seed % 3
        players = 2 + (seed // 3) % 2
        if run_instance(objective_class, states, players, seed, 0.3, memory_bound=2):
            checked += 1
    assert checked >= SWEEP_SEEDS // 3, (objective_class, checked)


if __name__ == '__main__':
    pytest.main([__file__])
