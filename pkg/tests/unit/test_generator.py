import pytest

from doomsday import (BadParams, Draws, GENERATOR_CLASSES, OBJECTIVE_CLASSES, gen_random,
                      random_game, read_game)


def test_same_seed_same_text():
    assert gen_random(5, 2, 'reach', seed=1) == gen_random(5, 2, 'reach', seed=1)


def test_different_seeds_differ():
    texts = set(gen_random(6, 2, 'buchi', seed=seed) for seed in range(5))
    assert len(texts) > 1


def test_generated_game_parses():
    game = read_game(gen_random(5, 2, 'reach', seed=1))
    assert game.name == 'random-reach-1'
    assert len(game.arena) == 5
    assert game.arena.initial == 's0'
    assert all(game.arena.successors(s) for s in game.arena.state_ids)


@pytest.mark.parametrize('objective_class', GENERATOR_CLASSES)
def test_every_class(objective_class):
    arena, profile = random_game(4, 3, objective_class, seed=7)
    assert len(profile) == 3
    if objective_class != 'mixed':
        assert profile.classes == [objective_class] * 3
    else:
        assert all(c in OBJECTIVE_CLASSES for c in profile.classes)


def test_many_seeds_validate():
    for seed in range(1000):
        read_game(gen_random(1 + seed % 6, 1 + seed % 3, GENERATOR_CLASSES[seed % 6], seed=seed))


def test_density_extremes():
    sparse, _ = random_game(6, 1, 'safety', edge_density=0.0, seed=3)
    assert all(len(sparse.successors(s)) == 1 for s in sparse.state_ids)
    dense, _ = random_game(6, 1, 'safety', edge_density=1.0, seed=3)
    assert all(len(dense.successors(s)) == 6 for s in dense.state_ids)


def test_empty_rate_extremes():
    _, empty = random_game(4, 3, 'buchi', empty_rate=1.0, seed=5)
    assert all(not o.states for o in empty)
    _, full = random_game(4, 3, 'buchi', empty_rate=0.0, seed=5)
    assert all(o.states for o in full)


def test_parity_priorities_in_range():
    _, profile = random_game(6, 2, 'parity', seed=11)
    for objective in profile:
        assert set(objective.priorities.values()) <= {0, 1, 2, 3}


def test_draws_are_reproducible():
    first, second = Draws(42), Draws(42)
    values = [first.uniform() for _ in range(10)]
    assert values == [second.uniform() for _ in range(10)]
    assert all(0.0 <= v < 1.0 for v in values)
    assert all(0 <= first.below(3) < 3 for _ in range(100))


@pytest.mark.parametrize('kwargs', [
    dict(states=0, players=1, objective_class='reach'),
    dict(states=3, players=0, objective_class='reach'),
    dict(states=3, players=1, objective_class='muller'),
    dict(states=3, players=1, objective_class='reach', edge_density=1.5),
    dict(states=3, players=1, objective_class='reach', empty_rate=-0.1),
    dict(states=3, players=1, objective_class='reach', seed=-1),
    dict(states=3, players=1, objective_class='reach', seed=2 ** 64),
])
def test_bad_params(kwargs):
    with pytest.raises(BadParams):
        gen_random(**kwargs)


if __name__ == '__main__':
    pytest.main([__file__])
