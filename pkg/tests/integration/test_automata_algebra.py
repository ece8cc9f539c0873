import itertools

import numpy as np
import pytest

from doomsday import (DPA, dpa_accepts_lasso, dpa_complement, dpa_conj, dpa_disj,
                      compile_objective_to_dpa, make_objective, play_satisfies)

LETTERS = ('a', 'b', 'c')


def random_dpa(rng, max_states=4, max_priority=3):
    size = rng.randint(1, max_states + 1)
    delta = [dict((a, int(rng.randint(size))) for a in LETTERS) for _ in range(size)]
    priority = [int(rng.randint(max_priority + 1)) for _ in range(size)]
    return DPA(LETTERS, delta, priority)


def random_lasso(rng):
    stem = [LETTERS[k] for k in rng.randint(len(LETTERS), size=rng.randint(0, 4))]
    cycle = [LETTERS[k] for k in rng.randint(len(LETTERS), size=rng.randint(1, 4))]
    return stem, cycle


def unrolled_accepts(d, stem, cycle):
    # after |d| rounds of the cycle the run is periodic; the next |d| rounds
    # cover its whole loop
    state = d.run(stem)
    for _ in range(len(d)):
        state = d.run(cycle, state)
    seen = []
    for _ in range(len(d)):
        for letter in cycle:
            state = d.step(state, letter)
            seen.append(d.priority[state])
    return min(seen) % 2 == 0


def test_lasso_acceptance_matches_unrolling():
    rng = np.random.RandomState(1)
    for _ in range(500):
        d = random_dpa(rng)
        stem, cycle = random_lasso(rng)
        assert dpa_accepts_lasso(d, stem, cycle) == unrolled_accepts(d, stem, cycle)


def test_complement():
    rng = np.random.RandomState(2)
    for _ in range(200):
        d = random_dpa(rng)
        stem, cycle = random_lasso(rng)
        assert dpa_accepts_lasso(dpa_complement(d), stem, cycle) != \
            dpa_accepts_lasso(d, stem, cycle)
        assert dpa_accepts_lasso(dpa_complement(dpa_complement(d)), stem, cycle) == \
            dpa_accepts_lasso(d, stem, cycle)


def test_conjunction_and_disjunction():
    rng = np.random.RandomState(3)
    for _ in range(300):
        d1, d2 = random_dpa(rng), random_dpa(rng)
        conj, disj = dpa_conj([d1, d2]), dpa_disj([d1, d2])
        for _ in range(10):
            stem, cycle = random_lasso(rng)
            first = dpa_accepts_lasso(d1, stem, cycle)
            second = dpa_accepts_lasso(d2, stem, cycle)
            assert dpa_accepts_lasso(conj, stem, cycle) == (first and second)
            assert dpa_accepts_lasso(disj, stem, cycle) == (first or second)


def test_three_way_conjunction():
    rng = np.random.RandomState(4)
    for _ in range(50):
        ds = [random_dpa(rng, max_states=3) for _ in range(3)]
        conj = dpa_conj(ds)
        for _ in range(10):
            stem, cycle = random_lasso(rng)
            assert dpa_accepts_lasso(conj, stem, cycle) == \
                all(dpa_accepts_lasso(d, stem, cycle) for d in ds)


def words(max_length, min_length=0):
    for n in range(min_length, max_length + 1):
        for word in itertools.product(LETTERS, repeat=n):
            yield list(word)


def base_objectives():
    subsets = [s for n in range(len(LETTERS) + 1) for s in itertools.combinations(LETTERS, n)]
    for kind in ('reach', 'safety', 'buchi', 'cobuchi'):
        for subset in subsets:
            yield make_objective(kind, subset)
    for priorities in itertools.product(range(3), repeat=len(LETTERS)):
        yield make_objective('parity', dict(zip(LETTERS, priorities)))


def test_exhaustive_objective_lassos():
    lassos = [(stem, cycle) for stem in words(3) for cycle in words(3, 1)]
    for objective in base_objectives():
        d = compile_objective_to_dpa(objective, LETTERS)
        for stem, cycle in lassos:
            assert dpa_accepts_lasso(d, stem, cycle) == \
                play_satisfies(objective, stem, cycle), (objective, stem, cycle)


if __name__ == '__main__':
    pytest.main([__file__])
