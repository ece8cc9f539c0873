import itertools

import pytest

from doomsday import (DPA, AlphabetMismatch, AutomatonError, Buchi, Reachability, Safety,
                      SizeLimit, UnknownLetter, compile_objective_to_dpa, dpa_accepts_lasso,
                      dpa_complement, dpa_conj, dpa_disj, normalized_priorities, universal_dpa)

G2_LETTERS = ('d', 't', 'v')


def small_lassos(letters, longest=2):
    for n in range(longest + 1):
        for stem in itertools.product(letters, repeat=n):
            for m in range(1, longest + 1):
                for cycle in itertools.product(letters, repeat=m):
                    yield list(stem), list(cycle)


def test_reach_lasso():
    d = compile_objective_to_dpa(Reachability(['t']), G2_LETTERS)
    assert dpa_accepts_lasso(d, ['v'], ['t'])
    assert not dpa_accepts_lasso(d, ['v'], ['d'])


def test_pumping():
    d = compile_objective_to_dpa(Buchi(['t']), G2_LETTERS)
    for stem, cycle in small_lassos(G2_LETTERS):
        assert dpa_accepts_lasso(d, stem, cycle) == dpa_accepts_lasso(d, stem, cycle * 2)


def test_unknown_letter_and_empty_cycle():
    d = compile_objective_to_dpa(Reachability(['t']), G2_LETTERS)
    with pytest.raises(UnknownLetter) as error:
        dpa_accepts_lasso(d, ['x'], ['t'])
    assert error.value.letter == 'x'
    with pytest.raises(ValueError):
        dpa_accepts_lasso(d, ['v'], [])


def test_complement():
    d = compile_objective_to_dpa(Reachability(['t']), G2_LETTERS)
    comp = dpa_complement(d)
    assert dpa_accepts_lasso(comp, ['v'], ['d'])
    double = dpa_complement(comp)
    for stem, cycle in small_lassos(G2_LETTERS):
        verdict = dpa_accepts_lasso(d, stem, cycle)
        assert dpa_accepts_lasso(comp, stem, cycle) == (not verdict)
        assert dpa_accepts_lasso(double, stem, cycle) == verdict


def test_conj_buchi_pair():
    letters = ('x', 'y', 'z')
    both = dpa_conj([compile_objective_to_dpa(Buchi(['x']), letters),
                     compile_objective_to_dpa(Buchi(['y']), letters)])
    assert dpa_accepts_lasso(both, [], ['x', 'y'])
    assert not dpa_accepts_lasso(both, [], ['x'])
    assert not dpa_accepts_lasso(both, ['y'], ['x', 'z'])


def test_products_respect_node_budget():
    letters = ('x', 'y', 'z')
    parts = [compile_objective_to_dpa(Buchi(['x']), letters),
             compile_objective_to_dpa(Buchi(['y']), letters)]
    full = dpa_conj(parts)
    assert len(full) > 1
    assert len(dpa_conj(parts, node_budget=len(full))) == len(full)
    with pytest.raises(SizeLimit) as error:
        dpa_conj(parts, node_budget=len(full) - 1)
    assert error.value.budget == len(full) - 1
    with pytest.raises(SizeLimit):
        dpa_disj(parts, node_budget=1)


def test_singletons():
    d = compile_objective_to_dpa(Safety(['v', 'd']), G2_LETTERS)
    assert dpa_conj([d]) is d
    assert dpa_disj([d]) is d


def test_disj_reach_or_safety():
    d = dpa_disj([compile_objective_to_dpa(Reachability(['t']), G2_LETTERS),
                  compile_objective_to_dpa(Safety(['v', 'd']), G2_LETTERS)])
    assert dpa_accepts_lasso(d, ['v'], ['d'])
    assert dpa_accepts_lasso(d, ['v'], ['t'])


def test_conj_and_disj_match_components():
    letters = ('a', 'b', 'c')
    parts = [compile_objective_to_dpa(Buchi(['a']), letters),
             compile_objective_to_dpa(Reachability(['b']), letters),
             dpa_complement(compile_objective_to_dpa(Safety(['a', 'c']), letters))]
    for first, second in itertools.combinations(parts, 2):
        conj = dpa_conj([first, second])
        disj = dpa_disj([first, second])
        for stem, cycle in small_lassos(letters):
            x = dpa_accepts_lasso(first, stem, cycle)
            y = dpa_accepts_lasso(second, stem, cycle)
            assert dpa_accepts_lasso(conj, stem, cycle) == (x and y)
            assert dpa_accepts_lasso(disj, stem, cycle) == (x or y)


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        dpa_conj([universal_dpa(['a']), universal_dpa(['a', 'b'])])
    with pytest.raises(ValueError):
        dpa_conj([])


def test_universal():
    d = universal_dpa(['b', 'a'])
    assert d.alphabet == ('a', 'b')
    assert len(d) == 1
    assert dpa_accepts_lasso(d, ['a'], ['b'])


def test_structural_check():
    with pytest.raises(AutomatonError):
        DPA(['a', 'b'], [{'a': 0}], [0])
    with pytest.raises(AutomatonError):
        DPA(['a'], [{'a': 1}], [0])
    with pytest.raises(AutomatonError):
        DPA(['a'], [{'a': 0}], [-1])
    with pytest.raises(AutomatonError):
        DPA(['a'], [{'a': 0}], [0], initial=2)


def test_normalized_priorities():
    assert normalized_priorities([0, 2, 4]) == [0, 0, 0]
    assert normalized_priorities([3, 5, 6, 9]) == [1, 1, 2, 3]
    assert normalized_priorities([2, 1]) == [2, 1]
    assert normalized_priorities([]) == []


def test_conj_size_stays_small():
    letters = ('a', 'b', 'c', 'd')
    parts = [compile_objective_to_dpa(Buchi([x]), letters) for x in letters]
    conj = dpa_conj(parts)
    # four two-state components with one pair each
    assert len(conj) <= 2 ** 4 * 24 * 2
    assert all(set(row) == set(letters) for row in conj.delta)


if __name__ == '__main__':
    pytest.main([__file__])
