import pytest

from doomsday import (Arena, BadOwner, BadPlayerCount, DeadlockState, DuplicateEdge,
                      DuplicateState, UnknownState, successors, validate_arena)

G2_RAW = {
    'players': 2,
    'states': [{'id': 'v', 'owner': 2}, {'id': 't', 'owner': 1}, {'id': 'd', 'owner': 1}],
    'edges': {'v': ['t', 'd'], 't': ['t'], 'd': ['d']},
    'initial': 'v'
}


def test_minimal_self_loop():
    arena = validate_arena({'players': 1, 'states': [('a', 1)],
                            'edges': [('a', 'a')], 'initial': 'a'})
    assert isinstance(arena, Arena)
    assert arena.state_ids == ('a',)
    assert successors(arena, 'a') == ['a']
    assert len(arena) == 1


def test_successors_sorted():
    arena = validate_arena(G2_RAW)
    assert successors(arena, 'v') == ['d', 't']
    assert successors(arena, 't') == ['t']
    assert arena.owner('v') == 2
    assert arena.owned_by(1) == ['d', 't']
    assert list(arena.players) == [1, 2]


def test_unknown_successor_query():
    arena = validate_arena(G2_RAW)
    with pytest.raises(UnknownState) as error:
        successors(arena, 'x')
    assert error.value.state == 'x'


def test_deadlock():
    with pytest.raises(DeadlockState) as error:
        validate_arena({'players': 1, 'states': [('a', 1)], 'edges': [], 'initial': 'a'})
    assert error.value.state == 'a'


def test_dangling_edge():
    with pytest.raises(UnknownState):
        validate_arena({'players': 1, 'states': [('a', 1)],
                        'edges': [('a', 'b')], 'initial': 'a'})


def test_unknown_initial():
    with pytest.raises(UnknownState):
        validate_arena({'players': 1, 'states': [('a', 1)],
                        'edges': [('a', 'a')], 'initial': 'z'})


@pytest.mark.parametrize('owner', [0, 3, '1', True])
def test_bad_owner(owner):
    with pytest.raises(BadOwner):
        validate_arena({'players': 2, 'states': [('a', owner)],
                        'edges': [('a', 'a')], 'initial': 'a'})


def test_duplicates():
    with pytest.raises(DuplicateState):
        validate_arena({'players': 1, 'states': [('a', 1), ('a', 1)],
                        'edges': [('a', 'a')], 'initial': 'a'})
    with pytest.raises(DuplicateEdge):
        validate_arena({'players': 1, 'states': [('a', 1)],
                        'edges': [('a', 'a'), ('a', 'a')], 'initial': 'a'})


@pytest.mark.parametrize('players', [0, -1, None, 1.5])
def test_bad_player_count(players):
    with pytest.raises(BadPlayerCount):
        validate_arena({'players': players, 'states': [('a', 1)],
                        'edges': [('a', 'a')], 'initial': 'a'})


def test_input_errors_are_value_errors():
    with pytest.raises(ValueError):
        validate_arena({'players': 1, 'states': [('a', 1)], 'edges': [], 'initial': 'a'})


def test_validation_idempotent():
    arena = validate_arena(G2_RAW)
    assert validate_arena(arena) == arena
    assert validate_arena(arena.to_raw()) == arena
    assert hash(validate_arena(arena)) == hash(arena)


def test_relabel_keeps_structure():
    arena = validate_arena(G2_RAW)
    renamed = arena.relabel({'v': 'start', 't': 'goal', 'd': 'sink'})
    assert renamed.initial == 'start'
    assert successors(renamed, 'start') == ['goal', 'sink']
    assert renamed.owner('sink') == 1
    assert renamed.relabel({'start': 'v', 'goal': 't', 'sink': 'd'}) == arena


def test_edges_in_declaration_order():
    arena = validate_arena(G2_RAW)
    assert list(arena.edges()) == [('v', 'd'), ('v', 't'), ('t', 't'), ('d', 'd')]
    assert arena.has_edge('v', 'd')
    assert not arena.has_edge('d', 'v')
    assert 'v' in arena and 'x' not in arena


if __name__ == '__main__':
    pytest.main([__file__])
