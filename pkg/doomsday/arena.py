import logging

from .exceptions import (BadOwner, BadPlayerCount, DeadlockState, DuplicateEdge,
                         DuplicateState, UnknownState)

logger = logging.getLogger(__name__)


class Arena(object):
    """Arena

    A finite turn-based game graph. Every state is owned by exactly one
    player, who picks the successor whenever the play is there. Arenas are
    immutable once validated; build them with `validate_arena`.

    # Arguments
        states: list of `(state_id, owner)` pairs, in declaration order.
        edges: dict mapping each state id to its successor ids.
        initial: id of the initial state.
        player_count: number of players, owners range over 1..player_count.
    """

    def __init__(self, states, edges, initial, player_count):
        self._states = tuple((s, o) for s, o in states)
        self._owner = dict(self._states)
        self._edges = dict((s, tuple(edges[s])) for s, _ in self._states)
        self.initial = initial
        self.player_count = player_count

    @property
    def states(self):
        return self._states

    @property
    def state_ids(self):
        """State ids in sorted order; this is the alphabet of every automaton."""
        return tuple(sorted(self._owner))

    @property
    def players(self):
        return range(1, self.player_count + 1)

    def owner(self, state):
        try:
            return self._owner[state]
        except KeyError:
            raise UnknownState(state)

    def owned_by(self, player):
        return [s for s in self.state_ids if self._owner[s] == player]

    def successors(self, state):
        try:
            return self._edges[state]
        except KeyError:
            raise UnknownState(state)

    def has_edge(self, source, target):
        return target in self.successors(source)

    def edges(self):
        for s, _ in self._states:
            for t in self._edges[s]:
                yield s, t

    def __contains__(self, state):
        return state in self._owner

    def __len__(self):
        return len(self._states)

    def __eq__(self, other):
        if not isinstance(other, Arena):
            return NotImplemented
        return (self._states == other._states and self._edges == other._edges
                and self.initial == other.initial
                and self.player_count == other.player_count)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._states, self.initial, self.player_count))

    def __repr__(self):
        return 'Arena(states={}, players={}, initial={!r})'.format(
            len(self._states), self.player_count, self.initial)

    def to_raw(self):
        return {
            'players': self.player_count,
            'states': [{'id': s, 'owner': o} for s, o in self._states],
            'edges': dict((s, list(t)) for s, t in self._edges.items()),
            'initial': self.initial
        }

    def relabel(self, mapping):
        """Rename every state id through the bijection `mapping`.
        The result is validated again."""
        return validate_arena({
            'players': self.player_count,
            'states': [(mapping[s], o) for s, o in self._states],
            'edges': [(mapping[s], mapping[t]) for s, t in self.edges()],
            'initial': mapping[self.initial]
        })


def _state_records(raw_states):
    for record in raw_states:
        if isinstance(record, dict):
            yield record['id'], record['owner']
        else:
            state, owner = record
            yield state, owner


def _edge_pairs(raw_edges):
    if isinstance(raw_edges, dict):
        for source in raw_edges:
            for target in raw_edges[source]:
                yield source, target
    else:
        for source, target in raw_edges:
            yield source, target


def validate_arena(raw):
    """Validate an arena description and return an `Arena`.

    # Arguments
        raw: an `Arena`, or a dict with keys `players`, `states` (list of
            `{'id', 'owner'}` records or `(id, owner)` pairs), `edges` (dict of
            successor lists or list of `(source, target)` pairs) and `initial`.

    # Returns
        A validated `Arena` whose successor lists are sorted by state id.

    # Raises
        DeadlockState, UnknownState, BadOwner, DuplicateState, DuplicateEdge,
        BadPlayerCount
    """
    if isinstance(raw, Arena):
        raw = raw.to_raw()

    players = raw.get('players')
    if isinstance(players, bool) or not isinstance(players, int) or players < 1:
        raise BadPlayerCount(players)

    states = []
    seen = set()
    for state, owner in _state_records(raw.get('states', [])):
        if state in seen:
            raise DuplicateState(state)
        if isinstance(owner, bool) or not isinstance(owner, int) or not 1 <= owner <= players:
            raise BadOwner(state, owner)
        seen.add(state)
        states.append((state, owner))

    edges = dict((s, set()) for s in seen)
    for source, target in _edge_pairs(raw.get('edges', [])):
        if source not in seen:
            raise UnknownState(source)
        if target not in seen:
            raise UnknownState(target)
        if target in edges[source]:
            raise DuplicateEdge(source, target)
        edges[source].add(target)

    for state, _ in states:
        if not edges[state]:
            raise DeadlockState(state)

    initial = raw.get('initial')
    if initial not in seen:
        raise UnknownState(initial)

    arena = Arena(states, dict((s, sorted(t)) for s, t in edges.items()),
                  initial, players)
    logger.debug('validated %r', arena)
    return arena


def successors(arena, state):
    """Sorted, never empty successor list of `state`.

    # Raises
        UnknownState
    """
    return list(arena.successors(state))
