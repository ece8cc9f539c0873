import logging

import numpy as np

from .arena import validate_arena
from .exceptions import BadParams
from .gamefile import serialize_game
from .objectives import OBJECTIVE_CLASSES, PARITY, ObjectiveProfile, make_objective

logger = logging.getLogger(__name__)

MIXED = 'mixed'
GENERATOR_CLASSES = OBJECTIVE_CLASSES + (MIXED,)

MAX_STATES = 64
MAX_PLAYERS = 8
MAX_PRIORITY = 3


class Draws(object):
    """Random draws from numpy's PCG64 bit generator.

    Only the raw 64-bit outputs are used, so a seed gives the same draws on
    every platform and numpy release that ships PCG64.
    """

    def __init__(self, seed):
        self.bits = np.random.PCG64(seed)

    def raw(self):
        return int(self.bits.random_raw())

    def uniform(self):
        return (self.raw() >> 11) * (1.0 / (1 << 53))

    def below(self, n):
        return int(self.uniform() * n)

    def chance(self, p):
        return self.uniform() < p


def _check_params(states, players, objective_class, edge_density, seed, empty_rate):
    if isinstance(states, bool) or not isinstance(states, int) or not 1 <= states <= MAX_STATES:
        raise BadParams('states must lie in 1..{}'.format(MAX_STATES))
    if isinstance(players, bool) or not isinstance(players, int) or not 1 <= players <= MAX_PLAYERS:
        raise BadParams('players must lie in 1..{}'.format(MAX_PLAYERS))
    if objective_class not in GENERATOR_CLASSES:
        raise BadParams('class must be one of {}'.format(', '.join(GENERATOR_CLASSES)))
    if not 0.0 <= edge_density <= 1.0:
        raise BadParams('edge density must lie in [0, 1]')
    if not 0.0 <= empty_rate <= 1.0:
        raise BadParams('empty set rate must lie in [0, 1]')
    if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed < 2 ** 64:
        raise BadParams('seed must be a 64-bit unsigned integer')


def _state_set(draws, ids, empty_rate):
    if draws.chance(empty_rate):
        return []
    chosen = [s for s in ids if draws.chance(0.5)]
    return chosen or [ids[draws.below(len(ids))]]


def random_game(states, players, objective_class, edge_density=0.3, seed=0, empty_rate=0.1):
    """Draw a random game; returns `(arena, profile)`.

    Every state first gets one random successor, then each further target
    is added with probability `edge_density`. State sets of the objectives
    are empty with probability `empty_rate`; parity priorities lie in 0..3.
    The class `mixed` draws a class per player.

    # Raises
        BadParams
    """
    _check_params(states, players, objective_class, edge_density, seed, empty_rate)
    draws = Draws(seed)
    ids = ['s{}'.format(k) for k in range(states)]

    owners = [(s, 1 + draws.below(players)) for s in ids]
    edges = []
    for s in ids:
        first = ids[draws.below(states)]
        edges.append((s, first))
        for t in ids:
            if t != first and draws.chance(edge_density):
                edges.append((s, t))
    arena = validate_arena({'players': players, 'states': owners,
                            'edges': edges, 'initial': ids[0]})

    objectives = []
    for _ in range(players):
        kind = objective_class
        if kind == MIXED:
            kind = OBJECTIVE_CLASSES[draws.below(len(OBJECTIVE_CLASSES))]
        if kind == PARITY:
            top = min(MAX_PRIORITY, 2 * states)
            objectives.append(make_objective(kind, dict((s, draws.below(top + 1)) for s in ids)))
        else:
            objectives.append(make_objective(kind, _state_set(draws, ids, empty_rate)))
    profile = ObjectiveProfile(objectives).validate(arena)
    logger.debug('generated %r with seed %d', arena, seed)
    return arena, profile


def gen_random(states, players, objective_class, edge_density=0.3, seed=0, empty_rate=0.1):
    """Random game as game file text; identical for identical arguments."""
    arena, profile = random_game(states, players, objective_class, edge_density, seed, empty_rate)
    name = 'random-{}-{}'.format(objective_class, seed)
    return serialize_game(arena, profile, name)
