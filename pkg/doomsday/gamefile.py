import logging
from collections import namedtuple

from .arena import validate_arena
from .exceptions import DuplicateObjective, GameSyntaxError, MissingObjective
from .objectives import OBJECTIVE_CLASSES, PARITY, ObjectiveProfile, make_objective

logger = logging.getLogger(__name__)

GameFile = namedtuple('GameFile', ['name', 'arena', 'profile'])


def _integer(token, line, what):
    try:
        return int(token)
    except ValueError:
        raise GameSyntaxError(line, '{} must be an integer, got {!r}'.format(what, token))


def _parity_argument(tokens, line):
    priorities = {}
    for token in tokens:
        state, sep, value = token.rpartition(':')
        if not sep or not state:
            raise GameSyntaxError(line, 'expected <state>:<priority>, got {!r}'.format(token))
        if state in priorities:
            raise GameSyntaxError(line, 'state {} has two priorities'.format(state))
        priorities[state] = _integer(value, line, 'priority')
    return priorities


def read_game(text):
    """Parse a game file into a `GameFile` (name, arena, profile).

    The format is line oriented; `#` starts a comment and tokens are
    separated by whitespace:

        game <name>                   (optional)
        players <n>
        state <id> owner=<k>
        edge <source> <target> [<target> ...]
        init <id>
        objective <player> <class> <args>

    where `<class>` is reach, safety, buchi or cobuchi followed by state ids,
    or parity followed by `<id>:<priority>` for every state.

    # Raises
        GameSyntaxError, MissingObjective, DuplicateObjective and the
        validation errors of `validate_arena`
    """
    name = None
    players = None
    states = []
    edges = []
    initial = None
    objectives = {}
    last = 0

    for number, raw in enumerate(text.splitlines(), 1):
        last = number
        tokens = raw.split('#', 1)[0].split()
        if not tokens:
            continue
        keyword, args = tokens[0], tokens[1:]

        if keyword == 'game':
            if len(args) != 1:
                raise GameSyntaxError(number, 'expected: game <name>')
            name = args[0]
        elif keyword == 'players':
            if len(args) != 1:
                raise GameSyntaxError(number, 'expected: players <n>')
            if players is not None:
                raise GameSyntaxError(number, 'players declared twice')
            players = _integer(args[0], number, 'player count')
        elif keyword == 'state':
            if len(args) != 2 or not args[1].startswith('owner='):
                raise GameSyntaxError(number, 'expected: state <id> owner=<k>')
            states.append((args[0], _integer(args[1][len('owner='):], number, 'owner')))
        elif keyword == 'edge':
            if len(args) < 2:
                raise GameSyntaxError(number, 'expected: edge <source> <target>+')
            edges.extend((args[0], target) for target in args[1:])
        elif keyword == 'init':
            if len(args) != 1:
                raise GameSyntaxError(number, 'expected: init <id>')
            if initial is not None:
                raise GameSyntaxError(number, 'init declared twice')
            initial = args[0]
        elif keyword == 'objective':
            if len(args) < 2:
                raise GameSyntaxError(number, 'expected: objective <player> <class> <args>')
            player = _integer(args[0], number, 'player')
            kind = args[1]
            if kind not in OBJECTIVE_CLASSES:
                raise GameSyntaxError(number, 'unknown objective class {!r}'.format(kind))
            if player in objectives:
                raise DuplicateObjective(player, number)
            if kind == PARITY:
                objectives[player] = (number, make_objective(kind, _parity_argument(args[2:], number)))
            else:
                objectives[player] = (number, make_objective(kind, args[2:]))
        else:
            raise GameSyntaxError(number, 'unknown keyword {!r}'.format(keyword))

    if players is None:
        raise GameSyntaxError(last, 'missing players line')
    if initial is None:
        raise GameSyntaxError(last, 'missing init line')

    arena = validate_arena({'players': players, 'states': states,
                            'edges': edges, 'initial': initial})

    for player in sorted(objectives):
        if not 1 <= player <= players:
            raise GameSyntaxError(objectives[player][0], 'no player {}'.format(player))
    for player in arena.players:
        if player not in objectives:
            raise MissingObjective(player)
        number, objective = objectives[player]
        if objective.kind == PARITY:
            missing = [s for s in arena.state_ids if s not in objective.priorities]
            if missing:
                raise GameSyntaxError(number, 'parity objective has no priority for {}'.format(
                    ', '.join(missing)))

    profile = ObjectiveProfile([objectives[i][1] for i in arena.players])
    profile.validate(arena)
    logger.debug('parsed game %s: %r', name, arena)
    return GameFile(name, arena, profile)


def parse_game_file(text):
    """Parse game file text into `(Arena, ObjectiveProfile)`."""
    game = read_game(text)
    return game.arena, game.profile


def load_game(file_name):
    with open(file_name, 'r') as f:
        return read_game(f.read())


def serialize_game(arena, profile, name=None):
    """Write `arena` and `profile` back in the game file format."""
    lines = []
    if name:
        lines.append('game {}'.format(name))
    lines.append('players {}'.format(arena.player_count))
    for state, owner in arena.states:
        lines.append('state {} owner={}'.format(state, owner))
    for state, _ in arena.states:
        lines.append('edge {} {}'.format(state, ' '.join(arena.successors(state))))
    lines.append('init {}'.format(arena.initial))
    for i in arena.players:
        lines.append(' '.join(['objective', str(i)] + profile[i].to_tokens()))
    return '\n'.join(lines) + '\n'
