import logging
from collections import deque

from .exceptions import AlphabetMismatch, RecursionLimit
from .objectives import compile_expression, retaliation_objective

logger = logging.getLogger(__name__)

PROTAGONIST = 0
ANTAGONIST = 1

DEFAULT_RECURSION_LIMIT = 500


class ParityGame(object):
    """ParityGame

    Two-player zero-sum game with min-even parity acceptance. The
    protagonist (role 0) wins a play iff the minimal priority seen infinitely
    often is even; the antagonist (role 1) wins otherwise.

    # Arguments
        role: dict node -> PROTAGONIST or ANTAGONIST.
        successors: dict node -> list of successor nodes, never empty.
        priority: dict node -> non-negative integer.
    """

    def __init__(self, role, successors, priority):
        self.role = dict(role)
        self.successors = dict((n, list(s)) for n, s in successors.items())
        self.priority = dict(priority)
        self._predecessors = None

    @property
    def nodes(self):
        return set(self.role)

    def __len__(self):
        return len(self.role)

    def __repr__(self):
        return 'ParityGame(nodes={})'.format(len(self.role))

    def predecessors(self, node):
        if self._predecessors is None:
            self._predecessors = dict((n, []) for n in self.role)
            for n in sorted(self.role, key=repr):
                for m in self.successors[n]:
                    self._predecessors[m].append(n)
        return self._predecessors[node]

    def reachable(self, sources):
        seen = set(sources)
        queue = deque(seen)
        while queue:
            node = queue.popleft()
            for m in self.successors[node]:
                if m not in seen:
                    seen.add(m)
                    queue.append(m)
        return seen


def _attract(pg, who, target, within):
    # least fixpoint with a witness move for every `who` node that is added
    region = set(target)
    strategy = {}
    escapes = {}
    queue = deque(sorted(region, key=repr))
    while queue:
        node = queue.popleft()
        for pred in pg.predecessors(node):
            if pred not in within or pred in region:
                continue
            if pg.role[pred] == who:
                region.add(pred)
                strategy[pred] = node
                queue.append(pred)
            else:
                if pred not in escapes:
                    escapes[pred] = sum(1 for m in pg.successors[pred] if m in within)
                escapes[pred] -= 1
                if escapes[pred] == 0:
                    region.add(pred)
                    queue.append(pred)
    return region, strategy


def attractor(pg, who, target, within=None):
    """Nodes from which `who` forces a visit to `target`.

    # Arguments
        pg: `ParityGame`.
        who: PROTAGONIST or ANTAGONIST.
        target: set of nodes.
        within: optional node set the game is restricted to (default: all).
    """
    within = pg.nodes if within is None else set(within)
    return _attract(pg, who, set(target) & within, within)[0]


def build_parity_game(arena, protagonist, d):
    """Product of `arena` with the DPA `d`, protagonist against the coalition
    of all other players.

    Nodes are pairs `(state, q)` for every arena state and every automaton
    state; `q` is the automaton state after reading `state`. The node is the
    protagonist's iff `protagonist` owns `state`.

    # Raises
        AlphabetMismatch
    """
    if d.alphabet != arena.state_ids:
        raise AlphabetMismatch(arena.state_ids, d.alphabet)
    role = {}
    successors = {}
    priority = {}
    for v in arena.state_ids:
        mover = PROTAGONIST if arena.owner(v) == protagonist else ANTAGONIST
        for q in d.states:
            node = (v, q)
            role[node] = mover
            successors[node] = [(w, d.step(q, w)) for w in arena.successors(v)]
            priority[node] = d.priority[q]
    logger.debug('parity game for player %d: %d nodes', protagonist, len(role))
    return ParityGame(role, successors, priority)


def zielonka_solve(pg, recursion_limit=DEFAULT_RECURSION_LIMIT):
    """Solve a parity game with Zielonka's recursive algorithm.

    # Returns
        `(win_protagonist, win_antagonist, strategy_protagonist,
        strategy_antagonist)`: the two winning regions partition the nodes;
        each strategy maps the owner's nodes of its region to a successor.

    # Raises
        RecursionLimit
    """
    win, strategy = _zielonka(pg, pg.nodes, 0, recursion_limit)
    return win[PROTAGONIST], win[ANTAGONIST], strategy[PROTAGONIST], strategy[ANTAGONIST]


def _zielonka(pg, nodes, depth, limit):
    if depth > limit:
        raise RecursionLimit(limit)
    if not nodes:
        return [set(), set()], [{}, {}]

    lowest = min(pg.priority[n] for n in nodes)
    player = lowest % 2
    opponent = 1 - player
    top = set(n for n in nodes if pg.priority[n] == lowest)
    region, pull = _attract(pg, player, top, nodes)

    win, strategy = _zielonka(pg, nodes - region, depth + 1, limit)
    if not win[opponent]:
        moves = dict(strategy[player])
        moves.update(pull)
        for n in top:
            if pg.role[n] == player:
                moves[n] = next(m for m in pg.successors[n] if m in nodes)
        result = [None, None]
        result[player] = set(nodes)
        result[opponent] = set()
        moves_by_role = [None, None]
        moves_by_role[player] = moves
        moves_by_role[opponent] = {}
        return result, moves_by_role

    lost, push = _attract(pg, opponent, win[opponent], nodes)
    rest, rest_strategy = _zielonka(pg, nodes - lost, depth + 1, limit)

    opponent_moves = dict(strategy[opponent])
    opponent_moves.update(push)
    opponent_moves.update(rest_strategy[opponent])
    result = [None, None]
    result[opponent] = rest[opponent] | lost
    result[player] = rest[player]
    moves_by_role = [None, None]
    moves_by_role[opponent] = opponent_moves
    moves_by_role[player] = dict(rest_strategy[player])
    return result, moves_by_role


class RetaliationRegion(object):
    """RetaliationRegion

    Where player `player` can, alone against everybody else, force its
    retaliation objective `phi_i or (not phi_1 and ... and not phi_n)`.

    # Arguments
        player: the protagonist.
        automaton: `DPA` of the retaliation objective.
        winning: set of `(state, q)` nodes won by the protagonist.
        strategy: dict from protagonist nodes in `winning` to successor nodes.
        game: the solved `ParityGame`.
    """

    def __init__(self, player, automaton, winning, strategy, game=None):
        self.player = player
        self.automaton = automaton
        self.winning = winning
        self.strategy = strategy
        self.game = game

    def __contains__(self, node):
        return node in self.winning

    def entry(self, state, q):
        """Node reached when the play enters `state` with automaton state `q`
        before reading it."""
        return state, self.automaton.step(q, state)

    def initial_node(self, arena):
        return self.entry(arena.initial, self.automaton.initial)

    def choices(self):
        """Protagonist moves as `{(state, q): successor state}`."""
        return dict((node, target[0]) for node, target in self.strategy.items())

    def __repr__(self):
        return 'RetaliationRegion(player={}, winning={})'.format(
            self.player, len(self.winning))


def retaliation_automaton(arena, profile, i, node_budget=None):
    """DPA of player `i`'s retaliation objective over `arena`."""
    return compile_expression(retaliation_objective(i, profile), arena.state_ids,
                              node_budget=node_budget)


def retaliation_region(arena, profile, i, recursion_limit=DEFAULT_RECURSION_LIMIT,
                       node_budget=None):
    """Solve player `i`'s retaliation game on `arena`.

    # Raises
        RecursionLimit, SizeLimit when the retaliation automaton has more
        than `node_budget` states

    # Returns
        A `RetaliationRegion`.
    """
    automaton = retaliation_automaton(arena, profile, i, node_budget)
    pg = build_parity_game(arena, i, automaton)
    winning, _, strategy, _ = zielonka_solve(pg, recursion_limit)
    own = dict((n, m) for n, m in strategy.items()
               if n in winning and pg.role[n] == PROTAGONIST)
    logger.debug('player %d retaliation: %d of %d nodes winning',
                 i, len(winning), len(pg))
    return RetaliationRegion(i, automaton, winning, own, pg)
