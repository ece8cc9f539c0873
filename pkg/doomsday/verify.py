"""Definition-level ground truth for doomsday equilibria.

Nothing here relies on the parity game solver: profiles are checked by
simulating them and by scanning products for accepting cycles directly.
"""
import itertools
import logging
from collections import deque

import networkx as nx

from .automata import dpa_complement, dpa_conj
from .exceptions import BadParams, BudgetExceeded, MalformedCertificate, MalformedStrategy
from .objectives import compile_objective_to_dpa, play_satisfies
from .zerosum import retaliation_automaton

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_BUDGET = 200000
MAX_ORACLE_STATES = 6
MAX_ORACLE_PLAYERS = 3
MAX_MEMORY_BOUND = 2


class StrategyMachine(object):
    """StrategyMachine

    Finite-memory strategy of one player. The memory is `initial` while the
    play sits in the arena's initial state and is updated with every state
    the play enters afterwards; at an owned state the move is read from
    `choice`.

    # Arguments
        player: the owner of the strategy.
        memory: list of memory values.
        initial: initial memory value.
        update: dict `(memory, state) -> memory`.
        choice: dict `(memory, owned state) -> successor state`.
    """

    def __init__(self, player, memory, initial, update, choice):
        self.player = player
        self.memory = list(memory)
        self.initial = initial
        self.update = dict(update)
        self.choice = dict(choice)

    def validate(self, arena):
        known = set(self.memory)
        if self.initial not in known:
            raise MalformedStrategy('initial memory {!r} unknown'.format(self.initial))
        for m in self.memory:
            for v in arena.state_ids:
                if self.update.get((m, v)) not in known:
                    raise MalformedStrategy('update undefined on ({!r}, {})'.format(m, v))
            for v in arena.owned_by(self.player):
                target = self.choice.get((m, v))
                if target is None or not arena.has_edge(v, target):
                    raise MalformedStrategy('bad choice at ({!r}, {})'.format(m, v))
        return self

    def move(self, memory, state):
        return self.choice[(memory, state)]

    def observe(self, memory, state):
        return self.update[(memory, state)]

    def __repr__(self):
        return 'StrategyMachine(player={}, memory={})'.format(self.player, len(self.memory))


class StrategyProfile(object):
    """One `StrategyMachine` per player, in player order."""

    def __init__(self, machines):
        self.machines = list(machines)

    def __getitem__(self, player):
        return self.machines[player - 1]

    def __len__(self):
        return len(self.machines)

    def __iter__(self):
        return iter(self.machines)

    def validate(self, arena):
        if len(self.machines) != arena.player_count:
            raise MalformedStrategy('{} machines for {} players'.format(
                len(self.machines), arena.player_count))
        for i, machine in enumerate(self.machines, 1):
            if machine.player != i:
                raise MalformedStrategy('machine {} belongs to player {}'.format(i, machine.player))
            machine.validate(arena)
        return self


class Violation(object):
    """Why a profile is not a doomsday equilibrium.

    `player` is `i`; `other` is `j` for a failed retaliation (None when the
    outcome itself misses `phi_i`); `stem`/`cycle` is the witness play.
    """

    def __init__(self, player, other, stem, cycle):
        self.player = player
        self.other = other
        self.stem = list(stem)
        self.cycle = list(cycle)

    def describe(self):
        if self.other is None:
            return 'outcome violates the objective of player {}'.format(self.player)
        return ('deviation against player {} violates its objective while player {} '
                'still wins').format(self.player, self.other)

    def __repr__(self):
        return 'Violation({}, {}, stem={}, cycle={})'.format(
            self.player, self.other, self.stem, self.cycle)


class CheckResult(object):

    def __init__(self, violation=None):
        self.violation = violation

    @property
    def is_de(self):
        return self.violation is None

    def __bool__(self):
        return self.is_de

    __nonzero__ = __bool__

    def __repr__(self):
        return 'CheckResult(is_de={}, violation={!r})'.format(self.is_de, self.violation)


def _next_position(k, stem, cycle):
    k += 1
    return k if k < len(stem) + len(cycle) else len(stem)


def assemble_profile(cert, arena, profile):
    """Turn a certificate into one strategy machine per player.

    In main mode the memory is `('main', k, q)`: position `k` on the
    certificate's play and the retaliation automaton state `q`. The first
    state off the play switches to `('retal', q)`, where the retaliation
    strategy is followed; nodes it does not cover get the id-least successor.

    # Raises
        MalformedCertificate
    """
    stem, cycle = list(cert.stem), list(cert.cycle)
    play = stem + cycle
    if not stem or not cycle:
        raise MalformedCertificate('stem and cycle must be nonempty')
    if stem[0] != arena.initial:
        raise MalformedCertificate('play does not start in the initial state')
    for state in play:
        if state not in arena:
            raise MalformedCertificate('unknown state {!r}'.format(state))
    for k in range(len(play)):
        nxt = play[_next_position(k, stem, cycle)]
        if not arena.has_edge(play[k], nxt):
            raise MalformedCertificate('{} -> {} is not an edge'.format(play[k], nxt))
    if cert.players is not None and cert.players != arena.player_count:
        raise MalformedCertificate('certificate is for {} players'.format(cert.players))

    machines = []
    for i in arena.players:
        if cert.automata is not None:
            automaton = cert.automata[i - 1]
        else:
            automaton = retaliation_automaton(arena, profile, i)
        machines.append(_assemble_machine(i, arena, automaton,
                                          cert.retaliation.get(i, {}), stem, cycle))
    return StrategyProfile(machines)


def _assemble_machine(player, arena, automaton, table, stem, cycle):
    play = stem + cycle

    def observe(memory, state):
        if memory[0] == 'main':
            _, k, q = memory
            nk = _next_position(k, stem, cycle)
            if state == play[nk]:
                return 'main', nk, automaton.step(q, state)
        return 'retal', automaton.step(memory[-1], state)

    def move(memory, state):
        if memory[0] == 'main' and state == play[memory[1]]:
            return play[_next_position(memory[1], stem, cycle)]
        target = table.get((state, memory[-1]))
        if target is None:
            return arena.successors(state)[0]
        if not arena.has_edge(state, target):
            raise MalformedCertificate('retaliation move {} -> {} is not an edge'.format(state, target))
        return target

    initial = ('main', 0, automaton.step(automaton.initial, play[0]))
    memory = [initial]
    seen = set(memory)
    update = {}
    queue = deque(memory)
    while queue:
        m = queue.popleft()
        for v in arena.state_ids:
            target = observe(m, v)
            update[(m, v)] = target
            if target not in seen:
                seen.add(target)
                memory.append(target)
                queue.append(target)
    owned = arena.owned_by(player)
    choice = dict(((m, v), move(m, v)) for m in memory for v in owned)
    return StrategyMachine(player, memory, initial, update, choice)


def outcome(arena, strategies):
    """Lasso `(stem, cycle)` of arena states produced by a full profile."""
    machines = list(strategies)
    state = arena.initial
    memories = tuple(m.initial for m in machines)
    seen = {}
    trace = []
    while (state, memories) not in seen:
        seen[(state, memories)] = len(trace)
        trace.append(state)
        k = arena.owner(state) - 1
        state = machines[k].move(memories[k], state)
        memories = tuple(m.observe(mem, state) for m, mem in zip(machines, memories))
    start = seen[(state, memories)]
    return trace[:start], trace[start:]


def accepting_lasso(initial, successors, priority):
    """Search a graph for a reachable cycle whose minimal priority is even.

    # Arguments
        initial: initial node.
        successors: function node -> iterable of nodes.
        priority: function node -> integer.

    # Returns
        `(stem, cycle)` node lists, or None when no such cycle exists.
    """
    graph = nx.DiGraph()
    graph.add_node(initial)
    parents = {initial: None}
    order = [initial]
    queue = deque([initial])
    while queue:
        node = queue.popleft()
        for target in successors(node):
            graph.add_edge(node, target)
            if target not in parents:
                parents[target] = node
                order.append(target)
                queue.append(target)
    rank = dict((n, k) for k, n in enumerate(order))

    for d in sorted(set(priority(n) for n in order)):
        if d % 2:
            continue
        sub = graph.subgraph(n for n in order if priority(n) >= d)
        for component in nx.strongly_connected_components(sub):
            anchors = sorted((n for n in component if priority(n) == d), key=rank.get)
            if not anchors:
                continue
            x = anchors[0]
            if len(component) == 1 and not sub.has_edge(x, x):
                continue
            inner = sub.subgraph(component)
            if inner.has_edge(x, x):
                cycle = [x]
            else:
                back = min((nx.shortest_path(inner, y, x) for y in inner.successors(x)), key=len)
                cycle = [x] + back[:-1]
            stem = []
            node = parents[x]
            while node is not None:
                stem.append(node)
                node = parents[node]
            return stem[::-1], cycle
    return None


def _counterexample_automaton(arena, profile, i, j, cache):
    key = (i, j)
    if key not in cache:
        alphabet = arena.state_ids
        cache[key] = dpa_conj([dpa_complement(compile_objective_to_dpa(profile[i], alphabet)),
                               compile_objective_to_dpa(profile[j], alphabet)])
    return cache[key]


def retaliation_counterexample(arena, profile, machine, cache=None):
    """Look for a play consistent with `machine` (player `i`) that violates
    `phi_i` but satisfies some `phi_j`.

    # Returns
        `(j, stem, cycle)` with arena states, or None.
    """
    cache = {} if cache is None else cache
    i = machine.player

    def moves(node):
        v, m = node
        if arena.owner(v) == i:
            targets = [machine.move(m, v)]
        else:
            targets = arena.successors(v)
        return [(w, machine.observe(m, w)) for w in targets]

    for j in arena.players:
        if j == i:
            continue
        d = _counterexample_automaton(arena, profile, i, j, cache)
        start = (arena.initial, machine.initial, d.step(d.initial, arena.initial))

        def successors(node):
            return [(w, m, d.step(node[2], w)) for w, m in moves((node[0], node[1]))]

        found = accepting_lasso(start, successors, lambda n: d.priority[n[2]])
        if found is not None:
            stem, cycle = found
            return j, [n[0] for n in stem], [n[0] for n in cycle]
    return None


def check_profile(arena, profile, strategies):
    """Check the two conditions of a doomsday equilibrium on a profile.

    Condition 1: the outcome satisfies every objective. Condition 2: for
    every `i` and `j != i`, no play consistent with player `i`'s strategy
    violates `phi_i` while satisfying `phi_j`.

    # Returns
        `CheckResult` with `is_de` and the first `Violation` found.
    """
    strategies.validate(arena)
    stem, cycle = outcome(arena, strategies)
    for i in arena.players:
        if not play_satisfies(profile[i], stem, cycle):
            return CheckResult(Violation(i, None, stem, cycle))
    cache = {}
    for machine in strategies:
        found = retaliation_counterexample(arena, profile, machine, cache)
        if found is not None:
            j, w_stem, w_cycle = found
            return CheckResult(Violation(machine.player, j, w_stem, w_cycle))
    return CheckResult()


class OracleResult(object):
    """`found` is True with `strategies` set (FoundDE), else NoneWithinBound."""

    def __init__(self, strategies=None, candidates=0):
        self.strategies = strategies
        self.candidates = candidates

    @property
    def found(self):
        return self.strategies is not None

    def __repr__(self):
        return 'OracleResult({})'.format('FoundDE' if self.found else 'NoneWithinBound')


def _space(arena, player, size):
    count = size ** (size * len(arena))
    for v in arena.owned_by(player):
        count *= len(arena.successors(v)) ** size
    return count


def _uses_all_memory(update, size, states):
    reached = set([0])
    frontier = [0]
    while frontier:
        m = frontier.pop()
        for v in states:
            n = update[(m, v)]
            if n not in reached:
                reached.add(n)
                frontier.append(n)
    return len(reached) == size


def enumerate_machines(arena, player, memory_bound):
    """All machines of `player` with at most `memory_bound` memory values,
    by memory size, then update table, then choice table. Machines whose
    memory is not reachable from the initial value are skipped."""
    states = arena.state_ids
    owned = arena.owned_by(player)
    for size in range(1, memory_bound + 1):
        memory = list(range(size))
        update_keys = [(m, v) for m in memory for v in states]
        choice_keys = [(m, v) for m in memory for v in owned]
        choice_options = [arena.successors(v) for _, v in choice_keys]
        for targets in itertools.product(memory, repeat=len(update_keys)):
            update = dict(zip(update_keys, targets))
            if size > 1 and not _uses_all_memory(update, size, states):
                continue
            for moves in itertools.product(*choice_options):
                yield StrategyMachine(player, memory, 0, update, dict(zip(choice_keys, moves)))


def behaviour(machine, arena):
    """Canonical form of the moves `machine` makes on every history.

    Memory values that no sequence of states can tell apart are merged
    (Moore refinement), and the merged machine is renumbered in breadth
    first order from the initial value. Two machines with equal forms pick
    the same successor after every history.
    """
    states = arena.state_ids
    owned = arena.owned_by(machine.player)
    block = dict((m, tuple(machine.choice[(m, v)] for v in owned)) for m in machine.memory)
    while True:
        refined = dict((m, (block[m],) + tuple(block[machine.update[(m, v)]] for v in states))
                       for m in machine.memory)
        if len(set(refined.values())) == len(set(block.values())):
            break
        block = refined

    number = {block[machine.initial]: 0}
    order = [machine.initial]
    rows = []
    k = 0
    while k < len(order):
        m = order[k]
        row = [machine.choice[(m, v)] for v in owned]
        for v in states:
            n = machine.update[(m, v)]
            if block[n] not in number:
                number[block[n]] = len(order)
                order.append(n)
            row.append(number[block[n]])
        rows.append(tuple(row))
        k += 1
    return tuple(rows)


def oracle_decide_bounded(arena, profile, memory_bound, budget=DEFAULT_ORACLE_BUDGET):
    """Brute-force search for a doomsday equilibrium among profiles of
    machines with at most `memory_bound` memory values.

    Condition 2 only involves the strategy of player `i`, so each player's
    candidates are filtered by it before the tuples are tried for
    condition 1; tuples are visited in lexicographic order. Machines with
    the same `behaviour` as an earlier one are skipped. `budget` bounds
    both the machine space and the number of tuples tried.

    # Returns
        `OracleResult`; not finding a profile is no proof that none exists.

    # Raises
        BadParams, BudgetExceeded
    """
    if len(arena) > MAX_ORACLE_STATES or arena.player_count > MAX_ORACLE_PLAYERS:
        raise BadParams('oracle limited to {} states and {} players'.format(
            MAX_ORACLE_STATES, MAX_ORACLE_PLAYERS))
    if not 1 <= memory_bound <= MAX_MEMORY_BOUND:
        raise BadParams('memory bound must lie in 1..{}'.format(MAX_MEMORY_BOUND))
    profile.validate(arena)

    space = sum(_space(arena, i, size) for i in arena.players
                for size in range(1, memory_bound + 1))
    if space > budget:
        raise BudgetExceeded(space, budget)

    cache = {}
    candidates = []
    for i in arena.players:
        known = set()
        good = []
        for m in enumerate_machines(arena, i, memory_bound):
            key = behaviour(m, arena)
            if key in known:
                continue
            known.add(key)
            if retaliation_counterexample(arena, profile, m, cache) is None:
                good.append(m)
        logger.debug('oracle: player %d keeps %d of %d behaviours', i, len(good), len(known))
        candidates.append(good)

    tried = 0
    for machines in itertools.product(*candidates):
        tried += 1
        if tried > budget:
            raise BudgetExceeded(tried, budget)
        stem, cycle = outcome(arena, machines)
        if all(play_satisfies(profile[i], stem, cycle) for i in arena.players):
            return OracleResult(StrategyProfile(machines), space)
    return OracleResult(None, space)
