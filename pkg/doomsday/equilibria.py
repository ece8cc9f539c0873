import logging
from collections import deque, namedtuple

import networkx as nx

from .automata import dpa_conj
from .exceptions import BrokenPath, SizeLimit
from .objectives import compile_objective_to_dpa
from .zerosum import DEFAULT_RECURSION_LIMIT, retaliation_region

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10 ** 6

ProductNode = namedtuple('ProductNode', ['state', 'q_all', 'retaliation'])


class TrackedProduct(object):
    """TrackedProduct

    The arena run in lockstep with the conjunction automaton of all
    objectives (`q_all`) and with every player's retaliation automaton.
    Only nodes reachable from the initial node are materialized.

    # Arguments
        arena: `Arena`.
        conjunction: `DPA` accepting the plays that satisfy every objective.
        automata: list of retaliation `DPA`s, in player order.
        successors: dict node -> list of successor nodes, in arena id order.
        initial: initial `ProductNode`.
    """

    def __init__(self, arena, conjunction, automata, successors, initial):
        self.arena = arena
        self.conjunction = conjunction
        self.automata = automata
        self.successors = successors
        self.initial = initial

    @property
    def nodes(self):
        return list(self.successors)

    def __len__(self):
        return len(self.successors)

    def __repr__(self):
        return 'TrackedProduct(nodes={})'.format(len(self.successors))

    def priority(self, node):
        return self.conjunction.priority[node.q_all]

    def advance(self, node, state):
        return ProductNode(state,
                           self.conjunction.step(node.q_all, state),
                           tuple(d.step(r, state) for d, r in zip(self.automata, node.retaliation)))


def _start(arena, conjunction, automata):
    v = arena.initial
    return ProductNode(v, conjunction.step(conjunction.initial, v),
                       tuple(d.step(d.initial, v) for d in automata))


def tracked_product(arena, profile, regions=None, node_budget=DEFAULT_NODE_BUDGET,
                    recursion_limit=DEFAULT_RECURSION_LIMIT):
    """Build the reachable part of the tracked product.

    # Arguments
        arena: `Arena`.
        profile: `ObjectiveProfile`.
        regions: retaliation regions in player order, computed when omitted.
        node_budget: maximal number of product nodes.

    # Raises
        SizeLimit
    """
    if regions is None:
        regions = [retaliation_region(arena, profile, i, recursion_limit, node_budget)
                   for i in arena.players]
    alphabet = arena.state_ids
    conjunction = dpa_conj([compile_objective_to_dpa(o, alphabet) for o in profile],
                           node_budget)
    automata = [r.automaton for r in regions]

    initial = _start(arena, conjunction, automata)
    tp = TrackedProduct(arena, conjunction, automata, {}, initial)
    queue = deque([initial])
    seen = set([initial])
    while queue:
        node = queue.popleft()
        targets = [tp.advance(node, w) for w in arena.successors(node.state)]
        tp.successors[node] = targets
        for target in targets:
            if target not in seen:
                seen.add(target)
                if len(seen) > node_budget:
                    raise SizeLimit(len(seen), node_budget)
                queue.append(target)
    logger.debug('tracked product: %d nodes, conjunction %d states', len(tp), len(conjunction))
    return tp


def permitted_edge(tp, node, target, regions):
    """Whether the main play may move from `node` to arena state `target`.

    Every other successor of the current state is a deviation; it must land
    in the retaliation region of each player other than the owner.

    # Raises
        BrokenPath when `target` is not a successor of `node.state`
    """
    arena = tp.arena
    if not arena.has_edge(node.state, target):
        raise BrokenPath(node.state, target)
    owner = arena.owner(node.state)
    for region in regions:
        if region.player == owner:
            continue
        q = node.retaliation[region.player - 1]
        for w in arena.successors(node.state):
            if w != target and region.entry(w, q) not in region.winning:
                return False
    return True


def permitted_successors(tp, regions):
    """Successor map of `tp` restricted to permitted edges."""
    permitted = {}
    for node, targets in tp.successors.items():
        permitted[node] = [t for t in targets if permitted_edge(tp, node, t.state, regions)]
    return permitted


def _breadth_first(initial, successors):
    parents = {initial: None}
    order = [initial]
    queue = deque([initial])
    while queue:
        node = queue.popleft()
        for target in successors[node]:
            if target not in parents:
                parents[target] = node
                order.append(target)
                queue.append(target)
    return order, parents


def _shortest_return(node, successors, allowed):
    parents = {}
    queue = deque([node])
    while queue:
        current = queue.popleft()
        for target in successors[current]:
            if target not in allowed:
                continue
            if target == node:
                path = [current]
                while path[-1] != node:
                    path.append(parents[path[-1]])
                return path[::-1]
            if target not in parents:
                parents[target] = current
                queue.append(target)
    return None


def _on_cycles(nodes, successors):
    graph = nx.DiGraph()
    graph.add_nodes_from(nodes)
    graph.add_edges_from((n, t) for n in nodes for t in successors[n] if t in nodes)
    result = set()
    for component in nx.strongly_connected_components(graph):
        if len(component) > 1:
            result.update(component)
        else:
            n = next(iter(component))
            if graph.has_edge(n, n):
                result.add(n)
    return result


def compact_lasso(stem, cycle):
    """Shortest presentation of the play `stem.cycle^w` that keeps at least
    the first state in the stem."""
    stem, cycle = list(stem), list(cycle)
    n = len(cycle)
    for k in range(1, n + 1):
        if n % k == 0 and cycle == cycle[:k] * (n // k):
            cycle = cycle[:k]
            break
    while len(stem) > 1 and stem[-1] == cycle[-1]:
        cycle = [stem.pop()] + cycle[:-1]
    return stem, cycle


class Certificate(object):
    """Certificate

    Finite presentation of a doomsday equilibrium: the main play as a lasso
    and, for every player, the positional retaliation strategy on the
    product of the arena with its retaliation automaton.

    # Arguments
        stem: arena states of the compacted main play before the cycle.
        cycle: arena states repeated forever.
        retaliation: dict player -> `{(state, q): successor state}`.
        players: player count, None when unknown.
        classes: objective class names, in player order.
        stem_nodes: product nodes of the lasso found by the search (optional).
        cycle_nodes: product nodes of the cycle (optional).
        automata: retaliation `DPA`s the strategies refer to (optional).
    """

    def __init__(self, stem, cycle, retaliation, players, classes=None,
                 stem_nodes=None, cycle_nodes=None, automata=None):
        self.stem = list(stem)
        self.cycle = list(cycle)
        self.retaliation = dict(retaliation)
        self.players = players
        self.classes = list(classes or [])
        self.stem_nodes = stem_nodes
        self.cycle_nodes = cycle_nodes
        self.automata = automata

    @property
    def play(self):
        return self.stem + self.cycle

    def __repr__(self):
        return 'Certificate(stem={}, cycle={})'.format(self.stem, self.cycle)


class Verdict(object):
    """Outcome of `decide_doomsday`: `exists` and, if so, a `certificate`."""

    EXISTS = 'exists'
    NOT_EXISTS = 'not_exists'

    def __init__(self, players, certificate=None, classes=None):
        self.players = players
        self.certificate = certificate
        self.classes = list(classes or [])

    @property
    def exists(self):
        return self.certificate is not None

    @property
    def label(self):
        return self.EXISTS if self.exists else self.NOT_EXISTS

    def __repr__(self):
        return 'Verdict({})'.format(self.label)


def witness_search(tp, regions):
    """Search the permitted part of `tp` for a lasso accepted by the
    conjunction automaton.

    Even priorities are tried in increasing order. For priority `d` the
    candidate nodes are those of priority `d` lying on a cycle of the
    permitted subgraph with priorities at least `d`; the first one in
    breadth-first order (successors by state id) is taken, with a shortest
    stem and a shortest cycle.

    # Returns
        A `Certificate`, or None.
    """
    permitted = permitted_successors(tp, regions)
    order, parents = _breadth_first(tp.initial, permitted)
    levels = sorted(set(tp.priority(n) for n in order))
    for d in levels:
        if d % 2:
            continue
        allowed = set(n for n in order if tp.priority(n) >= d)
        on_cycles = _on_cycles(allowed, permitted)
        for x in order:
            if tp.priority(x) != d or x not in on_cycles:
                continue
            cycle = _shortest_return(x, permitted, allowed)
            stem = []
            node = parents[x]
            while node is not None:
                stem.append(node)
                node = parents[node]
            stem.reverse()
            if not stem:
                stem, cycle = [cycle[0]], cycle[1:] + [cycle[0]]
            logger.debug('witness at priority %d: stem %d, cycle %d', d, len(stem), len(cycle))
            play_stem, play_cycle = compact_lasso([n.state for n in stem],
                                                  [n.state for n in cycle])
            return Certificate(play_stem, play_cycle,
                               dict((r.player, r.choices()) for r in regions),
                               tp.arena.player_count,
                               stem_nodes=stem, cycle_nodes=cycle,
                               automata=[r.automaton for r in regions])
    return None


def decide_doomsday(arena, profile, node_budget=DEFAULT_NODE_BUDGET,
                    recursion_limit=DEFAULT_RECURSION_LIMIT, regions=None):
    """Decide whether `arena` with `profile` admits a doomsday equilibrium.

    A doomsday equilibrium exists iff some play from the initial state
    satisfies every objective while each deviation off it, at every
    position, lands in the retaliation region of every player other than
    the one who moved.

    # Returns
        A `Verdict`; its certificate is set when an equilibrium exists.

    # Raises
        SizeLimit, RecursionLimit
    """
    profile.validate(arena)
    if regions is None:
        regions = [retaliation_region(arena, profile, i, recursion_limit, node_budget)
                   for i in arena.players]
    tp = tracked_product(arena, profile, regions, node_budget, recursion_limit)
    certificate = witness_search(tp, regions)
    if certificate is not None:
        certificate.classes = profile.classes
    verdict = Verdict(arena.player_count, certificate, profile.classes)
    logger.info('doomsday equilibrium: %s', verdict.label)
    return verdict
