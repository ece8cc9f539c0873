import logging

from .automata import DPA, dpa_complement, dpa_conj, dpa_disj, universal_dpa
from .exceptions import (BadPriority, BrokenPath, IncompleteParity,
                         ProfileMismatch, UnknownState)

logger = logging.getLogger(__name__)

REACH = 'reach'
SAFETY = 'safety'
BUCHI = 'buchi'
COBUCHI = 'cobuchi'
PARITY = 'parity'

OBJECTIVE_CLASSES = (REACH, SAFETY, BUCHI, COBUCHI, PARITY)


class Objective(object):
    """Objective

    A state-based objective of one player: a set of infinite plays, evaluated
    on every visited state including the initial one. Use one of the
    subclasses `Reachability`, `Safety`, `Buchi`, `CoBuchi` or `Parity`.
    """
    kind = None

    def __init__(self, states):
        self.states = frozenset(states)

    def referenced(self):
        return set(self.states)

    def validate(self, arena):
        """Check that every referenced state exists in `arena`."""
        for state in sorted(self.referenced()):
            if state not in arena:
                raise UnknownState(state)
        return self

    def satisfied_by(self, stem, cycle):
        raise NotImplementedError

    def to_tokens(self):
        return [self.kind] + sorted(self.states)

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.kind, self._key()))

    def _key(self):
        return self.states

    def __repr__(self):
        return '{}({})'.format(type(self).__name__, sorted(self.states))


class Reachability(Objective):
    """Visit some state of `target` at least once."""
    kind = REACH

    def satisfied_by(self, stem, cycle):
        return any(s in self.states for s in stem) or any(s in self.states for s in cycle)


class Safety(Objective):
    """Never leave the `safe` set."""
    kind = SAFETY

    def satisfied_by(self, stem, cycle):
        return all(s in self.states for s in stem) and all(s in self.states for s in cycle)


class Buchi(Objective):
    """Visit `rec` infinitely often."""
    kind = BUCHI

    def satisfied_by(self, stem, cycle):
        return any(s in self.states for s in cycle)


class CoBuchi(Objective):
    """Eventually stay in `tail` forever."""
    kind = COBUCHI

    def satisfied_by(self, stem, cycle):
        return all(s in self.states for s in cycle)


class Parity(Objective):
    """Minimal priority seen infinitely often is even.

    # Arguments
        priorities: dict mapping every arena state to a non-negative integer.
    """
    kind = PARITY

    def __init__(self, priorities):
        self.priorities = dict(priorities)
        super(Parity, self).__init__(self.priorities)

    def validate(self, arena):
        super(Parity, self).validate(arena)
        missing = [s for s in arena.state_ids if s not in self.priorities]
        if missing:
            raise IncompleteParity(missing)
        limit = 2 * len(arena)
        for state in sorted(self.priorities):
            p = self.priorities[state]
            if isinstance(p, bool) or not isinstance(p, int) or not 0 <= p <= limit:
                raise BadPriority(state, p, limit)
        return self

    def priority(self, state):
        try:
            return self.priorities[state]
        except KeyError:
            raise UnknownState(state)

    def satisfied_by(self, stem, cycle):
        return min(self.priority(s) for s in cycle) % 2 == 0

    def to_tokens(self):
        return [self.kind] + ['{}:{}'.format(s, self.priorities[s])
                              for s in sorted(self.priorities)]

    def _key(self):
        return tuple(sorted(self.priorities.items()))

    def __repr__(self):
        return 'Parity({})'.format(dict(sorted(self.priorities.items())))


_CLASSES = {
    REACH: Reachability,
    SAFETY: Safety,
    BUCHI: Buchi,
    COBUCHI: CoBuchi,
    PARITY: Parity
}


def make_objective(kind, argument):
    """Build an objective of class `kind` ('reach', 'safety', 'buchi',
    'cobuchi' or 'parity') from a state set or a priority map."""
    try:
        return _CLASSES[kind](argument)
    except KeyError:
        raise ValueError('Unknown objective class {!r}'.format(kind))


class ObjectiveProfile(object):
    """ObjectiveProfile

    One objective per player; `profile[i]` is the objective of player `i`,
    counting from 1.

    # Arguments
        objectives: list of `Objective`, in player order.
    """

    def __init__(self, objectives):
        self.objectives = tuple(objectives)

    def __getitem__(self, player):
        if not 1 <= player <= len(self.objectives):
            raise IndexError('No player {}'.format(player))
        return self.objectives[player - 1]

    def __len__(self):
        return len(self.objectives)

    def __iter__(self):
        return iter(self.objectives)

    def __eq__(self, other):
        return isinstance(other, ObjectiveProfile) and self.objectives == other.objectives

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.objectives)

    def __repr__(self):
        return 'ObjectiveProfile({!r})'.format(list(self.objectives))

    @property
    def classes(self):
        return [o.kind for o in self.objectives]

    def validate(self, arena):
        if len(self.objectives) != arena.player_count:
            raise ProfileMismatch(len(self.objectives), arena.player_count)
        for objective in self.objectives:
            objective.validate(arena)
        return self


def check_path(arena, stem, cycle):
    """Raise `BrokenPath` unless `stem.cycle^w` follows arena edges."""
    play = list(stem) + list(cycle) + list(cycle[:1])
    for state in play:
        if state not in arena:
            raise UnknownState(state)
    for source, target in zip(play, play[1:]):
        if not arena.has_edge(source, target):
            raise BrokenPath(source, target)


def play_satisfies(obj, stem, cycle, arena=None):
    """Decide whether the play `stem.cycle^w` satisfies `obj`.

    # Arguments
        obj: an `Objective`.
        stem: list of state ids, may be empty.
        cycle: nonempty list of state ids.
        arena: optional `Arena`; when given the play is checked to be a path.

    # Raises
        BrokenPath
    """
    if not cycle:
        raise ValueError('cycle must be nonempty')
    if arena is not None:
        check_path(arena, stem, cycle)
    return obj.satisfied_by(list(stem), list(cycle))


def _two_state(alphabet, first, second, initial, labels, choose):
    # choose(state, letter) -> 0 or 1
    delta = [dict((a, choose(q, a)) for a in alphabet) for q in (0, 1)]
    return DPA(alphabet, delta, [first, second], initial, labels)


def compile_objective_to_dpa(obj, alphabet):
    """Compile an objective into a DPA over `alphabet` (the arena state ids)
    whose language is exactly the set of plays satisfying it."""
    alphabet = tuple(sorted(alphabet))
    states = obj.states
    if obj.kind == REACH:
        # pending:1, done:0 (absorbing)
        return _two_state(alphabet, 1, 0, 0, ['pending', 'done'],
                          lambda q, a: 1 if q == 1 or a in states else 0)
    if obj.kind == SAFETY:
        # ok:0, bad:1 (absorbing)
        return _two_state(alphabet, 0, 1, 0, ['ok', 'bad'],
                          lambda q, a: 1 if q == 1 or a not in states else 0)
    if obj.kind == BUCHI:
        # inB:0, outB:1
        return _two_state(alphabet, 0, 1, 1, ['inB', 'outB'],
                          lambda q, a: 0 if a in states else 1)
    if obj.kind == COBUCHI:
        # inC:2, outC:1
        return _two_state(alphabet, 2, 1, 1, ['inC', 'outC'],
                          lambda q, a: 0 if a in states else 1)
    if obj.kind == PARITY:
        values = sorted(set(obj.priority(a) for a in alphabet))
        index = dict((p, k) for k, p in enumerate(values))
        delta = [dict((a, index[obj.priority(a)]) for a in alphabet) for _ in values]
        return DPA(alphabet, delta, values, len(values) - 1,
                   ['p{}'.format(p) for p in values])
    raise ValueError('Unknown objective class {!r}'.format(obj.kind))


class Expression(object):
    """Node of a boolean objective expression tree."""

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((type(self).__name__, repr(self)))


class Atom(Expression):

    def __init__(self, objective):
        self.objective = objective

    def __repr__(self):
        return 'Atom({!r})'.format(self.objective)


class Not(Expression):

    def __init__(self, operand):
        self.operand = operand

    def __repr__(self):
        return 'Not({!r})'.format(self.operand)


class And(Expression):

    def __init__(self, *operands):
        self.operands = tuple(operands)

    def __repr__(self):
        return 'And({})'.format(', '.join(repr(o) for o in self.operands))


class Or(Expression):

    def __init__(self, *operands):
        self.operands = tuple(operands)

    def __repr__(self):
        return 'Or({})'.format(', '.join(repr(o) for o in self.operands))


def retaliation_objective(i, profile):
    """The objective player `i` must force after any deviation:
    `phi_i or (not phi_1 and ... and not phi_n)`."""
    if not 1 <= i <= len(profile):
        raise IndexError('No player {}'.format(i))
    return Or(Atom(profile[i]), And(*[Not(Atom(o)) for o in profile]))


def evaluate_expression(expr, stem, cycle):
    """Decide `expr` on the play `stem.cycle^w` directly from the objectives."""
    if isinstance(expr, Atom):
        return play_satisfies(expr.objective, stem, cycle)
    if isinstance(expr, Not):
        return not evaluate_expression(expr.operand, stem, cycle)
    if isinstance(expr, And):
        return all(evaluate_expression(e, stem, cycle) for e in expr.operands)
    if isinstance(expr, Or):
        return any(evaluate_expression(e, stem, cycle) for e in expr.operands)
    raise TypeError('Not an expression: {!r}'.format(expr))


def simplify(expr):
    """Drop `not A` from conjunctions that sit next to `A` in a disjunction;
    `A or (B and not A)` and `A or B` have the same plays."""
    if isinstance(expr, Not):
        return Not(simplify(expr.operand))
    if isinstance(expr, And):
        return And(*[simplify(e) for e in expr.operands])
    if isinstance(expr, Or):
        operands = [simplify(e) for e in expr.operands]
        siblings = [Not(e) for e in operands if not isinstance(e, And)]
        absorbed = []
        for e in operands:
            if isinstance(e, And):
                e = And(*[c for c in e.operands if c not in siblings])
            absorbed.append(e)
        return Or(*absorbed)
    return expr


def compile_expression(expr, alphabet, simplified=True, node_budget=None):
    """Compile an expression tree into a DPA over `alphabet`; every
    intermediate product is capped at `node_budget` states."""
    if simplified:
        expr = simplify(expr)
    if isinstance(expr, Atom):
        return compile_objective_to_dpa(expr.objective, alphabet)
    if isinstance(expr, Not):
        return dpa_complement(compile_expression(expr.operand, alphabet, False, node_budget))
    if isinstance(expr, And):
        if not expr.operands:
            return universal_dpa(alphabet)
        return dpa_conj([compile_expression(e, alphabet, False, node_budget)
                         for e in expr.operands], node_budget)
    if isinstance(expr, Or):
        parts = [compile_expression(e, alphabet, False, node_budget) for e in expr.operands]
        if any(len(p) == 1 and p.priority[0] % 2 == 0 for p in parts):
            return universal_dpa(alphabet)
        return dpa_disj(parts, node_budget)
    raise TypeError('Not an expression: {!r}'.format(expr))
