import logging
from collections import deque

from .exceptions import AlphabetMismatch, AutomatonError, SizeLimit, UnknownLetter

logger = logging.getLogger(__name__)


class DPA(object):
    """DPA

    Deterministic parity automaton over the state ids of an arena. States are
    the integers `0..len(priority) - 1`. A run accepts iff the minimal
    priority among the states it visits infinitely often is even.

    # Arguments
        alphabet: iterable of letters (arena state ids).
        delta: list indexed by state of dicts `{letter: next state}`.
        priority: list of non-negative integers, one per state.
        initial: initial state.
        labels: optional list of display names, one per state.
    """

    def __init__(self, alphabet, delta, priority, initial=0, labels=None):
        self.alphabet = tuple(sorted(alphabet))
        self.delta = [dict(row) for row in delta]
        self.priority = list(priority)
        self.initial = initial
        self.labels = list(labels) if labels else [str(q) for q in range(len(self.priority))]
        self.check()

    @property
    def states(self):
        return range(len(self.priority))

    def __len__(self):
        return len(self.priority)

    def __repr__(self):
        return 'DPA(states={}, letters={}, priorities={})'.format(
            len(self), len(self.alphabet), sorted(set(self.priority)))

    def step(self, state, letter):
        try:
            return self.delta[state][letter]
        except KeyError:
            raise UnknownLetter(letter)

    def run(self, word, start=None):
        """State reached after reading `word` from `start` (initial by default)."""
        state = self.initial if start is None else start
        for letter in word:
            state = self.step(state, letter)
        return state

    def check(self):
        """Structural self-check: delta total and single-valued, priorities valid."""
        letters = set(self.alphabet)
        size = len(self.priority)
        if len(self.delta) != size or not 0 <= self.initial < size:
            raise AutomatonError('state count mismatch')
        for q, row in enumerate(self.delta):
            if set(row) != letters:
                raise AutomatonError('delta not total in state {}'.format(q))
            for target in row.values():
                if not 0 <= target < size:
                    raise AutomatonError('dangling target from state {}'.format(q))
        if any(p < 0 for p in self.priority):
            raise AutomatonError('negative priority')
        return self


def universal_dpa(alphabet):
    """One-state automaton accepting every word."""
    alphabet = tuple(sorted(alphabet))
    return DPA(alphabet, [dict((a, 0) for a in alphabet)], [0], labels=['true'])


def explore(alphabet, initial, transition, priority, label=repr, node_budget=None):
    """Build a DPA from an implicit one by breadth-first search.

    States are numbered in discovery order, letters are tried in sorted
    order, so the layout only depends on the inputs.

    # Arguments
        alphabet: letters.
        initial: hashable initial macro state.
        transition: function `(macro state, letter) -> macro state`.
        priority: function `macro state -> priority`.
        label: function used to name macro states.
        node_budget: maximal number of states, unbounded when None.

    # Raises
        SizeLimit
    """
    alphabet = tuple(sorted(alphabet))
    index = {initial: 0}
    order = [initial]
    delta = []
    queue = deque([initial])
    while queue:
        macro = queue.popleft()
        row = {}
        for letter in alphabet:
            target = transition(macro, letter)
            if target not in index:
                index[target] = len(order)
                order.append(target)
                if node_budget is not None and len(order) > node_budget:
                    raise SizeLimit(len(order), node_budget)
                queue.append(target)
            row[letter] = index[target]
        delta.append(row)
    return DPA(alphabet, delta, [priority(m) for m in order],
               labels=[label(m) for m in order])


def dpa_accepts_lasso(d, stem, cycle):
    """Decide whether `d` accepts the ultimately periodic word `stem.cycle^w`.

    Runs `stem`, then iterates `cycle` until a pair (automaton state, cycle
    position) repeats; the word is accepted iff the minimal priority on the
    detected loop is even.

    # Raises
        UnknownLetter, ValueError for an empty cycle
    """
    cycle = list(cycle)
    if not cycle:
        raise ValueError('cycle must be nonempty')
    state = d.run(stem)
    seen = {}
    trace = []
    position = 0
    while (state, position) not in seen:
        seen[(state, position)] = len(trace)
        state = d.step(state, cycle[position])
        trace.append(d.priority[state])
        position = (position + 1) % len(cycle)
    return min(trace[seen[(state, position)]:]) % 2 == 0


def dpa_complement(d):
    """Shift every priority up by one; the language is complemented."""
    return DPA(d.alphabet, d.delta, [p + 1 for p in d.priority], d.initial,
               ['~' + l for l in d.labels])


def normalized_priorities(priorities):
    """Map priorities onto a compact range with unchanged min-even verdicts.

    Consecutive distinct values of equal parity merge, so the result
    alternates in parity and starts at 0 or 1.
    """
    values = sorted(set(priorities))
    mapping = {}
    current = None
    previous = None
    for p in values:
        if current is None:
            current = p % 2
        elif p % 2 != previous % 2:
            current += 1
        mapping[p] = current
        previous = p
    return [mapping[p] for p in priorities]


def _streett_pairs(components):
    # One pair per odd priority p of a component: visiting p infinitely
    # often requires visiting something smaller infinitely often.
    pairs = []
    for c, d in enumerate(components):
        levels = normalized_priorities(d.priority)
        for p in sorted(set(levels)):
            if p % 2 == 1:
                requests = frozenset(q for q in d.states if levels[q] == p)
                grants = frozenset(q for q in d.states if levels[q] < p)
                pairs.append((c, requests, grants))
    return pairs


def _check_alphabets(ds):
    alphabet = ds[0].alphabet
    for d in ds[1:]:
        if d.alphabet != alphabet:
            raise AlphabetMismatch(alphabet, d.alphabet)
    return alphabet


def dpa_conj(ds, node_budget=None):
    """Intersection of a nonempty list of DPAs.

    The product carries an index appearance record over the Streett pairs of
    the components: a permutation of pair indices in which granted pairs move
    to the back. A product state `(qs, record)` holds the record as it stood
    before the grants of `qs` were applied; its priority is `min(2f, 2e + 1)`
    where `f` (`e`) is the first 1-based record position whose pair is
    granted (requested) by `qs`, `h + 1` when there is none.

    # Raises
        AlphabetMismatch, ValueError for an empty list, SizeLimit when the
        product has more than `node_budget` states
    """
    ds = list(ds)
    if not ds:
        raise ValueError('dpa_conj needs at least one automaton')
    alphabet = _check_alphabets(ds)
    if len(ds) == 1:
        return ds[0]

    pairs = _streett_pairs(ds)
    none = len(pairs) + 1

    def positions(qs, record):
        requested = granted = none
        for position, k in enumerate(record, 1):
            c, requests, grants = pairs[k]
            if qs[c] in requests and requested == none:
                requested = position
            if qs[c] in grants and granted == none:
                granted = position
        return requested, granted

    def priority(macro):
        requested, granted = positions(*macro)
        return min(2 * granted, 2 * requested + 1)

    def transition(macro, letter):
        qs, record = macro
        moved = tuple(k for k in record if qs[pairs[k][0]] in pairs[k][2])
        kept = tuple(k for k in record if k not in moved)
        return tuple(d.step(q, letter) for d, q in zip(ds, qs)), kept + moved

    def label(macro):
        qs, record = macro
        return '({})[{}]'.format(','.join(d.labels[q] for d, q in zip(ds, qs)),
                                 ' '.join(str(k) for k in record))

    initial = (tuple(d.initial for d in ds), tuple(range(len(pairs))))
    result = explore(alphabet, initial, transition, priority, label, node_budget)
    logger.debug('conjunction of %d automata (%d pairs): %d states',
                 len(ds), len(pairs), len(result))
    return result


def dpa_disj(ds, node_budget=None):
    """Union of a nonempty list of DPAs, by De Morgan over `dpa_conj`."""
    ds = list(ds)
    if len(ds) == 1:
        return ds[0]
    return dpa_complement(dpa_conj([dpa_complement(d) for d in ds], node_budget))
