class DoomsdayError(Exception):
    """Base class of every error raised by the doomsday package."""


class InputError(DoomsdayError, ValueError):
    """The caller handed over an invalid game, objective, certificate or parameter."""


class ResourceLimit(DoomsdayError):
    """A configured size or enumeration budget was exceeded."""


class AutomatonError(DoomsdayError):
    """An automaton failed its structural self-check after construction."""


class DeadlockState(InputError):

    def __init__(self, state):
        self.state = state
        super(DeadlockState, self).__init__(
            "State '{}' has no successor".format(state))


class UnknownState(InputError):

    def __init__(self, state):
        self.state = state
        super(UnknownState, self).__init__(
            "Unknown state '{}'".format(state))


class BadOwner(InputError):

    def __init__(self, state, owner):
        self.state = state
        self.owner = owner
        super(BadOwner, self).__init__(
            "State '{}' has invalid owner {!r}".format(state, owner))


class DuplicateState(InputError):

    def __init__(self, state):
        self.state = state
        super(DuplicateState, self).__init__(
            "State '{}' declared twice".format(state))


class DuplicateEdge(InputError):

    def __init__(self, source, target):
        self.source = source
        self.target = target
        super(DuplicateEdge, self).__init__(
            "Edge '{}' -> '{}' declared twice".format(source, target))


class BadPlayerCount(InputError):

    def __init__(self, count):
        self.count = count
        super(BadPlayerCount, self).__init__(
            "Player count must be a positive integer, got {!r}".format(count))


class BadPriority(InputError):

    def __init__(self, state, priority, limit):
        self.state = state
        self.priority = priority
        self.limit = limit
        super(BadPriority, self).__init__(
            "Priority {!r} of state '{}' outside 0..{}".format(priority, state, limit))


class IncompleteParity(InputError):

    def __init__(self, missing):
        self.missing = sorted(missing)
        super(IncompleteParity, self).__init__(
            "Parity objective has no priority for: {}".format(', '.join(self.missing)))


class ProfileMismatch(InputError):

    def __init__(self, objectives, players):
        self.objectives = objectives
        self.players = players
        super(ProfileMismatch, self).__init__(
            "{} objectives given for {} players".format(objectives, players))


class BrokenPath(InputError):

    def __init__(self, source, target):
        self.source = source
        self.target = target
        super(BrokenPath, self).__init__(
            "'{}' -> '{}' is not an edge of the arena".format(source, target))


class UnknownLetter(InputError):

    def __init__(self, letter):
        self.letter = letter
        super(UnknownLetter, self).__init__(
            "Letter '{}' is not in the automaton alphabet".format(letter))


class AlphabetMismatch(InputError):

    def __init__(self, expected, found):
        self.expected = tuple(expected)
        self.found = tuple(found)
        super(AlphabetMismatch, self).__init__(
            "Alphabets differ: {} vs {}".format(list(self.expected), list(self.found)))


class GameSyntaxError(InputError):

    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super(GameSyntaxError, self).__init__(
            "line {}: {}".format(line, reason))


class MissingObjective(InputError):

    def __init__(self, player):
        self.player = player
        super(MissingObjective, self).__init__(
            "No objective line for player {}".format(player))


class DuplicateObjective(InputError):

    def __init__(self, player, line=None):
        self.player = player
        self.line = line
        super(DuplicateObjective, self).__init__(
            "Second objective line for player {}".format(player))


class MalformedCertificate(InputError):
    pass


class MalformedStrategy(InputError):
    pass


class BadParams(InputError):
    pass


class SizeLimit(ResourceLimit):

    def __init__(self, nodes, budget):
        self.nodes = nodes
        self.budget = budget
        super(SizeLimit, self).__init__(
            "Product exceeds the node budget of {} ({} nodes)".format(budget, nodes))


class BudgetExceeded(ResourceLimit):

    def __init__(self, count, budget):
        self.count = count
        self.budget = budget
        super(BudgetExceeded, self).__init__(
            "Enumeration space of {} candidates exceeds the budget of {}".format(count, budget))


class RecursionLimit(ResourceLimit):

    def __init__(self, depth):
        self.depth = depth
        super(RecursionLimit, self).__init__(
            "Parity solver recursion deeper than {}".format(depth))
