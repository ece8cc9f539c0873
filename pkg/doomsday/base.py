import logging
import pprint

from . import config as solver_config
from .equilibria import decide_doomsday
from .gamefile import load_game, read_game
from .verify import assemble_profile, check_profile, oracle_decide_bounded
from .zerosum import retaliation_region

logger = logging.getLogger(__name__)


class Solver(object):
    """Central class for deciding and checking doomsday equilibria.

    # Arguments
        node_budget: maximal number of tracked product nodes.
        recursion_limit: maximal recursion depth of the parity game solver.
        oracle_budget: maximal number of candidate strategies the bounded
            oracle may enumerate.
        memory_bound: default memory bound of the oracle.
        verbose: boolean, print progress messages.
    """

    def __init__(self, node_budget=1000000, recursion_limit=500, oracle_budget=200000,
                 memory_bound=2, verbose=False, **kwargs):
        self.printer = pprint.PrettyPrinter(indent=4)
        self.node_budget = node_budget
        self.recursion_limit = recursion_limit
        self.oracle_budget = oracle_budget
        self.memory_bound = memory_bound
        self.verbose = verbose

    @classmethod
    def from_config(cls, **overrides):
        settings = dict(solver_config.SOLVER_CONFIG)
        settings.update(overrides)
        return Solver(**settings)

    def get_config(self):
        return {
            'node_budget': self.node_budget,
            'recursion_limit': self.recursion_limit,
            'oracle_budget': self.oracle_budget,
            'memory_bound': self.memory_bound
        }

    def _progress(self, message):
        if self.verbose:
            self.printer.pprint('>>> ' + message)

    @staticmethod
    def load(file_name):
        """Read a game file."""
        return load_game(file_name)

    @staticmethod
    def loads(text):
        """Parse game file text."""
        return read_game(text)

    def retaliation_regions(self, arena, profile):
        regions = []
        for i in arena.players:
            self._progress('Solving retaliation game for player {}...'.format(i))
            regions.append(retaliation_region(arena, profile, i, self.recursion_limit,
                                              self.node_budget))
        return regions

    def solve(self, arena, profile):
        """Decide whether a doomsday equilibrium exists; returns a `Verdict`."""
        profile.validate(arena)
        regions = self.retaliation_regions(arena, profile)
        self._progress('Searching the tracked product for a witness...')
        verdict = decide_doomsday(arena, profile, self.node_budget,
                                  self.recursion_limit, regions)
        self._progress('Done! Equilibrium {}'.format(verdict.label))
        return verdict

    def check(self, arena, profile, certificate):
        """Assemble the strategies of `certificate` and check them against
        the definition; returns a `CheckResult`."""
        self._progress('Assembling strategy machines...')
        strategies = assemble_profile(certificate, arena, profile)
        self._progress('Checking both equilibrium conditions...')
        result = check_profile(arena, profile, strategies)
        if not result.is_de:
            logger.info('certificate rejected: %s', result.violation.describe())
        return result

    def oracle(self, arena, profile, memory_bound=None):
        bound = self.memory_bound if memory_bound is None else memory_bound
        self._progress('Enumerating strategy profiles with memory {}...'.format(bound))
        return oracle_decide_bounded(arena, profile, bound, self.oracle_budget)
