__version__ = '0.1.0'

from doomsday.exceptions import *
from doomsday.arena import *
from doomsday.automata import *
from doomsday.objectives import *
from doomsday.zerosum import *
from doomsday.equilibria import *
from doomsday.verify import *
from doomsday.gamefile import *
from doomsday.results import *
from doomsday.generator import *
from doomsday.base import *
from doomsday.utils import *
from doomsday.config import load_solver_config

# Pick up saved solver limits when first importing doomsday
load_solver_config()
