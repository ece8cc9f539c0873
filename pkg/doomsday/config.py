import json
import os


def mkdir(x):
    if not os.path.isdir(x):
        os.makedirs(x)


_USER_PATH = os.path.expanduser('~')
_BASE_DIR = os.path.join(_USER_PATH, '.doomsday')


def config_path():
    """Location of the solver configuration, `$DOOMSDAY_CONFIG` if set."""
    return os.environ.get('DOOMSDAY_CONFIG') or os.path.join(_BASE_DIR, 'config.json')


DEFAULT_SOLVER_CONFIG = {
    'node_budget': 1000000,
    'recursion_limit': 500,
    'oracle_budget': 200000,
    'memory_bound': 2,
    'edge_density': 0.3,
    'empty_set_rate': 0.1
}

SOLVER_CONFIG = dict(DEFAULT_SOLVER_CONFIG)


def save_solver_config(config):
    global SOLVER_CONFIG
    SOLVER_CONFIG = dict(DEFAULT_SOLVER_CONFIG)
    SOLVER_CONFIG.update(config)
    path = config_path()
    mkdir(os.path.dirname(os.path.abspath(path)))
    with open(path, 'w') as f:
        json.dump(SOLVER_CONFIG, f, indent=4, sort_keys=True)


def load_solver_config():
    global SOLVER_CONFIG
    SOLVER_CONFIG = dict(DEFAULT_SOLVER_CONFIG)
    path = config_path()
    if os.path.isfile(path):
        with open(path, 'r') as f:
            SOLVER_CONFIG.update(json.load(f))
    return SOLVER_CONFIG
