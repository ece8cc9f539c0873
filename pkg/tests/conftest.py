import os

import pytest

from doomsday import config, load_game

GAMES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'games')


def game_path(name):
    for file_name in sorted(os.listdir(GAMES_DIR)):
        if file_name.startswith(name + '_') and file_name.endswith('.game'):
            return os.path.join(GAMES_DIR, file_name)
    raise IOError('no game file for {}'.format(name))


def load(name):
    return load_game(game_path(name))


@pytest.fixture
def games():
    return load


@pytest.fixture
def g1():
    return load('g01')


@pytest.fixture
def g2():
    return load('g02')


@pytest.fixture
def g3():
    return load('g03')


@pytest.fixture
def g4():
    return load('g04')


@pytest.fixture(autouse=True)
def solver_config():
    saved = config.SOLVER_CONFIG
    yield saved
    config.SOLVER_CONFIG = saved
