from fractions import Fraction
from pathlib import Path

import pytest

from mappings import step_map
from metric import line_sample_space
from spacefile import read_space_file

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / 'fixtures'
DATA = Path(__file__).resolve().parent / 'data'


def load_map(name):
    doc = read_space_file(FIXTURES / name)
    return doc.build_map(doc.build_space())


@pytest.fixture
def equilateral_map():
    """x, y fixed; z sent to x; all distances 1."""
    return load_map('equilateral_two_fixed.space')


@pytest.fixture
def six_point_map():
    return load_map('six_point_chain.space')


@pytest.fixture
def swap_map():
    return load_map('swap.space')


@pytest.fixture
def step_line_map():
    space = line_sample_space(0, 4, Fraction(1, 10), [Fraction(19, 10), Fraction(21, 10)])
    return step_map(space)
