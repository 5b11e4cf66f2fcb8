"""classify against the brute-force lambda-grid reference in tests/oracles.py."""

import math
import random
from fractions import Fraction
from itertools import product

from classifiers import ContractionClass, classify
from mappings import SelfMap
from metric import random_metric_space
from tests.oracles import grid_member, holds_at

EXACT_GRID = 2520
COARSE_GRID = 1000


def test_all_equilateral_maps_agree(equilateral_map):
    space = equilateral_map.space
    for images in product(space.points, repeat=3):
        mapping = SelfMap(space, images)
        for contraction_class in ContractionClass:
            report = classify(mapping, contraction_class)
            assert grid_member(mapping, contraction_class, EXACT_GRID) == report.member, (images, contraction_class)


def random_four_point_maps(count, seed=2024):
    rng = random.Random(seed)
    for _ in range(count):
        space = random_metric_space(4, rng.getrandbits(64))
        yield SelfMap(space, tuple(rng.choice(space.points) for _ in space.points))


def test_random_four_point_spaces_agree():
    for mapping in random_four_point_maps(100):
        for contraction_class in ContractionClass:
            report = classify(mapping, contraction_class)
            on_grid = grid_member(mapping, contraction_class, COARSE_GRID)
            if on_grid:
                assert report.member
            if report.member:
                first_grid_point = Fraction(math.ceil(report.lambda_star * COARSE_GRID), COARSE_GRID)
                assert on_grid == (first_grid_point < contraction_class.bound)


def test_lambda_star_is_tight():
    for mapping in random_four_point_maps(40, seed=7):
        for contraction_class in ContractionClass:
            report = classify(mapping, contraction_class)
            if report.lambda_star is None:
                assert not holds_at(mapping, contraction_class, 10 ** 6)
                continue
            assert holds_at(mapping, contraction_class, report.lambda_star)
            if report.lambda_star > 0:
                assert not holds_at(mapping, contraction_class, report.lambda_star * Fraction(999_999, 10 ** 6))


def test_fixture_coefficients_hold(six_point_map, equilateral_map, step_line_map):
    gc = ContractionClass.GENERALIZED_CHATTERJEA
    assert holds_at(equilateral_map, gc, Fraction(2, 5))
    assert holds_at(six_point_map, gc, Fraction(1, 3))
    assert holds_at(step_line_map, gc, Fraction(1, 3))
    assert not holds_at(six_point_map, ContractionClass.CHATTERJEA, Fraction(49, 100))
