from fractions import Fraction

import pytest

from errors import InvalidMap, UnknownPoint
from mappings import (
    EnteredCycle,
    ReachedFixedPoint,
    SelfMap,
    Truncated,
    constant_map,
    fixed_points,
    identity_map,
    iterate_orbit,
    period_two_points,
    step_map,
)
from metric import line_sample_space


class TestSelfMap:
    def test_table_and_call(self, six_point_map):
        assert six_point_map('B') == 'D'
        assert six_point_map.table['C'] == 'E'

    def test_unknown_point(self, six_point_map):
        with pytest.raises(UnknownPoint):
            six_point_map('Z')

    def test_from_table_requires_every_point(self, six_point_map):
        with pytest.raises(InvalidMap):
            SelfMap.from_table(six_point_map.space, {'A': 'B'})

    def test_from_table_rejects_unknown_source(self, six_point_map):
        table = dict(six_point_map.table, Q='A')
        with pytest.raises(InvalidMap):
            SelfMap.from_table(six_point_map.space, table)

    def test_image_outside_space(self, six_point_map):
        with pytest.raises(InvalidMap):
            SelfMap(six_point_map.space, ('A',) * 5 + ('Z',))

    def test_from_function(self, six_point_map):
        mapping = SelfMap.from_function(six_point_map.space, six_point_map)
        assert mapping == six_point_map

    def test_constant_and_identity(self, six_point_map):
        space = six_point_map.space
        assert fixed_points(identity_map(space)) == space.points
        assert fixed_points(constant_map(space, 'C')) == ('C',)
        with pytest.raises(UnknownPoint):
            constant_map(space, 'Z')


class TestStepMap:
    def test_images(self, step_line_map):
        assert step_line_map('19/10') == '0'
        assert step_line_map('2') == '1'
        assert step_line_map('21/10') == '1'
        assert step_line_map('4') == '1'

    def test_needs_sampled_space(self, six_point_map):
        with pytest.raises(InvalidMap):
            step_map(six_point_map.space)

    def test_step_values_must_be_samples(self):
        space = line_sample_space(Fraction(1, 2), 3, Fraction(1, 2))
        with pytest.raises(InvalidMap):
            step_map(space)


class TestPeriodicPoints:
    def test_fixed_points(self, six_point_map, equilateral_map):
        assert fixed_points(six_point_map) == ('F',)
        assert fixed_points(equilateral_map) == ('x', 'y')

    def test_period_two(self, swap_map, six_point_map):
        assert period_two_points(swap_map) == ('x', 'y')
        assert period_two_points(six_point_map) == ()

    def test_step_map_fixes_only_zero(self, step_line_map):
        assert fixed_points(step_line_map) == ('0',)
        assert period_two_points(step_line_map) == ()


class TestIterateOrbit:
    def test_reaches_fixed_point(self, six_point_map):
        orbit = iterate_orbit(six_point_map, 'B', 7)
        assert orbit.sequence == ('B', 'D', 'F', 'F')
        assert orbit.terminus == ReachedFixedPoint('F', 2)
        assert orbit.visited == ('B', 'D', 'F')
        assert orbit.reached_fixed_point

    def test_start_at_fixed_point(self, six_point_map):
        orbit = iterate_orbit(six_point_map, 'F', 7)
        assert orbit.visited == ('F',)
        assert orbit.terminus == ReachedFixedPoint('F', 0)

    def test_enters_cycle(self, swap_map):
        orbit = iterate_orbit(swap_map, 'x', 4)
        assert orbit.sequence == ('x', 'y', 'x')
        assert orbit.terminus == EnteredCycle(('x', 'y'), 0)
        assert not orbit.reached_fixed_point

    def test_truncated(self, six_point_map):
        orbit = iterate_orbit(six_point_map, 'B', 1)
        assert orbit.sequence == ('B', 'D')
        assert orbit.terminus == Truncated(1)
        assert orbit.visited == ('B', 'D')

    def test_bad_arguments(self, six_point_map):
        with pytest.raises(UnknownPoint):
            iterate_orbit(six_point_map, 'Z', 3)
        with pytest.raises(ValueError):
            iterate_orbit(six_point_map, 'A', 0)

    def test_every_orbit_terminates_within_size(self, six_point_map, swap_map, step_line_map):
        for mapping in (six_point_map, swap_map, step_line_map):
            for point in mapping.space.points:
                orbit = iterate_orbit(mapping, point, len(mapping.space) + 1)
                assert not isinstance(orbit.terminus, Truncated)
                assert len(orbit.visited) == len(set(orbit.visited))
