from fractions import Fraction

import pytest

from errors import ParseError
from metric import line_sample_space
from mappings import step_map
from spacefile import parse_space_text, read_space_file, write_space_file
from tests.conftest import FIXTURES

HEADER = 'space\npoint A\npoint B\npoint C\n'


def test_reads_six_point_fixture():
    doc = read_space_file(FIXTURES / 'six_point_chain.space')
    assert doc.points == ['A', 'B', 'C', 'D', 'E', 'F']
    assert len(doc.distances) == 15
    assert doc.sends['B'] == 'D'
    assert doc.violations() == []
    mapping = doc.build_map(doc.build_space())
    assert mapping.images == ('F', 'D', 'E', 'F', 'F', 'F')


def test_every_shipped_fixture_is_valid():
    for path in sorted(FIXTURES.glob('*.space')):
        assert read_space_file(path).violations() == [], path.name


def test_decimals_are_exact():
    doc = parse_space_text(HEADER + 'dist A B 2.1\ndist B C 0.1\ndist A C 2\n')
    assert doc.distances[('A', 'B')] == Fraction(21, 10)
    assert doc.distances[('B', 'C')] == Fraction(1, 10)


def test_comments_and_blank_lines():
    doc = parse_space_text('# header\n\nspace  # start\npoint A\npoint B\npoint C\n')
    assert doc.points == ['A', 'B', 'C']
    assert doc.sends is None


@pytest.mark.parametrize('body, message', [
    ('dist A 1\n', "'dist' takes 3"),
    ('dist A B 1\ndist B A 2\n', 'duplicate distance'),
    ('dist A Z 1\n', 'undeclared point'),
    ('dist A B one\n', 'invalid number'),
    ('point A\n', 'duplicate point'),
    ('point a!b\n', 'invalid point identifier'),
    ('send A B\n', "'send' before 'map'"),
    ('map\nsend A B\nsend A C\nsend B B\nsend C C\n', 'sent twice'),
    ('map\nsend A B\n', 'no send line for B, C'),
    ('map\npoint D\n', "not allowed after 'map'"),
    ('frobnicate A\n', 'unknown keyword'),
    ('coord A 0\n', 'coordinates missing'),
])
def test_parse_errors(body, message):
    with pytest.raises(ParseError) as info:
        parse_space_text(HEADER + body, source='case.space')
    assert message in str(info.value)
    assert str(info.value).startswith('case.space:')


def test_parse_error_reports_line_number():
    with pytest.raises(ParseError) as info:
        parse_space_text(HEADER + 'dist A 1\n')
    assert info.value.line_no == 5


def test_missing_header():
    with pytest.raises(ParseError):
        parse_space_text('point A\n')


def test_round_trip(six_point_map):
    text = write_space_file(six_point_map.space, six_point_map)
    doc = parse_space_text(text)
    space = doc.build_space()
    assert space == six_point_map.space
    assert doc.build_map(space) == six_point_map
    assert write_space_file(space, doc.build_map(space)) == text


def test_round_trip_keeps_line_coordinates():
    space = line_sample_space(0, 3, Fraction(1, 2))
    mapping = step_map(space)
    doc = parse_space_text(write_space_file(space, mapping))
    restored = doc.build_space()
    assert restored.sampled
    assert restored == space
    assert doc.build_map(restored) == mapping


def test_coordinates_must_match_distances():
    text = (HEADER + 'dist A B 1\ndist B C 1\ndist A C 1\n'
            'coord A 0\ncoord B 5\ncoord C 100\n')
    with pytest.raises(ParseError) as info:
        parse_space_text(text)
    assert info.value.line_no == 5
    assert 'coordinates are 5 apart' in str(info.value)


def test_consistent_coordinates_are_accepted():
    text = (HEADER + 'dist A B 1/2\ndist B C 3/2\ndist A C 2\n'
            'coord A 0\ncoord B 0.5\ncoord C 2\n')
    space = parse_space_text(text).build_space()
    assert space.sampled
    assert space.coordinate('C') == 2
