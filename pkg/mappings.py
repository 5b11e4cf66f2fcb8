"""Self-maps of finite metric spaces and their orbits."""

import logging
from dataclasses import dataclass
from fractions import Fraction

from errors import InvalidMap, UnknownPoint

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SelfMap:
    """
    Total map T: X -> X stored as a lookup table.
    `images[i]` is the image of `space.points[i]`.
    """
    space: object
    images: tuple

    def __post_init__(self):
        if len(self.images) != len(self.space.points):
            raise InvalidMap(f'expected {len(self.space.points)} images, got {len(self.images)}')
        for image in self.images:
            if image not in self.space:
                raise InvalidMap(f'image {image!r} is not a point of the space')
        object.__setattr__(self, 'images', tuple(self.images))

    @classmethod
    def from_table(cls, space, table):
        """Build from a dict point -> image; every point needs exactly one image."""
        missing = [p for p in space.points if p not in table]
        if missing:
            raise InvalidMap(f'no image given for {", ".join(missing)}')
        extra = sorted(p for p in table if p not in space)
        if extra:
            raise InvalidMap(f'images given for unknown points {", ".join(extra)}')
        return cls(space, tuple(table[p] for p in space.points))

    @classmethod
    def from_function(cls, space, fn):
        return cls(space, tuple(fn(p) for p in space.points))

    @property
    def table(self):
        return dict(zip(self.space.points, self.images))

    def __call__(self, point):
        try:
            return self.images[self.space.points.index(point)]
        except ValueError:
            raise UnknownPoint(point) from None


def identity_map(space):
    return SelfMap(space, space.points)


def constant_map(space, point):
    space.require(point)
    return SelfMap(space, (point,) * len(space.points))


def step_map(space, threshold=2, low=0, high=1):
    """
    Two-valued step map on a line sample: `low` below `threshold`, `high` at or above it.
    Both values must be points of the sample.
    """
    if not space.sampled:
        raise InvalidMap('a step map needs a space sampled from the real line')
    threshold = Fraction(threshold)
    by_value = dict(zip(space.coordinates, space.points))
    for value in (low, high):
        if Fraction(value) not in by_value:
            raise InvalidMap(f'step value {value} is not a sample point')
    return SelfMap(space, tuple(
        by_value[Fraction(low)] if x < threshold else by_value[Fraction(high)]
        for x in space.coordinates
    ))

#------------------------------------------------------------------------------
# Fixed and periodic points
#------------------------------------------------------------------------------

def fixed_points(mapping):
    """Points p with T(p) = p, in lexicographic order."""
    return tuple(p for p, image in zip(mapping.space.points, mapping.images) if p == image)


def period_two_points(mapping):
    """Points of prime period 2: T(T(p)) = p and T(p) != p."""
    table = mapping.table
    return tuple(p for p in mapping.space.points if table[p] != p and table[table[p]] == p)

#------------------------------------------------------------------------------
# Orbits
#------------------------------------------------------------------------------

@dataclass(frozen=True)
class ReachedFixedPoint:
    point: str
    steps: int


@dataclass(frozen=True)
class EnteredCycle:
    cycle: tuple
    entry_index: int


@dataclass(frozen=True)
class Truncated:
    max_steps: int


@dataclass(frozen=True)
class Orbit:
    """x_0 = start, x_{k+1} = T(x_k); the sequence ends with the first repeated point."""
    start: str
    sequence: tuple
    terminus: object

    @property
    def visited(self):
        """Distinct points of the orbit in visiting order."""
        if isinstance(self.terminus, Truncated):
            return self.sequence
        return self.sequence[:-1]

    @property
    def reached_fixed_point(self):
        return isinstance(self.terminus, ReachedFixedPoint)


def iterate_orbit(mapping, start, max_steps):
    """Walk the orbit from `start` until a point repeats or `max_steps` applications of T."""
    mapping.space.require(start)
    if max_steps < 1:
        raise ValueError('max_steps must be at least 1')
    table = mapping.table
    sequence = [start]
    seen = {start: 0}
    current = start
    for _ in range(max_steps):
        current = table[current]
        sequence.append(current)
        if current in seen:
            entry = seen[current]
            cycle = tuple(sequence[entry:-1])
            if len(cycle) == 1:
                terminus = ReachedFixedPoint(current, entry)
            else:
                terminus = EnteredCycle(cycle, entry)
            logger.debug(f'Orbit from {start}: {terminus}')
            return Orbit(start, tuple(sequence), terminus)
        seen[current] = len(sequence) - 1

    logger.warning(f'Orbit from {start} truncated after {max_steps} steps')
    return Orbit(start, tuple(sequence), Truncated(max_steps))
