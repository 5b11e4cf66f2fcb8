"""Finite metric spaces with exact rational distances.

Points are identified by short strings and always kept in lexicographic
order; that order breaks every tie elsewhere in the package. Distances are
`fractions.Fraction` values stored once per unordered pair.
"""

import logging
import math
import random
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations

import networkx as nx

from config import config
from errors import DisconnectedGraph, InvalidGrid, InvalidMetric, InvalidWeight, TooFewPoints, UnknownPoint

logger = logging.getLogger(__name__)

# Letters, digits, underscore, dot, minus; '/' so that rational line samples
# can be named by their exact value (e.g. "19/10").
POINT_ID_PATTERN = re.compile(r'^[A-Za-z0-9_.\-/]+$')

#------------------------------------------------------------------------------
# Rationals
#------------------------------------------------------------------------------

def parse_rational(text):
    """Parse an integer, `p/q` or decimal literal into an exact Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError, AttributeError) as e:
        raise ValueError(f'not a rational number: {text!r}') from e


def format_rational(value):
    """Canonical text form: bare integer when the denominator is 1, else p/q."""
    if value is None:
        return 'unbounded'
    return str(Fraction(value))


def is_point_id(name):
    return isinstance(name, str) and bool(POINT_ID_PATTERN.match(name))

#------------------------------------------------------------------------------
# Validation
#------------------------------------------------------------------------------

class ViolationKind(Enum):
    NON_ZERO_DIAGONAL = 'NonZeroDiagonal'
    NON_POSITIVE = 'NonPositive'
    ASYMMETRIC = 'Asymmetric'
    TRIANGLE_VIOLATION = 'TriangleViolation'
    TOO_FEW_POINTS = 'TooFewPoints'
    MISSING_PAIR = 'MissingPair'

    @property
    def rank(self):
        return list(ViolationKind).index(self)


@dataclass(frozen=True)
class MetricViolation:
    kind: ViolationKind
    witness: tuple
    values: tuple = ()

    def describe(self):
        where = ','.join(self.witness)
        if self.kind is ViolationKind.TRIANGLE_VIOLATION:
            p, q, r = self.witness
            direct, left, right = self.values
            return (f'{self.kind.value}({where}): d({p},{r})={format_rational(direct)} > '
                    f'd({p},{q})+d({q},{r})={format_rational(left + right)}')
        shown = ', '.join(format_rational(v) for v in self.values)
        return f'{self.kind.value}({where})' + (f': {shown}' if shown else '')


def validate_metric(points, distances):
    """Return every metric violation of a candidate space, sorted by (kind, witness).

    `distances` maps ordered pairs (p, q) to rationals. A pair may be given in
    either order or both; diagonal entries are optional but must be zero.
    """
    pts = sorted(set(points))
    violations = []
    if len(pts) < 3:
        violations.append(MetricViolation(ViolationKind.TOO_FEW_POINTS, tuple(pts)))

    for p in pts:
        value = distances.get((p, p))
        if value is not None and value != 0:
            violations.append(MetricViolation(ViolationKind.NON_ZERO_DIAGONAL, (p,), (value,)))

    known = {}
    for p, q in combinations(pts, 2):
        forward = distances.get((p, q))
        backward = distances.get((q, p))
        if forward is None and backward is None:
            violations.append(MetricViolation(ViolationKind.MISSING_PAIR, (p, q)))
            continue
        if forward is not None and backward is not None and forward != backward:
            violations.append(MetricViolation(ViolationKind.ASYMMETRIC, (p, q), (forward, backward)))
        value = forward if forward is not None else backward
        if value <= 0:
            violations.append(MetricViolation(ViolationKind.NON_POSITIVE, (p, q), (value,)))
        known[(p, q)] = known[(q, p)] = value

    for p, r in combinations(pts, 2):
        if (p, r) not in known:
            continue
        for q in pts:
            if q in (p, r) or (p, q) not in known or (q, r) not in known:
                continue
            if known[(p, r)] > known[(p, q)] + known[(q, r)]:
                violations.append(MetricViolation(
                    ViolationKind.TRIANGLE_VIOLATION, (p, q, r),
                    (known[(p, r)], known[(p, q)], known[(q, r)]),
                ))

    violations.sort(key=lambda v: (v.kind.rank, v.witness))
    return violations

#------------------------------------------------------------------------------
# Spaces
#------------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteMetricSpace:
    """
    Validated finite metric space.
    `distances` holds one value per unordered pair, in `combinations(points, 2)`
    order. `coordinates`, when present, tags the space as a sample of the real
    line (one coordinate per point).
    """
    points: tuple
    distances: tuple
    coordinates: tuple = None
    _rows: dict = field(init=False, repr=False, compare=False)
    _scale: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if list(self.points) != sorted(set(self.points)):
            raise ValueError('points must be unique and in lexicographic order')
        if len(self.distances) != len(self.points) * (len(self.points) - 1) // 2:
            raise ValueError('one distance per unordered pair is required')
        scale = math.lcm(*(d.denominator for d in self.distances)) if self.distances else 1
        rows = {p: {p: 0} for p in self.points}
        for (p, q), value in zip(combinations(self.points, 2), self.distances):
            units = value.numerator * (scale // value.denominator)
            rows[p][q] = rows[q][p] = units
        object.__setattr__(self, '_rows', rows)
        object.__setattr__(self, '_scale', scale)

    @classmethod
    def from_table(cls, points, distances, coordinates=None):
        """Validate a candidate and build the space; raises InvalidMetric."""
        violations = validate_metric(points, distances)
        if violations:
            raise InvalidMetric(violations)
        ordered = tuple(sorted(set(points)))
        values = tuple(
            Fraction(distances[(p, q)] if (p, q) in distances else distances[(q, p)])
            for p, q in combinations(ordered, 2)
        )
        coords = None
        if coordinates is not None:
            coords = tuple(Fraction(coordinates[p]) for p in ordered)
        return cls(ordered, values, coords)

    def __contains__(self, point):
        return point in self._rows

    def __len__(self):
        return len(self.points)

    def require(self, point):
        if point not in self._rows:
            raise UnknownPoint(point)
        return point

    def d(self, p, q):
        """Exact distance between two points."""
        return Fraction(self._rows[p][q], self._scale)

    @property
    def scale(self):
        """Common denominator of all distances."""
        return self._scale

    @property
    def integer_rows(self):
        """Distances multiplied by `scale`, as nested dicts of ints."""
        return self._rows

    @property
    def sampled(self):
        return self.coordinates is not None

    def coordinate(self, point):
        if self.coordinates is None:
            return None
        return self.coordinates[self.points.index(point)]

    def pairs(self):
        return combinations(self.points, 2)

    def triples(self):
        return combinations(self.points, 3)

    def as_table(self):
        return dict(zip(combinations(self.points, 2), self.distances))

#------------------------------------------------------------------------------
# Constructions
#------------------------------------------------------------------------------

def metric_closure(points, weights, coordinates=None):
    """
    Shortest-path metric of a connected weighted graph.
    `weights` is a partial table of positive edge weights keyed by point pairs.
    """
    graph = nx.Graph()
    graph.add_nodes_from(sorted(set(points)))
    for (p, q), weight in weights.items():
        for point in (p, q):
            if point not in graph:
                raise UnknownPoint(point)
        weight = Fraction(weight)
        if p == q:
            if weight != 0:
                raise InvalidWeight(f'self-loop at {p} must have weight 0')
            continue
        if weight <= 0:
            raise InvalidWeight(f'edge {p}-{q} has non-positive weight {format_rational(weight)}')
        if graph.has_edge(p, q):
            weight = min(weight, graph[p][q]['weight'])
        graph.add_edge(p, q, weight=weight)

    lengths = dict(nx.all_pairs_dijkstra_path_length(graph, weight='weight'))
    table = {}
    for p, q in combinations(sorted(graph.nodes), 2):
        if q not in lengths[p]:
            raise DisconnectedGraph((p, q))
        table[(p, q)] = Fraction(lengths[p][q])
    logger.debug(f'Metric closure over {graph.number_of_nodes()} points from {graph.number_of_edges()} edges')
    return FiniteMetricSpace.from_table(list(graph.nodes), table, coordinates)


def random_metric_space(n, seed, weight_range=None):
    """Complete graph with grid-rational weights drawn from `weight_range`, then closed."""
    if n < 3:
        raise TooFewPoints(f'random spaces need at least 3 points, got {n}')
    low, high = (Fraction(w) for w in (weight_range or config.WEIGHT_RANGE))
    grid = config.WEIGHT_GRID_DENOMINATOR
    low_tick, high_tick = math.ceil(low * grid), math.floor(high * grid)
    if low <= 0 or low_tick > high_tick:
        raise InvalidWeight(f'weight range [{format_rational(low)}, {format_rational(high)}] '
                            f'has no positive grid values')

    rng = random.Random(seed)
    width = len(str(n - 1))
    points = [f'p{i:0{width}d}' for i in range(n)]
    weights = {
        (p, q): Fraction(rng.randint(low_tick, high_tick), grid)
        for p, q in combinations(points, 2)
    }
    return metric_closure(points, weights)


def line_sample_space(start, stop, step, extra_points=()):
    """Finite sample of the real line: grid start..stop (inclusive) plus extra points."""
    start, stop, step = (parse_rational(v) for v in (start, stop, step))
    if step <= 0 or start >= stop:
        raise InvalidGrid(f'grid {start}:{stop}:{step} needs step > 0 and start < stop')
    values = set()
    value = start
    while value <= stop:
        values.add(value)
        value += step
    values.update(parse_rational(v) for v in extra_points)

    names = {format_rational(v): v for v in values}
    table = {
        (p, q): abs(names[p] - names[q])
        for p, q in combinations(sorted(names), 2)
    }
    return FiniteMetricSpace.from_table(list(names), table, coordinates=names)
