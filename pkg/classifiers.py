"""Contraction classes of self-maps and their exact optimal coefficients.

Each class is defined by an inequality numerator <= lambda * denominator
over pairs or triples of distinct points. On a finite space the supremum of
numerator / denominator is attained, so membership ("some lambda below the
bound works") is decided by comparing the attained maximum with the bound.

All ratio work happens on the space's integer rows (distances multiplied by
their common denominator); both sides of every inequality scale alike.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from errors import ArityMismatch, NotDistinct, TooFewPoints

logger = logging.getLogger(__name__)


class ContractionClass(Enum):
    BANACH = ('banach', 'Banach', Fraction(1), 2)
    KANNAN = ('kannan', 'Kannan', Fraction(1, 2), 2)
    GENERALIZED_KANNAN = ('generalized-kannan', 'GeneralizedKannan', Fraction(2, 3), 3)
    CHATTERJEA = ('chatterjea', 'Chatterjea', Fraction(1, 2), 2)
    GENERALIZED_CHATTERJEA = ('generalized-chatterjea', 'GeneralizedChatterjea', Fraction(1, 2), 3)
    PERIMETER_CONTRACTING = ('perimeter', 'PerimeterContracting', Fraction(1), 3)

    def __init__(self, flag, tag, bound, arity):
        self.flag = flag
        self.tag = tag
        self.bound = bound
        self.arity = arity

    @classmethod
    def from_flag(cls, flag):
        for member in cls:
            if member.flag == flag:
                return member
        raise ValueError(f'unknown contraction class {flag!r}')

    @classmethod
    def flags(cls):
        return [member.flag for member in cls]


@dataclass(frozen=True)
class TripleScores:
    """Image-triangle perimeter and the six point-to-image cross distances of a triple."""
    triple: tuple
    image_perimeter: Fraction
    cross_sum: Fraction

    @property
    def ratio(self):
        return self.image_perimeter / self.cross_sum


@dataclass(frozen=True)
class Witness:
    points: tuple
    numerator: Fraction
    denominator: Fraction

    @property
    def ratio(self):
        if self.denominator == 0:
            return None
        return self.numerator / self.denominator


@dataclass(frozen=True)
class ClassReport:
    """
    Classification of one map against one class.
    `lambda_star` is None (unbounded) when some tuple has a zero denominator and a
    positive numerator; `finite_lambda` then still holds the maximum over the
    tuples with positive denominator.
    """
    contraction_class: ContractionClass
    lambda_star: Fraction
    member: bool
    witness: Witness
    degenerate: bool
    sampled: bool
    finite_lambda: Fraction

    @property
    def bound(self):
        return self.contraction_class.bound

#------------------------------------------------------------------------------
# Defining inequalities
#------------------------------------------------------------------------------

def _banach(rows, t, x, y):
    return rows[t[x]][t[y]], rows[x][y]


def _kannan(rows, t, x, y):
    return rows[t[x]][t[y]], rows[x][t[x]] + rows[y][t[y]]


def _chatterjea(rows, t, x, y):
    return rows[t[x]][t[y]], rows[x][t[y]] + rows[y][t[x]]


def _image_perimeter(rows, t, x, y, z):
    return rows[t[x]][t[y]] + rows[t[y]][t[z]] + rows[t[z]][t[x]]


def _cross_sum(rows, t, x, y, z):
    return (rows[x][t[y]] + rows[y][t[x]] + rows[y][t[z]]
            + rows[z][t[x]] + rows[z][t[y]] + rows[x][t[z]])


def _generalized_kannan(rows, t, x, y, z):
    # displacement-sum denominator d(x,Tx) + d(y,Ty) + d(z,Tz)
    return _image_perimeter(rows, t, x, y, z), rows[x][t[x]] + rows[y][t[y]] + rows[z][t[z]]


def _generalized_chatterjea(rows, t, x, y, z):
    return _image_perimeter(rows, t, x, y, z), _cross_sum(rows, t, x, y, z)


def _perimeter(rows, t, x, y, z):
    return _image_perimeter(rows, t, x, y, z), rows[x][y] + rows[y][z] + rows[z][x]


_TERMS = {
    ContractionClass.BANACH: _banach,
    ContractionClass.KANNAN: _kannan,
    ContractionClass.GENERALIZED_KANNAN: _generalized_kannan,
    ContractionClass.CHATTERJEA: _chatterjea,
    ContractionClass.GENERALIZED_CHATTERJEA: _generalized_chatterjea,
    ContractionClass.PERIMETER_CONTRACTING: _perimeter,
}


def _canonical(mapping, points):
    for point in points:
        mapping.space.require(point)
    if len(set(points)) != len(points):
        raise NotDistinct(points)
    return tuple(sorted(points))


def triple_scores(mapping, x, y, z):
    """Image perimeter and cross-distance sum of an unordered triple."""
    triple = _canonical(mapping, (x, y, z))
    space = mapping.space
    rows, t = space.integer_rows, mapping.table
    return TripleScores(
        triple,
        Fraction(_image_perimeter(rows, t, *triple), space.scale),
        Fraction(_cross_sum(rows, t, *triple), space.scale),
    )


def class_ratio_terms(mapping, contraction_class, points):
    """(numerator, denominator) of the class-defining inequality at one tuple."""
    points = tuple(points)
    if len(points) != contraction_class.arity:
        raise ArityMismatch(
            f'{contraction_class.tag} takes {contraction_class.arity} points, got {len(points)}'
        )
    canonical = _canonical(mapping, points)
    space = mapping.space
    num, den = _TERMS[contraction_class](space.integer_rows, mapping.table, *canonical)
    return Fraction(num, space.scale), Fraction(den, space.scale)


def score_table(mapping):
    """TripleScores for every unordered triple, in lexicographic order."""
    space = mapping.space
    rows, t = space.integer_rows, mapping.table
    return [
        TripleScores(
            triple,
            Fraction(_image_perimeter(rows, t, *triple), space.scale),
            Fraction(_cross_sum(rows, t, *triple), space.scale),
        )
        for triple in space.triples()
    ]

#------------------------------------------------------------------------------
# Classification
#------------------------------------------------------------------------------

def _check_size(mapping, contraction_class):
    if len(mapping.space) < contraction_class.arity:
        raise TooFewPoints(f'{contraction_class.tag} needs at least {contraction_class.arity} points')


def classify(mapping, contraction_class):
    """
    Optimal coefficient, membership and extremal witness for one class.
    Ties keep the lexicographically smallest tuple; the first degenerate tuple
    (zero denominator, positive numerator) becomes the witness when present.
    """
    _check_size(mapping, contraction_class)
    space = mapping.space
    rows, t = space.integer_rows, mapping.table
    terms = _TERMS[contraction_class]

    best = None
    degenerate = None
    for points in combinations(space.points, contraction_class.arity):
        num, den = terms(rows, t, *points)
        if den == 0:
            if num > 0 and degenerate is None:
                degenerate = (points, num, den)
            continue
        if best is None or num * best[2] > best[1] * den:
            best = (points, num, den)

    finite_lambda = Fraction(best[1], best[2]) if best else Fraction(0)
    chosen = degenerate or best
    witness = None
    if chosen is not None:
        witness = Witness(chosen[0], Fraction(chosen[1], space.scale), Fraction(chosen[2], space.scale))
    lambda_star = None if degenerate else finite_lambda
    member = degenerate is None and finite_lambda < contraction_class.bound

    report = ClassReport(
        contraction_class=contraction_class,
        lambda_star=lambda_star,
        member=member,
        witness=witness,
        degenerate=degenerate is not None,
        sampled=space.sampled,
        finite_lambda=finite_lambda,
    )
    logger.debug(f'{contraction_class.tag}: lambda*={lambda_star} member={member} '
                 f'witness={witness.points if witness else None}')
    return report


def classify_all(mapping):
    """One report per class, in ContractionClass order."""
    return [classify(mapping, contraction_class) for contraction_class in ContractionClass]


def is_member(mapping, contraction_class):
    """Membership only, stopping at the first tuple that rules it out."""
    _check_size(mapping, contraction_class)
    space = mapping.space
    rows, t = space.integer_rows, mapping.table
    terms = _TERMS[contraction_class]
    bound = contraction_class.bound
    for points in combinations(space.points, contraction_class.arity):
        num, den = terms(rows, t, *points)
        if den == 0:
            if num > 0:
                return False
            continue
        if num * bound.denominator >= bound.numerator * den:
            return False
    return True
