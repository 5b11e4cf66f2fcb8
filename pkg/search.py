"""Search for (space, map) instances that separate contraction classes."""

import logging
import random
from dataclasses import dataclass, field
from itertools import product

from classifiers import classify_all, is_member
from config import config
from errors import ContradictoryPredicate, SpaceTooLarge
from mappings import SelfMap, period_two_points
from metric import random_metric_space
from solver import theorem_check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeparationPredicate:
    require_member: frozenset = field(default_factory=frozenset)
    require_nonmember: frozenset = field(default_factory=frozenset)
    require_hypothesis_i: bool = None

    def __post_init__(self):
        object.__setattr__(self, 'require_member', frozenset(self.require_member))
        object.__setattr__(self, 'require_nonmember', frozenset(self.require_nonmember))
        both = self.require_member & self.require_nonmember
        if both:
            raise ContradictoryPredicate(sorted(c.flag for c in both))

    def matches(self, mapping):
        if self.require_hypothesis_i is not None:
            if (not period_two_points(mapping)) != self.require_hypothesis_i:
                return False
        # Cheapest classes first: pair classes before triple classes
        for contraction_class in sorted(self.require_member, key=lambda c: c.arity):
            if not is_member(mapping, contraction_class):
                return False
        for contraction_class in sorted(self.require_nonmember, key=lambda c: c.arity):
            if is_member(mapping, contraction_class):
                return False
        return True


@dataclass(frozen=True)
class SearchInstance:
    space: object
    mapping: SelfMap
    reports: tuple
    verdict: object

    def reverify(self):
        """Re-run the classifiers; True iff the stored reports are reproduced exactly."""
        return tuple(classify_all(self.mapping)) == self.reports


@dataclass(frozen=True)
class SearchResult:
    found: SearchInstance
    trials_used: int
    seed: int


def _instance(mapping):
    return SearchInstance(mapping.space, mapping, tuple(classify_all(mapping)), theorem_check(mapping))


def enumerate_maps(space, predicate, cap=None):
    """Every self-map of `space` satisfying `predicate`, in lexicographic table order."""
    cap = config.MAX_ENUMERATED_MAPS if cap is None else cap
    count = len(space.points) ** len(space.points)
    if count > cap:
        raise SpaceTooLarge(count, cap)
    matches = []
    for images in product(space.points, repeat=len(space.points)):
        mapping = SelfMap(space, images)
        if predicate.matches(mapping):
            matches.append(mapping)
    logger.info(f'Enumerated {count} maps on {len(space.points)} points, {len(matches)} match')
    return matches


def random_search(n, trials, seed, predicate, weight_range=None):
    """
    Draw (random metric space, uniform random map) pairs until one matches.
    Deterministic for fixed inputs: the earliest matching trial is returned.
    """
    rng = random.Random(seed)
    for trial in range(1, trials + 1):
        space = random_metric_space(n, rng.getrandbits(64), weight_range)
        mapping = SelfMap(space, tuple(rng.choice(space.points) for _ in space.points))
        if predicate.matches(mapping):
            logger.info(f'Search seed={seed}: match at trial {trial}')
            return SearchResult(_instance(mapping), trial, seed)
        if trial % 1000 == 0:
            logger.info(f'Search seed={seed}: {trial} trials without a match')
    logger.info(f'Search seed={seed}: no match in {trials} trials')
    return SearchResult(None, trials, seed)
