"""Picard iteration with a geometric-decay certificate, and fixed-point theorem checks.

For an orbit x_0, x_1 = T x_0, ... the certificate tracks
    d_n = d(x_n, x_{n+1}) + d(x_n, x_{n+2}) + d(x_{n+1}, x_{n+2})
and checks d_n <= alpha * d_{n-1}, alpha = lambda / (1 - lambda), at every
index where x_{n-1}, x_n, x_{n+1} are pairwise distinct.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from classifiers import ContractionClass, classify
from mappings import fixed_points, iterate_orbit, period_two_points

logger = logging.getLogger(__name__)

#------------------------------------------------------------------------------
# Decay certificate
#------------------------------------------------------------------------------

@dataclass(frozen=True)
class DecayStep:
    index: int
    value: Fraction
    applicable: bool


@dataclass(frozen=True)
class DecayCertificate:
    """
    `coefficient` is the lambda used (None when unbounded); `alpha` exists only
    for lambda < 1. The certificate is meaningful (`certified`) for lambda < 1/2.
    """
    coefficient: Fraction
    alpha: Fraction
    steps: tuple
    violations: tuple
    certified: bool

    @property
    def d_sequence(self):
        return [step.value for step in self.steps]

    def geometric_prefix(self):
        """Indices n >= 1 such that every index 1..n is applicable."""
        prefix = []
        for step in self.steps[1:]:
            if not step.applicable:
                break
            prefix.append(step.index)
        return prefix


def decay_certificate(space, sequence, coefficient):
    alpha = None
    if coefficient is not None and coefficient < 1:
        alpha = coefficient / (1 - coefficient)

    steps = []
    for n in range(len(sequence) - 2):
        a, b, c = sequence[n:n + 3]
        value = space.d(a, b) + space.d(a, c) + space.d(b, c)
        applicable = n >= 1 and len({sequence[n - 1], a, b}) == 3
        steps.append(DecayStep(n, value, applicable))

    violations = ()
    if alpha is not None:
        violations = tuple(
            step.index for step in steps
            if step.applicable and step.value > alpha * steps[step.index - 1].value
        )
    certified = coefficient is not None and coefficient < Fraction(1, 2)
    return DecayCertificate(coefficient, alpha, tuple(steps), violations, certified)


def picard_solve(mapping, start, max_steps=None, coefficient=None):
    """
    Iterate T from `start` and certify the decay of the d_n sequence.
    Without an explicit `coefficient` the generalized Chatterjea optimum is used.
    """
    mapping.space.require(start)
    if max_steps is None:
        max_steps = len(mapping.space) + 1
    if coefficient is None:
        coefficient = classify(mapping, ContractionClass.GENERALIZED_CHATTERJEA).lambda_star
    orbit = iterate_orbit(mapping, start, max_steps)
    certificate = decay_certificate(mapping.space, orbit.sequence, coefficient)
    if certificate.certified and certificate.violations:
        logger.warning(f'Decay certificate from {start} violated at {list(certificate.violations)}')
    return orbit, certificate

#------------------------------------------------------------------------------
# Fixed-point theorems
#------------------------------------------------------------------------------

@dataclass(frozen=True)
class FixedPointTheorem:
    """What membership in a class (plus optionally no period-2 points) guarantees."""
    contraction_class: ContractionClass
    requires_no_period_two: bool
    min_fixed_points: int
    max_fixed_points: int
    existence_iff_no_period_two: bool = False

    def applies(self, hypothesis_i, hypothesis_ii):
        return hypothesis_ii and (hypothesis_i or not self.requires_no_period_two)

    def conclusion_holds(self, fixed_count, hypothesis_i):
        if fixed_count > self.max_fixed_points:
            return False
        if self.existence_iff_no_period_two:
            return (fixed_count >= 1) == hypothesis_i
        return fixed_count >= self.min_fixed_points

    def statement(self):
        hypotheses = [f'T is {self.contraction_class.tag}']
        if self.requires_no_period_two:
            hypotheses.insert(0, 'no periodic points of prime period 2')
        if self.existence_iff_no_period_two:
            conclusion = f'fixed point exists iff no period-2 points; at most {self.max_fixed_points}'
        elif self.min_fixed_points == self.max_fixed_points:
            conclusion = f'exactly {self.min_fixed_points} fixed point'
        else:
            conclusion = f'{self.min_fixed_points} to {self.max_fixed_points} fixed points'
        return f'{" and ".join(hypotheses)} => {conclusion}'


THEOREMS = {
    ContractionClass.BANACH: FixedPointTheorem(ContractionClass.BANACH, False, 1, 1),
    ContractionClass.KANNAN: FixedPointTheorem(ContractionClass.KANNAN, False, 1, 1),
    ContractionClass.GENERALIZED_KANNAN: FixedPointTheorem(ContractionClass.GENERALIZED_KANNAN, True, 1, 2),
    ContractionClass.CHATTERJEA: FixedPointTheorem(ContractionClass.CHATTERJEA, False, 1, 1),
    ContractionClass.GENERALIZED_CHATTERJEA: FixedPointTheorem(ContractionClass.GENERALIZED_CHATTERJEA, True, 1, 2),
    ContractionClass.PERIMETER_CONTRACTING: FixedPointTheorem(
        ContractionClass.PERIMETER_CONTRACTING, False, 0, 2, existence_iff_no_period_two=True,
    ),
}


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: FixedPointTheorem
    hypothesis_i: bool
    hypothesis_ii: bool
    fixed_point_set: tuple
    period_two_set: tuple
    conclusion_holds: bool
    counterexample: str = None

    @property
    def hypotheses_hold(self):
        return self.theorem.applies(self.hypothesis_i, self.hypothesis_ii)

    @property
    def falsified(self):
        return self.counterexample is not None


def theorem_check(mapping, contraction_class=ContractionClass.GENERALIZED_CHATTERJEA):
    """Evaluate a fixed-point theorem's hypotheses and conclusion on one instance."""
    theorem = THEOREMS[contraction_class]
    report = classify(mapping, contraction_class)
    period_two = period_two_points(mapping)
    fixed = fixed_points(mapping)
    hypothesis_i = not period_two

    holds = theorem.conclusion_holds(len(fixed), hypothesis_i)
    counterexample = None
    if theorem.applies(hypothesis_i, report.member) and not holds:
        counterexample = (f'{contraction_class.tag} map with lambda*={report.lambda_star} has '
                          f'{len(fixed)} fixed point(s) {list(fixed)} and period-2 points {list(period_two)}')
        logger.warning(f'Theorem falsified: {counterexample}')

    return TheoremVerdict(
        theorem=theorem,
        hypothesis_i=hypothesis_i,
        hypothesis_ii=report.member,
        fixed_point_set=fixed,
        period_two_set=period_two,
        conclusion_holds=holds,
        counterexample=counterexample,
    )
