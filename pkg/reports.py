"""Human-readable and machine-readable rendering of results.

Machine output never uses decimals: rationals are canonical "p/q" strings
(bare integers when q = 1) and JSON keys are sorted, so identical inputs give
byte-identical output.
"""

import csv
import io
import json
from dataclasses import dataclass

from mappings import EnteredCycle, ReachedFixedPoint, Truncated
from metric import format_rational


@dataclass
class RunReport:
    command: str
    input_digest: str
    results: object = None
    exit_code: int = 0

    def to_json(self):
        payload = {
            'command': self.command,
            'input_digest': self.input_digest,
            'results': self.results,
            'exit_code': self.exit_code,
        }
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)

#------------------------------------------------------------------------------
# Dictionaries for JSON output
#------------------------------------------------------------------------------

def violation_dict(violation):
    return {
        'kind': violation.kind.value,
        'witness': list(violation.witness),
        'values': [format_rational(v) for v in violation.values],
    }


def witness_dict(witness):
    if witness is None:
        return None
    return {
        'points': list(witness.points),
        'numerator': format_rational(witness.numerator),
        'denominator': format_rational(witness.denominator),
    }


def class_report_dict(report):
    return {
        'class': report.contraction_class.flag,
        'lambda_star': format_rational(report.lambda_star),
        'bound': format_rational(report.bound),
        'member': report.member,
        'witness': witness_dict(report.witness),
        'degenerate': report.degenerate,
        'sampled': report.sampled,
    }


def terminus_dict(terminus):
    if isinstance(terminus, ReachedFixedPoint):
        return {'kind': 'ReachedFixedPoint', 'point': terminus.point, 'steps': terminus.steps}
    if isinstance(terminus, EnteredCycle):
        return {'kind': 'EnteredCycle', 'cycle': list(terminus.cycle), 'entry_index': terminus.entry_index}
    return {'kind': 'Truncated', 'max_steps': terminus.max_steps}


def orbit_dict(orbit):
    return {
        'start': orbit.start,
        'sequence': list(orbit.sequence),
        'terminus': terminus_dict(orbit.terminus),
    }


def certificate_dict(certificate):
    return {
        'lambda': format_rational(certificate.coefficient),
        'alpha': None if certificate.alpha is None else format_rational(certificate.alpha),
        'certified': certificate.certified,
        'd_sequence': [
            {'n': step.index, 'd_n': format_rational(step.value), 'applicable': step.applicable}
            for step in certificate.steps
        ],
        'violations': list(certificate.violations),
        'geometric_prefix': certificate.geometric_prefix(),
    }


def verdict_dict(verdict):
    return {
        'theorem': verdict.theorem.contraction_class.flag,
        'statement': verdict.theorem.statement(),
        'hypothesis_i': verdict.hypothesis_i,
        'hypothesis_ii': verdict.hypothesis_ii,
        'hypotheses_hold': verdict.hypotheses_hold,
        'fixed_point_set': list(verdict.fixed_point_set),
        'period_two_set': list(verdict.period_two_set),
        'conclusion_holds': verdict.conclusion_holds,
        'counterexample': verdict.counterexample,
    }


def score_dict(scores):
    return {
        'triple': list(scores.triple),
        'image_perimeter': format_rational(scores.image_perimeter),
        'cross_sum': format_rational(scores.cross_sum),
        'ratio': format_rational(scores.ratio),
    }

#------------------------------------------------------------------------------
# Text rendering
#------------------------------------------------------------------------------

def render_class_report(report):
    witness = report.witness
    if witness is None:
        shown = 'no admissible tuple'
    else:
        ratio = 'degenerate' if witness.denominator == 0 else format_rational(witness.ratio)
        shown = (f'({", ".join(witness.points)}) num={format_rational(witness.numerator)} '
                 f'den={format_rational(witness.denominator)} ratio={ratio}')
    line = (f'{report.contraction_class.flag:<24} lambda*={format_rational(report.lambda_star):<10} '
            f'bound={format_rational(report.bound):<4} member={"yes" if report.member else "no":<4} '
            f'witness={shown}')
    if report.sampled:
        line += ' [sampled: lower bound]'
    return line


def render_terminus(terminus):
    if isinstance(terminus, ReachedFixedPoint):
        return f'fixed point {terminus.point} in {terminus.steps} step(s)'
    if isinstance(terminus, EnteredCycle):
        return f'entered cycle {" → ".join(terminus.cycle)} at index {terminus.entry_index}'
    if isinstance(terminus, Truncated):
        return f'truncated after {terminus.max_steps} step(s)'
    return str(terminus)


def render_orbit(orbit):
    return ' → '.join(orbit.visited)


def render_certificate(certificate):
    lines = [
        f'lambda={format_rational(certificate.coefficient)} '
        f'alpha={"n/a" if certificate.alpha is None else format_rational(certificate.alpha)} '
        f'certified={"yes" if certificate.certified else "no"}'
    ]
    for step in certificate.steps:
        flag = 'applicable' if step.applicable else 'n/a'
        lines.append(f'  d_{step.index} = {format_rational(step.value):<10} {flag}')
    violations = ', '.join(str(n) for n in certificate.violations) or 'none'
    lines.append(f'violations: {violations}')
    return '\n'.join(lines)


def render_verdict(verdict):
    def yes_no(value):
        return 'true' if value else 'false'

    fixed = ', '.join(verdict.fixed_point_set)
    lines = [
        f'theorem: {verdict.theorem.statement()}',
        f'(i) no period-2 points: {yes_no(verdict.hypothesis_i)}'
        + (f' (period-2 points: {", ".join(verdict.period_two_set)})' if verdict.period_two_set else ''),
        f'(ii) {verdict.theorem.contraction_class.flag}: {yes_no(verdict.hypothesis_ii)}',
        f'fixed points: {{{fixed}}}',
    ]
    if not verdict.hypotheses_hold:
        lines.append('conclusion: not asserted (hypotheses fail)')
    elif verdict.falsified:
        lines.append(f'conclusion: FALSIFIED - {verdict.counterexample}')
    else:
        lines.append('conclusion: holds')
    return '\n'.join(lines)


def scores_csv(table):
    """CSV export of a triple score table."""
    output = io.StringIO()
    writer = csv.writer(output, lineterminator='\n')
    writer.writerow(['x', 'y', 'z', 'image_perimeter', 'cross_sum', 'ratio'])
    for scores in table:
        writer.writerow([
            *scores.triple,
            format_rational(scores.image_perimeter),
            format_rational(scores.cross_sum),
            format_rational(scores.ratio),
        ])
    return output.getvalue()
