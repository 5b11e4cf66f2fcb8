# fixpointlab command-line application
# Classifies self-maps of finite metric spaces into contraction classes,
# runs Picard iteration with decay certificates and checks fixed-point theorems.

# Standard library imports
import hashlib
import logging
import sys
from dataclasses import dataclass
from functools import wraps

# Third-party imports
import click

# Local application imports
from classifiers import ContractionClass, classify, score_table
from config import config
from errors import FixpointError
from mappings import step_map
from metric import format_rational, line_sample_space, parse_rational
from reports import (
    RunReport,
    certificate_dict,
    class_report_dict,
    orbit_dict,
    render_certificate,
    render_class_report,
    render_orbit,
    render_terminus,
    render_verdict,
    score_dict,
    scores_csv,
    verdict_dict,
    violation_dict,
)
from search import SeparationPredicate, random_search
from solver import picard_solve, theorem_check
from spacefile import read_space_file, write_space_file

logger = logging.getLogger('fixpointlab')

GENERATORS = ('step2',)

#------------------------------------------------------------------------------
# Errors and exit codes
#------------------------------------------------------------------------------

class InputError(click.ClickException):
    """Usage or parse error: exit code 2."""
    exit_code = 2


class RejectedMetric(Exception):
    """The input parsed but is not a valid metric space."""

    def __init__(self, violations, digest):
        self.violations = violations
        self.digest = digest
        super().__init__(f'{len(violations)} metric violation(s)')


def finish(report, as_json, lines):
    """Print a report in the requested form and exit with its code."""
    if as_json:
        click.echo(report.to_json())
    else:
        for line in lines:
            click.echo(line)
    sys.exit(report.exit_code)


def handle_errors(f):
    """Map library errors onto the 0/1/2 exit-code discipline."""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return f(*args, **kwargs)
        except click.ClickException:
            raise
        except RejectedMetric as e:
            report = RunReport(ctx.info_name, e.digest, [violation_dict(v) for v in e.violations], 1)
            finish(report, ctx.params.get('as_json'),
                   ['invalid metric space:'] + [f'  {v.describe()}' for v in e.violations])
        except FixpointError as e:
            raise InputError(str(e))
        except Exception as e:
            logger.error(f'Error running {ctx.info_name}: {str(e)}', exc_info=config.SHOW_TRACEBACKS)
            raise InputError(f'internal error: {str(e)}')
    return decorated_function

#------------------------------------------------------------------------------
# Input loading
#------------------------------------------------------------------------------

@dataclass
class LoadedInput:
    space: object
    mapping: object
    digest: str


def parse_grid(text):
    parts = text.split(':')
    if len(parts) != 3:
        raise InputError(f'--grid expects start:stop:step, got {text!r}')
    try:
        return tuple(parse_rational(part) for part in parts)
    except ValueError as e:
        raise InputError(str(e))


def parse_extra(text):
    if not text:
        return ()
    try:
        return tuple(parse_rational(part) for part in text.split(',') if part.strip())
    except ValueError as e:
        raise InputError(str(e))


def load_input(path, generator, grid, extra, need_map=True):
    """Read a space file, or build a generator instance."""
    if generator:
        if path:
            raise InputError('give either a space file or --generator, not both')
        start, stop, step = parse_grid(grid)
        space = line_sample_space(start, stop, step, parse_extra(extra))
        recipe = f'generator={generator} grid={grid} extra={extra or ""}'
        return LoadedInput(space, step_map(space), hashlib.sha256(recipe.encode('utf-8')).hexdigest())

    if not path:
        raise InputError('a space file or --generator is required')
    doc = read_space_file(path)
    violations = doc.violations()
    if violations:
        raise RejectedMetric(violations, doc.digest)
    space = doc.build_space()
    mapping = doc.build_map(space)
    if need_map and mapping is None:
        raise InputError(f"{path}: no 'map' section")
    return LoadedInput(space, mapping, doc.digest)


def input_options(f):
    f = click.option('--extra', default='', help='Extra sample points, comma separated (generator input).')(f)
    f = click.option('--grid', default='0:4:1/10', show_default=True,
                     help='Sample grid start:stop:step (generator input).')(f)
    f = click.option('--generator', type=click.Choice(GENERATORS), default=None,
                     help='Build a built-in instance instead of reading a file.')(f)
    f = click.argument('path', required=False, type=click.Path(exists=True, dir_okay=False))(f)
    return f


def parse_classes(text):
    if text.strip() == 'all':
        return list(ContractionClass)
    classes = []
    for flag in (part.strip() for part in text.split(',')):
        if not flag:
            continue
        try:
            contraction_class = ContractionClass.from_flag(flag)
        except ValueError:
            raise InputError(f'unknown class {flag!r}; choose from {", ".join(ContractionClass.flags())}')
        if contraction_class not in classes:
            classes.append(contraction_class)
    return classes

#------------------------------------------------------------------------------
# Commands
#------------------------------------------------------------------------------

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


@click.group()
@click.option('--log-level', type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None,
              help='Override FIXPOINT_LOG_LEVEL.')
def cli(log_level):
    """Contraction classes and fixed points of self-maps of finite metric spaces."""
    logging.basicConfig(level=(log_level or config.LOG_LEVEL).upper(), format=config.LOG_FORMAT,
                        stream=sys.stderr)


@cli.command('validate')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--json', 'as_json', is_flag=True, help='Emit a JSON report.')
@handle_errors
def validate_command(path, as_json):
    """Check that a space file describes a valid metric space."""
    doc = read_space_file(path)
    violations = doc.violations()
    report = RunReport('validate', doc.digest, [violation_dict(v) for v in violations], 1 if violations else 0)
    if violations:
        lines = [f'{path}: {len(violations)} violation(s)'] + [f'  {v.describe()}' for v in violations]
    else:
        lines = [f'{path}: valid metric space on {len(doc.points)} points']
    finish(report, as_json, lines)


@cli.command('classify')
@input_options
@click.option('--classes', default='all', show_default=True,
              help=f'Comma-separated classes ({", ".join(ContractionClass.flags())}) or "all".')
@click.option('--json', 'as_json', is_flag=True, help='Emit a JSON report.')
@handle_errors
def classify_command(path, generator, grid, extra, classes, as_json):
    """Optimal coefficient, membership and witness per contraction class."""
    loaded = load_input(path, generator, grid, extra)
    selected = parse_classes(classes)
    if not selected:
        raise InputError('no contraction class selected')
    reports = [classify(loaded.mapping, c) for c in selected]
    exit_code = 0 if all(r.member for r in reports) else 1
    report = RunReport('classify', loaded.digest, [class_report_dict(r) for r in reports], exit_code)
    finish(report, as_json, [render_class_report(r) for r in reports])


@cli.command('solve')
@input_options
@click.option('--start', required=True, help='Starting point x_0.')
@click.option('--max-steps', type=click.IntRange(min=1), default=None,
              help='Iteration limit (default: number of points + 1).')
@click.option('--lambda', 'coefficient', default=None,
              help='Certificate coefficient instead of the generalized Chatterjea optimum.')
@click.option('--json', 'as_json', is_flag=True, help='Emit a JSON report.')
@handle_errors
def solve_command(path, generator, grid, extra, start, max_steps, coefficient, as_json):
    """Picard iteration from a start point with a geometric-decay certificate."""
    loaded = load_input(path, generator, grid, extra)
    if coefficient is not None:
        try:
            coefficient = parse_rational(coefficient)
        except ValueError as e:
            raise InputError(str(e))
        if coefficient < 0:
            raise InputError('--lambda must be non-negative')
    orbit, certificate = picard_solve(loaded.mapping, start, max_steps, coefficient)
    ok = orbit.reached_fixed_point and not certificate.violations
    report = RunReport('solve', loaded.digest, {
        'orbit': orbit_dict(orbit),
        'certificate': certificate_dict(certificate),
    }, 0 if ok else 1)
    finish(report, as_json, [
        f'orbit: {render_orbit(orbit)}',
        f'terminus: {render_terminus(orbit.terminus)}',
        render_certificate(certificate),
    ])


@cli.command('check-theorem')
@input_options
@click.option('--theorem', 'theorem_flag', type=click.Choice(ContractionClass.flags()),
              default=ContractionClass.GENERALIZED_CHATTERJEA.flag, show_default=True,
              help='Class whose fixed-point theorem is checked.')
@click.option('--json', 'as_json', is_flag=True, help='Emit a JSON report.')
@handle_errors
def check_theorem_command(path, generator, grid, extra, theorem_flag, as_json):
    """Evaluate a fixed-point theorem's hypotheses and conclusion on an instance."""
    loaded = load_input(path, generator, grid, extra)
    verdict = theorem_check(loaded.mapping, ContractionClass.from_flag(theorem_flag))
    report = RunReport('check-theorem', loaded.digest, verdict_dict(verdict), 1 if verdict.falsified else 0)
    finish(report, as_json, render_verdict(verdict).splitlines())


@cli.command('triples')
@input_options
@click.option('--csv', 'as_csv', is_flag=True, help='Emit CSV.')
@click.option('--json', 'as_json', is_flag=True, help='Emit a JSON report.')
@handle_errors
def triples_command(path, generator, grid, extra, as_csv, as_json):
    """Image perimeter and cross-distance sum for every triple."""
    loaded = load_input(path, generator, grid, extra)
    table = score_table(loaded.mapping)
    if as_csv and not as_json:
        click.echo(scores_csv(table), nl=False)
        sys.exit(0)
    report = RunReport('triples', loaded.digest, [score_dict(s) for s in table], 0)
    finish(report, as_json, [
        f'({", ".join(s.triple)})  image_perimeter={format_rational(s.image_perimeter)}  '
        f'cross_sum={format_rational(s.cross_sum)}  ratio={format_rational(s.ratio)}'
        for s in table
    ])


@cli.command('search')
@click.option('--points', 'n', type=click.IntRange(min=3), default=3, show_default=True,
              help='Number of points of each random space.')
@click.option('--trials', type=click.IntRange(min=1), default=config.DEFAULT_TRIALS, show_default=True)
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--require', default='', help='Classes the map must belong to.')
@click.option('--exclude', default='', help='Classes the map must not belong to.')
@click.option('--hypothesis-i/--no-hypothesis-i', 'hypothesis_i', default=None,
              help='Require (or forbid) the absence of period-2 points.')
@click.option('--out', type=click.Path(dir_okay=False, writable=True), default=None,
              help='Write the instance found in space file format.')
@click.option('--json', 'as_json', is_flag=True, help='Emit a JSON report.')
@handle_errors
def search_command(n, trials, seed, require, exclude, hypothesis_i, out, as_json):
    """Seeded random search for a class-separating instance."""
    predicate = SeparationPredicate(parse_classes(require), parse_classes(exclude), hypothesis_i)
    recipe = f'points={n} trials={trials} seed={seed} require={require} exclude={exclude} hypothesis_i={hypothesis_i}'
    digest = hashlib.sha256(recipe.encode('utf-8')).hexdigest()
    result = random_search(n, trials, seed, predicate)

    if result.found is None:
        report = RunReport('search', digest, {'found': None, 'trials_used': result.trials_used, 'seed': seed}, 1)
        finish(report, as_json, [f'no instance found in {result.trials_used} trial(s) (seed {seed})'])

    found = result.found
    instance_text = write_space_file(found.space, found.mapping)
    reverified = found.reverify()
    if not reverified:
        logger.error(f'Search instance at trial {result.trials_used} did not reproduce its reports')
    if out:
        with open(out, 'w', encoding='utf-8') as handle:
            handle.write(instance_text)

    report = RunReport('search', digest, {
        'found': {
            'instance': instance_text,
            'reports': [class_report_dict(r) for r in found.reports],
            'verdict': verdict_dict(found.verdict),
        },
        'reverified': reverified,
        'trials_used': result.trials_used,
        'seed': seed,
    }, 0 if reverified else 1)
    lines = [f'found at trial {result.trials_used} (seed {seed}); reverified: {"yes" if reverified else "no"}']
    lines += [render_class_report(r) for r in found.reports]
    lines += render_verdict(found.verdict).splitlines()
    lines.append(f'instance written to {out}' if out else instance_text.rstrip('\n'))
    finish(report, as_json, lines)


if __name__ == '__main__':
    cli()
