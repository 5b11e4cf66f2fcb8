"""Reader and writer for the line-oriented space file format.

    space
    point A
    point B
    dist A B 1
    coord A 0          # optional: tags the space as a sample of the real line
    map
    send A B

`#` starts a comment. Distances and coordinates accept integers, `p/q` or
decimal literals and are kept as exact rationals.
"""

import hashlib
from dataclasses import dataclass, field
from pathlib import Path

from errors import ParseError
from mappings import SelfMap
from metric import FiniteMetricSpace, format_rational, is_point_id, parse_rational, validate_metric


@dataclass
class SpaceDocument:
    """Parsed but not yet validated contents of a space file."""
    points: list = field(default_factory=list)
    distances: dict = field(default_factory=dict)
    coordinates: dict = field(default_factory=dict)
    sends: dict = None
    source: str = None
    digest: str = None

    def violations(self):
        return validate_metric(self.points, self.distances)

    def build_space(self):
        """FiniteMetricSpace of the document; raises InvalidMetric."""
        return FiniteMetricSpace.from_table(self.points, self.distances, self.coordinates or None)

    def build_map(self, space):
        if self.sends is None:
            return None
        return SelfMap.from_table(space, self.sends)


def _point(token, doc, line_no, known=True):
    if not is_point_id(token):
        raise ParseError(f'invalid point identifier {token!r}', line_no, doc.source)
    if known and token not in doc.points:
        raise ParseError(f'undeclared point {token!r}', line_no, doc.source)
    return token


def _rational(token, doc, line_no):
    try:
        return parse_rational(token)
    except ValueError:
        raise ParseError(f'invalid number {token!r}', line_no, doc.source) from None


def parse_space_text(text, source=None):
    doc = SpaceDocument(source=source, digest=hashlib.sha256(text.encode('utf-8')).hexdigest())
    dist_lines = {}
    header_seen = False
    last_line = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        tokens = raw.split('#', 1)[0].split()
        if not tokens:
            continue
        keyword, args = tokens[0], tokens[1:]

        if not header_seen:
            if tokens != ['space']:
                raise ParseError("file must start with a 'space' line", line_no, source)
            header_seen = True
            continue

        expected = {'point': 1, 'dist': 3, 'coord': 2, 'map': 0, 'send': 2, 'space': 0}
        if keyword not in expected:
            raise ParseError(f'unknown keyword {keyword!r}', line_no, source)
        if len(args) != expected[keyword]:
            raise ParseError(f"'{keyword}' takes {expected[keyword]} argument(s), got {len(args)}",
                             line_no, source)
        if keyword == 'space':
            raise ParseError("duplicate 'space' line", line_no, source)
        in_map = doc.sends is not None
        if in_map and keyword != 'send':
            raise ParseError(f"'{keyword}' is not allowed after 'map'", line_no, source)

        if keyword == 'point':
            name = _point(args[0], doc, line_no, known=False)
            if name in doc.points:
                raise ParseError(f'duplicate point {name!r}', line_no, source)
            doc.points.append(name)
        elif keyword == 'dist':
            p, q = _point(args[0], doc, line_no), _point(args[1], doc, line_no)
            pair = frozenset((p, q))
            if pair in dist_lines:
                raise ParseError(f'duplicate distance for pair {p} {q}', line_no, source)
            dist_lines[pair] = line_no
            doc.distances[(p, q)] = _rational(args[2], doc, line_no)
        elif keyword == 'coord':
            p = _point(args[0], doc, line_no)
            if p in doc.coordinates:
                raise ParseError(f'duplicate coordinate for {p}', line_no, source)
            doc.coordinates[p] = _rational(args[1], doc, line_no)
        elif keyword == 'map':
            doc.sends = {}
        elif keyword == 'send':
            if not in_map:
                raise ParseError("'send' before 'map'", line_no, source)
            p, image = _point(args[0], doc, line_no), _point(args[1], doc, line_no)
            if p in doc.sends:
                raise ParseError(f'point {p} is sent twice', line_no, source)
            doc.sends[p] = image

    if not header_seen:
        raise ParseError("empty file: expected a 'space' line", last_line or None, source)
    if doc.coordinates and set(doc.coordinates) != set(doc.points):
        missing = sorted(set(doc.points) - set(doc.coordinates))
        raise ParseError(f'coordinates missing for {", ".join(missing)}', last_line, source)
    if doc.coordinates:
        for (p, q), value in doc.distances.items():
            gap = abs(doc.coordinates[p] - doc.coordinates[q])
            if value != gap:
                raise ParseError(f'dist {p} {q} is {format_rational(value)} but the coordinates are '
                                 f'{format_rational(gap)} apart', dist_lines[frozenset((p, q))], source)
    if doc.sends is not None:
        unsent = [p for p in doc.points if p not in doc.sends]
        if unsent:
            raise ParseError(f'no send line for {", ".join(unsent)}', last_line, source)
    return doc


def read_space_file(path):
    path = Path(path)
    return parse_space_text(path.read_text(encoding='utf-8'), source=str(path))


def write_space_file(space, mapping=None):
    """Canonical text of a space (and map): points, pairs and sends in lexicographic order."""
    lines = ['space']
    lines.extend(f'point {p}' for p in space.points)
    lines.extend(f'dist {p} {q} {format_rational(d)}' for (p, q), d in zip(space.pairs(), space.distances))
    if space.sampled:
        lines.extend(f'coord {p} {format_rational(x)}' for p, x in zip(space.points, space.coordinates))
    if mapping is not None:
        lines.append('map')
        lines.extend(f'send {p} {image}' for p, image in zip(space.points, mapping.images))
    return '\n'.join(lines) + '\n'
