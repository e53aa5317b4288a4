"""Utils"""
import json
import sys

from algebra.exactnum import DEFAULT_ORDER
from equations.parser import parse_number
from errors import EquationSyntaxError


def log(args, tag, message):
    """Stage message on stderr, only with --verbose."""
    if getattr(args, 'verbose', False):
        print('[{}] {}'.format(tag, message), file=sys.stderr)


def parse_list(text, order=DEFAULT_ORDER):
    """Comma separated exact constants, e.g. `1,2,-3/4,w`."""
    items = [item.strip() for item in text.split(',')]
    if not all(items):
        raise EquationSyntaxError(0, 'a comma separated list of numbers', 'empty entry in {!r}'.format(text))
    return [parse_number(item, order) for item in items]


def parse_assignment(text, order=DEFAULT_ORDER):
    """`var=value` into (var, Cyc)."""
    name, sep, value = text.partition('=')
    name = name.strip()
    if not sep or not name.isidentifier():
        raise EquationSyntaxError(0, 'var=value', 'expected var=value, got {!r}'.format(text))
    return name, parse_number(value, order)


def dump_json(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))
