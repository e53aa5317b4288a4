"""Recursive-descent parser for functional equations and exact expressions.

Grammar:

    equation := expr '=' expr
    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := ('-' | '+') unary | power
    power    := atom ['^' ['-'] integer]
    atom     := integer | 'I' | 'w' | 'zeta' | variable | '(' expr ')'
              | name '(' expr ')' | 'conj' '(' expr ')'

'I' is zeta_4, 'w' the cube root of unity zeta_3 and 'zeta' the generator
zeta_N of the constant field. Equations are linear in the unknown function;
the first function name seen is the unknown and every argument must be a
linear fractional map of a single variable.
"""
import re
from dataclasses import dataclass, field

from algebra.exactnum import DEFAULT_ORDER, Cyc
from algebra.polyfunc import RatFunc, join_signed
from errors import (AmbiguousVariableModel, DivisionByZero, EquationSyntaxError, NonMoebiusArgument,
                    OrderMismatch, UnknownSymbol)
from equations.solver import spec_from_terms
from symmetry.actions import DEFAULT_BOUND, DomainMap, MoebiusMap, VariableModel, conjugate_name

MAX_DEPTH = 64
MAX_EXPONENT = 64
MAX_DEGREE = 256
MAX_DIGITS = 1000
MAX_BITS = 1 << 16

EQUATION_VARIABLES = ('t', 'x', 'z', 'zbar')
CONSTANTS = ('I', 'w', 'zeta')
ANY = '*'

_TOKEN = re.compile(r'\s*(?:(?P<num>[0-9]+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)'
                    r'|(?P<op>[-+*/^()=])|(?P<bad>\S))')


@dataclass
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            return tokens
        kind = m.lastgroup
        if kind == 'bad':
            raise EquationSyntaxError(m.start(kind), 'a number, name or operator',
                                      'at offset {}: unexpected character {!r}'.format(m.start(kind), m.group(kind)))
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()


@dataclass
class Term:
    """coefficient * f(argument), wrapped in conj when conj == 1."""
    coefficient: RatFunc
    conj: int
    argument: RatFunc
    offset: int = field(default=0, compare=False)


@dataclass
class EquationAST:
    terms: list
    rhs: RatFunc
    function: str = 'f'
    variable: str = 't'
    paired: bool = False
    order: int = DEFAULT_ORDER

    @property
    def model(self):
        return VariableModel(self.variable, self.paired)


class _Linear(object):
    """Partial value: sum of f-terms plus a constant part."""
    __slots__ = ('terms', 'const')

    def __init__(self, terms, const):
        self.terms = tuple(terms)
        self.const = const


def _add(a, b):
    return _Linear(a.terms + b.terms, a.const + b.const)


def _neg(a):
    return _Linear((Term(-t.coefficient, t.conj, t.argument, t.offset) for t in a.terms), -a.const)


def _coefficient_bits(value):
    bits = 0
    for poly in (value.num, value.den):
        for c in poly.terms.values():
            for r in c.coeffs:
                bits = max(bits, abs(r.numerator).bit_length(), r.denominator.bit_length())
    return bits


def argument_map(argument):
    """DomainMap of an f-argument, or None when it is not linear fractional in one variable."""
    variables = argument.variables()
    if len(variables) != 1:
        return None
    var = next(iter(variables))
    if var not in EQUATION_VARIABLES:
        return None
    m = MoebiusMap.from_ratfunc(argument, var)
    if m is None:
        return None
    return DomainMap(m, reflect=(var == 'zbar'))


class _Parser(object):
    """
    Args:
        text (str): source.
        order (int): cyclotomic order of the constant field.
        symbols: allowed variable names; None for the equation variables, ANY for
            every identifier.
        functions (bool): whether an unknown function may be applied.
    """
    def __init__(self, text, order=DEFAULT_ORDER, symbols=None, functions=True):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self.order = order
        self.symbols = EQUATION_VARIABLES if symbols is None else symbols
        self.functions = functions
        self.function = None
        self.depth = 0

    # token helpers

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def offset(self):
        tok = self.peek()
        return tok.offset if tok is not None else len(self.text)

    def accept(self, op):
        tok = self.peek()
        if tok is not None and tok.kind == 'op' and tok.text == op:
            self.pos += 1
            return tok
        return None

    def expect(self, op):
        if self.accept(op) is None:
            self.fail('{!r}'.format(op))

    def fail(self, expected):
        raise EquationSyntaxError(self.offset(), expected)

    def enter(self, offset):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise EquationSyntaxError(offset, 'nesting at most {} deep'.format(MAX_DEPTH))

    def zero(self):
        return RatFunc.constant(0, self.order)

    # grammar

    def equation(self):
        lhs = self.expr()
        at = self.offset()
        self.expect('=')
        rhs = self.expr()
        self.finish()
        terms = list(lhs.terms) + [Term(-t.coefficient, t.conj, t.argument, t.offset) for t in rhs.terms]
        if not terms:
            raise EquationSyntaxError(at, 'a term in the unknown function')
        return terms, rhs.const - lhs.const

    def finish(self):
        if self.peek() is not None:
            self.fail('end of input')

    def expr(self):
        value = self.term()
        while True:
            if self.accept('+'):
                value = _add(value, self.term())
            elif self.accept('-'):
                value = _add(value, _neg(self.term()))
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            tok = self.peek()
            if self.accept('*'):
                value = self.multiply(value, self.unary(), tok.offset)
            elif self.accept('/'):
                at = self.offset()
                value = self.divide(value, self.unary(), at)
            else:
                return value

    def unary(self):
        tok = self.peek()
        if tok is not None and tok.kind == 'op' and tok.text in '+-':
            self.pos += 1
            self.enter(tok.offset)
            value = self.unary()
            self.depth -= 1
            return _neg(value) if tok.text == '-' else value
        return self.power()

    def power(self):
        base = self.atom()
        caret = self.peek()
        if not self.accept('^'):
            return base
        negative = self.accept('-') is not None
        num = self.peek()
        if num is None or num.kind != 'num':
            self.fail('an integer exponent')
        self.pos += 1
        exponent = int(num.text) if len(num.text) <= 4 else MAX_EXPONENT + 1
        if exponent > MAX_EXPONENT:
            raise EquationSyntaxError(num.offset, 'an exponent of at most {}'.format(MAX_EXPONENT))
        if base.terms:
            raise EquationSyntaxError(caret.offset, 'an exponent on an expression free of the unknown')
        value = base.const
        if max(value.num.degree(), value.den.degree()) * exponent > MAX_DEGREE:
            raise EquationSyntaxError(num.offset, 'a result of degree at most {}'.format(MAX_DEGREE))
        if _coefficient_bits(value) * exponent > MAX_BITS:
            raise EquationSyntaxError(num.offset, 'a result with smaller coefficients')
        if negative:
            if value.is_zero():
                raise EquationSyntaxError(num.offset, 'a nonzero base for a negative exponent')
            exponent = -exponent
        return _Linear((), value ** exponent)

    def atom(self):
        tok = self.peek()
        if tok is None:
            self.fail('a number, symbol or "("')
        if tok.kind == 'num':
            self.pos += 1
            if len(tok.text) > MAX_DIGITS:
                raise EquationSyntaxError(tok.offset, 'a number of at most {} digits'.format(MAX_DIGITS))
            return _Linear((), RatFunc.constant(int(tok.text), self.order))
        if tok.kind == 'op' and tok.text == '(':
            self.pos += 1
            self.enter(tok.offset)
            value = self.expr()
            self.expect(')')
            self.depth -= 1
            return value
        if tok.kind == 'name':
            self.pos += 1
            if self.accept('('):
                return self.call(tok)
            return _Linear((), self.symbol(tok))
        self.fail('a number, symbol or "("')

    def symbol(self, tok):
        name = tok.text
        if name == 'I':
            return self.root_of_unity(4, tok)
        if name == 'w':
            return self.root_of_unity(3, tok)
        if name == 'zeta':
            return RatFunc.constant(Cyc.zeta(self.order), self.order)
        if name == 'conj' or name == self.function:
            raise UnknownSymbol(tok.offset, name)
        if self.symbols != ANY and name not in self.symbols:
            raise UnknownSymbol(tok.offset, name)
        return RatFunc.variable(name, self.order)

    def root_of_unity(self, m, tok):
        try:
            return RatFunc.constant(Cyc.root_of_unity(m, self.order), self.order)
        except OrderMismatch as exc:
            raise EquationSyntaxError(tok.offset, 'a constant of Q(zeta_{})'.format(self.order),
                                      'at offset {}: {}'.format(tok.offset, exc))

    def call(self, tok):
        name = tok.text
        self.enter(tok.offset)
        if name == 'conj':
            inner = self.expr()
            self.expect(')')
            self.depth -= 1
            return self.conjugate(inner)
        if not self.functions or name in EQUATION_VARIABLES or name in CONSTANTS:
            raise UnknownSymbol(tok.offset, name)
        if self.function is None:
            self.function = name
        elif self.function != name:
            raise UnknownSymbol(tok.offset, name)
        at = self.offset()
        inner = self.expr()
        self.expect(')')
        self.depth -= 1
        if inner.terms:
            raise EquationSyntaxError(at, 'an argument free of {}'.format(name))
        if argument_map(inner.const) is None:
            raise NonMoebiusArgument(at, str(inner.const))
        term = Term(RatFunc.constant(1, self.order), 0, inner.const, tok.offset)
        return _Linear((term,), self.zero())

    def conjugate_value(self, value):
        value = value.galois(-1)
        if self.symbols == ANY:
            mapping = {v: conjugate_name(v) for v in value.variables()}
        else:
            mapping = {'z': 'zbar', 'zbar': 'z'}
        return value.rename(mapping)

    def conjugate(self, inner):
        terms = (Term(self.conjugate_value(t.coefficient), 1 - t.conj, t.argument, t.offset)
                 for t in inner.terms)
        return _Linear(terms, self.conjugate_value(inner.const))

    def multiply(self, a, b, at):
        if a.terms and b.terms:
            raise EquationSyntaxError(at, 'an expression linear in the unknown')
        if b.terms:
            a, b = b, a
        k = b.const
        terms = []
        for t in a.terms:
            c = t.coefficient * k
            if not c.is_zero():
                terms.append(Term(c, t.conj, t.argument, t.offset))
        return _Linear(terms, a.const * k)

    def divide(self, a, b, at):
        if b.terms:
            raise EquationSyntaxError(at, 'a divisor free of the unknown')
        if b.const.is_zero():
            raise EquationSyntaxError(at, 'a nonzero divisor')
        return self.multiply(a, _Linear((), b.const.inverse()), at)


def _run(parser, method):
    try:
        return method()
    except DivisionByZero as exc:
        raise EquationSyntaxError(parser.offset(), 'a nonzero divisor',
                                  'at offset {}: {}'.format(parser.offset(), exc))


def _variable_model(terms, rhs):
    used = set(rhs.variables())
    for t in terms:
        used |= t.coefficient.variables() | t.argument.variables()
    families = {'z' if v in ('z', 'zbar') else v for v in used}
    if len(families) > 1:
        raise AmbiguousVariableModel('equation mixes the variables {}'.format(', '.join(sorted(used))))
    var = families.pop() if families else 't'
    conjugated = any(t.conj for t in terms)
    return VariableModel(var, var == 'z' and ('zbar' in used or conjugated))


def parse_equation(text, order=DEFAULT_ORDER):
    """Parse `lhs = rhs` into an EquationAST.

    f-terms may appear on both sides; they are moved to the left and the
    constant parts to the right.

    Raises:
        EquationSyntaxError: with the character offset of the failure
            (UnknownSymbol and NonMoebiusArgument are subclasses).
        AmbiguousVariableModel: when t, x and z/zbar are mixed.
    """
    parser = _Parser(text, order)
    terms, rhs = _run(parser, parser.equation)
    model = _variable_model(terms, rhs)
    return EquationAST(terms, rhs, parser.function, model.var, model.paired, order)


def parse_expression(text, order=DEFAULT_ORDER, symbols=ANY):
    """Parse an expression without unknown functions into a RatFunc."""
    parser = _Parser(text, order, symbols=symbols, functions=False)

    def run():
        value = parser.expr()
        parser.finish()
        return value.const
    return _run(parser, run)


def parse_number(text, order=DEFAULT_ORDER):
    """Parse an exact constant such as `3/4`, `-2*w` or `1 + I`."""
    return parse_expression(text, order, symbols=()).constant_value()


def parse_generators(texts, order=DEFAULT_ORDER):
    """Domain maps from expressions such as `1-t`, `1/t` or `w*zbar`.

    Returns:
        (list of DomainMap, VariableModel)
    """
    maps, used = [], set()
    for text in texts:
        argument = parse_expression(text, order, symbols=EQUATION_VARIABLES)
        m = argument_map(argument)
        if m is None:
            raise NonMoebiusArgument(0, text)
        maps.append(m)
        used |= argument.variables()
    families = {'z' if v in ('z', 'zbar') else v for v in used}
    if len(families) > 1:
        raise AmbiguousVariableModel('generators mix the variables {}'.format(', '.join(sorted(used))))
    var = families.pop() if families else 't'
    return maps, VariableModel(var, 'zbar' in used)


def format_term(term, function='f'):
    core = '{}({})'.format(function, term.argument)
    if term.conj:
        core = 'conj({})'.format(core)
    if term.coefficient == 1:
        return core
    if term.coefficient == -1:
        return '-' + core
    return '({})*{}'.format(term.coefficient, core)


def format_equation(ast):
    """Text that parses back to an equal EquationAST."""
    lhs = join_signed([format_term(t, ast.function) for t in ast.terms])
    return '{} = {}'.format(lhs, ast.rhs)


def infer_spec(ast, bound=DEFAULT_BOUND):
    """EquationSpec of a parsed equation.

    G is generated by the argument maps, H is conjugation when some term is
    conjugated; coefficients of repeated (g, h) pairs add up and pairs never
    mentioned get 0.
    """
    terms = [(t.coefficient, argument_map(t.argument), t.conj) for t in ast.terms]
    return spec_from_terms(terms, ast.rhs, ast.model, bound=bound)
