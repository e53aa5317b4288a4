"""Sparse multivariate polynomials and rational functions over Q(zeta_N)."""
import re
from fractions import Fraction
from functools import lru_cache

from tqdm import tqdm

from algebra.exactnum import DEFAULT_ORDER, Cyc, as_cyc
from errors import DivisionByZero, OrderMismatch, PoleAtPoint

# polynomial matrices up to this size use memoised minor expansion
MINOR_EXPANSION_LIMIT = 8


@lru_cache(maxsize=None)
def var_key(name):
    """Natural sort key, so that b2 < b10 and z < zbar."""
    return tuple((0, int(p), '') if p.isdigit() else (1, 0, p)
                 for p in re.split(r'(\d+)', name) if p)


def _canon(pairs):
    merged = {}
    for var, exp in pairs:
        if exp:
            merged[var] = merged.get(var, 0) + exp
    return tuple(sorted(((v, e) for v, e in merged.items() if e), key=lambda p: var_key(p[0])))


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    return _canon(m1 + m2)


def _mono_div(m1, m2):
    """m1 / m2 if m2 divides m1, else None."""
    exps = dict(m1)
    for var, e in m2:
        left = exps.get(var, 0) - e
        if left < 0:
            return None
        exps[var] = left
    return _canon(exps.items())


def _mono_degree(mono):
    return sum(e for _, e in mono)


def _grlex(variables):
    order = sorted(variables, key=var_key)

    def key(mono):
        exps = dict(mono)
        return (_mono_degree(mono), tuple(exps.get(v, 0) for v in order))
    return key


def _mono_str(mono):
    return '*'.join(v if e == 1 else '{}^{}'.format(v, e) for v, e in mono)


def join_signed(parts):
    if not parts:
        return '0'
    out = parts[0]
    for text in parts[1:]:
        out += ' - ' + text[1:] if text.startswith('-') else ' + ' + text
    return out


class MPoly(object):
    """Sparse polynomial: map from monomials to nonzero Cyc coefficients.

    A monomial is a tuple of (variable, exponent) pairs in natural variable
    order; the empty tuple is the constant monomial.

    Args:
        terms (dict): monomial -> coefficient (int, Fraction or Cyc).
        order (int): cyclotomic order N of the coefficient field.
    """
    __slots__ = ('terms', 'order')

    def __init__(self, terms=None, order=DEFAULT_ORDER):
        self.order = order
        clean = {}
        for mono, c in (terms or {}).items():
            c = self._coeff(c)
            mono = _canon(mono)
            if mono in clean:
                c = clean[mono] + c
            clean[mono] = c
        self.terms = {m: c for m, c in clean.items() if c}

    def _coeff(self, c):
        c = as_cyc(c, self.order)
        if c.order != self.order:
            if not c.is_rational():
                raise OrderMismatch('coefficient {} is not in Q(zeta_{})'.format(c, self.order))
            c = Cyc.rational(c.coeffs[0], self.order)
        return c

    @classmethod
    def _make(cls, terms, order):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.order = order
        return obj

    @classmethod
    def zero(cls, order=DEFAULT_ORDER):
        return cls._make({}, order)

    @classmethod
    def one(cls, order=DEFAULT_ORDER):
        return cls.constant(1, order)

    @classmethod
    def constant(cls, value, order=DEFAULT_ORDER):
        return cls({(): value}, order)

    @classmethod
    def variable(cls, name, order=DEFAULT_ORDER):
        return cls._make({((name, 1),): Cyc.rational(1, order)}, order)

    @classmethod
    def from_univariate(cls, coeffs, var, order=DEFAULT_ORDER):
        """Build from coefficients listed by increasing degree."""
        return cls({((var, i),) if i else (): c for i, c in enumerate(coeffs)}, order)

    # coercion

    def _lift(self, order):
        if order == self.order:
            return self
        if not self.is_rational():
            raise OrderMismatch('cannot mix Q(zeta_{}) and Q(zeta_{})'.format(self.order, order))
        return MPoly._make({m: Cyc.rational(c.coeffs[0], order) for m, c in self.terms.items()}, order)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.order == self.order:
                return self, other
            if other.is_rational():
                return self, other._lift(self.order)
            return self._lift(other.order), other
        if isinstance(other, (int, Fraction, Cyc)):
            return self, MPoly.constant(other, self.order)
        return None

    # predicates

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def is_one(self):
        return self.is_constant() and self.constant_value().is_one()

    def is_rational(self):
        return all(c.is_rational() for c in self.terms.values())

    def constant_value(self):
        return self.terms.get((), Cyc.rational(0, self.order))

    def variables(self):
        return frozenset(v for mono in self.terms for v, _ in mono)

    def degree(self):
        return max((_mono_degree(m) for m in self.terms), default=-1)

    def degree_in(self, var):
        return max((dict(m).get(var, 0) for m in self.terms), default=-1)

    def leading(self, variables=None):
        """Graded-lex leading (monomial, coefficient)."""
        key = _grlex(self.variables() if variables is None else variables)
        mono = max(self.terms, key=key)
        return mono, self.terms[mono]

    def sorted_terms(self):
        key = _grlex(self.variables())
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    # ring operations

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        if len(x.terms) < len(y.terms):
            x, y = y, x
        terms = dict(x.terms)
        for m, c in y.terms.items():
            if m in terms:
                s = terms[m] + c
                if s:
                    terms[m] = s
                else:
                    del terms[m]
            else:
                terms[m] = c
        return MPoly._make(terms, x.order)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._make({m: -c for m, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x + (-y)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self._coeff(c)
        if not c:
            return MPoly.zero(self.order)
        return MPoly._make({m: v * c for m, v in self.terms.items()}, self.order)

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        if y.is_constant():
            return x.scale(y.constant_value())
        if x.is_constant():
            return y.scale(x.constant_value())
        terms = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                if m in terms:
                    c = terms[m] + c
                terms[m] = c
        return MPoly._make({m: c for m, c in terms.items() if c}, x.order)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError('polynomial powers need a non-negative integer exponent')
        result, base = MPoly.one(self.order), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divide_exact(self, other):
        """Quotient self / other when other divides self exactly, else None."""
        if other.is_zero():
            raise DivisionByZero('polynomial division by zero')
        x, y = self._coerce(other)
        if y.is_constant():
            return x.scale(y.constant_value().inverse())
        variables = x.variables() | y.variables()
        key = _grlex(variables)
        lead_mono, lead_coeff = y.leading(variables)
        inv = lead_coeff.inverse()
        remainder = dict(x.terms)
        quotient = {}
        while remainder:
            mono = max(remainder, key=key)
            q_mono = _mono_div(mono, lead_mono)
            if q_mono is None:
                return None
            q_coeff = remainder[mono] * inv
            quotient[q_mono] = q_coeff
            for m, c in y.terms.items():
                target = _mono_mul(m, q_mono)
                value = remainder.get(target, Cyc.rational(0, x.order)) - c * q_coeff
                if value:
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
        return MPoly._make(quotient, x.order)

    def exquo(self, other):
        q = self.divide_exact(other)
        if q is None:
            raise ArithmeticError('{} does not divide {}'.format(other, self))
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.leading()[1].inverse())

    def monomial_content(self):
        """Largest monomial dividing every term."""
        common = None
        for mono in self.terms:
            exps = dict(mono)
            if common is None:
                common = exps
            else:
                common = {v: min(e, exps.get(v, 0)) for v, e in common.items() if exps.get(v, 0)}
        return _canon((common or {}).items())

    def divide_monomial(self, mono):
        return MPoly._make({_mono_div(m, mono): c for m, c in self.terms.items()}, self.order)

    # univariate view

    def to_univariate(self, var):
        """Coefficients by increasing degree in var; other variables are not allowed."""
        coeffs = [Cyc.rational(0, self.order)] * (self.degree_in(var) + 1)
        for mono, c in self.terms.items():
            exps = dict(mono)
            if set(exps) - {var}:
                raise ValueError('{} is not univariate in {}'.format(self, var))
            coeffs[exps.get(var, 0)] = c
        return coeffs

    # substitution and automorphisms

    def evaluate(self, point):
        total = Cyc.rational(0, self.order)
        for mono, c in self.terms.items():
            value = c
            for var, e in mono:
                if var not in point:
                    raise ValueError('no value given for variable {}'.format(var))
                value = value * as_cyc(point[var], self.order) ** e
            total = total + value
        return total

    def galois(self, k):
        return MPoly._make({m: c.galois(k) for m, c in self.terms.items()}, self.order)

    def rename(self, mapping):
        return MPoly({tuple((mapping.get(v, v), e) for v, e in m): c
                      for m, c in self.terms.items()}, self.order)

    # comparison and display

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            other = MPoly.constant(other, self.order)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        parts = []
        for mono, c in self.sorted_terms():
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(_mono_str(mono))
            elif c == -1:
                parts.append('-' + _mono_str(mono))
            elif c.term_count() == 1:
                parts.append('{}*{}'.format(c, _mono_str(mono)))
            else:
                parts.append('({})*{}'.format(c, _mono_str(mono)))
        return join_signed(parts)

    def __repr__(self):
        return 'MPoly({!r})'.format(str(self))


def _trim(coeffs):
    while coeffs and not coeffs[-1]:
        coeffs = coeffs[:-1]
    return coeffs


def _uni_rem(a, b):
    a = list(a)
    inv = b[-1].inverse()
    while len(a) >= len(b):
        q = a[-1] * inv
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = a[shift + i] - q * c
        a = _trim(a[:-1])
    return _trim(a)


def poly_gcd(p, q):
    """Monic gcd of univariate polynomials; multivariate input gives 1."""
    if p.is_zero() and q.is_zero():
        return MPoly.zero(p.order)
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    variables = p.variables() | q.variables()
    if not p.variables() or not q.variables() or len(variables) != 1:
        return MPoly.one(p.order)
    var = next(iter(variables))
    p, q = p._coerce(q)
    a, b = _trim(p.to_univariate(var)), _trim(q.to_univariate(var))
    while b:
        a, b = b, _uni_rem(a, b)
    return MPoly.from_univariate(a, var, p.order).monic()


def _normalize(num, den):
    if den.is_zero():
        raise DivisionByZero('rational function with zero denominator')
    num, den = num._coerce(den)
    if num.is_zero():
        return MPoly.zero(num.order), MPoly.one(num.order)
    if not den.is_constant():
        num_vars, den_vars = num.variables(), den.variables()
        if len(den_vars) == 1 and num_vars <= den_vars:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num, den = num.exquo(g), den.exquo(g)
        else:
            quotient = num.divide_exact(den)
            if quotient is not None:
                return quotient, MPoly.one(num.order)
            content = _canon((v, min(dict(num.monomial_content()).get(v, 0), e))
                             for v, e in den.monomial_content())
            if content:
                num, den = num.divide_monomial(content), den.divide_monomial(content)
    if den.is_constant():
        return num.scale(den.constant_value().inverse()), MPoly.one(num.order)
    lead = den.leading(num.variables() | den.variables())[1]
    if not lead.is_one():
        inv = lead.inverse()
        num, den = num.scale(inv), den.scale(inv)
    return num, den


class RatFunc(object):
    """Quotient num/den of polynomials, normalised on construction.

    Univariate fractions are fully reduced; multivariate ones are reduced only
    by exact division and common monomials. The denominator is monic in
    graded-lex order.
    """
    __slots__ = ('num', 'den')
    __hash__ = None

    def __init__(self, num, den=None, order=DEFAULT_ORDER):
        if not isinstance(num, MPoly):
            num = MPoly.constant(num, den.order if isinstance(den, MPoly) else order)
        if den is None:
            den = MPoly.one(num.order)
        elif not isinstance(den, MPoly):
            den = MPoly.constant(den, num.order)
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _make(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def constant(cls, value, order=DEFAULT_ORDER):
        return cls._make(MPoly.constant(value, order), MPoly.one(order))

    @classmethod
    def variable(cls, name, order=DEFAULT_ORDER):
        return cls._make(MPoly.variable(name, order), MPoly.one(order))

    @classmethod
    def coerce(cls, value, order=DEFAULT_ORDER):
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, MPoly):
            return cls._make(value, MPoly.one(value.order))
        return cls.constant(value, order)

    @property
    def order(self):
        return self.num.order

    def _other(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, Cyc, MPoly)):
            return RatFunc.coerce(other, self.order)
        return None

    # predicates

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_one()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError('{} is not constant'.format(self))
        return self.num.constant_value()

    def variables(self):
        return self.num.variables() | self.den.variables()

    # field operations

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._make(-self.num, self.den)

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc.constant(0, self.order)
        if self.den.is_one() and other.den.is_one():
            return RatFunc._make(self.num * other.num, self.den)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero('division by the zero rational function')
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero('division by the zero rational function')
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._make(self.num ** n, self.den ** n)

    # substitution and automorphisms

    def compose(self, subst):
        return rf_compose(self, subst)

    def evaluate(self, point):
        return rf_eval(self, point)

    def galois(self, k):
        return RatFunc(self.num.galois(k), self.den.galois(k))

    def rename(self, mapping):
        return RatFunc(self.num.rename(mapping), self.den.rename(mapping))

    # comparison and display

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        num, den = str(self.num), str(self.den)
        if len(self.num.terms) > 1 or any(c.term_count() > 1 for c in self.num.terms.values()):
            num = '({})'.format(num)
        den_terms = list(self.den.terms)
        if len(den_terms) != 1 or len(den_terms[0]) != 1:
            den = '({})'.format(den)
        return '{}/{}'.format(num, den)

    def __repr__(self):
        return 'RatFunc({!r})'.format(str(self))


def _poly_compose(p, subst):
    """p with variables replaced by rational functions, as (numerator, denominator)."""
    order = p.order
    parts = {}
    for var in p.variables():
        value = RatFunc.coerce(subst[var], order) if var in subst else RatFunc.variable(var, order)
        parts[var] = (value, p.degree_in(var))
    num_powers = {}
    den_powers = {}

    def power(cache, var, poly, e):
        key = (var, e)
        if key not in cache:
            cache[key] = poly ** e
        return cache[key]

    num = MPoly.zero(order)
    for mono, c in p.terms.items():
        exps = dict(mono)
        term = MPoly.constant(c, order)
        for var, (value, degree) in parts.items():
            e = exps.get(var, 0)
            if e:
                term = term * power(num_powers, var, value.num, e)
            if degree - e:
                term = term * power(den_powers, var, value.den, degree - e)
        num = num + term
    den = MPoly.one(order)
    for var, (value, degree) in parts.items():
        den = den * power(den_powers, var, value.den, degree)
    return num, den


def rf_compose(f, subst):
    """Simultaneous substitution var -> RatFunc; variables missing from subst stay fixed."""
    f_num, f_den = _poly_compose(f.num, subst)
    g_num, g_den = _poly_compose(f.den, subst)
    if g_num.is_zero():
        raise DivisionByZero('substitution makes the denominator of {} vanish'.format(f))
    return RatFunc(f_num * g_den, f_den * g_num)


def rf_arith(op, f, g):
    if op == 'add':
        return f + g
    if op == 'sub':
        return f - g
    if op == 'mul':
        return f * g
    if op == 'div':
        return f / g
    raise ValueError('unknown operation {!r}'.format(op))


def rf_eval(f, point):
    """Exact value of f at point (variable -> number)."""
    den = f.den.evaluate(point)
    if den.is_zero():
        raise PoleAtPoint(point)
    return f.num.evaluate(point) / den


class PolyMatrix(object):
    """Dense matrix of RatFunc entries.

    Args:
        rows (sequence of sequences): entries; numbers and MPoly are coerced.
        order (int): coefficient field order for coerced numbers.
    """
    def __init__(self, rows, order=DEFAULT_ORDER):
        self.entries = tuple(tuple(RatFunc.coerce(e, order) for e in row) for row in rows)
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValueError('matrix rows have different lengths')
        self.rows = len(self.entries)
        self.cols = widths.pop() if widths else 0
        self.order = order

    @classmethod
    def identity(cls, n, order=DEFAULT_ORDER):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], order)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def transpose(self):
        return PolyMatrix(zip(*self.entries), self.order) if self.rows else self

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError('shape mismatch {}x{} @ {}x{}'.format(self.rows, self.cols, other.rows, other.cols))
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = RatFunc.constant(0, self.order)
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, self.order)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None

    def tolist(self):
        return [[str(e) for e in row] for row in self.entries]

    def __str__(self):
        return '\n'.join('[' + ', '.join(row) + ']' for row in self.tolist())


def _field_det(grid):
    """Gaussian elimination over Q(zeta_N)."""
    m = [list(row) for row in grid]
    n = len(m)
    det = Cyc.rational(1, m[0][0].order)
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k]), None)
        if pivot is None:
            return det * 0
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = -det
        det = det * m[k][k]
        inv = m[k][k].inverse()
        for i in range(k + 1, n):
            if not m[i][k]:
                continue
            factor = m[i][k] * inv
            for j in range(k + 1, n):
                m[i][j] = m[i][j] - factor * m[k][j]
    return det


def _minor_expansion(grid, progress=False):
    """Laplace expansion row by row, memoised over column subsets."""
    n = len(grid)
    order = grid[0][0].order
    minors = {0: MPoly.one(order)}
    for r in tqdm(range(n), desc='minors', disable=not progress):
        row = grid[r]
        nxt = {}
        for mask, value in minors.items():
            for j in range(n):
                if mask >> j & 1 or row[j].is_zero():
                    continue
                term = value * row[j]
                if bin(mask >> (j + 1)).count('1') & 1:
                    term = -term
                key = mask | (1 << j)
                nxt[key] = nxt[key] + term if key in nxt else term
        minors = {k: v for k, v in nxt.items() if not v.is_zero()}
        if not minors:
            return MPoly.zero(order)
    return minors.get((1 << n) - 1, MPoly.zero(order))


def _bareiss(grid, progress=False):
    m = [list(row) for row in grid]
    n = len(m)
    order = m[0][0].order
    sign = 1
    prev = MPoly.one(order)
    for k in tqdm(range(n - 1), desc='bareiss', disable=not progress):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return MPoly.zero(order)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exquo(prev)
        prev = m[k][k]
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def _poly_det(grid, progress=False):
    if len(grid) <= MINOR_EXPANSION_LIMIT:
        return _minor_expansion(grid, progress)
    return _bareiss(grid, progress)


def mat_det(matrix, progress=False):
    """Exact determinant of a square PolyMatrix, as a RatFunc."""
    if matrix.rows != matrix.cols:
        raise ValueError('determinant of a non-square {}x{} matrix'.format(matrix.rows, matrix.cols))
    n, order = matrix.rows, matrix.order
    if n == 0:
        return RatFunc.constant(1, order)
    entries = matrix.entries
    if all(e.is_constant() for row in entries for e in row):
        return RatFunc.constant(_field_det([[e.constant_value() for e in row] for row in entries]), order)
    if all(e.is_polynomial() for row in entries for e in row):
        return RatFunc(_poly_det([[e.num for e in row] for row in entries], progress))
    grid = []
    scale = MPoly.one(order)
    for row in entries:
        dens = []
        for e in row:
            if not e.den.is_one() and all(e.den != d for d in dens):
                dens.append(e.den)
        common = MPoly.one(order)
        for d in dens:
            common = common * d
        grid.append([e.num * common.exquo(e.den) for e in row])
        scale = scale * common
    return RatFunc(_poly_det(grid, progress), scale)
