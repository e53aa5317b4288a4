"""Exact numbers: rationals and the cyclotomic field Q(zeta_N)."""
import operator
from fractions import Fraction
from functools import lru_cache
from math import gcd

import sympy
from sympy import QQ, Poly, cyclotomic_poly, totient

from errors import DivisionByZero, NotCoprime, OrderMismatch

DEFAULT_ORDER = 12

# Arbitrary-precision rationals, always reduced with positive denominator.
Rat = Fraction

_X = sympy.Symbol('x')


@lru_cache(maxsize=None)
def cyclotomic_coeffs(order):
    """Integer coefficients of Phi_N, constant term first."""
    poly = Poly(cyclotomic_poly(order, _X), _X)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def euler_phi(order):
    return int(totient(order))


@lru_cache(maxsize=None)
def power_basis(order):
    """Reduced coefficient vectors of zeta_N^j for j = 0 .. N-1."""
    phi = cyclotomic_coeffs(order)
    dim = len(phi) - 1
    current = [Fraction(0)] * dim
    current[0] = Fraction(1)
    rows = []
    for _ in range(order):
        rows.append(tuple(current))
        top = current[-1]
        current = [Fraction(0)] + current[:-1]
        if top:
            for i in range(dim):
                current[i] -= top * phi[i]
    return tuple(rows)


def _reduce(raw, order):
    """Reduce a coefficient list indexed by powers of zeta (any length)."""
    dim = euler_phi(order)
    if len(raw) <= dim:
        return tuple(Fraction(c) for c in raw) + (Fraction(0),) * (dim - len(raw))
    basis = power_basis(order)
    acc = [Fraction(0)] * dim
    for j, c in enumerate(raw):
        if not c:
            continue
        for i, r in enumerate(basis[j % order]):
            if r:
                acc[i] += c * r
    return tuple(acc)


@lru_cache(maxsize=4096)
def _inverse_coeffs(order, coeffs):
    modulus = Poly(list(reversed(cyclotomic_coeffs(order))), _X, domain=QQ)
    value = Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
                 _X, domain=QQ)
    inverse = value.invert(modulus)
    raw = [Fraction(int(c.p), int(c.q)) for c in reversed(inverse.all_coeffs())]
    return _reduce(raw, order)


class Cyc(object):
    """Element of Q(zeta_N) stored as coefficients of 1, zeta, ..., zeta^(phi(N)-1).

    Args:
        coeffs (sequence): rational coefficients of powers of zeta_N; longer
            vectors are reduced modulo Phi_N.
        order (int): N.
    """
    __slots__ = ('order', 'coeffs')

    def __init__(self, coeffs=(), order=DEFAULT_ORDER):
        if order < 1:
            raise ValueError('cyclotomic order must be positive, got {}'.format(order))
        self.order = order
        self.coeffs = _reduce(list(coeffs), order)

    @classmethod
    def _make(cls, coeffs, order):
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def rational(cls, value, order=DEFAULT_ORDER):
        return cls._make((Fraction(value),) + (Fraction(0),) * (euler_phi(order) - 1), order)

    @classmethod
    def zeta(cls, order=DEFAULT_ORDER, power=1):
        return cls._make(power_basis(order)[power % order], order)

    @classmethod
    def root_of_unity(cls, m, order=DEFAULT_ORDER):
        """The primitive m-th root zeta_N^(N/m); requires m | N."""
        if m < 1 or order % m:
            raise OrderMismatch('Q(zeta_{}) does not contain a primitive {}-th root of unity'
                                .format(order, m))
        return cls.zeta(order, order // m)

    # coercion

    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.order == self.order:
                return self, other
            if other.is_rational():
                return self, Cyc.rational(other.coeffs[0], self.order)
            if self.is_rational():
                return Cyc.rational(self.coeffs[0], other.order), other
            raise OrderMismatch('cannot mix Q(zeta_{}) and Q(zeta_{})'.format(self.order, other.order))
        if isinstance(other, (int, Fraction)):
            return self, Cyc.rational(other, self.order)
        return None

    # predicates

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def is_one(self):
        return self.coeffs[0] == 1 and self.is_rational()

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError('{} is not rational'.format(self))
        return self.coeffs[0]

    def __bool__(self):
        return not self.is_zero()

    # field operations

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return Cyc._make(tuple(a + b for a, b in zip(x.coeffs, y.coeffs)), x.order)

    __radd__ = __add__

    def __neg__(self):
        return Cyc._make(tuple(-a for a in self.coeffs), self.order)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return Cyc._make(tuple(a - b for a, b in zip(x.coeffs, y.coeffs)), x.order)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, r):
        r = Fraction(r)
        return Cyc._make(tuple(a * r for a in self.coeffs), self.order)

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        if y.is_rational():
            return x.scale(y.coeffs[0])
        if x.is_rational():
            return y.scale(x.coeffs[0])
        order = x.order
        basis = power_basis(order)
        acc = [Fraction(0)] * len(x.coeffs)
        for i, a in enumerate(x.coeffs):
            if not a:
                continue
            for j, b in enumerate(y.coeffs):
                if not b:
                    continue
                c = a * b
                for k, r in enumerate(basis[(i + j) % order]):
                    if r:
                        acc[k] += c * r
        return Cyc._make(tuple(acc), order)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero('division by zero in Q(zeta_{})'.format(self.order))
        if self.is_rational():
            return Cyc.rational(1 / self.coeffs[0], self.order)
        return Cyc._make(_inverse_coeffs(self.order, self.coeffs), self.order)

    def __truediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x * y.inverse()

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return y * x.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = Cyc.rational(1, self.order)
        n = abs(n)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # automorphisms

    def galois(self, k):
        """Apply sigma_k: zeta_N -> zeta_N^k."""
        if gcd(k, self.order) != 1:
            raise NotCoprime('sigma_{} is not an automorphism of Q(zeta_{})'.format(k, self.order))
        k %= self.order
        if k == 1 % self.order or self.is_rational():
            return self
        raw = [Fraction(0)] * self.order
        for i, c in enumerate(self.coeffs):
            raw[(i * k) % self.order] += c
        return Cyc._make(_reduce(raw, self.order), self.order)

    def conjugate(self):
        return self.galois(-1)

    def embed(self, order):
        """Image of this element in Q(zeta_M) for a multiple M of N."""
        if order % self.order:
            raise OrderMismatch('Q(zeta_{}) does not embed in Q(zeta_{})'.format(self.order, order))
        step = order // self.order
        raw = [Fraction(0)] * order
        for i, c in enumerate(self.coeffs):
            raw[i * step] += c
        return Cyc._make(_reduce(raw, order), order)

    # comparison and display

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyc):
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        if self.is_rational() or other.is_rational():
            return self.is_rational() and other.is_rational() and self.coeffs[0] == other.coeffs[0]
        common = self.order * other.order // gcd(self.order, other.order)
        return self.embed(common).coeffs == other.embed(common).coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        # traces of x and x^2 over Q, divided by the degree, do not depend on N
        units = [k for k in range(1, self.order) if gcd(k, self.order) == 1]
        zero = Cyc.rational(0, self.order)
        return hash(tuple(sum((y.galois(k) for k in units), zero).coeffs[0] / len(units)
                          for y in (self, self * self)))

    def term_count(self):
        return sum(1 for c in self.coeffs if c)

    def __str__(self):
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                text = str(c)
            else:
                power = 'zeta' if i == 1 else 'zeta^{}'.format(i)
                if c == 1:
                    text = power
                elif c == -1:
                    text = '-' + power
                else:
                    text = '{}*{}'.format(c, power)
            parts.append(text)
        if not parts:
            return '0'
        out = parts[0]
        for text in parts[1:]:
            out += ' - ' + text[1:] if text.startswith('-') else ' + ' + text
        return out

    def __repr__(self):
        return 'Cyc({!r}, order={})'.format(str(self), self.order)


_ARITH = {
    'add': operator.add,
    'sub': operator.sub,
    'mul': operator.mul,
    'div': operator.truediv,
}


def cyc_arith(op, x, y):
    """Exact field operation op in {add, sub, mul, div} on elements of Q(zeta_N)."""
    if isinstance(x, Cyc) and isinstance(y, Cyc) and x.order != y.order:
        raise OrderMismatch('operands live in Q(zeta_{}) and Q(zeta_{})'.format(x.order, y.order))
    return _ARITH[op](x, y)


def cyc_galois(x, k):
    return x.galois(k)


def as_cyc(value, order=DEFAULT_ORDER):
    if isinstance(value, Cyc):
        return value
    return Cyc.rational(value, order)
