"""Group determinants: symbolic expansion, character factors, convolution and closure."""
import json
from dataclasses import dataclass

from algebra.exactnum import DEFAULT_ORDER, Cyc
from algebra.polyfunc import MPoly, RatFunc, mat_det
from errors import NotAbelian, OrderTooLarge
from symmetry.groups import CoeffVector, Group, regular_matrix

SYMBOLIC_ORDER_LIMIT = 8


def _is_integer(x):
    return x.is_constant() and x.constant_value().is_rational() and x.constant_value().to_fraction().denominator == 1


SEMIRINGS = {
    'integers': _is_integer,
    'nonnegative': lambda x: _is_integer(x) and x.constant_value().to_fraction() >= 0,
    'multiples-of-3': lambda x: _is_integer(x) and x.constant_value().to_fraction() % 3 == 0,
}


def default_variables(group):
    """a, b, c, ... in element order (x0, x1, ... past 26 elements)."""
    if group.order <= 26:
        return [chr(ord('a') + i) for i in range(group.order)]
    return ['x{}'.format(i) for i in range(group.order)]


@dataclass
class GroupDetForm:
    """Group determinant as a homogeneous form of degree |G|."""
    group: Group
    poly: MPoly
    variables: tuple

    def evaluate(self, values):
        return self.poly.evaluate(dict(zip(self.variables, values)))

    def __str__(self):
        return str(self.poly)


def group_determinant(group, variables=None, order=DEFAULT_ORDER, progress=False):
    """Symbolic det of the regular matrix (s, t) -> x[s^-1 t].

    Raises:
        OrderTooLarge: above SYMBOLIC_ORDER_LIMIT elements; use determinant_value.
    """
    if group.order > SYMBOLIC_ORDER_LIMIT:
        raise OrderTooLarge('symbolic expansion supports groups of order <= {}, got {}'
                            .format(SYMBOLIC_ORDER_LIMIT, group.order))
    names = tuple(variables or default_variables(group))
    a = CoeffVector.symbolic(group, names, order)
    det = mat_det(regular_matrix(group, a), progress)
    return GroupDetForm(group, det.num, names)


def determinant_value(group, values, order=DEFAULT_ORDER):
    """Group determinant at a coefficient vector (any supported order)."""
    if not isinstance(values, CoeffVector):
        values = CoeffVector(group, values, order)
    return mat_det(regular_matrix(group, values))


class Factorization(object):
    """Product of (factor, multiplicity) pairs.

    Args:
        factors (sequence): MPoly factors or (MPoly, multiplicity) pairs.
    """
    def __init__(self, factors):
        pairs = []
        for item in factors:
            poly, mult = item if isinstance(item, tuple) else (item, 1)
            if mult < 1:
                raise ValueError('multiplicity must be positive, got {}'.format(mult))
            pairs.append((poly, mult))
        self.factors = tuple(pairs)

    @property
    def order(self):
        return self.factors[0][0].order if self.factors else DEFAULT_ORDER

    def expand(self):
        result = MPoly.one(self.order)
        for poly, mult in self.factors:
            result = result * poly ** mult
        return result

    def to_json(self):
        return json.dumps([str(p) if m == 1 else [str(p), m] for p, m in self.factors])

    @classmethod
    def from_json(cls, data, order=DEFAULT_ORDER):
        """Factors from a JSON list of polynomial strings or [string, multiplicity] pairs."""
        from equations.parser import parse_expression
        if isinstance(data, str):
            data = json.loads(data)
        factors = []
        for item in data:
            text, mult = (item, 1) if isinstance(item, str) else (item[0], int(item[1]))
            value = parse_expression(text, order)
            if not value.is_polynomial():
                raise ValueError('factor {!r} is not a polynomial'.format(text))
            factors.append((value.num, mult))
        return cls(factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        parts = []
        for poly, mult in self.factors:
            text = '({})'.format(poly)
            parts.append(text if mult == 1 else '{}^{}'.format(text, mult))
        return '*'.join(parts)


def _characters(group, exponent):
    """Every character g -> zeta_N^e(g), as exponent lists, trivial character first.

    Built by extending characters of a growing subgroup one generator at a
    time: if m is least with g^m in the subgroup, chi extends in m ways.
    """
    members = [0]
    inside = {0}
    chars = [{0: 0}]
    for g in range(group.order):
        if g in inside:
            continue
        m, power = 1, g
        while power not in inside:
            power = group.mul(power, g)
            m += 1
        extended = []
        for chi in chars:
            target = chi[power]
            for j in range(m):
                step = target // m + j * exponent // m
                ext = {}
                gj = 0
                for jj in range(m):
                    for h in members:
                        ext[group.mul(h, gj)] = (chi[h] + jj * step) % exponent
                    gj = group.mul(gj, g)
                extended.append(ext)
        members = sorted(extended[0])
        inside = set(members)
        chars = extended
    return [[chi[g] for g in range(group.order)] for chi in chars]


def char_factors(group, variables=None):
    """Linear factors sum_g chi(g) x_g of an abelian group determinant, one per character.

    Coefficients live in Q(zeta_N), N the exponent of the group.
    """
    if not group.is_abelian():
        raise NotAbelian('character factorization needs an abelian group')
    exponent = group.exponent()
    names = tuple(variables or default_variables(group))
    factors = []
    for chi in _characters(group, exponent):
        terms = {((names[g], 1),): Cyc.zeta(exponent, e) for g, e in enumerate(chi)}
        factors.append(MPoly(terms, exponent))
    return Factorization(factors)


def verify_factorization(group, claimed, variables=None):
    """True iff the claimed factors multiply out to the group determinant exactly."""
    expanded = claimed.expand()
    target = group_determinant(group, variables, order=expanded.order).poly
    return expanded == target


def convolve(group, u, v):
    """Group-ring product: (u*v)[w] = sum over g.h = w of u[g] v[h]."""
    n = group.order
    out = [RatFunc.constant(0, u.order)] * n
    for g in range(n):
        if u[g].is_zero():
            continue
        for h in range(n):
            if not v[h].is_zero():
                w = group.mul(g, h)
                out[w] = out[w] + u[g] * v[h]
    return CoeffVector(group, out, u.order)


@dataclass
class ClosureReport:
    du: RatFunc
    dv: RatFunc
    duv: RatFunc
    equal: bool
    product: CoeffVector
    in_semiring: bool = None

    def __str__(self):
        text = 'd(u)={} d(v)={} d(u*v)={} equal={}'.format(
            self.du, self.dv, self.duv, str(self.equal).lower())
        if self.in_semiring is not None:
            text += ' in_semiring={}'.format(str(self.in_semiring).lower())
        return text


def closure_check(group, u, v, semiring=None, order=DEFAULT_ORDER):
    """Evaluate d at u, v and u*v and compare d(u) d(v) with d(u*v).

    With a semiring name the report also says whether u*v stays inside it.
    """
    if not isinstance(u, CoeffVector):
        u = CoeffVector(group, u, order)
    if not isinstance(v, CoeffVector):
        v = CoeffVector(group, v, order)
    w = convolve(group, u, v)
    du, dv, duv = (determinant_value(group, x) for x in (u, v, w))
    in_semiring = None
    if semiring is not None:
        if semiring not in SEMIRINGS:
            raise ValueError('unknown semiring {!r}; choose from {}'.format(semiring, sorted(SEMIRINGS)))
        in_semiring = all(SEMIRINGS[semiring](x) for x in w.values)
    return ClosureReport(du, dv, duv, du * dv == duv, w, in_semiring)
