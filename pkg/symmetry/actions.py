"""Group actions on the domain (linear fractional maps) and on values (Galois twists)."""
from dataclasses import dataclass
from math import gcd

from algebra.exactnum import DEFAULT_ORDER, Cyc, as_cyc
from algebra.polyfunc import MPoly, RatFunc, rf_compose
from errors import NotCoprime
from symmetry.groups import close_generators

DEFAULT_BOUND = 64


def conjugate_name(name):
    return name[:-3] if name.endswith('bar') else name + 'bar'


@dataclass(frozen=True)
class VariableModel:
    """Which formal variables stand for a domain point.

    A single real or complex variable (`t`, `x`, `z`), or the pair model
    where `z` and `zbar` are independent symbols exchanged by conjugation.
    """
    var: str = 't'
    paired: bool = False

    @property
    def conjugate_var(self):
        return conjugate_name(self.var)

    def variables(self):
        return (self.var, self.conjugate_var) if self.paired else (self.var,)

    def complete_point(self, point):
        """Fill in zbar = conj(z) when only z is given."""
        point = dict(point)
        if self.paired and self.var in point and self.conjugate_var not in point:
            point[self.conjugate_var] = as_cyc(point[self.var]).conjugate()
        return point


@dataclass(frozen=True)
class MoebiusMap:
    """t -> (a*t + b)/(c*t + d), scaled so the first nonzero entry is 1."""
    a: Cyc
    b: Cyc
    c: Cyc
    d: Cyc

    def __post_init__(self):
        entries = [self.a, self.b, self.c, self.d]
        if (entries[0] * entries[3] - entries[1] * entries[2]).is_zero():
            raise ValueError('singular linear fractional map: ad - bc = 0')
        lead = next(e for e in entries if e)
        if not lead.is_one():
            inv = lead.inverse()
            entries = [e * inv for e in entries]
        for field, value in zip('abcd', entries):
            object.__setattr__(self, field, value)

    @classmethod
    def of(cls, a, b, c, d, order=DEFAULT_ORDER):
        return cls(*(as_cyc(x, order) for x in (a, b, c, d)))

    @classmethod
    def identity(cls, order=DEFAULT_ORDER):
        return cls.of(1, 0, 0, 1, order)

    @classmethod
    def from_ratfunc(cls, expr, var):
        """The map t -> expr if expr is (a t + b)/(c t + d) in var, else None."""
        if not expr.variables() <= {var} or expr.is_constant():
            return None
        if expr.num.degree_in(var) > 1 or expr.den.degree_in(var) > 1:
            return None
        zero = Cyc.rational(0, expr.order)
        num = expr.num.to_univariate(var) + [zero, zero]
        den = expr.den.to_univariate(var) + [zero, zero]
        try:
            return cls(num[1], num[0], den[1], den[0])
        except ValueError:
            return None

    @property
    def order(self):
        return self.a.order

    def compose(self, other):
        """self o other, as a matrix product."""
        return MoebiusMap(self.a * other.a + self.b * other.c,
                          self.a * other.b + self.b * other.d,
                          self.c * other.a + self.d * other.c,
                          self.c * other.b + self.d * other.d)

    def inverse(self):
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def galois(self, k):
        return MoebiusMap(self.a.galois(k), self.b.galois(k), self.c.galois(k), self.d.galois(k))

    def is_identity(self):
        return self == MoebiusMap.identity(self.order)

    def as_ratfunc(self, var='t'):
        t = MPoly.variable(var, self.order)
        return RatFunc(t.scale(self.a) + self.b, t.scale(self.c) + self.d)

    def pole_polynomial(self, var='t'):
        """Monic c*t + d, or None when the map has no finite pole."""
        if self.c.is_zero():
            return None
        t = MPoly.variable(var, self.order)
        return (t.scale(self.c) + self.d).monic()

    def __str__(self):
        def lit(x):
            return str(x) if x.term_count() <= 1 and not str(x).startswith('-') else '({})'.format(x)
        return '({}*t+{})/({}*t+{})'.format(lit(self.a), lit(self.b), lit(self.c), lit(self.d))


def moebius_compose(m1, m2):
    return m1.compose(m2)


@dataclass(frozen=True)
class DomainMap:
    """A linear fractional map, optionally preceded by conjugation z -> zbar."""
    moebius: MoebiusMap
    reflect: bool = False

    def compose(self, other):
        inner = other.moebius.galois(-1) if self.reflect else other.moebius
        return DomainMap(self.moebius.compose(inner), self.reflect != other.reflect)

    def inverse(self):
        inv = self.moebius.inverse()
        return DomainMap(inv.galois(-1), True) if self.reflect else DomainMap(inv)

    def substitution(self, model):
        if not model.paired:
            if self.reflect:
                raise ValueError('conjugation z -> zbar needs the pair variable model')
            return {model.var: self.moebius.as_ratfunc(model.var)}
        source = model.conjugate_var if self.reflect else model.var
        return {
            model.var: self.moebius.as_ratfunc(source),
            model.conjugate_var: self.moebius.galois(-1).as_ratfunc(conjugate_name(source)),
        }

    def pole_polynomial(self, model):
        m = self.moebius.galois(-1) if self.reflect else self.moebius
        return m.pole_polynomial(model.var)

    def pretty(self, model=VariableModel()):
        source = model.conjugate_var if self.reflect else model.var
        return str(self.moebius.as_ratfunc(source))


class PunctureSet(object):
    """Excluded domain points, stored as zero sets of nonzero polynomials."""
    def __init__(self, polynomials=()):
        kept = []
        for p in polynomials:
            if p is None or p.is_constant():
                continue
            p = p.monic()
            if all(p != q for q in kept):
                kept.append(p)
        self.polynomials = tuple(kept)

    def union(self, other):
        return PunctureSet(self.polynomials + tuple(other))

    def vanishing(self, point):
        """First polynomial vanishing at point, or None.

        Polynomials in variables the point does not cover are skipped.
        """
        for p in self.polynomials:
            if not p.variables() <= set(point):
                continue
            if p.evaluate(point).is_zero():
                return p
        return None

    def contains(self, point):
        return self.vanishing(point) is not None

    def __iter__(self):
        return iter(self.polynomials)

    def __len__(self):
        return len(self.polynomials)

    def __str__(self):
        return ', '.join(str(p) for p in self.polynomials) or '(none)'


class DomainAction(object):
    """Assignment of a DomainMap to each element of a group.

    Args:
        group (Group): the acting group.
        maps (sequence of DomainMap): indexed like group elements.
        model (VariableModel): variables the maps substitute.
    """
    def __init__(self, group, maps, model=VariableModel()):
        if len(maps) != group.order:
            raise ValueError('{} maps for a group of order {}'.format(len(maps), group.order))
        self.group = group
        self.maps = tuple(maps)
        self.model = model
        self._index = {m: i for i, m in enumerate(self.maps)}
        self._subst = {}

    def index_of(self, domain_map):
        return self._index.get(domain_map)

    def substitution(self, g):
        if g not in self._subst:
            self._subst[g] = self.maps[g].substitution(self.model)
        return self._subst[g]

    def homomorphism_violations(self):
        """Pairs (g1, g2) with map(g1 g2) != map(g1) o map(g2)."""
        bad = []
        n = self.group.order
        for g1 in range(n):
            for g2 in range(n):
                if self.maps[self.group.mul(g1, g2)] != self.maps[g1].compose(self.maps[g2]):
                    bad.append((g1, g2))
        return bad

    def punctures(self):
        return PunctureSet(m.pole_polynomial(self.model) for m in self.maps)


def build_domain_action(gens, bound=DEFAULT_BOUND, model=VariableModel()):
    """Close generator maps under composition.

    Returns:
        (Group, DomainAction, PunctureSet)
    """
    gens = [g if isinstance(g, DomainMap) else DomainMap(g) for g in gens]
    order = gens[0].moebius.order if gens else DEFAULT_ORDER
    identity = DomainMap(MoebiusMap.identity(order))
    group, elements = close_generators(lambda x, y: x.compose(y), gens, bound,
                                       identity=identity, name=lambda m: m.pretty(model))
    action = DomainAction(group, elements, model)
    return group, action, action.punctures()


def apply_domain(act, g, expr):
    """expr with the domain variable(s) replaced through the map of element g."""
    if act.maps[g].moebius.is_identity() and not act.maps[g].reflect:
        return expr
    return rf_compose(expr, act.substitution(g))


@dataclass(frozen=True)
class GaloisTwist:
    """Value action: sigma_k on constants, optionally exchanging v <-> vbar."""
    k: int = 1
    swap: bool = False
    order: int = DEFAULT_ORDER

    def __post_init__(self):
        if gcd(self.k, self.order) != 1:
            raise NotCoprime('sigma_{} is not an automorphism of Q(zeta_{})'.format(self.k, self.order))
        object.__setattr__(self, 'k', self.k % self.order)

    def compose(self, other):
        return GaloisTwist(self.k * other.k, self.swap != other.swap, self.order)

    def apply(self, expr):
        out = expr.galois(self.k) if self.k != 1 % self.order else expr
        if self.swap:
            out = out.rename({v: conjugate_name(v) for v in out.variables()})
        return out

    def __str__(self):
        if self.k == 1 % self.order and not self.swap:
            return 'id'
        if self.k == (-1) % self.order:
            return 'conj' if self.swap else 'sigma_-1'
        return 'sigma_{}{}'.format(self.k, '+swap' if self.swap else '')


class ImageAction(object):
    """Assignment of a GaloisTwist to each element of a group."""
    def __init__(self, group, twists):
        self.group = group
        self.twists = tuple(twists)
        self._index = {t: i for i, t in enumerate(self.twists)}

    def index_of(self, twist):
        return self._index.get(twist)

    def homomorphism_violations(self):
        n = self.group.order
        return [(h1, h2) for h1 in range(n) for h2 in range(n)
                if self.twists[self.group.mul(h1, h2)] != self.twists[h1].compose(self.twists[h2])]


def build_image_action(gens, order=DEFAULT_ORDER, bound=DEFAULT_BOUND):
    group, elements = close_generators(lambda x, y: x.compose(y), gens, bound,
                                       identity=GaloisTwist(1, False, order))
    return ImageAction(group, elements)


def trivial_image_action(order=DEFAULT_ORDER):
    return build_image_action([], order)


def conjugation_action(order=DEFAULT_ORDER, paired=False):
    """H = <kappa>: complex conjugation, exchanging z and zbar in the pair model."""
    return build_image_action([GaloisTwist(-1, paired, order)], order)


def apply_image(act, h, expr):
    return act.twists[h].apply(expr)
