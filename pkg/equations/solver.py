"""Build and solve the |G|.|H| linear system induced by a symmetric functional equation.

The equation is

    sum_{g in G, h in H} a[g,h] * h(f(g(x))) = F(x).

Substituting x -> k(x) and applying r to both sides, for every k in G and
r in H, gives a square system in the unknowns u[g,h] = h(f(g(x))), and
f = u[e,id].
"""
from dataclasses import dataclass, field

from algebra.exactnum import as_cyc
from algebra.polyfunc import PolyMatrix, RatFunc, mat_det, rf_eval
from errors import ExcludedPoint, InputError, SingularSystem
from symmetry.actions import (DEFAULT_BOUND, DomainMap, GaloisTwist, PunctureSet, VariableModel,
                              apply_domain, apply_image, build_domain_action, build_image_action,
                              conjugate_name, trivial_image_action)


class EquationSpec(object):
    """A linear functional equation with its group actions.

    Args:
        domain (DomainAction): G acting on the argument.
        image (ImageAction): H acting on values (trivial action for none).
        coefficients (dict): (g index, h index) -> coefficient; missing pairs are 0.
        rhs: right-hand side F.
        parameters (sequence of str): symbolic coefficient names besides the
            domain variables; their `bar` conjugates are allowed too.
    """
    def __init__(self, domain, image, coefficients, rhs, parameters=()):
        order = rhs.order if isinstance(rhs, RatFunc) else domain.maps[0].moebius.order
        self.domain = domain
        self.image = image
        self.rhs = RatFunc.coerce(rhs, order)
        self.parameters = tuple(parameters)
        self.coefficients = {}
        for (g, h), a in coefficients.items():
            if not (0 <= g < domain.group.order and 0 <= h < image.group.order):
                raise InputError('coefficient index ({}, {}) outside G x H'.format(g, h))
            a = RatFunc.coerce(a, order)
            if not a.is_zero():
                self.coefficients[(g, h)] = a
        if not self.coefficients:
            raise InputError('every coefficient of the equation is zero')
        allowed = set(domain.model.variables()) | set(self.parameters)
        allowed |= {conjugate_name(p) for p in self.parameters}
        for expr in list(self.coefficients.values()) + [self.rhs]:
            stray = expr.variables() - allowed
            if stray:
                raise InputError('unexpected symbols {} in {}'.format(sorted(stray), expr))

    @property
    def order(self):
        return self.rhs.order

    @property
    def model(self):
        return self.domain.model

    def coefficient(self, g, h):
        a = self.coefficients.get((g, h))
        return a if a is not None else RatFunc.constant(0, self.order)


@dataclass
class LinearSystem:
    """Square system; row (k, r) is the equation after x -> k(x) and applying r."""
    matrix: PolyMatrix
    rhs: tuple
    index: tuple
    punctures: PunctureSet = field(default_factory=PunctureSet)
    model: VariableModel = VariableModel()


@dataclass
class Solution:
    f: RatFunc
    determinant: RatFunc
    excluded: PunctureSet
    model: VariableModel = VariableModel()
    unknowns: tuple = ()


def spec_from_terms(terms, rhs, model=VariableModel(), parameters=(), bound=DEFAULT_BOUND):
    """Equation from (coefficient, map, conjugated) triples.

    The maps generate G; H is complex conjugation when any term is
    conjugated, trivial otherwise. Repeated (map, conjugation) pairs add up.
    """
    terms = [(a, m if isinstance(m, DomainMap) else DomainMap(m), bool(c)) for a, m, c in terms]
    order = rhs.order if isinstance(rhs, RatFunc) else terms[0][1].moebius.order
    gens = []
    for _, m, _ in terms:
        if m not in gens:
            gens.append(m)
    _, domain, _ = build_domain_action(gens, bound, model)
    kappa = GaloisTwist(-1, model.paired, order)
    if any(c for _, _, c in terms):
        image = build_image_action([kappa], order, bound)
    else:
        image = trivial_image_action(order)
    coefficients = {}
    for a, m, c in terms:
        key = (domain.index_of(m), image.index_of(kappa) if c else 0)
        coefficients[key] = coefficients.get(key, RatFunc.constant(0, order)) + RatFunc.coerce(a, order)
    return EquationSpec(domain, image, coefficients, rhs, parameters)


def build_system(spec):
    group, hgroup = spec.domain.group, spec.image.group
    index = tuple((k, r) for k in range(group.order) for r in range(hgroup.order))
    rows, rhs = [], []
    for k, r in index:
        k_inv, r_inv = group.inv(k), hgroup.inv(r)
        row = []
        for g2, h2 in index:
            a = spec.coefficient(group.mul(g2, k_inv), hgroup.mul(r_inv, h2))
            if not a.is_zero():
                a = apply_image(spec.image, r, apply_domain(spec.domain, k, a))
            row.append(a)
        rows.append(row)
        rhs.append(apply_image(spec.image, r, apply_domain(spec.domain, k, spec.rhs)))
    return LinearSystem(PolyMatrix(rows, spec.order), tuple(rhs), index,
                        spec.domain.punctures(), spec.model)


def _gauss_solve(entries, rhs):
    """Gaussian elimination over the rational-function field, first nonzero pivot."""
    n = len(entries)
    m = [list(row) + [b] for row, b in zip(entries, rhs)]
    for k in range(n):
        pivot = next((i for i in range(k, n) if not m[i][k].is_zero()), None)
        if pivot is None:
            raise ArithmeticError('no pivot in column {}'.format(k))
        m[k], m[pivot] = m[pivot], m[k]
        inv = m[k][k].inverse()
        for i in range(k + 1, n):
            if m[i][k].is_zero():
                continue
            factor = m[i][k] * inv
            for j in range(k + 1, n + 1):
                if not m[k][j].is_zero():
                    m[i][j] = m[i][j] - factor * m[k][j]
    x = [None] * n
    for k in range(n - 1, -1, -1):
        acc = m[k][n]
        for j in range(k + 1, n):
            if not m[k][j].is_zero():
                acc = acc - m[k][j] * x[j]
        x[k] = acc / m[k][k]
    return x


def solve_system(system, progress=False):
    """Solve exactly; raises SingularSystem when the determinant vanishes identically."""
    det = mat_det(system.matrix, progress)
    if det.is_zero():
        raise SingularSystem(det)
    unknowns = _gauss_solve(system.matrix.entries, system.rhs)
    excluded = system.punctures
    if not det.num.is_constant():
        excluded = excluded.union([det.num])
    return Solution(unknowns[0], det, excluded, system.model, tuple(unknowns))


def solve(spec, progress=False):
    return solve_system(build_system(spec), progress)


def system_determinant(spec):
    return mat_det(build_system(spec).matrix)


def substitute(spec, f):
    """Left-hand side of the equation with f plugged in."""
    f = f.f if isinstance(f, Solution) else RatFunc.coerce(f, spec.order)
    total = RatFunc.constant(0, spec.order)
    for (g, h), a in spec.coefficients.items():
        total = total + a * apply_image(spec.image, h, apply_domain(spec.domain, g, f))
    return total


def verify_solution(spec, sol):
    """True iff sol (a Solution or a RatFunc) satisfies the equation identically."""
    try:
        return substitute(spec, sol) == spec.rhs
    except ZeroDivisionError:
        return False


def evaluate_solution(sol, point):
    """Exact value of the solution at a domain point (variable -> number).

    In the pair model zbar defaults to the conjugate of z.
    """
    unknown = set(point) - set(sol.model.variables()) - sol.f.variables()
    if unknown:
        raise InputError('{} is not a variable of the equation'.format(', '.join(sorted(unknown))))
    point =sol.model.complete_point({v: as_cyc(x, sol.f.order) for v, x in point.items()})
    missing = sol.f.variables() - set(point)
    if missing:
        raise InputError('no value given for {}'.format(', '.join(sorted(missing))))
    bad = sol.excluded.vanishing(point)
    if bad is not None:
        raise ExcludedPoint(_point_str(point), bad)
    return rf_eval(sol.f, point)


def _point_str(point):
    return ', '.join('{}={}'.format(v, x) for v, x in sorted(point.items()))
