import random
from fractions import Fraction

import pytest

from algebra.exactnum import Cyc
from algebra.polyfunc import MPoly, RatFunc
from errors import ExcludedPoint, InputError, PoleAtPoint, SingularSystem
from symmetry.actions import DomainMap, MoebiusMap, VariableModel
from equations.solver import (build_system, evaluate_solution, solve, solve_system, spec_from_terms,
                              substitute, system_determinant, verify_solution)

SEED = 632

t = RatFunc.variable('t')
z = RatFunc.variable('z')
zbar = RatFunc.variable('zbar')
PAIR = VariableModel('z', True)
IDENTITY = DomainMap(MoebiusMap.identity())
REFLECT = DomainMap(MoebiusMap.identity(), reflect=True)


def moebius(expr, var='t'):
    return MoebiusMap.from_ratfunc(expr, var)


def involution_spec(a, b, rhs, tau=None):
    tau = tau if tau is not None else 1 / t
    return spec_from_terms([(a, moebius(t), 0), (b, moebius(tau), 0)], rhs)


def test_question_one():
    F = (1 - t ** 2) / (1 + t ** 2)
    sol = solve(involution_spec(1, 2, F))
    assert sol.f == (t ** 2 - 1) / (t ** 2 + 1)
    assert sol.determinant == -3
    assert evaluate_solution(sol, {'t': 2024}) == Fraction(4096575, 4096577)


def test_excluded_and_poles():
    sol = solve(involution_spec(1, 2, (1 - t ** 2) / (1 + t ** 2)))
    with pytest.raises(ExcludedPoint) as info:
        evaluate_solution(sol, {'t': 0})
    assert info.value.polynomial == MPoly.variable('t')
    with pytest.raises(PoleAtPoint):
        evaluate_solution(sol, {'t': Cyc.root_of_unity(4)})
    with pytest.raises(InputError):
        evaluate_solution(sol, {'x': 1})


def test_singular_system():
    with pytest.raises(SingularSystem) as info:
        solve(involution_spec(1, 1, t))
    assert info.value.determinant.is_zero()
    with pytest.raises(SingularSystem):
        solve(involution_spec(2, -2, t))


def test_verify_rejects_wrong_function():
    spec = involution_spec(1, 2, (1 - t ** 2) / (1 + t ** 2))
    assert not verify_solution(spec, t)
    assert verify_solution(spec, (t ** 2 - 1) / (t ** 2 + 1))


def test_variable_coefficients():
    # excluded where a(t) a(1/t) = b(t) b(1/t), here t^2 + t + 1 = 0
    spec = involution_spec(t + 1, 1, t ** 2)
    sol = solve(spec)
    assert verify_solution(spec, sol)
    assert sol.determinant == (t ** 2 + t + 1) / t
    assert evaluate_solution(sol, {'t': 2}) == sol.f.evaluate({'t': 2})
    with pytest.raises(ExcludedPoint):
        evaluate_solution(sol, {'t': Cyc.root_of_unity(3)})


def test_puzzle():
    x = RatFunc.variable('x')
    model = VariableModel('x')
    terms = [(1, moebius(x, 'x'), 0), (2, moebius(-x, 'x'), 0),
             (4, moebius(1 / x, 'x'), 0), (8, moebius(-1 / x, 'x'), 0)]
    spec = spec_from_terms(terms, 2025 * x ** 2, model)
    sol = solve(spec)
    assert sol.f == -45 * (x ** 4 - 4) / x ** 2
    assert evaluate_solution(sol, {'x': 3}) == -385


def test_semilinear_system():
    spec = spec_from_terms([(1, IDENTITY, 0), (z, IDENTITY, 1)], z, PAIR)
    system = build_system(spec)
    assert [[system.matrix[i, j] for j in range(2)] for i in range(2)] == [[1, z], [zbar, 1]]
    assert system_determinant(spec) == 1 - z * zbar
    sol = solve_system(system)
    assert verify_solution(spec, sol)
    assert sol.f == z * (1 - zbar) / (1 - z * zbar)
    assert sol.excluded.contains({'z': 1, 'zbar': 1})


def test_parameters_must_be_declared():
    a = RatFunc.variable('a')
    with pytest.raises(InputError):
        spec_from_terms([(a, IDENTITY, 0), (1, REFLECT, 0)], z, PAIR)
    spec = spec_from_terms([(a, IDENTITY, 0), (1, REFLECT, 0)], z, PAIR, parameters=('a',))
    assert spec.parameters == ('a',)


def test_all_zero_coefficients():
    with pytest.raises(InputError):
        involution_spec(0, 0, t)


def test_repeated_maps_add_up():
    spec = spec_from_terms([(1, moebius(t), 0), (2, moebius(1 / t), 0), (3, moebius(t), 0)], t)
    assert spec.coefficient(0, 0) == 4
    assert spec.domain.group.order == 2


def random_rhs(rng):
    tp = MPoly.variable('t')
    num = sum((MPoly.constant(rng.randint(-3, 3)) * tp ** k for k in range(rng.randint(0, 4) + 1)), MPoly.zero())
    den = tp ** rng.randint(0, 2) + MPoly.constant(rng.randint(1, 3))
    return RatFunc(num, den)


def c3_determinant(a, b, c):
    return a ** 3 + b ** 3 + c ** 3 - 3 * a * b * c


def test_back_substitution_c2_random():
    rng = random.Random(SEED)
    checked = 0
    while checked < 200:
        a, b = rng.randint(-4, 4), rng.randint(-4, 4)
        if a * a == b * b:
            continue
        tau = rng.choice([1 / t, 1 - t, -t, 2 - t, -t / (t + 1)])
        spec = involution_spec(a, b, random_rhs(rng), tau)
        assert verify_solution(spec, solve(spec))
        checked += 1


def test_back_substitution_c3_random():
    rng = random.Random(SEED)
    rho = moebius(-1 / (t + 1))
    rho2 = rho.compose(rho)
    checked = 0
    while checked < 200:
        a, b, c = (rng.randint(-3, 3) for _ in range(3))
        if c3_determinant(a, b, c) == 0:
            continue
        spec = spec_from_terms([(a, moebius(t), 0), (b, rho, 0), (c, rho2, 0)], random_rhs(rng))
        assert verify_solution(spec, solve(spec))
        checked += 1


def test_singular_exactly_when_form_vanishes():
    rng = random.Random(SEED)
    rho = moebius(-1 / (t + 1))
    rho2 = rho.compose(rho)
    for _ in range(200):
        if rng.random() < 0.5:
            a, b = rng.choice([(k, k) for k in range(1, 4)] + [(k, -k) for k in range(1, 4)]
                              + [(rng.randint(-4, 4), rng.randint(1, 4))])
            spec = involution_spec(a, b, t)
            singular = a * a == b * b
        else:
            a, b, c = rng.choice([(1, 1, 1), (2, -1, -1), (1, -3, 2), (rng.randint(-3, 3), rng.randint(-3, 3), 1)])
            spec = spec_from_terms([(a, moebius(t), 0), (b, rho, 0), (c, rho2, 0)], t)
            singular = c3_determinant(a, b, c) == 0
        if singular:
            with pytest.raises(SingularSystem):
                solve(spec)
        else:
            assert verify_solution(spec, solve(spec))


def test_substitute_left_hand_side():
    spec = involution_spec(1, 2, t)
    assert substitute(spec, t) == t + 2 / t


def test_linearity_random():
    rng = random.Random(SEED)
    rho = moebius(-1 / (t + 1))
    for _ in range(50):
        a, b = rng.randint(1, 4), rng.randint(-4, 4)
        if a * a == b * b:
            b = 0
        F1, F2 = random_rhs(rng), random_rhs(rng)
        f1 = solve(involution_spec(a, b, F1)).f
        f2 = solve(involution_spec(a, b, F2)).f
        assert solve(involution_spec(a, b, F1 + F2)).f == f1 + f2
        terms = [(1, moebius(t), 0), (2, rho, 0), (0, rho.compose(rho), 0)]
        g1 = solve(spec_from_terms(terms, F1)).f
        g2 = solve(spec_from_terms(terms, F2)).f
        assert solve(spec_from_terms(terms, F1 + F2)).f == g1 + g2


def test_translated_rhs_gives_translated_solution():
    rng = random.Random(SEED)
    rho = -1 / (t + 1)
    for _ in range(30):
        F = random_rhs(rng)
        for tau in (1 / t, 1 - t, -t):
            spec = involution_spec(3, 1, F, tau)
            moved = involution_spec(3, 1, F.compose({'t': tau}), tau)
            sol = solve(moved)
            assert verify_solution(moved, sol)
            assert sol.f == solve(spec).f.compose({'t': tau})
        terms = [(2, moebius(t), 0), (1, moebius(rho), 0)]
        sol = solve(spec_from_terms(terms, F.compose({'t': rho})))
        assert sol.f == solve(spec_from_terms(terms, F)).f.compose({'t': rho})


def test_unknown_point_variable():
    sol = solve(involution_spec(1, 2, RatFunc.constant(3)))
    assert sol.f == 1
    with pytest.raises(InputError):
        evaluate_solution(sol, {'q': 0})
    with pytest.raises(ExcludedPoint):
        evaluate_solution(sol, {'t': 0})
