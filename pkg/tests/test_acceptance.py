"""End-to-end checks on the worked equations and group determinants."""
from fractions import Fraction

from algebra.exactnum import Cyc
from algebra.polyfunc import MPoly, RatFunc
from symmetry.actions import DomainMap, MoebiusMap, VariableModel
from symmetry.groups import make_group
from equations.forms import Factorization, char_factors, group_determinant, verify_factorization
from equations.parser import format_equation, infer_spec, parse_equation
from equations.solver import build_system, evaluate_solution, solve, spec_from_terms, system_determinant, verify_solution

OMEGA = Cyc.root_of_unity(3)


def solved(text):
    spec = infer_spec(parse_equation(text))
    sol = solve(spec)
    assert verify_solution(spec, sol)
    return spec, sol


def test_question_one_pipeline():
    t = RatFunc.variable('t')
    _, sol = solved('f(t)+2*f(1/t)=(1-t^2)/(1+t^2)')
    assert sol.f == (t ** 2 - 1) / (t ** 2 + 1)
    assert evaluate_solution(sol, {'t': 2024}) == Fraction(4096575, 4096577)


def test_rotation_pipeline():
    z = RatFunc.variable('z')
    spec, sol = solved('f(z) - f(w*z) + f(w^2*z) = z^2')
    assert spec.domain.group.order == 3
    assert sol.f == z ** 2 * OMEGA * Fraction(-1, 2)
    assert evaluate_solution(sol, {'z': 10}) == OMEGA * -50


def test_final_puzzle():
    _, sol = solved('f(x)+2*f(-x)+4*f(1/x)+8*f(-1/x)=2025*x^2')
    assert evaluate_solution(sol, {'x': 3}) == -385


def test_semilinear_example():
    z, zbar = RatFunc.variable('z'), RatFunc.variable('zbar')
    spec = infer_spec(parse_equation('f(z) + z*conj(f(z)) = z'))
    system = build_system(spec)
    assert system.matrix.tolist() == [['1', 'z'], ['zbar', '1']]
    assert system_determinant(spec) == 1 - z * zbar
    assert verify_solution(spec, solve(spec))


def test_s3_determinants():
    six = infer_spec(parse_equation('f(t)+2*f(1-t)+3*f(1/t)+4*f(1/(1-t))+5*f(t/(t-1))+6*f((t-1)/t) = t'))
    assert build_system(six).matrix.rows == 6
    assert system_determinant(six) == 3024
    s3_3 = infer_spec(parse_equation('(1+t)*h(t)+(1-t)*h(1-t)+(1/t)*h(1/t) = t'))
    assert system_determinant(s3_3) == -4


def test_circulant_identity():
    a, b, c = (MPoly.variable(n) for n in 'abc')
    c3 = make_group('c3')
    assert group_determinant(c3).poly == a ** 3 + b ** 3 + c ** 3 - a * b * c * 3
    assert char_factors(c3).expand() == group_determinant(c3, order=3).poly


def test_klein_four_and_quaternion_forms():
    a, b, c, d = (MPoly.variable(n) for n in 'abcd')
    assert group_determinant(make_group('klein4')).poly == ((a + b) ** 2 - (c + d) ** 2) * ((a - b) ** 2 - (c - d) ** 2)
    x = [MPoly.variable('b{}'.format(i)) for i in range(1, 9)]
    norm = sum(((x[k] - x[k + 1]) ** 2 for k in (2, 4, 6)), (x[0] - x[1]) ** 2)
    linear = [sum(x[1:], x[0]),
              x[0] + x[1] + x[2] + x[3] - x[4] - x[5] - x[6] - x[7],
              x[0] + x[1] - x[2] - x[3] + x[4] + x[5] - x[6] - x[7],
              x[0] + x[1] - x[2] - x[3] - x[4] - x[5] + x[6] + x[7]]
    names = ['b{}'.format(i) for i in range(1, 9)]
    assert verify_factorization(make_group('q8'), Factorization([(norm, 2)] + linear), names)


def test_s3_factorization():
    a, b, c, d, e, f = (MPoly.variable(n) for n in 'abcdef')
    quadratic = (a ** 2 - b ** 2 + b * c - c ** 2 + b * d + c * d - d ** 2
                 - a * e + e ** 2 - a * f - e * f + f ** 2)
    claimed = Factorization([(quadratic, 2), a + b + c + d + e + f, a - b - c - d + e + f])
    assert verify_factorization(make_group('s3'), claimed, ['a', 'e', 'f', 'b', 'c', 'd'])


def test_both_sided_klein_four_system():
    a, b, c, d = (RatFunc.variable(n) for n in 'abcd')
    identity = DomainMap(MoebiusMap.identity())
    reflect = DomainMap(MoebiusMap.identity(), reflect=True)
    spec = spec_from_terms([(a, identity, 0), (b, reflect, 0), (c, identity, 1), (d, reflect, 1)],
                           RatFunc.variable('z'), VariableModel('z', True), parameters=('a', 'b', 'c', 'd'))
    assert build_system(spec).matrix.rows == 4

    def norm(x):
        return x * x.galois(-1).rename({'a': 'abar', 'b': 'bbar', 'c': 'cbar', 'd': 'dbar'})
    expected = (norm(a + b) - norm(c + d)) * (norm(a - b) - norm(c - d))
    assert system_determinant(spec) == expected


def test_printed_equations_round_trip():
    for text in ('f(t) + 2*f(1/t) = (1-t^2)/(1+t^2)',
                 'f(z) + z*conj(f(z)) = z',
                 'f(z) - f(w*z) + f(w^2*z) = z^2',
                 '(1+t)*h(t)+(1-t)*h(1-t)+(1/t)*h(1/t) = t',
                 'f(x) + 2*f(-x) + 4*f(1/x) + 8*f(-1/x) = 2025*x^2'):
        ast = parse_equation(text)
        assert parse_equation(format_equation(ast)) == ast
