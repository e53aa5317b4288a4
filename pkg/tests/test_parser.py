import random

import pytest

from algebra.exactnum import Cyc
from algebra.polyfunc import RatFunc
from errors import (AmbiguousVariableModel, EquationSyntaxError, FuncEqError, NonMoebiusArgument,
                    UnknownSymbol)
from equations.parser import (format_equation, infer_spec, parse_equation, parse_expression, parse_generators,
                              parse_number, tokenize)

SEED = 632

t = RatFunc.variable('t')
z = RatFunc.variable('z')

EQUATIONS = [
    ('f(t) + 2*f(1/t) = (1-t^2)/(1+t^2)', 2),
    ('3*f(x) + 2*f(-x) = x^2 + 1', 2),
    ('f(x) - 4*f(2-x) = x', 2),
    ('2*f(x) + f(-x/(x+1)) = x', 2),
    ('f(z) + z*conj(f(z)) = z', 2),
    ('f(z) - f(w*z) + f(w^2*z) = z^2', 3),
    ('(1+t)*h(t)+(1-t)*h(1-t)+(1/t)*h(1/t) = t', 3),
    ('f(t)+2*f(1-t)+3*f(1/t)+4*f(1/(1-t))+5*f(t/(t-1))+6*f((t-1)/t) = t', 6),
    ('f(x) + 2*f(-x) + 4*f(1/x) + 8*f(-1/x) = 2025*x^2', 4),
    ('f(t) = 2*f(1/t) + t', 2),
]


@pytest.mark.parametrize('text,count', EQUATIONS)
def test_equations_parse_and_print_back(text, count):
    ast = parse_equation(text)
    assert len(ast.terms) == count
    assert parse_equation(format_equation(ast)) == ast


def test_question_one_ast():
    ast = parse_equation('f(t) + 2*f(1/t) = (1-t^2)/(1+t^2)')
    assert ast.function == 'f'
    assert ast.variable == 't'
    assert not ast.paired
    assert [term.coefficient for term in ast.terms] == [1, 2]
    assert ast.terms[1].argument == 1 / t
    assert ast.rhs == (1 - t ** 2) / (1 + t ** 2)


def test_terms_move_to_the_left():
    ast = parse_equation('f(t) + 1 = 2*f(1/t) + t')
    assert [term.coefficient for term in ast.terms] == [1, -2]
    assert ast.rhs == t - 1


def test_conjugated_terms():
    ast = parse_equation('f(z) + z*conj(f(z)) = z')
    assert ast.paired
    assert [term.conj for term in ast.terms] == [0, 1]
    assert ast.terms[1].coefficient == z
    # conj(z f) = zbar conj(f)
    ast = parse_equation('f(z) + conj(z*f(z)) = 1')
    assert ast.terms[1].coefficient == RatFunc.variable('zbar')


def test_constants():
    assert parse_number('w') == Cyc.root_of_unity(3)
    assert parse_number('I^2') == -1
    assert parse_number('-1/2*w^2') * 2 == -Cyc.root_of_unity(3) ** 2
    assert parse_number('(1 + I)^-2') == Cyc.root_of_unity(4) / -2
    assert parse_expression('a*b - conj(a)') == RatFunc.variable('a') * RatFunc.variable('b') - RatFunc.variable('abar')


def test_generators():
    maps, model = parse_generators(['1-t', '1/t'])
    assert len(maps) == 2
    assert model.var == 't'
    maps, model = parse_generators(['w*zbar'])
    assert maps[0].reflect and model.paired
    with pytest.raises(NonMoebiusArgument):
        parse_generators(['t^2'])
    with pytest.raises(AmbiguousVariableModel):
        parse_generators(['1-t', '1/x'])


def test_tokenize():
    kinds = [tok.kind for tok in tokenize('f(t) = 12')]
    assert kinds == ['name', 'op', 'name', 'op', 'op', 'num']
    with pytest.raises(EquationSyntaxError) as info:
        tokenize('f(t) $ 1')
    assert info.value.offset == 5


ERRORS = [
    ('f(t) + 2*g(t) = t', UnknownSymbol, 9),
    ('f(t) = q', UnknownSymbol, 7),
    ('f(t) + 2*f(t^2) = t', NonMoebiusArgument, 11),
    ('f(t) + f(3) = t', NonMoebiusArgument, 9),
    ('f(t) + 2*f(1/t) =', EquationSyntaxError, 17),
    ('f(t)*f(1/t) = 1', EquationSyntaxError, 4),
    ('f(t) + 1/0 = t', EquationSyntaxError, 9),
    ('f(t) = t)', EquationSyntaxError, 8),
    ('f(t) + (t = 1', EquationSyntaxError, 10),
    ('f(t) = t^t', EquationSyntaxError, 9),
    ('t + 1 = 2', EquationSyntaxError, 6),
]


@pytest.mark.parametrize('text,error,offset', ERRORS)
def test_error_offsets(text, error, offset):
    with pytest.raises(error) as info:
        parse_equation(text)
    assert info.value.offset == offset


def test_mixed_variables():
    with pytest.raises(AmbiguousVariableModel):
        parse_equation('f(t) + f(x) = 1')
    with pytest.raises(AmbiguousVariableModel):
        parse_equation('f(z) = t')


def test_resource_limits():
    with pytest.raises(EquationSyntaxError):
        parse_equation('f(t) = t^65')
    with pytest.raises(EquationSyntaxError):
        parse_equation('f(t) = ' + '(' * 100 + 't' + ')' * 100)
    with pytest.raises(EquationSyntaxError):
        parse_equation('f(t) = ' + '9' * 1001)
    with pytest.raises(EquationSyntaxError):
        parse_equation('f(t) = (t^60+1)^60')


def test_infer_involution():
    spec = infer_spec(parse_equation('f(t) + 2*f(1/t) = (1-t^2)/(1+t^2)'))
    assert spec.domain.group.order == 2
    assert spec.image.group.order == 1
    assert spec.coefficient(0, 0) == 1
    assert spec.coefficient(1, 0) == 2


def test_infer_s3():
    spec = infer_spec(parse_equation('(1+t)*h(t)+(1-t)*h(1-t)+(1/t)*h(1/t) = t'))
    assert spec.domain.group.order == 6
    assert not spec.domain.group.is_abelian()
    assert sum(1 for g in range(6) if not spec.coefficient(g, 0) == 0) == 3


def test_infer_conjugation():
    spec = infer_spec(parse_equation('f(z) + z*conj(f(z)) = z'))
    assert spec.domain.group.order == 1
    assert spec.image.group.order == 2
    assert spec.coefficient(0, 1) == z


FUZZ_PIECES = ['f', '(', ')', 't', 'x', 'z', 'zbar', 'w', 'I', 'zeta', 'conj', 'g', 'q', '+', '-', '*', '/',
               '^', '=', '0', '1', '2', '17', ' ', '$', '1/t', '1-t', 'f(t)', 'f(1/t)', 'f(', '^-1', '^99']


def test_fuzz_only_raises_library_errors():
    rng = random.Random(SEED)
    for _ in range(10000):
        text = ''.join(rng.choice(FUZZ_PIECES) for _ in range(rng.randint(0, 16)))
        try:
            parse_equation(text)
        except FuncEqError:
            pass
