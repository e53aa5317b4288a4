"""Solve symmetric functional equations and work with group determinants."""
import argparse
import json
import sys

import pandas as pd

from algebra.exactnum import DEFAULT_ORDER
from algebra.polyfunc import RatFunc, mat_det
from equations.forms import (SEMIRINGS, SYMBOLIC_ORDER_LIMIT, Factorization, closure_check,
                             default_variables, verify_factorization)
from equations.parser import (EQUATION_VARIABLES, argument_map, format_equation, infer_spec,
                              parse_equation, parse_expression, parse_generators)
from equations.solver import build_system, evaluate_solution, solve_system, spec_from_terms, verify_solution
from errors import InputError, MathError, OrderTooLarge, SingularSystem
from symmetry.actions import DEFAULT_BOUND, VariableModel, build_domain_action
from symmetry.groups import CoeffVector, make_group, regular_matrix
from utils import dump_json, log, parse_assignment, parse_list

# S3 acting on t through 1 - t and 1/t, listed as in the six-term equation
S3_MOEBIUS_ARGUMENTS = ('t', '1-t', '1/t', '1/(1-t)', 't/(t-1)', '(t-1)/t')

# options whose values may start with "-", e.g. --gens -t,1/t
EXPRESSION_OPTIONS = ('--eq', '--at', '--gens', '--coeffs', '--u', '--v')


def attach_values(argv):
    """Rewrite `--opt value` as `--opt=value` for EXPRESSION_OPTIONS so argparse keeps `-1,2` as a value."""
    out = []
    argv = list(argv)
    i = 0
    while i < len(argv):
        if argv[i] in EXPRESSION_OPTIONS and i + 1 < len(argv):
            out.append('{}={}'.format(argv[i], argv[i + 1]))
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description='Functional equations under finite group actions')
    parser.add_argument('--order', type=int, default=DEFAULT_ORDER, help='cyclotomic order N of the constants')
    parser.add_argument('--verbose', action='store_true', help='print stages and progress to stderr')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    solve = subparsers.add_parser('solve', help='solve a functional equation exactly')
    solve.add_argument('--eq', type=str, required=True, help='equation, e.g. "f(t)+2*f(1/t)=t"')
    solve.add_argument('--at', type=str, help='evaluate the solution at var=value')
    solve.add_argument('--json', action='store_true', help='print a JSON object')
    solve.add_argument('--verify', action='store_true', help='substitute the solution back')
    solve.add_argument('--bound', type=int, default=DEFAULT_BOUND, help='closure bound on |G|')

    det = subparsers.add_parser('det', help='group determinant')
    det.add_argument('--group', type=str, required=True, help='c<n>/klein4/s3/s3-moebius/q8 or a product c2xc3')
    values = det.add_mutually_exclusive_group(required=True)
    values.add_argument('--coeffs', type=str, help='comma separated coefficients in element order')
    values.add_argument('--symbolic', action='store_true', help='print the symbolic matrix')
    det.add_argument('--expand', action='store_true', help='with --symbolic, also expand the determinant')
    det.add_argument('--json', action='store_true', help='print a JSON object')

    factor = subparsers.add_parser('factor-check', help='check a claimed factorization')
    factor.add_argument('--group', type=str, required=True, help='group name')
    factor.add_argument('--factors', type=str, required=True, help='JSON file with a list of factors')
    factor.add_argument('--variables', type=str, help='comma separated variable names in element order')

    closure = subparsers.add_parser('closure', help='compare d(u)d(v) with d(u*v)')
    closure.add_argument('--group', type=str, required=True, help='group name')
    closure.add_argument('--u', type=str, required=True, help='comma separated coefficients')
    closure.add_argument('--v', type=str, required=True, help='comma separated coefficients')
    closure.add_argument('--semiring', type=str, choices=sorted(SEMIRINGS), help='report membership of u*v')
    closure.add_argument('--json', action='store_true', help='print a JSON object')

    group = subparsers.add_parser('group', help='close linear fractional generators into a group')
    group.add_argument('--gens', type=str, required=True, help='comma separated maps, e.g. "1-t,1/t"')
    group.add_argument('--bound', type=int, default=DEFAULT_BOUND, help='closure bound on |G|')
    group.add_argument('--pretty', action='store_true', help='print the Cayley table as a labelled grid')

    args = parser.parse_args(attach_values(sys.argv[1:] if argv is None else argv))
    return args


def cmd_solve(args):
    ast = parse_equation(args.eq, args.order)
    log(args, 'PARSE', format_equation(ast))
    spec = infer_spec(ast, args.bound)
    log(args, 'GROUP', 'G = {{{}}}, |H| = {}'.format(', '.join(spec.domain.group.names), spec.image.group.order))
    system = build_system(spec)
    log(args, 'SYSTEM', '{0}x{0} system'.format(system.matrix.rows))
    sol = solve_system(system, progress=args.verbose)
    log(args, 'SOLVE', 'determinant {}'.format(sol.determinant))

    result = {
        'solution': str(sol.f),
        'determinant': str(sol.determinant),
        'excluded': [str(p) for p in sol.excluded],
    }
    at = None
    if args.at:
        at = parse_assignment(args.at, args.order)
        result['value'] = str(evaluate_solution(sol, dict([at])))
    if args.verify:
        result['verified'] = verify_solution(spec, sol)

    if args.json:
        dump_json(result)
    else:
        print('{}({}) = {}'.format(ast.function, ast.variable, result['solution']))
        print('determinant = {}'.format(result['determinant']))
        print('excluded: {}'.format(sol.excluded))
        if at is not None:
            print('{}({}) = {}'.format(ast.function, at[1], result['value']))
        if args.verify:
            print('verified = {}'.format(str(result['verified']).lower()))
    return 0 if result.get('verified', True) else 1


def _s3_moebius_matrix(values, order, parameters=()):
    maps = [argument_map(parse_expression(a, order, symbols=EQUATION_VARIABLES)) for a in S3_MOEBIUS_ARGUMENTS]
    terms = [(value, m, 0) for value, m in zip(values, maps)]
    spec = spec_from_terms(terms, RatFunc.variable('t', order), VariableModel('t'), parameters)
    return build_system(spec).matrix


def cmd_det(args):
    moebius = args.group == 's3-moebius'
    group = make_group('s3' if moebius else args.group)
    if args.coeffs:
        values = parse_list(args.coeffs, args.order)
        if len(values) != group.order:
            raise InputError('{} needs {} coefficients, got {}'.format(args.group, group.order, len(values)))
        parameters = ()
    else:
        if args.expand and group.order > SYMBOLIC_ORDER_LIMIT:
            raise OrderTooLarge('symbolic expansion supports groups of order <= {}'.format(SYMBOLIC_ORDER_LIMIT))
        parameters = default_variables(group)
        values = [RatFunc.variable(n, args.order) for n in parameters]
    if moebius:
        matrix = _s3_moebius_matrix(values, args.order, parameters)
    else:
        matrix = regular_matrix(group, CoeffVector(group, values, args.order))
    log(args, 'DET', '{0}x{0} matrix for {1}'.format(matrix.rows, args.group))

    result = {'group': args.group}
    if args.symbolic:
        result['matrix'] = matrix.tolist()
    if args.coeffs or args.expand:
        result['determinant'] = str(mat_det(matrix, progress=args.verbose))

    if args.json:
        dump_json(result)
    else:
        if args.symbolic:
            print(matrix)
        if 'determinant' in result:
            print(result['determinant'])
    return 0


def cmd_factor_check(args):
    group = make_group(args.group)
    try:
        with open(args.factors) as f:
            data = json.load(f)
    except (OSError, ValueError) as exc:
        raise InputError('cannot read factors from {}: {}'.format(args.factors, exc))
    claimed = Factorization.from_json(data, args.order)
    variables = [v.strip() for v in args.variables.split(',')] if args.variables else None
    if variables is not None and len(variables) != group.order:
        raise InputError('{} needs {} variable names, got {}'.format(args.group, group.order, len(variables)))
    log(args, 'DET', '{} claimed factors for {}'.format(len(claimed), args.group))
    ok = verify_factorization(group, claimed, variables)
    print(str(ok).lower())
    return 0 if ok else 1


def cmd_closure(args):
    group = make_group(args.group)
    u, v = parse_list(args.u, args.order), parse_list(args.v, args.order)
    for name, vec in (('u', u), ('v', v)):
        if len(vec) != group.order:
            raise InputError('--{} needs {} entries, got {}'.format(name, group.order, len(vec)))
    report = closure_check(group, u, v, args.semiring, args.order)
    if args.json:
        result = {'du': str(report.du), 'dv': str(report.dv), 'duv': str(report.duv),
                  'equal': report.equal, 'product': [str(x) for x in report.product.values]}
        if report.in_semiring is not None:
            result['in_semiring'] = report.in_semiring
        dump_json(result)
    else:
        print(report)
    return 0


def cmd_group(args):
    maps, model = parse_generators(args.gens.split(','), args.order)
    group, _, punctures = build_domain_action(maps, args.bound, model)
    log(args, 'GROUP', 'order {}'.format(group.order))
    if args.pretty:
        names = list(group.names)
        frame = pd.DataFrame([[names[j] for j in row] for row in group.table], index=names, columns=names)
        print(frame.to_string())
        print('punctures: {}'.format(punctures))
    else:
        result = group.to_json()
        result['punctures'] = [str(p) for p in punctures]
        dump_json(result)
    return 0


COMMANDS = {
    'solve': cmd_solve,
    'det': cmd_det,
    'factor-check': cmd_factor_check,
    'closure': cmd_closure,
    'group': cmd_group,
}


def run(argv=None):
    """Run one subcommand; returns 0 on success, 1 on a mathematical failure, 2 on bad input."""
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    log(args, 'ARGS', vars(args))
    try:
        return COMMANDS[args.command](args)
    except MathError as exc:
        print('error: {}'.format(exc), file=sys.stderr)
        if isinstance(exc, SingularSystem):
            print('determinant: {}'.format(exc.determinant), file=sys.stderr)
        return 1
    except (InputError, ValueError) as exc:
        print('error: {}'.format(exc), file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(run())
