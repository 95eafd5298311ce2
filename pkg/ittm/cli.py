"""
Command line: ``python run_ittm.py <command> ...``.

Programs are given as a path to an ``.ittm`` file, as ``stdlib:<name>`` or as a
hexadecimal index ``0x..``. Results are printed as JSON; the exit code is 0 for a
definite outcome, 2 when budgets ran out and 1 for usage errors.
"""
from typing import *
from argparse import ArgumentParser
import json
import logging
import sys

from .asm import parse, format as format_source, validate, assemble, disassemble, encode_index, decode_index
from .default_params import *
from .eqrel import get_relation, verify_reduction, load_samples
from .errors import IttmError
from .machine import Budgets, Program, Halted, run, run_eventual, run_with_real_oracle, run_with_set_oracle, trace
from .real import parse_real, EMPTY
from .stdlib import build, jump_enumerator, wo_decider, wo_verdict, gap_report
from .stdlib.manifest import UNIVERSES
from .utils import dump_json_line

logger = logging.getLogger(__name__)

DEFINITE, USAGE, EXHAUSTED = 0, 1, 2


class _Parser(ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        _fail(message)


def _fail(message: str):
    print(json.dumps({'error': message}, sort_keys=True), file=sys.stderr)
    sys.exit(USAGE)


def _print(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def load_program(spec: str) -> Program:
    if spec.startswith('stdlib:'):
        return build(spec[len('stdlib:'):])
    if spec.startswith('0x'):
        return decode_index(int(spec, 16))
    with open(spec, 'r') as f:
        return assemble(f.read())


def universe(spec: str):
    return UNIVERSES[spec]() if spec in UNIVERSES else int(spec)


def budgets(args) -> Budgets:
    return Budgets(args.clock, args.block_steps, args.accel, args.level_blocks)


def _exit_code(outcome) -> int:
    return DEFINITE if outcome.definite else EXHAUSTED


def cmd_assemble(args) -> int:
    with open(args.source, 'r') as f:
        source = parse(f.read())
    program = validate(source)
    if args.out:
        with open(args.out, 'w') as f:
            f.write(format_source(disassemble(program)))
    _print({'name': program.name, 'states': len(program.states), 'index': hex(encode_index(program))})
    return DEFINITE


def cmd_run(args) -> int:
    program = load_program(args.program)
    x = parse_real(args.input)
    if args.set_oracle:
        outcome = run_with_set_oracle(program, x, args.set_oracle, budgets(args))
    elif args.oracle:
        outcome = run_with_real_oracle(program, x, parse_real(args.oracle), budgets(args))
    elif args.eventual:
        outcome = run_eventual(program, x, budgets(args))
    else:
        outcome = run(program, x, budgets(args))
    _print(outcome.to_json())
    return _exit_code(outcome)


def cmd_trace(args) -> int:
    program = load_program(args.program)
    events, outcome = trace(program, parse_real(args.input), budgets(args),
                            sink=lambda event: sys.stdout.write(dump_json_line(event) + '\n'))
    print(dump_json_line(outcome.to_json()))
    return _exit_code(outcome)


def cmd_jump(args) -> int:
    members = universe(args.universe)
    size = members if isinstance(members, int) else len(members)
    program = jump_enumerator(members, args.input_bound)
    outcome = run_eventual(program, parse_real(args.input), budgets(args))
    result = outcome.to_json()
    if outcome.definite:
        result['indices'] = [i for i in range(size) if outcome.output.peek(i)]
        result['inadmissible'] = bool(outcome.output.peek(size))
    _print(result)
    return _exit_code(outcome)


def cmd_wo(args) -> int:
    outcome = run(wo_decider(args.bound), parse_real(args.input), budgets(args))
    result = {'outcome': outcome.to_json()['outcome'], 'stage': str(outcome.stage)}
    if isinstance(outcome, Halted):
        # None when the field leaves the bound
        result['accept'] = wo_verdict(outcome)
        result['overflow'] = bool(outcome.output.peek(1))
    _print(result)
    return _exit_code(outcome)


def _relation(name: str, args):
    if name == 'Eck':
        return get_relation(name, universe=universe(args.universe), time=args.time, bound=args.bound)
    return get_relation(name)


def cmd_reduce_verify(args) -> int:
    program = load_program(args.program)
    report = verify_reduction(program, _relation(args.source, args), _relation(args.target, args),
                              load_samples(args.samples), budgets(args), args.mode, args.jobs)
    _print(report.to_json())
    inconclusive = (report.pairs['verdict'] == 'inconclusive').any()
    return EXHAUSTED if inconclusive and report.passed else DEFINITE


def cmd_gaps(args) -> int:
    report = gap_report(universe(args.universe), budgets(args), args.jobs)
    _print({'gap': report.attrs['gap'], 'programs': report.to_dict(orient='records')})
    return DEFINITE if report.attrs['gap'] is not None else EXHAUSTED


def _add_budgets(parser: ArgumentParser):
    parser.add_argument('--clock', default=CLOCK_BOUND)
    parser.add_argument('--block-steps', type=int, default=STEPS_PER_BLOCK)
    parser.add_argument('--accel', type=int, default=MAX_ACCEL_LEVEL)
    parser.add_argument('--level-blocks', type=int, default=BLOCKS_PER_LEVEL)


def parse_args(argv: Sequence[str] = None):
    parser = _Parser(prog='ittm')
    parser.add_argument('--verbose', '-v', action='count', default=0)
    commands = parser.add_subparsers(dest='command', parser_class=_Parser)
    commands.required = True

    assemble_parser = commands.add_parser('assemble')
    assemble_parser.add_argument('source')
    assemble_parser.add_argument('--out')
    assemble_parser.set_defaults(func=cmd_assemble)

    run_parser = commands.add_parser('run')
    run_parser.add_argument('program')
    run_parser.add_argument('--input', default=EMPTY.literal())
    run_parser.add_argument('--oracle')
    run_parser.add_argument('--set-oracle')
    run_parser.add_argument('--eventual', action='store_true')
    run_parser.set_defaults(func=cmd_run)

    trace_parser = commands.add_parser('trace')
    trace_parser.add_argument('program')
    trace_parser.add_argument('--input', default=EMPTY.literal())
    trace_parser.set_defaults(func=cmd_trace)

    jump_parser = commands.add_parser('jump')
    jump_parser.add_argument('universe')
    jump_parser.add_argument('--input', default=EMPTY.literal())
    jump_parser.add_argument('--input-bound', type=int, default=JUMP_INPUT_BOUND)
    jump_parser.set_defaults(func=cmd_jump)

    wo_parser = commands.add_parser('wo')
    wo_parser.add_argument('input')
    wo_parser.add_argument('--bound', type=int, default=WO_FIELD_BOUND)
    wo_parser.set_defaults(func=cmd_wo)

    verify_parser = commands.add_parser('reduce-verify')
    verify_parser.add_argument('program')
    verify_parser.add_argument('source')
    verify_parser.add_argument('target')
    verify_parser.add_argument('samples')
    verify_parser.add_argument('--mode', default='computable', choices=('computable', 'eventual'))
    verify_parser.add_argument('--universe', default='curated_classical')
    verify_parser.add_argument('--time', type=int, default=ECK_TIME)
    verify_parser.add_argument('--bound', type=int, default=ECK_FIELD_BOUND)
    verify_parser.add_argument('--jobs', type=int, default=1)
    verify_parser.set_defaults(func=cmd_reduce_verify)

    gaps_parser = commands.add_parser('gaps')
    gaps_parser.add_argument('universe', nargs='?', default=str(GAP_UNIVERSE))
    gaps_parser.add_argument('--jobs', type=int, default=1)
    gaps_parser.set_defaults(func=cmd_gaps)

    for sub in (run_parser, trace_parser, jump_parser, wo_parser, verify_parser, gaps_parser):
        _add_budgets(sub)

    return parser.parse_args(argv)


def main(args) -> int:
    logging.basicConfig(format='%(levelname)s %(name)s: %(message)s')
    logging.getLogger().setLevel([logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)])
    try:
        return args.func(args)
    except (IttmError, ValueError, KeyError, OSError) as e:
        logger.debug('command failed', exc_info=True)
        _fail(str(e))
