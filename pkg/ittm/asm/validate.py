from itertools import product
from typing import *

from ..errors import ValidationError
from ..machine import Program, Action, MOVES, all_reads
from ..machine.program import MOVE_NAMES
from .parser import parse
from .source import AsmSource, Line


def _matches(line: Line) -> Iterator[Tuple[int, ...]]:
    yield from product(*((0, 1) if b is None else (b,) for b in line.read))


def _arity(source: AsmSource, violations: List[str]) -> int:
    arity = source.tapes
    for line in source.lines:
        if arity is None:
            arity = len(line.read)
        if len(line.read) != arity:
            violations.append(f'line {line.lineno}: {len(line.read)} tapes, expected {arity}')
    return arity or 3


def validate(source: AsmSource, name: str = None) -> Program:
    """
    Checks an assembly source and builds its transition table.

    Wildcards are expanded, ``@default`` fills the missing reads, and every
    problem found is reported at once in a ``ValidationError``.
    """
    violations = []
    start, limit, halt = source.start, source.limit, source.halt
    for key, value in (('start', start), ('limit', limit), ('halt', halt)):
        if value is None:
            violations.append(f'@{key} is missing')
    if None not in (start, limit, halt) and len({start, limit, halt}) < 3:
        violations.append('start, limit and halt states must be distinct')

    arity = _arity(source, violations)
    transitions: Dict[Tuple[str, tuple], Action] = {}
    for line in source.lines:
        if line.state == halt:
            violations.append(f'line {line.lineno}: the halt state {halt} has a transition')
            continue
        if line.query and arity != 4:
            violations.append(f'line {line.lineno}: query needs an oracle tape')
        if len(line.read) != arity:
            continue

        for read in _matches(line):
            if (line.state, read) in transitions:
                violations.append(f'line {line.lineno}: {line.state} already has a transition on {read}')
                continue
            write = tuple(r if w is None else w for r, w in zip(read, line.write))
            transitions[line.state, read] = Action(write, MOVES[line.move], line.target, line.query)

    states = [s for s in source.states if s is not None]
    if source.default is not None and source.default not in states:
        violations.append(f'@default {source.default} is not a state')
    for state in states:
        if state == halt:
            continue
        for read in all_reads(arity):
            if (state, read) in transitions:
                continue
            if source.default is not None:
                transitions[state, read] = Action(read, MOVES['S'], source.default)
            else:
                violations.append(f'{state} has no transition on {read}')

    if violations:
        raise ValidationError(violations)
    return Program(states, start, limit, halt, transitions, arity, name or source.name)


def assemble(text: str, name: str = None) -> Program:
    return validate(parse(text), name)



def disassemble(program: Program) -> AsmSource:
    """One concrete line per transition; ``validate`` of the result gives back the same table."""
    lines = tuple(
        Line(state, read, action.write, MOVE_NAMES[action.move], action.target, action.query)
        for state in program.states if state != program.halt
        for read in all_reads(program.arity)
        for action in (program.action(state, read),)
    )
    return AsmSource(lines, program.start, program.limit, program.halt, None, program.arity, program.name)
