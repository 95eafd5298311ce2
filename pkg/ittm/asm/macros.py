"""
Composable program fragments.

Every fragment compiles in continuation-passing style: given the state to
continue with, it emits its transitions and returns its entry state. ``Label``,
``Goto`` and ``Halt`` cost no step, everything else takes at least one.
"""
from itertools import product
from typing import *

from ..errors import MacroError
from ..machine import INPUT, SCRATCH, OUTPUT
from .source import AsmSource, Line
from .validate import validate

HALT = 'halt'
Bits = Mapping[int, int]


class Rule(NamedTuple):
    read: Tuple[Optional[int], ...]
    write: Tuple[Optional[int], ...]
    move: str
    target: str
    query: bool = False


class Builder:
    """Collects the transitions of a program while fragments compile into it."""

    def __init__(self, tapes: int = 3, flags: Mapping[str, Tuple[int, int]] = None):
        self.tapes = tapes
        self.flags = dict(flags or {})
        self.rules: Dict[str, List[Rule]] = {}
        self.aliases: Dict[str, Optional[str]] = {}
        self.labels: Dict[str, str] = {}
        self.defined: Set[str] = set()

    def fresh(self) -> str:
        name = f'_{len(self.rules) + len(self.aliases)}'
        self.rules[name] = []
        return name

    def pattern(self, bits: Optional[Bits]) -> Tuple[Optional[int], ...]:
        bits = bits or {}
        if any(not 0 <= tape < self.tapes for tape in bits):
            raise MacroError(f'no tape {max(bits)} in a {self.tapes}-tape program')
        return tuple(bits.get(tape) for tape in range(self.tapes))

    def rule(self, state: str, read: Bits = None, write: Bits = None, move: str = 'S', target: str = HALT,
             query: bool = False):
        if query and self.tapes < 4:
            raise MacroError('a query needs an oracle tape')
        self.rules[state].append(Rule(self.pattern(read), self.pattern(write), move, target, query))

    def alias(self) -> str:
        name = f'_{len(self.rules) + len(self.aliases)}'
        self.aliases[name] = None
        return name

    def bind(self, alias: str, target: str):
        self.aliases[alias] = target

    def label(self, name: str) -> str:
        if name not in self.labels:
            self.labels[name] = self.alias()
        return self.labels[name]

    def define(self, name: str, target: str):
        if name in self.defined:
            raise MacroError(f'label {name!r} is defined twice')
        self.defined.add(name)
        self.bind(self.label(name), target)

    def flag(self, name: str) -> Tuple[int, int]:
        try:
            return self.flags[name]
        except KeyError:
            raise MacroError(f'unknown flag {name!r}') from None

    def resolve(self, name: str) -> str:
        seen = []
        while name in self.aliases:
            if name in seen:
                raise MacroError('a loop without steps')
            seen.append(name)
            target = self.aliases[name]
            if target is None:
                undefined = [label for label, alias in self.labels.items() if alias == name]
                raise MacroError(f'label {undefined[0]!r} is never defined' if undefined else 'unbound fragment')
            name = target
        return name


class Macro:
    def compile(self, builder: Builder, next: str) -> str:
        raise NotImplementedError

    def __add__(self, other: 'Macro') -> 'Seq':
        return Seq(self, other)


class Step(Macro):
    def __init__(self, write: Bits = None, move: str = 'S', query: bool = False):
        if move not in ('L', 'R', 'S'):
            raise MacroError(f'bad move {move!r}')
        self.write, self.move, self.query = write, move, query

    def compile(self, builder, next):
        state = builder.fresh()
        builder.rule(state, None, self.write, self.move, next, self.query)
        return state


class Seq(Macro):
    def __init__(self, *items: Macro):
        self.items = items

    def compile(self, builder, next):
        for item in reversed(self.items):
            next = item.compile(builder, next)
        return next


class Loop(Macro):
    """Repeats the body forever; leave it with ``Goto`` or ``Halt``."""

    def __init__(self, body: Macro):
        self.body = body

    def compile(self, builder, next):
        head = builder.alias()
        entry = self.body.compile(builder, head)
        builder.bind(head, entry)
        return entry


class Switch(Macro):
    """Reads some tapes in one step and continues with the matching case."""

    def __init__(self, tapes: Sequence[int], cases: Mapping[tuple, Macro], default: Macro = None):
        self.tapes, self.cases, self.default = tuple(tapes), dict(cases), default

    def compile(self, builder, next):
        state = builder.fresh()
        for bits in product((0, 1), repeat=len(self.tapes)):
            case = self.cases.get(bits, self.default)
            if case is None:
                raise MacroError(f'no case for {bits} on tapes {self.tapes}')
            builder.rule(state, dict(zip(self.tapes, bits)), None, 'S', case.compile(builder, next))
        return state


def Branch(tape: int, zero: Macro, one: Macro) -> Switch:
    return Switch((tape,), {(0,): zero, (1,): one})


class Scan(Macro):
    """Moves in one direction until the head reads ``bit`` on ``tape``."""

    def __init__(self, tape: int, bit: int, move: str):
        self.tape, self.bit, self.move = tape, bit, move

    def compile(self, builder, next):
        state = builder.fresh()
        builder.rule(state, {self.tape: self.bit}, None, 'S', next)
        builder.rule(state, {self.tape: 1 - self.bit}, None, self.move, state)
        return state


def ScanRightUntil(tape: int, bit: int = 1) -> Scan:
    return Scan(tape, bit, 'R')


def ScanLeftUntil(tape: int, bit: int = 1) -> Scan:
    return Scan(tape, bit, 'L')


def Steps(n: int, **kwargs) -> Seq:
    return Seq(*(Step(**kwargs) for _ in range(n)))


def Move(offset: int) -> Seq:
    return Steps(abs(offset), move='R' if offset > 0 else 'L')


def Write(tape: int, bit: int, move: str = 'S') -> Step:
    return Step({tape: bit}, move)


class Halt(Macro):
    def compile(self, builder, next):
        return HALT


class Label(Macro):
    def __init__(self, name: str):
        self.name = name

    def compile(self, builder, next):
        builder.define(self.name, next)
        return next


class Goto(Macro):
    def __init__(self, name: str):
        self.name = name

    def compile(self, builder, next):
        return builder.label(self.name)


class Block(Macro):
    """A fragment written directly against the ``Builder``."""

    def __init__(self, build: Callable[[Builder, str], str]):
        self.build = build

    def compile(self, builder, next):
        return self.build(builder, next)


class FlagWrite(Macro):
    """Writes a named cell; ``at`` is the head column when known, the cell itself otherwise."""

    def __init__(self, name: str, bit: int, at: int = None):
        self.name, self.bit, self.at = name, bit, at

    def compile(self, builder, next):
        tape, cell = builder.flag(self.name)
        at = cell if self.at is None else self.at
        return Seq(Move(cell - at), Write(tape, self.bit), Move(at - cell)).compile(builder, next)


def FlagSet(name: str, at: int = None) -> FlagWrite:
    return FlagWrite(name, 1, at)


def FlagClear(name: str, at: int = None) -> FlagWrite:
    return FlagWrite(name, 0, at)


def Flash(name: str, at: int = None) -> Seq:
    """Sets a cell and clears it again: at the next limit of limits it reads 1."""
    return Seq(FlagSet(name, at), FlagClear(name, at))


class FlagBranch(Macro):
    """Reads a named cell and comes back to ``at`` before continuing with a case."""

    def __init__(self, name: str, zero: Macro, one: Macro, at: int = None):
        self.name, self.zero, self.one, self.at = name, zero, one, at

    def compile(self, builder, next):
        tape, cell = builder.flag(self.name)
        at = cell if self.at is None else self.at
        back = Move(at - cell)
        return Seq(Move(cell - at), Branch(tape, Seq(back, self.zero), Seq(back, self.one))).compile(builder, next)


class Root:
    """
    A whole program: ``main`` runs from stage 0 and ``on_limit`` from every limit stage.

    Both end in the halt state when they run off their end. ``flags`` names
    cells as ``(tape, column)``; two names for one cell are an error.
    """

    def __init__(self, main: Macro, on_limit: Macro = None, flags: Mapping[str, Tuple[int, int]] = None,
                 name: str = '', tapes: int = 3):
        self.main = main
        self.on_limit = Halt() if on_limit is None else on_limit
        self.flags = dict(flags or {})
        self.name = name
        self.tapes = tapes

        cells = {}
        for flag, cell in self.flags.items():
            if cell in cells:
                raise MacroError(f'flags {cells[cell]!r} and {flag!r} share the cell {cell}')
            if cell[0] >= tapes or cell[1] < 0:
                raise MacroError(f'flag {flag!r} points outside the tapes: {cell}')
            cells[cell] = flag

    def expand(self) -> AsmSource:
        builder = Builder(self.tapes, self.flags)
        start = builder.resolve(self.main.compile(builder, HALT))
        limit = builder.resolve(self.on_limit.compile(builder, HALT))
        # start and limit must be distinct working states
        if start == HALT or start == limit:
            start = Step().compile(builder, start)
        if limit == HALT:
            limit = Step().compile(builder, limit)

        order = [start, limit]
        names = {start: 's0', limit: 's1', HALT: HALT}
        for state in order:
            for rule in builder.rules[state]:
                target = builder.resolve(rule.target)
                if target not in names:
                    names[target] = f's{len(order)}'
                    order.append(target)

        lines = tuple(
            Line(names[state], rule.read, rule.write, rule.move, names[builder.resolve(rule.target)], rule.query)
            for state in order for rule in builder.rules[state]
        )
        return AsmSource(lines, 's0', 's1', HALT, None, self.tapes, self.name)

    def program(self):
        return validate(self.expand())


def expand(root: Root) -> AsmSource:
    return root.expand()


__all__ = [
    'HALT', 'Builder', 'Macro', 'Step', 'Seq', 'Loop', 'Switch', 'Branch', 'Scan', 'ScanRightUntil',
    'ScanLeftUntil', 'Steps', 'Move', 'Write', 'Halt', 'Label', 'Goto', 'Block', 'FlagWrite', 'FlagSet',
    'FlagClear', 'Flash', 'FlagBranch', 'Root', 'expand', 'INPUT', 'SCRATCH', 'OUTPUT',
]
