"""
From the ordinals a universe of classical programs computes to a code of their supremum.

Every program of the universe runs for at most ``time`` steps on the input, one
after the other on a single-lane band that is wiped between runs. Its output
counts when it codes a linear order on a field inside ``{0, .., bound - 1}``;
the machine then halts with the chain ``0 < 1 < .. < n - 1`` on the output,
where ``n`` is the largest field that counted (the empty relation if none did).

A run of ``time`` steps reads only the first ``time`` input cells, so every
input is admissible.

Scratch layout below the band:

* ``i``: program ``i`` is running;
* ``N + a``: ``a`` is in the field of the current output;
* ``N + bound + k - 1``: some output counted with at least ``k`` elements.
"""
from typing import *
from itertools import permutations

from ..asm import Root, Macro, Seq, Branch, Move, Write, Halt, Label, Goto, INPUT, SCRATCH, OUTPUT
from ..default_params import ECK_TIME, ECK_FIELD_BOUND
from ..machine import Program
from ..real import pair_index, unpair
from ..utils import collect
from .band import Band
from .dovetail import Universe, universe_programs

REJECT = Goto('cleanup')


class _Eck:
    def __init__(self, programs: Sequence[Program], time: int, bound: int):
        self.programs = list(programs)
        self.n = len(programs)
        self.time = time
        self.bound = bound
        self.band = Band(1, max(self.n + 2 * bound + 1, time))

    def field_cell(self, a: int) -> int:
        return self.n + a

    def size_cell(self, k: int) -> int:
        return self.n + self.bound + k - 1

    def _read(self, a: int, b: int, zero: Macro, one: Macro) -> Macro:
        """From column 0: branches on whether the current output relates ``a`` to ``b``."""
        k = pair_index(a, b)
        if k >= self.time:
            # never written
            return zero
        return self._read_cell(k, zero, one)

    def _read_cell(self, k: int, zero: Macro, one: Macro) -> Macro:
        column = self.band.column(0, k) + 1
        return Seq(Move(column), Branch(INPUT, Seq(Move(-column), zero), Seq(Move(-column), one)))

    def _read_field(self, a: int, zero: Macro, one: Macro) -> Macro:
        cell = self.field_cell(a)
        return Seq(Move(cell), Branch(SCRATCH, Seq(Move(-cell), zero), Seq(Move(-cell), one)))

    def _mark_field(self, a: int, b: int) -> Macro:
        low, high = self.field_cell(min(a, b)), self.field_cell(max(a, b))
        return Seq(Move(low), Write(SCRATCH, 1), Move(high - low), Write(SCRATCH, 1), Move(-high))

    def _stray_bits(self) -> Macro:
        """One sweep over the output cells: diagonal pairs and pairs leaving the field reject."""
        items, at = [], 0
        for k in range(self.time):
            a, b = unpair(k)
            if a >= self.bound or b >= self.bound or a == b:
                column = self.band.column(0, k) + 1
                items += [Move(column - at), Branch(INPUT, Seq(), Seq(Move(-column), REJECT))]
                at = column
        return Seq(*items, Move(-at))

    def _asymmetry(self) -> Macro:
        items = []
        for a in range(self.bound):
            for b in range(a):
                marked = self._mark_field(a, b)
                items.append(self._read(a, b, self._read(b, a, Seq(), marked), self._read(b, a, marked, REJECT)))
        return Seq(*items)

    def _totality(self) -> Macro:
        items = []
        for a in range(self.bound):
            for b in range(a):
                both = self._read_field(a, Seq(), self._read_field(b, Seq(), REJECT))
                items.append(self._read(a, b, self._read(b, a, both, Seq()), Seq()))
        return Seq(*items)

    def _transitivity(self) -> Macro:
        items = []
        for a, b, c in permutations(range(self.bound), 3):
            items.append(self._read(a, b, Seq(), self._read(b, c, Seq(), self._read(a, c, REJECT, Seq()))))
        return Seq(*items)

    def _count(self) -> Macro:
        """Counts the field in the finite control and raises the size flags up to the count."""
        items = []
        for a in range(self.bound):
            for c in range(a + 1):
                items += [Label(f'count{a}_{c}'),
                          self._read_field(a, Goto(f'count{a + 1}_{c}'), Goto(f'count{a + 1}_{c + 1}'))]
        for c in range(self.bound + 1):
            sizes = []
            for k in range(1, c + 1):
                cell = self.size_cell(k)
                sizes += [Move(cell), Write(SCRATCH, 1), Move(-cell)]
            items += [Label(f'count{self.bound}_{c}'), *sizes, REJECT]
        return Seq(Goto('count0_0'), *items)

    def evaluate(self) -> Macro:
        return Seq(
            Label('evaluate'),
            self.band.go_home('evaluate:home'),
            self._stray_bits(),
            self._asymmetry(),
            self._totality(),
            self._transitivity(),
            self._count(),
        )

    def cleanup(self) -> Macro:
        items = [Label('cleanup')]
        for a in range(self.bound):
            cell = self.field_cell(a)
            items += [Move(cell), Write(SCRATCH, 0), Move(-cell)]
        items.append(self.band.erase(self.time))
        for i in range(self.n):
            following = Goto(f'run{i + 1}') if i + 1 < self.n else Goto('finish')
            items += [Move(i), Branch(SCRATCH, Move(-i), Seq(Write(SCRATCH, 0), Move(-i), following))]
        items.append(Goto('finish'))
        return Seq(*items)

    def launch(self, i: int) -> Macro:
        return Seq(Label(f'run{i}'), Move(i), Write(SCRATCH, 1), Move(-i), Goto('copy'))

    def start(self) -> Macro:
        """Copies the input and enters the program whose running flag is set."""
        items = [Label('copy'), self.band.copy_input(self.time)]
        home = self.band.column(0)
        for i, program in enumerate(self.programs):
            enter = Seq(Move(home - i), Goto(f'c{i}@0:{program.start}'))
            items += [Move(i), Branch(SCRATCH, Move(-i), enter)]
        return Seq(*items)

    def finish(self) -> Macro:
        """Writes the chain as long as the size flags allow, then halts."""
        items = [Label('finish')]
        for k in range(1, self.bound + 1):
            cell = self.size_cell(k)
            chain = []
            for a in range(k - 1):
                position = pair_index(a, k - 1)
                chain += [Move(position), Write(OUTPUT, 1), Move(-position)]
            items += [Move(cell), Branch(SCRATCH, Seq(Move(-cell), Halt()), Seq(Move(-cell), *chain))]
        return Seq(*items, Halt())

    def root(self, name: str) -> Root:
        body = [self.band.boundary(), Goto('run0')]
        for i, program in enumerate(self.programs):
            body += [self.launch(i), self.band.simulate_steps(program, 0, f'c{i}', self.time, 'evaluate')]
        body += [self.start(), self.evaluate(), self.cleanup(), self.finish()]
        return Root(Seq(*body), None, self.flags(), name)

    def flags(self) -> Dict[str, Tuple[int, int]]:
        cells = {'boundary': (SCRATCH, self.band.origin - 1)}
        for i in range(self.n):
            cells[f'running{i}'] = SCRATCH, i
        for a in range(self.bound):
            cells[f'field{a}'] = SCRATCH, self.field_cell(a)
            cells[f'size{a + 1}'] = SCRATCH, self.size_cell(a + 1)
        return cells


def eck_to_wo(universe: Universe, time: int = ECK_TIME, bound: int = ECK_FIELD_BOUND) -> Program:
    """Halts before w with a code of the largest order a program of ``universe`` writes in ``time`` steps."""
    if time < 1 or bound < 1:
        raise ValueError(f'Time and field bound must be positive, got {time} and {bound}.')
    programs = universe_programs(universe)
    return _Eck(programs, time, bound).root(f'eck_to_wo_{len(programs)}_{time}').program()


def relation_writer(pairs: Iterable[Tuple[int, int]], gate: bool = False, name: str = '') -> Program:
    """
    Writes the code of ``pairs`` left to right and halts, one step per output cell.

    With ``gate`` it writes only when input cell 0 holds 1, and halts at once otherwise.
    """
    positions = sorted({pair_index(a, b) for a, b in pairs})
    items, at = [], 0
    for position in positions:
        items += [Move(position - at), Write(OUTPUT, 1)]
        at = position
    body = Seq(*items, Halt())
    main = Branch(INPUT, Halt(), body) if gate else body
    return Root(main, None, name=name or 'relation_writer').program()


@collect
def chain_pairs(n: int) -> List[Tuple[int, int]]:
    """The pairs of ``0 < 1 < .. < n - 1``."""
    for b in range(n):
        for a in range(b):
            yield a, b
