"""
Running a universe of programs side by side inside one machine.

Component ``i`` of ``N`` runs on lane ``i`` of a band (see ``band.py``). The
band never touches the output tape, so the machine's output is exactly its
own flags. Control columns below the band:

* output ``i``: component ``i`` has halted; output ``N``: inadmissible input;
* scratch 0: flashed at every limit, so it reads 1 at limits of limits;
* scratch 2: the input scan is still running;
* scratch 4: some component halted during the current round;
* scratch ``8 + 2i``: component ``i`` had the last turn;
* scratch ``8 + 2N + 2i``: component ``i`` has been started.

Each turn lasts one w-block: at every limit the next component (round robin)
continues from its own limit state, or idles if it has halted.
"""
from typing import *

import pandas as pd

from ..asm import Root, Macro, Seq, Loop, Branch, Step, Move, Write, Halt, Label, Goto, ScanLeftUntil, \
    ScanRightUntil, INPUT, SCRATCH, OUTPUT, decode_index
from ..default_params import JUMP_INPUT_BOUND
from ..machine import Program, Budgets, Halted, run
from ..ordinal import Ordinal
from ..utils import parallel_map
from .band import Band

FLASH, SCAN, HALTED_IN_ROUND, TURNS = 0, 2, 4, 8

Universe = Union[int, Sequence[Union[int, Program]]]


def idle() -> Program:
    return Root(Loop(Step()), Loop(Step()), name='idle').program()


def _indexed(index: int) -> Program:
    program = decode_index(index)
    # nothing is queried without an oracle, so oracle programs just wait
    return idle() if program.arity != 3 else program


def universe_programs(universe: Universe) -> List[Program]:
    """
    An index bound ``N`` stands for the programs with indices below ``N``;
    indices of oracle programs stand for a program that never halts.
    """
    if isinstance(universe, int):
        if universe < 1:
            raise ValueError(f'The universe must be nonempty, got {universe}.')
        universe = range(universe)
    programs = [_indexed(p) if isinstance(p, int) else p for p in universe]
    if not programs:
        raise ValueError('The universe must be nonempty.')
    for program in programs:
        if program.arity != 3:
            raise ValueError(f"Can't dovetail {program!r}: oracle programs are not supported.")
    return programs


class _Dovetail:
    def __init__(self, programs: Sequence[Program], gaps: bool = False, input_bound: Optional[int] = None):
        self.programs = list(programs)
        self.n = len(programs)
        self.gaps = gaps
        # the scan for stray input bits starts at the bound, to the right of its own flag
        self.scanning = input_bound is not None
        self.input_bound = max(input_bound, SCAN + 1) if self.scanning else 0
        self.band = Band(self.n, max(TURNS + 4 * self.n, self.input_bound))

    def turn_cell(self, i: int) -> int:
        return TURNS + 2 * i

    def started_cell(self, i: int) -> int:
        return TURNS + 2 * self.n + 2 * i

    def _halted(self, i: int) -> Macro:
        return Seq(
            Label(f'c{i}:halted'),
            self.band.go_home(f'c{i}:home'),
            Move(i), Write(OUTPUT, 1),
            Move(HALTED_IN_ROUND - i), Write(SCRATCH, 1),
            Loop(Step()),
        )

    def component(self, i: int) -> Macro:
        return Seq(self.band.simulate(self.programs[i], i, f'c{i}', f'c{i}:halted'), self._halted(i))

    def dispatch(self, i: int) -> Macro:
        """From column 0: continue component ``i``, start it, or idle if it has halted."""
        program = self.programs[i]
        started, home = self.started_cell(i), self.band.column(i)
        run = Branch(
            SCRATCH,
            Seq(Write(SCRATCH, 1), Move(home - started), Goto(f'c{i}:{program.start}')),
            Seq(Move(home - started), Goto(f'c{i}:{program.limit}')),
        )
        return Seq(Move(i), Branch(OUTPUT, Seq(Move(started - i), run), Loop(Step())))

    def _any_halted(self) -> Macro:
        items = []
        for i in range(self.n):
            items += [Move(1) if i else Seq(), Branch(OUTPUT, Seq(), Halt())]
        return Seq(*items, Move(-(self.n - 1)))

    def _gap_check(self) -> Macro:
        """From column 0, before a new round: halts if something has halted but nothing did last round."""
        return Seq(Move(HALTED_IN_ROUND), Branch(
            SCRATCH,
            Seq(Move(-HALTED_IN_ROUND), self._any_halted()),
            Seq(Write(SCRATCH, 0), Move(-HALTED_IN_ROUND)),
        ))

    def turn(self, i: int) -> Macro:
        cell = self.turn_cell(i)
        items = [Label(f'turn{i}'), Move(cell), Write(SCRATCH, 1), Move(-cell)]
        if self.gaps and i == 0:
            items.append(self._gap_check())
        items.append(self.dispatch(i))
        return Seq(*items)

    def next_turn(self) -> Macro:
        """From column 0: moves the turn mark one component on."""
        items = []
        for i in range(self.n):
            cell = self.turn_cell(i)
            items += [Move(cell), Branch(SCRATCH, Move(-cell),
                                         Seq(Write(SCRATCH, 0), Move(-cell), Goto(f'turn{(i + 1) % self.n}')))]
        return Seq(*items, Goto('turn0'))

    def _reset_turns(self) -> Macro:
        items, at = [], 0
        for i in range(self.n):
            cell = self.turn_cell(i)
            items += [Move(cell - at), Write(SCRATCH, 1 if i == self.n - 1 else 0)]
            at = cell
        return Seq(*items, Move(-at))

    def scan_input(self) -> Macro:
        """Looks for a 1 at or beyond the input bound; finding one halts with the inadmissible flag."""
        return Seq(
            Move(SCAN), Write(SCRATCH, 1), Move(self.input_bound - SCAN),
            ScanRightUntil(INPUT, 1),
            ScanLeftUntil(SCRATCH, 1), Move(self.n - SCAN), Write(OUTPUT, 1), Halt(),
        )

    def on_limit(self) -> Macro:
        limit_of_limits = Seq(Write(SCRATCH, 0), self._reset_turns())
        items = [Branch(SCRATCH, Seq(Write(SCRATCH, 1), Write(SCRATCH, 0)), limit_of_limits)]
        if self.scanning:
            start = Seq(Write(SCRATCH, 0), Move(-SCAN), self.band.copy_input(self.input_bound), self.band.boundary(),
                        Goto('turn0'))
            items += [Move(SCAN), Branch(SCRATCH, Move(-SCAN), start)]
        items.append(self.next_turn())
        return Seq(*items)

    def root(self, name: str) -> Root:
        if self.scanning:
            main = self.scan_input()
        else:
            main = Seq(self.band.boundary(), Goto('turn0'))
        body = [self.turn(i) for i in range(self.n)] + [self.component(i) for i in range(self.n)]
        return Root(Seq(main, *body), self.on_limit(), self.flags(), name)

    def flags(self) -> Dict[str, Tuple[int, int]]:
        cells = {'flash': (SCRATCH, FLASH), 'scan': (SCRATCH, SCAN), 'halted_in_round': (SCRATCH, HALTED_IN_ROUND),
                 'boundary': (SCRATCH, self.band.origin - 1)}
        for i in range(self.n):
            cells[f'halted{i}'] = OUTPUT, i
            cells[f'turn{i}'] = SCRATCH, self.turn_cell(i)
            cells[f'started{i}'] = SCRATCH, self.started_cell(i)
        if self.scanning:
            cells['inadmissible'] = OUTPUT, self.n
        return cells


def dovetailer(universe: Universe) -> Program:
    """
    On input 0, output cell ``i`` is 1 exactly from the moment the ``i``-th
    program, simulated on input 0, has halted.

    Every live program advances during each round of ``N`` consecutive
    w-blocks; the machine never halts.
    """
    programs = universe_programs(universe)
    return _Dovetail(programs).root(f'dovetailer_{len(programs)}').program()


def gap_finder(universe: Universe) -> Program:
    """Halts at the start of the first round in which nothing halted, once something has."""
    programs = universe_programs(universe)
    return _Dovetail(programs, gaps=True).root(f'gap_finder_{len(programs)}').program()


def jump_enumerator(universe: Universe, input_bound: int = JUMP_INPUT_BOUND) -> Program:
    """
    On input ``x`` the output eventually holds ``{i : program i halts on x}``.

    Only inputs supported below ``input_bound`` are admissible; a 1 at or beyond
    it sets output cell ``N`` and halts before w. The components start at w.
    """
    if input_bound < 0:
        raise ValueError(f'The input bound must not be negative, got {input_bound}.')
    programs = universe_programs(universe)
    return _Dovetail(programs, input_bound=input_bound).root(f'jump_enumerator_{len(programs)}').program()


def dovetail_layout(universe: Universe, gaps: bool = False, input_bound: int = None) -> Dict[str, Tuple[int, int]]:
    """Named control cells of the machine built for ``universe``."""
    return _Dovetail(universe_programs(universe), gaps, input_bound).flags()


def _halting_stage(program: Program, budgets: Optional[Budgets]) -> Optional[Ordinal]:
    outcome = run(program, budgets=budgets)
    return outcome.stage if isinstance(outcome, Halted) else None


def gap_report(universe: Universe, budgets: Budgets = None, n_jobs: int = 1) -> pd.DataFrame:
    """
    Halting stages of every program in the universe next to the stage the gap finder stops at.

    The gap stage is stored in ``report.attrs['gap']``, ``None`` when the gap
    finder does not halt within ``budgets``.
    """
    programs = universe_programs(universe)
    stages = parallel_map(_halting_stage, programs, n_jobs, budgets)
    gap = _halting_stage(gap_finder(programs), budgets)

    report = pd.DataFrame({
        'program': [p.name or str(i) for i, p in enumerate(programs)],
        'halts': [s is not None for s in stages],
        'stage': [None if s is None else str(s) for s in stages],
        'before_gap': [s is not None and gap is not None and s < gap for s in stages],
    })
    report.attrs['gap'] = None if gap is None else str(gap)
    return report
