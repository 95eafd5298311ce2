"""
Simulating other programs on a band of interleaved cells.

With ``lanes`` lanes, lane ``i`` keeps logical cell ``j`` in the columns
``origin + 2(j * lanes + i)`` and the one after it: the first holds the input
bit on the input tape and the scratch bit on the scratch tape, the second the
output bit on the input tape. The scratch tape of every second column stays
blank, except for the boundary at ``origin - 1``, so a simulated head finds its
way home by scanning those columns.
"""
from typing import *

from ..asm import Macro, Seq, Branch, Switch, Step, Move, Write, Label, Goto, INPUT, SCRATCH
from ..machine import Program


class Band:
    def __init__(self, lanes: int, origin: int):
        assert lanes >= 1 and origin >= 1
        self.lanes = lanes
        # the boundary sits on an odd column
        self.origin = origin + origin % 2

    def column(self, lane: int, cell: int = 0) -> int:
        return self.origin + 2 * (cell * self.lanes + lane)

    def boundary(self) -> Macro:
        """From column 0 and back."""
        return Seq(Move(self.origin - 1), Write(SCRATCH, 1), Move(-(self.origin - 1)))

    def go_home(self, label: str) -> Macro:
        """From the first column of a simulated cell to column 0."""
        return Seq(
            Move(1),
            Label(label),
            Branch(SCRATCH, Seq(Move(-2), Goto(label)), Seq()),
            Move(-(self.origin - 1)),
        )

    def move(self, lane: int, move: int) -> Macro:
        """One simulated move; a left move on cell 0 stays put."""
        width = 2 * self.lanes
        if move > 0:
            return Move(width)
        if move < 0:
            probe = 2 * lane + 1
            return Seq(Move(-probe), Branch(SCRATCH, Move(-(width - probe)), Move(probe)))
        return Seq()

    def _act(self, program: Program, state: str, read: Tuple[int, int, int], here: str, done: str) -> Macro:
        action = program.action(state, read)
        w_in, w_scr, w_out = action.write
        write = Seq(Step({INPUT: w_out}, 'L'), Step({INPUT: w_in, SCRATCH: w_scr}))
        if action.target == program.halt:
            return Seq(write, Goto(done))
        return Seq(write, Goto(f'{here}:{action.move}>{action.target}'))

    def state(self, program: Program, state: str, here: str, done: str) -> Macro:
        """
        Label ``here:state`` reads both columns of the current cell and acts.

        The head comes back to the first column before moving on to
        ``here:move>target``, or to ``done`` when the program halts.
        """
        def second(a, b):
            return Seq(Step(move='R'), Branch(INPUT, self._act(program, state, (a, b, 0), here, done),
                                              self._act(program, state, (a, b, 1), here, done)))

        cases = {(a, b): second(a, b) for a in (0, 1) for b in (0, 1)}
        return Seq(Label(f'{here}:{state}'), Switch((INPUT, SCRATCH), cases))

    def moves(self, program: Program, lane: int, here: str, there: str) -> Macro:
        """Labels ``here:move>state``: make the move, then continue at ``there:state``."""
        items = []
        for state in program.live_states:
            for move in (-1, 0, 1):
                items += [Label(f'{here}:{move}>{state}'), self.move(lane, move), Goto(f'{there}:{state}')]
        return Seq(*items)

    def simulate(self, program: Program, lane: int, here: str, done: str) -> Macro:
        """Runs ``program`` on its lane for as long as it takes, entering at ``here:state``."""
        items = [self.state(program, state, here, done) for state in program.live_states]
        return Seq(*items, self.moves(program, lane, here, here))

    def simulate_steps(self, program: Program, lane: int, here: str, steps: int, done: str) -> Macro:
        """
        Runs at most ``steps`` simulated steps, entering at ``here@0:state``.

        Both halting and running out of steps continue at ``done``.
        """
        items = []
        for t in range(steps):
            for state in program.live_states:
                items.append(self.state(program, state, f'{here}@{t}', done))
            items.append(self.moves(program, lane, f'{here}@{t}', f'{here}@{t + 1}'))
        for state in program.live_states:
            items += [Label(f'{here}@{steps}:{state}'), Goto(done)]
        return Seq(*items)

    def copy_input(self, cells: int) -> Macro:
        """From column 0 and back: copies the first ``cells`` input cells to the input of every lane."""
        assert cells <= self.origin
        items, at = [], 0
        for c in range(cells):
            first = self.column(0, c)
            copies = [Move(first - c)]
            for lane in range(self.lanes):
                copies += [Move(2) if lane else Seq(), Write(INPUT, 1)]
            copies.append(Move(c - first - 2 * (self.lanes - 1)))
            items += [Move(c - at), Branch(INPUT, Seq(), Seq(*copies))]
            at = c
        return Seq(*items, Move(-at))

    def erase(self, cells: int) -> Macro:
        """From column 0 and back: blanks the first ``cells`` cells of every lane."""
        end = self.column(0, cells)
        items = [Move(self.origin)]
        for _ in range(self.origin, end):
            items.append(Step({INPUT: 0, SCRATCH: 0}, 'R'))
        return Seq(*items, Move(-end))
