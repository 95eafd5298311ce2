"""Small programs; everything ``demos()`` returns halts before w^2 on every input."""
from typing import *

from ..asm import Root, Seq, Loop, Branch, Move, Write, Halt, Label, Goto, ScanLeftUntil, ScanRightUntil, INPUT, SCRATCH, OUTPUT
from ..default_params import WO_FIELD_BOUND
from ..machine import Program
from .wo import linearity_check, wo_decider


def copy_input() -> Program:
    """Copies the input to the output in w steps and halts at w+1."""
    copy = Loop(Branch(INPUT, Write(OUTPUT, 0, 'R'), Write(OUTPUT, 1, 'R')))
    return Root(copy, Halt(), name='copy_input').program()


def parity_of_prefix(n: int) -> Program:
    """Output cell 0 holds the parity of the number of ones among the first ``n`` input cells."""
    if n < 1:
        raise ValueError(f'The prefix must be nonempty, got {n}.')

    blocks = [Goto('at0_0')]
    for k in range(n):
        for parity in (0, 1):
            blocks += [
                Label(f'at{k}_{parity}'),
                Branch(INPUT, Seq(Move(1), Goto(f'at{k + 1}_{parity}')), Seq(Move(1), Goto(f'at{k + 1}_{1 - parity}'))),
            ]
    for parity in (0, 1):
        blocks += [Label(f'at{n}_{parity}'), Move(-n), Write(OUTPUT, parity), Halt()]

    return Root(Seq(*blocks), name=f'parity_of_prefix_{n}').program()


def any_one() -> Program:
    """Halts with output cell 0 set iff some input cell holds 1; the search ends at w otherwise."""
    found = Seq(ScanLeftUntil(SCRATCH, 1), Write(OUTPUT, 1), Halt())
    main = Seq(Write(SCRATCH, 1), ScanRightUntil(INPUT, 1), found)
    return Root(main, Halt(), {'home': (SCRATCH, 0)}, 'any_one').program()


def demos(bound: int = WO_FIELD_BOUND) -> Dict[str, Program]:
    return {
        'copy_input': copy_input(),
        'parity_of_prefix_3': parity_of_prefix(3),
        'any_one': any_one(),
        'linearity_check': linearity_check(bound),
        'wo_decider': wo_decider(bound),
    }


def toggler() -> Program:
    """Flips scratch cell 0 forever, through every limit."""
    flip = Loop(Seq(Write(SCRATCH, 1), Write(SCRATCH, 0)))
    return Root(flip, Seq(Write(SCRATCH, 0), Loop(Seq(Write(SCRATCH, 1), Write(SCRATCH, 0)))), name='toggler').program()
