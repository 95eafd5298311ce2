"""Programs that halt on input 0 at a prescribed stage."""
from typing import *

from ..asm import Root, Macro, Seq, Loop, Branch, Step, Steps, Move, Write, Halt, Label, Goto, SCRATCH
from ..machine import Program
from ..ordinal import Ordinal, OMEGA

KINDS = ('finite', 'omega', 'omega_plus', 'omega_times', 'omega_times_plus', 'omega_squared',
         'omega_squared_plus')


def _run_right() -> Macro:
    return Seq(Label('run'), Loop(Step(move='R')))


def _finish(n: int) -> Macro:
    # the branch that reads the limit counts as the first of the n steps
    return Seq(Steps(n - 1), Halt())


def _counter(j: int, k: int) -> Macro:
    # scratch cells 1..k-2 count limits in unary; cell 0 marks the last one
    if j == k - 1:
        return Seq(Move(-j), Write(SCRATCH, 1))
    return Branch(SCRATCH, Seq(Write(SCRATCH, 1), Move(-j)), Seq(Move(1), _counter(j + 1, k)))


def _finite(n: int) -> Root:
    return Root(Seq(Steps(n), Halt()))


def _omega_times_plus(k: int, n: int) -> Root:
    if k == 1:
        return Root(_run_right(), Seq(Steps(n), Halt()))
    on_limit = Branch(SCRATCH, Seq(Move(1), _counter(1, k), Goto('run')), _finish(n))
    return Root(_run_right(), on_limit, {'last': (SCRATCH, 0)})


def _omega_squared_plus(n: int) -> Root:
    # scratch 0 flashes at every limit, so it reads 1 exactly at limits of limits
    on_limit = Branch(SCRATCH, Seq(Write(SCRATCH, 1), Write(SCRATCH, 0), Goto('run')), _finish(n))
    return Root(_run_right(), on_limit, {'flash': (SCRATCH, 0)})


def milestone(kind: str, *args: int) -> Program:
    """
    ``milestone('omega_times_plus', k, n)`` halts at w*k+n on input 0.

    Limit milestones take one step from the limit state at least, so
    ``omega`` halts at w+1 and ``omega_squared`` at w^2+1.
    """
    if kind not in KINDS:
        raise ValueError(f"Can't build the milestone {kind!r}, choose one of {KINDS}.")
    if any(a < 1 for a in args):
        raise ValueError(f'Milestone parameters must be positive, got {args}.')

    if kind == 'finite':
        n, = args
        root = _finite(n)
    elif kind == 'omega':
        root = _omega_times_plus(1, 1)
    elif kind == 'omega_plus':
        n, = args
        root = _omega_times_plus(1, n)
    elif kind == 'omega_times':
        k, = args
        root = _omega_times_plus(k, 1)
    elif kind == 'omega_times_plus':
        k, n = args
        root = _omega_times_plus(k, n)
    elif kind == 'omega_squared':
        root = _omega_squared_plus(1)
    else:
        n, = args
        root = _omega_squared_plus(n)

    root.name = '_'.join(map(str, (kind, *args)))
    return root.program()


def milestone_stage(kind: str, *args: int) -> Ordinal:
    """The stage at which ``milestone(kind, *args)`` halts."""
    stages = {
        'finite': lambda n: Ordinal.of(n),
        'omega': lambda: OMEGA + 1,
        'omega_plus': lambda n: OMEGA + n,
        'omega_times': lambda k: Ordinal.omega_power(1, k) + 1,
        'omega_times_plus': lambda k, n: Ordinal.omega_power(1, k) + n,
        'omega_squared': lambda: Ordinal.omega_power(2) + 1,
        'omega_squared_plus': lambda n: Ordinal.omega_power(2) + n,
    }
    return stages[kind](*args)
