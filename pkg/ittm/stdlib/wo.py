"""
Deciding whether the input codes a well-order.

The input codes ``n < m`` by bit ``pair(n, m)``. The machine works on the field
``{0, .., bound - 1}``; a 1 anywhere else is an overflow. The machine then halts
with output cell 1 set and no verdict in cell 0, see ``verdict``. Output cell 0
is 1 while the machine runs (it is the home marker) and holds the answer when it
halts.

Layout, with ``P = pair(bound - 1, bound - 1) + 1``:

* scratch ``[0, P)``: a return mark while the head visits the flags;
* scratch ``P``: anchor, found from anywhere left of it by one scan;
* scratch ``P + 1``: phase, 1 once the first limit has been handled;
* scratch ``P + 2``: master flag, flashed on every change of the guess;
* scratch ``P + 3 + n``: ``n`` is in the field;
* scratch ``P + 3 + bound + n``: ``n`` has not been erased yet.

Before w the machine checks irreflexivity, asymmetry, totality and the absence
of 3-cycles on the bounded field, and then scans the rest of the input for
overflow. At w it counts through the order: a guess for the least element left
is replaced by any element below it, flashing the master flag, until no
element is below the guess, which is then erased. With nothing left it idles.
At the next limit the order is well-founded iff the master flag reads 0 and
nothing is left. An order with no least element keeps the guess moving and the
flag flashing through the whole block, so the flag reads 1 at its limit.
"""
from itertools import combinations
from typing import *

from ..asm import (Root, Macro, Seq, Loop, Branch, Step, Move, Write, Halt, Label, Goto, ScanLeftUntil,
                   ScanRightUntil, INPUT, SCRATCH, OUTPUT)
from ..default_params import WO_FIELD_BOUND
from ..machine import Program, RunOutcome, Halted
from ..real import pair_index, unpair

PHASE, MASTER, FIELD = 1, 2, 3


def field_size(bound: int) -> int:
    return pair_index(bound - 1, bound - 1) + 1


def layout(bound: int = WO_FIELD_BOUND) -> Dict[str, Tuple[int, int]]:
    anchor = field_size(bound)
    cells = {'answer': (OUTPUT, 0), 'overflow': (OUTPUT, 1), 'anchor': (SCRATCH, anchor),
             'phase': (SCRATCH, anchor + PHASE), 'master': (SCRATCH, anchor + MASTER)}
    for n in range(bound):
        cells[f'field{n}'] = SCRATCH, anchor + FIELD + n
        cells[f'left{n}'] = SCRATCH, anchor + FIELD + bound + n
    return cells


def verdict(outcome: RunOutcome) -> Optional[bool]:
    """The answer of a decider run; ``None`` when it did not halt or the field left the bound."""
    if not isinstance(outcome, Halted) or outcome.output.peek(1):
        return None
    return bool(outcome.output.peek(0))


def _home() -> Macro:
    return ScanLeftUntil(OUTPUT, 1)


def _reject() -> Macro:
    return Seq(_home(), Write(OUTPUT, 0), Halt())


def _overflow() -> Macro:
    return Seq(_home(), Write(OUTPUT, 0), Move(1), Write(OUTPUT, 1), Halt())


def _to_anchor() -> Macro:
    """From a marked column left of the anchor, leaving the mark behind."""
    return Seq(Write(SCRATCH, 1), Move(1), ScanRightUntil(SCRATCH, 1))


def _from_anchor(offset: int) -> Macro:
    """Back from ``anchor + offset`` to the marked column, erasing the mark."""
    return Seq(Move(-offset - 1), ScanLeftUntil(SCRATCH, 1), Write(SCRATCH, 0))


def _mark_field(a: int, b: int) -> Macro:
    low, high = sorted((a, b))
    return Seq(_to_anchor(), Move(FIELD + low), Write(SCRATCH, 1), Move(high - low), Write(SCRATCH, 1),
               _from_anchor(FIELD + high))


def _both_in_field(a: int, b: int) -> Macro:
    """Rejects when two unrelated elements are both in the field."""
    low, high = sorted((a, b))
    return Seq(_to_anchor(), Move(FIELD + low), Branch(
        SCRATCH,
        _from_anchor(FIELD + low),
        Seq(Move(high - low), Branch(SCRATCH, _from_anchor(FIELD + high), _reject())),
    ))


def _pair_bits(d: int, cases: Mapping[Tuple[int, int], Macro]) -> Macro:
    """Reads the bit under the head and the one ``d`` cells right of it, and comes back."""
    def second(u):
        return Seq(Move(d), Branch(INPUT, Seq(Move(-d), cases[u, 0]), Seq(Move(-d), cases[u, 1])))

    return Branch(INPUT, second(0), second(1))


def _related_pairs(bound: int) -> List[Tuple[int, int, int]]:
    """``(k, a, b)`` with ``k = pair(a, b)`` and ``a > b``; the mirrored bit sits ``a - b`` cells right."""
    return sorted((pair_index(a, b), a, b) for a in range(bound) for b in range(a))


def _linearity_sweep(bound: int) -> Macro:
    """Diagonal and overflow checks, asymmetry, and the field flags, in one pass from cell 0."""
    items = []
    for k in range(field_size(bound)):
        a, b = unpair(k)
        if a >= bound or b >= bound:
            items.append(Branch(INPUT, Seq(), _overflow()))
        elif a == b:
            items.append(Branch(INPUT, Seq(), _reject()))
        elif a > b:
            marked = _mark_field(a, b)
            items.append(_pair_bits(a - b, {(0, 0): Seq(), (0, 1): marked, (1, 0): marked, (1, 1): _reject()}))
        items.append(Step(move='R'))
    return Seq(*items)


def _totality_sweep(bound: int) -> Macro:
    items, at = [_home()], 0
    for k, a, b in _related_pairs(bound):
        items.append(Move(k - at))
        items.append(_pair_bits(a - b, {(0, 0): _both_in_field(a, b), (0, 1): Seq(), (1, 0): Seq(),
                                        (1, 1): Seq()}))
        at = k
    return Seq(*items)


def _all_set(cells: Sequence[int], then: Macro) -> Macro:
    """From home: reads the input cells in increasing order, running ``then`` if all hold 1."""
    body, cells = then, sorted(cells)
    for at, cell in reversed(list(zip([0] + cells, cells))):
        body = Seq(Move(cell - at), Branch(INPUT, _home(), body))
    return body


def _cycles(bound: int) -> List[Tuple[int, int, int]]:
    """Both orientations of every triangle, as the three input cells that close it."""
    cells = []
    for a, b, c in combinations(range(bound), 3):
        cells.append((pair_index(a, b), pair_index(b, c), pair_index(c, a)))
        cells.append((pair_index(a, c), pair_index(c, b), pair_index(b, a)))
    return cells


def _transitivity_sweep(bound: int) -> Macro:
    """Rejects a 3-cycle; with totality and asymmetry already checked this leaves a transitive order."""
    return Seq(_home(), *(_all_set(cells, _reject()) for cells in _cycles(bound)))


def linear_check(bound: int) -> Macro:
    """Everything done before w: home marker, anchor, all sweeps; ends on the anchor."""
    anchor = field_size(bound)
    return Seq(
        Write(OUTPUT, 1),
        Move(anchor), Write(SCRATCH, 1), Move(-anchor),
        _linearity_sweep(bound),
        _totality_sweep(bound),
        _transitivity_sweep(bound),
        ScanRightUntil(SCRATCH, 1),
    )


def _fill_left(bound: int) -> Macro:
    """On the anchor: marks every element as not erased and goes home."""
    first = FIELD + bound
    return Seq(Move(first), *(Write(SCRATCH, 1, 'R') for _ in range(bound)), _home())


def _challenge(n: int, guess: int, bound: int) -> Macro:
    """From home: if ``n`` is left and below the guess, flashes the master flag and guesses ``n``."""
    left = FIELD + bound + n
    below = Seq(ScanRightUntil(SCRATCH, 1), Move(MASTER), Write(SCRATCH, 1), Write(SCRATCH, 0), _home(),
                Goto(f'guess{n}'))
    return Seq(ScanRightUntil(SCRATCH, 1), Move(left), Branch(
        SCRATCH,
        _home(),
        Seq(_home(), _all_set([pair_index(n, guess)], Seq(_home(), below))),
    ))


def _count_through(bound: int) -> Macro:
    """From home, with every element marked as left; idles on the anchor once nothing is left."""
    items = [Label('round'), ScanRightUntil(SCRATCH, 1)]
    for n in range(bound):
        left = FIELD + bound + n
        items.append(Move(left))
        items.append(Branch(SCRATCH, Move(-left), Seq(_home(), Goto(f'guess{n}'))))
    items.append(Loop(Step()))

    for guess in range(bound):
        left = FIELD + bound + guess
        items.append(Label(f'guess{guess}'))
        items.extend(_challenge(n, guess, bound) for n in range(bound) if n != guess)
        items.extend([ScanRightUntil(SCRATCH, 1), Move(left), Write(SCRATCH, 0), _home(), Goto('round')])
    return Seq(*items)


def _decide(bound: int) -> Macro:
    """Runs on the master flag."""
    items = []
    at = MASTER
    for n in range(bound):
        left = FIELD + bound + n
        items.append(Move(left - at))
        items.append(Branch(SCRATCH, Seq(), _reject()))
        at = left
    return Branch(SCRATCH, Seq(*items, Halt()), _reject())


def _check_bound(bound: int):
    if bound < 1:
        raise ValueError(f'The field bound must be positive, got {bound}.')


def wo_decider(bound: int = WO_FIELD_BOUND) -> Program:
    """Halts with output cell 0 set iff the input codes a well-order; see ``verdict`` for overflow."""
    _check_bound(bound)
    on_limit = Seq(
        ScanRightUntil(SCRATCH, 1),
        Move(PHASE),
        Branch(
            SCRATCH,
            Seq(Write(SCRATCH, 1), Move(-PHASE), _fill_left(bound), _count_through(bound)),
            Seq(Move(MASTER - PHASE), _decide(bound)),
        ),
    )
    main = Seq(linear_check(bound), ScanRightUntil(INPUT, 1), _overflow())
    return Root(main, on_limit, layout(bound), f'wo_decider_{bound}').program()


def count_through(bound: int = WO_FIELD_BOUND) -> Program:
    """
    The count-through alone, trusting the input to code a linear order.

    On a relation with no least element among some of its elements the guess
    never settles, and the master flag decides at w.
    """
    _check_bound(bound)
    anchor = field_size(bound)
    main = Seq(Write(OUTPUT, 1), Move(anchor), Write(SCRATCH, 1), Move(PHASE), Write(SCRATCH, 1),
               Move(-PHASE), _fill_left(bound), _count_through(bound))
    on_limit = Seq(ScanRightUntil(SCRATCH, 1), Move(MASTER), _decide(bound))
    return Root(main, on_limit, layout(bound), f'count_through_{bound}').program()


def linearity_check(bound: int = WO_FIELD_BOUND) -> Program:
    """Halts with output cell 0 set iff the input codes a linear order on a field below ``bound``.

    Only the part of the input inside the bounded field is inspected.
    """
    main = Seq(linear_check(bound), Halt())
    return Root(main, None, layout(bound), f'linearity_check_{bound}').program()
