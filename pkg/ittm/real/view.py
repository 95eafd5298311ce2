from typing import *
from functools import reduce

import numpy as np

from .spec import RealSpec, EMPTY, FiniteSupport, eventually_periodic, lcm


class TapeView:
    """
    A tape: a base real overlaid with the finitely many cells written so far.

    ``delta`` is canonical: it never stores the base bit, so two views over the
    same base are equal iff their deltas are.
    """
    __slots__ = ('base', 'delta', 'touched_max')

    def __init__(self, base: RealSpec = EMPTY, delta: Mapping[int, int] = None, touched_max: int = -1):
        self.base = base
        self.delta: Dict[int, int] = {}
        self.touched_max = touched_max
        for n, b in (delta or {}).items():
            self.write(n, b)

    def peek(self, n: int) -> int:
        value = self.delta.get(n)
        return self.base.bit(n) if value is None else value

    def bit_at(self, n: int) -> int:
        if n < 0:
            raise IndexError(f'Negative cell {n}.')
        if n > self.touched_max:
            self.touched_max = n
        return self.peek(n)

    def write(self, n: int, b: int):
        if n > self.touched_max:
            self.touched_max = n
        if b == self.base.bit(n):
            self.delta.pop(n, None)
        else:
            self.delta[n] = b

    def copy(self) -> 'TapeView':
        view = TapeView(self.base, touched_max=self.touched_max)
        view.delta = dict(self.delta)
        return view

    def key(self) -> tuple:
        return self.base, frozenset(self.delta.items())

    def __eq__(self, other):
        return isinstance(other, TapeView) and self.base == other.base and self.delta == other.delta

    def __hash__(self):
        return hash(self.key())

    def ones(self, stop: int) -> List[int]:
        return [n for n in range(stop) if self.peek(n)]

    @property
    def frontier(self) -> int:
        """One past the highest written cell."""
        return max(self.delta, default=-1) + 1

    def periodic_form(self) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        form = self.base.periodic_form()
        if form is None:
            return None
        prefix, period = form
        stop = max(len(prefix), self.frontier)
        start = stop - len(prefix)
        # shift the period so that it starts right after the extended prefix
        period = period[start % len(period):] + period[:start % len(period)]
        return tuple(self.peek(n) for n in range(stop)), period

    def as_spec(self) -> RealSpec:
        """The real currently on the tape."""
        if not self.delta:
            return self.base
        form = self.periodic_form()
        if form is None:
            raise ValueError(f"Can't express a written-over {self.base.literal()} as a finite real.")
        return eventually_periodic(*form)

    def literal(self) -> str:
        return self.as_spec().literal()

    def __repr__(self):
        return f'TapeView({self.base.literal()}, {dict(sorted(self.delta.items()))})'


def _bit_matrix(views: Sequence[TapeView], cells: Sequence[int]) -> np.ndarray:
    return np.array([[view.peek(n) for n in cells] for view in views], dtype=np.uint8).reshape(len(views), len(cells))


def limsup_delta(snapshots: Sequence[TapeView], stable: TapeView) -> Dict[int, int]:
    """
    Cell-wise limsup of a forever repeating cycle of tape views.

    A bit that shows up somewhere in the cycle shows up cofinally, so the limsup
    of each touched cell is its maximum over the cycle.
    """
    if not snapshots:
        raise ValueError('The cycle must contain at least one snapshot.')
    base = stable.base
    if any(view.base != base for view in snapshots):
        raise ValueError("Can't take the limsup of views over different bases.")

    touched = set().union(*(view.delta for view in snapshots))
    cells = sorted(touched)
    delta = {n: b for n, b in stable.delta.items() if n not in touched}
    if cells:
        top = _bit_matrix(snapshots, cells).max(axis=0)
        delta.update({n: int(b) for n, b in zip(cells, top) if b != base.bit(n)})
    return delta


def join_views(views: Sequence[TapeView]) -> TapeView:
    """Cell-wise maximum of tape views, rebased onto a common eventually periodic real if needed."""
    first = views[0]
    if all(view.base == first.base for view in views):
        result = TapeView(first.base, limsup_delta(views, first))
        result.touched_max = max(view.touched_max for view in views)
        return result

    forms = [view.periodic_form() for view in views]
    if any(form is None for form in forms):
        raise ValueError("Can't join views over different generated bases.")

    start = max(len(prefix) for prefix, _ in forms)
    period = reduce(lcm, (len(period) for _, period in forms))
    bits = _bit_matrix(views, range(start + period)).max(axis=0)
    base = eventually_periodic(bits[:start].tolist(), bits[start:].tolist())
    return TapeView(base, touched_max=max(view.touched_max for view in views))


def with_periodic_tail(view: TapeView, start: int, block: Sequence[int]) -> TapeView:
    """The view whose cells from ``start`` on repeat ``block`` forever."""
    prefix = [view.peek(n) for n in range(start)]
    tail = eventually_periodic(prefix, block)
    base = view.base
    if tails_agree(base, tail, start):
        result = TapeView(base, {n: b for n, b in view.delta.items() if n < start})
    else:
        result = TapeView(tail)
    result.touched_max = view.touched_max
    return result


def tails_agree(a: RealSpec, b: RealSpec, start: int) -> bool:
    """Whether ``a`` and ``b`` agree on every cell from ``start`` on."""
    if a == b:
        return True
    fa, fb = a.periodic_form(), b.periodic_form()
    if fa is None or fb is None:
        return False
    stop = max(start, len(fa[0]), len(fb[0])) + lcm(len(fa[1]), len(fb[1]))
    return all(a.bit(n) == b.bit(n) for n in range(start, stop))
