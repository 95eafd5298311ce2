from typing import *
from itertools import product

LEFT, STAY, RIGHT = -1, 0, 1
MOVES = {'L': LEFT, 'S': STAY, 'R': RIGHT}
MOVE_NAMES = {v: k for k, v in MOVES.items()}

INPUT, SCRATCH, OUTPUT, ORACLE = range(4)
TAPE_NAMES = ('input', 'scratch', 'output', 'oracle')

Read = Tuple[int, ...]


class Action(NamedTuple):
    write: Tuple[int, ...]
    move: int
    target: str
    query: bool = False


class Program:
    """
    A finite ITTM transition table.

    ``arity`` is the number of tapes under the head: 3, or 4 when the program
    runs with an oracle tape.
    """
    __slots__ = ('states', 'start', 'limit', 'halt', 'transitions', 'arity', 'name')

    def __init__(self, states: Sequence[str], start: str, limit: str, halt: str,
                 transitions: Mapping[Tuple[str, Read], Action], arity: int = 3, name: str = ''):
        self.states = tuple(states)
        self.start, self.limit, self.halt = start, limit, halt
        self.transitions = dict(transitions)
        self.arity = arity
        self.name = name

    def action(self, state: str, read: Read) -> Action:
        return self.transitions[state, read]

    @property
    def reads(self) -> List[Read]:
        return all_reads(self.arity)

    @property
    def live_states(self) -> List[str]:
        return [s for s in self.states if s != self.halt]

    def canonical(self) -> 'Program':
        """The same table with states renamed by first use, starting from ``start``, ``limit``, ``halt``."""
        order = [self.start, self.limit, self.halt]
        queue = list(order)
        while queue:
            state = queue.pop(0)
            if state == self.halt:
                continue
            for read in self.reads:
                target = self.transitions[state, read].target
                if target not in order:
                    order.append(target)
                    queue.append(target)

        names = {state: f'q{i}' for i, state in enumerate(order)}
        transitions = {
            (names[s], read): action._replace(target=names[action.target])
            for (s, read), action in self.transitions.items() if s in names
        }
        return Program([names[s] for s in order], 'q0', 'q1', 'q2', transitions, self.arity, self.name)

    def __eq__(self, other):
        if not isinstance(other, Program):
            return NotImplemented
        return (self.states, self.start, self.limit, self.halt, self.transitions, self.arity) == \
               (other.states, other.start, other.limit, other.halt, other.transitions, other.arity)

    __hash__ = None

    def __repr__(self):
        return f'Program({self.name or "?"}, {len(self.states)} states, arity {self.arity})'


def all_reads(arity: int) -> List[Read]:
    return list(product((0, 1), repeat=arity))
