"""
Program indices.

``index = pair(pair(oracle, k - 3), body)`` where ``k`` counts the states of the
canonical form (``q0`` start, ``q1`` limit, ``q2`` halt). The body lists, least
significant bit first, one fixed-width field per (live state, read): the written
bits, a move (00 stay, 01 right, 10 left) and a target ``v`` naming ``q((v + 2) % k)``,
so that 0 means halt; oracle programs add a query bit. Naturals that are not
well formed decode to ``NOOP``, which halts at stage 1.
"""
from typing import *

from ..machine import Program, Action, LEFT, STAY, RIGHT, all_reads
from ..real import pair_index, unpair

_MOVE_BITS = {STAY: 0, RIGHT: 1, LEFT: 2}
_MOVES = {v: k for k, v in _MOVE_BITS.items()}


def _layout(arity: int, k: int) -> Tuple[int, int, int]:
    target_width = (k - 1).bit_length()
    field = arity + 2 + target_width + (arity == 4)
    return target_width, field, field * (k - 1) * 2 ** arity


def _live(k: int) -> List[str]:
    return [f'q{i}' for i in range(k) if i != 2]


def encode_index(program: Program) -> int:
    program = program.canonical()
    k = len(program.states)
    target_width, field, _ = _layout(program.arity, k)
    numbers = {state: i for i, state in enumerate(program.states)}

    body, shift = 0, 0
    for state in _live(k):
        for read in all_reads(program.arity):
            action = program.action(state, read)
            value = 0
            for bit in action.write:
                value = value << 1 | bit
            value = value << 2 | _MOVE_BITS[action.move]
            value = value << target_width | (numbers[action.target] - 2) % k
            if program.arity == 4:
                value = value << 1 | action.query
            body |= value << shift
            shift += field

    return pair_index(pair_index(program.arity == 4, k - 3), body)


def _decode(index: int) -> Optional[Program]:
    header, body = unpair(index)
    oracle, extra = unpair(header)
    if oracle > 1:
        return None
    arity, k = 3 + oracle, 3 + extra
    target_width, field, size = _layout(arity, k)
    if body >> size:
        return None

    states = [f'q{i}' for i in range(k)]
    transitions = {}
    for state in _live(k):
        for read in all_reads(arity):
            value = body & ((1 << field) - 1)
            body >>= field
            query = False
            if arity == 4:
                query, value = bool(value & 1), value >> 1
            target, value = value & ((1 << target_width) - 1), value >> target_width
            move, value = value & 3, value >> 2
            if move not in _MOVES or target >= k:
                return None
            write = tuple((value >> (arity - 1 - t)) & 1 for t in range(arity))
            transitions[state, read] = Action(write, _MOVES[move], states[(target + 2) % k], query)

    return Program(states, 'q0', 'q1', 'q2', transitions, arity, f'#{index:x}')


def decode_index(index: int) -> Program:
    if index < 0:
        raise ValueError(f'Program indices are natural numbers, got {index}.')
    program = _decode(index)
    return NOOP if program is None else program


def is_valid_index(index: int) -> bool:
    return index >= 0 and _decode(index) is not None


NOOP = _decode(0)
