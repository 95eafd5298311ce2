"""Brute force on finite relations, given as sets of pairs ``(n, m)`` read as ``n < m``."""
from typing import *
from itertools import permutations

import numpy as np

from ..errors import InadmissibleInput
from ..real import RealSpec, FiniteSupport, encode_relation, unpair

Pairs = AbstractSet[Tuple[int, int]]


def field(pairs: Pairs) -> Set[int]:
    return {n for pair in pairs for n in pair}


def is_linear(pairs: Pairs) -> bool:
    """Irreflexive, asymmetric, total and transitive on its field."""
    elements = field(pairs)
    if any(n == m or (m, n) in pairs for n, m in pairs):
        return False
    for n in elements:
        for m in elements:
            if n != m and (n, m) not in pairs and (m, n) not in pairs:
                return False
    return all((a, c) in pairs for a, b, c in permutations(elements, 3) if (a, b) in pairs and (b, c) in pairs)


def is_well_founded(pairs: Pairs) -> bool:
    """For a finite relation: no cycle, found by peeling off minimal elements."""
    remaining = field(pairs)
    while remaining:
        minimal = {m for m in remaining if not any((n, m) in pairs for n in remaining)}
        if not minimal:
            return False
        remaining -= minimal
    return True


def is_well_order(pairs: Pairs) -> bool:
    return is_linear(pairs) and is_well_founded(pairs)


def order_type(pairs: Pairs) -> int:
    """The order type of a finite well-order is the size of its field."""
    if not is_well_order(pairs):
        raise ValueError(f'{sorted(pairs)} is not a well-order.')
    return len(field(pairs))


def chain_pairs(elements: Sequence[int]) -> Set[Tuple[int, int]]:
    """``elements[0] < elements[1] < ..``"""
    return {(elements[i], elements[j]) for j in range(len(elements)) for i in range(j)}


def chain_code(n: int, elements: Sequence[int] = None) -> FiniteSupport:
    elements = range(n) if elements is None else elements
    if len(elements) != n:
        raise ValueError(f'A chain of length {n} needs {n} elements, got {len(elements)}.')
    return encode_relation(chain_pairs(elements))


def relation_of(x: RealSpec) -> Set[Tuple[int, int]]:
    """The relation coded by a finite-support real."""
    form = x.periodic_form()
    if form is None or form[1] != (0,):
        raise InadmissibleInput(f"Can't decode {x.literal()} as a finite relation.")
    return {unpair(k) for k, bit in enumerate(form[0]) if bit}


def random_relation(size: int, density: float = .5, linear: bool = False,
                    random_state: np.random.RandomState = None) -> Set[Tuple[int, int]]:
    """
    A random relation on ``{0, .., size - 1}``; with ``linear`` a random linear order of it.

    ``random_state`` defaults to ``np.random``'s global state.
    """
    random_state = np.random if random_state is None else random_state
    if linear:
        return chain_pairs([int(n) for n in random_state.permutation(size)])
    mask = random_state.random_sample((size, size)) < density
    return {(int(n), int(m)) for n, m in zip(*np.nonzero(mask))}


def random_linear_code(size: int, random_state: np.random.RandomState = None) -> FiniteSupport:
    return encode_relation(random_relation(size, linear=True, random_state=random_state))
