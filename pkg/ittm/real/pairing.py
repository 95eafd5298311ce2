"""Cantor pairing, shared by every program and oracle that reads relation codes."""
from typing import *
from math import isqrt

from .spec import RealSpec, FiniteSupport


def pair_index(n: int, m: int) -> int:
    if n < 0 or m < 0:
        raise ValueError(f"Can't pair negative numbers: {n}, {m}.")
    return (n + m) * (n + m + 1) // 2 + m


def unpair(k: int) -> Tuple[int, int]:
    if k < 0:
        raise ValueError(f"Can't unpair {k}.")
    d = (isqrt(8 * k + 1) - 1) // 2
    m = k - d * (d + 1) // 2
    return d - m, m


def encode_relation(pairs: Iterable[Tuple[int, int]]) -> FiniteSupport:
    return FiniteSupport(pair_index(n, m) for n, m in pairs)


def relation_bit(x: RealSpec, n: int, m: int) -> int:
    return x.bit(pair_index(n, m))


def decode_relation(x: RealSpec, field_bound: int) -> Set[Tuple[int, int]]:
    """The pairs of the coded relation with both coordinates below ``field_bound``."""
    return {(n, m) for n in range(field_bound) for m in range(field_bound) if relation_bit(x, n, m)}
