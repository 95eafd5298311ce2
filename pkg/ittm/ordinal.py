"""
Ordinals below epsilon_0 in Cantor normal form.

An ordinal is a tuple of ``(exponent, coefficient)`` terms with strictly
descending exponents, the exponents being ordinals themselves. The empty tuple
is 0. Instances are immutable and canonical, so ``==`` and ``hash`` are
structural.
"""
from typing import *
from functools import total_ordering

from .errors import OrdinalSyntaxError

LESS, EQUAL, GREATER = -1, 0, 1


@total_ordering
class Ordinal:
    __slots__ = ('terms', '_hash')

    def __init__(self, terms: Iterable[Tuple['Ordinal', int]] = ()):
        terms = tuple(terms)
        for i, (exponent, coefficient) in enumerate(terms):
            if not isinstance(exponent, Ordinal):
                raise TypeError(f'Exponent must be an Ordinal, got {type(exponent).__name__}.')
            if coefficient < 1:
                raise ValueError(f"Can't build a term with coefficient {coefficient}.")
            if i and compare(terms[i - 1][0], exponent) != GREATER:
                raise ValueError('Exponents must be strictly descending.')

        self.terms = terms
        self._hash = hash(terms)

    @classmethod
    def of(cls, n: int) -> 'Ordinal':
        if n < 0:
            raise ValueError(f"Can't build an ordinal from {n}.")
        return cls(((ZERO, n),)) if n else ZERO

    @classmethod
    def omega_power(cls, exponent: Union[int, 'Ordinal'], coefficient: int = 1) -> 'Ordinal':
        if isinstance(exponent, int):
            exponent = cls.of(exponent)
        return cls(((exponent, coefficient),))

    def __eq__(self, other):
        if isinstance(other, int):
            other = Ordinal.of(other)
        return isinstance(other, Ordinal) and self.terms == other.terms

    def __lt__(self, other):
        if isinstance(other, int):
            other = Ordinal.of(other)
        return compare(self, other) == LESS

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = Ordinal.of(other)
        return add(self, other)

    def __bool__(self):
        return bool(self.terms)

    def __int__(self):
        if not self.is_finite:
            raise ValueError(f"Can't convert infinite ordinal {self} to int.")
        return self.terms[0][1] if self.terms else 0

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0])

    @property
    def finite_part(self) -> int:
        if self.terms and not self.terms[-1][0]:
            return self.terms[-1][1]
        return 0

    @property
    def limit_part(self) -> 'Ordinal':
        """The largest limit (or 0) not exceeding this ordinal."""
        if self.terms and not self.terms[-1][0]:
            return Ordinal(self.terms[:-1])
        return self

    def __str__(self):
        return format_cnf(self)

    def __repr__(self):
        return f'Ordinal({format_cnf(self)!r})'


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def compare(a: Ordinal, b: Ordinal) -> int:
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        order = compare(ea, eb)
        if order != EQUAL:
            return order
        if ca != cb:
            return LESS if ca < cb else GREATER

    if len(a.terms) == len(b.terms):
        return EQUAL
    return LESS if len(a.terms) < len(b.terms) else GREATER


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a

    lead, coefficient = b.terms[0]
    kept = []
    for exponent, c in a.terms:
        order = compare(exponent, lead)
        if order == GREATER:
            kept.append((exponent, c))
        elif order == EQUAL:
            coefficient += c
            break
        else:
            break

    return Ordinal(kept + [(lead, coefficient)] + list(b.terms[1:]))


def successor(a: Ordinal) -> Ordinal:
    return add(a, ONE)


def is_limit(a: Ordinal) -> bool:
    return bool(a.terms) and bool(a.terms[-1][0])


def block_limit(base: Ordinal, level: int) -> Ordinal:
    """
    Least ordinal of the form ``gamma + w^level`` above ``base``: the stage at which
    a loop accelerated at ``level`` ends.
    """
    if level < 1:
        raise ValueError(f'Level must be positive, got {level}.')
    return add(base, Ordinal.omega_power(level))


def format_cnf(a: Ordinal) -> str:
    if not a.terms:
        return '0'

    parts = []
    for exponent, coefficient in a.terms:
        if not exponent:
            parts.append(str(coefficient))
            continue

        if exponent == ONE:
            text = 'w'
        elif exponent.is_finite or exponent == OMEGA:
            text = f'w^{format_cnf(exponent)}'
        else:
            text = f'w^({format_cnf(exponent)})'

        if coefficient > 1:
            text += f'*{coefficient}'
        parts.append(text)

    return '+'.join(parts)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def expect(self, char: str):
        if self.peek() != char:
            found = self.peek() or 'end of input'
            raise OrdinalSyntaxError(f'expected {char!r}, found {found!r}', self.pos)
        self.pos += 1

    def natural(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise OrdinalSyntaxError('expected a natural number', start)
        return int(self.text[start:self.pos])

    def expression(self) -> Ordinal:
        result = self.term()
        while self.peek() == '+':
            self.pos += 1
            result = add(result, self.term())
        return result

    def term(self) -> Ordinal:
        char = self.peek()
        if char.isdigit():
            return Ordinal.of(self.natural())
        if char not in ('w', 'ω'):
            raise OrdinalSyntaxError(f'unexpected {char or "end of input"!r}', self.pos)

        self.pos += 1
        exponent = ONE
        if self.peek() == '^':
            self.pos += 1
            exponent = self.atom()

        coefficient = 1
        if self.peek() == '*':
            self.pos += 1
            coefficient = self.natural()

        return Ordinal.omega_power(exponent, coefficient) if coefficient else ZERO

    def atom(self) -> Ordinal:
        char = self.peek()
        if char.isdigit():
            return Ordinal.of(self.natural())
        if char in ('w', 'ω'):
            self.pos += 1
            return OMEGA
        if char == '(':
            self.pos += 1
            result = self.expression()
            self.expect(')')
            return result
        raise OrdinalSyntaxError(f'unexpected {char or "end of input"!r} in exponent', self.pos)


def parse_cnf(text: str) -> Ordinal:
    parser = _Parser(text)
    result = parser.expression()
    if parser.peek():
        raise OrdinalSyntaxError(f'trailing {parser.peek()!r}', parser.pos)
    return result


def as_ordinal(value: Union[int, str, Ordinal]) -> Ordinal:
    if isinstance(value, Ordinal):
        return value
    if isinstance(value, int):
        return Ordinal.of(value)
    return parse_cnf(value)
