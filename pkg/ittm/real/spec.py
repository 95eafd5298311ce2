from typing import *
from math import gcd

from ..errors import GeneratorError

Bits = Tuple[int, ...]


class RealSpec:
    """
    An infinite binary string given by a finite description.

    Equality and hashing are semantic: two specs describing the same real compare equal,
    so that tape bases can be shared by value.
    """

    def bit(self, n: int) -> int:
        raise NotImplementedError

    def periodic_form(self) -> Optional[Tuple[Bits, Bits]]:
        """``(prefix, period)`` if the real is eventually periodic, ``None`` otherwise."""
        raise NotImplementedError

    def key(self) -> tuple:
        raise NotImplementedError

    def literal(self) -> str:
        raise NotImplementedError

    def bits(self, stop: int) -> Bits:
        return tuple(self.bit(n) for n in range(stop))

    def shift_invariant(self, start: int, shift: int) -> bool:
        """Whether ``bit(n) == bit(n + shift)`` for every ``n >= start``."""
        form = self.periodic_form()
        if form is None:
            return False

        prefix, period = form
        stop = max(start, len(prefix)) + len(period)
        return all(self.bit(n) == self.bit(n + shift) for n in range(start, stop))

    def __eq__(self, other):
        return isinstance(other, RealSpec) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f'{type(self).__name__}({self.literal()!r})'


class FiniteSupport(RealSpec):
    __slots__ = ('ones',)

    def __init__(self, ones: Iterable[int] = ()):
        ones = frozenset(ones)
        if any(n < 0 for n in ones):
            raise ValueError("Can't place a 1 at a negative cell.")
        self.ones = ones

    def bit(self, n: int) -> int:
        return int(n in self.ones)

    def periodic_form(self) -> Tuple[Bits, Bits]:
        stop = max(self.ones) + 1 if self.ones else 0
        return self.bits(stop), (0,)

    def key(self) -> tuple:
        return 'fs', self.ones

    def literal(self) -> str:
        return 'fs{' + ','.join(map(str, sorted(self.ones))) + '}'


def _minimal_period(period: Bits) -> Bits:
    size = len(period)
    for p in range(1, size + 1):
        if size % p == 0 and period[:p] * (size // p) == period:
            return period[:p]
    return period


class EventuallyPeriodic(RealSpec):
    __slots__ = ('prefix', 'period')

    def __init__(self, prefix: Sequence[int], period: Sequence[int]):
        prefix, period = tuple(map(int, prefix)), tuple(map(int, period))
        if not period:
            raise ValueError('The period of an eventually periodic real must be nonempty.')
        if any(b not in (0, 1) for b in prefix + period):
            raise ValueError('Bits must be 0 or 1.')

        period = _minimal_period(period)
        # pull the prefix into the period while they overlap
        while prefix and prefix[-1] == period[-1]:
            prefix, period = prefix[:-1], period[-1:] + period[:-1]

        self.prefix = prefix
        self.period = period

    def bit(self, n: int) -> int:
        if n < len(self.prefix):
            return self.prefix[n]
        return self.period[(n - len(self.prefix)) % len(self.period)]

    def periodic_form(self) -> Tuple[Bits, Bits]:
        return self.prefix, self.period

    def key(self) -> tuple:
        if self.period == (0,):
            return 'fs', frozenset(i for i, b in enumerate(self.prefix) if b)
        return 'ep', self.prefix, self.period

    def literal(self) -> str:
        if self.period == (0,):
            return FiniteSupport(self.key()[1]).literal()
        return 'ep{' + ''.join(map(str, self.prefix)) + '|' + ''.join(map(str, self.period)) + '}'


def eventually_periodic(prefix: Sequence[int], period: Sequence[int]) -> RealSpec:
    """Builds the canonical spec, collapsing a zero period to finite support."""
    spec = EventuallyPeriodic(prefix, period)
    if spec.period == (0,):
        return FiniteSupport(spec.key()[1])
    return spec


class Generated(RealSpec):
    __slots__ = ('name', 'memo', '_func')

    def __init__(self, name: str):
        from .generators import get_generator

        self.name = name
        self._func = get_generator(name)
        self.memo: Dict[int, int] = {}

    def bit(self, n: int) -> int:
        try:
            return self.memo[n]
        except KeyError:
            pass

        try:
            value = int(self._func(n))
        except Exception as e:
            raise GeneratorError(f'Generator {self.name!r} failed at cell {n}: {e}') from e
        if value not in (0, 1):
            raise GeneratorError(f'Generator {self.name!r} returned {value} at cell {n}.')

        self.memo[n] = value
        return value

    def periodic_form(self) -> None:
        return None

    def key(self) -> tuple:
        return 'gen', self.name

    def literal(self) -> str:
        return 'gen{' + self.name + '}'


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


EMPTY = FiniteSupport()
