from typing import *

Pattern = Tuple[Optional[int], ...]


class Line(NamedTuple):
    state: str
    # None reads any bit / writes back the bit read
    read: Pattern
    write: Pattern
    move: str
    target: str
    query: bool = False
    lineno: int = 0

    def key(self) -> tuple:
        return self.state, self.read, self.write, self.move, self.target, self.query


class AsmSource(NamedTuple):
    lines: Tuple[Line, ...]
    start: Optional[str] = None
    limit: Optional[str] = None
    halt: Optional[str] = None
    default: Optional[str] = None
    tapes: Optional[int] = None
    name: str = ''

    def __eq__(self, other):
        if not isinstance(other, AsmSource):
            return NotImplemented
        return (self.start, self.limit, self.halt, self.default, self.tapes, self.name) == \
               (other.start, other.limit, other.halt, other.default, other.tapes, other.name) and \
               [line.key() for line in self.lines] == [line.key() for line in other.lines]

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    @property
    def states(self) -> List[str]:
        """Every state mentioned, in order of first mention."""
        seen = {}
        for name in (self.start, self.limit, self.halt, self.default):
            if name is not None:
                seen.setdefault(name)
        for line in self.lines:
            seen.setdefault(line.state)
            seen.setdefault(line.target)
        return list(seen)
