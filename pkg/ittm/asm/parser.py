import re
from typing import *

from ..errors import AsmSyntaxError
from .source import AsmSource, Line, Pattern

DIRECTIVES = ('name', 'start', 'limit', 'halt', 'default', 'tapes')
_TOKEN = re.compile(r'\s*(?:(?P<arrow>->)|(?P<punct>[()])|(?P<word>[A-Za-z0-9_.$\-]+))')
_STATE = re.compile(r'[A-Za-z0-9_.$]+')


def _tokens(text: str, lineno: int) -> List[Tuple[str, int]]:
    tokens, position = [], 0
    while position < len(text):
        if not text[position:].strip():
            break
        match = _TOKEN.match(text, position)
        if match is None:
            column = len(text) - len(text[position:].lstrip()) + 1
            raise AsmSyntaxError(f'unexpected character {text[column - 1]!r}', lineno, column)
        token = match.group(match.lastgroup)
        tokens.append((token, match.start(match.lastgroup) + 1))
        position = match.end()
    return tokens


class _Cursor:
    def __init__(self, tokens: List[Tuple[str, int]], lineno: int, width: int):
        self.tokens, self.lineno, self.width = tokens, lineno, width
        self.index = 0

    def error(self, message: str) -> AsmSyntaxError:
        column = self.tokens[self.index][1] if self.index < len(self.tokens) else self.width + 1
        return AsmSyntaxError(message, self.lineno, column)

    def peek(self) -> Optional[str]:
        return self.tokens[self.index][0] if self.index < len(self.tokens) else None

    def take(self, expected: str = None) -> str:
        token = self.peek()
        if token is None or (expected is not None and token != expected):
            raise self.error(f'expected {expected!r}' if expected else 'unexpected end of line')
        self.index += 1
        return token

    def state(self) -> str:
        token = self.peek()
        if token is None or not _STATE.fullmatch(token):
            raise self.error('expected a state name')
        self.index += 1
        return token

    def bits(self) -> Pattern:
        self.take('(')
        result = []
        while self.peek() != ')':
            token = self.peek()
            if token is None or any(c not in '01_' for c in token):
                raise self.error('expected 0, 1 or _')
            result.extend(None if c == '_' else int(c) for c in token)
            self.index += 1
        self.take(')')
        if not result:
            raise self.error('empty bit pattern')
        return tuple(result)


def _directive(text: str, lineno: int, values: Dict[str, Any]):
    parts = text[1:].split()
    if not parts or parts[0] not in DIRECTIVES:
        raise AsmSyntaxError(f'unknown directive {text.split()[0]!r}', lineno, 1)
    key = parts[0]
    if len(parts) != 2:
        raise AsmSyntaxError(f'@{key} takes exactly one value', lineno, len(parts[0]) + 2)
    if key in values:
        raise AsmSyntaxError(f'@{key} is given twice', lineno, 1)

    value = parts[1]
    column = text.index(value, len(key) + 1) + 1
    if key == 'tapes':
        if value not in ('3', '4'):
            raise AsmSyntaxError('@tapes must be 3 or 4', lineno, column)
        value = int(value)
    elif key != 'name' and not _STATE.fullmatch(value):
        raise AsmSyntaxError(f'bad state name {value!r}', lineno, column)
    values[key] = value


def _transition(text: str, lineno: int) -> Line:
    cursor = _Cursor(_tokens(text, lineno), lineno, len(text))
    state = cursor.state()
    read = cursor.bits()
    cursor.take('->')
    cursor.take('write')
    write = cursor.bits()
    if len(write) != len(read):
        raise cursor.error(f'write pattern has {len(write)} bits, the read pattern has {len(read)}')

    cursor.take('move')
    cursor.take('(')
    move = cursor.peek()
    if move not in ('L', 'R', 'S'):
        raise cursor.error('expected L, R or S')
    cursor.index += 1
    cursor.take(')')
    cursor.take('goto')
    target = cursor.state()

    query = False
    if cursor.peek() == 'query':
        cursor.index += 1
        query = True
    if cursor.peek() is not None:
        raise cursor.error(f'unexpected {cursor.peek()!r}')
    return Line(state, read, write, move, target, query, lineno)


def parse(text: str) -> AsmSource:
    """Parses assembly text; raises ``AsmSyntaxError`` with the line and column of the first problem."""
    values, lines = {}, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        content = raw.split('#', 1)[0].rstrip()
        if not content.strip():
            continue
        if content.lstrip().startswith('@'):
            _directive(content.strip(), lineno, values)
        else:
            lines.append(_transition(content, lineno))

    return AsmSource(tuple(lines), **values)


def _pattern(bits: Pattern) -> str:
    return ' '.join('_' if b is None else str(b) for b in bits)


def format_line(line: Line) -> str:
    text = f'{line.state} ({_pattern(line.read)}) -> write({_pattern(line.write)}) move({line.move}) goto {line.target}'
    return text + ' query' if line.query else text


def format(source: AsmSource) -> str:
    """Canonical text: directives first, then one transition per line."""
    header = [f'@{key} {getattr(source, key)}' for key in DIRECTIVES if getattr(source, key) not in (None, '')]
    return '\n'.join(header + [format_line(line) for line in source.lines]) + '\n'
