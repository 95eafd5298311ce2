import re
from typing import *

from ..errors import RealLiteralError
from .spec import RealSpec, FiniteSupport, Generated, eventually_periodic

_FS = re.compile(r'fs\{\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\}')
_EP = re.compile(r'ep\{([01]*)\|([01]+)\}')
_GEN = re.compile(r'gen\{([A-Za-z_][\w.-]*)\}')


def parse_real(text: str) -> RealSpec:
    """Parses ``fs{1,3,8}``, ``ep{10|01}`` or ``gen{name}``."""
    text = text.strip()

    match = _FS.fullmatch(text)
    if match:
        body = match.group(1).strip()
        return FiniteSupport(int(n) for n in body.split(',')) if body else FiniteSupport()

    match = _EP.fullmatch(text)
    if match:
        prefix, period = match.groups()
        return eventually_periodic(list(map(int, prefix)), list(map(int, period)))

    match = _GEN.fullmatch(text)
    if match:
        return Generated(match.group(1))

    raise RealLiteralError(f"Can't parse real literal {text!r}.")


def format_real(x: RealSpec) -> str:
    return x.literal()
