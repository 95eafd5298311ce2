"""
Registry of named bit generators.

Generated reals only refer to generators by name so that traces and test cases
can be replayed. Besides the builtins, manifests listed in ``ITTM_GEN_PATH``
register new names for parametrized builtin kinds.
"""
import os
import logging
from typing import *
from pathlib import Path

from more_itertools import always_iterable

from ..default_params import GEN_PATH_ENV
from ..errors import GeneratorError
from ..utils import load_json
from .pairing import unpair

logger = logging.getLogger(__name__)

BitFunction = Callable[[int], int]
_REGISTRY: Dict[str, BitFunction] = {}
_loaded_paths: Set[str] = set()


def _is_prime(n: int) -> int:
    if n < 2:
        return 0
    return int(all(n % d for d in range(2, int(n ** .5) + 1)))


def _successor_chain(step: int) -> BitFunction:
    # bit <n, m> is set iff n = m + step
    def func(k):
        n, m = unpair(k)
        return int(n == m + step)

    return func


def _modular(modulus: int, residues: Iterable[int]) -> BitFunction:
    residues = frozenset(r % modulus for r in residues)
    return lambda n: int(n % modulus in residues)


def _support(ones: Iterable[int]) -> BitFunction:
    ones = frozenset(ones)
    return lambda n: int(n in ones)


KINDS = {
    'chain': lambda step: _successor_chain(step),
    'modular': lambda modulus, residues: _modular(modulus, residues),
    'support': lambda ones: _support(ones),
}

BUILTINS = {
    'zero': lambda n: 0,
    'desc_chain': _successor_chain(1),
    'asc_chain': _successor_chain(-1),
    'evens': _modular(2, [0]),
    'primes': _is_prime,
}


def register_generator(name: str, func: BitFunction):
    if name in _REGISTRY and _REGISTRY[name] is not func:
        raise GeneratorError(f'Generator {name!r} is already registered.')
    _REGISTRY[name] = func


def register_kind(name: str, kind: str, **params):
    if kind not in KINDS:
        raise GeneratorError(f'Unknown generator kind {kind!r} for {name!r}.')
    try:
        func = KINDS[kind](**params)
    except TypeError as e:
        raise GeneratorError(f'Bad parameters for generator {name!r}: {e}') from e
    register_generator(name, func)


def load_manifest(path: Union[str, Path]):
    """Registers every entry of a json manifest: ``[{"name": ..., "kind": ..., **params}, ...]``."""
    for entry in always_iterable(load_json(path), base_type=dict):
        entry = dict(entry)
        name, kind = entry.pop('name'), entry.pop('kind')
        register_kind(name, kind, **entry)
        logger.debug('Registered generator %s (%s) from %s', name, kind, path)


def _load_env_manifests():
    for path in filter(None, os.environ.get(GEN_PATH_ENV, '').split(os.pathsep)):
        if path not in _loaded_paths:
            _loaded_paths.add(path)
            load_manifest(path)


def get_generator(name: str) -> BitFunction:
    if name not in _REGISTRY:
        _load_env_manifests()
    try:
        return _REGISTRY[name]
    except KeyError:
        raise GeneratorError(f'No generator named {name!r} is registered.') from None


def registered_names() -> List[str]:
    _load_env_manifests()
    return sorted(_REGISTRY)


for _name, _func in BUILTINS.items():
    register_generator(_name, _func)
