from typing import *
import json
from functools import wraps

from joblib import Parallel, delayed, parallel_backend


def collect(func: Callable) -> Callable:
    @wraps(func)
    def wrapper(*args, **kwargs):
        return list(func(*args, **kwargs))

    return wrapper


def parallel_map(func: Callable, items: Iterable, n_jobs: int = 1, *args, **kwargs) -> list:
    """
    Apply ``func`` to every item, preserving the order of ``items``.
    ``args`` and ``kwargs`` are passed as additional arguments.
    """
    items = list(items)
    if n_jobs == 1:
        return [func(item, *args, **kwargs) for item in items]

    with parallel_backend('threading', n_jobs=n_jobs):
        return Parallel()(delayed(func)(item, *args, **kwargs) for item in items)


def save_json(obj, path):
    with open(path, 'w') as f:
        json.dump(obj, f, indent=2, sort_keys=True)


def load_json(path):
    with open(path, 'r') as f:
        return json.load(f)


def dump_json_line(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(',', ':'))
