"""Named membership predicates for set-oracle runs."""
from typing import *

from ..errors import OracleError
from ..real import TapeView, EMPTY, decode_relation

Predicate = Callable[[TapeView], int]
_PREDICATES: Dict[str, Predicate] = {}


def register_predicate(name: str, func: Predicate):
    _PREDICATES[name] = func


def get_predicate(name: str) -> Predicate:
    try:
        return _PREDICATES[name]
    except KeyError:
        raise OracleError(f'No membership predicate named {name!r}.') from None


def ask(member: Predicate, view: TapeView) -> int:
    try:
        answer = int(member(view))
    except OracleError:
        raise
    except Exception as e:
        raise OracleError(f'Membership predicate failed on {view!r}: {e}') from e
    if answer not in (0, 1):
        raise OracleError(f'Membership predicate answered {answer}.')
    return answer


def _codes_well_order(view: TapeView) -> int:
    from ..eqrel.orders import is_well_order

    spec = view.as_spec()
    form = spec.periodic_form()
    if form is None or form[1] != (0,):
        raise OracleError('Only finitely supported relation codes can be tested for well-ordering.')
    bound = len(form[0]) + 1
    return int(is_well_order(decode_relation(spec, bound)))


register_predicate('cell0', lambda view: view.peek(0))
register_predicate('empty', lambda view: int(view.as_spec() == EMPTY))
register_predicate('well_order', _codes_well_order)
