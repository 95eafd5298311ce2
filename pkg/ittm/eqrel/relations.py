"""
Equivalence relations on reals, decided on the host.

Each relation states the class of reals it decides; asking about anything
else raises ``InadmissibleInput``.
"""
from typing import *
from dataclasses import dataclass, field

from ..default_params import ECK_TIME, ECK_FIELD_BOUND
from ..errors import InadmissibleInput
from ..machine import Configuration, step
from ..real import RealSpec, TapeView, unpair, tails_agree
from ..stdlib import universe_programs
from ..stdlib.dovetail import Universe
from .orders import relation_of, is_well_order, order_type, is_linear, field as field_of

Predicate = Callable[[RealSpec, RealSpec], bool]


def eventually_periodic(x: RealSpec) -> bool:
    return x.periodic_form() is not None


def finite_support(x: RealSpec) -> bool:
    form = x.periodic_form()
    return form is not None and form[1] == (0,)


def any_real(x: RealSpec) -> bool:
    return True


@dataclass
class Relation:
    name: str
    predicate: Predicate
    admissible: Callable[[RealSpec], bool]
    # what the admissible class is, in words
    domain: str
    truncation: Dict[str, int] = field(default_factory=dict)

    def check(self, x: RealSpec):
        if not self.admissible(x):
            raise InadmissibleInput(f'{self.name} is decided on {self.domain} reals only, got {x.literal()}.')

    def __call__(self, x: RealSpec, y: RealSpec) -> bool:
        self.check(x)
        self.check(y)
        return bool(self.predicate(x, y))

    def to_json(self) -> dict:
        return {'name': self.name, 'domain': self.domain, 'truncation': dict(self.truncation)}


def rel_eq() -> Relation:
    return Relation('eq', lambda x, y: x == y, eventually_periodic, 'eventually periodic')


def _almost_equal(x: RealSpec, y: RealSpec) -> bool:
    start = max(len(x.periodic_form()[0]), len(y.periodic_form()[0]))
    return tails_agree(x, y, start)


def rel_E0() -> Relation:
    return Relation('E0', _almost_equal, eventually_periodic, 'eventually periodic')


def enumerated_set(x: RealSpec) -> FrozenSet[FrozenSet[int]]:
    """The columns ``x_n(m) = x(<n, m>)`` as a set; the empty column is always among them."""
    columns: Dict[int, Set[int]] = {}
    for n, m in relation_of(x):
        columns.setdefault(n, set()).add(m)
    return frozenset(map(frozenset, columns.values())) | {frozenset()}


def rel_Eset() -> Relation:
    return Relation('Eset', lambda x, y: enumerated_set(x) == enumerated_set(y), finite_support, 'finite-support')


def classical_output(program, x: RealSpec, time: int) -> TapeView:
    """The output tape after ``time`` steps, or at halting if that comes first."""
    config = Configuration.initial(program, x)
    for _ in range(time):
        if config.state == program.halt:
            break
        config = step(program, config)
    return config.output


def computed_orders(x: RealSpec, universe: Universe, time: int = ECK_TIME,
                    bound: int = ECK_FIELD_BOUND) -> Set[int]:
    """Sizes of the linear orders on fields below ``bound`` the universe writes within ``time`` steps."""
    sizes = set()
    for program in universe_programs(universe):
        output = classical_output(program, x, time)
        pairs = {unpair(k) for k in output.ones(time)}
        if all(n < bound and m < bound for n, m in pairs) and is_linear(pairs):
            sizes.add(len(field_of(pairs)))
    return sizes


def eck_supremum(x: RealSpec, universe: Universe, time: int = ECK_TIME, bound: int = ECK_FIELD_BOUND) -> int:
    return max(computed_orders(x, universe, time, bound), default=0)


def rel_Eck(universe: Universe, time: int = ECK_TIME, bound: int = ECK_FIELD_BOUND) -> Relation:
    """Same computed ordinals: finitely many orders of finite type, so compared by their supremum."""
    programs = universe_programs(universe)

    def predicate(x, y):
        return eck_supremum(x, programs, time, bound) == eck_supremum(y, programs, time, bound)

    truncation = {'universe': len(programs), 'time': time, 'bound': bound}
    return Relation('Eck', predicate, any_real, 'all', truncation)


def _codes_well_order(x: RealSpec) -> bool:
    return finite_support(x) and is_well_order(relation_of(x))


def rel_isoWO() -> Relation:
    def predicate(x, y):
        return order_type(relation_of(x)) == order_type(relation_of(y))

    return Relation('isoWO', predicate, _codes_well_order, 'finite well-order codes')


RELATIONS = {
    'eq': rel_eq,
    'E0': rel_E0,
    'Eset': rel_Eset,
    'Eck': rel_Eck,
    'isoWO': rel_isoWO,
}


def get_relation(name: str, **params) -> Relation:
    if name not in RELATIONS:
        raise KeyError(f"Unknown relation {name!r}, choose one of {sorted(RELATIONS)}.")
    return RELATIONS[name](**params)
