from .spec import RealSpec, FiniteSupport, EventuallyPeriodic, Generated, eventually_periodic, EMPTY
from .view import TapeView, limsup_delta, join_views, with_periodic_tail, tails_agree
from .pairing import pair_index, unpair, encode_relation, relation_bit, decode_relation
from .generators import register_generator, register_kind, load_manifest, registered_names
from .literals import parse_real, format_real
