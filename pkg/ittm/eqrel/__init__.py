from .orders import field, is_linear, is_well_founded, is_well_order, order_type, chain_pairs, chain_code, \
    relation_of, random_relation, random_linear_code
from .relations import Relation, rel_eq, rel_E0, rel_Eset, rel_Eck, rel_isoWO, get_relation, RELATIONS, \
    enumerated_set, computed_orders, eck_supremum, classical_output
from .verify import Report, verify_reduction, load_samples, MODES
