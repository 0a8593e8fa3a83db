from .model import RankedPoset, new_poset, build_poset, truncate, to_json, from_json, dumps, loads
from .ops import order_filter, filter_with_map, product
from .iso import IsoReport, are_isomorphic, canonical_form, certificate
from .checks import (
    UphoReport, NoMeet, NonUnique, verify_upho, meet, unique_min_check, is_meet_semilattice,
    down_set,
)
