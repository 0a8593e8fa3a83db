from .presentation import (
    MonoidPresentation, parse_presentation, load_presentation, stern_presentation, s_family,
    t_relation,
)
from .congruence import (
    UnionFind, CongruenceTable, CancellationReport, congruence_classes, monoid_poset,
    left_cancellation_check,
)
from .separation import SeparationReport, distinct_rgf_check
