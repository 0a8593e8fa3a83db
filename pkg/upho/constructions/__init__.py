from .trees import chain, k_ary_tree, bowtie
from .grid import (
    GridSpec, grid_construction, grid_filter_map, grid_vertex, grid_point, elementary_values,
    grid_rational,
)
from .bconstruction import BConstructionSpec, b_construction, b_rational
from .theorem12 import theorem12_construction, theorem12_rational
