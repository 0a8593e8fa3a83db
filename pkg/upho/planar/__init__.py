from .schedule import MergeSchedule, make_schedule
from .construction import planar_construction, merge_pairs
from .embedding import check_embedding, find_embedding, embedded
from .merges import MergeClassification, classify_merges, planar_rgf_check
from .dot import to_dot
