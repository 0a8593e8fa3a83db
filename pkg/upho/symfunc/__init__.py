from .partitions import Partition, partitions, dominates, is_partition, format_partition
from .ehrenborg import (
    Basis, SymmetricFunctionDeg, ehrenborg_monomial, ehrenborg_by_chains, ehrenborg_compositions,
)
from .schur import kostka, schur_expand, monomial_from_schur, is_schur_positive, PositivityReport
from .davydov import davydov_check
