from .schedule import (
    start_page,
    fourth_page,
    fourth_page_map,
    d3_table,
    d7_table,
    height_one_integer,
    height_one_integer_map,
    hilbert_ring,
    comparison_target,
    comparison_map,
    eighth_page_classes,
)
from .differentials import DifferentialTable
from .turning import PageGroup, page_at, degree_filters, candidate_degrees, verify_degreewise_iso
from .survival import survival_certificate, evenness_and_torsion, collapse_certificate, generation_check
from .comparison import comparison_injectivity

__all__ = [
    "start_page",
    "fourth_page",
    "fourth_page_map",
    "d3_table",
    "d7_table",
    "height_one_integer",
    "height_one_integer_map",
    "hilbert_ring",
    "comparison_target",
    "comparison_map",
    "eighth_page_classes",
    "DifferentialTable",
    "PageGroup",
    "page_at",
    "degree_filters",
    "candidate_degrees",
    "verify_degreewise_iso",
    "survival_certificate",
    "evenness_and_torsion",
    "collapse_certificate",
    "generation_check",
    "comparison_injectivity",
]
