"""File formats and the corpus survey."""

from .edge_list import format_edge_list, parse_edge_list, read_edge_list, write_edge_list
from .planar_code import HEADER, read_planar_code, write_planar_code
from .survey import (
    CSV_COLUMNS,
    GraphOutcome,
    aggregate,
    format_survey_table,
    survey,
    survey_async,
    survey_graph,
    write_survey_csv,
)

__all__ = [
    # Edge lists
    "read_edge_list", "write_edge_list", "parse_edge_list", "format_edge_list",

    # planar_code
    "HEADER", "read_planar_code", "write_planar_code",

    # Survey
    "CSV_COLUMNS", "GraphOutcome", "survey", "survey_async", "survey_graph", "aggregate",
    "write_survey_csv", "format_survey_table",
]
