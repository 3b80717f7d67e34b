"""
Edge Lists - Plain-text graph format: a header line "n m", then m lines "u v".
"""

import logging
from typing import List, TextIO, Tuple, Union

from ..exceptions import InconsistentCountsError, ParseError
from ..graphs import build_graph
from ..models import Graph

logger = logging.getLogger(__name__)


def _ints(line: str, line_number: int) -> Tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(line_number, line)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(line_number, line) from None


def parse_edge_list(text: Union[str, bytes]) -> Graph:
    """Parse edge-list text. Blank lines are ignored; bytes must be ASCII."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as e:
            line_number = text[: e.start].count(b"\n") + 1
            raise ParseError(
                line_number, "", reason=f"non-ASCII byte 0x{text[e.start]:02x}"
            ) from None
    lines = [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1)]
    lines = [(i, line) for i, line in lines if line]
    if not lines:
        raise ParseError(1, "", reason="missing 'n m' header")
    header_no, header = lines[0]
    n, m = _ints(header, header_no)
    if n < 0 or m < 0:
        raise ParseError(header_no, header, reason="negative count")
    edges: List[Tuple[int, int]] = [_ints(line, i) for i, line in lines[1:]]
    if len(edges) != m:
        raise InconsistentCountsError(m, len(edges))
    return build_graph(n, edges)


def read_edge_list(source: TextIO) -> Graph:
    return parse_edge_list(source.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, sink: TextIO) -> None:
    sink.write(format_edge_list(g))
