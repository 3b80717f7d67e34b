"""
planar_code - Reader and writer for plantri's binary graph format.

Layout: optional header ``>>planar_code<<``, then per graph one byte n
followed by n zero-terminated lists of 1-based neighbours in rotation order.
Only the one-byte variant (n <= 255) is supported; the rotation order is read
but not kept.
"""

import logging
from typing import BinaryIO, Iterable, List, Set, Union

from ..exceptions import (
    AsymmetricAdjacencyError,
    BadHeaderError,
    DuplicateEdgeError,
    TruncatedStreamError,
    UnsupportedSizeError,
    VertexOutOfRangeError,
)
from ..graphs import build_graph
from ..models import Edge, Graph

logger = logging.getLogger(__name__)

HEADER = b">>planar_code<<"


def read_planar_code(stream: Union[bytes, BinaryIO]) -> List[Graph]:
    """Decode every graph in a planar_code byte stream."""
    data = stream if isinstance(stream, (bytes, bytearray)) else stream.read()
    pos = 0
    if data.startswith(b">>"):
        close = data.find(b"<<")
        header = data[: close + 2] if close >= 0 else data[: len(HEADER)]
        if header != HEADER:
            raise BadHeaderError(bytes(header))
        pos = len(HEADER)

    graphs: List[Graph] = []
    while pos < len(data):
        index = len(graphs)
        n = data[pos]
        pos += 1
        if n == 0:
            raise UnsupportedSizeError(index)
        neighbours: List[List[int]] = []
        for _ in range(n):
            row: List[int] = []
            while True:
                if pos >= len(data):
                    raise TruncatedStreamError(index)
                x = data[pos]
                pos += 1
                if x == 0:
                    break
                if x > n:
                    raise VertexOutOfRangeError(x - 1, n)
                row.append(x - 1)
            neighbours.append(row)
        graphs.append(_to_graph(neighbours, index))

    logger.debug(f"Decoded {len(graphs)} graphs from {len(data)} bytes of planar_code")
    return graphs


def _to_graph(neighbours: List[List[int]], index: int) -> Graph:
    edges: Set[Edge] = set()
    for u, row in enumerate(neighbours):
        if len(set(row)) != len(row):
            dup = next(v for v in row if row.count(v) > 1)
            raise DuplicateEdgeError((min(u, dup), max(u, dup)))
        for v in row:
            if u not in neighbours[v]:
                raise AsymmetricAdjacencyError(u, v, index)
            edges.add((min(u, v), max(u, v)))
    return build_graph(len(neighbours), sorted(edges))


def write_planar_code(graphs: Iterable[Graph], sink: BinaryIO, header: bool = True) -> int:
    """Encode ``graphs`` to ``sink``; returns the number of graphs written."""
    if header:
        sink.write(HEADER)
    written = 0
    for g in graphs:
        if g.n > 255:
            raise UnsupportedSizeError(written)
        chunk = bytearray([g.n])
        for nbrs in g.adjacency:
            chunk.extend(v + 1 for v in nbrs)
            chunk.append(0)
        sink.write(bytes(chunk))
        written += 1
    return written
