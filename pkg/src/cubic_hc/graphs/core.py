"""
Graph Core - Validated construction of Graph values and basic structural queries.
"""

import logging
from collections import deque
from typing import Iterable, List, Sequence, Set, Tuple

from ..exceptions import (
    AcyclicGraphError,
    DuplicateEdgeError,
    LoopEdgeError,
    VertexOutOfRangeError,
)
from ..models import Edge, Graph

logger = logging.getLogger(__name__)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and return the canonical Graph.

    Raises:
        VertexOutOfRangeError: an endpoint is outside [0, n).
        LoopEdgeError: an edge joins a vertex to itself.
        DuplicateEdgeError: an unordered pair is listed twice.
    """
    seen: Set[Edge] = set()
    adjacency: List[List[int]] = [[] for _ in range(n)]
    for raw in edges:
        u, v = int(raw[0]), int(raw[1])
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRangeError(x, n)
        if u == v:
            raise LoopEdgeError(u)
        edge = (min(u, v), max(u, v))
        if edge in seen:
            raise DuplicateEdgeError(edge)
        seen.add(edge)
        adjacency[u].append(v)
        adjacency[v].append(u)

    return Graph(
        n=n,
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adjacency),
        edges=tuple(sorted(seen)),
    )


def girth(g: Graph) -> int:
    """Length of a shortest cycle, by breadth-first search from every vertex."""
    best = g.n + 1
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for x in g.adjacency[u]:
                if dist[x] < 0:
                    dist[x] = dist[u] + 1
                    parent[x] = u
                    queue.append(x)
                elif x != parent[u]:
                    best = min(best, dist[u] + dist[x] + 1)
    if best > g.n:
        raise AcyclicGraphError()
    return best


def boundary(g: Graph, vertices: Iterable[int]) -> Tuple[Edge, ...]:
    """Edges with exactly one endpoint in ``vertices``."""
    inside = set(vertices)
    return tuple(e for e in g.edges if (e[0] in inside) != (e[1] in inside))
