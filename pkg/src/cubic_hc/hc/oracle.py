"""Unpruned reference counter used to cross-check the backtracking search."""

from ..exceptions import BadParametersError
from ..models import Graph


def count_hamilton_cycles_naive(g: Graph) -> int:
    """Count Hamilton cycles by extending directed paths from every start vertex.

    Each undirected cycle is met once per start vertex and direction, so the
    raw total is divided by 2n.
    """
    n = g.n
    if n < 3:
        raise BadParametersError(f"Hamilton cycles need n >= 3, got n={n}")
    closed = 0
    for start in range(n):
        visited = [False] * n
        visited[start] = True

        def extend(v: int, depth: int) -> int:
            if depth == n:
                return 1 if g.has_edge(v, start) else 0
            found = 0
            for x in g.adjacency[v]:
                if not visited[x]:
                    visited[x] = True
                    found += extend(x, depth + 1)
                    visited[x] = False
            return found

        closed += extend(start, 1)
    return closed // (2 * n)
