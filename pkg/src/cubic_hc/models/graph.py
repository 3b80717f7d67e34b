"""
Graph Models - Immutable graph values, layered nanotube graphs and 4-cycle handles.
"""

from typing import Dict, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

Edge = Tuple[int, int]


class Graph(BaseModel):
    """Undirected simple graph on vertices 0..n-1.

    ``adjacency[v]`` is the sorted neighbour tuple of ``v`` and ``edges`` the
    lexicographically sorted list of pairs ``(u, v)`` with ``u < v``. Instances
    are built through :func:`cubic_hc.graphs.build_graph`, which validates and
    normalizes the input.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Vertex count")
    adjacency: Tuple[Tuple[int, ...], ...] = Field(..., description="Sorted neighbour lists")
    edges: Tuple[Edge, ...] = Field(..., description="Canonical edge list, u < v")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_cubic(self) -> bool:
        return all(len(nbrs) == 3 for nbrs in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edge_index(self) -> Dict[Edge, int]:
        """Map each canonical edge to its position in ``edges``."""
        return {e: i for i, e in enumerate(self.edges)}

    def to_networkx(self) -> nx.Graph:
        """Return a networkx copy with the same vertex ids."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class LayeredGraph(BaseModel):
    """A nanotube together with its layer cuts.

    ``cuts[i]`` holds the ``width`` edges joining layer ``i`` to layer ``i + 1``
    (layer 0 is the start cycle, layer ``length + 1`` the end cycle), ordered by
    spoke position.
    """

    model_config = ConfigDict(frozen=True)

    graph: Graph
    cuts: Tuple[Tuple[Edge, ...], ...] = Field(..., description="Edge cuts between layers")
    width: int = Field(..., ge=3, description="Nanotube width w")
    length: int = Field(..., ge=1, description="Number of internal layers k")


class FourCycleHandle(BaseModel):
    """Vertices of an induced 4-cycle, in cyclic order v1-v2-v3-v4."""

    model_config = ConfigDict(frozen=True)

    v1: int = Field(..., ge=0)
    v2: int = Field(..., ge=0)
    v3: int = Field(..., ge=0)
    v4: int = Field(..., ge=0)

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.v1, self.v2, self.v3, self.v4)
