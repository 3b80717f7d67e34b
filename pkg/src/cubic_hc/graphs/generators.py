"""
Graph Generators - Generalized Petersen graphs, rings of ladders, nanotubes
and the ladder extension of an induced 4-cycle.

Vertex numbering is fixed per family so that generated graphs, data files
and test expectations stay stable.
"""

import logging
from typing import List, Optional

from ..exceptions import (
    BadParametersError,
    HypothesisViolatedError,
    NotInducedFourCycleError,
)
from ..models import Edge, FourCycleHandle, Graph, LayeredGraph
from .core import build_graph

logger = logging.getLogger(__name__)


def generalized_petersen(m: int, k: int) -> Graph:
    """P(m, k): outer cycle u_0..u_{m-1} (ids 0..m-1), inner v_i = m + i.

    Edges u_i u_{i+1}, v_i v_{i+k} and spokes u_i v_i, indices mod m.
    """
    if m < 3 or not 1 <= k or 2 * k >= m:
        raise BadParametersError(f"P(m,k) needs m >= 3 and 1 <= k < m/2, got m={m}, k={k}")
    edges: List[Edge] = []
    for i in range(m):
        edges.append((i, (i + 1) % m))
        edges.append((m + i, m + (i + k) % m))
        edges.append((i, m + i))
    return build_graph(2 * m, edges)


def ring_of_ladders(m: int, k: int) -> Graph:
    """RL(m, k): m k-ladders joined in a ring.

    Ladder L_i owns ids 2k*i .. 2k*i + 2k - 1: rail vertex u_j is
    ``2k*i + j - 1`` and v_j is ``2k*i + k + j - 1`` for j = 1..k. The ring
    edges join u_1 and u_k of L_i to v_1 and v_k of L_{i+1}.
    """
    if m < 2 or k < 2:
        raise BadParametersError(f"RL(m,k) needs m >= 2 and k >= 2, got m={m}, k={k}")

    def u(i: int, j: int) -> int:
        return 2 * k * (i % m) + j - 1

    def v(i: int, j: int) -> int:
        return 2 * k * (i % m) + k + j - 1

    edges: List[Edge] = []
    for i in range(m):
        for j in range(1, k + 1):
            edges.append((u(i, j), v(i, j)))
            if j < k:
                edges.append((u(i, j), u(i, j + 1)))
                edges.append((v(i, j), v(i, j + 1)))
        edges.append((u(i, 1), v(i + 1, 1)))
        edges.append((u(i, k), v(i + 1, k)))
    return build_graph(2 * m * k, edges)


def nanotube(w: int, k: int) -> LayeredGraph:
    """N(w, k): start w-cycle, k internal 2w-cycles and an end w-cycle.

    Numbering is layer-major: start cycle s_j = j; internal layer i (1..k)
    has v_j = w + 2w(i-1) + j and w_j = v_j + w; end cycle t_j = w + 2wk + j.
    Internal layers carry v_j w_j and v_j w_{j+1}; spokes join s_j to v_j of
    layer 1, w_j of layer i to v_j of layer i+1, and w_j of layer k to t_j.
    ``cuts[i]`` lists the spokes between layer i and layer i+1 by position j.
    """
    if w < 3 or k < 1:
        raise BadParametersError(f"N(w,k) needs w >= 3 and k >= 1, got w={w}, k={k}")

    def vid(i: int, j: int) -> int:
        return w + 2 * w * (i - 1) + j % w

    def wid(i: int, j: int) -> int:
        return vid(i, j) + w

    end = w + 2 * w * k
    edges: List[Edge] = []
    for j in range(w):
        edges.append((j, (j + 1) % w))
        edges.append((end + j, end + (j + 1) % w))
        for i in range(1, k + 1):
            edges.append((vid(i, j), wid(i, j)))
            edges.append((vid(i, j), wid(i, j + 1)))

    cuts: List[List[Edge]] = [[(j, vid(1, j)) for j in range(w)]]
    for i in range(1, k):
        cuts.append([(wid(i, j), vid(i + 1, j)) for j in range(w)])
    cuts.append([(wid(k, j), end + j) for j in range(w)])
    for cut in cuts:
        edges.extend(cut)

    graph = build_graph(2 * w * (k + 1), edges)
    return LayeredGraph(
        graph=graph,
        cuts=tuple(tuple(cut) for cut in cuts),
        width=w,
        length=k,
    )


def validate_four_cycle(g: Graph, c: FourCycleHandle) -> None:
    """Raise NotInducedFourCycleError unless ``c`` is an induced 4-cycle of cubic vertices."""
    vs = c.as_tuple()
    if len(set(vs)) != 4:
        raise NotInducedFourCycleError(vs, "repeated vertex")
    for x in vs:
        if x >= g.n:
            raise NotInducedFourCycleError(vs, f"vertex {x} not in graph")
        if g.degree(x) != 3:
            raise NotInducedFourCycleError(vs, f"vertex {x} has degree {g.degree(x)}")
    for a, b in zip(vs, vs[1:] + vs[:1]):
        if not g.has_edge(a, b):
            raise NotInducedFourCycleError(vs, f"edge {a}-{b} missing")
    if g.has_edge(c.v1, c.v3) or g.has_edge(c.v2, c.v4):
        raise NotInducedFourCycleError(vs, "cycle has a chord")


def ladder_extension(g: Graph, c: FourCycleHandle, verify: bool = False) -> Graph:
    """Lengthen the ladder through ``c`` by one rung pair.

    Edge v1v2 becomes the path v1-x1-x2-v2 and v3v4 becomes v3-y2-y1-v4, with
    new rungs x1y1 and x2y2. New ids: x1 = n, x2 = n+1, y1 = n+2, y2 = n+3.
    With ``verify`` the graph minus v1v2 and v3v4 must be non-Hamiltonian, which
    makes the extension preserve the Hamilton-cycle count.
    """
    validate_four_cycle(g, c)
    removed = {(min(c.v1, c.v2), max(c.v1, c.v2)), (min(c.v3, c.v4), max(c.v3, c.v4))}

    if verify:
        from ..hc import is_hamiltonian

        reduced = build_graph(g.n, [e for e in g.edges if e not in removed])
        if is_hamiltonian(reduced):
            raise HypothesisViolatedError(c.as_tuple())

    x1, x2, y1, y2 = g.n, g.n + 1, g.n + 2, g.n + 3
    edges = [e for e in g.edges if e not in removed]
    edges += [
        (c.v1, x1), (x1, x2), (x2, c.v2),
        (c.v3, y2), (y2, y1), (y1, c.v4),
        (x1, y1), (x2, y2),
    ]
    extended = build_graph(g.n + 4, edges)
    logger.debug(f"Ladder extension on {c.as_tuple()}: {g.n} -> {extended.n} vertices")
    return extended


def successor_handle(g: Graph, previous_n: Optional[int] = None) -> FourCycleHandle:
    """The 4-cycle x1-x2-y2-y1 created by the latest ladder extension of ``g``.

    ``previous_n`` is the order before extension (defaults to ``g.n - 4``).
    Its vertical edges x1x2 and y2y1 are the ones a further extension replaces.
    """
    base = g.n - 4 if previous_n is None else previous_n
    handle = FourCycleHandle(v1=base, v2=base + 1, v3=base + 3, v4=base + 2)
    validate_four_cycle(g, handle)
    return handle
