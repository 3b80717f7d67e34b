"""
Cyclic Edge Connectivity - Search for small cycle-separating edge cuts.

A cut is cycle-separating when deleting it leaves at least two components
that each contain a cycle. A graph is cyclically k-edge-connected when no such
cut has fewer than k edges; graphs without any cycle-separating cut (K4, for
instance) are reported as cyclically k-edge-connected for every k.
"""

import logging
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx

from ..exceptions import DisconnectedGraphError, KTooLargeError
from ..models import Edge, Graph
from .core import boundary

logger = logging.getLogger(__name__)

MAX_CC_K = 6


def is_cycle_separating(g: nx.Graph, cut: Iterable[Edge]) -> bool:
    """True if removing ``cut`` leaves two or more components containing a cycle."""
    residual = nx.restricted_view(g, [], list(cut))
    cyclic = 0
    for component in nx.connected_components(residual):
        edges = sum(residual.degree(v) for v in component) // 2
        if edges >= len(component):
            cyclic += 1
            if cyclic >= 2:
                return True
    return False


def _short_cycle_cuts(g: Graph, nxg: nx.Graph, k: int) -> Optional[Tuple[Edge, ...]]:
    for cycle in nx.simple_cycles(nxg, length_bound=k - 1):
        cut = boundary(g, cycle)
        if len(cut) < k and is_cycle_separating(nxg, cut):
            return cut
    return None


def _bond_scan(g: Graph, nxg: nx.Graph, k: int) -> Optional[Tuple[Edge, ...]]:
    # Every minimum cycle-separating cut is a bond, so it is some set R plus
    # one bridge of G - R; R is enumerated in increasing edge order.
    # R is removed from one working copy and restored on the way back up.
    edges = g.edges
    index: Dict[Edge, int] = g.edge_index()
    work = nx.Graph(nxg)
    checked = 0

    def splits_cycles(u: int, v: int) -> bool:
        # work is connected and uv is a bridge, so exactly two sides remain
        work.remove_edge(u, v)
        side = nx.node_connected_component(work, u)
        side_edges = sum(work.degree(x) for x in side) // 2
        other_nodes = work.number_of_nodes() - len(side)
        other_edges = work.number_of_edges() - side_edges
        work.add_edge(u, v)
        return side_edges >= len(side) and other_edges >= other_nodes

    def scan(start: int, removed: List[int]) -> Optional[Tuple[Edge, ...]]:
        nonlocal checked
        last = removed[-1] if removed else -1
        for u, v in list(nx.bridges(work)):
            idx = index[(min(u, v), max(u, v))]
            if idx <= last:
                continue
            checked += 1
            if splits_cycles(u, v):
                return tuple(edges[i] for i in removed + [idx])
        if len(removed) >= k - 2:
            return None
        for i in range(start, len(edges)):
            u, v = edges[i]
            work.remove_edge(u, v)
            found = scan(i + 1, removed + [i]) if nx.is_connected(work) else None
            work.add_edge(u, v)
            if found is not None:
                return found
        return None

    result = scan(0, [])
    logger.debug(f"Bond scan for k={k} tested {checked} candidate cuts")
    return result


def find_cycle_separating_cut(
    g: Graph, k: int, max_k: int = MAX_CC_K
) -> Optional[Tuple[Edge, ...]]:
    """Return a cycle-separating cut with fewer than ``k`` edges, or None.

    Raises:
        KTooLargeError: ``k`` exceeds ``max_k``.
        DisconnectedGraphError: ``g`` is not connected.
    """
    if k > max_k:
        raise KTooLargeError(k, max_k)
    nxg = g.to_networkx()
    if g.n == 0 or not nx.is_connected(nxg):
        raise DisconnectedGraphError(nx.number_connected_components(nxg))
    if k <= 1:
        return None

    cut = _short_cycle_cuts(g, nxg, k)
    if cut is None:
        cut = _bond_scan(g, nxg, k)
    if cut is not None:
        logger.debug(f"Cycle-separating cut of size {len(cut)}: {cut}")
    return cut


def is_cyclically_k_edge_connected(g: Graph, k: int, max_k: int = MAX_CC_K) -> bool:
    """True iff no edge set with fewer than ``k`` edges is cycle-separating."""
    return find_cycle_separating_cut(g, k, max_k=max_k) is None
