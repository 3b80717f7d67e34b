"""
Crossing Types - Bucket nanotube Hamilton cycles by how many spokes they use per cut.
"""

import logging
from collections import Counter
from typing import Dict, List, Optional

from ..exceptions import CutInvariantViolatedError, ValidationError
from ..models import EdgeUsage, HamiltonCount, LayeredGraph
from .search import enumerate_hamilton_cycles

logger = logging.getLogger(__name__)


def count_by_crossing_type(
    lg: LayeredGraph, budget: Optional[float] = None
) -> Dict[int, int]:
    """Map 2c to the number of Hamilton cycles using 2c edges of every cut.

    Raises:
        CutInvariantViolatedError: a cycle uses different (or odd) numbers of
            edges on different cuts.
    """
    index = lg.graph.edge_index()
    cut_ids: List[frozenset] = [
        frozenset(index[(min(u, v), max(u, v))] for u, v in cut) for cut in lg.cuts
    ]
    buckets: Counter = Counter()

    def classify(cycle: frozenset) -> None:
        crossings = tuple(len(cycle & cut) for cut in cut_ids)
        if len(set(crossings)) != 1 or crossings[0] % 2:
            raise CutInvariantViolatedError(crossings)
        buckets[crossings[0]] += 1

    result = enumerate_hamilton_cycles(lg.graph, classify, budget=budget)
    logger.debug(
        f"N({lg.width},{lg.length}): {result.total} cycles by type {dict(sorted(buckets.items()))}"
    )
    return dict(sorted(buckets.items()))


def classify_edges(count: HamiltonCount) -> EdgeUsage:
    """Split edges into those on every, no, or some Hamilton cycles."""
    if count.per_edge is None:
        raise ValidationError("Edge classification needs per-edge tallies")
    always, never, sometimes = [], [], []
    for edge, hits in sorted(count.per_edge.items()):
        if hits == 0:
            never.append(edge)
        elif hits == count.total:
            always.append(edge)
        else:
            sometimes.append(edge)
    return EdgeUsage(always=tuple(always), never=tuple(never), sometimes=tuple(sometimes))
