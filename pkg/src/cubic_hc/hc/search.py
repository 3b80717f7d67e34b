"""
Hamilton Cycle Search - Exhaustive counting by edge-state backtracking.

Every edge is undecided, included or excluded. Decisions propagate through
degree constraints (a vertex with two included edges drops the rest; a vertex
with only two candidate edges takes both), and path endpoints are tracked so
that an inclusion closing a cycle shorter than n is refused on the spot.
"""

import logging
import time
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from ..exceptions import CountOverflowError, SearchTimeoutError
from ..models import Edge, Graph, HamiltonCount

logger = logging.getLogger(__name__)

UNDECIDED = 0
INCLUDED = 1
EXCLUDED = 2

INT64_MAX = 2**63 - 1
_CLOCK_INTERVAL = 256

CycleCallback = Callable[[FrozenSet[int]], None]


class _LimitReached(Exception):
    pass


class HamiltonSearch:
    """Mutable search state for one counting run over a fixed graph."""

    def __init__(
        self,
        g: Graph,
        per_edge: bool = False,
        budget: Optional[float] = None,
        on_cycle: Optional[CycleCallback] = None,
        limit: Optional[int] = None,
    ):
        self.g = g
        self.n = g.n
        self.edges: Tuple[Edge, ...] = g.edges
        index = g.edge_index()
        self.incident: List[List[int]] = [
            [index[(min(v, x), max(v, x))] for x in g.adjacency[v]] for v in range(g.n)
        ]
        self.lookup: Dict[Edge, int] = index

        self.state = [UNDECIDED] * len(self.edges)
        self.used = [0] * self.n
        self.open = [len(nbrs) for nbrs in g.adjacency]
        # end[v] is the far endpoint of the included path ending at v
        self.end = list(range(self.n))
        self.length = [0] * self.n
        self.included = 0

        self.trail: List[Tuple[int, ...]] = []
        self.queue: List[int] = []

        self.total = 0
        self.nodes = 0
        self.tally: Optional[List[int]] = [0] * len(self.edges) if per_edge else None
        self.budget = budget
        self.deadline = None if budget is None else time.monotonic() + budget
        self.on_cycle = on_cycle
        self.limit = limit

    # Decisions

    def _include(self, e: int) -> bool:
        if self.state[e] != UNDECIDED:
            return self.state[e] == INCLUDED
        u, v = self.edges[e]
        if self.used[u] >= 2 or self.used[v] >= 2:
            return False
        a, b = self.end[u], self.end[v]
        closes = a == v
        if closes and self.included + 1 != self.n:
            return False

        self.state[e] = INCLUDED
        self.used[u] += 1
        self.used[v] += 1
        self.open[u] -= 1
        self.open[v] -= 1
        self.included += 1
        self.trail.append((e,))
        self.queue.append(u)
        self.queue.append(v)

        if closes:
            return True
        self.trail.append((a, self.end[a], self.length[a]))
        self.trail.append((b, self.end[b], self.length[b]))
        joined = self.length[u] + self.length[v] + 1
        self.end[a], self.end[b] = b, a
        self.length[a] = self.length[b] = joined

        # the edge between the new endpoints would close a short cycle
        if joined + 1 < self.n:
            chord = self.lookup.get((min(a, b), max(a, b)))
            if chord is not None and chord != e and not self._exclude(chord):
                return False
        return True

    def _exclude(self, e: int) -> bool:
        if self.state[e] != UNDECIDED:
            return self.state[e] == EXCLUDED
        u, v = self.edges[e]
        self.state[e] = EXCLUDED
        self.open[u] -= 1
        self.open[v] -= 1
        self.trail.append((e,))
        self.queue.append(u)
        self.queue.append(v)
        return True

    def _propagate(self) -> bool:
        queue = self.queue
        while queue:
            x = queue.pop()
            if self.used[x] + self.open[x] < 2:
                queue.clear()
                return False
            if self.open[x] == 0:
                continue
            if self.used[x] == 2:
                action = self._exclude
            elif self.used[x] + self.open[x] == 2:
                action = self._include
            else:
                continue
            for e in self.incident[x]:
                if self.state[e] == UNDECIDED and not action(e):
                    queue.clear()
                    return False
        return True

    def _undo(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            entry = trail.pop()
            if len(entry) == 3:
                vertex, end, length = entry
                self.end[vertex] = end
                self.length[vertex] = length
                continue
            e = entry[0]
            u, v = self.edges[e]
            if self.state[e] == INCLUDED:
                self.used[u] -= 1
                self.used[v] -= 1
                self.included -= 1
            self.open[u] += 1
            self.open[v] += 1
            self.state[e] = UNDECIDED

    # Search

    def _branch_edge(self) -> Optional[int]:
        fallback = None
        for x in range(self.n):
            if self.open[x] == 0:
                continue
            if self.used[x] == 1:
                for e in self.incident[x]:
                    if self.state[e] == UNDECIDED:
                        return e
            elif fallback is None:
                fallback = x
        if fallback is None:
            return None
        for e in self.incident[fallback]:
            if self.state[e] == UNDECIDED:
                return e
        return None

    def _record(self) -> None:
        self.total += 1
        if self.total > INT64_MAX:
            raise CountOverflowError(self.total)
        if self.tally is not None or self.on_cycle is not None:
            cycle = frozenset(e for e, s in enumerate(self.state) if s == INCLUDED)
            if self.tally is not None:
                for e in cycle:
                    self.tally[e] += 1
            if self.on_cycle is not None:
                self.on_cycle(cycle)
        if self.limit is not None and self.total >= self.limit:
            raise _LimitReached()

    def _search(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % _CLOCK_INTERVAL == 0:
            if time.monotonic() > self.deadline:
                raise SearchTimeoutError(self.budget or 0.0, self.total)
        if self.included == self.n:
            self._record()
            return
        e = self._branch_edge()
        if e is None:
            return
        mark = len(self.trail)
        if self._include(e) and self._propagate():
            self._search()
        self._undo(mark)
        if self._exclude(e) and self._propagate():
            self._search()
        self._undo(mark)

    def run(self) -> HamiltonCount:
        started = time.monotonic()
        if self.n >= 3 and min(self.open) >= 2:
            self.queue.extend(range(self.n))
            if self._propagate():
                try:
                    self._search()
                except _LimitReached:
                    pass
        elapsed = time.monotonic() - started
        logger.debug(
            f"Search on n={self.n}: {self.total} cycles, {self.nodes} nodes, {elapsed:.3f}s"
        )
        per_edge = None
        if self.tally is not None:
            per_edge = {edge: self.tally[i] for i, edge in enumerate(self.edges)}
        return HamiltonCount(total=self.total, per_edge=per_edge, elapsed=elapsed, nodes=self.nodes)


def count_hamilton_cycles(
    g: Graph, per_edge: bool = False, budget: Optional[float] = None
) -> HamiltonCount:
    """Count the Hamilton cycles of ``g``, each undirected cycle once.

    Raises:
        SearchTimeoutError: ``budget`` seconds elapsed before the search finished.
        CountOverflowError: the count left the signed 64-bit range.
    """
    return HamiltonSearch(g, per_edge=per_edge, budget=budget).run()


def is_hamiltonian(g: Graph, budget: Optional[float] = None) -> bool:
    """True iff ``g`` has a Hamilton cycle; stops at the first one found."""
    return HamiltonSearch(g, budget=budget, limit=1).run().total > 0


def enumerate_hamilton_cycles(
    g: Graph, on_cycle: CycleCallback, budget: Optional[float] = None
) -> HamiltonCount:
    """Run the counter, handing each cycle's included edge ids to ``on_cycle``."""
    return HamiltonSearch(g, budget=budget, on_cycle=on_cycle).run()
