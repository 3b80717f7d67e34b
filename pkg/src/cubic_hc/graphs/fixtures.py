"""
Graph Fixtures - Named graphs with known Hamilton-cycle counts.

``base38`` is built from its labelled description; the 64- and 56-vertex
graphs ship as edge-list data files under ``cubic_hc/data/fixtures``.
"""

import logging
from importlib import resources
from typing import Callable, Dict, List, Tuple

from ..exceptions import UnknownFixtureError
from ..models import Edge, FourCycleHandle, Graph
from .core import build_graph

logger = logging.getLogger(__name__)

_C_LABELS = (1, 3, 7, 9, 11, 13, 17, 19)


def _a(x: int) -> int:
    return x % 20


def _b(x: int) -> int:
    return 20 + (x % 20) // 2


def _c(x: int) -> int:
    return 30 + _C_LABELS.index(x)


def base38() -> Graph:
    """Cyclically 4-edge-connected cubic planar graph with four Hamilton cycles.

    Ids: a_x = x for x in 0..19; b_x = 20 + x/2 for even x; c_x = 30..37 for
    x in (1, 3, 7, 9, 11, 13, 17, 19) in that order.
    """
    edges: List[Edge] = []
    for x in range(20):
        edges.append((_a(x), _a(x + 1)))
    for x in range(0, 20, 2):
        edges.append((_b(x), _b(x + 2)))
        edges.append((_b(x), _a(x)))
    for x in _C_LABELS:
        edges.append((_c(x), _a(x)))
    edges.append((_a(5), _a(15)))
    edges += [(_c(7), _c(9)), (_c(9), _c(11)), (_c(11), _c(13)), (_c(7), _c(13))]
    edges += [(_c(17), _c(19)), (_c(19), _c(1)), (_c(1), _c(3)), (_c(17), _c(3))]
    return build_graph(38, edges)


# The two extendable 4-cycles of base38; v1v2 and v3v4 lie on every Hamilton cycle.
BASE38_HANDLES: Tuple[FourCycleHandle, ...] = (
    FourCycleHandle(v1=_c(7), v2=_c(13), v3=_c(11), v4=_c(9)),
    FourCycleHandle(v1=_c(17), v2=_c(3), v3=_c(1), v4=_c(19)),
)


def _load_data_file(name: str) -> Callable[[], Graph]:
    def load() -> Graph:
        from ..io.edge_list import read_edge_list

        path = resources.files("cubic_hc").joinpath("data", "fixtures", f"{name}.txt")
        with path.open("r", encoding="ascii") as handle:
            graph = read_edge_list(handle)
        logger.info(f"📦 Loaded fixture {name}: n={graph.n}, m={graph.m}")
        return graph

    return load


_FIXTURES: Dict[str, Callable[[], Graph]] = {
    "base38": base38,
    "cc5_64_a": _load_data_file("cc5_64_a"),
    "cc5_64_b": _load_data_file("cc5_64_b"),
    "fullerene56": _load_data_file("fullerene56"),
}


def fixture_names() -> Tuple[str, ...]:
    return tuple(_FIXTURES)


def fixture(name: str) -> Graph:
    """Return the named fixture graph.

    Raises:
        UnknownFixtureError: ``name`` is not registered.
    """
    try:
        loader = _FIXTURES[name]
    except KeyError:
        raise UnknownFixtureError(name, fixture_names()) from None
    return loader()
