"""
Corpus Survey - Hamilton-cycle statistics per vertex count over a graph corpus.

Graphs are counted one per worker; results are gathered and aggregated in
corpus order, so the rows do not depend on worker scheduling.
"""

import asyncio
import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, NamedTuple, Optional, Sequence, TextIO

from ..exceptions import SearchTimeoutError, ValidationError
from ..graphs import MAX_CC_K, is_cyclically_k_edge_connected
from ..hc import count_hamilton_cycles
from ..models import Graph, SurveyRow

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("n", "graphs", "hamiltonian", "min", "max", "argmax_id")


class GraphOutcome(NamedTuple):
    """Result of surveying one corpus graph."""

    passed: bool
    count: Optional[int]
    timed_out: bool


def survey_graph(
    g: Graph, cc_filter: Optional[int], budget: Optional[float], max_cc_k: int = MAX_CC_K
) -> GraphOutcome:
    if cc_filter is not None and not is_cyclically_k_edge_connected(g, cc_filter, max_k=max_cc_k):
        return GraphOutcome(passed=False, count=None, timed_out=False)
    try:
        total = count_hamilton_cycles(g, budget=budget).total
        return GraphOutcome(passed=True, count=total, timed_out=False)
    except SearchTimeoutError:
        return GraphOutcome(passed=True, count=None, timed_out=True)


def aggregate(corpus: Sequence[Graph], outcomes: Sequence[GraphOutcome]) -> List[SurveyRow]:
    """Fold per-graph outcomes into one row per vertex count, in corpus order."""
    rows: Dict[int, SurveyRow] = {}
    for graph_id, (g, outcome) in enumerate(zip(corpus, outcomes)):
        if not outcome.passed:
            continue
        row = rows.setdefault(g.n, SurveyRow(n=g.n))
        row.graph_count += 1
        if outcome.timed_out:
            row.timeouts += 1
            logger.warning(f"⏱️ Graph #{graph_id} (n={g.n}) exceeded its search budget")
            continue
        count = outcome.count or 0
        if count == 0:
            continue
        row.hamiltonian_count += 1
        if row.min_hc is None or count < row.min_hc:
            row.min_hc = count
        if row.max_hc is None or count > row.max_hc:
            row.max_hc = count
            row.argmax_id = graph_id
    return [rows[n] for n in sorted(rows)]


async def survey_async(
    corpus: Sequence[Graph],
    cc_filter: Optional[int] = None,
    budget: Optional[float] = None,
    workers: int = 1,
    max_cc_k: int = MAX_CC_K,
) -> List[SurveyRow]:
    """Survey ``corpus``, fanning graphs out to ``workers`` processes."""
    for graph_id, g in enumerate(corpus):
        if not g.is_cubic():
            raise ValidationError(f"Corpus graph #{graph_id} is not cubic")
    logger.info(f"🚀 Surveying {len(corpus)} graphs (cc_filter={cc_filter}, workers={workers})")

    if workers <= 1 or len(corpus) <= 1:
        outcomes = [survey_graph(g, cc_filter, budget, max_cc_k) for g in corpus]
    else:
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            tasks = [
                loop.run_in_executor(pool, survey_graph, g, cc_filter, budget, max_cc_k)
                for g in corpus
            ]
            outcomes = list(await asyncio.gather(*tasks))

    rows = aggregate(corpus, outcomes)
    logger.info(f"✅ Survey finished: {len(rows)} rows")
    return rows


def survey(
    corpus: Sequence[Graph],
    cc_filter: Optional[int] = None,
    budget: Optional[float] = None,
    workers: int = 1,
    max_cc_k: int = MAX_CC_K,
) -> List[SurveyRow]:
    """Blocking wrapper around :func:`survey_async`."""
    return asyncio.run(
        survey_async(
            corpus, cc_filter=cc_filter, budget=budget, workers=workers, max_cc_k=max_cc_k
        )
    )


def write_survey_csv(rows: Sequence[SurveyRow], sink: TextIO) -> None:
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.csv_fields())


def format_survey_table(rows: Sequence[SurveyRow]) -> str:
    """Fixed-width table for terminal output."""
    header = (
        f"{'n':>5} {'graphs':>8} {'hamiltonian':>12} {'min':>8} {'max':>8} "
        f"{'argmax_id':>10} {'timeouts':>9}"
    )
    lines = [header]
    for row in rows:
        fields = row.csv_fields()
        lines.append(
            f"{fields[0]:>5} {fields[1]:>8} {fields[2]:>12} {fields[3]!s:>8} "
            f"{fields[4]!s:>8} {fields[5]!s:>10} {row.timeouts:>9}"
        )
    return "\n".join(lines)
