"""
cubic-hc command line - generators, counters, closed forms, transfer systems
and corpus surveys.
"""

import logging
import sys
from pathlib import Path
from typing import Any, List, Optional, Sequence, Tuple

import click
import pydantic

from .config import ToolkitConfig
from .exceptions import (
    BadParametersError,
    HCError,
    NoRealDominantRootError,
    SearchTimeoutError,
)
from .formulas import n5_count, rl_count, schwenk_count
from .graphs import (
    find_cycle_separating_cut,
    fixture,
    fixture_names,
    generalized_petersen,
    nanotube,
    ring_of_ladders,
)
from .hc import count_by_crossing_type, count_hamilton_cycles
from .io import (
    HEADER,
    format_edge_list,
    format_survey_table,
    parse_edge_list,
    read_planar_code,
    survey,
    write_survey_csv,
)
from .models import Graph, LayeredGraph
from .transfer import (
    build_transfer_system,
    growth_constants,
    typed_count,
)

logger = logging.getLogger(__name__)

FAMILIES = ("petersen", "rl", "nanotube")


class ToolkitGroup(click.Group):
    """Click group mapping toolkit errors to exit codes (1 validation, 2 timeout)."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except SearchTimeoutError as e:
            click.echo(f"⏱️ {e}", err=True)
            ctx.exit(2)
        except HCError as e:
            click.echo(f"❌ {e}", err=True)
            ctx.exit(1)

    def main(self, *args: Any, standalone_mode: bool = True, **kwargs: Any) -> Any:
        if not standalone_mode:
            return super().main(*args, standalone_mode=False, **kwargs)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.ClickException as e:
            e.show()
            sys.exit(1)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(1)
        sys.exit(rv if isinstance(rv, int) else 0)


def _parse_params(raw: str, expected: int) -> Tuple[int, ...]:
    try:
        values = tuple(int(x) for x in raw.split(","))
    except ValueError:
        message = f"--params must be comma-separated integers, got '{raw}'"
        raise BadParametersError(message) from None
    if len(values) != expected:
        raise BadParametersError(f"--params needs {expected} values, got '{raw}'")
    return values


def _family_graph(family: str, raw: str) -> Tuple[Graph, Optional[LayeredGraph]]:
    a, b = _parse_params(raw, 2)
    if family == "petersen":
        return generalized_petersen(a, b), None
    if family == "rl":
        return ring_of_ladders(a, b), None
    layered = nanotube(a, b)
    return layered.graph, layered


def _load_graphs(path: Path) -> List[Graph]:
    data = path.read_bytes()
    if data.startswith(HEADER) or path.suffix in (".pc", ".plc", ".planar_code"):
        return read_planar_code(data)
    return [parse_edge_list(data)]


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text, encoding="ascii")
        click.echo(f"💾 Wrote {out}")


def _budget(ctx: click.Context, budget: Optional[float]) -> Optional[float]:
    config: ToolkitConfig = ctx.obj
    return budget if budget is not None else config.budget_seconds


@click.group(cls=ToolkitGroup)
@click.option("--log-level", "log_level", default="WARNING", help="Logging level")
@click.option("--workers", "workers", default=1, type=int, help="Survey worker processes")
@click.option("--budget", "budget", default=None, type=float, help="Default per-graph budget (s)")
@click.option("--max-tile-width", "max_tile_width", default=13, type=int, help="Tile width cap")
@click.option("--max-cc-k", "max_cc_k", default=6, type=int, help="Cyclic connectivity k cap")
@click.pass_context
def cli(
    ctx: click.Context,
    log_level: str,
    workers: int,
    budget: Optional[float],
    max_tile_width: int,
    max_cc_k: int,
) -> None:
    """Exact Hamilton-cycle enumeration for cubic planar graph families."""
    try:
        config = ToolkitConfig(
            log_level=log_level.upper(),
            workers=workers,
            budget_seconds=budget,
            max_tile_width=max_tile_width,
            max_cc_k=max_cc_k,
        )
    except pydantic.ValidationError as e:
        raise click.UsageError(f"Invalid option: {e.errors()[0]['msg']}") from None
    logging.basicConfig(
        level=config.log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    ctx.obj = config


@cli.command()
@click.option("--family", "family", type=click.Choice(FAMILIES), required=True)
@click.option("--params", "params", required=True, help="Comma-separated parameters, e.g. 10,2")
@click.option("--out", "out", type=click.Path(path_type=Path), default=None)
def gen(family: str, params: str, out: Optional[Path]) -> None:
    """Generate a family member as an edge list."""
    graph, _ = _family_graph(family, params)
    _emit(format_edge_list(graph), out)


@cli.command()
@click.argument(
    "file", type=click.Path(exists=True, dir_okay=False, path_type=Path), required=False
)
@click.option("--family", "family", type=click.Choice(FAMILIES), default=None)
@click.option("--params", "params", default=None)
@click.option("--per-edge", "per_edge", is_flag=True, help="Print per-edge cycle counts")
@click.option("--by-type", "by_type", is_flag=True, help="Bucket nanotube cycles by crossing type")
@click.option("--budget", "budget", type=float, default=None, help="Search budget in seconds")
@click.pass_context
def count(
    ctx: click.Context,
    file: Optional[Path],
    family: Optional[str],
    params: Optional[str],
    per_edge: bool,
    by_type: bool,
    budget: Optional[float],
) -> None:
    """Count Hamilton cycles of a graph file or a generated family member."""
    if (file is None) == (family is None):
        raise click.UsageError("Give either FILE or --family/--params")
    budget = _budget(ctx, budget)

    layered = None
    if family is not None:
        if params is None:
            raise click.UsageError("--family needs --params")
        graph, layered = _family_graph(family, params)
        graphs = [graph]
    else:
        graphs = _load_graphs(file)  # type: ignore[arg-type]

    if by_type and layered is None:
        raise click.UsageError("--by-type needs --family nanotube")

    for graph in graphs:
        result = count_hamilton_cycles(graph, per_edge=per_edge, budget=budget)
        click.echo(f"n={graph.n} hamilton_cycles={result.total} elapsed={result.elapsed:.3f}s")
        if per_edge and result.per_edge is not None:
            for (u, v), hits in result.per_edge.items():
                click.echo(f"{u} {v} {hits}")
    if by_type and layered is not None:
        for crossing, hits in count_by_crossing_type(layered, budget=budget).items():
            click.echo(f"type {crossing}: {hits}")


@cli.command()
@click.argument("name", type=click.Choice(["petersen", "rl", "nanotube5"]))
@click.argument("args", nargs=-1, type=int, required=True)
def formula(name: str, args: Sequence[int]) -> None:
    """Evaluate a closed form: petersen M | rl M K | nanotube5 K."""
    arity = {"petersen": 1, "rl": 2, "nanotube5": 1}[name]
    if len(args) != arity:
        raise click.UsageError(f"'{name}' takes {arity} integer argument(s)")
    if name == "petersen":
        value = schwenk_count(args[0])
    elif name == "rl":
        value = rl_count(args[0], args[1])
    else:
        value = n5_count(args[0])
    click.echo(str(value))


@cli.command()
@click.option("--width", "width", type=int, required=True)
@click.option("--pairs", "pairs", type=int, required=True, help="Half-crossing c (Type 2c)")
@click.option("--length", "length", type=int, required=True, help="Internal layers k")
@click.option("--show-system", "show_system", is_flag=True, help="Print M, v_s and v_f")
@click.option("--full", "full", is_flag=True, help="Index by partitions instead of orbits")
@click.pass_context
def tm(
    ctx: click.Context, width: int, pairs: int, length: int, show_system: bool, full: bool
) -> None:
    """Typed nanotube count from the transfer matrix."""
    config: ToolkitConfig = ctx.obj
    max_width = config.max_tile_width
    system = build_transfer_system(width, pairs, reduced=not full, max_width=max_width)
    if show_system:
        click.echo("index: " + " ".join(p.label() for p in system.index))
        click.echo("M:")
        for row in system.matrix:
            click.echo("  " + " ".join(str(x) for x in row))
        click.echo("v_s: " + " ".join(str(x) for x in system.v_s))
        click.echo("v_f: " + " ".join(str(x) for x in system.v_f))
    value = typed_count(width, pairs, length, reduced=not full, max_width=max_width)
    click.echo(f"N({width},{length}) type {2 * pairs}: {value}")


@cli.command()
@click.option("--width", "width", type=int, required=True)
@click.option("--pairs", "pairs", type=int, required=True)
@click.pass_context
def asym(ctx: click.Context, width: int, pairs: int) -> None:
    """Characteristic polynomial and growth constants of a transfer matrix."""
    config: ToolkitConfig = ctx.obj
    try:
        constants = growth_constants(
            width, pairs, sample_k=config.asymptotic_sample_k, max_width=config.max_tile_width
        )
    except NoRealDominantRootError as e:
        click.echo(f"⚠️ no real dominant root; complex modulus {e.modulus:.9f} (flagged)")
        return
    click.echo("char_poly: " + " ".join(str(x) for x in constants.char_poly))
    click.echo(f"dominant_root: {constants.dominant_root:.9f}")
    click.echo(f"prefactor_estimate: {constants.prefactor_estimate:.9f} (k={constants.sample_k})")
    click.echo(f"period: {constants.period}")
    growth = constants.dominant_root ** (1.0 / (2 * width * constants.period))
    click.echo(f"per_vertex_growth: {growth:.9f}")


@cli.command(name="survey")
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--cc", "cc", type=int, default=None, help="Keep cyclically K-edge-connected graphs")
@click.option("--budget", "budget", type=float, default=None, help="Per-graph budget in seconds")
@click.option("--csv", "csv_path", type=click.Path(path_type=Path), default=None)
@click.pass_context
def survey_cmd(
    ctx: click.Context,
    file: Path,
    cc: Optional[int],
    budget: Optional[float],
    csv_path: Optional[Path],
) -> None:
    """Hamilton-cycle statistics per order over a planar_code corpus."""
    config: ToolkitConfig = ctx.obj
    rows = survey(
        _load_graphs(file),
        cc_filter=cc,
        budget=_budget(ctx, budget),
        workers=config.workers,
        max_cc_k=config.max_cc_k,
    )
    click.echo(format_survey_table(rows))
    if csv_path is not None:
        with csv_path.open("w", encoding="ascii", newline="") as sink:
            write_survey_csv(rows, sink)
        click.echo(f"💾 Wrote {csv_path}")


@cli.command(name="check-cc")
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--k", "k", type=int, required=True)
@click.pass_context
def check_cc(ctx: click.Context, file: Path, k: int) -> None:
    """Test cyclic k-edge-connectivity of every graph in FILE."""
    config: ToolkitConfig = ctx.obj
    for graph in _load_graphs(file):
        cut = find_cycle_separating_cut(graph, k, max_k=config.max_cc_k)
        if cut is None:
            click.echo(f"n={graph.n} cyclically-{k}-edge-connected: true")
        else:
            edges = " ".join(f"{u}-{v}" for u, v in cut)
            click.echo(f"n={graph.n} cyclically-{k}-edge-connected: false (cut {edges})")


@cli.command(name="fixture")
@click.argument("name", type=click.Choice(fixture_names()))
@click.option("--out", "out", type=click.Path(path_type=Path), default=None)
def fixture_cmd(name: str, out: Optional[Path]) -> None:
    """Write a named fixture graph as an edge list."""
    _emit(format_edge_list(fixture(name)), out)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
