"""
Command line entry point.

    swatchlink invariants --pattern kp --invariants mva,det
    swatchlink table --columns k,p,kp
    swatchlink verify --tiles k,p --fuzz-cases 100
    swatchlink export --pattern k --export pd --out k.pd
    swatchlink import k.pd --from pd

Errors are printed as one line, `error: <kind>: <message>`, and exit with
2 for unusable input and 1 for failures while building or computing.
`verify` and `properties` exit with 1 when a check failed.
"""

import functools
import json
import sys
from typing import List, Optional

import click
import pandas as pd

from swatchlink.config import load_config_from_json
from swatchlink.constants import EXPORT_FORMATS
from swatchlink.exceptions import (
    CodeParseError,
    FormatNotApplicableError,
    PatternSyntaxError,
    PolynomialParseError,
    SwatchlinkError,
    UnknownColumnError,
    UnknownPrimitiveError,
)
from swatchlink.grammar.catalog import TileCatalog, default_catalog
from swatchlink.grammar.composition import build
from swatchlink.grammar.parser import parse
from swatchlink.grammar.reference import ReferenceTables, knit_calibration
from swatchlink.helpers.env import load_dotenv
from swatchlink.helpers.logger import Logger
from swatchlink.invariants.properties import swatch_properties_report
from swatchlink.invariants.report import compute_report, render_reports
from swatchlink.pipelines.pipeline_context import PipelineContext
from swatchlink.pipelines.verify import VerifyPipeline
from swatchlink.pydantic import ValidationError
from swatchlink.schemas.run_config import (
    DET_CONVENTIONS,
    FABRIC_FACES,
    JONES_CONVENTIONS,
    OUTPUT_FORMATS,
    RunConfig,
)
from swatchlink.simplifier.budget import moves_from_json
from swatchlink.simplifier.search import brunnian_check, simplify
from swatchlink.topology.codes import export_code, import_code
from swatchlink.topology.dehn_fill import dehn_fill
from swatchlink.topology.diagram import PlanarDiagram
from swatchlink.topology.reidemeister import replay_moves
from swatchlink.topology.tangle import TorusTangle, tangle_from_json, tangle_to_json

USAGE_ERRORS = (
    PatternSyntaxError,
    UnknownPrimitiveError,
    UnknownColumnError,
    CodeParseError,
    PolynomialParseError,
    FormatNotApplicableError,
)


def _fail(kind: str, message: str, code: int):
    click.echo(f"error: {kind}: {message}", err=True)
    sys.exit(code)


def handle_errors(command):
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ValidationError as e:
            reasons = "; ".join(error["msg"] for error in e.errors())
            _fail("invalid-config", reasons, 2)
        except USAGE_ERRORS as e:
            _fail(e.kind, str(e), 2)
        except SwatchlinkError as e:
            _fail(e.kind, str(e), 1)

    return wrapper


def _names(value: Optional[str]) -> Optional[List[str]]:
    if value is None:
        return None
    return [name.strip() for name in value.split(",") if name.strip()]


def run_options(command):
    """Options shared by every command that builds or computes"""
    options = [
        click.option("--catalog", "catalog_path", type=click.Path()),
        click.option("--budget-crossings", type=int, help="Extra search crossings."),
        click.option("--budget-nodes", type=int, help="Nodes the search may visit."),
        click.option("--seed", type=int, help="Seed of the fuzzing checks."),
        click.option("--det-convention", type=click.Choice(DET_CONVENTIONS)),
        click.option("--jones-convention", type=click.Choice(JONES_CONVENTIONS)),
        click.option("--fabric-face", type=click.Choice(FABRIC_FACES)),
        click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS)),
        click.option("--out", type=click.Path(), help="Write to a file, not stdout."),
        click.option("--verbose", is_flag=True, default=None, help="Log to stderr."),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def make_config(**overrides) -> RunConfig:
    return RunConfig(**load_config_from_json(overrides))


def _catalog(config: RunConfig) -> TileCatalog:
    return default_catalog(config.catalog_path)


def _calibration(catalog: TileCatalog, config: RunConfig):
    if "k" not in catalog:
        return None
    return knit_calibration(catalog, fabric_face=config.fabric_face)


def _emit(text: str, out: Optional[str]):
    if out is None:
        click.echo(text)
        return
    with open(out, "w", encoding="utf-8") as f:
        f.write(text if text.endswith("\n") else text + "\n")


def _build(pattern: str, catalog: TileCatalog) -> TorusTangle:
    tangle = build(parse(pattern, catalog), catalog)
    return TorusTangle(tangle.strands, tangle.columns, pattern)


@click.group()
def cli():
    """Knitted swatches as links: build, compute, verify and export."""
    load_dotenv()


@cli.command()
@click.option("--pattern", required=True, help='Swatch pattern, e.g. "k*l p".')
@click.option("--invariants", help="Comma separated invariant names, or all.")
@run_options
@handle_errors
def invariants(pattern, invariants, out, **options):
    """Invariants of the Dehn filling of one pattern."""
    config = make_config(pattern=pattern, invariants=_names(invariants), **options)
    catalog = _catalog(config)
    logger = Logger(save_logs=config.save_logs, verbose=config.verbose)
    diagram = dehn_fill(_build(pattern, catalog), config.fabric_face)
    report = compute_report(
        diagram,
        pattern,
        config.invariants,
        jones_convention=config.jones_convention,
        calibrate=_calibration(catalog, config),
        logger=logger,
    )
    _emit(render_reports([report], config.rendering, config.det_convention), out)


def resolve_columns(names: Optional[List[str]], tables: ReferenceTables, catalog):
    """
    (column name, pattern) pairs. A name is looked up as a printed column,
    then as a printed pattern, then parsed as a pattern of its own.
    """
    if names is None:
        return [(c.name, c.pattern) for c in tables.columns() if c.pattern is not None]
    resolved = []
    for name in names:
        column = tables.find(name)
        if column is not None:
            if column.pattern is None:
                raise UnknownColumnError(name)
            resolved.append((column.name, column.pattern))
            continue
        try:
            parse(name, catalog)
        except (PatternSyntaxError, UnknownPrimitiveError):
            raise UnknownColumnError(name)
        resolved.append((name, name))
    return resolved


@cli.command()
@click.option("--columns", help="Comma separated column names or patterns.")
@run_options
@handle_errors
def table(columns, out, **options):
    """MVA, V and det rows of the invariant tables, with external placeholders."""
    config = make_config(columns=_names(columns), **options)
    catalog = _catalog(config)
    logger = Logger(save_logs=config.save_logs, verbose=config.verbose)
    calibrate = _calibration(catalog, config)
    reports = []
    tables = ReferenceTables.load()
    for name, pattern in resolve_columns(config.columns, tables, catalog):
        diagram = dehn_fill(_build(pattern, catalog), config.fabric_face)
        reports.append(
            compute_report(
                diagram,
                name,
                ["mva", "jones", "det"],
                jones_convention=config.jones_convention,
                calibrate=calibrate,
                logger=logger,
            )
        )
    _emit(render_reports(reports, config.rendering, config.det_convention), out)


@cli.command()
@click.option("--tiles", help="Comma separated tiles, all stitch tiles by default.")
@click.option(
    "--tables", "verify_tables", is_flag=True, default=None, help="Check the tables."
)
@click.option("--fuzz-cases", type=int, help="Number of random move sequences.")
@click.option("--fuzz-moves", type=int, help="Moves per random sequence.")
@run_options
@handle_errors
def verify(tiles, out, **options):
    """Conjecture, determinant, Torres, cyclic and invariance checks."""
    config = make_config(tiles=_names(tiles), **options)
    logger = Logger(save_logs=config.save_logs, verbose=config.verbose)
    context = PipelineContext(config, _catalog(config))
    results = VerifyPipeline(context, logger).run()
    _emit(results.to_json() if config.rendering == "json" else results.render(), out)
    if not results.passed:
        sys.exit(1)


@cli.command()
@click.option("--pattern", required=True)
@click.option(
    "--export", "export_format", required=True, type=click.Choice(EXPORT_FORMATS)
)
@run_options
@handle_errors
def export(pattern, out, **options):
    """Write the filled diagram, or the tangle itself, in a text format."""
    config = make_config(pattern=pattern, **options)
    tangle = _build(pattern, _catalog(config))
    if config.export_format == "tangle-json":
        text = tangle_to_json(tangle)
    else:
        text = export_code(dehn_fill(tangle, config.fabric_face), config.export_format)
    _emit(text, out)


def read_diagram(path: str, fmt: str) -> PlanarDiagram:
    with open(path, "r", encoding="utf-8") as f:
        text = f.read().strip()
    if fmt == "tangle-json":
        return dehn_fill(tangle_from_json(text))
    return import_code(text, fmt)


@cli.command("import")
@click.argument("path", type=click.Path(exists=True))
@click.option("--from", "source", required=True, type=click.Choice(EXPORT_FORMATS))
@click.option("--export", "export_format", type=click.Choice(EXPORT_FORMATS))
@click.option("--invariants", help="Report these invariants of the imported diagram.")
@run_options
@handle_errors
def import_(path, source, invariants, out, **options):
    """Read an exported file; re-export it or report its invariants."""
    config = make_config(invariants=_names(invariants), **options)
    if config.export_format == "tangle-json":
        if source != "tangle-json":
            raise FormatNotApplicableError("only a tangle converts to tangle JSON")
        with open(path, "r", encoding="utf-8") as f:
            _emit(tangle_to_json(tangle_from_json(f.read())), out)
        return
    diagram = read_diagram(path, source)
    if config.export_format is not None:
        _emit(export_code(diagram, config.export_format), out)
        return
    report = compute_report(
        diagram, path, config.invariants, jones_convention=_concrete(config)
    )
    _emit(render_reports([report], config.rendering, config.det_convention), out)


def _concrete(config: RunConfig) -> str:
    # imported diagrams have no catalog to calibrate against
    return "standard" if config.jones_convention == "auto" else config.jones_convention


@cli.command("simplify")
@click.option("--pattern", required=True)
@click.option("--trace", type=click.Path(), help="Write the move trace as JSON.")
@run_options
@handle_errors
def simplify_command(pattern, trace, out, **options):
    """Bounded Reidemeister simplification of the filled diagram."""
    config = make_config(pattern=pattern, **options)
    logger = Logger(save_logs=config.save_logs, verbose=config.verbose)
    diagram = dehn_fill(_build(pattern, _catalog(config)), config.fabric_face)
    outcome = simplify(diagram, config.budget(), logger=logger)
    if trace is not None:
        _emit(outcome.trace_json(), trace)
    data = {
        "pattern": pattern,
        "status": outcome.status.value,
        "start_crossings": outcome.start_crossings,
        "crossings": outcome.diagram.crossing_count,
        "nodes": outcome.nodes,
        "pd": export_code(outcome.diagram, "pd"),
    }
    _emit(json.dumps(data, sort_keys=True, indent=2), out)


@cli.command()
@click.argument("path", type=click.Path(exists=True))
@click.argument("trace", type=click.Path(exists=True))
@click.option(
    "--from", "source", default="pd", type=click.Choice(("pd", "gauss", "dt"))
)
@click.option("--out", type=click.Path())
@handle_errors
def replay(path, trace, source, out):
    """Replay a move trace on a diagram and print the result as PD."""
    diagram = read_diagram(path, source)
    with open(trace, "r", encoding="utf-8") as f:
        moves = moves_from_json(f.read())
    _emit(export_code(replay_moves(diagram, moves), "pd"), out)


@cli.command()
@click.option("--pattern", required=True)
@run_options
@handle_errors
def properties(pattern, out, **options):
    """The swatch properties list, checked on one pattern."""
    config = make_config(pattern=pattern, **options)
    logger = Logger(save_logs=config.save_logs, verbose=config.verbose)
    tangle = _build(pattern, _catalog(config))
    report = swatch_properties_report(
        tangle, config.budget(), config.fabric_face, logger
    )
    if config.rendering == "json":
        _emit(json.dumps(report.dict(), sort_keys=True, indent=2), out)
    else:
        frame = pd.DataFrame(
            [
                {"item": i.name, "holds": i.holds, "details": _details(i.details)}
                for i in report.items
            ]
        )
        _emit(_frame_text(frame, config.rendering), out)
    if not report.passed:
        sys.exit(1)


def _frame_text(frame: pd.DataFrame, rendering: str) -> str:
    if rendering == "csv":
        return frame.to_csv(index=False)
    return frame.to_string(index=False)


def _details(details: dict) -> str:
    return " ".join(f"{key}={value}" for key, value in sorted(details.items()))


@cli.command()
@click.option("--pattern", required=True)
@run_options
@handle_errors
def brunnian(pattern, out, **options):
    """Whether deleting any one component leaves a trivial swatch."""
    config = make_config(pattern=pattern, **options)
    logger = Logger(save_logs=config.save_logs, verbose=config.verbose)
    tangle = _build(pattern, _catalog(config))
    report = brunnian_check(tangle, config.budget(), config.fabric_face, logger)
    _emit(json.dumps(report.dict(), sort_keys=True, indent=2), out)


@cli.command()
@click.option("--catalog", "catalog_path", type=click.Path())
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS))
@handle_errors
def catalog(catalog_path, output_format):
    """Tiles of the catalog with their status and reference column."""
    config = make_config(catalog_path=catalog_path, output_format=output_format)
    entries = _catalog(config).describe()
    if config.rendering == "json":
        click.echo(json.dumps(entries, sort_keys=True, indent=2))
        return
    frame = pd.DataFrame(
        entries,
        columns=["name", "kind", "status", "reference", "fixture", "description"],
    )
    click.echo(_frame_text(frame, config.rendering))


if __name__ == "__main__":
    cli()
