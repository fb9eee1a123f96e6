import functools
import logging
import sys
import time
from typing import Any, Callable, Dict, Optional

import click

from tools.bounds import bipartite_bounds, theorem_bounds
from tools.constructions import CONSTRUCTIONS
from tools.ecg_format import ColouringFile, read_colouring, serialise, write_colouring
from tools.errors import MonocleError, ParameterError
from tools.extract_general import (
    extract_mader_coloured,
    extract_r11,
    extract_r1kbip_coloured,
    extract_thm_r1k,
)
from tools.extract_three import extract_31kbip, extract_thm31k
from tools.extract_two import extract_degs, extract_thm21k
from tools.graph_core import verify_witness
from tools.oracle import adversarial_search, exact_M
from tools.reports import (
    OracleReport,
    SearchReport,
    WitnessReport,
    render_json,
    render_key_value,
)
from tools.settings import Settings, load_settings, setup_logging

METHODS = ["degs", "thm21k", "mader", "r11", "r1kbip", "31kbip", "thmr1k", "thm31k"]
BIPARTITE_METHODS = {"r1kbip", "31kbip"}

CONSTRUCTION_PARAMETERS = {
    "bg": ("n", "k"),
    "affine": ("n", "r", "k"),
    "hamzero": ("n", "r", "k"),
    "bipmod": ("m", "n", "r"),
}


def exit_codes(command: Callable) -> Callable:
    """Map library errors to the documented exit codes with a one-line diagnostic"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except MonocleError as e:
            logging.debug(f"{type(e).__name__}: {e}")
            click.echo(f"error: {e}", err=True)
            sys.exit(e.exit_code)
        except Exception as e:
            logging.exception("unexpected failure")
            click.echo(f"internal error: {e}", err=True)
            sys.exit(3)

    return wrapper


def emit(report: Any, as_json: bool) -> None:
    click.echo(render_json(report) if as_json else render_key_value(report), nl=False)


def _load(path: str, kind: str) -> ColouringFile:
    loaded = read_colouring(path)
    if loaded.kind != kind:
        raise ParameterError(f"expected a {kind} colouring file, got a {loaded.kind} one")
    return loaded


@click.group()
@click.option("--log-level", default=None, help="Override the configured logging level")
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str]):
    """MONOCLE: monochromatic k-connected subgraphs of edge-coloured complete graphs"""
    settings = load_settings()
    if log_level:
        settings.logging.level = log_level.upper()
    setup_logging(settings)
    ctx.obj = settings


@cli.command()
@click.argument("kind", type=click.Choice(sorted(CONSTRUCTIONS)))
@click.option("--n", type=int, help="Number of vertices (second part size for bipmod)")
@click.option("--r", type=int, help="Number of colours")
@click.option("--k", type=int, help="Connectivity")
@click.option("--m", type=int, help="First part size for bipmod")
@click.option("--output", "-o", type=click.Path(dir_okay=False), help="Write to a file instead of stdout")
@exit_codes
def construct(kind: str, n: Optional[int], r: Optional[int], k: Optional[int], m: Optional[int], output: Optional[str]):
    """Generate an extremal colouring with its claimed bound"""
    given = {"n": n, "r": r, "k": k, "m": m}
    needed = CONSTRUCTION_PARAMETERS[kind]
    missing = [name for name in needed if given[name] is None]
    if missing:
        raise ParameterError(f"{kind} needs " + " ".join(f"--{name}" for name in missing))
    report = CONSTRUCTIONS[kind](**{name: given[name] for name in needed})
    if output:
        write_colouring(output, report.colouring, report.metadata())
        logging.info(f"wrote {kind} colouring to {output}")
    else:
        click.echo(serialise(report.colouring, report.metadata()), nl=False)


@cli.command()
@click.argument("method", type=click.Choice(METHODS))
@click.option("--file", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--k", type=int, default=1, show_default=True)
@click.option("--colour", type=int, default=1, show_default=True, help="Primary colour (degs, mader, r1kbip)")
@click.option("--ell", type=int, help="ℓ for r1kbip")
@click.option("--q", type=int, help="Target order for r1kbip")
@click.option("--threshold", type=click.Choice(["theorem", "remark"]), default=None, help="Size threshold for thm21k")
@click.option("--roles", default="1,2,3", show_default=True, help="main,q_limited,p_limited colours for 31kbip")
@click.option("--no-refine", is_flag=True, help="Skip the exact-value refinement of thm31k")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of key-value lines")
@click.pass_obj
@exit_codes
def extract(
    settings: Settings, method: str, path: str, k: int, colour: int, ell: Optional[int], q: Optional[int],
    threshold: Optional[str], roles: str, no_refine: bool, as_json: bool,
):
    """Run an extractor and report a verified witness"""
    loaded = _load(path, "bipartite" if method in BIPARTITE_METHODS else "complete")
    F = loaded.colouring
    started = time.perf_counter()
    if method == "degs":
        report = extract_degs(F, k, primary=colour)
    elif method == "thm21k":
        report = extract_thm21k(F, k, threshold=threshold or settings.extractors.thm21k_threshold)
    elif method == "mader":
        report = extract_mader_coloured(F, k, colour)
    elif method == "r11":
        report = extract_r11(F)
    elif method == "thmr1k":
        report = extract_thm_r1k(F, k)
    elif method == "thm31k":
        report = extract_thm31k(F, k, refine=not no_refine)
    elif method == "r1kbip":
        if ell is None or q is None:
            raise ParameterError("r1kbip needs --ell and --q")
        report = extract_r1kbip_coloured(F, ell, q, colour)
    else:
        try:
            parsed = tuple(int(c) for c in roles.split(","))
        except ValueError:
            raise ParameterError(f"--roles must be three comma-separated colours, got {roles!r}") from None
        if len(parsed) != 3:
            raise ParameterError(f"--roles must be three comma-separated colours, got {roles!r}")
        report = extract_31kbip(F, k, roles=parsed)
    elapsed = time.perf_counter() - started

    emit(WitnessReport(
        method=report.method, parameters=report.parameters, witness=report.witness,
        guarantee=report.guarantee, verified=verify_witness(F, report.witness),
        trace=report.trace, wall_time=round(elapsed, 6),
    ), as_json)


@cli.command()
@click.option("--file", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--k", type=int, required=True)
@click.option("--s", type=int, default=1, show_default=True)
@click.option("--colour-restricted", is_flag=True, help="Lift the vertex limit and bound k-core components instead")
@click.option("--max-n", type=int, default=None, help="Vertex limit (default from settings or MONOCLE_ORACLE_MAX_N)")
@click.option("--max-component", type=int, default=None, help="Component limit in colour-restricted mode")
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
@exit_codes
def oracle(
    settings: Settings, path: str, k: int, s: int, colour_restricted: bool,
    max_n: Optional[int], max_component: Optional[int], as_json: bool,
):
    """Exact maximum order of a k-connected subgraph in at most s colours"""
    F = _load(path, "complete").colouring
    started = time.perf_counter()
    value, witness = exact_M(
        F, k, s,
        max_n=max_n or settings.oracle.max_n,
        colour_restricted=colour_restricted,
        max_component=max_component or settings.oracle.max_component,
    )
    emit(OracleReport(
        parameters={"n": F.n, "r": F.r, "k": k, "s": s, "colour_restricted": colour_restricted},
        M=value, witness=witness, wall_time=round(time.perf_counter() - started, 6),
    ), as_json)


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--m", type=int, default=None, help="First part size: bounds for K_{m,n} instead of K_n")
@click.option("--json", "as_json", is_flag=True)
@exit_codes
def bounds(n: int, r: int, k: int, m: Optional[int], as_json: bool):
    """Sharpest known bounds with their sources"""
    row = bipartite_bounds(m, n, r, k) if m is not None else theorem_bounds(n, r, k)
    if as_json:
        click.echo(render_json(row), nl=False)
        return
    click.echo(row.summary())
    if row.conjectured:
        click.echo(row.conjecture_summary())


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--s", type=int, default=1, show_default=True)
@click.option("--iterations", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--start", "start_path", type=click.Path(exists=True, dir_okay=False), help="Start from this colouring")
@click.option("--output", "-o", type=click.Path(dir_okay=False), help="Write the best colouring here")
@click.option("--progress/--no-progress", default=None, help="Show a progress bar")
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
@exit_codes
def search(
    settings: Settings, n: int, r: int, k: int, s: int, iterations: int, seed: int,
    start_path: Optional[str], output: Optional[str], progress: Optional[bool], as_json: bool,
):
    """Annealing search for colourings with a small maximum"""
    start = _load(start_path, "complete").colouring if start_path else None
    started = time.perf_counter()
    state = adversarial_search(n, r, k, s, iterations, seed, start=start, settings=settings, progress=progress)
    if output:
        metadata: Dict[str, str] = {
            "construction": "search",
            "parameters": f"n={n} r={r} k={k} s={s} seed={seed}",
            "objective": f"{state.objective} = {state.value}",
        }
        write_colouring(output, state.colouring, metadata)
    emit(SearchReport(
        parameters={"n": n, "r": r, "k": k, "s": s, "iterations": iterations, "seed": seed},
        objective=state.objective, exact=state.exact, value=state.value,
        archive=[entry.model_dump() for entry in state.archive],
        wall_time=round(time.perf_counter() - started, 6),
    ), as_json)


if __name__ == "__main__":
    cli()
