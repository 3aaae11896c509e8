"""Command-line interface.

Subcommands: compare two trees, sweep the similarity limit, build a
pairwise distance matrix over a directory, run the built-in
counterexample evaluation, and validate a single file.  Exit codes:
0 success, 1 counterexample mismatch, 2 parse/validation error,
3 missing embeddings, 4 bad configuration.
"""

from __future__ import annotations

import functools
import json
import os
import sys
from pathlib import Path

import click

from .adtool import AdtoolParseError, load_file
from .report import (
    DEFAULT_ALPHA,
    MEASURES,
    SWEEP_COLUMNS,
    compare_all,
    epsilon_sweep,
    pairwise_matrix,
    radical_dictionaries_json,
    run_counterexamples,
)
from .similarity import ConfigError, EmbeddingLookupError, make_provider
from .ted import CostConfig
from .tree import validate

EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_EMBEDDINGS = 3
EXIT_CONFIG = 4


def _fmt(value: float) -> str:
    return format(value, ".9g")


def _handle_errors(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except AdtoolParseError as exc:
            click.echo(f"parse error: {exc}", err=True)
            sys.exit(EXIT_PARSE)
        except EmbeddingLookupError as exc:
            click.echo(f"embedding error: {exc.args[0]}", err=True)
            sys.exit(EXIT_EMBEDDINGS)
        except ConfigError as exc:
            click.echo(f"configuration error: {exc}", err=True)
            sys.exit(EXIT_CONFIG)

    return wrapper


def _common_options(func):
    options = [
        click.option("--epsilon", type=float, default=0.7, show_default=True,
                     help="Similarity limit above which labels are equivalent."),
        click.option("--provider", "provider_spec", default="exact", show_default=True,
                     help="exact | levenshtein | embedding:<path> (path defaults to "
                          "$ATDIST_EMBEDDINGS)."),
        click.option("--gamma-delta", type=float, default=0.5, show_default=True,
                     help="Cost of a refinement change on a mapped internal pair."),
        click.option("--alpha", default="0.5,0.25,0.25,0", show_default=True,
                     help="Weights for label,ted,radical,multiset in the weighted sum."),
        click.option("--reorder", type=click.Choice(["off", "on", "min"]), default="min",
                     show_default=True, help="Sibling reordering before tree edit distance."),
        click.option("--output", type=click.Choice(["text", "json", "csv"]), default="text",
                     show_default=True),
        click.option("--lowercase/--no-lowercase", default=True, show_default=True,
                     help="Lowercase labels before similarity comparison."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _build_config(epsilon, provider_spec, gamma_delta, alpha, lowercase):
    if provider_spec == "embedding":
        env = os.environ.get("ATDIST_EMBEDDINGS")
        if not env:
            raise ConfigError("provider 'embedding' needs a path or $ATDIST_EMBEDDINGS")
        provider_spec = f"embedding:{env}"
    provider = make_provider(provider_spec, lowercase=lowercase)
    cfg = CostConfig(gamma_delta=gamma_delta)
    try:
        alpha_values = tuple(float(part) for part in alpha.split(","))
    except ValueError:
        raise ConfigError(f"cannot parse alpha {alpha!r}") from None
    if not 0.0 <= epsilon <= 1.0:
        raise ConfigError(f"epsilon must be in [0, 1], got {epsilon}")
    return provider, cfg, alpha_values, epsilon


@click.group()
def main():
    """Distance measures between attack trees in ADTool XML."""


@main.command()
@click.argument("file_a", type=click.Path(exists=True, dir_okay=False))
@click.argument("file_b", type=click.Path(exists=True, dir_okay=False))
@_common_options
@click.option("--emit-mapping", type=click.Path(dir_okay=False), default=None,
              help="Write the label-distance node mapping as JSON.")
@click.option("--emit-script", type=click.Path(dir_okay=False), default=None,
              help="Write the tree-edit script as JSON lines.")
@click.option("--emit-radicals", type=click.Path(dir_okay=False), default=None,
              help="Write both radical dictionaries as JSON.")
@click.option("--emit-suites", type=click.Path(dir_okay=False), default=None,
              help="Write both attack-suite sets as JSON.")
@_handle_errors
def compare(file_a, file_b, epsilon, provider_spec, gamma_delta, alpha, reorder, output,
            lowercase, emit_mapping, emit_script, emit_radicals, emit_suites):
    """Compute all distance measures between FILE_A and FILE_B."""
    provider, cfg, alpha_values, epsilon = _build_config(
        epsilon, provider_spec, gamma_delta, alpha, lowercase
    )
    t1 = load_file(file_a)
    t2 = load_file(file_b)
    report = compare_all(provider, epsilon, cfg, alpha_values, t1, t2, reorder=reorder)

    if emit_mapping:
        Path(emit_mapping).write_text(
            json.dumps(report.label_mapping.to_json(), indent=2, sort_keys=True) + "\n"
        )
    if emit_script:
        lines = [json.dumps(op.to_json(), sort_keys=True) for op in report.ted_script]
        Path(emit_script).write_text("\n".join(lines) + "\n")
    if emit_radicals:
        Path(emit_radicals).write_text(
            json.dumps(radical_dictionaries_json(t1, t2), indent=2, sort_keys=True) + "\n"
        )
    if emit_suites:
        from .multiset import suites_json

        Path(emit_suites).write_text(
            json.dumps({"a": suites_json(t1), "b": suites_json(t2)}, indent=2, sort_keys=True)
            + "\n"
        )

    if output == "json":
        click.echo(json.dumps(report.to_json(), indent=2, sort_keys=True))
        return
    rows = [
        (name, report.measure(name)) for name in MEASURES
    ]
    if output == "csv":
        click.echo("measure,absolute,normalized,remove,add,change,match")
        for name, result in rows:
            ops = result.ops
            click.echo(
                f"{name},{_fmt(result.absolute)},{_fmt(result.normalized)},"
                f"{ops.remove},{ops.add},{ops.change},{ops.match}"
            )
        click.echo(f"wsd,{_fmt(report.wsd)},{_fmt(report.wsd_normalized)},,,,")
        return
    click.echo(f"{report.tree_a} vs {report.tree_b} "
               f"({report.size_a} vs {report.size_b} nodes)")
    click.echo(f"{'measure':<10} {'absolute':>9} {'normalized':>11} "
               f"{'remove':>7} {'add':>5} {'change':>7} {'match':>6}")
    for name, result in rows:
        ops = result.ops
        click.echo(
            f"{name:<10} {_fmt(result.absolute):>9} {_fmt(result.normalized):>11} "
            f"{ops.remove:>7} {ops.add:>5} {ops.change:>7} {ops.match:>6}"
        )
    click.echo(f"{'wsd':<10} {_fmt(report.wsd):>9} {_fmt(report.wsd_normalized):>11}")
    if report.ted_reordered:
        click.echo("ted: sibling-reordered run was cheaper and was kept")
    conf = report.config
    click.echo(
        "config: epsilon=%s provider=%s gamma_delta=%s alpha=%s reorder=%s lowercase=%s"
        % (
            _fmt(conf["epsilon"]),
            conf["provider"],
            _fmt(conf["gamma_delta"]),
            ",".join(_fmt(a) for a in conf["alpha"]),
            conf["reorder"],
            conf["lowercase"],
        )
    )


@main.command()
@click.argument("file_a", type=click.Path(exists=True, dir_okay=False))
@click.argument("file_b", type=click.Path(exists=True, dir_okay=False))
@_common_options
@click.option("--start", type=float, default=0.0, show_default=True)
@click.option("--stop", type=float, default=1.0, show_default=True)
@click.option("--step", type=float, default=0.01, show_default=True)
@click.option("--figures", type=click.Path(file_okay=False), default=None,
              help="Directory for sweep figures (distances and op percentages).")
@_handle_errors
def sweep(file_a, file_b, epsilon, provider_spec, gamma_delta, alpha, reorder, output,
          lowercase, start, stop, step, figures):
    """Sweep the similarity limit over a grid and report every measure."""
    provider, cfg, alpha_values, _ = _build_config(
        epsilon, provider_spec, gamma_delta, alpha, lowercase
    )
    t1 = load_file(file_a)
    t2 = load_file(file_b)
    rows = epsilon_sweep(
        provider, cfg, alpha_values, t1, t2, start=start, stop=stop, step=step, reorder=reorder
    )
    if figures:
        from . import figures as fig

        outdir = Path(figures)
        outdir.mkdir(parents=True, exist_ok=True)
        fig.sweep_distance_figure(rows, outdir / "sweep_distances.png")
        fig.sweep_operations_figure(rows, outdir / "sweep_operations.png")
    if output == "json":
        click.echo(json.dumps(rows, indent=2, sort_keys=True))
        return
    click.echo(",".join(SWEEP_COLUMNS))
    for row in rows:
        click.echo(",".join(_fmt(row[col]) for col in SWEEP_COLUMNS))


@main.command()
@click.argument("directory", type=click.Path(exists=True, file_okay=False))
@_common_options
@click.option("--measure", type=click.Choice(list(MEASURES) + ["wsd"]), default="ted",
              show_default=True)
@click.option("--figures", type=click.Path(file_okay=False), default=None,
              help="Directory for the heatmap figure.")
@_handle_errors
def matrix(directory, epsilon, provider_spec, gamma_delta, alpha, reorder, output,
           lowercase, measure, figures):
    """Pairwise normalized distances over all XML files in DIRECTORY."""
    provider, cfg, alpha_values, epsilon = _build_config(
        epsilon, provider_spec, gamma_delta, alpha, lowercase
    )
    paths = sorted(Path(directory).glob("*.xml"))
    if len(paths) < 2:
        raise ConfigError(f"{directory} holds {len(paths)} XML files; need at least 2")
    trees = [load_file(p) for p in paths]
    names = [t.source_name for t in trees]
    grid = pairwise_matrix(
        provider, epsilon, cfg, trees, measure=measure, alpha=alpha_values, reorder=reorder
    )
    if figures:
        from . import figures as fig

        outdir = Path(figures)
        outdir.mkdir(parents=True, exist_ok=True)
        fig.matrix_figure(names, grid, measure, outdir / f"matrix_{measure}.png")
    if output == "json":
        click.echo(json.dumps(
            {"measure": measure, "names": names, "matrix": grid.tolist()},
            indent=2, sort_keys=True,
        ))
        return
    click.echo("," + ",".join(names))
    for name, row in zip(names, grid):
        click.echo(name + "," + ",".join(_fmt(v) for v in row))


@main.command()
@click.option("--output", type=click.Choice(["text", "json", "csv"]), default="text",
              show_default=True)
@click.option("--figures", type=click.Path(file_okay=False), default=None,
              help="Directory for the per-measure bar chart.")
@_handle_errors
def counterexamples(output, figures):
    """Evaluate the built-in counterexamples against their expected values."""
    result = run_counterexamples()
    if figures:
        from . import figures as fig

        outdir = Path(figures)
        outdir.mkdir(parents=True, exist_ok=True)
        fig.counterexamples_figure(result.rows, outdir / "counterexamples.png")
    if output == "json":
        payload = [
            {
                "name": row.name,
                "display": row.display,
                "report": row.report.to_json(),
                "failures": row.failures,
                "advisories": row.advisories,
            }
            for row in result.rows
        ]
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    elif output == "csv":
        click.echo("name,label,ted,radical,multiset,wsd,status")
        for row in result.rows:
            r = row.report
            status = "fail" if row.failures else ("advisory" if row.advisories else "ok")
            click.echo(
                f"{row.name},{_fmt(r.label.absolute)},{_fmt(r.ted.absolute)},"
                f"{_fmt(r.radical.absolute)},{_fmt(r.multiset.absolute)},{_fmt(r.wsd)},{status}"
            )
    else:
        click.echo(f"{'counterexample':<22} {'LD':>4} {'TED':>5} {'RD':>4} "
                   f"{'MSD':>4} {'WSD':>5}  status")
        for row in result.rows:
            r = row.report
            status = "FAIL" if row.failures else ("advisory" if row.advisories else "ok")
            click.echo(
                f"{row.display:<22} {_fmt(r.label.absolute):>4} {_fmt(r.ted.absolute):>5} "
                f"{_fmt(r.radical.absolute):>4} {_fmt(r.multiset.absolute):>4} "
                f"{_fmt(r.wsd):>5}  {status}"
            )
            for note in row.failures:
                click.echo(f"    FAIL: {note}")
            for note in row.advisories:
                click.echo(f"    advisory: {note}")
    if not result.passed:
        sys.exit(EXIT_MISMATCH)


@main.command("validate")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@_handle_errors
def validate_cmd(file):
    """Parse FILE and re-check the tree invariants."""
    tree = load_file(file)
    problems = validate(tree)
    if problems:
        for problem in problems:
            click.echo(f"invalid: {problem}", err=True)
        sys.exit(EXIT_PARSE)
    click.echo(f"{file}: valid attack tree, {tree.size} nodes, root {tree.root.label!r}")


if __name__ == "__main__":
    main()
