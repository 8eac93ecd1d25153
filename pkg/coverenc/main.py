import os
import sys
from contextlib import contextmanager

import click
import typer

from . import config as cfg
from .cnf.dimacs import parse_dimacs, to_dimacs
from .cnf.formula import ClauseCounter
from .cnf.varmap import VarMap, VarName, read_varmap, write_varmap
from .encoders.bva import BvaReencoder
from .encoders.coverings import (greedy_biclique_cover, greedy_clique_cover, interval_clique_cover,
                                 kn_recursive_biclique_cover, read_cover, write_cover)
from .encoders.intervals import BlockEncoderParams
from .encoders.isp import vertex_literals
from .exceptions import CoverencError, FormatError, ParameterError
from .graphs.graph import complete_bipartite, complete_graph, cycle_graph, petersen_graph, random_graph
from .graphs.graph_io import read_graph, write_graph
from .graphs.intervals import build_interval_graph
from .oracle.checker import EXHAUSTIVE, SAMPLED, check_equisat, check_isp_encoding
from .oracle.solver import solve
from .problems.reductions import (Strategy, as_strategy, encode_clique, encode_coloring, encode_independent_set,
                                  encode_isp, encode_vertex_cover)
from .problems.scheduling import (brute_force_schedule, decode_schedule, encode_scheduling, is_valid_schedule,
                                  load_instance)
from .ui import cli

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2
EXIT_IO = 3

PROBLEMS = {
    "independent-set": encode_independent_set,
    "vertex-cover": encode_vertex_cover,
    "coloring": encode_coloring,
    "clique": encode_clique,
}

app = typer.Typer(help="Compile graph constraints to CNF with covering, BVA and interval encodings.")
verify_app = typer.Typer(help="Check encodings against the built-in oracle.")
app.add_typer(verify_app, name="verify")

# config
config = cfg.load_config()
DEFAULT_SAMPLES = config["oracle"]["samples"]


@app.callback()
def main_callback():
    cfg.setup_logging(config)


@contextmanager
def _errors(action):
    """Report library errors with the CLI's exit codes."""
    try:
        yield
    except (OSError, FormatError) as e:
        typer.echo(f"Error {action}: {e}", err=True)
        raise typer.Exit(code=EXIT_IO)
    except CoverencError as e:
        typer.echo(f"Error {action}: {e}", err=True)
        raise typer.Exit(code=EXIT_USAGE)


def _read(path):
    with open(path, 'r') as f:
        return f.read()


def _write(path, text):
    with open(path, 'w') as f:
        f.write(text)


def _map_path(cnf_path):
    return os.path.splitext(cnf_path)[0] + ".map"


def _load_graph(graph_path, n, variant):
    if graph_path:
        return read_graph(_read(graph_path))
    if n is not None:
        return build_interval_graph(n, variant)
    raise ParameterError("Give a graph file with --graph or interval positions with --n")


def _pool_for(formula, varmap_path):
    """VarMap of a DIMACS file; variables missing from the sidecar are named v(index)."""
    pool = read_varmap(_read(varmap_path)) if varmap_path else VarMap()
    for index in range(pool.top + 1, formula.max_var + 1):
        pool.fresh(VarName("v", (index,)))
    return pool


@app.command("gen-graph", help="Generate a graph file: interval, complete, bipartite, cycle, petersen or random.")
def gen_graph(kind: str = typer.Argument(..., help="interval, complete, bipartite, cycle, petersen or random"),
              n: int = typer.Option(None, "--n", help="Positions (interval) or vertices"),
              variant: str = typer.Option("I", help="Interval variant, I or I0"),
              a: int = typer.Option(None, help="First side of a bipartite graph"),
              b: int = typer.Option(None, help="Second side of a bipartite graph"),
              p: float = typer.Option(0.5, help="Edge probability of a random graph"),
              seed: int = typer.Option(None, help="Seed of a random graph (required)"),
              output: str = typer.Option(None, "--output", "-o", help="Output file, stdout when omitted")):
    """
    Generate a graph and write it in the graph text format.
    """
    with _errors("generating graph"):
        if kind == "interval" and n is not None:
            graph = build_interval_graph(n, variant)
        elif kind == "complete" and n is not None:
            graph = complete_graph(n)
        elif kind == "cycle" and n is not None:
            graph = cycle_graph(n)
        elif kind == "bipartite" and a is not None and b is not None:
            graph = complete_bipartite(a, b)
        elif kind == "petersen":
            graph = petersen_graph()
        elif kind == "random" and n is not None:
            if seed is None:
                raise ParameterError("Random graphs need an explicit --seed")
            graph = random_graph(n, p, seed)
        else:
            raise ParameterError(f"Cannot generate {kind!r} from the given options")
        text = write_graph(graph)
        if output:
            _write(output, text)
            typer.echo(f"Wrote {graph} to {output}")
        else:
            typer.echo(text, nl=False)


@app.command(help="Encode a graph problem to DIMACS with a VarMap sidecar.")
def encode(graph_path: str = typer.Option(None, "--graph", help="Graph file"),
           n: int = typer.Option(None, "--n", help="Encode the interval graph on n positions"),
           variant: str = typer.Option("I", help="Interval variant for --n, I or I0"),
           strategy: str = typer.Option("direct", help="direct, cliqueCover, bicliqueCover, recursiveBlocks or block83"),
           problem: str = typer.Option("independent-set", help="independent-set, vertex-cover, coloring or clique"),
           size: int = typer.Option(None, help="Set size, cover size, clique size or number of colors"),
           blocks: int = typer.Option(None, help="Top-level block count of the recursive interval encoder"),
           cover_path: str = typer.Option(None, "--cover", help="Cover file for the covering strategies"),
           output: str = typer.Option(..., "--output", "-o", help="DIMACS output file"),
           varmap_path: str = typer.Option(None, "--map", help="Sidecar file, <output>.map when omitted")):
    """
    Encode a graph problem and print its stats line.
    """
    with _errors("encoding"):
        graph = _load_graph(graph_path, n, variant)
        strategy = as_strategy(strategy)
        if problem not in PROBLEMS:
            raise ParameterError(f"Unknown problem {problem!r}, expected one of {', '.join(PROBLEMS)}")
        if problem != "independent-set" and size is None:
            raise ParameterError(f"Problem {problem} needs --size")
        cover = read_cover(_read(cover_path)) if cover_path else None

        pool = VarMap()
        formula = PROBLEMS[problem](graph, size, strategy, pool, cover=cover, block_count=blocks)
        varmap_path = varmap_path or _map_path(output)
        _write(output, to_dimacs(formula, pool))
        _write(varmap_path, write_varmap(pool))

        positions, graph_variant = graph.interval_info or (graph.n, None)
        k = None
        if strategy is Strategy.RECURSIVE_BLOCKS:
            k = BlockEncoderParams(positions, graph_variant, k=blocks).k
        typer.echo(cli.stats_line(pool.top, len(formula), strategy.value, positions, k,
                                  graph_variant.value if graph_variant else None))


@app.command(help="Compute a clique or biclique cover and write it in the audit format.")
def cover(kind: str = typer.Argument(..., help="clique, biclique, interval-clique or kn-biclique"),
          graph_path: str = typer.Option(None, "--graph", help="Graph file for greedy covers"),
          n: int = typer.Option(None, "--n", help="Size for the interval and K_n covers"),
          variant: str = typer.Option("I", help="Interval variant of the interval-clique cover, I or I0"),
          output: str = typer.Option(None, "--output", "-o", help="Output file, stdout when omitted")):
    """
    Write a cover of a graph.
    """
    with _errors("computing cover"):
        if kind in ("clique", "biclique"):
            if not graph_path:
                raise ParameterError(f"A {kind} cover needs --graph")
            graph = read_graph(_read(graph_path))
            result = greedy_clique_cover(graph) if kind == "clique" else greedy_biclique_cover(graph)
        elif kind in ("interval-clique", "kn-biclique"):
            if n is None:
                raise ParameterError(f"A {kind} cover needs --n")
            result = interval_clique_cover(n, variant) if kind == "interval-clique" else kn_recursive_biclique_cover(n)
        else:
            raise ParameterError(f"Unknown cover kind {kind!r}")
        text = write_cover(result)
        if output:
            _write(output, text)
            typer.echo(f"Wrote {len(result)} parts of weight {result.weight} to {output}")
        else:
            typer.echo(text, nl=False)


@app.command(help="Re-encode a DIMACS file with bounded variable addition.")
def bva(input_path: str = typer.Option(..., "--input", "-i", help="DIMACS input"),
        varmap_path: str = typer.Option(None, "--map", help="Sidecar of the input"),
        output: str = typer.Option(..., "--output", "-o", help="DIMACS output"),
        output_map: str = typer.Option(None, "--output-map", help="Sidecar of the output, <output>.map when omitted"),
        min_gain: int = typer.Option(None, help="Smallest accepted clause reduction"),
        max_steps: int = typer.Option(None, help="Largest number of replacements")):
    """
    Apply BVA steps until no grid product pays off, then print the step log.
    """
    with _errors("running BVA"):
        formula = parse_dimacs(_read(input_path))
        pool = _pool_for(formula, varmap_path)
        reencoder = BvaReencoder(min_gain=config["bva"]["min_gain"] if min_gain is None else min_gain,
                                 max_steps=config["bva"]["max_steps"] if max_steps is None else max_steps)
        result = reencoder.reencode(formula, pool)
        _write(output, to_dimacs(result, pool))
        _write(output_map or _map_path(output), write_varmap(pool))
        cli.display_bva_steps(reencoder.steps, len(formula), len(result))


@verify_app.command("isp", help="Check that a DIMACS file encodes the independent-set property of a graph.")
def verify_isp(graph_path: str = typer.Option(..., "--graph", help="Graph file"),
               cnf_path: str = typer.Option(..., "--cnf", help="DIMACS file"),
               varmap_path: str = typer.Option(..., "--map", help="Sidecar naming the x(label) variables"),
               mode: str = typer.Option(EXHAUSTIVE, help="exhaustive or sampled"),
               samples: int = typer.Option(DEFAULT_SAMPLES, help="Assignments drawn in sampled mode"),
               seed: int = typer.Option(None, help="Seed of sampled mode (required there)")):
    """
    Exit 0 when the encoding passes, 2 when a witness is found.
    """
    with _errors("verifying"):
        if mode not in (EXHAUSTIVE, SAMPLED):
            raise ParameterError(f"Unknown mode {mode!r}, expected {EXHAUSTIVE} or {SAMPLED}")
        if mode == SAMPLED and seed is None:
            raise ParameterError("Sampled mode needs an explicit --seed")
        graph = read_graph(_read(graph_path))
        formula = parse_dimacs(_read(cnf_path))
        varmap = read_varmap(_read(varmap_path))
        verdict = check_isp_encoding(graph, formula, varmap, mode=mode, samples=samples,
                                     seed=0 if seed is None else seed)
    cli.display_verdict(verdict, "independent-set property")
    if not verdict.passed:
        raise typer.Exit(code=EXIT_VERIFY_FAILED)


@verify_app.command("equisat", help="Check that two DIMACS files agree on every assignment of shared variables.")
def verify_equisat(first: str = typer.Option(..., "--cnf1", help="First DIMACS file"),
                   second: str = typer.Option(..., "--cnf2", help="Second DIMACS file"),
                   shared: int = typer.Option(None, help="Variables 1..shared are compared; "
                                                         "all variables of the first file when omitted")):
    """
    Exit 0 when the formulas agree, 2 otherwise.
    """
    with _errors("verifying"):
        formula1 = parse_dimacs(_read(first))
        formula2 = parse_dimacs(_read(second))
        top = formula1.max_var if shared is None else shared
        verdict = check_equisat(formula1, formula2, range(1, top + 1))
    cli.display_verdict(verdict, "equisatisfiability")
    if not verdict.passed:
        raise typer.Exit(code=EXIT_VERIFY_FAILED)


@verify_app.command("schedule", help="Compare the scheduling encoding with the brute-force scheduler.")
def verify_schedule(instance_path: str = typer.Option(..., "--instance", help="Scheduling instance (JSON)"),
                    per_time_amo: bool = typer.Option(False, help="Check the per-time baseline encoding")):
    """
    Exit 0 when the SAT verdict and the decoded schedule agree with brute force, 2 otherwise.
    """
    with _errors("verifying"):
        instance = load_instance(instance_path)
        pool = VarMap()
        result = solve(encode_scheduling(instance, pool, per_time_amo=per_time_amo))
        expected = brute_force_schedule(instance)
    agree = result.satisfiable == (expected is not None)
    if agree and result.satisfiable:
        agree = is_valid_schedule(instance, decode_schedule(instance, result.model, pool))
    if agree:
        cli.console.print(f"[green]PASS[/green] encoding and brute force agree: "
                          f"{'feasible' if expected is not None else 'infeasible'}")
        return
    cli.console.print(f"[red]FAIL[/red] encoding says {'SAT' if result.satisfiable else 'UNSAT'}, "
                      f"brute force says {'feasible' if expected is not None else 'infeasible'}")
    raise typer.Exit(code=EXIT_VERIFY_FAILED)


@app.command(help="Compare clause counts of the ISP strategies on a graph.")
def stats(graph_path: str = typer.Option(None, "--graph", help="Graph file"),
          n: int = typer.Option(None, "--n", help="Use the interval graph on n positions"),
          variant: str = typer.Option("I", help="Interval variant for --n, I or I0"),
          blocks: int = typer.Option(None, help="Top-level block count of the recursive interval encoder")):
    """
    Count variables and clauses of every applicable strategy without writing any formula.
    """
    with _errors("computing stats"):
        graph = _load_graph(graph_path, n, variant)
        rows = []
        for strategy in Strategy:
            if strategy.needs_intervals and graph.interval_info is None:
                continue
            cover = None
            if strategy is Strategy.CLIQUE_COVER and graph.interval_info is not None and graph.interval_info[0] >= 3:
                cover = interval_clique_cover(*graph.interval_info)
            pool = VarMap()
            sink = ClauseCounter()
            encode_isp(graph, vertex_literals(graph, pool), pool, strategy, sink, cover=cover, block_count=blocks)
            rows.append((strategy.value, pool.top, len(sink)))
    cli.display_stats(rows, f"Independent-set encodings of {graph}")


@app.command(help="Encode a scheduling instance to DIMACS with a VarMap sidecar.")
def schedule(instance_path: str = typer.Option(..., "--instance", help="Scheduling instance (JSON)"),
             output: str = typer.Option(None, "--output", "-o", help="DIMACS output file"),
             varmap_path: str = typer.Option(None, "--map", help="Sidecar file, <output>.map when omitted"),
             per_time_amo: bool = typer.Option(False, help="Use the per-time baseline encoding"),
             show: bool = typer.Option(False, "--solve", help="Solve with the built-in solver and show the schedule")):
    """
    Encode a scheduling instance and print its stats line.
    """
    with _errors("encoding schedule"):
        instance = load_instance(instance_path)
        pool = VarMap()
        formula = encode_scheduling(instance, pool, per_time_amo=per_time_amo)
        if output:
            _write(output, to_dimacs(formula, pool))
            _write(varmap_path or _map_path(output), write_varmap(pool))
        strategy = "perTimeAmo" if per_time_amo else Strategy.RECURSIVE_BLOCKS.value
        typer.echo(cli.stats_line(pool.top, len(formula), strategy, instance.n_tasks))
        if show:
            result = solve(formula)
            cli.display_schedule(instance, decode_schedule(instance, result.model, pool) if result.satisfiable else None)


# config
@app.command(help="Displays the current configuration.")
def get_config():
    """
    Display the current configuration.
    """
    typer.echo("Current configuration:")
    typer.echo(config)


@app.command(help="Displays a single configuration setting, e.g. intervals.recursion_base.")
def get_setting(setting: str):
    """
    Get the value of a single configuration setting.

    Args:
        setting (str): Dotted name of the setting.
    """
    try:
        value = cfg.get_setting(config, setting)
    except (KeyError, TypeError):
        typer.echo(f"Error: unknown setting {setting}", err=True)
        raise typer.Exit(code=EXIT_USAGE)
    typer.echo(f"Current value of {setting}: {value}")


@app.command(help="Creates a new configuration file with default values.")
def new_config(user_config_file_path: str = typer.Option(
        ..., "--path", prompt="Enter the path for the new configuration file, e.g., /path/to/new_config.json")):
    """
    Create a new configuration file with default values.
    """
    with _errors("creating configuration"):
        cfg.create_user_config_file(user_config_file_path)
    typer.echo(f"New configuration file created at {user_config_file_path}.")


def run(argv=None):
    """
    Run the CLI on an argument list.

    Returns:
        int: 0 on success, 1 on usage errors, 2 on failed verification, 3 on I/O or format errors.
    """
    try:
        result = app(args=argv, prog_name="coverenc", standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except (click.UsageError, click.Abort) as e:
        if isinstance(e, click.UsageError):
            typer.echo(f"Error: {e.format_message()}", err=True)
        return EXIT_USAGE
    except (OSError, FormatError) as e:
        typer.echo(f"Error: {e}", err=True)
        return EXIT_IO
    except CoverencError as e:
        typer.echo(f"Error: {e}", err=True)
        return EXIT_USAGE
    return result if isinstance(result, int) else EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
