"""app.py - Command-line entry point for the EDCN toolkit"""

import argparse
import sys
from typing import Any, Callable, Dict, List, Optional

from loguru import logger

from config.settings import Settings
from graphs.coloring import Coloring
from graphs.families import FAMILY_NAMES, FamilyInstance, family_of, generate, generate_line, labelled_line_graph
from graphs.models import Graph
from services.constructive import Scheme, SchemeId, build_construction
from services.solver import SolverBudget, SolverOptions, chromatic_number, edcn_decision, edcn_exact
from services.theorems import run_checks, run_table, sweep, verdicts_frame
from services.validator import validate_edc
from utils.exceptions import EDCNError, InvalidParams
from utils.file_processor import STDIO, FileProcessor
from utils.helpers import drop_none

EXIT_OK = 0
EXIT_VALIDATION = 2


class _Parser(argparse.ArgumentParser):
    """Usage errors become EDCNError so they share the JSON error path"""

    def error(self, message: str):
        raise EDCNError(f"{self.prog}: {message}")


# =============================================================================
# SHARED HELPERS
# =============================================================================

def _family_from_args(args: argparse.Namespace) -> FamilyInstance:
    return FamilyInstance.of(args.family, t=args.t, a=args.a, b=args.b, n=args.n)


def _budget(args: argparse.Namespace, config: Dict[str, Any]) -> SolverBudget:
    return SolverBudget(
        max_nodes=Settings.resolve("max_nodes", args.max_nodes, config),
        max_time=Settings.resolve("max_time", args.max_time, config),
    )


def _options(args: argparse.Namespace, config: Dict[str, Any]) -> SolverOptions:
    return SolverOptions(
        prune_dominator=not getattr(args, "no_prune", False),
        jobs=Settings.resolve("jobs", args.jobs, config),
    )


def _graph_for(coloring: Coloring, graph_path: Optional[str]) -> Graph:
    """The graph a coloring refers to: an explicit file, else its family tag"""
    if graph_path:
        return FileProcessor.load_graph(graph_path)
    if coloring.family is None:
        raise EDCNError("No --graph given and the coloring carries no family")
    spec = FamilyInstance.from_tag(coloring.family)
    return generate_line(spec) if coloring.family.line else generate(spec)


# =============================================================================
# SUBCOMMANDS
# =============================================================================

def cmd_gen(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    spec = _family_from_args(args)
    g = generate_line(spec) if args.line else generate(spec)
    FileProcessor.write_json(args.output, g.to_dict())
    return EXIT_OK


def cmd_linegraph(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    g = FileProcessor.load_graph(args.input)
    FileProcessor.write_json(args.output, labelled_line_graph(g).to_dict())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    coloring = FileProcessor.load_coloring(args.coloring)
    g = _graph_for(coloring, args.graph)
    report = validate_edc(g, coloring)
    FileProcessor.write_json(args.output, report.to_dict())
    return EXIT_OK if report.overall else EXIT_VALIDATION


def cmd_solve(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    g = FileProcessor.load_graph(args.input)
    budget = _budget(args, config)
    if args.chi:
        result = chromatic_number(g, budget)
        FileProcessor.write_json(args.output, result.to_dict())
    elif args.k is not None:
        witness = edcn_decision(g, args.k, budget, _options(args, config))
        FileProcessor.write_json(args.output, {
            "k": args.k,
            "feasible": witness is not None,
            "witness": witness.to_dict() if witness is not None else None,
        })
    else:
        result = edcn_exact(g, budget, _options(args, config))
        FileProcessor.write_json(args.output, result.to_dict())
    return EXIT_OK


def cmd_construct(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    if args.family:
        spec = _family_from_args(args)
    else:
        g = FileProcessor.load_graph(args.input)
        if g.family is None:
            raise EDCNError("construct needs --family or a graph that carries its family")
        spec = family_of(g)
    scheme = SchemeId(spec.family, Scheme(args.scheme), args.subcase)
    construction = build_construction(spec, scheme, strict=args.strict)
    FileProcessor.write_json(args.output, construction.coloring.to_dict())
    return EXIT_OK


def cmd_check(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    families = [args.family] if args.family else Settings.sweep_families()
    instances: List[FamilyInstance] = []
    for family in families:
        instances.extend(sweep(family, args.t_min, args.t_max))
    verdicts = run_checks(
        instances, _budget(args, config),
        Settings.resolve("oracle_max_vertices", args.oracle_max_vertices, config),
        _options(args, config),
    )
    if args.format == "csv":
        FileProcessor.write_csv(args.output, verdicts_frame(verdicts))
    else:
        FileProcessor.write_jsonl(args.output, [verdict.to_dict() for verdict in verdicts])
    return EXIT_OK if all(verdict.passed for verdict in verdicts) else EXIT_VALIDATION


def cmd_table(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    verdicts = run_table(
        args.family, _budget(args, config),
        Settings.resolve("oracle_max_vertices", args.oracle_max_vertices, config),
        _options(args, config),
    )
    FileProcessor.write_csv(args.output, verdicts_frame(verdicts))
    return EXIT_OK


def cmd_export(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    g = FileProcessor.load_graph(args.graph)
    coloring = FileProcessor.load_coloring(args.coloring) if args.coloring else None
    FileProcessor.write_text(args.output, FileProcessor.to_dot(g, coloring))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, Dict[str, Any]], int]] = {
    "gen": cmd_gen,
    "linegraph": cmd_linegraph,
    "verify": cmd_verify,
    "solve": cmd_solve,
    "construct": cmd_construct,
    "check": cmd_check,
    "table": cmd_table,
    "export": cmd_export,
}


# =============================================================================
# PARSER
# =============================================================================

def _add_family_flags(parser: argparse.ArgumentParser, required: bool = True):
    parser.add_argument("--family", required=required, choices=FAMILY_NAMES)
    parser.add_argument("--t", type=int)
    parser.add_argument("--a", type=int)
    parser.add_argument("--b", type=int)
    parser.add_argument("--n", type=int)


def _add_budget_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--max-nodes", type=int)
    parser.add_argument("--max-time", type=float)
    parser.add_argument("--jobs", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=Settings.APP_NAME, description=Settings.APP_DESCRIPTION)
    parser.add_argument("--config", help="key=value config file")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    info = Settings.get_app_info()
    parser.add_argument("--version", action="version", version=f"{info['name']} {info['version']}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate a family graph")
    _add_family_flags(gen)
    gen.add_argument("--line", action="store_true", help="emit the labelled line graph")
    gen.add_argument("--output", "-o", default=STDIO)

    linegraph = sub.add_parser("linegraph", help="line graph of a graph")
    linegraph.add_argument("--input", "-i", default=STDIO)
    linegraph.add_argument("--output", "-o", default=STDIO)

    verify = sub.add_parser("verify", help="check an equitable dominator coloring")
    verify.add_argument("--graph")
    verify.add_argument("--coloring", default=STDIO)
    verify.add_argument("--output", "-o", default=STDIO)

    solve = sub.add_parser("solve", help="exact EDCN, chromatic number or a decision for one k")
    solve.add_argument("--input", "-i", default=STDIO)
    solve.add_argument("--chi", action="store_true")
    solve.add_argument("--k", type=int)
    solve.add_argument("--no-prune", action="store_true")
    _add_budget_flags(solve)
    solve.add_argument("--output", "-o", default=STDIO)

    construct = sub.add_parser("construct", help="apply a closed-form coloring scheme")
    _add_family_flags(construct, required=False)
    construct.add_argument("--input", "-i", default=STDIO)
    construct.add_argument("--scheme", default=Scheme.MAIN.value, choices=[s.value for s in Scheme])
    construct.add_argument("--subcase")
    construct.add_argument("--strict", action="store_true")
    construct.add_argument("--output", "-o", default=STDIO)

    check = sub.add_parser("check", help="verify theorems over a parameter sweep")
    check.add_argument("--family", choices=list(Settings.THEOREM_SWEEP) + ["star"])
    check.add_argument("--t-min", type=int)
    check.add_argument("--t-max", type=int)
    check.add_argument("--format", default="jsonl", choices=["jsonl", "csv"])
    check.add_argument("--oracle-max-vertices", type=int)
    _add_budget_flags(check)
    check.add_argument("--output", "-o", default=STDIO)

    table = sub.add_parser("table", help="CSV of formula, construction and oracle values")
    table.add_argument("--family", action="append", choices=list(Settings.THEOREM_SWEEP))
    table.add_argument("--oracle-max-vertices", type=int)
    _add_budget_flags(table)
    table.add_argument("--output", "-o", default=STDIO)

    export = sub.add_parser("export", help="DOT rendering of a graph and optional coloring")
    export.add_argument("--graph", default=STDIO)
    export.add_argument("--coloring")
    export.add_argument("--output", "-o", default=STDIO)
    return parser


def _setup_logging(level: str):
    logger.remove()
    logger.add(sys.stderr, level=level)


def _report_error(payload: Dict[str, Any]):
    sys.stderr.write(FileProcessor.dumps(payload))


def main(argv: Optional[List[str]] = None) -> int:
    """Main application function"""
    try:
        args = build_parser().parse_args(argv)
        config = Settings.load_config_file(Settings.config_path(args.config))
        _setup_logging(Settings.get_log_level(args.log_level, config))
        if getattr(args, "jobs", None) is not None and args.jobs < 1:
            raise InvalidParams("jobs", "--jobs must be at least 1")
        logger.debug(f"Running {args.command} with {drop_none(vars(args))}")
        return COMMANDS[args.command](args, config)
    except EDCNError as e:
        logger.error(f"{type(e).__name__}: {e.message}")
        _report_error(e.to_dict())
        return e.code
    except Exception as e:
        logger.exception(f"Application error: {e}")
        _report_error({"error": type(e).__name__, "message": str(e)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
