"""
Command-line surface.

Results go to standard output and diagnostics to standard error. Exit codes:
0 success, 1 rejected input (parse errors, invalid models or arguments,
oracle limits), 2 internal failure, 3 oracle disagreement.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

import msgspec

from .bisim.oracle import brute_force_bisimulation
from .bisim.refinement import bisimulation
from .config import Settings
from .contracts import Executable, implements
from .errors import IntervalBisimError, InvalidModel, InvariantBreach
from .log import DEBUG, create_logger, set_level
from .model.imdp import IMDP, validate
from .model.interval import Interval
from .model.textformat import parse, serialize
from .semantics.checker import evaluate
from .semantics.parser import parse_formula
from .types import BisimKind
from .utils.functions import file_get_contents, file_put_contents
from .utils.structs import key_value_lines
from .workbench.generators import gen_csma, gen_pairs, gen_wsn
from .workbench.report import minimise, render_table

logger = create_logger(__name__)

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INTERNAL = 2
EXIT_DISAGREEMENT = 3


def _interval_argument(text: str) -> Interval:
    """``LO,HI`` as an interval; raises InvalidInterval or ValueError."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected LO,HI but got {text!r}")
    return Interval.of(parts[0], parts[1])


def load_model(filename: Optional[str]) -> IMDP:
    """
    Parses and validates a model file; ``None`` or ``"-"`` reads stdin.

    Raises:
        ParseError: If the text is malformed.
        InvalidModel: If the model parses but fails validation.
    """
    model = parse(file_get_contents(filename))
    report = validate(model)
    if not report.ok:
        raise InvalidModel(report.render())
    return model


class _Command:
    def __init__(self, args: argparse.Namespace, settings: Settings) -> None:
        self.args = args
        self.settings = settings

    def execute(self) -> int:
        raise NotImplementedError


@implements(Executable)
class ValidateCommand(_Command):
    def execute(self) -> int:
        report = validate(parse(file_get_contents(self.args.file)))
        file_put_contents(None, report.render())
        return EXIT_OK if report.ok else EXIT_REJECTED


@implements(Executable)
class MinimizeCommand(_Command):
    """Prints the partition dump and the reduction report."""

    def execute(self) -> int:
        model = load_model(self.args.file)
        reduction = minimise(
            model, BisimKind(self.args.semantics), jobs=self.settings.jobs
        )
        file_put_contents(
            None, reduction.partition.dump() + key_value_lines(reduction.report)
        )
        if self.args.out:
            file_put_contents(self.args.out, serialize(reduction.quotient))
        return EXIT_OK


@implements(Executable)
class QuotientCommand(_Command):
    def execute(self) -> int:
        model = load_model(self.args.file)
        reduction = minimise(
            model, BisimKind(self.args.semantics), jobs=self.settings.jobs
        )
        file_put_contents(self.args.out, serialize(reduction.quotient))
        return EXIT_OK


@implements(Executable)
class CheckCommand(_Command):
    """One ``<state> <true|false> <value>`` line per state; ``-`` when no value applies."""

    def execute(self) -> int:
        formula = parse_formula(self.args.formula)
        model = load_model(self.args.file)
        verdicts = evaluate(model, formula, jobs=self.settings.jobs)
        file_put_contents(
            None,
            "".join(
                f"{state} {'true' if holds else 'false'} {'-' if value is None else value}\n"
                for state, (holds, value) in verdicts.items()
            ),
        )
        return EXIT_OK


@implements(Executable)
class GenerateCommand(_Command):
    def execute(self) -> int:
        args = self.args
        match args.family:
            case "wsn":
                model = gen_wsn(args.sensors, _interval_argument(args.p))
            case "csma":
                model = gen_csma(
                    args.nodes,
                    args.collisions,
                    _interval_argument(args.send),
                    _interval_argument(args.collide),
                )
            case _:
                model = gen_pairs()
        file_put_contents(args.out, serialize(model))
        logger.info("generated %s with %d states", args.family, len(model.states))
        return EXIT_OK


@implements(Executable)
class ReportCommand(_Command):
    def execute(self) -> int:
        kind = BisimKind(self.args.semantics)
        rows = []
        for filename in self.args.files:
            reduction = minimise(load_model(filename), kind, jobs=self.settings.jobs)
            name = "stdin" if filename == "-" else Path(filename).name
            rows.append((name, reduction.report))
        file_put_contents(None, render_table(rows))
        return EXIT_OK


@implements(Executable)
class OracleCheckCommand(_Command):
    """Compares the refinement engine with brute-force enumeration."""

    def execute(self) -> int:
        model = load_model(self.args.file)
        kind = BisimKind(self.args.semantics)
        engine = bisimulation(model, kind, jobs=self.settings.jobs)
        oracle = brute_force_bisimulation(model, kind, self.settings)
        if engine == oracle:
            file_put_contents(None, "agree\n" + engine.dump())
            return EXIT_OK
        file_put_contents(
            None,
            "disagree\nrefinement:\n" + engine.dump() + "brute force:\n" + oracle.dump(),
        )
        logger.error("refinement and brute force disagree on %s", self.args.file or "-")
        return EXIT_DISAGREEMENT


_COMMANDS: dict[str, type[_Command]] = {
    "validate": ValidateCommand,
    "minimize": MinimizeCommand,
    "quotient": QuotientCommand,
    "mc": CheckCommand,
    "generate": GenerateCommand,
    "report": ReportCommand,
    "oracle-check": OracleCheckCommand,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--verbose", action="store_true", help="log progress on standard error"
    )
    common.add_argument(
        "--jobs", type=int, default=None, help="worker threads (overrides IMDP_JOBS)"
    )

    def semantics(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--semantics",
            choices=[k.value for k in BisimKind],
            required=True,
            help="coop for cooperative, comp for competitive bisimulation",
        )

    parser = argparse.ArgumentParser(
        prog="intervalbisim",
        description="Minimise interval MDPs under probabilistic bisimulation.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("validate", parents=[common], help="check a model")
    p.add_argument("file", nargs="?")

    p = commands.add_parser("minimize", parents=[common], help="partition and report")
    p.add_argument("file", nargs="?")
    semantics(p)
    p.add_argument("--out", help="write the quotient model here")

    p = commands.add_parser("quotient", parents=[common], help="print the quotient model")
    p.add_argument("file", nargs="?")
    semantics(p)
    p.add_argument("--out")

    p = commands.add_parser("mc", parents=[common], help="check a formula")
    p.add_argument("file", nargs="?")
    p.add_argument("--formula", required=True)

    p = commands.add_parser("generate", help="write a model")
    families = p.add_subparsers(dest="family", required=True)
    wsn = families.add_parser("wsn", parents=[common])
    wsn.add_argument("--sensors", type=int, required=True)
    wsn.add_argument("--p", required=True, metavar="LO,HI")
    wsn.add_argument("--out")
    csma = families.add_parser("csma", parents=[common])
    csma.add_argument("--nodes", type=int, required=True)
    csma.add_argument("--collisions", type=int, required=True)
    csma.add_argument("--send", required=True, metavar="LO,HI")
    csma.add_argument("--collide", required=True, metavar="LO,HI")
    csma.add_argument("--out")
    example1 = families.add_parser("example1", aliases=["pairs"], parents=[common])
    example1.add_argument("--out")

    p = commands.add_parser("report", parents=[common], help="reduction table")
    p.add_argument("files", nargs="+")
    semantics(p)

    p = commands.add_parser(
        "oracle-check", parents=[common], help="compare with brute force"
    )
    p.add_argument("file", nargs="?")
    semantics(p)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Runs one command and returns its exit status."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse has already printed usage or help on the way out
        return EXIT_OK if e.code in (0, None) else EXIT_REJECTED
    if args.verbose:
        set_level(DEBUG)

    try:
        settings = Settings.from_env()
        if args.jobs is not None:
            if args.jobs < 1:
                raise ValueError(f"--jobs must be positive, got {args.jobs}")
            settings = settings.replace(jobs=args.jobs)
        command: Executable[int] = _COMMANDS[args.command](args, settings)
        return command.execute()
    except InvariantBreach as e:
        logger.error("internal invariant breached: %s", e)
        return EXIT_INTERNAL
    except (IntervalBisimError, ValueError, msgspec.ValidationError, OSError) as e:
        logger.error("%s", e)
        return EXIT_REJECTED
    except Exception:
        logger.exception("unexpected failure")
        return EXIT_INTERNAL


def main() -> int:
    return run(sys.argv[1:])
