"""Command handlers and the argparse front-end.

Each handler takes the parsed arguments plus a CommandContext and returns a
CommandResult whose fields are already wire-encoded: integers and rationals
as strings, field elements as {"modulus", "coeffs"} objects.
"""

import argparse
import logging
import sys
from contextlib import redirect_stderr, redirect_stdout
from typing import Callable, TextIO

from ..config import Config, ConfigManager
from ..core.errors import DomainError, PFrobeniusError, PreconditionError, exit_code_for
from ..core.types import Command, CommandResult, OutputFormat
from ..exactmath import serialize_value, warm_caches
from ..formulas import (
    PowerSumRequest,
    WeightedSumRequest,
    alternating_sum,
    frobenius,
    genus,
    lambda_power_is_one,
    power_sum,
    sylvester_sum,
    weighted_power_sum,
    weighted_sum_lambda_root,
    weighted_two_gen,
)
from ..oracle import complement_set, verify
from ..semigroup import Generators, PAperySet, apery_set, denumerant_table, validate_generators
from .lambda_spec import parse_lambda
from .output import render

logger = logging.getLogger(__name__)

ROW_COMMANDS = (Command.TABLE, Command.COMPLEMENT)


class CommandContext:
    """Per-invocation state: the loaded config and a p-Apery cache.

    Attributes:
        config: Effective configuration
    """

    def __init__(self, config: Config):
        self.config = config
        self._apery: dict[tuple[tuple[int, ...], int], PAperySet] = {}

    def apery(self, gens: Generators, p: int) -> PAperySet:
        key = (gens.values, p)
        if key not in self._apery:
            self._apery[key] = apery_set(
                gens,
                p,
                extra_factor=self.config.apery.initial_bound_factor,
                growth_factor=self.config.apery.growth_factor,
            )
        return self._apery[key]


# =============================================================================
# Argument types
# =============================================================================

def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _mu_list(text: str) -> list[int]:
    return [_non_negative(part) for part in text.split(",") if part.strip()]


# =============================================================================
# Handlers
# =============================================================================

def _header(gens: Generators, p: int) -> dict:
    return {"generators": gens.to_list(), "p": p}


def _cmd_apery(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    gens = validate_generators(args.generators)
    ap = ctx.apery(gens, args.p)
    return CommandResult(Command.APERY, {**_header(gens, args.p), "apery": serialize_value(list(ap.m))})


def _cmd_frobenius(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    gens = validate_generators(args.generators)
    value = frobenius(gens, args.p, apery=ctx.apery(gens, args.p))
    return CommandResult(Command.FROBENIUS, {**_header(gens, args.p), "frobenius": serialize_value(value)})


def _cmd_genus(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    gens = validate_generators(args.generators)
    value = genus(gens, args.p, apery=ctx.apery(gens, args.p), count_zero=not args.positive_only)
    return CommandResult(Command.GENUS, {**_header(gens, args.p), "genus": serialize_value(value)})


def _cmd_sylvester_sum(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    gens = validate_generators(args.generators)
    value = sylvester_sum(gens, args.p, apery=ctx.apery(gens, args.p))
    return CommandResult(Command.SYLVESTER_SUM, {**_header(gens, args.p), "sylvester_sum": serialize_value(value)})


def _cmd_power_sum(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    gens = validate_generators(args.generators)
    value = power_sum(PowerSumRequest(gens, args.p, args.mu), apery=ctx.apery(gens, args.p))
    fields = {**_header(gens, args.p), "mu": args.mu, "power_sum": serialize_value(value)}
    return CommandResult(Command.POWER_SUM, fields)


def _cmd_weighted_sum(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    lam = parse_lambda(args.lam)
    gens = validate_generators(args.generators)
    p, mu = args.p, args.mu

    if args.two_gen:
        if len(args.generators) != 2:
            raise DomainError(f"--two-gen needs exactly two generators, got {args.generators}")
        if mu != 1:
            raise DomainError(f"--two-gen evaluates mu = 1 only, got mu = {mu}")
        a, b = args.generators
        value = weighted_two_gen(a, b, p, lam)
        header = {"generators": [a, b], "p": p}
    elif lambda_power_is_one(lam, gens.a1) and not lam.is_one():
        if mu != 1:
            raise PreconditionError(
                f"lambda^{gens.a1} = 1: no closed form is available for mu = {mu}",
                alternative="mu = 1 or the verify oracle",
            )
        value = weighted_sum_lambda_root(gens, p, lam, apery=ctx.apery(gens, p))
        header = _header(gens, p)
    else:
        value = weighted_power_sum(WeightedSumRequest(gens, p, mu, lam), apery=ctx.apery(gens, p))
        header = _header(gens, p)

    fields = {**header, "mu": mu, "lambda": serialize_value(lam), "weighted_sum": serialize_value(value)}
    return CommandResult(Command.WEIGHTED_SUM, fields)


def _cmd_alternating_sum(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    gens = validate_generators(args.generators)
    value = alternating_sum(gens, args.p, apery=ctx.apery(gens, args.p))
    fields = {**_header(gens, args.p), "alternating_sum": serialize_value(value)}
    return CommandResult(Command.ALTERNATING_SUM, fields)


def _cmd_complement(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    gens = validate_generators(args.generators)
    members = complement_set(gens, args.p).elements
    rows = [["n"]] + [[str(n)] for n in members]
    fields = {**_header(gens, args.p), "complement": serialize_value(list(members))}
    return CommandResult(Command.COMPLEMENT, fields, rows=rows)


def _cmd_table(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    gens = validate_generators(args.generators)
    bound = args.bound if args.bound is not None else ctx.apery(gens, args.p).max()
    table = denumerant_table(gens, bound)
    rows = [["n", "d"]] + [[str(n), str(d)] for n, d in table.rows()]
    fields = {"generators": gens.to_list(), "bound": bound, "table": serialize_value(list(table.counts))}
    return CommandResult(Command.TABLE, fields, rows=rows)


def _cmd_verify(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    gens = validate_generators(args.generators)
    mus = args.mus if args.mus is not None else ctx.config.verify.mus
    specs = args.lambdas if args.lambdas is not None else ctx.config.verify.lambdas
    lambdas = [parse_lambda(spec) for spec in specs]

    report = verify(gens, args.p, mus=mus, lambdas=lambdas, lambda_labels=specs)
    summary = report.to_dict()
    fields = {
        **_header(gens, args.p),
        "verify": summary["checks"],
        "skipped": summary["skipped"],
        "all_match": summary["all_match"],
    }
    if not report.all_match:
        logger.warning(f"verify: {len(report.mismatches)} of {len(report.checks)} checks failed")
    return CommandResult(Command.VERIFY, fields, exit_code=0 if report.all_match else 1)


HANDLERS: dict[Command, Callable[[argparse.Namespace, CommandContext], CommandResult]] = {
    Command.APERY: _cmd_apery,
    Command.FROBENIUS: _cmd_frobenius,
    Command.GENUS: _cmd_genus,
    Command.SYLVESTER_SUM: _cmd_sylvester_sum,
    Command.POWER_SUM: _cmd_power_sum,
    Command.WEIGHTED_SUM: _cmd_weighted_sum,
    Command.ALTERNATING_SUM: _cmd_alternating_sum,
    Command.COMPLEMENT: _cmd_complement,
    Command.TABLE: _cmd_table,
    Command.VERIFY: _cmd_verify,
}

HELP = {
    Command.APERY: "p-Apery set with respect to the smallest generator",
    Command.FROBENIUS: "p-Frobenius number g_p",
    Command.GENUS: "p-genus n_p",
    Command.SYLVESTER_SUM: "p-Sylvester sum s_p",
    Command.POWER_SUM: "sum of n^mu over the p-gaps",
    Command.WEIGHTED_SUM: "sum of lambda^n n^mu over the p-gaps",
    Command.ALTERNATING_SUM: "sum of (-1)^n n over the p-gaps (odd a_1)",
    Command.COMPLEMENT: "brute-force list of the p-gaps",
    Command.TABLE: "denumerant table d(n) for n = 0..bound",
    Command.VERIFY: "check every closed form against brute force",
}


# =============================================================================
# Parser
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    """Build the argparse parser; options are accepted after the sub-command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-g", "--generators", type=_int_list, required=True,
                        help="comma-separated coprime positive generators, e.g. 5,7,11")
    common.add_argument("-p", type=_non_negative, default=0, help="representation threshold (default 0)")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=None,
                        help="output format (default: csv for table/complement, else config)")
    common.add_argument("--config", default=None, help="JSON configuration file")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")

    parser = argparse.ArgumentParser(
        prog="pfrobenius",
        description="Exact p-Frobenius numbers, p-genus, p-Sylvester sums and weighted power sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    subparsers = {cmd: sub.add_parser(cmd.value, parents=[common], help=HELP[cmd]) for cmd in Command}

    subparsers[Command.GENUS].add_argument("--positive-only", action="store_true",
                                           help="do not count n = 0 when p >= 1")
    subparsers[Command.POWER_SUM].add_argument("--mu", type=_non_negative, default=1)
    weighted = subparsers[Command.WEIGHTED_SUM]
    weighted.add_argument("--mu", type=_non_negative, default=1)
    weighted.add_argument("--lambda", dest="lam", required=True,
                          help="INT, NUM/DEN, zeta:M, gauss:RE,IM or nf:modulus=...;elem=...")
    weighted.add_argument("--two-gen", action="store_true",
                          help="closed two-generator form (a = first generator as given)")
    subparsers[Command.TABLE].add_argument("--bound", type=_non_negative, default=None,
                                           help="last n in the table (default: max of the p-Apery set)")
    verify_parser = subparsers[Command.VERIFY]
    verify_parser.add_argument("--mus", type=_mu_list, default=None, help="exponents to check, e.g. 0,1,2")
    verify_parser.add_argument("--lambda", dest="lambdas", action="append", default=None,
                               help="weight to check (repeatable)")
    return parser


# =============================================================================
# Entry point
# =============================================================================

def _resolve_format(command: Command, requested: str | None, config: Config) -> OutputFormat:
    if requested is not None:
        return OutputFormat(requested)
    if command in ROW_COMMANDS:
        return OutputFormat.CSV
    configured = OutputFormat(config.output.format)
    return OutputFormat.JSON if configured is OutputFormat.CSV else configured


def _apply_log_level(config: Config, verbose: int) -> None:
    level = getattr(logging, config.logging.level, logging.WARNING)
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = min(level, logging.INFO)
    logging.getLogger().setLevel(level)


def run(argv: list[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Parse argv, run one command and print its result.

    Args:
        argv: Arguments without the program name (default sys.argv[1:])
        stdout: Stream for the result (default sys.stdout)
        stderr: Stream for diagnostics (default sys.stderr)

    Returns:
        Exit code: 0 success, 1 verify mismatch, 2 usage, 3 domain, 4 consistency
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        # argparse prints usage, errors and --help through sys.stdout / sys.stderr
        with redirect_stdout(stdout), redirect_stderr(stderr):
            args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    command = Command(args.command)
    config = ConfigManager(args.config).load()
    _apply_log_level(config, args.verbose)
    warm_caches(config.cache.bernoulli_warmup, config.cache.eulerian_warmup)

    logger.info(f"Running {command.value} for generators {args.generators}, p={args.p}")
    try:
        result = HANDLERS[command](args, CommandContext(config))
        text = render(result, _resolve_format(command, args.format, config), config.output.json_indent)
    except PFrobeniusError as e:
        logger.debug(f"{command.value} failed", exc_info=True)
        print(f"error: {e}", file=stderr)
        return exit_code_for(e)
    except Exception as e:
        logger.exception(f"Unexpected failure in {command.value}")
        print(f"internal error: {e}", file=stderr)
        return exit_code_for(e)

    print(text, file=stdout)
    logger.info(f"{command.value} finished with exit code {result.exit_code}")
    return result.exit_code
