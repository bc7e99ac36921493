#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# cli.py

"""
Command-line front end.

Every subcommand computes a certificate and emits a ``Report``, as a text box
or as a single JSON object. The exit status follows the verdict: 0 for
``dense``, ``accepted``, ``found`` and ``verified``; 1 for ``not-dense``,
``rejected``, ``exhausted`` and ``failed``; 2 for ``inconclusive``; 64 for
malformed input and unmet preconditions.
"""

import argparse
import logging
import re
import sys
import time

from . import (
    __about__,
    config,
    constants,
    density,
    exceptions,
    hondatate,
    jsonify,
    localunits,
    quadfield,
    quaternion,
    stabilizer,
    utils,
)
from .models import Report
from .registry import Registry

log = logging.getLogger(__name__)

#: Exceptions raised when a computational cap is reached. They make the
#: verdict inconclusive rather than failing the command.
CAP_ERRORS = (
    exceptions.ClosureSizeError,
    exceptions.FundamentalUnitError,
    exceptions.GeneratorSearchBoundError,
    exceptions.StabilizationError,
)


class CommandRegistry(Registry):
    """Storage for subcommands.

    Each entry is a function taking the parsed arguments and returning
    ``(verdict, certificate)``; its ``arguments`` attribute lists the
    ``(flags, kwargs)`` pairs passed to ``add_argument``.
    """

    desc = "commands"


COMMANDS = CommandRegistry()


def command(name, help_text, *arguments):
    """Register a subcommand with its argument definitions."""
    return COMMANDS.register(name, help_text=help_text, arguments=arguments)


class UsageParser(argparse.ArgumentParser):
    """An ``ArgumentParser`` that raises ``UsageError`` instead of exiting."""

    def error(self, message):
        raise exceptions.UsageError("{}\n{}".format(message, self.format_usage()))


# Argument definitions
# =============================================================================


def _int_list(text):
    try:
        return utils.parse_int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma list of integers")


#: A rational prime or a parenthesized ideal such as ``(181, 151+1*w)``.
PRIME_ITEM = r"\([^()]*\)|[^,()\s]+"


def _prime_items(text):
    if not text.strip():
        return []
    pattern = r"\s*(?:{0})(?:\s*,\s*(?:{0}))*\s*".format(PRIME_ITEM)
    if not re.fullmatch(pattern, text):
        raise argparse.ArgumentTypeError(
            "expected a comma list of primes and ideals such as (181, 151+1*w)"
        )
    return re.findall(PRIME_ITEM, text)


def _sigma(text):
    if text in ("none", "all"):
        return text
    try:
        return tuple(utils.parse_int_list(text))
    except ValueError:
        raise argparse.ArgumentTypeError("expected none, all or a list of places")


FIELD = (("-d",), dict(type=int, required=True, help="squarefree d of Q(sqrt(d))"))
PRIME = (("-p",), dict(type=int, required=True, help="the prime p"))
SIGMA = (
    ("--sigma",),
    dict(type=_sigma, default="none", help="real places: none, all, or e.g. 0,1"),
)
EXCLUDE = (
    ("--exclude",),
    dict(type=_int_list, default=[], help="comma list of excluded primes"),
)


def _bound(default_option):
    return (
        ("--bound",),
        dict(
            type=int,
            default=None,
            help="search bound (default: config.{})".format(default_option),
        ),
    )


def resolve_sigma(F, sigma):
    if sigma == "none":
        return ()
    if sigma == "all":
        return constants.REAL_PLACES if F.is_real else ()
    return tuple(sigma)


# Commands
# =============================================================================


@command(
    "g-invariant",
    "compute g(P, Sigma) at the distinguished prime",
    FIELD,
    PRIME,
    SIGMA,
)
def g_invariant_command(args):
    F = quadfield.make_field(args.d)
    report = density.g_invariant(F, args.p, resolve_sigma(F, args.sigma))
    Q = localunits.unit_quotient(F, report.prime)
    certificate = {
        "density": report,
        "quotient": Q,
        "local_bound": density.local_bound(F, report.prime, report.g),
    }
    return report.verdict, certificate


@command(
    "density-check",
    "decide whether the sign-restricted S-units are dense",
    FIELD,
    PRIME,
    (
        ("-S",),
        dict(
            type=_prime_items,
            default=[],
            help="comma list of primes and prime ideals, e.g. 7,(181, 151+1*w)",
        ),
    ),
    SIGMA,
)
def density_check_command(args):
    F = quadfield.make_field(args.d)
    S = [quadfield.parse_prime(F, item) for item in args.S]
    report = density.is_dense(F, S, resolve_sigma(F, args.sigma), args.p)
    return report.verdict, {"density": report}


@command(
    "witness",
    "search for a minimal set S making the S-units dense",
    FIELD,
    PRIME,
    SIGMA,
    _bound("WITNESS_SEARCH_BOUND"),
    EXCLUDE,
)
def witness_command(args):
    F = quadfield.make_field(args.d)
    sigma = resolve_sigma(F, args.sigma)
    args.bound = config.WITNESS_SEARCH_BOUND if args.bound is None else args.bound
    result = density.witness_primes(F, args.p, sigma, args.bound, args.exclude)
    certificate = {"witness": result}
    if not result.found:
        return "exhausted", certificate
    check = density.is_dense(F, result.S, sigma, args.p)
    certificate["density"] = check
    certificate["minimal"] = density.minimal_witness_check(F, result.S, sigma, args.p)
    verdict = "found" if check.dense and certificate["minimal"] else "failed"
    return verdict, certificate


@command(
    "weil",
    "analyze the Weil polynomial x^2 - t x + p^a",
    (("-t", "--trace"), dict(type=int, default=0, help="the trace t")),
    PRIME,
    (("-a",), dict(type=int, default=1, help="the exponent a of q = p^a")),
    (("--real",), dict(action="store_true", help="use x^2 - p^a instead")),
)
def weil_command(args):
    W = hondatate.weil_class(args.trace, args.p, args.a, real=args.real)
    return "verified", {"weil": W}


@command(
    "isogclass",
    "certify the class of x^2 - p x + p^n",
    PRIME,
    (("-n",), dict(type=int, required=True, help="the dimension n >= 3")),
)
def isogclass_command(args):
    try:
        W = hondatate.isogclass(args.p, args.n)
    except exceptions.IsogClassError as e:
        return "failed", {"error": str(e)}
    return "verified", {"weil": W}


@command(
    "modular1",
    "certify density of the units of End(A)[1/l] at finite levels",
    PRIME,
    (("-n",), dict(type=int, required=True, help="the dimension n >= 3")),
    (("-l",), dict(type=int, default=None, help="the auxiliary prime")),
    (("-m", "--m-max"), dict(type=int, default=4, help="largest level")),
)
def modular1_command(args):
    cert = stabilizer.modular1_certificate(args.p, args.n, args.l, args.m_max)
    args.l = cert.l
    return ("verified" if cert.accepted else "rejected"), {"modular1": cert}


@command(
    "topgen",
    "test or find a topological generator of Z_p^*",
    PRIME,
    (("-l",), dict(type=int, default=None, help="test this candidate only")),
    EXCLUDE,
)
def topgen_command(args):
    if args.l is not None:
        cert = stabilizer.is_topological_generator(args.l, args.p)
        return ("accepted" if cert.accepted else "rejected"), {"topgen": cert}
    cert = stabilizer.find_topgen(args.p, args.exclude)
    return "found", {"topgen": cert}


@command(
    "torus-search",
    "find l whose norm-one element is dense in the split torus",
    FIELD,
    PRIME,
    _bound("TORUS_SEARCH_BOUND"),
)
def torus_search_command(args):
    F = quadfield.make_field(args.d)
    args.bound = config.TORUS_SEARCH_BOUND if args.bound is None else args.bound
    cert = stabilizer.approxtorus_search(F, args.p, args.bound)
    return "found", {"torus": cert}


@command(
    "unitary-index",
    "index of the closure of <beta> at level m",
    FIELD,
    PRIME,
    (("-l",), dict(type=int, required=True, help="a split prime")),
    (("-m",), dict(type=int, default=1, help="the level")),
)
def unitary_index_command(args):
    F = quadfield.make_field(args.d)
    result = stabilizer.unitary_index(F, args.p, args.l, args.m)
    return ("verified" if result.within_bound else "failed"), {"index": result}


@command("fiber", "classify the fiber of the norm-one torus", FIELD, PRIME)
def fiber_command(args):
    F = quadfield.make_field(args.d)
    kind = stabilizer.torus_fiber(F, args.p)
    return "found", {"kind": kind, "splitting": quadfield.splitting_type(F, args.p)}


@command(
    "quaternion-verify",
    "compare the closure of S-unit images with the norm target group",
    PRIME,
    (("-l",), dict(type=int, required=True, help="the auxiliary prime")),
    (("-m",), dict(type=int, default=1, help="the level")),
    (("-k", "--k-max"), dict(type=int, default=3, help="largest norm power")),
)
def quaternion_verify_command(args):
    report = quaternion.closure_check(args.p, args.l, args.m, args.k_max)
    return report.verdict, {"closure": report}


# Entry point
# =============================================================================


def build_parser():
    parser = UsageParser(
        prog=__about__.__title__, description=__about__.__description__
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + __about__.__version__
    )
    parser.add_argument(
        "--format", choices=["text", "json"], default="text", help="report format"
    )
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for name in COMMANDS:
        handler = COMMANDS[name]
        sub = subparsers.add_parser(name, help=handler.help_text)
        for flags, kwargs in handler.arguments:
            sub.add_argument(*flags, **kwargs)
        sub.add_argument(
            "--format", choices=["text", "json"], default=argparse.SUPPRESS
        )
    return parser


def dispatch(argv):
    """Parse ``argv`` and run the subcommand.

    Returns:
        tuple[Report, str]: The report and the requested output format.

    Raises:
        UsageError: If ``argv`` is malformed or a precondition fails.
    """
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command]
    start = time.perf_counter()
    try:
        verdict, certificate = handler(args)
    except CAP_ERRORS as e:
        log.warning("%s reached a cap: %s", args.command, e)
        verdict = constants.INCONCLUSIVE
        certificate = {"error": type(e).__name__, "message": str(e)}
    except exceptions.SearchExhaustedError as e:
        verdict, certificate = "exhausted", {"message": str(e)}
    except ValueError as e:
        raise exceptions.UsageError("{}: {}".format(args.command, e)) from e
    elapsed_ms = round((time.perf_counter() - start) * 1000)
    inputs = {
        key: value
        for key, value in vars(args).items()
        if key not in ("command", "format")
    }
    report = Report(args.command, inputs, verdict, certificate, elapsed_ms)
    return report, args.format


def emit(report, fmt="text", stream=None):
    """Write ``report`` to ``stream`` as text or JSON."""
    stream = sys.stdout if stream is None else stream
    if fmt == "json":
        stream.write(jsonify.dumps(report) + "\n")
    else:
        stream.write(str(report) + "\n")


def main(argv=None):
    """Run the command line and return the exit status."""
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        report, fmt = dispatch(argv)
    except exceptions.UsageError as e:
        sys.stderr.write("{}: error: {}\n".format(__about__.__title__, e))
        return constants.EXIT_USAGE
    emit(report, fmt)
    return report.exit_code
