"""Command line frontend.

Every command builds a report: a JSON object carrying the envelope
``tool, version, command, field, seed, fixture, fixture_hash`` and the
command's payload. ``--out text`` prints the same content for reading.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import logging
from pathlib import Path
from typing import TYPE_CHECKING, Any, Callable, Dict, Sequence

import numpy as np

from hexcol.coloring import coloring_homology
from hexcol.complex import (
    Triangulation,
    fixture_hash,
    parse_triangulation,
    serialize_triangulation,
    staircase_product,
)
from hexcol.config import active_caps, applied_caps
from hexcol.enums import CochainKind, OutputFormat, QuotientConvention, VerifySuite
from hexcol.exceptions import (
    CocycleError,
    HexcolError,
    InputError,
    ResourceCapError,
    VerificationError,
)
from hexcol.fields import parse_field
from hexcol.fixtures import fixture, fixture_info, fixture_names
from hexcol.hexagon import (
    BUILTIN_COCYCLES,
    builtin_cocycle,
    hex_cohomology,
    is_cocycle,
    parse_cochain,
)
from hexcol.homology import betti_numbers
from hexcol.invariants import (
    GenericColoring,
    bilinear_rank,
    equality_report,
    gcol,
    value_distribution,
)
from hexcol.utils import Check, first_failure, get_version, logger
from hexcol.verify import run_suite

if TYPE_CHECKING:
    from hexcol.fields import FieldSpec
    from hexcol.hexagon import HexCochain
    from hexcol.invariants import InvariantPolynomial

__all__ = [
    "EXIT_OK",
    "EXIT_VERIFICATION",
    "EXIT_INPUT",
    "EXIT_CAP",
    "build_parser",
    "cmd_homology",
    "cmd_invariants",
    "cmd_verify",
    "cmd_search",
    "cmd_product",
    "cmd_fixtures",
    "cmd_limit_check",
    "run",
]

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_CAP = 3

Report = Dict[str, Any]

_SUITES_ON_COMPLEX = (VerifySuite.CHAINMAP, VerifySuite.CLASSDEP)


class _Context:
    """Parsed arguments shared by every command."""

    def __init__(self, args: argparse.Namespace) -> None:
        self.args = args
        self.field: FieldSpec | None = (
            parse_field(args.field) if getattr(args, "field", None) else None
        )
        self.rng = np.random.default_rng(args.seed)
        self.complex: Triangulation | None = None
        self.fixture: str | None = None

    def load(self, default: str | None = None) -> Triangulation:
        """Complex named by ``--fixture`` or read from ``--input``."""
        args = self.args
        if getattr(args, "input", None):
            path = Path(args.input)
            try:
                document = path.read_text(encoding="utf-8")
            except OSError as exception:
                msg = f"Cannot read '{path}': {exception.strerror}"
                raise InputError(msg) from exception
            self.fixture = str(path)
            self.complex = parse_triangulation(document)
        else:
            name = getattr(args, "fixture", None) or default
            if name is None:
                msg = "Give a complex with --fixture NAME or --input PATH"
                raise InputError(msg)
            self.fixture = name
            self.complex = fixture(name)
        logger.info("Loaded %s: %r", self.fixture, self.complex)
        return self.complex

    def envelope(self) -> Report:
        return {
            "tool": "hexcol",
            "version": get_version(),
            "command": self.args.command,
            "field": None if self.field is None else str(self.field),
            "seed": self.args.seed,
            "fixture": self.fixture,
            "fixture_hash": (
                None if self.complex is None else fixture_hash(self.complex)
            ),
        }


def _checks(checks: Sequence[Check]) -> list[Report]:
    return [
        {"name": check.name, "passed": check.passed, "detail": check.detail}
        for check in checks
    ]


def _require_field(context: _Context) -> FieldSpec:
    if context.field is None:
        msg = "This command needs --field"
        raise InputError(msg)
    return context.field


def cmd_homology(context: _Context) -> tuple[int, Report]:
    """Coloring homology of a complex next to its ordinary cohomology."""
    field = _require_field(context)
    K = context.load()
    homology = coloring_homology(K, field)
    betti = betti_numbers(K, field)
    payload: Report = {
        "f_vector": list(K.f_vector),
        "dim_V": homology.permitted.dim,
        "dim_V0": homology.edge_generated.dim,
        "d": homology.d,
        "betti": list(betti),
    }
    code = EXIT_OK
    if K.dimension == 4:  # noqa: PLR2004
        predicted = betti[2] + betti[3]
        payload["h2_plus_h3"] = predicted
        payload["formula_holds"] = predicted == homology.d
        if predicted != homology.d:
            code = EXIT_VERIFICATION
    return code, payload


def _named_cocycles(
    context: _Context,
    field: FieldSpec,
) -> list[tuple[str, HexCochain]]:
    args = context.args
    cocycles = []
    if args.cocycle_file:
        path = Path(args.cocycle_file)
        try:
            lines = path.read_text(encoding="utf-8").splitlines()
        except OSError as exception:
            msg = f"Cannot read '{path}': {exception.strerror}"
            raise InputError(msg) from exception
        for number, line in enumerate(lines, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            name, _, literal = text.rpartition("=")
            c = parse_cochain(literal, field)
            cocycles.append((name.strip() or f"{path.name}:{number}", c))
    names = args.cocycles.split(",") if args.cocycles else []
    if not names and not cocycles:
        names = [name for name in BUILTIN_COCYCLES if "cubic" not in name]
        if field.characteristic == 2:  # noqa: PLR2004
            names += ["c4_cubic_1", "c4_cubic_2"]
    cocycles += [(name.strip(), builtin_cocycle(name.strip(), field)) for name in names]
    return cocycles


BASIS_NOTE = (
    "Polynomials are written in a basis of H_col chosen by reduced row echelon "
    "form; they change by invertible linear substitution with the basis. Value "
    "distributions, bilinear ranks and q_eq_r do not depend on it."
)


def _terms(P: InvariantPolynomial) -> list[Report]:
    field = P.poly.field
    return [
        {"exponent": list(exponent), "coefficient": field.format(coeff)}
        for exponent, coeff in P.poly.terms()
    ]


def cmd_invariants(context: _Context) -> tuple[int, Report]:
    """Invariant polynomials of hexagon cocycles, their value distributions."""
    field = _require_field(context)
    K = context.load()
    max_extension = context.args.max_extension
    if max_extension < 1:
        msg = f"--max-extension must be at least 1, got {max_extension}"
        raise InputError(msg)
    coloring = GenericColoring(coloring_homology(K, field))
    entries = []
    names = []
    polynomials: list[Report] = []
    distributions: list[Report] = []
    for name, c in _named_cocycles(context, field):
        if not is_cocycle(c):
            msg = f"{name} is not a hexagon cocycle"
            raise InputError(msg)
        names.append(name)
        nested = []
        for P in gcol(K, c, coloring):
            poly_name = f"{name}/{P.label}"
            entry: Report = {"label": P.label, "poly": P.format()}
            polynomials.append(
                {"name": poly_name, "degree": P.poly.degree, "terms": _terms(P)},
            )
            if c.kind == CochainKind.BILINEAR:
                entry["rank"] = bilinear_rank(P)
            if field.is_prime_field:
                entry["distributions"] = {}
                for k in range(1, max_extension + 1):
                    counts = value_distribution(P, k).format()
                    entry["distributions"][str(k)] = counts
                    distributions.append({"poly": poly_name, "k": k, "counts": counts})
            nested.append(entry)
        entries.append(
            {
                "name": name,
                "level": c.level,
                "kind": str(c.kind),
                "polynomials": nested,
            },
        )
    payload: Report = {
        "manifold": context.fixture,
        "d": coloring.nvars,
        "basis_note": BASIS_NOTE,
        "polynomials": polynomials,
        "distributions": distributions,
        "cocycles": entries,
    }
    if {"c4_cubic_1", "c4_cubic_2"} <= set(names):
        payload["q_eq_r"] = equality_report(K, field, coloring).equal
    return EXIT_OK, payload


def cmd_verify(context: _Context) -> tuple[int, Report]:
    """Run a property suite."""
    field = _require_field(context)
    suite = VerifySuite(context.args.suite)
    K = context.load(default="CP2") if suite in _SUITES_ON_COMPLEX else None
    checks = run_suite(suite, field, context.rng, K=K, trials=context.args.trials)
    passed = first_failure(list(checks)) is None
    payload = {"suite": str(suite), "checks": _checks(checks), "pass": passed}
    return (EXIT_OK if passed else EXIT_VERIFICATION), payload


def cmd_search(context: _Context) -> tuple[int, Report]:
    """Hexagon cocycles modulo coboundaries at one level and degree."""
    field = _require_field(context)
    args = context.args
    kind = CochainKind(args.kind)
    report = hex_cohomology(
        args.level,
        args.degree,
        field,
        kind,
        QuotientConvention(args.convention),
    )
    located = {}
    for name in BUILTIN_COCYCLES:
        try:
            c = builtin_cocycle(name, field)
        except HexcolError:
            continue
        if c.level != args.level or c.kind != kind:
            continue
        if kind == CochainKind.POLYNOMIAL and c.poly.degree > args.degree:
            continue
        try:
            located[name] = report.coordinates(c)
        except CocycleError:
            logger.debug("%s lies outside the searched cochains", name)
    payload: Report = {
        "level": report.level,
        "degree": report.degree,
        "kind": str(report.kind),
        "convention": str(report.convention),
        "dims": {
            str(convention): dict(zip(("cocycles", "coboundaries", "cohomology"), dims))
            for convention, dims in report.dims.items()
        },
        "representatives": [c.format() for c in report.representatives],
        "builtin_classes": located,
    }
    return EXIT_OK, payload


def cmd_product(context: _Context) -> tuple[int, Report]:
    """Staircase product of two fixtures."""
    args = context.args
    first, second = fixture(args.first), fixture(args.second)
    product = staircase_product(first, second)
    context.fixture = f"{args.first}x{args.second}"
    context.complex = product
    payload: Report = {
        "f_vector": list(product.f_vector),
        "document": serialize_triangulation(product, fmt="json"),
    }
    if args.write:
        path = Path(args.write)
        try:
            path.write_text(serialize_triangulation(product), encoding="utf-8")
        except OSError as exception:
            msg = f"Cannot write '{path}': {exception.strerror}"
            raise InputError(msg) from exception
        payload["written"] = args.write
    return EXIT_OK, payload


def cmd_fixtures(context: _Context) -> tuple[int, Report]:  # noqa: ARG001
    """Registered fixtures."""
    entries = []
    for name in fixture_names():
        info = fixture_info(name)
        entries.append(
            {
                "name": info.name,
                "description": info.description,
                "source": info.source,
                "expected_d": info.expected_d,
            },
        )
    return EXIT_OK, {"fixtures": entries}


def cmd_limit_check(context: _Context) -> tuple[int, Report]:
    """Shortcut for ``verify limit``."""
    context.args.suite = VerifySuite.LIMIT.value
    return cmd_verify(context)


_COMMANDS: dict[str, Callable[[_Context], tuple[int, Report]]] = {
    "homology": cmd_homology,
    "invariants": cmd_invariants,
    "verify": cmd_verify,
    "search": cmd_search,
    "product": cmd_product,
    "fixtures": cmd_fixtures,
    "limit-check": cmd_limit_check,
}


def _add_complex_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--fixture", help="registered fixture name")
    group.add_argument("--input", help="triangulation document, text or JSON")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser of the ``hexcol`` command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="coefficient field, 'p' or 'p^k'")
    common.add_argument(
        "--out",
        choices=[str(f) for f in OutputFormat],
        default=str(OutputFormat.TEXT),
        help="report format",
    )
    common.add_argument("--seed", type=int, default=0, help="random seed")
    common.add_argument("--max-enumeration-points", type=int)
    common.add_argument("--max-monomial-columns", type=int)
    common.add_argument("--max-gl-search", type=int)
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true")
    verbosity.add_argument("-q", "--quiet", action="store_true")

    parser = argparse.ArgumentParser(
        prog="hexcol",
        description="Coloring homology and hexagon cocycle invariants.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    homology = commands.add_parser(
        "homology",
        parents=[common],
        help=cmd_homology.__doc__,
    )
    _add_complex_arguments(homology)

    invariants = commands.add_parser(
        "invariants",
        parents=[common],
        help=cmd_invariants.__doc__,
    )
    _add_complex_arguments(invariants)
    cocycles = invariants.add_mutually_exclusive_group()
    cocycles.add_argument("--cocycles", help=f"comma separated, of {BUILTIN_COCYCLES}")
    cocycles.add_argument("--cocycle-file", help="one cochain literal per line")
    invariants.add_argument("--max-extension", type=int, default=1)

    verify = commands.add_parser("verify", parents=[common], help=cmd_verify.__doc__)
    verify.add_argument("suite", choices=[str(s) for s in VerifySuite])
    verify.add_argument("--trials", type=int, default=20)
    _add_complex_arguments(verify)

    search = commands.add_parser("search", parents=[common], help=cmd_search.__doc__)
    search.add_argument("--level", type=int, required=True)
    search.add_argument("--degree", type=int, required=True)
    search.add_argument(
        "--kind",
        choices=[str(k) for k in CochainKind],
        default=str(CochainKind.POLYNOMIAL),
    )
    search.add_argument(
        "--convention",
        choices=[str(c) for c in QuotientConvention],
        default=str(QuotientConvention.BOUNDED),
    )

    product = commands.add_parser("product", parents=[common], help=cmd_product.__doc__)
    product.add_argument("first")
    product.add_argument("second")
    product.add_argument("--write", help="also write the text document here")

    fixtures = commands.add_parser(
        "fixtures",
        parents=[common],
        help=cmd_fixtures.__doc__,
    )
    fixtures.add_argument("action", choices=["list"])

    limit = commands.add_parser(
        "limit-check",
        parents=[common],
        help=cmd_limit_check.__doc__,
    )
    limit.add_argument("--trials", type=int, default=100)
    return parser


def _caps(args: argparse.Namespace) -> dict[str, int]:
    names = ("max_enumeration_points", "max_monomial_columns", "max_gl_search")
    values = {name: getattr(args, name) for name in names}
    return {name: value for name, value in values.items() if value is not None}


_TEXT_SKIPPED = {
    "tool",
    "version",
    "command",
    "field",
    "seed",
    "fixture",
    "manifold",
    "polynomials",
    "distributions",
    "document",
}


def _format_text(report: Report) -> str:
    field = parse_field(report["field"]).name if report["field"] else "-"
    lines = [f"M = {report['fixture'] or '-'}, F = {field}"]
    for key, value in report.items():
        if key in _TEXT_SKIPPED:
            continue
        if key == "checks":
            lines += [
                f"  {'ok  ' if c['passed'] else 'FAIL'} {c['name']} {c['detail']}"
                for c in value
            ]
        elif key == "cocycles":
            for entry in value:
                header = f"{entry['kind']}, level {entry['level']}"
                lines.append(f"{entry['name']} ({header})")
                for poly in entry["polynomials"]:
                    lines.append(f"  {poly['label']} = {poly['poly'] or '0'}")
                    for k, counts in poly.get("distributions", {}).items():
                        lines.append(f"    values, extension degree {k}: {counts}")
        elif key == "fixtures":
            lines += [
                f"  {f['name']:<8} {f['source']:<9} d={f['expected_d']} "
                f"{f['description']}"
                for f in value
            ]
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def run(argv: Sequence[str] | None = None) -> int:
    """Entry point of the ``hexcol`` command, returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.ERROR
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        context = _Context(args)
        with applied_caps(active_caps().replace(**_caps(args))):
            code, payload = _COMMANDS[args.command](context)
    except ResourceCapError as exception:
        logger.error("%s", exception)  # noqa: TRY400
        return EXIT_CAP
    except VerificationError as exception:
        logger.error("%s", exception)  # noqa: TRY400
        return EXIT_VERIFICATION
    except (HexcolError, ValueError) as exception:
        logger.error("%s", exception)  # noqa: TRY400
        return EXIT_INPUT

    report = {**context.envelope(), **payload}
    if args.out == OutputFormat.JSON:
        print(json.dumps(report, indent=2, sort_keys=True))  # noqa: T201
    else:
        print(_format_text(report))  # noqa: T201
    return code
