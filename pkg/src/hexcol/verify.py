"""Property suites run by ``hexcol verify``."""

from __future__ import annotations

from typing import TYPE_CHECKING

from hexcol.coloring import coloring_homology, permitted_space
from hexcol.enums import CochainKind, VerifySuite
from hexcol.exceptions import FieldError, VerificationError
from hexcol.hexagon import (
    BUILTIN_COCYCLES,
    builtin_cocycle,
    coboundary,
    is_cocycle,
    random_cochain,
)
from hexcol.homology import coboundary_cochain
from hexcol.invariants import GenericColoring, chain_map, gcol
from hexcol.limits import verify_limits
from hexcol.pachner import all_selections, verify_cluster
from hexcol.utils import Check, first_failure, logger

if TYPE_CHECKING:
    import numpy as np

    from hexcol.complex import SimplicialComplex
    from hexcol.fields import FieldSpec
    from hexcol.hexagon import HexCochain

__all__ = [
    "pachner_suite",
    "cocycle_suite",
    "chain_map_suite",
    "class_suite",
    "run_suite",
]


def _tally(name: str, failures: int, trials: int, detail: str = "") -> Check:
    summary = f"{trials - failures}/{trials} trials"
    return Check(name, not failures, f"{summary}, {detail}" if detail else summary)


def pachner_suite(field: FieldSpec) -> tuple[Check, ...]:
    """One check per move cluster, each cluster checked on both sides."""
    checks = []
    for C in all_selections():
        report = verify_cluster(C.k, C.selection, field)
        failure = first_failure(list(report.checks))
        label = "".join(map(str, C.selection))
        checks.append(
            Check(
                f"{C.kind}[{label}]",
                report.passed,
                "" if failure is None else f"{failure.name}: {failure.detail}",
            )
        )
    return tuple(checks)


def _available_cocycles(field: FieldSpec) -> list[HexCochain]:
    cocycles = []
    for name in BUILTIN_COCYCLES:
        try:
            cocycles.append(builtin_cocycle(name, field))
        except FieldError:
            logger.debug("Skipping %s over %s", name, field.name)
    return cocycles


def cocycle_suite(field: FieldSpec, rng: np.random.Generator) -> tuple[Check, ...]:
    """Built-in cocycles are cocycles and ``delta delta`` vanishes."""
    checks = []
    for name in BUILTIN_COCYCLES:
        try:
            c = builtin_cocycle(name, field)
        except FieldError:
            logger.debug("Skipping %s over %s", name, field.name)
            continue
        except VerificationError as exception:
            checks.append(Check(name, False, str(exception)))  # noqa: FBT003
            continue
        checks.append(Check(name, is_cocycle(c)))
    b = random_cochain(3, 2, field, rng)
    checks.append(Check("coboundary_squared", coboundary(coboundary(b)).is_zero()))
    return tuple(checks)


def chain_map_suite(
    K: SimplicialComplex,
    field: FieldSpec,
    rng: np.random.Generator,
    trials: int,
) -> tuple[Check, ...]:
    """Evaluating ``delta c`` equals the simplicial coboundary of evaluating ``c``.

    Each trial draws a permitted coloring of ``K`` and a level 3 cochain of
    degree at most 2.
    """
    V = permitted_space(K, field)
    failures = 0
    for _ in range(trials):
        coloring = V.combination([field.random(rng) for _ in range(V.dim)])
        c = random_cochain(3, 2, field, rng)
        upper = chain_map(K, coboundary(c), coloring, check=False)
        lower = coboundary_cochain(K, 3, chain_map(K, c, coloring, check=False), field)
        failures += upper != lower
    return (_tally("chain_map_commutes", failures, trials),)


def _perturbed(coloring: GenericColoring, rng: np.random.Generator) -> GenericColoring:
    homology = coloring.homology
    field = homology.field
    V0 = homology.edge_generated
    lifts = []
    for row in coloring.lifts.to_dense():
        shift = V0.combination([field.random(rng) for _ in range(V0.dim)])
        lifts.append([field.add(a, b) for a, b in zip(row, shift)])
    return GenericColoring(homology, lifts)


def _degree(c: HexCochain) -> int:
    return 2 if c.kind == CochainKind.BILINEAR else c.poly.degree


def class_suite(
    K: SimplicialComplex,
    field: FieldSpec,
    rng: np.random.Generator,
    trials: int,
) -> tuple[Check, ...]:
    """Invariant polynomials ignore the choice of lifts and of cocycle representative.

    Lifts are shifted by random edge-generated colorings; level 4 cocycles are
    shifted by coboundaries of random level 3 cochains of the same kind.
    """
    homology = coloring_homology(K, field)
    base = GenericColoring(homology)
    cocycles = [c for c in _available_cocycles(field) if c.level <= K.dimension]
    baseline = [(c, gcol(K, c, base)) for c in cocycles]
    lift_failures = shift_failures = shifts = 0
    for _ in range(trials):
        perturbed = _perturbed(base, rng)
        for c, expected in baseline:
            lift_failures += gcol(K, c, perturbed) != expected
            if c.level == 4:  # noqa: PLR2004
                b = random_cochain(3, _degree(c), field, rng, c.kind)
                shifted = c + coboundary(b)
                shift_failures += gcol(K, shifted, base) != expected
                shifts += 1
    return (
        _tally("lift_independent", lift_failures, trials, f"{len(cocycles)} cocycles"),
        _tally("representative_independent", shift_failures, shifts),
    )


def run_suite(
    suite: VerifySuite | str,
    field: FieldSpec,
    rng: np.random.Generator,
    *,
    K: SimplicialComplex | None = None,
    trials: int = 20,
) -> tuple[Check, ...]:
    """Run ``suite``; the chain map and class suites need a complex ``K``.

    Raises:
        ValueError: Unknown suite, or ``K`` missing for a suite needing one.
    """
    suite = VerifySuite(suite)
    if suite == VerifySuite.PACHNER:
        checks = pachner_suite(field)
    elif suite == VerifySuite.COCYCLES:
        checks = cocycle_suite(field, rng)
    elif suite == VerifySuite.LIMIT:
        checks = verify_limits(field, trials, rng)
    else:
        if K is None:
            msg = f"The {suite} suite runs on a complex"
            raise ValueError(msg)
        runner = chain_map_suite if suite == VerifySuite.CHAINMAP else class_suite
        checks = runner(K, field, rng, trials)
    failure = first_failure(list(checks))
    logger.info(
        "Suite %s over %s: %s",
        suite,
        field.name,
        "passed" if failure is None else f"failed {failure.name}",
    )
    return checks
