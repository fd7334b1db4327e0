"""
Command-line frontend.

Every subcommand writes one report to stdout; logs go to stderr. Exit
codes: 0 found or success, 1 verified not found, 2 error.
"""
import argparse
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import structlog

from app.algebra.automata import (
    Automaton,
    add_mod_semiautomaton,
    build_near_definite_automaton,
    build_near_ring_zn,
    freeness_check,
    input_projection,
    tuple_alphabet_automaton,
)
from app.algebra.constructors import (
    build_poly_quotient,
    format_poly,
    inverse_in_quotient,
    is_irreducible,
    poly_mul,
    prime_subfield_matches_zp,
    quotient_is_field,
)
from app.algebra.detect import (
    Certificate,
    Conjecture,
    DetectMode,
    Family,
    Property,
    SymbolicStructure,
    certify,
    detect,
    sweep,
    verify_certificate,
)
from app.algebra.errors import AlgebraError, Malformed, NotCommutative, Unsupported
from app.algebra.finite import MAGMA_CHECKERS, RING_CHECKERS, FiniteRingTable, StructureClass, check_class
from app.algebra.ideals import (
    classify_all,
    classify_group_side,
    classify_nZ,
    find_s_definite_ideals,
    find_s_ideal,
    format_subset,
    s_special_definite_ideal,
    verify_semigroup_ideal,
)
from app.algebra.linear import (
    SemiVecDescriptor,
    as_vector,
    audit_inner_product,
    inner_product,
    is_s_definite_basis,
    is_semivector_space,
    orthogonality_readings,
    s_definite_dimension,
)
from app.algebra.symbolic import (
    Ambient,
    double_coset,
    format_set,
    intersect,
    is_closed_add,
    is_closed_mul,
    left_coset,
    parse_set,
    set_product,
    subset_of,
)
from app.config import get_settings
from app.models.schemas import OutputFormat
from app.services.descriptor_service import BuiltStructure, get_descriptor_service
from app.services.report_service import (
    EXIT_ERROR,
    EXIT_FOUND,
    EXIT_NOT_FOUND,
    double_coset_discrepancies,
    get_report_service,
    orthogonality_discrepancies,
    quotient_discrepancies,
    to_jsonable,
)
from app.utils.logging import configure_logging
from app.utils.metrics import render_metrics

logger = structlog.get_logger()

Outcome = Tuple[Dict[str, Any], int, list]


# Argument parsing helpers

def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise Malformed(f"not a rational number: {text!r}") from None


def _integers(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise Malformed(f"expected comma-separated integers, got {text!r}") from None


def _vectors(text: str) -> List[Tuple[Fraction, ...]]:
    """``1,0,0;0,1/2,0`` -> two vectors."""
    return [tuple(_rational(c) for c in row.split(",")) for row in text.split(";") if row.strip()]


def _single_vector(text: str, option: str) -> Tuple[Fraction, ...]:
    vectors = _vectors(text)
    if len(vectors) != 1:
        raise Malformed(f"{option} takes exactly one vector, got {text!r}")
    return vectors[0]


def _letters(text: str) -> List[Any]:
    """``1;2`` -> integer letters, ``4,7,5;1,1,1`` -> tuple letters."""
    rows = [_integers(row) for row in text.split(";") if row.strip()]
    if "," not in text:
        return [r[0] for r in rows]
    return [tuple(r) for r in rows]


def _space(components: str, scalars: str, dimension: Optional[int]) -> SemiVecDescriptor:
    parts = [c for c in components.split(",") if c.strip()]
    if dimension is not None:
        if len(parts) != 1:
            raise Malformed("--dim takes a single component set")
        return SemiVecDescriptor.uniform(parts[0], dimension, scalars)
    return SemiVecDescriptor.parse(parts, scalars)


def _subset(structure, text: Optional[str]) -> Optional[Tuple[int, ...]]:
    if text is None:
        return None
    ids = []
    for token in (t.strip() for t in text.split(",")):
        if not token:
            continue
        if token in structure.labels:
            ids.append(structure.index_of(token))
        elif token.lstrip("-").isdigit():
            ids.append(int(token))
        else:
            raise Malformed(f"{token!r} is neither a label nor an element id of {structure.name}")
    return tuple(ids)


def _finite(built: BuiltStructure, command: str):
    if isinstance(built.view, SymbolicStructure):
        raise Unsupported(f"{command} needs a finite structure, not {built.name}")
    return built.view


# Subcommands

def cmd_verify(args: argparse.Namespace) -> Outcome:
    built = get_descriptor_service().load(args.input)
    structure = _finite(built, "verify")
    report = check_class(structure, StructureClass(args.structure_class), _subset(structure, args.subset))
    return report.to_dict(), EXIT_FOUND if report.ok else EXIT_NOT_FOUND, []


def cmd_detect(args: argparse.Namespace) -> Outcome:
    built = get_descriptor_service().load(args.input)
    if args.witness is not None:
        structure = _finite(built, "detect --witness")
        result = certify(structure, args.property, _subset(structure, args.witness))
    else:
        result = detect(built.view, args.property, mode=args.mode, allow_trivial=args.allow_trivial)
    payload = result.to_dict()
    if isinstance(result, Certificate):
        payload["verified"] = verify_certificate(result)
        return payload, EXIT_FOUND, []
    return payload, EXIT_NOT_FOUND, []


def _finite_ideals(built: BuiltStructure, reference: Optional[str]) -> Dict[str, Any]:
    ring = _finite(built, "ideals")
    if not isinstance(ring, FiniteRingTable):
        raise NotCommutative(f"{ring.name} has no addition table")
    search = find_s_ideal(ring)
    payload: Dict[str, Any] = {
        "structure": ring.name,
        "ideals": to_jsonable(classify_all(ring)),
        "s_ideals": [
            {"ideal": format_subset(ring, ideal), "field": format_subset(ring, field)}
            for ideal, field in search.witnesses
        ],
        "field_ideals": [format_subset(ring, s) for s in search.near_misses],
    }
    if reference is not None:
        witnesses = find_s_definite_ideals(ring, _subset(ring, reference))
        payload["relative_ideals"] = [
            {"ideal": format_subset(ring, w.ideal), "reference": format_subset(ring, w.reference)}
            for w in witnesses
        ]
    return payload


def cmd_ideals(args: argparse.Namespace) -> Outcome:
    if args.input is not None:
        return _finite_ideals(get_descriptor_service().load(args.input), args.reference), EXIT_FOUND, []
    if args.nz is not None:
        payload = {
            "classification": to_jsonable(classify_nZ(args.nz)),
            "special_definite": to_jsonable(s_special_definite_ideal(args.nz)),
        }
        return payload, EXIT_FOUND, []
    if args.semigroup is not None and args.ideal is not None:
        t, p = parse_set(args.semigroup), parse_set(args.ideal)
        check = verify_semigroup_ideal(t, p)
        payload = {"semigroup": format_set(t), "ideal": format_set(p), "is_ideal": check.is_ideal,
                   "witness": to_jsonable(check.witness)}
        if not check:
            return payload, EXIT_NOT_FOUND, []
        if p != t:
            payload["classification"] = to_jsonable(classify_group_side(p, t))
        return payload, EXIT_FOUND, []
    raise Malformed("ideals needs --in, --nZ, or --semigroup with --ideal")


def cmd_coset(args: argparse.Namespace) -> Outcome:
    h = parse_set(args.H)
    coset = left_coset(_rational(args.a), h, Ambient(args.ambient))
    payload = {
        "coset": format_set(coset),
        "contains_H": subset_of(h, coset),
        "inside_H": subset_of(coset, h),
        "meets_H": format_set(intersect(coset, h)),
        "closed_mul": is_closed_mul(coset),
    }
    return payload, EXIT_FOUND, []


def cmd_dcoset(args: argparse.Namespace) -> Outcome:
    h, k, x = parse_set(args.H), parse_set(args.K), _rational(args.x)
    result = double_coset(h, x, k)
    payload = {
        "double_coset": format_set(result),
        "closed_mul": is_closed_mul(result),
        "meets_H": format_set(intersect(result, h)),
        "H_meets_K": format_set(intersect(h, k)),
    }
    return payload, EXIT_FOUND, double_coset_discrepancies(h, x, k, result)


def cmd_product(args: argparse.Namespace) -> Outcome:
    a, b = parse_set(args.A), parse_set(args.B)
    result = set_product(a, b)
    payload = {
        "product": format_set(result),
        "closed_mul": is_closed_mul(result),
        "closed_add": is_closed_add(result),
    }
    return payload, EXIT_FOUND, []


def cmd_quotient(args: argparse.Namespace) -> Outcome:
    modulus = _integers(args.modulus)
    ring = build_poly_quotient(args.p, modulus)
    irreducible = is_irreducible(args.p, modulus)
    field = quotient_is_field(ring)
    factors = None
    if irreducible.factors is not None:
        g, h = irreducible.factors
        factors = f"({format_poly(g)})({format_poly(h)})"
    payload: Dict[str, Any] = {
        "ring": ring.name,
        "order": ring.order,
        "irreducible": irreducible.irreducible,
        "factors": factors,
        "factors_multiply_back": (irreducible.factors is None
                                  or poly_mul(*irreducible.factors, args.p) == ring.modulus),
        "is_field": field.is_field,
        "zero_divisors": None if field.is_field else [str(e) for e in field.zero_divisors],
        "prime_subfield_matches_zp": prime_subfield_matches_zp(ring),
    }
    if args.inverse is not None:
        element = ring.element(_integers(args.inverse))
        inverse = inverse_in_quotient(element)
        payload["element"] = str(element)
        payload["inverse"] = None if inverse is None else str(inverse)
    notes = quotient_discrepancies(args.p, ring.modulus, irreducible.irreducible, factors)
    return payload, EXIT_FOUND, notes


def cmd_basis(args: argparse.Namespace) -> Outcome:
    w = _space(args.space, args.scalars, args.dim)
    n = w.dimension
    payload: Dict[str, Any] = {
        "space": w.name,
        "semivector_space": is_semivector_space(w, seed=args.seed).to_dict(),
        "s_definite_dimension": s_definite_dimension(n, [w]),
    }
    if args.vectors is None:
        found = payload["s_definite_dimension"] is not None
        return payload, EXIT_FOUND if found else EXIT_NOT_FOUND, []
    check = is_s_definite_basis(_vectors(args.vectors), n, w)
    payload["basis"] = to_jsonable(check)
    return payload, EXIT_FOUND if check else EXIT_NOT_FOUND, []


def cmd_innerprod(args: argparse.Namespace) -> Outcome:
    w = _space(args.space, args.scalars, args.dim)
    form = _vectors(args.form) if args.form is not None else None
    payload: Dict[str, Any] = {"space": w.name}
    if args.x is not None and args.y is not None:
        x, y = as_vector(_single_vector(args.x, "--x")), as_vector(_single_vector(args.y, "--y"))
        payload["value"] = str(inner_product(x, y, w, form))
    if args.audit:
        payload["audit"] = audit_inner_product(w, form, seed=args.seed).to_dict()
    notes = []
    if args.readings:
        readings = orthogonality_readings(w, args.bound, form)
        payload["readings"] = [r.to_dict() for r in readings]
        notes = orthogonality_discrepancies(readings)
    return payload, EXIT_FOUND, notes


def _near_ring(text: str):
    if text.lower().startswith("zn:"):
        try:
            n = int(text[3:])
        except ValueError:
            raise Malformed(f"zn:<n> needs an integer order, got {text!r}") from None
        return build_near_ring_zn(n)
    try:
        return SymbolicStructure(text)
    except ValueError:
        raise Malformed(f"unknown near ring {text!r}; use zn:<n> or a symbolic name") from None


def cmd_automaton(args: argparse.Namespace) -> Outcome:
    if args.example:
        built = tuple_alphabet_automaton()
        return built.to_dict(), EXIT_FOUND, []
    if args.alphabet is None:
        raise Malformed("automaton needs --alphabet (or --example)")
    letters = _letters(args.alphabet)
    semi = add_mod_semiautomaton(args.modulus, letters)
    word = semi.letters_at(_integers(args.word)) if args.word else []
    if args.outputs is not None:
        outputs = _letters(args.outputs)
        automaton = Automaton(semi, tuple(outputs), [[0] * len(semi.alphabet) for _ in semi.states])
    else:
        outputs = None
        automaton = input_projection(semi)
    trace, emitted = automaton.run_io(word)
    payload: Dict[str, Any] = {
        "states": len(semi.states),
        "trace": to_jsonable(trace),
        "output": to_jsonable(emitted),
    }
    if args.near_ring is not None:
        near = build_near_definite_automaton(_near_ring(args.near_ring), automaton, outputs, args.bound)
        payload["certificate"] = near.certificate.to_dict()
        payload["input_freeness"] = near.input_freeness.to_dict()
        payload["output_freeness"] = None if near.output_freeness is None else near.output_freeness.to_dict()
    else:
        payload["input_freeness"] = freeness_check(letters, args.bound).to_dict()
    return payload, EXIT_FOUND, []


def cmd_sweep(args: argparse.Namespace) -> Outcome:
    report = sweep(args.conjecture, args.family, args.max, time_budget=args.time_budget)
    return report.to_dict(), EXIT_FOUND if report.upheld else EXIT_NOT_FOUND, []


COMMANDS: Dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "verify": cmd_verify,
    "detect": cmd_detect,
    "ideals": cmd_ideals,
    "coset": cmd_coset,
    "dcoset": cmd_dcoset,
    "product": cmd_product,
    "quotient": cmd_quotient,
    "basis": cmd_basis,
    "innerprod": cmd_innerprod,
    "automaton": cmd_automaton,
    "sweep": cmd_sweep,
}


class _Parser(argparse.ArgumentParser):
    """Usage errors raise instead of exiting, so they become exit-2 reports."""

    def error(self, message: str):
        raise argparse.ArgumentError(None, message)


def _space_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--space", required=True, help="component sets, e.g. Z0,Z0,Z0 or Z0 with --dim")
    parser.add_argument("--dim", type=int, help="repeat a single component this many times")
    parser.add_argument("--scalars", default="Z0", help="scalar semifield (default Z0)")


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = _Parser(prog="alglab", description="Smarandache structure detection and verification")
    parser.add_argument("--seed", type=int, default=None, help="seed for sampled audits")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value)
    parser.add_argument("--log-level", default=settings.log_level)
    parser.add_argument("--metrics-out", help="write Prometheus metrics to this file")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="check a structure against a class")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--class", dest="structure_class", required=True,
                   choices=sorted(c.value for c in {**MAGMA_CHECKERS, **RING_CHECKERS}))
    p.add_argument("--subset", help="comma-separated labels or element ids")

    p = sub.add_parser("detect", help="search for a Smarandache property")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--property", required=True, choices=[prop.value for prop in Property])
    p.add_argument("--mode", choices=[m.value for m in DetectMode], default=DetectMode.EXHAUSTIVE.value)
    p.add_argument("--allow-trivial", action="store_true")
    p.add_argument("--witness", help="certify this subset instead of searching")

    p = sub.add_parser("ideals", help="enumerate and classify ideals")
    p.add_argument("--in", dest="input")
    p.add_argument("--reference", help="field subset B for relative ideals")
    p.add_argument("--nZ", dest="nz", type=int, help="classify nZ inside Z")
    p.add_argument("--semigroup", help="symbolic semigroup T, e.g. Z!0")
    p.add_argument("--ideal", help="symbolic ideal P, e.g. 3Z!0")

    p = sub.add_parser("coset", help="left coset aH")
    p.add_argument("--a", required=True)
    p.add_argument("--H", required=True)
    p.add_argument("--ambient", choices=[a.value for a in Ambient], default=Ambient.Q_NONZERO_MUL.value)

    p = sub.add_parser("dcoset", help="double coset HxK")
    p.add_argument("--H", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--K", required=True)

    p = sub.add_parser("product", help="product set AB")
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)

    p = sub.add_parser("quotient", help="Z_p[x]/(f)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--modulus", required=True, help="coefficients, constant term first")
    p.add_argument("--inverse", help="element to invert, constant term first")

    p = sub.add_parser("basis", help="S-definite special basis and dimension")
    _space_arguments(p)
    p.add_argument("--vectors", help="basis vectors, e.g. 0,3,0;0,0,1;4,0,0")

    p = sub.add_parser("innerprod", help="inner products on a semivector space")
    _space_arguments(p)
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--form", help="coefficient matrix rows separated by ';'")
    p.add_argument("--audit", action="store_true")
    p.add_argument("--readings", action="store_true", help="decide the orthogonality readings")
    p.add_argument("--bound", type=int, default=3)

    p = sub.add_parser("automaton", help="run an add-mod semiautomaton")
    p.add_argument("--modulus", type=int, default=2)
    p.add_argument("--alphabet", help="letters, e.g. 1;2 or 4,7,5;1,1,1")
    p.add_argument("--word", help="letter indices, e.g. 0,0,1")
    p.add_argument("--outputs", help="output letters; every transition emits the first")
    p.add_argument("--near-ring", help="zn:<n> or a symbolic near ring such as Z_near_ring")
    p.add_argument("--bound", type=int, default=None, help="freeness search bound")
    p.add_argument("--example", action="store_true", help="the tuple-alphabet automaton over (Z,+,a*b=a)^3")

    p = sub.add_parser("sweep", help="check a conjecture over a family")
    p.add_argument("--conjecture", required=True, choices=[c.value for c in Conjecture])
    p.add_argument("--family", required=True, help=", ".join(f.value for f in Family))
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--time-budget", type=float, default=None)
    return parser


def _arguments(args: argparse.Namespace) -> Dict[str, Any]:
    skipped = {"command", "format", "log_level", "metrics_out"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skipped and v is not None}


def _write_metrics(path: str) -> None:
    try:
        with open(path, "wb") as handle:
            handle.write(render_metrics())
    except OSError as exc:
        raise Malformed(f"cannot write metrics to {path}: {exc.strerror or exc}") from None


def run_command(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    """
    Parse ``argv``, run the subcommand and write its report.

    Returns:
        The process exit code.
    """
    stdout = stdout or sys.stdout
    reports = get_report_service()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except argparse.ArgumentError as exc:
        configure_logging(get_settings().log_level, get_settings().log_renderer)
        report = reports.failure(argv[0] if argv else "", {"argv": argv}, exc)
        stdout.write(reports.render(report) + "\n")
        return EXIT_ERROR

    configure_logging(args.log_level, get_settings().log_renderer)
    if args.seed is None:
        args.seed = get_settings().default_seed
    arguments = _arguments(args)
    try:
        result, status, notes = COMMANDS[args.command](args)
        report = reports.success(args.command, arguments, result, status, notes)
    except AlgebraError as exc:
        report = reports.failure(args.command, arguments, exc)

    if args.metrics_out:
        try:
            _write_metrics(args.metrics_out)
        except Malformed as exc:
            report = reports.failure(args.command, arguments, exc)

    stdout.write(reports.render(report, OutputFormat(args.format)) + "\n")
    logger.debug("command_done", command=args.command, exit_status=report.exit_status)
    return report.exit_status


def main() -> None:
    sys.exit(run_command())
