"""
Homomorphism checks between the rings or semigroups that carry Smarandache
witnesses.

Finite maps are association lists over element ids and are checked on every
pair. Maps between lattice subsets of Q are checked on the small members of
the domain first and then on seeded random pairs.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Mapping, Optional, Union

import numpy as np
import structlog

from app.algebra.errors import ClassMismatch, PartialMap
from app.algebra.finite import AxiomReport, FiniteMagma, FiniteRingTable, ReportBuilder, StructureClass
from app.algebra.ideals import sample_members
from app.algebra.symbolic import LatticeSet, format_set, member, to_rat
from app.config import get_settings

logger = structlog.get_logger()


@dataclass(frozen=True)
class LatticeMap:
    """The rule x -> factor * x."""

    factor: Fraction = Fraction(1)

    def __call__(self, x: Fraction) -> Fraction:
        return self.factor * x


@dataclass(frozen=True)
class SymbolicOperand:
    """
    A lattice subset of Q and the operation(s) a map must preserve on it:
    ``add``, ``mul`` or ``ring`` (both).
    """

    set: LatticeSet
    operation: str = "ring"

    @property
    def name(self) -> str:
        return f"({format_set(self.set)},{self.operation})"


FiniteMap = Mapping[Union[int, str], Union[int, str]]
Structure = Union[FiniteMagma, FiniteRingTable]


def _ids(structure: Structure, mapping: FiniteMap, codomain: Structure) -> np.ndarray:
    phi = np.full(structure.order, -1, dtype=np.int64)
    for key, value in mapping.items():
        a = structure.index_of(key) if isinstance(key, str) else int(key)
        b = codomain.index_of(value) if isinstance(value, str) else int(value)
        if not 0 <= a < structure.order or not 0 <= b < codomain.order:
            raise PartialMap(f"pair {key!r} -> {value!r} is outside the tables")
        phi[a] = b
    missing = np.flatnonzero(phi < 0)
    if missing.size:
        raise PartialMap(f"no image for {structure.labels[int(missing[0])]}")
    return phi


def _preserves(builder: ReportBuilder, axiom: str, phi: np.ndarray, source: np.ndarray,
               target: np.ndarray) -> None:
    lhs = phi[source]
    rhs = target[phi[:, None], phi[None, :]]
    for a, b in np.argwhere(lhs != rhs):
        builder.add(axiom, int(a), int(b))
        if builder.full:
            return


def _check_finite(mapping: FiniteMap, domain: Structure, codomain: Structure) -> AxiomReport:
    if isinstance(domain, FiniteRingTable) != isinstance(codomain, FiniteRingTable):
        raise ClassMismatch("domain and codomain must both be rings or both be magmas")
    phi = _ids(domain, mapping, codomain)
    builder = ReportBuilder(StructureClass.HOMOMORPHISM)
    if isinstance(domain, FiniteRingTable):
        _preserves(builder, "additivity", phi, domain.add_array, codomain.add_array)
        _preserves(builder, "multiplicativity", phi, domain.mul_array, codomain.mul_array)
    else:
        _preserves(builder, "operation", phi, domain.array, codomain.array)
    return builder.build()


def probe_members(s: LatticeSet, count: int = 6) -> List[Fraction]:
    """Small nonzero members of ``s``, then zero when it belongs."""
    members = sample_members(s, 2 * count)
    nonzero = [x for x in members if x != 0][:count]
    return nonzero + ([Fraction(0)] if member(s, 0) else [])


def random_members(s: LatticeSet, count: int, rng: np.random.Generator, magnitude: int) -> List[Fraction]:
    out: List[Fraction] = []
    if s.is_empty or (not s.is_lattice and not s.is_dense):
        return [Fraction(0)] * count if member(s, 0) else []
    while len(out) < count:
        k = int(rng.integers(-magnitude, magnitude + 1))
        if s.is_lattice:
            x = s.scale * k
        else:
            x = Fraction(k, int(rng.integers(1, magnitude + 1)))
        if member(s, x):
            out.append(x)
    return out


def _apply(rule: Callable[[Fraction], Fraction], x: Fraction) -> Fraction:
    try:
        value = rule(x)
    except (ArithmeticError, KeyError, TypeError, ValueError) as exc:
        raise PartialMap(f"map undefined at {x}: {exc}") from exc
    if value is None:
        raise PartialMap(f"map undefined at {x}")
    return to_rat(value)


def _combine(operation: str, x: Fraction, y: Fraction) -> Fraction:
    return x * y if operation == "mul" else x + y


def _check_symbolic(rule: Callable[[Fraction], Fraction], domain: SymbolicOperand,
                    codomain: SymbolicOperand, samples: int, seed: int) -> AxiomReport:
    ring = domain.operation == "ring"
    if ring != (codomain.operation == "ring"):
        raise ClassMismatch("a ring map needs ring operations on both sides")
    builder = ReportBuilder(StructureClass.HOMOMORPHISM)
    settings = get_settings()
    rng = np.random.default_rng(seed)

    probes = probe_members(domain.set)
    drawn = random_members(domain.set, 2 * samples, rng, settings.audit_magnitude)
    pairs = [(x, y) for x in probes for y in probes] + list(zip(drawn[::2], drawn[1::2]))

    for x in probes + drawn:
        if not member(codomain.set, _apply(rule, x)):
            builder.add("image", x)
            break

    checks = [("additivity", "add", "add"), ("multiplicativity", "mul", "mul")] if ring else [
        ("operation", domain.operation, codomain.operation)
    ]
    for axiom, source_op, target_op in checks:
        for x, y in pairs:
            lhs = _apply(rule, _combine(source_op, x, y))
            rhs = _combine(target_op, _apply(rule, x), _apply(rule, y))
            if lhs != rhs:
                builder.add(axiom, x, y)
                break
    return builder.build()


def verify_s_homomorphism(
    mapping: Union[FiniteMap, LatticeMap, Callable[[Fraction], Fraction]],
    domain: Union[Structure, SymbolicOperand],
    codomain: Union[Structure, SymbolicOperand],
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> AxiomReport:
    """
    Check that ``mapping`` preserves the operations of domain and codomain.

    Rings need additivity and multiplicativity; semigroups need their single
    operation, which may differ between the two sides (+ to *, say).

    Args:
        mapping: id or label association list for finite tables, or a rule on rationals
        domain: finite table or symbolic operand
        codomain: finite table or symbolic operand
        samples: random pairs for symbolic domains (default ``audit_samples``)
        seed: generator seed (default ``default_seed``)

    Raises:
        PartialMap: if the map has no image for some domain element.
        ClassMismatch: if the two sides carry different kinds of operations.
    """
    settings = get_settings()
    samples = settings.audit_samples if samples is None else samples
    seed = settings.default_seed if seed is None else seed
    if isinstance(domain, SymbolicOperand) and isinstance(codomain, SymbolicOperand):
        if isinstance(mapping, Mapping):
            table = {to_rat(k): v for k, v in mapping.items()}
            rule = lambda x: table[x]  # noqa: E731
        else:
            rule = mapping
        report = _check_symbolic(rule, domain, codomain, samples, seed)
        name = f"{domain.name} -> {codomain.name}"
    elif isinstance(domain, (FiniteMagma, FiniteRingTable)) and isinstance(codomain, (FiniteMagma, FiniteRingTable)):
        if not isinstance(mapping, Mapping):
            phi = {a: mapping(a) for a in range(domain.order)}
        else:
            phi = mapping
        report = _check_finite(phi, domain, codomain)
        name = f"{domain.name} -> {codomain.name}"
    else:
        raise ClassMismatch("domain and codomain must both be finite or both be symbolic")
    logger.debug("homomorphism_checked", map=name, ok=report.ok, violations=len(report.violations))
    return report
