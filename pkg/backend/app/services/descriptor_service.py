"""
Descriptor service: parse structure descriptor files and build the
structures they name.
"""
import json
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Union

import structlog
from pydantic import TypeAdapter, ValidationError

from app.algebra.automata import NearRingZn, build_near_ring_zn
from app.algebra.constructors import (
    CoefficientRing,
    MagmaRing,
    PolyModRing,
    build_poly_quotient,
    build_zn,
    chain_lattice,
    cyclic,
    dihedral,
    group_ring,
    lattice_semiring,
    matrix_ring,
    semigroup_ring,
    symmetric_group,
    symmetric_semigroup,
    zn_multiplicative,
)
from app.algebra.detect import SymbolicStructure
from app.algebra.errors import Malformed, TableShape, UnknownKind
from app.algebra.finite import FiniteMagma, FiniteRingTable
from app.models.schemas import (
    DESCRIPTOR_KINDS,
    CayleyMagmaDescriptor,
    CayleyRingDescriptor,
    GroupDescriptor,
    GroupFamily,
    GroupRingDescriptor,
    LatticeSemiringDescriptor,
    MatrixRingDescriptor,
    NearRingZnDescriptor,
    PolyQuotientDescriptor,
    SemigroupRingDescriptor,
    StructureDescriptor,
    SymbolicDescriptor,
    SymmetricSemigroupDescriptor,
    ZnDescriptor,
)

logger = structlog.get_logger()

Native = Union[FiniteMagma, FiniteRingTable, NearRingZn, PolyModRing, MagmaRing, SymbolicStructure]
TableView = Union[FiniteMagma, FiniteRingTable, SymbolicStructure]

_ADAPTER = TypeAdapter(StructureDescriptor)


@dataclass(frozen=True, eq=False)
class BuiltStructure:
    """
    A descriptor with the object it builds.

    ``native`` keeps the constructor's own type (a quotient ring, a group
    ring, a near ring); ``view`` is what detectors and checkers accept.
    """

    descriptor: Any
    native: Native
    view: TableView

    @property
    def name(self) -> str:
        if isinstance(self.view, SymbolicStructure):
            return self.view.display
        return self.view.name


def check_square(table: Sequence[Sequence[int]], field: str) -> None:
    """
    Raises:
        TableShape: naming the first row whose length differs from the row count.
    """
    n = len(table)
    if n == 0:
        raise TableShape(f"{field} is empty")
    for i, row in enumerate(table):
        if len(row) != n:
            raise TableShape(f"{field} row {i} has {len(row)} entries, expected {n}")


def _location(error: dict) -> str:
    return ".".join(str(part) for part in error["loc"]) or "descriptor"


class DescriptorService:
    """Parsing, serialisation and construction of structure descriptors"""

    def parse(self, text: Union[str, bytes]) -> StructureDescriptor:
        """
        Parse descriptor JSON.

        Args:
            text: UTF-8 text or bytes

        Returns:
            The validated descriptor model

        Raises:
            Malformed: for invalid JSON or a missing or mistyped field.
            UnknownKind: for a ``kind`` outside the supported list.
            TableShape: for a ragged or non-square table.
        """
        try:
            raw = json.loads(text)
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise Malformed(f"descriptor is not valid JSON: {exc}") from None
        if not isinstance(raw, dict):
            raise Malformed("descriptor must be a JSON object")
        kind = raw.get("kind")
        if kind is None:
            raise Malformed("descriptor has no 'kind' field")
        if kind not in DESCRIPTOR_KINDS:
            raise UnknownKind(f"unknown kind {kind!r}; expected one of {', '.join(DESCRIPTOR_KINDS)}")
        try:
            descriptor = _ADAPTER.validate_python(raw)
        except ValidationError as exc:
            first = exc.errors()[0]
            raise Malformed(f"{_location(first)}: {first['msg']}") from None
        self._check_tables(descriptor)
        logger.debug("descriptor_parsed", kind=descriptor.kind)
        return descriptor

    def serialize(self, descriptor: StructureDescriptor) -> str:
        """Canonical JSON: no null fields, sorted keys."""
        data = _ADAPTER.dump_python(descriptor, mode="json", exclude_none=True)
        return json.dumps(data, sort_keys=True)

    def _check_tables(self, descriptor: Any) -> None:
        if isinstance(descriptor, CayleyMagmaDescriptor):
            check_square(descriptor.table, "table")
        elif isinstance(descriptor, CayleyRingDescriptor):
            check_square(descriptor.add, "add")
            check_square(descriptor.mul, "mul")
            if len(descriptor.add) != len(descriptor.mul):
                raise TableShape(f"add has {len(descriptor.add)} rows but mul has {len(descriptor.mul)}")
        elif isinstance(descriptor, LatticeSemiringDescriptor):
            if descriptor.chain is None:
                if descriptor.join is None or descriptor.meet is None:
                    raise Malformed("lattice_semiring needs join and meet tables or a chain length")
                check_square(descriptor.join, "join")
                check_square(descriptor.meet, "meet")
        elif isinstance(descriptor, (GroupRingDescriptor, SemigroupRingDescriptor)):
            self._check_tables(descriptor.base)

    def _magma(self, descriptor: Any) -> FiniteMagma:
        if isinstance(descriptor, CayleyMagmaDescriptor):
            return FiniteMagma.from_table(descriptor.table, descriptor.labels, descriptor.name or "M")
        if isinstance(descriptor, SymmetricSemigroupDescriptor):
            return symmetric_semigroup(descriptor.n)
        family = descriptor.family
        if family is GroupFamily.CYCLIC:
            return cyclic(descriptor.n)
        if family is GroupFamily.DIHEDRAL:
            return dihedral(descriptor.n)
        if family is GroupFamily.SYMMETRIC:
            return symmetric_group(descriptor.n)
        return zn_multiplicative(descriptor.n)

    def build(self, descriptor: StructureDescriptor) -> BuiltStructure:
        """
        Build the structure a descriptor names.

        Raises:
            SizeGuard: when a table would pass the configured size guards.
            MalformedTable: for out-of-range table entries or repeated labels.
            AxiomFailure: when a constructor's verification fails.
        """
        d = descriptor
        if isinstance(d, (CayleyMagmaDescriptor, GroupDescriptor, SymmetricSemigroupDescriptor)):
            magma = self._magma(d)
            built = BuiltStructure(d, magma, magma)
        elif isinstance(d, CayleyRingDescriptor):
            ring = FiniteRingTable.from_tables(d.add, d.mul, d.labels, d.name or "R")
            built = BuiltStructure(d, ring, ring)
        elif isinstance(d, ZnDescriptor):
            ring = build_zn(d.n)
            built = BuiltStructure(d, ring, ring)
        elif isinstance(d, NearRingZnDescriptor):
            near_ring = build_near_ring_zn(d.n)
            built = BuiltStructure(d, near_ring, near_ring.table)
        elif isinstance(d, PolyQuotientDescriptor):
            quotient = build_poly_quotient(d.p, d.modulus)
            built = BuiltStructure(d, quotient, quotient.to_ring_table())
        elif isinstance(d, (GroupRingDescriptor, SemigroupRingDescriptor)):
            constructor = group_ring if isinstance(d, GroupRingDescriptor) else semigroup_ring
            ring = constructor(CoefficientRing(d.modulus), self._magma(d.base))
            built = BuiltStructure(d, ring, ring.to_ring_table())
        elif isinstance(d, MatrixRingDescriptor):
            ring = matrix_ring(build_zn(d.n), d.size)
            built = BuiltStructure(d, ring, ring)
        elif isinstance(d, LatticeSemiringDescriptor):
            if d.chain is not None:
                semiring = chain_lattice(d.chain, d.name)
            else:
                semiring = lattice_semiring(d.join, d.meet, d.labels, d.name or "L")
            built = BuiltStructure(d, semiring, semiring)
        elif isinstance(d, SymbolicDescriptor):
            built = BuiltStructure(d, d.structure, d.structure)
        else:
            raise UnknownKind(f"unknown descriptor {type(d).__name__}")
        logger.info("structure_built", kind=d.kind, structure=built.name)
        return built

    def load(self, path: str) -> BuiltStructure:
        """
        Read, parse and build a descriptor file.

        Raises:
            Malformed: if the file cannot be read.
        """
        try:
            with open(path, "rb") as handle:
                text = handle.read()
        except OSError as exc:
            raise Malformed(f"cannot read {path}: {exc.strerror}") from None
        return self.build(self.parse(text))


# Global service instance
_descriptor_service: Optional[DescriptorService] = None


def get_descriptor_service() -> DescriptorService:
    """Get or create the global descriptor service instance"""
    global _descriptor_service
    if _descriptor_service is None:
        _descriptor_service = DescriptorService()
    return _descriptor_service


def parse_descriptor(text: Union[str, bytes]) -> StructureDescriptor:
    return get_descriptor_service().parse(text)


def build_structure(descriptor: StructureDescriptor) -> BuiltStructure:
    return get_descriptor_service().build(descriptor)


def descriptor_kinds() -> List[str]:
    return list(DESCRIPTOR_KINDS)
