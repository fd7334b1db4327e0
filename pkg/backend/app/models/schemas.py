from enum import Enum
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from app.algebra.detect import SymbolicStructure


# Group family Enum
class GroupFamily(str, Enum):
    """Named finite groups a ``group`` descriptor can ask for"""

    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    SYMMETRIC = "symmetric"
    ZN_MUL = "zn_mul"  # (Z_n, *) as a monoid, used for S-semigroup detection


# Output format Enum
class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


class _Descriptor(BaseModel):
    model_config = ConfigDict(extra="forbid", use_enum_values=False)

    name: Optional[str] = None


# Table-driven descriptors
class CayleyMagmaDescriptor(_Descriptor):
    kind: Literal["cayley_magma"] = "cayley_magma"
    table: List[List[int]]
    labels: Optional[List[str]] = None


class CayleyRingDescriptor(_Descriptor):
    kind: Literal["cayley_ring"] = "cayley_ring"
    add: List[List[int]]
    mul: List[List[int]]
    labels: Optional[List[str]] = None


class LatticeSemiringDescriptor(_Descriptor):
    """Either explicit join/meet tables or a chain of the given length."""

    kind: Literal["lattice_semiring"] = "lattice_semiring"
    join: Optional[List[List[int]]] = None
    meet: Optional[List[List[int]]] = None
    labels: Optional[List[str]] = None
    chain: Optional[int] = Field(default=None, ge=1)


# Named constructions
class ZnDescriptor(_Descriptor):
    kind: Literal["zn"] = "zn"
    n: int = Field(..., ge=1)


class NearRingZnDescriptor(_Descriptor):
    kind: Literal["near_ring_zn"] = "near_ring_zn"
    n: int = Field(..., ge=1)


class PolyQuotientDescriptor(_Descriptor):
    """Z_p[x]/(f); ``modulus`` lists coefficients constant term first."""

    kind: Literal["poly_quotient"] = "poly_quotient"
    p: int = Field(..., ge=2)
    modulus: List[int] = Field(..., min_length=2)


class GroupDescriptor(_Descriptor):
    kind: Literal["group"] = "group"
    family: GroupFamily
    n: int = Field(..., ge=1)


class SymmetricSemigroupDescriptor(_Descriptor):
    kind: Literal["symmetric_semigroup"] = "symmetric_semigroup"
    n: int = Field(..., ge=1)


BaseDescriptor = Annotated[
    Union[GroupDescriptor, SymmetricSemigroupDescriptor, CayleyMagmaDescriptor],
    Field(discriminator="kind"),
]


class GroupRingDescriptor(_Descriptor):
    """Coefficients Z (``modulus`` omitted) or Z_modulus over a finite group."""

    kind: Literal["group_ring"] = "group_ring"
    modulus: Optional[int] = Field(default=None, ge=1)
    base: BaseDescriptor


class SemigroupRingDescriptor(_Descriptor):
    kind: Literal["semigroup_ring"] = "semigroup_ring"
    modulus: Optional[int] = Field(default=None, ge=1)
    base: BaseDescriptor


class MatrixRingDescriptor(_Descriptor):
    """k x k matrices over Z_n."""

    kind: Literal["matrix_ring"] = "matrix_ring"
    n: int = Field(..., ge=1)
    size: int = Field(default=2, ge=1)


class SymbolicDescriptor(_Descriptor):
    kind: Literal["symbolic"] = "symbolic"
    structure: SymbolicStructure


StructureDescriptor = Annotated[
    Union[
        CayleyMagmaDescriptor,
        CayleyRingDescriptor,
        ZnDescriptor,
        NearRingZnDescriptor,
        PolyQuotientDescriptor,
        GroupDescriptor,
        SymmetricSemigroupDescriptor,
        GroupRingDescriptor,
        SemigroupRingDescriptor,
        MatrixRingDescriptor,
        LatticeSemiringDescriptor,
        SymbolicDescriptor,
    ],
    Field(discriminator="kind"),
]

DESCRIPTOR_KINDS = (
    "cayley_magma",
    "cayley_ring",
    "zn",
    "near_ring_zn",
    "poly_quotient",
    "group",
    "symmetric_semigroup",
    "group_ring",
    "semigroup_ring",
    "matrix_ring",
    "lattice_semiring",
    "symbolic",
)


# Report Schemas
class Discrepancy(BaseModel):
    """A worked example whose printed claim disagrees with the computation."""

    code: str
    source: str
    claim: str
    computed: str


class ErrorDetail(BaseModel):
    code: str
    message: str


class CommandReport(BaseModel):
    """
    What every CLI invocation writes to stdout.

    No timestamps or durations: two runs with the same arguments and seed
    produce the same bytes.
    """

    command: str
    arguments: Dict[str, Any] = Field(default_factory=dict)
    result: Optional[Dict[str, Any]] = None
    discrepancies: List[Discrepancy] = Field(default_factory=list)
    error: Optional[ErrorDetail] = None
    exit_status: int = 0
