"""
Exception hierarchy for the algebra package.

Every error carries a stable ``code`` that the CLI writes into reports.
"""


class AlgebraError(Exception):
    """Base class for all library errors."""

    code = "algebra_error"


# Finite kernel

class MalformedTable(AlgebraError):
    """Raised when a Cayley table has out-of-range entries or duplicate labels."""

    code = "malformed_table"


class CapacityExceeded(AlgebraError):
    """Raised when closed-subset enumeration passes its configured limit."""

    code = "capacity_exceeded"


class NotASubgroup(AlgebraError):
    """Raised when a subset expected to be a subgroup is not one."""

    code = "not_a_subgroup"


# Symbolic sets

class ZeroScalar(AlgebraError):
    """Raised for a zero scalar in a multiplicative ambient."""

    code = "zero_scalar"


class Unsupported(AlgebraError):
    """Raised when an operand combination lies outside the exact rule table."""

    code = "unsupported"


class NotASemigroup(AlgebraError):
    """Raised when a set operand is not closed under the ambient operation."""

    code = "not_a_semigroup"


# Constructors

class SizeGuard(AlgebraError):
    """Raised when a requested table would exceed the configured size guard."""

    code = "size_guard"


class NonPrimeModulus(AlgebraError):
    """Raised when a polynomial quotient is requested over a non-prime modulus."""

    code = "non_prime_modulus"


class ZeroDegree(AlgebraError):
    """Raised when the quotient modulus has degree below one."""

    code = "zero_degree"


class AxiomFailure(AlgebraError):
    """Raised when user-supplied tables fail the axioms of the requested class."""

    code = "axiom_failure"

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


# Ideals

class NotAnIdeal(AlgebraError):
    """Raised when a subset is not an ideal of the ring."""

    code = "not_an_ideal"


class ImproperIdeal(AlgebraError):
    """Raised when the whole structure is passed where a proper ideal is required."""

    code = "improper_ideal"


class NotAField(AlgebraError):
    """Raised when a reference subset fails the field axioms."""

    code = "not_a_field"


class NotSubset(AlgebraError):
    """Raised when P is not contained in T."""

    code = "not_subset"


class NotCommutative(AlgebraError):
    """Raised when an operation needs a commutative ring."""

    code = "not_commutative"


class UnsupportedSubring(AlgebraError):
    """Raised for subrings outside {Z, nZ}."""

    code = "unsupported_subring"


# Detection

class ClassMismatch(AlgebraError):
    """Raised when a structure does not belong to the property's strong class."""

    code = "class_mismatch"


class PartialMap(AlgebraError):
    """Raised when a homomorphism candidate is not total on its domain."""

    code = "partial_map"


class Budget(AlgebraError):
    """Raised when a sweep passes its wall-clock or size budget."""

    code = "budget"


class UnsupportedFamily(AlgebraError):
    """Raised for a sweep family that does not fit the conjecture."""

    code = "unsupported_family"


# Linear

class DimensionMismatch(AlgebraError):
    """Raised when vector lengths disagree with the declared dimension."""

    code = "dimension_mismatch"


class NotInLattice(AlgebraError):
    """Raised when a vector is not a member of the semivector space."""

    code = "not_in_lattice"


class UnsupportedProduct(AlgebraError):
    """Raised for an unknown semilinear product rule."""

    code = "unsupported_product"


# Near-ring automata

class UnknownLetter(AlgebraError):
    """Raised when a word uses an index outside the alphabet."""

    code = "unknown_letter"


class InvalidAlphabet(AlgebraError):
    """Raised for alphabets with negative entries or only zero vectors."""

    code = "invalid_alphabet"


class ConstructionGate(AlgebraError):
    """Raised when the near ring is not an S-definite special near ring."""

    code = "construction_gate"


# Descriptors

class Malformed(AlgebraError):
    """Raised when descriptor text is not valid JSON or misses a field."""

    code = "malformed"


class UnknownKind(AlgebraError):
    """Raised for an unrecognised descriptor kind."""

    code = "unknown_kind"


class TableShape(AlgebraError):
    """Raised when a descriptor table is ragged or not square."""

    code = "table_shape"
