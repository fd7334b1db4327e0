"""
Conjecture sweeps: run the exhaustive detector over every member of a
family of finite structures and collect any counterexample.

  C1  no finite group is an S-special definite group
  C2  no finite ring is an S-definite special ring
  C3  no finite field is an S-special definite field
  C4  no finite near ring (Z_n, +, a*b=a) is an S-definite special near ring
  C5  every closed nonempty subset of a finite group is a subgroup

Members run in-process, or as celery tasks when a broker is configured and
``sweep_eager`` is off. Results are merged in (family, parameter) order, so
reports do not depend on how the work was split.
"""
import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import structlog
from sympy import isprime, primerange

from app.algebra.constructors import build_poly_quotient, build_zn, cyclic, dihedral, is_irreducible, symmetric_group
from app.algebra.detect.certificate import Certificate
from app.algebra.detect.exhaustive import exhaustive_search, format_witness
from app.algebra.detect.properties import Property
from app.algebra.errors import Budget, UnsupportedFamily
from app.algebra.finite import check_field, check_group, enumerate_closed_subsets
from app.config import get_settings
from app.utils.metrics import sweep_member_duration_seconds, sweep_witnesses_total

logger = structlog.get_logger()


class Conjecture(str, Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"

    @property
    def statement(self) -> str:
        return _STATEMENTS[self]


_STATEMENTS = {
    Conjecture.C1: "no finite S-special definite group",
    Conjecture.C2: "no finite S-definite special ring",
    Conjecture.C3: "no finite S-special definite field",
    Conjecture.C4: "no finite S-definite special near ring of the a*b=a family",
    Conjecture.C5: "every closed nonempty subset of a finite group is a subgroup",
}


class Family(str, Enum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    SYMMETRIC = "symmetric"
    ZN = "zn"
    ZN_NEAR_RING = "zn-near-ring"
    POLY_QUOTIENT = "poly-quotient"

    @classmethod
    def parse(cls, text: str) -> "Family":
        key = text.strip().lower()
        key = _ALIASES.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise UnsupportedFamily(f"unknown family {text!r}") from None


_ALIASES = {
    "zn-rings": "zn",
    "zn-ring": "zn",
    "zn-near-rings": "zn-near-ring",
    "poly-quotients": "poly-quotient",
    "s_n": "symmetric",
}

_FAMILIES: Dict[Conjecture, Tuple[Family, ...]] = {
    Conjecture.C1: (Family.CYCLIC, Family.DIHEDRAL, Family.SYMMETRIC),
    Conjecture.C2: (Family.ZN, Family.POLY_QUOTIENT),
    Conjecture.C3: (Family.ZN, Family.POLY_QUOTIENT),
    Conjecture.C4: (Family.ZN_NEAR_RING,),
    Conjecture.C5: (Family.CYCLIC, Family.DIHEDRAL, Family.SYMMETRIC),
}

_PROPERTY = {
    Conjecture.C1: Property.S_SPECIAL_DEFINITE_GROUP,
    Conjecture.C2: Property.S_DEFINITE_SPECIAL_RING,
    Conjecture.C3: Property.S_SPECIAL_DEFINITE_FIELD,
    Conjecture.C4: Property.S_DEFINITE_SPECIAL_NEAR_RING,
}

Parameter = Union[int, List[Any]]


@dataclass
class MemberResult:
    """Outcome for one family member; ``counterexamples`` is expected empty."""

    family: str
    parameter: Parameter
    structure: str
    order: int
    examined: int = 0
    counterexamples: List[Dict[str, Any]] = field(default_factory=list)
    skipped: Optional[str] = None

    def sort_key(self) -> Tuple:
        return (self.family, _parameter_key(self.parameter))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family,
            "parameter": self.parameter,
            "structure": self.structure,
            "order": self.order,
            "examined": self.examined,
            "counterexamples": self.counterexamples,
            "skipped": self.skipped,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MemberResult":
        return cls(**data)


@dataclass
class SweepReport:
    conjecture: Conjecture
    family: Family
    max_size: int
    members: List[MemberResult] = field(default_factory=list)

    @property
    def sizes(self) -> List[str]:
        return [m.structure for m in self.members if m.skipped is None]

    @property
    def counterexamples(self) -> List[Dict[str, Any]]:
        return [c for m in self.members for c in m.counterexamples]

    @property
    def witness_count(self) -> int:
        return len(self.counterexamples)

    @property
    def upheld(self) -> bool:
        return self.witness_count == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "conjecture": self.conjecture.value,
            "statement": self.conjecture.statement,
            "family": self.family.value,
            "max_size": self.max_size,
            "sizes": self.sizes,
            "subsets_examined": sum(m.examined for m in self.members),
            "witness_count": self.witness_count,
            "counterexamples": self.counterexamples,
            "skipped": [
                {"structure": m.structure, "reason": m.skipped} for m in self.members if m.skipped
            ],
        }


def _parameter_key(parameter: Parameter) -> Tuple:
    if isinstance(parameter, int):
        return (parameter,)
    p, coeffs = parameter
    return (p, len(coeffs), tuple(reversed(coeffs)))


def _monic_polynomials(p: int, d: int) -> List[List[int]]:
    return [list(lower) + [1] for lower in product(range(p), repeat=d)]


def family_members(conjecture: Conjecture, family: Family, max_size: int) -> List[Parameter]:
    """
    Parameters of the members of ``family`` with at most ``max_size`` elements
    (degree at most ``max_size`` for symmetric groups), in canonical order.

    Raises:
        UnsupportedFamily: if the conjecture is not about this family.
        Budget: if a member would exceed the configured size guards.
    """
    if family not in _FAMILIES[conjecture]:
        allowed = ", ".join(f.value for f in _FAMILIES[conjecture])
        raise UnsupportedFamily(f"{conjecture.value} runs over {allowed}, not {family.value}")
    settings = get_settings()
    if family is Family.SYMMETRIC:
        if max_size > settings.max_symmetric_degree:
            raise Budget(f"S_{max_size} exceeds the symmetric degree guard {settings.max_symmetric_degree}")
        return list(range(1, max_size + 1))
    if max_size > settings.max_table_order:
        raise Budget(f"size {max_size} exceeds the table guard {settings.max_table_order}")
    if family is Family.DIHEDRAL:
        return list(range(1, max_size // 2 + 1))
    if family is Family.POLY_QUOTIENT:
        params: List[Parameter] = []
        for p in primerange(2, max_size + 1):
            d = 1
            while p ** d <= max_size:
                for f in _monic_polynomials(p, d):
                    if conjecture is Conjecture.C3 and not is_irreducible(p, f).irreducible:
                        continue
                    params.append([int(p), f])
                d += 1
        return sorted(params, key=_parameter_key)
    if conjecture is Conjecture.C3:
        return [n for n in range(2, max_size + 1) if isprime(n)]
    return list(range(1, max_size + 1))


def _build(family: Family, parameter: Parameter):
    if family is Family.CYCLIC:
        return cyclic(parameter)
    if family is Family.DIHEDRAL:
        return dihedral(parameter)
    if family is Family.SYMMETRIC:
        return symmetric_group(parameter)
    if family is Family.ZN:
        return build_zn(parameter)
    if family is Family.ZN_NEAR_RING:
        from app.algebra.automata.near_ring import build_near_ring_zn

        return build_near_ring_zn(parameter).table
    p, f = parameter
    return build_poly_quotient(p, f).to_ring_table()


def _closed_subsets_are_subgroups(group) -> Tuple[int, List[Dict[str, Any]]]:
    subsets = enumerate_closed_subsets(group, check=False)
    failures = []
    for s in subsets:
        report = check_group(group, s, cap=1)
        if not report.ok:
            failures.append({"subset": format_witness(group, s), "violation": report.first().to_dict()})
    return len(subsets), failures


def sweep_member(conjecture: Union[Conjecture, str], family: Union[Family, str],
                 parameter: Parameter) -> MemberResult:
    """Run one member of a sweep; pure apart from metrics and logging."""
    conjecture = Conjecture(conjecture)
    family = Family.parse(family) if isinstance(family, str) else family
    started = time.perf_counter()
    structure = _build(family, parameter)
    result = MemberResult(family.value, parameter, structure.name, structure.order)

    if conjecture is Conjecture.C5:
        result.examined, result.counterexamples = _closed_subsets_are_subgroups(structure)
    elif conjecture is Conjecture.C3 and not check_field(structure, cap=1).ok:
        result.skipped = "not a field"
    else:
        found = exhaustive_search(structure, _PROPERTY[conjecture])
        if isinstance(found, Certificate):
            result.examined = 1
            result.counterexamples.append(found.to_dict())
        else:
            result.examined = found.examined

    elapsed = time.perf_counter() - started
    sweep_member_duration_seconds.labels(conjecture=conjecture.value, family=family.value).observe(elapsed)
    if result.counterexamples:
        sweep_witnesses_total.labels(conjecture=conjecture.value).inc(len(result.counterexamples))
        logger.warning("sweep_counterexample", conjecture=conjecture.value, structure=result.structure)
    logger.debug("sweep_member_done", conjecture=conjecture.value, family=family.value,
                 structure=result.structure, examined=result.examined)
    return result


def _run_local(conjecture: Conjecture, family: Family, params: Sequence[Parameter],
               deadline: float) -> List[MemberResult]:
    results = []
    for parameter in params:
        if time.monotonic() > deadline:
            raise Budget(f"sweep ran out of time before member {parameter}")
        results.append(sweep_member(conjecture, family, parameter))
    return results


def _run_distributed(conjecture: Conjecture, family: Family, params: Sequence[Parameter],
                     deadline: float) -> List[MemberResult]:
    from celery import group
    from celery.exceptions import TimeoutError as CeleryTimeout

    from app.tasks.sweep_tasks import run_sweep_member

    job = group(run_sweep_member.s(conjecture.value, family.value, p) for p in params)
    try:
        payloads = job.apply_async().get(timeout=max(deadline - time.monotonic(), 0.001))
    except CeleryTimeout as exc:
        raise Budget("sweep workers did not finish within the time budget") from exc
    return [MemberResult.from_dict(d) for d in payloads]


def sweep(conjecture: Union[Conjecture, str], family: Union[Family, str], max_size: int,
          time_budget: Optional[float] = None) -> SweepReport:
    """
    Check a conjecture on every family member up to ``max_size``.

    Raises:
        UnsupportedFamily: if the family does not belong to the conjecture.
        Budget: when the size guards or the wall-clock budget are exceeded.
    """
    conjecture = Conjecture(conjecture)
    family = Family.parse(family) if isinstance(family, str) else family
    settings = get_settings()
    budget = settings.sweep_time_budget_seconds if time_budget is None else time_budget
    deadline = time.monotonic() + budget

    params = family_members(conjecture, family, max_size)
    logger.info("sweep_started", conjecture=conjecture.value, family=family.value,
                max_size=max_size, members=len(params))
    if settings.sweep_eager or not settings.celery_broker_url:
        results = _run_local(conjecture, family, params, deadline)
    else:
        results = _run_distributed(conjecture, family, params, deadline)

    report = SweepReport(conjecture, family, max_size, sorted(results, key=MemberResult.sort_key))
    logger.info("sweep_finished", conjecture=conjecture.value, family=family.value,
                witness_count=report.witness_count)
    return report
