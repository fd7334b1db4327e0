"""
Report service: assemble CLI reports, attach discrepancy notes for worked
examples whose printed claims disagree with the computation, and render
reports as JSON or text.
"""
from dataclasses import fields, is_dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence

import structlog

from app.algebra.errors import AlgebraError
from app.algebra.finite import jsonable
from app.algebra.linear import OrthogonalityReading
from app.algebra.symbolic import LatticeSet, format_set, lattice, to_rat
from app.models.schemas import CommandReport, Discrepancy, ErrorDetail, OutputFormat

logger = structlog.get_logger()

EXIT_FOUND = 0
EXIT_NOT_FOUND = 1
EXIT_ERROR = 2

_X4_PLUS_1 = (1, 0, 0, 0, 1)
_ONLY_ZERO_ORTHOGONAL = "(x|y) = 0 implies x = 0 or y = 0"


def quotient_discrepancies(p: int, modulus: Sequence[int], irreducible: bool,
                           factors: Optional[str] = None) -> List[Discrepancy]:
    """x^4 + 1 over Z_3 is printed as irreducible, but it factors into two quadratics."""
    if p == 3 and tuple(c % 3 for c in modulus) == _X4_PLUS_1 and not irreducible:
        return [Discrepancy(
            code="reducible_modulus",
            source="Z_3[x]/(x^4 + 1)",
            claim="x^4 + 1 is irreducible over Z_3, so the quotient is a field with 81 elements",
            computed=f"x^4 + 1 = {factors} over Z_3; the quotient has 81 elements and zero "
                     "divisors, while (2x^2)(x^2) = 1 still holds",
        )]
    return []


def double_coset_discrepancies(h: LatticeSet, x: Any, k: LatticeSet,
                               result: LatticeSet) -> List[Discrepancy]:
    """2Z+ 5 3Z+ is printed as {30, 60, 120, 240, 360, ...}, which omits 90 = 2*5*9."""
    if h == lattice(2) and to_rat(x) == 5 and k == lattice(3):
        return [Discrepancy(
            code="double_coset_listing",
            source="2Z+ * 5 * 3Z+",
            claim="{30, 60, 120, 240, 360, ...}",
            computed=f"{format_set(result)}, which contains 90 = 2*5*9",
        )]
    return []


def orthogonality_discrepancies(readings: Iterable[OrthogonalityReading]) -> List[Discrepancy]:
    """The zero vector is printed as the only vector orthogonal to others; disjoint supports say otherwise."""
    notes = []
    for reading in readings:
        if reading.statement == _ONLY_ZERO_ORTHOGONAL and not reading.holds:
            x, y = reading.witness
            notes.append(Discrepancy(
                code="orthogonal_nonzero_pair",
                source="Z0^n with the standard inner product",
                claim="the zero vector is the only vector orthogonal to another",
                computed=f"({_vector_text(x)} | {_vector_text(y)}) = 0 with both vectors nonzero; "
                         "self-orthogonal and orthogonal-to-all vectors are zero",
            ))
    return notes


def _vector_text(v: Sequence[Any]) -> str:
    return "(" + ",".join(str(c) for c in v) + ")"


def _text_lines(value: Any, indent: int = 0) -> List[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
        return lines
    if isinstance(value, list):
        if all(not isinstance(item, (dict, list)) for item in value):
            return [pad + ", ".join(_scalar(item) for item in value)]
        lines = []
        for item in value:
            lines.append(f"{pad}-")
            lines.extend(_text_lines(item, indent + 1))
        return lines
    return [pad + _scalar(value)]


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list) and not value:
        return "[]"
    if isinstance(value, dict) and not value:
        return "{}"
    return str(value)


class ReportService:
    """Builds and renders command reports"""

    def success(self, command: str, arguments: Dict[str, Any], result: Dict[str, Any],
                exit_status: int = EXIT_FOUND,
                discrepancies: Optional[List[Discrepancy]] = None) -> CommandReport:
        report = CommandReport(
            command=command,
            arguments=arguments,
            result=result,
            discrepancies=discrepancies or [],
            exit_status=exit_status,
        )
        if report.discrepancies:
            logger.info("discrepancies_reported", command=command,
                        codes=[d.code for d in report.discrepancies])
        return report

    def failure(self, command: str, arguments: Dict[str, Any], error: Exception) -> CommandReport:
        """A report for an error; library errors keep their stable code."""
        code = error.code if isinstance(error, AlgebraError) else "usage"
        logger.warning("command_failed", command=command, code=code, message=str(error))
        return CommandReport(
            command=command,
            arguments=arguments,
            error=ErrorDetail(code=code, message=str(error)),
            exit_status=EXIT_ERROR,
        )

    def render(self, report: CommandReport, fmt: OutputFormat = OutputFormat.JSON) -> str:
        if fmt is OutputFormat.JSON:
            return report.model_dump_json(indent=2)
        data = report.model_dump(mode="json")
        lines = [f"command: {report.command}"]
        if report.arguments:
            lines.append("arguments:")
            lines.extend(_text_lines(data["arguments"], 1))
        if report.error is not None:
            lines.append(f"error: {report.error.code}: {report.error.message}")
        if report.result is not None:
            lines.append("result:")
            lines.extend(_text_lines(data["result"], 1))
        for note in report.discrepancies:
            lines.append(f"discrepancy [{note.code}] {note.source}")
            lines.append(f"  printed:  {note.claim}")
            lines.append(f"  computed: {note.computed}")
        lines.append(f"exit: {report.exit_status}")
        return "\n".join(lines)


# Global service instance
_report_service: Optional[ReportService] = None


def get_report_service() -> ReportService:
    """Get or create the global report service instance"""
    global _report_service
    if _report_service is None:
        _report_service = ReportService()
    return _report_service


def to_jsonable(value: Any) -> Any:
    """Dataclasses, dicts and witness values as JSON data."""
    if is_dataclass(value) and not isinstance(value, type):
        if hasattr(value, "to_dict"):
            return value.to_dict()
        return {f.name: to_jsonable(getattr(value, f.name)) for f in fields(value)}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return jsonable(value)
