"""
Background tasks for conjecture sweeps.
"""
from typing import Any, Dict, List, Union

from app.algebra.detect import sweep_member
from app.celery_app import celery_app


@celery_app.task(name="app.tasks.run_sweep_member")
def run_sweep_member(conjecture: str, family: str, parameter: Union[int, List[Any]]) -> Dict[str, Any]:
    """
    Run one member of a sweep on a worker.

    Args:
        conjecture: conjecture code (C1..C5)
        family: family name
        parameter: the member's order, degree, or [p, modulus] pair

    Returns:
        The member result as a JSON-ready dict
    """
    return sweep_member(conjecture, family, parameter).to_dict()
