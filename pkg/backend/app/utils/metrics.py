"""
Prometheus metrics for detectors, closed-subset enumeration and sweeps.
"""
from prometheus_client import Counter, Histogram, generate_latest

detector_runs_total = Counter(
    'detector_runs_total',
    'Total detector invocations',
    ['property', 'mode', 'outcome']
)

closed_subsets_enumerated_total = Counter(
    'closed_subsets_enumerated_total',
    'Closed subsets produced by generator-closure enumeration'
)

sweep_member_duration_seconds = Histogram(
    'sweep_member_duration_seconds',
    'Time spent on one family member during a conjecture sweep',
    ['conjecture', 'family'],
    buckets=[0.001, 0.005, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 10.0, 30.0]
)

sweep_witnesses_total = Counter(
    'sweep_witnesses_total',
    'Counterexample witnesses found by sweeps',
    ['conjecture']
)


def render_metrics() -> bytes:
    """Get the Prometheus exposition text for the default registry."""
    return generate_latest()
