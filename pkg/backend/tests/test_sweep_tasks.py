"""
Tests for the sweep worker task and the choice between local and worker runs.
"""
import importlib

from app.algebra.detect import Conjecture, Family, MemberResult, sweep
from app.tasks.sweep_tasks import run_sweep_member

# the package re-exports the sweep function under the module's name
sweep_module = importlib.import_module("app.algebra.detect.sweep")


class TestSweepTask:
    def test_direct_call(self):
        data = run_sweep_member("C1", "cyclic", 6)
        assert data["structure"] == "C_6"
        assert data["counterexamples"] == []

    def test_eager_apply(self):
        result = run_sweep_member.apply(args=("C2", "poly-quotient", [2, [1, 1, 1]])).get()
        member = MemberResult.from_dict(result)
        assert member.parameter == [2, [1, 1, 1]]
        assert member.order == 4

    def test_task_name(self):
        assert run_sweep_member.name == "app.tasks.run_sweep_member"


class TestDispatch:
    def test_broker_sends_members_to_workers(self, monkeypatch):
        monkeypatch.setenv("ALGLAB_CELERY_BROKER_URL", "redis://localhost:6379/9")
        monkeypatch.setenv("ALGLAB_SWEEP_EAGER", "false")
        dispatched = []

        def fake_workers(conjecture, family, params, deadline):
            dispatched.extend(params)
            return [MemberResult.from_dict(run_sweep_member(conjecture.value, family.value, p))
                    for p in reversed(params)]

        monkeypatch.setattr(sweep_module, "_run_distributed", fake_workers)
        report = sweep(Conjecture.C1, Family.CYCLIC, 5)
        assert dispatched == [1, 2, 3, 4, 5]
        assert report.sizes == ["C_1", "C_2", "C_3", "C_4", "C_5"]

    def test_eager_setting_keeps_work_local(self, monkeypatch):
        monkeypatch.setenv("ALGLAB_CELERY_BROKER_URL", "redis://localhost:6379/9")

        def fail(*args):
            raise AssertionError("workers should not be used")

        monkeypatch.setattr(sweep_module, "_run_distributed", fail)
        assert sweep(Conjecture.C5, Family.DIHEDRAL, 6).upheld
