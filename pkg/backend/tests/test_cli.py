"""
Tests for the command-line frontend: reports, exit codes and discrepancy notes.
"""
import io
import json

import pytest

from app.cli import run_command
from app.services.report_service import EXIT_ERROR, EXIT_FOUND, EXIT_NOT_FOUND

Z10_MUL = {"kind": "cayley_magma", "table": [[(a * b) % 10 for b in range(10)] for a in range(10)]}


def run(*argv):
    out = io.StringIO()
    status = run_command(list(argv), stdout=out)
    return status, out.getvalue()


def run_json(*argv):
    status, text = run(*argv)
    report = json.loads(text)
    assert report["exit_status"] == status
    return status, report


class TestDetect:
    def test_s_semigroup_found(self, write_descriptor):
        path = write_descriptor(Z10_MUL)
        status, report = run_json("detect", "--in", path, "--property", "s-semigroup")
        assert status == EXIT_FOUND
        assert report["command"] == "detect"
        assert report["result"]["witness_labels"] == ["1", "3", "7", "9"]
        assert report["result"]["verified"] is True

    def test_given_witness(self, write_descriptor):
        path = write_descriptor(Z10_MUL)
        status, report = run_json("detect", "--in", path, "--property", "s-semigroup",
                                  "--witness", "2,4,6,8")
        assert status == EXIT_FOUND
        assert report["result"]["mode"] == "given"

    def test_cyclic_group_has_no_witness(self, write_descriptor):
        path = write_descriptor({"kind": "group", "family": "cyclic", "n": 6})
        status, report = run_json("detect", "--in", path, "--property", "s-special-definite-group")
        assert status == EXIT_NOT_FOUND
        assert report["result"]["found"] is False
        assert report["result"]["exhaustive"] is True

    def test_catalog_mode(self, write_descriptor):
        path = write_descriptor({"kind": "symbolic", "structure": "Z_mul"})
        status, report = run_json("detect", "--in", path, "--property", "s-semigroup", "--mode", "catalog")
        assert status == EXIT_FOUND
        assert report["result"]["structure"] == "(Z,*)"

    def test_wrong_parent_class(self, write_descriptor):
        path = write_descriptor(Z10_MUL)
        status, report = run_json("detect", "--in", path, "--property", "s-ring")
        assert status == EXIT_ERROR
        assert report["error"]["code"] == "class_mismatch"
        assert report["result"] is None


class TestVerify:
    def test_semigroup(self, write_descriptor):
        path = write_descriptor(Z10_MUL)
        status, report = run_json("verify", "--in", path, "--class", "semigroup")
        assert status == EXIT_FOUND
        assert report["result"]["ok"] is True

    def test_not_a_group(self, write_descriptor):
        path = write_descriptor(Z10_MUL)
        status, report = run_json("verify", "--in", path, "--class", "group")
        assert status == EXIT_NOT_FOUND
        assert report["result"]["violations"]


class TestSymbolicSets:
    def test_negative_double_coset(self):
        status, report = run_json("dcoset", "--H", "3Z+", "--x=-1", "--K", "2Z+")
        assert status == EXIT_FOUND
        assert report["result"]["double_coset"] == "6*Z-"
        assert report["result"]["meets_H"] == "EMPTY"
        assert report["result"]["H_meets_K"] == "6*Z+"
        assert report["discrepancies"] == []

    def test_double_coset_listing_note(self):
        _, report = run_json("dcoset", "--H", "2Z+", "--x", "5", "--K", "3Z+")
        assert [d["code"] for d in report["discrepancies"]] == ["double_coset_listing"]

    def test_product(self):
        _, report = run_json("product", "--A", "5Z+", "--B", "3Z+")
        assert report["result"]["product"] == "15*Z+"
        assert report["result"]["closed_mul"] is True

    def test_coset(self):
        _, report = run_json("coset", "--a", "1/2", "--H", "Z+")
        assert report["result"]["contains_H"] is True

    def test_bad_set(self):
        status, report = run_json("product", "--A", "banana", "--B", "3Z+")
        assert status == EXIT_ERROR
        assert report["error"]["code"] == "malformed"


class TestIdealsAndQuotients:
    def test_nz(self):
        status, report = run_json("ideals", "--nZ", "6")
        assert status == EXIT_FOUND
        assert report["result"]["classification"]["prime"] is False

    def test_finite_ring(self, write_descriptor):
        path = write_descriptor({"kind": "zn", "n": 12})
        _, report = run_json("ideals", "--in", path)
        assert report["result"]["s_ideals"][0] == {"ideal": "{0,2,4,6,8,10}", "field": "{0,4,8}"}

    def test_ideals_need_a_source(self):
        status, report = run_json("ideals")
        assert status == EXIT_ERROR
        assert report["error"]["code"] == "malformed"

    def test_reducible_modulus_note(self):
        status, report = run_json("quotient", "--p", "3", "--modulus", "1,0,0,0,1")
        assert status == EXIT_FOUND
        assert report["result"]["irreducible"] is False
        assert report["result"]["is_field"] is False
        assert report["result"]["factors_multiply_back"] is True
        assert [d["code"] for d in report["discrepancies"]] == ["reducible_modulus"]

    def test_field_quotient(self):
        _, report = run_json("quotient", "--p", "2", "--modulus", "1,1,0,1", "--inverse", "0,1")
        assert report["result"]["order"] == 8
        assert report["result"]["is_field"] is True
        assert report["result"]["inverse"] is not None
        assert report["discrepancies"] == []


class TestLinear:
    def test_dimension(self):
        status, report = run_json("basis", "--space", "Z0", "--dim", "3")
        assert status == EXIT_FOUND
        assert report["result"]["s_definite_dimension"] == 3

    def test_not_a_basis(self):
        status, report = run_json("basis", "--space", "Z0", "--dim", "2", "--vectors", "1,1;0,1")
        assert status == EXIT_NOT_FOUND
        assert report["result"]["basis"]["is_basis"] is False

    def test_inner_product_and_readings(self):
        _, report = run_json("innerprod", "--space", "Z0", "--dim", "2", "--x", "1,2", "--y", "3,4",
                             "--readings")
        assert report["result"]["value"] == "11"
        assert len(report["result"]["readings"]) == 4
        assert [d["code"] for d in report["discrepancies"]] == ["orthogonal_nonzero_pair"]


class TestAutomaton:
    def test_trace(self):
        _, report = run_json("automaton", "--modulus", "4", "--alphabet", "1", "--word", "0,0,0")
        assert report["result"]["trace"] == [0, 1, 2, 3]
        assert report["result"]["states"] == 4

    def test_example(self):
        status, report = run_json("automaton", "--example")
        assert status == EXIT_FOUND
        assert report["result"]["input_freeness"]["free"] is True

    def test_needs_alphabet(self):
        status, _ = run("automaton")
        assert status == EXIT_ERROR


class TestSweepCommand:
    def test_cyclic(self):
        status, report = run_json("sweep", "--conjecture", "C1", "--family", "cyclic", "--max", "12")
        assert status == EXIT_FOUND
        assert report["result"]["witness_count"] == 0
        assert len(report["result"]["sizes"]) == 12

    def test_unsupported_family(self):
        status, report = run_json("sweep", "--conjecture", "C3", "--family", "cyclic", "--max", "5")
        assert status == EXIT_ERROR
        assert report["error"]["code"] == "unsupported_family"


class TestUsage:
    @pytest.mark.parametrize("argv", [
        [],
        ["frobnicate"],
        ["sweep", "--conjecture", "C9", "--family", "cyclic", "--max", "3"],
        ["sweep", "--conjecture", "C1", "--family", "cyclic", "--max", "many"],
    ])
    def test_usage_errors(self, argv):
        status, report = run_json(*argv)
        assert status == EXIT_ERROR
        assert report["error"]["code"] == "usage"

    def test_text_format(self):
        status, text = run("--format", "text", "product", "--A", "5Z+", "--B", "3Z+")
        assert status == EXIT_FOUND
        assert "product: 15*Z+" in text
        assert text.rstrip().endswith("exit: 0")

    def test_metrics_out(self, tmp_path, write_descriptor):
        path = write_descriptor(Z10_MUL)
        metrics = tmp_path / "metrics.prom"
        run("--metrics-out", str(metrics), "detect", "--in", path, "--property", "s-semigroup")
        assert b"detector_runs_total" in metrics.read_bytes()

    def test_arguments_are_echoed(self):
        _, report = run_json("--seed", "7", "product", "--A", "5Z+", "--B", "3Z+")
        assert report["arguments"]["seed"] == 7
        assert report["arguments"]["A"] == "5Z+"

    def test_metrics_path_that_cannot_be_written(self, tmp_path):
        missing = tmp_path / "absent" / "metrics.prom"
        status, report = run_json("--metrics-out", str(missing), "product", "--A", "5Z+", "--B", "3Z+")
        assert status == EXIT_ERROR
        assert report["error"]["code"] == "malformed"
        assert "metrics" in report["error"]["message"]

    def test_near_ring_order_must_be_an_integer(self):
        status, report = run_json("automaton", "--alphabet", "1", "--word", "0", "--near-ring", "zn:abc")
        assert status == EXIT_ERROR
        assert report["error"]["code"] == "malformed"

    @pytest.mark.parametrize("x", [";", "1,2;3,4"])
    def test_inner_product_needs_one_vector(self, x):
        status, report = run_json("innerprod", "--space", "Z0", "--dim", "2", "--x", x, "--y", "1,2")
        assert status == EXIT_ERROR
        assert report["error"]["code"] == "malformed"


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ["--seed", "3", "basis", "--space", "Z0", "--dim", "3", "--vectors", "0,3,0;0,0,1;4,0,0"],
        ["--seed", "3", "innerprod", "--space", "Z0", "--dim", "2", "--audit", "--readings"],
        ["sweep", "--conjecture", "C1", "--family", "dihedral", "--max", "6"],
    ])
    def test_same_invocation_same_bytes(self, argv):
        first = run(*argv)
        second = run(*argv)
        assert first == second
        assert json.loads(first[1])["error"] is None
