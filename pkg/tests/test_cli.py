"""Command-line surface: exit codes, report output, pipelines."""

import json
import subprocess
import sys

import pytest

from homnary.documents import PhiBundle, serialize_bundle
from homnary.fixtures import (
    omitted_argument_nlie,
    phi_line,
    tiny_hom_pre_lie,
)
from homnary.representations import adjoint_lie_representation
from homnary.scalars import Q
from homnary.tensors import EvenLinearMap


def run_cli(*args, stdin=None):
    proc = subprocess.run(
        [sys.executable, "-m", "homnary.cli", *args],
        capture_output=True, text=True, input=stdin,
    )
    return proc.returncode, proc.stdout, proc.stderr


@pytest.fixture(scope="module")
def bundles(tmp_path_factory):
    root = tmp_path_factory.mktemp("bundles")
    n3 = omitted_argument_nlie(3)
    (root / "example_n3.bundle").write_text(serialize_bundle(n3))
    mutated = json.loads(serialize_bundle(n3))
    mutated["bracket"]["1,2,3"] = {"1": "1"}
    (root / "mutated.bundle").write_text(json.dumps(mutated))
    (root / "hompre.bundle").write_text(serialize_bundle(tiny_hom_pre_lie()))
    (root / "phi_lambda1.bundle").write_text(
        serialize_bundle(PhiBundle(phi_line(1), tiny_hom_pre_lie())))
    (root / "adrep.bundle").write_text(serialize_bundle(adjoint_lie_representation(n3)))
    (root / "broken.bundle").write_text("{not json")
    return root


def test_verify_passes_on_the_example(bundles):
    rc, out, err = run_cli("verify", str(bundles / "example_n3.bundle"))
    assert rc == 0
    assert json.loads(out)["status"] == "pass"


def test_verify_mutated_names_the_identity(bundles):
    rc, out, _ = run_cli("verify", str(bundles / "mutated.bundle"))
    assert rc == 1
    doc = json.loads(out)
    assert doc["identities"]["hom_nambu"]["status"] == "fail"
    assert doc["identities"]["hom_nambu"]["violations"][0]["where"]


def test_verify_malformed_input_exits_2(bundles):
    rc, out, err = run_cli("verify", str(bundles / "broken.bundle"))
    assert rc == 2 and not out and "homnary:" in err
    rc, _, _ = run_cli("verify", str(bundles / "missing.bundle"))
    assert rc == 2


def test_verify_identity_filter(bundles):
    rc, out, _ = run_cli("verify", str(bundles / "mutated.bundle"),
                         "--identity", "super_skew")
    assert rc == 0
    assert list(json.loads(out)["identities"]) == ["super_skew"]
    rc, _, err = run_cli("verify", str(bundles / "mutated.bundle"),
                         "--identity", "nope")
    assert rc == 2


def test_induce_pipeline_verifies_clean(bundles):
    rc, out, _ = run_cli("induce", "nary", str(bundles / "phi_lambda1.bundle"),
                         str(bundles / "hompre.bundle"))
    assert rc == 0
    doc = json.loads(out)
    assert doc["kind"] == "n_hom_pre_lie"
    assert doc["brace"]["2,2,2,2"] == {"1": "3"}
    assert doc["provenance_report"]["identities"]["phi_wedge_delta"]["status"] == "fail"
    rc2, out2, _ = run_cli("verify", "-", stdin=out)
    assert rc2 == 0
    assert json.loads(out2)["status"] == "pass"


def test_construct_subadjacent(bundles):
    rc, out, _ = run_cli("induce", "nary", str(bundles / "phi_lambda1.bundle"),
                         str(bundles / "hompre.bundle"))
    rc, out, _ = run_cli("construct", "subadjacent", "-", stdin=out)
    assert rc == 0
    doc = json.loads(out)
    assert doc["kind"] == "n_hom_lie"
    assert doc["bracket"]["2,2,2,2"] == {"1": "12"}


def test_check_operator_and_search(bundles):
    rc, out, _ = run_cli("search", "operator", str(bundles / "adrep.bundle"),
                         "--grid", "-1,0,1", "--limit", "4")
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    op_doc = lines[1]
    op_path = bundles / "found_op.bundle"
    op_path.write_text(op_doc)
    rc, out, _ = run_cli("check-operator", "o-operator", str(op_path),
                         str(bundles / "adrep.bundle"))
    assert rc == 0
    assert json.loads(out)["status"] == "pass"


def test_check_operator_rota_baxter_weight(bundles):
    zero_op = serialize_bundle(
        EvenLinearMap.zero(omitted_argument_nlie(3).space, omitted_argument_nlie(3).space))
    op_path = bundles / "zero_op.bundle"
    op_path.write_text(zero_op)
    rc, out, _ = run_cli("check-operator", "rota-baxter", str(op_path),
                         str(bundles / "example_n3.bundle"), "--weight", "2/3")
    assert rc == 0


def test_reports_are_byte_identical_across_runs(bundles):
    rc1, out1, _ = run_cli("verify", str(bundles / "mutated.bundle"))
    rc2, out2, _ = run_cli("verify", str(bundles / "mutated.bundle"))
    assert (rc1, out1) == (rc2, out2)


def test_verify_full_loops_and_threads(bundles):
    rc, out, _ = run_cli("verify", str(bundles / "example_n3.bundle"),
                         "--full-loops", "--threads", "2")
    assert rc == 0 and json.loads(out)["status"] == "pass"


def test_verify_rep_bundle(bundles):
    rc, out, _ = run_cli("verify", str(bundles / "adrep.bundle"))
    assert rc == 0
    doc = json.loads(out)
    assert set(doc["identities"]) == {"rho_alpha_compat", "rep_nambu1", "rep_nambu2"}
