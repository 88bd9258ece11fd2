"""File format: parsing, canonical serialization, report rendering."""

import json

import pytest
from hypothesis import given, settings, strategies as st

from homnary.documents import (
    PhiBundle,
    bundle_to_dict,
    input_digest,
    parse_document,
    render_json,
    report_to_dict,
    serialize_bundle,
)
from homnary.algebras import NHomLieSuper, check_hom_nambu
from homnary.errors import MalformedInputError
from homnary.fixtures import (
    induced_four_ary,
    omitted_argument_nlie,
    phi_line,
    signed_omitted_nlie,
    tiny_hom_pre_lie,
)
from homnary.graded import GradedSpace, canonical_skew_key, tuple_parity
from homnary.representations import (
    adjoint_hom_pre_lie_representation,
    adjoint_lie_representation,
    adjoint_pre_lie_representation,
)
from homnary.scalars import Q, rat_from_string, rat_to_string
from homnary.tensors import EvenLinearMap, MultiLinearProduct


def test_rational_round_trip_and_rejects():
    assert rat_to_string(rat_from_string("3/6")) == "1/2"
    assert rat_to_string(rat_from_string("-4")) == "-4"
    for bad in ("", "1.5", "1/0", "a", "1/-2", "--3"):
        with pytest.raises(MalformedInputError):
            rat_from_string(bad)


def test_bundle_round_trips_exactly():
    objs = [
        omitted_argument_nlie(3),
        signed_omitted_nlie(4),
        tiny_hom_pre_lie(),
        induced_four_ary(1),
        adjoint_lie_representation(omitted_argument_nlie(3)),
        adjoint_pre_lie_representation(induced_four_ary(1)),
        adjoint_hom_pre_lie_representation(tiny_hom_pre_lie()),
        EvenLinearMap.from_entries(GradedSpace((0, 1)), GradedSpace((0, 1)),
                                   {(0, 0): Q(1, 2)}),
        PhiBundle(phi_line(1), tiny_hom_pre_lie()),
    ]
    for obj in objs:
        text = serialize_bundle(obj)
        again = serialize_bundle(parse_document(text))
        assert text == again, type(obj).__name__


def test_parser_canonicalizes_non_canonical_keys():
    doc = {
        "schema_version": "1", "kind": "n_hom_lie", "n": 2, "dim": 2,
        "parities": [0, 0],
        "alpha": [["1", "0"], ["0", "1"]],
        "bracket": {"2,1": {"1": "1"}},
    }
    alg = parse_document(json.dumps(doc))
    assert alg.bracket.evaluate_basis((0, 1)) == {0: Q(-1)}


def test_parser_rejects_inconsistent_duplicates():
    doc = {
        "schema_version": "1", "kind": "n_hom_lie", "n": 2, "dim": 2,
        "parities": [0, 0],
        "alpha": [["1", "0"], ["0", "1"]],
        "bracket": {"1,2": {"1": "1"}, "2,1": {"1": "1"}},
    }
    with pytest.raises(MalformedInputError) as err:
        parse_document(json.dumps(doc))
    assert "duplicate" in str(err.value) or "inconsistent" in str(err.value)


def test_parser_cites_parity_violation():
    doc = {
        "schema_version": "1", "kind": "n_hom_pre_lie", "n": 4, "dim": 2,
        "parities": [0, 1],
        "alpha": [["1", "0"], ["0", "1"]],
        "brace": {"2,2,2,2": {"2": "1"}},
    }
    with pytest.raises(MalformedInputError) as err:
        parse_document(json.dumps(doc))
    assert "evenness" in str(err.value)


def test_parser_rejects_unknown_and_missing_fields():
    with pytest.raises(MalformedInputError):
        parse_document(json.dumps({"schema_version": "1", "kind": "n_hom_lie"}))
    base = json.loads(serialize_bundle(omitted_argument_nlie(3)))
    base["surprise"] = 1
    with pytest.raises(MalformedInputError):
        parse_document(json.dumps(base))
    base = json.loads(serialize_bundle(omitted_argument_nlie(3)))
    base["schema_version"] = "999"
    with pytest.raises(MalformedInputError):
        parse_document(json.dumps(base))


def test_provenance_report_field_is_tolerated():
    text = serialize_bundle(induced_four_ary(1), provenance_report={"status": "fail"})
    alg = parse_document(text)
    assert alg.brace.evaluate_basis((1, 1, 1, 1)) == {0: Q(3)}


def test_report_document_shape_and_determinism():
    alg = omitted_argument_nlie(3)
    report = check_hom_nambu(alg)
    doc1 = render_json(report_to_dict(report, input_digest(b"x")))
    doc2 = render_json(report_to_dict(check_hom_nambu(alg), input_digest(b"x")))
    assert doc1 == doc2
    parsed = json.loads(doc1)
    assert parsed["status"] == "pass"
    assert parsed["identities"]["hom_nambu"]["violation_count"] == 0
    assert parsed["input_digest"].startswith("sha256:")


def test_report_serializes_one_based_indices():
    # [e1,e2] = e3, [e2,e3] = e1, [e1,e3] = e1 is not a Lie bracket
    space = GradedSpace((0, 0, 0))
    alg = NHomLieSuper(
        space,
        MultiLinearProduct(space, 2, 2, {(0, 1): {2: Q(1)}, (1, 2): {0: Q(1)},
                                         (0, 2): {0: Q(1)}}),
        EvenLinearMap.identity(space))
    report = check_hom_nambu(alg)
    assert not report.ok
    doc = report_to_dict(report)
    violation = doc["identities"]["hom_nambu"]["violations"][0]
    where = violation["where"]
    raw = report.violations[0].where
    assert where == [[i + 1 for i in raw[0]], [i + 1 for i in raw[1]]]
    assert min(min(part) for part in where) >= 1


# --- random round-trip property ----------------------------------------------


@st.composite
def random_lie_bundle(draw):
    dim = draw(st.integers(1, 4))
    n = draw(st.integers(2, 4))
    parities = tuple(draw(st.lists(st.integers(0, 1), min_size=dim, max_size=dim)))
    space = GradedSpace(parities)
    scalars = st.integers(-3, 3).map(lambda k: Q(k, 2) if k % 2 else Q(k // 2))
    entries = {}
    for _ in range(draw(st.integers(0, 3))):
        idx = tuple(sorted(draw(st.lists(st.integers(0, dim - 1), min_size=n, max_size=n))))
        key = canonical_skew_key(idx, space, n)
        if key.zero:
            continue
        p = tuple_parity(idx, space)
        outs = [k for k in range(dim) if parities[k] == p]
        if not outs:
            continue
        out = draw(st.sampled_from(outs))
        c = draw(scalars)
        if c:
            entries.setdefault(key.indices, {})[out] = c
    diag = [draw(scalars) for _ in range(dim)]
    alpha = EvenLinearMap.from_entries(space, space,
                                       {(i, i): diag[i] for i in range(dim)})
    bracket = MultiLinearProduct(space, n, n, entries)
    return NHomLieSuper(space, bracket, alpha)


@settings(max_examples=100, derandomize=True, deadline=None)
@given(random_lie_bundle())
def test_round_trip_on_random_bundles(alg):
    text = serialize_bundle(alg)
    again = serialize_bundle(parse_document(text))
    assert text == again
