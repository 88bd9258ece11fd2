"""Bundle documents: a hand-authorable JSON file format and its (de)serializer.

Design points:

* coefficients are rational strings ("p/q" or an integer string), never
  floats, so files honor the same exactness contract as the library;
* basis indices are 1-based in files and 0-based in code;
* product and action tables may be written at any index tuples; the parser
  canonicalizes them and rejects duplicates that disagree after the Koszul
  sign adjustment, entries forced to vanish by skew-symmetry, and parity
  (evenness) violations, naming the offending entry;
* serialization is canonical (sorted keys, canonical tuples, no zero
  entries), so parse-then-serialize is the identity on canonical documents
  and byte-identical across runs and scalar backends.

Report documents render residual reports with the same determinism, plus the
tool version and a digest of the input bytes.
"""

from __future__ import annotations

import hashlib
import json
from typing import Dict, Mapping, Optional, Tuple

from .algebras import HomPreLieSuper, NHomLieSuper, NHomPreLieSuper, ResidualReport
from .errors import MalformedInputError
from .graded import GradedSpace
from .induction import PhiForm
from .representations import HomPreLieRepBundle, LieRepBundle, PreLieRepBundle
from .scalars import rat_from_string, rat_to_string
from .tensors import ActionTensor, EvenLinearMap, MultiLinearProduct

SCHEMA_VERSION = "1"
TOOL_NAME = "homnary"
TOOL_VERSION = "0.1.0"

KINDS = ("n_hom_lie", "n_hom_pre_lie", "hom_pre_lie", "lie_rep", "pre_lie_rep",
         "operator", "phi_form")


# ---------------------------------------------------------------------------
# low-level helpers
# ---------------------------------------------------------------------------


def _require_fields(doc: Mapping, required: Tuple[str, ...], optional: Tuple[str, ...] = ()):
    missing = [f for f in required if f not in doc]
    if missing:
        raise MalformedInputError(f"missing fields: {', '.join(missing)}")
    unknown = [f for f in doc if f not in required and f not in optional]
    if unknown:
        raise MalformedInputError(f"unknown fields rejected: {', '.join(sorted(unknown))}")


def _parse_parities(raw, what: str) -> GradedSpace:
    if not isinstance(raw, list) or not raw or any(p not in (0, 1) for p in raw):
        raise MalformedInputError(f"{what} must be a nonempty list of 0/1")
    return GradedSpace(tuple(raw))


def _parse_indices(text: str, dim: int, what: str) -> Tuple[int, ...]:
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise MalformedInputError(f"{what}: bad index tuple {text!r}")
    for p in parts:
        if not (1 <= p <= dim):
            raise MalformedInputError(f"{what}: index {p} out of range 1..{dim}")
    return tuple(p - 1 for p in parts)


def _indices_to_text(idx: Tuple[int, ...]) -> str:
    return ",".join(str(i + 1) for i in idx)


def _parse_vec(raw: Mapping, dim: int, what: str) -> Dict[int, object]:
    if not isinstance(raw, dict):
        raise MalformedInputError(f"{what}: expected an object of coefficients")
    out = {}
    for k, v in raw.items():
        try:
            i = int(k)
        except ValueError:
            raise MalformedInputError(f"{what}: bad basis index {k!r}")
        if not (1 <= i <= dim):
            raise MalformedInputError(f"{what}: basis index {i} out of range 1..{dim}")
        try:
            out[i - 1] = rat_from_string(v)
        except MalformedInputError as e:
            raise MalformedInputError(f"{what}: {e}")
    return out


def _vec_to_doc(vec: Mapping[int, object]) -> Dict[str, str]:
    return {str(i + 1): rat_to_string(c) for i, c in sorted(vec.items())}


def _parse_matrix(raw, space_in: GradedSpace, space_out: GradedSpace, what: str) -> EvenLinearMap:
    if (not isinstance(raw, list) or len(raw) != space_out.dim
            or any(not isinstance(r, list) or len(r) != space_in.dim for r in raw)):
        raise MalformedInputError(
            f"{what}: expected a {space_out.dim} x {space_in.dim} matrix of rational strings")
    try:
        rows = [[rat_from_string(c) for c in r] for r in raw]
    except MalformedInputError as e:
        raise MalformedInputError(f"{what}: {e}")
    try:
        return EvenLinearMap(space_in, space_out, rows)
    except MalformedInputError as e:
        raise MalformedInputError(f"{what}: {e}")


def _matrix_to_doc(m: EvenLinearMap) -> list:
    return [[rat_to_string(c) for c in row] for row in m.rows]


def _parse_product(raw, space: GradedSpace, arity: int, skew_prefix_len: int,
                   what: str) -> MultiLinearProduct:
    if not isinstance(raw, dict):
        raise MalformedInputError(f"{what}: expected an object of entries")
    table = {}
    for key, vec in raw.items():
        idx = _parse_indices(key, space.dim, f"{what} entry {key!r}")
        if len(idx) != arity:
            raise MalformedInputError(f"{what} entry {key!r}: expected {arity} indices")
        table[idx] = _parse_vec(vec, space.dim, f"{what} entry {key!r}")
    try:
        return MultiLinearProduct.from_raw(space, arity, skew_prefix_len, table)
    except MalformedInputError as e:
        raise MalformedInputError(f"{what}: {e}")


def _product_to_doc(p: MultiLinearProduct) -> Dict[str, Dict[str, str]]:
    return {_indices_to_text(idx): _vec_to_doc(vec) for idx, vec in p.items_sorted()}


def _parse_action(raw, space_alg: GradedSpace, space_v: GradedSpace, slots: int,
                  skew_prefix_len: int, what: str) -> ActionTensor:
    if not isinstance(raw, dict):
        raise MalformedInputError(f"{what}: expected an object of entries")
    table: Dict[Tuple[int, ...], Dict[int, Dict[int, object]]] = {}
    for key, vec in raw.items():
        if ";" not in key:
            raise MalformedInputError(f"{what} entry {key!r}: expected 'algebra-tuple;module-index'")
        alg_part, v_part = key.rsplit(";", 1)
        idx = _parse_indices(alg_part, space_alg.dim, f"{what} entry {key!r}")
        if len(idx) != slots:
            raise MalformedInputError(f"{what} entry {key!r}: expected {slots} algebra indices")
        try:
            v_in = int(v_part)
        except ValueError:
            raise MalformedInputError(f"{what} entry {key!r}: bad module index {v_part!r}")
        if not (1 <= v_in <= space_v.dim):
            raise MalformedInputError(f"{what} entry {key!r}: module index out of range")
        col = _parse_vec(vec, space_v.dim, f"{what} entry {key!r}")
        table.setdefault(idx, {})[v_in - 1] = col
    try:
        return ActionTensor.from_raw(space_alg, space_v, slots, skew_prefix_len, table)
    except MalformedInputError as e:
        raise MalformedInputError(f"{what}: {e}")


def _action_to_doc(t: ActionTensor) -> Dict[str, Dict[str, str]]:
    out = {}
    for idx, mat in sorted(t.entries.items()):
        for v_in, col in sorted(mat.items()):
            out[f"{_indices_to_text(idx)};{v_in + 1}"] = _vec_to_doc(col)
    return out


# ---------------------------------------------------------------------------
# bundle parsing
# ---------------------------------------------------------------------------


def _parse_algebra(doc: Mapping, kind: str):
    if kind == "hom_pre_lie":
        _require_fields(doc, ("kind", "n", "dim", "parities", "alpha", "circ"))
        if doc["n"] != 2:
            raise MalformedInputError("hom_pre_lie documents must have n = 2")
        space = _parse_parities(doc["parities"], "parities")
        if space.dim != doc["dim"]:
            raise MalformedInputError("dim does not match parities length")
        alpha = _parse_matrix(doc["alpha"], space, space, "alpha")
        circ = _parse_product(doc["circ"], space, 2, 0, "circ")
        return HomPreLieSuper(space, circ, alpha)
    table_field = "bracket" if kind == "n_hom_lie" else "brace"
    _require_fields(doc, ("kind", "n", "dim", "parities", "alpha", table_field))
    n = doc["n"]
    if not isinstance(n, int) or n < 2:
        raise MalformedInputError("n must be an integer >= 2")
    space = _parse_parities(doc["parities"], "parities")
    if space.dim != doc["dim"]:
        raise MalformedInputError("dim does not match parities length")
    alpha = _parse_matrix(doc["alpha"], space, space, "alpha")
    prefix = n if kind == "n_hom_lie" else n - 1
    product = _parse_product(doc[table_field], space, n, prefix, table_field)
    if kind == "n_hom_lie":
        return NHomLieSuper(space, product, alpha)
    return NHomPreLieSuper(space, product, alpha)


def _parse_nested_algebra(doc: Mapping, allowed_kinds: Tuple[str, ...], what: str):
    if not isinstance(doc, Mapping) or doc.get("kind") not in allowed_kinds:
        raise MalformedInputError(f"{what}: expected a nested algebra of kind {allowed_kinds}")
    return _parse_algebra(doc, doc["kind"])


def parse_document(text: str):
    """Parse a bundle document, returning the typed object."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInputError(f"not valid JSON: {e}")
    if not isinstance(doc, dict):
        raise MalformedInputError("top level must be an object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise MalformedInputError(
            f"unsupported schema_version {doc.get('schema_version')!r} (supported: {SCHEMA_VERSION})")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise MalformedInputError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    body = {k: v for k, v in doc.items() if k not in ("schema_version", "provenance_report")}

    if kind in ("n_hom_lie", "n_hom_pre_lie", "hom_pre_lie"):
        return _parse_algebra(body, kind)

    if kind == "lie_rep":
        _require_fields(body, ("kind", "algebra", "dim_v", "parities_v", "alpha_v", "rho"))
        alg = _parse_nested_algebra(body["algebra"], ("n_hom_lie",), "algebra")
        vspace = _parse_parities(body["parities_v"], "parities_v")
        if vspace.dim != body["dim_v"]:
            raise MalformedInputError("dim_v does not match parities_v length")
        alpha_v = _parse_matrix(body["alpha_v"], vspace, vspace, "alpha_v")
        rho = _parse_action(body["rho"], alg.space, vspace, alg.n - 1, alg.n - 1, "rho")
        return LieRepBundle(alg, vspace, rho, alpha_v)

    if kind == "pre_lie_rep":
        _require_fields(body, ("kind", "algebra", "dim_v", "parities_v", "alpha_v", "l", "r"))
        alg = _parse_nested_algebra(body["algebra"], ("n_hom_pre_lie", "hom_pre_lie"), "algebra")
        binary = isinstance(alg, HomPreLieSuper)
        nary = alg.as_nary() if binary else alg
        vspace = _parse_parities(body["parities_v"], "parities_v")
        if vspace.dim != body["dim_v"]:
            raise MalformedInputError("dim_v does not match parities_v length")
        alpha_v = _parse_matrix(body["alpha_v"], vspace, vspace, "alpha_v")
        n = nary.n
        l = _parse_action(body["l"], nary.space, vspace, n - 1, n - 1, "l")
        r = _parse_action(body["r"], nary.space, vspace, n - 1, n - 2, "r")
        if binary:
            return HomPreLieRepBundle(alg, vspace, l, r, alpha_v)
        return PreLieRepBundle(nary, vspace, l, r, alpha_v)

    if kind == "operator":
        _require_fields(body, ("kind", "parities_in", "parities_out", "matrix"))
        space_in = _parse_parities(body["parities_in"], "parities_in")
        space_out = _parse_parities(body["parities_out"], "parities_out")
        return _parse_matrix(body["matrix"], space_in, space_out, "matrix")

    # phi_form
    _require_fields(body, ("kind", "arity", "dim", "parities", "coeffs"), optional=("algebra",))
    space = _parse_parities(body["parities"], "parities")
    if space.dim != body["dim"]:
        raise MalformedInputError("dim does not match parities length")
    arity = body["arity"]
    if not isinstance(arity, int) or arity < 1:
        raise MalformedInputError("arity must be an integer >= 1")
    raw = {}
    if not isinstance(body["coeffs"], dict):
        raise MalformedInputError("coeffs: expected an object")
    for key, val in body["coeffs"].items():
        idx = _parse_indices(key, space.dim, f"coeffs entry {key!r}")
        if len(idx) != arity:
            raise MalformedInputError(f"coeffs entry {key!r}: expected {arity} indices")
        raw[idx] = rat_from_string(val)
    phi = PhiForm.from_raw(space, arity, raw)
    companion = None
    if "algebra" in body:
        companion = _parse_nested_algebra(body["algebra"], ("hom_pre_lie",), "algebra")
        if companion.space.parities != space.parities:
            raise MalformedInputError("embedded algebra does not match the form's space")
    return PhiBundle(phi, companion)


class PhiBundle:
    """A parsed phi_form document: the form plus its optional companion algebra."""

    def __init__(self, phi: PhiForm, algebra: Optional[HomPreLieSuper]):
        self.phi = phi
        self.algebra = algebra


# ---------------------------------------------------------------------------
# bundle serialization
# ---------------------------------------------------------------------------


def _algebra_body(alg) -> Dict:
    if isinstance(alg, NHomLieSuper):
        return {
            "kind": "n_hom_lie", "n": alg.n, "dim": alg.space.dim,
            "parities": list(alg.space.parities),
            "alpha": _matrix_to_doc(alg.alpha),
            "bracket": _product_to_doc(alg.bracket),
        }
    if isinstance(alg, NHomPreLieSuper):
        return {
            "kind": "n_hom_pre_lie", "n": alg.n, "dim": alg.space.dim,
            "parities": list(alg.space.parities),
            "alpha": _matrix_to_doc(alg.alpha),
            "brace": _product_to_doc(alg.brace),
        }
    if isinstance(alg, HomPreLieSuper):
        return {
            "kind": "hom_pre_lie", "n": 2, "dim": alg.space.dim,
            "parities": list(alg.space.parities),
            "alpha": _matrix_to_doc(alg.alpha),
            "circ": _product_to_doc(alg.circ),
        }
    raise MalformedInputError(f"cannot serialize {type(alg).__name__} as an algebra")


def bundle_to_dict(obj, provenance_report: Optional[dict] = None) -> Dict:
    if isinstance(obj, (NHomLieSuper, NHomPreLieSuper, HomPreLieSuper)):
        body = _algebra_body(obj)
    elif isinstance(obj, LieRepBundle):
        body = {
            "kind": "lie_rep",
            "algebra": _algebra_body(obj.alg),
            "dim_v": obj.space_v.dim,
            "parities_v": list(obj.space_v.parities),
            "alpha_v": _matrix_to_doc(obj.alpha_v),
            "rho": _action_to_doc(obj.rho),
        }
    elif isinstance(obj, (PreLieRepBundle, HomPreLieRepBundle)):
        body = {
            "kind": "pre_lie_rep",
            "algebra": _algebra_body(obj.alg),
            "dim_v": obj.space_v.dim,
            "parities_v": list(obj.space_v.parities),
            "alpha_v": _matrix_to_doc(obj.alpha_v),
            "l": _action_to_doc(obj.l),
            "r": _action_to_doc(obj.r),
        }
    elif isinstance(obj, EvenLinearMap):
        body = {
            "kind": "operator",
            "parities_in": list(obj.space_in.parities),
            "parities_out": list(obj.space_out.parities),
            "matrix": _matrix_to_doc(obj),
        }
    elif isinstance(obj, PhiBundle):
        body = {
            "kind": "phi_form",
            "arity": obj.phi.arity,
            "dim": obj.phi.space.dim,
            "parities": list(obj.phi.space.parities),
            "coeffs": {_indices_to_text(k): rat_to_string(c)
                       for k, c in sorted(obj.phi.coeffs.items())},
        }
        if obj.algebra is not None:
            body["algebra"] = _algebra_body(obj.algebra)
    elif isinstance(obj, PhiForm):
        return bundle_to_dict(PhiBundle(obj, None), provenance_report)
    else:
        raise MalformedInputError(f"cannot serialize {type(obj).__name__}")
    out = {"schema_version": SCHEMA_VERSION}
    out.update(body)
    if provenance_report is not None:
        out["provenance_report"] = provenance_report
    return out


def render_json(doc: Mapping) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def serialize_bundle(obj, provenance_report: Optional[dict] = None) -> str:
    return render_json(bundle_to_dict(obj, provenance_report))


# ---------------------------------------------------------------------------
# report documents
# ---------------------------------------------------------------------------


def _where_to_doc(item):
    if isinstance(item, tuple):
        return [_where_to_doc(x) for x in item]
    if isinstance(item, int):
        return item + 1
    return item


def report_to_dict(report: ResidualReport, input_digest: str = "") -> Dict:
    identities = {}
    for identity in report.identity_ids:
        violations = report.for_identity(identity)
        identities[identity] = {
            "status": "pass" if not violations else "fail",
            "violation_count": len(violations),
            "violations": [
                {
                    "where": _where_to_doc(v.where),
                    "residual": {str(i + 1): rat_to_string(c) for i, c in v.residual},
                }
                for v in violations
            ],
        }
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": TOOL_NAME, "version": TOOL_VERSION},
        "input_digest": input_digest,
        "status": "pass" if report.ok else "fail",
        "identities": identities,
    }


def input_digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()
