"""Command-line driver: batch verification, constructions, operator checks.

Exit codes: 0 all identities pass, 1 a verification failed, 2 malformed input
or violated construction preconditions.  Reports and constructed bundles go
to stdout as deterministic JSON; diagnostics go to stderr.  ``-`` reads a
document from stdin.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .algebras import (
    HomPreLieSuper,
    NHomLieSuper,
    NHomPreLieSuper,
    ResidualReport,
    check_hom_nambu,
    check_hom_pre_lie,
    check_multiplicativity,
    check_n_hom_pre_lie,
    check_super_skew,
)
from .documents import (
    PhiBundle,
    bundle_to_dict,
    input_digest,
    parse_document,
    render_json,
    report_to_dict,
    serialize_bundle,
)
from .errors import HomnaryError, MalformedInputError, PreconditionError
from .induction import check_phi_conditions, induce_nary_product, induce_representation
from .operators import (
    check_o_operator_lie,
    check_o_operator_pre_lie,
    check_rota_baxter_lie,
    enumerate_even_maps,
    lift_NT,
    nijenhuis_check,
)
from .representations import (
    HomPreLieRepBundle,
    LieRepBundle,
    PreLieRepBundle,
    check_hom_pre_lie_representation,
    check_lie_representation,
    check_pre_lie_representation,
    dual_lie_representation,
    dual_pre_lie_representation,
    rho_tilde,
    semidirect_lie,
    semidirect_pre_lie,
    subadjacent_bracket,
    tensor_representation,
    twist_representation,
)
from .scalars import rat_from_string


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load(path: str):
    data = _read(path)
    return parse_document(data.decode("utf-8")), input_digest(data)


def _verification_report(bundle, full_loops: bool, threads: Optional[int]) -> ResidualReport:
    if isinstance(bundle, NHomLieSuper):
        report = check_super_skew(bundle.bracket)
        report = report.merged_with(
            check_hom_nambu(bundle, full_loops=full_loops, threads=threads))
        return report.merged_with(check_multiplicativity(bundle))
    if isinstance(bundle, NHomPreLieSuper):
        report = check_super_skew(bundle.brace)
        return report.merged_with(
            check_n_hom_pre_lie(bundle, full_loops=full_loops, threads=threads))
    if isinstance(bundle, HomPreLieSuper):
        return check_hom_pre_lie(bundle)
    if isinstance(bundle, LieRepBundle):
        return check_lie_representation(bundle, full_loops=full_loops)
    if isinstance(bundle, PreLieRepBundle):
        return check_pre_lie_representation(bundle, full_loops=full_loops)
    if isinstance(bundle, HomPreLieRepBundle):
        return check_hom_pre_lie_representation(bundle)
    if isinstance(bundle, PhiBundle):
        if bundle.algebra is None:
            raise MalformedInputError(
                "phi_form document carries no embedded algebra; the form conditions "
                "need the companion product (embed it under \"algebra\")")
        return check_phi_conditions(bundle.phi, bundle.algebra,
                                    bundle.phi.induction_arity())
    raise MalformedInputError(
        "operator documents carry no identities of their own; use check-operator")


def _filter_report(report: ResidualReport, identity: Optional[str]) -> ResidualReport:
    if identity is None:
        return report
    if identity not in report.identity_ids:
        raise MalformedInputError(
            f"identity {identity!r} not checked for this bundle "
            f"(available: {', '.join(report.identity_ids)})")
    return ResidualReport((identity,), report.for_identity(identity))


def _emit_report(report: ResidualReport, digest: str) -> int:
    sys.stdout.write(render_json(report_to_dict(report, digest)))
    return 0 if report.ok else 1


def _cmd_verify(args) -> int:
    bundle, digest = _load(args.file)
    report = _verification_report(bundle, args.full_loops, args.threads)
    return _emit_report(_filter_report(report, args.identity), digest)


def _cmd_construct(args) -> int:
    what = args.what
    if what == "subadjacent":
        (bundle, _), = [_load(args.files[0])]
        if isinstance(bundle, HomPreLieSuper):
            bundle = bundle.as_nary()
        if not isinstance(bundle, NHomPreLieSuper):
            raise MalformedInputError("subadjacent expects an n_hom_pre_lie bundle")
        sys.stdout.write(serialize_bundle(subadjacent_bracket(bundle)))
        return 0
    if what == "semidirect":
        bundle, _ = _load(args.files[0])
        if isinstance(bundle, LieRepBundle):
            sys.stdout.write(serialize_bundle(semidirect_lie(bundle)))
        elif isinstance(bundle, HomPreLieRepBundle):
            sys.stdout.write(serialize_bundle(semidirect_pre_lie(bundle.as_nary())))
        elif isinstance(bundle, PreLieRepBundle):
            sys.stdout.write(serialize_bundle(semidirect_pre_lie(bundle)))
        else:
            raise MalformedInputError("semidirect expects a representation bundle")
        return 0
    if what == "rho-tilde":
        bundle, _ = _load(args.files[0])
        if isinstance(bundle, HomPreLieRepBundle):
            bundle = bundle.as_nary()
        if not isinstance(bundle, PreLieRepBundle):
            raise MalformedInputError("rho-tilde expects a pre_lie_rep bundle")
        sys.stdout.write(serialize_bundle(rho_tilde(bundle)))
        return 0
    if what == "dual":
        bundle, _ = _load(args.files[0])
        if isinstance(bundle, LieRepBundle):
            sys.stdout.write(serialize_bundle(dual_lie_representation(bundle)))
        elif isinstance(bundle, (PreLieRepBundle, HomPreLieRepBundle)):
            if isinstance(bundle, HomPreLieRepBundle):
                bundle = bundle.as_nary()
            sys.stdout.write(serialize_bundle(dual_pre_lie_representation(bundle)))
        else:
            raise MalformedInputError("dual expects a representation bundle")
        return 0
    if what == "tensor":
        if len(args.files) != 2:
            raise MalformedInputError("tensor expects two pre_lie_rep files")
        rep1, _ = _load(args.files[0])
        rep2, _ = _load(args.files[1])
        reps = []
        for rep in (rep1, rep2):
            if isinstance(rep, HomPreLieRepBundle):
                rep = rep.as_nary()
            if not isinstance(rep, PreLieRepBundle):
                raise MalformedInputError("tensor expects pre_lie_rep bundles")
            reps.append(rep)
        sys.stdout.write(serialize_bundle(tensor_representation(*reps)))
        return 0
    if what == "twist":
        bundle, _ = _load(args.files[0])
        if isinstance(bundle, HomPreLieRepBundle):
            bundle = bundle.as_nary()
        if not isinstance(bundle, PreLieRepBundle):
            raise MalformedInputError("twist expects a pre_lie_rep bundle")
        sys.stdout.write(serialize_bundle(twist_representation(bundle)))
        return 0
    if what == "nt-lift":
        if len(args.files) != 2:
            raise MalformedInputError("nt-lift expects an operator file and a lie_rep file")
        op, _ = _load(args.files[0])
        rep, _ = _load(args.files[1])
        if not isinstance(rep, LieRepBundle):
            raise MalformedInputError("nt-lift expects a lie_rep bundle")
        sys.stdout.write(serialize_bundle(lift_NT(op, rep)))
        return 0
    raise MalformedInputError(f"unknown construction {what!r}")


def _cmd_check_operator(args) -> int:
    op, _ = _load(args.operator)
    bundle, digest = _load(args.bundle)
    if args.what == "rota-baxter":
        if not isinstance(bundle, NHomLieSuper):
            raise MalformedInputError("rota-baxter expects an n_hom_lie bundle")
        weight = rat_from_string(args.weight) if args.weight is not None else None
        report = check_rota_baxter_lie(op, bundle, weight=weight, power=args.power)
    elif args.what == "o-operator":
        if isinstance(bundle, LieRepBundle):
            report = check_o_operator_lie(op, bundle)
        elif isinstance(bundle, (PreLieRepBundle, HomPreLieRepBundle)):
            if isinstance(bundle, HomPreLieRepBundle):
                bundle = bundle.as_nary()
            report = check_o_operator_pre_lie(op, bundle)
        else:
            raise MalformedInputError("o-operator expects a representation bundle")
    elif args.what == "nijenhuis":
        if not isinstance(bundle, NHomLieSuper):
            raise MalformedInputError("nijenhuis expects an n_hom_lie bundle")
        report = nijenhuis_check(op, bundle)
    else:
        raise MalformedInputError(f"unknown operator check {args.what!r}")
    return _emit_report(report, digest)


def _cmd_induce(args) -> int:
    phi_bundle, _ = _load(args.phi)
    if not isinstance(phi_bundle, PhiBundle):
        raise MalformedInputError("first argument must be a phi_form document")
    phi = phi_bundle.phi
    companion, _ = _load(args.bundle)
    n = phi.induction_arity()
    if args.what == "nary":
        if not isinstance(companion, HomPreLieSuper):
            raise MalformedInputError("induce nary expects a hom_pre_lie bundle")
        conditions = check_phi_conditions(phi, companion, n)
        induced = induce_nary_product(phi, companion, n)
        sys.stdout.write(serialize_bundle(induced, provenance_report=report_to_dict(conditions)))
        return 0
    if args.what == "representation":
        if not isinstance(companion, HomPreLieRepBundle):
            raise MalformedInputError(
                "induce representation expects a pre_lie_rep bundle over a hom_pre_lie algebra")
        conditions = check_phi_conditions(phi, companion.alg, n)
        conditions = conditions.merged_with(check_hom_pre_lie_representation(companion))
        induced = induce_representation(phi, companion, n)
        sys.stdout.write(serialize_bundle(induced, provenance_report=report_to_dict(conditions)))
        return 0
    raise MalformedInputError(f"unknown induction {args.what!r}")


def _cmd_search(args) -> int:
    bundle, _ = _load(args.bundle)
    try:
        values = [rat_from_string(v.strip()) for v in args.grid.split(",") if v.strip() != ""]
    except MalformedInputError as e:
        raise MalformedInputError(f"--grid: {e}")
    values = [v for v in values if v]
    found = 0
    if isinstance(bundle, LieRepBundle):
        candidates = enumerate_even_maps(bundle.space_v, bundle.alg.space, values,
                                         max_nonzero=args.max_entries)
        def verdict(T):
            return check_o_operator_lie(T, bundle).ok
    elif isinstance(bundle, NHomLieSuper):
        weight = rat_from_string(args.weight) if args.weight is not None else None
        candidates = enumerate_even_maps(bundle.space, bundle.space, values,
                                         max_nonzero=args.max_entries)
        def verdict(R):
            return check_rota_baxter_lie(R, bundle, weight=weight, power=args.power).ok
    else:
        raise MalformedInputError("search operator expects a lie_rep or n_hom_lie bundle")
    import json as _json

    for T in candidates:
        if verdict(T):
            sys.stdout.write(_json.dumps(bundle_to_dict(T), sort_keys=True) + "\n")
            found += 1
            if args.limit is not None and found >= args.limit:
                break
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homnary",
        description="exact verification and construction for graded n-ary Hom-algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the defining identities of a bundle")
    p.add_argument("file")
    p.add_argument("--identity", help="restrict to one identity id")
    p.add_argument("--full-loops", action="store_true",
                   help="iterate skew argument groups over all tuples, not canonical ones")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("construct", help="derive a new bundle")
    p.add_argument("what", choices=["subadjacent", "semidirect", "rho-tilde", "dual",
                                    "tensor", "twist", "nt-lift"])
    p.add_argument("files", nargs="+")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check-operator", help="test an operator against a bundle")
    p.add_argument("what", choices=["rota-baxter", "o-operator", "nijenhuis"])
    p.add_argument("operator")
    p.add_argument("bundle")
    p.add_argument("--weight", default=None, help="Rota-Baxter weight as p/q")
    p.add_argument("--power", type=int, default=0, help="twist power s")
    p.set_defaults(func=_cmd_check_operator)

    p = sub.add_parser("induce", help="contract a binary bundle with an even skew form")
    p.add_argument("what", choices=["nary", "representation"])
    p.add_argument("phi")
    p.add_argument("bundle")
    p.set_defaults(func=_cmd_induce)

    p = sub.add_parser("search", help="grid-search passing operators")
    p.add_argument("kind", choices=["operator"])
    p.add_argument("bundle")
    p.add_argument("--grid", required=True, help="comma-separated nonzero entry values")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--max-entries", type=int, default=2,
                   help="cap on simultaneous nonzero entries per candidate")
    p.add_argument("--weight", default=None)
    p.add_argument("--power", type=int, default=0)
    p.set_defaults(func=_cmd_search)
    return parser


def _glue_dash_values(argv):
    # argparse refuses option values that begin with '-'; accept them for the
    # flags that legitimately take negative numbers by joining with '='
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--grid", "--weight") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_glue_dash_values(list(argv)))
    try:
        return args.func(args)
    except (MalformedInputError, PreconditionError) as e:
        print(f"homnary: {e}", file=sys.stderr)
        return 2
    except HomnaryError as e:
        print(f"homnary: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"homnary: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
