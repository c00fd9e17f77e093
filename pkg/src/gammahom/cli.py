"""Command-line surface: counting, verification, rearrangement, catalogs.

Exit codes: 0 success, 2 parse error, 3 cap violation, 4 verdict fails,
5 invalid rearrangement.  Identical configuration produces byte-identical
output regardless of the worker count.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import canonical_form, generate
from .digraph import ClassKind, ClassSpec, Digraph, is_member, satisfies_kind, to_dot
from .errors import BoundTooLarge, GammahomError, InvalidSpec, TooLarge
from .homs import HomMode, VertexMap, count_homs
from .quotient import quotient_of, theta_class
from .rearrange import (
    RearrangementSpec,
    build_s,
    poset_rearrange,
    validate_spec,
)
from .verify import (
    check_dominance,
    check_gamma_leq,
    lovasz_distinguish,
)

PARSE_ERROR = 2
CAP_ERROR = 3
VERDICT_FAILS = 4
SPEC_INVALID = 5

_KIND_NAMES = {kind.value: kind for kind in ClassKind}


def _load_digraph(path: str) -> Digraph:
    try:
        with open(path) as fh:
            return Digraph.from_json_dict(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise SystemExit(_fail(f"cannot read digraph from {path}: {exc}", PARSE_ERROR))


def _load_spec(path: str) -> RearrangementSpec:
    try:
        with open(path) as fh:
            return RearrangementSpec.from_json_dict(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise SystemExit(_fail(f"cannot read rearrangement from {path}: {exc}", PARSE_ERROR))


def _parse_map(text: str, g: Digraph, h: Digraph) -> VertexMap:
    try:
        images = tuple(int(part) for part in text.split(","))
        return VertexMap(g.n, h.n, images)
    except (ValueError, GammahomError) as exc:
        raise SystemExit(_fail(f"bad --map value {text!r}: {exc}", PARSE_ERROR))


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _emit_json(data: dict) -> None:
    print(json.dumps(data, sort_keys=True, separators=(",", ":")))


def _class_spec(args) -> ClassSpec:
    kind = _KIND_NAMES[args.klass]
    return ClassSpec(kind, args.max_n, getattr(args, "max_arcs", None))


def _dot_for(g: Digraph, name: str = "G") -> str:
    # Posets are drawn by their covering arcs, everything else arc by arc.
    return to_dot(g, name=name, hasse=satisfies_kind(g, ClassKind.POSETS))


# -- subcommands -----------------------------------------------------------------


def cmd_count(args) -> int:
    g = _load_digraph(args.source)
    h = _load_digraph(args.target)
    out: dict = {}
    if args.mode in ("all", "both"):
        out["hom"] = count_homs(g, h, HomMode.ALL)
    if args.mode in ("strict", "both"):
        out["strict"] = count_homs(g, h, HomMode.STRICT)
    if args.format == "json":
        _emit_json(out)
    else:
        for key in sorted(out):
            print(f"{key}\t{out[key]}")
    return 0


def cmd_verify(args) -> int:
    left = _load_digraph(args.left)
    right = _load_digraph(args.right)
    spec = _class_spec(args)
    if args.mode == "gamma-leq":
        report = check_gamma_leq(
            left, right, spec, budget=args.max_n, workers=args.workers
        )
    else:
        mode = HomMode.STRICT if args.mode == "strict-dominance" else HomMode.ALL
        report = check_dominance(
            left,
            right,
            spec,
            mode,
            budget=args.max_n,
            workers=args.workers,
            with_table=args.with_table,
        )
    if args.format == "json":
        _emit_json(report.to_json_dict())
    else:
        print(f"mode\t{report.mode}")
        print(f"class\t{spec.describe()}")
        print(f"holds\t{str(report.holds).lower()}")
        if report.witness is not None:
            print(f"witness\t{report.witness.dumps()}")
            print(f"counts\t{report.witness_counts[0]} > {report.witness_counts[1]}")
    return 0 if report.holds else VERDICT_FAILS


def cmd_rearrange(args) -> int:
    spec = _load_spec(args.spec)
    poset_mode = args.poset or args.emit_t
    report = validate_spec(spec, poset_mode=poset_mode)
    if not report.ok:
        _emit_json({"valid": False, "violations": list(report.violations)})
        return SPEC_INVALID
    if poset_mode:
        result, hull = poset_rearrange(spec)
    else:
        result, hull = build_s(spec), None
    out = {"valid": True, "spec": spec.to_json_dict()}
    out.update(result.to_json_dict())
    if args.emit_t:
        out["T"] = hull.to_json_dict()
    exit_code = 0
    if args.verify_bound:
        kind = ClassKind.POSETS if poset_mode else ClassKind.ALL_DIGRAPHS
        target = hull if hull is not None else result.s
        verdict = check_dominance(
            spec.graph,
            target,
            ClassSpec(kind, args.verify_bound),
            HomMode.STRICT,
            budget=args.verify_bound,
            workers=args.workers,
        )
        out["verification"] = verdict.to_json_dict()
        if not verdict.holds:
            exit_code = VERDICT_FAILS
    if args.format == "dot":
        print(_dot_for(result.s, name="S"))
        if args.emit_t:
            print(_dot_for(hull, name="T"))
    elif args.format == "json":
        _emit_json(out)
    else:
        print(f"S\t{result.s.dumps()}")
        for label, arcs in (("A_r", result.retained), ("A_d", result.moved_into), ("A_u", result.moved_out)):
            print(f"{label}\t{','.join(f'{u}{v}' for u, v in arcs) or '-'}")
        if args.emit_t:
            print(f"T\t{hull.dumps()}")
        if args.verify_bound:
            print(f"verified\t{str(out['verification']['holds']).lower()}")
    return exit_code


def cmd_catalog(args) -> int:
    spec = _class_spec(args)
    if args.check:
        return _check_catalog(args.check, spec)
    reps = generate(spec, budget=args.max_n, workers=args.workers)
    if args.format == "dot":
        for i, g in enumerate(reps):
            print(_dot_for(g, name=f"G{i}"))
    elif args.format == "table":
        print(f"count\t{len(reps)}")
        for g in reps:
            print(g.dumps())
    else:
        for g in reps:
            print(g.dumps())
    return 0


def _check_catalog(path: str, spec: ClassSpec) -> int:
    try:
        with open(path) as fh:
            graphs = [Digraph.from_json_dict(json.loads(line)) for line in fh if line.strip()]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        return _fail(f"cannot read catalog from {path}: {exc}", PARSE_ERROR)
    keys = []
    for g in graphs:
        if not is_member(g, spec):
            return _fail(f"{g.dumps()} is not a member of {spec.describe()}", PARSE_ERROR)
        keys.append(canonical_form(g).key())
    if keys != sorted(set(keys)):
        return _fail("catalog is not in canonical order or has duplicates", PARSE_ERROR)
    print(f"ok\t{len(graphs)}")
    return 0


def cmd_lovasz(args) -> int:
    objects = ClassSpec(_KIND_NAMES[args.objects], args.objects_max_n)
    tests = ClassSpec(_KIND_NAMES[args.tests], args.tests_max_n)
    mode = HomMode.STRICT if args.mode == "strict" else HomMode.ALL
    report = lovasz_distinguish(
        objects,
        tests,
        mode,
        object_budget=args.objects_max_n,
        test_budget=args.tests_max_n,
        workers=args.workers,
    )
    if args.format == "json":
        _emit_json(report.to_json_dict())
    else:
        print(f"pairs\t{len(report.entries)}")
        print(f"all_distinguished\t{str(report.all_distinguished).lower()}")
        for e in report.undistinguished:
            print(f"undistinguished\t{e.first},{e.second}")
    return 0 if report.all_distinguished else VERDICT_FAILS


def cmd_quotient(args) -> int:
    g = _load_digraph(args.source)
    h = _load_digraph(args.target)
    xi = _parse_map(args.map, g, h)
    q = quotient_of(g, h, xi)
    if args.format == "dot":
        print(_dot_for(q.digraph, name="Q"))
    elif args.format == "json":
        _emit_json(q.to_json_dict())
    else:
        print(f"blocks\t{';'.join(','.join(map(str, b)) for b in q.blocks)}")
        print(f"digraph\t{q.digraph.dumps()}")
        print(f"iota\t{','.join(map(str, q.iota))}")
    return 0


def cmd_theta(args) -> int:
    g = _load_digraph(args.source)
    h = _load_digraph(args.target)
    h_prime = _load_digraph(args.into)
    xi = _parse_map(args.map, g, h)
    q = quotient_of(g, h, xi)
    members = theta_class(g, h_prime, q)
    out = {"count": len(members), "maps": [list(f.images) for f in members]}
    if args.format == "json":
        _emit_json(out)
    else:
        print(f"count\t{out['count']}")
        for images in out["maps"]:
            print(",".join(map(str, images)))
    return 0


# -- wiring -----------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser, fmt_choices=("json", "table")) -> None:
    parser.add_argument("--format", choices=fmt_choices, default="json")
    parser.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammahom",
        description="count homomorphisms, verify count dominance, rearrange digraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count homomorphisms between two digraph files")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--mode", choices=("all", "strict", "both"), default="both")
    _add_common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="check a dominance relation over a bounded class")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--class", dest="klass", choices=sorted(_KIND_NAMES), required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-arcs", type=int, default=None)
    p.add_argument(
        "--mode",
        choices=("strict-dominance", "gamma-leq", "hom-dominance"),
        default="strict-dominance",
    )
    p.add_argument("--with-table", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rearrange", help="validate and build a rearrangement")
    p.add_argument("spec")
    p.add_argument("--poset", action="store_true", help="require the poset-mode conditions")
    p.add_argument("--emit-T", dest="emit_t", action="store_true", help="also emit the transitive hull (requires a poset)")
    p.add_argument("--verify-bound", type=int, default=None, metavar="K")
    _add_common(p, fmt_choices=("json", "table", "dot"))
    p.set_defaults(func=cmd_rearrange)

    p = sub.add_parser("catalog", help="emit a representative system, one JSON digraph per line")
    p.add_argument("--class", dest="klass", choices=sorted(_KIND_NAMES), required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-arcs", type=int, default=None)
    p.add_argument("--check", metavar="FILE", default=None, help="validate an exported catalog instead")
    _add_common(p, fmt_choices=("json", "table", "dot"))
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("lovasz", help="check that count vectors distinguish a catalog")
    p.add_argument("--objects", choices=sorted(_KIND_NAMES), required=True)
    p.add_argument("--objects-max-n", type=int, required=True)
    p.add_argument("--tests", choices=sorted(_KIND_NAMES), required=True)
    p.add_argument("--tests-max-n", type=int, required=True)
    p.add_argument("--mode", choices=("all", "strict"), default="all")
    _add_common(p)
    p.set_defaults(func=cmd_lovasz)

    p = sub.add_parser("quotient", help="quotient of a homomorphism given as --map")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--map", required=True, help="comma-separated images, one per source vertex")
    _add_common(p, fmt_choices=("json", "table", "dot"))
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("theta", help="homomorphisms sharing a reference quotient")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("into")
    p.add_argument("--map", required=True, help="reference homomorphism into the target")
    _add_common(p)
    p.set_defaults(func=cmd_theta)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BoundTooLarge, TooLarge) as exc:
        return _fail(str(exc), CAP_ERROR)
    except InvalidSpec as exc:
        _emit_json({"valid": False, "violations": list(exc.violations)})
        return SPEC_INVALID
    except GammahomError as exc:
        return _fail(str(exc), PARSE_ERROR)
    except SystemExit as exc:
        if isinstance(exc.code, int):
            return exc.code
        raise


if __name__ == "__main__":
    sys.exit(main())
