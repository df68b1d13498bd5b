"""Batch command-line front end.

Subcommands mirror the engine's operations; all output goes to stdout in
either human-readable text or JSON (``--format json``).  The environment
variable ``TILTKIT_SEED`` overrides the default decomposition seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import io_json
from .errors import TiltkitError
from .homological import (
    ext,
    injective_dimension,
    projective_dimension,
    projective_resolution,
)
from .modules import (
    decompose,
    duality_D,
    enumerate_indecomposables,
    hom_dim,
    hom_space,
    is_isomorphic,
)
from .bimodules import (
    bimodule_indecomposable,
    check_bad_case,
    check_good_case,
    count_reflexive,
    delta_left,
    extension_solve,
    extension_verify,
    faithfully_balanced,
    render_picture,
    reflexivity,
)
from .complexes import condition_b, classify_elementary, from_resolution
from .quiver import check_ring_epimorphism
from .suite import run_suite
from .tilting import (
    gen_n_membership,
    is_classical_cotilting,
    is_classical_tilting,
    is_large_partial_tilting,
    is_partial_tilting,
    is_tilting,
)


def _load_algebra(path):
    with open(path) as fh:
        return io_json.algebra_from_json(json.load(fh))


def _load_module(path, algebra=None):
    with open(path) as fh:
        data = json.load(fh)
    if algebra is None and isinstance(data.get("algebra"), str):
        algebra = _load_algebra(data["algebra"])
    return io_json.module_from_json(data, algebra)


def _load_bimodule(path):
    with open(path) as fh:
        return io_json.bimodule_from_json(json.load(fh))


def _load_universe(spec, algebra):
    if spec in ("dynkin_roots", "nakayama_intervals"):
        return enumerate_indecomposables(algebra, spec)
    return enumerate_indecomposables(algebra, "fixture", fixture=spec)


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        if isinstance(payload, dict):
            for k in sorted(payload):
                print("%s: %s" % (k, payload[k]))
        else:
            print(payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tiltkit", description="exact computations in tilting theory"
    )
    parser.add_argument("--format", choices=["text", "json"], default="text")
    sub = parser.add_subparsers(dest="group", required=True)

    p_alg = sub.add_parser("algebra", help="bound quiver algebra operations")
    alg_sub = p_alg.add_subparsers(dest="cmd", required=True)
    for cmd in ("check", "dim", "opposite"):
        p = alg_sub.add_parser(cmd)
        p.add_argument("--algebra", required=True)
        if cmd == "opposite":
            p.add_argument("--out")

    p_mod = sub.add_parser("module", help="module-level operations")
    mod_sub = p_mod.add_subparsers(dest="cmd", required=True)
    p = mod_sub.add_parser("hom")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--algebra")
    p = mod_sub.add_parser("ext")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--algebra")
    p = mod_sub.add_parser("pd")
    p.add_argument("--module", required=True)
    p.add_argument("--algebra")
    p.add_argument("--bound", type=int)
    p.add_argument("--injective", action="store_true")
    p = mod_sub.add_parser("decompose")
    p.add_argument("--module", required=True)
    p.add_argument("--algebra")
    p = mod_sub.add_parser("enumerate")
    p.add_argument("--algebra", required=True)
    p.add_argument("--method", required=True)
    p.add_argument("--fixture")
    p = mod_sub.add_parser("resolve")
    p.add_argument("--module", required=True)
    p.add_argument("--algebra")
    p.add_argument("--length", type=int, default=8)
    p.add_argument("--emit", choices=["json", "dims"], default="dims")

    p_tilt = sub.add_parser("tilting", help="tilting predicates")
    tilt_sub = p_tilt.add_subparsers(dest="cmd", required=True)
    p = tilt_sub.add_parser("check")
    p.add_argument("--module", required=True)
    p.add_argument("--algebra")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--universe", required=True)
    p.add_argument("--classical", action="store_true")
    p = tilt_sub.add_parser("gen-n")
    p.add_argument("--of", required=True)
    p.add_argument("--by", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--algebra")
    p.add_argument("--assume-partial", action="store_true")
    p = tilt_sub.add_parser("large")
    p.add_argument("--module", required=True)
    p.add_argument("--algebra")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--universe", required=True)

    p_dual = sub.add_parser("dual", help="bimodule duality operations")
    dual_sub = p_dual.add_subparsers(dest="cmd", required=True)
    p = dual_sub.add_parser("map")
    p.add_argument("--bimodule", required=True)
    p.add_argument("--module", required=True)
    p.add_argument("--side", choices=["left", "right"], default="left")
    p = dual_sub.add_parser("reflexive")
    p.add_argument("--bimodule", required=True)
    p.add_argument("--universe", required=True)
    p.add_argument("--side", choices=["left", "right"], default="left")
    p = dual_sub.add_parser("balanced")
    p.add_argument("--bimodule", required=True)

    p_bim = sub.add_parser("bimod", help="bimodule extension problems")
    bim_sub = p_bim.add_subparsers(dest="cmd", required=True)
    p = bim_sub.add_parser("extend")
    p.add_argument("--bimodule", required=True)
    p.add_argument("--side", choices=["left", "right"], required=True)
    p = bim_sub.add_parser("verify")
    p.add_argument("--big", required=True)
    p.add_argument("--sub", required=True)
    p.add_argument("--side", choices=["left", "right"], required=True)
    p = bim_sub.add_parser("good-case")
    p.add_argument("--big", required=True)
    p.add_argument("--sub", required=True)
    p = bim_sub.add_parser("bad-case")
    p.add_argument("--sub", required=True)
    p.add_argument("--rstar", required=True)
    p.add_argument("--morphism", required=True)
    p.add_argument("--big", required=True)
    p = bim_sub.add_parser("indec")
    p.add_argument("--bimodule", required=True)

    p_cx = sub.add_parser("complex", help="homotopy-category conditions")
    cx_sub = p_cx.add_subparsers(dest="cmd", required=True)
    p = cx_sub.add_parser("condition-b")
    p.add_argument("--t", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--algebra")
    p = cx_sub.add_parser("classify")
    p.add_argument("--algebra", required=True)
    p.add_argument("--t", required=True, help="module path or 'auto:<module>'")
    p.add_argument("--bound", type=int)

    p_render = sub.add_parser("render", help="emit a DOT picture")
    p_render.add_argument("--input", required=True)
    p_render.add_argument("--dot", help="output path (stdout if omitted)")
    p_render.add_argument("--kind", choices=["bimodule", "module"], default="bimodule")

    p_suite = sub.add_parser("suite", help="run fixture bundles")
    suite_sub = p_suite.add_subparsers(dest="cmd", required=True)
    p = suite_sub.add_parser("run")
    p.add_argument("bundle")
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    fmt = args.format
    try:
        return _dispatch(args, fmt)
    except (TiltkitError, OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        _emit({"error": str(exc)}, fmt)
        return 2


def _dispatch(args, fmt) -> int:
    if args.group == "algebra":
        a = _load_algebra(args.algebra)
        if args.cmd == "check":
            _emit(
                {
                    "dimension": a.dimension,
                    "hereditary": a.is_hereditary(),
                    "associative": a.check_associativity(),
                    "unital": a.check_identity(),
                },
                fmt,
            )
        elif args.cmd == "dim":
            _emit({"dimension": a.dimension}, fmt)
        elif args.cmd == "opposite":
            data = io_json.algebra_to_json(a.opposite())
            if args.out:
                io_json.write_json(args.out, data)
                _emit({"written": args.out}, fmt)
            else:
                _emit(data, fmt)
        return 0
    if args.group == "module":
        algebra = _load_algebra(args.algebra) if args.algebra else None
        if args.cmd == "hom":
            m = _load_module(args.src, algebra)
            n = _load_module(args.dst, m.algebra)
            _emit({"dim_hom": hom_dim(m, n)}, fmt)
        elif args.cmd == "ext":
            m = _load_module(args.src, algebra)
            n = _load_module(args.dst, m.algebra)
            _emit({"dim_ext": ext(m, n, args.degree)}, fmt)
        elif args.cmd == "pd":
            m = _load_module(args.module, algebra)
            fn = injective_dimension if args.injective else projective_dimension
            v = fn(m, args.bound)
            _emit({"dimension": "exceeds bound" if v is None else v}, fmt)
        elif args.cmd == "decompose":
            m = _load_module(args.module, algebra)
            parts = decompose(m)
            _emit({"summand_dim_vectors": [list(p.dim_vector()) for p in parts]}, fmt)
        elif args.cmd == "enumerate":
            a = _load_algebra(args.algebra)
            mods = _load_universe(args.method if not args.fixture else args.fixture, a)
            _emit(
                {"count": len(mods), "dim_vectors": [list(m.dim_vector()) for m in mods]},
                fmt,
            )
        elif args.cmd == "resolve":
            m = _load_module(args.module, algebra)
            res = projective_resolution(m, args.length)
            payload = {
                "lengths": [ps.rep.total_dim() for ps in res.levels],
                "copies": [[str(v) for v in ps.copies] for ps in res.levels],
                "complete": res.complete,
            }
            if args.emit == "json":
                payload["differentials"] = [
                    {
                        str(v): io_json.dump_matrix(d.vertex_maps[v])
                        for v in d.source.algebra.quiver.vertices
                    }
                    for d in res.differentials
                ]
            _emit(payload, fmt)
        return 0
    if args.group == "tilting":
        algebra = _load_algebra(args.algebra) if getattr(args, "algebra", None) else None
        if args.cmd == "check":
            t = _load_module(args.module, algebra)
            universe = _load_universe(args.universe, t.algebra)
            if args.classical:
                rep = is_classical_tilting(t)
                co = is_classical_cotilting(t)
                _emit({"classical_tilting": rep.holds, "classical_cotilting": co.holds}, fmt)
            else:
                partial = is_partial_tilting(t, args.degree, universe)
                tilt = is_tilting(t, args.degree, universe)
                _emit(
                    {
                        "partial_tilting": _h(partial),
                        "tilting": _h(tilt),
                        "details": partial.details,
                    },
                    fmt,
                )
        elif args.cmd == "gen-n":
            t = _load_module(args.by, algebra)
            x = _load_module(args.of, t.algebra)
            verdict = gen_n_membership(
                t, x, args.n, assume_partial_tilting=args.assume_partial
            )
            payload = {"status": verdict.status}
            if verdict.certificate:
                payload["certificate"] = verdict.certificate
            if verdict.witness is not None:
                payload["witness_stage_dims"] = [
                    list(m.dim_vector()) for m in verdict.witness.modules
                ]
            _emit(payload, fmt)
        elif args.cmd == "large":
            t = _load_module(args.module, algebra)
            universe = _load_universe(args.universe, t.algebra)
            rep = is_large_partial_tilting(t, args.degree, universe)
            _emit({"large_partial_tilting": _h(rep), "details": rep.details}, fmt)
        return 0
    if args.group == "dual":
        b = _load_bimodule(args.bimodule)
        if args.cmd == "map":
            m = _load_module(
                args.module,
                b.left_algebra if args.side == "left" else b.right_algebra.opposite(),
            )
            img = (
                delta_left(b, m)
                if args.side == "left"
                else delta_left(b.flip(), m)
            )
            _emit({"dual_dim_vector": list(img.dim_vector())}, fmt)
        elif args.cmd == "reflexive":
            algebra = b.left_algebra if args.side == "left" else b.right_algebra.opposite()
            universe = _load_universe(args.universe, algebra)
            count, hits = count_reflexive(b, universe, args.side)
            _emit(
                {
                    "count": count,
                    "reflexive_dim_vectors": [list(universe[i].dim_vector()) for i in hits],
                },
                fmt,
            )
        elif args.cmd == "balanced":
            _emit({"faithfully_balanced": faithfully_balanced(b)}, fmt)
        return 0
    if args.group == "bimod":
        if args.cmd == "extend":
            b = _load_bimodule(args.bimodule)
            out = extension_solve(b, args.side)
            payload = {"status": out.status}
            if out.witness is not None:
                payload["witness"] = io_json.bimodule_to_json(out.witness)
            if out.detail:
                payload["detail"] = out.detail
            _emit(payload, fmt)
            return 0
        if args.cmd == "verify":
            big = _load_bimodule(args.big)
            subm = io_json.bimodule_from_json(
                json.load(open(args.sub)), big.left_algebra, big.right_algebra
            )
            _emit(extension_verify(big, subm, args.side), fmt)
            return 0
        if args.cmd == "good-case":
            big = _load_bimodule(args.big)
            subm = io_json.bimodule_from_json(
                json.load(open(args.sub)), big.left_algebra, big.right_algebra
            )
            _emit(check_good_case(big, subm), fmt)
            return 0
        if args.cmd == "bad-case":
            subm = _load_bimodule(args.sub)
            r_star = _load_algebra(args.rstar)
            big = io_json.bimodule_from_json(
                json.load(open(args.big)), subm.left_algebra, r_star
            )
            morphism = io_json.morphism_from_json(
                json.load(open(args.morphism)), r_star, subm.right_algebra
            )
            _emit(check_bad_case(subm, r_star, morphism, big), fmt)
            return 0
        if args.cmd == "indec":
            b = _load_bimodule(args.bimodule)
            _emit({"indecomposable": bimodule_indecomposable(b)}, fmt)
            return 0
    if args.group == "complex":
        a = _load_algebra(args.algebra) if args.algebra else None
        if args.cmd == "condition-b":
            with open(args.t) as fh:
                tcx = io_json.complex_from_json(json.load(fh), a)
            with open(args.x) as fh:
                xcx = io_json.complex_from_json(json.load(fh), tcx.algebra)
            _emit({"condition_b": condition_b(tcx, xcx)}, fmt)
        elif args.cmd == "classify":
            a = _load_algebra(args.algebra)
            spec = args.t
            if spec.startswith("auto:"):
                spec = spec[len("auto:"):]
            t = _load_module(spec, a)
            res = projective_resolution(t, args.bound or 2 * a.dimension)
            tcx = from_resolution(res)
            cls = classify_elementary(tcx, a)
            _emit({"pairs": sorted([str(i), str(j)] for i, j, _ in cls)}, fmt)
        return 0
    if args.group == "render":
        if args.kind == "bimodule":
            dot = render_picture(_load_bimodule(args.input))
        else:
            dot = render_picture(_load_module(args.input))
        if args.dot:
            with open(args.dot, "w") as fh:
                fh.write(dot + "\n")
            _emit({"written": args.dot}, fmt)
        else:
            print(dot)
        return 0
    if args.group == "suite":
        code, report = run_suite(args.bundle)
        if fmt == "json":
            print(json.dumps(report, indent=2, sort_keys=True))
        else:
            if "error" in report:
                print("error: %s" % report["error"])
            else:
                for r in report["results"]:
                    print(
                        "[%s] %s (%s)  expected=%r actual=%r"
                        % (r["status"].upper(), r["id"], r["op"], r["expected"], r["actual"])
                    )
                s = report["summary"]
                print(
                    "summary: %d pass, %d fail, %d inconclusive"
                    % (s["pass"], s["fail"], s["inconclusive"])
                )
        return code
    return 2


def _h(rep):
    return "inconclusive" if rep.holds is None else rep.holds


if __name__ == "__main__":
    sys.exit(main())
