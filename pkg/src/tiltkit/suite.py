"""Fixture bundles and the batch expectation runner.

A bundle is one JSON document: named algebras, modules, bimodules and
morphisms plus a manifest of expectations.  ``run_suite`` executes every
expectation and emits a deterministic report; exit status 0 means all
passed, 1 means some failed, 2 means the bundle could not be parsed.
"""

from __future__ import annotations

import itertools
import json
import os
from typing import Dict, List, Optional, Tuple

from . import io_json
from .bimodules import (
    Bimodule,
    bimodule_indecomposable,
    check_bad_case,
    check_good_case,
    count_reflexive,
    delta_left,
    extension_solve,
    extension_verify,
    faithfully_balanced,
    find_injective_bimodule_map,
    hom_from_bimodule,
    render_picture,
    reflexivity,
)
from .complexes import condition_b, classify_elementary, from_resolution, is_resolution_shape, two_term
from .homological import ext, injective_envelope, projective_dimension, projective_resolution
from .modules import (
    Representation,
    decompose,
    direct_sum,
    end_algebra,
    enumerate_indecomposables,
    hom_dim,
    hom_dimension_matrix,
    injective,
    injective_cogenerator,
    is_injective_module,
    is_isomorphic,
    is_projective_module,
    is_sincere,
    projective,
    regular_module,
    simple,
)
from .quiver import check_ring_epimorphism
from .tilting import (
    cancel_summands,
    dim_vector_predicate,
    gen_n_membership,
    is_classical_cotilting,
    is_classical_tilting,
    is_large_partial_tilting,
    is_partial_tilting,
    is_selforthogonal,
    is_tilting,
)


class BundleContext:
    """Deserialized bundle objects with shared algebra instances."""

    def __init__(self, data: Dict):
        self.name = data.get("name", "bundle")
        self.algebras: Dict[str, object] = {}
        for key, adata in data.get("algebras", {}).items():
            self.algebras[key] = io_json.algebra_from_json(adata)
        self.bimodules: Dict[str, Bimodule] = {}
        for key, bdata in data.get("bimodules", {}).items():
            left = self.algebras[bdata["left_algebra"]]
            right = self.algebras[bdata["right_algebra"]]
            self.bimodules[key] = io_json.bimodule_from_json(bdata, left, right)
        self.modules: Dict[str, Representation] = {}
        for key, mdata in data.get("modules", {}).items():
            algebra = self.algebras[mdata["algebra"]]
            self.modules[key] = io_json.module_from_json(mdata, algebra)
        self.morphisms = {}
        for key, fdata in data.get("morphisms", {}).items():
            src = self.algebras[fdata["source"]]
            tgt = self.algebras[fdata["target"]]
            self.morphisms[key] = io_json.morphism_from_json(fdata, src, tgt)
        self.expectations = data.get("expectations", [])
        self._universe_cache: Dict[str, List[Representation]] = {}

    # -- reference resolution ------------------------------------------------

    def module_ref(self, ref) -> Representation:
        if isinstance(ref, str):
            return self.modules[ref]
        if "module" in ref:
            return self.modules[ref["module"]]
        if "simple" in ref:
            alg, v = ref["simple"]
            return simple(self.algebras[alg], _vertex(self.algebras[alg], v))
        if "projective" in ref:
            alg, v = ref["projective"]
            return projective(self.algebras[alg], _vertex(self.algebras[alg], v))
        if "injective" in ref:
            alg, v = ref["injective"]
            return injective(self.algebras[alg], _vertex(self.algebras[alg], v))
        if "regular" in ref:
            return regular_module(self.algebras[ref["regular"]])
        if "cogenerator" in ref:
            return injective_cogenerator(self.algebras[ref["cogenerator"]])
        if "left_restriction" in ref:
            return self.bimodules[ref["left_restriction"]].left_restriction()
        if "right_restriction" in ref:
            return self.bimodules[ref["right_restriction"]].right_restriction()
        if "right_block" in ref:
            bim, y = ref["right_block"]
            b = self.bimodules[bim]
            return b.right_block(_vertex(b.right_algebra, y))[0]
        if "direct_sum" in ref:
            return direct_sum([self.module_ref(r) for r in ref["direct_sum"]])
        raise ValueError("unresolvable module reference %r" % (ref,))

    def universe_ref(self, ref) -> List[Representation]:
        key = json.dumps(ref, sort_keys=True)
        if key in self._universe_cache:
            return self._universe_cache[key]
        if "dynkin_roots" in ref:
            out = enumerate_indecomposables(self.algebras[ref["dynkin_roots"]], "dynkin_roots")
        elif "dynkin_roots_opposite" in ref:
            out = enumerate_indecomposables(
                self.algebras[ref["dynkin_roots_opposite"]].opposite(), "dynkin_roots"
            )
        elif "nakayama_intervals" in ref:
            out = enumerate_indecomposables(
                self.algebras[ref["nakayama_intervals"]], "nakayama_intervals"
            )
        elif "modules" in ref:
            out = [self.module_ref(r) for r in ref["modules"]]
        else:
            raise ValueError("unresolvable universe reference %r" % (ref,))
        self._universe_cache[key] = out
        return out


def _vertex(algebra, v):
    for w in algebra.quiver.vertices:
        if w == v or str(w) == str(v):
            return w
    raise ValueError("unknown vertex %r" % (v,))


# -- the op registry -------------------------------------------------------------


def _op_algebra_dim(ctx, args):
    return ctx.algebras[args["algebra"]].dimension


def _op_bimodule_dim(ctx, args):
    return ctx.bimodules[args["bimodule"]].dim


def _op_hereditary(ctx, args):
    return ctx.algebras[args["algebra"]].is_hereditary()


def _op_module_dim_vector(ctx, args):
    return list(ctx.module_ref(args["module"]).dim_vector())


def _op_total_dim(ctx, args):
    return ctx.module_ref(args["module"]).total_dim()


def _op_pd(ctx, args):
    v = projective_dimension(ctx.module_ref(args["module"]), args.get("bound"))
    return "exceeds bound" if v is None else v


def _op_injective_module(ctx, args):
    return is_injective_module(ctx.module_ref(args["module"]))


def _op_sincere(ctx, args):
    return is_sincere(ctx.module_ref(args["module"]))


def _op_selforthogonal(ctx, args):
    return is_selforthogonal(ctx.module_ref(args["module"]), args["degree"])


def _op_ext_dim(ctx, args):
    d = ext(ctx.module_ref(args["from"]), ctx.module_ref(args["to"]), args["degree"])
    if args.get("positive"):
        return d > 0
    return d


def _op_hom_dim(ctx, args):
    return hom_dim(ctx.module_ref(args["from"]), ctx.module_ref(args["to"]))


def _summand_list(ctx, args):
    if args.get("objects") == "projectives":
        a = ctx.algebras[args["algebra"]]
        return [projective(a, v) for v in a.quiver.vertices]
    if args.get("objects") == "bimodule_blocks":
        b = ctx.bimodules[args["bimodule"]]
        return [b.right_block(y)[0] for y in b.right_algebra.quiver.vertices]
    return [ctx.module_ref(r) for r in args["modules"]]


def _op_hom_matrix_pattern(ctx, args):
    mods = _summand_list(ctx, args)
    mat = hom_dimension_matrix(mods)
    pattern = args["pattern"]
    n = len(mods)
    found = None
    for perm in itertools.permutations(range(n)):
        if all(
            (mat[perm[i]][perm[j]] != 0) == (pattern[i][j] != 0)
            and mat[perm[i]][perm[j]] <= pattern[i][j]
            for i in range(n)
            for j in range(n)
        ):
            found = list(perm)
            break
    nonzero = sum(1 for row in mat for x in row if x)
    return {"matches": found is not None, "nonzero": nonzero}


def _op_hom_pairs_bound(ctx, args):
    mods = _summand_list(ctx, args)
    mat = hom_dimension_matrix(mods)
    return all(x <= args["bound"] for row in mat for x in row)


def _op_equivalence_image(ctx, args):
    b = ctx.bimodules[args["bimodule"]]
    y = _vertex(b.right_algebra, args["block"])
    img = hom_from_bimodule(b, b.right_block(y)[0])
    target = projective(b.right_algebra, _vertex(b.right_algebra, args["projective_at"]))
    return list(img.dim_vector()) == list(target.dim_vector())


def _op_duality_image(ctx, args):
    b = ctx.bimodules[args["bimodule"]]
    m = ctx.module_ref(args["module"])
    img = delta_left(b, m)
    return list(img.dim_vector())


def _op_reflexive_census(ctx, args):
    b = ctx.bimodules[args["bimodule"]]
    universe = ctx.universe_ref(args["universe"])
    side = args.get("side", "left")
    count, hits = count_reflexive(b, universe, side)
    out = {"count": count}
    if "non_obvious" in args.get("expect_fields", []) or True:
        if side == "left":
            obvious = {
                b.right_block(y)[0].dim_vector()
                for y in b.right_algebra.quiver.vertices
            } | {
                projective(b.left_algebra, v).dim_vector()
                for v in b.left_algebra.quiver.vertices
            }
            non_obvious = [
                list(universe[i].dim_vector())
                for i in hits
                if universe[i].dim_vector() not in obvious
            ]
            out["non_obvious"] = len(non_obvious)
    return out


def _op_faithfully_balanced(ctx, args):
    return faithfully_balanced(ctx.bimodules[args["bimodule"]])


def _op_classical_tilting(ctx, args):
    return is_classical_tilting(ctx.module_ref(args["module"])).holds


def _op_classical_cotilting(ctx, args):
    return is_classical_cotilting(ctx.module_ref(args["module"])).holds


def _op_end_algebra_stats(ctx, args):
    fa = end_algebra(ctx.module_ref(args["module"]))
    qd = fa.quiver_data
    return {
        "dim": fa.dimension,
        "vertices": qd.get("vertex_count"),
        "arrows": qd.get("arrow_count"),
        "relations": qd.get("relation_count"),
    }


def _op_render_counts(ctx, args):
    if "bimodule" in args:
        dot = render_picture(ctx.bimodules[args["bimodule"]])
    else:
        dot = render_picture(ctx.module_ref(args["module"]))
    nodes = sum(1 for line in dot.splitlines() if "[label=" in line and "->" not in line)
    solid = sum(1 for line in dot.splitlines() if "style=solid" in line)
    wavy = sum(1 for line in dot.splitlines() if "style=dashed" in line)
    return {"nodes": nodes, "solid": solid, "wavy": wavy}


def _op_gen_n(ctx, args):
    verdict = gen_n_membership(
        ctx.module_ref(args["by"]),
        ctx.module_ref(args["of"]),
        args["n"],
        assume_partial_tilting=args.get("assume_partial_tilting", False),
    )
    out = {"status": verdict.status}
    if verdict.status == "IN":
        out["witness_verified"] = verdict.witness.verify()
    if verdict.status == "OUT":
        out["certificate"] = verdict.certificate.get("kind")
    return out


def _op_partial_tilting(ctx, args):
    rep = is_partial_tilting(
        ctx.module_ref(args["t"]), args["n"], ctx.universe_ref(args["universe"])
    )
    return _holds(rep)


def _op_tilting(ctx, args):
    rep = is_tilting(
        ctx.module_ref(args["t"]), args["n"], ctx.universe_ref(args["universe"])
    )
    return _holds(rep)


def _op_large_partial_tilting(ctx, args):
    rep = is_large_partial_tilting(
        ctx.module_ref(args["t"]), args["n"], ctx.universe_ref(args["universe"])
    )
    out = {"holds": _holds(rep)}
    if "hom_killed" in rep.details:
        out["killed"] = [
            {
                "dim_vector": list(
                    ctx.universe_ref(args["universe"])[entry["index"]].dim_vector()
                ),
                "first_nonvanishing_ext": entry["first_nonvanishing_ext"],
            }
            for entry in rep.details["hom_killed"]
        ]
    return out


def _holds(rep):
    if rep.holds is None:
        return "inconclusive"
    return rep.holds


def _op_cancel_matches(ctx, args):
    m = ctx.module_ref(args["of"])
    pred_spec = args["predicate"]
    if pred_spec == "projective":
        pred = is_projective_module
    elif isinstance(pred_spec, dict) and "dim_vector" in pred_spec:
        pred = dim_vector_predicate(pred_spec["dim_vector"])
    else:
        raise ValueError("unknown predicate %r" % (pred_spec,))
    result = cancel_summands(m, pred)
    target = ctx.module_ref(args["equals"])
    if sorted(p.dim_vector() for p in decompose(result)) != sorted(
        p.dim_vector() for p in decompose(target)
    ):
        return False
    return is_isomorphic(result, target)


def _op_envelope_codim(ctx, args):
    b = ctx.bimodules[args["bimodule"]]
    restr = b.left_restriction() if args["side"] == "left" else b.right_restriction()
    env, _ = injective_envelope(restr)
    return env.total_dim() - restr.total_dim()


def _op_extension_verify(ctx, args):
    rep = extension_verify(
        ctx.bimodules[args["big"]], ctx.bimodules[args["sub"]], args["side"]
    )
    return rep["holds"]


def _op_bimodule_indecomposable(ctx, args):
    return bimodule_indecomposable(ctx.bimodules[args["bimodule"]])


def _op_extension_solve(ctx, args):
    out = extension_solve(ctx.bimodules[args["bimodule"]], args["side"])
    result = {"status": out.status}
    if args.get("witness_iso_to") and out.witness is not None:
        other = ctx.bimodules[args["witness_iso_to"]]
        result["witness_iso"] = (
            find_injective_bimodule_map(out.witness, other) is not None
            and find_injective_bimodule_map(other, out.witness) is not None
            and out.witness.dim == other.dim
        )
    return result


def _op_good_case(ctx, args):
    rep = check_good_case(ctx.bimodules[args["big"]], ctx.bimodules[args["sub"]])
    return rep["holds"]


def _op_bad_case(ctx, args):
    rep = check_bad_case(
        ctx.bimodules[args["sub"]],
        ctx.algebras[args["r_star"]],
        ctx.morphisms[args["morphism"]],
        ctx.bimodules[args["big"]],
    )
    return {"holds": rep["holds"], "kernel_dimension": rep["kernel_dimension"]}


def _op_ring_epi(ctx, args):
    is_epi, ker = check_ring_epimorphism(ctx.morphisms[args["morphism"]])
    return [is_epi, ker]


def _op_classify_elementary(ctx, args):
    a = ctx.algebras[args["algebra"]]
    t = ctx.module_ref(args["t"])
    res = projective_resolution(t, args.get("bound", 2 * a.dimension))
    tcx = from_resolution(res)
    cls = classify_elementary(tcx, a)
    pairs = sorted(set((str(i), str(j)) for i, j, _ in cls))
    checks = True
    for i, j, k in cls:
        from .modules import hom_space

        f = hom_space(projective(a, i), projective(a, j))[k]
        xcx = two_term(f.source, f.target, f)
        if is_resolution_shape(xcx) or not condition_b(tcx, xcx):
            checks = False
    return {"pairs": [list(p) for p in pairs], "each_satisfies_b": checks}


OPS = {
    "algebra_dim": _op_algebra_dim,
    "bimodule_dim": _op_bimodule_dim,
    "hereditary": _op_hereditary,
    "module_dim_vector": _op_module_dim_vector,
    "total_dim": _op_total_dim,
    "pd": _op_pd,
    "injective_module": _op_injective_module,
    "sincere": _op_sincere,
    "selforthogonal": _op_selforthogonal,
    "ext_dim": _op_ext_dim,
    "hom_dim": _op_hom_dim,
    "hom_matrix_pattern": _op_hom_matrix_pattern,
    "hom_pairs_bound": _op_hom_pairs_bound,
    "equivalence_image": _op_equivalence_image,
    "duality_image": _op_duality_image,
    "reflexive_census": _op_reflexive_census,
    "faithfully_balanced": _op_faithfully_balanced,
    "classical_tilting": _op_classical_tilting,
    "classical_cotilting": _op_classical_cotilting,
    "end_algebra_stats": _op_end_algebra_stats,
    "render_counts": _op_render_counts,
    "gen_n": _op_gen_n,
    "partial_tilting": _op_partial_tilting,
    "tilting": _op_tilting,
    "large_partial_tilting": _op_large_partial_tilting,
    "cancel_matches": _op_cancel_matches,
    "envelope_codim": _op_envelope_codim,
    "extension_verify": _op_extension_verify,
    "bimodule_indecomposable": _op_bimodule_indecomposable,
    "extension_solve": _op_extension_solve,
    "good_case": _op_good_case,
    "bad_case": _op_bad_case,
    "ring_epi": _op_ring_epi,
    "classify_elementary": _op_classify_elementary,
}


def run_suite(path_or_name: str) -> Tuple[int, Dict]:
    """Execute a bundle; returns (exit_status, report)."""
    path = path_or_name
    if not os.path.exists(path):
        candidate = io_json.bundle_path(path_or_name)
        if os.path.exists(candidate):
            path = candidate
    try:
        with open(path) as fh:
            data = json.load(fh)
    except FileNotFoundError:
        return 2, {"error": "bundle not found: %s" % path_or_name}
    except json.JSONDecodeError as exc:
        return 2, {
            "error": "parse error",
            "line": exc.lineno,
            "column": exc.colno,
            "message": exc.msg,
        }
    try:
        ctx = BundleContext(data)
    except Exception as exc:  # malformed corpus content
        return 2, {"error": "bundle failed to load: %s" % exc}
    results = []
    n_pass = n_fail = n_inconclusive = 0
    for expectation in ctx.expectations:
        op = expectation["op"]
        args = expectation.get("args", {})
        expect = expectation.get("expect")
        actual = OPS[op](ctx, args)
        if actual == "inconclusive" or (
            isinstance(actual, dict) and "inconclusive" in actual.values()
        ):
            status = "inconclusive"
            n_inconclusive += 1
        elif _matches(actual, expect):
            status = "pass"
            n_pass += 1
        else:
            status = "fail"
            n_fail += 1
        results.append(
            {
                "id": expectation.get("id", op),
                "op": op,
                "status": status,
                "expected": expect,
                "actual": actual,
                "provenance": expectation.get("provenance", ""),
                "command": "tiltkit suite run %s --only %s"
                % (ctx.name, expectation.get("id", op)),
            }
        )
    report = {
        "bundle": ctx.name,
        "results": results,
        "summary": {
            "pass": n_pass,
            "fail": n_fail,
            "inconclusive": n_inconclusive,
            "total": len(results),
        },
    }
    return (0 if n_fail == 0 else 1), report


def _matches(actual, expect) -> bool:
    if isinstance(expect, dict) and isinstance(actual, dict):
        return all(_matches(actual.get(k), v) for k, v in expect.items())
    if isinstance(expect, dict) and "one_of" in expect:
        return actual in expect["one_of"]
    return actual == expect


# -- shipped bundle content -------------------------------------------------------


def bundle_descriptions() -> Dict[str, Dict]:
    """Serialized fixture bundles, built from the fixture constructors."""
    from . import fixtures as fx

    bundles: Dict[str, Dict] = {}

    hr = fx.family_happel_ringel()
    t_json = io_json.bimodule_to_json(hr["T"], "A", "B")
    bundles["happel-ringel"] = {
        "format": io_json.FORMAT,
        "name": "happel-ringel",
        "algebras": {
            "A": io_json.algebra_to_json(hr["A"]),
            "B": io_json.algebra_to_json(hr["B"]),
        },
        "bimodules": {"T": t_json},
        "modules": {},
        "expectations": [
            {"id": "dim-T-23", "op": "bimodule_dim", "args": {"bimodule": "T"},
             "expect": 23, "provenance": "PAPER section 1: dimension 23"},
            {"id": "dim-A-13", "op": "algebra_dim", "args": {"algebra": "A"},
             "expect": 13, "provenance": "PAPER section 2 first matrix: 13 entries"},
            {"id": "dim-B-15", "op": "algebra_dim", "args": {"algebra": "B"},
             "expect": 15, "provenance": "PAPER section 2 second matrix: 15 entries"},
            {"id": "matrix-A", "op": "hom_matrix_pattern",
             "args": {"objects": "projectives", "algebra": "A",
                      "pattern": fx.HR_MATRIX_A_PATTERN},
             "expect": {"matches": True, "nonzero": 13},
             "provenance": "PAPER section 2 first matrix"},
            {"id": "matrix-B", "op": "hom_matrix_pattern",
             "args": {"objects": "bimodule_blocks", "bimodule": "T",
                      "pattern": fx.HR_MATRIX_B_PATTERN},
             "expect": {"matches": True, "nonzero": 15},
             "provenance": "PAPER section 2 second matrix"},
            {"id": "selforthogonal", "op": "ext_dim",
             "args": {"from": {"left_restriction": "T"},
                      "to": {"left_restriction": "T"}, "degree": 1},
             "expect": 0, "provenance": "PAPER section 1: T is selforthogonal"},
            {"id": "hom-pairs", "op": "hom_pairs_bound",
             "args": {"objects": "bimodule_blocks", "bimodule": "T", "bound": 1},
             "expect": True, "provenance": "PAPER section 2: dimension at most one"},
            {"id": "balanced", "op": "faithfully_balanced",
             "args": {"bimodule": "T"}, "expect": True,
             "provenance": "DERIVED: checked computationally"},
            {"id": "classical-tilting", "op": "classical_tilting",
             "args": {"module": {"left_restriction": "T"}}, "expect": True,
             "provenance": "PAPER section 3"},
            {"id": "classical-cotilting", "op": "classical_cotilting",
             "args": {"module": {"left_restriction": "T"}}, "expect": True,
             "provenance": "PAPER section 3"},
            {"id": "end-algebra", "op": "end_algebra_stats",
             "args": {"module": {"left_restriction": "T"}},
             "expect": {"dim": 15, "vertices": 6, "arrows": 7, "relations": 2},
             "provenance": "PAPER sections 1-2: fully commutative quiver"},
            {"id": "census", "op": "reflexive_census",
             "args": {"bimodule": "T", "universe": {"dynkin_roots": "A"},
                      "side": "left"},
             "expect": {"count": 14, "non_obvious": 3},
             "provenance": "PAPER section 5.1: 14 reflexive, 3 non obvious"},
            {"id": "render", "op": "render_counts", "args": {"bimodule": "T"},
             "expect": {"nodes": 23},
             "provenance": "PAPER section 1: Picture 1 has dimension 23"},
        ],
    }
    # equivalence and duality tables
    for y in fx.HR_SUMMAND_ORDER:
        bundles["happel-ringel"]["expectations"].append(
            {"id": "equivalence-%s" % y, "op": "equivalence_image",
             "args": {"bimodule": "T", "block": y, "projective_at": y},
             "expect": True,
             "provenance": "PAPER end of section 1: tilting equivalence table"}
        )
        bundles["happel-ringel"]["expectations"].append(
            {"id": "duality-summand-%s" % y, "op": "duality_image",
             "args": {"bimodule": "T", "module": {"right_block": ["T", y]}},
             "expect": list(fx.HR_DUALITY_SUMMAND_IMAGES[y]),
             "provenance": "PAPER end of section 1: cotilting duality table"}
        )
    for v, exp in sorted(fx.HR_DUALITY_PROJECTIVE_IMAGES.items()):
        bundles["happel-ringel"]["expectations"].append(
            {"id": "duality-projective-%d" % v, "op": "duality_image",
             "args": {"bimodule": "T", "module": {"projective": ["A", v]}},
             "expect": list(exp),
             "provenance": "PAPER section 5.1: projective images"}
        )

    rs = fx.family_radsq()
    a33 = rs["A"]
    mods = rs["modules"]
    module_jsons = {
        name: io_json.module_to_json(mods[name], "A") for name in fx.RADSQ_UNIVERSE
    }
    t33_ref = {"direct_sum": ["I5", "I4", "I3", "I2"]}
    universe_ref = {"modules": list(fx.RADSQ_UNIVERSE)}
    bundles["radsq-five"] = {
        "format": io_json.FORMAT,
        "name": "radsq-five",
        "algebras": {"A": io_json.algebra_to_json(a33)},
        "bimodules": {},
        "modules": module_jsons,
        "expectations": [
            {"id": "dim-10", "op": "algebra_dim", "args": {"algebra": "A"},
             "expect": 10, "provenance": "DERIVED: 5 idempotents + 5 arrows"},
            {"id": "T-injective", "op": "injective_module",
             "args": {"module": t33_ref}, "expect": True,
             "provenance": "PAPER section 3.3: the injective module T"},
            {"id": "pd-3", "op": "pd", "args": {"module": t33_ref}, "expect": 3,
             "provenance": "PAPER section 3.3: projective dimension 3"},
            {"id": "sincere", "op": "sincere", "args": {"module": t33_ref},
             "expect": True, "provenance": "PAPER section 3.4: T is sincere"},
            {"id": "partial", "op": "partial_tilting",
             "args": {"t": t33_ref, "n": 3, "universe": universe_ref},
             "expect": True, "provenance": "PAPER section 3.3: partial tilting"},
            {"id": "not-tilting", "op": "tilting",
             "args": {"t": t33_ref, "n": 3, "universe": universe_ref},
             "expect": False, "provenance": "PAPER section 3.3 (partial only)"},
            {"id": "gen3-in", "op": "gen_n",
             "args": {"by": t33_ref, "of": {"direct_sum": ["S1", "S1"]}, "n": 3},
             "expect": {"status": "IN", "witness_verified": True},
             "provenance": "PAPER section 3.3: contains 1 + 1"},
            {"id": "gen3-out", "op": "gen_n",
             "args": {"by": t33_ref, "of": "S1", "n": 3},
             "expect": {"status": "OUT"},
             "provenance": "PAPER section 3.3: but not its summand 1"},
            {"id": "large", "op": "large_partial_tilting",
             "args": {"t": t33_ref, "n": 3, "universe": universe_ref},
             "expect": {"holds": True,
                        "killed": [{"dim_vector": [0, 0, 0, 0, 1],
                                    "first_nonvanishing_ext": 2}]},
             "provenance": "PAPER section 3.4: 5 unique with Ext^2 nonzero"},
            {"id": "hom-kill", "op": "hom_dim",
             "args": {"from": t33_ref, "to": "S5"}, "expect": 0,
             "provenance": "PAPER section 3.4: Hom(T, 5) = 0"},
            {"id": "ext2-S5", "op": "ext_dim",
             "args": {"from": t33_ref, "to": "S5", "degree": 2, "positive": True},
             "expect": True, "provenance": "PAPER section 3.4: Ext^2(T, 5) != 0"},
            {"id": "cancel", "op": "cancel_matches",
             "args": {"of": {"cogenerator": "A"},
                      "predicate": {"dim_vector": [1, 0, 0, 0, 0]},
                      "equals": t33_ref},
             "expect": True,
             "provenance": "PAPER section 3.4: cancellation of the summand 1"},
        ],
    }

    for n in (3, 4):
        fam = fx.family_nakayama(n)
        a_n = fam["A"]
        t_ref = {"injective": ["A", 1]}
        expect_pairs = sorted(
            [str(i), str(j)] for i in range(2, n + 1) for j in range(2, i)
        )
        bundles["nakayama-n%d" % n] = {
            "format": io_json.FORMAT,
            "name": "nakayama-n%d" % n,
            "algebras": {"A": io_json.algebra_to_json(a_n)},
            "bimodules": {},
            "modules": {"T": io_json.module_to_json(fam["T"], "A")},
            "expectations": [
                {"id": "T-is-I1", "op": "module_dim_vector",
                 "args": {"module": t_ref}, "expect": [1] * n,
                 "provenance": "PAPER section 3.7: uniserial 2/3/../n/1"},
                {"id": "pd", "op": "pd", "args": {"module": "T"},
                 "expect": 2 * n - 2,
                 "provenance": "PAPER section 3.7: projective dimension m = 2n-2"},
                {"id": "cancel", "op": "cancel_matches",
                 "args": {"of": {"cogenerator": "A"}, "predicate": "projective",
                          "equals": "T"},
                 "expect": True,
                 "provenance": "PAPER section 3.7: cancel n-1 projective summands"},
                {"id": "large", "op": "large_partial_tilting",
                 "args": {"t": "T", "n": 2 * n - 2,
                          "universe": {"nakayama_intervals": "A"}},
                 "expect": {"holds": True},
                 "provenance": "PAPER section 3.7: large partial tilting"},
                {"id": "not-tilting", "op": "tilting",
                 "args": {"t": "T", "n": 2 * n - 2,
                          "universe": {"nakayama_intervals": "A"}},
                 "expect": False,
                 "provenance": "PAPER section 3.6(a): not a tilting module"},
                {"id": "classify", "op": "classify_elementary",
                 "args": {"algebra": "A", "t": "T", "bound": 2 * n},
                 "expect": {"pairs": expect_pairs, "each_satisfies_b": True},
                 "provenance": "PAPER section 3.7: exactly i > j > 1"},
            ],
        }

    f43 = fx.family_43()
    bundles["good-case-43"] = {
        "format": io_json.FORMAT,
        "name": "good-case-43",
        "algebras": {
            "S": io_json.algebra_to_json(f43["S"]),
            "R": io_json.algebra_to_json(f43["R"]),
        },
        "bimodules": {
            "C": io_json.bimodule_to_json(f43["C"], "S", "R"),
            "D_left": io_json.bimodule_to_json(f43["D_left"], "S", "R"),
            "D_right": io_json.bimodule_to_json(f43["D_right"], "S", "R"),
        },
        "modules": {},
        "expectations": [
            {"id": "codim-left", "op": "envelope_codim",
             "args": {"bimodule": "C", "side": "left"}, "expect": 2,
             "provenance": "PAPER section 4.3: codimension 2"},
            {"id": "codim-right", "op": "envelope_codim",
             "args": {"bimodule": "C", "side": "right"}, "expect": 2,
             "provenance": "PAPER section 4.3: codimension 2"},
            {"id": "verify-left", "op": "extension_verify",
             "args": {"big": "D_left", "sub": "C", "side": "left"},
             "expect": True, "provenance": "PAPER section 4.3: Picture 3"},
            {"id": "verify-right", "op": "extension_verify",
             "args": {"big": "D_right", "sub": "C", "side": "right"},
             "expect": True, "provenance": "PAPER section 4.3: Picture 4"},
            {"id": "indec-left", "op": "bimodule_indecomposable",
             "args": {"bimodule": "D_left"}, "expect": True,
             "provenance": "PAPER section 4.3: an indecomposable bimodule D"},
            {"id": "dec-right", "op": "bimodule_indecomposable",
             "args": {"bimodule": "D_right"}, "expect": False,
             "provenance": "PAPER section 4.3: resp. a decomposable bimodule"},
            {"id": "census-left", "op": "reflexive_census",
             "args": {"bimodule": "C", "universe": {"dynkin_roots": "S"},
                      "side": "left"},
             "expect": {"count": 4},
             "provenance": "PAPER section 5.1: admits 4 reflexive left modules"},
            {"id": "census-right", "op": "reflexive_census",
             "args": {"bimodule": "C",
                      "universe": {"dynkin_roots_opposite": "R"}, "side": "right"},
             "expect": {"count": 4},
             "provenance": "PAPER section 5.1: resp. right modules"},
            {"id": "good-case", "op": "good_case",
             "args": {"big": "D_left", "sub": "C"}, "expect": True,
             "provenance": "PAPER section 4.4: conditions (1)-(3)"},
            {"id": "solve-left", "op": "extension_solve",
             "args": {"bimodule": "C", "side": "left", "witness_iso_to": "D_left"},
             "expect": {"status": "EXISTS", "witness_iso": True},
             "provenance": "PAPER sections 4.3-4.4: R hereditary, system linear"},
        ],
    }
    chains = {"chain-456": [4, 5, 6], "chain-56": [5, 6], "chain-5": [5], "chain-6": [6]}
    for key, chain in chains.items():
        bundles["good-case-43"]["modules"][key] = io_json.module_to_json(
            fx._uniserial(f43["S"], chain), "S"
        )
    for (chain, expected), key in zip(fx.C43_DELTA_TABLE, chains):
        bundles["good-case-43"]["expectations"].append(
            {"id": "delta-%s" % key, "op": "duality_image",
             "args": {"bimodule": "C", "module": key},
             "expect": list(expected),
             "provenance": "PAPER section 5.1: the duality acts as follows"}
        )

    f46 = fx.family_46()
    bundles["bad-case-46"] = {
        "format": io_json.FORMAT,
        "name": "bad-case-46",
        "algebras": {
            "S": io_json.algebra_to_json(f46["S"]),
            "R": io_json.algebra_to_json(f46["R"]),
            "R_star": io_json.algebra_to_json(f46["R_star"]),
        },
        "bimodules": {
            "C": io_json.bimodule_to_json(f46["C"], "S", "R"),
            "U": io_json.bimodule_to_json(f46["U"], "S", "R_star"),
        },
        "modules": {},
        "morphisms": {
            "F": dict(io_json.morphism_to_json(f46["F"]), source="R_star", target="R"),
        },
        "expectations": [
            {"id": "ring-epi", "op": "ring_epi", "args": {"morphism": "F"},
             "expect": [True, 1],
             "provenance": "PAPER section 4.6: dim ker F = 1"},
            {"id": "not-hereditary", "op": "hereditary", "args": {"algebra": "R"},
             "expect": False, "provenance": "PAPER section 4.5(1)"},
            {"id": "bad-case", "op": "bad_case",
             "args": {"sub": "C", "r_star": "R_star", "morphism": "F", "big": "U"},
             "expect": {"holds": True, "kernel_dimension": 1},
             "provenance": "PAPER section 4.6 and Picture 6"},
            {"id": "solve-left", "op": "extension_solve",
             "args": {"bimodule": "C", "side": "left"},
             "expect": {"status": {"one_of": ["NOT_EXISTS", "UNKNOWN"]}},
             "provenance": "PAPER section 4.1: not always possible to embed"},
        ],
    }
    chains46 = {"chain-6": [6], "chain-456": [4, 5, 6], "chain-4": [4], "chain-56": [5, 6]}
    for key, chain in chains46.items():
        bundles["bad-case-46"]["modules"][key] = io_json.module_to_json(
            fx._uniserial(f46["S"], chain), "S"
        )
    for (chain, expected), key in zip(fx.C46_DELTA_TABLE, chains46):
        bundles["bad-case-46"]["expectations"].append(
            {"id": "delta-%s" % key, "op": "duality_image",
             "args": {"bimodule": "C", "module": key},
             "expect": list(expected),
             "provenance": "PAPER section 5.1: 4.6 duality table"}
        )

    f47 = fx.family_47()
    bundles["bad-case-47"] = {
        "format": io_json.FORMAT,
        "name": "bad-case-47",
        "algebras": {
            "S": io_json.algebra_to_json(f47["S"]),
            "R": io_json.algebra_to_json(f47["R"]),
            "R_star": io_json.algebra_to_json(f47["R_star"]),
        },
        "bimodules": {
            "C": io_json.bimodule_to_json(f47["C"], "S", "R"),
            "U": io_json.bimodule_to_json(f47["U"], "S", "R_star"),
        },
        "modules": {},
        "morphisms": {
            "F": dict(io_json.morphism_to_json(f47["F"]), source="R_star", target="R"),
        },
        "expectations": [
            {"id": "ring-epi", "op": "ring_epi", "args": {"morphism": "F"},
             "expect": [True, 2],
             "provenance": "PAPER section 4.7: dim ker F = 2"},
            {"id": "not-hereditary", "op": "hereditary", "args": {"algebra": "R"},
             "expect": False, "provenance": "PAPER section 4.5(1)"},
            {"id": "bad-case", "op": "bad_case",
             "args": {"sub": "C", "r_star": "R_star", "morphism": "F", "big": "U"},
             "expect": {"holds": True, "kernel_dimension": 2},
             "provenance": "PAPER section 4.7 and Picture 7"},
        ],
    }
    chains47 = {"chain-343": [3, 4, 3], "chain-3": [3], "chain-43": [4, 3]}
    for key, chain in chains47.items():
        bundles["bad-case-47"]["modules"][key] = io_json.module_to_json(
            fx._uniserial(f47["S"], chain), "S"
        )
    for (chain, expected), key in zip(fx.C47_DELTA_TABLE, chains47):
        bundles["bad-case-47"]["expectations"].append(
            {"id": "delta-%s" % key, "op": "duality_image",
             "args": {"bimodule": "C", "module": key},
             "expect": list(expected),
             "provenance": "PAPER section 5.1: 4.7 duality table"}
        )

    bundles["empty-bundle"] = {
        "format": io_json.FORMAT,
        "name": "empty-bundle",
        "algebras": {},
        "bimodules": {},
        "modules": {},
        "expectations": [],
    }
    return bundles
