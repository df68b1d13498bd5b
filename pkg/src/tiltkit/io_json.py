"""JSON corpus serialization (schema version ``tiltkit-v1``).

Rationals are serialized as strings ``"p/q"`` (or bare integers); matrices
are row-major lists of such entries, rows indexed by the target basis.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Dict, List, Optional

from .linalg import Mat
from .quiver import AlgebraMorphism, BoundQuiverAlgebra, Quiver, Relation, build_algebra
from .modules import Representation
from .bimodules import Bimodule

FORMAT = "tiltkit-v1"


def dump_rational(x: Fraction):
    if x.denominator == 1:
        return int(x)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_rational(x) -> Fraction:
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise ValueError("rationals serialize as 'p/q' strings or integers, got %r" % (x,))


def dump_matrix(m: Mat) -> List[List]:
    return [[dump_rational(x) for x in row] for row in m.rows]


def parse_matrix(data, rows: int, cols: int) -> Mat:
    mat = Mat(rows, cols, [[parse_rational(x) for x in row] for row in data])
    return mat


def _vertex_key(v) -> str:
    return str(v)


def algebra_to_json(a: BoundQuiverAlgebra) -> Dict:
    return {
        "format": FORMAT,
        "vertices": list(a.quiver.vertices),
        "arrows": [{"name": n, "from": s, "to": t} for n, s, t in a.quiver.arrows],
        "relations": [
            [{"coeff": dump_rational(c), "path": list(p)} for c, p in rel.terms]
            for rel in a.relations
        ],
    }


def algebra_from_json(data: Dict) -> BoundQuiverAlgebra:
    if data.get("format", FORMAT) != FORMAT:
        raise ValueError("unsupported corpus format %r" % data.get("format"))
    quiver = Quiver(
        data["vertices"],
        [(arr["name"], arr["from"], arr["to"]) for arr in data["arrows"]],
    )
    rels = [
        Relation([(parse_rational(t["coeff"]), tuple(t["path"])) for t in rel])
        for rel in data.get("relations", [])
    ]
    return build_algebra(quiver, rels)


def module_to_json(m: Representation, algebra_ref="inline") -> Dict:
    out = {
        "algebra": algebra_to_json(m.algebra) if algebra_ref == "inline" else algebra_ref,
        "dims": {_vertex_key(v): m.dims[v] for v in m.algebra.quiver.vertices},
        "maps": {name: dump_matrix(mat) for name, mat in m.maps.items()},
    }
    return out


def module_from_json(data: Dict, algebra: Optional[BoundQuiverAlgebra] = None) -> Representation:
    if algebra is None:
        if not isinstance(data["algebra"], dict):
            raise ValueError("module needs an inline algebra or an algebra argument")
        algebra = algebra_from_json(data["algebra"])
    by_key = {_vertex_key(v): v for v in algebra.quiver.vertices}
    dims = {by_key[k]: d for k, d in data["dims"].items()}
    maps = {}
    for name, s, t in algebra.quiver.arrows:
        rows = dims.get(t, 0)
        cols = dims.get(s, 0)
        if name in data.get("maps", {}):
            maps[name] = parse_matrix(data["maps"][name], rows, cols)
    return Representation(algebra, dims, maps)


def bimodule_to_json(b: Bimodule, left_ref="inline", right_ref="inline") -> Dict:
    return {
        "format": FORMAT,
        "left_algebra": algebra_to_json(b.left_algebra) if left_ref == "inline" else left_ref,
        "right_algebra": algebra_to_json(b.right_algebra)
        if right_ref == "inline"
        else right_ref,
        "dim": b.dim,
        "basis": [
            {
                "left_idem": b.left_labels[i],
                "right_idem": b.right_labels[i],
                "label": "%s|%s" % (b.left_labels[i], b.right_labels[i]),
            }
            for i in range(b.dim)
        ],
        "left_arrows": {name: dump_matrix(m) for name, m in b.left_ops.items()},
        "right_arrows": {name: dump_matrix(m) for name, m in b.right_ops.items()},
    }


def bimodule_from_json(
    data: Dict,
    left_algebra: Optional[BoundQuiverAlgebra] = None,
    right_algebra: Optional[BoundQuiverAlgebra] = None,
) -> Bimodule:
    if left_algebra is None:
        left_algebra = algebra_from_json(data["left_algebra"])
    if right_algebra is None:
        right_algebra = algebra_from_json(data["right_algebra"])
    n = data["dim"]
    left_labels = [entry["left_idem"] for entry in data["basis"]]
    right_labels = [entry["right_idem"] for entry in data["basis"]]
    left_ops = {
        name: parse_matrix(m, n, n) for name, m in data.get("left_arrows", {}).items()
    }
    right_ops = {
        name: parse_matrix(m, n, n) for name, m in data.get("right_arrows", {}).items()
    }
    return Bimodule(
        left_algebra, right_algebra, left_labels, right_labels, left_ops, right_ops
    )


def morphism_to_json(f: AlgebraMorphism) -> Dict:
    return {
        "vertex_map": {_vertex_key(v): w for v, w in f.vertex_map.items()},
        "arrow_map": {
            a: [{"coeff": dump_rational(c), "path": list(p)} for c, p in terms]
            for a, terms in f.arrow_map.items()
        },
    }


def morphism_from_json(
    data: Dict, source: BoundQuiverAlgebra, target: BoundQuiverAlgebra
) -> AlgebraMorphism:
    by_key = {_vertex_key(v): v for v in source.quiver.vertices}
    vm = {by_key[k]: w for k, w in data["vertex_map"].items()}
    am = {
        a: [(parse_rational(t["coeff"]), tuple(t["path"])) for t in terms]
        for a, terms in data["arrow_map"].items()
    }
    return AlgebraMorphism(source, target, vm, am)


def complex_to_json(cx) -> Dict:
    out = {"format": FORMAT, "components": {}, "differentials": {}}
    for d, rep in cx.components.items():
        out["components"][str(d)] = module_to_json(rep)
    for d, f in cx.differentials.items():
        out["differentials"][str(d)] = {
            _vertex_key(v): dump_matrix(m) for v, m in f.vertex_maps.items()
        }
    return out


def complex_from_json(data: Dict, algebra: Optional[BoundQuiverAlgebra] = None):
    from .complexes import BoundedComplex
    from .modules import ModuleMap

    comps = {}
    for k, mod_data in data["components"].items():
        comps[int(k)] = module_from_json(mod_data, algebra)
        if algebra is None:
            algebra = comps[int(k)].algebra
    diffs = {}
    for k, mats in data.get("differentials", {}).items():
        d = int(k)
        src, tgt = comps[d], comps[d + 1]
        by_key = {_vertex_key(v): v for v in algebra.quiver.vertices}
        vm = {}
        for key, m in mats.items():
            v = by_key[key]
            vm[v] = parse_matrix(m, tgt.dims[v], src.dims[v])
        diffs[d] = ModuleMap(src, tgt, vm)
    return BoundedComplex(algebra, comps, diffs)


def load_module_list(path: str, algebra: BoundQuiverAlgebra) -> List[Representation]:
    with open(path) as fh:
        data = json.load(fh)
    return [module_from_json(entry, algebra) for entry in data["modules"]]


# -- the shipped corpus --------------------------------------------------------


def fixtures_dir() -> str:
    return os.path.join(os.path.dirname(__file__), "fixtures")


def bundle_path(name: str) -> str:
    return os.path.join(fixtures_dir(), "%s.json" % name)


def write_json(path: str, data) -> None:
    with open(path, "w") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_fixture_corpus() -> List[str]:
    """Generate the shipped bundle files from the fixture builders."""
    from . import fixtures as fx
    from .suite import bundle_descriptions

    os.makedirs(fixtures_dir(), exist_ok=True)
    written = []
    for name, data in bundle_descriptions().items():
        path = bundle_path(name)
        write_json(path, data)
        written.append(path)
    return written
