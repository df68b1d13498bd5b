"""Bounded complexes of representations and homotopy-category checks.

Complexes are cohomological: the differential in degree i maps the degree-i
component to the degree-(i+1) component.  A projective resolution sits in
degrees -k..0 with its augmentation dropped.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import NotProjectiveComponents
from .linalg import Mat, nullspace, rank, row_span
from .modules import (
    ModuleMap,
    Representation,
    hom_space,
    is_projective_module,
    quotient,
    submodule,
    zero_module,
)
from .homological import Resolution, projective_cover


class BoundedComplex:
    """Finitely many nonzero components with square-zero differentials."""

    def __init__(
        self,
        algebra,
        components: Dict[int, Representation],
        differentials: Dict[int, ModuleMap],
        check: bool = True,
    ):
        self.algebra = algebra
        self.components = {
            d: rep for d, rep in components.items() if not rep.is_zero()
        }
        self.differentials = {
            d: f
            for d, f in differentials.items()
            if d in self.components and d + 1 in self.components
        }
        if check:
            self.validate()

    def validate(self) -> None:
        for d, f in self.differentials.items():
            if (
                f.source.dim_vector() != self.components[d].dim_vector()
                or f.target.dim_vector() != self.components[d + 1].dim_vector()
            ):
                raise ValueError("differential endpoints disagree at degree %d" % d)
            f.validate()
        for d in self.differentials:
            if d + 1 in self.differentials:
                if not self.differentials[d + 1].compose(self.differentials[d]).is_zero():
                    raise ValueError("d.d != 0 at degree %d" % d)

    def support(self) -> List[int]:
        return sorted(self.components)

    def component(self, d: int) -> Representation:
        if d in self.components:
            return self.components[d]
        return zero_module(self.algebra)

    def differential(self, d: int) -> Optional[ModuleMap]:
        return self.differentials.get(d)

    def is_zero(self) -> bool:
        return not self.components

    def shift(self, s: int) -> "BoundedComplex":
        """The complex with (X[s])_i = X_{i+s} (signs irrelevant here)."""
        return BoundedComplex(
            self.algebra,
            {d - s: rep for d, rep in self.components.items()},
            {d - s: f for d, f in self.differentials.items()},
            check=False,
        )


def from_resolution(res: Resolution) -> BoundedComplex:
    comps = {}
    diffs = {}
    for k, ps in enumerate(res.levels):
        comps[-k] = ps.rep
    for k, d in enumerate(res.differentials):
        diffs[-(k + 1)] = d
    return BoundedComplex(res.module.algebra, comps, diffs, check=False)


def two_term(p: Representation, q: Representation, f: ModuleMap) -> BoundedComplex:
    """The complex 0 -> P -> Q -> 0 in degrees -1 and 0."""
    return BoundedComplex(p.algebra, {-1: p, 0: q}, {-1: f})


def homology(cx: BoundedComplex, i: int) -> Representation:
    """ker(d_i) / im(d_{i-1}) as a representation."""
    comp = cx.component(i)
    if comp.is_zero():
        return comp
    d_out = cx.differential(i)
    if d_out is not None:
        ker_spans = {
            v: row_span(nullspace(d_out.vertex_maps[v]), comp.dims[v])
            for v in comp.algebra.quiver.vertices
        }
    else:
        ker_spans = {
            v: row_span(Mat.identity(comp.dims[v]).rows, comp.dims[v])
            for v in comp.algebra.quiver.vertices
        }
    ker, ker_incl = submodule(comp, ker_spans)
    d_in = cx.differential(i - 1)
    if d_in is None:
        return ker
    # express the image of d_in inside the kernel's coordinates
    from .linalg import solve_mat

    spans = {}
    for v in comp.algebra.quiver.vertices:
        mat = d_in.vertex_maps[v]
        sol = solve_mat(ker_incl.vertex_maps[v], mat)
        if sol is None:
            raise ValueError("image of differential escapes the kernel")
        spans[v] = row_span([sol.col(j) for j in range(sol.n)], ker.dims[v])
    quo, _ = quotient(ker, spans)
    return quo


def euler_characteristic_checks(cx: BoundedComplex) -> bool:
    lhs = sum((-1) ** i * homology(cx, i).total_dim() for i in cx.support())
    rhs = sum((-1) ** i * rep.total_dim() for i, rep in cx.components.items())
    return lhs == rhs


def is_resolution_shape(cx: BoundedComplex) -> bool:
    """True iff homology vanishes everywhere except the top nonzero degree."""
    for d, rep in cx.components.items():
        if not is_projective_module(rep):
            raise NotProjectiveComponents("component at degree %d" % d)
    if cx.is_zero():
        return True
    top_degree = max(cx.support())
    for d in cx.support():
        if d != top_degree and not homology(cx, d).is_zero():
            return False
    return True


def _flatten_graded_map(cx: BoundedComplex, dx: BoundedComplex, blocks: Dict[int, ModuleMap]):
    """Flatten degreewise maps C_d -> D_d into one coordinate vector."""
    vec: List[Fraction] = []
    for d in cx.support():
        src = cx.component(d)
        tgt = dx.component(d)
        f = blocks.get(d)
        for v in src.algebra.quiver.vertices:
            if f is None:
                vec.extend([Fraction(0)] * (tgt.dims[v] * src.dims[v]))
            else:
                for row in f.vertex_maps[v].rows:
                    vec.extend(row)
    return vec


def _chain_map_space_dims(cx: BoundedComplex, dx: BoundedComplex) -> Tuple[int, int]:
    """(dim of chain maps cx -> dx, dim of the null-homotopic subspace)."""
    q = cx.algebra.quiver
    degrees = cx.support()
    # degreewise module-map bases; chain maps are cut out inside their sum
    deg_bases = {d: hom_space(cx.component(d), dx.component(d)) for d in degrees}
    layout = []
    off = 0
    for d in degrees:
        layout.append((d, off, len(deg_bases[d])))
        off += len(deg_bases[d])
    total = off
    if total == 0:
        return 0, 0
    offsets = {d: o for d, o, _ in layout}

    rows: List[List[Fraction]] = []
    for d in degrees:
        dc = cx.differential(d)
        dd = dx.differential(d)
        tgt_d1 = dx.component(d + 1)
        src_d = cx.component(d)
        if src_d.is_zero() or tgt_d1.is_zero():
            continue
        # constraint f_{d+1} . dC_d - dD_d . f_d = 0, expanded over entries
        for v in q.vertices:
            for i in range(tgt_d1.dims[v]):
                for j in range(src_d.dims[v]):
                    row = [Fraction(0)] * total
                    if dc is not None and (d + 1) in offsets:
                        for b, g in enumerate(deg_bases[d + 1]):
                            comp = g.vertex_maps[v] @ dc.vertex_maps[v]
                            row[offsets[d + 1] + b] += comp.rows[i][j]
                    if dd is not None:
                        for b, g in enumerate(deg_bases[d]):
                            comp = dd.vertex_maps[v] @ g.vertex_maps[v]
                            row[offsets[d] + b] -= comp.rows[i][j]
                    if any(row):
                        rows.append(row)
    chain_dim = total - rank(Mat.from_rows(rows, total)) if rows else total

    # null-homotopic subspace: boundaries of module-map homotopies
    boundary_vectors: List[List[Fraction]] = []
    width = None
    for d in degrees:
        h_basis = hom_space(cx.component(d), dx.component(d - 1))
        for g in h_basis:
            blocks: Dict[int, ModuleMap] = {}
            dd = dx.differential(d - 1)
            if dd is not None:
                blocks[d] = dd.compose(g)
            dc = cx.differential(d - 1)
            if dc is not None and (d - 1) in offsets:
                piece = g.compose(dc)
                blocks[d - 1] = blocks[d - 1].add(piece) if (d - 1) in blocks else piece
            vec = _flatten_graded_map(cx, dx, blocks)
            width = len(vec)
            if any(vec):
                boundary_vectors.append(vec)
    if not boundary_vectors:
        return chain_dim, 0
    return chain_dim, row_span(boundary_vectors, width).m


def hom_homotopy_dim(cx: BoundedComplex, dx: BoundedComplex, shift: int = 0) -> int:
    """dim of (chain maps cx -> dx[shift]) modulo null-homotopic maps."""
    if cx.is_zero() or dx.is_zero():
        return 0
    shifted = dx.shift(shift)
    chain_dim, homotopy_rank = _chain_map_space_dims(cx, shifted)
    return chain_dim - homotopy_rank


def condition_b(t_cx: BoundedComplex, x_cx: BoundedComplex) -> bool:
    """X is not resolution-shaped and all maps T -> X[s] are null-homotopic.

    Only shifts in the overlap window need checking: outside it every
    chain map is zero on support grounds.
    """
    if x_cx.is_zero():
        raise ValueError("condition (b) expects a nonzero complex")
    if is_resolution_shape(x_cx):
        return False
    t_sup = t_cx.support()
    x_sup = x_cx.support()
    # X[s] is supported on supp(X) - s; it meets supp(T) exactly for
    # s in [min(x) - max(t), max(x) - min(t)], outside every map is zero.
    lo = min(x_sup) - max(t_sup)
    hi = max(x_sup) - min(t_sup)
    for s in range(lo, hi + 1):
        if hom_homotopy_dim(t_cx, x_cx, s) != 0:
            return False
    return True


def classify_elementary(
    t_cx: BoundedComplex, algebra
) -> List[Tuple[object, object, int]]:
    """Two-term complexes of indecomposable projectives passing condition (b).

    Enumerates 0 -> P(i) -> P(j) -> 0 over all ordered vertex pairs and a
    basis of Hom(P(i), P(j)); returns (i, j, hom-basis index) triples.
    """
    from .modules import projective

    out = []
    projs = {v: projective(algebra, v) for v in algebra.quiver.vertices}
    for i in algebra.quiver.vertices:
        for j in algebra.quiver.vertices:
            if i == j:
                continue
            basis = hom_space(projs[i], projs[j])
            for k, f in enumerate(basis):
                if f.is_zero():
                    continue
                cand = two_term(projs[i], projs[j], f)
                if condition_b(t_cx, cand):
                    out.append((i, j, k))
    return out
