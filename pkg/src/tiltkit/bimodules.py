"""Bimodules, the dualities Hom(-, U), reflexivity, and envelope extensions.

A bimodule is one rational space with commuting left and right actions,
stored as operator families on the total space together with a basis that
is homogeneous for both idempotent decompositions (the paper's picture
format).  Conventions:

* the left operator of an arrow ``a: v -> w`` maps left-block v into
  left-block w, and the operator of a left path composes in traversal
  order;
* the right operator of an arrow ``b: u -> w`` maps right-block w into
  right-block u, and the operator of a right path ``[b1, ..., bk]`` is
  ``rho(b1) . rho(b2) ... rho(bk)`` (the last arrow acts first), which is
  exactly the right action of the corresponding algebra element.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ActionsDontCommute, AmbiguousBasis, NotSplit, RelationViolated
from .linalg import Mat, hstack, inverse, nullspace, rank, row_span, solve_mat, span_contains
from .homological import (
    injective_envelope,
    is_essential_extension,
    projective_cover,
)
from .modules import (
    ModuleMap,
    Representation,
    hom_space,
    is_injective_module,
    is_isomorphic,
    map_to_vec,
    resolve_seed,
)
from .quiver import AlgebraMorphism, BoundQuiverAlgebra


class Bimodule:
    """An (S, R)-bimodule on a bigraded basis with explicit operators."""

    def __init__(
        self,
        left_algebra: BoundQuiverAlgebra,
        right_algebra: BoundQuiverAlgebra,
        left_labels: Sequence,
        right_labels: Sequence,
        left_ops: Dict[str, Mat],
        right_ops: Dict[str, Mat],
        check: bool = True,
    ):
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.left_labels = list(left_labels)
        self.right_labels = list(right_labels)
        self.dim = len(self.left_labels)
        self.left_ops = {
            a[0]: left_ops.get(a[0], Mat.zeros(self.dim, self.dim))
            for a in left_algebra.quiver.arrows
        }
        self.right_ops = {
            a[0]: right_ops.get(a[0], Mat.zeros(self.dim, self.dim))
            for a in right_algebra.quiver.arrows
        }
        if len(self.right_labels) != self.dim:
            raise AmbiguousBasis("label lists disagree in length")
        if check:
            self.validate()

    # -- validation ----------------------------------------------------------

    def validate(self) -> None:
        sq = self.left_algebra.quiver
        rq = self.right_algebra.quiver
        for i, v in enumerate(self.left_labels):
            if v not in sq.vertex_index:
                raise AmbiguousBasis("unknown left label %r" % (v,))
            if self.right_labels[i] not in rq.vertex_index:
                raise AmbiguousBasis("unknown right label %r" % (self.right_labels[i],))
        for name, v, w in sq.arrows:
            op = self.left_ops[name]
            for i in range(self.dim):
                for j in range(self.dim):
                    if op.rows[i][j] == 0:
                        continue
                    if self.left_labels[j] != v or self.left_labels[i] != w:
                        raise AmbiguousBasis(
                            "left operator %s breaks the left grading" % name
                        )
                    if self.right_labels[i] != self.right_labels[j]:
                        raise ActionsDontCommute(
                            "left operator %s moves right blocks" % name
                        )
        for name, u, w in rq.arrows:
            op = self.right_ops[name]
            for i in range(self.dim):
                for j in range(self.dim):
                    if op.rows[i][j] == 0:
                        continue
                    if self.right_labels[j] != w or self.right_labels[i] != u:
                        raise AmbiguousBasis(
                            "right operator %s breaks the right grading" % name
                        )
                    if self.left_labels[i] != self.left_labels[j]:
                        raise ActionsDontCommute(
                            "right operator %s moves left blocks" % name
                        )
        for lname in self.left_ops:
            for rname in self.right_ops:
                a, b = self.left_ops[lname], self.right_ops[rname]
                if a @ b != b @ a:
                    raise ActionsDontCommute(
                        "operators %s and %s do not commute" % (lname, rname)
                    )
        for rel in self.left_algebra.relations:
            acc = Mat.zeros(self.dim, self.dim)
            for c, p in rel.terms:
                acc = acc + self.left_path_op(p).scale(c)
            if not acc.is_zero():
                raise RelationViolated("left relation violated: %r" % (rel.terms,))
        for rel in self.right_algebra.relations:
            acc = Mat.zeros(self.dim, self.dim)
            for c, p in rel.terms:
                acc = acc + self.right_path_op(p).scale(c)
            if not acc.is_zero():
                raise RelationViolated("right relation violated: %r" % (rel.terms,))

    def left_path_op(self, path: Sequence[str]) -> Mat:
        m = Mat.identity(self.dim)
        for a in path:
            m = self.left_ops[a] @ m
        return m

    def right_path_op(self, path: Sequence[str]) -> Mat:
        m = Mat.identity(self.dim)
        for a in path:
            m = m @ self.right_ops[a]
        return m

    def left_idem_op(self, v) -> Mat:
        m = Mat.zeros(self.dim, self.dim)
        for i, lab in enumerate(self.left_labels):
            if lab == v:
                m.rows[i][i] = Fraction(1)
        return m

    def right_idem_op(self, w) -> Mat:
        m = Mat.zeros(self.dim, self.dim)
        for i, lab in enumerate(self.right_labels):
            if lab == w:
                m.rows[i][i] = Fraction(1)
        return m

    # -- restrictions and blocks ----------------------------------------------

    def _indices(self, left=None, right=None) -> List[int]:
        out = []
        for i in range(self.dim):
            if left is not None and self.left_labels[i] != left:
                continue
            if right is not None and self.right_labels[i] != right:
                continue
            out.append(i)
        return out

    def _slice(self, op: Mat, rows: List[int], cols: List[int]) -> Mat:
        return Mat(
            len(rows), len(cols), [[op.rows[i][j] for j in cols] for i in rows]
        )

    def left_restriction(self) -> Representation:
        """The underlying left S-module."""
        sq = self.left_algebra.quiver
        dims = {v: len(self._indices(left=v)) for v in sq.vertices}
        maps = {}
        for name, v, w in sq.arrows:
            maps[name] = self._slice(
                self.left_ops[name], self._indices(left=w), self._indices(left=v)
            )
        return Representation(self.left_algebra, dims, maps, check=False)

    def right_restriction(self) -> Representation:
        """The underlying right R-module, as a module over R^op."""
        ropp = self.right_algebra.opposite()
        rq = self.right_algebra.quiver
        dims = {w: len(self._indices(right=w)) for w in rq.vertices}
        maps = {}
        for name, u, w in rq.arrows:  # acts right-block w -> right-block u
            maps[name] = self._slice(
                self.right_ops[name], self._indices(right=u), self._indices(right=w)
            )
        return Representation(ropp, dims, maps, check=False)

    def right_block(self, w) -> Tuple[Representation, List[int]]:
        """U e_w with its left S-structure, plus the global indices used."""
        sq = self.left_algebra.quiver
        idx = {v: self._indices(left=v, right=w) for v in sq.vertices}
        dims = {v: len(idx[v]) for v in sq.vertices}
        maps = {}
        for name, v, v2 in sq.arrows:
            maps[name] = self._slice(self.left_ops[name], idx[v2], idx[v])
        flat = [i for v in sq.vertices for i in idx[v]]
        return Representation(self.left_algebra, dims, maps, check=False), flat

    def left_block(self, v) -> Tuple[Representation, List[int]]:
        """e_v U with its right R-structure (over R^op), plus global indices."""
        ropp = self.right_algebra.opposite()
        rq = self.right_algebra.quiver
        idx = {w: self._indices(left=v, right=w) for w in rq.vertices}
        dims = {w: len(idx[w]) for w in rq.vertices}
        maps = {}
        for name, u, w in rq.arrows:
            maps[name] = self._slice(self.right_ops[name], idx[u], idx[w])
        flat = [i for w in rq.vertices for i in idx[w]]
        return Representation(ropp, dims, maps, check=False), flat

    def flip(self) -> "Bimodule":
        """The same space as an (R^op, S^op)-bimodule; swaps the two sides."""
        return Bimodule(
            self.right_algebra.opposite(),
            self.left_algebra.opposite(),
            self.right_labels,
            self.left_labels,
            self.right_ops,
            self.left_ops,
            check=False,
        )


def make_bimodule(
    left_algebra,
    right_algebra,
    left_labels,
    right_labels,
    left_ops,
    right_ops,
) -> Bimodule:
    """Validated construction from picture-style data."""
    return Bimodule(
        left_algebra, right_algebra, left_labels, right_labels, left_ops, right_ops
    )


def regular_bimodule(algebra: BoundQuiverAlgebra) -> Bimodule:
    """The regular bimodule: the algebra acting on itself on both sides."""
    n = algebra.dimension
    left_labels = [algebra.path_target(p) for p in algebra.basis]
    right_labels = [algebra.path_source(p) for p in algebra.basis]
    left_ops = {}
    for name, v, w in algebra.quiver.arrows:
        m = Mat.zeros(n, n)
        for j, p in enumerate(algebra.basis):
            raw = algebra.concat(p, (algebra.path_target(p), (name,)))
            if raw is None:
                continue
            for c, q in algebra.reduce_path(raw):
                m.rows[algebra.basis_index[q]][j] += c
        left_ops[name] = m
    right_ops = {}
    for name, v, w in algebra.quiver.arrows:
        m = Mat.zeros(n, n)
        for j, p in enumerate(algebra.basis):
            raw = algebra.concat((v, (name,)), p)
            if raw is None:
                continue
            for c, q in algebra.reduce_path(raw):
                m.rows[algebra.basis_index[q]][j] += c
        right_ops[name] = m
    return Bimodule(
        algebra, algebra, left_labels, right_labels, left_ops, right_ops
    )


# -- the duality functors -----------------------------------------------------


def _express_in_basis(basis: List[ModuleMap], f: ModuleMap) -> Optional[List[Fraction]]:
    if not basis:
        return None if not f.is_zero() else []
    vecs = [map_to_vec(g) for g in basis]
    bmat = Mat.from_rows(vecs, len(vecs[0])).transpose()
    sol = solve_mat(bmat, Mat.column(map_to_vec(f)))
    if sol is None:
        return None
    return [sol.rows[k][0] for k in range(len(basis))]


class _DualData:
    """A dual module together with the hom bases that realize it."""

    def __init__(self, rep: Representation, bases: Dict, blocks: Dict):
        self.rep = rep
        self.bases = bases  # vertex -> list of ModuleMap into the block rep
        self.blocks = blocks  # vertex -> (block rep, flat indices)


def _delta_left_data(u: Bimodule, m: Representation) -> _DualData:
    ropp = u.right_algebra.opposite()
    rq = u.right_algebra.quiver
    blocks = {w: u.right_block(w) for w in rq.vertices}
    bases = {w: hom_space(m, blocks[w][0]) for w in rq.vertices}
    dims = {w: len(bases[w]) for w in rq.vertices}
    maps = {}
    for name, uu, w in rq.arrows:
        # in R^op the arrow runs w -> u; postcompose with the right operator
        blk_w, flat_w = blocks[w]
        blk_u, flat_u = blocks[uu]
        # right operator as an S-module map block_w -> block_u
        op_mats = {}
        for v in u.left_algebra.quiver.vertices:
            rows = [i for i in flat_u if u.left_labels[i] == v]
            cols = [j for j in flat_w if u.left_labels[j] == v]
            op_mats[v] = u._slice(u.right_ops[name], rows, cols)
        op = ModuleMap(blk_w, blk_u, op_mats, check=False)
        mat = Mat.zeros(dims[uu], dims[w])
        for j, f in enumerate(bases[w]):
            coords = _express_in_basis(bases[uu], op.compose(f))
            if coords is None:
                raise ValueError("delta arrow action escaped the hom basis")
            for i, c in enumerate(coords):
                mat.rows[i][j] = c
        maps[name] = mat
    rep = Representation(ropp, dims, maps, check=False)
    return _DualData(rep, bases, blocks)


def delta_left(u: Bimodule, m: Representation) -> Representation:
    """Hom_S(M, U) with its right R-structure, as a module over R^op."""
    return _delta_left_data(u, m).rep


def _delta_right_data(u: Bimodule, n: Representation) -> _DualData:
    salg = u.left_algebra
    sq = salg.quiver
    blocks = {v: u.left_block(v) for v in sq.vertices}
    bases = {v: hom_space(n, blocks[v][0]) for v in sq.vertices}
    dims = {v: len(bases[v]) for v in sq.vertices}
    maps = {}
    for name, v, v2 in sq.arrows:
        blk_v, flat_v = blocks[v]
        blk_v2, flat_v2 = blocks[v2]
        op_mats = {}
        for w in u.right_algebra.quiver.vertices:
            rows = [i for i in flat_v2 if u.right_labels[i] == w]
            cols = [j for j in flat_v if u.right_labels[j] == w]
            op_mats[w] = u._slice(u.left_ops[name], rows, cols)
        op = ModuleMap(blk_v, blk_v2, op_mats, check=False)
        mat = Mat.zeros(dims[v2], dims[v])
        for j, f in enumerate(bases[v]):
            coords = _express_in_basis(bases[v2], op.compose(f))
            if coords is None:
                raise ValueError("delta arrow action escaped the hom basis")
            for i, c in enumerate(coords):
                mat.rows[i][j] = c
        maps[name] = mat
    rep = Representation(salg, dims, maps, check=False)
    return _DualData(rep, bases, blocks)


def delta_right(u: Bimodule, n: Representation) -> Representation:
    """Hom over the right side back into left S-modules."""
    return _delta_right_data(u, n).rep


def hom_from_bimodule(u: Bimodule, x: Representation) -> Representation:
    """Hom_S(U, X) as a left module over the right algebra R.

    This is the covariant tilting-equivalence functor; the component at a
    vertex y is Hom_S(U e_y, X).
    """
    ralg = u.right_algebra
    rq = ralg.quiver
    blocks = {y: u.right_block(y) for y in rq.vertices}
    bases = {y: hom_space(blocks[y][0], x) for y in rq.vertices}
    dims = {y: len(bases[y]) for y in rq.vertices}
    maps = {}
    for name, y, y2 in rq.arrows:
        # arrow y -> y2 acts comp_y -> comp_{y2} by precomposition with the
        # right operator block_{y2} -> block_y
        blk_y, flat_y = blocks[y]
        blk_y2, flat_y2 = blocks[y2]
        op_mats = {}
        for v in u.left_algebra.quiver.vertices:
            rows = [i for i in flat_y if u.left_labels[i] == v]
            cols = [j for j in flat_y2 if u.left_labels[j] == v]
            op_mats[v] = u._slice(u.right_ops[name], rows, cols)
        op = ModuleMap(blk_y2, blk_y, op_mats, check=False)
        mat = Mat.zeros(dims[y2], dims[y])
        for j, f in enumerate(bases[y]):
            coords = _express_in_basis(bases[y2], f.compose(op))
            if coords is None:
                raise ValueError("equivalence arrow action escaped the hom basis")
            for i, c in enumerate(coords):
                mat.rows[i][j] = c
        maps[name] = mat
    return Representation(ralg, dims, maps, check=False)


class EvaluationReport:
    def __init__(self, module, dual, double_dual, ev_maps, is_reflexive):
        self.module = module
        self.dual_dim_vector = dual.dim_vector()
        self.double_dual_dim_vector = double_dual.dim_vector()
        self.dual = dual
        self.double_dual = double_dual
        self.ev_maps = ev_maps
        self.is_reflexive = is_reflexive


def reflexivity(u: Bimodule, m: Representation, side: str = "left") -> EvaluationReport:
    """Build the evaluation map into the double dual and test bijectivity."""
    if side == "right":
        return reflexivity(u.flip(), m, "left")
    if m.is_zero():
        z = _delta_left_data(u, m).rep
        return EvaluationReport(m, z, m, {}, True)
    d1 = _delta_left_data(u, m)
    d2 = _delta_right_data(u, d1.rep)
    sq = u.left_algebra.quiver
    ev_maps = {}
    bijective = True
    for v in sq.vertices:
        blk_v, flat_v = d2.blocks[v]
        target_basis = d2.bases[v]
        mat = Mat.zeros(len(target_basis), m.dims[v])
        for col in range(m.dims[v]):
            # ev(x): Delta(M) -> e_v U, f |-> f(x)
            blocks_of_ev = {}
            for w in u.right_algebra.quiver.vertices:
                rows = [i for i in flat_v if u.right_labels[i] == w]
                emat = Mat.zeros(len(rows), len(d1.bases[w]))
                for b, f in enumerate(d1.bases[w]):
                    # f maps m into block_w; read off the v-part of f(x)
                    vec = f.vertex_maps[v].col(col)
                    blk_w, flat_w = d1.blocks[w]
                    vw_indices = [i for i in flat_w if u.left_labels[i] == v]
                    # positions of (v, w)-indices inside both orderings agree
                    for r, i_global in enumerate(rows):
                        pos = vw_indices.index(i_global)
                        emat.rows[r][b] = vec[pos]
                blocks_of_ev[w] = emat
            ev_x = ModuleMap(d1.rep, blk_v, blocks_of_ev, check=False)
            coords = _express_in_basis(target_basis, ev_x)
            if coords is None:
                raise ValueError("evaluation escaped the double-dual basis")
            for i, c in enumerate(coords):
                mat.rows[i][col] = c
        ev_maps[v] = mat
        if not (mat.m == mat.n and rank(mat) == mat.n):
            bijective = False
    return EvaluationReport(m, d1.rep, d2.rep, ev_maps, bijective)


def count_reflexive(
    u: Bimodule, universe: Sequence[Representation], side: str = "left"
) -> Tuple[int, List[int]]:
    hits = [
        i for i, m in enumerate(universe) if reflexivity(u, m, side).is_reflexive
    ]
    return len(hits), hits


# -- balance ------------------------------------------------------------------


def _graded_commutant_dim(
    ops: List[Mat], labels: Sequence, dim: int
) -> int:
    """dim of {F : F block-diagonal for labels, F commutes with all ops}."""
    pairs = [
        (i, j) for i in range(dim) for j in range(dim) if labels[i] == labels[j]
    ]
    index = {p: k for k, p in enumerate(pairs)}
    rows = []
    for op in ops:
        for i in range(dim):
            for j in range(dim):
                row = [Fraction(0)] * len(pairs)
                # (F op - op F)[i][j]
                for k in range(dim):
                    if op.rows[k][j] and (i, k) in index:
                        row[index[(i, k)]] += op.rows[k][j]
                    if op.rows[i][k] and (k, j) in index:
                        row[index[(k, j)]] -= op.rows[i][k]
                if any(row):
                    rows.append(row)
    if not rows:
        return len(pairs)
    return len(pairs) - rank(Mat.from_rows(rows, len(pairs)))


def faithfully_balanced(u: Bimodule) -> bool:
    """Both algebras must map isomorphically onto the opposite commutants."""
    # S -> End(U as right R-module): right-block-diagonal commutant
    right_comm_dim = _graded_commutant_dim(
        list(u.right_ops.values()), u.right_labels, u.dim
    )
    s_images = []
    for p in u.left_algebra.basis:
        src, arrows = p
        mat = u.left_path_op(arrows) if arrows else u.left_idem_op(src)
        s_images.append([x for row in mat.rows for x in row])
    s_rank = row_span(s_images, u.dim * u.dim).m
    if not (s_rank == u.left_algebra.dimension == right_comm_dim):
        return False
    left_comm_dim = _graded_commutant_dim(
        list(u.left_ops.values()), u.left_labels, u.dim
    )
    r_images = []
    for p in u.right_algebra.basis:
        src, arrows = p
        mat = u.right_path_op(arrows) if arrows else u.right_idem_op(src)
        r_images.append([x for row in mat.rows for x in row])
    r_rank = row_span(r_images, u.dim * u.dim).m
    return r_rank == u.right_algebra.dimension == left_comm_dim


# -- bimodule maps -------------------------------------------------------------


def bimodule_hom_space(c: Bimodule, d: Bimodule) -> List[Mat]:
    """Basis of bimodule maps c -> d as total-space matrices."""
    if c.left_algebra is not d.left_algebra or c.right_algebra is not d.right_algebra:
        raise ValueError("bimodule hom needs matching algebras")
    pairs = [
        (i, j)
        for i in range(d.dim)
        for j in range(c.dim)
        if d.left_labels[i] == c.left_labels[j]
        and d.right_labels[i] == c.right_labels[j]
    ]
    index = {p: k for k, p in enumerate(pairs)}
    rows = []
    ops = [(c.left_ops[a], d.left_ops[a]) for a in c.left_ops] + [
        (c.right_ops[a], d.right_ops[a]) for a in c.right_ops
    ]
    for cop, dop in ops:
        for i in range(d.dim):
            for j in range(c.dim):
                row = [Fraction(0)] * len(pairs)
                for k in range(c.dim):
                    if cop.rows[k][j] and (i, k) in index:
                        row[index[(i, k)]] += cop.rows[k][j]
                for k in range(d.dim):
                    if dop.rows[i][k] and (k, j) in index:
                        row[index[(k, j)]] -= dop.rows[i][k]
                if any(row):
                    rows.append(row)
    vecs = (
        nullspace(Mat.from_rows(rows, len(pairs)))
        if rows
        else [
            [Fraction(1) if t == s else Fraction(0) for t in range(len(pairs))]
            for s in range(len(pairs))
        ]
    )
    out = []
    for vec in vecs:
        m = Mat.zeros(d.dim, c.dim)
        for (i, j), k in index.items():
            m.rows[i][j] = vec[k]
        out.append(m)
    return out


def find_injective_bimodule_map(
    c: Bimodule, d: Bimodule, seed: Optional[int] = None
) -> Optional[Mat]:
    basis = bimodule_hom_space(c, d)
    if not basis:
        return None
    for f in basis:
        if rank(f) == c.dim:
            return f
    rng = random.Random(resolve_seed(seed))
    for _ in range(32):
        f = Mat.zeros(d.dim, c.dim)
        for g in basis:
            f = f + g.scale(Fraction(rng.randint(-3, 3)))
        if rank(f) == c.dim:
            return f
    return None


def _restriction_mono(c: Bimodule, d: Bimodule, f: Mat, side: str) -> ModuleMap:
    """View a bimodule embedding as a map of side restrictions."""
    if side == "left":
        crep = c.left_restriction()
        drep = d.left_restriction()
        cidx = {v: c._indices(left=v) for v in c.left_algebra.quiver.vertices}
        didx = {v: d._indices(left=v) for v in d.left_algebra.quiver.vertices}
        verts = c.left_algebra.quiver.vertices
    else:
        crep = c.right_restriction()
        drep = d.right_restriction()
        cidx = {w: c._indices(right=w) for w in c.right_algebra.quiver.vertices}
        didx = {w: d._indices(right=w) for w in d.right_algebra.quiver.vertices}
        verts = c.right_algebra.quiver.vertices
    mats = {}
    for v in verts:
        mats[v] = Mat(
            len(didx[v]),
            len(cidx[v]),
            [[f.rows[i][j] for j in cidx[v]] for i in didx[v]],
        )
    return ModuleMap(crep, drep, mats, check=False)


def extension_verify(
    u_big: Bimodule, c: Bimodule, side: str, seed: Optional[int] = None
) -> Dict:
    """Does c embed in u_big with the chosen side an injective envelope?"""
    report: Dict = {"side": side}
    f = find_injective_bimodule_map(c, u_big, seed=seed)
    report["embeds"] = f is not None
    if f is None:
        report["holds"] = False
        return report
    mono = _restriction_mono(c, u_big, f, side)
    big_restr = mono.target
    report["restriction_injective"] = is_injective_module(big_restr)
    report["essential"] = is_essential_extension(mono)
    report["holds"] = report["restriction_injective"] and report["essential"]
    return report


# -- the extension problem ------------------------------------------------------


class _Poly:
    """Tiny multivariate polynomial: monomial tuple -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Tuple[int, ...], Fraction]] = None):
        self.terms = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    self.terms[mono] = coeff

    @classmethod
    def const(cls, c) -> "_Poly":
        return cls({(): Fraction(c)}) if c else cls()

    @classmethod
    def var(cls, k: int) -> "_Poly":
        return cls({(k,): Fraction(1)})

    def add(self, other: "_Poly") -> "_Poly":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return _Poly(out)

    def scale(self, c) -> "_Poly":
        c = Fraction(c)
        return _Poly({m: c * v for m, v in self.terms.items()})

    def mul(self, other: "_Poly") -> "_Poly":
        out: Dict[Tuple[int, ...], Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(sorted(m1 + m2))
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return _Poly(out)

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def substitute(self, var: int, value: "_Poly") -> "_Poly":
        out = _Poly()
        for mono, c in self.terms.items():
            piece = _Poly({(): c})
            for k in mono:
                piece = piece.mul(value) if k == var else piece.mul(_Poly.var(k))
            out = out.add(piece)
        return out

    def linear_parts(self):
        """(constant, {var: coeff}) when degree <= 1, else None."""
        if self.degree() > 1:
            return None
        const = self.terms.get((), Fraction(0))
        lin = {m[0]: c for m, c in self.terms.items() if m}
        return const, lin


class ExtensionOutcome:
    def __init__(self, status: str, witness: Optional[Bimodule] = None, detail=None):
        self.status = status  # EXISTS | NOT_EXISTS | UNKNOWN
        self.witness = witness
        self.detail = detail

    def __repr__(self):
        return "ExtensionOutcome(%s)" % self.status


def extension_solve(c: Bimodule, side: str, seed: Optional[int] = None) -> ExtensionOutcome:
    """Try to put an opposite-side structure on the side injective envelope.

    Linear constraints (commutation with the known side, restriction to c,
    idempotent completeness) are propagated by elimination; idempotent
    orthogonality, arrow grading and relation constraints that stay
    genuinely polynomial leave the outcome UNKNOWN unless they reduce to a
    contradiction.
    """
    if side == "right":
        out = extension_solve(c.flip(), "left", seed=seed)
        if out.witness is not None:
            out = ExtensionOutcome(out.status, out.witness.flip(), out.detail)
        return out
    restr = c.left_restriction()
    env, mono = injective_envelope(restr)
    if env.total_dim() == restr.total_dim():
        return ExtensionOutcome("EXISTS", c, "already side-injective")
    salg, ralg = c.left_algebra, c.right_algebra
    sq, rq = salg.quiver, ralg.quiver

    # coordinates: per S-vertex, env_v splits into iota(c)-part + complement
    comp_units = []  # (vertex, unit vector) complement basis
    basis_change = {}  # vertex -> inverse of [iota | complement units]
    comp_cols = {}
    for v in sq.vertices:
        span = row_span(
            [mono.vertex_maps[v].col(j) for j in range(mono.vertex_maps[v].n)],
            env.dims[v],
        )
        from .linalg import complement_coords

        free = complement_coords(span)
        comp_cols[v] = free
        cols = [mono.vertex_maps[v].col(j) for j in range(mono.vertex_maps[v].n)]
        for j in free:
            unit = [Fraction(0)] * env.dims[v]
            unit[j] = Fraction(1)
            cols.append(unit)
            comp_units.append((v, j))
        full = Mat(env.dims[v], env.dims[v], [list(col) for col in zip(*cols)]) if cols else Mat.zeros(0, 0)
        inv = inverse(full) if env.dims[v] else Mat.zeros(0, 0)
        if env.dims[v] and inv is None:
            return ExtensionOutcome("UNKNOWN", detail="envelope basis degenerate")
        basis_change[v] = inv

    generators = [("e", w) for w in rq.vertices] + [
        ("a", name) for name, _, _ in rq.arrows
    ]
    # variable layout: for each generator, for each complement unit, a vector in env at that unit's vertex
    var_index = {}
    counter = 0
    for g in generators:
        for k, (v, j) in enumerate(comp_units):
            for t in range(env.dims[v]):
                var_index[(g, k, t)] = counter
                counter += 1

    c_right_action = {}
    for w in rq.vertices:
        c_right_action[("e", w)] = c.right_idem_op(w)
    for name, _, _ in rq.arrows:
        c_right_action[("a", name)] = c.right_ops[name]

    cidx = {v: c._indices(left=v) for v in sq.vertices}

    def known_image(gen, cvec: List[Fraction], v) -> List[Fraction]:
        """iota(c . gen) for a c-restriction vector at vertex v."""
        # lift c-restriction coordinates at v to global c coordinates
        glob = [Fraction(0)] * c.dim
        for pos, i in enumerate(cidx[v]):
            glob[i] = cvec[pos]
        acted = c_right_action[gen].apply(glob)
        out = [Fraction(0)] * env.dims[v]
        # the action preserves the left grading, so it stays at vertex v
        local = [acted[i] for i in cidx[v]]
        img = mono.vertex_maps[v].apply(local)
        return img

    def apply_gen(gen, vec: List[_Poly], v) -> List[_Poly]:
        """Apply the unknown operator of ``gen`` to a polynomial vector."""
        n_v = env.dims[v]
        inv = basis_change[v]
        c_dim = mono.vertex_maps[v].n
        out = [_Poly() for _ in range(n_v)]
        # coordinates in the adapted basis
        for col in range(n_v):
            coord = _Poly()
            for t in range(n_v):
                if inv.rows[col][t]:
                    coord = coord.add(vec[t].scale(inv.rows[col][t]))
            if coord.is_zero():
                continue
            if col < c_dim:
                cunit = [Fraction(0)] * c_dim
                cunit[col] = Fraction(1)
                img = known_image(gen, cunit, v)
                for t in range(n_v):
                    if img[t]:
                        out[t] = out[t].add(coord.scale(img[t]))
            else:
                j = comp_cols[v][col - c_dim]
                k = comp_units.index((v, j))
                for t in range(n_v):
                    var = _Poly.var(var_index[(gen, k, t)])
                    out[t] = out[t].add(coord.mul(var))
        return out

    def unit_vector(v, j) -> List[_Poly]:
        return [
            _Poly.const(1 if t == j else 0) for t in range(env.dims[v])
        ]

    constraints: List[_Poly] = []

    def require_zero(vec: List[_Poly]):
        for p in vec:
            if not p.is_zero():
                constraints.append(p)

    def vec_sub(a, b):
        return [x.add(y.scale(-1)) for x, y in zip(a, b)]

    for k, (v, j) in enumerate(comp_units):
        unit = unit_vector(v, j)
        # completeness: sum of idempotent actions is the identity
        total = [_Poly() for _ in range(env.dims[v])]
        for w in rq.vertices:
            img = apply_gen(("e", w), unit, v)
            total = [a.add(b) for a, b in zip(total, img)]
        require_zero(vec_sub(total, unit))
        # orthogonal idempotency: (t.e_w).e_u = delta t.e_w
        for w in rq.vertices:
            ew = apply_gen(("e", w), unit, v)
            for uu in rq.vertices:
                lhs = apply_gen(("e", uu), ew, v)
                rhs = ew if uu == w else [_Poly() for _ in ew]
                require_zero(vec_sub(lhs, rhs))
        # arrow sector: t.b = ((t.e_w).b).e_u for b: u -> w
        for name, uu, w in rq.arrows:
            direct = apply_gen(("a", name), unit, v)
            staged = apply_gen(
                ("e", uu), apply_gen(("a", name), apply_gen(("e", w), unit, v), v), v
            )
            require_zero(vec_sub(direct, staged))
        # relations of R
        for rel in ralg.relations:
            acc = [_Poly() for _ in range(env.dims[v])]
            for coeff, path in rel.terms:
                cur = unit
                for a in reversed(path):
                    cur = apply_gen(("a", a), cur, v)
                acc = [x.add(y.scale(coeff)) for x, y in zip(acc, cur)]
            require_zero(acc)
    # commutation with the left action on complement units
    for k, (v, j) in enumerate(comp_units):
        unit = unit_vector(v, j)
        for name, vv, v2 in sq.arrows:
            if vv != v:
                continue
            lam = env.maps[name]
            moved = [
                _Poly.const(lam.rows[t][j]) for t in range(env.dims[v2])
            ]
            for gen in generators:
                lhs = apply_gen(gen, moved, v2)
                img = apply_gen(gen, unit, v)
                rhs = [
                    _Poly()
                    for _ in range(env.dims[v2])
                ]
                for t in range(env.dims[v2]):
                    acc = _Poly()
                    for s in range(env.dims[v]):
                        if lam.rows[t][s]:
                            acc = acc.add(img[s].scale(lam.rows[t][s]))
                    rhs[t] = acc
                require_zero(vec_sub(lhs, rhs))

    assignment, status = _eliminate(constraints, counter)
    if status == "NOT_EXISTS":
        return ExtensionOutcome("NOT_EXISTS", detail="inconsistent linear system")
    if status == "UNKNOWN":
        return ExtensionOutcome("UNKNOWN", detail="irreducibly polynomial constraints")

    # build the witness operators on env
    def op_matrix(gen) -> Mat:
        m = Mat.zeros(env.total_dim(), env.total_dim())
        offsets = {}
        off = 0
        for v in sq.vertices:
            offsets[v] = off
            off += env.dims[v]
        # assemble per-vertex via the adapted basis (image part known, the
        # complement part carries the solved values)
        for v in sq.vertices:
            n_v = env.dims[v]
            c_dim = mono.vertex_maps[v].n
            cols = []
            srcs = []
            for col in range(n_v):
                if col < c_dim:
                    cunit = [Fraction(0)] * c_dim
                    cunit[col] = Fraction(1)
                    cols.append(known_image(gen, cunit, v))
                    srcs.append(mono.vertex_maps[v].col(col))
                else:
                    j = comp_cols[v][col - c_dim]
                    k = comp_units.index((v, j))
                    cols.append(
                        [
                            assignment.get(var_index[(gen, k, t)], Fraction(0))
                            for t in range(n_v)
                        ]
                    )
                    unit = [Fraction(0)] * n_v
                    unit[j] = Fraction(1)
                    srcs.append(unit)
            if n_v == 0:
                continue
            smat = Mat(n_v, n_v, [list(r) for r in zip(*srcs)])
            imat = Mat(n_v, n_v, [list(r) for r in zip(*cols)])
            sinv = inverse(smat)
            if sinv is None:
                return Mat.zeros(env.total_dim(), env.total_dim())
            local = imat @ sinv
            for i in range(n_v):
                for jj in range(n_v):
                    m.rows[offsets[v] + i][offsets[v] + jj] = local.rows[i][jj]
        return m

    idem_ops = {w: op_matrix(("e", w)) for w in rq.vertices}
    arrow_ops = {name: op_matrix(("a", name)) for name, _, _ in rq.arrows}
    witness = _assemble_witness(c, env, mono, idem_ops, arrow_ops)
    if witness is None:
        return ExtensionOutcome("UNKNOWN", detail="witness assembly failed")
    check = extension_verify(witness, c, "left", seed=seed)
    if not check.get("holds"):
        return ExtensionOutcome("UNKNOWN", detail="witness failed verification")
    return ExtensionOutcome("EXISTS", witness)


def _eliminate(constraints: List[_Poly], nvars: int):
    """Linear propagation; returns (assignment, EXISTS|NOT_EXISTS|UNKNOWN)."""
    work = [p for p in constraints if not p.is_zero()]
    substitutions: List[Tuple[int, _Poly]] = []
    while True:
        lin = None
        for p in work:
            parts = p.linear_parts()
            if parts is not None:
                lin = (p, parts)
                break
        if lin is None:
            break
        p, (const, coeffs) = lin
        work.remove(p)
        if not coeffs:
            if const != 0:
                return {}, "NOT_EXISTS"
            continue
        var = min(coeffs)
        coeff = coeffs[var]
        # var = -(const + sum other terms)/coeff
        rest = _Poly({(): -const / coeff})
        for v2, c2 in coeffs.items():
            if v2 != var:
                rest = rest.add(_Poly({(v2,): -c2 / coeff}))
        substitutions.append((var, rest))
        work = [q.substitute(var, rest) for q in work]
        work = [q for q in work if not q.is_zero()]
    if work:
        for q in work:
            parts = q.linear_parts()
            if parts is not None and not parts[1] and parts[0] != 0:
                return {}, "NOT_EXISTS"
        return {}, "UNKNOWN"
    assignment: Dict[int, Fraction] = {}
    for var, expr in reversed(substitutions):
        val = Fraction(0)
        for mono, coeff in expr.terms.items():
            term = coeff
            for k in mono:
                term *= assignment.get(k, Fraction(0))
            val += term
        assignment[var] = val
    return assignment, "EXISTS"


def _assemble_witness(c, env, mono, idem_ops, arrow_ops) -> Optional[Bimodule]:
    """Rotate env onto a bigraded basis and build the bimodule."""
    salg, ralg = c.left_algebra, c.right_algebra
    sq = salg.quiver
    rq = ralg.quiver
    total = env.total_dim()
    offsets = {}
    off = 0
    for v in sq.vertices:
        offsets[v] = off
        off += env.dims[v]
    left_labels_flat = []
    for v in sq.vertices:
        left_labels_flat.extend([v] * env.dims[v])
    # new basis: per left vertex, per right idempotent, a basis of its image
    new_cols = []
    left_labels = []
    right_labels = []
    for v in sq.vertices:
        for w in rq.vertices:
            op = idem_ops[w]
            cols = []
            for j in range(env.dims[v]):
                gj = offsets[v] + j
                col = [op.rows[i][gj] for i in range(total)]
                cols.append(col)
            span = row_span(cols, total)
            for r in range(span.m):
                new_cols.append(list(span.rows[r]))
                left_labels.append(v)
                right_labels.append(w)
    if len(new_cols) != total:
        return None
    p = Mat(total, total, [list(r) for r in zip(*new_cols)])
    pinv = inverse(p)
    if pinv is None:
        return None
    # transform: left ops of env in global coordinates
    env_left = {}
    for name, v, w in sq.arrows:
        m = Mat.zeros(total, total)
        mat = env.maps[name]
        for i in range(mat.m):
            for j in range(mat.n):
                m.rows[offsets[w] + i][offsets[v] + j] = mat.rows[i][j]
        env_left[name] = pinv @ m @ p
    new_right = {name: pinv @ op @ p for name, op in arrow_ops.items()}
    try:
        witness = Bimodule(
            salg, ralg, left_labels, right_labels, env_left, new_right
        )
    except Exception:
        return None
    return witness


# -- the good / bad case checkers ----------------------------------------------


def check_good_case(d: Bimodule, c: Bimodule, seed: Optional[int] = None) -> Dict:
    """Conditions (1)-(3) for good-case envelope extensions."""
    report: Dict = {}
    report["right_hereditary"] = d.right_algebra.is_hereditary()
    f = find_injective_bimodule_map(c, d, seed=seed)
    if f is None:
        report["holds"] = False
        report["embeds"] = False
        return report
    report["embeds"] = True
    # (2): for each right vertex w and each indecomposable left summand X of
    # C e_w, the envelope of X embeds inside D e_w.
    from .modules import decompose_with_maps

    cond2 = True
    d_left = d.left_restriction()
    for w in c.right_algebra.quiver.vertices:
        cblk, cflat = c.right_block(w)
        if cblk.is_zero():
            continue
        dblk, dflat = d.right_block(w)
        # inclusion of the c-block into the d-block through f
        mats = {}
        for v in c.left_algebra.quiver.vertices:
            rows = [i for i in dflat if d.left_labels[i] == v]
            cols = [j for j in cflat if c.left_labels[j] == v]
            mats[v] = Mat(
                len(rows), len(cols), [[f.rows[i][j] for j in cols] for i in rows]
            )
        blk_incl = ModuleMap(cblk, dblk, mats, check=False)
        for x, x_incl, _ in decompose_with_maps(cblk, seed=seed):
            env_x, mono_x = injective_envelope(x)
            into_d = blk_incl.compose(x_incl)
            if _solve_through(mono_x, into_d) is None:
                cond2 = False
    report["idempotents_extend"] = cond2
    # (3): the shift condition over designated basis vectors
    img_span = row_span([f.col(j) for j in range(f.n)], d.dim)
    c_vectors = [f.col(j) for j in range(f.n)]
    outside = [
        i
        for i in range(d.dim)
        if not span_contains(
            img_span, [Fraction(1) if t == i else Fraction(0) for t in range(d.dim)]
        )
    ]
    cond3 = True
    for i in outside:
        x_vec = [Fraction(1) if t == i else Fraction(0) for t in range(d.dim)]
        for sname, sop in d.left_ops.items():
            sx = sop.apply(x_vec)
            for v_idx, v_vec in enumerate(c_vectors):
                if sx != v_vec:
                    continue
                for w_idx, w_vec in enumerate(c_vectors):
                    sw = sop.apply(w_vec)
                    for rname, rop in d.right_ops.items():
                        vr = rop.apply(v_vec)
                        if vr == sw and any(x != 0 for x in vr):
                            # premises hold with u = vr; conclude x.r = w
                            if rop.apply(x_vec) != w_vec:
                                cond3 = False
    report["shift_condition"] = cond3
    report["holds"] = report["right_hereditary"] and cond2 and cond3
    return report


def _solve_through(mono: ModuleMap, target_map: ModuleMap) -> Optional[ModuleMap]:
    """A map psi with psi . mono = target_map, if one exists."""
    e = mono.target
    t = target_map.target
    basis = hom_space(e, t)
    if not basis:
        return None if not target_map.is_zero() else target_map
    cols = []
    for g in basis:
        cols.append(map_to_vec(g.compose(mono)))
    amat = Mat.from_rows(cols, len(cols[0])).transpose()
    b = Mat.column(map_to_vec(target_map))
    sol = solve_mat(amat, b)
    if sol is None:
        return None
    psi = None
    for k, g in enumerate(basis):
        term = g.scale(sol.rows[k][0])
        psi = term if psi is None else psi.add(term)
    return psi


def check_bad_case(
    c: Bimodule,
    r_star: BoundQuiverAlgebra,
    f_morphism: AlgebraMorphism,
    u: Bimodule,
    seed: Optional[int] = None,
) -> Dict:
    """Conditions (1)-(2) for bad-case envelope extensions over R*."""
    from .quiver import check_ring_epimorphism

    report: Dict = {}
    report["right_not_hereditary"] = not c.right_algebra.is_hereditary()
    is_epi, ker_dim = check_ring_epimorphism(f_morphism)
    report["ring_epi"] = is_epi
    report["kernel_dimension"] = ker_dim
    c_star = pullback_bimodule(c, f_morphism, r_star)
    emb = find_injective_bimodule_map(c_star, u, seed=seed)
    report["contains_c"] = emb is not None
    if emb is None:
        report["holds"] = False
        return report
    mono = _restriction_mono(c_star, u, emb, "left")
    report["left_is_envelope"] = is_injective_module(
        mono.target
    ) and is_essential_extension(mono)
    report["holds"] = (
        report["right_not_hereditary"]
        and is_epi
        and report["contains_c"]
        and report["left_is_envelope"]
    )
    return report


def pullback_bimodule(
    c: Bimodule, f_morphism: AlgebraMorphism, r_star: BoundQuiverAlgebra
) -> Bimodule:
    """Regard an (S, R)-bimodule as an (S, R*)-bimodule along F: R* -> R."""
    right_ops = {}
    for name, uu, w in r_star.quiver.arrows:
        acc = Mat.zeros(c.dim, c.dim)
        for coeff, path in f_morphism.arrow_map[name]:
            acc = acc + c.right_path_op(path).scale(coeff)
        right_ops[name] = acc
    return Bimodule(
        c.left_algebra,
        r_star,
        c.left_labels,
        [f_inverse_vertex(f_morphism, w) for w in c.right_labels],
        c.left_ops,
        right_ops,
    )


def f_inverse_vertex(f_morphism: AlgebraMorphism, w):
    """The R*-vertex mapping onto w (vertex maps are bijections here)."""
    for v, img in f_morphism.vertex_map.items():
        if img == w:
            return v
    raise ValueError("vertex %r not hit by the morphism" % (w,))


def bimodule_indecomposable(d: Bimodule, seed: Optional[int] = None) -> bool:
    """Locality of the algebra of operators commuting with both actions."""
    if d.dim == 0:
        raise ValueError("the zero bimodule is not indecomposable")
    basis = bimodule_hom_space(d, d)
    n = len(basis)
    # structure constants and trace-form radical on the endomorphism algebra
    vecs = [[x for row in f.rows for x in row] for f in basis]
    bmat = Mat.from_rows(vecs, d.dim * d.dim).transpose()
    lmats = []
    for f in basis:
        cols = []
        for g in basis:
            prod = f @ g
            sol = solve_mat(bmat, Mat.column([x for row in prod.rows for x in row]))
            if sol is None:
                raise ValueError("bimodule endomorphisms are not closed")
            cols.append([sol.rows[k][0] for k in range(n)])
        lmats.append(Mat.from_rows(cols, n).transpose())
    gram = Mat.zeros(n, n)
    for i in range(n):
        for j in range(n):
            prod = lmats[i] @ lmats[j]
            gram.rows[i][j] = sum(prod.rows[t][t] for t in range(n))
    rad_dim = len(nullspace(gram))
    if n - rad_dim == 1:
        return True
    # try to split: look for an endomorphism with a nontrivial Fitting kernel
    from .linalg import charpoly, rational_roots

    rng = random.Random(resolve_seed(seed))
    candidates = list(basis)
    for _ in range(8):
        f = Mat.zeros(d.dim, d.dim)
        for g in basis:
            f = f + g.scale(Fraction(rng.randint(-4, 4)))
        candidates.append(f)
    for f in candidates:
        for lam in rational_roots(charpoly(f)):
            shifted = f - Mat.identity(d.dim).scale(lam)
            power = shifted
            for _ in range(max(1, d.dim.bit_length())):
                power = power @ power
            k = d.dim - rank(power)
            if 0 < k < d.dim:
                return False
    raise NotSplit("bimodule endomorphism algebra did not split rationally")


# -- rendering -------------------------------------------------------------------


def render_picture(obj, labels: Optional[Sequence[str]] = None) -> str:
    """Layered DOT text in the paper's picture convention.

    Nodes are basis vectors labelled ``x□y`` (bimodules) or by vertex
    (representations); solid edges show the left action, dashed edges
    stand in for the wavy right-action edges.  Nodes are ranked by their
    radical layer.
    """
    if isinstance(obj, Bimodule):
        n = obj.dim
        node_labels = [
            "%s□%s" % (obj.left_labels[i], obj.right_labels[i]) for i in range(n)
        ]
        solid = _op_edges(obj.left_ops)
        wavy = _op_edges(obj.right_ops)
    elif isinstance(obj, Representation):
        verts = obj.algebra.quiver.vertices
        node_labels = []
        index = []
        for v in verts:
            for k in range(obj.dims[v]):
                node_labels.append(str(v))
                index.append((v, k))
        n = len(node_labels)
        offsets = {}
        off = 0
        for v in verts:
            offsets[v] = off
            off += obj.dims[v]
        solid = []
        for name, s, t in obj.algebra.quiver.arrows:
            mat = obj.maps[name]
            for i in range(mat.m):
                for j in range(mat.n):
                    if mat.rows[i][j]:
                        solid.append((offsets[s] + j, offsets[t] + i, name))
        wavy = []
    else:
        raise TypeError("render_picture expects a Bimodule or Representation")
    if labels is not None:
        node_labels = list(labels)
    layer = _layers(n, [(a, b) for a, b, _ in solid + wavy])
    lines = ["digraph picture {", "  rankdir=TB;", "  node [shape=box];"]
    for i in range(n):
        lines.append('  n%d [label="%s"];' % (i, node_labels[i]))
    by_layer: Dict[int, List[int]] = {}
    for i, l in enumerate(layer):
        by_layer.setdefault(l, []).append(i)
    for l in sorted(by_layer):
        lines.append(
            "  { rank=same; %s }" % "; ".join("n%d" % i for i in by_layer[l])
        )
    for a, b, name in solid:
        lines.append('  n%d -> n%d [style=solid, label="%s"];' % (a, b, name))
    for a, b, name in wavy:
        lines.append('  n%d -> n%d [style=dashed, label="%s"];' % (a, b, name))
    lines.append("}")
    return "\n".join(lines)


def _op_edges(ops: Dict[str, Mat]):
    out = []
    for name in sorted(ops):
        mat = ops[name]
        for i in range(mat.m):
            for j in range(mat.n):
                if mat.rows[i][j]:
                    out.append((j, i, name))
    return out


def _layers(n: int, edges: List[Tuple[int, int]]) -> List[int]:
    layer = [0] * n
    for _ in range(n + 1):
        changed = False
        for a, b in edges:
            if layer[b] < layer[a] + 1:
                layer[b] = layer[a] + 1
                changed = True
        if not changed:
            break
    return layer
