"""Finite-dimensional representations of bound quiver algebras.

A representation assigns a rational vector space to every vertex and a
matrix to every arrow; relations of the algebra must act as zero.  Left
modules are representations of the algebra's own quiver, right modules
are representations of the opposite algebra.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DecompositionStall, NotSplit, UnsupportedAlgebra
from .linalg import (
    Mat,
    block_diag,
    charpoly,
    complement_coords,
    hstack,
    inverse,
    mmul,
    nullspace,
    quotient_projection,
    rank,
    rational_roots,
    row_span,
    rref,
    solve_mat,
    span_contains,
    vstack,
)
from .quiver import BoundQuiverAlgebra, Path

DEFAULT_SEED = 2024


def resolve_seed(seed: Optional[int] = None) -> int:
    """Explicit argument, then TILTKIT_SEED, then the documented default."""
    if seed is not None:
        return seed
    env = os.environ.get("TILTKIT_SEED")
    if env is not None:
        return int(env)
    return DEFAULT_SEED


class Representation:
    """A module given by vertex space dimensions and arrow matrices."""

    def __init__(
        self,
        algebra: BoundQuiverAlgebra,
        dims: Dict,
        maps: Dict[str, Mat],
        check: bool = True,
    ):
        self.algebra = algebra
        self.dims = {v: int(dims.get(v, 0)) for v in algebra.quiver.vertices}
        self.maps = {}
        for name, src, tgt in algebra.quiver.arrows:
            m = maps.get(name)
            if m is None:
                m = Mat.zeros(self.dims[tgt], self.dims[src])
            self.maps[name] = m
        if check:
            self.validate()

    def validate(self) -> None:
        q = self.algebra.quiver
        for name, src, tgt in q.arrows:
            m = self.maps[name]
            if (m.m, m.n) != (self.dims[tgt], self.dims[src]):
                raise ValueError("arrow %s matrix has wrong shape" % name)
        for d in self.dims.values():
            if d < 0:
                raise ValueError("negative dimension")
        for rel in self.algebra.relations:
            src = q.source(rel.terms[0][1][0])
            tgt = q.target(rel.terms[0][1][-1])
            acc = Mat.zeros(self.dims[tgt], self.dims[src])
            for c, p in rel.terms:
                acc = acc + self.path_action((src, tuple(p))).scale(c)
            if not acc.is_zero():
                raise ValueError("relation acts nontrivially")

    def path_action(self, p: Path) -> Mat:
        src, arrows = p
        m = Mat.identity(self.dims[src])
        for a in arrows:
            m = self.maps[a] @ m
        return m

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> Tuple[int, ...]:
        return tuple(self.dims[v] for v in self.algebra.quiver.vertices)

    def is_zero(self) -> bool:
        return self.total_dim() == 0

    def __repr__(self) -> str:
        return "Representation(dims=%r)" % (self.dims,)


class ModuleMap:
    """An intertwiner between two representations of the same algebra."""

    def __init__(
        self,
        source: Representation,
        target: Representation,
        vertex_maps: Dict[object, Mat],
        check: bool = True,
    ):
        self.source = source
        self.target = target
        self.vertex_maps = {
            v: vertex_maps.get(v, Mat.zeros(target.dims[v], source.dims[v]))
            for v in source.algebra.quiver.vertices
        }
        if check:
            self.validate()

    def validate(self) -> None:
        if self.source.algebra is not self.target.algebra:
            raise ValueError("maps need a common algebra")
        for name, src, tgt in self.source.algebra.quiver.arrows:
            lhs = self.vertex_maps[tgt] @ self.source.maps[name]
            rhs = self.target.maps[name] @ self.vertex_maps[src]
            if lhs != rhs:
                raise ValueError("map does not commute with arrow %s" % name)

    # -- basic calculus ------------------------------------------------------

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self after other."""
        return ModuleMap(
            other.source,
            self.target,
            {v: self.vertex_maps[v] @ other.vertex_maps[v] for v in self.vertex_maps},
            check=False,
        )

    def add(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(
            self.source,
            self.target,
            {v: self.vertex_maps[v] + other.vertex_maps[v] for v in self.vertex_maps},
            check=False,
        )

    def scale(self, c) -> "ModuleMap":
        return ModuleMap(
            self.source,
            self.target,
            {v: m.scale(c) for v, m in self.vertex_maps.items()},
            check=False,
        )

    def is_injective(self) -> bool:
        return all(rank(m) == m.n for m in self.vertex_maps.values())

    def is_surjective(self) -> bool:
        return all(rank(m) == m.m for m in self.vertex_maps.values())

    def is_isomorphism(self) -> bool:
        return all(m.m == m.n and rank(m) == m.n for m in self.vertex_maps.values())

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.vertex_maps.values())

    def kernel(self) -> Tuple[Representation, "ModuleMap"]:
        spans = {
            v: row_span(nullspace(m), m.n) for v, m in self.vertex_maps.items()
        }
        return submodule(self.source, spans)

    def image(self) -> Tuple[Representation, "ModuleMap"]:
        spans = {}
        for v, m in self.vertex_maps.items():
            spans[v] = row_span([m.col(j) for j in range(m.n)], m.m)
        return submodule(self.target, spans)

    def cokernel(self) -> Tuple[Representation, "ModuleMap"]:
        spans = {}
        for v, m in self.vertex_maps.items():
            spans[v] = row_span([m.col(j) for j in range(m.n)], m.m)
        return quotient(self.target, spans)


def zero_module(algebra: BoundQuiverAlgebra) -> Representation:
    return Representation(algebra, {}, {}, check=False)


def identity_map(m: Representation) -> ModuleMap:
    return ModuleMap(
        m, m, {v: Mat.identity(m.dims[v]) for v in m.dims}, check=False
    )


def zero_map(source: Representation, target: Representation) -> ModuleMap:
    return ModuleMap(source, target, {}, check=False)


def submodule(m: Representation, spans: Dict) -> Tuple[Representation, ModuleMap]:
    """Subrepresentation on canonical row spans, with its inclusion."""
    incl = {v: row_span(spans[v].rows, m.dims[v]).transpose() for v in spans}
    dims = {v: incl[v].n for v in incl}
    maps = {}
    for name, src, tgt in m.algebra.quiver.arrows:
        im = m.maps[name] @ incl[src]
        sol = solve_mat(incl[tgt], im)
        if sol is None:
            raise ValueError("spans are not arrow-invariant")
        maps[name] = sol
    sub = Representation(m.algebra, dims, maps, check=False)
    return sub, ModuleMap(sub, m, incl, check=False)


def quotient(m: Representation, spans: Dict) -> Tuple[Representation, ModuleMap]:
    """Quotient by an arrow-invariant span, with its projection."""
    projs = {}
    lifts = {}
    for v in m.algebra.quiver.vertices:
        span = row_span(spans[v].rows, m.dims[v])
        projs[v] = quotient_projection(span)
        free = complement_coords(span)
        lift = Mat.zeros(m.dims[v], len(free))
        for k, j in enumerate(free):
            lift.rows[j][k] = Fraction(1)
        lifts[v] = lift
    dims = {v: projs[v].m for v in projs}
    maps = {}
    for name, src, tgt in m.algebra.quiver.arrows:
        maps[name] = projs[tgt] @ m.maps[name] @ lifts[src]
    quo = Representation(m.algebra, dims, maps, check=False)
    return quo, ModuleMap(m, quo, projs, check=False)


# -- standard modules --------------------------------------------------------


def simple(algebra: BoundQuiverAlgebra, v) -> Representation:
    return Representation(algebra, {v: 1}, {}, check=False)


class ProjSum:
    """A direct sum of indecomposable projectives with its path basis.

    The copy list records the top vertex of each indecomposable summand;
    the representation's basis at a vertex ``w`` is the concatenation over
    copies of the algebra's surviving paths from the copy's vertex to
    ``w``.  Generator coordinates (the length-zero paths) are exposed so
    that maps out of the sum can be built from generator images.
    """

    def __init__(self, algebra: BoundQuiverAlgebra, copies: Sequence):
        self.algebra = algebra
        self.copies = list(copies)
        q = algebra.quiver
        self.block_paths: Dict[object, List[Tuple[int, Path]]] = {w: [] for w in q.vertices}
        for c, v in enumerate(self.copies):
            for w in q.vertices:
                for p in algebra.paths_from(v, w):
                    self.block_paths[w].append((c, p))
        dims = {w: len(self.block_paths[w]) for w in q.vertices}
        self.position = {
            (c, p): i for w in q.vertices for i, (c, p) in enumerate(self.block_paths[w])
        }
        maps = {}
        for name, src, tgt in q.arrows:
            m = Mat.zeros(dims[tgt], dims[src])
            for j, (c, p) in enumerate(self.block_paths[src]):
                raw = algebra.concat(p, (algebra.path_target(p), (name,)))
                for coeff, red in algebra.reduce_path(raw):
                    m.rows[self.position[(c, red)]][j] += coeff
            maps[name] = m
        self.rep = Representation(algebra, dims, maps, check=False)

    def generator_positions(self) -> List[Tuple[object, int]]:
        """(vertex, index in that vertex block) for each copy's generator."""
        out = []
        for c, v in enumerate(self.copies):
            out.append((v, self.position[(c, (v, ()))]))
        return out

    def map_from_generator_images(
        self, target: Representation, images: Sequence[Sequence[Fraction]]
    ) -> ModuleMap:
        """The module map sending each copy's generator to the given vector."""
        q = self.algebra.quiver
        mats = {
            w: Mat.zeros(target.dims[w], self.rep.dims[w]) for w in q.vertices
        }
        actions: Dict[Path, Mat] = {}
        for w in q.vertices:
            for j, (c, p) in enumerate(self.block_paths[w]):
                if p not in actions:
                    actions[p] = target.path_action(p)
                vec = actions[p].apply(images[c])
                for i, x in enumerate(vec):
                    mats[w].rows[i][j] = x
        return ModuleMap(self.rep, target, mats, check=False)


def projective(algebra: BoundQuiverAlgebra, v) -> Representation:
    return ProjSum(algebra, [v]).rep


def injective(algebra: BoundQuiverAlgebra, v) -> Representation:
    return duality_D(projective(algebra.opposite(), v))


def regular_module(algebra: BoundQuiverAlgebra) -> Representation:
    return ProjSum(algebra, list(algebra.quiver.vertices)).rep


def injective_cogenerator(algebra: BoundQuiverAlgebra) -> Representation:
    return direct_sum([injective(algebra, v) for v in algebra.quiver.vertices])


def direct_sum(parts: Sequence[Representation]) -> Representation:
    parts = list(parts)
    if not parts:
        raise ValueError("empty direct sum needs an algebra; use zero_module")
    algebra = parts[0].algebra
    for p in parts:
        if p.algebra is not algebra:
            raise ValueError("direct sum across different algebras")
    dims = {v: sum(p.dims[v] for p in parts) for v in algebra.quiver.vertices}
    maps = {}
    for name, src, tgt in algebra.quiver.arrows:
        maps[name] = block_diag([p.maps[name] for p in parts])
    return Representation(algebra, dims, maps, check=False)


def summand_inclusion(parts: Sequence[Representation], k: int) -> ModuleMap:
    total = direct_sum(parts)
    mats = {}
    for v in total.algebra.quiver.vertices:
        off = sum(p.dims[v] for p in parts[:k])
        m = Mat.zeros(total.dims[v], parts[k].dims[v])
        for i in range(parts[k].dims[v]):
            m.rows[off + i][i] = Fraction(1)
        mats[v] = m
    return ModuleMap(parts[k], total, mats, check=False)


# -- hom spaces --------------------------------------------------------------


def hom_space(m: Representation, n: Representation) -> List[ModuleMap]:
    """Deterministic basis of all intertwiners from m to n.

    Variables are the vertex-map entries, vertices in declaration order
    and entries row-major; the basis is the canonical nullspace basis of
    the commuting-square system.
    """
    if m.algebra is not n.algebra:
        raise ValueError("hom across different algebras")
    q = m.algebra.quiver
    offsets = {}
    total = 0
    for v in q.vertices:
        offsets[v] = total
        total += n.dims[v] * m.dims[v]
    rows: List[List[Fraction]] = []
    for name, src, tgt in q.arrows:
        ma, na = m.maps[name], n.maps[name]
        # f_tgt @ ma - na @ f_src = 0, entry (i, j): i < n.dims[tgt], j < m.dims[src]
        for i in range(n.dims[tgt]):
            for j in range(m.dims[src]):
                row = [Fraction(0)] * total
                for k in range(m.dims[tgt]):
                    if ma.rows[k][j]:
                        row[offsets[tgt] + i * m.dims[tgt] + k] += ma.rows[k][j]
                for k in range(n.dims[src]):
                    if na.rows[i][k]:
                        row[offsets[src] + k * m.dims[src] + j] -= na.rows[i][k]
                if any(row):
                    rows.append(row)
    basis_vecs = nullspace(Mat.from_rows(rows, total)) if rows else [
        [Fraction(1) if i == j else Fraction(0) for i in range(total)]
        for j in range(total)
    ]
    out = []
    for vec in basis_vecs:
        mats = {}
        for v in q.vertices:
            mat = Mat.zeros(n.dims[v], m.dims[v])
            for i in range(n.dims[v]):
                for j in range(m.dims[v]):
                    mat.rows[i][j] = vec[offsets[v] + i * m.dims[v] + j]
            mats[v] = mat
        out.append(ModuleMap(m, n, mats, check=False))
    return out


def hom_dim(m: Representation, n: Representation) -> int:
    return len(hom_space(m, n))


def hom_dimension_matrix(summands: Sequence[Representation]) -> List[List[int]]:
    return [[hom_dim(a, b) for b in summands] for a in summands]


def map_to_vec(f: ModuleMap) -> List[Fraction]:
    vec: List[Fraction] = []
    for v in f.source.algebra.quiver.vertices:
        for row in f.vertex_maps[v].rows:
            vec.extend(row)
    return vec


def is_isomorphic(
    m: Representation, n: Representation, seed: Optional[int] = None
) -> bool:
    """True iff an invertible intertwiner is found (seeded search)."""
    if m.dim_vector() != n.dim_vector():
        return False
    if m.is_zero():
        return True
    basis = hom_space(m, n)
    if not basis:
        return False
    for f in basis:
        if f.is_isomorphism():
            return True
    rng = random.Random(resolve_seed(seed))
    for _ in range(24):
        coeffs = [Fraction(rng.randint(-3, 3)) for _ in basis]
        f = basis[0].scale(coeffs[0])
        for c, g in zip(coeffs[1:], basis[1:]):
            f = f.add(g.scale(c))
        if f.is_isomorphism():
            return True
    return False


# -- endomorphism algebras and decomposition ---------------------------------


class FiniteAlgebra:
    """A finite-dimensional algebra by structure constants on a basis."""

    def __init__(
        self,
        dimension: int,
        structure: List[List[List[Tuple[Fraction, int]]]],
        identity: List[Fraction],
        radical_basis: List[List[Fraction]],
        quiver_data: Optional[Dict] = None,
    ):
        self.dimension = dimension
        self.structure = structure
        self.identity = identity
        self.radical_basis = radical_basis
        self.quiver_data = quiver_data or {}

    def radical_dim(self) -> int:
        return len(self.radical_basis)

    def left_mult_matrix(self, coords: Sequence[Fraction]) -> Mat:
        m = Mat.zeros(self.dimension, self.dimension)
        for i, ci in enumerate(coords):
            if not ci:
                continue
            for j in range(self.dimension):
                for c, k in self.structure[i][j]:
                    m.rows[k][j] += ci * c
        return m

    def check_associative(self) -> bool:
        def mul(a, b):
            out = [Fraction(0)] * self.dimension
            for i, ca in enumerate(a):
                if not ca:
                    continue
                for j, cb in enumerate(b):
                    if not cb:
                        continue
                    for c, k in self.structure[i][j]:
                        out[k] += ca * cb * c
            return out

        unit = [
            [Fraction(1) if t == s else Fraction(0) for t in range(self.dimension)]
            for s in range(self.dimension)
        ]
        for i in range(self.dimension):
            for j in range(self.dimension):
                ij = mul(unit[i], unit[j])
                for k in range(self.dimension):
                    if mul(ij, unit[k]) != mul(unit[i], mul(unit[j], unit[k])):
                        return False
        return True


def _structure_constants(basis: List[ModuleMap]) -> Tuple[List, Mat]:
    vecs = [map_to_vec(f) for f in basis]
    bmat = Mat.from_rows(vecs, len(vecs[0]) if vecs else 0).transpose()
    structure = []
    for f in basis:
        row = []
        for g in basis:
            prod = f.compose(g)
            sol = solve_mat(bmat, Mat.column(map_to_vec(prod)))
            if sol is None:
                raise ValueError("endomorphism product escaped the hom space")
            row.append([(sol.rows[k][0], k) for k in range(len(basis)) if sol.rows[k][0]])
        structure.append(row)
    return structure, bmat


def _radical_by_trace_form(basis: List[ModuleMap], structure) -> List[List[Fraction]]:
    n = len(basis)
    lmats = []
    for i in range(n):
        m = Mat.zeros(n, n)
        for j in range(n):
            for c, k in structure[i][j]:
                m.rows[k][j] += c
        lmats.append(m)
    gram = Mat.zeros(n, n)
    for i in range(n):
        for j in range(n):
            prod = lmats[i] @ lmats[j]
            gram.rows[i][j] = sum(prod.rows[t][t] for t in range(n))
    return nullspace(gram)


def end_algebra(
    m: Representation, seed: Optional[int] = None, with_quiver: bool = True
) -> FiniteAlgebra:
    """Endomorphism algebra on the hom basis, with radical and quiver data.

    Raises NotSplit when End/rad cannot be split over the rationals, which
    is detected by comparing its dimension with the summand multiplicities.
    """
    if m.is_zero():
        raise ValueError("endomorphism algebra of the zero module")
    basis = hom_space(m, m)
    structure, bmat = _structure_constants(basis)
    radical = _radical_by_trace_form(basis, structure)
    sol = solve_mat(bmat, Mat.column(map_to_vec(identity_map(m))))
    identity = [sol.rows[k][0] for k in range(len(basis))]
    quiver_data: Dict = {}
    if with_quiver:
        parts = decompose_with_maps(m, seed=seed)
        classes: List[List[int]] = []
        reps: List[Representation] = []
        for idx, (summand, _, _) in enumerate(parts):
            for ci, r in enumerate(reps):
                if is_isomorphic(summand, r, seed=seed):
                    classes[ci].append(idx)
                    break
            else:
                reps.append(summand)
                classes.append([idx])
        mult = [len(c) for c in classes]
        semisimple_dim = len(basis) - len(radical)
        if semisimple_dim != sum(k * k for k in mult):
            raise NotSplit(
                "End/rad has dimension %d but multiplicities give %d"
                % (semisimple_dim, sum(k * k for k in mult))
            )
        quiver_data = _end_quiver_data(m, basis, radical, parts, classes, reps)
    return FiniteAlgebra(len(basis), structure, identity, radical, quiver_data)


def _end_quiver_data(m, basis, radical, parts, classes, reps) -> Dict:
    nv = len(classes)
    # idempotent of each class: sum of incl . proj over its copies
    idems = []
    for cls in classes:
        e = None
        for idx in cls:
            _, incl, proj = parts[idx]
            term = incl.compose(proj)
            e = term if e is None else e.add(term)
        idems.append(e)

    def as_maps(vectors) -> List[ModuleMap]:
        out = []
        for vec in vectors:
            f = basis[0].scale(vec[0])
            for c, g in zip(vec[1:], basis[1:]):
                f = f.add(g.scale(c))
            out.append(f)
        return out

    rad_maps = as_maps(radical)
    width = len(map_to_vec(identity_map(m)))

    def block_dim(maps_list, i, j) -> int:
        vecs = [
            map_to_vec(idems[j].compose(f).compose(idems[i])) for f in maps_list
        ]
        return row_span(vecs, width).m

    rad2 = [f.compose(g) for f in rad_maps for g in rad_maps]
    rad3 = [f.compose(g) for f in rad2 for g in rad_maps]
    arrows = {}
    total_arrows = 0
    for i in range(nv):
        for j in range(nv):
            d = block_dim(rad_maps, i, j) - block_dim(rad2, i, j)
            if d:
                arrows[(i, j)] = d
                total_arrows += d
    relation_count = 0
    for i in range(nv):
        for j in range(nv):
            formal = sum(
                arrows.get((i, k), 0) * arrows.get((k, j), 0) for k in range(nv)
            )
            actual = block_dim(rad2, i, j) - block_dim(rad3, i, j)
            relation_count += max(0, formal - actual)
    return {
        "vertex_count": nv,
        "arrow_count": total_arrows,
        "arrow_multiplicities": arrows,
        "relation_count": relation_count,
        "summand_dim_vectors": sorted(r.dim_vector() for r in reps),
        "summand_multiplicities": [len(c) for c in classes],
    }


def _end_rad_quotient_dim(m: Representation) -> int:
    basis = hom_space(m, m)
    structure, _ = _structure_constants(basis)
    radical = _radical_by_trace_form(basis, structure)
    return len(basis) - len(radical)


def is_indecomposable(m: Representation, seed: Optional[int] = None) -> bool:
    """Locality of End via the characteristic-zero trace form."""
    if m.is_zero():
        raise ValueError("the zero module is not indecomposable")
    if _end_rad_quotient_dim(m) == 1:
        return True
    try:
        parts = decompose_with_maps(m, seed=seed)
    except DecompositionStall as exc:
        raise NotSplit(str(exc))
    return len(parts) == 1


def decompose_with_maps(
    m: Representation, seed: Optional[int] = None
) -> List[Tuple[Representation, ModuleMap, ModuleMap]]:
    """Indecomposable summands with inclusion and projection maps.

    Fitting decomposition along generalized eigenspaces of seeded
    pseudo-random endomorphisms; retry budget 8 per node, then
    DecompositionStall.
    """
    if m.is_zero():
        return []
    rng = random.Random(resolve_seed(seed))

    def split_once(x: Representation):
        basis = hom_space(x, x)
        if len(basis) == 1:
            return None
        structure, _ = _structure_constants(basis)
        radical = _radical_by_trace_form(basis, structure)
        if len(basis) - len(radical) == 1:
            return None
        candidates = list(basis)
        for _ in range(8):
            coeffs = [Fraction(rng.randint(-4, 4)) for _ in basis]
            f = basis[0].scale(coeffs[0])
            for c, g in zip(coeffs[1:], basis[1:]):
                f = f.add(g.scale(c))
            candidates.append(f)
        total = x.total_dim()
        for f in candidates:
            eigen = set()
            for v in x.algebra.quiver.vertices:
                if x.dims[v]:
                    eigen.update(rational_roots(charpoly(f.vertex_maps[v])))
            for lam in sorted(eigen):
                shifted = ModuleMap(
                    x,
                    x,
                    {
                        v: f.vertex_maps[v] - Mat.identity(x.dims[v]).scale(lam)
                        for v in x.dims
                    },
                    check=False,
                )
                power = shifted
                for _ in range(max(0, total.bit_length())):
                    power = power.compose(power)
                ker, ker_incl = power.kernel()
                if 0 < ker.total_dim() < total:
                    im, im_incl = power.image()
                    return ker, ker_incl, im, im_incl
        raise DecompositionStall(
            "no rational Fitting split found within the retry budget"
        )

    out: List[Tuple[Representation, ModuleMap, ModuleMap]] = []

    def recurse(x: Representation, incl: ModuleMap, proj: ModuleMap) -> None:
        res = split_once(x)
        if res is None:
            out.append((x, incl, proj))
            return
        ker, ker_incl, im, im_incl = res
        # per-vertex change of basis [ker | im] is invertible
        proj_k, proj_i = {}, {}
        for v in x.algebra.quiver.vertices:
            combined = hstack([ker_incl.vertex_maps[v], im_incl.vertex_maps[v]])
            inv = inverse(combined)
            if inv is None:
                raise DecompositionStall("Fitting split failed to be direct")
            proj_k[v] = Mat(ker.dims[v], x.dims[v], inv.rows[: ker.dims[v]])
            proj_i[v] = Mat(im.dims[v], x.dims[v], inv.rows[ker.dims[v] :])
        pk = ModuleMap(x, ker, proj_k, check=False)
        pi = ModuleMap(x, im, proj_i, check=False)
        recurse(ker, incl.compose(ker_incl), pk.compose(proj))
        recurse(im, incl.compose(im_incl), pi.compose(proj))

    recurse(m, identity_map(m), identity_map(m))
    out.sort(key=lambda t: (t[0].total_dim(), t[0].dim_vector()))
    return out


def decompose(m: Representation, seed: Optional[int] = None) -> List[Representation]:
    return [p for p, _, _ in decompose_with_maps(m, seed=seed)]


# -- structural series -------------------------------------------------------


def radical_submodule(m: Representation) -> Tuple[Representation, ModuleMap]:
    spans = {}
    for v in m.algebra.quiver.vertices:
        vecs = []
        for name in m.algebra.quiver.arrows_into(v):
            mat = m.maps[name]
            vecs.extend(mat.col(j) for j in range(mat.n))
        spans[v] = row_span(vecs, m.dims[v])
    return submodule(m, spans)


def top(m: Representation) -> Tuple[Representation, ModuleMap]:
    spans = {}
    for v in m.algebra.quiver.vertices:
        vecs = []
        for name in m.algebra.quiver.arrows_into(v):
            mat = m.maps[name]
            vecs.extend(mat.col(j) for j in range(mat.n))
        spans[v] = row_span(vecs, m.dims[v])
    return quotient(m, spans)


def socle(m: Representation) -> Tuple[Representation, ModuleMap]:
    spans = {}
    for v in m.algebra.quiver.vertices:
        outs = [m.maps[a] for a in m.algebra.quiver.arrows_from(v)]
        if outs:
            stacked = vstack(outs)
            spans[v] = row_span(nullspace(stacked), m.dims[v])
        else:
            spans[v] = row_span(Mat.identity(m.dims[v]).rows, m.dims[v])
    return submodule(m, spans)


def duality_D(m: Representation) -> Representation:
    """Standard duality: transpose all arrow matrices, land over A^op."""
    opp = m.algebra.opposite()
    maps = {name: m.maps[name].transpose() for name in m.maps}
    return Representation(opp, dict(m.dims), maps, check=False)


def is_sincere(m: Representation) -> bool:
    return all(d > 0 for d in m.dims.values())


def trace_of(t: Representation, x: Representation) -> Tuple[Representation, ModuleMap]:
    """Sum of images of all maps t -> x, as a subrepresentation of x."""
    basis = hom_space(t, x)
    spans = {}
    for v in x.algebra.quiver.vertices:
        vecs = []
        for f in basis:
            mat = f.vertex_maps[v]
            vecs.extend(mat.col(j) for j in range(mat.n))
        spans[v] = row_span(vecs, x.dims[v])
    return submodule(x, spans)


def is_projective_module(m: Representation) -> bool:
    from .homological import projective_cover

    if m.is_zero():
        return True
    p, _ = projective_cover(m)
    return p.total_dim() == m.total_dim()


def is_injective_module(m: Representation) -> bool:
    return is_projective_module(duality_D(m))


def euler_form(algebra: BoundQuiverAlgebra, dm: Sequence[int], dn: Sequence[int]) -> int:
    """The Euler form of the quiver (valid for hereditary algebras)."""
    q = algebra.quiver
    idx = q.vertex_index
    total = sum(a * b for a, b in zip(dm, dn))
    for name, s, t in q.arrows:
        total -= dm[idx[s]] * dn[idx[t]]
    return total


# -- enumeration of indecomposables ------------------------------------------


def _tits_form_positive_definite(algebra: BoundQuiverAlgebra) -> bool:
    q = algebra.quiver
    n = len(q.vertices)
    idx = q.vertex_index
    sym = Mat.identity(n).scale(2)
    for name, s, t in q.arrows:
        sym.rows[idx[s]][idx[t]] -= 1
        sym.rows[idx[t]][idx[s]] -= 1
    # leading principal minors all positive
    for k in range(1, n + 1):
        sub = Mat(k, k, [row[:k] for row in sym.rows[:k]])
        r, pivots = rref(sub)
        if len(pivots) < k:
            return False
    # exact positive definiteness via charpoly sign pattern (Descartes on -x)
    cp = charpoly(sym)
    signs = [(-1) ** (len(cp) - 1 - i) * cp[i] for i in range(len(cp))]
    return all(s > 0 for s in signs[:-1])


def _positive_roots(algebra: BoundQuiverAlgebra) -> List[Tuple[int, ...]]:
    q = algebra.quiver
    n = len(q.vertices)
    idx = q.vertex_index
    adj = [[0] * n for _ in range(n)]
    for name, s, t in q.arrows:
        adj[idx[s]][idx[t]] += 1
        adj[idx[t]][idx[s]] += 1

    def reflect(d: Tuple[int, ...], i: int) -> Tuple[int, ...]:
        out = list(d)
        out[i] = -d[i] + sum(adj[i][j] * d[j] for j in range(n))
        return tuple(out)

    roots = {tuple(1 if j == i else 0 for j in range(n)) for i in range(n)}
    frontier = list(roots)
    while frontier:
        nxt = []
        for d in frontier:
            for i in range(n):
                r = reflect(d, i)
                if r not in roots:
                    roots.add(r)
                    nxt.append(r)
        frontier = nxt
    return sorted(
        d for d in roots if all(x >= 0 for x in d) and any(x > 0 for x in d)
    )


def _generic_indecomposable(
    algebra: BoundQuiverAlgebra, dim_vec: Tuple[int, ...], rng: random.Random
) -> Representation:
    q = algebra.quiver
    idx = q.vertex_index
    dims = {v: dim_vec[idx[v]] for v in q.vertices}
    for _ in range(8):
        maps = {}
        for name, s, t in q.arrows:
            m = Mat.zeros(dims[t], dims[s])
            for i in range(dims[t]):
                for j in range(dims[s]):
                    m.rows[i][j] = Fraction(rng.randint(-3, 3))
            maps[name] = m
        rep = Representation(algebra, dims, maps, check=False)
        if hom_dim(rep, rep) == 1:
            return rep
    raise DecompositionStall(
        "no generic indecomposable found for dimension vector %r" % (dim_vec,)
    )


def enumerate_indecomposables(
    algebra: BoundQuiverAlgebra,
    method: str,
    fixture: Optional[str] = None,
    seed: Optional[int] = None,
) -> List[Representation]:
    """Complete lists of indecomposables for the supported algebra classes.

    ``dynkin_roots``: acyclic tree quiver with positive-definite Tits form
    and zero relation ideal; one brick per positive root, built from a
    seeded generic representation and verified to have trivial
    endomorphisms.  ``nakayama_intervals``: all uniserial interval modules
    of a Nakayama algebra.  ``fixture``: an explicit list loaded from the
    corpus.
    """
    if method == "dynkin_roots":
        q = algebra.quiver
        if algebra._ideal_nonzero or algebra.relations:
            raise UnsupportedAlgebra("dynkin_roots needs a relation-free algebra")
        if not q.is_acyclic() or len(q.arrows) != len(q.vertices) - 1:
            raise UnsupportedAlgebra("dynkin_roots needs an acyclic tree quiver")
        if not _tits_form_positive_definite(algebra):
            raise UnsupportedAlgebra("quiver is not of Dynkin type")
        rng = random.Random(resolve_seed(seed))
        return [
            _generic_indecomposable(algebra, d, rng) for d in _positive_roots(algebra)
        ]
    if method == "nakayama_intervals":
        q = algebra.quiver
        for v in q.vertices:
            if len(q.arrows_from(v)) > 1 or len(q.arrows_into(v)) > 1:
                raise UnsupportedAlgebra("nakayama_intervals needs a Nakayama quiver")
        out = []
        for v in q.vertices:
            c_v = projective(algebra, v).total_dim()
            for length in range(1, c_v + 1):
                out.append(_interval_module(algebra, v, length))
        return out
    if method == "fixture":
        from .io_json import load_module_list

        if fixture is None:
            raise UnsupportedAlgebra("fixture method needs a path")
        return load_module_list(fixture, algebra)
    raise UnsupportedAlgebra("unknown enumeration method %r" % (method,))


def _interval_module(algebra: BoundQuiverAlgebra, start, length: int) -> Representation:
    """The uniserial module with top at ``start`` and the given length."""
    q = algebra.quiver
    slots = [start]
    for _ in range(length - 1):
        outs = q.arrows_from(slots[-1])
        if not outs:
            raise UnsupportedAlgebra("interval walks off the quiver")
        slots.append(q.target(outs[0]))
    dims = {v: slots.count(v) for v in q.vertices}
    occur = {v: [i for i, w in enumerate(slots) if w == v] for v in q.vertices}
    maps = {}
    for name, s, t in q.arrows:
        m = Mat.zeros(dims[t], dims[s])
        for j, pos in enumerate(occur[s]):
            if pos + 1 < length and slots[pos + 1] == t:
                m.rows[occur[t].index(pos + 1)][j] = Fraction(1)
        maps[name] = m
    return Representation(algebra, dims, maps)


def random_representation(
    algebra: BoundQuiverAlgebra, rng: random.Random, max_dim: int = 2
) -> Representation:
    """A random module over a relation-free algebra (for property tests)."""
    if algebra._ideal_nonzero:
        raise UnsupportedAlgebra("random_representation assumes no relations")
    q = algebra.quiver
    dims = {v: rng.randint(0, max_dim) for v in q.vertices}
    maps = {}
    for name, s, t in q.arrows:
        m = Mat.zeros(dims[t], dims[s])
        for i in range(dims[t]):
            for j in range(dims[s]):
                m.rows[i][j] = Fraction(rng.randint(-2, 2))
        maps[name] = m
    return Representation(algebra, dims, maps, check=False)
