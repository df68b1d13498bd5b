"""Quivers, bound quiver algebras, and ring morphisms between them.

Conventions fixed once for the whole toolkit (and for the JSON corpus):

* A path is written ``[a1, a2, ..., ak]`` with ``a1`` traversed first, so
  composability means ``target(a_i) == source(a_{i+1})``.
* The algebra product composes like functions: ``x * y`` applies ``y``
  first.  On paths this is concatenation ``y``-then-``x``.
* Left modules are representations: the arrow ``a: v -> w`` acts by a
  ``dim(w) x dim(v)`` matrix, and a path acts by composing its arrow
  matrices in traversal order.

Relations must be homogeneous (all terms of one relation have the same
length); the basis is computed by degree-graded Gaussian elimination on
parallel-path spaces.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import MalformedRelation, NonAdmissible
from .linalg import Mat, frac, rank, rref

Vertex = object  # ints or strings in practice
Path = Tuple[object, Tuple[str, ...]]  # (source vertex, arrow names)


class Quiver:
    """A finite directed graph with named arrows."""

    def __init__(self, vertices: Sequence, arrows: Sequence[Tuple[str, object, object]]):
        self.vertices = list(vertices)
        self.arrows = [(str(n), s, t) for (n, s, t) in arrows]
        if len(set(self.vertices)) != len(self.vertices):
            raise MalformedRelation("duplicate vertex identifiers")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise MalformedRelation("duplicate arrow names")
        vset = set(self.vertices)
        for name, s, t in self.arrows:
            if s not in vset or t not in vset:
                raise MalformedRelation("arrow %s has undeclared endpoint" % name)
        self.arrow_by_name = {a[0]: a for a in self.arrows}
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}

    def source(self, name: str):
        return self.arrow_by_name[name][1]

    def target(self, name: str):
        return self.arrow_by_name[name][2]

    def arrows_from(self, v) -> List[str]:
        return [a[0] for a in self.arrows if a[1] == v]

    def arrows_into(self, v) -> List[str]:
        return [a[0] for a in self.arrows if a[2] == v]

    def is_acyclic(self) -> bool:
        color = {v: 0 for v in self.vertices}

        def visit(v) -> bool:
            color[v] = 1
            for a in self.arrows_from(v):
                w = self.target(a)
                if color[w] == 1:
                    return False
                if color[w] == 0 and not visit(w):
                    return False
            color[v] = 2
            return True

        return all(color[v] != 0 or visit(v) for v in self.vertices)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [(n, t, s) for (n, s, t) in self.arrows])


class Relation:
    """A rational combination of parallel paths of equal length >= 2."""

    def __init__(self, terms: Sequence[Tuple[object, Sequence[str]]]):
        self.terms = [(frac(c), tuple(p)) for c, p in terms]
        if not self.terms:
            raise MalformedRelation("empty relation")
        for c, p in self.terms:
            if c == 0:
                raise MalformedRelation("zero coefficient in relation")
            if len(p) < 2:
                raise MalformedRelation("relation path of length < 2")

    def validate(self, quiver: Quiver) -> Tuple[object, object, int]:
        """Return (source, target, length) after checking the terms agree."""
        sig = None
        for _, p in self.terms:
            for a in p:
                if a not in quiver.arrow_by_name:
                    raise MalformedRelation("unknown arrow %r in relation" % (a,))
            for a, b in zip(p, p[1:]):
                if quiver.target(a) != quiver.source(b):
                    raise MalformedRelation("non-composable relation path %r" % (p,))
            s = (quiver.source(p[0]), quiver.target(p[-1]), len(p))
            if sig is None:
                sig = s
            elif sig[:2] != s[:2]:
                raise MalformedRelation("non-parallel terms in relation")
            elif sig[2] != s[2]:
                raise MalformedRelation(
                    "relation mixes path lengths; the basis algorithm is degree-graded"
                )
        return sig


def _path_sort_key(quiver: Quiver, p: Path):
    src, arrows = p
    return (len(arrows), arrows, quiver.vertex_index[src])


class BoundQuiverAlgebra:
    """A path algebra modulo an admissible homogeneous relation ideal.

    The basis consists of the residue classes of the surviving paths,
    ordered by (length, arrow-name sequence, source vertex).
    """

    def __init__(self, quiver: Quiver, relations: Sequence[Relation]):
        self.quiver = quiver
        self.relations = list(relations)
        self._rel_info = [r.validate(quiver) for r in self.relations]
        self._opposite: Optional["BoundQuiverAlgebra"] = None
        self._ideal_nonzero = False
        self._build()

    # -- basis construction -------------------------------------------------

    def _raw_paths(self, length: int) -> List[Path]:
        if length == 0:
            return [(v, ()) for v in self.quiver.vertices]
        out: List[Path] = []
        for src, arrows in self._raw_paths(length - 1):
            tgt = self.path_target((src, arrows))
            for a in self.quiver.arrows_from(tgt):
                out.append((src, arrows + (a,)))
        return out

    def path_target(self, p: Path):
        src, arrows = p
        return self.quiver.target(arrows[-1]) if arrows else src

    def path_source(self, p: Path):
        return p[0]

    def _build(self) -> None:
        q = self.quiver
        rel_len = [info[2] for info in self._rel_info]
        bound = len(q.vertices) * (1 + max(rel_len, default=0)) + len(q.vertices) + 2
        raw_by_len: Dict[int, List[Path]] = {}
        self.reduce_map: Dict[Path, List[Tuple[Fraction, Path]]] = {}
        basis: List[Path] = []
        length = 0
        while True:
            raw = self._raw_paths(length) if length not in raw_by_len else raw_by_len[length]
            raw_by_len[length] = raw
            if not raw:
                break
            alive_any = False
            # group the degree-`length` paths into parallel classes
            classes: Dict[Tuple[object, object], List[Path]] = {}
            for p in raw:
                classes.setdefault((p[0], self.path_target(p)), []).append(p)
            for i_pre in range(0, length + 1):
                raw_by_len.setdefault(i_pre, self._raw_paths(i_pre))
            for (s, t), paths in classes.items():
                paths.sort(key=lambda p: _path_sort_key(q, p))
                index = {p: i for i, p in enumerate(paths)}
                rows = []
                for rel, (ru, rv, rl) in zip(self.relations, self._rel_info):
                    if rl > length:
                        continue
                    for i_pre in range(0, length - rl + 1):
                        for pre in raw_by_len[i_pre]:
                            if pre[0] != s or self.path_target(pre) != ru:
                                continue
                            for suf in raw_by_len[length - rl - i_pre]:
                                if suf[0] != rv or self.path_target(suf) != t:
                                    continue
                                row = [Fraction(0)] * len(paths)
                                for c, mid in rel.terms:
                                    whole = (s, pre[1] + mid + suf[1])
                                    row[index[whole]] += c
                                if any(row):
                                    rows.append(row)
                if rows:
                    self._ideal_nonzero = True
                r, pivots = rref(Mat(len(rows), len(paths), rows)) if rows else (None, [])
                pivset = set(pivots)
                alive = [p for i, p in enumerate(paths) if i not in pivset]
                for p in alive:
                    self.reduce_map[p] = [(Fraction(1), p)]
                for k, pc in enumerate(pivots):
                    expr = []
                    for j in range(len(paths)):
                        if j not in pivset and r.rows[k][j]:
                            expr.append((-r.rows[k][j], paths[j]))
                    self.reduce_map[paths[pc]] = expr
                basis.extend(alive)
                if alive:
                    alive_any = True
            if not alive_any:
                break
            length += 1
            if length > bound:
                raise NonAdmissible(
                    "path counts did not stabilize to zero by degree %d" % bound
                )
            raw_by_len[length] = self._raw_paths(length)
        self.max_length = length  # every path of this length or more is zero
        basis.sort(key=lambda p: _path_sort_key(q, p))
        self.basis = basis
        self.basis_index = {p: i for i, p in enumerate(basis)}
        self.dimension = len(basis)

    # -- arithmetic ----------------------------------------------------------

    def reduce_path(self, p: Path) -> List[Tuple[Fraction, Path]]:
        src, arrows = p
        if len(arrows) >= self.max_length:
            return []
        return self.reduce_map.get(p, [])

    def concat(self, first: Path, then: Path) -> Optional[Path]:
        """The raw path 'first then then', or None if not composable."""
        if self.path_target(first) != then[0]:
            return None
        return (first[0], first[1] + then[1])

    def mult(self, x: List[Tuple[Fraction, Path]], y: List[Tuple[Fraction, Path]]):
        """Product x*y of basis combinations; y acts first."""
        acc: Dict[Path, Fraction] = {}
        for cx, px in x:
            for cy, py in y:
                raw = self.concat(py, px)
                if raw is None:
                    continue
                for cr, pr in self.reduce_path(raw):
                    acc[pr] = acc.get(pr, Fraction(0)) + cx * cy * cr
        return [(c, p) for p, c in sorted(acc.items(), key=lambda kv: self.basis_index[kv[0]]) if c]

    def mult_basis(self, i: int, j: int) -> List[Tuple[Fraction, int]]:
        out = self.mult([(Fraction(1), self.basis[i])], [(Fraction(1), self.basis[j])])
        return [(c, self.basis_index[p]) for c, p in out]

    def idempotent(self, v) -> Path:
        return (v, ())

    def paths_from(self, v, w) -> List[Path]:
        return [p for p in self.basis if p[0] == v and self.path_target(p) == w]

    def check_associativity(self) -> bool:
        n = self.dimension
        for i in range(n):
            for j in range(n):
                ij = self.mult_basis(i, j)
                for k in range(n):
                    jk = self.mult_basis(j, k)
                    lhs: Dict[int, Fraction] = {}
                    for c, t in ij:
                        for c2, t2 in self.mult_basis(t, k):
                            lhs[t2] = lhs.get(t2, Fraction(0)) + c * c2
                    rhs: Dict[int, Fraction] = {}
                    for c, t in jk:
                        for c2, t2 in self.mult_basis(i, t):
                            rhs[t2] = rhs.get(t2, Fraction(0)) + c * c2
                    if {k_: v for k_, v in lhs.items() if v} != {
                        k_: v for k_, v in rhs.items() if v
                    }:
                        return False
        return True

    def check_identity(self) -> bool:
        ident = [(Fraction(1), self.idempotent(v)) for v in self.quiver.vertices]
        for i in range(self.dimension):
            b = [(Fraction(1), self.basis[i])]
            if self.mult(ident, b) != b or self.mult(b, ident) != b:
                return False
        return True

    # -- derived algebras ----------------------------------------------------

    def opposite(self) -> "BoundQuiverAlgebra":
        if self._opposite is None:
            opp_q = self.quiver.opposite()
            opp_rels = [
                Relation([(c, tuple(reversed(p))) for c, p in r.terms])
                for r in self.relations
            ]
            opp = BoundQuiverAlgebra(opp_q, opp_rels)
            opp._opposite = self
            self._opposite = opp
        return self._opposite

    def is_hereditary(self) -> bool:
        return self.quiver.is_acyclic() and not self._ideal_nonzero


def build_algebra(quiver: Quiver, relations: Sequence[Relation]) -> BoundQuiverAlgebra:
    """Build the bound quiver algebra with its canonical path basis."""
    return BoundQuiverAlgebra(quiver, relations)


def opposite_algebra(a: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    return a.opposite()


def is_hereditary(a: BoundQuiverAlgebra) -> bool:
    return a.is_hereditary()


class AlgebraMorphism:
    """A unital morphism determined by a vertex map and an arrow map.

    Each arrow maps to a rational combination of parallel paths of the
    target algebra.
    """

    def __init__(
        self,
        source: BoundQuiverAlgebra,
        target: BoundQuiverAlgebra,
        vertex_map: Dict,
        arrow_map: Dict[str, Sequence[Tuple[object, Sequence[str]]]],
    ):
        self.source = source
        self.target = target
        self.vertex_map = dict(vertex_map)
        self.arrow_map = {
            a: [(frac(c), tuple(p)) for c, p in terms] for a, terms in arrow_map.items()
        }
        self._validate()

    @classmethod
    def identity_on_generators(
        cls, source: BoundQuiverAlgebra, target: BoundQuiverAlgebra
    ) -> "AlgebraMorphism":
        """The obvious morphism for equal quivers (names and vertices match)."""
        vm = {v: v for v in source.quiver.vertices}
        am = {a[0]: [(1, (a[0],))] for a in source.quiver.arrows}
        return cls(source, target, vm, am)

    def _image_of_path(self, p: Path) -> List[Tuple[Fraction, Path]]:
        src, arrows = p
        acc = [(Fraction(1), self.target.idempotent(self.vertex_map[src]))]
        for a in arrows:
            img = [
                (c, (self.target.quiver.source(q[0]), tuple(q)))
                for c, q in self.arrow_map[a]
            ]
            # apply the next arrow after the accumulated initial segment
            acc = self.target.mult(img, acc)
        return acc

    def _validate(self) -> None:
        sq, tq = self.source.quiver, self.target.quiver
        for v in sq.vertices:
            if self.vertex_map.get(v) not in tq.vertex_index:
                raise MalformedRelation("vertex map misses %r" % (v,))
        for name, s, t in sq.arrows:
            terms = self.arrow_map.get(name)
            if not terms:
                raise MalformedRelation("arrow map misses %r" % name)
            for _, p in terms:
                if tq.source(p[0]) != self.vertex_map[s]:
                    raise MalformedRelation("arrow image has wrong source: %r" % name)
                if tq.target(p[-1]) != self.vertex_map[t]:
                    raise MalformedRelation("arrow image has wrong target: %r" % name)
        for rel in self.source.relations:
            acc: Dict[Path, Fraction] = {}
            for c, p in rel.terms:
                for ci, pi in self._image_of_path((sq.source(p[0]), tuple(p))):
                    acc[pi] = acc.get(pi, Fraction(0)) + c * ci
            if any(v != 0 for v in acc.values()):
                raise MalformedRelation("relation does not map to zero")

    def matrix(self) -> Mat:
        """The induced linear map in the path bases (columns = source basis)."""
        m = Mat.zeros(self.target.dimension, self.source.dimension)
        for j, p in enumerate(self.source.basis):
            for c, q in self._image_of_path(p):
                m.rows[self.target.basis_index[q]][j] += c
        return m


def check_ring_epimorphism(f: AlgebraMorphism) -> Tuple[bool, int]:
    """(surjectivity of the induced linear map, dimension of its kernel)."""
    m = f.matrix()
    r = rank(m)
    return (r == f.target.dimension, f.source.dimension - r)
