"""Programmatic constructions of the shipped fixture corpus.

Every object here is corpus data: quivers, relation sets, modules and
bimodules entered from the source pictures.  The JSON files under
``tiltkit/fixtures/`` are generated from these builders
(``python -m tiltkit.fixtures`` regenerates them in place).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence

from .linalg import Mat
from .quiver import AlgebraMorphism, BoundQuiverAlgebra, Quiver, Relation, build_algebra
from .modules import Representation
from .bimodules import Bimodule, make_bimodule


def _op(names: Sequence[str], pairs: Dict[str, str]) -> Mat:
    """Unit-coefficient operator from 'source -> dest(+dest2)' pairs."""
    ix = {n: i for i, n in enumerate(names)}
    m = Mat.zeros(len(names), len(names))
    for src, dsts in pairs.items():
        for d in dsts.split("+"):
            m.rows[ix[d]][ix[src]] = Fraction(1)
    return m


def _uniserial(algebra: BoundQuiverAlgebra, chain: Sequence) -> Representation:
    """The uniserial module with the given top-to-socle vertex chain."""
    q = algebra.quiver
    slots = list(chain)
    dims = {v: slots.count(v) for v in q.vertices}
    occur = {v: [i for i, w in enumerate(slots) if w == v] for v in q.vertices}
    maps = {}
    for name, s, t in q.arrows:
        m = Mat.zeros(dims[t], dims[s])
        for j, pos in enumerate(occur[s]):
            if pos + 1 < len(slots) and slots[pos + 1] == t:
                m.rows[occur[t].index(pos + 1)][j] = Fraction(1)
        maps[name] = m
    return Representation(algebra, dims, maps)


# -- Happel-Ringel (sections 1, 2, 5.1) ----------------------------------------


def e6_algebra() -> BoundQuiverAlgebra:
    """The Dynkin quiver E6 with subspace orientation."""
    q = Quiver(
        [1, 2, 3, 4, 5, 6],
        [("a12", 1, 2), ("a26", 2, 6), ("a56", 5, 6), ("a46", 4, 6), ("a34", 3, 4)],
    )
    return build_algebra(q, [])


def endomorphism_algebra_b() -> BoundQuiverAlgebra:
    """The fully commutative quiver on a..f presenting End of the HR module."""
    q = Quiver(
        ["a", "b", "c", "d", "e", "f"],
        [
            ("eb", "e", "b"),
            ("ed", "e", "d"),
            ("fd", "f", "d"),
            ("fc", "f", "c"),
            ("ba", "b", "a"),
            ("da", "d", "a"),
            ("ca", "c", "a"),
        ],
    )
    rels = [
        Relation([(1, ("eb", "ba")), (-1, ("ed", "da"))]),
        Relation([(1, ("fd", "da")), (-1, ("fc", "ca"))]),
    ]
    return build_algebra(q, rels)


HR_BASIS = [
    "5a", "6a",
    "2b", "5b", "6b",
    "5c", "4c", "6c",
    "1d", "3d", "5d", "2d", "4d", "6d1", "6d2",
    "1e", "2e", "5e", "6e",
    "3f", "5f", "4f", "6f",
]


def happel_ringel_bimodule(
    a: BoundQuiverAlgebra = None, b: BoundQuiverAlgebra = None
) -> Bimodule:
    """The 23-dimensional tilting bimodule of Picture 1."""
    a = a or e6_algebra()
    b = b or endomorphism_algebra_b()
    names = HR_BASIS
    left_ops = {
        "a12": _op(names, {"1d": "2d", "1e": "2e"}),
        "a26": _op(names, {"2b": "6b", "2d": "6d1", "2e": "6e"}),
        "a56": _op(
            names,
            {"5a": "6a", "5b": "6b", "5c": "6c", "5d": "6d1+6d2", "5e": "6e", "5f": "6f"},
        ),
        "a46": _op(names, {"4c": "6c", "4d": "6d2", "4f": "6f"}),
        "a34": _op(names, {"3d": "4d", "3f": "4f"}),
    }
    right_ops = {
        "ba": _op(names, {"5a": "5b", "6a": "6b"}),
        "ca": _op(names, {"5a": "5c", "6a": "6c"}),
        "da": _op(names, {"5a": "5d", "6a": "6d1+6d2"}),
        "eb": _op(names, {"2b": "2e", "5b": "5e", "6b": "6e"}),
        "ed": _op(names, {"1d": "1e", "2d": "2e", "5d": "5e", "6d1": "6e"}),
        "fd": _op(names, {"3d": "3f", "4d": "4f", "5d": "5f", "6d2": "6f"}),
        "fc": _op(names, {"5c": "5f", "4c": "4f", "6c": "6f"}),
    }
    return make_bimodule(
        a,
        b,
        [int(x[0]) for x in names],
        [x[1] for x in names],
        left_ops,
        right_ops,
    )


# expected duality and equivalence tables, as dimension vectors
HR_SUMMAND_ORDER = ["a", "b", "c", "d", "e", "f"]

# the tilting equivalence sends the summand over y to the projective at y
HR_EQUIVALENCE_IMAGES = {
    "a": ("a",),
    "b": ("b",),
    "c": ("c",),
    "d": ("d",),
    "e": ("e",),
    "f": ("f",),
}

# cotilting duality images of the summands: dimension vectors over B^op,
# ordered by B's vertex list a..f  (paths ending at the vertex)
HR_DUALITY_SUMMAND_IMAGES = {
    "a": (1, 1, 1, 1, 1, 1),
    "b": (0, 1, 0, 0, 1, 0),
    "c": (0, 0, 1, 0, 0, 1),
    "d": (0, 0, 0, 1, 1, 1),
    "e": (0, 0, 0, 0, 1, 0),
    "f": (0, 0, 0, 0, 0, 1),
}

# duality images of the five non-summand indecomposable projectives P(v)
HR_DUALITY_PROJECTIVE_IMAGES = {
    1: (0, 0, 0, 1, 1, 0),
    2: (0, 1, 0, 1, 1, 0),
    3: (0, 0, 0, 1, 0, 1),
    4: (0, 0, 1, 1, 0, 1),
    6: (1, 1, 1, 2, 1, 1),
}

# the three non-obvious reflexive modules and their duality images
HR_NON_OBVIOUS = [
    ((0, 1, 0, 1, 1, 2), (0, 1, 1, 1, 1, 1)),
    ((0, 1, 1, 1, 1, 2), (0, 1, 0, 1, 1, 1)),
    ((1, 1, 0, 1, 1, 2), (0, 0, 1, 1, 1, 1)),
]

HR_MATRIX_A_PATTERN = [
    [1, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [1, 1, 1, 1, 1, 1],
]

HR_MATRIX_B_PATTERN = [
    [1, 1, 1, 1, 1, 1],
    [0, 1, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 1],
    [0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
]


# -- the rad-square-zero five-vertex algebra (sections 3.3, 3.4) ----------------


def radsq_algebra() -> BoundQuiverAlgebra:
    """Diamond with a tail, every length-two composition zero."""
    q = Quiver(
        [1, 2, 3, 4, 5],
        [
            ("al", 1, 2),
            ("be", 1, 3),
            ("ga", 2, 4),
            ("de", 3, 4),
            ("ep", 4, 5),
        ],
    )
    rels = [
        Relation([(1, ("al", "ga"))]),
        Relation([(1, ("be", "de"))]),
        Relation([(1, ("ga", "ep"))]),
        Relation([(1, ("de", "ep"))]),
    ]
    return build_algebra(q, rels)


def radsq_modules(a: BoundQuiverAlgebra) -> Dict[str, Representation]:
    """T's summands and the complete 12-element indecomposable universe.

    The list is derived by the string-combinatorics of this special
    biserial algebra: all compositions vanish, so strings are alternating
    walks; there are 12 of them and no bands (the unique cycle walk is
    direction-constant on two consecutive edges).
    """
    mods: Dict[str, Representation] = {}
    for v in a.quiver.vertices:
        mods["S%d" % v] = _uniserial(a, [v])
    mods["I2"] = _uniserial(a, [1, 2])
    mods["I3"] = _uniserial(a, [1, 3])
    mods["I5"] = _uniserial(a, [4, 5])
    mods["M24"] = _uniserial(a, [2, 4])
    mods["M34"] = _uniserial(a, [3, 4])
    # P(1) = 1 over (2 3) and I(4) = (2 3) over 4
    mods["P1"] = Representation(
        a,
        {1: 1, 2: 1, 3: 1},
        {"al": Mat(1, 1, [[1]]), "be": Mat(1, 1, [[1]])},
    )
    mods["I4"] = Representation(
        a,
        {2: 1, 3: 1, 4: 1},
        {"ga": Mat(1, 1, [[1]]), "de": Mat(1, 1, [[1]])},
    )
    return mods


RADSQ_UNIVERSE = [
    "S1", "S2", "S3", "S4", "S5",
    "I2", "I3", "I5", "M24", "M34", "P1", "I4",
]


# -- the cyclic Nakayama fixtures (section 3.7) ---------------------------------


def nakayama_algebra(n: int) -> BoundQuiverAlgebra:
    """Cyclic Nakayama algebra with Kupisch series (n, n+1, ..., n+1).

    The projectives are uniserial of length n at vertex 1 and n+1
    elsewhere; the injectives at vertices 2..n are then projective and the
    injective at vertex 1 is the uniserial 2/3/../n/1 of length n.
    """
    verts = list(range(1, n + 1))
    arrows = [("a%d" % i, i, 1 if i == n else i + 1) for i in verts]

    def cycle_from(v: int, length: int):
        return tuple("a%d" % (((v - 1 + k) % n) + 1) for k in range(length))

    rels = [Relation([(1, cycle_from(1, n))])]
    for v in range(2, n + 1):
        rels.append(Relation([(1, cycle_from(v, n + 1))]))
    return build_algebra(Quiver(verts, arrows), rels)


def nakayama_t(a: BoundQuiverAlgebra, n: int) -> Representation:
    """The module 2/3/../n/1, the unique non-projective injective."""
    return _uniserial(a, list(range(2, n + 1)) + [1])


# -- section 4.3: the good case -------------------------------------------------


def algebra_s_43() -> BoundQuiverAlgebra:
    q = Quiver([4, 5, 6], [("s1", 4, 5), ("s2", 5, 6)])
    return build_algebra(q, [])


def algebra_r_43() -> BoundQuiverAlgebra:
    q = Quiver([1, 2, 3], [("r1", 2, 1), ("r2", 3, 1)])
    return build_algebra(q, [])


C43_BASIS = ["4_2", "5_1", "5_2", "5_3", "6_1", "6_2"]


def bimodule_c_43(s=None, r=None) -> Bimodule:
    """Picture 2: the six-dimensional cotilting bimodule C."""
    s = s or algebra_s_43()
    r = r or algebra_r_43()
    names = C43_BASIS
    left_ops = {
        "s1": _op(names, {"4_2": "5_2"}),
        "s2": _op(names, {"5_1": "6_1", "5_2": "6_2"}),
    }
    right_ops = {
        "r1": _op(names, {"5_1": "5_2", "6_1": "6_2"}),
        "r2": _op(names, {"5_1": "5_3"}),
    }
    return make_bimodule(
        s,
        r,
        [int(x.split("_")[0]) for x in names],
        [int(x.split("_")[1]) for x in names],
        left_ops,
        right_ops,
    )


D43_BASIS = ["4_1", "4_2", "4_3", "5_1", "5_2", "5_3", "6_1", "6_2"]


def bimodule_d_43(s=None, r=None) -> Bimodule:
    """Picture 3: the indecomposable bimodule on the left envelope."""
    s = s or algebra_s_43()
    r = r or algebra_r_43()
    names = D43_BASIS
    left_ops = {
        "s1": _op(names, {"4_1": "5_1", "4_2": "5_2", "4_3": "5_3"}),
        "s2": _op(names, {"5_1": "6_1", "5_2": "6_2"}),
    }
    right_ops = {
        "r1": _op(names, {"4_1": "4_2", "5_1": "5_2", "6_1": "6_2"}),
        "r2": _op(names, {"4_1": "4_3", "5_1": "5_3"}),
    }
    return make_bimodule(
        s,
        r,
        [int(x.split("_")[0]) for x in names],
        [int(x.split("_")[1]) for x in names],
        left_ops,
        right_ops,
    )


D43R_BASIS = ["4_1", "4_2", "5_1", "5_2", "6_1", "6_2", "5x1", "5x3"]


def bimodule_d_43_right(s=None, r=None) -> Bimodule:
    """Picture 4: the decomposable bimodule on the right envelope."""
    s = s or algebra_s_43()
    r = r or algebra_r_43()
    names = D43R_BASIS
    left_ops = {
        "s1": _op(names, {"4_1": "5_1", "4_2": "5_2"}),
        "s2": _op(names, {"5_1": "6_1", "5_2": "6_2"}),
    }
    right_ops = {
        "r1": _op(names, {"4_1": "4_2", "5_1": "5_2", "6_1": "6_2"}),
        "r2": _op(names, {"5x1": "5x3"}),
    }
    left_labels = [int(x[0]) for x in names]
    right_labels = [int(x[-1]) for x in names]
    return make_bimodule(s, r, left_labels, right_labels, left_ops, right_ops)


# duality table of section 5.1 for the 4.3 bimodule: left module chain ->
# dimension vector of the image over R^op (vertex order 1, 2, 3)
C43_DELTA_TABLE = [
    ([4, 5, 6], (0, 1, 0)),
    ([5, 6], (1, 1, 1)),
    ([5], (0, 0, 1)),
    ([6], (1, 1, 0)),
]


# -- section 4.6: the bad case with hereditary R* --------------------------------


def algebra_s_46() -> BoundQuiverAlgebra:
    q = Quiver([4, 5, 6], [("sa", 4, 5), ("sb", 5, 6)])
    return build_algebra(q, [])


def algebra_r_46() -> BoundQuiverAlgebra:
    q = Quiver([1, 2, 3], [("a", 1, 2), ("b", 2, 3)])
    return build_algebra(q, [Relation([(1, ("a", "b"))])])


def algebra_r_star_46() -> BoundQuiverAlgebra:
    q = Quiver([1, 2, 3], [("a", 1, 2), ("b", 2, 3)])
    return build_algebra(q, [])


C46_BASIS = ["6_3", "6_2", "4_2", "5_2", "4_1"]


def bimodule_c_46(s=None, r=None) -> Bimodule:
    s = s or algebra_s_46()
    r = r or algebra_r_46()
    names = C46_BASIS
    left_ops = {
        "sa": _op(names, {"4_2": "5_2"}),
        "sb": _op(names, {"5_2": "6_2"}),
    }
    right_ops = {
        "a": _op(names, {"4_2": "4_1"}),
        "b": _op(names, {"6_3": "6_2"}),
    }
    return make_bimodule(
        s,
        r,
        [int(x.split("_")[0]) for x in names],
        [int(x.split("_")[1]) for x in names],
        left_ops,
        right_ops,
    )


U46_BASIS = ["4_3", "4_2", "4_1", "5_3", "5_2", "6_3", "6_2"]


def bimodule_u_46(s=None, r_star=None) -> Bimodule:
    """Picture 6: the S-R* bimodule realizing the left envelope."""
    s = s or algebra_s_46()
    r_star = r_star or algebra_r_star_46()
    names = U46_BASIS
    left_ops = {
        "sa": _op(names, {"4_3": "5_3", "4_2": "5_2"}),
        "sb": _op(names, {"5_3": "6_3", "5_2": "6_2"}),
    }
    right_ops = {
        "a": _op(names, {"4_2": "4_1"}),
        "b": _op(names, {"4_3": "4_2", "5_3": "5_2", "6_3": "6_2"}),
    }
    return make_bimodule(
        s,
        r_star,
        [int(x.split("_")[0]) for x in names],
        [int(x.split("_")[1]) for x in names],
        left_ops,
        right_ops,
    )


def morphism_f_46(r_star=None, r=None) -> AlgebraMorphism:
    return AlgebraMorphism.identity_on_generators(
        r_star or algebra_r_star_46(), r or algebra_r_46()
    )


C46_DELTA_TABLE = [
    ([6], (0, 1, 1)),
    ([4, 5, 6], (1, 1, 0)),
    ([4], (1, 0, 0)),
    ([5, 6], (0, 1, 0)),
]


# -- section 4.7: the bad case with non-hereditary R* ----------------------------


def algebra_s_47() -> BoundQuiverAlgebra:
    q = Quiver([3, 4], [("c", 3, 4), ("d", 4, 3)])
    return build_algebra(q, [Relation([(1, ("d", "c"))])])


def algebra_r_47() -> BoundQuiverAlgebra:
    q = Quiver([1, 2], [("a", 1, 2), ("b", 2, 1)])
    return build_algebra(q, [Relation([(1, ("b", "a"))])])


def algebra_r_star_47() -> BoundQuiverAlgebra:
    """The paper prints the relation as a length-3 cycle at vertex 1; the
    picture of U forces the rotated cycle at vertex 2 instead (see the
    decisions ledger)."""
    q = Quiver([1, 2], [("a", 1, 2), ("b", 2, 1)])
    return build_algebra(q, [Relation([(1, ("b", "a", "b"))])])


C47_BASIS = ["3_1", "4_1", "3x1", "3_2"]


def bimodule_c_47(s=None, r=None) -> Bimodule:
    s = s or algebra_s_47()
    r = r or algebra_r_47()
    names = C47_BASIS
    left_ops = {
        "c": _op(names, {"3_1": "4_1"}),
        "d": _op(names, {"4_1": "3x1"}),
    }
    right_ops = {
        "a": _op(names, {"3_2": "3x1"}),
        "b": _op(names, {"3_1": "3_2"}),
    }
    left_labels = [int(x[0]) for x in names]
    right_labels = [int(x[-1]) for x in names]
    return make_bimodule(s, r, left_labels, right_labels, left_ops, right_ops)


U47_BASIS = ["3_2", "3_1", "4_2", "4_1", "3y2", "3y1"]


def bimodule_u_47(s=None, r_star=None) -> Bimodule:
    """Picture 7: the S-R* bimodule realizing the left envelope."""
    s = s or algebra_s_47()
    r_star = r_star or algebra_r_star_47()
    names = U47_BASIS
    left_ops = {
        "c": _op(names, {"3_2": "4_2", "3_1": "4_1"}),
        "d": _op(names, {"4_2": "3y2", "4_1": "3y1"}),
    }
    right_ops = {
        "a": _op(names, {"3_2": "3_1", "4_2": "4_1", "3y2": "3y1"}),
        "b": _op(names, {"3_1": "3y2"}),
    }
    left_labels = [int(x[0]) for x in names]
    right_labels = [int(x[-1]) for x in names]
    return make_bimodule(s, r_star, left_labels, right_labels, left_ops, right_ops)


def morphism_f_47(r_star=None, r=None) -> AlgebraMorphism:
    return AlgebraMorphism.identity_on_generators(
        r_star or algebra_r_star_47(), r or algebra_r_47()
    )


C47_DELTA_TABLE = [
    ([3, 4, 3], (2, 1)),
    ([3], (1, 1)),
    ([4, 3], (1, 0)),
]


def family_happel_ringel() -> Dict:
    a = e6_algebra()
    b = endomorphism_algebra_b()
    return {"A": a, "B": b, "T": happel_ringel_bimodule(a, b)}


def family_radsq() -> Dict:
    a = radsq_algebra()
    mods = radsq_modules(a)
    return {"A": a, "modules": mods, "universe_names": list(RADSQ_UNIVERSE)}


def family_nakayama(n: int) -> Dict:
    a = nakayama_algebra(n)
    return {"A": a, "T": nakayama_t(a, n), "n": n}


def family_43() -> Dict:
    s = algebra_s_43()
    r = algebra_r_43()
    return {
        "S": s,
        "R": r,
        "C": bimodule_c_43(s, r),
        "D_left": bimodule_d_43(s, r),
        "D_right": bimodule_d_43_right(s, r),
    }


def family_46() -> Dict:
    s = algebra_s_46()
    r = algebra_r_46()
    r_star = algebra_r_star_46()
    return {
        "S": s,
        "R": r,
        "R_star": r_star,
        "C": bimodule_c_46(s, r),
        "U": bimodule_u_46(s, r_star),
        "F": morphism_f_46(r_star, r),
    }


def family_47() -> Dict:
    s = algebra_s_47()
    r = algebra_r_47()
    r_star = algebra_r_star_47()
    return {
        "S": s,
        "R": r,
        "R_star": r_star,
        "C": bimodule_c_47(s, r),
        "U": bimodule_u_47(s, r_star),
        "F": morphism_f_47(r_star, r),
    }


def _main():
    from . import io_json

    io_json.write_fixture_corpus()


if __name__ == "__main__":
    _main()
