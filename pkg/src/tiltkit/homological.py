"""Projective covers, injective envelopes, resolutions, Ext, pd and id."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .linalg import Mat, complement_coords, rank, row_span, span_contains
from .modules import (
    ModuleMap,
    ProjSum,
    Representation,
    duality_D,
    hom_dim,
    radical_submodule,
    socle,
    zero_module,
)


class Resolution:
    """A projective resolution P_k -> ... -> P_0 -> M with structured levels."""

    def __init__(
        self,
        module: Representation,
        levels: List[ProjSum],
        differentials: List[ModuleMap],
        augmentation: ModuleMap,
        complete: bool,
    ):
        self.module = module
        self.levels = levels
        self.differentials = differentials  # differentials[k]: P_{k+1} -> P_k
        self.augmentation = augmentation
        self.complete = complete  # True when the last kernel is zero

    @property
    def modules(self) -> List[Representation]:
        return [ps.rep for ps in self.levels]

    def length(self) -> int:
        return len(self.levels) - 1

    def verify(self, minimal: bool = True) -> bool:
        """Surjective augmentation, exactness, minimality of differentials."""
        if not self.augmentation.is_surjective():
            return False
        maps = [self.augmentation] + self.differentials
        for k in range(1, len(maps)):
            if not maps[k - 1].compose(maps[k]).is_zero():
                return False
            img, _ = maps[k].image()
            ker, _ = maps[k - 1].kernel()
            if img.dim_vector() != ker.dim_vector():
                return False
        if self.complete and self.differentials:
            last = self.differentials[-1]
            if not last.is_injective():
                return False
        if minimal:
            for k in range(1, len(maps)):
                tgt = maps[k].target
                rad, rad_incl = radical_submodule(tgt)
                for v in tgt.algebra.quiver.vertices:
                    span = row_span(
                        [rad_incl.vertex_maps[v].col(j) for j in range(rad.dims[v])],
                        tgt.dims[v],
                    )
                    mat = maps[k].vertex_maps[v]
                    for j in range(mat.n):
                        if not span_contains(span, mat.col(j)):
                            return False
        return True


def projective_cover(m: Representation) -> Tuple[Representation, ModuleMap]:
    ps, epi = projective_cover_structured(m)
    return ps.rep, epi


def projective_cover_structured(m: Representation) -> Tuple[ProjSum, ModuleMap]:
    algebra = m.algebra
    if m.is_zero():
        ps = ProjSum(algebra, [])
        return ps, ModuleMap(ps.rep, m, {}, check=False)
    copies = []
    images: List[List[Fraction]] = []
    for v in algebra.quiver.vertices:
        vecs = []
        for name in algebra.quiver.arrows_into(v):
            mat = m.maps[name]
            vecs.extend(mat.col(j) for j in range(mat.n))
        span = row_span(vecs, m.dims[v])
        for j in complement_coords(span):
            copies.append(v)
            vec = [Fraction(0)] * m.dims[v]
            vec[j] = Fraction(1)
            images.append(vec)
    ps = ProjSum(algebra, copies)
    epi = ps.map_from_generator_images(m, images)
    if not epi.is_surjective():
        raise ValueError("projective cover construction failed to surject")
    return ps, epi


def injective_envelope(m: Representation) -> Tuple[Representation, ModuleMap]:
    """E(M) = D(projective cover of D(M)), with the essential mono."""
    algebra = m.algebra
    if m.is_zero():
        z = zero_module(algebra)
        return z, ModuleMap(m, z, {}, check=False)
    dm = duality_D(m)
    p, epi = projective_cover(dm)
    env = duality_D(p)
    mono = ModuleMap(
        m,
        env,
        {v: epi.vertex_maps[v].transpose() for v in epi.vertex_maps},
        check=False,
    )
    return env, mono


def is_essential_extension(mono: ModuleMap) -> bool:
    """A mono into E is essential iff soc(E) lies inside its image."""
    env = mono.target
    soc, soc_incl = socle(env)
    for v in env.algebra.quiver.vertices:
        img = row_span(
            [mono.vertex_maps[v].col(j) for j in range(mono.vertex_maps[v].n)],
            env.dims[v],
        )
        for j in range(soc.dims[v]):
            if not span_contains(img, soc_incl.vertex_maps[v].col(j)):
                return False
    return True


def projective_resolution(m: Representation, max_length: int) -> Resolution:
    """Minimal resolution by iterated covers, truncated at ``max_length``."""
    ps0, epi = projective_cover_structured(m)
    levels = [ps0]
    differentials: List[ModuleMap] = []
    current_epi = epi
    complete = False
    for _ in range(max_length):
        ker, incl = current_epi.kernel()
        if ker.is_zero():
            complete = True
            break
        ps, cover_epi = projective_cover_structured(ker)
        differentials.append(incl.compose(cover_epi))
        levels.append(ps)
        current_epi = cover_epi
    else:
        ker, _ = current_epi.kernel()
        complete = ker.is_zero()
    return Resolution(m, levels, differentials, epi, complete)


def _hom_complex_matrices(res: Resolution, n: Representation) -> List[Mat]:
    """Matrices of Hom(P_k, N) -> Hom(P_{k+1}, N), f -> f . d_{k+1}.

    Hom(P, N) is identified with the direct sum of N at the copies' top
    vertices, via generator images.
    """
    out = []
    for k, d in enumerate(res.differentials):
        src_ps = res.levels[k]
        tgt_ps = res.levels[k + 1]
        src_dim = sum(n.dims[v] for v in src_ps.copies)
        tgt_dim = sum(n.dims[v] for v in tgt_ps.copies)
        mat = Mat.zeros(tgt_dim, src_dim)
        src_offsets = []
        off = 0
        for v in src_ps.copies:
            src_offsets.append(off)
            off += n.dims[v]
        tgt_offsets = []
        off = 0
        for v in tgt_ps.copies:
            tgt_offsets.append(off)
            off += n.dims[v]
        for c_t, (v_t, pos) in enumerate(tgt_ps.generator_positions()):
            dvec = d.vertex_maps[v_t].col(pos)  # in P_k at vertex v_t
            for idx, coeff in enumerate(dvec):
                if not coeff:
                    continue
                c_s, path = src_ps.block_paths[v_t][idx]
                act = n.path_action(path)  # N at source of path -> N at v_t
                for i in range(act.m):
                    for j in range(act.n):
                        if act.rows[i][j]:
                            mat.rows[tgt_offsets[c_t] + i][
                                src_offsets[c_s] + j
                            ] += coeff * act.rows[i][j]
        out.append(mat)
    return out


def ext_from_resolution(res: Resolution, n: Representation, i: int) -> int:
    """dim of the i-th cohomology of Hom(resolution, N)."""
    hom_dims = [sum(n.dims[v] for v in ps.copies) for ps in res.levels]
    if i > res.length():
        if res.complete:
            return 0
        raise ValueError("resolution too short for requested degree")
    mats = _hom_complex_matrices(res, n)
    rank_in = rank(mats[i - 1]) if i >= 1 else 0
    rank_out = rank(mats[i]) if i < len(mats) else 0
    return hom_dims[i] - rank_out - rank_in


def ext(m: Representation, n: Representation, i: int) -> int:
    """dim Ext^i(M, N); degree 0 gives dim Hom(M, N)."""
    if i < 0:
        raise ValueError("negative Ext degree")
    if m.is_zero() or n.is_zero():
        return 0
    if i == 0:
        return hom_dim(m, n)
    res = projective_resolution(m, i + 1)
    if res.length() < i:
        return 0
    return ext_from_resolution(res, n, i)


def projective_dimension(m: Representation, bound: Optional[int] = None) -> Optional[int]:
    """Length of the minimal resolution, or None when it exceeds the bound."""
    if m.is_zero():
        return 0
    if bound is None:
        bound = 2 * m.algebra.dimension
    res = projective_resolution(m, bound)
    if res.complete:
        return res.length()
    return None


def injective_dimension(m: Representation, bound: Optional[int] = None) -> Optional[int]:
    return projective_dimension(duality_D(m), bound)


def pad_resolution(res: Resolution, vertex, level: int = 1) -> Resolution:
    """A homotopy-equivalent non-minimal resolution.

    Splices the contractible piece P(vertex) = P(vertex) into degrees
    ``level`` and ``level + 1``; Ext computed from the result must agree
    with the minimal resolution.
    """
    algebra = res.module.algebra
    top = res.length()
    if not 1 <= level <= top:
        raise ValueError("padding level out of range")
    new_copies = []
    for k, ps in enumerate(res.levels):
        copies = list(ps.copies)
        if k in (level, level + 1):
            copies.append(vertex)
        new_copies.append(copies)
    if level + 1 > top:
        new_copies.append([vertex])
    new_levels = [ProjSum(algebra, c) for c in new_copies]

    def widened(vec: List[Fraction], k: int, v_t) -> List[Fraction]:
        out = [Fraction(0)] * new_levels[k].rep.dims[v_t]
        for i, x in enumerate(vec):
            out[i] = x
        return out

    new_diffs = []
    for k in range(len(new_levels) - 1):
        src = new_levels[k + 1]
        tgt_rep = new_levels[k].rep
        old_d = res.differentials[k] if k < len(res.differentials) else None
        n_old = len(res.levels[k + 1].copies) if k + 1 <= top else 0
        images = []
        for c, v in enumerate(src.copies):
            if c < n_old:
                v_t, pos = res.levels[k + 1].generator_positions()[c]
                images.append(widened(old_d.vertex_maps[v_t].col(pos), k, v_t))
            elif k + 1 == level + 1:
                # padding generator maps onto the padding generator below
                pad_idx = len(new_levels[k].copies) - 1
                v_t, pos = new_levels[k].generator_positions()[pad_idx]
                unit = [Fraction(0)] * tgt_rep.dims[v_t]
                unit[pos] = Fraction(1)
                images.append(unit)
            else:
                # the padding copy at `level` itself maps to zero
                images.append([Fraction(0)] * tgt_rep.dims[v])
        new_diffs.append(src.map_from_generator_images(tgt_rep, images))
    images = []
    for c, v in enumerate(new_levels[0].copies):
        v_t, pos = res.levels[0].generator_positions()[c]
        images.append(res.augmentation.vertex_maps[v_t].col(pos))
    aug = new_levels[0].map_from_generator_images(res.module, images)
    return Resolution(res.module, new_levels, new_diffs, aug, res.complete)
