"""Exact rational linear algebra on small dense matrices.

Everything is a :class:`Mat`: an m-by-n matrix of ``fractions.Fraction``
entries acting on column vectors.  No floating point anywhere.  Reduced
row echelon forms are canonical, so kernels, images and solution sets are
deterministic across runs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Vec = List[Fraction]


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError("not an exact scalar: %r" % (x,))


class Mat:
    """Dense exact matrix.  Rows are lists of Fractions."""

    __slots__ = ("m", "n", "rows")

    def __init__(self, m: int, n: int, rows: Optional[Sequence[Sequence]] = None):
        self.m = m
        self.n = n
        if rows is None:
            self.rows = [[Fraction(0)] * n for _ in range(m)]
        else:
            if len(rows) != m:
                raise ValueError("row count mismatch")
            self.rows = [[frac(x) for x in row] for row in rows]
            for row in self.rows:
                if len(row) != n:
                    raise ValueError("column count mismatch")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], n: Optional[int] = None) -> "Mat":
        m = len(rows)
        if m == 0:
            if n is None:
                raise ValueError("empty matrix needs explicit width")
            return cls(0, n)
        return cls(m, len(rows[0]), rows)

    @classmethod
    def zeros(cls, m: int, n: int) -> "Mat":
        return cls(m, n)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        a = cls(n, n)
        for i in range(n):
            a.rows[i][i] = Fraction(1)
        return a

    @classmethod
    def column(cls, vec: Sequence) -> "Mat":
        return cls(len(vec), 1, [[x] for x in vec])

    def copy(self) -> "Mat":
        c = Mat(self.m, self.n)
        c.rows = [row[:] for row in self.rows]
        return c

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.m == other.m
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.m, self.n, tuple(tuple(r) for r in self.rows)))

    def __repr__(self) -> str:
        return "Mat(%d,%d,%r)" % (self.m, self.n, [[str(x) for x in r] for r in self.rows])

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def transpose(self) -> "Mat":
        t = Mat(self.n, self.m)
        for i in range(self.m):
            ri = self.rows[i]
            for j in range(self.n):
                t.rows[j][i] = ri[j]
        return t

    def __add__(self, other: "Mat") -> "Mat":
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("shape mismatch")
        c = Mat(self.m, self.n)
        c.rows = [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        ]
        return c

    def __sub__(self, other: "Mat") -> "Mat":
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> "Mat":
        c = frac(c)
        out = Mat(self.m, self.n)
        out.rows = [[c * x for x in row] for row in self.rows]
        return out

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.n != other.m:
            raise ValueError("shape mismatch in product")
        out = Mat(self.m, other.n)
        orows = other.rows
        for i in range(self.m):
            srow = self.rows[i]
            orow = out.rows[i]
            for k in range(self.n):
                s = srow[k]
                if s:
                    trow = orows[k]
                    for j in range(other.n):
                        if trow[j]:
                            orow[j] += s * trow[j]
        return out

    def apply(self, vec: Sequence) -> Vec:
        if len(vec) != self.n:
            raise ValueError("vector length mismatch")
        return [
            sum((row[j] * vec[j] for j in range(self.n) if vec[j]), Fraction(0))
            for row in self.rows
        ]

    def col(self, j: int) -> Vec:
        return [self.rows[i][j] for i in range(self.m)]


def mmul(*mats: Mat) -> Mat:
    out = mats[0]
    for a in mats[1:]:
        out = out @ a
    return out


def hstack(blocks: Sequence[Mat]) -> Mat:
    m = blocks[0].m
    n = sum(b.n for b in blocks)
    out = Mat(m, n)
    off = 0
    for b in blocks:
        if b.m != m:
            raise ValueError("hstack height mismatch")
        for i in range(m):
            out.rows[i][off : off + b.n] = b.rows[i]
        off += b.n
    return out


def vstack(blocks: Sequence[Mat]) -> Mat:
    n = blocks[0].n
    rows = []
    for b in blocks:
        if b.n != n:
            raise ValueError("vstack width mismatch")
        rows.extend(row[:] for row in b.rows)
    return Mat(len(rows), n, rows)


def block_diag(blocks: Sequence[Mat]) -> Mat:
    m = sum(b.m for b in blocks)
    n = sum(b.n for b in blocks)
    out = Mat(m, n)
    ro = co = 0
    for b in blocks:
        for i in range(b.m):
            out.rows[ro + i][co : co + b.n] = b.rows[i]
        ro += b.m
        co += b.n
    return out


def rref(a: Mat) -> Tuple[Mat, List[int]]:
    """Reduced row echelon form; returns (R, pivot column indices)."""
    r = a.copy()
    rows, m, n = r.rows, r.m, r.n
    pivots: List[int] = []
    pr = 0
    for pc in range(n):
        best = None
        for i in range(pr, m):
            x = rows[i][pc]
            if x:
                # prefer +-1 pivots to keep fractions small
                if x == 1 or x == -1:
                    best = i
                    break
                if best is None:
                    best = i
        if best is None:
            continue
        rows[pr], rows[best] = rows[best], rows[pr]
        piv = rows[pr][pc]
        if piv != 1:
            inv = Fraction(1) / piv
            rows[pr] = [x * inv for x in rows[pr]]
        prow = rows[pr]
        for i in range(m):
            if i != pr and rows[i][pc]:
                c = rows[i][pc]
                ri = rows[i]
                for j in range(pc, n):
                    if prow[j]:
                        ri[j] -= c * prow[j]
        pivots.append(pc)
        pr += 1
        if pr == m:
            break
    return r, pivots


def rank(a: Mat) -> int:
    return len(rref(a)[1])


def nullspace(a: Mat) -> List[Vec]:
    """Canonical basis of {x : a x = 0}, one vector per free column."""
    r, pivots = rref(a)
    pivset = set(pivots)
    free = [j for j in range(a.n) if j not in pivset]
    basis = []
    for j in free:
        v = [Fraction(0)] * a.n
        v[j] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -r.rows[i][j]
        basis.append(v)
    return basis


def solve(a: Mat, b: Sequence) -> Optional[Vec]:
    """One solution of a x = b, or None."""
    aug = hstack([a, Mat.column([frac(x) for x in b])])
    r, pivots = rref(aug)
    if a.n in pivots:
        return None
    x = [Fraction(0)] * a.n
    for i, pc in enumerate(pivots):
        x[pc] = r.rows[i][a.n]
    return x


def solve_mat(a: Mat, b: Mat) -> Optional[Mat]:
    """X with a X = b, or None."""
    aug = hstack([a, b])
    r, pivots = rref(aug)
    if any(pc >= a.n for pc in pivots):
        return None
    x = Mat(a.n, b.n)
    for i, pc in enumerate(pivots):
        x.rows[pc] = r.rows[i][a.n :]
    return x


def inverse(a: Mat) -> Optional[Mat]:
    if a.m != a.n:
        return None
    x = solve_mat(a, Mat.identity(a.n))
    if x is None:
        return None
    if (a @ x) == Mat.identity(a.n):
        return x
    return None


def row_span(vectors: Sequence[Sequence], n: int) -> Mat:
    """Canonical (rref, nonzero rows) basis of the span of row vectors."""
    rows = [[frac(x) for x in v] for v in vectors]
    if not rows:
        return Mat(0, n)
    r, pivots = rref(Mat(len(rows), n, rows))
    return Mat(len(pivots), n, r.rows[: len(pivots)])


def span_contains(span: Mat, v: Sequence) -> bool:
    """Membership test; ``span`` must be in rref-row form."""
    v = [frac(x) for x in v]
    _, pivots = rref(span)
    for i, pc in enumerate(pivots):
        if v[pc]:
            c = v[pc]
            row = span.rows[i]
            for j in range(span.n):
                v[j] -= c * row[j]
    return all(x == 0 for x in v)


def span_sum(a: Mat, b: Mat) -> Mat:
    return row_span(a.rows + b.rows, a.n)


def complement_coords(span: Mat) -> List[int]:
    """Echelon complement: the non-pivot coordinates of a rref row span."""
    _, pivots = rref(span)
    pivset = set(pivots)
    return [j for j in range(span.n) if j not in pivset]


def quotient_projection(span: Mat) -> Mat:
    """Projection onto echelon-complement coordinates modulo the row span.

    Returns a (n - dim span) x n matrix q with q v = class of v in the
    quotient, expressed in the complement coordinates.
    """
    r, pivots = rref(span)
    free = complement_coords(span)
    n = span.n
    q = Mat(len(free), n)
    for k, j in enumerate(free):
        q.rows[k][j] = Fraction(1)
        for i, pc in enumerate(pivots):
            q.rows[k][pc] = -r.rows[i][j]
    return q


def charpoly(a: Mat) -> List[Fraction]:
    """Characteristic polynomial coefficients [c0, ..., cn] of det(xI - a)."""
    # Faddeev-LeVerrier; exact and simple for the small sizes used here.
    n = a.m
    if n != a.n:
        raise ValueError("square matrix required")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = Mat.zeros(n, n)
    ident = Mat.identity(n)
    for k in range(1, n + 1):
        m = a @ (m + ident.scale(coeffs[n - k + 1])) if k > 1 else a.copy()
        tr = sum(m.rows[i][i] for i in range(n))
        coeffs[n - k] = -tr / k
    return coeffs


def rational_roots(coeffs: List[Fraction]) -> List[Fraction]:
    """All rational roots of the polynomial with the given coefficients."""
    # clear denominators
    from math import gcd

    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        return []
    lead = ints[-1]
    # strip x^k factor: zero is a root if the trailing coefficient vanishes
    roots = []
    k = 0
    while k < len(ints) and ints[k] == 0:
        k += 1
    if k > 0:
        roots.append(Fraction(0))
    tail = ints[k:]
    a0 = tail[0]

    def divisors(x: int) -> List[int]:
        x = abs(x)
        out = []
        d = 1
        while d * d <= x:
            if x % d == 0:
                out.append(d)
                out.append(x // d)
            d += 1
        return sorted(set(out))

    def val(r: Fraction) -> Fraction:
        s = Fraction(0)
        for c in reversed(tail):
            s = s * r + c
        return s

    if abs(a0) > 10**12:
        # keep divisor enumeration honest on huge constants
        cand = [Fraction(p, q) for p in range(-24, 25) for q in (1, 2, 3) if p]
    else:
        cand = []
        for p in divisors(a0):
            for q in divisors(lead):
                cand.extend(
                    [Fraction(p, q), Fraction(-p, q)]
                )
    seen = set()
    for r in cand:
        if r in seen:
            continue
        seen.add(r)
        if val(r) == 0:
            roots.append(r)
    return sorted(set(roots))
