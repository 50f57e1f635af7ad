"""Exact integer and rational linear algebra with small convex hulls.

Everything runs over Python ints and fractions.Fraction; no floats.  The
matrices that show up downstream (curve-graph boundary maps, region
incidence systems, first-homology presentations) have at most a few hundred
entries, so every routine favours verifiability over speed: Smith normal
forms are re-multiplied before they are returned, integer solves are checked
against their defining equations, and hulls are found by facet enumeration
in affinely reduced coordinates.

Matrices are rectangular lists of rows; vectors are tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations


# ---------------------------------------------------------------------------
# matrix plumbing


def _shape(a: list[list[int]]) -> tuple[int, int]:
    """Return (rows, cols), insisting the matrix is rectangular."""
    m = len(a)
    if m == 0:
        return 0, 0
    n = len(a[0])
    for row in a:
        if len(row) != n:
            raise ValueError("matrix is not rectangular")
    return m, n


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    ma, na = _shape(a)
    mb, nb = _shape(b)
    if na != mb:
        raise ValueError(f"cannot multiply {ma}x{na} by {mb}x{nb}")
    return [[sum(a[i][k] * b[k][j] for k in range(na)) for j in range(nb)]
            for i in range(ma)]


def mat_vec(a: list[list[int]], v: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    m, n = _shape(a)
    if len(v) != n:
        raise ValueError(f"vector length {len(v)} does not match {m}x{n}")
    return tuple(sum(a[i][j] * v[j] for j in range(n)) for i in range(m))


def vec_mat(v: tuple[int, ...] | list[int], a: list[list[int]]) -> tuple[int, ...]:
    """Row vector times matrix."""
    m, n = _shape(a)
    if len(v) != m:
        raise ValueError(f"vector length {len(v)} does not match {m}x{n}")
    return tuple(sum(v[i] * a[i][j] for i in range(m)) for j in range(n))


def exact_det(a: list[list[int]] | list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    m, n = _shape(a)
    if m != n:
        raise ValueError("determinant of a non-square matrix")
    w = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if w[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            w[c], w[piv] = w[piv], w[c]
            det = -det
        det *= w[c][c]
        inv = 1 / w[c][c]
        for r in range(c + 1, n):
            if w[r][c] != 0:
                f = w[r][c] * inv
                w[r] = [x - f * y for x, y in zip(w[r], w[c])]
    return det


def _frac_rank(rows: list[list[Fraction]]) -> int:
    """Rank of a list of Fraction row vectors (destructive on a copy)."""
    w = [row[:] for row in rows]
    rank = 0
    cols = len(w[0]) if w else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(w)) if w[r][c] != 0), None)
        if piv is None:
            continue
        w[rank], w[piv] = w[piv], w[rank]
        inv = 1 / w[rank][c]
        for r in range(len(w)):
            if r != rank and w[r][c] != 0:
                f = w[r][c] * inv
                w[r] = [x - f * y for x, y in zip(w[r], w[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SNFResult:
    """U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ..."""

    u: tuple[tuple[int, ...], ...]
    d: tuple[tuple[int, ...], ...]
    v: tuple[tuple[int, ...], ...]

    @property
    def diagonal(self) -> tuple[int, ...]:
        m = len(self.d)
        n = len(self.d[0]) if m else 0
        return tuple(self.d[i][i] for i in range(min(m, n)))

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def smith_normal_form(a: list[list[int]]) -> SNFResult:
    """Smith normal form with unimodular transforms, verified by multiplication.

    Classic pivoting: repeatedly move a least-magnitude entry to the pivot
    slot, clear its row and column, and fold non-divisible entries back into
    the pivot row.  Total, including empty matrices.
    """
    m, n = _shape(a)
    d = [[int(x) for x in row] for row in a]
    u = _identity(m)
    v = _identity(n)

    def row_sub(i: int, j: int, q: int) -> None:
        d[i] = [x - q * y for x, y in zip(d[i], d[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_sub(j: int, i: int, q: int) -> None:
        for row in d:
            row[j] -= q * row[i]
        for row in v:
            row[j] -= q * row[i]

    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if d[i][j] != 0 and (pivot is None
                                     or abs(d[i][j]) < abs(d[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            d[t], d[pivot[0]] = d[pivot[0]], d[t]
            u[t], u[pivot[0]] = u[pivot[0]], u[t]
        if pivot[1] != t:
            for row in d:
                row[t], row[pivot[1]] = row[pivot[1]], row[t]
            for row in v:
                row[t], row[pivot[1]] = row[pivot[1]], row[t]

        dirty = False
        for i in range(m):
            if i != t and d[i][t] != 0:
                row_sub(i, t, d[i][t] // d[t][t])
                dirty = dirty or d[i][t] != 0
        for j in range(n):
            if j != t and d[t][j] != 0:
                col_sub(j, t, d[t][j] // d[t][t])
                dirty = dirty or d[t][j] != 0
        if dirty:
            continue

        offender = None
        for i in range(t + 1, m):
            if any(d[i][j] % d[t][t] != 0 for j in range(t + 1, n)):
                offender = i
                break
        if offender is not None:
            row_sub(t, offender, -1)
            continue

        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    result = SNFResult(
        u=tuple(tuple(row) for row in u),
        d=tuple(tuple(row) for row in d),
        v=tuple(tuple(row) for row in v),
    )
    _verify_snf(a, result)
    return result


def _verify_snf(a: list[list[int]], res: SNFResult) -> None:
    m, n = _shape(a)
    u = [list(r) for r in res.u]
    v = [list(r) for r in res.v]
    d = [list(r) for r in res.d]
    if m and n:
        if mat_mul(mat_mul(u, [list(r) for r in a]), v) != d:
            raise AssertionError("SNF verification failed: U*A*V != D")
    for i in range(m):
        for j in range(n):
            if i != j and d[i][j] != 0:
                raise AssertionError("SNF verification failed: D not diagonal")
    diag = res.diagonal
    for x, y in zip(diag, diag[1:]):
        if x == 0 and y != 0:
            raise AssertionError("SNF verification failed: zero before nonzero")
        if x != 0 and y % x != 0:
            raise AssertionError("SNF verification failed: divisibility chain")
    if m and abs(exact_det(u)) != 1:
        raise AssertionError("SNF verification failed: U not unimodular")
    if n and abs(exact_det(v)) != 1:
        raise AssertionError("SNF verification failed: V not unimodular")


def unimodular_inverse(a: list[list[int]] | tuple[tuple[int, ...], ...]) -> list[list[int]]:
    """Exact inverse of a unimodular integer matrix (integer entries)."""
    rows = [list(r) for r in a]
    m, n = _shape(rows)
    if m != n:
        raise ValueError("inverse of a non-square matrix")
    w = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for c in range(n):
        piv = next((r for r in range(c, n) if w[r][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        w[c], w[piv] = w[piv], w[c]
        inv = 1 / w[c][c]
        w[c] = [x * inv for x in w[c]]
        for r in range(n):
            if r != c and w[r][c] != 0:
                f = w[r][c]
                w[r] = [x - f * y for x, y in zip(w[r], w[c])]
    out = [[w[i][n + j] for j in range(n)] for i in range(n)]
    for row in out:
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in out]


# ---------------------------------------------------------------------------
# integer kernels and affine solves


def integer_kernel_basis(a: list[list[int]]) -> list[tuple[int, ...]]:
    """Basis of the saturated lattice {v : A v = 0} over the integers.

    The kernel is read off the column transform of the Smith normal form:
    columns of V beyond the rank map to zero columns of D.
    """
    m, n = _shape(a)
    if n == 0:
        return []
    snf = smith_normal_form(a)
    basis = [tuple(snf.v[i][j] for i in range(n)) for j in range(snf.rank, n)]
    for vec in basis:
        if any(x != 0 for x in mat_vec(a, vec)):
            raise AssertionError("kernel verification failed")
    return basis


class Infeasible:
    """Value returned by solve_integer_affine when no integer solution exists."""

    __slots__ = ()

    def __repr__(self) -> str:  # pragma: no cover
        return "Infeasible"


INFEASIBLE = Infeasible()


class LinearSolver:
    """A x = b solver over the integers with a precomputed factorization.

    Callers that solve against one matrix many times (connecting domains,
    cycle-basis coordinates) keep one of these around.
    """

    def __init__(self, a: list[list[int]]):
        self.m, self.n = _shape(a)
        self.a = [list(row) for row in a]
        self.snf = smith_normal_form(a) if self.n or self.m else None
        self.rank = self.snf.rank if self.snf else 0

    def kernel_basis(self) -> list[tuple[int, ...]]:
        if self.snf is None:
            return []
        return [tuple(self.snf.v[i][j] for i in range(self.n))
                for j in range(self.rank, self.n)]

    def solve(self, b: tuple[int, ...] | list[int]) -> tuple[int, ...] | None:
        """One integer solution of A x = b, or None when infeasible."""
        if len(b) != self.m:
            raise ValueError("right-hand side has the wrong length")
        if self.snf is None:
            return () if all(x == 0 for x in b) else None
        c = mat_vec([list(r) for r in self.snf.u], b)
        diag = self.snf.diagonal
        z = [0] * self.n
        for i in range(self.m):
            di = diag[i] if i < len(diag) else 0
            if di == 0:
                if c[i] != 0:
                    return None
            else:
                if c[i] % di != 0:
                    return None
                if i < self.n:
                    z[i] = c[i] // di
        x = mat_vec([list(r) for r in self.snf.v], z)
        if mat_vec(self.a, x) != tuple(b):
            raise AssertionError("integer solve verification failed")
        return x


def solve_integer_affine(a: list[list[int]],
                         b: tuple[int, ...] | list[int]) -> tuple[int, ...] | Infeasible:
    """Some integer solution of A x = b, or INFEASIBLE."""
    x = LinearSolver(a).solve(b)
    return INFEASIBLE if x is None else x


# ---------------------------------------------------------------------------
# linear algebra over the two-element field


def gf2_rank_kernel(a: list[list[int]],
                    cols: int | None = None) -> tuple[int, list[tuple[int, ...]]]:
    """(rank, kernel basis) of a matrix over GF(2).

    Rows are lists of ints reduced mod 2; `cols` is only needed when the
    matrix has no rows.  Internally rows become bitmasks with bit j = col j.
    """
    m = len(a)
    if m:
        n = len(a[0])
        for row in a:
            if len(row) != n:
                raise ValueError("matrix is not rectangular")
    else:
        if cols is None:
            raise ValueError("column count required for an empty matrix")
        n = cols
    masks = []
    for row in a:
        bits = 0
        for j, x in enumerate(row):
            if x & 1:
                bits |= 1 << j
        masks.append(bits)

    pivots: dict[int, int] = {}          # column -> reduced row mask
    for bits in masks:
        for c, prow in pivots.items():
            if bits >> c & 1:
                bits ^= prow
        if bits:
            c = (bits & -bits).bit_length() - 1
            for cc in list(pivots):
                if pivots[cc] >> c & 1:
                    pivots[cc] ^= bits
            pivots[c] = bits
    rank = len(pivots)

    kernel = []
    for f in range(n):
        if f in pivots:
            continue
        vec = [0] * n
        vec[f] = 1
        for c, prow in pivots.items():
            if prow >> f & 1:
                vec[c] = 1
        kernel.append(tuple(vec))
    for vec in kernel:
        for row in a:
            if sum(x * y for x, y in zip(row, vec)) % 2 != 0:
                raise AssertionError("GF(2) kernel verification failed")
    return rank, kernel


# ---------------------------------------------------------------------------
# exact convex hulls in low ambient dimension


class EmptyInput(ValueError):
    """convex_hull was handed no points."""


@dataclass(frozen=True)
class RatPolytope:
    """Vertex and facet descriptions of a rational polytope.

    Facets are pairs (normal, offset) with primitive integer normal; every
    point of the polytope satisfies normal . x >= offset, with equality on
    the facet.  For a hull of affine dimension dim < ambient_dim the facets
    cut out the polytope inside its affine hull only.
    """

    ambient_dim: int
    vertices: tuple[tuple[Fraction, ...], ...]
    facets: tuple[tuple[tuple[int, ...], Fraction], ...]
    dim: int


def _as_fraction_points(points) -> list[tuple[Fraction, ...]]:
    out = [tuple(Fraction(x) for x in p) for p in points]
    if not out:
        raise EmptyInput("convex_hull needs at least one point")
    n = len(out[0])
    if any(len(p) != n for p in out):
        raise ValueError("points have mixed dimensions")
    return out


def _affine_reduce(points: list[tuple[Fraction, ...]]):
    """Coordinates of the points inside their own affine hull.

    Returns (origin, basis rows B, reduced coords), where
    point = origin + coords . B exactly.
    """
    origin = points[0]
    basis: list[list[Fraction]] = []
    for p in points:
        delta = [x - o for x, o in zip(p, origin)]
        if any(x != 0 for x in delta) and _frac_rank(basis + [delta]) > len(basis):
            basis.append(delta)
    dim = len(basis)
    if dim == 0:
        return origin, basis, [() for _ in points]
    # Gram solve: coords c with c . B = p - origin; B rows independent.
    gram = [[sum(bi[k] * bj[k] for k in range(len(origin))) for bj in basis]
            for bi in basis]
    ginv = _frac_inverse(gram)
    coords = []
    for p in points:
        delta = [x - o for x, o in zip(p, origin)]
        rhs = [sum(b[k] * delta[k] for k in range(len(delta))) for b in basis]
        coords.append(tuple(sum(ginv[i][j] * rhs[j] for j in range(dim))
                            for i in range(dim)))
    return origin, basis, coords


def _frac_inverse(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    w = [row[:] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if w[r][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        w[c], w[piv] = w[piv], w[c]
        inv = 1 / w[c][c]
        w[c] = [x * inv for x in w[c]]
        for r in range(n):
            if r != c and w[r][c] != 0:
                f = w[r][c]
                w[r] = [x - f * y for x, y in zip(w[r], w[c])]
    return [[w[i][n + j] for j in range(n)] for i in range(n)]


def _primitive(normal: list[Fraction], offset: Fraction):
    """Scale (normal, offset) to a primitive integer normal."""
    from math import gcd
    denom = 1
    for x in normal:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in normal]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return None
    return tuple(x // g for x in ints), offset * denom / g


def _hull_reduced(coords: list[tuple[Fraction, ...]], dim: int):
    """Facets and vertex indices for full-dimensional coords in R^dim."""
    if dim == 1:
        lo = min(c[0] for c in coords)
        hi = max(c[0] for c in coords)
        facets = [((1,), lo), ((-1,), -hi)]
        verts = sorted({i for i, c in enumerate(coords) if c[0] in (lo, hi)})
        return facets, verts

    facets = set()
    idx = list(range(len(coords)))
    for subset in combinations(idx, dim):
        pts = [coords[i] for i in subset]
        w = [[pts[i][j] - pts[0][j] for j in range(dim)] for i in range(1, dim)]
        # normal by cofactor expansion; zero when the subset is degenerate
        normal = []
        for j in range(dim):
            minor = [[row[k] for k in range(dim) if k != j] for row in w]
            sign = -1 if j % 2 else 1
            normal.append(sign * (exact_det(minor) if minor else Fraction(1)))
        if all(x == 0 for x in normal):
            continue
        offset = sum(n * x for n, x in zip(normal, pts[0]))
        pos = neg = False
        for c in coords:
            s = sum(n * x for n, x in zip(normal, c)) - offset
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
            if pos and neg:
                break
        if pos and neg:
            continue
        if neg:
            normal = [-x for x in normal]
            offset = -offset
        prim = _primitive(normal, offset)
        if prim is not None:
            facets.add(prim)

    facet_list = sorted(facets)
    verts = []
    for i, c in enumerate(coords):
        active = [list(map(Fraction, n))
                  for n, off in facet_list
                  if sum(a * x for a, x in zip(n, c)) == off]
        if active and _frac_rank(active) == dim:
            verts.append(i)
    return facet_list, verts


def convex_hull(points) -> RatPolytope:
    """Exact convex hull of rational points in ambient dimension <= 8."""
    pts = _as_fraction_points(points)
    ambient = len(pts[0])
    if ambient > 8:
        raise ValueError("ambient dimension above the supported bound of 8")
    pts = sorted(set(pts))
    origin, basis, coords = _affine_reduce(pts)
    dim = len(basis)
    if dim == 0:
        return RatPolytope(ambient, (pts[0],), (), 0)

    red_facets, vert_idx = _hull_reduced(coords, dim)

    gram = [[sum(bi[k] * bj[k] for k in range(ambient)) for bj in basis]
            for bi in basis]
    ginv = _frac_inverse(gram)
    facets = []
    for normal, offset in red_facets:
        # reduced inequality n . c >= off pulls back along c = G^{-1} B (x - o)
        amb = [Fraction(0)] * ambient
        lifted = [sum(Fraction(normal[i]) * ginv[i][j] for i in range(dim))
                  for j in range(dim)]
        for j in range(dim):
            for k in range(ambient):
                amb[k] += lifted[j] * basis[j][k]
        off_amb = Fraction(offset) + sum(a * o for a, o in zip(amb, origin))
        prim = _primitive(amb, off_amb)
        if prim is not None:
            facets.append(prim)
    facets = sorted(set(facets))
    vertices = tuple(sorted(pts[i] for i in vert_idx))

    for normal, offset in facets:
        for p in pts:
            if sum(n * x for n, x in zip(normal, p)) < offset:
                raise AssertionError("hull verification failed: point outside facet")
    return RatPolytope(ambient, vertices, tuple(facets), dim)


def _triangulate(coords: list[tuple[Fraction, ...]]) -> list[list[tuple[Fraction, ...]]]:
    """Partition the hull of full-dimensional coords into simplices (by fanning)."""
    dim = len(coords[0])
    facets, vert_idx = _hull_reduced(coords, dim)
    verts = [coords[i] for i in vert_idx]
    if len(verts) == dim + 1:
        return [verts]
    apex = verts[0]
    simplices = []
    for normal, offset in facets:
        if sum(n * x for n, x in zip(normal, apex)) == offset:
            continue
        on_facet = [v for v in verts
                    if sum(n * x for n, x in zip(normal, v)) == offset]
        # facet coordinates live in one dimension lower
        f_origin, f_basis, f_coords = _affine_reduce(on_facet)
        for sub in _triangulate(f_coords):
            lifted = []
            for c in sub:
                point = list(f_origin)
                for w, b in zip(c, f_basis):
                    for k in range(len(point)):
                        point[k] += w * b[k]
                lifted.append(tuple(point))
            simplices.append([apex] + lifted)
    return simplices


def body_centroid(p: RatPolytope) -> tuple[Fraction, ...]:
    """Exact centroid of the polytope body under uniform measure on its hull."""
    if len(p.vertices) == 1:
        return p.vertices[0]
    origin, basis, coords = _affine_reduce(list(p.vertices))
    dim = len(basis)
    total = Fraction(0)
    acc = [Fraction(0)] * dim
    for simplex in _triangulate(coords):
        w = [[simplex[i][j] - simplex[0][j] for j in range(dim)]
             for i in range(1, dim + 1)]
        vol = abs(exact_det(w))
        if vol == 0:
            continue
        total += vol
        for j in range(dim):
            acc[j] += vol * sum(v[j] for v in simplex) / (dim + 1)
    if total == 0:
        raise AssertionError("degenerate triangulation")
    cent = [x / total for x in acc]
    out = list(origin)
    for w, b in zip(cent, basis):
        for k in range(len(out)):
            out[k] += w * b[k]
    return tuple(out)
