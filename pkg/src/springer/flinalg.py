"""Dense linear algebra over a FieldSpec.

Matrices are tuples of tuples of encoded field elements (row major),
vectors are tuples.  Everything returns new immutable values; reduced
row echelon form with leading ones is the canonical representative used
to compare subspaces.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .ffield import FieldSpec

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def mat(rows: Iterable[Iterable[int]]) -> Matrix:
    return tuple(tuple(r) for r in rows)


def zeros(K: FieldSpec, n: int, m: int) -> Matrix:
    return tuple((0,) * m for _ in range(n))


def identity(K: FieldSpec, n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def mat_add(K: FieldSpec, a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(K.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(K: FieldSpec, a: Matrix) -> Matrix:
    return tuple(tuple(K.neg(x) for x in r) for r in a)


def scalar_mul(K: FieldSpec, c: int, a: Matrix) -> Matrix:
    return tuple(tuple(K.mul(c, x) for x in r) for r in a)


def mat_mul(K: FieldSpec, a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    out = []
    for ra in a:
        row = []
        for cb in bt:
            s = 0
            for x, y in zip(ra, cb):
                if x and y:
                    s = K.add(s, K.mul(x, y))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(K: FieldSpec, a: Matrix, v: Vector) -> Vector:
    out = []
    for ra in a:
        s = 0
        for x, y in zip(ra, v):
            if x and y:
                s = K.add(s, K.mul(x, y))
        out.append(s)
    return tuple(out)


def vec_mat(K: FieldSpec, v: Vector, a: Matrix) -> Vector:
    return mat_vec(K, transpose(a), v)


def mat_pow(K: FieldSpec, a: Matrix, e: int) -> Matrix:
    out = identity(K, len(a))
    for _ in range(e):
        out = mat_mul(K, out, a)
    return out


def rref(K: FieldSpec, a: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns; zero rows dropped."""
    rows = [list(r) for r in a]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = K.inv(rows[r][c])
        rows[r] = [K.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in rows[:r]), tuple(pivots)


def rank(K: FieldSpec, a: Matrix) -> int:
    return len(rref(K, a)[0])


def echelon_basis(K: FieldSpec, vectors: Iterable[Vector]) -> Matrix:
    """Canonical basis of the span: RREF rows.  Equal spans give equal values."""
    vs = [v for v in vectors if any(v)]
    if not vs:
        return ()
    return rref(K, mat(vs))[0]


def in_span(K: FieldSpec, basis: Matrix, v: Vector) -> bool:
    if not any(v):
        return True
    if not basis:
        return False
    return rank(K, basis + (v,)) == len(basis)


def span_contains(K: FieldSpec, big: Matrix, small: Matrix) -> bool:
    return all(in_span(K, big, v) for v in small)


def nullspace(K: FieldSpec, a: Matrix) -> Matrix:
    """Canonical basis of {v : a v = 0} (column null space)."""
    if not a:
        return ()
    ncols = len(a[0])
    red, pivots = rref(K, a)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = K.neg(red[r][fc])
        basis.append(tuple(v))
    return echelon_basis(K, basis)


def solve(K: FieldSpec, a: Matrix, b: Vector) -> Optional[Vector]:
    """One solution of a x = b with free variables set to zero, or None."""
    if not a:
        return None
    ncols = len(a[0])
    aug = tuple(row + (bv,) for row, bv in zip(a, b))
    red, pivots = rref(K, aug)
    for r in range(len(red)):
        if pivots[r] == ncols:
            return None
    x = [0] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return tuple(x)


def det(K: FieldSpec, a: Matrix) -> int:
    rows = [list(r) for r in a]
    n = len(rows)
    d = 1
    for c in range(n):
        pr = None
        for i in range(c, n):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            return 0
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            d = K.neg(d)
        d = K.mul(d, rows[c][c])
        inv = K.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c]:
                f = K.mul(inv, rows[i][c])
                rows[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(rows[i], rows[c])]
    return d


def inverse(K: FieldSpec, a: Matrix) -> Matrix:
    n = len(a)
    aug = tuple(ra + tuple(1 if i == j else 0 for j in range(n)) for i, ra in enumerate(a))
    red, pivots = rref(K, aug)
    if len(red) != n or pivots != tuple(range(n)):
        raise ValueError("matrix is singular")
    return tuple(r[n:] for r in red)


def is_nilpotent(K: FieldSpec, a: Matrix) -> bool:
    return all(x == 0 for row in mat_pow(K, a, len(a)) for x in row)


def jordan_partition(K: FieldSpec, a: Matrix) -> tuple[int, ...]:
    """Jordan type of a nilpotent matrix, as ascending block sizes.

    Block counts come from the rank sequence: a matrix with r_k =
    rank(a^k) has r_{k-1} - 2 r_k + r_{k+1} blocks of size exactly k.
    """
    if not is_nilpotent(K, a):
        raise ValueError("matrix is not nilpotent")
    n = len(a)
    ranks = [n]
    power = identity(K, n)
    for _ in range(n):
        power = mat_mul(K, power, a)
        ranks.append(rank(K, power))
    parts = []
    for k in range(1, n + 1):
        r_prev, r_k = ranks[k - 1], ranks[k]
        r_next = ranks[k + 1] if k + 1 <= n else 0
        parts.extend([k] * (r_prev - 2 * r_k + r_next))
    return tuple(sorted(parts))


def restrict_to_subspace(K: FieldSpec, a: Matrix, basis: Matrix) -> Matrix:
    """Matrix of the action of a on the subspace, in the given basis.

    Requires the subspace to be a-stable; raises otherwise.
    """
    cols = []
    for v in basis:
        w = mat_vec(K, a, v)
        coords = solve(K, transpose(basis), w)
        if coords is None:
            raise ValueError("subspace is not stable under the matrix")
        cols.append(coords)
    return transpose(mat(cols))


def quotient_action(K: FieldSpec, a: Matrix, sub: Matrix) -> Matrix:
    """Matrix of the induced action on V / span(sub).

    The quotient basis is the set of standard coordinates that are not
    pivot columns of the subspace's echelon basis.
    """
    n = len(a)
    red, pivots = rref(K, sub) if sub else ((), ())
    pivset = set(pivots)
    compl = [c for c in range(n) if c not in pivset]

    def project(v: Vector) -> Vector:
        w = list(v)
        for r, pc in enumerate(pivots):
            f = w[pc]
            if f:
                w = [K.sub(x, K.mul(f, y)) for x, y in zip(w, red[r])]
        return tuple(w[c] for c in compl)

    cols = []
    for c in compl:
        e = tuple(1 if i == c else 0 for i in range(n))
        cols.append(project(mat_vec(K, a, e)))
    return transpose(mat(cols))


def action_between(K: FieldSpec, a: Matrix, small: Matrix, big: Matrix) -> Matrix:
    """Action of a on span(big)/span(small) for a-stable nested spans."""
    # extend small to a basis of big by greedy independence
    ext = list(small)
    chosen = []
    for v in big:
        if not in_span(K, mat(ext), v):
            ext.append(v)
            chosen.append(v)
    full = mat(ext)
    k = len(small)
    cols = []
    for v in chosen:
        w = mat_vec(K, a, v)
        coords = solve(K, transpose(full), w)
        if coords is None:
            raise ValueError("big subspace is not stable under the matrix")
        cols.append(coords[k:])
    return transpose(mat(cols))


def gram(K: FieldSpec, form: Matrix, u: Vector, v: Vector) -> int:
    return mat_vec(K, (u,), mat_vec(K, form, v))[0]


def annihilator(K: FieldSpec, basis: Matrix, n: int) -> Matrix:
    """Functionals (as coordinate vectors) vanishing on the span."""
    if not basis:
        return identity(K, n)
    return nullspace(K, basis)
