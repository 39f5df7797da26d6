"""Smith normal form with unimodular certificates.

``smith_normal_form(A)`` returns ``U, S, V`` with ``U*A*V == S`` exactly,
``U`` and ``V`` unimodular and ``S`` diagonal with canonical entries
``s1 | s2 | ...`` (zeros last).

Over ZZ and F_p[x] pivots are chosen by minimal Euclidean size in the
working submatrix.  Over QQ[x] that loop lets rational coefficients
explode, so row and column Hermite forms alternate until the matrix is
diagonal and a gcd/lcm sweep finishes the chain; that route runs on
python-flint polynomials when available.
"""

from __future__ import annotations

from dataclasses import dataclass

from virtmod.arith import flintq
from virtmod.arith.rings import Element, Ring, parse_ring
from virtmod.errors import ParseError, ShapeMismatch


@dataclass(frozen=True)
class Matrix:
    """Dense matrix over one of the supported rings; entries are raw values,
    stored row-major."""

    ring: Ring
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, ring: Ring, rows, cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ShapeMismatch("ragged matrix rows")
        entries = tuple(ring.coerce(x) for r in rows for x in r)
        return cls(ring, len(rows), cols, entries)

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "Matrix":
        return cls(ring, rows, cols, (ring.zero,) * (rows * cols))

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        return cls.from_raw(ring, _identity(ring, n), n)

    @classmethod
    def diagonal(cls, ring: Ring, diag, rows: int | None = None, cols: int | None = None):
        diag = [ring.coerce(d) for d in diag]
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        grid = [[ring.zero] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            grid[i][i] = d
        return cls.from_raw(ring, grid, cols)

    @classmethod
    def from_raw(cls, ring: Ring, grid, cols: int) -> "Matrix":
        return cls(ring, len(grid), cols, tuple(x for r in grid for x in r))

    def raw_rows(self) -> list:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __getitem__(self, ij) -> Element:
        i, j = ij
        return Element(self.ring, self.entries[i * self.cols + j])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows or self.ring != other.ring:
            raise ShapeMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        return Matrix.from_raw(
            self.ring, _matmul(self.ring, self.raw_rows(), other.raw_rows(), other.cols), other.cols
        )

    def transpose(self) -> "Matrix":
        rows = self.raw_rows()
        grid = [[rows[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return Matrix.from_raw(self.ring, grid, self.rows)

    def determinant(self) -> Element:
        if self.rows != self.cols:
            raise ShapeMismatch("determinant of a non-square matrix")
        return Element(self.ring, _det(self.ring, self.raw_rows()))

    def to_json(self) -> dict:
        return {
            "ring": self.ring.tag(),
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[self.ring.to_json_value(x) for x in r] for r in self.raw_rows()],
        }

    @classmethod
    def from_json(cls, data, ring=None) -> "Matrix":
        if not isinstance(data, dict):
            raise ParseError("matrix must be a JSON object")
        ring = parse_ring(data.get("ring", ring))
        try:
            grid = data["entries"]
        except KeyError:
            raise ParseError("matrix needs 'entries'") from None
        rows = data.get("rows", len(grid))
        cols = data.get("cols", len(grid[0]) if grid else 0)
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise ParseError(f"entries do not match declared shape {rows}x{cols}")
        return cls.from_rows(ring, grid, cols)

    def __str__(self):
        return "\n".join(
            "[" + ", ".join(self.ring.format(x) for x in r) + "]" for r in self.raw_rows()
        )


@dataclass(frozen=True)
class SNFResult:
    U: Matrix
    S: Matrix
    V: Matrix

    def diagonal(self) -> list:
        return [self.S[i, i] for i in range(min(self.S.rows, self.S.cols))]


def _identity(R: Ring, n: int) -> list:
    return [[R.one if i == j else R.zero for j in range(n)] for i in range(n)]


def _matmul(R: Ring, A, B, bcols: int) -> list:
    out = []
    for row in A:
        new = []
        for j in range(bcols):
            acc = R.zero
            for k, a in enumerate(row):
                if not R.is_zero(a):
                    b = B[k][j]
                    if not R.is_zero(b):
                        acc = R.add(acc, R.mul(a, b))
            new.append(acc)
        out.append(new)
    return out


def _det(R: Ring, M) -> object:
    """Fraction-free (Bareiss) determinant over an integral domain."""
    n = len(M)
    if n == 0:
        return R.one
    M = [row[:] for row in M]
    sign = 1
    prev = R.one
    for k in range(n - 1):
        if R.is_zero(M[k][k]):
            for i in range(k + 1, n):
                if not R.is_zero(M[i][k]):
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return R.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = R.sub(R.mul(M[i][j], M[k][k]), R.mul(M[i][k], M[k][j]))
                M[i][j] = R.exact_div(num, prev)
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign == 1 else R.neg(d)


def _row_sub(R, rows, dst, src, q):
    """rows[dst] -= q * rows[src]"""
    a, b = rows[dst], rows[src]
    for k, x in enumerate(b):
        if not R.is_zero(x):
            a[k] = R.sub(a[k], R.mul(q, x))


def _col_sub(R, rows, dst, src, q):
    """column dst -= q * column src"""
    for r in rows:
        x = r[src]
        if not R.is_zero(x):
            r[dst] = R.sub(r[dst], R.mul(q, x))


def _snf_pivot(R: Ring, grid, m: int, n: int, track: bool = True):
    S = [row[:] for row in grid]
    U = _identity(R, m) if track else None
    V = _identity(R, n) if track else None
    size = R.size
    zero = R.is_zero

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        if track:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in S:
            r[i], r[j] = r[j], r[i]
        if track:
            for r in V:
                r[i], r[j] = r[j], r[i]

    def tidy_row(i):
        c = R.content_scale(S[i])
        if c is not None:
            S[i] = [R.scale(c, x) for x in S[i]]
            if track:
                U[i] = [R.scale(c, x) for x in U[i]]

    def tidy_col(j):
        c = R.content_scale([r[j] for r in S])
        if c is not None:
            for r in S:
                r[j] = R.scale(c, r[j])
            if track:
                for r in V:
                    r[j] = R.scale(c, r[j])

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = S[i]
            for j in range(t, n):
                x = row[j]
                if not zero(x) and (best is None or size(x) < best[0]):
                    best = (size(x), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            pivot = S[t][t]
            clean = True
            for i in range(t + 1, m):
                if not zero(S[i][t]):
                    q, r = R.divmod(S[i][t], pivot)
                    _row_sub(R, S, i, t, q)
                    if track:
                        _row_sub(R, U, i, t, q)
                    tidy_row(i)
                    if not zero(r):
                        clean = False
            for j in range(t + 1, n):
                if not zero(S[t][j]):
                    q, r = R.divmod(S[t][j], pivot)
                    _col_sub(R, S, j, t, q)
                    if track:
                        _col_sub(R, V, j, t, q)
                    tidy_col(j)
                    if not zero(r):
                        clean = False
            if not clean:
                best = None
                for i in range(t + 1, m):
                    x = S[i][t]
                    if not zero(x) and (best is None or size(x) < best[0]):
                        best = (size(x), i, "row")
                for j in range(t + 1, n):
                    x = S[t][j]
                    if not zero(x) and (best is None or size(x) < best[0]):
                        best = (size(x), j, "col")
                if best[2] == "row":
                    swap_rows(t, best[1])
                else:
                    swap_cols(t, best[1])
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    x = S[i][j]
                    if not zero(x) and not zero(R.divmod(x, pivot)[1]):
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            # pull the offending row into the pivot row
            _row_sub(R, S, t, bad, R.neg(R.one))
            if track:
                _row_sub(R, U, t, bad, R.neg(R.one))
            tidy_row(t)
        unit, canon = R.normalize(S[t][t])
        if canon != S[t][t]:
            inv = R.unit_inverse(unit)
            S[t] = [R.mul(inv, x) for x in S[t]]
            if track:
                U[t] = [R.mul(inv, x) for x in U[t]]
        t += 1
    return U, S, V


def _lincomb(R, a, x, b, y):
    """a*x + b*y for row vectors x, y."""
    out = []
    for u, v in zip(x, y):
        t = R.zero
        if not R.is_zero(u) and not R.is_zero(a):
            t = R.mul(a, u)
        if not R.is_zero(v) and not R.is_zero(b):
            t = R.add(t, R.mul(b, v))
        out.append(t)
    return out


def _axpy(R, y, q, x):
    """y - q*x (new list)."""
    if R.is_zero(q):
        return y
    return [yy if R.is_zero(xx) else R.sub(yy, R.mul(q, xx)) for yy, xx in zip(y, x)]


def _lead(R, v):
    for k, x in enumerate(v):
        if not R.is_zero(x):
            return k
    return None


def _hnf(R: Ring, grid, m: int, n: int, track: bool):
    """Reduced row echelon (Hermite) form ``H = U*A`` by inserting one row
    at a time into a reduced basis.

    Every pivot row is kept canonical (normalized pivot, entries above each
    pivot reduced modulo it), so after each insertion the basis is the
    unique Hermite form of the rows seen so far.  That keeps coefficient
    growth bounded by minors of the input, which the plain pivoting loop
    does not manage over QQ[x].
    """
    piv = []  # [row, urow, col], sorted by col
    kernel = []

    def tidy(v, u):
        c = R.content_scale(v)
        if c is None:
            return v, u
        v = [R.scale(c, x) for x in v]
        if u is not None:
            u = [R.scale(c, x) for x in u]
        return v, u

    def canon(entry):
        row, urow, c = entry
        unit, _ = R.normalize(row[c])
        if unit != R.one:
            inv = R.unit_inverse(unit)
            row = [R.mul(inv, x) for x in row]
            if urow is not None:
                urow = [R.mul(inv, x) for x in urow]
        return [row, urow, c]

    def reduce_all():
        # ascending pivot order: subtracting pivot j only touches columns > c_j
        for j, (pr, pu, c) in enumerate(piv):
            for i in range(j):
                row = piv[i][0]
                if R.is_zero(row[c]):
                    continue
                q, _ = R.divmod(row[c], pr[c])
                if not R.is_zero(q):
                    piv[i][0] = _axpy(R, row, q, pr)
                    if track:
                        piv[i][1] = _axpy(R, piv[i][1], q, pu)

    for i in range(m):
        v = list(grid[i])
        u = [R.one if k == i else R.zero for k in range(m)] if track else None
        idx = 0
        inserted = False
        while True:
            lead = _lead(R, v)
            if lead is None:
                break
            if idx == len(piv) or lead < piv[idx][2]:
                piv.insert(idx, canon([v, u, lead]))
                inserted = True
                break
            pr, pu, c = piv[idx]
            if lead > c:
                idx += 1
                continue
            q, r = R.divmod(v[c], pr[c])
            if R.is_zero(r):
                v = _axpy(R, v, q, pr)
                if track:
                    u = _axpy(R, u, q, pu)
            else:
                g, s, t = R.xgcd(pr[c], v[c])
                a = R.exact_div(pr[c], g)
                b = R.exact_div(v[c], g)
                # [[s, t], [-b, a]] has determinant (s*p + t*x)/g = 1
                newp = _lincomb(R, s, pr, t, v)
                v = _lincomb(R, a, v, R.neg(b), pr)
                if track:
                    newu = _lincomb(R, s, pu, t, u)
                    u = _lincomb(R, a, u, R.neg(b), pu)
                else:
                    newu = None
                piv[idx] = canon([newp, newu, c])
            v, u = tidy(v, u)
            idx += 1
        if inserted or piv:
            reduce_all()
        if not inserted and track:
            kernel.append(u)
    H = [e[0] for e in piv] + [[R.zero] * n for _ in range(m - len(piv))]
    U = [e[1] for e in piv] + kernel if track else None
    return H, U


def _is_diag(R, S, m, n):
    for i in range(m):
        for j in range(n):
            if i != j and not R.is_zero(S[i][j]):
                return False
    return True


def _transpose(rows, m, n):
    return [[rows[i][j] for i in range(m)] for j in range(n)]


def _snf_hermite(R: Ring, grid, m: int, n: int, track: bool = True):
    """Smith form by alternating row and column Hermite forms, then a
    gcd/lcm sweep along the diagonal (Kannan-Bachem style)."""
    S, U = _hnf(R, grid, m, n, track)
    V = _identity(R, n) if track else None
    rounds = 0
    while not _is_diag(R, S, m, n):
        rounds += 1
        if rounds > 4 * (m + n) + 64:
            raise RuntimeError("Hermite alternation did not converge")
        T, W = _hnf(R, _transpose(S, m, n), n, m, track)
        S = _transpose(T, n, m)
        if track:
            V = _matmul(R, V, _transpose(W, n, n), n)
        if _is_diag(R, S, m, n):
            break
        S, W = _hnf(R, S, m, n, track)
        if track:
            U = _matmul(R, W, U, m)
    r = 0
    while r < min(m, n) and not R.is_zero(S[r][r]):
        r += 1
    d = [S[i][i] for i in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            a, b = d[i], d[j]
            if R.divides(a, b):
                continue
            g, s, t = R.xgcd(a, b)
            ag = R.exact_div(a, g)
            bg = R.exact_div(b, g)
            # [[s, t], [-b/g, a/g]] diag(a, b) [[1, -t*b/g], [1, s*a/g]] = diag(g, a*b/g)
            d[i], d[j] = g, R.mul(a, bg)
            if track:
                ui, uj = U[i], U[j]
                U[i] = _lincomb(R, s, ui, t, uj)
                U[j] = _lincomb(R, R.neg(bg), ui, ag, uj)
                c1 = R.neg(R.mul(t, bg))
                c2 = R.mul(s, ag)
                for row in V:
                    vi, vj = row[i], row[j]
                    row[i] = R.add(vi, vj)
                    row[j] = R.add(R.mul(c1, vi), R.mul(c2, vj))
    for i in range(r):
        unit, canon = R.normalize(d[i])
        if canon != d[i] and track:
            inv = R.unit_inverse(unit)
            U[i] = [R.mul(inv, x) for x in U[i]]
        d[i] = canon
    S = [[R.zero] * n for _ in range(m)]
    for i in range(r):
        S[i][i] = d[i]
    return U, S, V


def _snf(R: Ring, grid, m: int, n: int, track: bool = True):
    if R.kind == "qx":
        if not flintq.available():
            return _snf_hermite(R, grid, m, n, track)
        F = flintq.FlintQx()
        out = _snf_hermite(F, [[flintq.to_flint(x) for x in r] for r in grid], m, n, track)
        return tuple(
            None if M is None else [[flintq.from_flint(x) for x in r] for r in M] for M in out
        )
    return _snf_pivot(R, grid, m, n, track)


def smith_normal_form(A: Matrix) -> SNFResult:
    """Smith form of ``A`` together with the unimodular transforms."""
    R = A.ring
    U, S, V = _snf(R, A.raw_rows(), A.rows, A.cols, track=True)
    return SNFResult(
        Matrix.from_raw(R, U, A.rows),
        Matrix.from_raw(R, S, A.cols) if A.rows else Matrix.zeros(R, 0, A.cols),
        Matrix.from_raw(R, V, A.cols),
    )


def smith_diagonal(A: Matrix) -> list:
    """Raw diagonal of the Smith form (no certificates)."""
    _, S, _ = _snf(A.ring, A.raw_rows(), A.rows, A.cols, track=False)
    return [S[i][i] for i in range(min(A.rows, A.cols))]


def invariant_factors(A: Matrix) -> list:
    """Non-zero, non-unit Smith diagonal entries in divisibility order."""
    R = A.ring
    return [Element(R, d) for d in smith_diagonal(A) if not R.is_zero(d) and not R.is_unit(d)]


def is_smith_form(S: Matrix) -> bool:
    R = S.ring
    for i in range(S.rows):
        for j in range(S.cols):
            if i != j and not R.is_zero(S.entries[i * S.cols + j]):
                return False
    diag = [S.entries[i * S.cols + i] for i in range(min(S.rows, S.cols))]
    for d in diag:
        if not R.is_zero(d) and R.canonical(d) != d:
            return False
    return all(R.divides(a, b) for a, b in zip(diag, diag[1:]))


def verify_snf(A: Matrix, r: SNFResult) -> bool:
    """Exact certificate check: ``U*A*V == S``, unit determinants, chain."""
    U, S, V = r.U, r.S, r.V
    if (U.rows, U.cols) != (A.rows, A.rows) or (V.rows, V.cols) != (A.cols, A.cols) \
            or (S.rows, S.cols) != (A.rows, A.cols):
        raise ShapeMismatch("SNF certificate shapes do not match the input")
    if not (U.ring == S.ring == V.ring == A.ring):
        raise ShapeMismatch("SNF certificate is over a different ring")
    if not is_smith_form(S):
        return False
    R = A.ring
    raw = [M.raw_rows() for M in (U, A, V, S)]
    if R.kind == "qx" and flintq.available():
        R = flintq.FlintQx()
        raw = [[[flintq.to_flint(x) for x in r] for r in M] for M in raw]
    u, a, v, s = raw
    if _matmul(R, _matmul(R, u, a, A.cols), v, A.cols) != s:
        return False
    return R.is_unit(_det(R, u)) and R.is_unit(_det(R, v))
