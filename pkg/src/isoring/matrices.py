"""Companion matrix, infinite companion matrix, different matrix, discriminant.

Row convention for the infinite matrices: row ``n`` of the infinite companion
matrix is ``e_k A^n``, so its right-hand column is ``F_n`` and the ``k x k``
block ending at row ``n`` (rows ``n-k+1 .. n``) is ``A^n``. The identity block
``A^0`` therefore sits at rows ``-k+1 .. 0`` and is available for generic cores.
Row ``n`` of the infinite different matrix is ``d_k A^n``; its right-hand
column is ``G_n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .errors import InsufficientRows, NonInvertibleCore, SymbolicNegativeIndex
from .logexp import log_kterm
from .poly import Poly
from .sequences import Core


def _zero(core: Core):
    return Poly.zero() if core.is_generic else Fraction(0)


def _one(core: Core):
    return Poly.const(1) if core.is_generic else Fraction(1)


def _finite(core: Core) -> int:
    if core.degree is None:
        raise ValueError("matrix constructions need a finite-degree core")
    return core.degree


def companion(core: Core) -> list[list]:
    """``k x k`` matrix with 1s on the superdiagonal and last row ``(t_k, ..., t_1)``."""
    k = _finite(core)
    rows = []
    for i in range(k - 1):
        rows.append([_one(core) if j == i + 1 else _zero(core) for j in range(k)])
    rows.append([core.t(k - j) + _zero(core) for j in range(k)])
    return rows


def vec_times_companion(v: Sequence, core: Core) -> list:
    """``v A`` without forming ``A``."""
    k = _finite(core)
    last = v[k - 1]
    out = [core.t(k) * last + _zero(core)]
    for j in range(1, k):
        out.append(v[j - 1] + core.t(k - j) * last)
    return out


def vec_times_companion_inverse(w: Sequence, core: Core) -> list:
    """``w A^-1``; needs ``t_k != 0``."""
    k = _finite(core)
    tk = core.t(k)
    last = w[0] / tk
    out = [w[j] - core.t(k - j) * last for j in range(1, k)]
    out.append(last)
    return out


def matmul(A: list[list], B: list[list]) -> list[list]:
    inner = len(B)
    return [[sum((A[i][m] * B[m][j] for m in range(inner)), 0 * A[i][0]) for j in range(len(B[0]))]
            for i in range(len(A))]


def identity(k: int, like=Fraction(0)) -> list[list]:
    one = like + 1
    zero = like * 0
    return [[one if i == j else zero for j in range(k)] for i in range(k)]


def det(M: list[list]):
    """Determinant over any commutative ring by memoised cofactor expansion.

    Works on polynomial entries (no division); cost is ``O(2^n n)`` ring
    operations, fine for the sizes used here.
    """
    n = len(M)
    if n == 0:
        return Fraction(1)
    memo: dict[tuple[int, int], object] = {}

    def minor(row: int, cols: int):
        if row == n:
            return 1
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = 0
        sign = 1
        for c in range(n):
            if cols >> c & 1:
                continue
            entry = M[row][c]
            if entry != 0:
                sub = minor(row + 1, cols | (1 << c))
                if sub != 0:
                    total = total + sign * entry * sub
            sign = -sign
        memo[key] = total
        return total

    return minor(0, 0)


def det_leibniz(M: list[list]):
    """Leibniz-formula determinant, kept as an independent check of :func:`det`."""
    n = len(M)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = (-1) ** inv
        for i in range(n):
            term = term * M[i][perm[i]]
        total = total + term
    return total


@dataclass
class MatrixWindow:
    """Rows ``n_min .. n_max`` of an infinite matrix with ``k`` columns."""

    kind: str
    core: Core
    rows: dict[int, list] = field(default_factory=dict)

    @property
    def k(self) -> int:
        return _finite(self.core)

    @property
    def n_min(self) -> int:
        return min(self.rows)

    @property
    def n_max(self) -> int:
        return max(self.rows)

    def column(self, j: int) -> dict[int, object]:
        """Column ``j`` counted from the left, 1-based."""
        return {n: r[j - 1] for n, r in sorted(self.rows.items())}

    def block(self, n: int) -> list[list]:
        """The ``k x k`` block of rows ``n-k+1 .. n``."""
        return [self.rows[m] for m in range(n - self.k + 1, n + 1)]

    def trace(self, n: int):
        b = self.block(n)
        return sum((b[i][i] for i in range(self.k)), _zero(self.core))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "core": self.core.to_json(),
            "rows": [{"n": n, "row": [str(x) for x in r]} for n, r in sorted(self.rows.items())],
        }


def _check_backward(core: Core) -> None:
    if core.is_generic:
        raise SymbolicNegativeIndex("rows below the identity block need an evaluated core")
    if core.is_infinite or not core.invertible:
        raise NonInvertibleCore("negative rows need a finite core with t_k != 0")


def _orbit(rows: dict[int, list], core: Core, n_min: int, n_max: int, kind: str) -> MatrixWindow:
    """Extend seeded consecutive rows forward by ``A`` and backward by ``A^-1``."""
    top, bottom = max(rows), min(rows)
    for n in range(top + 1, n_max + 1):
        rows[n] = vec_times_companion(rows[n - 1], core)
    if n_min < bottom:
        _check_backward(core)
        for n in range(bottom - 1, n_min - 1, -1):
            rows[n] = vec_times_companion_inverse(rows[n + 1], core)
    return MatrixWindow(kind, core, {n: rows[n] for n in range(n_min, n_max + 1)})


def infinite_companion(core: Core, n_min: int, n_max: int) -> MatrixWindow:
    k = _finite(core)
    if n_min > n_max:
        raise ValueError("n_min must not exceed n_max")
    one, zero = _one(core), _zero(core)
    # identity block A^0 occupies rows -k+1 .. 0
    seed = {i - (k - 1): [one if j == i else zero for j in range(k)] for i in range(k)}
    return _orbit(seed, core, n_min, n_max, "companion")


def different_vector(core: Core) -> list:
    """``d_k = (-t_(k-1), -2 t_(k-2), ..., -(k-1) t_1, k)``: coefficients of the core's derivative."""
    k = _finite(core)
    d = [-(i + 1) * core.t(k - 1 - i) + _zero(core) for i in range(k - 1)]
    d.append(k + _zero(core))
    return d


def different_matrix(core: Core) -> list[list]:
    k = _finite(core)
    return [infinite_different(core, 0, k - 1).rows[n] for n in range(k)]


def infinite_different(core: Core, n_min: int, n_max: int) -> MatrixWindow:
    if n_min > n_max:
        raise ValueError("n_min must not exceed n_max")
    return _orbit({0: different_vector(core)}, core, n_min, n_max, "different")


def discriminant(core: Core):
    """``(-1)^(k(k-1)/2) det D``."""
    k = _finite(core)
    sign = -1 if (k * (k - 1) // 2) % 2 else 1
    return sign * det(different_matrix(core))


def log_of_window(window: MatrixWindow) -> MatrixWindow:
    """Apply LOG down each column with the ``k``-term rule

        L m_(i,j) = -t_(k-1) m_(i-k+1,j) - ... - (k-1) t_1 m_(i-1,j) + k m_(i,j)

    Output rows are those whose full ``k``-row stencil lies in the window.
    """
    core = window.core
    k = window.k
    lo = window.n_min + k - 1
    if lo > window.n_max:
        raise InsufficientRows(f"need at least {k} consecutive rows, window has {len(window.rows)}")
    ts = core.params(k)
    out = {i: [] for i in range(lo, window.n_max + 1)}
    for j in range(k):
        col = [window.rows[m][j] for m in range(window.n_min, window.n_max + 1)]
        for i in out:
            out[i].append(log_kterm(col, ts, k, i - window.n_min) + _zero(core))
    return MatrixWindow("different", core, out)


def sylvester_resultant(f: Sequence[Fraction], g: Sequence[Fraction]) -> Fraction:
    """Resultant of two polynomials given by coefficient lists (highest degree first)."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in f] + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in g] + [Fraction(0)] * (size - n - 1 - i))
    return det_fraction(rows)


def det_fraction(M: list[list[Fraction]]) -> Fraction:
    """Gaussian elimination determinant over the rationals."""
    A = [list(map(Fraction, r)) for r in M]
    n = len(A)
    result = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if A[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            A[c], A[pivot] = A[pivot], A[c]
            result = -result
        result *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                for j in range(c, n):
                    A[r][j] -= f * A[c][j]
    return result


def render_matrix(M: list[list]) -> list[list[str]]:
    return [[str(x) for x in row] for row in M]
