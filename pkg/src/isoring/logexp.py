"""Convolution of sequences and the LOG / EXP operators.

Sequences are plain lists indexed from 0 whose entries are rationals or
:class:`~isoring.poly.Poly` values. The convolution product is the Cauchy
product ``(P * Q)_n = sum_j P_j Q_(n-j)`` with identity ``delta = (1, 0, 0, ...)``.

LOG sends the GFP of a core to its GLP, EXP sends it back. LOG carries
convolution products to sums; EXP carries sums to products.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NonUnit
from .partitions import multinomial_fraction, partitions, to_multiplicities, z_alpha
from .poly import Poly
from .sequences import Core, Seq


def _zero(like):
    return Poly.zero(like.family) if isinstance(like, Poly) else Fraction(0)


def _is_zero(v) -> bool:
    return v == 0


def _bound(n_max, *seqs) -> int:
    longest = min(len(s) for s in seqs) - 1
    if n_max is None:
        return longest
    if n_max > longest:
        raise ValueError(f"sequences only reach index {longest}, asked for {n_max}")
    return n_max


def delta(n_max: int) -> list:
    return [Fraction(1)] + [Fraction(0)] * n_max


def conv(P: Sequence, Q: Sequence, n_max: int | None = None) -> list:
    n_max = _bound(n_max, P, Q)
    out = []
    for n in range(n_max + 1):
        acc = _zero(P[0])
        for j in range(n + 1):
            if not _is_zero(P[j]) and not _is_zero(Q[n - j]):
                acc = acc + P[j] * Q[n - j]
        out.append(acc)
    return out


def _unit_inverse(v):
    if isinstance(v, Poly):
        if not v.is_constant() or v.is_zero():
            raise NonUnit(f"leading value {v} is not a unit")
        v = v.constant_value()
    if v == 0:
        raise NonUnit("leading value is zero")
    return Fraction(1) / Fraction(v)


def conv_inverse(P: Sequence, n_max: int | None = None) -> list:
    """Convolution inverse; for a GFP sequence this is ``(1, -t_1, -t_2, ...)``."""
    n_max = _bound(n_max, P)
    inv0 = _unit_inverse(P[0])
    out = [inv0 if not isinstance(P[0], Poly) else Poly.const(inv0, P[0].family)]
    for n in range(1, n_max + 1):
        acc = _zero(P[0])
        for j in range(1, n + 1):
            if not _is_zero(P[j]) and not _is_zero(out[n - j]):
                acc = acc + P[j] * out[n - j]
        out.append(-acc * inv0)
    return out


def conv_power(P: Sequence, r: int, n_max: int | None = None) -> list:
    if not isinstance(r, int) or r < 1:
        raise ValueError("convolution powers are defined for positive integers only")
    n_max = _bound(n_max, P)
    out = list(P[: n_max + 1])
    for _ in range(r - 1):
        out = conv(out, P, n_max)
    return out


def lambda_op(P: Sequence) -> list:
    """``(lambda P)_n = n P_n``."""
    return [n * v for n, v in enumerate(P)]


def core_of(P: Sequence, n_max: int | None = None) -> list:
    """Core parameters ``t_1 .. t_n`` read off a sequence with ``P_0 = 1``.

    Peeling ``t_j = P_j - (t_1 P_(j-1) + ... + t_(j-1) P_1)`` is the same as
    negating the convolution inverse.
    """
    inv = conv_inverse(P, n_max)
    return [-v for v in inv[1:]]


def _degree_of(ts: Sequence) -> int:
    k = len(ts)
    while k and _is_zero(ts[k - 1]):
        k -= 1
    return k


def _t(ts, j):
    return ts[j - 1] if 1 <= j <= len(ts) else 0


def log_definition(P: Sequence, ts: Sequence, n: int):
    """``L(P_n) = -t_(n-1) P_1 - 2 t_(n-2) P_2 - ... - (n-1) t_1 P_(n-1) + n P_n`` for n >= 1."""
    acc = n * P[n]
    for j in range(1, n):
        tj = _t(ts, n - j)
        if not _is_zero(tj) and not _is_zero(P[j]):
            acc = acc - j * tj * P[j]
    return acc


def log_kterm(P: Sequence, ts: Sequence, k: int, n: int):
    """``L(P_n) = -t_(k-1) P_(n-k+1) - ... - (k-1) t_1 P_(n-1) + k P_n`` (indices below 0 read as 0)."""
    acc = k * P[n]
    for i in range(1, k):
        if n - i < 0:
            break
        ti = _t(ts, i)
        if not _is_zero(ti) and not _is_zero(P[n - i]):
            acc = acc - (k - i) * ti * P[n - i]
    return acc


def log_op(P: Sequence, core: Core | None = None, n_max: int | None = None) -> list:
    """LOG of a sequence.

    With a finite core of degree ``k`` the general definition is used below
    ``k`` and the ``k``-term form from ``k`` on. Without a core the parameters
    are inferred from ``P`` itself; the degree is then the last nonzero inferred
    parameter, which for an infinite core is the truncation bound. Index 0 maps
    to ``k * P_0``.
    """
    n_max = _bound(n_max, P)
    if core is None:
        ts = core_of(P, n_max)
        k = _degree_of(ts)
    else:
        k = core.degree
        ts = core.params(n_max if k is None else min(k, n_max))
        if k is None:
            k = n_max
    out = [k * P[0]]
    for n in range(1, n_max + 1):
        if core is not None and core.degree is not None and n >= k:
            out.append(log_kterm(P, ts, k, n))
        else:
            out.append(log_definition(P, ts, n))
    return out


def log_via_inverse(P: Sequence, n_max: int | None = None) -> list:
    """``L(P) = P^-1 * (lambda P)`` for n >= 1, the core-free form."""
    n_max = _bound(n_max, P)
    out = conv(conv_inverse(P, n_max), lambda_op(P[: n_max + 1]), n_max)
    out[0] = _degree_of(core_of(P, n_max)) * P[0]
    return out


def exp_op(G: Sequence, n_max: int | None = None) -> list:
    """EXP: ``F_0 = 1`` and ``F_n = (F_(n-1) G_1 + ... + F_1 G_(n-1) + G_n) / n``."""
    n_max = _bound(n_max, G)
    first = G[0]
    one = Poly.const(1, first.family) if isinstance(first, Poly) else Fraction(1)
    F = [one]
    for n in range(1, n_max + 1):
        acc = _zero(first)
        for j in range(1, n + 1):
            if not _is_zero(G[j]) and not _is_zero(F[n - j]):
                acc = acc + F[n - j] * G[j]
        F.append(acc / n)
    return F


def build_L_matrix(n: int, core: Core) -> list[list]:
    """Lower-triangular ``L_n``: row ``m`` is ``(-t_(m-1), -2 t_(m-2), ..., -(m-1) t_1, m)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ts = core.params(n) if core.degree is None else core.params(min(n, core.degree))
    rows = []
    for m in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if j < m:
                row.append(-j * _t(ts, m - j))
            elif j == m:
                row.append(Fraction(m))
            else:
                row.append(Fraction(0))
        rows.append(row)
    return rows


def build_E_matrix(n: int, core: Core) -> list[list]:
    """Lower-triangular ``E_n`` with entry ``F_(m-j) / m`` at row ``m``, column ``j``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    F = Seq(core).take(n)
    rows = []
    for m in range(1, n + 1):
        rows.append([F[m - j] / m if j <= m else Fraction(0) for j in range(1, n + 1)])
    return rows


def apply_lower(matrix: list[list], vec: Sequence) -> list:
    out = []
    for row in matrix:
        acc = 0
        for a, v in zip(row, vec):
            if not _is_zero(a) and not _is_zero(v):
                acc = acc + a * v
        out.append(acc)
    return out


def g_from_f(n: int) -> Poly:
    """``G_n`` written in the abstract symbols ``F_1 .. F_n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    terms = {}
    for parts in partitions(n):
        alpha = to_multiplicities(parts)
        size = sum(alpha)
        terms[alpha] = n * (-1) ** (size + 1) * multinomial_fraction(alpha, size - 1)
    return Poly(terms, "F")


def f_from_g(n: int) -> Poly:
    """``F_n = sum over a |- n of G^a / z(a)`` in the abstract symbols ``G_1 .. G_n``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Poly({to_multiplicities(p): Fraction(1, z_alpha(p)) for p in partitions(n)}, "G")
