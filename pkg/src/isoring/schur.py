"""Schur polynomials by Jacobi-Trudi and symmetric-group characters.

``S_lambda = det(F_(lambda_i - i + j))`` with ``F_0 = 1`` and ``F_m = 0`` for
``m < 0``. Rewriting every ``F_m`` in the power-sum symbols ``G`` turns the
determinant into ``sum c(a) G^a``, and ``chi^lambda(a) = c(a) z(a)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InconsistentResult
from .logexp import f_from_g
from .matrices import det
from .partitions import Partition, is_partition, partitions, to_multiplicities, z_alpha
from .poly import Poly
from .sequences import Core, Seq

DEFAULT_MAX_N = 10


def jacobi_trudi_indices(shape: Sequence[int]) -> list[list[int]]:
    """Matrix of F-indices ``shape_i - i + j`` (any integer sequence is accepted)."""
    r = len(shape)
    return [[shape[i] - i + j for j in range(r)] for i in range(r)]


def _f_symbol(m: int) -> Poly:
    if m < 0:
        return Poly.zero("F")
    if m == 0:
        return Poly.const(1, "F")
    return Poly.var(m, "F")


def jacobi_trudi_f(shape: Sequence[int]) -> Poly:
    """Jacobi-Trudi determinant in the abstract symbols ``F_1, F_2, ...``."""
    idx = jacobi_trudi_indices(shape)
    return det([[_f_symbol(m) for m in row] for row in idx]) + Poly.zero("F")


def jacobi_trudi(shape: Sequence[int], core: Core):
    """Jacobi-Trudi determinant evaluated on the GFP of ``core``.

    ``shape`` need not be a partition; hooks ``(a, 1^r)`` with ``a <= 0`` are
    used for the negative-side entries of the infinite companion matrix.
    """
    idx = jacobi_trudi_indices(shape)
    top = max((m for row in idx for m in row), default=0)
    F = Seq(core).take(max(top, 0))
    zero = Poly.zero() if core.is_generic else Fraction(0)
    return det([[F[m] if m >= 0 else zero for m in row] for row in idx]) + zero


@dataclass
class SchurResult:
    shape: Partition
    indices: list[list[int]]
    f_form: Poly
    expanded: object
    g_basis: Poly

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "indices": self.indices,
            "f_form": str(self.f_form),
            "expanded": str(self.expanded),
            "g_basis": str(self.g_basis),
        }


def schur(shape: Sequence[int], core: Core | None = None) -> SchurResult:
    shape = tuple(shape)
    if not shape or not is_partition(shape):
        raise ValueError(f"not a non-empty partition: {shape!r}")
    if core is None:
        core = Core.generic(sum(shape))
    f_form = jacobi_trudi_f(shape)
    return SchurResult(
        shape=shape,
        indices=jacobi_trudi_indices(shape),
        f_form=f_form,
        expanded=jacobi_trudi(shape, core),
        g_basis=expand_f_to_g(f_form),
    )


@lru_cache(maxsize=None)
def _f_in_g(m: int) -> Poly:
    return f_from_g(m)


def expand_f_to_g(p: Poly) -> Poly:
    """Substitute ``F_m -> sum over a |- m of G^a / z(a)`` and expand."""
    if p.family != "F":
        raise ValueError("expected a polynomial in F-symbols")
    return p.substitute(_f_in_g, zero=Poly.zero("G")) + Poly.zero("G")


@dataclass
class CharacterVector:
    shape: Partition
    classes: list[Partition]
    values: list[int]

    def __getitem__(self, cls: Sequence[int]) -> int:
        return self.values[self.classes.index(tuple(cls))]

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "classes": [list(c) for c in self.classes],
            "values": self.values,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CharacterVector":
        return cls(tuple(data["shape"]), [tuple(c) for c in data["classes"]], list(data["values"]))


def character(shape: Sequence[int], max_n: int = DEFAULT_MAX_N) -> CharacterVector:
    shape = tuple(shape)
    n = sum(shape)
    if n > max_n:
        raise ValueError(f"|shape| = {n} exceeds the configured bound {max_n}")
    g = schur(shape, Core.generic(1)).g_basis
    classes = partitions(n)
    values = []
    for alpha in classes:
        v = g.coefficient(to_multiplicities(alpha)) * z_alpha(alpha)
        if v.denominator != 1:
            raise InconsistentResult(f"character value {v} at {alpha} is not an integer")
        values.append(int(v))
    return CharacterVector(shape, classes, values)


def character_table(n: int, max_n: int = DEFAULT_MAX_N) -> list[CharacterVector]:
    """Rows for ``lambda |- n`` from ``(n)`` down to ``(1^n)``; columns in canonical order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [character(lam, max_n) for lam in reversed(partitions(n))]
