"""Integer partitions, multiplicity vectors and the constants attached to them.

A partition is a tuple of weakly decreasing positive parts, e.g. ``(3, 1)``.
Its multiplicity form is the exponent vector ``(a_1, ..., a_k)`` where ``a_i``
counts the parts equal to ``i``; trailing zeros are dropped.

Canonical order
---------------
Partitions of ``n`` are listed in ascending lexicographic order of their
parts tuples, which for ``n = 4`` is::

    (1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4)

Read on multiplicity vectors this is "reverse lexicographic": compare the
vectors from the largest part downward. The same order drives polynomial
term printing and the columns of character tables.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Sequence

Partition = tuple  # tuple[int, ...], weakly decreasing positive parts


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` with largest part at most ``max_part``, in canonical order."""
    if n < 0:
        raise ValueError(f"cannot partition a negative integer: {n}")
    if max_part is None:
        max_part = n
    return list(_partitions(n, max(0, max_part)))


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    # ascending lex on parts tuples: smaller first parts come first
    for first in range(1, min(n, max_part) + 1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def to_multiplicities(parts: Iterable[int]) -> tuple[int, ...]:
    parts = tuple(parts)
    if not parts:
        return ()
    counts = [0] * max(parts)
    for p in parts:
        counts[p - 1] += 1
    return tuple(counts)


def from_multiplicities(alpha: Sequence[int]) -> Partition:
    parts: list[int] = []
    for i in range(len(alpha), 0, -1):
        parts.extend([i] * alpha[i - 1])
    return tuple(parts)


def weight(alpha: Sequence[int]) -> int:
    """Isobaric weight ``sum j * a_j`` of a multiplicity vector."""
    return sum((j + 1) * a for j, a in enumerate(alpha))


def multinomial(alpha: Sequence[int], top: int | None = None) -> int:
    """``top! / prod(a_j!)``; ``top`` defaults to ``sum(alpha)``.

    With ``top = sum(alpha) - 1`` this is the ``(|a| - 1 choose a_1, ..., a_k)``
    coefficient of the G-in-F identity; the result is then rational in general,
    so callers needing that case should use :func:`multinomial_fraction`.
    """
    if top is None:
        top = sum(alpha)
    num = factorial(top)
    den = prod(factorial(a) for a in alpha)
    if num % den:
        raise ValueError("multinomial is not integral; use multinomial_fraction")
    return num // den


def multinomial_fraction(alpha: Sequence[int], top: int) -> Fraction:
    return Fraction(factorial(top), prod(factorial(a) for a in alpha))


def z_alpha(parts: Sequence[int]) -> int:
    """``prod_i i**a_i * a_i!`` for the multiplicities ``a_i`` of ``parts``.

    ``n! / z_alpha`` is the size of the conjugacy class of cycle type ``parts``
    in the symmetric group.
    """
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    alpha = to_multiplicities(parts)
    return prod((i + 1) ** a * factorial(a) for i, a in enumerate(alpha))


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2"`` or ``"3 2"`` into a partition tuple (sorted descending)."""
    items = [s for s in text.replace(",", " ").split() if s]
    parts = tuple(sorted((int(s) for s in items), reverse=True))
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {text!r}")
    return parts
