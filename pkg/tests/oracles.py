"""Brute-force oracles, written independently of the library's algorithms."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product
from math import factorial

from isoring.poly import Poly


def compositions(n: int, max_part: int):
    """Ordered compositions of ``n`` with parts at most ``max_part``."""
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, max_part) + 1):
        for rest in compositions(n - first, max_part):
            yield (first,) + rest


def gfp_by_compositions(k: int, n: int) -> Poly:
    """``F_n`` as the sum over compositions of ``n`` (parts <= k) of the product of ``t_part``."""
    total = Poly.zero()
    for c in compositions(n, k):
        term = Poly.const(1)
        for part in c:
            term = term * Poly.var(part)
        total = total + term
    return total


def glp_by_compositions(k: int, n: int) -> Poly:
    """``G_n`` (n >= 1) as the sum over compositions of ``first part * product of t_part``."""
    total = Poly.zero()
    for c in compositions(n, k):
        term = Poly.const(c[0])
        for part in c:
            term = term * Poly.var(part)
        total = total + term
    return total


def cycle_type_of(perm) -> tuple:
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def class_sizes(n: int) -> dict[tuple, int]:
    """Conjugacy class sizes of S_n by enumerating every permutation."""
    sizes: dict[tuple, int] = {}
    for p in permutations(range(n)):
        t = cycle_type_of(p)
        sizes[t] = sizes.get(t, 0) + 1
    return sizes


def perm_with_cycle_type(alpha: tuple) -> tuple:
    img, start = [], 0
    for length in alpha:
        for i in range(length):
            img.append(start + (i + 1) % length)
        start += length
    return tuple(img)


def tabloids(mu: tuple, n: int):
    """Ordered set partitions of range(n) into rows of sizes ``mu`` (rows as frozensets)."""
    def rec(remaining, sizes):
        if not sizes:
            yield ()
            return
        from itertools import combinations
        for row in combinations(sorted(remaining), sizes[0]):
            for rest in rec(remaining - set(row), sizes[1:]):
                yield (frozenset(row),) + rest
    yield from rec(set(range(n)), list(mu))


def permutation_character(mu: tuple, alpha: tuple) -> int:
    """Trace of a permutation of cycle type ``alpha`` on the tabloid module of shape ``mu``."""
    n = sum(mu)
    g = perm_with_cycle_type(alpha)
    count = 0
    for tab in tabloids(mu, n):
        if all(frozenset(g[i] for i in row) == row for row in tab):
            count += 1
    return count


def kostka(lam: tuple, mu: tuple) -> int:
    """Semistandard tableaux of shape ``lam`` and content ``mu``, by exhaustive filling."""
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    labels = [i + 1 for i, m in enumerate(mu) for _ in range(m)]
    count = 0
    seen = set()
    for fill in set(permutations(labels)):
        if fill in seen:
            continue
        seen.add(fill)
        T = dict(zip(cells, fill))
        ok = all(
            (c == 0 or T[(r, c - 1)] <= T[(r, c)]) and (r == 0 or T[(r - 1, c)] < T[(r, c)])
            for r, c in cells
        )
        count += ok
    return count


def characters_by_kostka(n: int, partitions_desc: list[tuple], classes: list[tuple]) -> dict[tuple, list[int]]:
    """Solve ``pi^mu = sum over lambda of K(lambda, mu) chi^lambda`` by back substitution.

    ``partitions_desc`` lists the partitions of ``n`` in dominance-compatible
    (reverse lexicographic) order, so the Kostka matrix is unitriangular.
    """
    chars: dict[tuple, list[int]] = {}
    for mu in partitions_desc:
        pi = [permutation_character(mu, a) for a in classes]
        for lam in partitions_desc:
            if lam == mu:
                break
            K = kostka(lam, mu)
            if K:
                pi = [x - K * y for x, y in zip(pi, chars[lam])]
        chars[mu] = pi
    return chars


def standard_tableaux_count(shape: tuple) -> int:
    """Number of standard Young tableaux, by removing corners recursively."""
    shape = tuple(x for x in shape if x)
    if not shape:
        return 1
    total = 0
    for i, length in enumerate(shape):
        if i + 1 == len(shape) or shape[i + 1] < length:
            total += standard_tableaux_count(shape[:i] + (length - 1,) + shape[i + 1:])
    return total


def hook_length_count(shape: tuple) -> int:
    n = sum(shape)
    conj = [sum(1 for x in shape if x > c) for c in range(shape[0])]
    prod = 1
    for r, length in enumerate(shape):
        for c in range(length):
            prod *= (length - c - 1) + (conj[c] - r - 1) + 1
    return factorial(n) // prod


def count_orbits(elements, n: int, m: int) -> int:
    """Distinct colourings of ``n`` points with ``m`` colours modulo the group, by canonical forms."""
    reps = set()
    for col in product(range(m), repeat=n):
        reps.add(min(tuple(col[g[i]] for i in range(n)) for g in elements))
    return len(reps)


def count_orbits_with_content(elements, content: tuple) -> int:
    n = sum(content)
    reps = set()
    for col in set(permutations([c for c, m in enumerate(content) for _ in range(m)])):
        reps.add(min(tuple(col[g[i]] for i in range(n)) for g in elements))
    return len(reps)


def cube_vertex_group() -> list[tuple]:
    """All 48 symmetries of the cube acting on its 8 vertices {0,1}^3."""
    verts = list(product((0, 1), repeat=3))
    index = {v: i for i, v in enumerate(verts)}
    out = []
    for perm in permutations(range(3)):
        for flips in product((0, 1), repeat=3):
            img = []
            for v in verts:
                w = tuple(v[perm[i]] ^ flips[i] for i in range(3))
                img.append(index[w])
            out.append(tuple(img))
    return out


def divisor_sum(n: int) -> int:
    return sum(d for d in range(1, n + 1) if n % d == 0)


def divisor_count(n: int) -> int:
    return sum(1 for d in range(1, n + 1) if n % d == 0)


def totient(n: int) -> int:
    from math import gcd
    return sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)


def mobius(n: int) -> int:
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = next(d for d in range(2, n + 1) if n % d == 0)
    while n % p == 0:
        n //= p
    return n == 1


def mangoldt_prime(n: int) -> int | None:
    """The prime ``p`` if ``n = p^e`` (e >= 1), else ``None``."""
    if not is_prime_power(n):
        return None
    return next(d for d in range(2, n + 1) if n % d == 0)


def fraction_list(xs) -> list[Fraction]:
    return [Fraction(x) for x in xs]
