"""Permutation groups, cycle indicators and Polya counting.

Permutations are tuples ``p`` on ``{0, .., n-1}`` with ``p[i]`` the image of
``i``. Cycle notation in text is 1-based: ``"(1 2 3 4)"`` or ``"(1 3)(2 4)"``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .errors import InconsistentResult, InvalidPermutation, NotAGroup
from .partitions import Partition, to_multiplicities
from .poly import Poly

Perm = tuple


def compose(p: Perm, q: Perm) -> Perm:
    """``p`` after ``q``."""
    return tuple(p[q[i]] for i in range(len(q)))


def check_perm(p: Sequence[int]) -> Perm:
    p = tuple(p)
    if sorted(p) != list(range(len(p))):
        raise InvalidPermutation(f"not a bijection on 0..{len(p) - 1}: {p!r}")
    return p


def cycle_type(p: Sequence[int]) -> Partition:
    p = check_perm(p)
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def parse_cycles(text: str, degree: int | None = None) -> Perm:
    """Parse 1-based cycle notation such as ``"(1 2)(3 4)"``; ``"()"`` is the identity."""
    cycles = [[int(x) for x in c.replace(",", " ").split()] for c in re.findall(r"\(([^)]*)\)", text)]
    if not cycles and text.strip():
        raise InvalidPermutation(f"cannot parse cycle notation {text!r}")
    points = [x for c in cycles for x in c]
    if len(points) != len(set(points)) or any(x < 1 for x in points):
        raise InvalidPermutation(f"cycles must be disjoint and 1-based: {text!r}")
    n = max([degree or 0] + points)
    img = list(range(n))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    return tuple(img)


@dataclass(frozen=True)
class PermGroup:
    degree: int
    elements: tuple

    def __init__(self, elements: Iterable[Sequence[int]], degree: int | None = None, check: bool = True):
        elems = [check_perm(e) for e in elements]
        n = degree if degree is not None else (len(elems[0]) if elems else 0)
        elems = [e + tuple(range(len(e), n)) for e in elems]
        uniq = tuple(dict.fromkeys(elems))
        object.__setattr__(self, "degree", n)
        object.__setattr__(self, "elements", uniq)
        if check:
            self._verify()

    def _verify(self) -> None:
        ident = tuple(range(self.degree))
        if ident not in self.elements:
            raise NotAGroup("group must contain the identity")
        members = set(self.elements)
        for a in self.elements:
            for b in self.elements:
                if compose(a, b) not in members:
                    raise NotAGroup("element list is not closed under composition")

    @property
    def order(self) -> int:
        return len(self.elements)

    @classmethod
    def generated(cls, gens: Iterable[Sequence[int]], degree: int | None = None) -> "PermGroup":
        gens = [check_perm(g) for g in gens]
        n = degree if degree is not None else max((len(g) for g in gens), default=0)
        gens = [g + tuple(range(len(g), n)) for g in gens]
        ident = tuple(range(n))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = compose(g, a)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return cls(sorted(seen), n, check=False)

    @classmethod
    def trivial(cls, n: int) -> "PermGroup":
        return cls([tuple(range(n))], n, check=False)

    @classmethod
    def cyclic(cls, n: int) -> "PermGroup":
        return cls([tuple((i + s) % n for i in range(n)) for s in range(n)], n, check=False)

    @classmethod
    def dihedral(cls, n: int) -> "PermGroup":
        """Symmetries of a regular ``n``-gon acting on its vertices (order ``2n``)."""
        rots = [tuple((i + s) % n for i in range(n)) for s in range(n)]
        refl = [tuple((s - i) % n for i in range(n)) for s in range(n)]
        return cls(rots + refl, n, check=False)

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        return cls(list(permutations(range(n))), n, check=False)

    @classmethod
    def parse(cls, spec: str) -> "PermGroup":
        """``"dihedral:4"``, ``"cyclic:5"``, ``"symmetric:3"``, ``"trivial:2"``."""
        name, _, arg = spec.partition(":")
        builders = {"dihedral": cls.dihedral, "cyclic": cls.cyclic, "symmetric": cls.symmetric, "trivial": cls.trivial}
        if name not in builders or not arg.isdigit() or int(arg) < 1:
            raise ValueError(f"unknown group {spec!r}; expected e.g. dihedral:4")
        return builders[name](int(arg))

    @classmethod
    def from_cycles(cls, text: str, degree: int | None = None) -> "PermGroup":
        """Group generated by ``;``-separated permutations in cycle notation."""
        gens = [parse_cycles(chunk, degree) for chunk in text.split(";") if chunk.strip()]
        n = max([degree or 0] + [len(g) for g in gens])
        return cls.generated(gens, n)


@dataclass
class CycleIndicator:
    order: int
    class_counts: dict  # cycle type -> number of group elements with that type

    @property
    def polynomial(self) -> Poly:
        return Poly({to_multiplicities(a): Fraction(c, self.order) for a, c in self.class_counts.items()}, "G")

    @property
    def numerator(self) -> Poly:
        """``|H|`` times the indicator: the integer-coefficient encoding."""
        return Poly({to_multiplicities(a): c for a, c in self.class_counts.items()}, "G")

    def in_t(self) -> Poly:
        """Numerator written in ``t``-variables, as in the square-colouring encoding."""
        return self.numerator.relabel("t")

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "classes": [{"cycle_type": list(a), "count": c} for a, c in sorted(self.class_counts.items())],
            "polynomial": str(self.polynomial),
        }

    @classmethod
    def from_json(cls, data: dict) -> "CycleIndicator":
        return cls(data["order"], {tuple(d["cycle_type"]): d["count"] for d in data["classes"]})


def cycle_indicator(group: PermGroup) -> CycleIndicator:
    return CycleIndicator(group.order, dict(Counter(cycle_type(g) for g in group.elements)))


def count_colorings(group: PermGroup, m: int) -> int:
    """Number of ``m``-colourings up to the group action (indicator at ``G_j = m``)."""
    if m < 0:
        raise ValueError("number of colours must be non-negative")
    total = cycle_indicator(group).polynomial.evaluate(lambda j: Fraction(m))
    if total.denominator != 1:
        raise InconsistentResult(f"orbit count {total} is not an integer")
    return int(total)


def pattern_inventory(group: PermGroup, colors: Sequence[str]) -> Poly:
    """Indicator with ``G_j -> x_1^j + ... + x_r^j``; variable ``x_i`` is ``colors[i-1]``."""
    if not colors:
        raise ValueError("need at least one colour")
    r = len(colors)

    def power_sum(j: int) -> Poly:
        return sum((Poly.var(i, "x") ** j for i in range(1, r + 1)), Poly.zero("x"))

    ci = cycle_indicator(group)
    return ci.numerator.substitute(power_sum, zero=Poly.zero("x")) / ci.order


def inventory_text(poly: Poly, colors: Sequence[str]) -> str:
    """Render an inventory with colour names instead of ``x1, x2, ...``."""
    text = str(poly)
    for i in range(len(colors), 0, -1):
        text = re.sub(rf"x{i}(?!\d)", colors[i - 1], text)
    return text


def pattern_count(group: PermGroup, multiset: Mapping[str, int]) -> int:
    """Orbits of colourings using colour ``c`` exactly ``multiset[c]`` times."""
    colors = list(multiset)
    counts = [multiset[c] for c in colors]
    if any(c < 0 for c in counts) or sum(counts) != group.degree:
        raise ValueError(f"multiset size {sum(counts)} does not match the group degree {group.degree}")
    coeff = pattern_inventory(group, colors).coefficient(counts)
    if coeff.denominator != 1:
        raise InconsistentResult(f"pattern count {coeff} is not an integer")
    return int(coeff)


def parse_multiset(text: str) -> dict[str, int]:
    """``"x:2,y:2"`` -> ``{"x": 2, "y": 2}``."""
    out: dict[str, int] = {}
    for item in text.split(","):
        name, _, count = item.strip().partition(":")
        if not name or not count.lstrip("-").isdigit():
            raise ValueError(f"bad multiset entry {item!r}; expected colour:count")
        out[name] = out.get(name, 0) + int(count)
    return out
