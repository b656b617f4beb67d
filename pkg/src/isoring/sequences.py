"""Core polynomials and the weighted isobaric sequences they generate.

A core ``[t_1, ..., t_k]`` stands for ``X^k - t_1 X^(k-1) - ... - t_k``. Every
sequence here obeys the degree-``k`` recursion

    P_n = t_1 P_(n-1) + ... + t_k P_(n-k)          (n >= k)

and has the closed form

    P_n = sum over a |- n, parts <= k, of
          multinomial(|a|; a) * (sum_j a_j w_j) / |a| * t_1^a_1 ... t_k^a_k

for a weight vector ``w``. All-ones weights give the generalized Fibonacci
polynomials (GFP), ``w = (1, 2, ..., k)`` the generalized Lucas polynomials (GLP).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import NonInvertibleCore, SymbolicNegativeIndex, WeightMismatch
from .partitions import multinomial, partitions, to_multiplicities
from .poly import Poly


class Core:
    """A core polynomial, generic (symbolic ``t_j``) or evaluated.

    Evaluated cores hold a finite list of rationals, or a generator ``j -> t_j``
    for infinite cores such as the Euler totient or Catalan cores. Parameters
    beyond the stored degree are zero.
    """

    def __init__(self, *, k: int | None = None, values: Sequence | None = None,
                 generator: Callable[[int], Fraction] | None = None, offset: int = 0,
                 name: str | None = None):
        if sum(x is not None for x in (k, values, generator)) != 1:
            raise ValueError("specify exactly one of k, values, generator")
        self._generic_k = k
        self._values = tuple(Fraction(v) for v in values) if values is not None else None
        self._generator = generator
        self._gen_cache: dict[int, Fraction] = {}
        self._lock = threading.Lock()
        self.offset = offset
        self.name = name
        if k is not None and k < 1:
            raise ValueError("a generic core needs k >= 1")

    @classmethod
    def generic(cls, k: int, offset: int = 0) -> "Core":
        """Symbolic core of degree ``k``; ``offset`` renames ``t_j`` to variable ``j + offset``."""
        return cls(k=k, offset=offset)

    @classmethod
    def evaluated(cls, values: Sequence) -> "Core":
        return cls(values=values)

    @classmethod
    def from_generator(cls, fn: Callable[[int], Fraction], name: str | None = None) -> "Core":
        return cls(generator=fn, name=name)

    @classmethod
    def parse(cls, text: str) -> "Core":
        items = [s for s in text.replace(" ", "").strip("[]").split(",") if s]
        return cls.evaluated([Fraction(s) for s in items])

    @property
    def is_generic(self) -> bool:
        return self._generic_k is not None

    @property
    def is_infinite(self) -> bool:
        return self._generator is not None

    @property
    def degree(self) -> int | None:
        if self._generic_k is not None:
            return self._generic_k
        if self._values is not None:
            return len(self._values)
        return None

    @property
    def values(self) -> tuple[Fraction, ...] | None:
        return self._values

    def t(self, j: int):
        """The parameter ``t_j`` (a :class:`Poly` for generic cores)."""
        if j < 1:
            return 0
        if self._generic_k is not None:
            return Poly.var(j + self.offset) if j <= self._generic_k else 0
        if self._values is not None:
            return self._values[j - 1] if j <= len(self._values) else Fraction(0)
        with self._lock:
            if j not in self._gen_cache:
                self._gen_cache[j] = Fraction(self._generator(j))
            return self._gen_cache[j]

    def params(self, n: int) -> list:
        return [self.t(j) for j in range(1, n + 1)]

    @property
    def invertible(self) -> bool:
        if self.is_generic:
            return True
        if self._values is None:
            return False
        return bool(self._values) and self._values[-1] != 0

    def evaluate(self, values: Sequence) -> "Core":
        """Specialise a generic core at rational values for ``t_1 .. t_k``."""
        if not self.is_generic:
            raise ValueError("only generic cores can be evaluated")
        if len(values) != self._generic_k:
            raise WeightMismatch("value count does not match core degree")
        return Core.evaluated(values)

    def to_json(self) -> dict:
        if self.is_generic:
            return {"type": "generic", "k": self._generic_k}
        if self._values is not None:
            return {"type": "evaluated", "t": [str(v) for v in self._values]}
        return {"type": "infinite", "name": self.name}

    @classmethod
    def from_json(cls, data: dict) -> "Core":
        if data["type"] == "generic":
            return cls.generic(data["k"])
        if data["type"] == "evaluated":
            return cls.evaluated([Fraction(v) for v in data["t"]])
        raise ValueError("infinite cores are not serialisable; rebuild them from their source")

    def __repr__(self) -> str:
        if self.is_generic:
            return f"Core.generic({self._generic_k})"
        if self._values is not None:
            return "[" + ", ".join(str(v) for v in self._values) + "]"
        return f"Core.from_generator(<{self.name or 'infinite'}>)"

    def __eq__(self, other):
        if not isinstance(other, Core):
            return NotImplemented
        if self.is_generic or other.is_generic:
            return (self._generic_k, self.offset) == (other._generic_k, other.offset)
        return self._values is not None and self._values == other._values

    def __hash__(self):
        return hash((self._generic_k, self.offset, self._values))


@dataclass(frozen=True)
class Weight:
    """Weight vector of a sequence in the weighted module.

    ``scheme`` is one of ``"ones"`` (GFP), ``"ramp"`` (GLP), ``"shifted"``
    (``param`` leading zeros then ones: the columns of the infinite companion
    matrix), ``"hook"`` (``param`` zeros then ``(-1)^param``: Schur hooks), or
    ``"explicit"`` with the vector in ``values``.
    """

    scheme: str = "ones"
    param: int = 0
    values: tuple = ()

    @classmethod
    def explicit(cls, values: Sequence[int]) -> "Weight":
        return cls("explicit", 0, tuple(Fraction(v) for v in values))

    def at(self, j: int, k: int | None) -> Fraction:
        if self.scheme == "ones":
            return Fraction(1)
        if self.scheme == "ramp":
            return Fraction(j)
        if self.scheme == "shifted":
            return Fraction(0 if j <= self.param else 1)
        if self.scheme == "hook":
            return Fraction(0 if j <= self.param else (-1) ** self.param)
        if self.scheme == "explicit":
            return self.values[j - 1] if j <= len(self.values) else Fraction(0)
        raise ValueError(f"unknown weight scheme {self.scheme!r}")

    def check(self, k: int | None) -> None:
        if self.scheme == "explicit" and k is not None and len(self.values) != k:
            raise WeightMismatch(f"weight has length {len(self.values)} but core degree is {k}")

    def label(self) -> str:
        if self.scheme == "explicit":
            return "(" + ",".join(str(v) for v in self.values) + ")"
        return self.scheme if self.scheme in ("ones", "ramp") else f"{self.scheme}:{self.param}"


GFP = Weight("ones")
GLP = Weight("ramp")


def _zero_like(core: Core):
    return Poly.zero() if core.is_generic else Fraction(0)


def initial_value(core: Core, weight: Weight, n_max: int | None = None):
    """``P_0 = w_k``. For infinite cores ``k`` is the truncation bound ``n_max``."""
    k = core.degree
    if k is None:
        if n_max is None:
            raise ValueError("infinite cores need an explicit truncation bound")
        k = n_max
    v = weight.at(k, k)
    return Poly.const(v) if core.is_generic else v


def weighted_closed(core: Core, weight: Weight, n: int, n_max: int | None = None):
    """Closed-form (multinomial sum) evaluation of ``P_{w,k,n}``."""
    if n < 0:
        raise ValueError("closed form is defined for n >= 0")
    weight.check(core.degree)
    if n == 0:
        return initial_value(core, weight, n_max)
    k = core.degree if core.degree is not None else n
    total = _zero_like(core)
    ts = core.params(min(k, n))
    for parts in partitions(n, k):
        alpha = to_multiplicities(parts)
        size = sum(alpha)
        coeff = Fraction(multinomial(alpha)) * sum(a * weight.at(j, k) for j, a in enumerate(alpha, 1)) / size
        if not coeff:
            continue
        term = coeff
        for j, a in enumerate(alpha, 1):
            if a:
                term = term * ts[j - 1] ** a
        total = total + term
    return total


class Seq:
    """A lazily computed weighted sequence over a core, with a thread-safe cache.

    Values are produced by the linear recursion. Indices ``1 .. k-1`` are seeded
    with ``P_n = t_1 P_(n-1) + ... + t_(n-1) P_1 + w_n t_n``, which is what the
    closed form gives below the core degree. Negative indices use the backward
    recursion and need an evaluated core with ``t_k != 0``.
    """

    def __init__(self, core: Core, weight: Weight = GFP, n_max: int | None = None, kind: str | None = None):
        weight.check(core.degree)
        self.core = core
        self.weight = weight
        self.n_max = n_max
        self.kind = kind or {"ones": "GFP", "ramp": "GLP"}.get(weight.scheme, "Weighted")
        self._cache: dict[int, object] = {0: initial_value(core, weight, n_max)}
        self._lock = threading.Lock()

    def _forward(self, n: int):
        core = self.core
        k = core.degree
        if k is not None and n >= k:
            acc = _zero_like(core)
            for i in range(1, k + 1):
                acc = acc + core.t(i) * self._cache[n - i]
            return acc
        acc = _zero_like(core)
        for i in range(1, n):
            acc = acc + core.t(i) * self._cache[n - i]
        kk = k if k is not None else self.n_max
        return acc + self.weight.at(n, kk) * core.t(n)

    def _backward(self, n: int):
        # value at index n from indices n+1 .. n+k
        core = self.core
        k = core.degree
        acc = self._cache[n + k]
        for i in range(1, k):
            acc = acc - core.t(i) * self._cache[n + k - i]
        return acc / core.t(k)

    def __getitem__(self, n: int):
        with self._lock:
            if n in self._cache:
                return self._cache[n]
            if n > 0:
                start = max(i for i in self._cache if i >= 0) + 1
                for m in range(start, n + 1):
                    self._cache[m] = self._forward(m)
                return self._cache[n]
            self._require_invertible()
            k = self.core.degree
            top = max(self._cache) if self._cache else 0
            for m in range(top + 1, k):
                self._cache[m] = self._forward(m)
            lowest = min(self._cache)
            for m in range(lowest - 1, n - 1, -1):
                self._cache[m] = self._backward(m)
            return self._cache[n]

    def _require_invertible(self) -> None:
        if self.core.is_generic:
            raise SymbolicNegativeIndex("negative indices need an evaluated core; symbolic extension is unsupported")
        if self.core.is_infinite or not self.core.invertible:
            raise NonInvertibleCore("negative indices need a finite core with t_k != 0")

    def take(self, n_max: int) -> list:
        return [self[n] for n in range(n_max + 1)]

    def window(self, n_min: int, n_max: int) -> dict[int, object]:
        return {n: self[n] for n in range(n_min, n_max + 1)}


def weighted(core: Core, weight: Weight, n: int, n_max: int | None = None):
    """``P_{w,k,n}`` via the recursion."""
    if n < 0:
        raise ValueError("use extend_negative for negative indices")
    return Seq(core, weight, n_max=n_max)[n]


def gfp(core: Core, n: int):
    return weighted(core, GFP, n)


def glp(core: Core, n: int, n_max: int | None = None):
    return weighted(core, GLP, n, n_max=n_max)


def gfp_closed(core: Core, n: int):
    return weighted_closed(core, GFP, n)


def glp_closed(core: Core, n: int, n_max: int | None = None):
    return weighted_closed(core, GLP, n, n_max=n_max)


def partial_derivative(p: Poly, j: int) -> Poly:
    return p.derivative(j)


def extend_negative(seq: Seq, m: int) -> list:
    """Values at ``n = -1, -2, ..., -m``."""
    if m < 1:
        raise ValueError("m must be positive")
    seq._require_invertible()
    return [seq[-i] for i in range(1, m + 1)]


def evaluate_value(v, t_values: Sequence) -> Fraction:
    """Evaluate a generic-core value at concrete ``t`` (scalars pass through)."""
    return v.evaluate(list(t_values)) if isinstance(v, Poly) else Fraction(v)
