"""Arithmetic functions and their representation by GFP sequences.

A multiplicative ``f`` is represented *locally*: at each prime ``p`` the stream
``F_n = f(p^n)`` is the GFP of a core read off the stream. A function such as
the Catalan numbers is represented *globally*: ``F_n = f(n)`` with ``F_0 = 1``.
The LOG of a representation is the function's additive companion, and
Rearick's logarithm (with exact formal ``log p`` values) ties the two views
together.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Callable, Iterable, Mapping, Sequence

from sympy import divisors, factorint, totient

from .errors import NonUnit
from .logexp import conv_inverse, exp_op, log_op
from .poly import Poly
from .sequences import Core, Seq

# --------------------------------------------------------------------------
# arithmetic functions


@dataclass(frozen=True)
class ArithFn:
    name: str
    func: Callable[[int], object]
    multiplicative: bool = False
    completely_multiplicative: bool = False
    global_stream: Callable[[int], object] | None = None

    def __call__(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError("arithmetic functions are defined on n >= 1")
        return Fraction(self.func(n))

    def global_value(self, n: int) -> Fraction:
        """Term ``n`` of the global stream: ``1`` at ``n = 0``, else ``f(n)``."""
        if self.global_stream is not None:
            return Fraction(self.global_stream(n))
        return Fraction(1) if n == 0 else self(n)


def _mobius(n: int) -> int:
    exps = factorint(n).values()
    return 0 if any(e > 1 for e in exps) else (-1) ** len(exps)


def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


BUILTINS: dict[str, ArithFn] = {
    "zeta": ArithFn("zeta", lambda n: 1, True, True),
    "mu": ArithFn("mu", _mobius, True),
    "tau": ArithFn("tau", lambda n: len(divisors(n)), True),
    "sigma": ArithFn("sigma", lambda n: sum(divisors(n)), True),
    "phi": ArithFn("phi", lambda n: int(totient(n)), True),
    "zeta_1": ArithFn("zeta_1", lambda n: n, True, True),
    # the global identity for the sequence product is (1, 0, 0, ...)
    "delta": ArithFn("delta", lambda n: 1 if n == 1 else 0, True, True,
                     global_stream=lambda n: 1 if n == 0 else 0),
    "catalan": ArithFn("catalan", catalan_number, False),
}


def get_function(name: str) -> ArithFn:
    try:
        return BUILTINS[name]
    except KeyError:
        raise ValueError(f"unknown function {name!r}; choose from {', '.join(BUILTINS)}") from None


def _value(f, n: int) -> Fraction:
    if isinstance(f, ArithFn):
        return f(n)
    if callable(f):
        return Fraction(f(n))
    return Fraction(f[n])


# --------------------------------------------------------------------------
# core inference and representations


def peel_core(values: Sequence) -> list[Fraction]:
    """``t_1 .. t_m`` from ``values[0..m]`` by ``t_j = v_j - (t_1 v_(j-1) + ... + t_(j-1) v_1)``."""
    if not values or Fraction(values[0]) != 1:
        raise NonUnit("not a unit at p^0: the stream must start with 1")
    vals = [Fraction(v) for v in values]
    ts: list[Fraction] = []
    for j in range(1, len(vals)):
        ts.append(vals[j] - sum((ts[i - 1] * vals[j - i] for i in range(1, j)), Fraction(0)))
    return ts


def _trimmed(ts: Sequence[Fraction]) -> list[Fraction]:
    ts = list(ts)
    while ts and ts[-1] == 0:
        ts.pop()
    return ts


def infer_core(values: Sequence) -> Core:
    """Shortest evaluated core whose GFP reproduces ``values``."""
    return Core.evaluated(_trimmed(peel_core(values)))


class _StreamCore:
    """Lazily peel core parameters from an unbounded value stream."""

    def __init__(self, stream: Callable[[int], Fraction]):
        self.stream = stream
        self.vals = [Fraction(stream(0))]
        self.ts: list[Fraction] = []
        self._lock = threading.Lock()
        if self.vals[0] != 1:
            raise NonUnit("not a unit at p^0: the stream must start with 1")

    def __call__(self, j: int) -> Fraction:
        with self._lock:
            while len(self.ts) < j:
                m = len(self.ts) + 1
                self.vals.append(Fraction(self.stream(m)))
                self.ts.append(self.vals[m] - sum((self.ts[i - 1] * self.vals[m - i] for i in range(1, m)), Fraction(0)))
            return self.ts[j - 1]


@dataclass
class LocalRep:
    """``F_n = f(p^n)`` (local, ``prime`` set) or ``F_n = f(n)`` (global)."""

    name: str
    prime: int | None
    core: Core
    values: list[Fraction]
    finite: bool

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def core_values(self) -> list[Fraction]:
        k = self.core.degree if self.core.degree is not None else self.n_max
        return [self.core.t(j) for j in range(1, k + 1)]

    def reproduces(self) -> bool:
        return Seq(self.core, n_max=self.n_max).take(self.n_max) == self.values

    def log(self) -> list[Fraction]:
        return log_op(self.values, self.core)

    def to_json(self) -> dict:
        return {
            "function": self.name,
            "prime": self.prime,
            "finite_core": self.finite,
            "core": [str(t) for t in self.core_values()],
            "values": [str(v) for v in self.values],
            "note": None if self.finite else f"no finite core up to degree {self.n_max}; core is a truncated power series",
        }


def _represent(name: str, stream: Callable[[int], Fraction], prime: int | None, n_max: int) -> LocalRep:
    values = [Fraction(stream(n)) for n in range(n_max + 1)]
    ts = peel_core(values)
    degree = len(_trimmed(ts))
    if degree < n_max or n_max == 0:
        core = Core.evaluated(ts[:degree])
        finite = True
    else:
        core = Core.from_generator(_StreamCore(stream), name=name)
        finite = False
    return LocalRep(name, prime, core, values, finite)


def local_rep(f: ArithFn, p: int, n_max: int, require_multiplicative: bool = True) -> LocalRep:
    if require_multiplicative and not f.multiplicative:
        raise ValueError(f"{f.name} is not multiplicative; use global_rep")
    return _represent(f.name, lambda n: f(p ** n), p, n_max)


def global_rep(f: ArithFn, n_max: int) -> LocalRep:
    return _represent(f.name, f.global_value, None, n_max)


# --------------------------------------------------------------------------
# Dirichlet convolution


def _table(f, N: int) -> list[Fraction]:
    """``[0, f(1), ..., f(N)]`` so each value is computed once."""
    return [Fraction(0)] + [_value(f, n) for n in range(1, N + 1)]


def dirichlet_conv(f, g, N: int) -> dict[int, Fraction]:
    fv, gv = _table(f, N), _table(g, N)
    out = [Fraction(0)] * (N + 1)
    for d in range(1, N + 1):
        if fv[d]:
            for q in range(1, N // d + 1):
                out[d * q] += fv[d] * gv[q]
    return {n: out[n] for n in range(1, N + 1)}


def dirichlet_inverse(f, N: int) -> dict[int, Fraction]:
    fv = _table(f, N)
    if fv[1] == 0:
        raise NonUnit("f(1) = 0 has no Dirichlet inverse")
    # sieve: once inv[d] is final, push f(m/d) inv[d] into every multiple m
    acc = [Fraction(0)] * (N + 1)
    inv = {}
    for d in range(1, N + 1):
        inv[d] = 1 / fv[1] if d == 1 else -acc[d] / fv[1]
        if inv[d]:
            for q in range(2, N // d + 1):
                acc[d * q] += fv[q] * inv[d]
    return inv


# --------------------------------------------------------------------------
# formal logarithms


class FormalLog:
    """An exact combination ``sum c_p log p`` over primes ``p``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        self.coeffs = {p: Fraction(c) for p, c in (coeffs or {}).items() if c}

    @classmethod
    def of(cls, n: int) -> "FormalLog":
        """``log n`` expanded over the prime factorisation of ``n``."""
        if n < 1:
            raise ValueError("log is defined for positive integers")
        return cls({p: e for p, e in factorint(n).items()})

    def __add__(self, other: "FormalLog") -> "FormalLog":
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return FormalLog(out)

    def __sub__(self, other: "FormalLog") -> "FormalLog":
        return self + other * -1

    def __mul__(self, c) -> "FormalLog":
        return FormalLog({p: v * c for p, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, FormalLog):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for p in sorted(self.coeffs):
            c = self.coeffs[p]
            mag = abs(c)
            body = f"log({p})" if mag == 1 else f"{mag}*log({p})"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    __repr__ = __str__

    def to_json(self) -> dict[str, str]:
        return {str(p): str(c) for p, c in sorted(self.coeffs.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "FormalLog":
        return cls({int(p): Fraction(c) for p, c in data.items()})


def rearick_log(f, N: int) -> dict[int, FormalLog]:
    """``Lf(n) = sum over d | n of f(d) f^-1(n/d) log d``, with ``Lf(1) = log f(1) = 0``."""
    fv = _table(f, N)
    if fv[1] != 1:
        raise ValueError("the formal logarithm needs f(1) = 1")
    inv = dirichlet_inverse(f, N)
    coeffs: list[dict[int, Fraction]] = [{} for _ in range(N + 1)]
    for d in range(2, N + 1):
        if not fv[d]:
            continue
        log_d = factorint(d)
        for q in range(1, N // d + 1):
            c = fv[d] * inv[q]
            if c:
                target = coeffs[d * q]
                for p, e in log_d.items():
                    target[p] = target.get(p, 0) + e * c
    return {n: FormalLog(coeffs[n]) for n in range(1, N + 1)}


# --------------------------------------------------------------------------
# companions and trigonometric pairs


def companion_of(f: ArithFn, n_max: int, p: int | None = None) -> list[Fraction]:
    """The LOG image ``G`` of the local (``p`` given) or global representation."""
    rep = local_rep(f, p, n_max) if p is not None else global_rep(f, n_max)
    return rep.log()


def additive_companion(f: ArithFn, N: int) -> dict[int, Fraction]:
    """Additive function with ``g(p^e) = G_e`` at each prime, extended over coprime factors."""
    if not f.multiplicative:
        raise ValueError("the additive companion is assembled from local representations")
    cache: dict[int, list[Fraction]] = {}
    out = {}
    for m in range(1, N + 1):
        total = Fraction(0)
        for p, e in factorint(m).items():
            if p not in cache or len(cache[p]) <= e:
                cache[p] = companion_of(f, max(e, 8), p)
            total += cache[p][e]
        out[m] = total
    return out


@dataclass
class TrigPair:
    cos: list
    sin: list
    cos_closed: list
    sin_closed: list

    @property
    def agree(self) -> bool:
        return self.cos == self.cos_closed and self.sin == self.sin_closed

    def to_json(self) -> dict:
        return {
            "C": [str(v) for v in self.cos],
            "S": [str(v) for v in self.sin],
            "closed_form_agrees": self.agree,
        }


def trig_from_exp(F: Sequence) -> tuple[list, list]:
    """``C = (E + E^-1) / 2`` and ``S = (E - E^-1) / 2`` for ``E = F``."""
    inv = conv_inverse(F)
    return [(a + b) / 2 for a, b in zip(F, inv)], [(a - b) / 2 for a, b in zip(F, inv)]


def trig(source, n_max: int) -> TrigPair:
    """Hyperbolic cosine/sine of a representation or of a core's GLP.

    The definitional route is ``E(G)`` and its convolution inverse; the closed
    form is ``C_n = (F_n - tt_n) / 2``, ``S_n = (F_n + tt_n) / 2`` with
    ``tt = (-1, t_1, t_2, ...)``.
    """
    if isinstance(source, Core):
        core = source
        F = Seq(core, n_max=n_max).take(n_max)
    else:
        core = source.core
        F = source.values[: n_max + 1]
        if len(F) < n_max + 1:
            raise ValueError("representation is shorter than n_max")
    G = log_op(F, core)
    E = exp_op(G)
    cos, sin = trig_from_exp(E)
    one = Poly.const(1) if core.is_generic else Fraction(1)
    tt = [-one] + [core.t(j) for j in range(1, n_max + 1)]
    cos_c = [(a - b) / 2 for a, b in zip(F, tt)]
    sin_c = [(a + b) / 2 for a, b in zip(F, tt)]
    return TrigPair(cos, sin, cos_c, sin_c)


def trig_sum(G1: Sequence, G2: Sequence) -> TrigPair:
    """Trig pair of ``G1 + G2`` computed definitionally (closed form not applicable)."""
    E = exp_op([a + b for a, b in zip(G1, G2)])
    cos, sin = trig_from_exp(E)
    return TrigPair(cos, sin, cos, sin)


# --------------------------------------------------------------------------
# representability


def is_multiplicative(f, N: int) -> bool:
    for m in range(2, N + 1):
        for n in range(m, N // m + 1):
            if gcd(m, n) == 1 and _value(f, m * n) != _value(f, m) * _value(f, n):
                return False
    return _value(f, 1) == 1


@dataclass
class RepresentabilityReport:
    name: str
    multiplicative: bool
    local: dict[int, LocalRep] = field(default_factory=dict)
    global_rep: LocalRep | None = None
    locally_representable: bool = False
    globally_representable: bool = False

    def to_json(self) -> dict:
        return {
            "function": self.name,
            "multiplicative": self.multiplicative,
            "locally_representable": self.locally_representable,
            "globally_representable": self.globally_representable,
            "local": {str(p): r.to_json() for p, r in sorted(self.local.items())},
            "global": self.global_rep.to_json() if self.global_rep else None,
        }


def representability_check(f: ArithFn, N: int, primes: Iterable[int] = (2, 3, 5, 7),
                           local_depth: int = 12) -> RepresentabilityReport:
    """Try local inference at each prime and global inference up to ``N``.

    Local streams ``f(p^n)`` are read for ``n <= local_depth`` when ``f`` is
    flagged multiplicative, and only up to ``p^n <= N`` otherwise (a Catalan
    number at ``3^12`` is far too large to be useful). Any stream starting with 1 has a core if power series are allowed,
    so the local verdict rests on multiplicativity (checked on coprime pairs
    with product at most ``N``) and the global verdict on the stream starting
    with a unit.
    """
    mult = is_multiplicative(f, N)
    report = RepresentabilityReport(f.name, mult)
    for p in primes:
        depth = local_depth
        if not f.multiplicative:
            depth = 1
            while p ** (depth + 1) <= N:
                depth += 1
        report.local[p] = local_rep(f, p, depth, require_multiplicative=False)
    report.locally_representable = mult and all(r.reproduces() for r in report.local.values())
    try:
        report.global_rep = global_rep(f, N)
        report.globally_representable = report.global_rep.reproduces()
    except NonUnit:
        report.globally_representable = False
    return report
