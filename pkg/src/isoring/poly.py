"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Poly` maps exponent vectors to nonzero :class:`~fractions.Fraction`
coefficients. Variables are indexed from 1 and belong to a single *family*
(``"t"`` for core parameters, ``"G"``/``"F"`` for abstract sequence symbols,
``"x"`` for colour variables). Exponent vectors never carry trailing zeros.

Text grammar (parsed and printed)::

    t1^4 + 3*t1^2*t2 + t2^2 + 2*t1*t3 + t4
    -1/2*G1^2 + G2 - 3

Terms are printed in the canonical partition order (see
:mod:`isoring.partitions`); unit coefficients and unit exponents are elided.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

from .errors import FamilyMismatch, ParseError

Scalar = Union[int, Fraction]
ExpVec = tuple  # tuple[int, ...] without trailing zeros


def _trim(exps: Iterable[int]) -> ExpVec:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    if any(e < 0 for e in exps):
        raise ValueError(f"negative exponent in {exps}")
    return tuple(exps)


def _add_exps(a: ExpVec, b: ExpVec) -> ExpVec:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, e in enumerate(b):
        out[i] += e
    return tuple(out)


def order_key(exps: ExpVec, width: int) -> tuple:
    """Sort key realising the canonical term order for vectors padded to ``width``."""
    padded = tuple(exps) + (0,) * (width - len(exps))
    return padded[::-1]


class Poly:
    __slots__ = ("family", "_terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], Scalar] | None = None, family: str = "t"):
        clean: dict[ExpVec, Fraction] = {}
        for exps, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            key = _trim(exps)
            total = clean.get(key, 0) + c
            if total:
                clean[key] = total
            else:
                clean.pop(key, None)
        self.family = family
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, family: str) -> "Poly":
        p = cls.__new__(cls)
        p.family = family
        p._terms = terms
        p._hash = None
        return p

    # construction -------------------------------------------------------
    @classmethod
    def var(cls, j: int, family: str = "t") -> "Poly":
        if j < 1:
            raise ValueError("variables are indexed from 1")
        return cls._raw({(0,) * (j - 1) + (1,): Fraction(1)}, family)

    @classmethod
    def const(cls, c: Scalar, family: str = "t") -> "Poly":
        c = Fraction(c)
        return cls._raw({(): c} if c else {}, family)

    @classmethod
    def zero(cls, family: str = "t") -> "Poly":
        return cls._raw({}, family)

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: Scalar = 1, family: str = "t") -> "Poly":
        return cls({tuple(exps): coeff}, family)

    # inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[ExpVec, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(k == () for k in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), Fraction(0))

    def coefficient(self, exps: Iterable[int]) -> Fraction:
        return self._terms.get(_trim(exps), Fraction(0))

    def nvars(self) -> int:
        return max((len(k) for k in self._terms), default=0)

    def isobaric_degree(self):
        """Common isobaric weight of all monomials.

        Returns an ``int`` when homogeneous, ``None`` when not, and the string
        ``"any"`` for the zero polynomial.
        """
        if not self._terms:
            return "any"
        weights = {sum((j + 1) * e for j, e in enumerate(k)) for k in self._terms}
        return weights.pop() if len(weights) == 1 else None

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.family != self.family:
                raise FamilyMismatch(f"cannot combine {self.family}-polynomial with {other.family}-polynomial")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.family)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Poly._raw(out, self.family)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({k: -c for k, c in self._terms.items()}, self.family)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly.zero(self.family)
            return Poly._raw({k: c * other for k, c in self._terms.items()}, self.family)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[ExpVec, Fraction] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = _add_exps(k1, k2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return Poly._raw(out, self.family)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("polynomial division is only defined by nonzero constants")
            other = other.constant_value()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = Poly.const(1, self.family)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.family == other.family and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.family, frozenset(self._terms.items())))
        return self._hash

    # calculus and substitution -----------------------------------------
    def derivative(self, j: int) -> "Poly":
        """Formal partial derivative with respect to variable ``j`` (1-based)."""
        if j < 1:
            raise ValueError("variables are indexed from 1")
        out: dict[ExpVec, Fraction] = {}
        for k, c in self._terms.items():
            if len(k) >= j and k[j - 1]:
                e = k[j - 1]
                nk = list(k)
                nk[j - 1] = e - 1
                out[_trim(nk)] = c * e
        return Poly._raw(out, self.family)

    def substitute(self, values: Mapping[int, object] | Callable[[int], object] | list, zero=None):
        """Replace variable ``j`` by ``values[j]`` (or ``values(j)``).

        ``values`` may hold scalars or polynomials of any family; variables
        without a value are an error. A list is indexed from ``values[0] = x_1``.
        ``zero`` is the additive identity of the target ring (default ``0``).
        """
        if isinstance(values, list):
            seq = values
            lookup = lambda j: seq[j - 1] if j <= len(seq) else 0  # noqa: E731
        elif callable(values):
            lookup = values
        else:
            mapping = values
            lookup = mapping.__getitem__
        cache: dict[tuple[int, int], object] = {}

        def power(j: int, e: int):
            key = (j, e)
            if key not in cache:
                cache[key] = lookup(j) ** e
            return cache[key]

        total = zero if zero is not None else 0
        for k, c in self._terms.items():
            term = c
            for j, e in enumerate(k, start=1):
                if e:
                    term = term * power(j, e)
            total = total + term
        return total

    def evaluate(self, values) -> Fraction:
        """Evaluate at scalar values for ``x_1, x_2, ...`` (list or mapping)."""
        result = self.substitute(values)
        return Fraction(result) if not isinstance(result, Poly) else result

    def relabel(self, family: str) -> "Poly":
        return Poly._raw(dict(self._terms), family)

    def shift(self, offset: int) -> "Poly":
        """Rename variable ``j`` to ``j + offset``."""
        return Poly._raw({(0,) * offset + k if k else k: c for k, c in self._terms.items()}, self.family)

    # rendering ----------------------------------------------------------
    def sorted_terms(self) -> list[tuple[ExpVec, Fraction]]:
        width = self.nvars()
        return sorted(self._terms.items(), key=lambda kc: order_key(kc[0], width))

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Poly({render(self)!r}, family={self.family!r})"

    def to_json(self) -> list[dict]:
        return [{"exponents": list(k), "coeff": str(c)} for k, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict], family: str = "t") -> "Poly":
        return cls({tuple(d["exponents"]): Fraction(d["coeff"]) for d in data}, family)

    @classmethod
    def parse(cls, text: str, family: str | None = None) -> "Poly":
        return parse(text, family)


def render(p: Poly) -> str:
    if p.is_zero():
        return "0"
    pieces: list[str] = []
    for i, (k, c) in enumerate(p.sorted_terms()):
        factors = []
        for j, e in enumerate(k, start=1):
            if e == 1:
                factors.append(f"{p.family}{j}")
            elif e:
                factors.append(f"{p.family}{j}^{e}")
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(pieces)


def render_scalar_or_poly(v) -> str:
    return str(v) if not isinstance(v, Poly) else render(v)


_FACTOR = re.compile(r"^(?:(?P<num>\d+(?:/\d+)?)|(?P<fam>[A-Za-z]+)(?P<idx>\d+)(?:\^(?P<exp>\d+))?)$")


def parse(text: str, family: str | None = None) -> Poly:
    """Parse the canonical text grammar back into a :class:`Poly`."""
    src = text.replace("−", "-").strip()
    if not src:
        raise ParseError("empty polynomial")
    # split on top-level + and - signs, keeping the sign with the term
    tokens = re.findall(r"[+-]|[^+-]+", src.replace(" ", ""))
    if tokens[-1] in "+-":
        raise ParseError(f"dangling operator in {text!r}")
    terms: list[tuple[int, str]] = []
    sign = 1
    for tok in tokens:
        if tok in "+-":
            if tok == "-":
                sign = -sign
            continue
        terms.append((sign, tok))
        sign = 1
    fam = family
    out: dict[ExpVec, Fraction] = {}
    for sgn, body in terms:
        coeff = Fraction(sgn)
        exps: list[int] = []
        for factor in body.split("*"):
            m = _FACTOR.match(factor)
            if not m:
                raise ParseError(f"cannot parse factor {factor!r} in {text!r}")
            if m.group("num"):
                coeff *= Fraction(m.group("num"))
                continue
            f = m.group("fam")
            if fam is None:
                fam = f
            elif f != fam:
                raise ParseError(f"mixed variable families {fam!r} and {f!r} in {text!r}")
            j = int(m.group("idx"))
            if j < 1:
                raise ParseError(f"variable index must be >= 1 in {factor!r}")
            e = int(m.group("exp") or 1)
            if len(exps) < j:
                exps.extend([0] * (j - len(exps)))
            exps[j - 1] += e
        key = _trim(exps)
        out[key] = out.get(key, 0) + coeff
    return Poly(out, fam or "t")
