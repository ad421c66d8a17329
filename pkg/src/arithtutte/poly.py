"""Sparse bivariate Laurent polynomials with half-integer exponents.

Exponents are stored doubled, so ``x^(3/2)`` is the key ``(3, 0)``.
Coefficients are :class:`fractions.Fraction`.
"""
from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import ArgumentError, DomainError, UnsupportedError

Rational = Union[int, Fraction]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction (floats are rejected)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ArgumentError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ArgumentError(f"not a rational string: {value!r}") from exc
    raise ArgumentError(f"not an exact rational: {value!r}")


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class HalfInt:
    """An element of (1/2)Z, stored as twice its value."""

    __slots__ = ("doubled",)

    def __init__(self, doubled: int):
        if isinstance(doubled, bool) or not isinstance(doubled, int):
            raise ArgumentError(f"HalfInt expects an int (the doubled value), got {doubled!r}")
        object.__setattr__(self, "doubled", doubled)

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    @classmethod
    def of(cls, value) -> HalfInt:
        if isinstance(value, HalfInt):
            return value
        q = as_fraction(value)
        if 2 % q.denominator:
            raise ArgumentError(f"{value!r} is not a multiple of 1/2")
        return cls(q.numerator * (2 // q.denominator))

    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __int__(self) -> int:
        if self.doubled % 2:
            raise DomainError(f"{self} is not an integer")
        return self.doubled // 2

    def __add__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = HalfInt(2 * other)
        if not isinstance(other, HalfInt):
            return NotImplemented
        return HalfInt(self.doubled + other.doubled)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = HalfInt(2 * other)
        if not isinstance(other, HalfInt):
            return NotImplemented
        return HalfInt(self.doubled - other.doubled)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return HalfInt(-self.doubled)

    def _key(self, other):
        if isinstance(other, HalfInt):
            return other.doubled
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return 2 * Fraction(other)
        return None

    def __eq__(self, other):
        k = self._key(other)
        return NotImplemented if k is None else self.doubled == k

    def __lt__(self, other):
        k = self._key(other)
        return NotImplemented if k is None else self.doubled < k

    def __le__(self, other):
        k = self._key(other)
        return NotImplemented if k is None else self.doubled <= k

    def __gt__(self, other):
        k = self._key(other)
        return NotImplemented if k is None else self.doubled > k

    def __ge__(self, other):
        k = self._key(other)
        return NotImplemented if k is None else self.doubled >= k

    def __hash__(self):
        if self.doubled % 2 == 0:
            return hash(self.doubled // 2)
        return hash(Fraction(self.doubled, 2))

    def __str__(self):
        return format_rational(self.to_fraction())

    def __repr__(self):
        return f"HalfInt({self})"


def _exact_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    n, d = value.numerator, value.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def rational_power(base: Fraction, doubled_exp: int) -> Fraction:
    """``base ** (doubled_exp / 2)`` exactly, or raise."""
    if doubled_exp == 0:
        return Fraction(1)
    if base == 0:
        if doubled_exp < 0:
            raise DomainError("0 raised to a negative power")
        return Fraction(0)
    if doubled_exp % 2 == 0:
        return base ** (doubled_exp // 2)
    root = _exact_sqrt(base)
    if root is None:
        raise UnsupportedError(
            f"half-integer power of {format_rational(base)} is not rational"
        )
    return root ** doubled_exp


class BiLaurent:
    """Immutable sparse Laurent polynomial in ``x`` and ``y``.

    Terms map doubled exponent pairs ``(2*ex, 2*ey)`` to nonzero Fractions.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], Rational] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (ex, ey), c in terms.items():
                c = as_fraction(c)
                if c:
                    clean[(int(ex), int(ey))] = c
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], Fraction]) -> BiLaurent:
        # caller guarantees nonzero Fraction values
        p = object.__new__(cls)
        object.__setattr__(p, "_terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("BiLaurent is immutable")

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls) -> BiLaurent:
        return cls._raw({})

    @classmethod
    def const(cls, c: Rational) -> BiLaurent:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: Rational, ex=0, ey=0) -> BiLaurent:
        return cls({(HalfInt.of(ex).doubled, HalfInt.of(ey).doubled): c})

    @classmethod
    def x(cls) -> BiLaurent:
        return cls._raw({(2, 0): Fraction(1)})

    @classmethod
    def y(cls) -> BiLaurent:
        return cls._raw({(0, 2): Fraction(1)})

    @classmethod
    def coerce(cls, value) -> BiLaurent:
        if isinstance(value, BiLaurent):
            return value
        return cls.const(as_fraction(value))

    # inspection -------------------------------------------------------
    @property
    def raw_terms(self) -> Mapping[tuple[int, int], Fraction]:
        """Doubled-exponent term map (read-only view by convention)."""
        return self._terms

    def terms(self) -> Iterator[tuple[HalfInt, HalfInt, Fraction]]:
        """Terms in canonical order: lexicographic by doubled exponents, ascending."""
        for (ex, ey) in sorted(self._terms):
            yield HalfInt(ex), HalfInt(ey), self._terms[(ex, ey)]

    def coeff(self, ex=0, ey=0) -> Fraction:
        key = (HalfInt.of(ex).doubled, HalfInt.of(ey).doubled)
        return self._terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_polynomial(self) -> bool:
        """True iff every exponent is a nonnegative integer."""
        return all(ex >= 0 and ey >= 0 and ex % 2 == 0 and ey % 2 == 0 for ex, ey in self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # ring operations --------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, BiLaurent):
            try:
                other = BiLaurent.coerce(other)
            except ArgumentError:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiLaurent._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BiLaurent._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, BiLaurent):
            try:
                other = BiLaurent.coerce(other)
            except ArgumentError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, BiLaurent):
            try:
                c = as_fraction(other)
            except ArgumentError:
                return NotImplemented
            if not c:
                return BiLaurent.zero()
            return BiLaurent._raw({k: v * c for k, v in self._terms.items()})
        acc: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
        for (ax, ay), ac in self._terms.items():
            for (bx, by), bc in other._terms.items():
                acc[(ax + bx, ay + by)] += ac * bc
        return BiLaurent._raw({k: v for k, v in acc.items() if v})

    __rmul__ = __mul__

    def __pow__(self, exponent):
        """Integer powers of anything; negative or half-integer powers of monomials only."""
        e = HalfInt.of(exponent)
        if e.doubled >= 0 and e.is_integer():
            result = BiLaurent.const(1)
            base = self
            k = e.doubled // 2
            while k:
                if k & 1:
                    result = result * base
                base = base * base
                k >>= 1
            return result
        if not self.is_monomial():
            raise DomainError(f"cannot raise a non-monomial to the power {e}")
        ((ex, ey), c), = self._terms.items()
        if (ex * e.doubled) % 2 or (ey * e.doubled) % 2:
            raise UnsupportedError(f"exponent {e} would leave the half-integer lattice")
        return BiLaurent._raw({(ex * e.doubled // 2, ey * e.doubled // 2): rational_power(c, e.doubled)})

    def __eq__(self, other):
        if isinstance(other, BiLaurent):
            return self._terms == other._terms
        try:
            return self._terms == BiLaurent.coerce(other)._terms
        except ArgumentError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._terms.items())))
        return self._hash

    # evaluation -------------------------------------------------------
    def eval(self, x0, y0) -> Fraction:
        """Exact value at rationals ``(x0, y0)``."""
        x0, y0 = as_fraction(x0), as_fraction(y0)
        total = Fraction(0)
        for (ex, ey), c in self._terms.items():
            total += c * rational_power(x0, ex) * rational_power(y0, ey)
        return total

    def subs(self, x=None, y=None) -> BiLaurent:
        """Partial evaluation: substitute a rational for ``x`` and/or ``y``."""
        xv = None if x is None else as_fraction(x)
        yv = None if y is None else as_fraction(y)
        acc: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
        for (ex, ey), c in self._terms.items():
            kx, ky = ex, ey
            if xv is not None:
                c = c * rational_power(xv, ex)
                kx = 0
            if yv is not None:
                c = c * rational_power(yv, ey)
                ky = 0
            acc[(kx, ky)] += c
        return BiLaurent._raw({k: v for k, v in acc.items() if v})

    def translate(self, a=0, b=0) -> BiLaurent:
        """``p(x + a, y + b)``; needs nonnegative integer exponents."""
        if not self.is_polynomial():
            raise DomainError("translate needs nonnegative integer exponents")
        a, b = as_fraction(a), as_fraction(b)
        acc: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
        for (ex, ey), c in self._terms.items():
            px, py = ex // 2, ey // 2
            for i in range(px + 1):
                ci = c * math.comb(px, i) * a ** (px - i)
                if not ci:
                    continue
                for j in range(py + 1):
                    cj = ci * math.comb(py, j) * b ** (py - j)
                    if cj:
                        acc[(2 * i, 2 * j)] += cj
        return BiLaurent._raw({k: v for k, v in acc.items() if v})

    # serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "terms": [
                {"x": str(ex), "y": str(ey), "c": format_rational(c)}
                for ex, ey, c in self.terms()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> BiLaurent:
        try:
            items = data["terms"]
        except (KeyError, TypeError) as exc:
            raise ArgumentError("polynomial JSON needs a 'terms' list") from exc
        out: dict[tuple[int, int], Fraction] = {}
        for t in items:
            key = (HalfInt.of(t["x"]).doubled, HalfInt.of(t["y"]).doubled)
            if key in out:
                raise ArgumentError(f"duplicate exponent pair {t['x']},{t['y']}")
            out[key] = as_fraction(t["c"])
        return cls(out)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for key in sorted(self._terms, reverse=True):
            c = self._terms[key]
            mono = "*".join(
                _fmt_power(v, e) for v, e in (("x", key[0]), ("y", key[1])) if e
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"BiLaurent({self})"


def _fmt_power(var: str, doubled: int) -> str:
    if doubled == 2:
        return var
    e = format_rational(Fraction(doubled, 2))
    if doubled > 0 and doubled % 2 == 0:
        return f"{var}^{e}"
    return f"{var}^({e})"


def poly_add(p: BiLaurent, q: BiLaurent) -> BiLaurent:
    return p + q


def poly_mul(p: BiLaurent, q: BiLaurent) -> BiLaurent:
    return p * q


def poly_eval(p: BiLaurent, x0, y0) -> Fraction:
    return p.eval(x0, y0)


def poly_sum(polys: Iterable[BiLaurent]) -> BiLaurent:
    acc: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
    for p in polys:
        for k, c in p.raw_terms.items():
            acc[k] += c
    return BiLaurent._raw({k: v for k, v in acc.items() if v})
