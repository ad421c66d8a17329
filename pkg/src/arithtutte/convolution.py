"""Convolution algebra on ranked sets and the convolution identities for Tutte-type sums.

A functional maps a ranked set to a :class:`BiLaurent`. The convolution of two functionals is
``(f o g)(M) = sum over A of f(M|_A) * g(M/A)``.

All Tutte-type polynomials here are in shifted coordinates: the value reported for a rank sum
``P(x, y)`` is ``P(x + 1, y + 1)``, which is an honest Laurent polynomial for every ranked set.
Substituting ``x = 0`` in the original coordinates is substituting ``x = -1`` in these.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ArgumentError
from .poly import BiLaurent, HalfInt, poly_sum
from .ranked import RankedSet, aritutte, contract, product_mult, restrict, tutte

X = BiLaurent.x()
Y = BiLaurent.y()


class Functional:
    """A named map from ranked sets to Laurent polynomials."""

    def __init__(self, name: str, fn):
        self.name = name
        self._fn = fn

    def __call__(self, M: RankedSet) -> BiLaurent:
        return self._eval(M, {})

    def _eval(self, M: RankedSet, cache: dict) -> BiLaurent:
        return self._fn(M)

    def _cached(self, M: RankedSet, cache: dict) -> BiLaurent:
        key = (id(self), M.key())
        hit = cache.get(key)
        if hit is None:
            hit = self._eval(M, cache)
            cache[key] = hit
        return hit

    def __matmul__(self, other: Functional) -> Functional:
        return Convolution(self, other)

    def __repr__(self):
        return f"<Functional {self.name}>"


class Convolution(Functional):
    """``f o g`` as a functional in its own right, so convolutions nest."""

    def __init__(self, f: Functional, g: Functional):
        super().__init__(f"({f.name} o {g.name})", None)
        self.f = f
        self.g = g

    def _eval(self, M: RankedSet, cache: dict) -> BiLaurent:
        terms = []
        for a in range(1 << M.n):
            left = self.f._cached(restrict(M, a), cache)
            if left.is_zero():
                continue
            right = self.g._cached(contract(M, a), cache)
            if not right.is_zero():
                terms.append(left * right)
        return poly_sum(terms)


def _monomial_value(xa: BiLaurent, ya: BiLaurent, M: RankedSet) -> BiLaurent:
    r = M.rank(M.full)
    return (xa ** r) * (ya ** (HalfInt(2 * M.n) - r))


def functional(name: str, xa=None, ya=None) -> Functional:
    """Build one of the named functionals.

    ``zeta(xa, ya)(M) = xa^rk(M) * ya^(|M| - rk(M))``; ``xi`` multiplies by ``m(M)``, ``xi_star``
    by ``m(empty)``. ``xa``/``ya`` default to the formal variables and may be any BiLaurent or
    rational. ``delta`` is the convolution identity. ``tutte``/``aritutte`` return the shifted rank
    sums.
    """
    xa = X if xa is None else BiLaurent.coerce(xa)
    ya = Y if ya is None else BiLaurent.coerce(ya)
    tag = f"({xa},{ya})"
    if name == "delta":
        return Functional("delta", lambda M: BiLaurent.const(1 if M.n == 0 else 0))
    if name == "zeta":
        return Functional("zeta" + tag, lambda M: _monomial_value(xa, ya, M))
    if name == "xi":
        return Functional("xi" + tag, lambda M: _monomial_value(xa, ya, M) * M.mult[M.full])
    if name == "xi_star":
        return Functional("xi_star" + tag, lambda M: _monomial_value(xa, ya, M) * M.mult[0])
    if name == "tutte":
        return Functional("tutte", lambda M: tutte(M, shifted=True))
    if name == "aritutte":
        return Functional("aritutte", lambda M: aritutte(M, shifted=True))
    raise ArgumentError(f"unknown functional {name!r}")


def convolve(f: Functional, g: Functional, M: RankedSet) -> BiLaurent:
    return Convolution(f, g)(M)


@dataclass(frozen=True)
class ConvolutionReport:
    identity: str
    lhs: BiLaurent
    rhs_form1: BiLaurent
    rhs_form2: BiLaurent | None
    equal: bool

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "coordinates": "shifted (x+1, y+1)",
            "lhs": self.lhs.to_json(),
            "rhs_form1": self.rhs_form1.to_json(),
            "equal": self.equal,
        }
        if self.rhs_form2 is not None:
            out["rhs_form2"] = self.rhs_form2.to_json()
        return out


def _at_x0(p: BiLaurent) -> BiLaurent:
    # original x = 0 is shifted x = -1
    return p.subs(x=-1)


def _at_y0(p: BiLaurent) -> BiLaurent:
    return p.subs(y=-1)


def convolution_sum(M1: RankedSet, left, M2: RankedSet, right) -> BiLaurent:
    """``sum_A left(M1|_A)(x=0) * right(M2/A)(y=0)`` in shifted coordinates."""
    terms = []
    for a in range(1 << M1.n):
        lhs = _at_x0(left(restrict(M1, a)))
        if lhs.is_zero():
            continue
        rhs = _at_y0(right(contract(M2, a)))
        if not rhs.is_zero():
            terms.append(lhs * rhs)
    return poly_sum(terms)


def _ari(M):
    return aritutte(M, shifted=True)


def _tut(M):
    return tutte(M, shifted=True)


def verify_theorem1(M: RankedSet) -> ConvolutionReport:
    """Check both convolution expansions of the arithmetic Tutte function by literal summation.

    form 1: sum_A aritutte(M|_A)(0, y) * tutte(M/A)(x, 0)
    form 2: sum_A tutte(M|_A)(0, y) * aritutte(M/A)(x, 0)
    """
    lhs = _ari(M)
    form1 = convolution_sum(M, _ari, M, _tut)
    form2 = convolution_sum(M, _tut, M, _ari)
    return ConvolutionReport("theorem1", lhs, form1, form2, lhs == form1 == form2)


def verify_theorem2(M1: RankedSet, M2: RankedSet) -> ConvolutionReport:
    """aritutte of the product multiplicity against sum_A aritutte(M1|_A)(0,y) aritutte(M2/A)(x,0)."""
    prod = product_mult(M1, M2)
    lhs = _ari(prod)
    rhs = convolution_sum(M1, _ari, M2, _ari)
    return ConvolutionReport("theorem2", lhs, rhs, None, lhs == rhs)
