"""Exact scalar, polynomial, rational-function and truncated-series arithmetic.

Everything here is over the rationals, with no rounding anywhere.  The scalar
type is gmpy2's mpq when available (much faster for the dense matrix work
downstream) and fractions.Fraction otherwise; both print as "p/q".
"""

from __future__ import annotations

from typing import Iterable, Sequence

try:
    from gmpy2 import mpq as Scalar
except ImportError:  # pragma: no cover
    from fractions import Fraction as Scalar

ZERO = Scalar(0)
ONE = Scalar(1)


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at a root of its denominator."""


class DegreeError(ValueError):
    """Series expansion at infinity of a function with a pole there."""


class InconsistentSamples(ValueError):
    """Interpolation samples not matched by any polynomial of the stated degree."""


def rat(x, y=None) -> Scalar:
    """Coerce ints, "p/q" strings, Fractions or Scalars to a Scalar."""
    if y is not None:
        return Scalar(x) / Scalar(y)
    if isinstance(x, str):
        return Scalar(x)
    return Scalar(x)


def rat_str(x) -> str:
    """Serialize a Scalar as "p/q", or "p" when the denominator is 1."""
    return str(x)


HALF = rat(1, 2)
KAPPA = rat(-3, 2)


class UniPoly:
    """Dense univariate polynomial in u, ascending coefficients, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([rat(c)])

    @classmethod
    def x_plus(cls, a) -> "UniPoly":
        """The monic linear polynomial u + a."""
        return cls([rat(a), ONE])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        p = cls([ONE])
        for r in roots:
            p = p * cls([-rat(r), ONE])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly([(a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO)
                        for i in range(n)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = rat(other)
            return UniPoly([c * a for a in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = UniPoly([ONE])
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, u0) -> Scalar:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * u0 + c
        return acc

    def shift(self, a) -> "UniPoly":
        """Substitute u -> u + a."""
        a = rat(a)
        out = UniPoly()
        # Horner in the shifted variable: p(u+a) built from the top down.
        for c in reversed(self.coeffs):
            out = out * UniPoly([a, ONE]) + UniPoly.const(c)
        return out

    def reflect(self, c=ZERO) -> "UniPoly":
        """Substitute u -> c - u."""
        c = rat(c)
        out = UniPoly()
        for coef in reversed(self.coeffs):
            out = out * UniPoly([c, -ONE]) + UniPoly.const(coef)
        return out

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.leading()
        return UniPoly([c / lead for c in self.coeffs])

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = self.degree, other.degree
        if dn < dd:
            return UniPoly(), self
        quot = [ZERO] * (dn - dd + 1)
        lead = other.leading()
        for k in range(dn - dd, -1, -1):
            q = rem[dd + k] / lead
            quot[k] = q
            if q != 0:
                for j, b in enumerate(other.coeffs):
                    rem[j + k] -= q * b
        return UniPoly(quot), UniPoly(rem[:dd])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"({c})*u")
            else:
                terms.append(f"({c})*u^{i}")
        return "UniPoly(" + " + ".join(terms) + ")"


class RatFunc:
    """Ratio of UniPoly's, stored in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly = None):
        if not isinstance(num, UniPoly):
            num = UniPoly.const(num)
        if den is None:
            den = UniPoly([ONE])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in RatFunc")
        g = num.gcd(den)
        if not g.is_zero() and g.degree > 0:
            num, den = num // g, den // g
        lead = den.leading()
        if lead != 1:
            num = num * (ONE / lead)
            den = den * (ONE / lead)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(UniPoly.const(c))

    @classmethod
    def linear_ratio(cls, a, b) -> "RatFunc":
        """(u + a) / (u + b)."""
        return cls(UniPoly.x_plus(a), UniPoly.x_plus(b))

    def is_one(self) -> bool:
        return self.num == self.den

    def __eq__(self, other):
        # Canonical form makes equality structural.
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = other if isinstance(other, RatFunc) else RatFunc.const(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, other):
        other = other if isinstance(other, RatFunc) else RatFunc.const(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = other if isinstance(other, RatFunc) else RatFunc.const(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero RatFunc")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RatFunc":
        return RatFunc.const(1) / self

    def __call__(self, u0) -> Scalar:
        u0 = rat(u0)
        d = self.den(u0)
        if d == 0:
            raise PoleError(f"pole at u = {u0}")
        return self.num(u0) / d

    def shift(self, a) -> "RatFunc":
        return RatFunc(self.num.shift(a), self.den.shift(a))

    def reflect(self, c=ZERO) -> "RatFunc":
        return RatFunc(self.num.reflect(c), self.den.reflect(c))

    def value_at_infinity(self) -> Scalar:
        if self.num.degree > self.den.degree:
            raise DegreeError("pole at infinity")
        if self.num.degree < self.den.degree:
            return ZERO
        return self.num.leading()  # den is monic

    def __repr__(self):
        return f"RatFunc({self.num!r} / {self.den!r})"


class TruncatedSeries:
    """Series 1-ish in u^{-1}: coefficients of u^0, u^{-1}, ..., u^{-order}."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int = None):
        cs = [rat(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        cs = (cs + [ZERO] * (order + 1))[: order + 1]
        self.order = order
        self.coeffs = tuple(cs)

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries)
                and self.order == other.order and self.coeffs == other.coeffs)

    def __add__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    def __mul__(self, other):
        n = min(self.order, other.order)
        out = [ZERO] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out, n)

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


def ratfunc_eval(f: RatFunc, u0) -> Scalar:
    """Exact value f(u0); PoleError when the denominator vanishes there."""
    return f(u0)


def series_expand(f: RatFunc, order: int) -> TruncatedSeries:
    """First order+1 coefficients of the expansion of f in powers of u^{-1}."""
    dn, dd = f.num.degree, f.den.degree
    if dn > dd:
        raise DegreeError("deg num > deg den: no expansion at infinity")
    # In x = 1/u the function is N(x)/D(x) with D(0) != 0; do a series division.
    N = [ (f.num.coeffs[dd - i] if 0 <= dd - i <= dn else ZERO) for i in range(dd + 1)]
    D = [f.den.coeffs[dd - i] for i in range(dd + 1)]
    out = []
    for r in range(order + 1):
        acc = N[r] if r < len(N) else ZERO
        for j in range(1, r + 1):
            if j < len(D):
                acc -= D[j] * out[r - j]
        out.append(acc / D[0])
    return TruncatedSeries(out, order)


def poly_interpolate(points: Sequence, degree_bound: int) -> UniPoly:
    """Interpolate a polynomial of degree <= degree_bound through exact samples.

    Requires at least degree_bound+1 distinct abscissas; any extra points are
    used to cross-check the interpolant and raise InconsistentSamples on
    disagreement.
    """
    pts = [(rat(u), rat(v)) for u, v in points]
    seen = {}
    for u, v in pts:
        if u in seen and seen[u] != v:
            raise InconsistentSamples(f"two values at u = {u}")
        seen[u] = v
    if len(seen) < degree_bound + 1:
        raise ValueError("not enough distinct sample points")
    base = list(seen.items())[: degree_bound + 1]
    poly = UniPoly()
    for i, (ui, vi) in enumerate(base):
        li = UniPoly([ONE])
        denom = ONE
        for j, (uj, _) in enumerate(base):
            if j == i:
                continue
            li = li * UniPoly([-uj, ONE])
            denom *= ui - uj
        poly = poly + li * (vi / denom)
    for u, v in seen.items():
        if poly(u) != v:
            raise InconsistentSamples(f"sample at u = {u} off the degree-{degree_bound} interpolant")
    return poly
