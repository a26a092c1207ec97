"""Polynomials over Q and the two-term de Rham algebra Q[t,dt].

Q[t,dt] = Q[t] + Q[t]dt with t in degree 0, dt in degree 1, dt*dt = 0 and
d(f + g dt) = f' dt.  These are the scalar coefficients of the path
construction; everything is exact rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .scalars import ONE, ZERO, rat


class Poly:
    """Univariate polynomial with exact rational coefficients.

    Stored densely by exponent with trailing zeros stripped, so equality is
    structural.  The zero polynomial has degree None.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((rat(c),))

    @classmethod
    def monomial(cls, exponent: int, c=ONE) -> "Poly":
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls((ZERO,) * exponent + (rat(c),))

    @classmethod
    def t(cls) -> "Poly":
        return cls((ZERO, ONE))

    @property
    def degree(self):
        """Degree in t, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, exponent: int) -> Fraction:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return ZERO

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c) -> "Poly":
        c = rat(c)
        if c == 0:
            return Poly()
        return Poly(c * x for x in self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if self.is_zero or other.is_zero:
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __call__(self, s) -> Fraction:
        """Evaluate at t = s by Horner's rule."""
        s = rat(s)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * s + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def integrate0(self) -> "Poly":
        """The antiderivative vanishing at 0: c t^s -> c t^(s+1)/(s+1).

        The division by s+1 is always legal: the scalars have characteristic 0.
        """
        return Poly([ZERO] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(f"{head}t" if i == 1 else f"{head}t^{i}")
        return " + ".join(parts).replace("+ -", "- ")


POLY_ZERO = Poly()
POLY_ONE = Poly.const(1)


class PolyForm:
    """An element f(t) + g(t)dt of Q[t,dt].

    f sits in cohomological degree 0 and g dt in degree 1; products of two
    dt-parts vanish.  Addition is componentwise.
    """

    __slots__ = ("f", "g")

    def __init__(self, f: Poly = POLY_ZERO, g: Poly = POLY_ZERO):
        if not isinstance(f, Poly) or not isinstance(g, Poly):
            raise TypeError("PolyForm parts must be Poly")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "g", g)

    def __setattr__(self, name, value):
        raise AttributeError("PolyForm is immutable")

    @classmethod
    def function(cls, f: Poly) -> "PolyForm":
        return cls(f, POLY_ZERO)

    @classmethod
    def dt(cls, g: Poly = POLY_ONE) -> "PolyForm":
        return cls(POLY_ZERO, g)

    @classmethod
    def const(cls, c) -> "PolyForm":
        return cls(Poly.const(c), POLY_ZERO)

    @property
    def is_zero(self) -> bool:
        return self.f.is_zero and self.g.is_zero

    def __eq__(self, other):
        return isinstance(other, PolyForm) and self.f == other.f and self.g == other.g

    def __hash__(self):
        return hash((self.f, self.g))

    def __add__(self, other: "PolyForm") -> "PolyForm":
        return PolyForm(self.f + other.f, self.g + other.g)

    def __neg__(self) -> "PolyForm":
        return PolyForm(-self.f, -self.g)

    def __sub__(self, other: "PolyForm") -> "PolyForm":
        return PolyForm(self.f - other.f, self.g - other.g)

    def scale(self, c) -> "PolyForm":
        return PolyForm(self.f.scale(c), self.g.scale(c))

    def __mul__(self, other):
        if not isinstance(other, PolyForm):
            return self.scale(other)
        # (f1 + g1 dt)(f2 + g2 dt) = f1 f2 + (f1 g2 + f2 g1) dt, dt*dt = 0
        return PolyForm(self.f * other.f, self.f * other.g + other.f * self.g)

    def __rmul__(self, other):
        return self.scale(other)

    def d(self) -> "PolyForm":
        """de Rham differential: d(f + g dt) = f' dt."""
        return PolyForm(POLY_ZERO, self.f.derivative())

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        if not self.f.is_zero:
            parts.append(repr(self.f))
        if not self.g.is_zero:
            parts.append(f"({self.g!r}) dt")
        return " + ".join(parts)


FORM_ZERO = PolyForm()
FORM_ONE = PolyForm.const(1)


def poly_eval(p: Poly, s) -> Fraction:
    return p(s)


def poly_integrate0(p: Poly) -> Poly:
    return p.integrate0()


def form_d(w: PolyForm) -> PolyForm:
    return w.d()


def form_mul(a: PolyForm, b: PolyForm) -> PolyForm:
    return a * b
