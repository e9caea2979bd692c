"""Exact scalar arithmetic: rationals and Gaussian rationals.

Plain rationals are ``fractions.Fraction``.  ``GaussRat`` adjoins the
imaginary unit with rational real and imaginary parts; it interoperates
with int and Fraction in arithmetic and comparisons.  Coefficients of
polynomials are kept canonical through :func:`coerce_scalar`, which
returns a Fraction whenever the imaginary part is zero.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Optional, Union

Rat = Fraction
Scalar = Union[int, Fraction, "GaussRat"]


class GaussRat:
    """A Gaussian rational a + b*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _wrap(x):
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussRat(x, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussRat(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussRat(self.re * o.re - self.im * o.im,
                        self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussRat((self.re * o.re + self.im * o.im) / n,
                        (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return 1 / (self ** (-n))
        out = GaussRat(1, 0)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    def norm(self) -> Fraction:
        """Field norm re^2 + im^2."""
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussRat({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)


I = GaussRat(0, 1)


def coerce_scalar(x) -> Scalar:
    """Canonical form: Fraction when real, GaussRat otherwise."""
    if isinstance(x, GaussRat):
        return x.re if x.im == 0 else x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    raise TypeError(f"not an exact scalar: {x!r}")


def scalar_re(x) -> Fraction:
    return x.re if isinstance(x, GaussRat) else Fraction(x)


def scalar_im(x) -> Fraction:
    return x.im if isinstance(x, GaussRat) else Fraction(0)


def scalar_conj(x):
    return x.conjugate() if isinstance(x, GaussRat) else Fraction(x)


def scalar_to_complex(x) -> complex:
    if isinstance(x, GaussRat):
        return complex(x)
    return complex(float(x), 0.0)


def rat_sqrt(x: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    if x < 0:
        return None
    if x == 0:
        return Fraction(0)
    n, d = x.numerator, x.denominator
    rn = math.isqrt(n)
    rd = math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def gauss_sqrt(x) -> Optional[Scalar]:
    """Exact square root inside the Gaussian rationals, or None.

    Solves (u + v*i)^2 = x; requires the norm of x to be a rational
    square and the resulting u^2 to be one as well.
    """
    x = coerce_scalar(x)
    if isinstance(x, Fraction):
        r = rat_sqrt(x)
        if r is not None:
            return r
        r = rat_sqrt(-x)
        if r is not None:
            return GaussRat(0, r)
        return None
    # x = a + bi with b != 0: u^2 = (a + |x|)/2, v = b/(2u)
    a, b = x.re, x.im
    m = rat_sqrt(a * a + b * b)
    if m is None:
        return None
    u2 = (a + m) / 2
    u = rat_sqrt(u2)
    if u is None or u == 0:
        return None
    v = b / (2 * u)
    return coerce_scalar(GaussRat(u, v))


_DEC_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")


def parse_decimal(text: str) -> Fraction:
    """Parse a decimal or rational literal ('1.25', '-3', '2/5') exactly."""
    t = text.strip()
    if "/" in t:
        num, den = t.split("/", 1)
        return Fraction(int(num.strip()), int(den.strip()))
    if not _DEC_RE.match(t):
        raise ValueError(f"not a decimal literal: {text!r}")
    return Fraction(t)


def parse_scalar_string(text: str) -> Scalar:
    """Parse 'a', 'bi', 'a+bi', 'a-bi' with decimal/rational parts."""
    t = text.strip().replace(" ", "")
    if not t:
        raise ValueError("empty scalar string")
    if t in ("i", "+i"):
        return GaussRat(0, 1)
    if t == "-i":
        return GaussRat(0, -1)
    if t.endswith("i") or t.endswith("j"):
        body = t[:-1]
        # split into real and imaginary pieces at the last top-level +/-
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "eE/":
                re_part = parse_decimal(body[:k])
                im_str = body[k:]
                if im_str in ("+", "-"):
                    im_str += "1"
                return coerce_scalar(GaussRat(re_part, parse_decimal(im_str)))
        if body in ("", "+"):
            return GaussRat(0, 1)
        if body == "-":
            return GaussRat(0, -1)
        return coerce_scalar(GaussRat(0, parse_decimal(body)))
    return parse_decimal(t)


def format_rat(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(x) -> str:
    x = coerce_scalar(x)
    if isinstance(x, Fraction):
        return format_rat(x)
    if x.re == 0:
        if x.im == 1:
            return "i"
        if x.im == -1:
            return "-i"
        return f"{format_rat(x.im)}i"
    sign = "+" if x.im >= 0 else "-"
    im = abs(x.im)
    im_str = "i" if im == 1 else f"{format_rat(im)}i"
    return f"{format_rat(x.re)}{sign}{im_str}"


def primitive_vector(vec) -> list:
    """Scale an exact vector to primitive integer coordinates.

    Denominators are cleared, the integer gcd divided out, and the sign
    fixed so the first nonzero entry has positive real part (positive
    imaginary part when the real part is zero).
    """
    xs = [coerce_scalar(x) for x in vec]
    nz = [x for x in xs if x != 0]
    if not nz:
        return xs
    dens = []
    nums = []
    for x in xs:
        if isinstance(x, GaussRat):
            dens.extend([x.re.denominator, x.im.denominator])
            nums.extend([abs(x.re.numerator), abs(x.im.numerator)])
        else:
            dens.append(x.denominator)
            nums.append(abs(x.numerator))
    L = 1
    for d in dens:
        L = L * d // math.gcd(L, d)
    # gcd of the scaled numerators
    g = 0
    for x in xs:
        if isinstance(x, GaussRat):
            g = math.gcd(g, abs(int(x.re * L)))
            g = math.gcd(g, abs(int(x.im * L)))
        else:
            g = math.gcd(g, abs(int(x * L)))
    f = Fraction(L, g if g else 1)
    ys = [coerce_scalar(x * f) for x in xs]
    lead = next(y for y in ys if y != 0)
    re0 = lead.re if isinstance(lead, GaussRat) else lead
    im0 = lead.im if isinstance(lead, GaussRat) else Fraction(0)
    if re0 < 0 or (re0 == 0 and im0 < 0):
        ys = [coerce_scalar(-y) for y in ys]
    return ys


def reconstruct_rational(value: float, max_den: int = 10 ** 8,
                         tol: float = 1e-20) -> Optional[Fraction]:
    """Recover a small-denominator rational from an approximation."""
    if not math.isfinite(value):
        return None
    cand = Fraction(value).limit_denominator(max_den)
    err = abs(float(cand) - value)
    scale = max(1.0, abs(value))
    if err <= tol * scale or (cand != 0 and err <= 1e-12 * scale):
        return cand
    return None


def reconstruct_gauss(re_val: float, im_val: float,
                      max_den: int = 10 ** 8,
                      tol: float = 1e-12) -> Optional[Scalar]:
    """Recover a Gaussian rational from float real/imag approximations."""
    scale = max(1.0, abs(re_val), abs(im_val))
    pr = Fraction(re_val).limit_denominator(max_den)
    pi = Fraction(im_val).limit_denominator(max_den)
    if abs(float(pr) - re_val) <= tol * scale and abs(float(pi) - im_val) <= tol * scale:
        return coerce_scalar(GaussRat(pr, pi))
    return None
