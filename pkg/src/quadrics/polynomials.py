"""Exact homogeneous polynomials in z0, z1, z2 over the (Gaussian) rationals.

The substrate for everything else: sparse term maps keyed by exponent
triples, a recursive-descent parser for the polynomial grammar, Sylvester
resultants with fraction-free Bareiss elimination, the symmetric-matrix
view of quadrics, and certified numeric evaluation at projective points.

Grammar (whitespace insignificant)::

    expr     := term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := 'z0' | 'z1' | 'z2' | rational | '(' expr ')'
    rational := int | '(' int '/' uint ')'

A leading unary minus and, when ``gaussian=True``, the literal ``i`` are
accepted as strict extensions; everything the grammar produces parses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import mpmath as mp

from .scalars import (GaussRat, Scalar, coerce_scalar, format_rat,
                      format_scalar, gauss_sqrt, scalar_to_complex)

Expo = Tuple[int, int, int]

VAR_NAMES = ("z0", "z1", "z2")


class PolySyntaxError(SyntaxError):
    """Raised on grammar violations; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotHomogeneousError(ValueError):
    """Raised when a parsed polynomial mixes total degrees."""

    def __init__(self, degrees):
        super().__init__(f"inhomogeneous polynomial, monomial degrees {sorted(degrees)}")
        self.degrees = sorted(degrees)


class ZeroPolynomialError(ValueError):
    pass


class DegenerateLeadingFormError(ValueError):
    """Neither input involves the eliminated variable; change variable."""


class WrongDegreeError(ValueError):
    pass


class PrecisionExhaustedError(ArithmeticError):
    pass


def _grlex_key(e: Expo):
    return (sum(e), e)


class HomPoly:
    """Immutable homogeneous polynomial, zero polynomial tagged degree -1."""

    __slots__ = ("terms", "degree", "_hash")

    def __init__(self, terms: Dict[Expo, Scalar] | None = None, *, _checked=False):
        tmap: Dict[Expo, Scalar] = {}
        if terms:
            for e, c in terms.items():
                c = coerce_scalar(c)
                if c != 0:
                    tmap[tuple(e)] = c
        if tmap:
            degs = {sum(e) for e in tmap}
            if len(degs) != 1:
                raise NotHomogeneousError(degs)
            deg = degs.pop()
        else:
            deg = -1
        object.__setattr__(self, "terms", tmap)
        object.__setattr__(self, "degree", deg)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("HomPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "HomPoly":
        return HomPoly({})

    @staticmethod
    def constant(c) -> "HomPoly":
        return HomPoly({(0, 0, 0): c})

    @staticmethod
    def variable(i: int) -> "HomPoly":
        e = [0, 0, 0]
        e[i] = 1
        return HomPoly({tuple(e): 1})

    @staticmethod
    def monomial(e: Expo, c=1) -> "HomPoly":
        return HomPoly({tuple(e): c})

    @staticmethod
    def linear_form(coeffs: Sequence) -> "HomPoly":
        return HomPoly({(1, 0, 0): coeffs[0], (0, 1, 0): coeffs[1],
                        (0, 0, 1): coeffs[2]})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        res = dict(self.terms)
        for e, c in other.terms.items():
            s = res.get(e, 0) + c
            if s == 0:
                res.pop(e, None)
            else:
                res[e] = s
        return HomPoly(res)

    def __sub__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        res = dict(self.terms)
        for e, c in other.terms.items():
            s = res.get(e, 0) - c
            if s == 0:
                res.pop(e, None)
            else:
                res[e] = s
        return HomPoly(res)

    def __neg__(self):
        return HomPoly({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.scale(other)
        if not isinstance(other, HomPoly):
            return NotImplemented
        res: Dict[Expo, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                s = res.get(e, 0) + c1 * c2
                if s == 0:
                    res.pop(e, None)
                else:
                    res[e] = s
        return HomPoly(res)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "HomPoly":
        c = coerce_scalar(c)
        if c == 0:
            return HomPoly.zero()
        return HomPoly({e: co * c for e, co in self.terms.items()})

    def __pow__(self, n: int) -> "HomPoly":
        if n < 0:
            raise ValueError("negative power")
        out = HomPoly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(tuple(sorted(self.terms.items(), key=lambda t: t[0])))
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # -- structure ---------------------------------------------------------

    def coeff(self, e: Expo) -> Scalar:
        return self.terms.get(tuple(e), Fraction(0))

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def coeffs_in(self, var: int) -> List["HomPoly"]:
        """Coefficients by power of ``var``, each a form in the other two."""
        d = self.degree_in(var)
        out: List[Dict[Expo, Scalar]] = [dict() for _ in range(d + 1)]
        for e, c in self.terms.items():
            rest = list(e)
            k = rest[var]
            rest[var] = 0
            out[k][tuple(rest)] = c
        return [HomPoly(t) for t in out]

    def derivative(self, var: int) -> "HomPoly":
        res: Dict[Expo, Scalar] = {}
        for e, c in self.terms.items():
            if e[var] == 0:
                continue
            e2 = list(e)
            e2[var] -= 1
            res[tuple(e2)] = c * e[var]
        return HomPoly(res)

    def gradient(self) -> Tuple["HomPoly", "HomPoly", "HomPoly"]:
        return (self.derivative(0), self.derivative(1), self.derivative(2))

    def eval_exact(self, point: Sequence) -> Scalar:
        total: Scalar = Fraction(0)
        pt = [coerce_scalar(x) for x in point]
        for e, c in self.terms.items():
            v = c
            for i in range(3):
                if e[i]:
                    v = v * pt[i] ** e[i]
            total = total + v
        return coerce_scalar(total)

    def eval_complex(self, point) -> complex:
        total = 0j
        for e, c in self.terms.items():
            total += (scalar_to_complex(c) * point[0] ** e[0]
                      * point[1] ** e[1] * point[2] ** e[2])
        return total

    def eval_mpc(self, point):
        total = mp.mpc(0)
        for e, c in self.terms.items():
            if isinstance(c, GaussRat):
                v = (mp.mpf(c.re.numerator) / c.re.denominator
                     + mp.mpc(0, 1) * mp.mpf(c.im.numerator) / c.im.denominator)
            else:
                v = mp.mpf(c.numerator) / c.denominator
            total += v * point[0] ** e[0] * point[1] ** e[1] * point[2] ** e[2]
        return total

    def compose(self, args: Sequence["HomPoly"]) -> "HomPoly":
        """Substitute args[i] for variable i; args must share one degree."""
        if self.is_zero:
            return HomPoly.zero()
        degs = {a.degree for a in args if not a.is_zero}
        if len(degs) > 1:
            raise ValueError("substituted forms must have a common degree")
        out = HomPoly.zero()
        cache: Dict[Tuple[int, int], HomPoly] = {}

        def powed(i, k):
            if k == 0:
                return HomPoly.constant(1)
            key = (i, k)
            if key not in cache:
                cache[key] = args[i] ** k
            return cache[key]

        for e, c in self.terms.items():
            t = HomPoly.constant(c)
            for i in range(3):
                if e[i]:
                    t = t * powed(i, e[i])
            out = out + t
        return out

    def exact_div(self, divisor: "HomPoly") -> "HomPoly":
        """Exact quotient; raises if the division leaves a remainder."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return HomPoly.zero()
        rem = dict(self.terms)
        quot: Dict[Expo, Scalar] = {}
        dlead = max(divisor.terms, key=_grlex_key)
        dco = divisor.terms[dlead]
        while rem:
            rlead = max(rem, key=_grlex_key)
            q = tuple(rlead[i] - dlead[i] for i in range(3))
            if any(x < 0 for x in q):
                raise ArithmeticError("inexact polynomial division")
            c = rem[rlead] / dco
            quot[q] = c
            for e, co in divisor.terms.items():
                t = (e[0] + q[0], e[1] + q[1], e[2] + q[2])
                s = rem.get(t, 0) - c * co
                if s == 0:
                    rem.pop(t, None)
                else:
                    rem[t] = s
        return HomPoly(quot)

    def content_primitive(self) -> Tuple[Scalar, "HomPoly"]:
        """Scale to a primitive integer form, first nonzero coeff positive.

        Returns (c, prim) with self == c * prim.  For Gaussian coefficients
        the first coefficient (graded lex) is made positive real when its
        phase is a power of i, otherwise left as is.
        """
        if self.is_zero:
            return Fraction(1), self
        items = sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)
        lead = items[0][1]
        if isinstance(lead, GaussRat):
            prim = HomPoly({e: c / lead for e, c in self.terms.items()})
            return lead, prim
        from math import gcd
        num_gcd = 0
        den_lcm = 1
        all_real = all(not isinstance(c, GaussRat) for _, c in items)
        if not all_real:
            prim = HomPoly({e: c / lead for e, c in self.terms.items()})
            return lead, prim
        for _, c in items:
            num_gcd = gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        f = Fraction(num_gcd, den_lcm)
        if lead < 0:
            f = -f
        prim = HomPoly({e: c / f for e, c in self.terms.items()})
        return f, prim

    def as_square_of_linear(self) -> Optional[Tuple[Scalar, "HomPoly"]]:
        """If self == c * L^2 with L a primitive linear form, return (c, L)."""
        if self.degree != 2:
            return None
        qf = quadric_form(self)
        if qf.rank != 1:
            return None
        M = qf.matrix
        j = next(i for i in range(3) if M[i][i] != 0)
        col = [M[0][j], M[1][j], M[2][j]]
        L = HomPoly.linear_form(col)
        _, Lp = L.content_primitive()
        sq = Lp * Lp
        lead = max(sq.terms, key=_grlex_key)
        c = self.terms[lead] / sq.terms[lead]
        if sq.scale(c) != self:
            return None
        return coerce_scalar(c), Lp

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)
        parts: List[str] = []
        for k, (e, c) in enumerate(items):
            mono = "*".join(
                f"{VAR_NAMES[i]}^{e[i]}" if e[i] > 1 else VAR_NAMES[i]
                for i in range(3) if e[i] > 0
            )
            if isinstance(c, GaussRat):
                cs = f"({format_scalar(c)})"
                neg = False
            else:
                neg = c < 0
                a = abs(c)
                cs = format_rat(a) if a.denominator == 1 else f"({format_rat(a)})"
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            if k == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"HomPoly({self})"


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _Tok:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind
        self.value = value
        self.pos = pos


def _tokenize(text: str, gaussian: bool):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if text.startswith("z0", i) or text.startswith("z1", i) or text.startswith("z2", i):
            toks.append(_Tok("var", int(text[i + 1]), i))
            i += 2
            continue
        if gaussian and ch == "i":
            toks.append(_Tok("imag", None, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", int(text[i:j]), i))
            i = j
            continue
        if ch in "+-*^()/":
            toks.append(_Tok(ch, ch, i))
            i += 1
            continue
        raise PolySyntaxError(f"unexpected character {ch!r}", i)
    toks.append(_Tok("end", None, n))
    return toks


@dataclass(frozen=True)
class PolyExprAST:
    """Parse tree node: ('+',l,r) ('-',l,r) ('*',l,r) ('^',l,int) ('var',i)
    ('rat',Fraction) ('imag',)."""

    kind: str
    args: tuple

    def evaluate(self) -> HomPoly:
        k = self.kind
        if k == "var":
            return HomPoly.variable(self.args[0])
        if k == "rat":
            return HomPoly.constant(self.args[0])
        if k == "imag":
            return HomPoly.constant(GaussRat(0, 1))
        if k == "neg":
            return -self.args[0].evaluate()
        if k == "^":
            return self.args[0].evaluate() ** self.args[1]
        a = self.args[0].evaluate()
        b = self.args[1].evaluate()
        if k == "+":
            return _add_mixed(a, b)
        if k == "-":
            return _add_mixed(a, -b)
        if k == "*":
            return a * b
        raise AssertionError(k)


def _add_mixed(a: HomPoly, b: HomPoly) -> HomPoly:
    if not a.is_zero and not b.is_zero and a.degree != b.degree:
        raise NotHomogeneousError({a.degree, b.degree})
    return a + b


class _Parser:
    def __init__(self, toks, gaussian):
        self.toks = toks
        self.k = 0
        self.gaussian = gaussian

    def peek(self):
        return self.toks[self.k]

    def take(self, kind=None):
        t = self.toks[self.k]
        if kind is not None and t.kind != kind:
            raise PolySyntaxError(f"expected {kind!r}, found {t.kind!r}", t.pos)
        self.k += 1
        return t

    def parse_expr(self) -> PolyExprAST:
        # unary minus on the leading term is a documented extension
        if self.peek().kind == "-":
            self.take()
            node = PolyExprAST("neg", (self.parse_term(),))
        else:
            node = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            rhs = self.parse_term()
            node = PolyExprAST(op, (node, rhs))
        return node

    def parse_term(self) -> PolyExprAST:
        node = self.parse_factor()
        while self.peek().kind == "*":
            self.take()
            node = PolyExprAST("*", (node, self.parse_factor()))
        return node

    def parse_factor(self) -> PolyExprAST:
        node = self.parse_base()
        if self.peek().kind == "^":
            self.take()
            t = self.take("int")
            node = PolyExprAST("^", (node, t.value))
        return node

    def parse_base(self) -> PolyExprAST:
        t = self.peek()
        if t.kind == "var":
            self.take()
            return PolyExprAST("var", (t.value,))
        if t.kind == "imag":
            self.take()
            return PolyExprAST("imag", ())
        if t.kind == "int":
            self.take()
            return PolyExprAST("rat", (Fraction(t.value),))
        if t.kind == "-":
            # signed integer literal
            pos = t.pos
            self.take()
            t2 = self.take("int")
            return PolyExprAST("rat", (Fraction(-t2.value),))
        if t.kind == "(":
            self.take()
            # parenthesized rational '( int / uint )' or a subexpression
            save = self.k
            inner = self._try_paren_rational()
            if inner is not None:
                return inner
            self.k = save
            node = self.parse_expr()
            self.take(")")
            return node
        raise PolySyntaxError(f"unexpected token {t.kind!r}", t.pos)

    def _try_paren_rational(self) -> Optional[PolyExprAST]:
        sign = 1
        t = self.peek()
        if t.kind == "-":
            self.take()
            sign = -1
        t = self.peek()
        if t.kind != "int":
            return None
        num = self.take().value
        if self.peek().kind == "/":
            self.take()
            den = self.take("int").value
            if den == 0:
                raise PolySyntaxError("zero denominator", t.pos)
            if self.peek().kind != ")":
                return None
            self.take(")")
            return PolyExprAST("rat", (Fraction(sign * num, den),))
        if self.peek().kind == ")" and sign == -1:
            self.take(")")
            return PolyExprAST("rat", (Fraction(-num),))
        return None


def parse_poly_ast(text: str, gaussian: bool = False) -> PolyExprAST:
    toks = _tokenize(text, gaussian)
    p = _Parser(toks, gaussian)
    node = p.parse_expr()
    t = p.peek()
    if t.kind != "end":
        raise PolySyntaxError(f"trailing input {t.kind!r}", t.pos)
    return node


def parse_poly(text: str, gaussian: bool = False) -> HomPoly:
    """Parse and expand; rejects inhomogeneous input."""
    return parse_poly_ast(text, gaussian).evaluate()


# ---------------------------------------------------------------------------
# Quadric forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadricForm:
    """Symmetric 3x3 matrix view of a degree-2 form: poly(z) = z^T M z."""

    matrix: tuple
    rank: int
    det: Scalar

    def poly(self) -> HomPoly:
        M = self.matrix
        terms: Dict[Expo, Scalar] = {}
        for i in range(3):
            for j in range(3):
                e = [0, 0, 0]
                e[i] += 1
                e[j] += 1
                e = tuple(e)
                terms[e] = terms.get(e, 0) + M[i][j]
        return HomPoly(terms)

    def adjugate(self) -> tuple:
        return matrix_adjugate(self.matrix)


def _matrix_rank(M) -> int:
    rows = [list(r) for r in M]
    n = len(rows)
    m = len(rows[0])
    rank = 0
    col = 0
    for col in range(m):
        piv = None
        for r in range(rank, n):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for r in range(n):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / pv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == n:
            break
    return rank


def matrix_det3(M) -> Scalar:
    return coerce_scalar(
        M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
        - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
        + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))


def matrix_adjugate(M) -> tuple:
    """Adjugate of a 3x3 matrix: adj(M) . M = det(M) . E."""
    def cof(i, j):
        r = [k for k in range(3) if k != i]
        c = [k for k in range(3) if k != j]
        minor = M[r[0]][c[0]] * M[r[1]][c[1]] - M[r[0]][c[1]] * M[r[1]][c[0]]
        return minor if (i + j) % 2 == 0 else -minor
    return tuple(tuple(coerce_scalar(cof(j, i)) for j in range(3)) for i in range(3))


def quadric_form(p: HomPoly) -> QuadricForm:
    """Symmetric matrix, exact rank and determinant of a degree-2 form."""
    if p.degree != 2:
        raise WrongDegreeError(f"degree 2 required, got {p.degree}")
    M = [[Fraction(0)] * 3 for _ in range(3)]
    for e, c in p.terms.items():
        idx = [i for i in range(3) for _ in range(e[i])]
        i, j = idx[0], idx[1]
        if i == j:
            M[i][i] = coerce_scalar(M[i][i] + c)
        else:
            h = c / 2
            M[i][j] = coerce_scalar(M[i][j] + h)
            M[j][i] = coerce_scalar(M[j][i] + h)
    Mt = tuple(tuple(r) for r in M)
    return QuadricForm(Mt, _matrix_rank(Mt), matrix_det3(Mt))


def pencil_matrix_entry_forms(q1: HomPoly, q2: HomPoly, q3: HomPoly | None = None):
    """Entries of a*M1 + b*M2 (+ c*M3) as linear forms in (a, b, c)."""
    mats = [quadric_form(q).matrix for q in (q1, q2, q3) if q is not None]
    entries = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            terms = {}
            for k, M in enumerate(mats):
                e = [0, 0, 0]
                e[k] = 1
                if M[i][j] != 0:
                    terms[tuple(e)] = M[i][j]
            entries[i][j] = HomPoly(terms)
    return entries


# ---------------------------------------------------------------------------
# Sylvester resultant with Bareiss elimination
# ---------------------------------------------------------------------------

def _bareiss_det(M: List[List[HomPoly]]) -> HomPoly:
    n = len(M)
    if n == 0:
        return HomPoly.constant(1)
    A = [row[:] for row in M]
    prev = HomPoly.constant(1)
    sign = 1
    for k in range(n - 1):
        if A[k][k].is_zero:
            swap = next((r for r in range(k + 1, n) if not A[r][k].is_zero), None)
            if swap is None:
                return HomPoly.zero()
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = num.exact_div(prev) if not num.is_zero else HomPoly.zero()
            A[i][k] = HomPoly.zero()
        prev = A[k][k]
    det = A[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(p: HomPoly, q: HomPoly, var: int) -> HomPoly:
    """Sylvester resultant eliminating ``var``.

    The result is a homogeneous form in the other two variables; when both
    inputs have their full degree in ``var`` it has degree deg(p)*deg(q)
    and vanishes at (za:zb) exactly when p and q share a root above.
    """
    if p.is_zero or q.is_zero:
        raise ZeroPolynomialError("resultant of zero polynomial")
    m = p.degree_in(var)
    n = q.degree_in(var)
    if m == 0 and n == 0:
        raise DegenerateLeadingFormError(
            f"neither input depends on {VAR_NAMES[var]}")
    if m == 0:
        return p ** n
    if n == 0:
        return q ** m
    pc = p.coeffs_in(var)
    qc = q.coeffs_in(var)
    size = m + n
    rows: List[List[HomPoly]] = []
    for r in range(n):
        row = [HomPoly.zero()] * size
        for k, c in enumerate(reversed(pc)):  # highest power first
            row[r + k] = c
        rows.append(row)
    for r in range(m):
        row = [HomPoly.zero()] * size
        for k, c in enumerate(reversed(qc)):
            row[r + k] = c
        rows.append(row)
    return _bareiss_det(rows)


# ---------------------------------------------------------------------------
# Numeric projective points and certified evaluation
# ---------------------------------------------------------------------------

class ProjPointNum:
    """Projective point with mpc coordinates and a certified error radius.

    ``exact`` optionally carries Gaussian-rational coordinates; those are
    authoritative and the numeric data is derived from them.
    """

    __slots__ = ("coords", "radius", "exact")

    def __init__(self, coords, radius=0, exact: Optional[tuple] = None):
        coords = tuple(mp.mpc(c) for c in coords)
        sup = max(abs(c) for c in coords)
        if sup == 0:
            raise ValueError("zero vector is not a projective point")
        j = next(i for i in range(len(coords)) if abs(coords[i]) > mp.mpf("1e-30") * sup)
        coords = tuple(c / coords[j] for c in coords)
        sup = max(abs(c) for c in coords)
        self.coords = tuple(c / sup for c in coords)
        self.radius = mp.mpf(radius)
        if exact is not None:
            exact = tuple(coerce_scalar(x) for x in exact)
            j = next(i for i in range(len(exact)) if exact[i] != 0)
            exact = tuple(x / exact[j] for x in exact)
        self.exact = exact

    @staticmethod
    def from_exact(coords) -> "ProjPointNum":
        ex = tuple(coerce_scalar(c) for c in coords)
        num = [scalar_to_complex(c) for c in ex]
        return ProjPointNum(num, 0, exact=ex)

    def is_exact(self) -> bool:
        return self.exact is not None

    def distance(self, other: "ProjPointNum"):
        """Sup-norm distance between normalized representatives, phase-aligned."""
        a, b = self.coords, other.coords
        j = max(range(len(a)), key=lambda i: abs(a[i]))
        # align phases on the dominant coordinate of a
        if abs(b[j]) == 0:
            return mp.mpf(2)
        fa = a[j] / abs(a[j])
        fb = b[j] / abs(b[j])
        return max(abs(x / fa - y / fb) for x, y in zip(a, b))

    def same_point(self, other: "ProjPointNum", tol=None) -> bool:
        if self.exact is not None and other.exact is not None:
            return self.exact == other.exact
        if tol is None:
            tol = max(self.radius, other.radius, mp.mpf("1e-25")) * 8
        return self.distance(other) <= tol

    def to_decimal_strings(self, digits=30):
        out = []
        for c in self.coords:
            out.append(mp.nstr(c, digits))
        return out

    def __repr__(self):
        if self.exact is not None:
            return "[" + ":".join(format_scalar(c) for c in self.exact) + "]"
        return "[" + ":".join(mp.nstr(c, 8) for c in self.coords) + "]"


def coerce_point(pt) -> ProjPointNum:
    if isinstance(pt, ProjPointNum):
        return pt
    return ProjPointNum.from_exact(pt)


def gaussian_extension_eval(p: HomPoly, point, target_width=None):
    """Certified evaluation of p at a numeric projective point.

    Returns (value, error_bound).  The bound combines first-order
    propagation of the point's radius with a rounding allowance at the
    current working precision.  Raises PrecisionExhaustedError when a
    requested output width cannot be met.
    """
    pt = coerce_point(point)
    if pt.is_exact():
        v = p.eval_exact(pt.exact)
        return mp.mpc(scalar_to_complex(v)) if v != 0 else mp.mpc(0), mp.mpf(0)
    coords = pt.coords
    val = p.eval_mpc(coords)
    R = max(abs(c) for c in coords) + pt.radius
    grad_bound = mp.mpf(0)
    for i in range(3):
        d = p.derivative(i)
        s = mp.mpf(0)
        for e, c in d.terms.items():
            s += abs(scalar_to_complex(c)) * R ** sum(e)
        grad_bound += s ** 2
    grad_bound = mp.sqrt(grad_bound)
    coeff_mass = sum(abs(scalar_to_complex(c)) for c in p.terms.values()) or mp.mpf(0)
    rounding = mp.mpf(coeff_mass) * R ** max(p.degree, 0) * mp.mpf(2) ** (12 - mp.mp.prec)
    err = grad_bound * pt.radius * mp.sqrt(3) + rounding
    if target_width is not None and err > target_width:
        raise PrecisionExhaustedError(
            f"cannot certify width {target_width} (achieved {err})")
    return val, err


def poly_from_matrix(M) -> HomPoly:
    """Quadratic form z^T M z from a symmetric 3x3 exact matrix."""
    terms: Dict[Expo, Scalar] = {}
    for i in range(3):
        for j in range(3):
            if M[i][j] == 0:
                continue
            e = [0, 0, 0]
            e[i] += 1
            e[j] += 1
            e = tuple(e)
            terms[e] = terms.get(e, 0) + M[i][j]
    return HomPoly(terms)
