"""Square-combination machinery for quadric nets.

Sign-product elimination polynomials R_j, solvers for rank-one members
of pencils and nets (linear combinations of quadrics that are squares of
linear forms), the adjugate-reduced biquadratic system for a line plus
two quadrics, degeneracy curves, monomial equivalence reduction, and the
built-in worked-example verifier.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import mpmath as mp

from .arrangements import (CommonComponentError, Configuration,
                           InfinitelyManySolutionsError, NoSolutionError,
                           _certified_sign, _poly_coeff_vector,
                           common_zeros_of_quadratic_system,
                           gaussian_extension_eval, intersection_points,
                           tangent_line, tangent_line_numeric, NumLine,
                           tangent_to_conic)
from .config import DEFAULT_PRECISION, PrecisionConfig
from .linalg import det as exact_det
from .linalg import nullspace, rank, solve
from .polynomials import (HomPoly, ProjPointNum, matrix_adjugate, parse_poly,
                          quadric_form)
from .scalars import (GaussRat, Scalar, coerce_scalar, gauss_sqrt,
                      primitive_vector, scalar_to_complex)


class NotDiagonalError(ValueError):
    pass


class SingularAError(ValueError):
    """det(A) = 0: the adjugate-based reduction is invalid."""


class AllAlphaZeroError(ValueError):
    pass


class MalformedRelationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Generic sparse multivariate polynomials (only needed up to 5 variables)
# ---------------------------------------------------------------------------

class MultiPoly:
    """Sparse polynomial over the rationals in n variables."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[tuple, Scalar] | None = None):
        self.n = n
        tmap = {}
        if terms:
            for e, c in terms.items():
                c = coerce_scalar(c)
                if c != 0:
                    tmap[tuple(e)] = c
        self.terms = tmap

    @staticmethod
    def variable(n, i):
        e = [0] * n
        e[i] = 1
        return MultiPoly(n, {tuple(e): 1})

    @staticmethod
    def constant(n, c):
        return MultiPoly(n, {tuple([0] * n): c})

    def __add__(self, other):
        res = dict(self.terms)
        for e, c in other.terms.items():
            s = res.get(e, 0) + c
            if s == 0:
                res.pop(e, None)
            else:
                res[e] = s
        return MultiPoly(self.n, res)

    def __sub__(self, other):
        res = dict(self.terms)
        for e, c in other.terms.items():
            s = res.get(e, 0) - c
            if s == 0:
                res.pop(e, None)
            else:
                res[e] = s
        return MultiPoly(self.n, res)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return MultiPoly(self.n, {e: c * other for e, c in self.terms.items()})
        res: Dict[tuple, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = res.get(e, 0) + c1 * c2
                if s == 0:
                    res.pop(e, None)
                else:
                    res[e] = s
        return MultiPoly(self.n, res)

    __rmul__ = __mul__

    def coeff(self, e) -> Scalar:
        return self.terms.get(tuple(e), Fraction(0))

    @property
    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    @property
    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.n == other.n and self.terms == other.terms

    def compose_hompoly(self, args: Sequence[HomPoly]) -> HomPoly:
        """Evaluate at HomPoly arguments (one per variable)."""
        out = HomPoly.zero()
        cache: Dict[Tuple[int, int], HomPoly] = {}

        def powed(i, k):
            if k == 0:
                return HomPoly.constant(1)
            if (i, k) not in cache:
                cache[(i, k)] = args[i] ** k
            return cache[(i, k)]

        for e, c in self.terms.items():
            t = HomPoly.constant(c)
            for i, k in enumerate(e):
                if k:
                    t = t * powed(i, k)
            out = out + t
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        names = [f"y{i}" for i in range(self.n)]
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True):
            mono = "*".join(f"{names[i]}^{k}" if k > 1 else names[i]
                            for i, k in enumerate(e) if k)
            cs = str(c)
            parts.append(cs if not mono else (mono if cs == "1" else f"{cs}*{mono}"))
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# Sign-product polynomials R_j
# ---------------------------------------------------------------------------

@dataclass
class SignProductPoly:
    """R_j with R_j(x_0^2, ..., x_j^2) equal to the full sign product."""

    j: int
    poly: MultiPoly  # in y_0 .. y_j

    @property
    def degree(self) -> int:
        return 2 ** (self.j - 1)

    def sign_product(self) -> MultiPoly:
        """The defining product, expanded in x_0 .. x_j."""
        n = self.j + 1
        prod = MultiPoly.constant(n, 1)
        for signs in itertools.product((1, -1), repeat=self.j):
            f = MultiPoly.variable(n, 0)
            for i, s in enumerate(signs, start=1):
                f = f + MultiPoly.variable(n, i) * s
            prod = prod * f
        return prod

    def substituted(self) -> MultiPoly:
        """R_j(x_0^2, ..., x_j^2) expanded in the x variables."""
        n = self.j + 1
        out: Dict[tuple, Scalar] = {}
        for e, c in self.poly.terms.items():
            e2 = tuple(2 * k for k in e)
            out[e2] = out.get(e2, 0) + c
        return MultiPoly(n, out)


def generate_R(j: int) -> SignProductPoly:
    """Expand the sign product and rewrite even exponents as y variables."""
    if not 1 <= j <= 4:
        raise ValueError("j must be between 1 and 4")
    n = j + 1
    prod = MultiPoly.constant(n, 1)
    for signs in itertools.product((1, -1), repeat=j):
        f = MultiPoly.variable(n, 0)
        for i, s in enumerate(signs, start=1):
            f = f + MultiPoly.variable(n, i) * s
        prod = prod * f
    terms: Dict[tuple, Scalar] = {}
    for e, c in prod.terms.items():
        if any(k % 2 for k in e):
            raise AssertionError("sign product must be even in every variable")
        terms[tuple(k // 2 for k in e)] = c
    return SignProductPoly(j, MultiPoly(n, terms))


def expand_S(a, b, c) -> HomPoly:
    """R_3(a*x + b*y + c*z, x, y, z) fully expanded as a ternary quartic."""
    R3 = generate_R(3).poly
    x = HomPoly.variable(0)
    y = HomPoly.variable(1)
    z = HomPoly.variable(2)
    lead = x.scale(a) + y.scale(b) + z.scale(c)
    return R3.compose_hompoly([lead, x, y, z])


# ---------------------------------------------------------------------------
# Square combinations over a net of quadrics
# ---------------------------------------------------------------------------

@dataclass
class SquareCombination:
    """Coefficients a with sum(a_j Q_j) = scale * root_form^2 exactly."""

    coefficients: tuple
    combination: Optional[HomPoly]
    root_scale: Optional[Scalar]
    root_form: Optional[HomPoly]
    root_numeric: tuple
    nonzero_count: int
    exact: bool = True

    @property
    def square_root_exact(self) -> Optional[HomPoly]:
        """The root scale*L as an exact form when sqrt(scale) is Gaussian."""
        if self.root_scale is None or self.root_form is None:
            return None
        s = gauss_sqrt(self.root_scale)
        if s is None:
            return None
        return self.root_form.scale(s)

    def residual(self, quadrics) -> Optional[HomPoly]:
        if not self.exact or self.combination is None:
            return None
        acc = HomPoly.zero()
        for aj, qj in zip(self.coefficients, quadrics):
            acc = acc + qj.scale(aj)
        if self.root_form is None:
            return acc - self.combination
        return acc - (self.root_form * self.root_form).scale(self.root_scale)

    def to_json(self):
        from .scalars import format_scalar
        return {
            "coefficients": [format_scalar(c) if self.exact else mp.nstr(c, 20)
                             for c in self.coefficients],
            "combination": str(self.combination) if self.combination is not None else None,
            "root_scale": format_scalar(self.root_scale) if self.root_scale is not None else None,
            "root_form": str(self.root_form) if self.root_form is not None else None,
            "root_numeric": [mp.nstr(c, 20) for c in self.root_numeric],
            "nonzero_count": self.nonzero_count,
            "exact": self.exact,
        }


def _combination_from_exact(avec, quadrics) -> Optional[SquareCombination]:
    avec = primitive_vector(avec)
    comb = HomPoly.zero()
    for aj, qj in zip(avec, quadrics):
        comb = comb + qj.scale(aj)
    if comb.is_zero:
        return SquareCombination(tuple(avec), comb, Fraction(0), HomPoly.zero(),
                                 (mp.mpc(0), mp.mpc(0), mp.mpc(0)),
                                 sum(1 for x in avec if x != 0))
    sq = comb.as_square_of_linear()
    if sq is None:
        return None
    c, L = sq
    if not isinstance(c, GaussRat) and c < 0:
        avec = [-x for x in avec]
        comb = -comb
        c = -c
    vec = [L.coeff((1, 0, 0)), L.coeff((0, 1, 0)), L.coeff((0, 0, 1))]
    with mp.workprec(96):
        sc = mp.sqrt(mp.mpc(scalar_to_complex(c)))
        num = tuple(sc * mp.mpc(scalar_to_complex(v)) for v in vec)
    return SquareCombination(tuple(avec), comb, c, L, num,
                             sum(1 for x in avec if x != 0))


def square_combination(q1: HomPoly, q2: HomPoly, q3: HomPoly,
                       precision: PrecisionConfig | None = None
                       ) -> List[SquareCombination]:
    """All [a1:a2:a3] with rank(a1 M1 + a2 M2 + a3 M3) <= 1.

    Solved from the vanishing of the 2x2 minors of the matrix net; each
    solution carries the extracted square root with a fixed sign
    convention (positive real scale whenever the scale is real).
    """
    prec_cfg = precision or DEFAULT_PRECISION
    quadrics = (q1, q2, q3)
    for q in quadrics:
        if q.degree != 2:
            raise ValueError("inputs must be quadratic forms")
    if rank([_poly_coeff_vector(q) for q in quadrics]) < 2:
        raise ValueError("quadrics must span at least a pencil")
    from .polynomials import pencil_matrix_entry_forms
    entries = pencil_matrix_entry_forms(q1, q2, q3)
    minors = []
    for rows in itertools.combinations(range(3), 2):
        for cols in itertools.combinations(range(3), 2):
            m = (entries[rows[0]][cols[0]] * entries[rows[1]][cols[1]]
                 - entries[rows[0]][cols[1]] * entries[rows[1]][cols[0]])
            if not m.is_zero and m not in minors:
                minors.append(m)
    if not minors:
        raise InfinitelyManySolutionsError("the whole net has rank <= 1")
    sols = common_zeros_of_quadratic_system(minors, precision=prec_cfg)
    out: List[SquareCombination] = []
    for pt in sols:
        if pt.is_exact():
            sc = _combination_from_exact(pt.exact, quadrics)
            if sc is not None:
                out.append(sc)
            continue
        avec = pt.coords
        Ms = [quadric_form(q).matrix for q in quadrics]
        Mn = [[sum(avec[k] * scalar_to_complex(Ms[k][i][j]) for k in range(3))
               for j in range(3)] for i in range(3)]
        jj = max(range(3), key=lambda i: abs(Mn[i][i]))
        if abs(Mn[jj][jj]) == 0:
            continue
        root = tuple(Mn[i][jj] / mp.sqrt(Mn[jj][jj]) for i in range(3))
        out.append(SquareCombination(tuple(avec), None, None, None, root,
                                     sum(1 for x in avec if abs(x) > mp.mpf("1e-20")),
                                     exact=False))
    if not out:
        raise NoSolutionError("the net contains no rank <= 1 member")
    out.sort(key=lambda s: str(s.coefficients))
    return out


# ---------------------------------------------------------------------------
# The adjugate-reduced biquadratic system for (line, quadric, quadric)
# ---------------------------------------------------------------------------

@dataclass
class B4Solution:
    point: tuple                 # (kappa, lambda, mu), exact when possible
    exact: bool
    has_zero_coordinate: bool
    combination: Optional[SquareCombination]


def b4_system(c: Sequence, a: Sequence[Sequence], b: Sequence[Sequence]):
    """Coefficient matrices A, B and the three biquadratic equations."""
    c = [coerce_scalar(x) for x in c]
    A = [[c[0] ** 2, c[1] ** 2, c[2] ** 2]] + [[coerce_scalar(x) for x in row] for row in a]
    B = [[2 * c[0] * c[1], 2 * c[0] * c[2], 2 * c[1] * c[2]]] + \
        [[coerce_scalar(x) for x in row] for row in b]
    dA = exact_det(A)
    if dA == 0:
        raise SingularAError("det(A) = 0; adjugate reduction invalid")
    Ahat = matrix_adjugate(A)
    C = [[sum(Ahat[i][k] * B[k][j] for k in range(3)) for j in range(3)]
         for i in range(3)]
    # (k^2, l^2, m^2) . C = 2 det(A) (kl, km, lm) as forms in (z0, z1, z2)
    sq = [HomPoly.monomial((2, 0, 0)), HomPoly.monomial((0, 2, 0)),
          HomPoly.monomial((0, 0, 2))]
    cross = [HomPoly.monomial((1, 1, 0)), HomPoly.monomial((1, 0, 1)),
             HomPoly.monomial((0, 1, 1))]
    eqs = []
    for j in range(3):
        lhs = HomPoly.zero()
        for i in range(3):
            lhs = lhs + sq[i].scale(C[i][j])
        eqs.append(lhs - cross[j].scale(2 * dA))
    return A, B, Ahat, dA, eqs


def _b4_quadrics(A, B) -> List[HomPoly]:
    """The quadrics Q_i encoded by diagonal rows A and cross rows B."""
    out = []
    basis_sq = [(2, 0, 0), (0, 2, 0), (0, 0, 2)]
    basis_cross = [(1, 1, 0), (1, 0, 1), (0, 1, 1)]
    for i in range(3):
        terms = {}
        for k in range(3):
            if A[i][k] != 0:
                terms[basis_sq[k]] = A[i][k]
            if B[i][k] != 0:
                terms[basis_cross[k]] = B[i][k]
        out.append(HomPoly(terms))
    return out


def b4_solve(c: Sequence, a: Sequence[Sequence], b: Sequence[Sequence],
             precision: PrecisionConfig | None = None) -> List[B4Solution]:
    """All projective solutions of the three biquadratic equations.

    Each solution is certified: (k^2, l^2, m^2) . adj(A) . (Q0, Q1, Q2)
    equals det(A) (k z0 + l z1 + m z2)^2, so it yields a square
    combination of the three quadrics.  Solutions with a zero coordinate
    are flagged separately.
    """
    prec_cfg = precision or DEFAULT_PRECISION
    A, B, Ahat, dA, eqs = b4_system(c, a, b)
    quadrics = _b4_quadrics(A, B)
    pts = common_zeros_of_quadratic_system(eqs, precision=prec_cfg)
    out: List[B4Solution] = []
    for pt in pts:
        if pt.is_exact():
            klm = primitive_vector(pt.exact)
            sqs = [x * x for x in klm]
            avec = [sum(sqs[i] * Ahat[i][j] for i in range(3)) for j in range(3)]
            comb = HomPoly.zero()
            for aj, qj in zip(avec, quadrics):
                comb = comb + qj.scale(aj)
            L = (HomPoly.variable(0).scale(klm[0]) + HomPoly.variable(1).scale(klm[1])
                 + HomPoly.variable(2).scale(klm[2]))
            assert comb == (L * L).scale(dA), "square certificate failed"
            with mp.workprec(96):
                sc = mp.sqrt(mp.mpc(scalar_to_complex(dA)))
            num = tuple(sc * mp.mpc(scalar_to_complex(klm[i])) for i in range(3))
            scomb = SquareCombination(tuple(avec), comb, dA, L, num,
                                      sum(1 for x in avec if x != 0))
            out.append(B4Solution(tuple(klm), True, any(x == 0 for x in klm), scomb))
        else:
            coords = pt.coords
            haszero = any(abs(x) < mp.mpf("1e-25") for x in coords)
            out.append(B4Solution(tuple(coords), False, haszero, None))
    out.sort(key=lambda s: str(s.point))
    return out


# ---------------------------------------------------------------------------
# Degeneracy curves
# ---------------------------------------------------------------------------

@dataclass
class DegeneracyCurve:
    poly: Optional[HomPoly]
    alphas: tuple
    a_coefficients: tuple
    case: str              # full | reduced | collapse
    q_degree: int          # degree as a polynomial in the quadrics
    note: str = ""

    @property
    def z_degree(self) -> int:
        return self.poly.degree if self.poly is not None and not self.poly.is_zero else -1

    @property
    def is_identically_zero(self) -> bool:
        return self.poly is not None and self.poly.is_zero

    def to_json(self):
        from .scalars import format_scalar
        return {
            "curve": str(self.poly) if self.poly is not None else None,
            "alphas": [format_scalar(a) for a in self.alphas],
            "coefficients": [format_scalar(a) for a in self.a_coefficients],
            "case": self.case,
            "q_degree": self.q_degree,
            "z_degree": self.z_degree,
            "identically_zero": self.is_identically_zero,
            "note": self.note,
        }


def degeneracy_curve(alphas: Sequence, as_: Sequence,
                     quadrics: Sequence[HomPoly]) -> DegeneracyCurve:
    """Curve trapping the image of a map avoiding the three quadrics.

    Full case (all alpha nonzero): substitute the square combination and
    the three quadrics into the j=3 sign-product polynomial; degree <= 8.
    Exactly one alpha zero: the j=2 polynomial on the remaining three,
    degree <= 4.  Two or more zeros: the linear relation already forces
    proportionality of two of the functions; reported as collapse.
    """
    al = [coerce_scalar(x) for x in alphas]
    if len(al) != 4:
        raise ValueError("four alpha coefficients expected")
    avec = [coerce_scalar(x) for x in as_]
    if sum(1 for x in avec if x != 0) < 2:
        raise ValueError("at least two combination coefficients must be nonzero")
    if all(x == 0 for x in al):
        raise AllAlphaZeroError("all alpha coefficients vanish")
    q1, q2, q3 = quadrics
    q0eff = q1.scale(avec[0]) + q2.scale(avec[1]) + q3.scale(avec[2])
    args_full = [q0eff, q1, q2, q3]
    zero_idx = [i for i, x in enumerate(al) if x == 0]
    if len(zero_idx) == 0:
        R3 = generate_R(3).poly
        scaled = [args_full[i].scale(al[i] ** 2) for i in range(4)]
        poly = R3.compose_hompoly(scaled)
        return DegeneracyCurve(poly, tuple(al), tuple(avec), "full", 4)
    if len(zero_idx) == 1:
        R2 = generate_R(2).poly
        live = [i for i in range(4) if i not in zero_idx]
        scaled = [args_full[i].scale(al[i] ** 2) for i in live]
        poly = R2.compose_hompoly(scaled)
        return DegeneracyCurve(poly, tuple(al), tuple(avec), "reduced", 2,
                               note=f"alpha_{zero_idx[0]} = 0: quadratic relation instead")
    live = [i for i in range(4) if i not in zero_idx]
    note = ("two or more alpha coefficients vanish: the linear relation "
            "directly forces proportionality"
            + (f" of q_{live[0]} and q_{live[1]}" if len(live) == 2 else ""))
    return DegeneracyCurve(None, tuple(al), tuple(avec), "collapse", 0, note=note)


# ---------------------------------------------------------------------------
# Monomial equivalence reduction
# ---------------------------------------------------------------------------

@dataclass
class ReductionConclusion:
    kind: str                      # pencil | inconclusive
    indices: Optional[Tuple[int, int]] = None
    exponent: Optional[int] = None
    via: str = ""
    note: str = ""


def monomial_equivalence_reduce(relations: List[Tuple[Sequence[int], Sequence[int], object]]
                                ) -> ReductionConclusion:
    """Reduce exponent-vector relations to a two-quadric pencil relation.

    Case 1 applies when a relation matches in some coordinate: that index
    cancels and the remaining exponents force sigma Q_u = tau Q_v.  Case 2
    combines two relations whose difference vectors are not rational
    multiples of each other.
    """
    if not relations:
        raise MalformedRelationError("no relations given")
    diffs = []
    for k, l, _ in relations:
        k = list(k)
        l = list(l)
        if len(k) != len(l) or len(k) != 3:
            raise MalformedRelationError("exponent vectors must have length 3")
        if sum(k) != sum(l):
            raise MalformedRelationError("coordinate sums differ")
        diffs.append([ki - li for ki, li in zip(k, l)])

    # case 1 on each relation
    for (k, l, _), d in zip(relations, diffs):
        if all(x == 0 for x in d):
            continue
        for j in range(3):
            if d[j] == 0:
                u, v = (i for i in range(3) if i != j)
                r = abs(d[u])
                return ReductionConclusion("pencil", (u, v), r, via="case1",
                                           note=f"index {j} cancels")

    # case 2 on pairs
    for (i1, d1), (i2, d2) in itertools.combinations(enumerate(diffs), 2):
        cross = [d1[a] * d2[b] - d1[b] * d2[a] for a, b in ((0, 1), (0, 2), (1, 2))]
        if all(x == 0 for x in cross):
            continue  # proportional
        for j in range(3):
            e = [d1[t] * d2[j] - d2[t] * d1[j] for t in range(3)]
            if e[j] != 0 or all(x == 0 for x in e):
                continue
            u, v = (i for i in range(3) if i != j)
            from math import gcd
            g = gcd(abs(e[u]), abs(e[v]))
            return ReductionConclusion("pencil", (u, v), abs(e[u]) // g, via="case2",
                                       note=f"combined relations {i1} and {i2}, index {j} cancels")
    return ReductionConclusion("inconclusive",
                               note="no matching index and all differences proportional")


# ---------------------------------------------------------------------------
# Fermat (diagonal) nets
# ---------------------------------------------------------------------------

def _diag_rows(quadrics) -> List[List[Scalar]]:
    rows = []
    for q in quadrics:
        if q.degree != 2:
            raise NotDiagonalError("degree-2 forms required")
        for e in q.terms:
            if max(e) != 2:
                raise NotDiagonalError(f"cross term in {q}")
        rows.append([q.coeff((2, 0, 0)), q.coeff((0, 2, 0)), q.coeff((0, 0, 2))])
    return rows


def tangent_incidence_check(quadric_indices, polys,
                            precision: PrecisionConfig | None = None):
    """No tangent at an intersection point passes through another one.

    Tangents are taken to the listed smooth-quadric components at each of
    their intersection points with other components; incidence with every
    other pairwise intersection point is tested with certification.
    Returns (verdict, witnesses): verdict in pass/fail/undecided.
    """
    prec_cfg = precision or DEFAULT_PRECISION
    pairs = {}
    for i, j in itertools.combinations(range(len(polys)), 2):
        try:
            pairs[(i, j)] = intersection_points(polys[i], polys[j],
                                                precision=prec_cfg, pair=(i, j))
        except CommonComponentError:
            return "fail", []
    all_pts = [(pr, r.point) for pr, recs in pairs.items() for r in recs]
    witnesses = []
    undecided = False
    for qi in quadric_indices:
        for (i, j), recs in pairs.items():
            if qi not in (i, j):
                continue
            for rec in recs:
                try:
                    tl = NumLine.from_exact(tangent_line(polys[qi], rec.point))
                except Exception:
                    tl = tangent_line_numeric(polys[qi], rec.point)
                for pr2, pt2 in all_pts:
                    if pt2.same_point(rec.point):
                        continue
                    v, e = tl.incidence(pt2)
                    s = _certified_sign(v, e)
                    if s == 0:
                        witnesses.append(pt2)
                    elif s is None:
                        undecided = True
    if witnesses:
        return "fail", witnesses
    if undecided:
        return "undecided", []
    return "pass", []


def fermat_check(q1: HomPoly, q2: HomPoly, q3: HomPoly,
                 precision: PrecisionConfig | None = None) -> dict:
    """Verdicts for a net of diagonal quadrics.

    Checks linear independence of the coefficient rows, smoothness (no
    vanishing diagonal entry), the three genericity conditions (no triple
    point, no tangent through a further intersection point, no pairwise
    tangency), and reports the square combinations of the net (for an
    independent diagonal net these always exist: one per coordinate
    pair).
    """
    prec_cfg = precision or DEFAULT_PRECISION
    quadrics = (q1, q2, q3)
    rows = _diag_rows(quadrics)
    report: dict = {}
    indep = exact_det(rows) != 0
    report["independent"] = indep
    report["smooth"] = [all(x != 0 for x in row) for row in rows]

    polys = list(quadrics)
    # condition 3: no pairwise tangency; condition 1: no triple point
    tangency = []
    triple = []
    undecided = False
    pair_pts = {}
    for i, j in itertools.combinations(range(3), 2):
        try:
            recs = intersection_points(polys[i], polys[j], precision=prec_cfg, pair=(i, j))
        except CommonComponentError:
            report["condition_1_no_triple_point"] = "fail"
            report["condition_2_tangent_incidence"] = "fail"
            report["condition_3_no_tangency"] = "fail"
            report["square_combinations"] = []
            return report
        pair_pts[(i, j)] = recs
        for r in recs:
            if r.multiplicity >= 2:
                tangency.append(((i, j), r.point))
        k = 3 - i - j
        for r in recs:
            if r.point.is_exact():
                if polys[k].eval_exact(r.point.exact) == 0:
                    triple.append(r.point)
            else:
                v, e = gaussian_extension_eval(polys[k], r.point)
                s = _certified_sign(abs(v), e)
                if s == 0:
                    triple.append(r.point)
                elif s is None:
                    undecided = True
    report["condition_1_no_triple_point"] = (
        "fail" if triple else ("undecided" if undecided else "pass"))
    report["condition_3_no_tangency"] = "fail" if tangency else "pass"
    verdict2, _ = tangent_incidence_check(range(3), polys, prec_cfg)
    report["condition_2_tangent_incidence"] = verdict2

    combos: List[SquareCombination] = []
    if indep:
        # vanish two of the three diagonal entries of sum a_j Q_j
        for u, v in itertools.combinations(range(3), 2):
            M = [[rows[r][u] for r in range(3)], [rows[r][v] for r in range(3)]]
            ker = nullspace(M)
            if len(ker) != 1:
                continue
            sc = _combination_from_exact(ker[0], quadrics)
            if sc is not None:
                combos.append(sc)
    try:
        general = square_combination(q1, q2, q3, precision=prec_cfg)
    except (NoSolutionError, InfinitelyManySolutionsError):
        general = []
    seen = {str(c.coefficients) for c in combos}
    for sc in general:
        if str(sc.coefficients) not in seen:
            combos.append(sc)
    combos.sort(key=lambda s: str(s.coefficients))
    report["square_combinations"] = combos
    return report


# ---------------------------------------------------------------------------
# Built-in worked example
# ---------------------------------------------------------------------------

EXAMPLE_LINE = "z0^2"
EXAMPLE_Q1 = "z1^2 + z0*z1 + z0*z2 + (1/25)*z1*z2"
EXAMPLE_Q2 = "z2^2 + 50*z0*z1 - 10*z0*z2 + 9*z1*z2"
EXAMPLE_COMBINATION = (225, 100, 4)
EXAMPLE_ROOT = "15*z0 + 10*z1 + 2*z2"


def example_verify(precision: PrecisionConfig | None = None) -> dict:
    """End-to-end verification of the built-in line-plus-two-quadrics net.

    Confirms the exact square combination, the five genericity items
    (no triple point, no pairwise tangency, tangent incidence, tangent to
    the other quadric, and the four contact linear solves admitting only
    the trivial solution), and returns everything in one report.
    """
    prec_cfg = precision or DEFAULT_PRECISION
    q0 = parse_poly(EXAMPLE_LINE)
    q1 = parse_poly(EXAMPLE_Q1)
    q2 = parse_poly(EXAMPLE_Q2)
    quadrics = (q0, q1, q2)
    report: dict = {}

    a0, a1, a2 = EXAMPLE_COMBINATION
    comb = q0.scale(a0) + q1.scale(a1) + q2.scale(a2)
    root = parse_poly(EXAMPLE_ROOT)
    report["square_identity_exact"] = (comb - root * root).is_zero

    sols = square_combination(q0, q1, q2, precision=prec_cfg)
    report["square_solutions"] = sols
    report["square_found"] = any(
        s.exact and tuple(s.coefficients) == (Fraction(225), Fraction(100), Fraction(4))
        for s in sols)

    line = parse_poly("z0")
    polys = [line, q1, q2]

    # item 1: no more than two components through any point
    triple = []
    undecided = False
    pair_pts = {}
    for i, j in itertools.combinations(range(3), 2):
        recs = intersection_points(polys[i], polys[j], pair=(i, j), precision=prec_cfg)
        pair_pts[(i, j)] = recs
        k = 3 - i - j
        for r in recs:
            if r.point.is_exact():
                if polys[k].eval_exact(r.point.exact) == 0:
                    triple.append(r.point)
            else:
                v, e = gaussian_extension_eval(polys[k], r.point)
                s = _certified_sign(abs(v), e)
                if s == 0:
                    triple.append(r.point)
                elif s is None:
                    undecided = True
    report["item1_no_triple_point"] = "fail" if triple else (
        "undecided" if undecided else "pass")

    # item 2: no tangencies anywhere
    tang = [r for recs in pair_pts.values() for r in recs if r.multiplicity >= 2]
    report["item2_no_tangency"] = "fail" if tang else "pass"

    # item 3: tangents at intersection points contain no further intersection point
    verdict3, wit3 = tangent_incidence_check((1, 2), polys, prec_cfg)
    report["item3_tangent_incidence"] = verdict3

    # item 4: tangent at a point of intersection with the line is not
    # tangent to the other smooth quadric
    item4 = "pass"
    for qi, other in ((1, 2), (2, 1)):
        for r in pair_pts[(0, qi)]:
            t = tangent_line(polys[qi], r.point)
            if tangent_to_conic(NumLine.from_exact(t), polys[other]):
                item4 = "fail"
    report["item4_tangent_tangency"] = item4

    # item 5: the contact linear systems admit only the trivial solution
    pairs_p = pair_pts[(0, 1)]
    pairs_q = pair_pts[(0, 2)]
    ranks = []
    for rp, rq in itertools.product(pairs_p, pairs_q):
        tp = tangent_line(q1, rp.point)
        tq = tangent_line(q2, rq.point)
        rows = [_poly_coeff_vector(q1), _poly_coeff_vector(tp * tp),
                _poly_coeff_vector(q2), _poly_coeff_vector(tq * tq)]
        ranks.append(rank(rows))
    report["item5_ranks"] = ranks
    report["item5_only_trivial"] = all(r == 4 for r in ranks)

    report["passed"] = all([
        report["square_identity_exact"], report["square_found"],
        report["item1_no_triple_point"] == "pass",
        report["item2_no_tangency"] == "pass",
        report["item3_tangent_incidence"] == "pass",
        report["item4_tangent_tangency"] == "pass",
        report["item5_only_trivial"],
    ])
    return report
