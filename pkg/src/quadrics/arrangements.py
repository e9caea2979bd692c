"""Configuration analysis of plane curves.

Intersections with exact multiplicities, tangency data, genericity
verdicts, the 18-line system attached to a quadric triple, and pencil
computations.  Intersection points are located numerically (resultant
roots with certified radii, exact shortcuts when roots are recognized),
multiplicities come from the exact squarefree decomposition of the
eliminating resultant after a coordinate change that puts one point per
fiber.

Numeric predicates are three valued: pass and fail are only ever
certified (margin excludes zero, or exact arithmetic), everything else is
undecided and escalates working precision up to the configured cap.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import mpmath as mp

from .config import DEFAULT_PRECISION, PrecisionConfig
from .linalg import nullspace, rank, solve
from .polynomials import (DegenerateLeadingFormError, HomPoly,
                          PrecisionExhaustedError, ProjPointNum, QuadricForm,
                          ZeroPolynomialError, coerce_point,
                          gaussian_extension_eval, matrix_adjugate,
                          pencil_matrix_entry_forms, poly_from_matrix,
                          quadric_form, resultant)
from .scalars import (GaussRat, coerce_scalar, reconstruct_gauss,
                      scalar_to_complex)
from .univariate import (UniPoly, binary_form_roots, exact_roots_small,
                         rational_roots, roots_with_multiplicity, uni_gcd,
                         yun_squarefree)


class CommonComponentError(ValueError):
    """The two curves share a component; finite intersection undefined."""

    def __init__(self, message="curves share a common component", witness=None):
        super().__init__(message)
        self.witness = witness


class DegenerateIntersectionError(ValueError):
    """A quadric triple fails the smooth/transversal gate."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NoValidSelectionError(ValueError):
    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics


class NotInPencilError(ValueError):
    pass


class IdenticallyDegenerateError(ValueError):
    pass


class InfinitelyManySolutionsError(ValueError):
    pass


class NoSolutionError(ValueError):
    pass


class DegreeMismatchError(ValueError):
    pass


class SingularPointError(ValueError):
    pass


class NotOnCurveError(ValueError):
    pass


class NotExactPointError(ValueError):
    """Tangent lines are exact objects; use tangent_line_numeric instead."""


class UnsupportedFamilyError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Small numeric helpers
# ---------------------------------------------------------------------------

def _mpc_polyroots(coeffs, prec):
    """Roots of a complex-coefficient polynomial (low to high)."""
    cs = list(coeffs)
    while cs and abs(cs[-1]) == 0:
        cs.pop()
    if len(cs) <= 1:
        return []
    with mp.workprec(prec):
        roots = mp.polyroots([mp.mpc(c) for c in reversed(cs)],
                             maxsteps=200, extraprec=prec)
    return [mp.mpc(r) for r in roots]


def _sup(vec):
    return max(abs(c) for c in vec)


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _cross_exact(a, b):
    return tuple(coerce_scalar(x) for x in (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0]))


@dataclass
class NumLine:
    """Projective line with numeric coefficient vector and error radius."""

    vec: tuple
    radius: mp.mpf
    exact: Optional[HomPoly] = None

    @staticmethod
    def from_points(a: ProjPointNum, b: ProjPointNum) -> "NumLine":
        exact = None
        if a.is_exact() and b.is_exact():
            ve = _cross_exact(a.exact, b.exact)
            line = HomPoly.linear_form(ve)
            _, line = line.content_primitive()
            return NumLine.from_exact(line)
        v = _cross(a.coords, b.coords)
        raw_rad = (_sup(a.coords) * b.radius + _sup(b.coords) * a.radius) * 4 \
            + mp.mpf(2) ** (8 - mp.mp.prec)
        s = _sup(v)
        if s == 0:
            raise ValueError("coincident points do not span a line")
        j = max(range(3), key=lambda i: abs(v[i]))
        phase = v[j] / abs(v[j])
        v = tuple(c / (s * phase) for c in v)
        return NumLine(v, raw_rad / s)

    @staticmethod
    def from_exact(line: HomPoly) -> "NumLine":
        _, prim = line.content_primitive()
        ve = [prim.coeff((1, 0, 0)), prim.coeff((0, 1, 0)), prim.coeff((0, 0, 1))]
        v = tuple(mp.mpc(scalar_to_complex(c)) for c in ve)
        s = _sup(v)
        return NumLine(tuple(c / s for c in v), mp.mpf(0), exact=prim)

    def incidence(self, p: ProjPointNum):
        """(|l.p|, error bound); exact zero detected when both are exact."""
        if self.exact is not None and p.is_exact():
            v = self.exact.eval_exact(p.exact)
            return (mp.mpf(0) if v == 0 else mp.mpf(abs(scalar_to_complex(v)))), None
        val = abs(sum(c * x for c, x in zip(self.vec, p.coords)))
        err = (self.radius * _sup(p.coords) * 3 + p.radius * _sup(self.vec) * 3
               + mp.mpf(2) ** (8 - mp.mp.prec))
        return val, err


def _certified_sign(value, err):
    """1 certainly nonzero, 0 exactly zero, None ambiguous."""
    if err is None:
        return 0 if value == 0 else 1
    if value > err:
        return 1
    return None


def lines_concurrent(l1: NumLine, l2: NumLine, l3: NumLine):
    """True/False/None for det of the three coefficient vectors."""
    if all(l.exact is not None for l in (l1, l2, l3)):
        from .polynomials import matrix_det3
        rows = []
        for l in (l1, l2, l3):
            rows.append([l.exact.coeff((1, 0, 0)), l.exact.coeff((0, 1, 0)),
                         l.exact.coeff((0, 0, 1))])
        return matrix_det3(rows) == 0
    rows = [l.vec for l in (l1, l2, l3)]
    d = (rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
         - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
         + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]))
    err = sum(l.radius for l in (l1, l2, l3)) * 6 + mp.mpf(2) ** (8 - mp.mp.prec)
    if abs(d) > err:
        return False
    if err == 0 and abs(d) == 0:
        return True
    if all(l.radius == 0 for l in (l1, l2, l3)) and abs(d) < mp.mpf(2) ** (4 - mp.mp.prec):
        # all three lines exactly known numerically, det consistent with 0
        return True
    return None


def lines_distinct(l1: NumLine, l2: NumLine):
    if l1.exact is not None and l2.exact is not None:
        return l1.exact != l2.exact and l1.exact != -l2.exact
    v = _cross(l1.vec, l2.vec)
    err = (l1.radius + l2.radius) * 6 + mp.mpf(2) ** (8 - mp.mp.prec)
    if _sup(v) > err:
        return True
    if err == 0:
        return False
    return None


# ---------------------------------------------------------------------------
# Intersection points
# ---------------------------------------------------------------------------

@dataclass
class IntersectionRecord:
    point: ProjPointNum
    multiplicity: int
    tangential: Optional[bool]
    pair: Tuple[int, int] = (0, 1)


def _coordinate_changes():
    """Deterministic sequence of unimodular changes, identity first."""
    yield ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    rng = random.Random(90210)
    while True:
        a, b, c, d, e, f = (rng.randint(-4, 4) for _ in range(6))
        U = ((1, a, b), (c, 1 + a * c, d), (e, f + c * e, 1 + b * e + d * f))
        # keep only genuinely invertible integer matrices
        det = (U[0][0] * (U[1][1] * U[2][2] - U[1][2] * U[2][1])
               - U[0][1] * (U[1][0] * U[2][2] - U[1][2] * U[2][0])
               + U[0][2] * (U[1][0] * U[2][1] - U[1][1] * U[2][0]))
        if det != 0:
            yield U


def _apply_matrix(U, vec):
    return tuple(sum(U[i][j] * vec[j] for j in range(3)) for i in range(3))


def has_common_component(p: HomPoly, q: HomPoly) -> bool:
    for var in range(3):
        if p.degree_in(var) > 0 and q.degree_in(var) > 0:
            try:
                if resultant(p, q, var).is_zero:
                    return True
            except DegenerateLeadingFormError:  # pragma: no cover
                continue
    return False


def common_component_witness(p: HomPoly, q: HomPoly, prec=256) -> Optional[ProjPointNum]:
    """A point lying (within certification) on both curves."""
    for lc in ((1, 1, 1), (1, 2, 3), (0, 1, 1), (1, 0, 2)):
        line = HomPoly.linear_form(lc)
        try:
            pts = intersection_points(p, line, precision=PrecisionConfig(prec, prec))
        except (CommonComponentError, ZeroPolynomialError, PrecisionExhaustedError):
            continue
        for rec in pts:
            v, err = gaussian_extension_eval(q, rec.point)
            if _certified_sign(abs(v), (err or mp.mpf(0)) + mp.mpf("1e-20")) != 1:
                return rec.point
    return None


def _fiber_points_exact(p2: HomPoly, q2: HomPoly, beta, gamma, prec):
    """Distinct z0 values over an exact fiber; None if not single valued."""
    pc = [f.eval_exact((0, beta, gamma)) for f in p2.coeffs_in(0)]
    qc = [f.eval_exact((0, beta, gamma)) for f in q2.coeffs_in(0)]
    g = uni_gcd(UniPoly(pc), UniPoly(qc))
    if g.degree < 1:
        return None  # no common root above: cannot happen for resultant roots
    parts = yun_squarefree(g)
    squarefree = parts[0][0] if len(parts) == 1 else None
    if squarefree is None:
        sq = UniPoly([1])
        for f, _ in parts:
            sq = sq * f
        squarefree = sq
    if squarefree.degree > 1:
        return "multiple"
    roots = rational_roots(squarefree)
    if not roots:
        ex = exact_roots_small(squarefree)
        roots = ex if ex is not None else []
    if roots:
        return [("exact", roots[0])]
    balls = roots_with_multiplicity(squarefree, prec)
    return [("numeric", balls[0].value, balls[0].radius)]


def _fiber_points_numeric(p2, q2, beta, gamma, rad, prec):
    """Matched z0 roots over a numeric fiber; 'multiple' if more than one."""
    pc = [f.eval_mpc((0, beta, gamma)) for f in p2.coeffs_in(0)]
    qc = [f.eval_mpc((0, beta, gamma)) for f in q2.coeffs_in(0)]
    rp = _mpc_polyroots(pc, prec)
    rq = _mpc_polyroots(qc, prec)
    if not rp or not rq:
        return None
    scale = max([abs(r) for r in rp + rq] + [mp.mpf(1)])
    tol = max(mp.mpf(rad) * 100, mp.mpf(2) ** (-prec // 2)) * scale + mp.mpf(2) ** (20 - prec)
    matches = []
    for a in rp:
        best = min(rq, key=lambda b: abs(a - b))
        if abs(a - best) <= tol:
            matches.append((a + best) / 2)
    if not matches:
        return None
    clusters: List[mp.mpc] = []
    for v in matches:
        if all(abs(v - c) > tol * 4 for c in clusters):
            clusters.append(v)
    if len(clusters) > 1:
        return "multiple"
    return [("numeric", clusters[0], tol)]


def _newton_polish(p: HomPoly, q: HomPoly, pt_vec, prec, steps=30):
    """Newton iteration for the 2x2 system on the best affine chart."""
    with mp.workprec(prec):
        v = [mp.mpc(c) for c in pt_vec]
        chart = max(range(3), key=lambda i: abs(v[i]))
        idx = [i for i in range(3) if i != chart]
        v = [c / v[chart] for c in v]
        grads_p = p.gradient()
        grads_q = q.gradient()
        for _ in range(steps):
            fv = p.eval_mpc(v)
            gv = q.eval_mpc(v)
            J = [[grads_p[idx[0]].eval_mpc(v), grads_p[idx[1]].eval_mpc(v)],
                 [grads_q[idx[0]].eval_mpc(v), grads_q[idx[1]].eval_mpc(v)]]
            det = J[0][0] * J[1][1] - J[0][1] * J[1][0]
            if abs(det) == 0:
                break
            dx = (fv * J[1][1] - gv * J[0][1]) / det
            dy = (gv * J[0][0] - fv * J[1][0]) / det
            v[idx[0]] -= dx
            v[idx[1]] -= dy
            if max(abs(dx), abs(dy)) < mp.mpf(2) ** (16 - prec):
                break
        res = max(abs(p.eval_mpc(v)), abs(q.eval_mpc(v)))
        Jn = max(sum(abs(x) for x in row) for row in J) if abs(det) else mp.mpf(1)
        radius = res / abs(det) * Jn * 8 + mp.mpf(2) ** (16 - prec) if abs(det) else mp.mpf(2) ** (-prec // 4)
        return tuple(v), radius


def intersection_points(p: HomPoly, q: HomPoly, *,
                        precision: PrecisionConfig | None = None,
                        pair: Tuple[int, int] = (0, 1)) -> List[IntersectionRecord]:
    """All common projective zeros with exact Bezout multiplicities."""
    precision = precision or DEFAULT_PRECISION
    if p.is_zero or q.is_zero:
        raise ZeroPolynomialError("intersection with zero polynomial")
    if p.degree < 1 or q.degree < 1:
        raise ValueError("components must have positive degree")
    if has_common_component(p, q):
        raise CommonComponentError(
            witness=common_component_witness(p, q, precision.start_bits))

    target = p.degree * q.degree
    last_error = None
    for prec in precision.ladder():
        with mp.workprec(prec):
            changes = _coordinate_changes()
            for _ in range(12):
                U = next(changes)
                recs = _try_intersection(p, q, U, prec, pair, target)
                if recs is not None:
                    _fill_tangential(p, q, recs, prec)
                    recs.sort(key=_record_sort_key)
                    return recs
            last_error = f"no admissible coordinate change at {prec} bits"
    raise PrecisionExhaustedError(last_error or "intersection failed")


def _try_intersection(p, q, U, prec, pair, target):
    args = [HomPoly.linear_form(U[i]) for i in range(3)]
    p2 = p.compose(args)
    q2 = q.compose(args)
    if p2.degree_in(0) != p.degree or q2.degree_in(0) != q.degree:
        return None  # projection center sits on a curve
    try:
        rho = resultant(p2, q2, 0)
    except DegenerateLeadingFormError:
        return None
    if rho.is_zero:
        return None
    roots = binary_form_roots(rho, 1, 2, prec)
    recs: List[IntersectionRecord] = []
    for hi, lo, mult, exact, rad in roots:
        if exact is not None:
            fiber = _fiber_points_exact(p2, q2, exact[0], exact[1], prec)
        else:
            fiber = _fiber_points_numeric(p2, q2, hi, lo, rad, prec)
        if fiber == "multiple":
            return None
        if fiber is None:
            return None
        entry = fiber[0]
        if entry[0] == "exact" and exact is not None:
            w = (entry[1], exact[0], exact[1])
            z = _apply_matrix(U, w)
            pt = ProjPointNum.from_exact(z)
        else:
            t = entry[1]
            w = (t, hi, lo)
            z = _apply_matrix(U, [mp.mpc(x) for x in w])
            polished, prad = _newton_polish(p, q, z, prec)
            pt = ProjPointNum(polished, prad)
            rec_exact = _try_exact_recovery(p, q, polished)
            if rec_exact is not None:
                pt = ProjPointNum.from_exact(rec_exact)
        recs.append(IntersectionRecord(pt, mult, None, pair))
    if sum(r.multiplicity for r in recs) != target:
        return None
    # one point per fiber also means all points are pairwise distinct
    for a, b in itertools.combinations(recs, 2):
        if a.point.same_point(b.point):
            return None
    return recs


def _try_exact_recovery(p, q, coords):
    vals = [complex(c) for c in coords]
    rec = []
    for v in vals:
        g = reconstruct_gauss(v.real, v.imag, max_den=10 ** 6, tol=1e-18)
        if g is None:
            return None
        rec.append(g)
    if all(x == 0 for x in rec):
        return None
    if p.eval_exact(rec) == 0 and q.eval_exact(rec) == 0:
        return tuple(rec)
    return None


def _record_sort_key(rec: IntersectionRecord):
    c = rec.point.coords
    return tuple(x for cc in c for x in (float(mp.re(cc)), float(mp.im(cc))))


def _fill_tangential(p, q, recs, prec):
    for rec in recs:
        if rec.multiplicity < 2:
            rec.tangential = False
            continue
        smooth = True
        for f in (p, q):
            gx = [f.derivative(i) for i in range(3)]
            if rec.point.is_exact():
                vals = [g.eval_exact(rec.point.exact) for g in gx]
                if all(v == 0 for v in vals):
                    smooth = False
            else:
                vals = [gaussian_extension_eval(g, rec.point) for g in gx]
                if not any(_certified_sign(abs(v), e) == 1 for v, e in vals):
                    smooth = None if smooth is True else smooth
        rec.tangential = smooth if smooth is not True else True


# ---------------------------------------------------------------------------
# Tangent lines
# ---------------------------------------------------------------------------

def tangent_line(p: HomPoly, pt) -> HomPoly:
    """Exact tangent line grad(p)(pt) . z at an exact point of V(p)."""
    point = coerce_point(pt)
    if not point.is_exact():
        raise NotExactPointError(
            "numeric points have no exact tangent; use tangent_line_numeric")
    coords = point.exact
    if p.eval_exact(coords) != 0:
        raise NotOnCurveError(f"{point!r} is not on the curve")
    grad = [p.derivative(i).eval_exact(coords) for i in range(3)]
    if all(g == 0 for g in grad):
        raise SingularPointError(f"gradient vanishes at {point!r}")
    line = HomPoly.linear_form(grad)
    _, prim = line.content_primitive()
    return prim


def tangent_line_numeric(p: HomPoly, pt) -> NumLine:
    point = coerce_point(pt)
    if point.is_exact():
        return NumLine.from_exact(tangent_line(p, point))
    grad = [p.derivative(i).eval_mpc(point.coords) for i in range(3)]
    s = _sup(grad)
    if s == 0:
        raise SingularPointError("numerically vanishing gradient")
    hess_mass = sum(
        sum(abs(scalar_to_complex(c)) for c in p.derivative(i).derivative(j).terms.values())
        for i in range(3) for j in range(3))
    rad = (point.radius * hess_mass * 3 + mp.mpf(2) ** (8 - mp.mp.prec)) / s
    j = max(range(3), key=lambda i: abs(grad[i]))
    phase = grad[j] / abs(grad[j])
    return NumLine(tuple(g / (s * phase) for g in grad), rad)


def tangent_to_conic(line: NumLine, q: HomPoly):
    """Is the line tangent to the smooth conic? (dual-form test)."""
    dual = poly_from_matrix(quadric_form(q).adjugate())
    if line.exact is not None:
        le = [line.exact.coeff((1, 0, 0)), line.exact.coeff((0, 1, 0)),
              line.exact.coeff((0, 0, 1))]
        return dual.eval_exact(le) == 0
    v = dual.eval_mpc(line.vec)
    err = line.radius * 50 + mp.mpf(2) ** (8 - mp.mp.prec)
    s = _certified_sign(abs(v), err)
    return None if s is None else (s == 0)


# ---------------------------------------------------------------------------
# Configuration and genericity reports
# ---------------------------------------------------------------------------

@dataclass
class Configuration:
    """Plane-curve configuration: components with declared degrees."""

    components: List[Tuple[HomPoly, int]]
    family: Tuple[int, ...]

    @staticmethod
    def from_polys(polys: Sequence[HomPoly], family: Sequence[int] | None = None) -> "Configuration":
        fam = tuple(family) if family is not None else tuple(p.degree for p in polys)
        comps = []
        for p, d in zip(polys, fam):
            if p.is_zero:
                raise ValueError("zero component")
            if p.degree == d:
                comps.append((p, d))
            elif d == 1 and p.degree == 2:
                sq = p.as_square_of_linear()
                if sq is None:
                    raise ValueError(
                        f"component of degree {p.degree} declared degree {d}")
                comps.append((sq[1], 1))  # double line enters with multiplicity one
            else:
                raise ValueError(
                    f"component of degree {p.degree} declared degree {d}")
        return Configuration(comps, fam)

    @staticmethod
    def from_json(obj) -> "Configuration":
        from .polynomials import parse_poly
        polys = [parse_poly(s) for s in obj["components"]]
        return Configuration.from_polys(polys, obj.get("family"))

    def polys(self) -> List[HomPoly]:
        return [p for p, _ in self.components]

    @property
    def k(self) -> int:
        return len(self.components)


@dataclass
class ConditionVerdict:
    status: str  # pass | fail | undecided | not_applicable
    witnesses: List[ProjPointNum] = field(default_factory=list)
    note: str = ""

    def to_json(self):
        return {
            "verdict": self.status,
            "witnesses": [
                {"point": w.to_decimal_strings(), "radius": mp.nstr(w.radius, 6)}
                for w in self.witnesses
            ],
            "note": self.note,
        }


@dataclass
class GenericityReport:
    conditions: Dict[str, ConditionVerdict] = field(default_factory=dict)
    metadata: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v.status in ("pass", "not_applicable")
                   for v in self.conditions.values())

    @property
    def undecided(self) -> bool:
        return any(v.status == "undecided" for v in self.conditions.values())

    def to_json(self):
        return {
            "conditions": {k: v.to_json() for k, v in sorted(self.conditions.items())},
            "metadata": dict(self.metadata),
        }


def _smoothness_verdict(p: HomPoly, prec_cfg: PrecisionConfig) -> ConditionVerdict:
    if p.degree == 1:
        return ConditionVerdict("pass")
    if p.degree == 2:
        r = quadric_form(p).rank
        if r == 3:
            return ConditionVerdict("pass")
        kind = "double line" if r == 1 else "two distinct lines"
        return ConditionVerdict("fail", note=f"singular quadric (rank {r}: {kind})")
    # general degree: the three partials must have no common zero
    gx = [p.derivative(i) for i in range(3)]
    nz = [g for g in gx if not g.is_zero]
    if len(nz) < 2:
        return ConditionVerdict("fail", note="cone or repeated factor")
    try:
        pts = intersection_points(nz[0], nz[1], precision=prec_cfg)
    except CommonComponentError as exc:
        w = [exc.witness] if exc.witness else []
        return ConditionVerdict("fail", witnesses=w, note="partials share a component")
    bad = []
    und = False
    for rec in pts:
        rest = [g for g in nz[2:]]
        if not rest:
            bad.append(rec.point)
            continue
        for g in rest:
            if rec.point.is_exact():
                if g.eval_exact(rec.point.exact) == 0:
                    bad.append(rec.point)
            else:
                v, e = gaussian_extension_eval(g, rec.point)
                s = _certified_sign(abs(v), e)
                if s == 0:
                    bad.append(rec.point)
                elif s is None:
                    und = True
    if bad:
        return ConditionVerdict("fail", witnesses=bad, note="singular point")
    if und:
        return ConditionVerdict("undecided")
    return ConditionVerdict("pass")


def _pairwise_data(polys, prec_cfg):
    """All pairwise intersection records; {(i, j): [records] or error}."""
    out = {}
    for i, j in itertools.combinations(range(len(polys)), 2):
        try:
            out[(i, j)] = intersection_points(polys[i], polys[j],
                                              precision=prec_cfg, pair=(i, j))
        except CommonComponentError as exc:
            out[(i, j)] = exc
    return out


def _transversality_verdict(polys, pairwise, prec_cfg) -> ConditionVerdict:
    witnesses = []
    notes = []
    undecided = False
    for (i, j), val in pairwise.items():
        if isinstance(val, CommonComponentError):
            if val.witness is not None:
                witnesses.append(val.witness)
            notes.append(f"components {i} and {j} share a component")
            continue
        for rec in val:
            if rec.multiplicity >= 2:
                witnesses.append(rec.point)
                notes.append(f"non-transversal contact of {i} and {j} "
                             f"(multiplicity {rec.multiplicity})")
    # triple points
    for (i, j), val in pairwise.items():
        if isinstance(val, CommonComponentError):
            continue
        for k in range(len(polys)):
            if k in (i, j):
                continue
            for rec in val:
                if rec.point.is_exact():
                    if polys[k].eval_exact(rec.point.exact) == 0:
                        witnesses.append(rec.point)
                        notes.append(f"components {i},{j},{k} meet at one point")
                else:
                    v, e = gaussian_extension_eval(polys[k], rec.point)
                    s = _certified_sign(abs(v), e)
                    if s == 0:
                        witnesses.append(rec.point)
                        notes.append(f"components {i},{j},{k} meet at one point")
                    elif s is None:
                        undecided = True
    if notes:
        uniq = []
        seen = set()
        for w in witnesses:
            key = repr(w)
            if key not in seen:
                seen.add(key)
                uniq.append(w)
        return ConditionVerdict("fail", witnesses=uniq, note="; ".join(sorted(set(notes))))
    if undecided:
        return ConditionVerdict("undecided")
    return ConditionVerdict("pass")


def common_tangents(q1: HomPoly, q2: HomPoly, prec_cfg) -> List[ProjPointNum]:
    """Common tangent lines of two smooth conics, as dual-plane points."""
    d1 = poly_from_matrix(quadric_form(q1).adjugate())
    d2 = poly_from_matrix(quadric_form(q2).adjugate())
    return [rec.point for rec in intersection_points(d1, d2, precision=prec_cfg)]


def _contact_point(q: HomPoly, line_pt: ProjPointNum) -> ProjPointNum:
    """Pole of a tangent line: the point where it touches the conic."""
    adj = quadric_form(q).adjugate()
    if line_pt.is_exact():
        v = [sum(adj[i][j] * line_pt.exact[j] for j in range(3)) for i in range(3)]
        return ProjPointNum.from_exact(v)
    v = [sum(scalar_to_complex(adj[i][j]) * line_pt.coords[j] for j in range(3))
         for i in range(3)]
    mass = max(sum(abs(scalar_to_complex(adj[i][j])) for j in range(3)) for i in range(3))
    return ProjPointNum(v, line_pt.radius * mass * 4)


def _lies_on(p: HomPoly, pt: ProjPointNum):
    if pt.is_exact():
        return p.eval_exact(pt.exact) == 0
    v, e = gaussian_extension_eval(p, pt)
    s = _certified_sign(abs(v), e)
    return None if s is None else (s == 0)


def genericity_check_s4(cfg: Configuration,
                        precision: PrecisionConfig | None = None) -> GenericityReport:
    """Genericity conditions for the supported configuration families.

    Smoothness and pairwise transversality (including the no-triple-point
    clause) apply to every family; the common-tangent conditions are
    family specific and reported not_applicable elsewhere.
    """
    prec_cfg = precision or DEFAULT_PRECISION
    polys = cfg.polys()
    report = GenericityReport()
    report.metadata["family"] = str(list(cfg.family))
    report.metadata["s4.3-interpretation"] = (
        "third quadric must not contain both tangency points; the reading "
        "'neither point' is the stricter alternative and is not used")

    verdicts = [
        _smoothness_verdict(p, prec_cfg) for p in polys
    ]
    bad = [v for v in verdicts if v.status == "fail"]
    und = [v for v in verdicts if v.status == "undecided"]
    if bad:
        wit = [w for v in bad for w in v.witnesses]
        report.conditions["s4.1"] = ConditionVerdict(
            "fail", witnesses=wit, note="; ".join(v.note for v in bad))
    elif und:
        report.conditions["s4.1"] = ConditionVerdict("undecided")
    else:
        report.conditions["s4.1"] = ConditionVerdict("pass")

    pairwise = _pairwise_data(polys, prec_cfg)
    report.conditions["s4.2"] = _transversality_verdict(polys, pairwise, prec_cfg)

    degs = tuple(sorted(cfg.family))
    k = cfg.k

    # (3): three quadrics
    if cfg.family == (2, 2, 2):
        report.conditions["s4.3"] = _condition3_222(polys, prec_cfg)
    else:
        report.conditions["s4.3"] = ConditionVerdict("not_applicable")

    # (4): two curves of degree >= 2 plus two lines
    if k == 4 and sorted(cfg.family)[:2] == [1, 1] and min(
            d for d in cfg.family if d > 1) >= 2 and sum(1 for d in cfg.family if d == 1) == 2:
        report.conditions["s4.4"] = _condition4_dd11(cfg, prec_cfg)
    else:
        report.conditions["s4.4"] = ConditionVerdict("not_applicable")

    # (5): one curve of degree >= 2 plus three lines
    if k == 4 and sum(1 for d in cfg.family if d == 1) == 3:
        report.conditions["s4.5"] = _condition5_d111(cfg, prec_cfg)
    else:
        report.conditions["s4.5"] = ConditionVerdict("not_applicable")

    return report


def _condition3_222(polys, prec_cfg) -> ConditionVerdict:
    witnesses = []
    undecided = False
    for (i, j) in itertools.combinations(range(3), 2):
        k = 3 - i - j
        if quadric_form(polys[i]).rank != 3 or quadric_form(polys[j]).rank != 3:
            return ConditionVerdict("undecided", note="needs smooth quadrics")
        try:
            tangents = common_tangents(polys[i], polys[j], prec_cfg)
        except (CommonComponentError, PrecisionExhaustedError):
            return ConditionVerdict("undecided", note="degenerate dual intersection")
        for ell in tangents:
            P = _contact_point(polys[i], ell)
            Q = _contact_point(polys[j], ell)
            onP = _lies_on(polys[k], P)
            onQ = _lies_on(polys[k], Q)
            if onP is None or onQ is None:
                if onP is not False and onQ is not False:
                    undecided = True
                continue
            if onP and onQ:
                witnesses.extend([P, Q])
    if witnesses:
        return ConditionVerdict("fail", witnesses=witnesses,
                                note="third quadric meets a common tangent in both contact points")
    if undecided:
        return ConditionVerdict("undecided")
    return ConditionVerdict("pass")


def _condition4_dd11(cfg, prec_cfg) -> ConditionVerdict:
    polys = cfg.polys()
    curve_idx = [i for i, (_, d) in enumerate(cfg.components) if d >= 2]
    line_idx = [i for i, (_, d) in enumerate(cfg.components) if d == 1]
    c1, c2 = (polys[i] for i in curve_idx)
    if c1.degree != 2 or c2.degree != 2:
        return ConditionVerdict("undecided",
                                note="implemented for quadric components only")
    l3, l4 = (polys[i] for i in line_idx)
    witnesses = []
    undecided = False
    try:
        tangents = common_tangents(c1, c2, prec_cfg)
    except (CommonComponentError, PrecisionExhaustedError):
        return ConditionVerdict("undecided", note="degenerate dual intersection")
    for ell in tangents:
        P = _contact_point(c1, ell)
        Q = _contact_point(c2, ell)
        for la, lb in ((l3, l4), (l4, l3)):
            onP = _lies_on(la, P)
            onQ = _lies_on(lb, Q)
            if onP is None or onQ is None:
                if onP is not False and onQ is not False:
                    undecided = True
                continue
            if onP and onQ:
                witnesses.extend([P, Q])
    if witnesses:
        return ConditionVerdict("fail", witnesses=witnesses,
                                note="common tangent contact points lie on the two lines")
    if undecided:
        return ConditionVerdict("undecided")
    return ConditionVerdict("pass")


def _condition5_d111(cfg, prec_cfg) -> ConditionVerdict:
    polys = cfg.polys()
    curve_idx = next(i for i, (_, d) in enumerate(cfg.components) if d >= 2)
    curve = polys[curve_idx]
    if curve.degree != 2:
        return ConditionVerdict("undecided",
                                note="implemented for a quadric component only")
    lines = [p for i, p in enumerate(polys) if i != curve_idx]
    dual = poly_from_matrix(quadric_form(curve).adjugate())
    witnesses = []
    undecided = False
    for a, b in itertools.combinations(range(3), 2):
        c = 3 - a - b
        la = [lines[a].coeff((1, 0, 0)), lines[a].coeff((0, 1, 0)), lines[a].coeff((0, 0, 1))]
        lb = [lines[b].coeff((1, 0, 0)), lines[b].coeff((0, 1, 0)), lines[b].coeff((0, 0, 1))]
        X = _cross_exact(la, lb)
        if all(x == 0 for x in X):
            continue  # identical lines; condition 2 already failed
        # tangents through X: dual conic cut by the dual line X
        dual_line = HomPoly.linear_form(X)
        try:
            duals = intersection_points(dual, dual_line, precision=prec_cfg)
        except (CommonComponentError, PrecisionExhaustedError):
            undecided = True
            continue
        for rec in duals:
            P = _contact_point(curve, rec.point)
            on = _lies_on(lines[c], P)
            if on is None:
                undecided = True
            elif on:
                witnesses.append(P)
    if witnesses:
        return ConditionVerdict(
            "fail", witnesses=witnesses,
            note="tangent through a line intersection touches the curve on the third line")
    if undecided:
        return ConditionVerdict("undecided")
    return ConditionVerdict("pass")


# ---------------------------------------------------------------------------
# Line systems of a quadric triple
# ---------------------------------------------------------------------------

PAIRINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


@dataclass
class LineInfo:
    """One of the 18 lines: which pair of intersection points spans it."""

    group: Tuple[int, int]
    pairing: int
    point_ids: Tuple[int, int]
    line: NumLine

    def label(self) -> str:
        return f"L{self.group[0]}{self.group[1]}.{self.pairing}.{self.point_ids}"


@dataclass
class LineSystem:
    quadrics: Tuple[HomPoly, HomPoly, HomPoly]
    points: Dict[Tuple[int, int], List[ProjPointNum]]
    groups: Dict[Tuple[int, int], List[LineInfo]]
    precision_bits: int

    def all_lines(self) -> List[LineInfo]:
        out = []
        for g in ((0, 1), (0, 2), (1, 2)):
            out.extend(self.groups[g])
        return out

    def to_json(self):
        return {
            "groups": {
                f"L{g[0] + 1}{g[1] + 1}": [
                    {
                        "pairing": li.pairing,
                        "points": list(li.point_ids),
                        "coefficients": [mp.nstr(c, 30) for c in li.line.vec],
                        "exact": str(li.line.exact) if li.line.exact is not None else None,
                    }
                    for li in lines
                ]
                for g, lines in self.groups.items()
            },
            "intersection_points": {
                f"{g[0] + 1},{g[1] + 1}": [
                    {"point": p.to_decimal_strings(), "radius": mp.nstr(p.radius, 6)}
                    for p in pts
                ]
                for g, pts in self.points.items()
            },
            "precision_bits": self.precision_bits,
        }


def build_line_system(q1: HomPoly, q2: HomPoly, q3: HomPoly,
                      precision: PrecisionConfig | None = None) -> LineSystem:
    """The 18 lines through pairwise intersection points, grouped by pair."""
    prec_cfg = precision or DEFAULT_PRECISION
    polys = [q1, q2, q3]
    points: Dict[Tuple[int, int], List[ProjPointNum]] = {}
    groups: Dict[Tuple[int, int], List[LineInfo]] = {}
    for i, j in ((0, 1), (0, 2), (1, 2)):
        recs = intersection_points(polys[i], polys[j], precision=prec_cfg, pair=(i, j))
        if len(recs) != 4 or any(r.multiplicity != 1 for r in recs):
            raise DegenerateIntersectionError(
                f"components {i} and {j} do not meet in 4 simple points")
        pts = [r.point for r in recs]
        points[(i, j)] = pts
        lines = []
        for pidx, pairing in enumerate(PAIRINGS):
            for (a, b) in pairing:
                lines.append(LineInfo((i, j), pidx, (a, b),
                                      NumLine.from_points(pts[a], pts[b])))
        groups[(i, j)] = lines
    return LineSystem((q1, q2, q3), points, groups, prec_cfg.start_bits)


def genericity_check_s6(q1: HomPoly, q2: HomPoly, q3: HomPoly,
                        precision: PrecisionConfig | None = None
                        ) -> Tuple[GenericityReport, Optional[LineSystem]]:
    """Line-system genericity of a quadric triple.

    Conditions: smoothness, pairwise transversality (4 simple points per
    pair), the common-tangent condition, and the 18-line concurrency
    pattern: exactly 3 lines through each of the 12 pairwise intersection
    points, never 3 through any other point.  Raises
    DegenerateIntersectionError (carrying the partial report) when the
    smooth/transversal gate fails.  The concurrency verdict escalates
    working precision while it stays undecided.
    """
    prec_cfg = precision or DEFAULT_PRECISION
    report = GenericityReport()
    ranks = [quadric_form(q).rank for q in (q1, q2, q3)]
    if all(r == 3 for r in ranks):
        report.conditions["s6.1"] = ConditionVerdict("pass")
    else:
        report.conditions["s6.1"] = ConditionVerdict(
            "fail", note=f"ranks {ranks}")
        raise DegenerateIntersectionError("singular quadric in triple", report)

    ls = None
    for bits in prec_cfg.ladder():
        rung = PrecisionConfig(bits, prec_cfg.cap_bits)
        with mp.workprec(bits):
            try:
                ls = build_line_system(q1, q2, q3, rung)
                report.conditions["s6.2"] = ConditionVerdict("pass")
            except (DegenerateIntersectionError, CommonComponentError) as exc:
                report.conditions["s6.2"] = ConditionVerdict("fail", note=str(exc))
                raise DegenerateIntersectionError(str(exc), report)
            report.conditions["s6.4"] = _condition4_verdict(ls)
        if report.conditions["s6.4"].status != "undecided":
            break
    report.conditions["s6.3"] = _condition3_222([q1, q2, q3], prec_cfg)
    return report, ls


def _condition4_verdict(ls: LineSystem) -> ConditionVerdict:
    """Concurrency pattern of the 18 lines.

    A line passes through its two defining intersection points by
    construction, so each of the 12 points carries exactly its three
    own-group lines structurally; what needs certification is only the
    negative side: no further line through those points, no coincident
    lines, and no 3-fold concurrency elsewhere (triples consisting of the
    three own lines of one point are the allowed ones).
    """
    lines = ls.all_lines()
    undecided = False
    witnesses = []
    notes = []

    for a, b in itertools.combinations(range(len(lines)), 2):
        d = lines_distinct(lines[a].line, lines[b].line)
        if d is False:
            notes.append(f"lines {lines[a].label()} and {lines[b].label()} coincide")
        elif d is None:
            undecided = True

    all_points = [(g, idx, p) for g, pts in ls.points.items()
                  for idx, p in enumerate(pts)]

    def is_own(li: LineInfo, g, idx) -> bool:
        return li.group == g and idx in li.point_ids

    for g, idx, p in all_points:
        for li in lines:
            if is_own(li, g, idx):
                continue
            v, e = li.line.incidence(p)
            s = _certified_sign(v, e)
            if s == 0:
                witnesses.append(p)
                notes.append(f"extra line {li.label()} through intersection "
                             f"point {idx} of pair {g}")
            elif s is None:
                undecided = True

    for a, b, c in itertools.combinations(range(len(lines)), 3):
        trip = (lines[a], lines[b], lines[c])
        if any(all(is_own(li, g, idx) for li in trip) for g, idx, _ in all_points):
            continue  # the allowed 3-fold concurrency at an intersection point
        conc = lines_concurrent(*(li.line for li in trip))
        if conc is None:
            undecided = True
        elif conc:
            pt = _lines_meet_point(trip[0].line, trip[1].line)
            if pt is not None:
                witnesses.append(pt)
            notes.append("3 lines concurrent: "
                         + ", ".join(li.label() for li in trip))
    if witnesses or notes:
        return ConditionVerdict("fail", witnesses=witnesses,
                                note="; ".join(sorted(set(notes))[:6]))
    if undecided:
        return ConditionVerdict("undecided")
    return ConditionVerdict("pass")


def _lines_meet_point(l1: NumLine, l2: NumLine) -> Optional[ProjPointNum]:
    if l1.exact is not None and l2.exact is not None:
        a = [l1.exact.coeff((1, 0, 0)), l1.exact.coeff((0, 1, 0)), l1.exact.coeff((0, 0, 1))]
        b = [l2.exact.coeff((1, 0, 0)), l2.exact.coeff((0, 1, 0)), l2.exact.coeff((0, 0, 1))]
        v = _cross_exact(a, b)
        if all(x == 0 for x in v):
            return None
        return ProjPointNum.from_exact(v)
    v = _cross(l1.vec, l2.vec)
    s = _sup(v)
    err = (l1.radius + l2.radius) * 6
    if s <= err * 4:
        return None
    return ProjPointNum(v, err / s * 4)


def select_general_position(ls: LineSystem) -> List[LineInfo]:
    """First 12-line selection (canonical order) in general position.

    Drops one pairing per quadric pair; candidates are enumerated
    lexicographically over the dropped indices and certified by the
    exhaustive 3-subset concurrency test (after dropping a pairing no
    structural concurrency survives, so every triple must be certified
    non-concurrent).
    """
    diagnostics = []
    with mp.workprec(max(ls.precision_bits, mp.mp.prec)):
        for drop in itertools.product(range(3), repeat=3):
            sel: List[LineInfo] = []
            for gi, g in enumerate(((0, 1), (0, 2), (1, 2))):
                sel.extend(li for li in ls.groups[g] if li.pairing != drop[gi])
            ok = True
            for a, b in itertools.combinations(range(12), 2):
                if lines_distinct(sel[a].line, sel[b].line) is not True:
                    ok = False
                    diagnostics.append((drop, f"lines {a},{b} not distinct"))
                    break
            if not ok:
                continue
            for a, b, c in itertools.combinations(range(12), 3):
                conc = lines_concurrent(sel[a].line, sel[b].line, sel[c].line)
                if conc is not False:
                    ok = False
                    diagnostics.append(
                        (drop, f"lines {sel[a].label()},{sel[b].label()},{sel[c].label()} concurrent"))
                    break
            if ok:
                return sel
    raise NoValidSelectionError(
        "no 12-line selection is in general position", diagnostics)


# ---------------------------------------------------------------------------
# Pencils
# ---------------------------------------------------------------------------

def _poly_coeff_vector(p: HomPoly):
    basis = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
    return [p.coeff(e) for e in basis]


def pencil_membership(l1: HomPoly, l2: HomPoly, q1: HomPoly, q2: HomPoly):
    """Exact scalars (a, b) with l1*l2 = a*q1 + b*q2."""
    if l1.degree != 1 or l2.degree != 1:
        raise ValueError("l1, l2 must be linear forms")
    if rank([_poly_coeff_vector(q1), _poly_coeff_vector(q2)]) < 2:
        raise ValueError("q1, q2 must be linearly independent")
    prod = l1 * l2
    cols = [_poly_coeff_vector(q1), _poly_coeff_vector(q2)]
    M = [[cols[0][r], cols[1][r]] for r in range(6)]
    rhs = _poly_coeff_vector(prod)
    sol = solve(M, rhs)
    if sol is None:
        raise NotInPencilError("product of lines is not in the pencil")
    return sol[0], sol[1]


@dataclass
class PencilRankOneMember:
    scalars: tuple                  # (a, b), exact when possible
    square: HomPoly                 # the rank-1 combination a*q1 + b*q2
    root_scale: object              # c with square == c * root_form**2
    root_form: Optional[HomPoly]    # primitive linear form, exact
    root_numeric: tuple             # mpc coefficient triple of the root

    @property
    def exact_root(self) -> Optional[HomPoly]:
        from .scalars import gauss_sqrt
        s = gauss_sqrt(self.root_scale) if self.root_scale is not None else None
        if s is not None and self.root_form is not None:
            return self.root_form.scale(s)
        return None


def pencil_rank1_members(q1: HomPoly, q2: HomPoly,
                         precision: PrecisionConfig | None = None
                         ) -> List[PencilRankOneMember]:
    """All [a:b] with rank(a*M1 + b*M2) = 1, with extracted square roots.

    Found as common roots of the 2x2 minors of the matrix pencil (their
    gcd is a binary form of degree at most 2, so roots are exact whenever
    they are Gaussian rational).
    """
    if rank([_poly_coeff_vector(q1), _poly_coeff_vector(q2)]) < 2:
        raise ValueError("q1, q2 must be linearly independent")
    prec_cfg = precision or DEFAULT_PRECISION
    entries = pencil_matrix_entry_forms(q1, q2)
    minors = []
    for rows in itertools.combinations(range(3), 2):
        for cols in itertools.combinations(range(3), 2):
            m = (entries[rows[0]][cols[0]] * entries[rows[1]][cols[1]]
                 - entries[rows[0]][cols[1]] * entries[rows[1]][cols[0]])
            if not m.is_zero:
                minors.append(m)
    if not minors:
        raise IdenticallyDegenerateError("the whole pencil has rank <= 1")
    from .univariate import binary_to_unipoly
    g = None
    shared_hi = None
    shared_lo = None
    for m in minors:
        p, mlo, mhi = binary_to_unipoly(m, 0, 1)
        g = p if g is None else uni_gcd(g, p)
        shared_hi = mhi if shared_hi is None else min(shared_hi, mhi)
        shared_lo = mlo if shared_lo is None else min(shared_lo, mlo)
    candidates = []
    if shared_hi:
        candidates.append(("exact", (Fraction(0), Fraction(1))))
    if shared_lo:
        candidates.append(("exact", (Fraction(1), Fraction(0))))
    if g is not None and g.degree >= 1:
        rr = rational_roots(g)
        work = g
        for r in rr:
            candidates.append(("exact", (r, Fraction(1))))
            work, _ = work.divmod(UniPoly([-r, 1]))
        ex = exact_roots_small(work) if work.degree in (1, 2) else None
        if ex is not None:
            for r in ex:
                candidates.append(("exact", (r, Fraction(1))))
        elif work.degree >= 1:
            for ball in roots_with_multiplicity(work, prec_cfg.start_bits):
                candidates.append(("numeric", (ball.value, mp.mpc(1))))
    out = []
    for kind, (a, b) in candidates:
        if kind == "exact":
            from .scalars import primitive_vector
            a, b = primitive_vector([a, b])
            comb = q1.scale(a) + q2.scale(b)
            sq = comb.as_square_of_linear()
            if sq is None:
                continue  # a det root that is not rank 1
            c, L = sq
            if not isinstance(c, GaussRat) and c < 0:
                a, b, comb, c = -a, -b, -comb, -c
            vec = tuple(mp.mpc(scalar_to_complex(coerce_scalar(x)))
                        for x in (L.coeff((1, 0, 0)), L.coeff((0, 1, 0)), L.coeff((0, 0, 1))))
            with mp.workprec(max(64, prec_cfg.start_bits)):
                sc = mp.sqrt(mp.mpc(scalar_to_complex(c)))
            out.append(PencilRankOneMember((a, b), comb, c, L,
                                           tuple(sc * v for v in vec)))
        else:
            # numeric candidate: verify rank 1 within tolerance, keep numeric root
            M1 = quadric_form(q1).matrix
            M2 = quadric_form(q2).matrix
            Mn = [[a * scalar_to_complex(M1[i][j]) + b * scalar_to_complex(M2[i][j])
                   for j in range(3)] for i in range(3)]
            minors_num = [abs(Mn[r1][c1] * Mn[r2][c2] - Mn[r1][c2] * Mn[r2][c1])
                          for r1, r2 in itertools.combinations(range(3), 2)
                          for c1, c2 in itertools.combinations(range(3), 2)]
            scale = max(max(abs(x) for x in row) for row in Mn) or 1.0
            if max(minors_num) > 1e-20 * scale ** 2:
                continue
            jj = max(range(3), key=lambda i: abs(Mn[i][i]))
            col = [Mn[i][jj] for i in range(3)]
            root = tuple(c / mp.sqrt(Mn[jj][jj]) for c in col)
            out.append(PencilRankOneMember((a, b), HomPoly.zero(), None, None, root))
    return out


def contact_classification(q1: HomPoly, q2: HomPoly,
                           precision: PrecisionConfig | None = None) -> str:
    """four-simple | two-tangential | one-point | other."""
    recs = intersection_points(q1, q2, precision=precision)
    mults = sorted(r.multiplicity for r in recs)
    if mults == [1, 1, 1, 1]:
        return "four-simple"
    if mults == [2, 2]:
        return "two-tangential"
    if mults == [4]:
        return "one-point"
    return "other"


# ---------------------------------------------------------------------------
# Morphisms and hypothesis counts
# ---------------------------------------------------------------------------

@dataclass
class MorphismDescriptor:
    components: tuple
    powers: tuple
    degree: int
    is_morphism: bool
    certified: bool
    witness: Optional[ProjPointNum] = None


def composite_morphism(p1: HomPoly, p2: HomPoly, p3: HomPoly,
                       powers: Tuple[int, int, int],
                       precision: PrecisionConfig | None = None) -> MorphismDescriptor:
    """Does [p1^a1 : p2^a2 : p3^a3] define a morphism of the plane?

    True exactly when the three forms have no common projective zero;
    powers only need to equalize the degrees.
    """
    prec_cfg = precision or DEFAULT_PRECISION
    comps = (p1, p2, p3)
    for p in comps:
        if p.is_zero:
            raise ZeroPolynomialError("zero component")
    degs = {p.degree * a for p, a in zip(comps, powers)}
    if len(degs) != 1:
        raise DegreeMismatchError(f"component degrees {sorted(degs)} differ")
    try:
        pts = intersection_points(p1, p2, precision=prec_cfg)
    except CommonComponentError as exc:
        return MorphismDescriptor(comps, tuple(powers), degs.pop(), False, True,
                                  witness=exc.witness)
    certified = True
    for rec in pts:
        if rec.point.is_exact():
            if p3.eval_exact(rec.point.exact) == 0:
                return MorphismDescriptor(comps, tuple(powers), degs.pop(),
                                          False, True, witness=rec.point)
        else:
            v, e = gaussian_extension_eval(p3, rec.point)
            s = _certified_sign(abs(v), e)
            if s == 0:
                return MorphismDescriptor(comps, tuple(powers), degs.pop(),
                                          False, True, witness=rec.point)
            if s is None:
                certified = False
    return MorphismDescriptor(comps, tuple(powers), degs.pop(), True, certified)


def morphism_powers(d1: int, d2: int, d3: int) -> Tuple[int, int, int]:
    """Smallest powers equalizing the degrees (least common multiple rule)."""
    import math
    L = math.lcm(d1, d2, d3)
    return (L // d1, L // d2, L // d3)


def cor31_hypothesis_check(cfg: Configuration,
                           precision: PrecisionConfig | None = None):
    """Distinct points of each component's intersection with the others.

    Returns a list of dicts with the count and a pass flag (>= 3).
    """
    prec_cfg = precision or DEFAULT_PRECISION
    polys = cfg.polys()
    pairwise = _pairwise_data(polys, prec_cfg)
    out = []
    for i in range(len(polys)):
        pts: List[ProjPointNum] = []
        shared_component = False
        for (a, b), val in pairwise.items():
            if i not in (a, b):
                continue
            if isinstance(val, CommonComponentError):
                shared_component = True
                continue
            for rec in val:
                if not any(rec.point.same_point(p) for p in pts):
                    pts.append(rec.point)
        count = len(pts) if not shared_component else None
        out.append({
            "component": i,
            "distinct_points": count,
            "shared_component": shared_component,
            "pass": (count is not None and count >= 3),
            "points": pts,
        })
    return out


# ---------------------------------------------------------------------------
# Contact obstruction report
# ---------------------------------------------------------------------------

def _numeric_rank4_deficient(rows6):
    """None if rank 4 certified, else the smallest singular value."""
    import numpy as np
    A = np.array([[complex(x) for x in row] for row in rows6], dtype=complex)
    s = np.linalg.svd(A, compute_uv=False)
    if s[-1] > 1e-9 * max(s[0], 1.0):
        return None
    return s[-1]


def contact_obstruction_check(cfg: Configuration,
                              precision: PrecisionConfig | None = None):
    """Exclusion clauses for a line-plus-two-quadrics or quadric-triple
    configuration.

    Clause e: some pair of components is tangent somewhere.
    Clause g: a tangent at an intersection point with the first component
              is tangent to the other smooth quadric.
    Clause f: for a pair of contact candidates (p', p'') the spans
              {Q2, T'^2} and {Q3, T''^2} intersect nontrivially; reported
              as a potential obstruction with the candidate quadric.
    """
    prec_cfg = precision or DEFAULT_PRECISION
    polys = cfg.polys()
    if cfg.k != 3:
        raise UnsupportedFamilyError("three components required")
    degs = [d for _, d in cfg.components]
    if sorted(degs) == [1, 2, 2]:
        first = degs.index(1)
    elif degs == [2, 2, 2]:
        first = 0
    else:
        raise UnsupportedFamilyError(f"family {tuple(degs)} not covered")
    others = [i for i in range(3) if i != first]
    g1 = polys[first]
    g2, g3 = polys[others[0]], polys[others[1]]

    report: Dict[str, ConditionVerdict] = {}

    # clause e: pairwise tangency
    witnesses = []
    undecided = False
    for i, j in itertools.combinations(range(3), 2):
        try:
            recs = intersection_points(polys[i], polys[j], precision=prec_cfg)
        except CommonComponentError:
            witnesses.append(None)
            continue
        for r in recs:
            if r.multiplicity >= 2:
                witnesses.append(r.point)
    report["e"] = ConditionVerdict(
        "fail" if witnesses else "pass",
        witnesses=[w for w in witnesses if w is not None],
        note="tangential contact present" if witnesses else "")

    # tangency data at intersections with the first component
    def tangents_at(quad, base):
        recs = intersection_points(base, quad, precision=prec_cfg)
        out = []
        for r in recs:
            try:
                out.append((r.point, tangent_line(quad, r.point)))
            except NotExactPointError:
                out.append((r.point, tangent_line_numeric(quad, r.point)))
        return out

    t2 = tangents_at(g2, g1)
    t3 = tangents_at(g3, g1)

    # clause g
    g_wit = []
    for pts, quad_other in ((t2, g3), (t3, g2)):
        for pt, tl in pts:
            line = tl if isinstance(tl, NumLine) else NumLine.from_exact(tl)
            istan = tangent_to_conic(line, quad_other)
            if istan is None:
                undecided = True
            elif istan:
                g_wit.append(pt)
    report["g"] = ConditionVerdict(
        "fail" if g_wit else ("undecided" if undecided else "pass"),
        witnesses=g_wit,
        note="tangent at a contact point touches the other quadric" if g_wit else "")

    # clause f: span intersection test, exact where possible
    f_entries = []
    f_status = "pass"
    for (pa, ta), (pb, tb) in itertools.product(t2, t3):
        exact_ok = isinstance(ta, HomPoly) and isinstance(tb, HomPoly)
        if exact_ok:
            rows = [_poly_coeff_vector(g2), _poly_coeff_vector(ta * ta),
                    _poly_coeff_vector(g3), _poly_coeff_vector(tb * tb)]
            r = rank(rows)
            if r < 4:
                ker = nullspace([[rows[i][c] for i in range(4)] for c in range(6)])
                cand = None
                if ker:
                    al, be = ker[0][0], ker[0][1]
                    cand = g2.scale(al) + (ta * ta).scale(be)
                f_entries.append({"pair": (repr(pa), repr(pb)),
                                  "rank": r, "candidate": str(cand) if cand else None})
                f_status = "fail"
        else:
            def numvec(x):
                if isinstance(x, HomPoly):
                    return [complex(scalar_to_complex(v)) for v in _poly_coeff_vector(x)]
                sq_terms = {}
                v = x.vec
                basis = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
                comp = {
                    (2, 0, 0): v[0] * v[0], (0, 2, 0): v[1] * v[1], (0, 0, 2): v[2] * v[2],
                    (1, 1, 0): 2 * v[0] * v[1], (1, 0, 1): 2 * v[0] * v[2],
                    (0, 1, 1): 2 * v[1] * v[2]}
                return [complex(comp[e]) for e in basis]
            rows = [numvec(g2), numvec(ta), numvec(g3), numvec(tb)]
            smin = _numeric_rank4_deficient(rows)
            if smin is not None:
                f_entries.append({"pair": (repr(pa), repr(pb)),
                                  "smallest_singular_value": float(smin),
                                  "candidate": None})
                if f_status == "pass":
                    f_status = "potential"
    note = ""
    if f_status == "fail":
        note = "span intersection nontrivial: obstruction candidate exists"
    elif f_status == "potential":
        note = ("numeric span intersection: potential obstruction, "
                "not a proof of failure")
    report["f"] = ConditionVerdict("fail" if f_status == "fail" else
                                   ("undecided" if f_status == "potential" else "pass"),
                                   note=note)
    rep = GenericityReport(conditions=report)
    rep.metadata["f_entries"] = repr(f_entries)
    return rep


# ---------------------------------------------------------------------------
# Shared solver: common zeros of a system of ternary quadratic forms
# ---------------------------------------------------------------------------

def common_zeros_of_quadratic_system(forms: Sequence[HomPoly],
                                     precision: PrecisionConfig | None = None
                                     ) -> List[ProjPointNum]:
    """All projective common zeros of a system of forms of degree <= 2.

    Pairs of deterministic generic combinations are intersected and the
    candidates filtered through every form.  Persistent common components
    across combinations signal a positive-dimensional solution set, which
    is reported, not enumerated.
    """
    prec_cfg = precision or DEFAULT_PRECISION
    live = [f for f in forms if not f.is_zero]
    if not live:
        raise InfinitelyManySolutionsError("every form vanishes identically")
    if rank([_poly_coeff_vector(f) for f in live]) == 1:
        raise InfinitelyManySolutionsError(
            "a single independent form has a curve of zeros")
    rng = random.Random(421731)
    failures = 0
    attempts = 0
    while attempts < 40:
        attempts += 1
        lam = [rng.randint(1, 99) for _ in live]
        mu = [rng.randint(1, 99) for _ in live]
        qa = HomPoly.zero()
        qb = HomPoly.zero()
        for l, m_, f in zip(lam, mu, live):
            qa = qa + f.scale(l)
            qb = qb + f.scale(m_)
        if qa.is_zero or qb.is_zero or qa.degree < 1 or qb.degree < 1:
            continue
        try:
            recs = intersection_points(qa, qb, precision=prec_cfg)
        except CommonComponentError:
            failures += 1
            if failures >= 8:
                raise InfinitelyManySolutionsError(
                    "generic combinations keep sharing components; "
                    "the solution set is positive dimensional")
            continue
        except (PrecisionExhaustedError, ZeroPolynomialError):
            continue
        sols = []
        ambiguous = False
        for rec in recs:
            keep = True
            for f in live:
                if rec.point.is_exact():
                    if f.eval_exact(rec.point.exact) != 0:
                        keep = False
                        break
                else:
                    v, e = gaussian_extension_eval(f, rec.point)
                    s = _certified_sign(abs(v), e)
                    if s == 1:
                        keep = False
                        break
                    if s is None:
                        exact = _try_exact_recovery(live[0], f, rec.point.coords)
                        if exact is not None and all(
                                g.eval_exact(exact) == 0 for g in live):
                            rec.point = ProjPointNum.from_exact(exact)
                        else:
                            ambiguous = True
            if keep:
                if not any(rec.point.same_point(s_) for s_ in sols):
                    sols.append(rec.point)
        if ambiguous:
            continue
        return sols
    raise PrecisionExhaustedError("quadratic system solver exhausted attempts")
