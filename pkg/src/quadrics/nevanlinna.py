"""Numerical value-distribution engine for entire curves.

Curves are tuples of exponential sums  sum_m c_m(xi) e^{Q_m(xi)}  with
exact Gaussian-rational polynomial data, so degeneracy questions (a
divisor containing the curve, linear relations among components) are
decided exactly while growth and counting data are computed numerically.

The characteristic is the sup-norm circle mean of log|f| normalized at
the disk center:

    T(f, r) = (1/2pi) int max_j log|f_j(r e^{i t})| dt  -  max_j log|f_j(0)|

which vanishes for constant curves, is exactly scale invariant, and
reproduces the classical closed forms (T([1:e^xi], r) = r/pi) without an
O(1) offset.  Zero counting uses integer winding numbers on adaptively
subdivided rectangles, then Newton polishing.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .linalg import nullspace, rank
from .polynomials import HomPoly
from .scalars import (GaussRat, Scalar, coerce_scalar, parse_scalar_string,
                      scalar_to_complex)
from .univariate import UniPoly


class QuadratureFailureError(ArithmeticError):
    pass


class DivisorContainsCurveError(ValueError):
    pass


class ZeroOnContourError(ArithmeticError):
    pass


class InsufficientSpanError(ValueError):
    pass


class DegenerateCurveError(ValueError):
    pass


class NotGeneralPositionError(ValueError):
    pass


class NotAMorphismError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Exponential sums
# ---------------------------------------------------------------------------

def _poly_key(p: UniPoly):
    return p.coeffs


class ExpSum:
    """Finite sum of c_m(xi) * exp(Q_m(xi)) with exact polynomial data."""

    __slots__ = ("terms", "_np_cache")

    def __init__(self, terms: Sequence[Tuple[UniPoly, UniPoly]]):
        combined: Dict[tuple, UniPoly] = {}
        order: List[tuple] = []
        for coeff, expo in terms:
            if coeff.is_zero:
                continue
            k = _poly_key(expo)
            if k in combined:
                combined[k] = combined[k] + coeff
            else:
                combined[k] = coeff
                order.append(k)
        self.terms = tuple(
            (combined[k], UniPoly(list(k))) for k in order if not combined[k].is_zero)
        self._np_cache = None

    @staticmethod
    def constant(c) -> "ExpSum":
        return ExpSum([(UniPoly([c]), UniPoly([]))])

    @staticmethod
    def exponential(expo_coeffs) -> "ExpSum":
        return ExpSum([(UniPoly([1]), UniPoly(expo_coeffs))])

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_nowhere_zero(self) -> bool:
        """True when the sum is a single nonzero-constant exponential."""
        return (len(self.terms) == 1 and self.terms[0][0].degree == 0)

    def __mul__(self, other: "ExpSum") -> "ExpSum":
        out = []
        for c1, e1 in self.terms:
            for c2, e2 in other.terms:
                out.append((c1 * c2, e1 + e2))
        return ExpSum(out)

    def __add__(self, other: "ExpSum") -> "ExpSum":
        return ExpSum(list(self.terms) + list(other.terms))

    def scale(self, c) -> "ExpSum":
        return ExpSum([(coeff * c, expo) for coeff, expo in self.terms])

    def __pow__(self, n: int) -> "ExpSum":
        out = ExpSum.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "ExpSum":
        out = []
        for coeff, expo in self.terms:
            out.append((coeff.derivative() + coeff * expo.derivative(), expo))
        return ExpSum(out)

    def max_exponent_degree(self) -> int:
        return max((e.degree for _, e in self.terms), default=-1)

    # -- numeric evaluation -------------------------------------------------

    def _np_data(self):
        if self._np_cache is None:
            coeffs = [np.array([complex(scalar_to_complex(c)) for c in reversed(cp.coeffs)]
                               or [0j]) for cp, _ in self.terms]
            expos = [np.array([complex(scalar_to_complex(c)) for c in reversed(ep.coeffs)]
                              or [0j]) for _, ep in self.terms]
            self._np_cache = (coeffs, expos)
        return self._np_cache

    def logeval(self, xi):
        """log|value| and phase on a 1-d array of points.

        The dominant real exponent is factored out, so the residual sum
        has moderate magnitude; its angle is the full phase modulo 2*pi.
        okmask is False where the value underflows to zero.
        """
        xi = np.atleast_1d(np.asarray(xi, dtype=complex))
        coeffs, expos = self._np_data()
        Q = np.stack([np.polyval(e, xi) for e in expos])
        C = np.stack([np.polyval(c, xi) for c in coeffs])
        M = np.max(Q.real, axis=0)
        h = np.sum(C * np.exp(Q - M), axis=0)
        absh = np.abs(h)
        ok = absh > 1e-280
        logabs = np.where(ok, M + np.log(np.maximum(absh, 1e-300)), -np.inf)
        phase = np.angle(h)
        return logabs, phase, ok

    def eval_one(self, xi: complex) -> complex:
        total = 0j
        for cp, ep in self.terms:
            q = complex(0)
            for c in reversed(ep.coeffs):
                q = q * xi + complex(scalar_to_complex(c))
            cv = complex(0)
            for c in reversed(cp.coeffs):
                cv = cv * xi + complex(scalar_to_complex(c))
            total += cv * cmath.exp(q)
        return total

    def logabs_grid(self, xi):
        """log|value| on an ndarray (phase-free, vectorized, stable)."""
        xi = np.asarray(xi, dtype=complex)
        coeffs, expos = self._np_data()
        Q = np.stack([np.polyval(e, xi) for e in expos])
        C = np.stack([np.polyval(c, xi) for c in coeffs])
        M = np.max(Q.real, axis=0)
        h = np.abs(np.sum(C * np.exp(Q - M), axis=0))
        return M + np.log(np.maximum(h, 1e-300))


def _exp_logeval_scalar(es: ExpSum, xi: complex) -> complex:
    """Complex log value at one point via dominant-exponent factoring."""
    best = None
    vals = []
    for cp, ep in es.terms:
        q = complex(0)
        for c in reversed(ep.coeffs):
            q = q * xi + complex(scalar_to_complex(c))
        cv = complex(0)
        for c in reversed(cp.coeffs):
            cv = cv * xi + complex(scalar_to_complex(c))
        vals.append((cv, q))
        if best is None or q.real > best:
            best = q.real
    h = sum(cv * cmath.exp(q - best) for cv, q in vals)
    if h == 0:
        return complex(-math.inf, 0.0)
    return complex(best + math.log(abs(h)), cmath.phase(h))


def _ratio_newton_step(g: ExpSum, gp: ExpSum, xi: complex) -> complex:
    """g(xi)/g'(xi) computed through log values for overflow safety."""
    lg = _exp_logeval_scalar(g, xi)
    lgp = _exp_logeval_scalar(gp, xi)
    if lg.real == -math.inf:
        return 0j
    d = lg - lgp
    if d.real > 200:
        raise ArithmeticError("derivative vanishes near the point")
    return cmath.exp(d)


# ---------------------------------------------------------------------------
# Entire curves
# ---------------------------------------------------------------------------

class ExpCurve:
    """Entire curve with exponential-sum components.

    The standard constructor takes exponent polynomials (one list of
    coefficients per component, index = power of xi), producing the curve
    [e^{P_0} : ... : e^{P_n}].  Components that are genuine sums support
    the degenerate test cases.
    """

    def __init__(self, components: Sequence[ExpSum], order_bound: Optional[int] = None):
        comps = list(components)
        if any(c.is_zero for c in comps):
            raise ValueError("zero component")
        if len(comps) < 2:
            raise ValueError("a curve needs at least two components")
        self.components = comps
        lam = max(c.max_exponent_degree() for c in comps)
        self.order_bound = order_bound if order_bound is not None else max(lam, 0)

    @staticmethod
    def from_exponents(exponents: Sequence[Sequence]) -> "ExpCurve":
        comps = [ExpSum.exponential([coerce_scalar(c) for c in ex]) for ex in exponents]
        return ExpCurve(comps)

    @staticmethod
    def from_json(obj) -> "ExpCurve":
        exps = []
        for row in obj["exponents"]:
            exps.append([parse_scalar_string(str(c)) for c in row])
        return ExpCurve.from_exponents(exps)

    @property
    def dim(self) -> int:
        return len(self.components) - 1

    def exponent_basis(self):
        keys = []
        for comp in self.components:
            for _, e in comp.terms:
                k = _poly_key(e)
                if k not in keys:
                    keys.append(k)
        return keys

    def component_matrix(self):
        """Coefficient matrix of components over the exponent basis.

        Entry (m, j) is the coefficient polynomial of basis exponent m in
        component j; only constant coefficient polynomials are supported
        for the exact degeneracy test.
        """
        keys = self.exponent_basis()
        M = []
        for k in keys:
            row = []
            for comp in self.components:
                val = Fraction(0)
                for c, e in comp.terms:
                    if _poly_key(e) == k:
                        if c.degree > 0:
                            return None
                        val = c.coeffs[0] if c.coeffs else Fraction(0)
                row.append(val)
            M.append(row)
        return M

    def is_linearly_degenerate(self) -> Optional[bool]:
        """Exact test for a vanishing linear combination of components."""
        M = self.component_matrix()
        if M is None:
            return None
        return len(nullspace(M)) > 0

    def compose(self, p: HomPoly) -> ExpSum:
        """The exponential sum P(f_0, ..., f_n); requires <= 3 components."""
        comps = self.components
        out = ExpSum([])
        for e, c in p.terms.items():
            t = ExpSum.constant(c)
            for i, k in enumerate(e):
                if k:
                    if i >= len(comps):
                        raise ValueError("divisor uses more variables than the curve has")
                    t = t * (comps[i] ** k)
            out = out + t
        return out

    def scale_by_common(self, q_coeffs) -> "ExpCurve":
        """Multiply every component by e^{Q}: the same projective curve."""
        q = ExpSum.exponential([coerce_scalar(c) for c in q_coeffs])
        return ExpCurve([c * q for c in self.components], self.order_bound)


# ---------------------------------------------------------------------------
# Characteristic function
# ---------------------------------------------------------------------------

def _curve_logmax_grid(curve: ExpCurve, r: float, thetas: np.ndarray) -> np.ndarray:
    xi = r * np.exp(1j * thetas)
    vals = np.stack([c.logabs_grid(xi) for c in curve.components])
    return np.max(vals, axis=0)


def _center_value(curve: ExpCurve) -> float:
    best = -math.inf
    for c in curve.components:
        v = c.eval_one(0j)
        if v != 0:
            best = max(best, math.log(abs(v)))
    if best == -math.inf:
        raise ValueError("all components vanish at the origin; not an entire curve")
    return best


def characteristic(curve: ExpCurve, r: float, tol: float = 1e-9
                   ) -> Tuple[float, float]:
    """Sup-norm characteristic T(f, r) with a quadrature error estimate.

    Composite-Simpson integration with interval doubling; the returned
    error combines the last refinement difference with a float rounding
    allowance.  Raises QuadratureFailureError when refinement stalls.
    """
    if r <= 0:
        raise ValueError("radius must be positive")
    center = _center_value(curve)
    n = 512
    prev = None
    last_diff = None
    for _ in range(12):
        thetas = np.linspace(0.0, 2 * math.pi, n + 1)
        vals = _curve_logmax_grid(curve, r, thetas)
        if not np.all(np.isfinite(vals)):
            # a component hits zero on a node exactly; nudge the grid
            thetas = thetas + math.pi / (7 * n)
            vals = _curve_logmax_grid(curve, r, thetas)
            if not np.all(np.isfinite(vals)):
                raise QuadratureFailureError("integrand unbounded on the circle")
        # composite Simpson on the uniform grid
        h = thetas[1] - thetas[0]
        integral = (h / 3) * (vals[0] + vals[-1]
                              + 4 * np.sum(vals[1:-1:2]) + 2 * np.sum(vals[2:-2:2]))
        value = integral / (2 * math.pi) - center
        if prev is not None:
            last_diff = abs(value - prev)
            if last_diff < max(tol, 1e-13 * max(1.0, abs(value))):
                err = last_diff + 1e-13 * max(1.0, abs(value)) * math.log2(n)
                return value, err
        prev = value
        n *= 2
    if last_diff is None or not math.isfinite(last_diff):
        raise QuadratureFailureError("quadrature did not converge")
    return prev, last_diff * 4


@dataclass
class GrowthSample:
    radii: List[float]
    values: List[float]
    errors: List[float]

    @staticmethod
    def compute(curve: ExpCurve, radii: Sequence[float]) -> "GrowthSample":
        rs = sorted(float(r) for r in radii)
        if rs and rs[0] < 1.0:
            raise ValueError("radii must be >= 1")
        vals, errs = [], []
        for r in rs:
            v, e = characteristic(curve, r)
            vals.append(v)
            errs.append(e)
        return GrowthSample(rs, vals, errs)


def order_estimate(samples: GrowthSample) -> Tuple[float, bool]:
    """Slope of log T against log r over the top decade.

    Returns (order, degenerate); degenerate means T never grew beyond
    noise, as for constant curves.
    """
    rs = samples.radii
    if len(rs) < 8 or rs[-1] / rs[0] < 99.0:
        raise InsufficientSpanError("need >= 8 radii spanning >= 2 decades")
    top = [(math.log(r), math.log(t))
           for r, t in zip(rs, samples.values) if r >= rs[-1] / 10 and t > 1e-9]
    if len(top) < 3:
        return 0.0, True
    xs = np.array([x for x, _ in top])
    ys = np.array([y for _, y in top])
    slope = float(np.polyfit(xs, ys, 1)[0])
    return slope, False


def ahlfors_limit(leading: Sequence, lam: int = 1) -> float:
    """Convex-hull boundary length of the leading coefficients, over 2*pi.

    A degenerate hull (all points collinear) counts the segment twice, so
    two distinct points give 2|a - b| / (2*pi).
    """
    if lam < 1:
        raise ValueError("order must be >= 1")
    pts = []
    for a in leading:
        z = complex(scalar_to_complex(coerce_scalar(a))) if not isinstance(a, complex) else a
        if not any(abs(z - w) < 1e-15 for w in pts):
            pts.append(z)
    if len(pts) <= 1:
        return 0.0
    if len(pts) == 2:
        return 2 * abs(pts[0] - pts[1]) / (2 * math.pi)
    arr = sorted((p.real, p.imag) for p in pts)

    def half(points):
        out = []
        for p in points:
            while len(out) >= 2 and ((out[-1][0] - out[-2][0]) * (p[1] - out[-2][1])
                                     - (out[-1][1] - out[-2][1]) * (p[0] - out[-2][0])) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(arr)
    upper = half(arr[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2:
        return 2 * math.dist(hull[0], hull[1]) / (2 * math.pi)
    per = sum(math.dist(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull)))
    return per / (2 * math.pi)


# ---------------------------------------------------------------------------
# Argument-principle zero counting
# ---------------------------------------------------------------------------

def _wrap_angle(d):
    return (d + math.pi) % (2 * math.pi) - math.pi


def _rect_boundary(x0, x1, y0, y1, per_side):
    xs = np.linspace(x0, x1, per_side, endpoint=False)
    ys = np.linspace(y0, y1, per_side, endpoint=False)
    bottom = xs + 1j * y0
    right = x1 + 1j * ys
    top = np.linspace(x1, x0, per_side, endpoint=False) + 1j * y1
    left = x0 + 1j * np.linspace(y1, y0, per_side, endpoint=False)
    return np.concatenate([bottom, right, top, left, [x0 + 1j * y0]])


class _ContourData:
    """Boundary samples with log values and local logarithmic speed."""

    __slots__ = ("g", "gp", "pts", "logabs", "phase", "speed")

    def __init__(self, g: ExpSum, gp: ExpSum, pts):
        self.g = g
        self.gp = gp
        self.pts = pts
        self.logabs, self.phase, self.speed = self._eval(pts)

    def _eval(self, pts):
        la, ph, ok = self.g.logeval(pts)
        if not np.all(ok):
            raise ZeroOnContourError("value underflow on contour")
        lap, _, okp = self.gp.logeval(pts)
        # |g'/g|: the a-priori bound on the phase speed along the contour
        speed = np.where(okp, np.exp(np.minimum(lap - la, 700.0)), 0.0)
        return la, ph, speed

    def insert(self, idx, mids):
        ml, mphase, mspeed = self._eval(mids)
        n = self.pts.size + mids.size
        insert_at = idx + 1 + np.arange(mids.size)
        mask = np.ones(n, dtype=bool)
        mask[insert_at] = False

        def put(old, new_vals, dtype=float):
            arr = np.empty(n, dtype=dtype)
            arr[mask] = old
            arr[insert_at] = new_vals
            return arr

        self.pts = put(self.pts, mids, complex)
        self.logabs = put(self.logabs, ml)
        self.phase = put(self.phase, mphase)
        self.speed = put(self.speed, mspeed)


def _winding_rectangle(g: ExpSum, x0, x1, y0, y1,
                       max_refine=60) -> Tuple[int, float]:
    """Integer winding of g around the rectangle boundary.

    Phase tracking with three refinement criteria per segment: the phase
    jump, the modulus jump, and the segment length against the local
    logarithmic derivative bound |g'/g| (which prevents a full unnoticed
    phase turn on stretches of constant modulus).
    """
    per_side = 24
    data = _ContourData(g, g.derivative(), _rect_boundary(x0, x1, y0, y1, per_side))
    for it in range(max_refine):
        dphi = _wrap_angle(np.diff(data.phase))
        dlog = np.abs(np.diff(data.logabs))
        seg = np.abs(np.diff(data.pts))
        spd = np.maximum(data.speed[:-1], data.speed[1:])
        bad = (np.abs(dphi) > 0.8) | (dlog > 0.7) | (seg * spd > 0.6)
        if not np.any(bad):
            break
        if data.pts.size > 4_000_000:
            raise ZeroOnContourError("contour refinement exploded")
        idx = np.nonzero(bad)[0]
        mids = (data.pts[idx] + data.pts[idx + 1]) / 2
        data.insert(idx, mids)
    else:
        raise ZeroOnContourError("phase tracking did not settle")
    total = float(np.sum(_wrap_angle(np.diff(data.phase))))
    w = round(total / (2 * math.pi))
    residual = abs(total - 2 * math.pi * w)
    if residual > 1e-5:
        raise ZeroOnContourError(f"winding residual {residual} too large")
    return w, residual


def _winding_with_perturbation(g, x0, x1, y0, y1):
    side = max(x1 - x0, y1 - y0)
    eps = 0.0
    for k in range(8):
        try:
            return _winding_rectangle(g, x0 - eps, x1 + eps, y0 - eps, y1 + eps), eps
        except ZeroOnContourError:
            eps = side * (2.0 ** (-9 + k))
    raise ZeroOnContourError("persistent zero on contour after perturbation")


def _polish_zero(g: ExpSum, gp: ExpSum, z0: complex, tol: float) -> complex:
    z = z0
    for _ in range(60):
        try:
            step = _ratio_newton_step(g, gp, z)
        except ArithmeticError:
            return z
        z = z - step
        if abs(step) < tol:
            break
    return z


@dataclass
class CountedZero:
    position: complex
    multiplicity: int
    radius: float  # localization radius


class _ZeroSearch:
    """Quadtree zero search with winding conservation.

    Cut lines are shifted away from zeros when a child contour fails or
    the children's windings do not add up to the parent's, so every zero
    lands in exactly one cell.
    """

    def __init__(self, g: ExpSum, tol: float):
        self.g = g
        self.gp = g.derivative()
        self.tol = tol
        self.zeros: List[CountedZero] = []
        self.max_residual = 0.0

    def _winding(self, x0, x1, y0, y1):
        w, residual = _winding_rectangle(self.g, x0, x1, y0, y1)
        self.max_residual = max(self.max_residual, residual)
        return w

    def run(self, x0, x1, y0, y1):
        (w, residual), eps = _winding_with_perturbation(self.g, x0, x1, y0, y1)
        self.max_residual = max(self.max_residual, residual)
        self._descend(x0 - eps, x1 + eps, y0 - eps, y1 + eps, w, 0)

    def _descend(self, x0, x1, y0, y1, w, depth):
        if w == 0:
            return
        diam = max(x1 - x0, y1 - y0)
        cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
        if w == 1:
            z = _polish_zero(self.g, self.gp, complex(cx, cy), self.tol * 1e-3)
            inside = (x0 - 1e-12 <= z.real <= x1 + 1e-12
                      and y0 - 1e-12 <= z.imag <= y1 + 1e-12)
            if inside:
                self.zeros.append(CountedZero(z, 1, max(self.tol, 0.0)))
                return
            # polish escaped the cell: fall through to subdivision
        if diam < self.tol or depth > 60:
            self.zeros.append(CountedZero(complex(cx, cy), w, diam))
            return
        for shift in (0.0, 1 / 16, -1 / 16, 1 / 8, -1 / 8, 3 / 16, -3 / 16):
            xm = cx + shift * (x1 - x0)
            ym = cy + shift * (y1 - y0)
            boxes = [(x0, xm, y0, ym), (xm, x1, y0, ym),
                     (x0, xm, ym, y1), (xm, x1, ym, y1)]
            try:
                ws = [self._winding(*b) for b in boxes]
            except ZeroOnContourError:
                continue
            if sum(ws) != w:
                continue
            for b, wb in zip(boxes, ws):
                self._descend(*b, wb, depth + 1)
            return
        # a multiple zero can sink the contour values below the floating
        # point cancellation floor before the cell reaches the isolation
        # tolerance; the parent winding (from a healthy contour) is the
        # multiplicity, the cell is the localization
        if w > 1 and diam < 1e-6 * max(1.0, math.hypot(cx, cy)):
            self.zeros.append(CountedZero(complex(cx, cy), w, diam))
            return
        raise ZeroOnContourError(
            f"could not split cell around ({cx}, {cy}) cleanly")


def locate_zeros_in_box(g: ExpSum, half_side: float,
                        isolate_tol: Optional[float] = None) -> Tuple[List[CountedZero], float]:
    """All zeros of g in the centered square, by quadtree winding.

    Returns (zeros, max winding residual).  Single-term sums reduce to
    the polynomial coefficient's roots.
    """
    if g.is_zero:
        raise ValueError("identically zero function")
    if len(g.terms) == 1:
        coeff, _ = g.terms[0]
        out = []
        if coeff.degree >= 1:
            from .univariate import roots_with_multiplicity
            for ball in roots_with_multiplicity(coeff, 128):
                z = complex(ball.value)
                if max(abs(z.real), abs(z.imag)) <= half_side:
                    out.append(CountedZero(z, ball.multiplicity, float(ball.radius)))
        return out, 0.0
    tol = isolate_tol if isolate_tol is not None else max(half_side * 1e-10, 1e-13)
    search = _ZeroSearch(g, tol)
    search.run(-half_side, half_side, -half_side, half_side)
    return search.zeros, search.max_residual


R0 = 1.0


@dataclass
class CountingSample:
    divisor: HomPoly
    degree: int
    radius: float
    zeros: List[CountedZero]
    winding_residual: float = 0.0

    def n_at(self, t: float) -> int:
        return sum(z.multiplicity for z in self.zeros if abs(z.position) <= t)

    def N_at(self, r: float) -> float:
        if r < R0:
            raise ValueError("radius below the base radius")
        total = self.n_at(R0) * math.log(r / R0)
        for z in self.zeros:
            m = abs(z.position)
            if R0 < m <= r:
                total += z.multiplicity * math.log(r / m)
        return total

    @property
    def N(self) -> float:
        return self.N_at(self.radius)

    def to_json(self):
        return {
            "divisor": str(self.divisor),
            "degree": self.degree,
            "radius": self.radius,
            "zeros": [{"position": [z.position.real, z.position.imag],
                       "multiplicity": z.multiplicity,
                       "radius": z.radius} for z in sorted(
                           self.zeros, key=lambda w: (abs(w.position), w.position.real))],
            "N": self.N,
            "winding_residual": self.winding_residual,
        }


def counting(curve: ExpCurve, divisor: HomPoly, r: float) -> CountingSample:
    """Zeros of the divisor composed with the curve, inside |xi| <= r.

    The zero search runs on the circumscribing square and the disk filter
    keeps moduli <= r; exact containment of the curve in the divisor is
    detected symbolically first.
    """
    if r < R0:
        raise ValueError("radius below the base radius")
    g = curve.compose(divisor)
    if g.is_zero:
        raise DivisorContainsCurveError(
            f"the curve lies inside the divisor {divisor}")
    half = r * (1 + 1.0 / 64) + 1.0 / 32
    box_zeros, residual = locate_zeros_in_box(g, half)
    inside = [z for z in box_zeros if abs(z.position) <= r]
    return CountingSample(divisor, divisor.degree, r, inside, residual)


# ---------------------------------------------------------------------------
# Main theorems, functoriality, defects
# ---------------------------------------------------------------------------

def hyperplanes_general_position(forms: Sequence[HomPoly], dim: int) -> bool:
    """Any dim+1 of the linear forms must be linearly independent."""
    import itertools as it
    vecs = []
    for f in forms:
        if f.degree != 1:
            raise ValueError("hyperplanes must be linear forms")
        vecs.append([f.coeff((1, 0, 0)), f.coeff((0, 1, 0)), f.coeff((0, 0, 1))][:dim + 1])
    for sub in it.combinations(vecs, dim + 1):
        if rank([list(v) for v in sub]) < dim + 1:
            return False
    return True


@dataclass
class MainTheoremReport:
    kind: str
    radii: List[float]
    T: List[float]
    N_sums: List[float]
    slack: List[float]          # RHS - LHS per radius
    fitted_C: float             # max deficit / log r
    fitted_C_two_sided: float   # max |T - sum N| / log r (second kind)
    violating_fraction: float
    passed: bool

    def to_json(self):
        return {
            "kind": self.kind,
            "series": [{"r": r, "T": t, "N_sum": n, "slack": s}
                       for r, t, n, s in zip(self.radii, self.T, self.N_sums, self.slack)],
            "fitted_C": self.fitted_C,
            "fitted_C_two_sided": self.fitted_C_two_sided,
            "violating_fraction": self.violating_fraction,
            "passed": self.passed,
        }


def main_theorem_check(curve: ExpCurve, divisors: Sequence[HomPoly],
                       kind: str, radii: Sequence[float],
                       c_max: float = 10.0,
                       exceptional_fraction: float = 0.05) -> MainTheoremReport:
    """Check the growth inequality of the first or second kind.

    first:  N(D, r) <= deg(D) T(r) + O(1) for each divisor.
    second: (q - n - 1) T(r) <= sum_j N(H_j, r) + O(log r) for hyperplanes
            in general position and a linearly nondegenerate curve.

    The verdict allows a configurable exceptional fraction of radii and a
    fitted log-coefficient cap.
    """
    rs = sorted(float(r) for r in radii)
    if not rs:
        raise ValueError("no radii")
    if kind not in ("first", "second"):
        raise ValueError("kind must be 'first' or 'second'")
    n = curve.dim
    if kind == "second":
        deg = curve.is_linearly_degenerate()
        if deg is None or deg:
            raise DegenerateCurveError(
                "curve components satisfy a linear relation")
        if not hyperplanes_general_position(divisors, n):
            raise NotGeneralPositionError("hyperplanes not in general position")

    samples = [counting(curve, d, rs[-1]) for d in divisors]
    Ts = [characteristic(curve, r)[0] for r in rs]
    N_sums = []
    slack = []
    for r, T in zip(rs, Ts):
        if kind == "first":
            # slack per divisor; keep the minimum over divisors
            s_min = None
            tot = 0.0
            for d, smp in zip(divisors, samples):
                Nv = smp.N_at(r)
                tot += Nv
                s = d.degree * T - Nv
                s_min = s if s_min is None else min(s_min, s)
            N_sums.append(tot)
            slack.append(s_min)
        else:
            tot = sum(smp.N_at(r) for smp in samples)
            q = len(divisors)
            N_sums.append(tot)
            slack.append(tot - (q - n - 1) * T)
    deficits = [max(0.0, -s) / math.log(r) for s, r in zip(slack, rs) if r > math.e]
    fitted_C = max(deficits) if deficits else 0.0
    if kind == "second":
        two_sided = [abs((len(divisors) - n - 1) * t - nn) / math.log(r)
                     for t, nn, r in zip(Ts, N_sums, rs) if r > math.e]
        fitted_two = max(two_sided) if two_sided else 0.0
    else:
        fitted_two = fitted_C
    violations = sum(1 for s, r in zip(slack, rs)
                     if r > math.e and s < -c_max * math.log(r))
    frac = violations / max(1, len(rs))
    passed = frac <= exceptional_fraction
    return MainTheoremReport(kind, rs, Ts, N_sums, slack, fitted_C, fitted_two,
                             frac, passed)


@dataclass
class FunctorialityReport:
    radii: List[float]
    differences: List[float]
    variation: float
    passed: bool

    def to_json(self):
        return {
            "series": [{"r": r, "difference": d}
                       for r, d in zip(self.radii, self.differences)],
            "variation": self.variation,
            "passed": self.passed,
        }


def functoriality_check(curve: ExpCurve, morphism: Sequence[HomPoly],
                        radii: Sequence[float],
                        tolerance: float = 0.5) -> FunctorialityReport:
    """T(R o f, r) - p T(f, r) must stay within a bounded band.

    The morphism components must have one common degree p and no common
    zero (checked exactly for two components via the resultant, via the
    certified search for three).
    """
    degs = {m.degree for m in morphism}
    if len(degs) != 1:
        raise NotAMorphismError("components of different degrees")
    p = degs.pop()
    if curve.dim == 1:
        # domain is the projective line: components are binary forms and a
        # common zero is a nontrivial common factor
        from .univariate import binary_to_unipoly, uni_gcd, UniPoly
        g = None
        hi = lo = None
        for m in morphism:
            if m.degree_in(2) > 0:
                raise ValueError("morphism components on a line must avoid z2")
            pm, plo, phi = binary_to_unipoly(m, 0, 1)
            g = pm if g is None else uni_gcd(g, pm)
            hi = phi if hi is None else min(hi, phi)
            lo = plo if lo is None else min(lo, plo)
        if (g is not None and g.degree > 0) or (hi and hi > 0) or (lo and lo > 0):
            raise NotAMorphismError("components share a zero on the line")
    else:
        if len(morphism) == 3:
            from .arrangements import composite_morphism
            md = composite_morphism(morphism[0], morphism[1], morphism[2], (1, 1, 1))
            if not md.is_morphism:
                raise NotAMorphismError("components share a common zero")
        else:
            from .arrangements import intersection_points
            from .polynomials import gaussian_extension_eval
            recs = intersection_points(morphism[0], morphism[1])
            for rec in recs:
                vals = []
                for m in morphism[2:]:
                    if rec.point.is_exact():
                        vals.append(m.eval_exact(rec.point.exact) == 0)
                    else:
                        v, e = gaussian_extension_eval(m, rec.point)
                        vals.append(not (abs(v) > (e or 0)))
                if all(vals):
                    raise NotAMorphismError("components share a common zero")
    image = ExpCurve([curve.compose(m) for m in morphism])
    rs = sorted(float(r) for r in radii)
    diffs = []
    for r in rs:
        t_img = characteristic(image, r)[0]
        t_base = characteristic(curve, r)[0]
        diffs.append(t_img - p * t_base)
    top = [d for r, d in zip(rs, diffs) if r >= rs[-1] / 10]
    variation = (max(top) - min(top)) if top else 0.0
    return FunctorialityReport(rs, diffs, variation, variation < tolerance)


@dataclass
class DefectEstimate:
    divisor_degree: int
    value: float
    window_radii: List[float]
    series: List[Tuple[float, float]]
    exact_one: bool = False

    def to_json(self):
        return {
            "divisor_degree": self.divisor_degree,
            "defect": self.value,
            "series": [{"r": r, "value": v} for r, v in self.series],
            "window": self.window_radii,
            "exact_one": self.exact_one,
        }


def defect_estimate(curve: ExpCurve, divisor: HomPoly,
                    radii: Sequence[float]) -> DefectEstimate:
    """liminf proxy of 1 - N/(d T) over a trailing radius window."""
    rs = sorted(float(r) for r in radii)
    sample = counting(curve, divisor, rs[-1])
    d = divisor.degree
    series = []
    for r in rs:
        T = characteristic(curve, r)[0]
        if T <= 1e-12:
            continue
        series.append((r, 1.0 - sample.N_at(r) / (d * T)))
    if not sample.zeros:
        window = [r for r, _ in series]
        return DefectEstimate(d, 1.0, window, series, exact_one=True)
    cutoff = rs[-1] / math.sqrt(10)
    window_vals = [(r, v) for r, v in series if r >= cutoff]
    value = min(v for _, v in window_vals) if window_vals else min(v for _, v in series)
    return DefectEstimate(d, value, [r for r, _ in window_vals], series)


# ---------------------------------------------------------------------------
# The three-quadrics growth certificate
# ---------------------------------------------------------------------------

@dataclass
class ThreeQuadricsCertificate:
    alphas: tuple
    X: float
    lhs: float
    rhs: float
    contradiction: bool
    quadrature_checks: List[dict] = field(default_factory=list)

    def to_json(self):
        return {
            "alphas": [str(a) for a in self.alphas],
            "X": self.X,
            "lhs_9X": self.lhs,
            "rhs_8X": self.rhs,
            "contradiction": self.contradiction,
            "quadrature_checks": self.quadrature_checks,
        }


def three_quadrics_certificate(alphas: Sequence, quadrature_check: bool = False,
                               r_check: float = 20.0) -> ThreeQuadricsCertificate:
    """Growth-rate contradiction for three leading quadratic coefficients.

    X is the pairwise-distance sum over 2*pi; the derived inequality
    compares 9X against 8X, so any X > 0 is a contradiction and the only
    escape is all three coefficients equal.  With quadrature_check the
    pairwise and triple characteristic limits are validated numerically
    against the convex-hull values.
    """
    a = [complex(scalar_to_complex(coerce_scalar(x))) if not isinstance(x, complex)
         else x for x in alphas]
    if len(a) != 3:
        raise ValueError("three coefficients expected")
    X = (abs(a[0] - a[1]) + abs(a[0] - a[2]) + abs(a[1] - a[2])) / (2 * math.pi)
    lhs = 9 * X
    rhs = 8 * X
    contradiction = X > 1e-14 * max(1.0, max(abs(x) for x in a))
    checks: List[dict] = []
    if quadrature_check:
        zero = Fraction(0)
        for i, j in ((0, 1), (0, 2), (1, 2)):
            diff = a[j] - a[i]
            target = 2 * abs(diff) / (2 * math.pi)
            curve = ExpCurve.from_exponents([[zero], [zero, zero, _to_scalar(diff)]])
            T, _ = characteristic(curve, r_check)
            got = T / r_check ** 2
            checks.append({
                "pair": [i, j],
                "limit_expected": target,
                "limit_quadrature": got,
                "relative_error": abs(got - target) / target if target else abs(got),
            })
        curve3 = ExpCurve.from_exponents(
            [[zero, zero, _to_scalar(x)] for x in a])
        T3, _ = characteristic(curve3, r_check)
        checks.append({
            "pair": [0, 1, 2],
            "limit_expected": X,
            "limit_quadrature": T3 / r_check ** 2,
            "relative_error": (abs(T3 / r_check ** 2 - X) / X) if X else abs(T3 / r_check ** 2),
        })
    return ThreeQuadricsCertificate(tuple(alphas), X, lhs, rhs, contradiction, checks)


def _to_scalar(z: complex):
    return coerce_scalar(GaussRat(Fraction(z.real).limit_denominator(10 ** 12),
                                  Fraction(z.imag).limit_denominator(10 ** 12)))
