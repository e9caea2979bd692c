import random
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadrics.polynomials import (DegenerateLeadingFormError, HomPoly,
                                  NotHomogeneousError, PolySyntaxError,
                                  ProjPointNum, ZeroPolynomialError,
                                  gaussian_extension_eval, parse_poly,
                                  quadric_form, resultant)
from quadrics.scalars import GaussRat

z0, z1, z2 = (HomPoly.variable(i) for i in range(3))


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def test_parse_simple_conic():
    p = parse_poly("z0^2 - z1*z2")
    assert p.terms == {(2, 0, 0): Fraction(1), (0, 1, 1): Fraction(-1)}
    assert p.degree == 2


def test_parse_example_quadric():
    p = parse_poly("z1^2 + z0*z1 + z0*z2 + (1/25)*z1*z2")
    assert p.coeff((0, 2, 0)) == 1
    assert p.coeff((1, 1, 0)) == 1
    assert p.coeff((1, 0, 1)) == 1
    assert p.coeff((0, 1, 1)) == Fraction(1, 25)
    assert p.degree == 2


def test_parse_rejects_inhomogeneous():
    with pytest.raises(NotHomogeneousError) as exc:
        parse_poly("z0^2 + z1")
    assert exc.value.degrees == [1, 2]


def test_parse_syntax_error_position():
    with pytest.raises(PolySyntaxError):
        parse_poly("z0^2 + + z1^2")
    with pytest.raises(PolySyntaxError):
        parse_poly("z3")
    with pytest.raises(PolySyntaxError):
        parse_poly("z0^2 )")


def test_parse_negative_rational_literal():
    p = parse_poly("(-3/4)*z0*z1 + z2^2")
    assert p.coeff((1, 1, 0)) == Fraction(-3, 4)


def test_parse_of_printed_form_is_identity():
    p = parse_poly("2*z0^2 - (1/3)*z1*z2 + 7*z0*z2")
    assert parse_poly(str(p)) == p


@st.composite
def homogeneous_polys(draw):
    deg = draw(st.integers(min_value=1, max_value=3))
    exps = [e for e in _exponents(deg)]
    terms = {}
    for e in draw(st.sets(st.sampled_from(exps), min_size=1, max_size=5)):
        num = draw(st.integers(min_value=-40, max_value=40))
        den = draw(st.integers(min_value=1, max_value=12))
        if num:
            terms[e] = Fraction(num, den)
    return HomPoly(terms)


def _exponents(d):
    return [(i, j, d - i - j) for i in range(d + 1) for j in range(d + 1 - i)]


@given(homogeneous_polys())
@settings(max_examples=60, deadline=None)
def test_print_parse_roundtrip(p):
    if p.is_zero:
        assert str(p) == "0"
        return
    assert parse_poly(str(p)).terms == p.terms


# ---------------------------------------------------------------------------
# Resultants
# ---------------------------------------------------------------------------

def test_resultant_derived_example():
    p = parse_poly("z0^2 - z1*z2")
    q = parse_poly("z1^2 - z0*z2")
    r = resultant(p, q, 0)
    # hand expansion of the 3x3 Sylvester determinant
    assert r == parse_poly("z1^4 - z1*z2^3")


def test_resultant_matches_independent_implementation():
    import sympy

    x, y, z = sympy.symbols("x y z")
    rng = random.Random(5)
    for _ in range(10):
        pt = {e: rng.randint(-5, 5) for e in _exponents(2)}
        qt = {e: rng.randint(-5, 5) for e in _exponents(2)}
        p = HomPoly({e: c for e, c in pt.items() if c})
        q = HomPoly({e: c for e, c in qt.items() if c})
        if p.degree_in(0) < 2 or q.degree_in(0) < 2:
            continue
        mine = resultant(p, q, 0)
        sp = sum(c * x ** e[0] * y ** e[1] * z ** e[2] for e, c in p.terms.items())
        sq = sum(c * x ** e[0] * y ** e[1] * z ** e[2] for e, c in q.terms.items())
        theirs = sympy.expand(sympy.resultant(sp, sq, x))
        mine_sympy = sum(c * y ** e[1] * z ** e[2] for e, c in mine.terms.items())
        assert sympy.expand(mine_sympy - theirs) == 0


def test_resultant_degenerate_leading_form():
    with pytest.raises(DegenerateLeadingFormError):
        resultant(parse_poly("z0"), parse_poly("z1"), 2)


def test_resultant_common_factor_gives_zero():
    r = resultant(parse_poly("z0^2"), parse_poly("z0^2"), 0)
    assert r.is_zero


def test_resultant_zero_input():
    with pytest.raises(ZeroPolynomialError):
        resultant(HomPoly.zero(), parse_poly("z0"), 0)


def test_resultant_antisymmetry_and_common_root_equivalence():
    """res(p,q) = +/- res(q,p); vanishing at a projective root equals the
    existence of a common zero above it (brute-force root matching)."""
    rng = random.Random(11)
    for _ in range(12):
        # quadrics through a known common point have vanishing resultant there
        pt = (rng.randint(1, 5), rng.randint(1, 5), rng.randint(1, 5))
        p = _random_quadric_through(rng, pt)
        q = _random_quadric_through(rng, pt)
        if p.degree_in(0) < 2 or q.degree_in(0) < 2:
            continue
        rpq = resultant(p, q, 0)
        rqp = resultant(q, p, 0)
        assert rpq == rqp or rpq == -rqp
        assert rpq.eval_exact((0, pt[1], pt[2])) == 0
        # a generic direction with no common root gives a nonzero value,
        # confirmed by brute-force common-root search at high precision
        beta, gamma = 3, 7
        val = rpq.eval_exact((0, beta, gamma))
        shared = _brute_force_common_roots(p, q, beta, gamma)
        assert (val == 0) == shared


def _random_quadric_through(rng, pt):
    while True:
        terms = {e: rng.randint(-5, 5) for e in _exponents(2)}
        p = HomPoly({e: c for e, c in terms.items() if c})
        if p.is_zero or p.degree != 2:
            continue
        v = p.eval_exact(pt)
        # adjust the z0^2 coefficient to force the point onto the curve
        c = p.coeff((2, 0, 0)) - Fraction(v) / (pt[0] ** 2)
        q = HomPoly({**p.terms, (2, 0, 0): c})
        if q.degree == 2 and q.degree_in(0) == 2:
            return q


def _brute_force_common_roots(p, q, beta, gamma, prec=200):
    with mp.workprec(prec):
        pc = [f.eval_mpc((0, beta, gamma)) for f in p.coeffs_in(0)]
        qc = [f.eval_mpc((0, beta, gamma)) for f in q.coeffs_in(0)]
        rp = mp.polyroots([c for c in reversed(pc)], maxsteps=100, extraprec=prec)
        rq = mp.polyroots([c for c in reversed(qc)], maxsteps=100, extraprec=prec)
        return any(abs(a - b) < mp.mpf(10) ** (-20) for a in rp for b in rq)


# ---------------------------------------------------------------------------
# Quadric forms
# ---------------------------------------------------------------------------

def test_quadric_form_double_line():
    qf = quadric_form(parse_poly("z0^2"))
    assert qf.rank == 1
    assert qf.matrix[0][0] == 1 and qf.matrix[1][1] == 0


def test_quadric_form_smooth_conic():
    qf = quadric_form(parse_poly("z0^2 - z1*z2"))
    assert qf.rank == 3
    assert qf.det == Fraction(-1, 4)


def test_quadric_form_rank_two():
    assert quadric_form(parse_poly("z1*z2")).rank == 2


def test_quadric_form_wrong_degree():
    from quadrics.polynomials import WrongDegreeError
    with pytest.raises(WrongDegreeError):
        quadric_form(parse_poly("z0"))


def test_quadric_form_reconstructs_polynomial():
    p = parse_poly("3*z0^2 - 2*z0*z1 + 5*z1*z2 - z2^2")
    assert quadric_form(p).poly() == p


@given(st.integers(min_value=-6, max_value=6), st.integers(min_value=-6, max_value=6),
       st.integers(min_value=-6, max_value=6))
@settings(max_examples=40, deadline=None)
def test_rank_invariant_under_unimodular_substitution(a, b, c):
    p = parse_poly("z0^2 - z1*z2 + 2*z0*z2")
    U = ((1, a, b), (0, 1, c), (0, 0, 1))
    args = [HomPoly.linear_form(row) for row in U]
    q = p.compose(args)
    assert quadric_form(q).rank == quadric_form(p).rank


def test_rank_one_iff_perfect_square():
    rng = random.Random(3)
    for _ in range(25):
        l = HomPoly.linear_form([rng.randint(-4, 4) for _ in range(3)])
        if l.is_zero:
            continue
        sq = l * l
        got = sq.as_square_of_linear()
        assert got is not None
        cc, ll = got
        assert (ll * ll).scale(cc) == sq
    # a rank-2 form is not a square
    assert parse_poly("z1*z2").as_square_of_linear() is None


# ---------------------------------------------------------------------------
# Certified evaluation
# ---------------------------------------------------------------------------

def test_eval_exact_point_on_conic():
    p = parse_poly("z0^2 - z1*z2")
    v, err = gaussian_extension_eval(p, (0, 0, 1))
    assert v == 0 and err == 0
    v, err = gaussian_extension_eval(p, (1, 1, 1))
    assert v == 0 and err == 0


def test_eval_example_quadric_at_coordinate_point(example_net):
    _, _, q2 = example_net
    v, err = gaussian_extension_eval(q2, (1, 0, 0))
    assert v == 0 and err == 0


def test_eval_numeric_point_with_radius():
    p = parse_poly("z0^2 - z1*z2")
    pt = ProjPointNum([mp.mpf("0.5"), mp.mpf("0.25"), mp.mpf(1)], radius=mp.mpf("1e-30"))
    v, err = gaussian_extension_eval(p, pt)
    assert err > 0
    assert abs(v) <= mp.mpf("1e-6")  # the point is exactly on the curve

    from quadrics.polynomials import PrecisionExhaustedError
    with pytest.raises(PrecisionExhaustedError):
        gaussian_extension_eval(p, pt, target_width=mp.mpf("1e-60"))


def test_zero_polynomial_degree_tag():
    assert HomPoly.zero().degree == -1
    assert (parse_poly("z0") - parse_poly("z0")).degree == -1


def test_gaussian_flag_parsing_and_arithmetic():
    p = parse_poly("z0^2 - i*z1*z2", gaussian=True)
    assert p.coeff((0, 1, 1)) == GaussRat(0, -1)
    with pytest.raises(PolySyntaxError):
        parse_poly("z0^2 - i*z1*z2")  # 'i' needs the flag
    q = parse_poly("z0^2 + z1^2", gaussian=True)
    got = q.as_square_of_linear()
    assert got is None  # rank 2: splits into two lines, not a square


def test_intersection_over_gaussian_rationals():
    from quadrics.arrangements import intersection_points
    a = parse_poly("z0^2 + z1^2")
    b = parse_poly("z0*z2 - z1^2")
    recs = intersection_points(a, b)
    assert sum(r.multiplicity for r in recs) == 4
    exact = {tuple(r.point.exact) for r in recs if r.point.is_exact()}
    assert (Fraction(1), GaussRat(0, -1), Fraction(-1)) in exact or \
           (Fraction(1), GaussRat(0, 1), Fraction(-1)) in exact
