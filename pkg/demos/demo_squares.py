"""Square combinations of quadric nets: the sign-product polynomials, the
net solver, the adjugate-reduced system, and the built-in worked example."""

from fractions import Fraction

from quadrics import (b4_solve, degeneracy_curve, example_verify, expand_S,
                      generate_R, parse_poly, square_combination)

print("== Sign-product elimination polynomials ==")
for j in (1, 2, 3):
    sp = generate_R(j)
    print(f"R_{j} (degree {sp.degree}, {len(sp.poly.terms)} terms)")
print("R_2 =", generate_R(2).poly)

print("\n== The quartic S(x,y,z) and its tell-tale coefficients ==")
S = expand_S(1, 1, 1)
print("S(1,1,1) =", S)

print("\n== Square combinations over a net ==")
q0 = parse_poly("z0^2")
q1 = parse_poly("z1^2 + z0*z1 + z0*z2 + (1/25)*z1*z2")
q2 = parse_poly("z2^2 + 50*z0*z1 - 10*z0*z2 + 9*z1*z2")
for s in square_combination(q0, q1, q2):
    print(f"  {s.coefficients}: combination = {s.root_scale} * ({s.root_form})^2")

print("\n== The same solution through the adjugate-reduced system ==")
sols = b4_solve((1, 0, 0), [[0, 1, 0], [0, 0, 1]],
                [[1, 1, Fraction(1, 25)], [50, -10, 9]])
for r in sols:
    tag = " (zero coordinate)" if r.has_zero_coordinate else ""
    print(f"  point {r.point}{tag}")

print("\n== Degeneracy curve trapping a hypothetical entire curve ==")
dc = degeneracy_curve((1, 1, 1, 1), (1, 1, 1),
                      (parse_poly("z0^2"), parse_poly("z1^2"), parse_poly("z2^2")))
print(f"case {dc.case}: degree {dc.z_degree} in z, degree {dc.q_degree} in the quadrics,")
print(f"{len(dc.poly.terms)} terms, identically zero: {dc.is_identically_zero}")

print("\n== End-to-end worked example ==")
rep = example_verify()
for key in ("square_identity_exact", "item1_no_triple_point", "item2_no_tangency",
            "item3_tangent_incidence", "item4_tangent_tangency",
            "item5_only_trivial", "passed"):
    print(f"  {key}: {rep[key]}")
