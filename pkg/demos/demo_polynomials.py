"""Walk through the exact polynomial layer: parsing, resultants, and the
matrix view of quadrics."""

from quadrics import parse_poly, quadric_form, resultant

print("== Parsing and printing ==")
p = parse_poly("z0^2 - z1*z2")
q = parse_poly("z1^2 + z0*z1 + z0*z2 + (1/25)*z1*z2")
print("p =", p)
print("q =", q, " (note the exact 1/25 coefficient)")
print("round trip:", parse_poly(str(q)) == q)

print("\n== Sylvester resultants ==")
r = resultant(p, parse_poly("z1^2 - z0*z2"), 0)
print("Res_z0(z0^2 - z1*z2, z1^2 - z0*z2) =", r)
print("factors as z1 * (z1^3 - z2^3), so the two conics meet over")
print("[z1:z2] in {[0:1]} and the cube roots of unity directions.")

print("\n== Quadrics as symmetric matrices ==")
for text in ("z0^2", "z1*z2", "z0^2 - z1*z2"):
    f = parse_poly(text)
    qf = quadric_form(f)
    print(f"{text:15s} rank {qf.rank}  det {qf.det}")
print("rank 1 means a double line; rank 3 a smooth conic.")

print("\n== Square detection ==")
sq = parse_poly("9*z0^2 + 12*z0*z1 + 4*z1^2")
c, line = sq.as_square_of_linear()
print(f"{sq} = {c} * ({line})^2")
