"""The growth-rate contradiction behind hyperbolicity of a generic
three-quadric complement, at desk scale.

A nonconstant entire curve of order two avoiding three generic quadrics
would push forward to a curve [e^(a1 xi^2 + ...) : e^(a2 xi^2 + ...) :
e^(a3 xi^2 + ...)].  Comparing the growth of that curve against the
counting functions of the twelve associated lines squeezes the quantity

    X = (|a1 - a2| + |a1 - a3| + |a2 - a3|) / 2 pi

between 9X <= 8X, which forces all three leading coefficients to be
equal, and that case is excluded separately.  The certificate evaluates
both sides and cross-validates the growth limits by quadrature.
"""

from quadrics import three_quadrics_certificate

print("== Distinct leading coefficients (0, 1, 2) ==")
cert = three_quadrics_certificate((0, 1, 2), quadrature_check=True, r_check=20.0)
print(f"X   = {cert.X:.8f}")
print(f"9X  = {cert.lhs:.8f}   (growth lower bound)")
print(f"8X  = {cert.rhs:.8f}   (counting upper bound)")
print(f"contradiction: {cert.contradiction}")
print("quadrature cross-checks of the pairwise and triple growth limits:")
for chk in cert.quadrature_checks:
    print(f"  components {chk['pair']}: expected {chk['limit_expected']:.6f}, "
          f"quadrature {chk['limit_quadrature']:.6f} "
          f"(rel err {chk['relative_error']:.1e})")

print("\n== Complex coefficients (0, i, 1+i) ==")
cert2 = three_quadrics_certificate((0, 1j, 1 + 1j), quadrature_check=True)
print(f"X = {cert2.X:.8f} (hull perimeter of a right triangle over 2 pi)")
print(f"contradiction: {cert2.contradiction}")

print("\n== The escape case: all coefficients equal ==")
cert3 = three_quadrics_certificate((5, 5, 5))
print(f"X = {cert3.X}, contradiction: {cert3.contradiction}")
print("equal leading coefficients are excluded by a separate reduction,")
print("so no entire curve of order two survives.")
