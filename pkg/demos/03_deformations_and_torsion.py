"""Deformed CR structures on S^3 and their exact pseudohermitian torsion.

Deforming the antiholomorphic direction to Z1bar + t*phi*Z1 produces the
torsion  -t (T(phi) - 4i phi) / (1 - t^2 |phi|^2), an exact rational pair.
Its numerator vanishes precisely on the bidegree diagonal p = q+4 -- the
same diagonal as the Burns-Epstein condition.
"""

from fractions import Fraction

from crlab import one, parse_poly, rossi, torsion, zero_torsion_classify

print("Torsion of the structure Z1bar + t*phi*Z1 (numerator / denominator):")
print()
for text in ["1", "z1c", "z1^3", "z1^4", "z1^3*z2"]:
    num, den = torsion(parse_poly(text))
    num_text = str(num.poly_coefficient(1))
    print(f"  phi = {text:8} numerator t-coefficient: {num_text}")

print()
print("Scanning every monomial deformation with p,q <= 8 for identically")
print("vanishing torsion gives exactly the diagonal p = q+4:")
print(f"  {zero_torsion_classify(8, 8)}")
print()

print("The constant deformation (Rossi family) has closed forms; the general")
print("formula specializes to them exactly:")
print()
print(f"  {'t':>6} {'branch':>8} {'Webster R':>10} {'torsion':>10}")
for t in [Fraction(0), Fraction(1, 2), Fraction(-3, 4), Fraction(3, 2), Fraction(2)]:
    data = rossi(t)
    num, den = torsion(one, t)
    check = num.coefficient((0, 0, 0, 0)) == data["torsion_coeff"] * den.coefficient((0, 0, 0, 0))
    assert check
    print(f"  {str(t):>6} {data['branch']:>8} {str(data['webster_R']):>10} "
          f"{str(data['torsion_coeff']):>10}")

print()
print("Positive curvature along the whole family, torsion 4ti/(1-t^2); at")
print("|t| = 1 the family degenerates and the constructor refuses it.")
