"""Sphere-restriction normal forms and the Burns-Epstein condition.

A polynomial restricted to S^3 equals the sum of its harmonic components;
that normal form decides equality of functions on the sphere exactly, and
the Burns-Epstein embeddability condition is a sign condition on which
components appear.
"""

from crlab import (be_check, canonicalize, one, parse_poly, radius_sq,
                   sphere_equal, z1, z1c)

print("The single sphere relation |z1|^2 + |z2|^2 = 1 is handled by harmonic")
print("canonicalization, not Groebner machinery:")
print()

for text in ["z1*z1c", "z1*z1c + z2*z2c", "z1^2*z1c", "z1^5*z1c"]:
    poly = parse_poly(text)
    parts = canonicalize(poly)
    pretty = "  +  ".join(f"[{p},{q}] {piece}" for (p, q), piece in sorted(parts.items()))
    print(f"  {text:14} =  {pretty}")

print()
print("Equality on the sphere is equality of normal forms:")
print(f"  z1*(|z1|^2+|z2|^2) == z1 on S^3?  {sphere_equal(z1 * radius_sq, z1)}")
print(f"  |z1|^2+|z2|^2 == 1 on S^3?        {sphere_equal(radius_sq, one)}")
print()

print("Burns-Epstein condition: every harmonic component of the deformation")
print("function must have bidegree p >= q+4.  Deformations close to the")
print("round structure are embeddable exactly when this holds.")
print()
for text in ["z1^4", "z1^3*z2", "z1^5*z1c", "1", "z1*z1c", "z1^3"]:
    verdict = be_check(parse_poly(text))
    status = "satisfies (BE)" if verdict.satisfies_be else \
        f"violates (BE) at {list(verdict.violating_components)}"
    print(f"  phi = {text:10} -> {status}")

print()
print("phi = 1 is the classical Rossi deformation: globally non-embeddable,")
print("and demo 05 exhibits the negative Paneitz directions that detect it.")
