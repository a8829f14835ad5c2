"""
A first look at regularity
==========================

Build a few small graded algebras, read off their Hilbert data and
regularity, and watch what a hyperplane section does.
"""

from hilbreg import h0_dims, hilbert_function, parse_ideal, regularity
from hilbreg.regularity import as_monomial_ideal

# the plane with an embedded point: k[x,y,z]/(x^2, xy)
R = parse_ideal("ring: x, y, z ; char 0\ngens: x^2, x*y").ideal
rep = regularity(R)
print("reg =", rep.reg, " g-reg =", rep.g_reg, " route =", rep.route)

hf = hilbert_function(as_monomial_ideal(R), 8)
print("h:", hf.values)
print("p(n) =", hf.polynomial.poly.to_str("n"), " agrees from n =", hf.agreement_index)

# cut by z: the quotient picks up H^0 in degree 1, so g-reg drops to 0
Rz = parse_ideal("ring: x, y ; char 0\ngens: x^2, x*y").ideal
rep_z = regularity(Rz)
print("section: reg =", rep_z.reg, " g-reg =", rep_z.g_reg)
print("H^0 dims:", h0_dims(Rz, 5))

# a smooth conic has no monomial generators, so regularity goes through gin
conic = parse_ideal("ring: x, y, z ; char 0\ngens: y^2 - x*z").ideal
rc = regularity(conic)
print("conic: gin =", rc.gin_used.gin.to_str(), " reg =", rc.reg, " e =", rc.mult)
