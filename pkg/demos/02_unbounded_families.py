"""
Families whose regularity runs away
===================================

Fixed dimension and multiplicity do not bound regularity once we leave
reduced equidimensional algebras.  Two families make the point, and a third
shows the same for tangent cones of local domains.
"""

from hilbreg import bound_polynomial, hilbert_function, kleiman_bounds, parse_ideal, regularity
from hilbreg.groebner import initial_ideal_of

# primary ideals in four variables: dim 2, e = 2, reg = n
for n in range(1, 5):
    I = parse_ideal(f"ring: x,y,z,t ; char 0\ngens: y^2, x*y, x^2, x*z^{n} - y*t^{n}").ideal
    rep = regularity(I)
    print(f"n={n}: dim={rep.dim} e={rep.mult} reg={rep.reg}  gin={rep.gin_used.gin.to_str()}")

# the reduced equidimensional cap at d = 2, e = 2 is F_2(1)
print("cap for d=2, e=2:", kleiman_bounds(2, 2), " F_2 =", bound_polynomial("F", 2).poly.to_str())

# (x) meet (y, f_n) with f_n = z1^n - 2 z2^n: reduced, e = 1, still reg = n
for n in (2, 3, 4):
    I = parse_ideal(f"ring: x,y,z1,z2 ; char 0\ngens: x*y, x*z1^{n} - 2*x*z2^{n}").ideal
    rep = regularity(I)
    print(f"n={n}: dim={rep.dim} e={rep.mult} reg={rep.reg}")

# associated graded rings G_r: h(n) = 5n-1 up to r, then 4n+r
for r in (1, 2, 3):
    G = parse_ideal(f"ring: x,y,z,t ; char 0\ngens: x*y, x^3, y^3, x^2*t^{r} - y^2*z^{r}").ideal
    h = hilbert_function(initial_ideal_of(G), r + 4).values
    print(f"r={r}: reg={regularity(G).reg}  h={h}")
