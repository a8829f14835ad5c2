"""
Hyperplane sections and H^1
===========================

For an algebra of positive depth, a generic linear form z is regular and the
regularity of R is controlled by the section R/zR plus one H^1 dimension.
The report below lists the deficiency p(t) - h(t) next to the H^0 of the
section, degree by degree.
"""

from hilbreg import check_mumford, parse_ideal

examples = {
    "twisted cubic": "ring: x,y,z,w ; char 0\ngens: x*z - y^2, y*w - z^2, x*w - y*z",
    "two skew lines": "ring: x,y,z,w ; char 0\ngens: x*z, x*w, y*z, y*w",
    "primary, n=1": "ring: x,y,z,t ; char 0\ngens: y^2, x*y, x^2, x*z - y*t",
}

for name, text in examples.items():
    rep = check_mumford(parse_ideal(text).ideal)
    print(f"{name}: reg={rep.reg} m={rep.m} status={rep.status}")
    print("   t       :", list(rep.deficiency))
    print("   p - h   :", list(rep.deficiency.values()))
    print("   H^0(R/z):", [rep.h0_section.get(t, 0) for t in rep.deficiency])

# skew lines are not Cohen-Macaulay: p(0) - h(0) = 1 is the missing section
