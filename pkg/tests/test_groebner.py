import random

import pytest

from conftest import ideal, random_homogeneous_ideal
from hilbreg import Field, Ideal, MonomialIdeal, PolyRing, buchberger, gin, normal_form
from hilbreg.errors import GinDisagreementError
from hilbreg.groebner import initial_ideal, initial_ideal_of, is_groebner_basis
from hilbreg.monideal import is_borel_fixed, is_stable
from hilbreg.parse import parse_polynomial

XY = "ring: x, y ; char 0\ngens: "
XYZ = "ring: x, y, z ; char 0\ngens: "


def strs(G):
    return sorted(g.to_str() for g in G.elements)


def test_principal_ideal_is_its_own_basis():
    G = buchberger(ideal(XYZ + "y^2 - x*z"))
    assert strs(G) == ["y^2 - x*z"]


def test_hand_buchberger():
    G = buchberger(ideal(XY + "x^2 - y^2, x*y"))
    assert strs(G) == ["x*y", "x^2 - y^2", "y^3"]
    assert is_groebner_basis(G)
    assert initial_ideal(G) == MonomialIdeal(G.ring, [(2, 0), (1, 1), (0, 3)])


def test_monomial_ideal_already_basis():
    G = buchberger(ideal(XYZ + "x^2, x*y"))
    assert strs(G) == ["x*y", "x^2"]


def test_normal_forms():
    G = buchberger(ideal(XY + "x^2, x*y"))
    R = G.ring
    assert normal_form(parse_polynomial("x^2", R), G).is_zero()
    assert normal_form(parse_polynomial("y^2", R), G) == parse_polynomial("y^2", R)
    H = buchberger(ideal(XY + "x^2 - y^2, x*y"))
    assert normal_form(parse_polynomial("x^3 - x*y^2", R), H).is_zero()


def test_initial_ideal_degrevlex_quadric():
    I = ideal(XYZ + "y^2 - x*z")
    assert initial_ideal_of(I).gens == ((0, 2, 0),)
    assert initial_ideal_of(I, "lex").gens == ((1, 0, 1),)


def spoly(f, g, order):
    R = f.ring
    u, v = f.leading_monomial(order), g.leading_monomial(order)
    w = tuple(max(a, b) for a, b in zip(u, v))
    mf = R.monomial(tuple(a - b for a, b in zip(w, u)), R.field.inv(f.terms[u]))
    mg = R.monomial(tuple(a - b for a, b in zip(w, v)), R.field.inv(g.terms[v]))
    return mf * f - mg * g


def test_spolys_reduce_to_zero_on_random_ideals():
    rng = random.Random(11)
    R = PolyRing(["x", "y", "z"])
    for _ in range(40):
        I = random_homogeneous_ideal(rng, R)
        for order in ("degrevlex", "lex"):
            G = buchberger(I, order)
            els = G.elements
            for i in range(len(els)):
                for j in range(i + 1, len(els)):
                    assert normal_form(spoly(els[i], els[j], order), G).is_zero()
            for g in I.generators:
                assert normal_form(g, G).is_zero()


def test_reduced_basis_is_unique_under_generator_shuffles():
    I = ideal(XYZ + "x^2 - y*z, x*y - z^2, y^3")
    J = Ideal(I.ring, list(reversed(I.generators)))
    assert strs(buchberger(I)) == strs(buchberger(J))


def test_prime_field_basis():
    I = ideal(XY + "x^2 - y^2, x*y", char=7)
    assert strs(buchberger(I)) == ["x*y", "x^2 - y^2", "y^3"]


# -- generic initial ideals --------------------------------------------------

def test_gin_of_borel_fixed_is_itself():
    I = ideal(XYZ + "x^2, x*y")
    assert gin(I).gin.gens == ((2, 0, 0), (1, 1, 0))


def test_gin_of_quadric():
    G = gin(ideal(XYZ + "y^2 - x*z"))
    assert G.gin.gens == ((2, 0, 0),)
    assert G.borel_fixed and not G.warnings
    assert G.max_gen_degree == 2 and G.trials_used == 2


def test_gin_is_deterministic():
    I = ideal("ring: x,y,z,t ; char 0\ngens: y^2, x*y, x^2, x*z^2 - y*t^2")
    a, b = gin(I, seed=5), gin(I, seed=5)
    assert a.gin == b.gin and a.trials_used == b.trials_used


def test_gin_is_idempotent_and_borel():
    rng = random.Random(12)
    R = PolyRing(["x", "y", "z"])
    for _ in range(30):
        J = gin(random_homogeneous_ideal(rng, R)).gin
        assert is_borel_fixed(J)
        assert gin(Ideal(R, J.polynomials())).gin == J


def test_gin_over_prime_field():
    I = ideal(XYZ + "y^2 - x*z, x*y", char=32003)
    G = gin(I)
    assert G.gin.ring.field == Field(32003)
    assert is_stable(G.gin)


def test_gin_rejects_bad_arguments():
    I = ideal(XY + "x*y")
    with pytest.raises(ValueError):
        gin(I, trials=1)
    with pytest.raises(ValueError):
        gin(I, order="lex")


def test_gin_disagreement_is_reported(monkeypatch):
    import hilbreg.groebner as gb
    I = ideal(XY + "x*y")
    R = I.ring
    fakes = iter([(2, 0), (1, 1), (0, 2)])
    monkeypatch.setattr(gb, "initial_ideal_of",
                        lambda J, order: MonomialIdeal(R, [next(fakes)]))
    with pytest.raises(GinDisagreementError, match="no two of 3"):
        gin(I, trials=3)


def test_borel_examples():
    R = PolyRing(["x", "y", "z"])
    assert is_borel_fixed(MonomialIdeal(R, [(2, 0, 0), (1, 1, 0)]))
    R2 = PolyRing(["x", "y"])
    assert is_stable(MonomialIdeal(R2, [(2, 0), (1, 1), (0, 3)]))
    assert not is_borel_fixed(MonomialIdeal(R2, [(0, 2)]))
    with pytest.raises(ValueError):
        is_borel_fixed(MonomialIdeal(R2, [(0, 2)]), "nonsense")
