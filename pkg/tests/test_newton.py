from fractions import Fraction as F

from basiclocus.eo import Quadruple
from basiclocus.newton import NewtonClass, dominance_leq, frac_str, is_sigma_straight, newton_order, newton_point
from basiclocus.rootdata import parse_sigma


def test_frac_str_always_has_denominator():
    assert frac_str(F(0)) == "0/1" and frac_str(F(-3, 6)) == "-1/2" and frac_str(2) == "2/1"


def test_translation_newton_point_is_dominant_coweight():
    q = Quadruple.build("C", 3, "omega:2", 0)
    t = q.parse("1")  # identity: central
    assert newton_point(t).is_central
    from basiclocus.affweyl import translation
    lam = q.datum.coweight("omega:2")
    p = newton_point(translation(q.datum, lam))
    assert p.nu == tuple(F(x) for x in lam)
    assert is_sigma_straight(translation(q.datum, lam))


def test_gl4_newton_vectors():
    q = Quadruple.build("A", 3, "omega:2", 0)
    want = {"s0 s1 tau": (F(2, 3),) * 3 + (0,), "s0 s1 s3 s0 tau": (1, 1, 0, 0)}
    for w, nu in want.items():
        assert newton_point(q.parse(w), q.sigma).coords == tuple(F(x) for x in nu)


def test_sigma0_newton_vectors_are_self_dual():
    q = Quadruple.build("A", 4, "omega:1", 0, "sigma0")
    for w in ["s0 s4 tau", "s0 s4 s3 tau"]:
        nu = newton_point(q.parse(w), q.sigma).coords
        assert all(a + b == 1 for a, b in zip(nu, reversed(nu)))


def test_dominance_requires_equal_kappa():
    q = Quadruple.build("B", 3, "omega:1", 0)
    a = newton_point(q.tau)
    b = newton_point(q.parse("s0 s[3..2]^-1 tau s[2..1]"))
    assert dominance_leq(a, b) and not dominance_leq(b, a)
    other = Quadruple.build("B", 3, "omega:2", 0)
    assert not dominance_leq(newton_point(other.tau), b)


def test_newton_order_chain_is_almost_linear():
    q = Quadruple.build("C", 3, "omega:1", 0)
    classes = [NewtonClass(newton_point(q.tau))]
    for w in ["s[3..0]^-1 s[2..1]", "s[3..0]^-1 s[2..2]", "s[3..0]^-1 s[2..3]"]:
        classes.append(NewtonClass(newton_point(q.parse(w))))
    rep = newton_order(classes)
    assert rep.almost_linear and len(rep.hasse) == 3
