import pytest

from basiclocus.eo import (
    Quadruple,
    QuadrupleError,
    admissible_set,
    allowed_labels,
    bedard_limit,
    eo_set,
    i_jwsigma,
    in_adm_J,
    leq_J_sigma,
    reduce_partial_conjugation,
    supp_sigma,
    twisted_orbit,
)
from basiclocus.rootdata import get_root_datum


def test_invalid_quadruples():
    with pytest.raises(QuadrupleError):
        Quadruple.build("D", 4, "omega:1", 3, "sigma0")      # sigma moves the removed vertex
    with pytest.raises((QuadrupleError, ValueError)):
        Quadruple.build("B", 3, "omega:9", 0)


def test_allowed_labels_e7_minuscule_only():
    assert allowed_labels(get_root_datum("E", 7)) == ["omega:7"]


def test_admissible_set_sizes():
    # |Adm(mu)| for minuscule mu: A1 -> 3, A2 omega1 -> 7
    assert len(admissible_set(get_root_datum("A", 1), get_root_datum("A", 1).coweight("omega:1"))) == 3
    assert len(admissible_set(get_root_datum("A", 2), get_root_datum("A", 2).coweight("omega:1"))) == 7


def test_c2_omega2_eo_set():
    q = Quadruple.build("C", 2, "omega:2", 0)
    data = eo_set(q)
    assert [r.word for r in data.records] == ["tau", "s0 tau", "s0 s1 tau", "s0 s1 s0 tau"]
    assert [r.coxeter for r in data.records] == [True, True, False, False]
    assert all(r.straight for r in data.non_coxeter)


def test_eo_set_depends_only_on_J():
    a = Quadruple.build("C", 2, "omega:2", 1, "id")
    b = Quadruple.build("C", 2, "omega:2", 1, "tau:2")
    assert {w.key for w in eo_set(a).elements} == {w.key for w in eo_set(b).elements}


def test_eo_elements_are_minimal_and_admissible():
    q = Quadruple.build("B", 3, "omega:2", 3)
    for r in eo_set(q).records:
        assert not any(r.element.is_left_descent(i) for i in q.J)
        assert in_adm_J(q, r.element)


def test_support_closed_under_tau_sigma():
    q = Quadruple.build("B", 4, "omega:1", 4, "tau:1")
    for r in eo_set(q).records:
        s, _ = supp_sigma(r.element, q)
        assert all(q.tau_sigma_perm[i] in s for i in s)


def test_bedard_matches_fixpoint_small():
    q = Quadruple.build("D", 4, "omega:1", 0, "sigma0")
    for w in eo_set(q).elements:
        assert bedard_limit(q.J, w, q.sigma) == i_jwsigma(q.J, w, q.sigma)


def test_twisted_orbit_and_leq():
    q = Quadruple.build("C", 2, "omega:2", 1, "tau:2")
    els = eo_set(q).elements
    for x in els:
        orbit = twisted_orbit(q.J, x, q.sigma)
        assert x in orbit
        assert leq_J_sigma(q.J, x, x, q.sigma)
    tau, top = els[0], els[-1]
    assert leq_J_sigma(q.J, tau, top, q.sigma) and not leq_J_sigma(q.J, top, tau, q.sigma)


def test_partial_conjugation_never_increases_length():
    q = Quadruple.build("C", 3, "omega:1", 3)
    for w in eo_set(q).elements:
        best, _ = reduce_partial_conjugation(q.J, w, q.sigma)
        assert best.length <= w.length
