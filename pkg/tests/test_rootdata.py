from fractions import Fraction

import pytest

from basiclocus.rootdata import (
    RootDatumError,
    all_automorphisms,
    cartan_matrix,
    get_root_datum,
    omega_group,
    parse_sigma,
    psi_label_action,
)


@pytest.mark.parametrize("fam,rank,npos,nomega", [
    ("B", 3, 9, 2), ("C", 2, 4, 2), ("C", 4, 16, 2), ("D", 4, 12, 4), ("D", 5, 20, 4),
    ("E", 6, 36, 3), ("E", 7, 63, 2), ("F", 4, 24, 1), ("G", 2, 6, 1),
])
def test_root_counts_and_fundamental_group(fam, rank, npos, nomega):
    dt = get_root_datum(fam, rank)
    assert len(dt.positive_roots) == npos
    assert len(omega_group(dt)) == nomega


def test_gl_model_dimensions():
    dt = get_root_datum("A", 3)
    assert dt.model == "gl" and dt.dim == 5 and len(dt.positive_roots) == 6


def test_cartan_b_vs_c_transpose():
    b, c = cartan_matrix("B", 4), cartan_matrix("C", 4)
    assert [list(r) for r in zip(*b)] == [list(r) for r in c]


def test_highest_root_pairs_to_coxeter_number_minus_one():
    for fam, rank, h in [("B", 4, 8), ("C", 3, 6), ("D", 5, 8), ("E", 6, 12), ("F", 4, 12), ("G", 2, 6)]:
        dt = get_root_datum(fam, rank)
        assert sum(dt.theta.coords) == h - 1


def test_invalid_types():
    with pytest.raises(RootDatumError):
        get_root_datum("B", 1)
    with pytest.raises(RootDatumError):
        get_root_datum("E", 9)


def test_automorphism_group_sizes():
    sizes = {("D", 4): 24, ("E", 6): 6, ("B", 3): 2, ("C", 2): 2}
    for (f, r), n in sizes.items():
        assert len(all_automorphisms(get_root_datum(f, r))) == n


def test_sigma_parsing():
    dt = get_root_datum("D", 5)
    s0 = parse_sigma(dt, "sigma0")
    assert s0.perm[4] == 5 and s0.perm[5] == 4 and s0.order == 2
    assert parse_sigma(dt, "id").is_identity
    with pytest.raises(RootDatumError):
        parse_sigma(dt, "bogus")


def test_label_action_swaps_spin_coweights():
    dt = get_root_datum("D", 5)
    s0 = parse_sigma(dt, "sigma0")
    act = psi_label_action(dt, s0)
    assert act("omega:4") == "omega:5" and act("omega:1") == "omega:1"


def test_coroot_coordinates():
    dt = get_root_datum("C", 3)
    th = dt.theta.coroot
    coeffs = dt.coroot_coordinates(th)
    assert coeffs is not None and all(Fraction(c) >= 0 for c in coeffs)
