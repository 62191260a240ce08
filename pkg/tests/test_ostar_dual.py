from fractions import Fraction

import pytest
from hypothesis import given

from thetalift.core import AmbiguousMatch, FamilyConstraint, GroupSig, S, equal_mod_weyl
from thetalift import ktypes
from thetalift.ktypes import KTypeU, norm
from thetalift.ostar_dual import (
    OStar2Rep, as_langlands, contragredient, infinitesimal_character, ktypes_in_window,
    lowest_ktype, lowest_ktypes, make, rep_from_json, rep_to_json,
)

from strategies import ostar4_reps, reps

U2 = GroupSig.ostar(2)


def test_make_examples():
    f = make("F", 1, 0)
    assert (f.family, f.l1, f.l2) == ("F", S(1), S(0))
    with pytest.raises(FamilyConstraint):
        make("D", 2, 2)
    p = make("P", "3/2", "1/2")
    assert p.mu == 1


@pytest.mark.parametrize("family,l1,l2", [
    ("P", 2, 1),            # integral
    ("P", "-1/2", "-3/2"),  # Re(l1 + l2) < 0
    ("D", 1, -2),           # l1 + l2 < 0
    ("Dbar", 2, -1),        # l1 + l2 > 0
    ("F", 1, -1),           # l1 + l2 < 1
    ("D", "1/2", "-1/2"),   # not integral
    ("X", 2, 1),
])
def test_make_rejects(family, l1, l2):
    with pytest.raises(FamilyConstraint):
        make(family, l1, l2)


def test_boundary_sum_zero_is_both_d_and_dbar():
    assert make("D", 1, -1) != make("Dbar", 1, -1)


def test_window_examples():
    assert ktypes_in_window(make("D", 3, 1), 0, 4) == [KTypeU((3, 2)), KTypeU((4, 3)),
                                                       KTypeU((5, 4))]
    assert ktypes_in_window(make("F", 1, 0), -5, 5) == [KTypeU((0, 0))]
    # Dbar keeps indices k <= l2 = -1, so k = 0 is outside the set
    assert ktypes_in_window(make("Dbar", 0, -1), -2, 0) == [KTypeU((-2, -2)), KTypeU((-1, -1))]


@given(ostar4_reps())
def test_windows_have_multiplicity_one(rep):
    kts = ktypes_in_window(rep, -30, 30)
    assert len(kts) == len(set(kts))
    assert all(k.is_dominant() for k in kts)


def _scan_argmin(rep, radius=60):
    kts = ktypes_in_window(rep, -radius, radius)
    best = min(norm(k, U2) for k in kts)
    return frozenset(k for k in kts if norm(k, U2) == best)


def test_lowest_ktype_examples():
    assert lowest_ktype(make("D", 3, 1)) == KTypeU((3, 2))
    assert lowest_ktype(make("Dbar", -1, -2)) == KTypeU((-2, -2))
    assert lowest_ktype(make("F", 1, 0)) == KTypeU((0, 0))
    assert lowest_ktype(make("D", 3, 1)) == next(iter(_scan_argmin(make("D", 3, 1))))


@given(ostar4_reps())
def test_lowest_ktypes_match_a_wide_window_scan(rep):
    assert lowest_ktypes(rep) == _scan_argmin(rep)


def test_even_mu_principal_series_has_two_lowest_ktypes():
    rep = make("P", "3/2", "-1/2")  # mu = 2
    assert len(lowest_ktypes(rep)) == 2
    with pytest.raises(AmbiguousMatch):
        lowest_ktype(rep)


def test_contragredient_examples():
    assert contragredient(make("D", 3, 1)) == make("Dbar", -1, -3)
    assert contragredient(make("F", 2, 1)) == make("F", 2, 1)
    assert contragredient(OStar2Rep(4)) == OStar2Rep(-4)


@given(reps)
def test_contragredient_is_an_involution(rep):
    assert contragredient(contragredient(rep)) == rep


def test_as_langlands_examples():
    d = as_langlands(make("D", 3, 1))
    assert d.r == 0 and d.lam.left == (3, 1)
    p = as_langlands(make("P", "3/2", "1/2"))
    assert (p.r, p.mu, p.nu) == (1, (1,), (S(2),))
    f = as_langlands(make("F", 1, 0))
    assert (f.r, f.mu, f.nu) == (1, (1,), (S(1),))


def test_boundary_d_and_dbar_get_opposite_systems():
    d = as_langlands(make("D", 2, -2))
    db = as_langlands(make("Dbar", 2, -2))
    assert d.psi.sign(2) == 1 and db.psi.sign(2) == -1
    assert ktypes.lowest_ktypes(d) != ktypes.lowest_ktypes(db)


@given(ostar4_reps())
def test_langlands_realization_reproduces_infinitesimal_character(rep):
    ic = ktypes.infinitesimal_character(as_langlands(rep))
    assert ic.weyl == "D"
    assert equal_mod_weyl(ic, infinitesimal_character(rep))


@given(ostar4_reps())
def test_limit_families_agree_with_the_general_algorithm(rep):
    if rep.family in ("D", "Dbar"):
        assert ktypes.lowest_ktypes(as_langlands(rep)) == lowest_ktypes(rep)


@given(reps)
def test_json_round_trip(rep):
    assert rep_from_json(rep_to_json(rep)) == rep


def test_json_layout():
    assert rep_to_json(make("D", 3, 1)) == {"family": "D", "l1": "3", "l2": "1"}
    assert rep_to_json(OStar2Rep(-4)) == {"k": -4}
    assert rep_from_json({"family": "P", "l1": "3/2+1/2i", "l2": "1/2+1/2i"}).l1 == \
        S(Fraction(3, 2)) + S("1/2i")
