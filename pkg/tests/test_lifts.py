import pytest
from hypothesis import given, strategies as st

from thetalift.core import (
    GroupSig, RankError, S, canonicalize, dual_transport, equal_mod_weyl, fmt_param,
    label_psi, make_param, validate,
)
from thetalift.harmonics import correspond, harmonic_lowest_degree, profile_sp
from thetalift.ktypes import infinitesimal_character, lowest_ktypes_sp
from thetalift.lifts import (
    TRIVIAL, direct, expected_infchar, going_up, select_formula, theta, theta_ostar2,
    theta_ostar4,
)
from thetalift.occurrence import occurs
from thetalift.ostar_dual import OStar2Rep, contragredient, make

from strategies import reps

pq = st.integers(0, 6)


def _pretty(res):
    v = res.value
    return fmt_param(v.__class__(v.group, v.r, v.lam, label_psi(v.levi, v.lam, v.psi), v.mu, v.nu))


# -- examples ----------------------------------------------------------------------

def test_ostar2_examples():
    assert _pretty(theta_ostar2(0, 1, 1)) == "π(1,∅,Psi1,1,1)"
    assert theta_ostar2(2, 3, 0).is_zero
    assert _pretty(theta_ostar2(-5, 2, 1)) == "π((2,1;5),Psi2)"
    res = theta_ostar2(0, 3, 2)
    assert _pretty(res) == "π(2,(1),Psi1,(2,1),(2,7))"
    assert res.trace == ("going_up(s=1,base=(2,1))", "formula:chi@(p,1):-p<k<p-1")


def test_ostar4_examples():
    assert _pretty(theta_ostar4(make("D", 5, 1), 2, 2)) == "π(1,(5;1),Psi3,3,1)"
    assert _pretty(theta_ostar4(make("D", 5, 0), 2, 2)) == "π(1,(5;1),Psi3,2,2)"
    assert _pretty(theta_ostar4(make("P", "3/2", "1/2"), 3, 1)) == "π(1,(2,1),Psi1,1,2)"
    assert _pretty(theta_ostar4(make("Dbar", 1, -4), 3, 2)) == "π(1,(2,1;4),Psi2,2,4)"
    assert theta_ostar4(make("F", 1, 0), 0, 0).value == TRIVIAL
    assert _pretty(theta_ostar4(make("F", 1, 0), 0, 0)) == "π(0,∅)"
    for l1 in range(-3, 4):
        for l2 in range(-8, l1):
            if l1 + l2 <= 0:
                for p in range(max(l1 + 1, 1), 6):
                    assert theta_ostar4(make("Dbar", l1, l2), p, 1).is_zero


def test_d_with_a_repeated_entry_solves_its_system():
    res = theta_ostar4(make("D", 2, -2), 3, 1)
    v = res.value
    assert (v.r, v.lam.left, v.lam.right) == (0, (2, 2, 1), (2,))
    # block 2 has multiplicities 2/1, so condition (A) leaves no free sign
    assert v.psi.signs == ()
    validate(v)
    assert res.trace == ("formula:D@(p,1):l1<=p-1,l1+l2=0",)


def test_duality_trace():
    res = theta(OStar2Rep(3), 1, 2)
    assert res.trace[0] == "duality"


def test_rejects_negative_signature():
    with pytest.raises(ValueError):
        theta(OStar2Rep(0), -1, 0)


# -- expected infinitesimal character and going up -------------------------------------

def test_expected_infchar_examples():
    assert expected_infchar(OStar2Rep(0), 2, 1).entries == (S(0), S(2), S(1))
    assert expected_infchar(make("D", 3, 1), 2, 2).entries == (S(3), S(1), S(2), S(1))
    assert expected_infchar(make("F", 1, 0), 1, 1).entries == (S(1), S(0))
    with pytest.raises(RankError):
        expected_infchar(make("F", 1, 0), 1, 0)


def test_going_up_examples():
    base = make_param(GroupSig.sp(2, 1), (1,), (), "Psi1", (2,), (2,))
    assert going_up(base, (2, 1), 1, 0) == base
    for l1 in range(2, 7):
        b = theta(make("D", l1, 1), 2, 0).value
        up = going_up(b, (2, 0), 2, 1)
        assert (up.r, up.lam, up.mu, up.nu) == (1, b.lam, (1,), (S(3),))
    for p in range(2, 6):
        f = make("F", p + 1, 1)
        b = theta(f, p - 1, 1).value
        up = going_up(b, (p - 1, 1), 2, 1)
        assert up.mu[-1] == 1 and up.nu[-1] == S(2 * p - 1)


def test_going_up_checks_the_base_group():
    base = make_param(GroupSig.sp(2, 1), (1,), (), "Psi1", (2,), (2,))
    with pytest.raises(ValueError):
        going_up(base, (1, 1), 1, 1)


# -- laws ---------------------------------------------------------------------------------

@given(reps, pq, pq)
def test_zero_exactly_off_the_occurrence_set(rep, p, q):
    assert theta(rep, p, q).is_zero == (not occurs(rep, p, q))


@given(reps, pq, pq)
def test_output_is_valid_and_canonical(rep, p, q):
    res = theta(rep, p, q)
    if not res.is_zero:
        assert res.value.group == GroupSig.sp(p, q)
        assert canonicalize(res.value) == res.value


@given(reps, pq, pq)
def test_infinitesimal_character_law(rep, p, q):
    n = 1 if isinstance(rep, OStar2Rep) else 2
    res = theta(rep, p, q)
    if not res.is_zero and p + q >= n:
        assert equal_mod_weyl(infinitesimal_character(res.value), expected_infchar(rep, p, q))


@given(reps, pq, pq)
def test_duality_law(rep, p, q):
    a = theta(rep, p, q)
    b = theta(contragredient(rep), q, p)
    assert a.is_zero == b.is_zero
    if not a.is_zero:
        assert a.value == canonicalize(dual_transport(b.value))


@given(reps, pq, pq)
def test_joint_harmonics_law(rep, p, q):
    res = theta(rep, p, q)
    if res.is_zero:
        return
    n = 1 if isinstance(rep, OStar2Rep) else 2
    targets = harmonic_lowest_degree(rep, p, q)
    hits = [kt for kt in lowest_ktypes_sp(res.value)
            if profile_sp(kt, n).occurs_in_harmonics and correspond(kt, p, q, n) in targets]
    assert hits


@given(reps, st.integers(2, 6), st.integers(2, 6))
def test_going_up_paths_agree_with_the_engine(rep, p, q):
    p, q = max(p, q), min(p, q)
    want = theta(rep, p, q)
    n = 1 if isinstance(rep, OStar2Rep) else 2
    for s in range(1, q + 1):
        b = direct(rep, p - s, q - s)
        if b is None or b.is_zero:
            continue
        assert canonicalize(going_up(b.value, (p - s, q - s), n, s)) == want.value


def test_formula_coverage():
    assert select_formula(OStar2Rep(0), 0, 0) == "chi@(0,0)"
    assert select_formula(make("D", 5, 1), 2, 2) == "D@(2,2):l2=1"
    assert select_formula(OStar2Rep(0), 3, 2) is None
    assert select_formula(make("D", 5, 1), 4, 3) is None
    assert direct(OStar2Rep(0), 3, 2) is None
