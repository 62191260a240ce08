import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from thetalift.core import (
    ConditionA, GroupSig, HCParam, InfChar, LanglandsParam, LengthMismatch, ParityError,
    PosSystem, RankError, S, Scalar, ShapeError, all_systems, canonicalize, dual_transport,
    equal_mod_weyl, fmt_param, has_root, label_psi, make_param, named_psi, param_from_json,
    param_to_json, solve_psi, validate,
)

from strategies import fractions, scalars, sp_params

SP21 = GroupSig.sp(2, 1)


# -- scalars -----------------------------------------------------------------

@pytest.mark.parametrize("text,re,im", [
    ("3", 3, 0), ("-3/2", Fraction(-3, 2), 0), ("i", 0, 1), ("-i", 0, -1),
    ("2/3i", 0, Fraction(2, 3)), ("3/2+1/2i", Fraction(3, 2), Fraction(1, 2)),
    ("1-i", 1, -1),
])
def test_scalar_parse(text, re, im):
    assert Scalar.parse(text) == Scalar(re, im)


@pytest.mark.parametrize("bad", ["", "1.5", "x", "1+", "i2"])
def test_scalar_parse_rejects(bad):
    with pytest.raises(ValueError):
        Scalar.parse(bad)


def test_scalar_rejects_float_complex():
    with pytest.raises(TypeError):
        Scalar.of(1 + 2j)


@given(scalars)
def test_scalar_str_round_trip(x):
    assert Scalar.parse(str(x)) == x


@given(fractions, fractions, fractions, fractions)
def test_scalar_arithmetic_matches_pairs_of_fractions(a, b, c, d):
    x, y = Scalar(a, b), Scalar(c, d)
    assert x + y == Scalar(a + c, b + d)
    assert x - y == Scalar(a - c, b - d)
    assert x * y == Scalar(a * c - b * d, a * d + b * c)
    assert (x / 2) * 2 == x


@given(scalars)
def test_normalized_picks_one_of_pm(x):
    n = x.normalized()
    assert n in (x, -x)
    assert n.re > 0 or (n.re == 0 and n.im >= 0)
    assert n == (-x).normalized()


# -- validate ------------------------------------------------------------------

def test_validate_spec_examples():
    validate(make_param(SP21, (1,), (), "Psi1", (2,), (2,)))
    validate(LanglandsParam(GroupSig.sp(0, 0), 0, HCParam(), PosSystem()))
    with pytest.raises(ParityError):
        validate(make_param(SP21, (1,), (), "Psi1", (2,), (0,)))


def test_validate_error_kinds():
    with pytest.raises(RankError):
        validate(LanglandsParam(SP21, 2, HCParam(), PosSystem(), (1, 1), (1, 1)))
    with pytest.raises(ShapeError):
        validate(LanglandsParam(SP21, 0, HCParam((1, 2), (3,)), PosSystem()))
    with pytest.raises(ShapeError):
        # value 1 twice on the left, never on the right
        validate(LanglandsParam(GroupSig.sp(2, 0), 0, HCParam((1, 1)), PosSystem()))
    with pytest.raises(ConditionA):
        # tied block 1 needs a sign
        validate(LanglandsParam(GroupSig.sp(1, 1), 0, HCParam((1,), (1,)), PosSystem()))


def test_odd_mu_allows_zero_nu():
    validate(make_param(SP21, (1,), (), "Psi1", (1,), (0,)))


# -- canonicalize ----------------------------------------------------------------

def test_canonicalize_examples():
    g = GroupSig.sp(2, 2)
    p = LanglandsParam(g, 2, HCParam(), PosSystem(), (1, 3), (5, -2))
    c = canonicalize(p)
    assert c.mu == (3, 1) and c.nu == (S(2), S(5))
    one = canonicalize(make_param(SP21, (1,), (), "Psi1", (2,), (-4,)))
    assert one.mu == (2,) and one.nu == (S(4),)
    assert canonicalize(c) == c


@given(sp_params())
def test_canonicalize_idempotent_and_valid(param):
    c = canonicalize(param)
    validate(c)
    assert canonicalize(c) == c


@given(sp_params(), st.randoms(use_true_random=False))
def test_permuting_pairs_and_flipping_nu_is_invisible(param, rnd):
    pairs = list(zip(param.mu, param.nu))
    rnd.shuffle(pairs)
    pairs = [(m, -v if rnd.random() < 0.5 else v) for m, v in pairs]
    other = LanglandsParam(param.group, param.r, param.lam, param.psi,
                           tuple(m for m, _ in pairs), tuple(v for _, v in pairs))
    assert canonicalize(other) == canonicalize(param)


# -- Weyl equivalence --------------------------------------------------------------

def _brute_equal(a, b, weyl):
    """Search all signed permutations of a for b."""
    n = len(a)
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            if weyl == "D" and signs.count(-1) % 2:
                continue
            if all(S(signs[i]) * a[perm[i]] == b[i] for i in range(n)):
                return True
    return False


def _ic(xs, weyl):
    return InfChar(tuple(S(x) for x in xs), weyl)


def test_equal_mod_weyl_examples():
    assert equal_mod_weyl(_ic((1, 2, 0), "C"), _ic((0, 2, 1), "C"))
    assert equal_mod_weyl(_ic((3, -1), "D"), _ic((1, -3), "D"))
    assert not equal_mod_weyl(_ic((3, 1), "D"), _ic((3, -1), "D"))
    assert equal_mod_weyl(_ic((3, 0), "D"), _ic((-3, 0), "D"))


def test_equal_mod_weyl_length_mismatch():
    with pytest.raises(LengthMismatch):
        equal_mod_weyl(_ic((1,), "C"), _ic((1, 2), "C"))
    with pytest.raises(LengthMismatch):
        equal_mod_weyl(_ic((1,), "C"), _ic((1,), "D"))


small = st.lists(st.integers(-3, 3), min_size=1, max_size=4)


@given(small, st.data(), st.sampled_from(["C", "D"]))
def test_equal_mod_weyl_against_signed_permutation_search(a, data, weyl):
    b = data.draw(st.lists(st.integers(-3, 3), min_size=len(a), max_size=len(a)))
    if data.draw(st.booleans()):
        # bias towards equal pairs
        perm = data.draw(st.permutations(a))
        b = [x * data.draw(st.sampled_from([1, -1])) for x in perm]
    A, B = [S(x) for x in a], [S(x) for x in b]
    assert equal_mod_weyl(_ic(a, weyl), _ic(b, weyl)) == _brute_equal(A, B, weyl)


@given(st.sampled_from(["C", "D"]), st.data())
def test_equal_mod_weyl_is_an_equivalence(weyl, data):
    n = data.draw(st.integers(1, 3))
    draw = lambda: _ic(data.draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n)), weyl)
    a, b, c = draw(), draw(), draw()
    assert equal_mod_weyl(a, a)
    assert equal_mod_weyl(a, b) == equal_mod_weyl(b, a)
    if equal_mod_weyl(a, b) and equal_mod_weyl(b, c):
        assert equal_mod_weyl(a, c)


# -- positive systems ------------------------------------------------------------

E1_MINUS_F1 = {("e", 1): 1, ("f", 1): -1}


def test_tied_blocks_give_two_to_the_t_systems():
    g = GroupSig.sp(3, 2)
    lam = HCParam((3, 2, 1), (2, 1))
    assert len(all_systems(g, lam)) == 4


def test_named_systems_resolve_and_label():
    g = GroupSig.sp(3, 1)
    lam = HCParam((3, 2, 1), (3,))
    assert named_psi("Psi2", g, lam).sign(3) == -1
    assert label_psi(g, lam, PosSystem.of({3: -1})).name == "Psi2"
    g21, lam1 = GroupSig.sp(2, 1), HCParam((3, 1), (1,))
    assert label_psi(g21, lam1, PosSystem.of({1: 1})).name == "Psi3"
    assert label_psi(g21, lam1, PosSystem.of({1: -1})).name == "Psi4"


def test_has_root_and_solve_psi():
    g = GroupSig.sp(1, 1)
    lam = HCParam((2,), (2,))
    plus, minus = PosSystem.of({2: 1}), PosSystem.of({2: -1})
    assert has_root(g, lam, plus, E1_MINUS_F1)
    assert not has_root(g, lam, minus, E1_MINUS_F1)
    assert solve_psi(g, lam, [{("e", 1): -1, ("f", 1): 1}]) == minus
    with pytest.raises(ConditionA):
        solve_psi(g, lam)


def test_psi_name_does_not_affect_equality():
    assert PosSystem.of({1: 1}, "Psi3") == PosSystem.of({1: 1})


# -- duality and formatting -----------------------------------------------------------

@given(sp_params())
def test_dual_transport_is_an_involution(param):
    d = dual_transport(param)
    validate(d)
    assert dual_transport(d) == param


def test_fmt_param():
    assert fmt_param(make_param(SP21, (1,), (), "Psi1", (2,), (2,))) == "π(1,(1),Psi1,2,2)"
    assert fmt_param(LanglandsParam(GroupSig.sp(0, 0), 0, HCParam(), PosSystem())) == "π(0,∅)"


# -- JSON --------------------------------------------------------------------------------

def test_json_matches_documented_layout():
    doc = param_to_json(make_param(SP21, (1,), (), "Psi1", (2,), (2,)))
    assert doc["group"] == {"kind": "sp", "p": 2, "q": 1}
    assert doc["r"] == 1
    assert doc["lambda"] == {"left": ["1"], "right": []}
    assert doc["mu"] == [2]
    assert doc["nu"] == [{"re": "2", "im": "0"}]
    assert doc["psi"]["tied_signs"] == {}


@given(sp_params())
def test_json_round_trip(param):
    text = json.dumps(param_to_json(param))
    assert param_from_json(json.loads(text)) == param
