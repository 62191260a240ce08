"""Theta lifts from O*(2) and O*(4) to Sp(p,q) in Langlands parameters.

The engine reduces every signature to a small set of base cases:

1. if q > p, lift the contragredient to Sp(q,p) and carry the answer back
   (sides of lambda swap, tied signs flip);
2. if an explicit base formula covers (p,q), use it;
3. otherwise go up from a smaller signature in the same Witt tower, where the
   base is nonzero by the stable range.

Base formulas live in ``FORMULAS`` keyed by a descriptive tag so they can be
inspected (and, in tests, deliberately broken).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import (
    GroupSig, HCParam, InfChar, LanglandsParam, PosSystem, RankError, Scalar,
    canonicalize, dual_transport, make_param, validate,
)
from .ostar_dual import OStar2Rep, OStar4Rep, contragredient
from .ostar_dual import infinitesimal_character as rep_infchar


class _Zero:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "ZERO"

    __str__ = lambda self: "0"


ZERO = _Zero()


@dataclass(frozen=True)
class LiftResult:
    value: LanglandsParam | _Zero
    trace: tuple[str, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.value is ZERO

    def __str__(self):
        return str(self.value)


def down(hi: int, lo: int = 1) -> tuple[int, ...]:
    return tuple(range(hi, lo - 1, -1))


def _sp(p, q, left=(), right=(), psi=None, mu=(), nu=()):
    return make_param(GroupSig.sp(p, q), left, right, psi, mu, nu)


TRIVIAL = LanglandsParam(GroupSig.sp(0, 0), 0, HCParam(), PosSystem((), "Psi1"))


def expected_infchar(rep, p: int, q: int, n: int | None = None) -> InfChar:
    """Infinitesimal character a nonzero lift to Sp(p,q) must have."""
    if n is None:
        n = 1 if isinstance(rep, OStar2Rep) else 2
    if p + q < n:
        raise RankError(f"p+q={p + q} is smaller than n={n}")
    tail = tuple(Scalar(v) for v in down(p + q - n))
    return InfChar(rep_infchar(rep).entries + tail, "C")


def going_up(param: LanglandsParam, base: tuple[int, int], n: int, s: int) -> LanglandsParam:
    p0, q0 = base
    if param.group != GroupSig.sp(p0, q0):
        raise ValueError(f"parameter lives on {param.group}, not Sp{base}")
    extra = tuple(Scalar(2 * p0 + 2 * q0 - 2 * n + 4 * i - 1) for i in range(1, s + 1))
    out = LanglandsParam(GroupSig.sp(p0 + s, q0 + s), param.r + s, param.lam, param.psi,
                         param.mu + (1,) * s, param.nu + extra)
    validate(out)
    return out


# --------------------------------------------------------------------------
# base formulas, O*(2)
# --------------------------------------------------------------------------

def _k(rep):
    return rep.k


def chi_00(rep, p, q):
    return TRIVIAL if _k(rep) == 0 else ZERO


def chi_p0(rep, p, q):
    k = _k(rep)
    return ZERO if k < p else _sp(p, 0, (k,) + down(p - 1), (), "Psi1")


def chi_11(rep, p, q):
    k = _k(rep)
    if k > 0:
        return _sp(1, 1, (k,), (1,), "Psi3")
    if k < 0:
        return _sp(1, 1, (1,), (-k,), "Psi2")
    return _sp(1, 1, (), (), "Psi1", (1,), (1,))


def chi_p1_high(rep, p, q):
    return _sp(p, 1, (_k(rep),) + down(p - 2), (), "Psi1", (1,), (2 * p - 1,))


def chi_p1_mid(rep, p, q):
    k = _k(rep)
    return _sp(p, 1, down(p - 1), (), "Psi1", (p - k,), (p + k,))


def chi_p1_low(rep, p, q):
    return _sp(p, 1, down(p), (-_k(rep),), "Psi2")


def _select_chi(rep: OStar2Rep, p: int, q: int) -> str | None:
    k = rep.k
    if q == 0:
        return "chi@(0,0)" if p == 0 else "chi@(p,0)"
    if q == 1:
        if p == 1:
            return "chi@(1,1)"
        if k >= p - 1:
            return "chi@(p,1):k>=p-1"
        if k > -p:
            return "chi@(p,1):-p<k<p-1"
        return "chi@(p,1):k<=-p"
    return None


# --------------------------------------------------------------------------
# base formulas, O*(4)
# --------------------------------------------------------------------------

def _ints(rep):
    return rep.l1.as_int(), rep.l2.as_int()


def zero(rep, p, q):
    return ZERO


def p_p1(rep, p, q):
    return _sp(p, 1, down(p - 1), (), "Psi1", (rep.mu,), (rep.l1 + rep.l2,))


def dbar_p1(rep, p, q):
    l1, l2 = _ints(rep)
    return _sp(p, 1, (l1,) + down(p - 1), (-l2,), "Psi2")


def dbar_p2_far(rep, p, q):
    l1, l2 = _ints(rep)
    return _sp(p, 2, down(p), (-l2, -l1), "Psi5")


def dbar_p2_mid(rep, p, q):
    l1, l2 = _ints(rep)
    return _sp(p, 2, down(p - 1), (-l2,), "Psi2", (p - l1,), (p + l1,))


def rank2_p2(rep, p, q):
    l1, l2 = _ints(rep)
    return _sp(p, 2, down(p - 2), (), "Psi1", (p - 1 - l2, p - l1), (p - 1 + l2, p + l1))


def f_00(rep, p, q):
    return TRIVIAL if _ints(rep) == (1, 0) else ZERO


def f_p1(rep, p, q):
    return _sp(p, 1, down(p - 1), (), "Psi1", (rep.mu,), (rep.l1 + rep.l2,))


def d_10(rep, p, q):
    l1, _ = _ints(rep)
    return _sp(1, 0, (l1,), (), "Psi1")


def d_p0(rep, p, q):
    l1, l2 = _ints(rep)
    return _sp(p, 0, (l1, l2) + down(p - 2), (), "Psi1")


def d_p1_small(rep, p, q):
    l1, l2 = _ints(rep)
    return _sp(p, 1, down(p - 1), (), "Psi1", (l1 - l2,), (l1 + l2,))


def d_p1_balanced(rep, p, q):
    l1, _ = _ints(rep)
    left = down(p - 1, l1 + 1) + (l1, l1) + down(l1 - 1)
    return _sp(p, 1, left, (l1,), None)


def d_p1_far(rep, p, q):
    l1, l2 = _ints(rep)
    return _sp(p, 1, (l1,) + down(p - 1), (-l2,), "Psi4")


def d_p1_mid(rep, p, q):
    l1, l2 = _ints(rep)
    return _sp(p, 1, (l1,) + down(p - 2), (), "Psi1", (p - 1 - l2,), (p - 1 + l2,))


def d_p1_edge(rep, p, q):
    l1, _ = _ints(rep)
    return _sp(p, 1, (l1,) + down(p - 1), (p - 1,), "Psi4")


def d_p1_high(rep, p, q):
    l1, l2 = _ints(rep)
    return _sp(p, 1, (l1, l2) + down(p - 3), (), "Psi1", (1,), (2 * p - 3,))


def d_21_high(rep, p, q):
    l1, l2 = _ints(rep)
    return _sp(2, 1, (l1, l2), (1,), "Psi3")


def d_22_l2_0(rep, p, q):
    l1, _ = _ints(rep)
    return _sp(2, 2, (l1,), (1,), "Psi3", (2,), (2,))


def d_22_l2_1(rep, p, q):
    l1, _ = _ints(rep)
    return _sp(2, 2, (l1,), (1,), "Psi3", (3,), (1,))


def d_22_high(rep, p, q):
    l1, l2 = _ints(rep)
    return _sp(2, 2, (l1, l2), (2, 1), "Psi6")


def _select_ostar4(rep: OStar4Rep, p: int, q: int) -> str | None:
    """Tag of the base formula covering (rep, p, q) with p >= q, or None."""
    fam = rep.family
    if q == 0:
        if fam == "F":
            return "F@(0,0)" if p == 0 else "F@(p,0):zero"
        if fam == "D":
            l1, l2 = _ints(rep)
            if p == 1 and l2 == 0:
                return "D@(1,0):l2=0"
            if p >= 2 and l2 >= p - 1:
                return "D@(p,0):l2>=p-1"
            return "D@(p,0):zero"
        return f"{fam}@(p,0):zero"
    if q == 1:
        if fam == "P":
            return "P@(p,1)"
        l1, l2 = _ints(rep)
        if fam == "Dbar":
            return "Dbar@(p,1):l1>=p" if l1 >= p else "Dbar@(p,1):l1<p"
        if fam == "F":
            return "F@(p,1):l1>=p" if l1 >= p else "F@(p,1):l1<p"
        if l1 <= p - 1:
            return "D@(p,1):l1<=p-1,l1+l2>0" if l1 + l2 > 0 else "D@(p,1):l1<=p-1,l1+l2=0"
        if l2 <= -p:
            return "D@(p,1):l1>=p,l2<=-p"
        if p >= 2 and l2 == 1 - p:
            return "D@(p,1):l1>=p,l2=1-p"
        if p >= 2 and 1 - p < l2 <= p - 2:
            return "D@(p,1):l1>=p,1-p<l2<=p-2"
        if p >= 3:
            return "D@(p,1):l2>=p-1"
        if p == 2:
            return "D@(2,1):l2>=1"
        return "D@(1,1):l2>=0"
    if q == 2:
        if fam == "P":
            return None
        l1, l2 = _ints(rep)
        if fam == "Dbar" and l1 < p - 1:
            if l1 <= -p:
                return "Dbar@(p,2):l1<=-p"
            if l2 <= 1 - p:
                return "Dbar@(p,2):l2<=1-p<=l1<p-1"
            return "Dbar@(p,2):l2>1-p,l1<p-1"
        if fam == "F" and l1 < p - 1:
            return "F@(p,2):l1<p-1"
        if fam == "D" and p == 2 and l2 >= 0:
            return {0: "D@(2,2):l2=0", 1: "D@(2,2):l2=1"}.get(l2, "D@(2,2):l2>=2")
    return None


FORMULAS: dict[str, Callable] = {
    "chi@(0,0)": chi_00,
    "chi@(p,0)": chi_p0,
    "chi@(1,1)": chi_11,
    "chi@(p,1):k>=p-1": chi_p1_high,
    "chi@(p,1):-p<k<p-1": chi_p1_mid,
    "chi@(p,1):k<=-p": chi_p1_low,
    "P@(p,0):zero": zero,
    "Dbar@(p,0):zero": zero,
    "F@(p,0):zero": zero,
    "D@(p,0):zero": zero,
    "F@(0,0)": f_00,
    "D@(1,0):l2=0": d_10,
    "D@(p,0):l2>=p-1": d_p0,
    "P@(p,1)": p_p1,
    "Dbar@(p,1):l1>=p": dbar_p1,
    "Dbar@(p,1):l1<p": zero,
    "F@(p,1):l1>=p": f_p1,
    "F@(p,1):l1<p": zero,
    "D@(p,1):l1<=p-1,l1+l2>0": d_p1_small,
    "D@(p,1):l1<=p-1,l1+l2=0": d_p1_balanced,
    "D@(p,1):l1>=p,l2<=-p": d_p1_far,
    "D@(p,1):l1>=p,1-p<l2<=p-2": d_p1_mid,
    "D@(p,1):l1>=p,l2=1-p": d_p1_edge,
    "D@(p,1):l2>=p-1": d_p1_high,
    "D@(2,1):l2>=1": d_21_high,
    "D@(1,1):l2>=0": zero,
    "Dbar@(p,2):l1<=-p": dbar_p2_far,
    "Dbar@(p,2):l2<=1-p<=l1<p-1": dbar_p2_mid,
    "Dbar@(p,2):l2>1-p,l1<p-1": rank2_p2,
    "F@(p,2):l1<p-1": rank2_p2,
    "D@(2,2):l2=0": d_22_l2_0,
    "D@(2,2):l2=1": d_22_l2_1,
    "D@(2,2):l2>=2": d_22_high,
}


def select_formula(rep, p: int, q: int) -> str | None:
    """Tag of the explicit formula covering (rep, p, q), if any (needs p >= q)."""
    if isinstance(rep, OStar2Rep):
        return _select_chi(rep, p, q)
    return _select_ostar4(rep, p, q)


def direct(rep, p: int, q: int) -> LiftResult | None:
    tag = select_formula(rep, p, q)
    if tag is None:
        return None
    value = FORMULAS[tag](rep, p, q)
    if value is not ZERO:
        value = canonicalize(value)
    return LiftResult(value, (f"formula:{tag}",))


# --------------------------------------------------------------------------
# the engine
# --------------------------------------------------------------------------

def _n_of(rep) -> int:
    return 1 if isinstance(rep, OStar2Rep) else 2


def _bases(rep, p: int, q: int):
    """Candidate (base, s) for going up, preferred first."""
    if isinstance(rep, OStar2Rep):
        return [((p - q + 1, 1), q - 1)]
    if q == 2:
        return [((p - 1, 1), 1)]
    return [((p - q + 2, 2), q - 2), ((p - q + 1, 1), q - 1)]


def theta(rep, p: int, q: int) -> LiftResult:
    if p < 0 or q < 0:
        raise ValueError("p and q must be non-negative")
    if q > p:
        inner = theta(contragredient(rep), q, p)
        if inner.is_zero:
            return LiftResult(ZERO, ("duality",) + inner.trace)
        return LiftResult(canonicalize(dual_transport(inner.value)), ("duality",) + inner.trace)
    hit = direct(rep, p, q)
    if hit is not None:
        return hit
    n = _n_of(rep)
    for base, s in _bases(rep, p, q):
        b = direct(rep, *base)
        if b is None or b.is_zero:
            continue
        value = canonicalize(going_up(b.value, base, n, s))
        return LiftResult(value, (f"going_up(s={s},base=({base[0]},{base[1]}))",) + b.trace)
    raise RuntimeError(f"no nonzero base found for {rep} at ({p},{q})")


def theta_ostar2(k: int, p: int, q: int) -> LiftResult:
    return theta(OStar2Rep(k), p, q)


def theta_ostar4(rep: OStar4Rep, p: int, q: int) -> LiftResult:
    return theta(rep, p, q)
