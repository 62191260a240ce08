"""Exact scalars, group signatures and the Langlands-parameter data model.

Everything here is immutable.  Harish-Chandra parameters and the mu-part of a
Langlands parameter are plain ints; only nu and infinitesimal-character
entries need the complex-rational ``Scalar``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


# --------------------------------------------------------------------------
# errors
# --------------------------------------------------------------------------

class ThetaError(Exception):
    """Base class; ``str(type(err).__name__)`` is what the CLI prints."""


class ShapeError(ThetaError):
    pass


class ConditionA(ThetaError):
    pass


class ParityError(ThetaError):
    pass


class RankError(ThetaError):
    pass


class LengthMismatch(ThetaError):
    pass


class FamilyConstraint(ThetaError):
    pass


class NotInHarmonics(ThetaError):
    pass


class NoneOccur(ThetaError):
    pass


class ConservationViolation(ThetaError):
    pass


class UnsupportedShape(ThetaError):
    pass


class NoMatch(ThetaError):
    pass


class AmbiguousMatch(ThetaError):
    pass


# --------------------------------------------------------------------------
# scalars
# --------------------------------------------------------------------------

_NUM = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^\s*(?:(?P<re>{_NUM})(?:\s*(?P<sgn>[+-])\s*(?P<im1>\d+(?:/\d+)?)?i)?"
    rf"|(?P<im2>[+-]?(?:\d+(?:/\d+)?)?)i)\s*$"
)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot make an exact rational from {x!r}")


@dataclass(frozen=True, slots=True)
class Scalar:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    @classmethod
    def of(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, str):
            return cls.parse(x)
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not accepted")
        return cls(_frac(x))

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        m = _SCALAR_RE.match(text)
        if not m:
            raise ValueError(f"not an exact scalar: {text!r}")
        if m.group("re") is not None:
            re_part = Fraction(m.group("re"))
            if m.group("sgn"):
                mag = Fraction(m.group("im1") or "1")
                return cls(re_part, mag if m.group("sgn") == "+" else -mag)
            return cls(re_part)
        im = m.group("im2")
        if im in ("", "+"):
            return cls(0, 1)
        if im == "-":
            return cls(0, -1)
        return cls(0, Fraction(im))

    # arithmetic
    def __add__(self, other):
        o = Scalar.of(other)
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = Scalar.of(other)
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return Scalar.of(other) - self

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, other):
        o = Scalar.of(other)
        return Scalar(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        d = _frac(other)
        return Scalar(self.re / d, self.im / d)

    # predicates
    def is_real(self) -> bool:
        return self.im == 0

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def is_half_odd(self) -> bool:
        return self.im == 0 and self.re.denominator == 2

    def is_nonneg_normal(self) -> bool:
        return self.re > 0 or (self.re == 0 and self.im >= 0)

    def normalized(self) -> "Scalar":
        """Representative of {x, -x}: Re > 0, or Re = 0 and Im >= 0."""
        return self if self.is_nonneg_normal() else -self

    def key(self):
        return (self.re, self.im)

    def as_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return int(self.re)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        mag = abs(self.im)
        im_txt = "" if mag == 1 else str(mag)
        if self.re == 0:
            return f"{'-' if self.im < 0 else ''}{im_txt}i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{im_txt}i"

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"


def S(x) -> Scalar:
    return Scalar.of(x)


HALF = Fraction(1, 2)


# --------------------------------------------------------------------------
# groups
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupSig:
    kind: str  # "sp" or "ostar"
    p: int = 0
    q: int = 0
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("sp", "ostar"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if min(self.p, self.q, self.n) < 0:
            raise ValueError("group sizes must be non-negative")

    @classmethod
    def sp(cls, p: int, q: int) -> "GroupSig":
        return cls("sp", p=p, q=q)

    @classmethod
    def ostar(cls, n: int) -> "GroupSig":
        return cls("ostar", n=n)

    @property
    def is_sp(self) -> bool:
        return self.kind == "sp"

    @property
    def rank(self) -> int:
        return self.p + self.q if self.is_sp else self.n

    def levi(self, r: int) -> "GroupSig":
        """Group carrying lambda for a rank-r parameter."""
        if self.is_sp:
            return GroupSig.sp(self.p - r, self.q - r)
        return GroupSig.ostar(self.n - 2 * r)

    def __str__(self):
        return f"Sp({self.p},{self.q})" if self.is_sp else f"O*({2 * self.n})"


# --------------------------------------------------------------------------
# Harish-Chandra parameters and positive systems
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class HCParam:
    left: tuple[int, ...] = ()
    right: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(int(v) for v in self.left))
        object.__setattr__(self, "right", tuple(int(v) for v in self.right))

    def swapped(self) -> "HCParam":
        return HCParam(self.right, self.left)

    def __len__(self):
        return len(self.left) + len(self.right)


@dataclass(frozen=True)
class Block:
    value: int
    m: int  # copies on the left (Sp) / of +value (O*)
    n: int  # copies on the right (Sp) / of -value (O*)

    @property
    def tied(self) -> bool:
        return self.m == self.n > 0


def _strictly_decreasing(xs) -> bool:
    return all(a > b for a, b in zip(xs, xs[1:]))


def _weakly_decreasing(xs) -> bool:
    return all(a >= b for a, b in zip(xs, xs[1:]))


def hc_blocks(group: GroupSig, lam: HCParam) -> list[Block]:
    """Distinct absolute values of lambda, largest first, with multiplicities.

    ``group`` is the group lambda lives on (not the ambient one).
    """
    if group.is_sp:
        vals = sorted(set(lam.left) | set(lam.right), reverse=True)
        return [Block(a, lam.left.count(a), lam.right.count(a)) for a in vals]
    vals = sorted({abs(v) for v in lam.left if v != 0}, reverse=True)
    return [Block(a, lam.left.count(a), lam.left.count(-a)) for a in vals]


def check_hc_shape(group: GroupSig, lam: HCParam) -> None:
    if group.is_sp:
        if len(lam.left) != group.p or len(lam.right) != group.q:
            raise ShapeError(
                f"lambda needs {group.p} left and {group.q} right entries, "
                f"got {len(lam.left)} and {len(lam.right)}")
        for side in (lam.left, lam.right):
            if not _weakly_decreasing(side):
                raise ShapeError(f"lambda side {side} is not weakly decreasing")
            if any(v <= 0 for v in side):
                raise ShapeError(f"lambda entries must be positive integers: {side}")
    else:
        if lam.right:
            raise ShapeError("O* parameters carry a single tuple")
        if len(lam.left) != group.n:
            raise ShapeError(f"lambda needs {group.n} entries, got {len(lam.left)}")
        xs = lam.left
        if not _weakly_decreasing(xs):
            raise ShapeError(f"lambda {xs} is not weakly decreasing")
        if xs.count(0) > 1:
            raise ShapeError("at most one zero entry is allowed")
    for b in hc_blocks(group, lam):
        if abs(b.m - b.n) > 1:
            raise ShapeError(
                f"value {b.value} has multiplicities {b.m}/{b.n}; they may differ by at most one")


def tied_values(group: GroupSig, lam: HCParam) -> list[int]:
    return [b.value for b in hc_blocks(group, lam) if b.tied]


@dataclass(frozen=True)
class PosSystem:
    """Positive system compatible with a fixed lambda, one sign per tied block.

    ``signs`` holds (block value, +1/-1) pairs.  For Sp, +1 means the root
    e_(first e of the block) - f_(first f of the block) is positive.  For O*,
    +1 means e_(first +a) + e_(last -a) is positive.  ``name`` is only a label.
    """

    signs: tuple[tuple[int, int], ...] = ()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        items = self.signs.items() if isinstance(self.signs, Mapping) else self.signs
        norm = tuple(sorted(((int(a), int(s)) for a, s in items), reverse=True))
        object.__setattr__(self, "signs", norm)

    @classmethod
    def of(cls, signs: Mapping[int, int] | None = None, name: str | None = None):
        return cls(tuple((signs or {}).items()), name)

    def sign(self, value: int) -> int:
        for a, s in self.signs:
            if a == value:
                return s
        raise KeyError(value)

    def as_dict(self) -> dict[int, int]:
        return dict(self.signs)

    def flipped(self) -> "PosSystem":
        return PosSystem(tuple((a, -s) for a, s in self.signs), None)

    def renamed(self, name: str | None) -> "PosSystem":
        return PosSystem(self.signs, name)


EMPTY_PSI = PosSystem((), "Psi1")


def check_condition_a(group: GroupSig, lam: HCParam, psi: PosSystem) -> None:
    tv = set(tied_values(group, lam))
    have = set(psi.as_dict())
    if have != tv:
        raise ConditionA(
            f"positive system must give one sign per tied block {sorted(tv, reverse=True)}, "
            f"got {sorted(have, reverse=True)}")
    for a, s in psi.signs:
        if s not in (1, -1):
            raise ConditionA(f"sign for block {a} must be +1 or -1")


# -- perturbation: a regular vector whose positive roots are exactly Psi ----

def regular_vector(group: GroupSig, lam: HCParam, psi: PosSystem) -> tuple[Fraction, ...]:
    """A regular element x with Psi = {alpha : <x, alpha> > 0}.

    Sp coordinates are ordered e_1..e_p, f_1..f_q.  Each block of equal values
    is spread over (a - 1/2, a + 1/2), alternating sides as condition (A)
    forces.
    """
    if group.is_sp:
        x: list[Fraction | None] = [None] * (len(lam.left) + len(lam.right))
        off = len(lam.left)
        for b in hc_blocks(group, lam):
            es = [i for i, v in enumerate(lam.left) if v == b.value]
            fs = [off + j for j, v in enumerate(lam.right) if v == b.value]
            first_e = b.m > b.n or (b.tied and psi.sign(b.value) > 0)
            L = b.m + b.n
            ei = fi = 0
            side_e = first_e
            for t in range(L):
                val = b.value + Fraction(L - t, 2 * (L + 1))
                if side_e:
                    x[es[ei]] = val
                    ei += 1
                else:
                    x[fs[fi]] = val
                    fi += 1
                side_e = not side_e
        return tuple(x)  # type: ignore[arg-type]
    xs = lam.left
    x = [Fraction(0)] * len(xs)
    for b in hc_blocks(group, lam):
        ps = [i for i, v in enumerate(xs) if v == b.value]
        ns = [i for i, v in enumerate(xs) if v == -b.value][::-1]
        first_p = b.m > b.n or (b.tied and psi.sign(b.value) > 0)
        L = b.m + b.n
        pi = ni = 0
        side_p = first_p
        for t in range(L):
            y = b.value + Fraction(L - t, 2 * (L + 1))
            if side_p:
                x[ps[pi]] = y
                pi += 1
            else:
                x[ns[ni]] = -y
                ni += 1
            side_p = not side_p
    return tuple(x)


def _sp_roots(p: int, q: int):
    """All roots of type C_{p+q} as (vector, is_compact)."""
    N = p + q
    side = [0] * p + [1] * q
    for i in range(N):
        v = [0] * N
        v[i] = 2
        yield tuple(v), True
        yield tuple(-c for c in v), True
    for i, j in itertools.combinations(range(N), 2):
        for si, sj in ((1, -1), (1, 1)):
            v = [0] * N
            v[i], v[j] = si, sj
            compact = side[i] == side[j]
            yield tuple(v), compact
            yield tuple(-c for c in v), compact


def _ostar_roots(n: int):
    """Roots of type D_n: e_i - e_j compact, +-(e_i + e_j) noncompact."""
    for i, j in itertools.permutations(range(n), 2):
        v = [0] * n
        v[i], v[j] = 1, -1
        yield tuple(v), True
    for i, j in itertools.combinations(range(n), 2):
        v = [0] * n
        v[i] = v[j] = 1
        yield tuple(v), False
        yield tuple(-c for c in v), False


def positive_roots(group: GroupSig, lam: HCParam, psi: PosSystem):
    """List of (root, is_compact) in the full positive system."""
    x = regular_vector(group, lam, psi)
    roots = _sp_roots(group.p, group.q) if group.is_sp else _ostar_roots(group.n)
    out = []
    for v, c in roots:
        s = sum(a * b for a, b in zip(v, x))
        if s > 0:
            out.append((v, c))
    return out


def rho_c(group: GroupSig) -> tuple[Fraction, ...]:
    if group.is_sp:
        return tuple(Fraction(v) for v in
                     list(range(group.p, 0, -1)) + list(range(group.q, 0, -1)))
    n = group.n
    return tuple(Fraction(n - 1 - 2 * i, 2) for i in range(n))


def rho_n(group: GroupSig, lam: HCParam, psi: PosSystem) -> tuple[Fraction, ...]:
    acc = [Fraction(0)] * group.rank
    for v, c in positive_roots(group, lam, psi):
        if not c:
            for i, a in enumerate(v):
                acc[i] += Fraction(a, 2)
    return tuple(acc)


# -- condition (A) by orderings ------------------------------------------

def _coords(group: GroupSig, lam: HCParam):
    """(value, side, index-on-side) for every coordinate, Sp only."""
    return [(v, 0, i) for i, v in enumerate(lam.left)] + \
           [(v, 1, j) for j, v in enumerate(lam.right)]


def psi_from_target(group: GroupSig, lam: HCParam, target: HCParam, name=None) -> PosSystem:
    """The system making ``target`` dominant, checked against lambda.

    ``target`` must be a regular, compactly dominant Sp tuple on the same group.
    Raises ConditionA if that system does not satisfy condition (A) for lambda.
    """
    if not group.is_sp:
        raise UnsupportedShape("named positive systems are defined for Sp only")
    check_hc_shape(group, lam)
    tx = list(target.left) + list(target.right)
    if len(set(tx)) != len(tx) or any(t <= 0 for t in tx):
        raise ValueError(f"target {target} is not regular")
    if not (_strictly_decreasing(target.left) and _strictly_decreasing(target.right)):
        raise ValueError(f"target {target} is not compactly dominant")
    coords = _coords(group, lam)
    order = sorted(range(len(coords)), key=lambda k: -tx[k])
    vals = [coords[k][0] for k in order]
    if not _weakly_decreasing(vals):
        raise ConditionA(f"lambda {fmt_hc(group, lam)} is not dominant for {name or target}")
    for a, b in zip(order, order[1:]):
        if coords[a][0] == coords[b][0] and coords[a][1] == coords[b][1]:
            raise ConditionA(
                f"{name or 'system'} has a vanishing compact simple root for "
                f"lambda {fmt_hc(group, lam)}")
    signs = {}
    off = len(lam.left)
    for b in hc_blocks(group, lam):
        if b.tied:
            i = lam.left.index(b.value)
            j = lam.right.index(b.value)
            signs[b.value] = 1 if tx[i] > tx[off + j] else -1
    return PosSystem.of(signs, name)


def named_target(name: str, p: int, q: int) -> HCParam:
    """Dominance target of a named system on Sp(p, q)."""
    down = lambda hi, lo: tuple(range(hi, lo - 1, -1))
    if name == "Psi1" and q == 0:
        return HCParam(down(p, 1), ())
    if name == "Psi2" and q == 1:
        return HCParam(down(p, 1), (p + 1,))
    if name == "Psi3" and q == 1:
        return HCParam(down(p + 1, 2), (1,))
    if name == "Psi4" and q == 1 and p >= 1:
        return HCParam((p + 1,) + down(p - 1, 1), (p,))
    if name == "Psi5" and q == 2:
        return HCParam(down(p, 1), (p + 2, p + 1))
    if name == "Psi6" and q == 2:
        return HCParam(down(p + 2, 3), (2, 1))
    if name == "Psi7" and (p, q) == (2, 2):
        return HCParam((4, 2), (3, 1))
    raise UnsupportedShape(f"{name} is not defined on Sp({p},{q})")


NAMED = ("Psi1", "Psi2", "Psi3", "Psi4", "Psi5", "Psi6", "Psi7")


def named_psi(name: str, group: GroupSig, lam: HCParam) -> PosSystem:
    """Resolve a named system against lambda's own group Sp(p-r, q-r)."""
    return psi_from_target(group, lam, named_target(name, group.p, group.q), name)


def label_psi(group: GroupSig, lam: HCParam, psi: PosSystem) -> PosSystem:
    """Attach the first matching Psi1..Psi7 name, if any; for display only."""
    if psi.name or not group.is_sp:
        return psi
    for name in NAMED:
        try:
            cand = named_psi(name, group, lam)
        except (UnsupportedShape, ConditionA, ValueError):
            continue
        if cand.signs == psi.signs:
            return psi.renamed(name)
    return psi


def all_systems(group: GroupSig, lam: HCParam) -> list[PosSystem]:
    tv = tied_values(group, lam)
    return [PosSystem.of(dict(zip(tv, signs)))
            for signs in itertools.product((1, -1), repeat=len(tv))]


def has_root(group: GroupSig, lam: HCParam, psi: PosSystem, root: Mapping) -> bool:
    """Whether ``root`` lies in the full positive system built from ``psi``.

    Roots are mappings from coordinate labels ('e', i) / ('f', j) (1-based) to
    coefficients, e.g. {('e', 1): -1, ('f', 1): 1} for -e1+f1.
    """
    x = regular_vector(group, lam, psi)
    off = len(lam.left)
    s = Fraction(0)
    for (side, idx), c in root.items():
        s += c * x[idx - 1 if side == "e" else off + idx - 1]
    return s > 0


def solve_psi(group: GroupSig, lam: HCParam, required: Iterable[Mapping] = ()) -> PosSystem:
    """Unique system satisfying condition (A) and containing ``required`` roots."""
    check_hc_shape(group, lam)
    req = list(required)
    hits = [psi for psi in all_systems(group, lam)
            if all(has_root(group, lam, psi, root) for root in req)]
    if len(hits) != 1:
        raise ConditionA(f"{len(hits)} positive systems satisfy the constraints for "
                         f"lambda {fmt_hc(group, lam)}")
    return hits[0]


# --------------------------------------------------------------------------
# Langlands parameters
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class LanglandsParam:
    group: GroupSig
    r: int
    lam: HCParam
    psi: PosSystem
    mu: tuple[int, ...] = ()
    nu: tuple[Scalar, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(int(m) for m in self.mu))
        object.__setattr__(self, "nu", tuple(Scalar.of(v) for v in self.nu))

    @property
    def levi(self) -> GroupSig:
        return self.group.levi(self.r)

    def __str__(self) -> str:
        return fmt_param(self)


def make_param(group: GroupSig, lam_left: Sequence[int] = (), lam_right: Sequence[int] = (),
               psi: str | PosSystem | None = None, mu: Sequence[int] = (),
               nu: Sequence = (), r: int | None = None) -> LanglandsParam:
    """Convenience constructor; a string ``psi`` is resolved as a named system."""
    r = len(mu) if r is None else r
    lam = HCParam(tuple(lam_left), tuple(lam_right))
    levi = group.levi(r)
    if isinstance(psi, str):
        psi = named_psi(psi, levi, lam)
    elif psi is None:
        psi = solve_psi(levi, lam) if levi.is_sp else PosSystem()
    return LanglandsParam(group, r, lam, psi, tuple(mu), tuple(nu))


def validate(param: LanglandsParam) -> None:
    g = param.group
    r = param.r
    if r < 0:
        raise RankError("r must be non-negative")
    if g.is_sp and r > min(g.p, g.q):
        raise RankError(f"r={r} exceeds min(p,q)={min(g.p, g.q)}")
    if not g.is_sp and 2 * r > g.n:
        raise RankError(f"2r={2 * r} exceeds n={g.n}")
    if len(param.mu) != r or len(param.nu) != r:
        raise ShapeError(f"mu and nu must both have length r={r}")
    if any(m <= 0 for m in param.mu):
        raise ShapeError("mu entries must be positive integers")
    levi = param.levi
    check_hc_shape(levi, param.lam)
    check_condition_a(levi, param.lam, param.psi)
    for m, v in zip(param.mu, param.nu):
        if m % 2 == 0 and v.is_zero():
            raise ParityError(f"mu={m} is even while nu=0")


def canonicalize(param: LanglandsParam) -> LanglandsParam:
    validate(param)
    pairs = [(m, v.normalized()) for m, v in zip(param.mu, param.nu)]
    pairs.sort(key=lambda t: (t[0], t[1].re, t[1].im), reverse=True)
    return LanglandsParam(param.group, param.r, param.lam, param.psi,
                          tuple(m for m, _ in pairs), tuple(v for _, v in pairs))


def dual_transport(param: LanglandsParam) -> LanglandsParam:
    """Carry a parameter for Sp(q,p) to the contragredient picture on Sp(p,q).

    Sides of lambda swap, tied signs flip, (mu, nu) are untouched.
    """
    g = param.group
    if not g.is_sp:
        raise UnsupportedShape("dual transport is an Sp operation")
    return LanglandsParam(GroupSig.sp(g.q, g.p), param.r, param.lam.swapped(),
                          param.psi.flipped(), param.mu, param.nu)


# --------------------------------------------------------------------------
# infinitesimal characters
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class InfChar:
    entries: tuple[Scalar, ...]
    weyl: str  # "C" or "D"

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(Scalar.of(e) for e in self.entries))
        if self.weyl not in ("C", "D"):
            raise ValueError("weyl must be 'C' or 'D'")

    def __len__(self):
        return len(self.entries)


def _multiset(xs):
    return sorted((x.normalized().key() for x in xs))


def equal_mod_weyl(a: InfChar, b: InfChar) -> bool:
    if a.weyl != b.weyl or len(a) != len(b):
        raise LengthMismatch(f"cannot compare type {a.weyl}/{len(a)} with {b.weyl}/{len(b)}")
    if _multiset(a.entries) != _multiset(b.entries):
        return False
    if a.weyl == "C" or any(x.is_zero() for x in a.entries):
        return True
    neg = lambda xs: sum(1 for x in xs if not x.is_nonneg_normal())
    return neg(a.entries) % 2 == neg(b.entries) % 2


# --------------------------------------------------------------------------
# formatting and JSON
# --------------------------------------------------------------------------

def fmt_hc(group: GroupSig, lam: HCParam) -> str:
    j = lambda xs: ",".join(str(v) for v in xs)
    if group.is_sp:
        return f"({j(lam.left)};{j(lam.right)})" if lam.right else f"({j(lam.left)})"
    return f"({j(lam.left)})"


def fmt_param(param: LanglandsParam) -> str:
    if param.group.rank == 0:
        return "π(0,∅)"
    lam = fmt_hc(param.levi, param.lam) if len(param.lam) else "∅"
    psi = param.psi.name or "Ψ" + "".join("+" if s > 0 else "-" for _, s in param.psi.signs)
    if param.r == 0:
        return f"π({lam},{psi})"
    mu = ",".join(str(m) for m in param.mu)
    nu = ",".join(str(v) for v in param.nu)
    if param.r > 1:
        mu, nu = f"({mu})", f"({nu})"
    return f"π({param.r},{lam},{psi},{mu},{nu})"


def scalar_to_json(x: Scalar) -> dict:
    return {"re": str(x.re), "im": str(x.im)}


def scalar_from_json(obj) -> Scalar:
    if isinstance(obj, Mapping):
        return Scalar(Fraction(str(obj.get("re", "0"))), Fraction(str(obj.get("im", "0"))))
    if isinstance(obj, (int, str)):
        return Scalar.of(str(obj))
    raise ValueError(f"bad scalar JSON: {obj!r}")


def group_to_json(g: GroupSig) -> dict:
    return {"kind": "sp", "p": g.p, "q": g.q} if g.is_sp else {"kind": "ostar", "n": g.n}


def group_from_json(obj) -> GroupSig:
    kind = obj["kind"].lower()
    if kind == "sp":
        return GroupSig.sp(int(obj["p"]), int(obj["q"]))
    if kind in ("ostar", "o*"):
        return GroupSig.ostar(int(obj["n"]))
    raise ValueError(f"unknown group kind {obj['kind']!r}")


def psi_to_json(levi: GroupSig, lam: HCParam, psi: PosSystem) -> dict:
    index = {b.value: i + 1 for i, b in enumerate(hc_blocks(levi, lam))}
    return {"name": psi.name,
            "tied_signs": {str(index[a]): "+" if s > 0 else "-" for a, s in psi.signs}}


def psi_from_json(levi: GroupSig, lam: HCParam, obj) -> PosSystem:
    obj = obj or {}
    name = obj.get("name")
    ts = obj.get("tied_signs")
    if ts is None:
        if name is None:
            return solve_psi(levi, lam) if levi.is_sp else PosSystem()
        return named_psi(name, levi, lam)
    blocks = hc_blocks(levi, lam)
    signs = {}
    for k, s in ts.items():
        i = int(k)
        if not 1 <= i <= len(blocks):
            raise ConditionA(f"tied block index {i} out of range")
        signs[blocks[i - 1].value] = 1 if s in ("+", 1, "+1") else -1
    return PosSystem.of(signs, name)


def param_to_json(param: LanglandsParam) -> dict:
    return {
        "group": group_to_json(param.group),
        "r": param.r,
        "lambda": {"left": [str(v) for v in param.lam.left],
                   "right": [str(v) for v in param.lam.right]},
        "psi": psi_to_json(param.levi, param.lam, param.psi),
        "mu": list(param.mu),
        "nu": [scalar_to_json(v) for v in param.nu],
    }


def _int_entry(v) -> int:
    s = Scalar.of(str(v)) if not isinstance(v, Scalar) else v
    if not s.is_integer():
        raise ShapeError(f"lambda entry {v!r} is not an integer")
    return s.as_int()


def param_from_json(obj) -> LanglandsParam:
    group = group_from_json(obj["group"])
    r = int(obj.get("r", 0))
    lam_obj = obj.get("lambda") or {}
    lam = HCParam(tuple(_int_entry(v) for v in lam_obj.get("left", [])),
                  tuple(_int_entry(v) for v in lam_obj.get("right", [])))
    levi = group.levi(r)
    check_hc_shape(levi, lam)
    psi = psi_from_json(levi, lam, obj.get("psi"))
    mu = tuple(int(m) for m in obj.get("mu", []))
    nu = tuple(scalar_from_json(v) for v in obj.get("nu", []))
    param = LanglandsParam(group, r, lam, psi, mu, nu)
    validate(param)
    return param


def infchar_to_json(ic: InfChar) -> dict:
    return {"weyl": ic.weyl, "entries": [str(e) for e in ic.entries]}
