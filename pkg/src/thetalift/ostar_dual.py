"""Irreducible representations of O*(4) and O*(2) = U(1).

O*(4) has four families P, D, Dbar, F keyed by (l1, l2).  Their K-types are
the U(2)-types (k + l1 - l2 - 1, k) for k in a family-dependent index range,
each with multiplicity one.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    AmbiguousMatch, FamilyConstraint, GroupSig, HCParam, InfChar, LanglandsParam,
    PosSystem, Scalar,
)
from .ktypes import KTypeU, norm

FAMILIES = ("P", "D", "Dbar", "F")
U2 = GroupSig.ostar(2)


@dataclass(frozen=True)
class OStar4Rep:
    family: str
    l1: Scalar
    l2: Scalar

    def __post_init__(self):
        object.__setattr__(self, "l1", Scalar.of(self.l1))
        object.__setattr__(self, "l2", Scalar.of(self.l2))

    @property
    def mu(self) -> int:
        return (self.l1 - self.l2).as_int()

    def __str__(self):
        return f"{self.family}_{{{self.l1},{self.l2}}}"


@dataclass(frozen=True)
class OStar2Rep:
    k: int

    def __str__(self):
        return f"chi_{self.k}"


def make(family: str, l1, l2) -> OStar4Rep:
    if family not in FAMILIES:
        raise FamilyConstraint(f"unknown family {family!r}")
    a, b = Scalar.of(l1), Scalar.of(l2)
    diff = a - b
    if not diff.is_integer() or diff.as_int() < 1:
        raise FamilyConstraint(f"l1 - l2 = {diff} must be an integer >= 1")
    s = a + b
    if family == "P":
        if a.is_integer() or b.is_integer():
            raise FamilyConstraint("P needs l1, l2 not integers")
        if s.re < 0:
            raise FamilyConstraint(f"P needs Re(l1 + l2) >= 0, got {s.re}")
    else:
        if not (a.is_integer() and b.is_integer()):
            raise FamilyConstraint(f"{family} needs integer l1, l2")
        t = s.as_int()
        if family == "D" and t < 0:
            raise FamilyConstraint(f"D needs l1 + l2 >= 0, got {t}")
        if family == "Dbar" and t > 0:
            raise FamilyConstraint(f"Dbar needs l1 + l2 <= 0, got {t}")
        if family == "F" and t < 1:
            raise FamilyConstraint(f"F needs l1 + l2 >= 1, got {t}")
    return OStar4Rep(family, a, b)


def index_range(rep: OStar4Rep) -> tuple[int | None, int | None]:
    """Inclusive range of k with (k + l1 - l2 - 1, k) a K-type; None = unbounded."""
    if rep.family == "P":
        return None, None
    l1, l2 = rep.l1.as_int(), rep.l2.as_int()
    if rep.family == "D":
        return l2 + 1, None
    if rep.family == "Dbar":
        return None, l2
    return 1 - l1, l2


def in_range(rep: OStar4Rep, k: int) -> bool:
    lo, hi = index_range(rep)
    return (lo is None or k >= lo) and (hi is None or k <= hi)


def ktype_at(rep: OStar4Rep, k: int) -> KTypeU:
    return KTypeU((k + rep.mu - 1, k))


def ktypes_in_window(rep: OStar4Rep, lo: int, hi: int) -> list[KTypeU]:
    if lo > hi:
        raise ValueError("empty window")
    return [ktype_at(rep, k) for k in range(lo, hi + 1) if in_range(rep, k)]


def lowest_ktypes(rep: OStar4Rep) -> frozenset[KTypeU]:
    """All norm minimizers in the K-type set.

    The norm (k + mu)^2 + (k - 1)^2 is a convex quadratic in k with real
    minimizer (1 - mu)/2, so it is enough to look two steps either side of it
    plus the range endpoints.
    """
    centre = Fraction(1 - rep.mu, 2)
    lo, hi = index_range(rep)
    cands = {k for k in range(int(centre) - 3, int(centre) + 4) if in_range(rep, k)}
    cands |= {e for e in (lo, hi) if e is not None}
    scored = [(norm(ktype_at(rep, k), U2), k) for k in cands]
    best = min(s for s, _ in scored)
    return frozenset(ktype_at(rep, k) for s, k in scored if s == best)


def lowest_ktype(rep: OStar4Rep) -> KTypeU:
    lk = lowest_ktypes(rep)
    if len(lk) != 1:
        raise AmbiguousMatch(f"{rep} has {len(lk)} lowest K-types: "
                             + ", ".join(str(k) for k in sorted(lk)))
    return next(iter(lk))


def contragredient(rep):
    if isinstance(rep, OStar2Rep):
        return OStar2Rep(-rep.k)
    if rep.family in ("P", "F"):
        return rep
    other = "Dbar" if rep.family == "D" else "D"
    return OStar4Rep(other, -rep.l2, -rep.l1)


def as_langlands(rep) -> LanglandsParam:
    """Langlands parameter; P and F share theirs and are told apart by ``rep.family``."""
    if isinstance(rep, OStar2Rep):
        return LanglandsParam(GroupSig.ostar(1), 0, HCParam((rep.k,)), PosSystem())
    if rep.family in ("P", "F"):
        return LanglandsParam(U2, 1, HCParam(), PosSystem(), (rep.mu,), (rep.l1 + rep.l2,))
    l1, l2 = rep.l1.as_int(), rep.l2.as_int()
    signs = {}
    if l1 == -l2:
        signs[l1] = 1 if rep.family == "D" else -1
    name = "e1+e2" if rep.family == "D" else "-(e1+e2)"
    return LanglandsParam(U2, 0, HCParam((l1, l2)), PosSystem.of(signs, name))


def infinitesimal_character(rep) -> InfChar:
    if isinstance(rep, OStar2Rep):
        return InfChar((Scalar(rep.k),), "D")
    return InfChar((rep.l1, rep.l2), "D")


def rep_to_json(rep) -> dict:
    if isinstance(rep, OStar2Rep):
        return {"k": rep.k}
    return {"family": rep.family, "l1": str(rep.l1), "l2": str(rep.l2)}


def rep_from_json(obj):
    if "k" in obj:
        return OStar2Rep(int(obj["k"]))
    return make(obj["family"], str(obj["l1"]), str(obj["l2"]))
