"""Fock-space occurrence, degrees and the joint-harmonics correspondence.

For the pair (Sp(p,q), O*(2n)):

* an Sp(p) x Sp(q)-type with r nonzero a's and s nonzero b's occurs in the
  Fock space iff r, s <= n, and in the joint harmonics iff r + s <= n;
* a U(n)-type, after subtracting p - q from every entry, with r' positive and
  s' negative entries occurs in the Fock space iff r' <= 2p, s' <= 2q, and in
  the joint harmonics iff r' <= p, s' <= q.

The degree is the sum of the absolute values of those entries.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import NoneOccur, NotInHarmonics
from .ktypes import KTypeSp, KTypeU
from .ostar_dual import OStar2Rep, OStar4Rep, in_range, index_range, ktype_at


@dataclass(frozen=True)
class FockProfile:
    occurs_in_fock: bool
    occurs_in_harmonics: bool
    degree: int | None
    r: int
    s: int


def profile_sp(kt: KTypeSp, n: int) -> FockProfile:
    r = sum(1 for a in kt.a if a > 0)
    s = sum(1 for b in kt.b if b > 0)
    fock = r <= n and s <= n
    return FockProfile(fock, r + s <= n, sum(kt.a) + sum(kt.b) if fock else None, r, s)


def profile_u(kt: KTypeU, p: int, q: int) -> FockProfile:
    res = [w - (p - q) for w in kt.w]
    r = sum(1 for x in res if x > 0)
    s = sum(1 for x in res if x < 0)
    fock = r <= 2 * p and s <= 2 * q
    return FockProfile(fock, r <= p and s <= q, sum(abs(x) for x in res) if fock else None, r, s)


def correspond(kt: KTypeSp, p: int, q: int, n: int) -> KTypeU:
    """Sp(p) x Sp(q)-type -> the U(n)-type it pairs with in the joint harmonics."""
    if len(kt.a) != p or len(kt.b) != q:
        raise ValueError(f"{kt} is not an Sp({p})xSp({q})-type")
    prof = profile_sp(kt, n)
    if not prof.occurs_in_harmonics:
        raise NotInHarmonics(f"{kt} does not occur in the joint harmonics for n={n}")
    a = [x for x in kt.a if x > 0]
    b = [x for x in kt.b if x > 0]
    w = a + [0] * (n - len(a) - len(b)) + [-x for x in reversed(b)]
    return KTypeU(tuple(x + p - q for x in w))


def correspond_u(kt: KTypeU, p: int, q: int, n: int) -> KTypeSp:
    if len(kt.w) != n:
        raise ValueError(f"{kt} is not a U({n})-type")
    if not profile_u(kt, p, q).occurs_in_harmonics:
        raise NotInHarmonics(f"{kt} does not occur in the joint harmonics for ({p},{q})")
    res = [w - (p - q) for w in kt.w]
    a = [x for x in res if x > 0]
    b = [-x for x in reversed(res) if x < 0]
    return KTypeSp(tuple(a + [0] * (p - len(a))), tuple(b + [0] * (q - len(b))))


def lowest_degree_ktypes_ostar4(rep: OStar4Rep, p: int, q: int) -> frozenset[KTypeU]:
    """K-types of ``rep`` occurring in the Fock space with minimal degree.

    Degree is piecewise linear in the index k with breakpoints where a
    residual entry changes sign; occurrence also only changes there.  So the
    minimum sits in [first breakpoint - 1, last breakpoint + 1] or at an
    endpoint of the family's index range.
    """
    d = p - q
    k1, k2 = d - rep.mu + 1, d
    lo, hi = index_range(rep)
    cands = {k for k in range(k1 - 1, k2 + 2) if in_range(rep, k)}
    cands |= {e for e in (lo, hi) if e is not None}
    scored = []
    for k in cands:
        kt = ktype_at(rep, k)
        prof = profile_u(kt, p, q)
        if prof.occurs_in_fock:
            scored.append((prof.degree, kt))
    if not scored:
        raise NoneOccur(f"no K-type of {rep} occurs in the Fock space for ({p},{q})")
    best = min(s for s, _ in scored)
    return frozenset(kt for s, kt in scored if s == best)


def lowest_degree_ktypes_ostar2(rep: OStar2Rep, p: int, q: int) -> frozenset[KTypeU]:
    kt = KTypeU((rep.k,))
    if not profile_u(kt, p, q).occurs_in_fock:
        raise NoneOccur(f"(k)=({rep.k}) does not occur in the Fock space for ({p},{q})")
    return frozenset({kt})


def lowest_degree_ktypes(rep, p: int, q: int) -> frozenset[KTypeU]:
    if isinstance(rep, OStar2Rep):
        return lowest_degree_ktypes_ostar2(rep, p, q)
    return lowest_degree_ktypes_ostar4(rep, p, q)


def harmonic_lowest_degree(rep, p: int, q: int) -> frozenset[KTypeU]:
    """Lowest-degree K-types that also lie in the joint harmonics.

    Empty means the lift to Sp(p,q) vanishes.
    """
    try:
        low = lowest_degree_ktypes(rep, p, q)
    except NoneOccur:
        return frozenset()
    return frozenset(kt for kt in low if profile_u(kt, p, q).occurs_in_harmonics)
