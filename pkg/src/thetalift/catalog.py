"""Catalogs of small Sp(p,1), Sp(p,2) and Sp(2,2) representations.

Three families of parameters are listed here, each singled out by the shape of
its lowest K-types:

* ``A`` on Sp(p,1): every lowest K-type looks like (a1,0,...,0; b1);
* ``B`` on Sp(p,2): every lowest K-type looks like (0,...,0; b1,b2);
* ``C`` on Sp(2,2): every lowest K-type looks like (a1,a2; 0,0).

Entries keep nu symbolic.  ``resolve_unique`` pins nu down from an
infinitesimal character, which is how a lift is identified from its lowest
K-type and infinitesimal character.

The hand-made case tables for the first coordinate of the lowest K-types are
reproduced literally in ``first_coord_rows`` so they can be checked against
the general lowest K-type algorithm.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .core import (
    AmbiguousMatch, ConditionA, GroupSig, HCParam, InfChar, LanglandsParam,
    NoMatch, ParityError, PosSystem, Scalar, ShapeError, ThetaError, UnsupportedShape,
    all_systems, canonicalize, check_hc_shape, equal_mod_weyl, fmt_hc, group_to_json,
    has_root, named_psi, psi_to_json, solve_psi,
)
from .ktypes import KTypeSp, lowest_ktypes_sp_data


@dataclass(frozen=True)
class CatalogEntry:
    """A parameter with nu left open."""

    group: GroupSig
    r: int
    lam: HCParam
    psi: PosSystem
    mu: tuple[int, ...]
    case_tag: str
    split: str | None = None

    @property
    def levi(self) -> GroupSig:
        return self.group.levi(self.r)

    @property
    def key(self):
        return (self.group, self.r, self.lam, self.psi.signs, tuple(sorted(self.mu, reverse=True)))

    def bind(self, nu: Iterable) -> LanglandsParam:
        return canonicalize(LanglandsParam(self.group, self.r, self.lam, self.psi,
                                           self.mu, tuple(Scalar.of(v) for v in nu)))

    def lowest_ktypes(self) -> frozenset[KTypeSp]:
        return lowest_ktypes_sp_data(self.group, self.r, self.lam, self.psi, self.mu)

    def __str__(self):
        lam = fmt_hc(self.levi, self.lam) if len(self.lam) else "∅"
        psi = self.psi.name or "Ψ" + "".join("+" if s > 0 else "-" for _, s in self.psi.signs)
        if self.r == 0:
            return f"π({lam},{psi})"
        mu = ",".join(map(str, self.mu))
        nu = ",".join(f"ν{i}" for i in range(1, self.r + 1)) if self.r > 1 else "ν"
        if self.r > 1:
            mu, nu = f"({mu})", f"({nu})"
        return f"π({self.r},{lam},{psi},{mu},{nu})"

    def to_json(self) -> dict:
        return {
            "group": group_to_json(self.group),
            "r": self.r,
            "lambda": {"left": [str(v) for v in self.lam.left],
                       "right": [str(v) for v in self.lam.right]},
            "psi": psi_to_json(self.levi, self.lam, self.psi),
            "mu": list(self.mu),
            "nu": "symbolic",
            "case": self.case_tag,
            "split": self.split,
        }


def down(hi: int, lo: int = 1) -> tuple[int, ...]:
    return tuple(range(hi, lo - 1, -1))


def _entry(p, q, left, right, psi, mu, tag, split=None) -> CatalogEntry | None:
    """Build an entry, or None when the data is not a valid parameter."""
    group = GroupSig.sp(p, q)
    r = len(mu)
    lam = HCParam(tuple(left), tuple(right))
    levi = group.levi(r)
    try:
        check_hc_shape(levi, lam)
        if isinstance(psi, str):
            psi = named_psi(psi, levi, lam)
        elif psi is None:
            psi = solve_psi(levi, lam)
        elif isinstance(psi, list):
            psi = solve_psi(levi, lam, psi)
    except (ShapeError, ConditionA):
        return None
    return CatalogEntry(group, r, lam, psi, tuple(sorted(mu, reverse=True)), tag, split)


def _keep(entries) -> list[CatalogEntry]:
    out, seen = [], set()
    for e in entries:
        if e is not None and e.key not in seen:
            seen.add(e.key)
            out.append(e)
    return out


def _fits(e: CatalogEntry, bound: int) -> bool:
    vals = list(e.lam.left) + list(e.lam.right) + list(e.mu)
    return all(v <= bound for v in vals)


def _doubled(top: int, d: int) -> tuple[int, ...]:
    """(top, ..., d+1, d, d, d-1, ..., 1)."""
    return down(top, d + 1) + (d, d) + down(d - 1)


# --------------------------------------------------------------------------
# A on Sp(p,1)
# --------------------------------------------------------------------------

def all_templates(p: int, q: int, bound: int, r_values=None) -> Iterator[CatalogEntry]:
    """Every valid nu-free parameter on Sp(p,q) with entries <= bound."""
    group = GroupSig.sp(p, q)
    rs = range(min(p, q) + 1) if r_values is None else r_values
    for r in rs:
        levi = group.levi(r)
        lefts = list(itertools.combinations_with_replacement(range(bound, 0, -1), p - r))
        rights = list(itertools.combinations_with_replacement(range(bound, 0, -1), q - r))
        mus = list(itertools.combinations_with_replacement(range(bound, 0, -1), r))
        for left in lefts:
            for right in rights:
                lam = HCParam(left, right)
                try:
                    check_hc_shape(levi, lam)
                except ShapeError:
                    continue
                for psi in all_systems(levi, lam):
                    for mu in mus:
                        yield CatalogEntry(group, r, lam, psi, mu, "template")


def enumerate_A_p1(p: int, value_bound: int) -> list[CatalogEntry]:
    if p < 1:
        raise ValueError("p must be at least 1")
    if p == 1:
        return [CatalogEntry(e.group, e.r, e.lam, e.psi, e.mu, "all")
                for e in all_templates(1, 1, value_bound)]
    b = value_bound
    items = []
    for l1 in range(1, b + 1):
        for d1 in range(1, b + 1):
            if d1 >= l1 > p - 1:
                items.append(_entry(p, 1, (l1,) + down(p - 1), (d1,), "Psi2", (), "A(1)"))
            if l1 >= d1 > p - 1:
                items.append(_entry(p, 1, (l1,) + down(p - 1), (d1,), "Psi4", (), "A(2)"))
    for l1 in range(p - 1, b + 1):
        items.append(_entry(p, 1, (l1,) + down(p - 1), (p - 1,), "Psi4", (), "A(3)"))
    for l1 in range(1, b + 1):
        for d1 in range(1, p - 1):
            items.append(_entry(p, 1, (l1,) + _doubled(p - 2, d1), (d1,), None, (), "A(4)"))
    for mu in range(1, b + 1):
        items.append(_entry(p, 1, down(p - 1), (), "Psi1", (mu,), "A(5)"))
    for l1 in range(p, b + 1):
        for mu in range(1, min(b, 2 * p - 3) + 1):
            items.append(_entry(p, 1, (l1,) + down(p - 2), (), "Psi1", (mu,), "A(6)"))
    return [e for e in _keep(items) if _fits(e, b)]


# --------------------------------------------------------------------------
# B on Sp(p,2)
# --------------------------------------------------------------------------

E1_MINUS_F1 = {("e", 1): 1, ("f", 1): -1}
E1_MINUS_F2 = {("e", 1): 1, ("f", 2): -1}
E2_MINUS_F1 = {("e", 2): 1, ("f", 1): -1}


def _neg(root):
    return {k: -c for k, c in root.items()}


BPLUS = {"B(1)", "B(4)", "B(5)", "B(7)"}


def enumerate_B_p2(p: int, value_bound: int) -> list[CatalogEntry]:
    """The seven-item list; ``split`` is 'Bplus' or 'Bminus'."""
    if p < 2:
        raise ValueError("p must be at least 2")
    b = value_bound
    items = []
    pairs = [(d1, d2) for d1 in range(1, b + 1) for d2 in range(1, b + 1)]
    for d1, d2 in pairs:
        if d2 >= p:
            items.append(_entry(p, 2, down(p), (d1, d2), "Psi5", (), "B(1)"))
        if d2 <= p - 1 <= d1:
            items.append(_entry(p, 2, _doubled(p - 1, d2), (d1, d2),
                                [_neg(E1_MINUS_F1), E1_MINUS_F2], (), "B(2)"))
        if d1 <= p - 2:
            for rest in itertools.combinations_with_replacement(range(p - 2, 0, -1), p - 1):
                items.append(_entry(p, 2, (p - 2,) + rest, (d1, d2), None, (), "B(3)"))
    for d1 in range(1, b + 1):
        for mu in range(1, b + 1):
            if d1 > p - 1 and mu <= 2 * p - 1:
                items.append(_entry(p, 2, down(p - 1), (d1,), "Psi2", (mu,), "B(4)"))
            if d1 <= p - 2 and mu <= 2 * p - 3:
                items.append(_entry(p, 2, _doubled(p - 2, d1), (d1,), None, (mu,), "B(6)"))
    for mu in range(1, min(b, 2 * p - 2) + 1):
        items.append(_entry(p, 2, down(p - 1), (p - 1,), "Psi2", (mu,), "B(5)"))
    for m1 in range(1, min(b, 2 * p - 3) + 1):
        for m2 in range(1, m1 + 1):
            items.append(_entry(p, 2, down(p - 2), (), "Psi1", (m1, m2), "B(7)"))
    out = []
    for e in _keep(items):
        if _fits(e, b):
            split = "Bplus" if e.case_tag in BPLUS else "Bminus"
            out.append(CatalogEntry(e.group, e.r, e.lam, e.psi, e.mu, e.case_tag, split))
    return out


def enumerate_B_p2_six(p: int, value_bound: int) -> list[CatalogEntry]:
    """The same set written as the six-case list used for the (p,2) lifts.

    Cases (1), (4), (6) form the plus part and (2), (3), (5) the minus part.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    b = value_bound
    items = []
    for d1 in range(1, b + 1):
        for d2 in range(1, b + 1):
            if d1 > d2 >= p:
                items.append(_entry(p, 2, down(p), (d1, d2), "Psi5", (), "B6(1)", "Bplus"))
            if d1 >= p - 1 >= d2:
                items.append(_entry(p, 2, _doubled(p - 1, d2), (d1, d2),
                                    [_neg(E1_MINUS_F1), E1_MINUS_F2], (), "B6(2)", "Bminus"))
            if d1 <= p - 2:
                for rest in itertools.combinations_with_replacement(range(p - 2, 0, -1), p - 1):
                    items.append(_entry(p, 2, (p - 2,) + rest, (d1, d2), None, (),
                                        "B6(3)", "Bminus"))
    for d in range(1, b + 1):
        for mu in range(1, b + 1):
            if d >= p - 1 and (mu < 2 * p - 1 or (mu == 2 * p - 1 and d > p - 1)):
                items.append(_entry(p, 2, down(p - 1), (d,), "Psi2", (mu,), "B6(4)", "Bplus"))
            if d <= p - 2 and mu <= 2 * p - 3:
                items.append(_entry(p, 2, _doubled(p - 2, d), (d,), None, (mu,),
                                    "B6(5)", "Bminus"))
    for m1 in range(1, min(b, 2 * p - 3) + 1):
        for m2 in range(1, m1 + 1):
            items.append(_entry(p, 2, down(p - 2), (), "Psi1", (m1, m2), "B6(6)", "Bplus"))
    return [e for e in _keep(items) if _fits(e, b)]


# --------------------------------------------------------------------------
# C on Sp(2,2)
# --------------------------------------------------------------------------

def enumerate_C_22(value_bound: int) -> list[CatalogEntry]:
    b = value_bound
    items = []
    for l1 in range(1, b + 1):
        for l2 in range(1, b + 1):
            items.append(_entry(2, 2, (l1, l2), (2, 1), "Psi6", (), "C(1)"))
        items.append(_entry(2, 2, (l1, 1), (1, 1), "Psi7", (), "C(2)"))
        if l1 > 1:
            items.append(_entry(2, 2, (l1,), (1,), "Psi3", (3,), "C(3)"))
        for mu in (1, 2):
            items.append(_entry(2, 2, (l1,), (1,), "Psi3", (mu,), "C(4)"))
    items.append(_entry(2, 2, (), (), "Psi1", (1, 1), "C(5)"))
    return [e for e in _keep(items) if _fits(e, b)]


def enumerate_catalog(which: str, p: int | None, value_bound: int) -> list[CatalogEntry]:
    which = which.upper()
    if which == "A":
        return enumerate_A_p1(p, value_bound)
    if which == "B":
        return enumerate_B_p2(p, value_bound)
    if which == "C":
        return enumerate_C_22(value_bound)
    raise ValueError(f"unknown catalog {which!r}")


# -- brute force ------------------------------------------------------------

def _shape_A(kt: KTypeSp) -> bool:
    return all(a == 0 for a in kt.a[1:])


def _shape_B(kt: KTypeSp) -> bool:
    return all(a == 0 for a in kt.a)


def _shape_C(kt: KTypeSp) -> bool:
    return all(b == 0 for b in kt.b)


def brute_force(which: str, p: int | None, bound: int) -> set:
    """Keys of all valid parameters with entries <= bound and the right K-type shape."""
    which = which.upper()
    p, q, shape = {"A": (p, 1, _shape_A), "B": (p, 2, _shape_B), "C": (2, 2, _shape_C)}[which]
    return {e.key for e in all_templates(p, q, bound)
            if all(shape(kt) for kt in e.lowest_ktypes())}


# --------------------------------------------------------------------------
# first-coordinate case tables
# --------------------------------------------------------------------------

def _half(x) -> Fraction:
    return Fraction(x, 2)


def _rows_A1_discrete(p, lam, psi, levi):
    l1, l2 = lam.left[0], lam.left[1]
    d1, d2 = lam.right
    root = lambda r: has_root(levi, lam, psi, r)
    return [
        (l1 < d2, {l1 - p}),
        (d2 < l1 < d1, {l1 - p + 1}),
        (d1 < l1, {l1 - p + 2}),
        (d1 > d2 == l1 > l2 and root(_neg(E1_MINUS_F2)), {l1 - p}),
        (d1 > d2 == l1 > l2 and root(E1_MINUS_F2), {l1 - p + 1}),
        (d1 == l1 and l1 > l2 and l1 > d2 and root(_neg(E1_MINUS_F1)), {l1 - p + 1}),
        (d1 == l1 and l1 > l2 and l1 > d2 and root(E1_MINUS_F1), {l1 - p + 2}),
        (d1 == l1 == l2 > d2, {l1 - p + 2}),
        (d2 == l1 == l2 < d1, {l1 - p + 1}),
        (l1 == d1 == d2 > l2, {l1 - p + 1}),
        (l1 == l2 == d1 == d2 and root(E1_MINUS_F1), {l1 - p + 2}),
        (l1 == l2 == d1 == d2 and root(_neg(E1_MINUS_F1)), {l1 - p + 1}),
    ]


def _rows_A1_rank1(p, lam, psi, levi, mu):
    l1, (d1,) = lam.left[0], lam.right
    h = _half(mu)
    odd = mu % 2 == 1
    root = lambda r: has_root(levi, lam, psi, r)
    return [
        (l1 > d1 and l1 > h, {l1 - p + 2}),
        (h < l1 < d1, {l1 - p + 1}),
        (d1 < h and l1 < h and odd, {_half(mu + 3) - p}),
        (d1 > h > l1 and odd, {_half(mu + 1) - p}),
        (d1 < h and l1 < h and not odd, {h - p + 1, h - p + 2}),
        (d1 > h > l1 and not odd, {h - p, h - p + 1}),
        (l1 == d1 >= h and root(E1_MINUS_F1), {l1 - p + 2}),
        (l1 == d1 >= h and root(_neg(E1_MINUS_F1)), {l1 - p + 1}),
        (l1 == h > d1, {l1 - p + 2}),
        (l1 == h < d1, {l1 - p + 1}),
        (d1 == h > l1, {h - p + 1}),
    ]


def _rows_A1_rank2(p, lam, mu1):
    l1 = lam.left[0]
    h = _half(mu1)
    odd = mu1 % 2 == 1
    return [
        (l1 > h, {l1 - p + 2}),
        (l1 < h and odd, {_half(mu1 + 3) - p}),
        (l1 < h and not odd, {h - p + 1, h - p + 2}),
        (l1 == h, {l1 - p + 2}),
    ]


def _rows_rank2_empty(mu1):
    if mu1 % 2:
        return [(True, {_half(mu1 - 1)})]
    return [(True, {_half(mu1) - 1, _half(mu1)})]


def _rows_A3_discrete(lam, psi, levi):
    l1, l2 = lam.left
    d1, d2 = lam.right
    root = lambda r: has_root(levi, lam, psi, r)
    return [
        (d1 < l2, {d1 - 2}),
        (l2 < d1 < l1, {d1 - 1}),
        (d1 > l1, {d1}),
        (l1 > l2 == d1 > d2 and root(E2_MINUS_F1), {d1 - 2}),
        (l1 > l2 == d1 > d2 and root(_neg(E2_MINUS_F1)), {d1 - 1}),
        (l2 < d1 and d2 < d1 and d1 == l1 and root(E1_MINUS_F1), {d1 - 1}),
        (l2 < d1 and d2 < d1 and d1 == l1 and root(_neg(E1_MINUS_F1)), {d1}),
        (l1 == l2 == d1 > d2, {d1 - 1}),
        (l1 > l2 == d1 == d2, {d1 - 1}),
        (l1 == d1 == d2 > l2, {d1}),
        (l1 == l2 == d1 == d2 and root(E1_MINUS_F1), {d1 - 1}),
        (l1 == l2 == d1 == d2 and root(_neg(E1_MINUS_F1)), {d1}),
    ]


def _rows_A3_rank1(lam, psi, levi, mu):
    (l1,), (d1,) = lam.left, lam.right
    h = _half(mu)
    odd = mu % 2 == 1
    root = lambda r: has_root(levi, lam, psi, r)
    return [
        (l1 < h and d1 < h and odd, {_half(mu - 1)}),
        (l1 < h and d1 < h and not odd, {h, h - 1}),
        (l1 > d1 > h, {d1 - 1}),
        (d1 > l1 and d1 >= h, {d1}),
        (l1 > h > d1 and odd, {_half(mu - 3)}),
        (l1 > h > d1 and not odd, {h - 1, h - 2}),
        (h == l1 > d1, {h - 1}),
        (l1 > d1 == h, {d1 - 1}),
        (l1 == d1 >= h and root(E1_MINUS_F1), {d1 - 1}),
        (l1 == d1 >= h and root(_neg(E1_MINUS_F1)), {d1}),
    ]


def first_coord_rows(param: LanglandsParam | CatalogEntry, table: str = "A1") -> list[tuple[int, frozenset]]:
    """All (row number, value set) rows of a case table whose hypotheses hold.

    ``table`` is "A1" (first Sp(p) coordinate on Sp(p,2)) or "A3" (first
    Sp(2) coordinate on Sp(2,2)).
    """
    g, r, lam, psi, mu = param.group, param.r, param.lam, param.psi, param.mu
    if not g.is_sp:
        raise UnsupportedShape("case tables are for Sp groups")
    levi = g.levi(r)
    mu = tuple(sorted(mu, reverse=True))
    if table == "A1":
        p = g.p
        if g.q != 2 or p < 2:
            raise UnsupportedShape(f"the A1 table covers Sp(p,2) with p >= 2, not {g}")
        if r == 0:
            rows = _rows_A1_discrete(p, lam, psi, levi)
        elif r == 1:
            rows = _rows_A1_rank1(p, lam, psi, levi, mu[0])
        elif p >= 3:
            rows = _rows_A1_rank2(p, lam, mu[0])
        else:
            rows = _rows_rank2_empty(mu[0])
    elif table == "A3":
        if (g.p, g.q) != (2, 2):
            raise UnsupportedShape(f"the A3 table covers Sp(2,2), not {g}")
        if r == 0:
            rows = _rows_A3_discrete(lam, psi, levi)
        elif r == 1:
            rows = _rows_A3_rank1(lam, psi, levi, mu[0])
        else:
            rows = [(ok, {v for v in vals}) for ok, vals in _rows_rank2_empty(mu[0])]
    else:
        raise ValueError(f"unknown table {table!r}")
    return [(i, frozenset(Fraction(v) for v in vals))
            for i, (ok, vals) in enumerate(rows, 1) if ok]


def first_coord_set(param: LanglandsParam | CatalogEntry, table: str = "A1") -> frozenset[Fraction]:
    """Value set given by the first case-table row that applies."""
    rows = first_coord_rows(param, table)
    if not rows:
        raise UnsupportedShape(f"no {table} row covers {param}")
    return rows[0][1]


def table_inconsistent(param, table: str = "A1") -> bool:
    """True when two applicable rows give different answers."""
    return len({vals for _, vals in first_coord_rows(param, table)}) > 1


def algorithm_coord_set(param: LanglandsParam | CatalogEntry, table: str = "A1") -> frozenset[Fraction]:
    """The same coordinate read off the general lowest K-type algorithm."""
    lk = lowest_ktypes_sp_data(param.group, param.r, param.lam, param.psi, param.mu)
    pick = (lambda kt: kt.a[0]) if table == "A1" else (lambda kt: kt.b[0])
    return frozenset(Fraction(pick(kt)) for kt in lk)


# --------------------------------------------------------------------------
# resolving a parameter from its lowest K-types and infinitesimal character
# --------------------------------------------------------------------------

def _pair_solutions(mu: int, x: Scalar, y: Scalar) -> set[Scalar]:
    """nu with {(nu+mu)/2, (nu-mu)/2} = {+-x, +-y} up to signs, normalized."""
    out = set()
    for a, b in ((x, y), (y, x)):
        for sa in (1, -1):
            for sb in (1, -1):
                u = a if sa > 0 else -a
                v = b if sb > 0 else -b
                if u - v == Scalar(mu):
                    out.add((u + v).normalized())
    return out


def solve_nu(entry: CatalogEntry, target: InfChar) -> list[tuple[Scalar, ...]]:
    """Every nu (normalized) for which ``entry`` has infinitesimal character ``target``."""
    if target.weyl != "C" or len(target) != entry.group.rank:
        return []
    pool = [x.normalized() for x in target.entries]
    for v in list(entry.lam.left) + list(entry.lam.right):
        s = Scalar(v)
        if s not in pool:
            return []
        pool.remove(s)
    mus = entry.mu
    sols = set()

    for order in set(itertools.permutations(range(len(mus)))):
        sub = [mus[k] for k in order]

        def rec(i, rest, acc, sub=sub, order=order):
            if i == len(sub):
                nus = [None] * len(sub)
                for k, v in zip(order, acc):
                    nus[k] = v
                sols.add(tuple(nus))
                return
            for j in range(1, len(rest)):
                left = rest[1:j] + rest[j + 1:]
                for nu in _pair_solutions(sub[i], rest[0], rest[j]):
                    if sub[i] % 2 == 0 and nu.is_zero():
                        continue
                    rec(i + 1, left, acc + [nu])

        rec(0, pool, [])
    return sorted(sols, key=lambda t: [v.key() for v in t])


def resolve_unique(entries: Iterable[CatalogEntry], target_lkt, target_infchar: InfChar) -> LanglandsParam:
    """The single parameter with the given lowest K-types and infinitesimal character.

    Raises NoMatch if there is none and AmbiguousMatch if there are several.
    """
    from .ktypes import infinitesimal_character

    target_lkt = frozenset(target_lkt)
    found = {}
    for e in entries:
        if e.lowest_ktypes() != target_lkt:
            continue
        for nu in solve_nu(e, target_infchar):
            try:
                param = e.bind(nu)
            except (ParityError, ThetaError):
                continue
            if equal_mod_weyl(infinitesimal_character(param), target_infchar):
                found[param] = e
    if not found:
        raise NoMatch("no catalog entry has these lowest K-types and infinitesimal character")
    if len(found) > 1:
        raise AmbiguousMatch("several catalog entries match: "
                             + ", ".join(str(p) for p in found))
    return next(iter(found))
