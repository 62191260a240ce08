"""Grid checks tying the modules together.

Every check walks a finite grid and records failures as data.  The golden
formula table at the bottom restates each explicit lift formula clause by
clause, with positive systems given by explicit dominance targets, so that it
shares no case-selection code with the engine in ``lifts``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import catalog
from .core import (
    FamilyConstraint, GroupSig, HCParam, LanglandsParam, NotInHarmonics, Scalar,
    ThetaError, canonicalize, dual_transport, equal_mod_weyl, fmt_param,
    param_to_json, psi_from_target, solve_psi,
)
from .harmonics import correspond, lowest_degree_ktypes, profile_sp
from .ktypes import infinitesimal_character, lowest_ktypes_sp
from .lifts import ZERO, direct, expected_infchar, going_up, select_formula, theta
from .occurrence import conservation_report, occurs
from .ostar_dual import OStar2Rep, OStar4Rep, contragredient, make, rep_to_json

MAX_FAILURES = 10


@dataclass
class CheckResult:
    name: str
    grid: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def ok(self, n: int = 1):
        self.passed += n

    def fail(self, **info):
        self.failed += 1
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(info)

    def merge(self, other: "CheckResult") -> "CheckResult":
        out = CheckResult(self.name, self.grid, self.passed + other.passed,
                          self.failed + other.failed)
        out.failures = (self.failures + other.failures)[:MAX_FAILURES]
        return out


@dataclass
class SuiteReport:
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.failed == 0 for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [
            {"name": c.name, "grid": c.grid, "passed": c.passed, "failed": c.failed,
             "failures": c.failures} for c in self.checks]}

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            mark = "ok  " if c.failed == 0 else "FAIL"
            lines.append(f"{mark} {c.name:<22} passed={c.passed:<7} failed={c.failed:<5} {c.grid}")
            for f in c.failures:
                lines.append("       " + json.dumps(f, default=str))
        lines.append("all checks passed" if self.ok else "some checks failed")
        return "\n".join(lines)


# --------------------------------------------------------------------------
# grids
# --------------------------------------------------------------------------

def chi_grid(max_param: int) -> list[OStar2Rep]:
    return [OStar2Rep(k) for k in range(-max_param, max_param + 1)]


def ostar4_grid(max_param: int, complex_p: bool = True) -> list[OStar4Rep]:
    """All family members with |l1|, |l2| <= max_param (real parts for P)."""
    M = max_param
    out = []
    for l1 in range(-M, M + 1):
        for l2 in range(-M, l1):
            for fam in ("D", "Dbar", "F"):
                try:
                    out.append(make(fam, l1, l2))
                except FamilyConstraint:
                    pass
    for a in range(-2 * M + 1, 2 * M, 2):
        for b in range(-2 * M + 1, a, 2):
            try:
                out.append(make("P", Fraction(a, 2), Fraction(b, 2)))
            except FamilyConstraint:
                pass
    if complex_p:
        for a in range(0, M + 1):
            for m in range(1, 4):
                l1 = Scalar(Fraction(a, 2), 1)
                try:
                    out.append(make("P", l1, l1 - Scalar(m)))
                except FamilyConstraint:
                    pass
    return out


def all_reps(max_param: int):
    return chi_grid(max_param) + ostar4_grid(max_param)


def _n(rep) -> int:
    return 1 if isinstance(rep, OStar2Rep) else 2


def _where(rep, p, q, **extra):
    return {"rep": rep_to_json(rep), "p": p, "q": q, **extra}


def _show(value) -> str:
    return "0" if value is ZERO else fmt_param(value)


# --------------------------------------------------------------------------
# laws
# --------------------------------------------------------------------------

def _safe_theta(rep, p, q, res: CheckResult):
    try:
        return theta(rep, p, q).value
    except Exception as e:  # a crash is a failure, not an abort
        res.fail(**_where(rep, p, q, error=repr(e)))
        return None


def check_infchar(reps, max_pq) -> CheckResult:
    res = CheckResult("infchar", f"p,q<={max_pq}, {len(reps)} reps")
    for rep in reps:
        for p in range(max_pq + 1):
            for q in range(max_pq + 1):
                if p + q < _n(rep):
                    continue
                v = _safe_theta(rep, p, q, res)
                if v is None or v is ZERO:
                    continue
                try:
                    good = equal_mod_weyl(infinitesimal_character(v), expected_infchar(rep, p, q))
                except ThetaError as e:
                    good = False
                if good:
                    res.ok()
                else:
                    res.fail(**_where(rep, p, q, value=_show(v)))
    return res


def check_duality(reps, max_pq) -> CheckResult:
    res = CheckResult("duality", f"p,q<={max_pq}, {len(reps)} reps")
    for rep in reps:
        dual = contragredient(rep)
        for p in range(max_pq + 1):
            for q in range(max_pq + 1):
                a = _safe_theta(rep, p, q, res)
                b = _safe_theta(dual, q, p, res)
                if a is None or b is None:
                    continue
                try:
                    b = ZERO if b is ZERO else canonicalize(dual_transport(b))
                except ThetaError as e:
                    res.fail(**_where(rep, p, q, error=repr(e)))
                    continue
                if a == b:
                    res.ok()
                else:
                    res.fail(**_where(rep, p, q, direct=_show(a), transported=_show(b)))
    return res


def harmonics_ok(rep, p, q, value) -> bool:
    """Some lowest K-type of ``value`` corresponds to a lowest-degree K-type of ``rep``."""
    n = _n(rep)
    low = lowest_degree_ktypes(rep, p, q)
    for kt in lowest_ktypes_sp(value):
        try:
            if correspond(kt, p, q, n) in low:
                return True
        except NotInHarmonics:
            continue
    return False


def check_harmonics(reps, max_pq) -> CheckResult:
    res = CheckResult("harmonics", f"p,q<={max_pq}, {len(reps)} reps")
    for rep in reps:
        for p in range(max_pq + 1):
            for q in range(max_pq + 1):
                v = _safe_theta(rep, p, q, res)
                if v is None or v is ZERO:
                    continue
                try:
                    good = harmonics_ok(rep, p, q, v)
                except ThetaError:
                    good = False
                if good:
                    res.ok()
                else:
                    res.fail(**_where(rep, p, q, value=_show(v),
                                      lowest=[str(k) for k in sorted(lowest_ktypes_sp(v))]))
    return res


def check_lkt_degree(reps, max_pq) -> CheckResult:
    """All lowest K-types of a lift share one Fock degree."""
    res = CheckResult("lkt_degree", f"p,q<={max_pq}, {len(reps)} reps")
    for rep in reps:
        for p in range(max_pq + 1):
            for q in range(max_pq + 1):
                v = _safe_theta(rep, p, q, res)
                if v is None or v is ZERO:
                    continue
                degs = {profile_sp(kt, _n(rep)).degree for kt in lowest_ktypes_sp(v)}
                if len(degs) == 1 and None not in degs:
                    res.ok()
                else:
                    res.fail(**_where(rep, p, q, value=_show(v), degrees=sorted(map(str, degs))))
    return res


def check_occurrence(reps, max_pq) -> CheckResult:
    res = CheckResult("occurrence", f"p,q<={max_pq}, {len(reps)} reps")
    for rep in reps:
        for p in range(max_pq + 1):
            for q in range(max_pq + 1):
                v = _safe_theta(rep, p, q, res)
                if v is None:
                    continue
                if (v is not ZERO) == occurs(rep, p, q):
                    res.ok()
                else:
                    res.fail(**_where(rep, p, q, value=_show(v), occurs=occurs(rep, p, q)))
    return res


def check_stable_range(reps, max_pq) -> CheckResult:
    res = CheckResult("stable_range", f"min(p,q)>=n, p,q<={max_pq}")
    for rep in reps:
        n = _n(rep)
        for p in range(n, max_pq + 1):
            for q in range(n, max_pq + 1):
                v = _safe_theta(rep, p, q, res)
                if v is None:
                    continue
                if v is not ZERO:
                    res.ok()
                else:
                    res.fail(**_where(rep, p, q))
    return res


def paths(rep, p: int, q: int) -> dict[str, LanglandsParam]:
    """Every evaluation of the lift at (p,q), p >= q, that the formulas allow.

    One path is the direct formula (if any); the others go up by s from each
    directly covered nonzero base (p-s, q-s).
    """
    out = {}
    hit = direct(rep, p, q)
    if hit is not None and not hit.is_zero:
        out["direct"] = hit.value
    for s in range(1, q + 1):
        base = (p - s, q - s)
        b = direct(rep, *base)
        if b is None or b.is_zero:
            continue
        out[f"going_up s={s}"] = canonicalize(going_up(b.value, base, _n(rep), s))
    return out


def check_path_independence(reps, max_pq) -> CheckResult:
    res = CheckResult("path_independence", f"2<=q<=p<={max_pq} and q=1")
    for rep in reps:
        for q in range(1, max_pq + 1):
            for p in range(q, max_pq + 1):
                try:
                    got = paths(rep, p, q)
                except ThetaError as e:
                    res.fail(**_where(rep, p, q, error=repr(e)))
                    continue
                if len(got) < 2:
                    continue
                if len(set(got.values())) == 1:
                    res.ok()
                else:
                    res.fail(**_where(rep, p, q, paths={k: _show(v) for k, v in got.items()}))
    return res


def check_conservation(reps4, bound: int = 12) -> CheckResult:
    """Some tower pair sums to 5 and every pair meets the 4 + dist bound."""
    res = CheckResult("conservation", f"|delta|<={bound}, {len(reps4)} reps")
    for rep in reps4:
        rep_ = conservation_report(rep, bound, strict=False)
        if rep_.sum5_pairs and rep_.all_pairs_ok:
            res.ok()
        else:
            res.fail(rep=rep_to_json(rep), sum5=list(rep_.sum5_pairs),
                     violations=list(rep_.violations))
    return res


# --------------------------------------------------------------------------
# catalogs
# --------------------------------------------------------------------------

def _shape_ok(which, kt):
    return {"A": catalog._shape_A, "B": catalog._shape_B, "C": catalog._shape_C}[which](kt)


def _catalog_runs(max_pq):
    runs = [("A", p) for p in range(1, max_pq + 1)]
    runs += [("B", p) for p in range(2, max_pq + 1)]
    runs.append(("C", None))
    return runs


def check_catalog_soundness(max_pq, bound) -> CheckResult:
    res = CheckResult("catalog_soundness", f"A p<={max_pq}, B p<={max_pq}, C; entries<={bound}")
    for which, p in _catalog_runs(max_pq):
        for e in catalog.enumerate_catalog(which, p, bound):
            if all(_shape_ok(which, kt) for kt in e.lowest_ktypes()):
                res.ok()
            else:
                res.fail(catalog=which, p=p, entry=str(e), case=e.case_tag)
    return res


def check_catalog_completeness(max_pq, bound) -> CheckResult:
    res = CheckResult("catalog_completeness", f"A p<={max_pq}, B p<={max_pq}, C; entries<={bound}")
    for which, p in _catalog_runs(max_pq):
        listed = {e.key for e in catalog.enumerate_catalog(which, p, bound)}
        brute = catalog.brute_force(which, p, bound)
        if listed == brute:
            res.ok()
        else:
            res.fail(catalog=which, p=p, extra=len(listed - brute), missing=len(brute - listed),
                     sample=[str(k) for k in list(brute ^ listed)[:3]])
    if max_pq >= 2:
        for p in range(2, max_pq + 1):
            seven = {e.key for e in catalog.enumerate_B_p2(p, bound)}
            six = {e.key for e in catalog.enumerate_B_p2_six(p, bound)}
            if seven == six:
                res.ok()
            else:
                res.fail(catalog="B six vs seven", p=p, diff=len(seven ^ six))
    return res


def check_table_agreement(max_pq, bound) -> CheckResult:
    res = CheckResult("table_agreement", f"Sp(p,2) p<={max_pq} and Sp(2,2); entries<={bound}")
    runs = [("A1", p) for p in range(2, max_pq + 1)]
    if max_pq >= 2:
        runs.append(("A3", 2))
    for table, p in runs:
        for e in catalog.all_templates(p, 2, bound):
            try:
                rows = catalog.first_coord_rows(e, table)
            except ThetaError as err:
                res.fail(table=table, entry=str(e), error=repr(err))
                continue
            if not rows:
                res.fail(table=table, entry=str(e), error="no row applies")
                continue
            if len({v for _, v in rows}) > 1:
                res.fail(table=table, entry=str(e), inconsistent_rows=[i for i, _ in rows])
                continue
            want = catalog.algorithm_coord_set(e, table)
            if rows[0][1] == want:
                res.ok()
            else:
                res.fail(table=table, entry=str(e), row=rows[0][0],
                         table_says=sorted(map(str, rows[0][1])), algorithm=sorted(map(str, want)))
    return res


# --------------------------------------------------------------------------
# golden formulas
# --------------------------------------------------------------------------

def _seq(hi, lo=1):
    return tuple(range(hi, lo - 1, -1))


def _pi(p, q, left=(), right=(), target=None, mu=(), nu=()):
    """Parameter whose positive system makes ``target`` dominant.

    ``target`` is (left, right) on lambda's own group; None means the system
    is forced by condition (A).
    """
    r = len(mu)
    g = GroupSig.sp(p, q)
    levi = g.levi(r)
    lam = HCParam(tuple(left), tuple(right))
    psi = solve_psi(levi, lam) if target is None else \
        psi_from_target(levi, lam, HCParam(*map(tuple, target)))
    return canonicalize(LanglandsParam(g, r, lam, psi, tuple(mu), tuple(Scalar.of(v) for v in nu)))


def _t1(a):          # (a, ..., 1)
    return (_seq(a), ())


def _t2(p):          # (p..1; p+1)
    return (_seq(p), (p + 1,))


def _t3(p):          # (p+1..2; 1)
    return (_seq(p + 1, 2), (1,))


def _t4(p):          # (p+1, p-1..1; p)
    return ((p + 1,) + _seq(p - 1), (p,))


def _t5(p):          # (p..1; p+2, p+1)
    return (_seq(p), (p + 2, p + 1))


def _t6(p):          # (p+2..3; 2, 1)
    return (_seq(p + 2, 3), (2, 1))


@dataclass(frozen=True)
class Golden:
    tag: str
    applies: Callable
    value: Callable


def _L(rep):
    return rep.l1.as_int(), rep.l2.as_int()


def _is(fam):
    return lambda rep: isinstance(rep, OStar4Rep) and rep.family == fam


_chi = lambda rep: isinstance(rep, OStar2Rep)
_P, _D, _Db, _F = _is("P"), _is("D"), _is("Dbar"), _is("F")

GOLDEN: list[Golden] = [
    # characters of O*(2)
    Golden("chi (0,0) k=0", lambda r, p, q: _chi(r) and (p, q) == (0, 0) and r.k == 0,
           lambda r, p, q: _pi(0, 0, target=((), ()))),
    Golden("chi (0,0) k!=0", lambda r, p, q: _chi(r) and (p, q) == (0, 0) and r.k != 0,
           lambda r, p, q: ZERO),
    Golden("chi (p,0) k<p", lambda r, p, q: _chi(r) and p >= 1 and q == 0 and r.k < p,
           lambda r, p, q: ZERO),
    Golden("chi (p,0) k>=p", lambda r, p, q: _chi(r) and p >= 1 and q == 0 and r.k >= p,
           lambda r, p, q: _pi(p, 0, (r.k,) + _seq(p - 1), (), _t1(p))),
    Golden("chi (1,1) k>0", lambda r, p, q: _chi(r) and (p, q) == (1, 1) and r.k > 0,
           lambda r, p, q: _pi(1, 1, (r.k,), (1,), _t3(1))),
    Golden("chi (1,1) k<0", lambda r, p, q: _chi(r) and (p, q) == (1, 1) and r.k < 0,
           lambda r, p, q: _pi(1, 1, (1,), (-r.k,), _t2(1))),
    Golden("chi (1,1) k=0", lambda r, p, q: _chi(r) and (p, q) == (1, 1) and r.k == 0,
           lambda r, p, q: _pi(1, 1, target=((), ()), mu=(1,), nu=(1,))),
    Golden("chi (p,1) k>=p-1", lambda r, p, q: _chi(r) and p > 1 and q == 1 and r.k >= p - 1,
           lambda r, p, q: _pi(p, 1, (r.k,) + _seq(p - 2), (), _t1(p - 1), (1,), (2 * p - 1,))),
    Golden("chi (p,1) -p<k<p-1", lambda r, p, q: _chi(r) and p > 1 and q == 1 and -p < r.k < p - 1,
           lambda r, p, q: _pi(p, 1, _seq(p - 1), (), _t1(p - 1), (p - r.k,), (p + r.k,))),
    Golden("chi (p,1) k<=-p", lambda r, p, q: _chi(r) and p > 1 and q == 1 and r.k <= -p,
           lambda r, p, q: _pi(p, 1, _seq(p), (-r.k,), _t2(p))),
    # P
    Golden("P (p,1)", lambda r, p, q: _P(r) and p >= 1 and q == 1,
           lambda r, p, q: _pi(p, 1, _seq(p - 1), (), _t1(p - 1), (r.mu,), (r.l1 + r.l2,))),
    # F
    Golden("F (0,0)", lambda r, p, q: _F(r) and (p, q) == (0, 0),
           lambda r, p, q: _pi(0, 0, target=((), ())) if _L(r) == (1, 0) else ZERO),
    Golden("F (p,0) p>=1", lambda r, p, q: _F(r) and p >= 1 and q == 0,
           lambda r, p, q: ZERO),
    Golden("F (p,1) l1>=p", lambda r, p, q: _F(r) and p >= 1 and q == 1 and _L(r)[0] >= p,
           lambda r, p, q: _pi(p, 1, _seq(p - 1), (), _t1(p - 1), (r.mu,), (r.l1 + r.l2,))),
    Golden("F (p,1) l1<p", lambda r, p, q: _F(r) and p >= 1 and q == 1 and _L(r)[0] < p,
           lambda r, p, q: ZERO),
    Golden("F (p,2) l1<p-1", lambda r, p, q: _F(r) and p >= 2 and q == 2 and _L(r)[0] < p - 1,
           lambda r, p, q: _pi(p, 2, _seq(p - 2), (), _t1(p - 2),
                               (p - 1 - _L(r)[1], p - _L(r)[0]), (p - 1 + _L(r)[1], p + _L(r)[0]))),
    # Dbar
    Golden("Dbar (p,1) l1>=p", lambda r, p, q: _Db(r) and p >= 1 and q == 1 and _L(r)[0] >= p,
           lambda r, p, q: _pi(p, 1, (_L(r)[0],) + _seq(p - 1), (-_L(r)[1],), _t2(p))),
    Golden("Dbar (p,1) l1<p", lambda r, p, q: _Db(r) and p >= 1 and q == 1 and _L(r)[0] < p,
           lambda r, p, q: ZERO),
    Golden("Dbar (p,2) l1<=-p", lambda r, p, q: _Db(r) and p >= 2 and q == 2 and _L(r)[0] <= -p,
           lambda r, p, q: _pi(p, 2, _seq(p), (-_L(r)[1], -_L(r)[0]), _t5(p))),
    Golden("Dbar (p,2) l2<=-p+1<=l1<p-1",
           lambda r, p, q: _Db(r) and p >= 2 and q == 2 and _L(r)[1] <= 1 - p <= _L(r)[0] < p - 1,
           lambda r, p, q: _pi(p, 2, _seq(p - 1), (-_L(r)[1],), _t2(p - 1),
                               (p - _L(r)[0],), (p + _L(r)[0],))),
    Golden("Dbar (p,2) l2>-p+1, l1<p-1",
           lambda r, p, q: _Db(r) and p >= 2 and q == 2 and _L(r)[1] > 1 - p and _L(r)[0] < p - 1,
           lambda r, p, q: _pi(p, 2, _seq(p - 2), (), _t1(p - 2),
                               (p - 1 - _L(r)[1], p - _L(r)[0]), (p - 1 + _L(r)[1], p + _L(r)[0]))),
    # D
    Golden("D (1,0)", lambda r, p, q: _D(r) and (p, q) == (1, 0),
           lambda r, p, q: _pi(1, 0, (_L(r)[0],), (), _t1(1)) if _L(r)[1] == 0 else ZERO),
    Golden("D (p,0) p>=2", lambda r, p, q: _D(r) and p >= 2 and q == 0,
           lambda r, p, q: _pi(p, 0, _L(r) + _seq(p - 2), (), _t1(p))
           if _L(r)[1] >= p - 1 else ZERO),
    Golden("D (p,1) l1<=p-1, l1+l2>0",
           lambda r, p, q: _D(r) and p >= 1 and q == 1 and _L(r)[0] <= p - 1 and sum(_L(r)) > 0,
           lambda r, p, q: _pi(p, 1, _seq(p - 1), (), _t1(p - 1), (r.mu,), (sum(_L(r)),))),
    Golden("D (p,1) l1<=p-1, l1+l2=0",
           lambda r, p, q: _D(r) and p >= 1 and q == 1 and _L(r)[0] <= p - 1 and sum(_L(r)) == 0,
           lambda r, p, q: _pi(p, 1, _seq(p - 1, _L(r)[0] + 1) + (_L(r)[0], _L(r)[0])
                               + _seq(_L(r)[0] - 1), (_L(r)[0],))),
    Golden("D (p,1) l1>=p, l2<=-p",
           lambda r, p, q: _D(r) and p >= 1 and q == 1 and _L(r)[0] >= p and _L(r)[1] <= -p,
           lambda r, p, q: _pi(p, 1, (_L(r)[0],) + _seq(p - 1), (-_L(r)[1],), _t4(p))),
    Golden("D (p,1) 1-p<l2<=p-2, l1>=p",
           lambda r, p, q: _D(r) and p >= 2 and q == 1 and 1 - p < _L(r)[1] <= p - 2 and _L(r)[0] >= p,
           lambda r, p, q: _pi(p, 1, (_L(r)[0],) + _seq(p - 2), (), _t1(p - 1),
                               (p - 1 - _L(r)[1],), (p - 1 + _L(r)[1],))),
    Golden("D (p,1) l1>=p, l2=1-p",
           lambda r, p, q: _D(r) and p >= 2 and q == 1 and _L(r)[0] >= p and _L(r)[1] == 1 - p,
           lambda r, p, q: _pi(p, 1, (_L(r)[0],) + _seq(p - 1), (p - 1,), _t4(p))),
    Golden("D (p,1) p>=3, l2>=p-1",
           lambda r, p, q: _D(r) and p >= 3 and q == 1 and _L(r)[1] >= p - 1,
           lambda r, p, q: _pi(p, 1, _L(r) + _seq(p - 3), (), _t1(p - 1), (1,), (2 * p - 3,))),
    Golden("D (2,1) l2>=1", lambda r, p, q: _D(r) and (p, q) == (2, 1) and _L(r)[1] >= 1,
           lambda r, p, q: _pi(2, 1, _L(r), (1,), _t3(2))),
    Golden("D (1,1) l2>=0", lambda r, p, q: _D(r) and (p, q) == (1, 1) and _L(r)[1] >= 0,
           lambda r, p, q: ZERO),
    Golden("D (2,2) l2=0", lambda r, p, q: _D(r) and (p, q) == (2, 2) and _L(r)[1] == 0,
           lambda r, p, q: _pi(2, 2, (_L(r)[0],), (1,), _t3(1), (2,), (2,))),
    Golden("D (2,2) l2=1", lambda r, p, q: _D(r) and (p, q) == (2, 2) and _L(r)[1] == 1,
           lambda r, p, q: _pi(2, 2, (_L(r)[0],), (1,), _t3(1), (3,), (1,))),
    Golden("D (2,2) l2>=2", lambda r, p, q: _D(r) and (p, q) == (2, 2) and _L(r)[1] >= 2,
           lambda r, p, q: _pi(2, 2, _L(r), (2, 1), _t6(2))),
]


def golden_cases(rep, p: int, q: int) -> list[Golden]:
    return [g for g in GOLDEN if g.applies(rep, p, q)]


def check_golden(reps, max_pq, family: str | None = None) -> CheckResult:
    """Every applicable golden clause agrees with the engine.

    ``family`` restricts to "chi" (characters) or "ostar4".
    """
    res = CheckResult("golden_formulas", f"p<={max_pq}, q<=2, {len(reps)} reps")
    for rep in reps:
        if family == "chi" and not _chi(rep) or family == "ostar4" and _chi(rep):
            continue
        for q in range(3):
            for p in range(q, max_pq + 1):
                for g in golden_cases(rep, p, q):
                    try:
                        want = g.value(rep, p, q)
                        got = theta(rep, p, q).value
                    except Exception as e:
                        res.fail(**_where(rep, p, q, clause=g.tag, error=repr(e)))
                        continue
                    if want == got:
                        res.ok()
                    else:
                        res.fail(**_where(rep, p, q, clause=g.tag, want=_show(want), got=_show(got)))
    return res


# --------------------------------------------------------------------------
# the suite
# --------------------------------------------------------------------------

CHECKS = ("infchar", "duality", "harmonics", "lkt_degree", "occurrence", "stable_range",
          "path_independence", "conservation", "catalog_soundness", "catalog_completeness",
          "table_agreement", "golden_formulas")


def run_suite(max_pq: int, max_param: int, checks: Iterable[str] | None = None,
              catalog_bound: int | None = None, conservation_bound: int = 12) -> SuiteReport:
    if max_pq < 0 or max_param < 0:
        raise ValueError("bounds must be non-negative")
    wanted = list(CHECKS if checks is None else checks)
    unknown = set(wanted) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}")
    reps = all_reps(max_param)
    reps4 = [r for r in reps if isinstance(r, OStar4Rep) and r.l1.is_real()]
    cb = min(max_param, 6) if catalog_bound is None else catalog_bound
    run = {
        "infchar": lambda: check_infchar(reps, max_pq),
        "duality": lambda: check_duality(reps, max_pq),
        "harmonics": lambda: check_harmonics(reps, max_pq),
        "lkt_degree": lambda: check_lkt_degree(reps, max_pq),
        "occurrence": lambda: check_occurrence(reps, max_pq),
        "stable_range": lambda: check_stable_range(reps, max_pq),
        "path_independence": lambda: check_path_independence(reps, max_pq),
        "conservation": lambda: check_conservation(reps4, conservation_bound),
        "catalog_soundness": lambda: check_catalog_soundness(max_pq, cb),
        "catalog_completeness": lambda: check_catalog_completeness(max_pq, cb),
        "table_agreement": lambda: check_table_agreement(max_pq, cb),
        "golden_formulas": lambda: check_golden(reps, max_pq),
    }
    return SuiteReport([run[name]() for name in wanted])
