"""K-types, norms, lowest K-types and infinitesimal characters."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    GroupSig, InfChar, LanglandsParam, LengthMismatch, Scalar, rho_c, rho_n, validate,
)


@dataclass(frozen=True, order=True)
class KTypeSp:
    """Highest weight (a_1..a_p; b_1..b_q) of Sp(p) x Sp(q)."""

    a: tuple[int, ...] = ()
    b: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(v) for v in self.a))
        object.__setattr__(self, "b", tuple(int(v) for v in self.b))

    def is_dominant(self) -> bool:
        ok = lambda xs: all(x >= y for x, y in zip(xs, xs[1:])) and all(x >= 0 for x in xs)
        return ok(self.a) and ok(self.b)

    def __str__(self):
        return f"({','.join(map(str, self.a))};{','.join(map(str, self.b))})"


@dataclass(frozen=True, order=True)
class KTypeU:
    """Highest weight (w_1 >= ... >= w_n) of U(n)."""

    w: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(int(v) for v in self.w))

    def is_dominant(self) -> bool:
        return all(x >= y for x, y in zip(self.w, self.w[1:]))

    def __str__(self):
        return f"({','.join(map(str, self.w))})"


def norm(kt: KTypeSp | KTypeU, sig: GroupSig) -> int:
    if isinstance(kt, KTypeSp):
        if not sig.is_sp or len(kt.a) != sig.p or len(kt.b) != sig.q:
            raise LengthMismatch(f"K-type {kt} does not fit {sig}")
        p, q = sig.p, sig.q
        return (sum((a + 2 * p + 2 - 2 * i) ** 2 for i, a in enumerate(kt.a, 1))
                + sum((b + 2 * q + 2 - 2 * j) ** 2 for j, b in enumerate(kt.b, 1)))
    n = sig.rank if sig.is_sp else sig.n
    if len(kt.w) != n:
        raise LengthMismatch(f"K-type {kt} does not fit U({n})")
    return sum((a + n + 1 - 2 * i) ** 2 for i, a in enumerate(kt.w, 1))


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"non-integral K-type entry {x}")
    return int(x)


def _delta_choices(beta: Fraction, alpha: Fraction, lam_values: set[int], psi):
    if beta.denominator == 1:
        return (Fraction(0),)
    if alpha.denominator == 1 and int(alpha) in lam_values:
        return (Fraction(psi.sign(int(alpha)), 2),)
    return (Fraction(1, 2), Fraction(-1, 2))


def lowest_ktypes_sp_data(group: GroupSig, r: int, lam, psi, mu) -> frozenset[KTypeSp]:
    """Lowest K-types from the nu-free part of an Sp parameter."""
    p, q = group.p, group.q
    halves = [Fraction(m, 2) for m in mu]
    left = [Fraction(v) for v in lam.left] + halves
    right = [Fraction(v) for v in lam.right] + halves
    lam_values = set(lam.left) | set(lam.right)
    blocks = []
    Mt = Nt = 0
    for alpha in sorted(set(left) | set(right), reverse=True):
        M, N = left.count(alpha), right.count(alpha)
        Mt += M
        Nt += N
        beta = alpha + Mt - Nt - Fraction(M - N + 1, 2) + q - p
        gamma = alpha - Mt + Nt - Fraction(N - M + 1, 2) + p - q
        blocks.append((alpha, M, N, beta, gamma))
    choices = [_delta_choices(b[3], b[0], lam_values, psi) for b in blocks]
    out = set()
    for deltas in itertools.product(*choices):
        a, b = [], []
        for (alpha, M, N, beta, gamma), d in zip(blocks, deltas):
            a += [_as_int(beta + d)] * M
            b += [_as_int(gamma - d)] * N
        out.add(KTypeSp(tuple(a), tuple(b)))
    return frozenset(out)


def lowest_ktypes_sp(param: LanglandsParam) -> frozenset[KTypeSp]:
    validate(param)
    if not param.group.is_sp:
        raise TypeError("lowest_ktypes_sp needs an Sp parameter")
    return lowest_ktypes_sp_data(param.group, param.r, param.lam, param.psi, param.mu)


def lowest_ktypes_ostar(param: LanglandsParam) -> frozenset[KTypeU]:
    validate(param)
    if param.group.is_sp:
        raise TypeError("lowest_ktypes_ostar needs an O* parameter")
    entries = [Fraction(v) for v in param.lam.left]
    for m in param.mu:
        entries += [Fraction(m, 2), Fraction(-m, 2)]
    has_zero = 0 in entries
    lam_values = {abs(v) for v in param.lam.left if v}
    blocks = []
    Mt = Nt = 0
    for alpha in sorted({abs(v) for v in entries if v}, reverse=True):
        M, N = entries.count(alpha), entries.count(-alpha)
        Mt += M
        Nt += N
        beta = alpha + Mt - Nt - Fraction(M - N + 1, 2)
        gamma = alpha - Mt + Nt - Fraction(N - M + 1, 2)
        blocks.append((alpha, M, N, beta, gamma))
    choices = [_delta_choices(b[3], b[0], lam_values, param.psi) for b in blocks]
    out = set()
    for deltas in itertools.product(*choices):
        head, tail = [], []
        for (alpha, M, N, beta, gamma), d in zip(blocks, deltas):
            head += [_as_int(beta + d)] * M
            tail = [_as_int(-gamma + d)] * N + tail
        mid = [Mt - Nt] if has_zero else []
        out.add(KTypeU(tuple(head + mid + tail)))
    return frozenset(out)


def lowest_ktypes(param: LanglandsParam):
    return lowest_ktypes_sp(param) if param.group.is_sp else lowest_ktypes_ostar(param)


def discrete_series_ktype(param: LanglandsParam) -> tuple[Fraction, ...]:
    """lambda + rho_n - rho_c for an r = 0 parameter (Sp: e's then f's)."""
    validate(param)
    if param.r != 0:
        raise ValueError("only defined for r = 0")
    g = param.group
    lam = list(param.lam.left) + list(param.lam.right)
    rn = rho_n(g, param.lam, param.psi)
    rc = rho_c(g)
    return tuple(Fraction(l) + a - b for l, a, b in zip(lam, rn, rc))


def infinitesimal_character(param: LanglandsParam) -> InfChar:
    validate(param)
    entries = [Scalar(v) for v in param.lam.left] + [Scalar(v) for v in param.lam.right]
    for m, v in zip(param.mu, param.nu):
        entries.append((v + m) / 2)
        entries.append((v - m) / 2)
    return InfChar(tuple(entries), "C" if param.group.is_sp else "D")


def ktype_to_json(kt: KTypeSp | KTypeU) -> dict:
    if isinstance(kt, KTypeSp):
        return {"a": list(kt.a), "b": list(kt.b)}
    return {"w": list(kt.w)}


def ktype_from_json(obj) -> KTypeSp | KTypeU:
    if "w" in obj:
        return KTypeU(tuple(obj["w"]))
    return KTypeSp(tuple(obj.get("a", [])), tuple(obj.get("b", [])))
