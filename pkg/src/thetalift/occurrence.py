"""Occurrence sets in closed form, Witt towers, first occurrence, conservation.

These formulas are deliberately independent of the lift engine so the two
can be checked against each other.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import ConservationViolation
from .ostar_dual import OStar2Rep, OStar4Rep


def _occurs_chi(k: int, p: int, q: int) -> bool:
    if p < 0 or q < 0:
        return False
    if min(p, q) >= 1:
        return True
    if k == 0:
        return p == q == 0
    if k > 0:
        return q == 0 and 1 <= p <= k
    return p == 0 and 1 <= q <= -k


def occurs(rep, p: int, q: int) -> bool:
    if p < 0 or q < 0:
        return False
    if isinstance(rep, OStar2Rep):
        return _occurs_chi(rep.k, p, q)
    if rep.family == "P":
        return min(p, q) >= 1
    if rep.family == "D":
        return _occurs_chi(rep.l2.as_int(), p - 1, q)
    if rep.family == "Dbar":
        return _occurs_chi(rep.l1.as_int(), p, q - 1)
    l1, l2 = rep.l1.as_int(), rep.l2.as_int()
    if (p, q) == (0, 0):
        return (l1, l2) == (1, 0)
    if min(p, q) >= 2:
        return True
    if q == 1 and 1 <= p <= l1:
        return True
    return p == 1 and 1 <= q <= l1


@dataclass(frozen=True)
class WittTower:
    delta: int

    def dist(self, other: "WittTower") -> int:
        return abs(self.delta - other.delta)


def first_occurrence(rep, tower: WittTower, bound: int) -> int | None:
    d = tower.delta
    if bound < abs(d):
        raise ValueError("bound must be at least |delta|")
    q = max(0, -d)
    while 2 * q + d <= bound:
        if occurs(rep, q + d, q):
            return 2 * q + d
        q += 1
    return None


@dataclass(frozen=True)
class ConservationReport:
    first: dict = field(hash=False)            # delta -> n_T
    sum5_pairs: tuple[tuple[int, int], ...]
    all_pairs_ok: bool
    violations: tuple[tuple[int, int], ...] = ()

    @property
    def pair_sum_5(self) -> tuple[int, int] | None:
        return self.sum5_pairs[0] if self.sum5_pairs else None


def conservation_report(rep: OStar4Rep, bound: int = 12, strict: bool = True) -> ConservationReport:
    """First occurrences over towers |delta| <= bound and the pairwise sums.

    With ``strict`` a missing sum-5 pair or a violated lower bound raises
    ConservationViolation.
    """
    if bound < 8:
        raise ValueError("bound must be at least 8")
    first = {}
    for d in range(-bound, bound + 1):
        n = first_occurrence(rep, WittTower(d), 2 * bound + 8)
        if n is not None:
            first[d] = n
    sum5, bad = [], []
    for a, b in itertools.combinations(sorted(first), 2):
        s = first[a] + first[b]
        if s == 5:
            sum5.append((a, b))
        if s < 4 + abs(a - b):
            bad.append((a, b))
    report = ConservationReport(first, tuple(sum5), not bad, tuple(bad))
    if strict and (bad or not sum5):
        raise ConservationViolation(
            f"{rep}: sum-5 pairs {sum5}, pairs below 4+dist {bad}")
    return report


def occurrence_grid(rep, size: int) -> list[list[bool]]:
    """grid[q][p] for 0 <= p, q <= size."""
    return [[occurs(rep, p, q) for p in range(size + 1)] for q in range(size + 1)]


def picture(rep, size: int) -> str:
    """ASCII occurrence picture, q growing upwards, '#' nonzero, '·' zero."""
    grid = occurrence_grid(rep, size)
    w = len(str(size))
    lines = []
    for q in range(size, -1, -1):
        cells = " ".join("#".rjust(w) if grid[q][p] else "·".rjust(w) for p in range(size + 1))
        lines.append(f"{str(q).rjust(w)} | {cells}")
    lines.append(" " * w + " +-" + "-" * ((w + 1) * (size + 1)))
    lines.append(" " * w + "   " + " ".join(str(p).rjust(w) for p in range(size + 1)) + "   p")
    lines.insert(0, "q".rjust(w))
    return "\n".join(lines)
