"""Theta lifts of a few O*(4) representations to small Sp(p,q).

Each row shows the Langlands parameter and the route the engine took.

    python3 demos/lift_table.py
"""
from thetalift.core import LanglandsParam, fmt_param, label_psi
from thetalift.lifts import theta
from thetalift.ostar_dual import make


def pretty(v):
    psi = label_psi(v.levi, v.lam, v.psi)
    return fmt_param(LanglandsParam(v.group, v.r, v.lam, psi, v.mu, v.nu))


reps = [make("F", 1, 0), make("D", 5, 1), make("D", 5, 0), make("Dbar", 1, -4),
        make("P", "3/2", "1/2")]
for rep in reps:
    print(rep)
    for p, q in [(0, 0), (1, 0), (2, 1), (3, 1), (2, 2), (3, 2)]:
        res = theta(rep, p, q)
        value = "0" if res.is_zero else pretty(res.value)
        print(f"  Sp({p},{q})  {value:<28} {' -> '.join(reversed(res.trace))}")
    print()
