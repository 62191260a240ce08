"""Where does a representation of O*(4) first show up in each Witt tower?

Prints the occurrence picture for a discrete series and its first-occurrence
indices, then checks the conservation sum over neighbouring towers.

    python3 demos/first_occurrence.py
"""
from thetalift.occurrence import WittTower, conservation_report, first_occurrence, picture
from thetalift.ostar_dual import make

rep = make("D", 5, 1)
print(f"occurrence of {rep} on Sp(p,q), p,q <= 6\n")
print(picture(rep, 6))

print("\nfirst occurrence by tower (p - q = delta)")
for delta in range(-3, 4):
    print(f"  delta={delta:+d}  n_T={first_occurrence(rep, WittTower(delta), 30)}")

report = conservation_report(rep, 12)
for a, b in report.sum5_pairs:
    print(f"\ntowers {a:+d} and {b:+d}: {report.first[a]} + {report.first[b]} = 5")
print("every pair meets the 4 + dist bound:", report.all_pairs_ok)
