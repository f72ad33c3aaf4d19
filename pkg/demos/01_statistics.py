"""Layered partitions and the two statistics ls and rb.

Run: python3 demos/01_statistics.py
"""

from qfibstat import combinat as C
from qfibstat.poly import count_monomials

# A layered partition is a sequence of consecutive intervals.  Those are
# exactly the partitions avoiding 13/2, and there are 2^(n-1) of them.
n = 4
layered = C.enumerate_avoiders(n, [C.P("13/2")])
print(f"{len(layered)} layered partitions of [{n}]:")
for pi in layered:
    s = C.stats(pi)
    print(f"  {str(pi):10s} ls={s.ls}  rb={s.rb}  phi={tuple(C.phi(pi))}")

# Complementation (b -> n+1-b, blocks reversed) swaps the two statistics,
# so their generating functions coincide.
pi = C.P("12/3/4")
c = C.complement(pi)
print(f"\ncomplement of {pi} is {c}:",
      f"(ls, rb) = ({C.ls(pi)}, {C.rb(pi)}) -> ({C.ls(c)}, {C.rb(c)})")

for n in range(1, 8):
    parts = list(C.layered_partitions(n))
    by_ls = count_monomials((0, 0, 0, C.ls(p)) for p in parts)
    by_rb = count_monomials((0, 0, 0, C.rb(p)) for p in parts)
    print(f"  n={n}: sum q^ls == sum q^rb: {by_ls == by_rb}   {by_rb}")

# Pattern containment comes with a witness copy.
sigma = C.P("137/25/4/6")
for pat in ("12/3", "12/34"):
    w = C.contains_pattern(sigma, C.P(pat))
    print(f"\n{sigma} contains {pat}: {w is not None}" + (f", e.g. {w}" if w else ""))
