"""Paths in the Fibonacci digraph and minors of its path matrix.

Vertices are the integers; arcs n -> n+1 weigh x q^n and n -> n+2 weigh y q^n.

Run: python3 demos/03_minors.py
"""

from qfibstat import lgv

print("paths 0 -> 4:")
for path in lgv.enumerate_paths(0, 4):
    print(f"  {path.vertices}  weight {path.weight}")
print(f"sum: {lgv.path_sum(0, 4)}")

# A minor can be computed by cofactor expansion, as a signed sum over all
# path tuples, or over vertex-disjoint tuples only.
u, v = (0, 1, 4), (2, 6, 8)
print(f"\nminor with rows {u}, columns {v}:")
for method in ("cofactor", "all", "noncrossing", "reduction"):
    print(f"{method:12s} {lgv.minor(u, v, method)}")
cf = lgv.closed_form_minor(u, v)
print(f"closed form  {cf.value()}   ((-y)^{cf.y_power} q^{cf.q_power} times factors)")

# The tail swap pairs up crossing tuples with opposite signs.
crossing = [t for t in lgv.enumerate_tuples((0, 1), (2, 3)) if not t.is_noncrossing()]
t = crossing[0]
s = lgv.tail_swap(t)
print(f"\n{t.paths} sign {t.sign}  <->  {s.paths} sign {s.sign}")

# Sequences failing the ballot test give zero.
print(f"\nballot test on (0,1,2),(3,4,5): {lgv.ballot_check((0, 1, 2), (3, 4, 5))}, "
      f"minor {lgv.minor_cofactor((0, 1, 2), (3, 4, 5))}")

# Rows (0, 1) and columns (n, n+m) give a q-analogue of Euler-Cassini.
print("\nEuler-Cassini minors:")
for n, m in [(2, 2), (3, 2), (4, 3)]:
    lhs, rhs = lgv.euler_cassini(n, m)
    print(f"  n={n}, m={m}: {lhs}   (agrees with closed form: {lhs == rhs}; "
          f"at x=y=q=1: {lhs.evaluate()})")
