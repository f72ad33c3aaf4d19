"""The p,q-refinement: track ls with p and rb with q at the same time.

Run: python3 demos/04_pq_table.py
"""

from qfibstat import qfib as Q
from qfibstat import verify as V

for n in range(5):
    print(f"F_{n}(x,y,p,q) = {Q.family_poly('F_xypq', n)}")

print("\np,q-binomial [4 choose 2] =", Q.pqbinom(4, 2))

print("\nthe p,q identity table on small parameters:")
for name in [f"pq-{i}" for i in range(1, 10)] + ["pq-8-corrected"]:
    rep = V.run_identity(name, {k: (lo, min(hi, 6)) for k, (lo, hi)
                                in V.REGISTRY[name].quick.items()})
    print(f"  {name:16s} {rep.status:5s} ({rep.instances} instances)")
    if rep.counterexample:
        ce = rep.counterexample
        print(f"      at {ce['params']}: {ce['sides'][0]}  vs  {ce['sides'][1]}")

# The convolution for F_2n needs an extra p^(n(n-k)) on its k-th term: every
# element after the n-th block forms a left-smaller pair with each of the
# first n blocks.  At n = 1 the matching 1/2 has ls = 1, yet its term in the
# uncorrected sum carries no p.
print("\nF_2 =", Q.family_poly("F_xypq", 2))
