"""The q-Fibonacci families, built by recursion and by enumeration.

Run: python3 demos/02_families.py
"""

from math import comb

from qfibstat import combinat as C
from qfibstat import qfib as Q

print("F_n(q) over layered matchings, with q=1 giving Fibonacci numbers:")
for n in range(7):
    P = Q.family_poly("F_q", n)
    assert P == Q.family_poly("F_q", n, "enumeration")
    print(f"  F_{n}(q) = {P}    (q=1: {P.evaluate()})")

print("\nWith singletons marked by x and doubletons by y:")
for n in range(5):
    print(f"  F_{n}(x,y,q) = {Q.family_poly('F_xyq', n)}")

# Reversing q turns the matching polynomial into the Carlitz and Cigler
# polynomials, after multiplying by q^C(n,2).
n = 6
lhs, rhs = Q.cigler_transform(n)
print(f"\nq -> 1/q relation at n={n}: sides equal: {lhs == rhs}")
print(f"  F^C_{n}(x,y,q) = {Q.family_poly('FC', n)}")

# A Morse word of dots and dashes: a dash after a prefix of length a
# weighs y q^(a+1).
nu = C.MorseSeq("..--.-")
print(f"\nweight of {nu}: {C.morse_weight(nu)}")
print(f"its coefficient in F^C_9: {Q.family_poly('FC', 9).coeff((3, 3, 0, 16))}")

# Grouping matchings by number of doubletons gives q-binomials.
print("\nmatchings of [7] with k doubletons, summed by q^rb:")
for k in range(4):
    print(f"  k={k}: {Q.rb_slice_enumeration(7, k)}")
    print(f"        = q^{comb(k, 2) + comb(7 - k, 2)} [{7 - k} choose {k}]_q: "
          f"{Q.carlitz_slice(7, k) == Q.rb_slice_enumeration(7, k)}")
