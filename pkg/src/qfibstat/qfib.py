"""q-Fibonacci families, q-binomials and p,q-binomials.

Every family can be built two ways: by its recursion, or by summing
weights over the combinatorial objects it counts.  The two routes share no
code beyond the polynomial ring, so agreement between them is a real check.

Families (``Family.tag``):

``A``       sum of q^rb over layered partitions of [n]
``F_q``     sum of q^rb over layered matchings of [n]
``F_xyq``   sum of x^s y^d q^rb over layered matchings
``FK``      Carlitz: sum of q^rho over binary words of length n-1
``FC``      Cigler: sum of Morse-sequence weights of length n
``F_xypq``  sum of x^s y^d p^ls q^rb over layered matchings
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import combinat as C
from .poly import ONE, ZERO, LaurentPoly, count_monomials, poly_sum, ppow, qpow

TAGS = ("A", "F_q", "F_xyq", "FK", "FC", "F_xypq")
_XY_FREE = ("A", "F_q", "FK")
DEFAULT_CEILING = 25


@dataclass(frozen=True)
class Family:
    tag: str
    a: int = 0  # x -> x q^a, y -> y q^a
    b: int = 0  # x -> x p^b, y -> y p^b

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown family {self.tag!r}; expected one of {TAGS}")
        if self.a < 0 or self.b < 0:
            raise ValueError("shift parameters must be nonnegative")
        if self.tag in _XY_FREE and (self.a or self.b):
            raise ValueError(f"family {self.tag} has no x, y to shift")


def fib(n: int) -> int:
    """Fibonacci numbers with F_0 = F_1 = 1; zero for negative n."""
    if n < 0:
        return 0
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


X = (1, 0, 0, 0)
Y = (0, 1, 0, 0)


# -- recursions --------------------------------------------------------------

@lru_cache(maxsize=None)
def _rec_A(n: int) -> LaurentPoly:
    # last block [j+1, n] contributes j
    if n == 0:
        return ONE
    return poly_sum(_rec_A(j).scale((0, 0, 0, j)) for j in range(n))


@lru_cache(maxsize=None)
def _rec_Fq(n: int) -> LaurentPoly:
    if n <= 1:
        return ONE
    return _rec_Fq(n - 1).scale((0, 0, 0, n - 1)) + _rec_Fq(n - 2).scale((0, 0, 0, n - 2))


@lru_cache(maxsize=None)
def _rec_Fxyq(n: int) -> LaurentPoly:
    if n == 0:
        return ONE
    if n == 1:
        return LaurentPoly._raw({X: 1})
    return (_rec_Fxyq(n - 1).scale((1, 0, 0, n - 1))
            + _rec_Fxyq(n - 2).scale((0, 1, 0, n - 2)))


@lru_cache(maxsize=None)
def _rec_FK(n: int) -> LaurentPoly:
    if n <= 1:
        return ONE
    return _rec_FK(n - 1) + _rec_FK(n - 2).scale((0, 0, 0, n - 1))


@lru_cache(maxsize=None)
def _rec_FC(n: int) -> LaurentPoly:
    if n == 0:
        return ONE
    if n == 1:
        return LaurentPoly._raw({X: 1})
    return _rec_FC(n - 1).scale(X) + _rec_FC(n - 2).scale((0, 1, 0, n - 1))


@lru_cache(maxsize=None)
def _rec_Fxypq(n: int) -> LaurentPoly:
    if n == 0:
        return ONE
    if n == 1:
        return LaurentPoly._raw({X: 1})
    return (_rec_Fxypq(n - 1).shift(b=1).scale((1, 0, 0, n - 1))
            + _rec_Fxypq(n - 2).shift(b=2).scale((0, 1, 0, n - 2)))


_RECURSIONS = {
    "A": _rec_A, "F_q": _rec_Fq, "F_xyq": _rec_Fxyq,
    "FK": _rec_FK, "FC": _rec_FC, "F_xypq": _rec_Fxypq,
}


# -- enumerations ------------------------------------------------------------

def _enum_A(n: int) -> LaurentPoly:
    return count_monomials((0, 0, 0, C.rb(pi)) for pi in C.layered_partitions(n))


def _enum_Fq(n: int) -> LaurentPoly:
    return count_monomials((0, 0, 0, C.rb(pi)) for pi in C.layered_matchings(n))


def _enum_Fxyq(n: int) -> LaurentPoly:
    out = []
    for pi in C.layered_matchings(n):
        s = C.stats(pi)
        out.append((s.singletons, s.doubletons, 0, s.rb))
    return count_monomials(out)


def _enum_FK(n: int) -> LaurentPoly:
    if n == 0:
        return ONE
    return count_monomials((0, 0, 0, C.rho(beta)) for beta in C.binary_sequences(n - 1))


def _enum_FC(n: int) -> LaurentPoly:
    return poly_sum(C.morse_weight(nu) for nu in C.morse_sequences(n))


def _enum_Fxypq(n: int) -> LaurentPoly:
    out = []
    for pi in C.layered_matchings(n):
        s = C.stats(pi)
        out.append((s.singletons, s.doubletons, s.ls, s.rb))
    return count_monomials(out)


_ENUMERATIONS = {
    "A": _enum_A, "F_q": _enum_Fq, "F_xyq": _enum_Fxyq,
    "FK": _enum_FK, "FC": _enum_FC, "F_xypq": _enum_Fxypq,
}


def family_poly(fam: Family | str, n: int, via: str = "recursion",
                limit: int | None = None) -> LaurentPoly:
    if isinstance(fam, str):
        fam = Family(fam)
    if n < 0:
        raise ValueError("n must be nonnegative")
    lim = limit if limit is not None else C.ceiling(DEFAULT_CEILING)
    if n > lim:
        raise C.CeilingExceeded(f"n={n} exceeds ceiling {lim}")
    if via == "recursion":
        base = _RECURSIONS[fam.tag](n)
    elif via == "enumeration":
        base = _ENUMERATIONS[fam.tag](n)
    else:
        raise ValueError(f"unknown route {via!r}")
    return base.shift(fam.a, fam.b)


def F(n: int, a: int = 0, b: int = 0) -> LaurentPoly:
    """F_n(x q^a p^b, y q^a p^b, q) from the memoized recursion; zero for n < 0."""
    if n < 0:
        return ZERO
    return _rec_Fxyq(n).shift(a, b)


def Fpq(n: int, a: int = 0, b: int = 0) -> LaurentPoly:
    """F_n(x q^a p^b, y q^a p^b, p, q); zero for n < 0."""
    if n < 0:
        return ZERO
    return _rec_Fxypq(n).shift(a, b)


def Fq(n: int) -> LaurentPoly:
    return ZERO if n < 0 else _rec_Fq(n)


def FC(n: int) -> LaurentPoly:
    return ZERO if n < 0 else _rec_FC(n)


def FK(n: int) -> LaurentPoly:
    return ZERO if n < 0 else _rec_FK(n)


def shifted_enumeration(n: int, k: int) -> LaurentPoly:
    """Sum of omega over layered matchings of [n] shifted by k blanks."""
    return poly_sum(C.shift(pi, k).omega() for pi in C.layered_matchings(n))


def a_product(n: int) -> LaurentPoly:
    r = ONE
    for i in range(1, n):
        r = r * (ONE + qpow(i))
    return r


# -- q- and p,q-binomials ----------------------------------------------------

@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial via the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return qbinom(n - 1, k - 1) + qbinom(n - 1, k).scale((0, 0, 0, k))


def qbinom_product(n: int, k: int) -> LaurentPoly:
    if k < 0 or k > n:
        return ZERO
    num = den = ONE
    for i in range(1, k + 1):
        num = num * (qpow(n - i + 1) - 1)
        den = den * (qpow(i) - 1)
    return num.exact_div(den)


def qbinom_box(n: int, k: int) -> LaurentPoly:
    if k < 0 or k > n:
        return ZERO
    return count_monomials((0, 0, 0, lam.size) for lam in C.box_partitions(k, n - k))


@lru_cache(maxsize=None)
def pqbinom(n: int, k: int) -> LaurentPoly:
    """p,q-binomial from its product form, divided exactly in the ring."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    num = den = ONE
    for i in range(1, k + 1):
        num = num * (ppow(n - i + 1) - qpow(n - i + 1))
        den = den * (ppow(i) - qpow(i))
    return num.exact_div(den)


@lru_cache(maxsize=None)
def pqbinom_pascal(n: int, k: int) -> LaurentPoly:
    """[n,k] = p^(n-k) [n-1,k-1] + q^k [n-1,k]."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return (pqbinom_pascal(n - 1, k - 1).scale((0, 0, n - k, 0))
            + pqbinom_pascal(n - 1, k).scale((0, 0, 0, k)))


def swap_pq(P: LaurentPoly) -> LaurentPoly:
    return P.subst({"p": (0, 0, 0, 1), "q": (0, 0, 1, 0)})


# -- closed forms and transforms ---------------------------------------------

def carlitz_slice(n: int, k: int) -> LaurentPoly:
    """q^(C(k,2) + C(n-k,2)) [n-k, k]: the rb polynomial of matchings with k doubletons."""
    if k < 0 or 2 * k > n:
        return ZERO
    return qbinom(n - k, k).scale((0, 0, 0, comb(k, 2) + comb(n - k, 2)))


def carlitz_closed_form(n: int) -> LaurentPoly:
    return poly_sum(carlitz_slice(n, k).scale((n - 2 * k, k, 0, 0))
                    for k in range(n // 2 + 1))


def rb_slice_enumeration(n: int, k: int) -> LaurentPoly:
    return count_monomials((0, 0, 0, C.rb(pi)) for pi in C.layered_matchings(n)
                           if C.block_count(pi, 2) == k)


def carlitz_transform(n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """(F_n(q), q^C(n,2) F^K_n(1/q)), each side built by enumeration."""
    lhs = family_poly("F_q", n, "enumeration")
    rhs = family_poly("FK", n, "enumeration").invert_q().scale((0, 0, 0, comb(n, 2)))
    return lhs, rhs


def cigler_transform(n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """(F_n(x,y,q), q^C(n,2) F^C_n(x,y,1/q)), each side built by enumeration."""
    lhs = family_poly("F_xyq", n, "enumeration")
    rhs = family_poly("FC", n, "enumeration").invert_q().scale((0, 0, 0, comb(n, 2)))
    return lhs, rhs


def extension_transform(n: int, a: int) -> tuple[LaurentPoly, LaurentPoly]:
    """(F_n(xq^a, yq^a, q), q^(C(n,2)+na) F^C_n(x, y/q^a, 1/q))."""
    lhs = F(n, a)
    rhs = (FC(n).subst({"y": (0, 1, 0, -a), "q": (0, 0, 0, -1)})
           .scale((0, 0, 0, comb(n, 2) + n * a)))
    return lhs, rhs


def transform(fam_from: str, fam_to: str, n: int, a: int = 0) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the q -> 1/q relation linking two families."""
    key = (fam_from, fam_to)
    if key == ("FK", "F_q"):
        return carlitz_transform(n)
    if key == ("FC", "F_xyq"):
        return extension_transform(n, a) if a else cigler_transform(n)
    raise ValueError(f"no transform from {fam_from} to {fam_to}")
