"""Weighted lattice paths on the Fibonacci digraph and minors of its path matrix.

Vertices are 0, 1, 2, ...; arcs go n -> n+1 with weight x q^n and
n -> n+2 with weight y q^n.  The path-sum matrix has entry
F_{c-r}(x q^r, y q^r, q) at (r, c).  Minors are computed by cofactor
expansion, by signed sums over all path tuples or over vertex-disjoint ones,
and by reduction to the closed form for interleaved index sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import comb
from typing import Iterator, Sequence

from .combinat import CeilingExceeded, ceiling
from .poly import ONE, ZERO, LaurentPoly, poly_prod, poly_sum
from .qfib import F, FC

MAX_K = 5
DEFAULT_TUPLE_SPAN = 40


class IndexSequenceError(ValueError):
    pass


def arc_weight(a: int, b: int) -> tuple[int, int, int, int]:
    if b == a + 1:
        return (1, 0, 0, a)
    if b == a + 2:
        return (0, 1, 0, a)
    raise ValueError(f"no arc {a} -> {b}")


@dataclass(frozen=True)
class DigraphPath:
    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = self.vertices
        if not vs:
            raise ValueError("a path has at least one vertex")
        for a, b in zip(vs, vs[1:]):
            if b - a not in (1, 2):
                raise ValueError(f"bad step {a} -> {b}")

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def exponent(self) -> tuple[int, int, int, int]:
        ex = ey = eq = 0
        vs = self.vertices
        for a, b in zip(vs, vs[1:]):
            if b == a + 1:
                ex += 1
            else:
                ey += 1
            eq += a
        return (ex, ey, 0, eq)

    @property
    def weight(self) -> LaurentPoly:
        return LaurentPoly._raw({self.exponent(): 1})


@lru_cache(maxsize=None)
def _path_vertex_lists(a: int, b: int) -> tuple[tuple[int, ...], ...]:
    if a > b:
        return ()
    if a == b:
        return ((a,),)
    out = [(a,) + rest for rest in _path_vertex_lists(a + 1, b)]
    if b >= a + 2:
        out += [(a,) + rest for rest in _path_vertex_lists(a + 2, b)]
    return tuple(out)


def enumerate_paths(a: int, b: int) -> list[DigraphPath]:
    """All directed paths a -> b; empty when a > b."""
    return [DigraphPath(vs) for vs in _path_vertex_lists(a, b)]


def path_sum(a: int, b: int) -> LaurentPoly:
    out: dict = {}
    for vs in _path_vertex_lists(a, b):
        m = DigraphPath(vs).exponent()
        out[m] = out.get(m, 0) + 1
    return LaurentPoly._raw(out)


def perm_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of range(len(perm)), by cycle counting."""
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class PathTuple:
    """Paths p_i from u[i] to v[alpha[i]] (alpha 0-indexed)."""

    u: tuple[int, ...]
    v: tuple[int, ...]
    alpha: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for i, p in enumerate(self.paths):
            if p[0] != self.u[i] or p[-1] != self.v[self.alpha[i]]:
                raise ValueError(f"path {i} does not join u[{i}] to v[alpha[{i}]]")

    @property
    def sign(self) -> int:
        return perm_sign(self.alpha)

    def exponent(self) -> tuple[int, int, int, int]:
        tot = [0, 0, 0, 0]
        for p in self.paths:
            for i, e in enumerate(DigraphPath(p).exponent()):
                tot[i] += e
        return tuple(tot)

    @property
    def weight(self) -> LaurentPoly:
        return LaurentPoly._raw({self.exponent(): 1})

    def crossing_pairs(self) -> list[tuple[int, int]]:
        sets = [set(p) for p in self.paths]
        return [(i, j) for i in range(len(sets)) for j in range(i + 1, len(sets))
                if sets[i] & sets[j]]

    def is_noncrossing(self) -> bool:
        seen: set[int] = set()
        for p in self.paths:
            for w in p:
                if w in seen:
                    return False
                seen.add(w)
        return True


def _check_indices(u: Sequence[int], v: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        raise IndexSequenceError("u and v must have equal length")
    for s in (u, v):
        if any(a >= b for a, b in zip(s, s[1:])) or any(a < 0 for a in s):
            raise IndexSequenceError(f"{s} is not a strictly increasing sequence of vertices")
    return u, v


def enumerate_tuples(u: Sequence[int], v: Sequence[int], filter: str = "all",
                     limit: int | None = None) -> Iterator[PathTuple]:
    u, v = _check_indices(u, v)
    if filter not in ("all", "noncrossing"):
        raise ValueError(f"unknown filter {filter!r}")
    lim = limit if limit is not None else ceiling(DEFAULT_TUPLE_SPAN)
    k = len(u)
    for alpha in permutations(range(k)):
        ends = [v[alpha[i]] for i in range(k)]
        if any(e < s for s, e in zip(u, ends)):
            continue
        if sum(e - s for s, e in zip(u, ends)) > lim:
            raise CeilingExceeded(f"total span exceeds {lim}")
        choices = [_path_vertex_lists(s, e) for s, e in zip(u, ends)]
        for paths in product(*choices):
            t = PathTuple(u, v, alpha, paths)
            if filter == "noncrossing" and not t.is_noncrossing():
                continue
            yield t


def tail_swap(t: PathTuple) -> PathTuple:
    """Swap tails of the first crossing pair at their first shared vertex.

    Sign-reversing and weight-preserving; raises on vertex-disjoint tuples.
    """
    paths = t.paths
    k = len(paths)
    sets = [set(p) for p in paths]
    i = next((a for a in range(k) if any(sets[a] & sets[b] for b in range(k) if b != a)), None)
    if i is None:
        raise ValueError("tail_swap called on a noncrossing tuple")
    others = set().union(*(sets[b] for b in range(k) if b != i))
    w = next(x for x in paths[i] if x in others)
    j = next(b for b in range(i + 1, k) if w in sets[b])
    pi, pj = paths[i], paths[j]
    ci, cj = pi.index(w), pj.index(w)
    new = list(paths)
    new[i] = pi[:ci] + pj[cj:]
    new[j] = pj[:cj] + pi[ci:]
    alpha = list(t.alpha)
    alpha[i], alpha[j] = alpha[j], alpha[i]
    return PathTuple(t.u, t.v, tuple(alpha), tuple(new))


# -- the path matrix and its minors ------------------------------------------

def matrix_entry(r: int, c: int) -> LaurentPoly:
    if r < 0 or c < 0:
        raise ValueError("indices must be nonnegative")
    if c < r:
        return ZERO
    return F(c - r, r)


def _det(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    k = len(rows)
    if k == 0:
        return ONE
    if k == 1:
        return rows[0][0]
    total = ZERO
    for j, a in enumerate(rows[0]):
        if not a:
            continue
        sub = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * _det(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


def minor_cofactor(u: Sequence[int], v: Sequence[int]) -> LaurentPoly:
    u, v = _check_indices(u, v)
    if len(u) > MAX_K:
        raise CeilingExceeded(f"k={len(u)} exceeds {MAX_K}")
    return _det([[matrix_entry(r, c) for c in v] for r in u])


def minor_tuples(u: Sequence[int], v: Sequence[int], filter: str = "all",
                 limit: int | None = None) -> LaurentPoly:
    out: dict = {}
    for t in enumerate_tuples(u, v, filter, limit):
        m = t.exponent()
        out[m] = out.get(m, 0) + t.sign
    return LaurentPoly._raw({m: c for m, c in out.items() if c})


def minor(u: Sequence[int], v: Sequence[int], method: str = "cofactor") -> LaurentPoly:
    if method == "cofactor":
        return minor_cofactor(u, v)
    if method in ("all", "all_tuples"):
        return minor_tuples(u, v, "all")
    if method in ("noncrossing", "noncrossing_tuples"):
        return minor_tuples(u, v, "noncrossing")
    if method == "reduction":
        return minor_by_reduction(u, v)
    raise ValueError(f"unknown method {method!r}")


# -- ballot condition, reducibility, closed form ------------------------------

def _count_below(s: Sequence[int], c: int) -> int:
    return sum(1 for a in s if a < c)


def ballot_check(u: Sequence[int], v: Sequence[int]) -> tuple[bool, int | None]:
    """Check 0 <= u(c) - v(c) <= 2 for all c; return (ok, first violating c).

    u(c) counts sources below c and v(c) sinks below c.
    """
    u, v = _check_indices(u, v)
    if set(u) & set(v):
        raise IndexSequenceError("ballot condition needs u_i != v_j")
    top = max(u + v, default=0) + 1
    for c in range(top + 1):
        d = _count_below(u, c) - _count_below(v, c)
        if d < 0 or d > 2:
            return False, c
    return True, None


def reducible_at(u: Sequence[int], v: Sequence[int]) -> list[int]:
    """Cut points c with u_1 < c <= v_k where as many paths end below c as start there."""
    if not u:
        return []
    return [c for c in range(u[0] + 1, v[-1] + 1)
            if _count_below(u, c) == _count_below(v, c)]


def is_interleaved(u: Sequence[int], v: Sequence[int]) -> bool:
    """u_1 < u_2 < v_1 < u_3 < v_2 < ... < u_k < v_{k-1} < v_k, k >= 2."""
    k = len(u)
    if k < 2 or len(v) != k:
        return False
    merged = [u[0], u[1]]
    for i in range(k - 2):
        merged += [v[i], u[i + 2]]
    merged += [v[k - 2], v[k - 1]]
    return all(a < b for a, b in zip(merged, merged[1:]))


@dataclass(frozen=True)
class ClosedFormMinor:
    y_power: int            # exponent of (-y)
    q_power: int
    factors: tuple[LaurentPoly, ...]

    @property
    def sign(self) -> int:
        return -1 if self.y_power % 2 else 1

    def value(self) -> LaurentPoly:
        return poly_prod(self.factors).scale((0, self.y_power, 0, self.q_power), self.sign)


def closed_form_minor(u: Sequence[int], v: Sequence[int]) -> ClosedFormMinor:
    u, v = _check_indices(u, v)
    if not is_interleaved(u, v):
        raise IndexSequenceError(f"u={u}, v={v} is not interleaved as u1<u2<v1<u3<...<v_k")
    k = len(u)
    ypow = sum(v[i] - u[i + 1] + 1 for i in range(k - 1))
    qpow_ = sum(comb(v[i], 2) - comb(u[i + 1] - 1, 2) for i in range(k - 1))
    factors = [F(u[1] - u[0] - 1, u[0]), F(v[k - 1] - v[k - 2] - 1, v[k - 2] + 1)]
    factors += [F(u[i + 2] - v[i] - 2, v[i] + 1) for i in range(k - 2)]
    return ClosedFormMinor(ypow, qpow_, tuple(factors))


def minor_by_reduction(u: Sequence[int], v: Sequence[int]) -> LaurentPoly:
    """Minor from shared endpoints, the ballot test, cut points and the closed form."""
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        return ZERO
    k = len(u)
    if k == 0:
        return ONE
    shared = sorted(set(u) & set(v))
    if shared:
        c = shared[0]
        u2 = tuple(a for a in u if a != c)
        v2 = tuple(b for b in v if b != c)
        uL = tuple(a for a in u2 if a < c)
        vL = tuple(b for b in v2 if b < c)
        uR = tuple(a for a in u2 if a > c)
        vR = tuple(b for b in v2 if b > c)
        # c carries a length-0 path: the rest either stays on one side of c ...
        total = minor_by_reduction(uL, vL) * minor_by_reduction(uR, vR) \
            if len(uL) == len(vL) else ZERO
        # ... or exactly one path jumps c-1 -> c+1
        # the jumping path may start at c-1 or end at c+1, but no other path
        # may end at c-1 or start at c+1
        if c >= 1 and (c - 1) not in v2 and (c + 1) not in u2 and len(uL) == len(vL) + 1:
            left = minor_by_reduction(uL, vL + (c - 1,))
            right = minor_by_reduction((c + 1,) + uR, vR)
            total = total - (left * right).scale((0, 1, 0, c - 1))
        return total
    ok, _ = ballot_check(u, v)
    if not ok:
        return ZERO
    cuts = reducible_at(u, v)
    if cuts:
        c = cuts[0]
        i = _count_below(u, c)
        return minor_by_reduction(u[:i], v[:i]) * minor_by_reduction(u[i:], v[i:])
    if k == 1:
        return matrix_entry(u[0], v[0])
    return closed_form_minor(u, v).value()


# -- Euler-Cassini and Cigler -------------------------------------------------

def euler_cassini(n: int, m: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the 2x2 minor identity for rows (0, 1), columns (n, n+m)."""
    lhs = minor_cofactor((0, 1), (n, n + m))
    rhs = F(m - 1, n + 1).scale((0, n, 0, comb(n, 2)), -1 if n % 2 else 1)
    return lhs, rhs


def _fc_yshift(n: int, s: int) -> LaurentPoly:
    """F^C_n(x, y q^s, q)."""
    return FC(n).subst({"y": (0, 1, 0, s)})


def cigler_sides(n: int, m: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Cigler's Euler-Cassini analogue built directly from F^C polynomials."""
    lhs = FC(n) * _fc_yshift(n + m - 1, 1) - _fc_yshift(n - 1, 1) * FC(n + m)
    rhs = _fc_yshift(m - 1, n + 1).scale((0, n, 0, comb(n + 1, 2)), -1 if n % 2 else 1)
    return lhs, rhs


def cigler_from_minor(n: int, m: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Cigler's sides obtained from the minor identity by q -> 1/q.

    Uses F_N(xq^a, yq^a, q) = q^(C(N,2)+Na) F^C_N(x, y q^-a, 1/q): after
    inverting q, both products on the left carry the same power
    q^-(C(n,2)+C(n+m,2)), which is cleared here.
    """
    lhs, rhs = euler_cassini(n, m)
    e = comb(n, 2) + comb(n + m, 2)
    return lhs.invert_q().scale((0, 0, 0, e)), rhs.invert_q().scale((0, 0, 0, e))


def cigler_identity(n: int, m: int) -> dict:
    """Check Cigler's identity directly and through the minor; report all four sides."""
    if n < 1 or m < 1:
        raise ValueError("n, m >= 1")
    dl, dr = cigler_sides(n, m)
    tl, tr = cigler_from_minor(n, m)
    return {
        "direct": dl == dr,
        "via_minor": tl == tr,
        "routes_agree": dl == tl and dr == tr,
        "lhs": dl, "rhs": dr,
    }
