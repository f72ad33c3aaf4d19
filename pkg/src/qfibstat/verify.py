"""Registry of identities checked as exact polynomial equalities.

Each identity maps a parameter assignment to two or more polynomials that
must coincide.  Where a bijective argument splits a set of partitions into
classes, the identity can also carry a refinement: each class's weight sum is
compared with the term of the right-hand side it is supposed to produce.

>>> report = run_identity("prop3.1-rec", {"n": (2, 8)})
>>> report.status, report.instances
('pass', 7)
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Callable, Iterable, Iterator

from . import combinat as C
from . import lgv
from . import qfib as Q
from .poly import ONE, ZERO, LaurentPoly, count_monomials, poly_prod, poly_sum, qpow

Assignment = dict
Domain = dict  # name -> (lo, hi) inclusive


def M(ex: int = 0, ey: int = 0, ep: int = 0, eq: int = 0, c: int = 1) -> LaurentPoly:
    return LaurentPoly._raw({(ex, ey, ep, eq): c} if c else {})


# -- independently enumerated sides (cached) ---------------------------------

@lru_cache(maxsize=None)
def enum_F(n: int) -> LaurentPoly:
    return Q.family_poly("F_xyq", n, "enumeration")


@lru_cache(maxsize=None)
def enum_Fq(n: int) -> LaurentPoly:
    return Q.family_poly("F_q", n, "enumeration")


@lru_cache(maxsize=None)
def enum_Fpq(n: int) -> LaurentPoly:
    return Q.family_poly("F_xypq", n, "enumeration")


@lru_cache(maxsize=None)
def _matchings(n: int) -> tuple[C.SetPartition, ...]:
    return tuple(C.layered_matchings(n))


def _omega_sum(parts: Iterable[C.SetPartition]) -> LaurentPoly:
    return count_monomials(C.omega_exponents(pi) for pi in parts)


def _group(parts: Iterable, key: Callable) -> dict:
    out: dict = {}
    for pi in parts:
        out.setdefault(key(pi), []).append(pi)
    return out


# -- identity type and runner ------------------------------------------------

@dataclass
class Identity:
    name: str
    tags: str
    quick: Domain
    full: Domain
    sides: Callable[[Assignment], tuple]
    where: Callable[[Assignment], bool] = lambda a: True
    expand: Callable[[Assignment], Iterator[Assignment]] | None = None
    refine: Callable[[Assignment], list] | None = None

    def domain(self, profile: str) -> Domain:
        return dict(self.quick if profile == "quick" else self.full)


@dataclass
class Report:
    name: str
    tags: str
    domain: dict
    instances: int = 0
    status: str = "pass"
    counterexample: dict | None = None
    elapsed: float = 0.0
    refinements: int = 0

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self, deterministic: bool = False) -> dict:
        d = {
            "name": self.name,
            "tags": self.tags,
            "domain": {k: list(v) for k, v in self.domain.items()},
            "instances": self.instances,
            "refinement_classes": self.refinements,
            "status": self.status,
            "counterexample": self.counterexample,
        }
        if not deterministic:
            d["elapsed"] = round(self.elapsed, 4)
        return d

    def line(self, deterministic: bool = False) -> str:
        label = {"pass": "PASS", "fail": "FAIL", "vacuous": "VACUOUS"}[self.status]
        s = f"{label:8s}{self.name:28s}instances={self.instances:<6d}"
        if self.status == "vacuous":
            s += "vacuous: 0 instances"
        if not deterministic:
            s += f"  {self.elapsed:7.3f}s"
        if self.counterexample:
            ce = self.counterexample
            s += f"\n    at {ce['params']} ({ce['part']}):"
            for i, side in enumerate(ce["sides"]):
                s += f"\n      side {i}: {side}"
        return s


REGISTRY: dict[str, Identity] = {}


def register(ident: Identity) -> Identity:
    if ident.name in REGISTRY:
        raise ValueError(f"duplicate identity {ident.name}")
    REGISTRY[ident.name] = ident
    return ident


def _assignments(domain: Domain, where) -> Iterator[Assignment]:
    names = list(domain)
    ranges = [range(lo, hi + 1) for lo, hi in domain.values()]
    for vals in product(*ranges):
        a = dict(zip(names, vals))
        if where(a):
            yield a


def run_identity(name: str, overrides: Domain | None = None,
                 profile: str = "quick", refine: bool = True,
                 sample: int | None = None, seed: int = 0) -> Report:
    """Check every assignment in the domain, or a seeded random sample of them."""
    if name not in REGISTRY:
        raise KeyError(f"unknown identity {name!r}")
    ident = REGISTRY[name]
    domain = ident.domain(profile)
    if overrides:
        for k, v in overrides.items():
            if k not in domain:
                raise KeyError(f"{name} has no parameter {k!r}")
            domain[k] = tuple(v)
    rep = Report(name, ident.tags, domain)
    t0 = time.perf_counter()
    points = _assignments(domain, ident.where)
    if sample is not None:
        pool = list(points)
        picks = random.Random(seed).sample(range(len(pool)), min(sample, len(pool)))
        points = [pool[i] for i in sorted(picks)]
    for a in points:
        subs = ident.expand(a) if ident.expand else (a,)
        for sub in subs:
            rep.instances += 1
            sides = ident.sides(sub)
            if any(s != sides[0] for s in sides[1:]):
                rep.status = "fail"
                rep.counterexample = {"params": sub, "part": "identity",
                                      "sides": [str(s) for s in sides]}
                break
            if refine and ident.refine:
                for label, got, want in ident.refine(sub):
                    rep.refinements += 1
                    if got != want:
                        rep.status = "fail"
                        rep.counterexample = {"params": sub, "part": f"refinement {label}",
                                              "sides": [str(got), str(want)]}
                        break
            if rep.status == "fail":
                break
        if rep.status == "fail":
            break
    if rep.instances == 0:
        rep.status = "vacuous"
    rep.elapsed = time.perf_counter() - t0
    return rep


@dataclass
class Summary:
    profile: str
    reports: list[Report] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    @property
    def elapsed(self) -> float:
        return sum(r.elapsed for r in self.reports)

    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "vacuous": 0}
        for r in self.reports:
            out[r.status] += 1
        return out

    def text(self, deterministic: bool = False) -> str:
        lines = [r.line(deterministic) for r in self.reports]
        c = self.counts()
        tail = f"{len(self.reports)} identities: {c['pass']} pass, {c['fail']} fail, " \
               f"{c['vacuous']} vacuous"
        if not deterministic:
            tail += f" ({self.elapsed:.2f}s)"
        return "\n".join(lines + [tail])

    def to_dict(self, deterministic: bool = False) -> dict:
        d = {"profile": self.profile, "ok": self.ok, "counts": self.counts(),
             "results": [r.to_dict(deterministic) for r in self.reports]}
        if not deterministic:
            d["elapsed"] = round(self.elapsed, 4)
        return d

    def json(self, deterministic: bool = False) -> str:
        return json.dumps(self.to_dict(deterministic), indent=2)


def _run_one(args):
    name, profile, sample, seed = args
    return run_identity(name, profile=profile, sample=sample, seed=seed)


def run_all(profile: str = "quick", names: Iterable[str] | None = None,
            workers: int = 1, sample: int | None = None, seed: int = 0) -> Summary:
    """Run identities (all by default); reports come back in registry order."""
    if profile not in ("quick", "full"):
        raise ValueError(f"unknown profile {profile!r}")
    wanted = None if names is None else set(names)
    if wanted is not None and wanted - set(REGISTRY):
        raise KeyError(f"unknown identities {sorted(wanted - set(REGISTRY))}")
    chosen = [n for n in REGISTRY if wanted is None or n in wanted]
    jobs = [(n, profile, sample, seed) for n in chosen]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(workers) as ex:
            reports = list(ex.map(_run_one, jobs))
    else:
        reports = [_run_one(j) for j in jobs]
    return Summary(profile, reports)


# ============================================================================
# The identities
# ============================================================================

F = Q.F
Fpq = Q.Fpq


def _ls_rb_sides(gen):
    def sides(a):
        parts = list(gen(a["n"]))
        return (count_monomials((0, 0, 0, C.ls(p)) for p in parts),
                count_monomials((0, 0, 0, C.rb(p)) for p in parts))
    return sides


register(Identity(
    "thm1.1-ls-rb-132", "ls and rb equidistributed on layered partitions",
    {"n": (0, 14)}, {"n": (0, 16)}, _ls_rb_sides(C.layered_partitions)))

register(Identity(
    "thm1.1-ls-rb-132-123", "ls and rb equidistributed on layered matchings",
    {"n": (0, 14)}, {"n": (0, 22)}, _ls_rb_sides(C.layered_matchings)))

register(Identity(
    "thm2.1-product", "A_n(q) = prod (1 + q^i)",
    {"n": (0, 14)}, {"n": (0, 18)},
    lambda a: (Q.family_poly("A", a["n"], "enumeration"), Q.a_product(a["n"]))))

register(Identity(
    "prop3.1-rec", "F_n(q) = q^(n-1) F_(n-1)(q) + q^(n-2) F_(n-2)(q)",
    {"n": (2, 20)}, {"n": (2, 25)},
    lambda a: (enum_Fq(a["n"]),
               enum_Fq(a["n"] - 1).scale((0, 0, 0, a["n"] - 1))
               + enum_Fq(a["n"] - 2).scale((0, 0, 0, a["n"] - 2)))))

register(Identity(
    "prop3.2-carlitz", "F_n(q) = q^C(n,2) F^K_n(1/q)",
    {"n": (0, 14)}, {"n": (0, 22)}, lambda a: Q.carlitz_transform(a["n"])))

register(Identity(
    "prop3.3-cigler", "F_n(x,y,q) = q^C(n,2) F^C_n(x,y,1/q)",
    {"n": (0, 14)}, {"n": (0, 22)}, lambda a: Q.cigler_transform(a["n"])))

register(Identity(
    "eqFn-rec", "F_n(x,y,q) = x q^(n-1) F_(n-1) + y q^(n-2) F_(n-2)",
    {"n": (2, 20)}, {"n": (2, 25)},
    lambda a: (enum_F(a["n"]),
               enum_F(a["n"] - 1).scale((1, 0, 0, a["n"] - 1))
               + enum_F(a["n"] - 2).scale((0, 1, 0, a["n"] - 2)))))


# -- section 4 ---------------------------------------------------------------

def _first_doubleton(pi):
    return next((b[0] - 1 for b in pi.blocks if len(b) == 2), None)


def _first_singleton(pi):
    return next((b[0] for b in pi.blocks if len(b) == 1), None)


def _t41_term(n, j):
    if j is None:
        return M(n + 2, 0, 0, comb(n + 2, 2))
    return F(n - j, j + 2).scale((j, 1, 0, comb(j + 1, 2)))


register(Identity(
    "thm4.1", "first doubleton decomposition of F_(n+2)",
    {"n": (0, 12)}, {"n": (0, 18)},
    lambda a: (enum_F(a["n"] + 2),
               poly_sum([_t41_term(a["n"], None)] + [_t41_term(a["n"], j) for j in range(a["n"] + 1)])),
    refine=lambda a: [(f"first doubleton at {j}", _omega_sum(cls), _t41_term(a["n"], j))
                      for j, cls in _group(_matchings(a["n"] + 2), _first_doubleton).items()]))


def _t42_term(n, j, odd):
    if j is None:
        return M(0, n, 0, n * (n - 1))
    rest = 2 * n - 2 * j if odd else 2 * n - 2 * j - 1
    return F(rest, 2 * j + 1).scale((1, j, 0, j * (j + 1)))


def _t42_key(pi):
    s = _first_singleton(pi)
    return None if s is None else (s - 1) // 2


register(Identity(
    "thm4.2-odd", "first singleton decomposition of F_(2n+1)",
    {"n": (0, 12)}, {"n": (0, 13)},
    lambda a: (enum_F(2 * a["n"] + 1),
               poly_sum(_t42_term(a["n"], j, True) for j in range(a["n"] + 1))),
    refine=lambda a: [(f"first singleton {2 * j + 1}", _omega_sum(cls), _t42_term(a["n"], j, True))
                      for j, cls in _group(_matchings(2 * a["n"] + 1), _t42_key).items()]))

register(Identity(
    "thm4.2-even", "first singleton decomposition of F_(2n)",
    {"n": (0, 12)}, {"n": (0, 13)},
    lambda a: (enum_F(2 * a["n"]),
               poly_sum([_t42_term(a["n"], None, False)]
                        + [_t42_term(a["n"], j, False) for j in range(a["n"])])),
    refine=lambda a: [(f"first singleton {j}", _omega_sum(cls), _t42_term(a["n"], j, False))
                      for j, cls in _group(_matchings(2 * a["n"]), _t42_key).items()]))


def _t43_terms(m, n):
    first = F(m) * F(n, m)
    second = (F(m - 1) * F(n - 1, m + 1)).scale((0, 1, 0, m - 1)) if m >= 1 else ZERO
    return first, second


register(Identity(
    "thm4.3-addition", "F_(m+n) split on the block {m, m+1}",
    {"m": (0, 12), "n": (0, 12)}, {"m": (0, 14), "n": (0, 14)},
    lambda a: (enum_F(a["m"] + a["n"]), sum(_t43_terms(a["m"], a["n"]), ZERO)),
    where=lambda a: a["m"] + a["n"] <= 16,
    refine=lambda a: [
        (label, _omega_sum(cls), _t43_terms(a["m"], a["n"])[idx])
        for (label, idx), cls in _group(
            _matchings(a["m"] + a["n"]),
            lambda pi: (("has {m,m+1}", 1) if a["m"] >= 1 and (a["m"], a["m"] + 1) in pi.blocks
                        else ("no {m,m+1}", 0))).items()]))


def _t44_refine(a):
    m, n = a["m"], a["n"]
    both = ZERO
    other = ZERO
    for p1 in _matchings(m + 1):
        w1 = C.omega(p1)
        for p2 in _matchings(n + 1):
            w = w1 * C.shift(p2, m).omega()
            if len(p1.blocks[-1]) == 2 and len(p2.blocks[0]) == 2:
                both = both + w
            else:
                other = other + w
    return [("pi1 ends and pi2 starts with doubletons", both,
             (F(m - 1) * F(n - 1, m + 2)).scale((0, 2, 0, 2 * m - 1))),
            ("a singleton at the seam", other, F(m + n + 1).scale((1, 0, 0, m)))]


register(Identity(
    "thm4.4", "F_(m+1) F_(n+1)(xq^m, yq^m) product split",
    {"m": (1, 12), "n": (1, 12)}, {"m": (1, 14), "n": (1, 14)},
    lambda a: (enum_F(a["m"] + 1) * Q.shifted_enumeration(a["n"] + 1, a["m"]),
               enum_F(a["m"] + a["n"] + 1).scale((1, 0, 0, a["m"]))
               + (F(a["m"] - 1) * F(a["n"] - 1, a["m"] + 2)).scale((0, 2, 0, 2 * a["m"] - 1))),
    where=lambda a: a["m"] + a["n"] <= 16,
    refine=_t44_refine))


def _t45_term(n, j):
    return (F(n - j, j) * F(n - j, j + 1)).scale((1, j, 0, j * j // 2))


def _t45_key(p1, p2):
    # blocks searched in the order B_1, A_1, B_2, A_2, ... (B from the longer partition)
    for i in range(max(len(p1.blocks), len(p2.blocks))):
        if i < len(p2.blocks) and len(p2.blocks[i]) == 1:
            return p2.blocks[i][0] - 1
        if i < len(p1.blocks) and len(p1.blocks[i]) == 1:
            return p1.blocks[i][0]
    raise AssertionError("no singleton in a pair of consecutive sizes")


def _t45_refine(a):
    n = a["n"]
    sums: dict = {}
    for p1 in _matchings(n):
        e1 = C.omega_exponents(p1)
        for p2 in _matchings(n + 1):
            e2 = C.omega_exponents(p2)
            j = _t45_key(p1, p2)
            m = tuple(s + t for s, t in zip(e1, e2))
            d = sums.setdefault(j, {})
            d[m] = d.get(m, 0) + 1
    return [(f"first singleton index {j}", LaurentPoly._raw(d), _t45_term(n, j))
            for j, d in sorted(sums.items())]


register(Identity(
    "thm4.5-convolution", "F_n F_(n+1) by first singleton",
    {"n": (0, 12)}, {"n": (0, 14)},
    lambda a: (enum_F(a["n"]) * enum_F(a["n"] + 1),
               poly_sum(_t45_term(a["n"], j) for j in range(a["n"] + 1))),
    refine=_t45_refine))

register(Identity(
    "thm4.6-carlitz-binom", "F_n = sum x^(n-2k) y^k q^(C(k,2)+C(n-k,2)) [n-k, k]",
    {"n": (0, 16)}, {"n": (0, 24)},
    lambda a: (enum_F(a["n"]), Q.carlitz_closed_form(a["n"]))))

register(Identity(
    "eq-box", "[n, k] from q-Pascal, the product, and box partitions",
    {"n": (0, 12), "k": (-1, 13)}, {"n": (0, 16), "k": (-1, 17)},
    lambda a: (Q.qbinom(a["n"], a["k"]), Q.qbinom_box(a["n"], a["k"]),
               Q.qbinom_product(a["n"], a["k"])),
    where=lambda a: a["k"] <= a["n"] + 1))

register(Identity(
    "eq-qrb", "rb over matchings with k doubletons",
    {"n": (0, 16), "k": (0, 8)}, {"n": (0, 22), "k": (0, 11)},
    lambda a: (Q.rb_slice_enumeration(a["n"], a["k"]), Q.carlitz_slice(a["n"], a["k"])),
    where=lambda a: 2 * a["k"] <= a["n"]))


def _t47_term(n, k):
    e = comb(n + k, 2) - n * k
    return (Q.qbinom(n, k) * F(n - k, n + k)).scale((n - k, k, 0, e))


def _t47_key(n):
    def key(pi):
        return sum(1 for b in pi.blocks[:n] if len(b) == 2)
    return key


register(Identity(
    "thm4.7", "F_(2n) by doubletons among the first n blocks",
    {"n": (0, 12)}, {"n": (0, 13)},
    lambda a: (enum_F(2 * a["n"]), poly_sum(_t47_term(a["n"], k) for k in range(a["n"] + 1))),
    refine=lambda a: [(f"k={k}", _omega_sum(cls), _t47_term(a["n"], k))
                      for k, cls in _group(_matchings(2 * a["n"]), _t47_key(a["n"])).items()]))


def _prod1q(lo, hi):
    return poly_prod(ONE + qpow(i) for i in range(lo, hi + 1))


def _t48_term(n, k):
    if k is None:
        return Q.Fq(n + 1)
    return (Q.Fq(k) * _prod1q(k + 3, n)).scale((0, 0, 0, k))


def _t48_refine(a):
    n = a["n"]
    def key(pi):
        return next((b[0] - 1 for b in pi.blocks if len(b) >= 3), None)
    classes = _group(C.layered_partitions(n + 1), key)
    return [(f"first big block at {k}", count_monomials((0, 0, 0, C.rb(p)) for p in cls),
             _t48_term(n, k)) for k, cls in classes.items()]


register(Identity(
    "thm4.8-product-split", "prod (1+q^i) by first block of size >= 3",
    {"n": (0, 14)}, {"n": (0, 18)},
    lambda a: (Q.a_product(a["n"] + 1),
               poly_sum([_t48_term(a["n"], None)] + [_t48_term(a["n"], k) for k in range(a["n"] - 1)])),
    refine=_t48_refine))

register(Identity(
    "shifted-weight", "shifted matchings weigh F_n(xq^k, yq^k, q)",
    {"n": (0, 14), "k": (0, 6)}, {"n": (0, 18), "k": (0, 10)},
    lambda a: (Q.shifted_enumeration(a["n"], a["k"]),
               Q.family_poly("F_xyq", a["n"], "recursion").subst_monomial("x", (1, 0, 0, a["k"]))
               .subst_monomial("y", (0, 1, 0, a["k"])))))


# -- section 5 ---------------------------------------------------------------

register(Identity(
    "thm5.1-cigler", "Cigler's Euler-Cassini analogue, direct and via the 2x2 minor",
    {"n": (1, 8), "m": (1, 8)}, {"n": (1, 12), "m": (1, 12)},
    lambda a: (lgv.cigler_sides(a["n"], a["m"])
               + lgv.cigler_from_minor(a["n"], a["m"]))))


def _sequences(a):
    """All (u, v) of length k with smallest vertex 0 and largest ``span``."""
    k, span = a["k"], a["span"]
    for u in combinations(range(span + 1), k):
        for v in combinations(range(span + 1), k):
            if min(u[0], v[0]) == 0 and max(u[-1], v[-1]) == span:
                yield {"u": u, "v": v}


register(Identity(
    "thm5.2-noncross-det", "minor = signed sum over all / noncrossing tuples",
    {"k": (1, 3), "span": (0, 8)}, {"k": (1, 3), "span": (0, 9)},
    lambda a: (lgv.minor_cofactor(a["u"], a["v"]), lgv.minor_tuples(a["u"], a["v"], "all"),
               lgv.minor_tuples(a["u"], a["v"], "noncrossing")),
    expand=_sequences))


def _ballot_violations(a):
    for s in _sequences(a):
        if set(s["u"]) & set(s["v"]):
            continue
        ok, c = lgv.ballot_check(s["u"], s["v"])
        if not ok:
            yield dict(s, c=c)


register(Identity(
    "lem5.3-ballot", "ballot violation forces a zero minor",
    {"k": (1, 3), "span": (0, 8)}, {"k": (1, 4), "span": (0, 9)},
    lambda a: (lgv.minor_cofactor(a["u"], a["v"]), ZERO),
    expand=_ballot_violations))


def _interleaved(a):
    k, span = a["k"], a["span"]
    for s in combinations(range(span + 1), 2 * k):
        if s[0] != 0 or s[-1] != span:
            continue
        u = [s[0], s[1]] + [s[3 + 2 * i] for i in range(k - 2)]
        v = [s[2 + 2 * i] for i in range(k - 2)] + [s[-2], s[-1]]
        yield {"u": tuple(u), "v": tuple(v)}


register(Identity(
    "thm5.4-minor", "closed form of interleaved minors",
    {"k": (2, 4), "span": (3, 10)}, {"k": (2, 5), "span": (3, 12)},
    lambda a: (lgv.closed_form_minor(a["u"], a["v"]).value(),
               lgv.minor_cofactor(a["u"], a["v"]), lgv.minor_by_reduction(a["u"], a["v"])),
    expand=_interleaved))

register(Identity(
    "cor5.5-euler-cassini", "q-Euler-Cassini as the (0,1) x (n, n+m) minor",
    {"n": (1, 8), "m": (1, 8)}, {"n": (1, 12), "m": (1, 12)},
    lambda a: lgv.euler_cassini(a["n"], a["m"])
    + (lgv.minor_by_reduction((0, 1), (a["n"], a["n"] + a["m"])),)))

register(Identity(
    "ext-identity", "F_n(xq^a, yq^a, q) = q^(C(n,2)+na) F^C_n(x, y/q^a, 1/q)",
    {"n": (0, 14), "a": (0, 5)}, {"n": (0, 20), "a": (0, 8)},
    lambda a: Q.extension_transform(a["n"], a["a"])))


# -- section 6 ---------------------------------------------------------------

def _one(P: LaurentPoly) -> LaurentPoly:
    return P.specialize({"x": 1, "y": 1})


def _pq_rec(a):
    n = a["n"]
    return (enum_Fpq(n),
            enum_Fpq(n - 1).shift(b=1).scale((1, 0, 0, n - 1))
            + enum_Fpq(n - 2).shift(b=2).scale((0, 1, 0, n - 2)))


register(Identity(
    "pq-rec", "F_n(x,y,p,q) recursion against (ls, rb) enumeration",
    {"n": (2, 14)}, {"n": (2, 20)}, _pq_rec))


def _pq1(a):
    n = a["n"]
    rhs = M(n + 2, 0, comb(n + 2, 2), comb(n + 2, 2)) + poly_sum(
        Fpq(n - j, j + 2).scale((j, 1, n * (j + 1) - comb(j, 2), j + comb(j, 2)))
        for j in range(n + 1))
    return enum_Fpq(n + 2), rhs


def _pq2(a):
    n = a["n"]
    return enum_Fpq(2 * n + 1), poly_sum(
        Fpq(2 * n - 2 * j, 2 * j + 1).scale((1, j, (2 * n - j) * (j + 1) - j, j * (j + 1)))
        for j in range(n + 1))


def _pq3(a):
    n = a["n"]
    return enum_Fpq(2 * n), M(0, n, n * (n - 1), n * (n - 1)) + poly_sum(
        Fpq(2 * n - 2 * j - 1, 2 * j + 1).scale((1, j, (2 * n - j - 1) * (j + 1) - j, j * (j + 1)))
        for j in range(n))


def _pq4(a):
    m, n = a["m"], a["n"]
    rhs = Fpq(m, 0, n) * Fpq(n, m)
    if m >= 1 and n >= 1:
        rhs = rhs + (Fpq(m - 1, 0, n + 1) * Fpq(n - 1, m + 1)).scale((0, 1, n - 1, m - 1))
    return enum_Fpq(m + n), rhs


def _pq5(a):
    m, n = a["m"], a["n"]
    lhs = Fpq(m + 1, 0, n) * Fpq(n + 1, m)
    rhs = enum_Fpq(m + n + 1).scale((1, 0, n, m)) + (
        Fpq(m - 1, 0, n + 2) * Fpq(n - 1, m + 2)).scale((0, 2, 2 * n - 1, 2 * m - 1))
    return lhs, rhs


def _pq6(a):
    n = a["n"]
    return enum_Fpq(n) * enum_Fpq(n + 1), poly_sum(
        (Fpq(n - j, j) * Fpq(n - j, j + 1)).scale((1, j, n * (j + 1) - j * (j + 3) // 2, j * j // 2))
        for j in range(n + 1))


def _pq7(a):
    n = a["n"]
    return enum_Fpq(n), poly_sum(
        Q.pqbinom(n - k, k).scale((n - 2 * k, k, comb(n, 2) - k * (n - k), comb(n, 2) - k * (n - k)))
        for k in range(n // 2 + 1))


def _pq8_rhs(n: int, corrected: bool) -> LaurentPoly:
    def term(k):
        e = comb(n + k, 2) - n * k
        ep = e + (n * (n - k) if corrected else 0)
        return (Q.pqbinom(n, k) * Fpq(n - k, n + k)).scale((n - k, k, ep, e))
    return poly_sum(term(k) for k in range(n + 1))


def _pq8(a):
    return enum_Fpq(2 * a["n"]), _pq8_rhs(a["n"], False)


def _pq8_corrected(a):
    return enum_Fpq(2 * a["n"]), _pq8_rhs(a["n"], True)


def _pq_prod(n, lo):
    return poly_prod(ONE + M(0, 0, n - i + 1, i) for i in range(lo, n + 1))


def _pq9(a):
    n = a["n"]
    rhs = _one(enum_Fpq(n + 1)) + poly_sum(
        (_one(Fpq(k, 0, n - k + 1)) * _pq_prod(n, k + 3)).scale((0, 0, 0, k))
        for k in range(n - 1))
    return _pq_prod(n, 1), rhs


PQ_TABLE = [
    ("pq-1", "first doubleton, p,q form", {"n": (0, 10)}, {"n": (0, 14)}, _pq1, None),
    ("pq-2", "odd first singleton, p,q form", {"n": (0, 10)}, {"n": (0, 11)}, _pq2, None),
    ("pq-3", "even first singleton, p,q form", {"n": (0, 10)}, {"n": (0, 11)}, _pq3, None),
    ("pq-4", "addition formula, p,q form", {"m": (0, 10), "n": (0, 10)},
     {"m": (0, 12), "n": (0, 12)}, _pq4, None),
    ("pq-5", "product split, p,q form", {"m": (1, 10), "n": (1, 10)},
     {"m": (1, 12), "n": (1, 12)}, _pq5, None),
    ("pq-6", "F_n F_(n+1) convolution, p,q form", {"n": (0, 10)}, {"n": (0, 12)}, _pq6, None),
    ("pq-7", "p,q-binomial sum", {"n": (0, 10)}, {"n": (0, 16)}, _pq7, None),
    ("pq-8", "F_(2n) p,q-binomial convolution as printed", {"n": (0, 10)}, {"n": (0, 11)},
     _pq8, None),
    ("pq-9", "prod (1 + p^(n-i+1) q^i) split", {"n": (0, 10)}, {"n": (0, 14)}, _pq9, None),
]

for _name, _tags, _quick, _full, _sides, _ in PQ_TABLE:
    register(Identity(_name, _tags, _quick, _full, _sides))

register(Identity(
    "pq-8-corrected", "F_(2n) p,q-binomial convolution with the p^(n(n-k)) factor",
    {"n": (0, 10)}, {"n": (0, 11)}, _pq8_corrected))


# p = 1 collapses each table entry onto its q-version; (lhs_q, rhs_q) builders
def _q_counterparts() -> dict:
    def t41(a):
        n = a["n"]
        return F(n + 2), poly_sum([_t41_term(n, None)] + [_t41_term(n, j) for j in range(n + 1)])

    def t42o(a):
        n = a["n"]
        return F(2 * n + 1), poly_sum(_t42_term(n, j, True) for j in range(n + 1))

    def t42e(a):
        n = a["n"]
        return F(2 * n), poly_sum([_t42_term(n, None, False)]
                                  + [_t42_term(n, j, False) for j in range(n)])

    def t43(a):
        return F(a["m"] + a["n"]), sum(_t43_terms(a["m"], a["n"]), ZERO)

    def t44(a):
        m, n = a["m"], a["n"]
        return (F(m + 1) * F(n + 1, m),
                F(m + n + 1).scale((1, 0, 0, m))
                + (F(m - 1) * F(n - 1, m + 2)).scale((0, 2, 0, 2 * m - 1)))

    def t45(a):
        n = a["n"]
        return F(n) * F(n + 1), poly_sum(_t45_term(n, j) for j in range(n + 1))

    def t46(a):
        return F(a["n"]), Q.carlitz_closed_form(a["n"])

    def t47(a):
        n = a["n"]
        return F(2 * n), poly_sum(_t47_term(n, k) for k in range(n + 1))

    def t48(a):
        n = a["n"]
        return Q.a_product(n + 1), poly_sum(
            [_t48_term(n, None)] + [_t48_term(n, k) for k in range(n - 1)])

    return {"pq-1": t41, "pq-2": t42o, "pq-3": t42e, "pq-4": t43, "pq-5": t44,
            "pq-6": t45, "pq-7": t46, "pq-8": t47, "pq-8-corrected": t47, "pq-9": t48}


Q_COUNTERPART = _q_counterparts()
Q_COUNTERPART_NAME = {"pq-1": "thm4.1", "pq-2": "thm4.2-odd", "pq-3": "thm4.2-even",
                      "pq-4": "thm4.3-addition", "pq-5": "thm4.4", "pq-6": "thm4.5-convolution",
                      "pq-7": "thm4.6-carlitz-binom", "pq-8": "thm4.7",
                      "pq-8-corrected": "thm4.7", "pq-9": "thm4.8-product-split"}
_PQ_KEYS = list(Q_COUNTERPART)


def _collapse_expand(a):
    name = _PQ_KEYS[a["entry"]]
    ident = REGISTRY[name]
    dom = {k: (lo, min(hi, a["bound"])) for k, (lo, hi) in ident.quick.items()}
    for sub in _assignments(dom, ident.where):
        yield dict(sub, entry=name)


def _collapse_sides(a):
    name = a["entry"]
    params = {k: v for k, v in a.items() if k != "entry"}
    pq_sides = REGISTRY[name].sides(params)
    q_sides = Q_COUNTERPART[name](params)
    return (tuple(s.specialize({"p": 1}) for s in pq_sides), q_sides)


register(Identity(
    "pq-p1-collapse", "p = 1 turns each p,q identity into its q-version",
    {"entry": (0, len(_PQ_KEYS) - 1), "bound": (6, 6)},
    {"entry": (0, len(_PQ_KEYS) - 1), "bound": (10, 10)},
    _collapse_sides, expand=_collapse_expand))


def names() -> list[str]:
    return list(REGISTRY)
