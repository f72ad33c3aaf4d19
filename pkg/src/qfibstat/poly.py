"""Exact sparse Laurent polynomials in x, y, p, q over the integers.

A polynomial is a dict mapping exponent tuples ``(ex, ey, ep, eq)`` to
nonzero Python ints.  Exponents of x and y are never negative; p and q may
carry negative exponents.  Instances are treated as immutable values.

>>> F3 = LaurentPoly.parse("q^3 + q^2 + q")
>>> str(F3.invert_q() * q**3)
'q^3 + q^2 + q'
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, NamedTuple

VARS = ("x", "y", "p", "q")
_VAR_INDEX = {v: i for i, v in enumerate(VARS)}


class Monomial(NamedTuple):
    ex: int = 0
    ey: int = 0
    ep: int = 0
    eq: int = 0

    def __mul__(self, other):  # type: ignore[override]
        return Monomial(*(a + b for a, b in zip(self, other)))

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(*(a * k for a in self))


ZERO_EXP = (0, 0, 0, 0)


class PolynomialError(ArithmeticError):
    pass


class NonExactDivision(PolynomialError):
    pass


class ParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


def _check_exp(m: tuple) -> None:
    if m[0] < 0 or m[1] < 0:
        raise PolynomialError(f"negative exponent of x or y in monomial {m}")


class LaurentPoly:
    """Canonical sparse polynomial; no stored coefficient is ever zero."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    m = tuple(m)
                    _check_exp(m)
                    clean[m] = int(c)
        self.terms: dict[tuple, int] = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({ZERO_EXP: int(c)} if c else {})

    @classmethod
    def monomial(cls, ex: int = 0, ey: int = 0, ep: int = 0, eq: int = 0,
                 coeff: int = 1) -> "LaurentPoly":
        return cls({(ex, ey, ep, eq): coeff})

    @classmethod
    def coerce(cls, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return cls.const(other)
        if isinstance(other, (Monomial, tuple)):
            return cls({tuple(other): 1})
        raise TypeError(f"cannot coerce {type(other).__name__} to LaurentPoly")

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, m) -> int:
        return self.terms.get(tuple(m), 0)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in canonical (descending lexicographic) order."""
        for m in sorted(self.terms, reverse=True):
            yield Monomial(*m), self.terms[m]

    def leading(self) -> tuple[tuple, int]:
        m = max(self.terms)
        return m, self.terms[m]

    def trailing(self) -> tuple[tuple, int]:
        m = min(self.terms)
        return m, self.terms[m]

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self, var: str) -> int:
        i = _VAR_INDEX[var]
        return max(m[i] for m in self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        if len(self.terms) < len(other.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.coerce(other) + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for (bx, by, bp, bq), bc in b.items():
            for (ax, ay, ap, aq), ac in a.items():
                m = (ax + bx, ay + by, ap + bp, aq + bq)
                out[m] = get(m, 0) + ac * bc
        return LaurentPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if self.is_monomial():
                (m, c), = self.terms.items()
                if c in (1, -1):
                    inv = tuple(-e for e in m)
                    _check_exp(inv)
                    return LaurentPoly._raw({inv: c}) ** (-k)
            raise PolynomialError("only unit monomials have negative powers")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, m: tuple, c: int = 1) -> "LaurentPoly":
        """Multiply by the single term ``c * m``."""
        if not c:
            return ZERO
        mx, my, mp, mq = m
        out = {}
        for (ex, ey, ep, eq), v in self.terms.items():
            out[(ex + mx, ey + my, ep + mp, eq + mq)] = v * c
        if mx < 0 or my < 0:
            for k in out:
                _check_exp(k)
        return LaurentPoly._raw(out)

    # -- substitutions -----------------------------------------------------

    def subst(self, mapping: Mapping[str, tuple]) -> "LaurentPoly":
        """Simultaneously replace each variable ``v`` by the monomial ``mapping[v]``."""
        rows = []
        for i, v in enumerate(VARS):
            r = mapping.get(v)
            if r is None:
                r = tuple(1 if j == i else 0 for j in range(4))
            rows.append(tuple(r))
        out: dict = {}
        for m, c in self.terms.items():
            new = tuple(sum(m[i] * rows[i][j] for i in range(4)) for j in range(4))
            _check_exp(new)
            out[new] = out.get(new, 0) + c
        return LaurentPoly._raw({m: c for m, c in out.items() if c})

    def subst_monomial(self, var: str, replacement: tuple) -> "LaurentPoly":
        if var not in _VAR_INDEX:
            raise ValueError(f"unknown variable {var!r}")
        if var in ("x", "y") and replacement[_VAR_INDEX[var]] < 0:
            raise PolynomialError(f"{var} must map to a nonnegative power of itself")
        return self.subst({var: replacement})

    def shift(self, a: int = 0, b: int = 0) -> "LaurentPoly":
        """x -> x q^a p^b and y -> y q^a p^b."""
        if a == 0 and b == 0:
            return self
        out = {}
        for (ex, ey, ep, eq), c in self.terms.items():
            t = ex + ey
            out[(ex, ey, ep + b * t, eq + a * t)] = c
        return LaurentPoly._raw(out)

    def invert_q(self) -> "LaurentPoly":
        return LaurentPoly._raw({(m[0], m[1], m[2], -m[3]): c for m, c in self.terms.items()})

    def specialize(self, assignments: Mapping[str, int]) -> "LaurentPoly":
        idx = [(_VAR_INDEX[v], int(val)) for v, val in assignments.items()]
        out: dict = {}
        for m, c in self.terms.items():
            new = list(m)
            for i, val in idx:
                e = m[i]
                if e < 0 and val == 0:
                    raise ZeroDivisionError(f"{VARS[i]}=0 in a term with {VARS[i]}^{e}")
                if e >= 0:
                    c *= val ** e
                else:
                    if abs(val) != 1:
                        raise PolynomialError(
                            f"{VARS[i]}={val} under a negative power is not integral")
                    c *= val ** (-e)
                new[i] = 0
            t = tuple(new)
            out[t] = out.get(t, 0) + c
        return LaurentPoly._raw({m: c for m, c in out.items() if c})

    def evaluate(self, **values: int) -> int:
        """Integer value; unspecified variables default to 1."""
        r = self.specialize({v: values.get(v, 1) for v in VARS})
        return r.terms.get(ZERO_EXP, 0)

    # -- division ----------------------------------------------------------

    def exact_div(self, other) -> "LaurentPoly":
        """Quotient ``c`` with ``other * c == self``; raises on a remainder.

        Leading-term elimination in descending lexicographic order.  Since
        the order is compatible with multiplication, the trailing monomial of
        the quotient is fixed up front and bounds the loop.
        """
        b = LaurentPoly.coerce(other)
        if not b:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return ZERO
        lb, lc = b.leading()
        low = tuple(x - y for x, y in zip(self.trailing()[0], b.trailing()[0]))
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            lm = max(rem)
            c = rem[lm]
            qm = tuple(x - y for x, y in zip(lm, lb))
            if qm < low or qm[0] < 0 or qm[1] < 0 or c % lc:
                raise NonExactDivision(f"{self} is not divisible by {b}")
            qc = c // lc
            quot[qm] = qc
            for m, v in b.terms.items():
                t = (m[0] + qm[0], m[1] + qm[1], m[2] + qm[2], m[3] + qm[3])
                s = rem.get(t, 0) - v * qc
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        return LaurentPoly._raw(quot)

    def __floordiv__(self, other) -> "LaurentPoly":
        return self.exact_div(other)

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        return parse_poly(text)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({ZERO_EXP: 1})
x = LaurentPoly._raw({(1, 0, 0, 0): 1})
y = LaurentPoly._raw({(0, 1, 0, 0): 1})
p = LaurentPoly._raw({(0, 0, 1, 0): 1})
q = LaurentPoly._raw({(0, 0, 0, 1): 1})


def qpow(e: int) -> LaurentPoly:
    return LaurentPoly._raw({(0, 0, 0, e): 1})


def ppow(e: int) -> LaurentPoly:
    return LaurentPoly._raw({(0, 0, e, 0): 1})


def poly_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out: dict = {}
    for P in polys:
        for m, c in P.terms.items():
            out[m] = out.get(m, 0) + c
    return LaurentPoly._raw({m: c for m, c in out.items() if c})


def poly_prod(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    r = ONE
    for P in polys:
        r = r * P
    return r


def count_monomials(monos: Iterable[tuple]) -> LaurentPoly:
    """Sum of the given exponent tuples, each with coefficient 1."""
    out: dict = {}
    for m in monos:
        out[m] = out.get(m, 0) + 1
    for m in out:
        _check_exp(m)
    return LaurentPoly._raw(out)


def arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


# -- canonical text form ---------------------------------------------------

def _format_mono(m: tuple) -> str:
    parts = []
    for v, e in zip(VARS, m):
        if e == 0:
            continue
        parts.append(v if e == 1 else f"{v}^{e}")
    return "*".join(parts)


def format_poly(P: LaurentPoly) -> str:
    if not P.terms:
        return "0"
    out = []
    for i, m in enumerate(sorted(P.terms, reverse=True)):
        c = P.terms[m]
        body = _format_mono(m)
        mag = abs(c)
        if not body:
            term = str(mag)
        elif mag == 1:
            term = body
        else:
            term = f"{mag}*{body}"
        if i == 0:
            out.append(("-" if c < 0 else "") + term)
        else:
            out.append((" - " if c < 0 else " + ") + term)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[xypq])|(?P<op>[-+*^()]))")


def parse_poly(text: str) -> LaurentPoly:
    """Parse sums of signed terms ``[coeff][*]var[^exp][*var[^exp]...]``."""
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    if not toks:
        raise ParseError("empty input", text, 0)

    i = 0
    terms: dict = {}

    def peek():
        return toks[i] if i < len(toks) else (None, None, len(text))

    first = True
    while i < len(toks):
        sign = 1
        kind, val, at = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-'", text, at)
        first = False
        coeff = 1
        exps = [0, 0, 0, 0]
        seen_factor = False
        kind, val, at = peek()
        if kind == "num":
            coeff = int(val)
            i += 1
            seen_factor = True
            kind, val, at = peek()
            if kind == "op" and val == "*":
                i += 1
                kind, val, at = peek()
                if kind != "var":
                    raise ParseError("expected variable after '*'", text, at)
        while True:
            kind, val, at = peek()
            if kind != "var":
                break
            i += 1
            seen_factor = True
            e = 1
            k2, v2, a2 = peek()
            if k2 == "op" and v2 == "^":
                i += 1
                esign = 1
                k3, v3, a3 = peek()
                if k3 == "op" and v3 == "-":
                    esign = -1
                    i += 1
                    k3, v3, a3 = peek()
                if k3 != "num":
                    raise ParseError("expected exponent", text, a3)
                e = esign * int(v3)
                i += 1
            exps[_VAR_INDEX[val]] += e
            k2, v2, a2 = peek()
            if k2 == "op" and v2 == "*":
                i += 1
                k3, v3, a3 = peek()
                if k3 != "var":
                    raise ParseError("expected variable after '*'", text, a3)
                continue
            break
        if not seen_factor:
            raise ParseError("expected a term", text, peek()[2])
        mono = tuple(exps)
        if mono[0] < 0 or mono[1] < 0:
            raise ParseError("negative exponent on x or y", text, at)
        terms[mono] = terms.get(mono, 0) + sign * coeff
    return LaurentPoly._raw({m: c for m, c in terms.items() if c})
