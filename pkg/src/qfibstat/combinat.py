"""Set partitions, pattern avoidance, and the ls/rb statistics.

Also holds the small combinatorial objects the q-Fibonacci families are
built from: integer partitions, binary sequences without consecutive ones,
and Morse (dot/dash) sequences, with the bijections between them and
layered partitions.
"""

from __future__ import annotations

import os
from bisect import bisect_left, insort
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .poly import LaurentPoly

DEFAULT_CEILING_GENERIC = 12
DEFAULT_CEILING_LAYERED = 25


class CeilingExceeded(ValueError):
    pass


class InvalidPartition(ValueError):
    pass


def ceiling(default: int) -> int:
    """Enumeration ceiling, overridable through ``QFIB_CEILING``."""
    env = os.environ.get("QFIB_CEILING")
    if env:
        return int(env)
    return default


class SetPartition:
    """A partition of [n]; blocks are sorted tuples listed by increasing minimum."""

    __slots__ = ("n", "blocks")

    def __init__(self, blocks: Iterable[Iterable[int]], n: int | None = None):
        bl = [tuple(sorted(b)) for b in blocks]
        if any(not b for b in bl):
            raise InvalidPartition("empty block")
        bl.sort(key=lambda b: b[0])
        elems = [e for b in bl for e in b]
        if n is None:
            n = len(elems)
        if sorted(elems) != list(range(1, n + 1)):
            raise InvalidPartition(f"blocks {bl} do not partition [{n}]")
        self.n = n
        self.blocks = tuple(bl)

    @classmethod
    def _trusted(cls, n: int, blocks: tuple) -> "SetPartition":
        obj = cls.__new__(cls)
        obj.n = n
        obj.blocks = blocks
        return obj

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> "SetPartition":
        blocks: list[list[int]] = []
        for i, r in enumerate(rgs, 1):
            if r == len(blocks):
                blocks.append([])
            blocks[r].append(i)
        return cls._trusted(len(rgs), tuple(tuple(b) for b in blocks))

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "SetPartition":
        """Layered partition with the given block sizes."""
        blocks = []
        start = 1
        for s in sizes:
            if s < 1:
                raise InvalidPartition("block sizes must be positive")
            blocks.append(tuple(range(start, start + s)))
            start += s
        return cls._trusted(start - 1, tuple(blocks))

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Read ``13/2`` (digits, n <= 9) or ``1,3/2`` (comma-separated) form."""
        text = text.strip()
        if text in ("", "0", "∅", "{}"):
            return cls._trusted(0, ())
        blocks = []
        for chunk in text.split("/"):
            chunk = chunk.strip()
            if not chunk:
                raise InvalidPartition(f"empty block in {text!r}")
            if "," in chunk:
                blocks.append([int(t) for t in chunk.split(",")])
            elif chunk.isdigit():
                blocks.append([int(ch) for ch in chunk])
            else:
                raise InvalidPartition(f"bad block {chunk!r}")
        if "," not in text and any(e == 0 for b in blocks for e in b):
            raise InvalidPartition("element 0 in digit form; use comma form")
        return cls(blocks)

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> "SetPartition":
        return cls(data)

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]

    def __str__(self) -> str:
        if not self.blocks:
            return "∅"
        if self.n <= 9:
            return "/".join("".join(map(str, b)) for b in self.blocks)
        return "/".join(",".join(map(str, b)) for b in self.blocks)

    def __repr__(self) -> str:
        return f"SetPartition({str(self)!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash((self.n, self.blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def length(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def rgs(self) -> tuple[int, ...]:
        out = [0] * self.n
        for i, b in enumerate(self.blocks):
            for e in b:
                out[e - 1] = i
        return tuple(out)


def P(text: str) -> SetPartition:
    return SetPartition.parse(text)


def is_layered(pi: SetPartition) -> bool:
    nxt = 1
    for b in pi.blocks:
        if b != tuple(range(nxt, nxt + len(b))):
            return False
        nxt += len(b)
    return True


def is_matching(pi: SetPartition) -> bool:
    return all(len(b) <= 2 for b in pi.blocks)


def standardize(blocks: Iterable[Iterable[int]]) -> SetPartition:
    bl = [tuple(sorted(b)) for b in blocks]
    rank = {e: i for i, e in enumerate(sorted(e for b in bl for e in b), 1)}
    return SetPartition([[rank[e] for e in b] for b in bl])


def is_copy(sigma: SetPartition, sub: Iterable[Iterable[int]], pi: SetPartition) -> bool:
    """True if ``sub`` sits inside distinct blocks of sigma and standardizes to pi."""
    sub = [tuple(b) for b in sub]
    where = {e: i for i, b in enumerate(sigma.blocks) for e in b}
    used = set()
    for b in sub:
        owners = {where.get(e) for e in b}
        if len(owners) != 1 or None in owners:
            return False
        (o,) = owners
        if o in used:
            return False
        used.add(o)
    return standardize(sub) == pi


def contains_pattern(sigma: SetPartition, pi: SetPartition):
    """Return a copy of ``pi`` inside ``sigma`` as a tuple of blocks, or None.

    Backtracks over order-preserving injections [m] -> [n]; two elements of
    pi share a block exactly when their images share a block of sigma.
    """
    m, n = pi.n, sigma.n
    if m == 0:
        return ()
    if m > n:
        return None
    where_s = [0] * (n + 1)
    for i, b in enumerate(sigma.blocks):
        for e in b:
            where_s[e] = i
    where_p = [0] * (m + 1)
    for i, b in enumerate(pi.blocks):
        for e in b:
            where_p[e] = i
    image = [0] * (m + 1)
    bmap: dict[int, int] = {}
    used: set[int] = set()

    def search(i: int, lo: int) -> bool:
        if i > m:
            return True
        pb = where_p[i]
        target = bmap.get(pb)
        for cand in range(lo, n - (m - i) + 1):
            sb = where_s[cand]
            if target is not None:
                if sb != target:
                    continue
                image[i] = cand
                if search(i + 1, cand + 1):
                    return True
            else:
                if sb in used:
                    continue
                bmap[pb] = sb
                used.add(sb)
                image[i] = cand
                if search(i + 1, cand + 1):
                    return True
                del bmap[pb]
                used.discard(sb)
        return False

    if not search(1, 1):
        return None
    return tuple(tuple(image[e] for e in b) for b in pi.blocks)


def avoids(sigma: SetPartition, patterns: Iterable[SetPartition]) -> bool:
    return all(contains_pattern(sigma, pat) is None for pat in patterns)


# -- enumeration -------------------------------------------------------------

def set_partitions(n: int) -> Iterator[SetPartition]:
    """All partitions of [n] in restricted-growth-string order."""
    if n == 0:
        yield SetPartition._trusted(0, ())
        return
    rgs = [0] * n

    def rec(i: int, mx: int):
        if i == n:
            yield SetPartition.from_rgs(rgs)
            return
        for v in range(mx + 2):
            rgs[i] = v
            yield from rec(i + 1, max(mx, v))

    rgs[0] = 0
    yield from rec(1, 0)


def compositions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Compositions of n, first part largest first (matches RGS order of layered partitions)."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in compositions(n - first, max_part):
            yield (first,) + rest


def layered_partitions(n: int, max_block: int | None = None) -> Iterator[SetPartition]:
    """Layered partitions of [n] in the order of :func:`compositions`."""
    if n == 0:
        yield SetPartition._trusted(0, ())
        return
    top = n if max_block is None else max_block
    make = SetPartition._trusted
    run = {(i, k): tuple(range(i, i + k)) for i in range(1, n + 1) for k in range(1, n - i + 2)}
    prefix: list[tuple[int, ...]] = []
    # sizes[d] is the size of block d; iterative depth-first walk, largest block first
    sizes: list[int] = []
    start = 1
    size = min(top, n)
    while True:
        prefix.append(run[start, size])
        sizes.append(size)
        start += size
        if start > n:
            yield make(n, tuple(prefix))
            # backtrack to the deepest block that can shrink
            while sizes:
                size = sizes.pop()
                prefix.pop()
                start -= size
                if size > 1:
                    size -= 1
                    break
            else:
                return
        else:
            size = min(top, n - start + 1)


def layered_matchings(n: int) -> Iterator[SetPartition]:
    return layered_partitions(n, 2)


PATTERN_132 = SetPartition._trusted(3, ((1, 3), (2,)))
PATTERN_123 = SetPartition._trusted(3, ((1, 2, 3),))


def enumerate_avoiders(n: int, patterns: Iterable[SetPartition] = (),
                       limit: int | None = None) -> list[SetPartition]:
    """Partitions of [n] avoiding every pattern, in RGS order.

    The classes {13/2} and {13/2, 123} use direct generators for layered
    partitions and layered matchings; everything else filters the generic
    enumerator.
    """
    pats = frozenset(patterns)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if pats == {PATTERN_132}:
        lim = limit if limit is not None else ceiling(DEFAULT_CEILING_LAYERED)
        if n > lim:
            raise CeilingExceeded(f"n={n} exceeds ceiling {lim}")
        return list(layered_partitions(n))
    if pats == {PATTERN_132, PATTERN_123}:
        lim = limit if limit is not None else ceiling(DEFAULT_CEILING_LAYERED)
        if n > lim:
            raise CeilingExceeded(f"n={n} exceeds ceiling {lim}")
        return list(layered_matchings(n))
    lim = limit if limit is not None else ceiling(DEFAULT_CEILING_GENERIC)
    if n > lim:
        raise CeilingExceeded(f"n={n} exceeds ceiling {lim}")
    return [s for s in set_partitions(n) if avoids(s, pats)]


# -- statistics --------------------------------------------------------------

class Stats(NamedTuple):
    ls: int
    rb: int
    singletons: int
    doubletons: int
    length: int


def ls(pi: SetPartition) -> int:
    """Number of pairs (b, B_j) with b in a later block than B_j and min B_j < b."""
    mins: list[int] = []
    total = 0
    for blk in pi.blocks:
        for b in blk:
            total += bisect_left(mins, b)
        insort(mins, blk[0])
    return total


def rb(pi: SetPartition) -> int:
    """Number of pairs (b, B_j) with b in an earlier block than B_j and max B_j > b."""
    earlier: list[int] = []
    total = 0
    for blk in pi.blocks:
        total += bisect_left(earlier, blk[-1])
        for b in blk:
            insort(earlier, b)
    return total


def rb_contributions(pi: SetPartition) -> list[int]:
    """Per-block count of right bigger pairs (b, B_j) with B_j the given block."""
    blocks = pi.blocks
    out = []
    for j, bj in enumerate(blocks):
        top = bj[-1]
        out.append(sum(1 for bi in blocks[:j] for b in bi if b < top))
    return out


def stats(pi: SetPartition) -> Stats:
    r = rb(pi)
    if is_layered(pi):
        assert r == sum(b[0] - 1 for b in pi.blocks[1:]), pi
    sizes = pi.block_sizes()
    return Stats(ls(pi), r, sizes.count(1), sizes.count(2), len(sizes))


def _require_layered(pi: SetPartition) -> None:
    if not is_layered(pi):
        raise InvalidPartition(f"{pi} is not layered")


def _require_layered_matching(pi: SetPartition) -> None:
    if not (is_layered(pi) and is_matching(pi)):
        raise InvalidPartition(f"{pi} is not a layered matching")


def complement(pi: SetPartition) -> SetPartition:
    _require_layered(pi)
    n = pi.n
    blocks = tuple(tuple(sorted(n - b + 1 for b in blk)) for blk in reversed(pi.blocks))
    return SetPartition._trusted(n, blocks)


# -- integer partitions ------------------------------------------------------

class IntegerPartition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        if any(a < b for a, b in zip(parts, parts[1:])) or any(x < 1 for x in parts):
            raise ValueError(f"not an integer partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"IntegerPartition({tuple(self)})"


def distinct_parts(max_part: int) -> Iterator[IntegerPartition]:
    """Partitions into distinct parts each at most ``max_part``."""
    def rec(top: int):
        yield ()
        for a in range(top, 0, -1):
            for rest in rec(a - 1):
                yield (a,) + rest
    for t in rec(max_part):
        yield IntegerPartition(t)


def box_partitions(k: int, l: int) -> Iterator[IntegerPartition]:
    """Partitions with at most ``l`` parts, each at most ``k``."""
    def rec(top: int, slots: int):
        yield ()
        if slots == 0:
            return
        for a in range(top, 0, -1):
            for rest in rec(a, slots - 1):
                yield (a,) + rest
    for t in rec(k, l):
        yield IntegerPartition(t)


def enumerate_integer_partitions(kind: str, *args: int) -> list[IntegerPartition]:
    if kind == "distinct_max":
        (m,) = args
        return list(distinct_parts(m))
    if kind == "box":
        k, l = args
        return list(box_partitions(k, l))
    raise ValueError(f"unknown kind {kind!r}")


def phi(pi: SetPartition) -> IntegerPartition:
    """Partial sums of the first k-1 block sizes, as a distinct-part partition."""
    _require_layered(pi)
    sums = []
    acc = 0
    for b in pi.blocks[:-1]:
        acc += len(b)
        sums.append(acc)
    return IntegerPartition(reversed(sums))


def phi_inv(lam: Iterable[int], n: int) -> SetPartition:
    parts = sorted(lam)
    if len(set(parts)) != len(parts) or (parts and (parts[0] < 1 or parts[-1] > n - 1)):
        raise ValueError(f"{tuple(lam)} is not in D_{n - 1}")
    if n == 0:
        if parts:
            raise ValueError("nonempty partition for n = 0")
        return SetPartition._trusted(0, ())
    bounds = [0] + parts + [n]
    return SetPartition.from_sizes([b - a for a, b in zip(bounds, bounds[1:])])


# -- binary sequences --------------------------------------------------------

class BinarySeq(tuple):
    """0/1 tuple with no two consecutive ones."""

    def __new__(cls, bits: Iterable[int] | str = ()):
        if isinstance(bits, str):
            bits = [int(ch) for ch in bits]
        bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("bits must be 0 or 1")
        if any(a == b == 1 for a, b in zip(bits, bits[1:])):
            raise ValueError(f"consecutive ones in {bits}")
        return super().__new__(cls, bits)

    def __str__(self) -> str:
        return "".join(map(str, self))


def rho(beta: Sequence[int]) -> int:
    return sum(i * b for i, b in enumerate(beta, 1))


def binary_sequences(n: int) -> Iterator[BinarySeq]:
    """BS_n in lexicographic order; BS_0 holds only the empty word."""
    def rec(k: int, prev: int):
        if k == 0:
            yield ()
            return
        for rest in rec(k - 1, 0):
            yield (0,) + rest
        if prev == 0:
            for rest in rec(k - 1, 1):
                yield (1,) + rest
    for t in rec(n, 0):
        yield BinarySeq(t)


def to_binary_seq(pi: SetPartition) -> BinarySeq:
    _require_layered_matching(pi)
    if pi.n == 0:
        raise InvalidPartition("binary sequence needs n >= 1")
    bits = [0] * (pi.n - 1)
    for b in pi.blocks:
        if len(b) == 2:
            bits[b[0] - 1] = 1
    return BinarySeq(bits)


def from_binary_seq(beta: Sequence[int]) -> SetPartition:
    beta = BinarySeq(beta)
    n = len(beta) + 1
    sizes = []
    i = 1
    while i <= n:
        if i <= len(beta) and beta[i - 1] == 1:
            sizes.append(2)
            i += 2
        else:
            sizes.append(1)
            i += 1
    return SetPartition.from_sizes(sizes)


# -- Morse sequences ---------------------------------------------------------

DOT = "."
DASH = "-"


class MorseSeq(tuple):
    """Tuple over {'.', '-'}; a dot has length 1, a dash length 2."""

    def __new__(cls, symbols: Iterable[str] | str = ()):
        symbols = tuple(
            DOT if s in (".", "•", "*") else DASH if s in ("-", "−", "—") else s
            for s in symbols)
        if any(s not in (DOT, DASH) for s in symbols):
            raise ValueError(f"bad Morse symbols {symbols}")
        return super().__new__(cls, symbols)

    @property
    def length(self) -> int:
        return self.count(DOT) + 2 * self.count(DASH)

    def __str__(self) -> str:
        return "".join(self)


def morse_sequences(n: int) -> Iterator[MorseSeq]:
    def rec(k: int):
        if k == 0:
            yield ()
            return
        for rest in rec(k - 1):
            yield (DOT,) + rest
        if k >= 2:
            for rest in rec(k - 2):
                yield (DASH,) + rest
    for t in rec(n):
        yield MorseSeq(t)


def morse_weight(nu: Sequence[str]) -> LaurentPoly:
    """Dots weigh x; a dash after a prefix of length a weighs y q^(a+1)."""
    ex = ey = eq = 0
    a = 0
    for s in MorseSeq(nu):
        if s == DOT:
            ex += 1
            a += 1
        else:
            ey += 1
            eq += a + 1
            a += 2
    return LaurentPoly._raw({(ex, ey, 0, eq): 1})


def to_morse(pi: SetPartition) -> MorseSeq:
    _require_layered_matching(pi)
    return MorseSeq(DOT if len(b) == 1 else DASH for b in pi.blocks)


def from_morse(nu: Sequence[str]) -> SetPartition:
    return SetPartition.from_sizes([1 if s == DOT else 2 for s in MorseSeq(nu)])


# -- weights -----------------------------------------------------------------

def omega_exponents(pi: SetPartition, mode: str = "xyq") -> tuple[int, int, int, int]:
    ex = ey = eq = 0
    for b in pi.blocks:
        if len(b) == 1:
            ex += 1
        elif len(b) == 2:
            ey += 1
        else:
            raise InvalidPartition(f"block {b} of size {len(b)} in a matching weight")
        eq += b[0] - 1
    if mode == "xyq":
        return (ex, ey, 0, eq)
    if mode == "xypq":
        return (ex, ey, ls(pi), rb(pi))
    raise ValueError(f"unknown mode {mode!r}")


def omega(pi: SetPartition, mode: str = "xyq") -> LaurentPoly:
    """Monomial weight of a matching: x or y times q^(min B - 1) per block.

    ``mode='xypq'`` gives x^s y^d p^ls q^rb instead.
    """
    return LaurentPoly._raw({omega_exponents(pi, mode): 1})


@dataclass(frozen=True)
class ShiftedPartition:
    """A partition of [n] preceded by ``k`` blank positions."""

    k: int
    base: SetPartition

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("shift must be nonnegative")

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(e + self.k for e in b) for b in self.base.blocks)

    def omega(self) -> LaurentPoly:
        ex, ey, ep, eq = omega_exponents(self.base)
        return LaurentPoly._raw({(ex, ey, ep, eq + self.k * (ex + ey)): 1})

    def rb(self) -> int:
        # blanks precede every block, so each contribution grows by k
        return sum(c + self.k for c in rb_contributions(self.base))

    def __str__(self) -> str:
        blanks = " ".join("_" * self.k) if self.k else ""
        width = self.base.n + self.k
        sep = "," if width > 9 else ""
        body = "/".join(sep.join(map(str, b)) for b in self.blocks)
        if not blanks:
            return body or "∅"
        return f"{blanks} /{body}" if body else blanks


def shift(pi: SetPartition, k: int) -> ShiftedPartition:
    return ShiftedPartition(k, pi)


def block_count(pi: SetPartition, size: int) -> int:
    return sum(1 for b in pi.blocks if len(b) == size)
