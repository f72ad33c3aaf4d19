from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfibstat import combinat as C
from qfibstat.combinat import P
from qfibstat.poly import LaurentPoly, count_monomials
from qfibstat.qfib import fib


# -- independent oracles -----------------------------------------------------

def ls_pairs(pi):
    """Count (b, B_j) with b in B_i, j < i and min B_j < b, straight from the definition."""
    bl = pi.blocks
    return sum(1 for i, bi in enumerate(bl) for b in bi for j in range(i) if bl[j][0] < b)


def rb_pairs(pi):
    bl = pi.blocks
    return sum(1 for i, bi in enumerate(bl) for b in bi
               for j in range(i + 1, len(bl)) if bl[j][-1] > b)


def contains_by_subsets(sigma, pi):
    """Try every m-subset of [n]: restrict sigma to it and standardize."""
    elems = range(1, sigma.n + 1)
    for sub in combinations(elems, pi.n):
        s = set(sub)
        restricted = [[e for e in b if e in s] for b in sigma.blocks]
        restricted = [b for b in restricted if b]
        if C.standardize(restricted) == pi:
            return True
    return False


def all_partitions_by_rgs(n):
    """Restricted growth strings built without the library's recursion."""
    if n == 0:
        yield ()
        return
    for rgs in all_partitions_by_rgs(n - 1):
        top = max(rgs, default=-1)
        for v in range(top + 2):
            yield rgs + (v,)


# -- SetPartition ------------------------------------------------------------

def test_parse_forms():
    assert P("137/25/4/6").blocks == ((1, 3, 7), (2, 5), (4,), (6,))
    assert P("1,10/2,3,4,5,6,7,8,9").n == 10
    assert str(P("1,10/2,3,4,5,6,7,8,9")) == "1,10/2,3,4,5,6,7,8,9"
    assert P("") == P("∅") == P("0")
    assert P("25/1/34").blocks == ((1,), (2, 5), (3, 4))


@pytest.mark.parametrize("bad", ["12/2", "13", "1//2", "1a/2", "0/1"])
def test_parse_rejects(bad):
    with pytest.raises(C.InvalidPartition):
        P(bad)


def test_json_round_trip():
    pi = P("137/25/4/6")
    assert C.SetPartition.from_json(pi.to_json()) == pi
    assert pi.to_json() == [[1, 3, 7], [2, 5], [4], [6]]


def test_rgs():
    assert P("13/2").rgs() == (0, 1, 0)
    assert C.SetPartition.from_rgs((0, 1, 0)) == P("13/2")


# -- containment -------------------------------------------------------------

def test_containment_examples():
    sigma = P("137/25/4/6")
    w = C.contains_pattern(sigma, P("12/3"))
    assert w is not None
    assert C.is_copy(sigma, w, P("12/3"))
    assert C.is_copy(sigma, [(2, 5), (6,)], P("12/3"))
    assert C.contains_pattern(sigma, P("12/34")) is None
    assert C.contains_pattern(sigma, P("1")) is not None


def test_is_copy_rejects_split_blocks():
    sigma = P("137/25/4/6")
    assert not C.is_copy(sigma, [(2, 3), (6,)], P("12/3"))
    assert not C.is_copy(sigma, [(2,), (5,)], P("1/2"))


@pytest.mark.parametrize("n", range(0, 8))
def test_containment_matches_subset_oracle(n):
    pats = [P("13/2"), P("123"), P("12/3"), P("1/2/3")]
    for sigma in C.set_partitions(n):
        for pat in pats:
            got = C.contains_pattern(sigma, pat)
            assert (got is not None) == contains_by_subsets(sigma, pat), (sigma, pat)
            if got is not None:
                assert C.is_copy(sigma, got, pat)


@pytest.mark.parametrize("n", range(0, 10))
def test_avoidance_characterizations(n):
    for sigma in C.set_partitions(n):
        assert C.avoids(sigma, [C.PATTERN_132]) == C.is_layered(sigma)
        assert C.avoids(sigma, [C.PATTERN_123]) == C.is_matching(sigma)


# -- enumeration -------------------------------------------------------------

@pytest.mark.parametrize("n", range(0, 9))
def test_generic_enumerator_matches_rgs_oracle(n):
    got = [pi.rgs() for pi in C.set_partitions(n)]
    assert got == sorted(all_partitions_by_rgs(n))


@pytest.mark.parametrize("n", range(0, 11))
def test_special_generators_agree_with_filtering(n):
    generic = list(C.set_partitions(n))
    for pats in ([C.PATTERN_132], [C.PATTERN_132, C.PATTERN_123]):
        filtered = [s for s in generic if C.avoids(s, pats)]
        assert C.enumerate_avoiders(n, pats) == filtered


def test_enumeration_examples():
    assert len(C.enumerate_avoiders(4, [P("13/2")])) == 8
    assert len(C.enumerate_avoiders(5, [P("13/2"), P("123")])) == 8
    assert C.enumerate_avoiders(0, []) == [C.SetPartition([])]


def test_ceiling(monkeypatch):
    with pytest.raises(C.CeilingExceeded):
        C.enumerate_avoiders(13, [])
    with pytest.raises(C.CeilingExceeded):
        C.enumerate_avoiders(26, [C.PATTERN_132])
    monkeypatch.setenv("QFIB_CEILING", "3")
    with pytest.raises(C.CeilingExceeded):
        C.enumerate_avoiders(4, [C.PATTERN_132])


def test_compositions_order():
    assert list(C.compositions(3)) == [(3,), (2, 1), (1, 2), (1, 1, 1)]
    assert list(C.compositions(4, 2)) == [(2, 2), (2, 1, 1), (1, 2, 1), (1, 1, 2), (1, 1, 1, 1)]


@pytest.mark.parametrize("n", range(1, 16))
def test_counts(n):
    assert sum(1 for _ in C.layered_partitions(n)) == 2 ** (n - 1)
    assert sum(1 for _ in C.layered_matchings(n)) == fib(n)


# -- statistics --------------------------------------------------------------

def test_stats_examples():
    for n in range(0, 8):
        assert C.stats(C.SetPartition([[i] for i in range(1, n + 1)])).rb == comb(n, 2)
        single = C.SetPartition([range(1, n + 1)] if n else [])
        assert (C.ls(single), C.rb(single)) == (0, 0)
    s = C.stats(P("12/3"))
    assert (s.ls, s.rb, s.singletons, s.doubletons, s.length) == (1, 2, 1, 1, 2)


@pytest.mark.parametrize("n", range(0, 8))
def test_ls_rb_match_pair_oracle(n):
    for pi in C.set_partitions(n):
        assert C.ls(pi) == ls_pairs(pi)
        assert C.rb(pi) == rb_pairs(pi)
        assert sum(C.rb_contributions(pi)) == rb_pairs(pi)


@pytest.mark.parametrize("n", range(0, 15))
def test_equidistribution(n):
    for gen in (C.layered_partitions, C.layered_matchings):
        parts = list(gen(n))
        assert (count_monomials((0, 0, 0, C.ls(p)) for p in parts)
                == count_monomials((0, 0, 0, C.rb(p)) for p in parts))


# -- complement --------------------------------------------------------------

def test_complement_examples():
    assert C.complement(P("12/3")) == P("1/23")
    assert C.complement(P("1/2/3")) == P("1/2/3")
    assert C.complement(P("123")) == P("123")
    with pytest.raises(C.InvalidPartition):
        C.complement(P("13/2"))


@pytest.mark.parametrize("n", range(0, 12))
def test_complement_swaps_statistics(n):
    for pi in C.layered_partitions(n):
        c = C.complement(pi)
        assert C.is_layered(c)
        assert C.complement(c) == pi
        assert (C.ls(c), C.rb(c)) == (C.rb(pi), C.ls(pi))
        assert sorted(c.block_sizes()) == sorted(pi.block_sizes())


# -- phi ---------------------------------------------------------------------

def test_phi_examples():
    assert C.phi(P("12/3")) == (2,)
    assert C.phi(P("1/2/3")) == (2, 1)
    assert C.phi(P("1/2/3")).size == 3 == C.rb(P("1/2/3"))
    assert C.phi(P("1234")) == ()


@pytest.mark.parametrize("n", range(1, 13))
def test_phi_bijection(n):
    images = set()
    for pi in C.layered_partitions(n):
        lam = C.phi(pi)
        assert lam.size == C.rb(pi)
        assert C.phi_inv(lam, n) == pi
        images.add(lam)
    assert images == set(C.distinct_parts(n - 1))


def test_phi_inv_rejects():
    with pytest.raises(ValueError):
        C.phi_inv((2, 2), 4)
    with pytest.raises(ValueError):
        C.phi_inv((4,), 4)


# -- integer partitions ------------------------------------------------------

def test_integer_partition_examples():
    d3 = C.enumerate_integer_partitions("distinct_max", 3)
    assert sorted(d3) == sorted(map(C.IntegerPartition, [(), (1,), (2,), (3,), (2, 1), (3, 1),
                                                           (3, 2), (3, 2, 1)]))
    b22 = C.enumerate_integer_partitions("box", 2, 2)
    assert sorted(b22) == sorted(map(C.IntegerPartition, [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]))
    assert count_monomials((0, 0, 0, lam.size) for lam in b22) == LaurentPoly.parse(
        "q^4 + q^3 + 2*q^2 + q + 1")
    assert C.enumerate_integer_partitions("box", 0, 4) == [C.IntegerPartition()]
    with pytest.raises(ValueError):
        C.IntegerPartition((1, 2))


@pytest.mark.parametrize("k,l", [(a, b) for a in range(5) for b in range(5)])
def test_box_partitions_complete_and_distinct(k, l):
    got = list(C.box_partitions(k, l))
    assert len(got) == len(set(got)) == comb(k + l, k)
    assert all(len(lam) <= l and all(p <= k for p in lam) for lam in got)


# -- binary and Morse --------------------------------------------------------

def test_binary_examples():
    beta = C.to_binary_seq(P("1/2/34/56"))
    assert str(beta) == "00101"
    assert C.rho(beta) == 8
    assert C.rb(P("1/2/34/56")) == comb(6, 2) - 8 == 7 == rb_pairs(P("1/2/34/56"))
    assert str(C.to_binary_seq(P("1/2/3/4"))) == "000"
    with pytest.raises(ValueError):
        C.BinarySeq("0110")


@pytest.mark.parametrize("n", range(1, 15))
def test_binary_bijection(n):
    seqs = set()
    for pi in C.layered_matchings(n):
        beta = C.to_binary_seq(pi)
        assert C.rb(pi) == comb(n, 2) - C.rho(beta)
        assert C.from_binary_seq(beta) == pi
        seqs.add(beta)
    assert seqs == set(C.binary_sequences(n - 1))
    assert len(seqs) == fib(n)


def test_morse_examples():
    nu = C.MorseSeq("..--.-")
    assert nu.length == 9
    assert C.morse_weight(nu) == LaurentPoly.parse("x^3*y^3*q^16")
    assert C.morse_weight(C.MorseSeq("....")) == LaurentPoly.parse("x^4")
    assert sum(1 for _ in C.morse_sequences(4)) == 5


@pytest.mark.parametrize("n", range(0, 14))
def test_morse_bijection_and_sum(n):
    lhs = []
    for pi in C.layered_matchings(n):
        nu = C.to_morse(pi)
        assert C.from_morse(nu) == pi and nu.length == n
        lhs.append(C.omega(pi))
    from qfibstat.poly import poly_sum
    total = poly_sum(lhs).invert_q().scale((0, 0, 0, comb(n, 2)))
    assert total == poly_sum(C.morse_weight(nu) for nu in C.morse_sequences(n))


# -- weights and shifts ------------------------------------------------------

def test_omega_examples():
    assert C.omega(P("1/2")) == LaurentPoly.parse("x^2*q")
    assert C.omega(P("12")) == LaurentPoly.parse("y")
    assert C.omega(P("12/3"), "xypq") == LaurentPoly.parse("x*y*p*q^2")
    with pytest.raises(C.InvalidPartition):
        C.omega(P("123"))


@pytest.mark.parametrize("n", range(0, 12))
def test_omega_matches_statistics(n):
    for pi in C.layered_matchings(n):
        s = C.stats(pi)
        assert C.omega_exponents(pi) == (s.singletons, s.doubletons, 0, s.rb)


def test_shift_examples():
    sh = C.shift(P("134/25"), 2)
    assert str(sh) == "_ _ /356/47"
    assert sh.blocks == ((3, 5, 6), (4, 7))
    assert C.shift(P("12/3"), 0).blocks == P("12/3").blocks
    total = sum((C.shift(pi, 3).omega() for pi in C.layered_matchings(2)), LaurentPoly())
    assert total == LaurentPoly.parse("x^2*q^7 + y*q^3")


@pytest.mark.parametrize("k", range(0, 4))
def test_shift_raises_each_contribution(k):
    for pi in C.layered_matchings(7):
        sh = C.shift(pi, k)
        assert sh.rb() == C.rb(pi) + k * pi.length


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(1, 4), max_size=8))
def test_layered_from_sizes_round_trip(sizes):
    pi = C.SetPartition.from_sizes(sizes)
    assert C.is_layered(pi)
    assert list(pi.block_sizes()) == sizes
    assert C.stats(pi).rb == rb_pairs(pi)
