import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gadicnets.errors import InvalidBaseError
from gadicnets.gadic import (RawRepresentation, SignedDigitRepr, Term, canonical_repr,
                             extend_length, is_canonical, iter_sphere, length,
                             lengths_array, shorten)

from oracles import bfs_lengths, enumerate_valid_vectors, valid_digits, width_for

BASES = [2, 3, 4, 5, 6, 7, 8, 9, 10, 16]


@pytest.mark.parametrize("g, n, digits, ell", [
    (2, 7, (-1, 0, 0, 1), 2),
    (3, 0, (), 0),
    (4, 10, (-2, -1, 1), 4),
    (3, 2, (-1, 1), 2),
])
def test_canonical_examples(g, n, digits, ell):
    rep = canonical_repr(g, n)
    assert rep.digits == digits
    assert rep.length == ell
    assert rep.value == n


def test_known_lengths():
    assert length(2, 0) == 0
    assert length(4, 10) == 4
    assert length(2, 3) == 2


def test_small_lengths_match_bfs():
    oracle = bfs_lengths(2, 20)
    assert oracle[7] == 2 and oracle[3] == 2
    oracle3 = bfs_lengths(3, 20)
    assert oracle3[2] == 2


def test_even_base_identity_forms():
    # both forms of 10 in base 4 have 4 summands; only one is canonical
    assert canonical_repr(4, 2 + 2 * 4).digits == (-2, -1, 1)
    assert not is_canonical(4, (2, 2))
    # the odd-base pair: (g+1)/2 * g^i vs -(g-1)/2 g^i + g^{i+1}
    for g in (3, 5, 7):
        assert canonical_repr(g, (g + 1) // 2).digits == (-(g - 1) // 2, 1)
        assert length(g, (g + 1) // 2) == (g + 1) // 2


@pytest.mark.parametrize("bad", [1, 0, -3, 2.5, "2"])
def test_invalid_base(bad):
    with pytest.raises(InvalidBaseError):
        canonical_repr(bad, 5)
    with pytest.raises(InvalidBaseError):
        length(bad, 5)


@pytest.mark.parametrize("g", BASES)
def test_canonical_valid_and_sign(g):
    for n in range(-2000, 2001):
        rep = canonical_repr(g, n)
        assert rep.value == n
        assert valid_digits(g, rep.digits)
        assert rep.is_canonical()
        assert (n > 0) == (rep.leading_digit > 0)
        assert canonical_repr(g, -n).digits == tuple(-d for d in rep.digits)


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_uniqueness_by_enumeration(g):
    N = 200
    counts = {}
    for value, _ in enumerate_valid_vectors(g, width_for(g, N)):
        if abs(value) <= N:
            counts[value] = counts.get(value, 0) + 1
    assert all(counts.get(n) == 1 for n in range(-N, N + 1))


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_length_matches_bfs(g):
    oracle = bfs_lengths(g, 600)
    assert all(length(g, n) == oracle[n] for n in oracle)


def test_big_integers():
    n = 3 ** 200 - 2 ** 150 + 12345
    for g in (2, 3, 10):
        rep = canonical_repr(g, n)
        assert rep.value == n and rep.is_canonical()


@given(st.integers(-10 ** 30, 10 ** 30), st.integers(-10 ** 30, 10 ** 30),
       st.sampled_from(BASES))
@settings(max_examples=300, deadline=None)
def test_subadditive(m, n, g):
    assert length(g, m + n) <= length(g, m) + length(g, n)


@given(st.integers(-10 ** 12, 10 ** 12), st.sampled_from(BASES))
@settings(max_examples=300, deadline=None)
def test_extend_length(n, g):
    a = extend_length(g, n)
    assert a.base == g
    assert a.sign == (1 if n >= 0 else -1)
    top = canonical_repr(g, n).leading_index
    assert a.exp == (top + 2 if n else 2)
    assert length(g, n + a.value) == length(g, n) + 1


def test_extend_length_examples():
    assert extend_length(2, 0) == Term(1, 2, 2)
    assert length(2, 4) == 1
    assert extend_length(2, 7) == Term(1, 2, 5)
    assert length(2, 39) == 3
    assert extend_length(2, -7) == Term(-1, 2, 5)
    assert length(2, -39) == 3


def test_shorten_examples():
    out = shorten(RawRepresentation(2, [(1, 0), (-1, 0), (1, 3)]))
    assert out.value == 8 and out.digits == (0, 0, 0, 1)
    out = shorten(RawRepresentation(4, [(1, 0), (1, 0), (1, 1), (1, 1)]))
    assert out.digits == (-2, -1, 1)
    out = shorten(RawRepresentation(3, [(1, 0)] * 3))
    assert out.digits == (0, 1)


def test_shorten_trace_rules():
    trace = []
    shorten(RawRepresentation(4, [(1, 0), (1, 0), (1, 1), (1, 1)]), trace)
    assert trace == [("start", 4), ("run", 4)]
    trace = []
    shorten(RawRepresentation(5, [(0, 0), (1, 2), (-1, 2)] + [(1, 0)] * 8), trace)
    rules = [r for r, _ in trace]
    assert rules[:3] == ["start", "a", "b"]
    assert "c" in rules and "d" in rules


def test_shorten_zero():
    assert shorten(RawRepresentation(3, [(0, 0), (1, 4), (-1, 4)])).digits == ()
    assert shorten(RawRepresentation(3, [])).digits == ()


def random_raw(rnd, g, max_terms=24, max_exp=7):
    k = rnd.randrange(max_terms + 1)
    terms = [(rnd.choice((-1, 0, 1, 1)), rnd.randrange(max_exp)) for _ in range(k)]
    return RawRepresentation(g, terms)


@pytest.mark.parametrize("g", BASES)
def test_shorten_converges(g):
    rnd = random.Random(g)
    for _ in range(500):
        rep = random_raw(rnd, g)
        trace = []
        out = shorten(rep, trace)
        counts = [c for _, c in trace]
        assert all(a >= b for a, b in zip(counts, counts[1:]))
        assert out == canonical_repr(g, rep.value)
        assert counts[-1] == out.length


@given(st.sampled_from(BASES), st.lists(st.tuples(st.sampled_from([-1, 0, 1]),
                                                  st.integers(0, 10)), max_size=40))
@settings(max_examples=300, deadline=None)
def test_shorten_property(g, terms):
    rep = RawRepresentation(g, terms)
    assert shorten(rep) == canonical_repr(g, rep.value)
    assert length(g, rep.value) <= rep.term_count


def test_raw_rejects_bad_terms():
    with pytest.raises(ValueError):
        RawRepresentation(2, [(2, 0)])
    with pytest.raises(ValueError):
        RawRepresentation(2, [(1, -1)])


def test_lengths_array_matches_scalar():
    xs = np.arange(-5000, 5001)
    for g in (2, 3, 4, 5, 6, 10):
        got = lengths_array(g, xs)
        assert got.tolist() == [length(g, int(x)) for x in xs]


@pytest.mark.parametrize("g, h, top", [(2, 3, 8), (3, 4, 6), (4, 3, 5), (5, 2, 5)])
def test_iter_sphere(g, h, top):
    vals = list(iter_sphere(g, h, top))
    assert len(vals) == len(set(vals))
    expected = {n for n in range(-g ** (top + 1), g ** (top + 1) + 1)
                if length(g, n) == h and canonical_repr(g, n).leading_index <= top}
    assert set(vals) == expected


def test_json_round_trip():
    rep = canonical_repr(6, -12345)
    assert SignedDigitRepr.from_json(rep.to_json()) == rep
    assert rep.to_json() == {"base": 6, "digits": list(rep.digits)}
    t = Term(-1, 3, 4)
    assert Term.from_json(t.to_json()) == t
