import math

import pytest
from hypothesis import given, settings, strategies as st

from gadicnets.errors import UnreachableError
from gadicnets.gadic import Term, length
from gadicnets.wordlen import (GeneratingSetSpec, LengthResult, diophantine_search,
                               geodesic_subword_check, smallest_of_length, sphere,
                               word_length)
from gadicnets.window import Window

from oracles import brute_word_length

A23 = GeneratingSetSpec.primes([2, 3], cap=20)
SMALL = [GeneratingSetSpec.primes([2, 3], cap=4),
         GeneratingSetSpec.primes([2, 3, 5], cap=3),
         GeneratingSetSpec.semigroup([2, 3], cap=3),
         GeneratingSetSpec.single(3, cap=5)]


def gen_values(spec):
    return {t.value for t in spec.generators()}


def test_examples():
    r = word_length(A23, 5)
    assert r.length == 2 and r.capped and r.cap == 20
    assert sorted(t.value for t in r.witness) == [2, 3]
    assert word_length(A23, 1).length == 1
    r = word_length(GeneratingSetSpec.single(2, cap=40), 7)
    assert r.length == 2 and not r.capped


def test_sphere_examples():
    a2 = GeneratingSetSpec.single(2)
    assert sphere(a2, 0, Window(-10, 10)) == {0}
    assert sphere(a2, 1, (-10, 10)) == {1, -1, 2, -2, 4, -4, 8, -8}
    assert 5 in sphere(A23, 2, (1, 10))


def test_lambda_small():
    assert [smallest_of_length(A23, h, 10 ** 4) for h in (1, 2, 3)] == [1, 5, 21]
    assert smallest_of_length(GeneratingSetSpec.single(2), 3, 100) == 11
    # without 32, 27 = 8 + 8 + 8 + 4 - 1 needs five terms
    capped = GeneratingSetSpec.single(2, cap=3)
    assert smallest_of_length(capped, 5, 50) == 27
    assert smallest_of_length(capped, 5, 26) is None


def test_diophantine_examples():
    assert diophantine_search([149, 151], 200) == []
    # 8 - 3 and 32 - 27 both give 5
    assert diophantine_search([5], 10) == [(3, 1, 5), (5, 3, 5)]
    assert diophantine_search([-1], 10) == [(1, 1, -1), (3, 2, -1)]
    assert diophantine_search([1], 10) == [(2, 1, 1)]
    with pytest.raises(ValueError):
        diophantine_search([1], 0)


def test_diophantine_brute():
    targets = range(-30, 31)
    got = set(diophantine_search(targets, 12))
    want = {(a, b, 2 ** a - 3 ** b) for a in range(1, 13) for b in range(1, 13)
            if -30 <= 2 ** a - 3 ** b <= 30}
    assert got == want


def test_geodesic_examples():
    assert geodesic_subword_check(A23, [Term(1, 2, 1), Term(1, 3, 1)])
    assert geodesic_subword_check(A23, word_length(A23, 21).witness)
    assert geodesic_subword_check(A23, [])
    # 1 + 1 has length 1 over A_{2,3}
    assert not geodesic_subword_check(A23, [Term(1, 2, 0), Term(1, 2, 0)])


@pytest.mark.parametrize("spec", SMALL, ids=lambda s: s.label())
def test_matches_brute_force(spec):
    gens = gen_values(spec)
    for n in range(-150, 151):
        want = brute_word_length(gens, n, 6)
        if want is None:
            with pytest.raises(UnreachableError):
                word_length(spec, n)
            continue
        res = word_length(spec, n)
        assert res.length == want
        assert sum(t.value for t in res.witness) == n
        assert len(res.witness) == want
        assert all(t.value in gens for t in res.witness)
        assert geodesic_subword_check(spec, res.witness)


@pytest.mark.parametrize("spec", SMALL, ids=lambda s: s.label())
def test_axioms(spec):
    gens = gen_values(spec)
    L = {}
    for n in range(-120, 121):
        try:
            L[n] = word_length(spec, n).length
        except UnreachableError:
            pass
    assert L[0] == 0 and all(v > 0 for n, v in L.items() if n)
    assert all(L[-n] == v for n, v in L.items() if -n in L)
    assert all((v == 1) == (n in gens) for n, v in L.items())
    for m in range(-60, 61):
        for n in range(-60, 61):
            if m in L and n in L and m + n in L:
                assert L[m + n] <= L[m] + L[n]
    # adjoining 0 changes nothing
    for n in range(-40, 41):
        assert brute_word_length(gens | {0}, n, 6) == brute_word_length(gens, n, 6)


@pytest.mark.parametrize("g", [2, 3, 5])
def test_single_base_agrees_with_gadic(g):
    cap = math.ceil(math.log(2000, g)) + 1
    spec = GeneratingSetSpec.single(g, cap)
    for n in range(-2000, 2001, 7):
        r = word_length(spec, n, max_length=12)
        assert r.length == length(g, n) and not r.capped


def test_single_base_capped_flag():
    spec = GeneratingSetSpec.single(2, cap=3)
    assert word_length(spec, 16).capped
    assert not word_length(spec, 8).capped


def test_unreachable():
    spec = GeneratingSetSpec.primes([2, 3], cap=2)
    with pytest.raises(UnreachableError) as exc:
        word_length(spec, 10 ** 6)
    assert exc.value.depth == 6 and exc.value.cap == 2
    with pytest.raises(UnreachableError):
        word_length(GeneratingSetSpec.single(2, cap=1), 85, max_length=3)


def test_generating_set_parse_and_validation():
    assert GeneratingSetSpec.parse("2,3").kind == "primes"
    assert GeneratingSetSpec.parse("g=4").params == (4,)
    assert GeneratingSetSpec.parse("5").kind == "single"
    s = GeneratingSetSpec.parse("S(P)=3,2", cap=2)
    assert s.kind == "semigroup" and s.params == (2, 3) and s.label() == "S(P)=2,3"
    assert sorted(t.value for t in s.generators() if t.sign > 0) == [1, 2, 3, 4, 6, 8, 9]
    assert GeneratingSetSpec.parse("P=2,3,5", 3).magnitude_cap == 125
    for bad in ("P=2,4", "2,2", "x=3", "g=1", "P=a"):
        with pytest.raises(ValueError):
            GeneratingSetSpec.parse(bad)
    with pytest.raises(ValueError):
        GeneratingSetSpec.primes([2, 3], cap=-1)


def test_generators_are_symmetric_and_deduplicated():
    gens = GeneratingSetSpec.primes([2, 3], cap=3).generators()
    vals = [t.value for t in gens]
    assert len(vals) == len(set(vals)) == 14
    assert set(vals) == {-v for v in vals}


def test_json_round_trip():
    r = word_length(A23, 21)
    assert LengthResult.from_json(r.to_json()) == r
    assert set(r.to_json()) == {"n", "length", "witness", "capped", "cap"}
    assert GeneratingSetSpec.from_json(A23.to_json()) == A23


def test_witness_is_deterministic():
    spec = GeneratingSetSpec.primes([2, 3], cap=6)
    assert word_length(spec, 47).witness == word_length(spec, 47).witness


@given(st.integers(-400, 400), st.integers(-400, 400))
@settings(max_examples=200, deadline=None)
def test_subadditive_mixed(m, n):
    spec = GeneratingSetSpec.primes([2, 3], cap=8)
    lm, ln, ls = (word_length(spec, x).length for x in (m, n, m + n))
    assert ls <= lm + ln
    assert word_length(spec, -m).length == lm
