import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidnt.errors import InvalidGenerator, InvalidStrandCount, StrandMismatch
from braidnt.simple import (
    SimpleElement,
    all_simples,
    braid_word,
    compose_simple_pair,
    delta,
    from_word,
    generator,
    identity,
    inversions,
    is_left_weighted,
    is_left_weighted_by_enumeration,
    is_prefix,
    is_simple_product,
    left_complement,
    meet,
    meet_by_enumeration,
    multiply_simple,
    parse_word,
    perm_product,
    prefixes_by_words,
    right_complement,
    tau,
)

from .conftest import simples


def S(*images):
    return SimpleElement.from_images(images)


def test_delta_word_b4():
    assert delta(4).word() == [1, 2, 1, 3, 2, 1]
    assert delta(4).length() == 6


def test_meet_example():
    assert meet(from_word(4, [1, 2]), from_word(4, [1, 3])) == generator(4, 1)


def test_generator_bounds():
    with pytest.raises(InvalidGenerator):
        generator(3, 3)
    with pytest.raises(InvalidStrandCount):
        identity(1)


def test_word_validation():
    with pytest.raises(InvalidGenerator):
        braid_word(3, [0])
    with pytest.raises(InvalidGenerator):
        braid_word(3, [3])
    with pytest.raises(InvalidGenerator):
        parse_word(3, "1 x")
    assert parse_word(3, "1 -2").letters == (1, -2)


def test_strand_mismatch():
    with pytest.raises(StrandMismatch):
        meet(identity(3), identity(4))


def test_non_simple_word_rejected():
    with pytest.raises(ValueError):
        from_word(3, [1, 1])


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_all_simples_count(n):
    ss = all_simples(n)
    assert len(ss) == len(set(ss)) == len(list(itertools.permutations(range(n))))
    assert ss[0] == identity(n) and ss[-1] == delta(n)


@given(simples())
def test_word_spells_element(p):
    s = SimpleElement(tuple(p))
    assert from_word(s.n, s.word()) == s
    assert len(s.word()) == s.length()


@given(simples())
def test_complements(p):
    s = SimpleElement(tuple(p))
    d = delta(s.n)
    assert multiply_simple(s, right_complement(s)) == d
    assert multiply_simple(left_complement(s), s) == d
    assert left_complement(right_complement(s)) == s


@given(simples())
def test_tau_is_conjugation_by_delta(p):
    s = SimpleElement(tuple(p))
    n = s.n
    # Delta * tau(s) == s * Delta
    d = delta(n).perm
    assert perm_product(d, tau(s).perm) == perm_product(s.perm, d)
    assert tau(tau(s)) == s
    assert tau(s, 2) == s


def test_tau_on_generators():
    for n in range(3, 7):
        for i in range(1, n):
            assert tau(generator(n, i)) == generator(n, n - i)


@settings(max_examples=40)
@given(st.integers(3, 4).flatmap(lambda n: st.tuples(st.permutations(range(1, n + 1)), st.permutations(range(1, n + 1)))))
def test_meet_matches_enumeration(pq):
    a, b = SimpleElement(tuple(pq[0])), SimpleElement(tuple(pq[1]))
    m = meet(a, b)
    assert m == meet_by_enumeration(a, b)
    assert is_prefix(m, a) and is_prefix(m, b)


@settings(max_examples=40)
@given(st.integers(3, 4).flatmap(lambda n: st.tuples(st.permutations(range(1, n + 1)), st.permutations(range(1, n + 1)))))
def test_left_weighted_matches_definition(pq):
    a, b = SimpleElement(tuple(pq[0])), SimpleElement(tuple(pq[1]))
    assert is_left_weighted(a, b) == is_left_weighted_by_enumeration(a, b)
    a2, b2 = compose_simple_pair(a, b)
    assert is_left_weighted(a2, b2)
    assert perm_product(a2.perm, b2.perm) == perm_product(a.perm, b.perm)
    assert a2.length() + b2.length() == a.length() + b.length()


def test_prefix_sets_b3():
    # prefixes of Delta in B_3 are all six simples
    assert prefixes_by_words(delta(3)) == set(all_simples(3))


@given(simples())
def test_simple_product_is_inversion_additivity(p):
    s = SimpleElement(tuple(p))
    for i in range(1, s.n):
        g = generator(s.n, i)
        expect = inversions(perm_product(s.perm, g.perm)) == s.length() + 1
        assert is_simple_product(s, g) == expect
