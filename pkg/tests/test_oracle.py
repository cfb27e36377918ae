import itertools

import pytest

from braidnt.classify import classify
from braidnt.errors import OracleCapacityError
from braidnt.normal_form import conjugate, delta_power, normal_form
from braidnt.oracle import (
    cycling,
    decycling,
    enumerate_sss,
    oracle_classify,
    super_summit_element,
)
from braidnt.sliding import sss_descent

from .conftest import seeded_words


def test_sss_of_generator_b3():
    sss = enumerate_sss(normal_form([1], 3))
    assert sss.elements == {normal_form([1], 3), normal_form([2], 3)}
    assert (sss.inf, sss.sup) == (0, 1)


def test_sss_of_generator_b4():
    assert len(enumerate_sss(normal_form([1], 4)).elements) == 3


def test_sss_of_central_element():
    assert enumerate_sss(delta_power(4, 2)).elements == {delta_power(4, 2)}


def test_capacity_error():
    with pytest.raises(OracleCapacityError):
        enumerate_sss(normal_form([1, 2, -3, 2, 1, -3], 4), cap=2)


def test_cycling_decycling_are_conjugations():
    x = normal_form([1, 1, -2, 3, 2], 4)
    for move in (cycling, decycling):
        y = move(x)
        # same conjugacy class, so same SSS
        assert enumerate_sss(y).elements == enumerate_sss(x).elements


def test_oracle_examples():
    assert oracle_classify(normal_form([1, 2], 3)) == "periodic"
    assert oracle_classify(normal_form([1], 3)) == "reducible"
    assert oracle_classify(normal_form([2, 1, -2], 3)) == "reducible"
    assert oracle_classify(normal_form([1, -2], 3)) == "pseudo_anosov"


def test_seed_independence():
    for w in seeded_words(4, 40, (3, 4), 6):
        x = normal_form(w)
        u = normal_form([2, -1, 1 if w.n == 3 else 3], w.n)
        assert enumerate_sss(x).elements == enumerate_sss(conjugate(x, u)).elements


def test_descent_lands_in_sss():
    for length in range(1, 6):
        for letters in itertools.product([1, -1, 2, -2], repeat=length):
            x = normal_form(list(letters), 3)
            y, _ = sss_descent(x)
            sss = enumerate_sss(x)
            assert y in sss.elements
            assert super_summit_element(x) in sss.elements


def test_agrees_with_classifier_small_b4():
    for w in seeded_words(8, 40, (4, 4), 4):
        assert classify(w).kind == oracle_classify(w)
