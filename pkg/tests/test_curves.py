import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidnt.curves import (
    Curve,
    RoundCurve,
    act,
    act_inverse,
    almost_round_curve,
    find_invariant_almost_round,
    is_round,
    orbit_is_round_family,
    preserves_round_curve,
    round_curves,
    round_to_coords,
)
from braidnt.errors import InvalidStrandCount, StrandMismatch
from braidnt.normal_form import delta_power, normal_form
from braidnt.simple import braid_word, delta, identity

R = RoundCurve


@st.composite
def curve_and_words(draw, count=2, max_len=25):
    n = draw(st.integers(3, 6))
    coords = draw(st.lists(st.integers(-20, 20), min_size=2 * n - 4, max_size=2 * n - 4))
    if not any(coords):
        coords[0] = 1
    gens = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    ws = [draw(st.lists(gens, max_size=max_len)) for _ in range(count)]
    return Curve(n, tuple(coords)), ws


def test_round_curve_lists():
    assert round_curves(3) == [R(1, 2), R(2, 3)]
    assert round_curves(4) == [R(1, 2), R(1, 3), R(2, 3), R(2, 4), R(3, 4)]
    assert len(round_curves(5)) == 9
    with pytest.raises(InvalidStrandCount):
        round_curves(2)


def test_round_to_coords_rejects_degenerate():
    with pytest.raises(ValueError):
        round_to_coords(R(1, 4), 4)


@pytest.mark.parametrize("n", range(3, 8))
def test_round_coords_round_trip(n):
    rc = round_curves(n)
    assert len({round_to_coords(c, n) for c in rc}) == len(rc)
    for c in rc:
        assert is_round(round_to_coords(c, n)) == c


def test_b3_examples():
    c12 = round_to_coords(R(1, 2), 3)
    assert act([1], c12) == c12
    d = act([2], c12)
    assert is_round(d) is None
    assert act([-2], d) == c12
    assert act(delta(3).word(), c12) == round_to_coords(R(2, 3), 3)


def test_strand_mismatch():
    with pytest.raises(StrandMismatch):
        act(braid_word(4, [1]), round_to_coords(R(1, 2), 3))
    with pytest.raises(StrandMismatch):
        act(normal_form([1], 4), round_to_coords(R(1, 2), 3))


@pytest.mark.parametrize("n", range(3, 7))
def test_boundary_generator_criterion(n):
    for rc in round_curves(n):
        c = round_to_coords(rc, n)
        for k in range(1, n):
            fixed = k not in (rc.lo - 1, rc.hi)
            assert (act([k], c) == c) == fixed, (rc, k)
            assert (act([-k], c) == c) == fixed, (rc, -k)


@pytest.mark.parametrize("n", range(3, 7))
def test_delta_reflection(n):
    d = delta(n).word()
    for rc in round_curves(n):
        image = act(d, round_to_coords(rc, n))
        assert image == round_to_coords(R(n + 1 - rc.hi, n + 1 - rc.lo), n)


@given(curve_and_words())
def test_right_action_law(data):
    c, (u, v) = data
    assert act(u + v, c) == act(v, act(u, c))
    assert act([], c) == c


@given(curve_and_words(count=1))
def test_inverse_round_trip(data):
    c, (w,) = data
    assert act(w, act_inverse(w, c)) == c
    assert act_inverse(w, act(w, c)) == c


@given(curve_and_words(count=1))
def test_delta_squared_acts_trivially(data):
    c, _ = data
    d = delta(c.n).word()
    assert act(d + d, c) == c
    assert act(delta_power(c.n, 2), c) == c


@given(curve_and_words(count=1))
def test_normal_form_acts_like_word(data):
    c, (w,) = data
    assert act(normal_form(w, c.n), c) == act(w, c)


def test_braid_relations_on_random_curves():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(3, 7)
        c = Curve(n, tuple(rng.randint(-9, 9) or 2 for _ in range(2 * n - 4)))
        i = rng.randint(1, n - 2)
        assert act([i, i + 1, i], c) == act([i + 1, i, i + 1], c)
        j = rng.randint(1, n - 1)
        k = rng.randint(1, n - 1)
        if abs(j - k) > 1:
            assert act([j, k], c) == act([k, j], c)


def test_pseudo_anosov_growth_rate():
    # sigma_1 sigma_2^-1 has stretch factor (3 + sqrt 5) / 2 on B_3 curves
    c = round_to_coords(R(1, 2), 3)
    norms = []
    for _ in range(40):
        c = act([1, -2], c)
        norms.append(max(abs(v) for v in c.coords))
    ratio = norms[-1] / norms[-2]
    assert ratio == pytest.approx((3 + math.sqrt(5)) / 2, rel=1e-9)


def test_exact_growth_is_exponential_and_exact():
    c = round_to_coords(R(1, 2), 4)
    L = 600
    out = act([1, -2, 3] * (L // 3), c)
    bits = max(abs(v) for v in out.coords).bit_length()
    assert 50 < bits <= 2 * L + 8
    # exact arithmetic: undoing returns the start
    assert act_inverse([1, -2, 3] * (L // 3), out) == c


def test_preserves_round_curve_examples():
    assert preserves_round_curve(normal_form([1], 3)) == R(1, 2)
    assert preserves_round_curve(normal_form([1, -2], 3)) is None
    assert preserves_round_curve(delta_power(4, 2)) == R(1, 2)


def test_almost_round_examples():
    s, rc = find_invariant_almost_round(normal_form([2, 1, -2], 3))
    assert s.word() == [2] and rc == R(1, 2)
    assert find_invariant_almost_round(normal_form([1, -2], 3)) is None
    s, rc = find_invariant_almost_round(normal_form([], 4))
    assert s == identity(4) and rc == R(1, 2)
    c = almost_round_curve(s, rc)
    assert is_round(c) == rc


def test_orbit_family():
    # Delta swaps [1,2] and [2,3] in B_3, a family of two
    x = normal_form(delta(3).word(), 3)
    assert orbit_is_round_family(x, R(1, 2))
    assert not orbit_is_round_family(normal_form([2], 3), R(1, 2))
