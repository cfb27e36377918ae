import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from braidnt.simple import braid_word

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def words(draw, n_min=3, n_max=5, max_len=30):
    n = draw(st.integers(n_min, n_max))
    gens = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return braid_word(n, draw(st.lists(gens, max_size=max_len)))


@st.composite
def word_pairs(draw, n_min=3, n_max=5, max_len=20):
    """Two words on the same number of strands."""
    n = draw(st.integers(n_min, n_max))
    gens = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    a = draw(st.lists(gens, max_size=max_len))
    b = draw(st.lists(gens, max_size=max_len))
    return braid_word(n, a), braid_word(n, b)


@st.composite
def simples(draw, n_min=3, n_max=6):
    n = draw(st.integers(n_min, n_max))
    return draw(st.permutations(range(1, n + 1)))


def seeded_words(seed, count, n_range, max_len):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(*n_range)
        L = rng.randint(0, max_len)
        yield braid_word(n, [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(L)])
