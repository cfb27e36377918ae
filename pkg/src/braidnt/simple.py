"""
Simple elements (positive permutation braids) of the braid group B_n.

A simple element is stored as the permutation it induces on strand positions:
``perm[j - 1]`` is the final position of the strand that starts at position
``j``. Product of braids ``a * b`` (``a`` on top) therefore corresponds to the
permutation ``j -> b(a(j))``. A product of two simple elements is again simple
exactly when no pair of strands crosses in both factors, which is the same as
inversion counts adding up.

Every function here is pure; the heavier lattice operations are memoised since
the same pairs come up constantly during normal form computations.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import InvalidGenerator, InvalidStrandCount, StrandMismatch

Permutation = tuple[int, ...]


def check_permutation(images: Iterable[int]) -> Permutation:
    """Validate one-line notation ``images`` (a bijection of 1..n) and return it as a tuple."""
    perm = tuple(int(v) for v in images)
    n = len(perm)
    if n < 2:
        raise InvalidStrandCount(f"need at least 2 strands, got {n}")
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{n}")
    return perm


class SimpleElement(NamedTuple):
    perm: Permutation

    @classmethod
    def from_images(cls, images: Iterable[int]) -> "SimpleElement":
        return cls(check_permutation(images))

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def is_trivial(self) -> bool:
        return self.perm == _identity_perm(len(self.perm))

    @property
    def is_delta(self) -> bool:
        return self.perm == _reverse(len(self.perm))

    def length(self) -> int:
        """Number of crossings, i.e. the Artin length of the simple element."""
        return inversions(self.perm)

    def word(self) -> list[int]:
        """A reduced word in positive Artin generators (leftmost descents first)."""
        perm = list(self.perm)
        out = []
        i = 0
        while i < len(perm) - 1:
            if perm[i] > perm[i + 1]:
                perm[i], perm[i + 1] = perm[i + 1], perm[i]
                out.append(i + 1)
                i = max(i - 1, 0)
            else:
                i += 1
        return out

    def __repr__(self) -> str:
        return f"SimpleElement({list(self.perm)})"


class BraidWord(NamedTuple):
    """A word in Artin generators; letter ``g`` means sigma_|g| to the power sign(g)."""

    n: int
    letters: tuple[int, ...]


def braid_word(n: int, letters: Iterable[int] = ()) -> BraidWord:
    n = check_strands(n)
    out = []
    for g in letters:
        if isinstance(g, bool) or not isinstance(g, int):
            raise InvalidGenerator(f"generator token {g!r} is not an integer")
        if g == 0 or abs(g) >= n:
            raise InvalidGenerator(f"generator {g} out of range for {n} strands")
        out.append(g)
    return BraidWord(n, tuple(out))


def parse_word(n: int, tokens: Sequence[str] | str) -> BraidWord:
    """Parse whitespace separated signed integers (or a list of such tokens)."""
    if isinstance(tokens, str):
        tokens = tokens.split()
    letters = []
    for tok in tokens:
        try:
            letters.append(int(tok))
        except ValueError:
            raise InvalidGenerator(f"token {tok!r} is not an integer") from None
    return braid_word(n, letters)


def check_strands(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InvalidStrandCount(f"invalid strand count {n!r}")
    return n


def _same_n(a: SimpleElement, b: SimpleElement) -> None:
    if len(a.perm) != len(b.perm):
        raise StrandMismatch(f"strand counts differ: {len(a.perm)} vs {len(b.perm)}")


# --- permutation arithmetic -------------------------------------------------

def inversions(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def perm_product(a: Permutation, b: Permutation) -> Permutation:
    """Permutation of the braid product ``a * b``."""
    return tuple(b[v - 1] for v in a)


def perm_inverse(a: Permutation) -> Permutation:
    out = [0] * len(a)
    for j, v in enumerate(a, 1):
        out[v - 1] = j
    return tuple(out)


@lru_cache(maxsize=None)
def _reverse(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


@lru_cache(maxsize=None)
def _identity_perm(n: int) -> Permutation:
    return tuple(range(1, n + 1))


# --- constructors -----------------------------------------------------------

def identity(n: int) -> SimpleElement:
    return SimpleElement(tuple(range(1, check_strands(n) + 1)))


def delta(n: int) -> SimpleElement:
    """The half-twist: the maximal simple element, reversing strand order."""
    return SimpleElement(_reverse(check_strands(n)))


def generator(n: int, i: int) -> SimpleElement:
    """The Artin generator sigma_i as a simple element."""
    check_strands(n)
    if not 1 <= i <= n - 1:
        raise InvalidGenerator(f"generator {i} out of range for {n} strands")
    perm = list(range(1, n + 1))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return SimpleElement(tuple(perm))


def from_word(n: int, word: Iterable[int]) -> SimpleElement:
    """Simple element spelled by a positive word; raises if the word is not simple."""
    s = identity(n)
    for i in word:
        g = generator(n, i)
        if not is_simple_product(s, g):
            raise ValueError(f"word {list(word)} does not spell a simple element")
        s = SimpleElement(perm_product(s.perm, g.perm))
    return s


def all_simples(n: int) -> list[SimpleElement]:
    """All n! simple elements, ordered by crossing count then one-line notation."""
    perms = itertools.permutations(range(1, check_strands(n) + 1))
    return sorted((SimpleElement(p) for p in perms), key=lambda s: (s.length(), s.perm))


# --- Garside operations -----------------------------------------------------

@lru_cache(maxsize=None)
def tau(s: SimpleElement, k: int = 1) -> SimpleElement:
    """Conjugation by Delta^k; sigma_i -> sigma_{n-i} when k is odd."""
    if k % 2 == 0:
        return s
    n = len(s.perm)
    return SimpleElement(tuple(n + 1 - s.perm[n - j] for j in range(1, n + 1)))


@lru_cache(maxsize=None)
def is_simple_product(a: SimpleElement, b: SimpleElement) -> bool:
    """Whether the braid ``a * b`` is simple (no strand pair crosses twice)."""
    _same_n(a, b)
    return inversions(perm_product(a.perm, b.perm)) == inversions(a.perm) + inversions(b.perm)


def multiply_simple(a: SimpleElement, b: SimpleElement) -> SimpleElement:
    """The simple element ``a * b``; the product must be simple."""
    if not is_simple_product(a, b):
        raise ValueError(f"{a!r} * {b!r} is not simple")
    return SimpleElement(perm_product(a.perm, b.perm))


@lru_cache(maxsize=None)
def right_complement(s: SimpleElement) -> SimpleElement:
    """The simple ``c`` with ``s * c == Delta``."""
    n = len(s.perm)
    inv = perm_inverse(s.perm)
    return SimpleElement(tuple(n + 1 - inv[k - 1] for k in range(1, n + 1)))


@lru_cache(maxsize=None)
def left_complement(s: SimpleElement) -> SimpleElement:
    """The simple ``c`` with ``c * s == Delta``."""
    n = len(s.perm)
    inv = perm_inverse(s.perm)
    return SimpleElement(tuple(inv[n - j] for j in range(1, n + 1)))


@lru_cache(maxsize=None)
def left_quotient(t: SimpleElement, a: SimpleElement) -> SimpleElement | None:
    """``t^-1 * a`` if ``t`` is a prefix of ``a``, otherwise None."""
    _same_n(t, a)
    u = perm_product(perm_inverse(t.perm), a.perm)
    if inversions(a.perm) == inversions(t.perm) + inversions(u):
        return SimpleElement(u)
    return None


def is_prefix(t: SimpleElement, a: SimpleElement) -> bool:
    return left_quotient(t, a) is not None


@lru_cache(maxsize=None)
def meet(a: SimpleElement, b: SimpleElement) -> SimpleElement:
    """Greatest common prefix of two simple elements."""
    _same_n(a, b)
    n = len(a.perm)
    # Greedy atom extension: every common prefix below the meet extends by some atom.
    t = identity(n)
    ra, rb = a, b
    while True:
        for i in range(n - 1):
            if ra.perm[i] > ra.perm[i + 1] and rb.perm[i] > rb.perm[i + 1]:
                g = generator(n, i + 1)
                t = multiply_simple(t, g)
                ra = left_quotient(g, ra)
                rb = left_quotient(g, rb)
                break
        else:
            return t


@lru_cache(maxsize=None)
def compose_simple_pair(a: SimpleElement, b: SimpleElement) -> tuple[SimpleElement, SimpleElement]:
    """Rebalance ``(a, b)`` into a left-weighted pair with the same product."""
    t = meet(right_complement(a), b)
    if t.is_trivial:
        return a, b
    return multiply_simple(a, t), left_quotient(t, b)


def is_left_weighted(a: SimpleElement, b: SimpleElement) -> bool:
    _same_n(a, b)
    return meet(right_complement(a), b).is_trivial


# --- definitional versions, used as test oracles ----------------------------

def reduced_words(s: SimpleElement) -> Iterator[tuple[int, ...]]:
    """Every reduced positive word spelling ``s``."""
    perm = list(s.perm)
    if all(v == j for j, v in enumerate(perm, 1)):
        yield ()
        return
    for i in range(len(perm) - 1):
        if perm[i] > perm[i + 1]:
            rest = perm[:]
            rest[i], rest[i + 1] = rest[i + 1], rest[i]
            for w in reduced_words(SimpleElement(tuple(rest))):
                yield (i + 1,) + w


def prefixes_by_words(s: SimpleElement) -> set[SimpleElement]:
    """Left divisors of ``s`` read off as prefixes of its reduced words."""
    n = len(s.perm)
    out = set()
    for w in reduced_words(s):
        for k in range(len(w) + 1):
            out.add(from_word(n, w[:k]))
    return out


def meet_by_enumeration(a: SimpleElement, b: SimpleElement) -> SimpleElement:
    common = prefixes_by_words(a) & prefixes_by_words(b)
    return max(common, key=lambda s: s.length())


def is_left_weighted_by_enumeration(a: SimpleElement, b: SimpleElement) -> bool:
    return not any(
        is_simple_product(a, t) for t in prefixes_by_words(b) if not t.is_trivial
    )
