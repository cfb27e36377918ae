"""
Left normal forms Delta^p x_1 ... x_r and group arithmetic on them.

Every braid is handled through its :class:`CanonicalForm`. Products are formed
by appending simple factors one at a time and re-establishing left-weightedness
locally, which keeps the cost quadratic in the word length for a fixed number
of strands.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .errors import StrandMismatch
from .simple import (
    BraidWord,
    SimpleElement,
    braid_word,
    check_strands,
    compose_simple_pair,
    delta,
    generator,
    left_complement,
    tau,
)


class CanonicalForm(NamedTuple):
    n: int
    p: int
    factors: tuple[SimpleElement, ...]

    @property
    def inf(self) -> int:
        return self.p

    @property
    def sup(self) -> int:
        return self.p + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def braid_length(self) -> int:
        r = len(self.factors)
        return max(abs(self.p), r, self.p + r)

    @property
    def is_delta_power(self) -> bool:
        return not self.factors

    def to_word(self) -> BraidWord:
        """A word in Artin generators representing the element."""
        d = delta(self.n).word()
        letters: list[int] = []
        if self.p >= 0:
            letters.extend(d * self.p)
        else:
            letters.extend(-g for g in reversed(d * -self.p))
        for f in self.factors:
            letters.extend(f.word())
        return BraidWord(self.n, tuple(letters))

    def __str__(self) -> str:
        fs = " ".join(str(list(f.perm)) for f in self.factors)
        return f"D^{self.p} {fs}".rstrip()


class MixedForm(NamedTuple):
    """The element ``a^-1 * b`` with ``a``, ``b`` positive and prefix-coprime."""

    a: CanonicalForm
    b: CanonicalForm

    @property
    def length(self) -> int:
        return self.a.sup + self.b.sup


class _Normalizer:
    """Mutable accumulator for a left normal form; absorbs factors from the right."""

    __slots__ = ("n", "p", "fs")

    def __init__(self, n: int, p: int = 0, factors: Sequence[SimpleElement] = ()):
        # ``factors`` must already be a left normal form (no Delta, no identity).
        self.n = n
        self.p = p
        self.fs = list(factors)

    def append(self, s: SimpleElement) -> None:
        # One right-to-left pass restores left-weightedness when a simple factor
        # is appended to a left normal form.
        if s.is_trivial:
            return
        fs = self.fs
        fs.append(s)
        j = len(fs) - 1
        while j > 0:
            a2, b2 = compose_simple_pair(fs[j - 1], fs[j])
            if b2 == fs[j]:
                break
            fs[j - 1], fs[j] = a2, b2
            j -= 1
        if fs[-1].is_trivial:
            fs.pop()
        if fs and fs[0].is_delta:
            fs.pop(0)
            self.p += 1

    def extend(self, factors: Iterable[SimpleElement]) -> None:
        for s in factors:
            self.append(s)

    def result(self) -> CanonicalForm:
        return CanonicalForm(self.n, self.p, tuple(self.fs))


def _same_n(x: CanonicalForm, y: CanonicalForm) -> None:
    if x.n != y.n:
        raise StrandMismatch(f"strand counts differ: {x.n} vs {y.n}")


def identity_form(n: int) -> CanonicalForm:
    return CanonicalForm(check_strands(n), 0, ())


def delta_power(n: int, p: int) -> CanonicalForm:
    return CanonicalForm(check_strands(n), p, ())


def from_simple(s: SimpleElement) -> CanonicalForm:
    return from_factors(s.n, 0, [s])


def from_factors(n: int, p: int, factors: Iterable[SimpleElement]) -> CanonicalForm:
    """Normal form of ``Delta^p * s_1 * s_2 * ...`` for arbitrary simple ``s_i``."""
    acc = _Normalizer(n, p)
    acc.extend(factors)
    return acc.result()


def normal_form(w: BraidWord | Sequence[int], n: int | None = None) -> CanonicalForm:
    """Left normal form of a braid word.

    Each inverse letter is written Delta^-1 * (Delta sigma_i^-1); all the Delta^-1
    are then pulled to the front, applying tau to every factor they cross.
    """
    if not isinstance(w, BraidWord):
        if n is None:
            raise TypeError("strand count required for a bare letter sequence")
        w = braid_word(n, w)
    n = w.n
    letters = w.letters
    negatives_after = sum(1 for g in letters if g < 0)
    factors = []
    for g in letters:
        if g > 0:
            s = generator(n, g)
        else:
            negatives_after -= 1
            s = left_complement(generator(n, -g))
        factors.append(tau(s, negatives_after))
    return from_factors(n, -sum(1 for g in letters if g < 0), factors)


def multiply(x: CanonicalForm, y: CanonicalForm) -> CanonicalForm:
    _same_n(x, y)
    # Delta^p X Delta^q Y = Delta^(p+q) tau^q(X) Y
    q = y.p
    acc = _Normalizer(x.n, x.p + q, [tau(s, q) for s in x.factors])
    acc.extend(y.factors)
    return acc.result()


def multiply_all(n: int, forms: Iterable[CanonicalForm]) -> CanonicalForm:
    out = identity_form(n)
    for f in forms:
        out = multiply(out, f)
    return out


def invert(x: CanonicalForm) -> CanonicalForm:
    # (Delta^p x_1..x_r)^-1 = x_r^-1 .. x_1^-1 Delta^-p, with s^-1 = Delta^-1 * lc(s)
    r = len(x.factors)
    factors = []
    for k, s in enumerate(reversed(x.factors)):
        # Delta^-1 terms still to the right of this factor: r - 1 - k, then Delta^-p.
        factors.append(tau(left_complement(s), r - 1 - k - x.p))
    return from_factors(x.n, -r - x.p, factors)


def power(x: CanonicalForm, m: int, *, squaring: bool = False) -> CanonicalForm:
    """Normal form of x^m for m >= 0, by repeated multiplication unless ``squaring``."""
    if m < 0:
        raise ValueError("power exponent must be non-negative")
    if squaring:
        out, base = identity_form(x.n), x
        while m:
            if m & 1:
                out = multiply(out, base)
            base = multiply(base, base)
            m >>= 1
        return out
    out = identity_form(x.n)
    for _ in range(m):
        out = multiply(out, x)
    return out


def conjugate(x: CanonicalForm, c: CanonicalForm) -> CanonicalForm:
    """``c^-1 * x * c``."""
    return multiply(multiply(invert(c), x), c)


def conjugate_by_simple(x: CanonicalForm, t: SimpleElement) -> CanonicalForm:
    """``t^-1 * x * t`` for a simple ``t``."""
    if t.is_trivial:
        return x
    return multiply(multiply(invert(from_factors(x.n, 0, [t])), x), from_factors(x.n, 0, [t]))


def lengths(x: CanonicalForm) -> tuple[int, int, int, int]:
    """(inf, sup, canonical length, braid length)."""
    return x.inf, x.sup, x.canonical_length, x.braid_length


def mixed_canonical_form(x: CanonicalForm) -> MixedForm:
    n = x.n
    if x.p >= 0:
        return MixedForm(identity_form(n), x)
    if x.sup <= 0:
        return MixedForm(invert(x), identity_form(n))
    k = -x.p
    # Delta^-k x_1..x_k = a^-1 with a = (x_1..x_k)^-1 Delta^k
    head = CanonicalForm(n, 0, x.factors[:k])
    a = multiply(invert(head), delta_power(n, k))
    b = CanonicalForm(n, 0, x.factors[k:])
    return MixedForm(a, b)


def left_tau(x: CanonicalForm, k: int = 1) -> CanonicalForm:
    """Factor-wise tau^k, i.e. the normal form of Delta^-k x Delta^k."""
    return CanonicalForm(x.n, x.p, tuple(tau(s, k) for s in x.factors))


def is_identity(x: CanonicalForm) -> bool:
    return x.p == 0 and not x.factors

