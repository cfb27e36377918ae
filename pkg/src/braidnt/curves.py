"""
Curves in the n-punctured disk, in Dynnikov coordinates.

A multicurve is encoded by ``(a_1, b_1, ..., a_{n-2}, b_{n-2})``, computed from
its minimal intersection numbers with a fixed family of vertical arcs: for a
puncture ``i`` in 2..n-1, ``alpha`` arcs run from the puncture straight up and
straight down to the boundary, and ``beta_i`` is the vertical line between
punctures ``i`` and ``i+1``. Then ``a_i = (alpha_down - alpha_up) / 2`` at
puncture ``i+1`` and ``b_i = (beta_i - beta_{i+1}) / 2``. The map is a bijection
between nonempty integral laminations and nonzero integer vectors, so equal
coordinates mean isotopic curves.

Braids act on the right, one Artin letter at a time, through piecewise-linear
integer update rules. Python integers keep the arithmetic exact however large
the coordinates grow.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import InvalidStrandCount, StrandMismatch
from .normal_form import CanonicalForm
from .simple import BraidWord, SimpleElement, all_simples


class RoundCurve(NamedTuple):
    """Circle around the consecutive punctures ``lo..hi``."""

    lo: int
    hi: int

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


class Curve(NamedTuple):
    n: int
    coords: tuple[int, ...]


def _pos(v: int) -> int:
    return v if v > 0 else 0


def _neg(v: int) -> int:
    return v if v < 0 else 0


def round_curves(n: int) -> list[RoundCurve]:
    """Non-degenerate round curves (2..n-1 punctures), lexicographic."""
    if n < 3:
        raise InvalidStrandCount(f"no non-degenerate curves with {n} punctures")
    return [
        RoundCurve(lo, hi)
        for lo in range(1, n + 1)
        for hi in range(lo + 1, n + 1)
        if (lo, hi) != (1, n)
    ]


def _check_round(n: int, c: RoundCurve) -> None:
    if not (1 <= c.lo < c.hi <= n) or (c.lo, c.hi) == (1, n):
        raise ValueError(f"{c} is not a non-degenerate round curve for {n} punctures")


def round_to_coords(c: RoundCurve, n: int) -> Curve:
    _check_round(n, c)
    # alpha arcs meet the curve once each side at enclosed punctures, so all a_i = 0;
    # beta_i = 2 exactly when lo <= i < hi.
    beta = [2 if c.lo <= i < c.hi else 0 for i in range(1, n)]
    coords: list[int] = []
    for i in range(1, n - 1):
        coords += [0, (beta[i - 1] - beta[i]) // 2]
    return Curve(n, tuple(coords))


def is_round(c: Curve) -> RoundCurve | None:
    return _round_index(c.n).get(c.coords)


_ROUND_CACHE: dict[int, dict[tuple[int, ...], RoundCurve]] = {}


def _round_index(n: int) -> dict[tuple[int, ...], RoundCurve]:
    if n not in _ROUND_CACHE:
        _ROUND_CACHE[n] = {round_to_coords(c, n).coords: c for c in round_curves(n)}
    return _ROUND_CACHE[n]


def _apply_letter(a: list[int], b: list[int], g: int, n: int) -> None:
    """Update coordinates in place for one Artin letter (0-based arrays)."""
    i = abs(g)
    m = n - 2
    if g > 0:
        if i == 1:
            a0, b0 = a[0], b[0]
            a[0] = b0 - _pos(_pos(b0) - a0)
            b[0] = _pos(b0) - a0
        elif i == n - 1:
            a0, b0 = a[m - 1], b[m - 1]
            a[m - 1] = b0 - _neg(_neg(b0) - a0)
            b[m - 1] = _neg(b0) - a0
        else:
            j = i - 2
            a1, b1, a2, b2 = a[j], b[j], a[j + 1], b[j + 1]
            c = a1 - _neg(b1) - a2 + _pos(b2)
            a[j] = a1 + _pos(b1) + _pos(_pos(b2) - c)
            b[j] = b2 - _pos(c)
            a[j + 1] = a2 + _neg(b2) + _neg(_neg(b1) + c)
            b[j + 1] = b1 + _pos(c)
    else:
        if i == 1:
            a0, b0 = a[0], b[0]
            a[0] = -b0 + _pos(a0 + _pos(b0))
            b[0] = a0 + _pos(b0)
        elif i == n - 1:
            a0, b0 = a[m - 1], b[m - 1]
            a[m - 1] = -b0 + _neg(a0 + _neg(b0))
            b[m - 1] = a0 + _neg(b0)
        else:
            j = i - 2
            a1, b1, a2, b2 = a[j], b[j], a[j + 1], b[j + 1]
            d = a1 + _neg(b1) - a2 - _pos(b2)
            a[j] = a1 - _pos(b1) - _pos(_pos(b2) + d)
            b[j] = b2 + _neg(d)
            a[j + 1] = a2 - _neg(b2) - _neg(_neg(b1) - d)
            b[j + 1] = b1 - _neg(d)


def _letters(x: BraidWord | CanonicalForm | SimpleElement | Iterable[int], n: int) -> list[int]:
    if isinstance(x, BraidWord):
        if x.n != n:
            raise StrandMismatch(f"braid on {x.n} strands acting on curve in D_{n}")
        return list(x.letters)
    if isinstance(x, CanonicalForm):
        if x.n != n:
            raise StrandMismatch(f"braid on {x.n} strands acting on curve in D_{n}")
        # Delta^2 is central and acts trivially on curves.
        reduced = CanonicalForm(n, x.p % 2, x.factors)
        return list(reduced.to_word().letters)
    if isinstance(x, SimpleElement):
        if x.n != n:
            raise StrandMismatch(f"braid on {x.n} strands acting on curve in D_{n}")
        return x.word()
    return list(x)


def act(x, c: Curve) -> Curve:
    """The curve ``c . x`` (right action, letters applied left to right)."""
    n = c.n
    letters = _letters(x, n)
    a = list(c.coords[0::2])
    b = list(c.coords[1::2])
    for g in letters:
        _apply_letter(a, b, g, n)
    out = [0] * (2 * n - 4)
    out[0::2] = a
    out[1::2] = b
    return Curve(n, tuple(out))


def act_inverse(x, c: Curve) -> Curve:
    """The curve ``c . x^-1``."""
    letters = _letters(x, c.n)
    return act([-g for g in reversed(letters)], c)


def preserves_round_curve(x: CanonicalForm, stats: dict | None = None) -> RoundCurve | None:
    """First round curve (lexicographic) fixed by ``x``."""
    n = x.n
    word = _letters(x, n)
    for rc in round_curves(n):
        if stats is not None:
            stats["curves_tested"] = stats.get("curves_tested", 0) + 1
        c = round_to_coords(rc, n)
        if act(word, c) == c:
            return rc
    return None


def almost_round_curve(s: SimpleElement, rc: RoundCurve) -> Curve:
    """The almost-round curve sent to ``rc`` by the simple element ``s``."""
    return act_inverse(s, round_to_coords(rc, s.n))


def find_invariant_almost_round(
    x: CanonicalForm, stats: dict | None = None
) -> tuple[SimpleElement, RoundCurve] | None:
    """Brute-force search over all curves ``C`` with ``C . s`` round, ``s`` simple.

    Returns the first ``(s, round)`` whose almost-round curve is fixed by ``x``;
    simples are scanned by crossing count, round curves lexicographically.
    """
    n = x.n
    word = _letters(x, n)
    rounds = round_curves(n)
    for s in all_simples(n):
        for rc in rounds:
            if stats is not None:
                stats["curves_tested"] = stats.get("curves_tested", 0) + 1
            c = almost_round_curve(s, rc)
            if act(word, c) == c:
                return s, rc
    return None


def orbit_is_round_family(y: CanonicalForm, rc: RoundCurve) -> bool:
    """Whether the orbit of ``rc`` under ``y`` stays round and closes up."""
    n = y.n
    word = _letters(y, n)
    start = round_to_coords(rc, n)
    c = start
    for _ in range(len(round_curves(n))):
        c = act(word, c)
        if c == start:
            return True
        if is_round(c) is None:
            return False
    return False
