"""
Brute-force ground truth for small braids.

The super summit set is reached by classical cycling and decycling (no cyclic
sliding involved) and then closed under conjugation by every simple element.
A non-periodic braid is reducible exactly when some element of its super summit
set preserves a family of round curves. Central braids act as the identity on
curves and count as reducible, matching the classifier.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .classify import Kind, is_central, is_periodic
from .curves import orbit_is_round_family, round_curves
from .errors import OracleCapacityError
from .normal_form import CanonicalForm, conjugate_by_simple, multiply, normal_form
from .simple import BraidWord, all_simples, tau

DEFAULT_CAP = 20000


@dataclass(frozen=True)
class SSSSet:
    elements: frozenset[CanonicalForm]
    inf: int
    sup: int


def cycling(x: CanonicalForm) -> CanonicalForm:
    """Conjugate ``x`` by ``tau^-p(x_1)``, moving the first factor to the end."""
    if not x.factors:
        return x
    return conjugate_by_simple(x, tau(x.factors[0], -x.p))


def decycling(x: CanonicalForm) -> CanonicalForm:
    """Conjugate ``x`` by ``x_r^-1``, moving the last factor to the front."""
    if not x.factors:
        return x
    last = CanonicalForm(x.n, 0, (x.factors[-1],))
    head = CanonicalForm(x.n, x.p, x.factors[:-1])
    return multiply(last, head)


def super_summit_element(x: CanonicalForm) -> CanonicalForm:
    """Some element of SSS(x), by iterated cycling then decycling."""
    bound = x.n * (x.n - 1) // 2
    y = x
    while True:
        z = _improve(y, cycling, bound, lambda a, b: a.inf > b.inf)
        z = _improve(z, decycling, bound, lambda a, b: a.sup < b.sup)
        if (z.inf, z.sup) == (y.inf, y.sup):
            return z
        y = z


def _improve(y, move, bound, better):
    while True:
        z = y
        for _ in range(bound):
            z = move(z)
            if better(z, y):
                y = z
                break
        else:
            return y


def enumerate_sss(x: CanonicalForm, cap: int = DEFAULT_CAP) -> SSSSet:
    seed = super_summit_element(x)
    simples = [s for s in all_simples(x.n) if not s.is_trivial]
    seen = {seed}
    queue = deque([seed])
    while queue:
        y = queue.popleft()
        for s in simples:
            z = conjugate_by_simple(y, s)
            if z.inf != seed.inf or z.sup != seed.sup or z in seen:
                continue
            seen.add(z)
            if len(seen) > cap:
                raise OracleCapacityError(f"super summit set exceeds {cap} elements")
            queue.append(z)
    return SSSSet(frozenset(seen), seed.inf, seed.sup)


def oracle_classify(w: BraidWord | CanonicalForm, cap: int = DEFAULT_CAP) -> Kind:
    x = w if isinstance(w, CanonicalForm) else normal_form(w)
    if x.n == 2:
        return "periodic"
    if is_central(x):
        return "reducible"
    if is_periodic(x) is not None:
        return "periodic"
    sss = enumerate_sss(x, cap)
    rounds = round_curves(x.n)
    for y in sss.elements:
        if any(orbit_is_round_family(y, rc) for rc in rounds):
            return "reducible"
    return "pseudo_anosov"
