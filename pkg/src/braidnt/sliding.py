"""
Cyclic sliding: preferred prefixes, super summit descent, rigidity and
sliding-circuit detection, all with the conjugating element tracked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .normal_form import CanonicalForm, _Normalizer, conjugate_by_simple
from .simple import SimpleElement, identity, meet, right_complement, tau


@dataclass(frozen=True)
class CycleDetect:
    """Slide until the first element repeats."""


@dataclass(frozen=True)
class Bounded:
    """Slide exactly ``K * |x|`` times."""

    K: int

    def __post_init__(self):
        if self.K <= 0:
            raise ValueError("bounded mode needs a positive K")


SlideMode = Union[CycleDetect, Bounded]


def parse_mode(text: str) -> SlideMode:
    """``cycle-detect`` or ``bounded:K``."""
    if text in ("cycle-detect", "cycle_detect"):
        return CycleDetect()
    if text.startswith("bounded:"):
        return Bounded(int(text.split(":", 1)[1]))
    raise ValueError(f"unknown sliding mode {text!r}")


def mode_name(mode: SlideMode) -> str:
    return f"bounded:{mode.K}" if isinstance(mode, Bounded) else "cycle-detect"


@dataclass
class Trajectory:
    """Iterated cyclic slidings of ``start``.

    ``steps[k]`` is ``(element_k, prefix_k)`` with ``element_0 == start`` and
    ``element_{k+1} = prefix_k^-1 element_k prefix_k``. ``final`` is the element
    reached after the last step and ``conjugator`` the product of all prefixes,
    so ``final == conjugator^-1 start conjugator``.
    """

    start: CanonicalForm
    steps: list[tuple[CanonicalForm, SimpleElement]] = field(default_factory=list)
    cycle_entry: int | None = None
    period: int | None = None
    final: CanonicalForm | None = None
    conjugator: CanonicalForm | None = None

    @property
    def slidings(self) -> int:
        return len(self.steps)

    def circuit(self) -> list[CanonicalForm]:
        """Elements of the detected circuit, in sliding order."""
        if self.cycle_entry is None:
            return []
        return [e for e, _ in self.steps[self.cycle_entry:self.cycle_entry + self.period]]

    def conjugator_to(self, index: int) -> CanonicalForm:
        """Product of the first ``index`` prefixes (conjugates start to element ``index``)."""
        acc = _Normalizer(self.start.n)
        acc.extend(t for _, t in self.steps[:index])
        return acc.result()


def preferred_prefix(x: CanonicalForm) -> SimpleElement:
    if not x.factors:
        return identity(x.n)
    return meet(tau(x.factors[0], -x.p), right_complement(x.factors[-1]))


def cyclic_sliding(x: CanonicalForm) -> tuple[CanonicalForm, SimpleElement]:
    t = preferred_prefix(x)
    if t.is_trivial:
        return x, t
    return conjugate_by_simple(x, t), t


def is_rigid(x: CanonicalForm) -> bool:
    return preferred_prefix(x).is_trivial


def sss_window(n: int) -> int:
    """Slidings without a length drop after which an element is super summit."""
    return n * (n - 1) // 2 - 1


def sss_descent(x: CanonicalForm, stats: dict | None = None) -> tuple[CanonicalForm, CanonicalForm]:
    """Slide until ``n(n-1)/2 - 1`` consecutive slidings give no length drop.

    Returns ``(y, w)`` with ``y = w^-1 x w`` in the super summit set of ``x``.
    """
    window = sss_window(x.n)
    acc = _Normalizer(x.n)
    y = x
    quiet = 0
    count = 0
    while quiet < window:
        y2, t = cyclic_sliding(y)
        count += 1
        acc.append(t)
        if y2.canonical_length < y.canonical_length:
            quiet = 0
        else:
            quiet += 1
        y = y2
    if stats is not None:
        stats["slidings"] = stats.get("slidings", 0) + count
    return y, acc.result()


def slide_to_circuit(
    x: CanonicalForm, mode: SlideMode = CycleDetect(), stats: dict | None = None
) -> Trajectory:
    traj = Trajectory(start=x)
    seen = {x: 0}
    acc = _Normalizer(x.n)
    budget = mode.K * x.braid_length if isinstance(mode, Bounded) else None
    y = x
    while True:
        if budget is not None and len(traj.steps) >= budget:
            break
        y2, t = cyclic_sliding(y)
        traj.steps.append((y, t))
        acc.append(t)
        y = y2
        k = len(traj.steps)
        if y in seen:
            if traj.cycle_entry is None:
                traj.cycle_entry = seen[y]
                traj.period = k - seen[y]
            if budget is None:
                break
        else:
            seen[y] = k
    traj.final = y
    traj.conjugator = acc.result()
    if stats is not None:
        stats["slidings"] = stats.get("slidings", 0) + len(traj.steps)
    return traj

