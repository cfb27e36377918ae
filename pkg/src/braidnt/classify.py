"""
Nielsen-Thurston classification of braids with checkable certificates.

The pipeline is: central braids (even powers of Delta) are the identity mapping
class and reported reducible; periodicity test on x^(n-1), x^n; search for a power of x whose
sliding circuit is rigid; round / almost-round invariant curve search on powers
of that rigid conjugate; otherwise pseudo-Anosov.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Literal, Union

from .curves import (
    Curve,
    RoundCurve,
    act,
    almost_round_curve,
    find_invariant_almost_round,
    preserves_round_curve,
    round_curves,
    round_to_coords,
)
from .errors import PreconditionError
from .normal_form import (
    CanonicalForm,
    conjugate,
    identity_form,
    invert,
    multiply,
    normal_form,
    power,
)
from .simple import BraidWord, SimpleElement, braid_word
from .sliding import (
    Bounded,
    CycleDetect,
    SlideMode,
    is_rigid,
    mode_name,
    slide_to_circuit,
    sss_descent,
)

Kind = Literal["periodic", "reducible", "pseudo_anosov"]


def default_max_power(n: int) -> int:
    return (n * (n - 1) // 2) ** 3 - 1


@dataclass(frozen=True)
class Config:
    mode: SlideMode = CycleDetect()
    max_power: int | None = None  # None: (n(n-1)/2)^3 - 1

    def power_cap(self, n: int) -> int:
        return default_max_power(n) if self.max_power is None else self.max_power


@dataclass(frozen=True)
class PeriodicCert:
    power: int
    delta_exponent: int


@dataclass(frozen=True)
class ReducibleCert:
    stage: Literal["step2_no_rigid", "step3_curve"]
    power_i: int | None = None
    k: int | None = None
    simple_prefix: SimpleElement | None = None
    round: RoundCurve | None = None
    conjugator: CanonicalForm | None = None
    rigid_element: CanonicalForm | None = None

    def curve(self) -> Curve:
        """The certified curve, invariant under ``rigid_element ** k``."""
        if self.simple_prefix is None:
            return round_to_coords(self.round, self.rigid_element.n)
        return almost_round_curve(self.simple_prefix, self.round)


@dataclass(frozen=True)
class RigidCert:
    power_m: int
    rigid_element: CanonicalForm
    conjugator: CanonicalForm


Certificate = Union[PeriodicCert, ReducibleCert, RigidCert]


@dataclass
class Classification:
    kind: Kind
    certificate: Certificate
    stats: dict = field(default_factory=dict)

    @property
    def under_power_cap(self) -> bool:
        return bool(self.stats.get("under_power_cap"))


def is_central(x: CanonicalForm) -> bool:
    """Even powers of Delta (the identity included) generate the centre."""
    return x.is_delta_power and x.p % 2 == 0


def is_periodic(x: CanonicalForm) -> PeriodicCert | None:
    """Certificate that x^(n-1) or x^n is a power of Delta, if either is."""
    n = x.n
    xk = power(x, n - 1)
    if xk.is_delta_power:
        return PeriodicCert(n - 1, xk.p)
    xk = multiply(xk, x)
    if xk.is_delta_power:
        return PeriodicCert(n, xk.p)
    return None


def step2_find_rigid_power(
    x: CanonicalForm, cfg: Config = Config(), stats: dict | None = None
) -> tuple[int, CanonicalForm, CanonicalForm] | None:
    """First power x^i (i <= cap) whose sliding circuit contains a rigid braid.

    Returns ``(i, z, c)`` with ``z = c^-1 x^i c`` rigid, or None.
    """
    stats = {} if stats is None else stats
    xi = None
    for i in range(1, cfg.power_cap(x.n) + 1):
        xi = x if xi is None else multiply(xi, x)
        stats["powers"] = i
        y, w = sss_descent(xi, stats)
        traj = slide_to_circuit(y, cfg.mode, stats)
        if isinstance(cfg.mode, Bounded):
            if is_rigid(traj.final):
                return i, traj.final, multiply(w, traj.conjugator)
            continue
        for idx in range(traj.cycle_entry, traj.cycle_entry + traj.period):
            z = traj.steps[idx][0]
            if is_rigid(z):
                return i, z, multiply(w, traj.conjugator_to(idx))
    return None


def step3_curve_search(
    z: CanonicalForm, stats: dict | None = None
) -> tuple[int, SimpleElement | None, RoundCurve] | None:
    """Search k = 1..n for a round, then almost-round, curve fixed by z^k.

    Returns ``(k, s, round)``; ``s`` is None for a round witness.
    """
    if not is_rigid(z):
        raise PreconditionError("curve search needs a rigid braid")
    zk = None
    for k in range(1, z.n + 1):
        zk = z if zk is None else multiply(zk, z)
        rc = preserves_round_curve(zk, stats)
        if rc is not None:
            return k, None, rc
        hit = find_invariant_almost_round(zk, stats)
        if hit is not None:
            return k, hit[0], hit[1]
    return None


def classify(w: BraidWord | CanonicalForm, cfg: Config = Config()) -> Classification:
    t0 = time.perf_counter()
    x = w if isinstance(w, CanonicalForm) else normal_form(w)
    n = x.n
    stats: dict = {"slidings": 0, "powers": 0, "curves_tested": 0, "mode": mode_name(cfg.mode)}

    def done(kind: Kind, cert: Certificate) -> Classification:
        stats["wall_ms"] = (time.perf_counter() - t0) * 1000.0
        return Classification(kind, cert, stats)

    if n == 2:
        # B_2 is generated by sigma_1 = Delta, so every element is a power of Delta.
        return done("periodic", PeriodicCert(1, x.p))

    if is_central(x):
        # A central braid is the identity mapping class; every round curve is fixed,
        # so report the reduction with the first one as witness (x is rigid, k = 1).
        rc = round_curves(n)[0]
        return done("reducible", ReducibleCert("step3_curve", 1, 1, None, rc, identity_form(n), x))

    cert = is_periodic(x)
    if cert is not None:
        return done("periodic", cert)

    cap = cfg.power_cap(n)
    found = step2_find_rigid_power(x, cfg, stats)
    if found is None:
        stats["power_cap"] = cap
        stats["under_power_cap"] = cap < default_max_power(n)
        return done("reducible", ReducibleCert("step2_no_rigid"))
    i, z, conj = found

    hit = step3_curve_search(z, stats)
    if hit is not None:
        k, s, rc = hit
        return done(
            "reducible",
            ReducibleCert("step3_curve", i, k, s, rc, conj, z),
        )
    return done("pseudo_anosov", RigidCert(i, z, conj))


def verify_certificate(x: BraidWord | CanonicalForm, result: Classification) -> bool:
    """Re-check a certificate by direct computation."""
    x = x if isinstance(x, CanonicalForm) else normal_form(x)
    cert = result.certificate
    if isinstance(cert, PeriodicCert):
        if x.n > 2 and cert.power not in (x.n - 1, x.n):
            return False
        xp = power(x, cert.power)
        if x.n > 2 and is_central(x):
            return False
        return result.kind == "periodic" and xp.is_delta_power and xp.p == cert.delta_exponent
    if isinstance(cert, RigidCert):
        z = conjugate(power(x, cert.power_m), cert.conjugator)
        return result.kind == "pseudo_anosov" and z == cert.rigid_element and is_rigid(z)
    if isinstance(cert, ReducibleCert):
        if result.kind != "reducible":
            return False
        if cert.stage == "step2_no_rigid":
            return not is_central(x) and is_periodic(x) is None
        z = cert.rigid_element
        if conjugate(power(x, cert.power_i), cert.conjugator) != z or not is_rigid(z):
            return False
        c = cert.curve()
        if act(power(z, cert.k), c) != c:
            return False
        # pulled back through the conjugator, the curve is fixed by x^(i k)
        pulled = act(invert(cert.conjugator), c)
        return act(power(x, cert.power_i * cert.k), pulled) == pulled
    return False


def classify_word(n: int, letters, cfg: Config = Config()) -> Classification:
    return classify(braid_word(n, letters), cfg)
