"""Run records, JSON serialisation, and the scaling / sliding-length harnesses."""

from __future__ import annotations

import csv
import io
import json
import math
import random
import statistics
from dataclasses import dataclass, field
from typing import Any, Iterable

from .classify import (
    Classification,
    Config,
    PeriodicCert,
    ReducibleCert,
    RigidCert,
    classify,
)
from .curves import RoundCurve, is_round
from .normal_form import CanonicalForm, normal_form
from .simple import BraidWord, SimpleElement, braid_word
from .sliding import CycleDetect, slide_to_circuit, sss_descent


# --- serialisation ----------------------------------------------------------

def form_to_json(x: CanonicalForm) -> dict:
    return {"p": x.p, "factors": [list(f.perm) for f in x.factors]}


def form_from_json(n: int, d: dict) -> CanonicalForm:
    return CanonicalForm(n, d["p"], tuple(SimpleElement.from_images(f) for f in d["factors"]))


def cert_to_json(cert) -> dict:
    if isinstance(cert, PeriodicCert):
        return {"certificate": "periodic", "power": cert.power, "delta_exponent": cert.delta_exponent}
    if isinstance(cert, RigidCert):
        return {
            "certificate": "rigid",
            "power_m": cert.power_m,
            "rigid_element": form_to_json(cert.rigid_element),
            "conjugator": form_to_json(cert.conjugator),
        }
    out: dict[str, Any] = {"certificate": "reducible", "stage": cert.stage}
    if cert.stage == "step3_curve":
        curve = cert.curve()
        rc = is_round(curve)
        out.update(
            power_i=cert.power_i,
            k=cert.k,
            simple_prefix=None if cert.simple_prefix is None else list(cert.simple_prefix.perm),
            round=[cert.round.lo, cert.round.hi],
            conjugator=form_to_json(cert.conjugator),
            rigid_element=form_to_json(cert.rigid_element),
            curve={"coords": list(curve.coords), "round": None if rc is None else [rc.lo, rc.hi]},
        )
    return out


def cert_from_json(n: int, d: dict):
    tag = d["certificate"]
    if tag == "periodic":
        return PeriodicCert(d["power"], d["delta_exponent"])
    if tag == "rigid":
        return RigidCert(
            d["power_m"], form_from_json(n, d["rigid_element"]), form_from_json(n, d["conjugator"])
        )
    if d["stage"] == "step2_no_rigid":
        return ReducibleCert("step2_no_rigid")
    s = d["simple_prefix"]
    return ReducibleCert(
        "step3_curve",
        d["power_i"],
        d["k"],
        None if s is None else SimpleElement.from_images(s),
        RoundCurve(*d["round"]),
        form_from_json(n, d["conjugator"]),
        form_from_json(n, d["rigid_element"]),
    )


@dataclass
class RunRecord:
    n: int
    word: list[int]
    kind: str
    certificate: Any
    stats: dict = field(default_factory=dict)

    @classmethod
    def from_classification(cls, w: BraidWord, result: Classification) -> "RunRecord":
        return cls(w.n, list(w.letters), result.kind, result.certificate, dict(result.stats))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "word": list(self.word),
            **cert_to_json(self.certificate),
            "stats": self.stats,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> "RunRecord":
        d = json.loads(text)
        n = d.pop("n")
        word = d.pop("word")
        kind = d.pop("kind")
        stats = d.pop("stats", {})
        return cls(n, word, kind, cert_from_json(n, d), stats)


# --- harnesses --------------------------------------------------------------

def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    gens = [g for i in range(1, n) for g in (i, -i)]
    return braid_word(n, [rng.choice(gens) for _ in range(length)])


def sample_rng(seed: int, n: int, length: int, index: int) -> random.Random:
    return random.Random(f"{seed}:{n}:{length}:{index}")


def loglog_slope(xs: Iterable[float], ys: Iterable[float]) -> float:
    pts = [(math.log(x), math.log(y)) for x, y in zip(xs, ys) if x > 0 and y > 0]
    if len({p[0] for p in pts}) < 2:
        return math.nan
    return statistics.linear_regression([p[0] for p in pts], [p[1] for p in pts]).slope


BENCH_HEADER = ["n", "L", "median_braid_len", "median_wall_ms", "median_slidings"]


def bench_rows(n: int, lengths: list[int], samples: int, seed: int, cfg: Config = Config()) -> list[dict]:
    rows = []
    for L in lengths:
        if samples <= 0:
            continue
        blen, times, slides = [], [], []
        for k in range(samples):
            w = random_word(n, L, sample_rng(seed, n, L, k))
            x = normal_form(w)
            result = classify(x, cfg)
            blen.append(x.braid_length)
            times.append(result.stats["wall_ms"])
            slides.append(result.stats["slidings"])
        rows.append(
            {
                "n": n,
                "L": L,
                "median_braid_len": statistics.median(blen),
                "median_wall_ms": statistics.median(times),
                "median_slidings": statistics.median(slides),
            }
        )
    return rows


def bench_slope(rows: list[dict]) -> float:
    return loglog_slope([r["median_braid_len"] for r in rows], [r["median_wall_ms"] for r in rows])


CONJECTURE_HEADER = ["n", "L", "sample", "r", "braid_len", "t", "cycle_entry", "period"]


def conjecture_rows(n: int, lengths: list[int], samples: int, seed: int) -> list[dict]:
    rows = []
    for L in lengths:
        for k in range(samples):
            w = random_word(n, L, sample_rng(seed, n, L, k))
            y, _ = sss_descent(normal_form(w))
            rows.append(conjecture_row(y, L, k))
    return rows


def conjecture_row(y: CanonicalForm, L: int = 0, k: int = 0) -> dict:
    """Sliding statistics of a super summit element; ``t`` is the first repeat index."""
    traj = slide_to_circuit(y, CycleDetect())
    return {
        "n": y.n,
        "L": L,
        "sample": k,
        "r": y.canonical_length,
        "braid_len": y.braid_length,
        "t": traj.slidings,
        "cycle_entry": traj.cycle_entry,
        "period": traj.period,
    }


def to_csv(header: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()
