"""Deterministic, pole-free sample points.

Every draw is a pure function of the seed, the identity id, the grid cell and
the attempt counter: those are hashed into the seed of a private
``random.Random`` so that cells can be computed in any order or process.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .qalg import ParamPoint
from .registry import IdentitySpec, SearPoint, eval_lhs, eval_rhs_closed, eval_rhs_derived
from .scalar import ConstraintError, PoleError

_MAGNITUDES = ("1/2", "1/3", "2/3", "2/5", "3/5", "2", "3/2", "5/3")
DEFAULT_POOL: tuple[Fraction, ...] = tuple(
    sign * Fraction(x) for x in _MAGNITUDES for sign in (1, -1)
)


class SamplingExhausted(RuntimeError):
    """No pole-free point was found within the resample budget."""

    def __init__(self, identity_id: str, attempts: int, last_error: str):
        super().__init__(f"{identity_id}: no pole-free point after {attempts} attempts ({last_error})")
        self.identity_id = identity_id
        self.attempts = attempts
        self.last_error = last_error


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    pool: tuple[Fraction, ...] = DEFAULT_POOL
    max_resamples: int = 100

    def __post_init__(self):
        pool = tuple(Fraction(x) for x in self.pool)
        if not pool:
            raise ValueError("sample pool is empty")
        if any(x == 0 or abs(x) == 1 for x in pool):
            raise ValueError("sample pool must exclude 0 and ±1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.max_resamples < 1:
            raise ValueError("max_resamples must be positive")
        object.__setattr__(self, "pool", pool)


@dataclass
class Draw:
    point: ParamPoint | SearPoint
    resamples: int
    lhs: Fraction
    rhs_closed: Fraction
    rhs_derived: Fraction | None
    derived_note: str | None = field(default=None)


def _rng(cfg: SampleConfig, spec: IdentitySpec, n: int, ell: int, m: int, index: int, attempt: int) -> random.Random:
    key = f"{cfg.seed}:{spec.id}:{n}:{ell}:{m}:{index}:{attempt}".encode()
    return random.Random(int.from_bytes(hashlib.sha256(key).digest()[:8], "big"))


def candidate(cfg: SampleConfig, spec: IdentitySpec, n: int, ell: int, m: int, index: int = 0, attempt: int = 0):
    """The point tried at ``attempt``; signs come from the pool itself."""
    rng = _rng(cfg, spec, n, ell, m, index, attempt)
    pick = lambda: rng.choice(cfg.pool)  # noqa: E731
    if spec.point_kind == "param":
        return ParamPoint(pick(), pick(), pick(), n, ell, m)
    return SearPoint(pick(), pick(), pick(), pick(), pick(), pick(), n)


def trial(spec: IdentitySpec, point) -> Draw:
    """Evaluate all three paths; raises PoleError if any of them hits a pole.

    A side condition failing inside the derived pipeline is not a pole: the
    derived value is dropped and the reason kept in ``derived_note``.
    """
    lhs = eval_lhs(spec, point)
    closed = eval_rhs_closed(spec, point)
    note = None
    try:
        derived = eval_rhs_derived(spec, point)
    except ConstraintError as exc:
        derived, note = None, str(exc)
    return Draw(point, 0, lhs, closed, derived, note)


def draw_evaluated(cfg: SampleConfig, spec: IdentitySpec, n: int, ell: int, m: int, index: int = 0) -> Draw:
    """First pole-free candidate together with its three values."""
    bad = spec.cell_violations(n, ell, m)
    if bad:
        raise ConstraintError(f"{spec.id}: requires {', '.join(bad)}")
    last = ""
    for attempt in range(cfg.max_resamples):
        point = candidate(cfg, spec, n, ell, m, index, attempt)
        try:
            got = trial(spec, point)
        except PoleError as exc:
            last = str(exc)
            continue
        got.resamples = attempt
        return got
    raise SamplingExhausted(spec.id, cfg.max_resamples, last)


def draw_point(cfg: SampleConfig, n: int, ell: int, m: int, spec: IdentitySpec, index: int = 0):
    """A point where the left side, closed form and derived value all evaluate."""
    return draw_evaluated(cfg, spec, n, ell, m, index).point
