from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Optional, Union

from ..qalg import ParamPoint
from ..scalar import ConstraintError, PoleError

FAMILIES = ("base", "watson", "dixon", "whipple", "relation", "equivalence", "example")


@dataclass(frozen=True)
class SearPoint:
    """Free parameters for the five-parameter transformations.

    For the terminating 6phi5 summation ``a`` holds the square root of the
    series parameter ``a`` and ``d``, ``e`` are unused.
    """

    rho: Fraction
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    n: int = 0

    @property
    def q(self) -> Fraction:
        return self.rho * self.rho

    def as_dict(self) -> dict:
        from ..scalar import fmt

        out = {k: fmt(getattr(self, k)) for k in ("rho", "a", "b", "c", "d", "e")}
        out["q"] = fmt(self.q)
        out["n"] = self.n
        return out


Point = Union[ParamPoint, SearPoint]
Evaluator = Callable[[Point], Fraction]


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    paper_label: str
    family: str
    lhs: Evaluator
    rhs_closed: Evaluator
    rhs_derived: Optional[Evaluator] = None
    # u = signs[0] * ell, v = signs[1] * m
    signs: tuple[int, int] = (0, 0)
    # None means the parameter ranges over the grid; an int pins it
    ell_fixed: Optional[int] = 0
    m_fixed: Optional[int] = 0
    m_le_n: bool = False
    ell_le_n: bool = False
    n_min: int = 0
    parent: Optional[str] = None
    point_kind: str = "param"
    order: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    def cell_violations(self, n: int, ell: int = 0, m: int = 0) -> list[str]:
        """Side conditions broken by the grid cell ``(n, ell, m)``."""
        out = []
        if n < self.n_min:
            out.append(f"n>={self.n_min}")
        if self.point_kind == "param":
            if self.ell_fixed is not None and ell != self.ell_fixed:
                out.append(f"ell={self.ell_fixed}")
            if self.m_fixed is not None and m != self.m_fixed:
                out.append(f"m={self.m_fixed}")
            if self.m_le_n and m > n:
                out.append("m<=n")
            if self.ell_le_n and ell > n:
                out.append("ell<=n")
        return out

    def violations(self, p: Point) -> list[str]:
        if isinstance(p, ParamPoint):
            return self.cell_violations(p.n, p.ell, p.m)
        return self.cell_violations(p.n)

    def constraints(self, p: Point) -> bool:
        return not self.violations(p)

    def constraint_summary(self) -> str:
        parts = []
        if self.ell_fixed is not None and self.ell_fixed != 0:
            parts.append(f"ell={self.ell_fixed}")
        if self.m_fixed is not None and self.m_fixed != 0:
            parts.append(f"m={self.m_fixed}")
        if self.m_le_n:
            parts.append("m<=n")
        if self.ell_le_n:
            parts.append("ell<=n")
        if self.n_min:
            parts.append(f"n>={self.n_min}")
        return ",".join(parts) or "-"

    def bind(self, p: Point) -> Point:
        """Set the signed extras ``u``, ``v`` from ``ell``, ``m``."""
        if isinstance(p, ParamPoint):
            return replace(p, u=self.signs[0] * p.ell, v=self.signs[1] * p.m)
        return p

    def ell_values(self, ell_range) -> list[int]:
        return list(ell_range) if self.ell_fixed is None else [self.ell_fixed]

    def m_values(self, m_range) -> list[int]:
        return list(m_range) if self.m_fixed is None else [self.m_fixed]


def _run(spec: IdentitySpec, fn: Evaluator, p: Point, what: str) -> Fraction:
    bad = spec.violations(p)
    if bad:
        raise ConstraintError(f"{spec.id}: requires {', '.join(bad)}")
    try:
        return fn(spec.bind(p))
    except PoleError as exc:
        raise PoleError(f"{spec.id} {what}: {exc.where}") from exc
    except ZeroDivisionError as exc:
        raise PoleError(f"{spec.id} {what}: {exc}") from exc


def eval_lhs(spec: IdentitySpec, p: Point) -> Fraction:
    return _run(spec, spec.lhs, p, "lhs")


def eval_rhs_closed(spec: IdentitySpec, p: Point) -> Fraction:
    return _run(spec, spec.rhs_closed, p, "rhs_closed")


def eval_rhs_derived(spec: IdentitySpec, p: Point) -> Optional[Fraction]:
    if spec.rhs_derived is None:
        return None
    return _run(spec, spec.rhs_derived, p, "rhs_derived")


_REGISTRY: dict[str, IdentitySpec] = {}


def register(spec: IdentitySpec) -> IdentitySpec:
    if spec.id in _REGISTRY:
        raise ValueError(f"duplicate identity id {spec.id!r}")
    _REGISTRY[spec.id] = spec
    return spec


def unregister(identity_id: str) -> None:
    _REGISTRY.pop(identity_id, None)


def get(identity_id: str) -> IdentitySpec:
    try:
        return _REGISTRY[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None


def roster() -> list[IdentitySpec]:
    return [_REGISTRY[k] for k in sorted(_REGISTRY)]


def cited(identity_id: str) -> Evaluator:
    """Closed form of another registered identity, used inside proof pipelines.

    The caller supplies a fully transformed point (``u``, ``v`` already set).
    """

    def evaluate(p: Point) -> Fraction:
        spec = _REGISTRY[identity_id]
        bad = spec.violations(p)
        if bad:
            raise ConstraintError(f"{identity_id} at transformed point: requires {', '.join(bad)}")
        return spec.rhs_closed(p)

    return evaluate
