"""Catalog of identities with their left sides, closed forms and proof-pipeline oracles."""

from . import base, dixon, examples, watson, whipple
from .spec import (
    FAMILIES,
    IdentitySpec,
    SearPoint,
    eval_lhs,
    eval_rhs_closed,
    eval_rhs_derived,
    get,
    register,
    roster,
    unregister,
)

for _module in (base, watson, dixon, whipple):
    for _spec in _module.ENTRIES:
        register(_spec)
for _spec in examples.build_entries({s.id: s for s in roster()}):
    register(_spec)

__all__ = [
    "FAMILIES",
    "IdentitySpec",
    "SearPoint",
    "eval_lhs",
    "eval_rhs_closed",
    "eval_rhs_derived",
    "get",
    "register",
    "roster",
    "unregister",
]
