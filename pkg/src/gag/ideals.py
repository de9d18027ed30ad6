"""Ideal-like subset classes and the predicates that decide them.

All predicates take a model and a non-empty subset bound to its
carrier; emptiness or a carrier mismatch raises instead of returning
False, so a False answer always means the defining inclusion failed.

Conventions:

  subgroupoid       A*A <= A
  left ideal        S*A <= A
  right ideal       A*S <= A
  two-sided ideal   both
  bi-ideal          subgroupoid and (A*S)*A <= A
  generalized bi    (A*S)*A <= A alone (no subgroupoid requirement)
  interior ideal    subgroupoid and (S*A)*S <= A
  quasi-ideal       (S*A) & (A*S) <= A (no subgroupoid requirement)
  (1,2)-ideal       subgroupoid and (A*S)*(A*A) <= A

Prime, semiprime and strongly irreducible are properties OF two-sided
ideals, quantified over the model's two-sided ideals; they re-verify
their precondition and raise NotAnIdealError when handed anything else.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Callable

from .model import GammaGroupoid
from .subsets import (
    EmptySubsetError,
    Subset,
    all_nonempty_subsets,
    subset_product,
    _check_model_subset,
)


class NotAnIdealError(ValueError):
    """A prime/semiprime/irreducibility check got a non-ideal subset."""


class IdealKind(enum.Enum):
    SUBGROUPOID = "subgroupoid"
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"
    BI = "bi"
    GENERALIZED_BI = "gbi"
    INTERIOR = "interior"
    QUASI = "quasi"
    ONE_TWO = "one-two"

    @classmethod
    def from_cli(cls, name: str) -> "IdealKind":
        for kind in cls:
            if kind.value == name:
                return kind
        raise ValueError(f"unknown ideal kind {name!r}")


def _validated(g: GammaGroupoid, a: Subset) -> None:
    _check_model_subset(g, a)
    if not a:
        raise EmptySubsetError("ideal predicates are defined for non-empty subsets")


def is_subgroupoid(g: GammaGroupoid, a: Subset) -> bool:
    _validated(g, a)
    return subset_product(g, a, a) <= a


def is_left_ideal(g: GammaGroupoid, a: Subset) -> bool:
    _validated(g, a)
    return subset_product(g, Subset.full(g.n), a) <= a


def is_right_ideal(g: GammaGroupoid, a: Subset) -> bool:
    _validated(g, a)
    return subset_product(g, a, Subset.full(g.n)) <= a


def is_two_sided_ideal(g: GammaGroupoid, a: Subset) -> bool:
    _validated(g, a)
    s = Subset.full(g.n)
    return subset_product(g, s, a) <= a and subset_product(g, a, s) <= a


def is_bi_ideal(g: GammaGroupoid, a: Subset) -> bool:
    _validated(g, a)
    if not (subset_product(g, a, a) <= a):
        return False
    asa = subset_product(g, subset_product(g, a, Subset.full(g.n)), a)
    return asa <= a


def is_generalized_bi_ideal(g: GammaGroupoid, a: Subset) -> bool:
    _validated(g, a)
    asa = subset_product(g, subset_product(g, a, Subset.full(g.n)), a)
    return asa <= a


def is_interior_ideal(g: GammaGroupoid, a: Subset) -> bool:
    _validated(g, a)
    if not (subset_product(g, a, a) <= a):
        return False
    s = Subset.full(g.n)
    sas = subset_product(g, subset_product(g, s, a), s)
    return sas <= a


def is_quasi_ideal(g: GammaGroupoid, a: Subset) -> bool:
    _validated(g, a)
    s = Subset.full(g.n)
    return (subset_product(g, s, a) & subset_product(g, a, s)) <= a


def is_one_two_ideal(g: GammaGroupoid, a: Subset) -> bool:
    _validated(g, a)
    if not (subset_product(g, a, a) <= a):
        return False
    lhs = subset_product(g, subset_product(g, a, Subset.full(g.n)), subset_product(g, a, a))
    return lhs <= a


def is_idempotent_subset(g: GammaGroupoid, a: Subset) -> bool:
    """A*A == A (equality, not inclusion)."""
    _validated(g, a)
    return subset_product(g, a, a) == a


_PREDICATES: dict[IdealKind, Callable[[GammaGroupoid, Subset], bool]] = {
    IdealKind.SUBGROUPOID: is_subgroupoid,
    IdealKind.LEFT: is_left_ideal,
    IdealKind.RIGHT: is_right_ideal,
    IdealKind.TWO_SIDED: is_two_sided_ideal,
    IdealKind.BI: is_bi_ideal,
    IdealKind.GENERALIZED_BI: is_generalized_bi_ideal,
    IdealKind.INTERIOR: is_interior_ideal,
    IdealKind.QUASI: is_quasi_ideal,
    IdealKind.ONE_TWO: is_one_two_ideal,
}


def kind_predicate(kind: IdealKind) -> Callable[[GammaGroupoid, Subset], bool]:
    return _PREDICATES[kind]


@lru_cache(maxsize=128)
def ideal_family(g: GammaGroupoid, kind: IdealKind) -> tuple[Subset, ...]:
    """All non-empty subsets of the given kind, canonical order.
    Sweeps the powerset, so the subset capacity cap applies."""
    pred = _PREDICATES[kind]
    return tuple(a for a in all_nonempty_subsets(g) if pred(g, a))


def two_sided_ideals(g: GammaGroupoid) -> tuple[Subset, ...]:
    return ideal_family(g, IdealKind.TWO_SIDED)


def _require_two_sided(g: GammaGroupoid, p: Subset) -> None:
    _validated(g, p)
    if not is_two_sided_ideal(g, p):
        raise NotAnIdealError("expected a two-sided ideal")


def is_prime(g: GammaGroupoid, p: Subset) -> bool:
    """For all two-sided ideals A, B: A*B <= P implies A <= P or B <= P."""
    _require_two_sided(g, p)
    fam = two_sided_ideals(g)
    for a in fam:
        for b in fam:
            if subset_product(g, a, b) <= p and not (a <= p or b <= p):
                return False
    return True


def is_semiprime(g: GammaGroupoid, p: Subset) -> bool:
    """For all two-sided ideals A: A*A <= P implies A <= P."""
    _require_two_sided(g, p)
    for a in two_sided_ideals(g):
        if subset_product(g, a, a) <= p and not (a <= p):
            return False
    return True


def is_strongly_irreducible(g: GammaGroupoid, p: Subset) -> bool:
    """For all two-sided ideals A, B: A & B <= P implies A <= P or B <= P."""
    _require_two_sided(g, p)
    fam = two_sided_ideals(g)
    for a in fam:
        for b in fam:
            if (a & b) <= p and not (a <= p or b <= p):
                return False
    return True


def is_elementwise_semiprime(g: GammaGroupoid, p: Subset) -> bool:
    """For all elements a: {a}*{a} <= P implies a in P.

    This is the element-level reading of semiprimality; the theorem
    suite reports it alongside the ideal-quantified one where the two
    could differ.  P itself is only required to be a non-empty subset.
    """
    _validated(g, p)
    for x in range(g.n):
        sx = Subset.singleton(g.n, x)
        if subset_product(g, sx, sx) <= p and x not in p:
            return False
    return True
