"""Finite models of a carrier acted on by a family of binary operations.

A model is a carrier S = {0, ..., n-1} together with an operator set
Gamma = {0, ..., m-1} and a total operation table sending (x, k, y) to
the product x *_k y.  Everything in this module is decided by plain
exhaustive sweeps over the finite table; the predicates here are the
ground truth the rest of the package is tested against.

Laws checked (universally quantified over elements x, y, z, ... and
operators a, b, c taken from Gamma):

  left invertive   (x a y) b z == (z a y) b x
  medial           (x a y) b (l c m) == (x a l) b (y c m)
  ag-star-star      x a (y b z) == y a (x b z)
  paramedial       (x a y) b (l c m) == (m a l) b (y c x)

A model satisfying the left invertive law is called left invertive
throughout; one additionally satisfying the ag-star-star law is the
"strong" variant most of the theorem suite is stated for.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Iterable, Optional, Sequence


def _default_element_labels(n: int) -> tuple[str, ...]:
    # a, b, ..., z then x26, x27, ...
    out = []
    for i in range(n):
        out.append(chr(ord("a") + i) if i < 26 else f"x{i}")
    return tuple(out)


def _default_gamma_labels(m: int) -> tuple[str, ...]:
    return tuple(f"g{k}" for k in range(m))


@dataclass(frozen=True)
class GammaGroupoid:
    """Immutable finite model: carrier size, operator count, flat table.

    The table is stored flat with entry (x *_k y) at index (x*m + k)*n + y.
    Labels are presentation only; all computation is on indices.
    """

    n: int
    m: int
    table: tuple[int, ...]
    element_labels: tuple[str, ...] = ()
    gamma_labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("carrier must be non-empty")
        if self.m < 1:
            raise ValueError("operator set must be non-empty")
        if len(self.table) != self.n * self.n * self.m:
            raise ValueError(
                f"table has {len(self.table)} entries, expected n*n*m = {self.n * self.n * self.m}"
            )
        for v in self.table:
            if not (0 <= v < self.n):
                raise ValueError(f"table entry {v} out of range 0..{self.n - 1}")
        if not self.element_labels:
            object.__setattr__(self, "element_labels", _default_element_labels(self.n))
        elif len(self.element_labels) != self.n:
            raise ValueError("need one label per element")
        if not self.gamma_labels:
            object.__setattr__(self, "gamma_labels", _default_gamma_labels(self.m))
        elif len(self.gamma_labels) != self.m:
            raise ValueError("need one label per operator")

    @classmethod
    def from_tables(
        cls,
        tables: Sequence[Sequence[Sequence[int]]],
        element_labels: Sequence[str] = (),
        gamma_labels: Sequence[str] = (),
    ) -> "GammaGroupoid":
        """Build from one n-by-n row-major table per operator."""
        m = len(tables)
        if m == 0:
            raise ValueError("operator set must be non-empty")
        n = len(tables[0])
        flat = []
        for k, t in enumerate(tables):
            if len(t) != n or any(len(row) != n for row in t):
                raise ValueError(f"table {k} is not {n}x{n}")
        for i in range(n):
            for k in range(m):
                flat.extend(tables[k][i])
        return cls(n, m, tuple(flat), tuple(element_labels), tuple(gamma_labels))

    def product(self, x: int, k: int, y: int) -> int:
        """x *_k y.  Raises ValueError on out-of-range indices."""
        if not (0 <= x < self.n and 0 <= y < self.n):
            raise ValueError(f"element index out of range 0..{self.n - 1}")
        if not (0 <= k < self.m):
            raise ValueError(f"operator index out of range 0..{self.m - 1}")
        return self.table[(x * self.m + k) * self.n + y]

    def tables(self) -> list[list[list[int]]]:
        """Nested view: tables()[k][x][y] == x *_k y."""
        n, m = self.n, self.m
        return [
            [[self.table[(x * m + k) * n + y] for y in range(n)] for x in range(n)]
            for k in range(m)
        ]


@dataclass(frozen=True)
class LawCheck:
    """Outcome of one law sweep.  Truthy iff the law holds.

    On failure, `witness` is the lexicographically least failing
    instantiation; its component order is documented per law below.
    """

    law: str
    holds: bool
    witness: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.holds


def is_left_invertive(g: GammaGroupoid) -> LawCheck:
    """(x a y) b z == (z a y) b x for all x, y, z, a, b.

    Witness order on failure: (x, y, z, a, b).
    """
    n, m, t = g.n, g.m, g.table
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for a in range(m):
                    xy = t[(x * m + a) * n + y]
                    zy = t[(z * m + a) * n + y]
                    for b in range(m):
                        if t[(xy * m + b) * n + z] != t[(zy * m + b) * n + x]:
                            return LawCheck("left-invertive", False, (x, y, z, a, b))
    return LawCheck("left-invertive", True)


def is_medial(g: GammaGroupoid) -> LawCheck:
    """(x a y) b (l c m) == (x a l) b (y c m).

    Witness order on failure: (x, y, l, m, a, b, c).
    """
    n, m_, t = g.n, g.m, g.table
    for x in range(n):
        for y in range(n):
            for l in range(n):
                for w in range(n):
                    for a in range(m_):
                        xy = t[(x * m_ + a) * n + y]
                        xl = t[(x * m_ + a) * n + l]
                        for b in range(m_):
                            for c in range(m_):
                                lw = t[(l * m_ + c) * n + w]
                                yw = t[(y * m_ + c) * n + w]
                                if t[(xy * m_ + b) * n + lw] != t[(xl * m_ + b) * n + yw]:
                                    return LawCheck("medial", False, (x, y, l, w, a, b, c))
    return LawCheck("medial", True)


def is_ag_star_star(g: GammaGroupoid) -> LawCheck:
    """x a (y b z) == y a (x b z).

    Witness order on failure: (x, y, z, a, b).
    """
    n, m, t = g.n, g.m, g.table
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for a in range(m):
                    for b in range(m):
                        yz = t[(y * m + b) * n + z]
                        xz = t[(x * m + b) * n + z]
                        if t[(x * m + a) * n + yz] != t[(y * m + a) * n + xz]:
                            return LawCheck("ag-star-star", False, (x, y, z, a, b))
    return LawCheck("ag-star-star", True)


def is_paramedial(g: GammaGroupoid) -> LawCheck:
    """(x a y) b (l c m) == (m a l) b (y c x).

    Witness order on failure: (x, y, l, m, a, b, c).
    """
    n, m_, t = g.n, g.m, g.table
    for x in range(n):
        for y in range(n):
            for l in range(n):
                for w in range(n):
                    for a in range(m_):
                        xy = t[(x * m_ + a) * n + y]
                        wl = t[(w * m_ + a) * n + l]
                        for b in range(m_):
                            for c in range(m_):
                                lw = t[(l * m_ + c) * n + w]
                                yx = t[(y * m_ + c) * n + x]
                                if t[(xy * m_ + b) * n + lw] != t[(wl * m_ + b) * n + yx]:
                                    return LawCheck("paramedial", False, (x, y, l, w, a, b, c))
    return LawCheck("paramedial", True)


def left_identities(g: GammaGroupoid) -> list[int]:
    """All e with e *_k x == x for every operator k and element x, ascending.

    No uniqueness is assumed; callers get the full list.
    """
    n, m, t = g.n, g.m, g.table
    out = []
    for e in range(n):
        if all(t[(e * m + k) * n + x] == x for k in range(m) for x in range(n)):
            out.append(e)
    return out


@dataclass(frozen=True)
class AxiomProfile:
    """Which structural laws a model satisfies, plus its left identities."""

    left_invertive: bool
    medial: bool
    ag_star_star: bool
    paramedial: bool
    left_identities: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {
            "left-invertive": self.left_invertive,
            "medial": self.medial,
            "ag-star-star": self.ag_star_star,
            "paramedial": self.paramedial,
            "left-identities": list(self.left_identities),
        }


def axiom_profile(g: GammaGroupoid) -> AxiomProfile:
    """Sweep all four laws and collect left identities."""
    return AxiomProfile(
        left_invertive=bool(is_left_invertive(g)),
        medial=bool(is_medial(g)),
        ag_star_star=bool(is_ag_star_star(g)),
        paramedial=bool(is_paramedial(g)),
        left_identities=tuple(left_identities(g)),
    )


def all_models(n: int, m: int) -> Iterable[GammaGroupoid]:
    """Every labelled model on a given carrier/operator count, in
    lexicographic table order.  n**(n*n*m) models; small sizes only."""
    for flat in iproduct(range(n), repeat=n * n * m):
        yield GammaGroupoid(n, m, flat)
