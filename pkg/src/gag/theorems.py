"""Executable structure theorems over a single finite model.

Each check sweeps one universally quantified statement about ideal-like
subsets (or elements) of a model and returns a TheoremReport.  Guards
mirror the statements' hypotheses exactly: a model that is not left
invertive, or misses the ag-star-star law, or (where required) is not
intra-regular, yields skipped, never pass.  Equivalence statements are
split into tagged directions so a failing converse is reported as a
finding rather than an error.

Every fail report carries a Counterexample whose `condition` names the
violated clause; `revalidate_counterexample` re-runs that clause from
scratch against the model and must reproduce the violation bit for bit.
"""

from __future__ import annotations

import enum
import hashlib
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Iterable, Optional, Sequence

from . import ideals
from .fileformat import serialize_model
from .ideals import IdealKind, ideal_family
from .model import GammaGroupoid, axiom_profile
from .regularity import intra_witness, is_intra_regular
from .subsets import Subset, all_nonempty_subsets, square, subset_product

PASS = "pass"
FAIL = "fail"
VACUOUS = "vacuous"
SKIPPED = "skipped"


class TheoremId(enum.Enum):
    JI = "JI"
    JI_COR = "JI_COR"
    KI = "KI"
    KI_COR = "KI_COR"
    AW = "AW"
    AW_COR = "AW_COR"
    JK = "JK"
    LISR = "LISR"
    BIIID = "BIIID"
    T_ONE_TWO = "T_ONE_TWO"
    T_INTERIOR = "T_INTERIOR"
    T_QUASI = "T_QUASI"
    T12 = "T12"
    PLO = "PLO"
    BINT = "BINT"
    QUO = "QUO"
    LI = "LI"
    EQUALIENT = "EQUALIENT"
    II = "II"
    IDL = "IDL"
    IJ = "IJ"
    IFFFF = "IFFFF"
    SLA2 = "SLA2"
    RLT = "RLT"
    RSEMIPRIME_EQ = "RSEMIPRIME_EQ"
    RINTL = "RINTL"
    LRL = "LRL"
    PRIME_IRR = "PRIME_IRR"
    TOTAL_ORDER = "TOTAL_ORDER"
    SEMILATTICE = "SEMILATTICE"
    MINIMAL = "MINIMAL"

    @classmethod
    def from_name(cls, name: str) -> "TheoremId":
        key = name.strip().upper().replace("-", "_")
        try:
            return cls[key]
        except KeyError:
            raise ValueError(f"unknown theorem id {name!r}") from None


@dataclass(frozen=True)
class Counterexample:
    """Violated clause id plus the witnesses that reproduce it.

    `data` is an ordered tuple of (name, value) pairs; subset values are
    stored by extension (sorted member tuple).
    """

    condition: str
    data: tuple[tuple[str, Any], ...]

    def get(self, name: str) -> Any:
        for k, v in self.data:
            if k == name:
                return v
        raise KeyError(name)

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "condition": self.condition,
            "data": {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.data},
        }


@dataclass(frozen=True)
class TheoremReport:
    theorem: TheoremId
    status: str
    reason: Optional[str] = None
    counterexample: Optional[Counterexample] = None
    instances: int = 0
    details: tuple[tuple[str, Any], ...] = ()

    def to_json_obj(self) -> dict[str, Any]:
        out: dict[str, Any] = {"id": self.theorem.value, "status": self.status}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json_obj()
        out["instances-checked"] = self.instances
        if self.details:
            out["details"] = {
                k: (list(v) if isinstance(v, tuple) else v) for k, v in self.details
            }
        return out


def _ext(a: Subset) -> tuple[int, ...]:
    return a.members()


def _sub(g: GammaGroupoid, ext: Iterable[int]) -> Subset:
    return Subset.from_members(g.n, ext)


class _Ctx:
    """Per-model caches shared by the checks of one suite run."""

    def __init__(self, g: GammaGroupoid):
        self.g = g
        self.s = Subset.full(g.n)
        self.profile = axiom_profile(g)
        self.intra = is_intra_regular(g) if self.profile.left_invertive else None

    def prod(self, a: Subset, b: Subset) -> Subset:
        return subset_product(self.g, a, b)

    def family(self, kind: IdealKind) -> tuple[Subset, ...]:
        return ideal_family(self.g, kind)

    def subsets(self) -> list[Subset]:
        return all_nonempty_subsets(self.g)

    def intra_holds(self) -> bool:
        return self.intra is not None and self.intra.holds

    def first_offender(self) -> int:
        assert self.intra is not None
        return self.intra.offenders[0]


@lru_cache(maxsize=8)
def _ctx(g: GammaGroupoid) -> _Ctx:
    return _Ctx(g)


def _guard(ctx: _Ctx, need_intra: bool) -> Optional[str]:
    if not ctx.profile.left_invertive:
        return "left invertive law fails"
    if not ctx.profile.ag_star_star:
        return "ag-star-star law fails"
    if need_intra and not ctx.intra_holds():
        return "model is not intra-regular"
    return None


def _skipped(tid: TheoremId, reason: str) -> TheoremReport:
    return TheoremReport(tid, SKIPPED, reason=reason)


def _fail(tid: TheoremId, condition: str, data: Sequence[tuple[str, Any]],
          instances: int, details: Sequence[tuple[str, Any]] = ()) -> TheoremReport:
    return TheoremReport(
        tid, FAIL, counterexample=Counterexample(condition, tuple(data)),
        instances=instances, details=tuple(details),
    )


def _pass(tid: TheoremId, instances: int,
          details: Sequence[tuple[str, Any]] = ()) -> TheoremReport:
    return TheoremReport(tid, PASS, instances=instances, details=tuple(details))


# --- revalidation registry -------------------------------------------------

_REVALIDATORS: dict[str, Callable[[GammaGroupoid, dict[str, Any]], bool]] = {}


def _revalidator(condition: str):
    def deco(fn):
        _REVALIDATORS[condition] = fn
        return fn
    return deco


def revalidate_counterexample(g: GammaGroupoid, cx: Counterexample) -> bool:
    """Re-run the violated clause from scratch; True iff it reproduces."""
    data = {k: (tuple(v) if isinstance(v, (list, tuple)) else v) for k, v in cx.data}
    return _REVALIDATORS[cx.condition](g, data)


# --- hypothesis-style results ----------------------------------------------

def _sga_all(ctx: _Ctx) -> bool:
    return all(ctx.prod(ctx.s, Subset.singleton(ctx.g.n, a)) == ctx.s for a in range(ctx.g.n))


def _ags_all(ctx: _Ctx) -> bool:
    return all(ctx.prod(Subset.singleton(ctx.g.n, a), ctx.s) == ctx.s for a in range(ctx.g.n))


def _check_ji(ctx: _Ctx) -> TheoremReport:
    tid = TheoremId.JI
    reason = _guard(ctx, need_intra=False)
    if reason:
        return _skipped(tid, reason)
    sga, ags = _sga_all(ctx), _ags_all(ctx)
    if not (sga or ags):
        return TheoremReport(
            tid, VACUOUS, instances=2 * ctx.g.n,
            reason="neither S*{a}=S nor {a}*S=S holds for every a",
        )
    hyp = "s-times-a" if sga else "a-times-s"
    if ctx.intra_holds():
        return _pass(tid, 2 * ctx.g.n + ctx.g.n, details=(("hypothesis", hyp),))
    return _fail(
        tid, "ji:not-intra-regular",
        (("hypothesis", hyp), ("offender", ctx.first_offender())),
        2 * ctx.g.n + ctx.g.n,
    )


@_revalidator("ji:not-intra-regular")
def _rv_ji(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    hyp_holds = _sga_all(ctx) if d["hypothesis"] == "s-times-a" else _ags_all(ctx)
    return hyp_holds and intra_witness(g, d["offender"]) is None


def _check_ji_cor(ctx: _Ctx) -> TheoremReport:
    tid = TheoremId.JI_COR
    reason = _guard(ctx, need_intra=False)
    if reason:
        return _skipped(tid, reason)
    if not _ags_all(ctx):
        return TheoremReport(
            tid, VACUOUS, instances=ctx.g.n,
            reason="{a}*S=S does not hold for every a",
        )
    for a in range(ctx.g.n):
        got = ctx.prod(ctx.s, Subset.singleton(ctx.g.n, a))
        if got != ctx.s:
            return _fail(
                tid, "ji-cor:s-times-a",
                (("a", a), ("product", _ext(got))), 2 * ctx.g.n,
            )
    return _pass(tid, 2 * ctx.g.n)


@_revalidator("ji-cor:s-times-a")
def _rv_ji_cor(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    got = ctx.prod(ctx.s, Subset.singleton(g.n, d["a"]))
    return _ags_all(ctx) and got != ctx.s and _ext(got) == d["product"]


def _product_identity_check(
    ctx: _Ctx, tid: TheoremId, kind: IdealKind, condition: str,
    lhs_of: Callable[[_Ctx, Subset], Subset], intersect_s: bool,
) -> TheoremReport:
    reason = _guard(ctx, need_intra=True)
    if reason:
        return _skipped(tid, reason)
    fam = ctx.family(kind)
    for b in fam:
        lhs = lhs_of(ctx, b)
        rhs = (b & ctx.s) if intersect_s else b
        if lhs != rhs:
            return _fail(
                tid, condition,
                (("B", _ext(b)), ("lhs", _ext(lhs))), len(fam),
            )
    return _pass(tid, len(fam))


def _bsb(ctx: _Ctx, b: Subset) -> Subset:
    return ctx.prod(ctx.prod(b, ctx.s), b)


def _sbs(ctx: _Ctx, b: Subset) -> Subset:
    return ctx.prod(ctx.prod(ctx.s, b), ctx.s)


def _check_ki(ctx: _Ctx) -> TheoremReport:
    return _product_identity_check(
        ctx, TheoremId.KI, IdealKind.GENERALIZED_BI, "ki:product-identity",
        _bsb, intersect_s=True,
    )


@_revalidator("ki:product-identity")
def _rv_ki(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    b = _sub(g, d["B"])
    lhs = _bsb(ctx, b)
    return (
        ideals.is_generalized_bi_ideal(g, b)
        and lhs != (b & ctx.s)
        and _ext(lhs) == d["lhs"]
    )


def _check_ki_cor(ctx: _Ctx) -> TheoremReport:
    # same content as KI since B is a subset of S; kept as its own
    # report because the restated form (= B) is quoted independently
    return _product_identity_check(
        ctx, TheoremId.KI_COR, IdealKind.GENERALIZED_BI, "ki-cor:product-identity",
        _bsb, intersect_s=False,
    )


@_revalidator("ki-cor:product-identity")
def _rv_ki_cor(g: GammaGroupoid, d: dict) -> bool:
    b = _sub(g, d["B"])
    lhs = _bsb(_Ctx(g), b)
    return ideals.is_generalized_bi_ideal(g, b) and lhs != b and _ext(lhs) == d["lhs"]


def _check_aw(ctx: _Ctx) -> TheoremReport:
    return _product_identity_check(
        ctx, TheoremId.AW, IdealKind.INTERIOR, "aw:product-identity",
        _sbs, intersect_s=True,
    )


@_revalidator("aw:product-identity")
def _rv_aw(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    b = _sub(g, d["B"])
    lhs = _sbs(ctx, b)
    return ideals.is_interior_ideal(g, b) and lhs != (b & ctx.s) and _ext(lhs) == d["lhs"]


def _check_aw_cor(ctx: _Ctx) -> TheoremReport:
    return _product_identity_check(
        ctx, TheoremId.AW_COR, IdealKind.INTERIOR, "aw-cor:product-identity",
        _sbs, intersect_s=False,
    )


@_revalidator("aw-cor:product-identity")
def _rv_aw_cor(g: GammaGroupoid, d: dict) -> bool:
    b = _sub(g, d["B"])
    lhs = _sbs(_Ctx(g), b)
    return ideals.is_interior_ideal(g, b) and lhs != b and _ext(lhs) == d["lhs"]


def _check_jk(ctx: _Ctx) -> TheoremReport:
    tid = TheoremId.JK
    reason = _guard(ctx, need_intra=True)
    if reason:
        return _skipped(tid, reason)
    got = ctx.prod(ctx.s, ctx.s)
    if got != ctx.s:
        return _fail(tid, "jk:s-times-s", (("product", _ext(got)),), 1)
    return _pass(tid, 1)


@_revalidator("jk:s-times-s")
def _rv_jk(g: GammaGroupoid, d: dict) -> bool:
    s = Subset.full(g.n)
    got = subset_product(g, s, s)
    return got != s and _ext(got) == d["product"]


def _check_lisr(ctx: _Ctx) -> TheoremReport:
    tid = TheoremId.LISR
    reason = _guard(ctx, need_intra=True)
    if reason:
        return _skipped(tid, reason)
    subs = ctx.subsets()
    for a in subs:
        left = ideals.is_left_ideal(ctx.g, a)
        right = ideals.is_right_ideal(ctx.g, a)
        if left != right:
            return _fail(
                tid, "lisr:left-right-mismatch",
                (("A", _ext(a)),
                 ("direction", "left-not-right" if left else "right-not-left")),
                len(subs),
            )
    return _pass(tid, len(subs))


@_revalidator("lisr:left-right-mismatch")
def _rv_lisr(g: GammaGroupoid, d: dict) -> bool:
    a = _sub(g, d["A"])
    left = ideals.is_left_ideal(g, a)
    right = ideals.is_right_ideal(g, a)
    if d["direction"] == "left-not-right":
        return left and not right
    return right and not left


def _check_biiid(ctx: _Ctx) -> TheoremReport:
    tid = TheoremId.BIIID
    reason = _guard(ctx, need_intra=True)
    if reason:
        return _skipped(tid, reason)
    subs = ctx.subsets()
    for a in subs:
        rhs_prod = _bsb(ctx, a) == a
        rhs_idem = square(ctx.g, a) == a
        lhs = ideals.is_generalized_bi_ideal(ctx.g, a)
        if lhs and not (rhs_prod and rhs_idem):
            clause = "product-identity" if not rhs_prod else "idempotent"
            return _fail(
                tid, "biiid:forward", (("A", _ext(a)), ("clause", clause)), len(subs),
            )
        if rhs_prod and rhs_idem and not ideals.is_bi_ideal(ctx.g, a):
            return _fail(tid, "biiid:converse", (("A", _ext(a)),), len(subs))
    return _pass(tid, len(subs))


@_revalidator("biiid:forward")
def _rv_biiid_fwd(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    a = _sub(g, d["A"])
    if not ideals.is_generalized_bi_ideal(g, a):
        return False
    if d["clause"] == "product-identity":
        return _bsb(ctx, a) != a
    return square(g, a) != a


@_revalidator("biiid:converse")
def _rv_biiid_conv(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    a = _sub(g, d["A"])
    return (
        _bsb(ctx, a) == a and square(g, a) == a and not ideals.is_bi_ideal(g, a)
    )


def _characterization_check(
    ctx: _Ctx, tid: TheoremId, prefix: str,
    lhs_pred: Callable[[GammaGroupoid, Subset], bool],
    rhs_pred: Callable[[_Ctx, Subset], bool],
) -> TheoremReport:
    """lhs(A) <=> rhs(A) over every non-empty subset, direction-tagged."""
    reason = _guard(ctx, need_intra=True)
    if reason:
        return _skipped(tid, reason)
    subs = ctx.subsets()
    for a in subs:
        lhs, rhs = lhs_pred(ctx.g, a), rhs_pred(ctx, a)
        if lhs and not rhs:
            return _fail(tid, f"{prefix}:forward", (("A", _ext(a)),), len(subs))
        if rhs and not lhs:
            return _fail(tid, f"{prefix}:converse", (("A", _ext(a)),), len(subs))
    return _pass(tid, len(subs))


def _one_two_rhs(ctx: _Ctx, a: Subset) -> bool:
    sq = square(ctx.g, a)
    return ctx.prod(ctx.prod(a, ctx.s), sq) == a and sq == a


def _interior_rhs(ctx: _Ctx, a: Subset) -> bool:
    return _sbs(ctx, a) == a


def _quasi_rhs(ctx: _Ctx, a: Subset) -> bool:
    return (ctx.prod(ctx.s, a) & ctx.prod(a, ctx.s)) == a


def _check_t_one_two(ctx: _Ctx) -> TheoremReport:
    return _characterization_check(
        ctx, TheoremId.T_ONE_TWO, "t-one-two", ideals.is_one_two_ideal, _one_two_rhs,
    )


@_revalidator("t-one-two:forward")
def _rv_t12f(g: GammaGroupoid, d: dict) -> bool:
    a = _sub(g, d["A"])
    return ideals.is_one_two_ideal(g, a) and not _one_two_rhs(_Ctx(g), a)


@_revalidator("t-one-two:converse")
def _rv_t12c(g: GammaGroupoid, d: dict) -> bool:
    a = _sub(g, d["A"])
    return _one_two_rhs(_Ctx(g), a) and not ideals.is_one_two_ideal(g, a)


def _check_t_interior(ctx: _Ctx) -> TheoremReport:
    return _characterization_check(
        ctx, TheoremId.T_INTERIOR, "t-interior", ideals.is_interior_ideal, _interior_rhs,
    )


@_revalidator("t-interior:forward")
def _rv_tif(g: GammaGroupoid, d: dict) -> bool:
    a = _sub(g, d["A"])
    return ideals.is_interior_ideal(g, a) and not _interior_rhs(_Ctx(g), a)


@_revalidator("t-interior:converse")
def _rv_tic(g: GammaGroupoid, d: dict) -> bool:
    a = _sub(g, d["A"])
    return _interior_rhs(_Ctx(g), a) and not ideals.is_interior_ideal(g, a)


def _check_t_quasi(ctx: _Ctx) -> TheoremReport:
    return _characterization_check(
        ctx, TheoremId.T_QUASI, "t-quasi", ideals.is_quasi_ideal, _quasi_rhs,
    )


@_revalidator("t-quasi:forward")
def _rv_tqf(g: GammaGroupoid, d: dict) -> bool:
    a = _sub(g, d["A"])
    return ideals.is_quasi_ideal(g, a) and not _quasi_rhs(_Ctx(g), a)


@_revalidator("t-quasi:converse")
def _rv_tqc(g: GammaGroupoid, d: dict) -> bool:
    a = _sub(g, d["A"])
    return _quasi_rhs(_Ctx(g), a) and not ideals.is_quasi_ideal(g, a)


def _kind_equivalence_check(
    ctx: _Ctx, tid: TheoremId, prefix: str, kind_a: IdealKind, kind_b: IdealKind,
) -> TheoremReport:
    reason = _guard(ctx, need_intra=True)
    if reason:
        return _skipped(tid, reason)
    pa, pb = ideals.kind_predicate(kind_a), ideals.kind_predicate(kind_b)
    subs = ctx.subsets()
    for a in subs:
        va, vb = pa(ctx.g, a), pb(ctx.g, a)
        if va and not vb:
            return _fail(tid, f"{prefix}:forward", (("A", _ext(a)),), len(subs))
        if vb and not va:
            return _fail(tid, f"{prefix}:converse", (("A", _ext(a)),), len(subs))
    return _pass(tid, len(subs))


def _check_t12(ctx: _Ctx) -> TheoremReport:
    return _kind_equivalence_check(
        ctx, TheoremId.T12, "t12", IdealKind.ONE_TWO, IdealKind.TWO_SIDED,
    )


def _check_plo(ctx: _Ctx) -> TheoremReport:
    return _kind_equivalence_check(
        ctx, TheoremId.PLO, "plo", IdealKind.ONE_TWO, IdealKind.INTERIOR,
    )


def _check_bint(ctx: _Ctx) -> TheoremReport:
    return _kind_equivalence_check(
        ctx, TheoremId.BINT, "bint", IdealKind.BI, IdealKind.INTERIOR,
    )


def _check_quo(ctx: _Ctx) -> TheoremReport:
    return _kind_equivalence_check(
        ctx, TheoremId.QUO, "quo", IdealKind.ONE_TWO, IdealKind.QUASI,
    )


def _make_kind_equivalence_revalidators():
    pairs = {
        "t12": (IdealKind.ONE_TWO, IdealKind.TWO_SIDED),
        "plo": (IdealKind.ONE_TWO, IdealKind.INTERIOR),
        "bint": (IdealKind.BI, IdealKind.INTERIOR),
        "quo": (IdealKind.ONE_TWO, IdealKind.QUASI),
    }
    for prefix, (ka, kb) in pairs.items():
        pa, pb = ideals.kind_predicate(ka), ideals.kind_predicate(kb)

        def fwd(g, d, pa=pa, pb=pb):
            a = _sub(g, d["A"])
            return pa(g, a) and not pb(g, a)

        def conv(g, d, pa=pa, pb=pb):
            a = _sub(g, d["A"])
            return pb(g, a) and not pa(g, a)

        _REVALIDATORS[f"{prefix}:forward"] = fwd
        _REVALIDATORS[f"{prefix}:converse"] = conv


_make_kind_equivalence_revalidators()


def _fixed_pred(ctx: _Ctx, a: Subset) -> bool:
    return ctx.prod(a, ctx.s) == a and ctx.prod(ctx.s, a) == a


def _check_li(ctx: _Ctx) -> TheoremReport:
    tid = TheoremId.LI
    reason = _guard(ctx, need_intra=True)
    if reason:
        return _skipped(tid, reason)
    subs = ctx.subsets()
    for a in subs:
        lhs = ideals.is_two_sided_ideal(ctx.g, a)
        rhs = _fixed_pred(ctx, a)
        if lhs and not rhs:
            return _fail(tid, "li:forward", (("A", _ext(a)),), len(subs))
        if rhs and not lhs:
            return _fail(tid, "li:converse", (("A", _ext(a)),), len(subs))
    return _pass(tid, len(subs))


@_revalidator("li:forward")
def _rv_li_f(g: GammaGroupoid, d: dict) -> bool:
    a = _sub(g, d["A"])
    return ideals.is_two_sided_ideal(g, a) and not _fixed_pred(_Ctx(g), a)


@_revalidator("li:converse")
def _rv_li_c(g: GammaGroupoid, d: dict) -> bool:
    a = _sub(g, d["A"])
    return _fixed_pred(_Ctx(g), a) and not ideals.is_two_sided_ideal(g, a)


# names and predicates for the nine-way family equivalence, in its
# stated order
def _equalient_members(ctx: _Ctx) -> list[tuple[str, Callable[[Subset], bool]]]:
    g = ctx.g
    return [
        ("left", lambda a: ideals.is_left_ideal(g, a)),
        ("right", lambda a: ideals.is_right_ideal(g, a)),
        ("two-sided", lambda a: ideals.is_two_sided_ideal(g, a)),
        ("fixed", lambda a: _fixed_pred(ctx, a)),
        ("quasi", lambda a: ideals.is_quasi_ideal(g, a)),
        ("one-two", lambda a: ideals.is_one_two_ideal(g, a)),
        ("gbi", lambda a: ideals.is_generalized_bi_ideal(g, a)),
        ("bi", lambda a: ideals.is_bi_ideal(g, a)),
        ("interior", lambda a: ideals.is_interior_ideal(g, a)),
    ]


def _check_equalient(ctx: _Ctx) -> TheoremReport:
    tid = TheoremId.EQUALIENT
    reason = _guard(ctx, need_intra=True)
    if reason:
        return _skipped(tid, reason)
    members = _equalient_members(ctx)
    subs = ctx.subsets()
    verdicts = [[pred(a) for a in subs] for _, pred in members]
    instances = len(members) * len(subs)
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if verdicts[i] != verdicts[j]:
                idx = next(k for k in range(len(subs)) if verdicts[i][k] != verdicts[j][k])
                in_first = verdicts[i][idx]
                return _fail(
                    tid, "equalient:family-mismatch",
                    (("kind-a", members[i][0]), ("kind-b", members[j][0]),
                     ("A", _ext(subs[idx])),
                     ("in", members[i][0] if in_first else members[j][0])),
                    instances,
                )
    return _pass(tid, instances)


@_revalidator("equalient:family-mismatch")
def _rv_equalient(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    preds = dict(_equalient_members(ctx))
    a = _sub(g, d["A"])
    va, vb = preds[d["kind-a"]](a), preds[d["kind-b"]](a)
    return va != vb and (d["in"] == (d["kind-a"] if va else d["kind-b"]))


def _all_idempotent(ctx: _Ctx, kind: IdealKind) -> Optional[Subset]:
    """First non-idempotent member of the family, None if all idempotent."""
    for a in ctx.family(kind):
        if square(ctx.g, a) != a:
            return a
    return None


def _biconditional_intra_check(
    ctx: _Ctx, tid: TheoremId, prefix: str,
    rhs_offender: Callable[[_Ctx], Optional[tuple[tuple[str, Any], ...]]],
    instances: int,
) -> TheoremReport:
    """intra-regular <=> rhs, where rhs_offender returns witness data for
    a failing rhs instance (None when rhs holds)."""
    reason = _guard(ctx, need_intra=False)
    if reason:
        return _skipped(tid, reason)
    lhs = ctx.intra_holds()
    offender = rhs_offender(ctx)
    if lhs and offender is not None:
        return _fail(tid, f"{prefix}:forward", offender, instances)
    if offender is None and not lhs:
        return _fail(
            tid, f"{prefix}:converse",
            (("offender", ctx.first_offender()),), instances,
        )
    return _pass(tid, instances)


def _check_ii(ctx: _Ctx) -> TheoremReport:
    def offender(c: _Ctx):
        bad = _all_idempotent(c, IdealKind.BI)
        if bad is None:
            return None
        return (("B", _ext(bad)), ("square", _ext(square(c.g, bad))))

    return _biconditional_intra_check(
        ctx, TheoremId.II, "ii", offender,
        len(ctx.family(IdealKind.BI)) + ctx.g.n if ctx.profile.left_invertive and ctx.profile.ag_star_star else 0,
    )


@_revalidator("ii:forward")
def _rv_ii_f(g: GammaGroupoid, d: dict) -> bool:
    b = _sub(g, d["B"])
    sq = square(g, b)
    return (
        is_intra_regular(g).holds
        and ideals.is_bi_ideal(g, b)
        and sq != b
        and _ext(sq) == d["square"]
    )


@_revalidator("ii:converse")
def _rv_ii_c(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    return (
        _all_idempotent(ctx, IdealKind.BI) is None
        and intra_witness(g, d["offender"]) is None
    )


def _check_idl(ctx: _Ctx) -> TheoremReport:
    tid = TheoremId.IDL
    reason = _guard(ctx, need_intra=True)
    if reason:
        return _skipped(tid, reason)
    fam = ctx.family(IdealKind.TWO_SIDED)
    for i in fam:
        for j in fam:
            k = i & j
            if not k:
                return _fail(
                    tid, "idl:empty-intersection",
                    (("I", _ext(i)), ("J", _ext(j))), len(fam) ** 2,
                )
            if not ideals.is_two_sided_ideal(ctx.g, k):
                return _fail(
                    tid, "idl:not-ideal",
                    (("I", _ext(i)), ("J", _ext(j)), ("K", _ext(k))), len(fam) ** 2,
                )
    return _pass(tid, len(fam) ** 2)


@_revalidator("idl:empty-intersection")
def _rv_idl_empty(g: GammaGroupoid, d: dict) -> bool:
    i, j = _sub(g, d["I"]), _sub(g, d["J"])
    return (
        ideals.is_two_sided_ideal(g, i)
        and ideals.is_two_sided_ideal(g, j)
        and not (i & j)
    )


@_revalidator("idl:not-ideal")
def _rv_idl_not(g: GammaGroupoid, d: dict) -> bool:
    i, j = _sub(g, d["I"]), _sub(g, d["J"])
    k = i & j
    return (
        ideals.is_two_sided_ideal(g, i)
        and ideals.is_two_sided_ideal(g, j)
        and bool(k)
        and _ext(k) == d["K"]
        and not ideals.is_two_sided_ideal(g, k)
    )


def _check_ij(ctx: _Ctx) -> TheoremReport:
    tid = TheoremId.IJ
    reason = _guard(ctx, need_intra=True)
    if reason:
        return _skipped(tid, reason)
    fam = ctx.family(IdealKind.TWO_SIDED)
    for i in fam:
        for j in fam:
            prod = ctx.prod(i, j)
            inter = i & j
            if prod != inter:
                return _fail(
                    tid, "ij:product-intersection",
                    (("I", _ext(i)), ("J", _ext(j)),
                     ("product", _ext(prod)), ("intersection", _ext(inter))),
                    len(fam) ** 2,
                )
    return _pass(tid, len(fam) ** 2)


@_revalidator("ij:product-intersection")
def _rv_ij(g: GammaGroupoid, d: dict) -> bool:
    i, j = _sub(g, d["I"]), _sub(g, d["J"])
    prod = subset_product(g, i, j)
    inter = i & j
    return (
        ideals.is_two_sided_ideal(g, i)
        and ideals.is_two_sided_ideal(g, j)
        and prod != inter
        and _ext(prod) == d["product"]
        and _ext(inter) == d["intersection"]
    )


def _check_iffff(ctx: _Ctx) -> TheoremReport:
    def offender(c: _Ctx):
        bad = _all_idempotent(c, IdealKind.LEFT)
        if bad is None:
            return None
        return (("A", _ext(bad)), ("square", _ext(square(c.g, bad))))

    return _biconditional_intra_check(
        ctx, TheoremId.IFFFF, "iffff", offender,
        len(ctx.family(IdealKind.LEFT)) + ctx.g.n if ctx.profile.left_invertive and ctx.profile.ag_star_star else 0,
    )


@_revalidator("iffff:forward")
def _rv_iffff_f(g: GammaGroupoid, d: dict) -> bool:
    a = _sub(g, d["A"])
    sq = square(g, a)
    return (
        is_intra_regular(g).holds
        and ideals.is_left_ideal(g, a)
        and sq != a
        and _ext(sq) == d["square"]
    )


@_revalidator("iffff:converse")
def _rv_iffff_c(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    return (
        _all_idempotent(ctx, IdealKind.LEFT) is None
        and intra_witness(g, d["offender"]) is None
    )


def _sla2_rhs_offender(ctx: _Ctx):
    for a in ctx.family(IdealKind.LEFT):
        got = square(ctx.g, ctx.prod(ctx.s, a))
        if got != a:
            return (("A", _ext(a)), ("got", _ext(got)))
    return None


def _check_sla2(ctx: _Ctx) -> TheoremReport:
    return _biconditional_intra_check(
        ctx, TheoremId.SLA2, "sla2", _sla2_rhs_offender,
        len(ctx.family(IdealKind.LEFT)) + ctx.g.n if ctx.profile.left_invertive and ctx.profile.ag_star_star else 0,
    )


@_revalidator("sla2:forward")
def _rv_sla2_f(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    a = _sub(g, d["A"])
    got = square(g, ctx.prod(ctx.s, a))
    return (
        is_intra_regular(g).holds
        and ideals.is_left_ideal(g, a)
        and got != a
        and _ext(got) == d["got"]
    )


@_revalidator("sla2:converse")
def _rv_sla2_c(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    return (
        _sla2_rhs_offender(ctx) is None
        and intra_witness(g, d["offender"]) is None
    )


def _ideal_quantified_semiprime(g: GammaGroupoid, p: Subset) -> bool:
    # Definition-style semiprime with target P an arbitrary subset;
    # quantifies over the two-sided ideal family
    for a in ideal_family(g, IdealKind.TWO_SIDED):
        if subset_product(g, a, a) <= p and not (a <= p):
            return False
    return True


def _check_rlt(ctx: _Ctx) -> TheoremReport:
    tid = TheoremId.RLT
    reason = _guard(ctx, need_intra=True)
    if reason:
        return _skipped(tid, reason)
    parts = (
        ("right", IdealKind.RIGHT),
        ("left", IdealKind.LEFT),
        ("two-sided", IdealKind.TWO_SIDED),
    )
    instances = 0
    details = []
    for part, kind in parts:
        fam = ctx.family(kind)
        instances += len(fam)
        for r in fam:
            if not ideals.is_elementwise_semiprime(ctx.g, r):
                bad = next(
                    x for x in range(ctx.g.n)
                    if subset_product(ctx.g, Subset.singleton(ctx.g.n, x),
                                      Subset.singleton(ctx.g.n, x)) <= r and x not in r
                )
                return _fail(
                    tid, "rlt:elementwise",
                    (("part", part), ("R", _ext(r)), ("a", bad)), instances,
                )
        details.append((f"{part}-ideal-quantified",
                        all(_ideal_quantified_semiprime(ctx.g, r) for r in fam)))
    return _pass(tid, instances, details=details)


@_revalidator("rlt:elementwise")
def _rv_rlt(g: GammaGroupoid, d: dict) -> bool:
    kind = {"right": IdealKind.RIGHT, "left": IdealKind.LEFT,
            "two-sided": IdealKind.TWO_SIDED}[d["part"]]
    r = _sub(g, d["R"])
    a = d["a"]
    sa = Subset.singleton(g.n, a)
    return (
        ideals.kind_predicate(kind)(g, r)
        and subset_product(g, sa, sa) <= r
        and a not in r
    )


def _rsemiprime_rhs_offender(ctx: _Ctx):
    for r in ctx.family(IdealKind.RIGHT):
        if not ideals.is_elementwise_semiprime(ctx.g, r):
            bad = next(
                x for x in range(ctx.g.n)
                if subset_product(ctx.g, Subset.singleton(ctx.g.n, x),
                                  Subset.singleton(ctx.g.n, x)) <= r and x not in r
            )
            return (("R", _ext(r)), ("a", bad))
    return None


def _check_rsemiprime_eq(ctx: _Ctx) -> TheoremReport:
    reason = _guard(ctx, need_intra=False)
    tid = TheoremId.RSEMIPRIME_EQ
    if reason:
        return _skipped(tid, reason)
    rep = _biconditional_intra_check(
        ctx, tid, "rsemiprime", _rsemiprime_rhs_offender,
        len(ctx.family(IdealKind.RIGHT)) + ctx.g.n,
    )
    if rep.status == PASS:
        idq = all(_ideal_quantified_semiprime(ctx.g, r)
                  for r in ctx.family(IdealKind.RIGHT))
        rep = TheoremReport(
            tid, PASS, instances=rep.instances,
            details=(("semiprime-sense", "elementwise"),
                     ("ideal-quantified-all-semiprime", idq)),
        )
    return rep


@_revalidator("rsemiprime:forward")
def _rv_rsemi_f(g: GammaGroupoid, d: dict) -> bool:
    r = _sub(g, d["R"])
    a = d["a"]
    sa = Subset.singleton(g.n, a)
    return (
        is_intra_regular(g).holds
        and ideals.is_right_ideal(g, r)
        and subset_product(g, sa, sa) <= r
        and a not in r
    )


@_revalidator("rsemiprime:converse")
def _rv_rsemi_c(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    return (
        _rsemiprime_rhs_offender(ctx) is None
        and intra_witness(g, d["offender"]) is None
    )


def _semiprime_right_ideals(ctx: _Ctx) -> list[Subset]:
    return [r for r in ctx.family(IdealKind.RIGHT)
            if ideals.is_elementwise_semiprime(ctx.g, r)]


def _rintl_rhs_offender(ctx: _Ctx):
    for r in _semiprime_right_ideals(ctx):
        for l in ctx.family(IdealKind.LEFT):
            if (r & l) != ctx.prod(r, l):
                return (("R", _ext(r)), ("L", _ext(l)),
                        ("intersection", _ext(r & l)),
                        ("product", _ext(ctx.prod(r, l))))
    return None


def _check_rintl(ctx: _Ctx) -> TheoremReport:
    rep = _biconditional_intra_check(
        ctx, TheoremId.RINTL, "rintl", _rintl_rhs_offender,
        (len(ctx.family(IdealKind.RIGHT)) * len(ctx.family(IdealKind.LEFT)) + ctx.g.n)
        if ctx.profile.left_invertive and ctx.profile.ag_star_star else 0,
    )
    if rep.status == PASS:
        rep = TheoremReport(
            rep.theorem, PASS, instances=rep.instances,
            details=(("semiprime-sense", "elementwise"),),
        )
    return rep


@_revalidator("rintl:forward")
def _rv_rintl_f(g: GammaGroupoid, d: dict) -> bool:
    r, l = _sub(g, d["R"]), _sub(g, d["L"])
    inter, prod = r & l, subset_product(g, r, l)
    return (
        is_intra_regular(g).holds
        and ideals.is_right_ideal(g, r)
        and ideals.is_elementwise_semiprime(g, r)
        and ideals.is_left_ideal(g, l)
        and inter != prod
        and _ext(inter) == d["intersection"]
        and _ext(prod) == d["product"]
    )


@_revalidator("rintl:converse")
def _rv_rintl_c(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    return (
        _rintl_rhs_offender(ctx) is None
        and intra_witness(g, d["offender"]) is None
    )


def _lrl_statement_ii(ctx: _Ctx):
    """Offender for: L&R <= L*R for semiprime right R and left L."""
    for r in _semiprime_right_ideals(ctx):
        for l in ctx.family(IdealKind.LEFT):
            if not ((l & r) <= ctx.prod(l, r)):
                return (("R", _ext(r)), ("L", _ext(l)),
                        ("intersection", _ext(l & r)),
                        ("product", _ext(ctx.prod(l, r))))
    return None


def _lrl_statement_iii(ctx: _Ctx):
    """Offender for: L&R <= (L*R)*L for semiprime right R and left L."""
    for r in _semiprime_right_ideals(ctx):
        for l in ctx.family(IdealKind.LEFT):
            lrl = ctx.prod(ctx.prod(l, r), l)
            if not ((l & r) <= lrl):
                return (("R", _ext(r)), ("L", _ext(l)),
                        ("intersection", _ext(l & r)), ("product", _ext(lrl)))
    return None


def _check_lrl(ctx: _Ctx) -> TheoremReport:
    tid = TheoremId.LRL
    reason = _guard(ctx, need_intra=False)
    if reason:
        return _skipped(tid, reason)
    b1 = ctx.intra_holds()
    off2 = _lrl_statement_ii(ctx)
    off3 = _lrl_statement_iii(ctx)
    b2, b3 = off2 is None, off3 is None
    instances = 2 * len(ctx.family(IdealKind.RIGHT)) * len(ctx.family(IdealKind.LEFT)) + ctx.g.n
    details = (("i-intra-regular", b1), ("ii-subset-product", b2),
               ("iii-subset-product-l", b3), ("semiprime-sense", "elementwise"))
    if b1 == b2 == b3:
        return _pass(tid, instances, details=details)
    if b1 and not b2:
        return _fail(tid, "lrl:i-not-ii", off2, instances, details=details)
    if b1 and not b3:
        return _fail(tid, "lrl:i-not-iii", off3, instances, details=details)
    if b2 and not b3:
        return _fail(tid, "lrl:ii-not-iii", off3, instances, details=details)
    if b3 and not b2:
        return _fail(tid, "lrl:iii-not-ii", off2, instances, details=details)
    # some statement holds while intra-regularity fails
    return _fail(
        tid, "lrl:not-intra", (("offender", ctx.first_offender()),),
        instances, details=details,
    )


@_revalidator("lrl:i-not-ii")
def _rv_lrl_12(g: GammaGroupoid, d: dict) -> bool:
    r, l = _sub(g, d["R"]), _sub(g, d["L"])
    return (
        is_intra_regular(g).holds
        and ideals.is_right_ideal(g, r)
        and ideals.is_elementwise_semiprime(g, r)
        and ideals.is_left_ideal(g, l)
        and not ((l & r) <= subset_product(g, l, r))
    )


@_revalidator("lrl:i-not-iii")
def _rv_lrl_13(g: GammaGroupoid, d: dict) -> bool:
    r, l = _sub(g, d["R"]), _sub(g, d["L"])
    lrl = subset_product(g, subset_product(g, l, r), l)
    return (
        is_intra_regular(g).holds
        and ideals.is_right_ideal(g, r)
        and ideals.is_elementwise_semiprime(g, r)
        and ideals.is_left_ideal(g, l)
        and not ((l & r) <= lrl)
    )


@_revalidator("lrl:ii-not-iii")
def _rv_lrl_23(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    r, l = _sub(g, d["R"]), _sub(g, d["L"])
    lrl = subset_product(g, subset_product(g, l, r), l)
    return _lrl_statement_ii(ctx) is None and not ((l & r) <= lrl)


@_revalidator("lrl:iii-not-ii")
def _rv_lrl_32(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    r, l = _sub(g, d["R"]), _sub(g, d["L"])
    return _lrl_statement_iii(ctx) is None and not ((l & r) <= subset_product(g, l, r))


@_revalidator("lrl:not-intra")
def _rv_lrl_ni(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    b2 = _lrl_statement_ii(ctx) is None
    b3 = _lrl_statement_iii(ctx) is None
    return (b2 or b3) and intra_witness(g, d["offender"]) is None


def _prime_in_family(ctx: _Ctx, p: Subset, fam: tuple[Subset, ...]) -> bool:
    for a in fam:
        for b in fam:
            if ctx.prod(a, b) <= p and not (a <= p or b <= p):
                return False
    return True


def _strongly_irr_in_family(ctx: _Ctx, p: Subset, fam: tuple[Subset, ...]) -> bool:
    for a in fam:
        for b in fam:
            if (a & b) <= p and not (a <= p or b <= p):
                return False
    return True


def _check_prime_irr(ctx: _Ctx) -> TheoremReport:
    tid = TheoremId.PRIME_IRR
    reason = _guard(ctx, need_intra=True)
    if reason:
        return _skipped(tid, reason)
    fam = ctx.family(IdealKind.TWO_SIDED)
    for p in fam:
        prime = _prime_in_family(ctx, p, fam)
        irr = _strongly_irr_in_family(ctx, p, fam)
        if prime != irr:
            return _fail(
                tid, "prime-irr:mismatch",
                (("P", _ext(p)),
                 ("direction", "prime-not-irreducible" if prime else "irreducible-not-prime")),
                len(fam),
            )
    return _pass(tid, len(fam))


@_revalidator("prime-irr:mismatch")
def _rv_prime_irr(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    p = _sub(g, d["P"])
    fam = ctx.family(IdealKind.TWO_SIDED)
    prime = _prime_in_family(ctx, p, fam)
    irr = _strongly_irr_in_family(ctx, p, fam)
    if d["direction"] == "prime-not-irreducible":
        return prime and not irr
    return irr and not prime


def _check_total_order(ctx: _Ctx) -> TheoremReport:
    tid = TheoremId.TOTAL_ORDER
    reason = _guard(ctx, need_intra=True)
    if reason:
        return _skipped(tid, reason)
    fam = ctx.family(IdealKind.TWO_SIDED)
    all_prime = all(_prime_in_family(ctx, p, fam) for p in fam)
    chain = all(p <= q or q <= p for p in fam for q in fam)
    instances = 2 * len(fam) ** 2
    if all_prime and not chain:
        p, q = next(
            (p, q) for p in fam for q in fam if not (p <= q or q <= p)
        )
        return _fail(
            tid, "total-order:incomparable",
            (("P", _ext(p)), ("Q", _ext(q))), instances,
        )
    if chain and not all_prime:
        p = next(p for p in fam if not _prime_in_family(ctx, p, fam))
        a, b = next(
            (a, b) for a in fam for b in fam
            if ctx.prod(a, b) <= p and not (a <= p or b <= p)
        )
        return _fail(
            tid, "total-order:not-prime",
            (("P", _ext(p)), ("A", _ext(a)), ("B", _ext(b))), instances,
        )
    return _pass(tid, instances)


@_revalidator("total-order:incomparable")
def _rv_to_inc(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    fam = ctx.family(IdealKind.TWO_SIDED)
    p, q = _sub(g, d["P"]), _sub(g, d["Q"])
    all_prime = all(_prime_in_family(ctx, x, fam) for x in fam)
    return all_prime and not (p <= q or q <= p)


@_revalidator("total-order:not-prime")
def _rv_to_np(g: GammaGroupoid, d: dict) -> bool:
    ctx = _Ctx(g)
    fam = ctx.family(IdealKind.TWO_SIDED)
    p, a, b = _sub(g, d["P"]), _sub(g, d["A"]), _sub(g, d["B"])
    chain = all(x <= y or y <= x for x in fam for y in fam)
    return (
        chain
        and subset_product(g, a, b) <= p
        and not (a <= p or b <= p)
    )


def _check_semilattice(ctx: _Ctx) -> TheoremReport:
    tid = TheoremId.SEMILATTICE
    reason = _guard(ctx, need_intra=True)
    if reason:
        return _skipped(tid, reason)
    fam = ctx.family(IdealKind.TWO_SIDED)
    fam_set = set(fam)
    instances = 2 * len(fam) ** 2 + len(fam)
    for i in fam:
        for j in fam:
            prod = ctx.prod(i, j)
            if prod not in fam_set:
                return _fail(
                    tid, "semilattice:closure",
                    (("I", _ext(i)), ("J", _ext(j)), ("product", _ext(prod))),
                    instances,
                )
            if prod != ctx.prod(j, i):
                return _fail(
                    tid, "semilattice:commutative",
                    (("I", _ext(i)), ("J", _ext(j)),
                     ("product", _ext(prod)), ("reversed", _ext(ctx.prod(j, i)))),
                    instances,
                )
    for i in fam:
        if ctx.prod(i, i) != i:
            return _fail(
                tid, "semilattice:idempotent",
                (("I", _ext(i)), ("square", _ext(ctx.prod(i, i)))), instances,
            )
    return _pass(tid, instances)


@_revalidator("semilattice:closure")
def _rv_sl_cl(g: GammaGroupoid, d: dict) -> bool:
    i, j = _sub(g, d["I"]), _sub(g, d["J"])
    prod = subset_product(g, i, j)
    ok_inputs = ideals.is_two_sided_ideal(g, i) and ideals.is_two_sided_ideal(g, j)
    not_ideal = not prod or not ideals.is_two_sided_ideal(g, prod)
    return ok_inputs and not_ideal and _ext(prod) == d["product"]


@_revalidator("semilattice:commutative")
def _rv_sl_co(g: GammaGroupoid, d: dict) -> bool:
    i, j = _sub(g, d["I"]), _sub(g, d["J"])
    prod, rev = subset_product(g, i, j), subset_product(g, j, i)
    return (
        ideals.is_two_sided_ideal(g, i)
        and ideals.is_two_sided_ideal(g, j)
        and prod != rev
        and _ext(prod) == d["product"]
        and _ext(rev) == d["reversed"]
    )


@_revalidator("semilattice:idempotent")
def _rv_sl_id(g: GammaGroupoid, d: dict) -> bool:
    i = _sub(g, d["I"])
    sq = subset_product(g, i, i)
    return ideals.is_two_sided_ideal(g, i) and sq != i and _ext(sq) == d["square"]


def _minimal_members(fam: tuple[Subset, ...]) -> list[Subset]:
    return [q for q in fam if not any(p < q for p in fam)]


def _check_minimal(ctx: _Ctx) -> TheoremReport:
    tid = TheoremId.MINIMAL
    reason = _guard(ctx, need_intra=True)
    if reason:
        return _skipped(tid, reason)
    fam = ctx.family(IdealKind.TWO_SIDED)
    minimal = _minimal_members(fam)
    instances = len(minimal) ** 2 + len(minimal)
    # forward: every minimal ideal is an intersection of two minimal ones
    for q in minimal:
        if not any((i & j) == q for i in minimal for j in minimal):
            return _fail(tid, "minimal:no-decomposition", (("Q", _ext(q)),), instances)
    # converse: an intersection of two minimal ideals that is a two-sided
    # ideal must be minimal
    for i in minimal:
        for j in minimal:
            k = i & j
            if k and ideals.is_two_sided_ideal(ctx.g, k) and k not in minimal:
                return _fail(
                    tid, "minimal:intersection-not-minimal",
                    (("I", _ext(i)), ("J", _ext(j)), ("K", _ext(k))), instances,
                )
    return _pass(tid, instances)


@_revalidator("minimal:no-decomposition")
def _rv_min_nd(g: GammaGroupoid, d: dict) -> bool:
    fam = ideal_family(g, IdealKind.TWO_SIDED)
    minimal = _minimal_members(fam)
    q = _sub(g, d["Q"])
    return q in minimal and not any((i & j) == q for i in minimal for j in minimal)


@_revalidator("minimal:intersection-not-minimal")
def _rv_min_inm(g: GammaGroupoid, d: dict) -> bool:
    fam = ideal_family(g, IdealKind.TWO_SIDED)
    minimal = _minimal_members(fam)
    i, j, k = _sub(g, d["I"]), _sub(g, d["J"]), _sub(g, d["K"])
    return (
        i in minimal and j in minimal and (i & j) == k and bool(k)
        and ideals.is_two_sided_ideal(g, k) and k not in minimal
    )


_CHECKS: dict[TheoremId, Callable[[_Ctx], TheoremReport]] = {
    TheoremId.JI: _check_ji,
    TheoremId.JI_COR: _check_ji_cor,
    TheoremId.KI: _check_ki,
    TheoremId.KI_COR: _check_ki_cor,
    TheoremId.AW: _check_aw,
    TheoremId.AW_COR: _check_aw_cor,
    TheoremId.JK: _check_jk,
    TheoremId.LISR: _check_lisr,
    TheoremId.BIIID: _check_biiid,
    TheoremId.T_ONE_TWO: _check_t_one_two,
    TheoremId.T_INTERIOR: _check_t_interior,
    TheoremId.T_QUASI: _check_t_quasi,
    TheoremId.T12: _check_t12,
    TheoremId.PLO: _check_plo,
    TheoremId.BINT: _check_bint,
    TheoremId.QUO: _check_quo,
    TheoremId.LI: _check_li,
    TheoremId.EQUALIENT: _check_equalient,
    TheoremId.II: _check_ii,
    TheoremId.IDL: _check_idl,
    TheoremId.IJ: _check_ij,
    TheoremId.IFFFF: _check_iffff,
    TheoremId.SLA2: _check_sla2,
    TheoremId.RLT: _check_rlt,
    TheoremId.RSEMIPRIME_EQ: _check_rsemiprime_eq,
    TheoremId.RINTL: _check_rintl,
    TheoremId.LRL: _check_lrl,
    TheoremId.PRIME_IRR: _check_prime_irr,
    TheoremId.TOTAL_ORDER: _check_total_order,
    TheoremId.SEMILATTICE: _check_semilattice,
    TheoremId.MINIMAL: _check_minimal,
}


def run_check(g: GammaGroupoid, theorem: TheoremId) -> TheoremReport:
    return _CHECKS[theorem](_ctx(g))


def check_ji(g): return run_check(g, TheoremId.JI)
def check_ji_cor(g): return run_check(g, TheoremId.JI_COR)
def check_ki(g): return run_check(g, TheoremId.KI)
def check_ki_cor(g): return run_check(g, TheoremId.KI_COR)
def check_aw(g): return run_check(g, TheoremId.AW)
def check_aw_cor(g): return run_check(g, TheoremId.AW_COR)
def check_jk(g): return run_check(g, TheoremId.JK)
def check_lisr(g): return run_check(g, TheoremId.LISR)
def check_biiid(g): return run_check(g, TheoremId.BIIID)
def check_t_one_two(g): return run_check(g, TheoremId.T_ONE_TWO)
def check_t_interior(g): return run_check(g, TheoremId.T_INTERIOR)
def check_t_quasi(g): return run_check(g, TheoremId.T_QUASI)
def check_t12(g): return run_check(g, TheoremId.T12)
def check_plo(g): return run_check(g, TheoremId.PLO)
def check_bint(g): return run_check(g, TheoremId.BINT)
def check_quo(g): return run_check(g, TheoremId.QUO)
def check_li(g): return run_check(g, TheoremId.LI)
def check_equalient(g): return run_check(g, TheoremId.EQUALIENT)
def check_ii(g): return run_check(g, TheoremId.II)
def check_idl(g): return run_check(g, TheoremId.IDL)
def check_ij(g): return run_check(g, TheoremId.IJ)
def check_iffff(g): return run_check(g, TheoremId.IFFFF)
def check_sla2(g): return run_check(g, TheoremId.SLA2)
def check_rlt(g): return run_check(g, TheoremId.RLT)
def check_rsemiprime_eq(g): return run_check(g, TheoremId.RSEMIPRIME_EQ)
def check_rintl(g): return run_check(g, TheoremId.RINTL)
def check_lrl(g): return run_check(g, TheoremId.LRL)
def check_prime_irr(g): return run_check(g, TheoremId.PRIME_IRR)
def check_total_order(g): return run_check(g, TheoremId.TOTAL_ORDER)
def check_semilattice(g): return run_check(g, TheoremId.SEMILATTICE)
def check_minimal(g): return run_check(g, TheoremId.MINIMAL)


def run_suite(
    g: GammaGroupoid, selection: Optional[Iterable[TheoremId]] = None
) -> list[TheoremReport]:
    """Run the selected checks (all by default) in TheoremId order."""
    chosen = set(TheoremId) if selection is None else set(selection)
    return [run_check(g, tid) for tid in TheoremId if tid in chosen]


def model_hash(g: GammaGroupoid) -> str:
    return hashlib.sha256(serialize_model(g).encode()).hexdigest()


def suite_to_json_obj(g: GammaGroupoid, reports: Sequence[TheoremReport]) -> dict:
    return {
        "model-hash": model_hash(g),
        "axiom-profile": axiom_profile(g).to_json_obj(),
        "reports": [r.to_json_obj() for r in reports],
    }


def suite_to_json(g: GammaGroupoid, reports: Sequence[TheoremReport]) -> str:
    return json.dumps(suite_to_json_obj(g, reports), indent=2) + "\n"


def suite_exit_code(reports: Sequence[TheoremReport]) -> int:
    """0 = no failures; 2 = some check failed; 3 = every check skipped."""
    if reports and all(r.status == SKIPPED for r in reports):
        return 3
    if any(r.status == FAIL for r in reports):
        return 2
    return 0


def format_report_table(reports: Sequence[TheoremReport]) -> str:
    lines = []
    for r in reports:
        line = f"{r.theorem.value:14s} {r.status:8s} instances={r.instances}"
        if r.reason:
            line += f"  ({r.reason})"
        if r.counterexample:
            line += f"  [{r.counterexample.condition}]"
        lines.append(line)
    return "\n".join(lines) + "\n"
