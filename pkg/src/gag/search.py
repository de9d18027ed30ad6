"""Exhaustive model enumeration up to isomorphism, plus counterexample hunts.

The enumerator fills table cells in ascending flat order (row-major by
(element, operator, element)), pruning a branch as soon as some fully
instantiated ground instance of a required law is violated.  Completed
tables are filtered, canonicalized and deduplicated; the emitted set is
provably independent of the worker count because per-prefix results are
merged in prefix order and only first occurrences matter.

A naive filter-all-tables oracle is kept alongside as ground truth; the
pruned enumerator is required to reproduce its output exactly wherever
the oracle is feasible.  Model counts are never hard-coded: the oracle
produces them first, then they get frozen as regression fixtures.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional, Sequence

from .model import GammaGroupoid, is_ag_star_star, is_left_invertive
from .regularity import is_intra_regular
from .theorems import TheoremId, TheoremReport, run_check

AXIOM_NAMES = ("left-invertive", "ag-star-star")
FILTER_NAMES = ("any", "intra-regular", "non-intra-regular")

MAX_CANON_N = 6
MAX_CANON_M = 3


class SizeGuardError(ValueError):
    pass


@dataclass(frozen=True)
class SearchSpec:
    """Parameters of one enumeration or hunt.

    `axioms` is any subset of AXIOM_NAMES; `filter` restricts to models
    that are (or are not) intra-regular.  `max_models` stops the scan
    after that many distinct representatives; `time_budget` (seconds)
    stops it on the clock and makes the run non-reproducible, which is
    why budgeted runs always set the truncated flag handling below.
    """

    n: int
    m: int
    axioms: frozenset = frozenset({"left-invertive"})
    filter: str = "any"
    target: str = "enumerate"
    theorem: Optional[TheoremId] = None
    max_models: Optional[int] = None
    time_budget: Optional[float] = None
    workers: int = 1

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("order and operator count must be at least 1")
        axioms = frozenset(self.axioms)
        unknown = axioms - set(AXIOM_NAMES)
        if unknown:
            raise ValueError(f"unknown axioms: {sorted(unknown)}")
        object.__setattr__(self, "axioms", axioms)
        filt = "non-intra-regular" if self.filter == "not-intra-regular" else self.filter
        if filt not in FILTER_NAMES:
            raise ValueError(f"unknown filter {self.filter!r}")
        object.__setattr__(self, "filter", filt)
        if self.target not in ("enumerate", "count", "find-counterexample"):
            raise ValueError(f"unknown target {self.target!r}")
        if self.target == "find-counterexample" and self.theorem is None:
            raise ValueError("find-counterexample target needs a theorem")
        if self.max_models is not None and self.max_models < 1:
            raise ValueError("max_models must be at least 1")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass(frozen=True)
class SearchResult:
    models: tuple[GammaGroupoid, ...]
    count: int
    truncated: bool
    elapsed: float


@dataclass(frozen=True)
class HuntResult:
    model: Optional[GammaGroupoid]
    report: Optional[TheoremReport]
    scanned: int
    truncated: bool
    elapsed: float

    @property
    def found(self) -> bool:
        return self.model is not None


# --- canonical forms --------------------------------------------------------

def canonicalize(
    g: GammaGroupoid, *, max_n: int = MAX_CANON_N, max_m: int = MAX_CANON_M
) -> tuple[int, ...]:
    """Lexicographically least flat table over all simultaneous
    relabelings of elements and operators.  Two models are isomorphic
    iff their canonical forms are equal."""
    if g.n > max_n or g.m > max_m:
        raise SizeGuardError(
            f"canonicalization guarded at n<={max_n}, m<={max_m}; got n={g.n}, m={g.m}"
        )
    n, m, t = g.n, g.m, g.table
    best: Optional[tuple[int, ...]] = None
    for p in itertools.permutations(range(n)):  # p[i] = old element at new slot i
        inv = [0] * n
        for new, old in enumerate(p):
            inv[old] = new
        for q in itertools.permutations(range(m)):
            cand = tuple(
                inv[t[(p[i] * m + q[k]) * n + p[j]]]
                for i in range(n)
                for k in range(m)
                for j in range(n)
            )
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


def canonical_model(g: GammaGroupoid) -> GammaGroupoid:
    return GammaGroupoid(g.n, g.m, canonicalize(g))


def are_isomorphic(g1: GammaGroupoid, g2: GammaGroupoid) -> bool:
    """Witness search for a bijection pair; independent of canonicalize."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    n, m = g1.n, g1.m
    for p in itertools.permutations(range(n)):
        for q in itertools.permutations(range(m)):
            if all(
                g2.table[(p[i] * m + q[k]) * n + p[j]] == p[g1.table[(i * m + k) * n + j]]
                for i in range(n)
                for k in range(m)
                for j in range(n)
            ):
                return True
    return False


# --- ground law instances for pruning ---------------------------------------

def compile_instances(n: int, m: int, axioms: Iterable[str]) -> tuple[tuple, ...]:
    """Nontrivial ground instances of the required laws.

    Left invertive (x g y) d z = (z g y) d x is trivial at x = z, and
    the ag-star-star identity x a (y b z) = y a (x b z) at x = y, so
    those are skipped; shape tags tell the evaluator where the computed
    value feeds back into the table.
    """
    out: list[tuple] = []
    axioms = set(axioms)
    if "left-invertive" in axioms:
        for x in range(n):
            for z in range(x + 1, n):
                for y in range(n):
                    for gam in range(m):
                        for dlt in range(m):
                            out.append(
                                ("L", (x * m + gam) * n + y, (z * m + gam) * n + y, dlt, z, x)
                            )
    if "ag-star-star" in axioms:
        for x in range(n):
            for y in range(x + 1, n):
                for z in range(n):
                    for al in range(m):
                        for be in range(m):
                            out.append(
                                ("R", x, y, al, (y * m + be) * n + z, (x * m + be) * n + z)
                            )
    return tuple(out)


def _eval_instance(t: Sequence[int], inst: tuple, n: int, m: int) -> Optional[bool]:
    """True/False once every needed cell is assigned, None before."""
    if inst[0] == "L":
        _, i1, i2, d, z, x = inst
        v1 = t[i1]
        if v1 < 0:
            return None
        a = t[(v1 * m + d) * n + z]
        if a < 0:
            return None
        v2 = t[i2]
        if v2 < 0:
            return None
        b = t[(v2 * m + d) * n + x]
        if b < 0:
            return None
        return a == b
    _, x, y, al, i1, i2 = inst
    v1 = t[i1]
    if v1 < 0:
        return None
    a = t[(x * m + al) * n + v1]
    if a < 0:
        return None
    v2 = t[i2]
    if v2 < 0:
        return None
    b = t[(y * m + al) * n + v2]
    if b < 0:
        return None
    return a == b


def _dfs(
    t: list[int], cell: int, total: int, n: int, m: int,
    instances: tuple[tuple, ...], pending: list[int],
) -> Iterator[tuple[int, ...]]:
    if cell == total:
        yield tuple(t)
        return
    for v in range(n):
        t[cell] = v
        ok = True
        nxt = []
        for ii in pending:
            r = _eval_instance(t, instances[ii], n, m)
            if r is None:
                nxt.append(ii)
            elif r is False:
                ok = False
                break
        if ok:
            yield from _dfs(t, cell + 1, total, n, m, instances, nxt)
    t[cell] = -1


def _passes_filter(g: GammaGroupoid, filt: str) -> bool:
    if filt == "any":
        return True
    holds = is_intra_regular(g).holds
    return holds if filt == "intra-regular" else not holds


def _enumerate_chunk(args) -> list[tuple[int, ...]]:
    """Complete every prefix in the chunk; return locally deduplicated
    canonical forms in discovery order."""
    n, m, axioms, filt, prefixes = args
    total = n * n * m
    instances = compile_instances(n, m, axioms)
    all_pending = list(range(len(instances)))
    seen: set[tuple[int, ...]] = set()
    out: list[tuple[int, ...]] = []
    for prefix in prefixes:
        t = [-1] * total
        t[: len(prefix)] = list(prefix)
        for flat in _dfs(t, len(prefix), total, n, m, instances, all_pending):
            g = GammaGroupoid(n, m, flat)
            if not _passes_filter(g, filt):
                continue
            c = canonicalize(g)
            if c not in seen:
                seen.add(c)
                out.append(c)
    return out


def _chunked_prefixes(n: int, workers: int) -> list[list[tuple[int, ...]]]:
    prefixes = list(itertools.product(range(n), repeat=n))
    slices = max(1, min(len(prefixes), workers * 4))
    size = (len(prefixes) + slices - 1) // slices
    return [prefixes[i : i + size] for i in range(0, len(prefixes), size)]


def _scan(spec: SearchSpec) -> tuple[list[tuple[int, ...]], bool, float]:
    """Canonical forms in discovery order (first occurrences only).

    truncated=True means a limit stopped the scan early; the collected
    set may then be incomplete.  The set and its order are independent
    of the worker count; time-budget runs are the documented exception
    to reproducibility.
    """
    t0 = time.monotonic()
    chunks = _chunked_prefixes(spec.n, spec.workers)
    args = [(spec.n, spec.m, spec.axioms, spec.filter, chunk) for chunk in chunks]
    seen: set[tuple[int, ...]] = set()
    ordered: list[tuple[int, ...]] = []
    truncated = False

    def consume(chunk_result: list[tuple[int, ...]]) -> bool:
        nonlocal truncated
        for c in chunk_result:
            if c in seen:
                continue
            seen.add(c)
            ordered.append(c)
            if spec.max_models is not None and len(ordered) >= spec.max_models:
                truncated = True
                return False
        if spec.time_budget is not None and time.monotonic() - t0 > spec.time_budget:
            truncated = True
            return False
        return True

    if spec.workers > 1 and len(args) > 1:
        with Pool(spec.workers) as pool:
            for result in pool.imap(_enumerate_chunk, args):
                if not consume(result):
                    pool.terminate()
                    break
    else:
        for a in args:
            if not consume(_enumerate_chunk(a)):
                break
    return ordered, truncated, time.monotonic() - t0


def enumerate_models(spec: SearchSpec) -> SearchResult:
    """One representative per isomorphism class satisfying the required
    axioms and filter, emitted in ascending canonical form."""
    ordered, truncated, elapsed = _scan(spec)
    models = tuple(GammaGroupoid(spec.n, spec.m, c) for c in sorted(ordered))
    return SearchResult(models, len(models), truncated, elapsed)


def count_models(spec: SearchSpec) -> SearchResult:
    ordered, truncated, elapsed = _scan(spec)
    return SearchResult((), len(ordered), truncated, elapsed)


def find_counterexample(spec: SearchSpec) -> HuntResult:
    """First model (in emission order) whose report for spec.theorem is
    a fail, with that report attached; no model when the scanned space
    holds none."""
    assert spec.theorem is not None
    ordered, truncated, elapsed = _scan(spec)
    scanned = 0
    for c in sorted(ordered):
        g = GammaGroupoid(spec.n, spec.m, c)
        report = run_check(g, spec.theorem)
        scanned += 1
        if report.status == "fail":
            return HuntResult(g, report, scanned, truncated, elapsed)
    return HuntResult(None, None, scanned, truncated, elapsed)


def run_search(spec: SearchSpec):
    if spec.target == "enumerate":
        return enumerate_models(spec)
    if spec.target == "count":
        return count_models(spec)
    return find_counterexample(spec)


# --- naive oracles ----------------------------------------------------------

def _passes_axioms(g: GammaGroupoid, axioms: frozenset) -> bool:
    if "left-invertive" in axioms and not is_left_invertive(g):
        return False
    if "ag-star-star" in axioms and not is_ag_star_star(g):
        return False
    return True


def naive_enumerate_direct(
    n: int, m: int,
    axioms: frozenset = frozenset({"left-invertive"}),
    filt: str = "any",
) -> list[tuple[int, ...]]:
    """Literal sweep of all n^(n*n*m) tables through the model-level law
    checks; the ground-truth oracle for the pruned enumerator."""
    forms: set[tuple[int, ...]] = set()
    for flat in itertools.product(range(n), repeat=n * n * m):
        g = GammaGroupoid(n, m, flat)
        if not _passes_axioms(g, axioms):
            continue
        if not _passes_filter(g, filt):
            continue
        forms.add(canonicalize(g))
    return sorted(forms)


def _interleave(singles: Sequence[Sequence[int]], n: int, m: int) -> tuple[int, ...]:
    return tuple(singles[k][i * n + j] for i in range(n) for k in range(m) for j in range(n))


def naive_enumerate(
    n: int, m: int,
    axioms: frozenset = frozenset({"left-invertive"}),
    filt: str = "any",
) -> list[tuple[int, ...]]:
    """Oracle with a sound per-table prefilter for m > 1.

    Any multi-operator model restricted to one operator must satisfy the
    single-operator laws (the operator-diagonal ground instances), so
    candidate tuples are drawn from single-table survivors and the full
    law check runs on each recombination.  Agrees with the direct sweep
    wherever that is feasible; stays entirely on the model-level checks.
    """
    if m == 1:
        return naive_enumerate_direct(n, m, axioms, filt)
    singles = [
        flat for flat in itertools.product(range(n), repeat=n * n)
        if _passes_axioms(GammaGroupoid(n, 1, flat), axioms)
    ]
    forms: set[tuple[int, ...]] = set()
    for combo in itertools.product(singles, repeat=m):
        g = GammaGroupoid(n, m, _interleave(combo, n, m))
        if not _passes_axioms(g, axioms):
            continue
        if not _passes_filter(g, filt):
            continue
        forms.add(canonicalize(g))
    return sorted(forms)


# --- serialization ----------------------------------------------------------

def spec_to_json_obj(spec: SearchSpec) -> dict:
    out = {
        "order": spec.n,
        "gammas": spec.m,
        "axioms": sorted(spec.axioms),
        "filter": spec.filter,
        "target": spec.target,
    }
    if spec.theorem is not None:
        out["theorem"] = spec.theorem.value
    if spec.max_models is not None:
        out["limit"] = spec.max_models
    # worker count deliberately omitted: structured output is required to
    # be byte-identical across worker counts
    return out


def search_to_json_obj(spec: SearchSpec, result: SearchResult) -> dict:
    # elapsed is deliberately text-mode only: structured output must be
    # byte-identical across runs and worker counts
    from .fileformat import model_to_json_obj

    out = {
        "search": spec_to_json_obj(spec),
        "count": result.count,
        "truncated": result.truncated,
    }
    if spec.target == "enumerate":
        out["models"] = [model_to_json_obj(g) for g in result.models]
    return out


def hunt_to_json_obj(spec: SearchSpec, result: HuntResult) -> dict:
    from .fileformat import model_to_json_obj
    from .theorems import suite_to_json_obj

    out = {
        "search": spec_to_json_obj(spec),
        "scanned": result.scanned,
        "truncated": result.truncated,
        "found": result.found,
    }
    if result.model is not None and result.report is not None:
        out["model"] = model_to_json_obj(result.model)
        out["report"] = suite_to_json_obj(result.model, [result.report])
    return out
