"""Command line front end.

Subcommands: check (law profile), ideals (family listings), intra
(witness listing), verify (theorem suite), search (enumeration and
counterexample hunts), canon (canonical form).  Models are read from a
file path, from stdin via `-`, or from the bundled five-element example
via the token `@paper-example`.

Exit codes: 0 ok/pass; 2 a theorem check failed (or a hunt found a
counterexample); 3 guard or axiom failure; 64 usage; 65 unreadable or
malformed input / capacity guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .fileformat import (
    ModelFormatError,
    model_to_json_obj,
    parse_model,
    serialize_model,
)
from .fixtures import PAPER_EXAMPLE_TOKEN, paper_example_text
from .ideals import IdealKind, ideal_family, kind_predicate
from .model import (
    GammaGroupoid,
    axiom_profile,
    is_ag_star_star,
    is_left_invertive,
    is_medial,
    is_paramedial,
)
from .regularity import format_witness, intra_witness, is_intra_regular
from .search import (
    SearchSpec,
    SizeGuardError,
    canonical_model,
    enumerate_models,
    find_counterexample,
    hunt_to_json_obj,
    count_models,
    search_to_json_obj,
)
from .subsets import (
    CapacityError,
    EmptySubsetError,
    Subset,
    SWEEP_CAP_ENV,
    generated_left_ideal,
    generated_right_ideal,
    generated_two_sided_ideal,
)
from .theorems import (
    SKIPPED,
    TheoremId,
    format_report_table,
    run_suite,
    suite_exit_code,
    suite_to_json_obj,
)

EX_USAGE = 64
EX_DATA = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EX_USAGE)


def _load_model(ref: str) -> GammaGroupoid:
    if ref == PAPER_EXAMPLE_TOKEN:
        return parse_model(paper_example_text())
    if ref == "-":
        return parse_model(sys.stdin.read())
    with open(ref, "r", encoding="utf-8") as fh:
        return parse_model(fh.read())


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


_LAW_VARS = {
    "left-invertive": (("x", "y", "z"), ("gamma", "delta")),
    "medial": (("x", "y", "l", "m"), ("alpha", "beta", "gamma")),
    "ag-star-star": (("x", "y", "z"), ("alpha", "beta")),
    "paramedial": (("x", "y", "l", "m"), ("alpha", "beta", "gamma")),
}


def _witness_parts(g: GammaGroupoid, law: str, w: tuple[int, ...]) -> dict[str, str]:
    el_names, op_names = _LAW_VARS[law]
    parts = {}
    for name, v in zip(el_names, w[: len(el_names)]):
        parts[name] = g.element_labels[v]
    for name, v in zip(op_names, w[len(el_names) :]):
        parts[name] = g.gamma_labels[v]
    return parts


def cmd_check(args) -> int:
    g = _load_model(args.model)
    checks = [is_left_invertive(g), is_medial(g), is_ag_star_star(g), is_paramedial(g)]
    profile = axiom_profile(g)
    if args.json:
        obj = {"model": model_to_json_obj(g), "profile": profile.to_json_obj()}
        bad = {
            c.law: _witness_parts(g, c.law, c.witness) for c in checks if not c.holds
        }
        if bad:
            obj["counterexamples"] = bad
        _emit_json(obj)
    else:
        print("elements:", " ".join(g.element_labels))
        print("gammas:", " ".join(g.gamma_labels))
        for c in checks:
            line = f"{c.law}: {str(c.holds).lower()}"
            if not c.holds:
                parts = _witness_parts(g, c.law, c.witness)
                line += "  [" + " ".join(f"{k}={v}" for k, v in parts.items()) + "]"
            print(line)
        ids = [g.element_labels[e] for e in profile.left_identities]
        print("left-identities:", " ".join(ids) if ids else "none")
    return 0 if profile.left_invertive else 3


def _family_json(g: GammaGroupoid, fam) -> list[list[str]]:
    return [[g.element_labels[e] for e in a.members()] for a in fam]


def _coinciding_groups(families: dict[IdealKind, tuple]) -> list[list[str]]:
    by_ext: dict[tuple, list[str]] = {}
    for kind in IdealKind:
        ext = tuple(a.members() for a in families[kind])
        by_ext.setdefault(ext, []).append(kind.value)
    return [grp for grp in by_ext.values() if len(grp) > 1]


def _parse_seed(g: GammaGroupoid, spec: str) -> Subset:
    members = []
    for name in spec.split(","):
        name = name.strip()
        if name not in g.element_labels:
            raise ModelFormatError(f"unknown element {name!r} in --generated-from")
        members.append(g.element_labels.index(name))
    return Subset.from_members(g.n, members)


def _dot_containment(g: GammaGroupoid, fam) -> str:
    # Hasse diagram: edge A -> B when A < B with nothing strictly between
    lines = ["digraph ideals {", "  rankdir=BT;"]
    for a in fam:
        lines.append(f'  "{a.format(g.element_labels)}";')
    for a in fam:
        for b in fam:
            if a < b and not any(a < c < b for c in fam):
                lines.append(
                    f'  "{a.format(g.element_labels)}" -> "{b.format(g.element_labels)}";'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_ideals(args) -> int:
    g = _load_model(args.model)
    if args.generated_from is not None:
        if args.kind not in ("left", "right", "two-sided"):
            raise UsageError("--generated-from needs --kind left, right or two-sided")
        seed = _parse_seed(g, args.generated_from)
        gen = {
            "left": generated_left_ideal,
            "right": generated_right_ideal,
            "two-sided": generated_two_sided_ideal,
        }[args.kind](g, seed)
        if args.json:
            _emit_json(
                {
                    "kind": args.kind,
                    "seed": [g.element_labels[e] for e in seed.members()],
                    "generated": [g.element_labels[e] for e in gen.members()],
                }
            )
        else:
            print(
                f"generated {args.kind} ideal of {seed.format(g.element_labels)}:",
                gen.format(g.element_labels),
            )
        return 0

    if args.kind == "all":
        if args.dot:
            raise UsageError("--dot needs a single --kind, not all")
        families = {kind: ideal_family(g, kind) for kind in IdealKind}
        if args.json:
            _emit_json(
                {
                    "families": {k.value: _family_json(g, families[k]) for k in IdealKind},
                    "coinciding": _coinciding_groups(families),
                }
            )
        else:
            for kind in IdealKind:
                fam = families[kind]
                print(f"{kind.value} ({len(fam)}):")
                for a in fam:
                    print(f"  {a.format(g.element_labels)}")
            for grp in _coinciding_groups(families):
                print("coinciding:", " = ".join(grp))
        return 0

    kind = IdealKind.from_cli(args.kind)
    fam = ideal_family(g, kind)
    if args.dot:
        sys.stdout.write(_dot_containment(g, fam))
    elif args.json:
        _emit_json({"kind": kind.value, "family": _family_json(g, fam)})
    else:
        print(f"{kind.value} ({len(fam)}):")
        for a in fam:
            print(f"  {a.format(g.element_labels)}")
    return 0


def cmd_intra(args) -> int:
    g = _load_model(args.model)
    report = is_intra_regular(g)
    if args.json:
        witnesses = {}
        for a in range(g.n):
            w = intra_witness(g, a)
            if w is None:
                witnesses[g.element_labels[a]] = None
            else:
                witnesses[g.element_labels[a]] = {
                    "x": g.element_labels[w.x],
                    "y": g.element_labels[w.y],
                    "beta": g.gamma_labels[w.beta],
                    "delta": g.gamma_labels[w.delta],
                    "gamma": g.gamma_labels[w.gamma],
                    "rendered": format_witness(g, a, w),
                }
        _emit_json({"intra-regular": report.holds, "witnesses": witnesses})
    else:
        print(f"intra-regular: {str(report.holds).lower()}")
        for a in range(g.n):
            w = intra_witness(g, a)
            if w is None:
                print(f"  {g.element_labels[a]}: no witness")
            else:
                print(f"  {format_witness(g, a, w)}")
    return 0 if report.holds else 3


def cmd_verify(args) -> int:
    g = _load_model(args.model)
    selection = set(args.theorem) if args.theorem else None
    reports = run_suite(g, selection)
    if args.json:
        _emit_json(suite_to_json_obj(g, reports))
    else:
        sys.stdout.write(format_report_table(reports))
        by_status: dict[str, int] = {}
        for r in reports:
            by_status[r.status] = by_status.get(r.status, 0) + 1
        summary = ", ".join(f"{v} {k}" for k, v in sorted(by_status.items()))
        print(f"{len(reports)} checks: {summary}")
    return suite_exit_code(reports)


def cmd_search(args) -> int:
    axioms = {
        "ag": frozenset({"left-invertive"}),
        "agss": frozenset({"left-invertive", "ag-star-star"}),
    }[args.axiom]
    if args.find_counterexample is not None:
        target, theorem = "find-counterexample", args.find_counterexample
    elif args.count:
        target, theorem = "count", None
    else:
        target, theorem = "enumerate", None
    spec = SearchSpec(
        n=args.order,
        m=args.gammas,
        axioms=axioms,
        filter=args.filter,
        target=target,
        theorem=theorem,
        max_models=args.limit,
        time_budget=args.time_budget,
        workers=args.workers,
    )
    if target == "find-counterexample":
        hunt = find_counterexample(spec)
        if args.json:
            _emit_json(hunt_to_json_obj(spec, hunt))
        else:
            if hunt.found:
                sys.stdout.write(serialize_model(hunt.model))
                sys.stdout.write(format_report_table([hunt.report]))
            print(
                f"# scanned={hunt.scanned} found={str(hunt.found).lower()}"
                f" truncated={str(hunt.truncated).lower()} elapsed={hunt.elapsed:.2f}s"
            )
        return 2 if hunt.found else 0

    result = count_models(spec) if target == "count" else enumerate_models(spec)
    if args.json:
        _emit_json(search_to_json_obj(spec, result))
    else:
        for g in result.models:
            sys.stdout.write(serialize_model(g))
        print(
            f"# count={result.count} truncated={str(result.truncated).lower()}"
            f" elapsed={result.elapsed:.2f}s"
        )
    return 0


def cmd_canon(args) -> int:
    g = _load_model(args.model)
    c = canonical_model(g)
    if args.json:
        _emit_json(model_to_json_obj(c))
    else:
        sys.stdout.write(serialize_model(c))
    return 0


class UsageError(Exception):
    pass


_THEOREM_NAMES = ", ".join(t.value for t in TheoremId)


def _add_model_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "model",
        help=f"model file, '-' for stdin, or {PAPER_EXAMPLE_TOKEN} for the bundled example",
    )


def _add_json_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="structured output")


def build_parser() -> _Parser:
    parser = _Parser(
        prog="gag",
        description="Finite-model toolkit for operator groupoids satisfying the left invertive law.",
        epilog=f"The subset sweep cap is overridden with the {SWEEP_CAP_ENV} environment variable.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser(
        "check",
        help="law profile of a model",
        description="Sweep the four structural laws and list left identities. Exit 0 iff the left invertive law holds.",
        epilog="example: gag check @paper-example  |  gag check @paper-example --json",
    )
    _add_model_arg(p)
    _add_json_flag(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser(
        "ideals",
        help="subset families of a model",
        description="List the non-empty subsets forming the requested ideal kind, in canonical member order.",
        epilog=(
            "examples: gag ideals @paper-example --kind two-sided  |  "
            "gag ideals @paper-example --kind all  |  "
            "gag ideals @paper-example --kind two-sided --dot  |  "
            "gag ideals @paper-example --kind left --generated-from b"
        ),
    )
    _add_model_arg(p)
    p.add_argument(
        "--kind",
        default="two-sided",
        choices=[k.value for k in IdealKind] + ["all"],
        help="family to list; all prints the nine families and marks coinciding ones (example: --kind quasi)",
    )
    p.add_argument(
        "--dot",
        action="store_true",
        help="emit the containment diagram as DOT (example: --kind bi --dot)",
    )
    p.add_argument(
        "--generated-from",
        metavar="ELEMS",
        help="closure of the comma-separated seed instead of a sweep; for large carriers (example: --kind left --generated-from b)",
    )
    _add_json_flag(p)
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser(
        "intra",
        help="intra-regularity witnesses",
        description="Per-element decomposition witnesses. Exit 0 iff every element has one.",
        epilog="example: gag intra @paper-example",
    )
    _add_model_arg(p)
    _add_json_flag(p)
    p.set_defaults(func=cmd_intra)

    p = sub.add_parser(
        "verify",
        help="run the theorem suite",
        description=(
            "Run the executable structure theorems against one model. "
            f"Known checks: {_THEOREM_NAMES}. "
            "Exit 0 no failures, 2 some check failed, 3 every selected check was skipped."
        ),
        epilog="examples: gag verify @paper-example  |  gag verify @paper-example --theorem KI --theorem AW --json",
    )
    _add_model_arg(p)
    p.add_argument(
        "--theorem",
        action="append",
        type=TheoremId.from_name,
        metavar="ID",
        help="restrict to one check; repeatable (example: --theorem EQUALIENT)",
    )
    _add_json_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "search",
        help="enumerate models or hunt counterexamples",
        description=(
            "Enumerate models of a given order up to isomorphism, or scan them for a theorem violation. "
            "Exit 0 on a clean run, 2 when a hunt finds a counterexample."
        ),
        epilog=(
            "examples: gag search --order 2 --gammas 1 --axiom ag  |  "
            "gag search --order 3 --axiom agss --filter intra-regular --json  |  "
            "gag search --order 3 --axiom agss --find-counterexample RINTL  |  "
            "gag search --order 3 --count --limit 10 --time-budget 30 --workers 2"
        ),
    )
    p.add_argument("--order", type=int, required=True, help="carrier size n (example: --order 3)")
    p.add_argument("--gammas", type=int, default=1, help="operator count, default 1 (example: --gammas 2)")
    p.add_argument(
        "--axiom",
        choices=("ag", "agss"),
        default="ag",
        help="ag = left invertive only, agss = left invertive + the ag-star-star law (example: --axiom agss)",
    )
    p.add_argument(
        "--filter",
        choices=("any", "intra-regular", "non-intra-regular"),
        default="any",
        help="keep only models with (or without) full intra-regularity (example: --filter non-intra-regular)",
    )
    p.add_argument(
        "--find-counterexample",
        type=TheoremId.from_name,
        metavar="ID",
        help=f"return the first enumerated model failing this check; one of: {_THEOREM_NAMES}",
    )
    p.add_argument("--count", action="store_true", help="print the class count only (example: --count)")
    p.add_argument("--limit", type=int, help="stop after this many distinct models (example: --limit 100)")
    p.add_argument(
        "--time-budget",
        type=float,
        metavar="SECONDS",
        help="wall-clock cutoff; budgeted runs are not byte-reproducible (example: --time-budget 60)",
    )
    p.add_argument("--workers", type=int, default=1, help="parallel workers; the result set is worker-count independent (example: --workers 4)")
    _add_json_flag(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser(
        "canon",
        help="canonical form of a model",
        description="Print the lexicographically least relabeling; equal outputs mean isomorphic inputs.",
        epilog="example: gag canon @paper-example",
    )
    _add_model_arg(p)
    _add_json_flag(p)
    p.set_defaults(func=cmd_canon)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"gag: error: {e}", file=sys.stderr)
        return EX_USAGE
    except ModelFormatError as e:
        print(f"gag: error: {e}", file=sys.stderr)
        return EX_DATA
    except (CapacityError, SizeGuardError, EmptySubsetError) as e:
        print(f"gag: error: {e}", file=sys.stderr)
        return EX_DATA
    except OSError as e:
        print(f"gag: error: {e}", file=sys.stderr)
        return EX_DATA


if __name__ == "__main__":
    sys.exit(main())
