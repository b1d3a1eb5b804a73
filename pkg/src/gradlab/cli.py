"""Command-line surface.

Subcommands, one report line per instance, machine output with --json:

    validate            parse and validate any instance kind
    semigroup-report    zero, idempotents, cancellativity, local groups
    group-report        center, ascending central series, hypercentrality
    graded-report       components, graded simplicity, brute simplicity
    check               corner or center criterion against brute force
    skew-build          construct the skew ring of a partial action
    skew-equivalence    graded simplicity of the skew ring vs invariant ideals
    skew-simplicity     the three-way simplicity comparison
    central-witness     minimal-support central element search
    central-chain       graded simplicity along central quotients vs brute
    corpus              emit a deterministic generated corpus
    catalog             list built-in instances or print one

Exit codes: 0 all fine, 1 falsification (two routes that must agree did
not), 2 invalid input, 3 hypotheses unmet, 4 budget exceeded. With several
instances the most alarming code wins, in the order 1, 2, 3, 4.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field, fields

import numpy as np

from .algebras import center, is_field, is_simple
from .catalog import build_catalog, catalog_names
from .corpus import generate_corpus
from .criterion import (
    check_hypotheses, cross_validate, decide_center_criterion, decide_corner_criterion,
    minimal_support_central, quotient_chain_graded_simple,
)
from .errors import (
    EXIT_BUDGET, EXIT_FALSIFIED, EXIT_HYPOTHESES, EXIT_INVALID, EXIT_OK,
    BudgetExceededError, HypothesesUnmetError, ValidationError,
)
from .fflinalg import DEFAULT_BUDGET
from .gradings import is_graded_simple
from .groups import center as group_center
from .groups import is_hypercentral, upper_central_series
from .instances import InstanceDocument, canonical_json, instance_from_object, parse_instances
from .partial import build_pskew, check_skew_equivalence, check_skew_simplicity
from .semigroups import (
    is_cancellative_at, is_inverse_semigroup, is_simple_semigroup, nonzero_eGe_as_group,
    nonzero_idempotents,
)

_STATUS_EXIT = {
    "ok": EXIT_OK,
    "falsified": EXIT_FALSIFIED,
    "invalid": EXIT_INVALID,
    "hypotheses-unmet": EXIT_HYPOTHESES,
    "budget-exceeded": EXIT_BUDGET,
}
_EXIT_PRIORITY = (EXIT_FALSIFIED, EXIT_INVALID, EXIT_HYPOTHESES, EXIT_BUDGET)


@dataclass
class RunReport:
    """One instance's outcome under one subcommand."""

    command: str
    name: str
    kind: str
    sha256: str
    status: str
    verdicts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    error: str | None = None
    timing_ms: float | None = field(default=None, compare=False)

    @property
    def falsification(self) -> bool:
        return self.status == "falsified"

    @property
    def exit_code(self) -> int:
        return _STATUS_EXIT[self.status]

    def to_dict(self) -> dict:
        out = {
            "command": self.command,
            "name": self.name,
            "kind": self.kind,
            "sha256": self.sha256,
            "status": self.status,
            "falsification": self.falsification,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
            "error": self.error,
        }
        if self.timing_ms is not None:
            out["timing_ms"] = self.timing_ms
        return out


def parse_report(text: str) -> RunReport:
    """Rebuild a RunReport from its canonical JSON line."""
    doc = json.loads(text)
    keep = {f.name for f in fields(RunReport)}
    kwargs = {k: v for k, v in doc.items() if k in keep}
    return RunReport(**kwargs)


def _human(report: RunReport) -> str:
    bits = [f"[{report.name}]", report.command, report.status]
    for key, value in report.verdicts.items():
        bits.append(f"{key}={value}")
    if report.error:
        bits.append(f"error: {report.error}")
    if report.timing_ms is not None:
        bits.append(f"({report.timing_ms:.1f} ms)")
    return " ".join(bits)


def _vec(values) -> list[int]:
    return [int(x) for x in values]


# per-command instance handlers, each returning (status, verdicts, witnesses)


def _run_validate(doc: InstanceDocument, args) -> tuple[str, dict, dict]:
    verdicts = {"valid": True}
    if doc.kind in ("algebra", "graded_algebra", "partial_action"):
        algebra = doc.payload if doc.kind == "algebra" else doc.payload.algebra
        verdicts["dim"] = int(algebra.dim)
        verdicts["p"] = int(algebra.field.p)
        verdicts["unital"] = algebra.unit is not None
    if doc.kind in ("semigroup", "group"):
        verdicts["n"] = int(doc.payload.n)
    return "ok", verdicts, {}


def _run_semigroup_report(doc: InstanceDocument, args) -> tuple[str, dict, dict]:
    sg = doc.payload
    idems = nonzero_idempotents(sg)
    locals_ = {}
    for e in idems:
        entry = {"cancellative": bool(is_cancellative_at(sg, e))}
        got = nonzero_eGe_as_group(sg, e)
        entry["local_group"] = got is not None
        if got is not None:
            group, members = got
            entry["local_group_order"] = int(group.n)
            entry["local_group_hypercentral"] = bool(is_hypercentral(group))
            entry["members"] = _vec(members)
        locals_[str(e)] = entry
    verdicts = {
        "n": int(sg.n),
        "zero": None if sg.zero is None else int(sg.zero),
        "nonzero_idempotents": _vec(idems),
        "inverse_semigroup": bool(is_inverse_semigroup(sg)),
        "simple_semigroup": bool(is_simple_semigroup(sg)),
    }
    return "ok", verdicts, {"local": locals_}


def _run_group_report(doc: InstanceDocument, args) -> tuple[str, dict, dict]:
    group = doc.payload
    series = upper_central_series(group)
    verdicts = {
        "n": int(group.n),
        "identity": int(group.identity),
        "center_size": len(group_center(group)),
        "series_sizes": [len(z) for z in series.chain],
        "hypercentral": bool(series.terminated),
        "abelian": len(group_center(group)) == group.n,
    }
    return "ok", verdicts, {}


def _run_graded_report(doc: InstanceDocument, args) -> tuple[str, dict, dict]:
    graded = doc.payload
    ok, wit = is_graded_simple(graded, args.budget)
    brute, ideal = is_simple(graded.algebra, args.budget)
    verdicts = {
        "dim": int(graded.algebra.dim),
        "p": int(graded.algebra.field.p),
        "unital": graded.algebra.unit is not None,
        "support": {str(g): int(len(graded.component_indices(g)))
                    for g in sorted({int(x) for x in graded.deg})},
        "graded_simple": bool(ok),
        "brute_simple": bool(brute),
        "center_is_field": bool(is_field(center(graded.algebra).algebra, args.budget)),
    }
    witnesses = {}
    if wit is not None:
        witnesses["graded_ideal_generator"] = _vec(wit)
    if ideal is not None:
        witnesses["proper_ideal_dim"] = int(ideal.dim)
    return "ok", verdicts, witnesses


def _pick_e(doc: InstanceDocument, args) -> int:
    if getattr(args, "e", None) is not None:
        return int(args.e)
    meta_e = doc.meta.get("e")
    if meta_e is not None:
        return int(meta_e)
    graded = doc.payload
    candidates = nonzero_idempotents(graded.grading)
    if not candidates:
        raise HypothesesUnmetError("the grading semigroup has no nonzero idempotent")
    for e in candidates:
        if check_hypotheses(graded, e, args.budget).all_met:
            return e
    return candidates[0]


def _parse_f(args, dim: int) -> np.ndarray | None:
    if getattr(args, "f", None) is None:
        return None
    try:
        vec = np.array([int(x) for x in args.f.split(",")], dtype=np.int64)
    except ValueError as ex:
        raise ValidationError(f"--f must be a comma-separated integer vector: {ex}") from ex
    if vec.shape[0] != dim:
        raise ValidationError(f"--f must have {dim} coordinates")
    return vec


def _run_check(doc: InstanceDocument, args) -> tuple[str, dict, dict]:
    graded = doc.payload
    if args.mode == "brute":
        brute, ideal = is_simple(graded.algebra, args.budget)
        witnesses = {} if ideal is None else {"proper_ideal_dim": int(ideal.dim)}
        return "ok", {"brute_simple": bool(brute)}, witnesses

    if args.criterion == "center":
        verdict = decide_center_criterion(graded, args.budget)
    else:
        e = _pick_e(doc, args)
        f = _parse_f(args, graded.algebra.dim)
        verdict = decide_corner_criterion(graded, e, f, args.budget)

    if args.mode == "criterion":
        out = verdict.to_dict()
        witnesses = out.pop("witnesses")
        out.pop("brute_simple")
        out.pop("agreement")
        return "ok", out, witnesses

    brute, ideal = is_simple(graded.algebra, args.budget)
    agreement = bool(brute == verdict.predicted_simple)
    out = verdict.to_dict()
    witnesses = out.pop("witnesses")
    out["brute_simple"] = bool(brute)
    out["agreement"] = agreement
    if ideal is not None:
        witnesses["proper_ideal_dim"] = int(ideal.dim)
    return ("ok" if agreement else "falsified"), out, witnesses


def _run_skew_build(doc: InstanceDocument, args) -> tuple[str, dict, dict]:
    pa = doc.payload
    skew = build_pskew(pa)
    built = instance_from_object(
        "graded_algebra", skew, {"name": doc.meta.get("name", "skew") or "skew", "built-from": doc.sha256}
    )
    verdicts = {
        "dim": int(skew.algebra.dim),
        "component_dims": [int(pa.domains[g].dim) for g in range(pa.group.n)],
        "unital": skew.algebra.unit is not None,
    }
    return "ok", verdicts, {"graded_instance": built.raw}


def _run_skew_equivalence(doc: InstanceDocument, args) -> tuple[str, dict, dict]:
    report = check_skew_equivalence(doc.payload, args.budget)
    out = report.to_dict()
    witnesses = out.pop("witnesses")
    return ("ok" if report.agreement else "falsified"), out, witnesses


def _run_skew_simplicity(doc: InstanceDocument, args) -> tuple[str, dict, dict]:
    report = check_skew_simplicity(doc.payload, args.budget)
    out = report.to_dict()
    witnesses = out.pop("witnesses")
    return ("ok" if report.agreement else "falsified"), out, witnesses


def _run_central_witness(doc: InstanceDocument, args) -> tuple[str, dict, dict]:
    got = minimal_support_central(doc.payload, budget=args.budget)
    if got is None:
        return "falsified", {"found": False}, {}
    vec, support = got
    return "ok", {"found": True, "support": int(support)}, {"witness": _vec(vec)}


def _run_central_chain(doc: InstanceDocument, args) -> tuple[str, dict, dict]:
    all_simple, levels = quotient_chain_graded_simple(doc.payload, args.budget)
    brute, _ = is_simple(doc.payload.algebra, args.budget)
    agreement = (not all_simple) or bool(brute)
    verdicts = {
        "all_levels_graded_simple": bool(all_simple),
        "brute_simple": bool(brute),
        "agreement": agreement,
    }
    return ("ok" if agreement else "falsified"), verdicts, {"levels": levels}


_HANDLERS = {
    "validate": (_run_validate, None),
    "semigroup-report": (_run_semigroup_report, ("semigroup", "group")),
    "group-report": (_run_group_report, ("group",)),
    "graded-report": (_run_graded_report, ("graded_algebra",)),
    "check": (_run_check, ("graded_algebra",)),
    "skew-build": (_run_skew_build, ("partial_action",)),
    "skew-equivalence": (_run_skew_equivalence, ("partial_action",)),
    "skew-simplicity": (_run_skew_simplicity, ("partial_action",)),
    "central-witness": (_run_central_witness, ("graded_algebra",)),
    "central-chain": (_run_central_chain, ("graded_algebra",)),
}


def _load_instances(args) -> list[InstanceDocument]:
    sources = [s for s in ("input", "catalog", "corpus") if getattr(args, s, None) is not None]
    if len(sources) != 1:
        raise ValidationError("choose exactly one of --input, --catalog, --corpus")
    if args.input is not None:
        text = sys.stdin.read() if args.input == "-" else open(args.input, "r", encoding="utf-8").read()
        return parse_instances(text)
    if args.catalog is not None:
        kind, obj = build_catalog(args.catalog)
        return [instance_from_object(kind, obj, {"name": args.catalog})]
    docs = generate_corpus(args.corpus, graded=args.graded, partial=args.partial,
                           primes=tuple(int(x) for x in args.primes.split(",")))
    return docs


def _run_command(args) -> int:
    handler, kinds = _HANDLERS[args.command]
    try:
        docs = _load_instances(args)
    except ValidationError as ex:
        report = RunReport(args.command, "<input>", "unknown", "", "invalid", error=str(ex))
        _emit(report, args)
        return EXIT_INVALID

    if kinds is not None:
        if args.corpus is not None:
            docs = [d for d in docs if d.kind in kinds]
        else:
            bad = [d for d in docs if d.kind not in kinds]
            if bad:
                names = ", ".join(d.meta.get("name", d.kind) for d in bad[:3])
                report = RunReport(
                    args.command, names, bad[0].kind, bad[0].sha256, "invalid",
                    error=f"{args.command} expects kind in {kinds}",
                )
                _emit(report, args)
                return EXIT_INVALID

    worst = EXIT_OK
    seen_codes = set()
    counts = {s: 0 for s in _STATUS_EXIT}
    for doc in docs:
        started = time.perf_counter()
        name = doc.meta.get("name") or doc.kind
        try:
            status, verdicts, witnesses = handler(doc, args)
            report = RunReport(args.command, name, doc.kind, doc.sha256, status,
                               verdicts, witnesses)
        except HypothesesUnmetError as ex:
            detail = ex.report.to_dict() if hasattr(ex.report, "to_dict") else (ex.report or {})
            report = RunReport(args.command, name, doc.kind, doc.sha256, "hypotheses-unmet",
                               witnesses={"hypotheses": detail}, error=str(ex))
        except BudgetExceededError as ex:
            report = RunReport(args.command, name, doc.kind, doc.sha256, "budget-exceeded",
                               error=str(ex))
        except ValidationError as ex:
            report = RunReport(args.command, name, doc.kind, doc.sha256, "invalid",
                               error=str(ex))
        if args.timing:
            report.timing_ms = round((time.perf_counter() - started) * 1000.0, 3)
        counts[report.status] += 1
        seen_codes.add(report.exit_code)
        _emit(report, args)

    for code in _EXIT_PRIORITY:
        if code in seen_codes:
            worst = code
            break
    if not args.json:
        total = sum(counts.values())
        summary = ", ".join(f"{v} {k}" for k, v in counts.items() if v)
        print(f"{total} instance(s): {summary or 'none'} -> exit {worst}")
    return worst


def _emit(report: RunReport, args) -> None:
    if args.json:
        print(canonical_json(report.to_dict()))
    else:
        print(_human(report))


def _run_corpus(args) -> int:
    docs = generate_corpus(args.seed, graded=args.graded, partial=args.partial,
                           primes=tuple(int(x) for x in args.primes.split(",")))
    text = canonical_json([doc.raw for doc in docs])
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"wrote {len(docs)} instances to {args.out}")
    else:
        print(text)
    return EXIT_OK


def _run_catalog(args) -> int:
    if args.name:
        kind, obj = build_catalog(args.name)
        doc = instance_from_object(kind, obj, {"name": args.name})
        print(doc.serialize())
        return EXIT_OK
    names = catalog_names()
    if args.json:
        print(canonical_json(names))
    else:
        for kind in sorted(names):
            print(f"{kind}:")
            for name in names[kind]:
                print(f"  {name}")
    return EXIT_OK


def _add_source_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", help="instance JSON file, or - for stdin")
    sub.add_argument("--catalog", help="built-in instance name")
    sub.add_argument("--corpus", type=int, help="generate the corpus for this seed")
    sub.add_argument("--graded", type=int, default=210, help="corpus graded count")
    sub.add_argument("--partial", type=int, default=110, help="corpus partial count")
    sub.add_argument("--primes", default="2,3", help="corpus primes, comma-separated")
    sub.add_argument("--json", action="store_true", help="one canonical JSON report per line")
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                     help="enumeration budget (exceeding it is exit 4)")
    sub.add_argument("--timing", action="store_true",
                     help="add wall-clock timing to reports (non-canonical)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradlab",
        description="Graded algebras over prime fields: build them, decide simplicity twice, compare.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (
        ("validate", "parse and validate instances"),
        ("semigroup-report", "idempotents, cancellativity, local groups"),
        ("group-report", "center and ascending central series"),
        ("graded-report", "components and both simplicity verdicts"),
        ("check", "simplicity criterion against brute force"),
        ("skew-build", "construct the skew ring of a partial action"),
        ("skew-equivalence", "skew graded simplicity vs invariant ideals"),
        ("skew-simplicity", "three-way simplicity comparison"),
        ("central-witness", "minimal-support central element"),
        ("central-chain", "graded simplicity along central quotients"),
    ):
        sub = subs.add_parser(name, help=helptext)
        _add_source_options(sub)
        if name == "check":
            sub.add_argument("--mode", choices=("brute", "criterion", "both"), default="both")
            sub.add_argument("--criterion", choices=("corner", "center"), default="corner")
            sub.add_argument("--e", type=int, default=None,
                             help="idempotent degree for the corner route")
            sub.add_argument("--f", default=None,
                             help="idempotent vector for the corner, comma-separated")

    corpus = subs.add_parser("corpus", help="emit a deterministic corpus")
    corpus.add_argument("seed", type=int)
    corpus.add_argument("--graded", type=int, default=210)
    corpus.add_argument("--partial", type=int, default=110)
    corpus.add_argument("--primes", default="2,3")
    corpus.add_argument("--out", help="write to this file instead of stdout")

    cat = subs.add_parser("catalog", help="list built-in instances or print one")
    cat.add_argument("name", nargs="?", help="print this entry as canonical JSON")
    cat.add_argument("--json", action="store_true")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "corpus":
            return _run_corpus(args)
        if args.command == "catalog":
            return _run_catalog(args)
        return _run_command(args)
    except ValidationError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceededError as ex:
        print(f"budget exceeded: {ex}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_INVALID


def console_main() -> None:
    sys.exit(main())
