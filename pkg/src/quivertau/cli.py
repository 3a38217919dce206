"""Command-line workbench: parse a session file, run one computation,
report in text or canonical structured form.

Exit codes: 0 success, 1 mathematical refutation (a certification failed),
2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .presentations import (BoundQuiver, InternalConsistencyError, PresentationError,
                            classify_relations, recognize_class)
from .representations import Representation, hom_space
from .homological import PdResult, gd_conditions, gldim, monomial_pd_exact, pd
from .tau import ar_translate, direct_sum_all, is_tau_tilting, search_tau_tilting_sb
from .annquot import annihilator, quotient_presentation, theorem_b_classify
from .endo import end_presentation, gldim_endo, verify_bounds
from .dsl import ParseError, parse_session, serialize_presentation
from .catalog import CASE_IDS, run_case

SCHEMA = "quivertau-report/1"


def _sanitize(obj):
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}" if obj.denominator != 1 else str(obj.numerator)
    if isinstance(obj, dict):
        return {str(k): _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(x) for x in obj]
    if isinstance(obj, PdResult):
        return _sanitize(pd_payload(obj))
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return str(obj)


def canonical_dump(data) -> str:
    return json.dumps(_sanitize(data), sort_keys=True, indent=2) + "\n"


def pd_payload(r: PdResult) -> dict:
    out = {"kind": r.kind}
    if r.kind in ("finite", "at_least"):
        out["value"] = r.value
    if r.certificate is not None:
        out["certificate"] = str(r.certificate)
    return out


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load(path: str, lmax: int):
    return parse_session(_read_source(path), lmax=lmax)


def _module(session, name: str) -> Representation:
    if name not in session.modules:
        raise PresentationError(f"unknown module {name!r}")
    return session.modules[name]


def _summand_list(session, name: str) -> list[Representation]:
    if name not in session.modules:
        raise PresentationError(f"unknown module {name!r}")
    if name in session.summands:
        return [session.modules[x] for x in session.summands[name]]
    return [session.modules[name]]


def cmd_check(session, args) -> tuple[int, dict, list[str]]:
    a = session.algebra
    lines = [f"algebra ok: {len(a.quiver.vertices)} vertices, {len(a.quiver.arrows)} arrows, "
             f"dim {a.dim}, nilpotency {a.nilpotency}"]
    for name in session.module_order:
        m = session.modules[name]
        m.check_relations()
        lines.append(f"module {name}: dim vector {dict((v, d) for v, d in m.dims.items() if d)}")
    data = {"dim": a.dim, "nilpotency": a.nilpotency, "modules": session.module_order}
    return 0, data, lines


def cmd_info(session, args) -> tuple[int, dict, list[str]]:
    a = session.algebra
    rec = recognize_class(a)
    classes = classify_relations(a)
    lines = [str(a),
             f"nilpotency: {a.nilpotency}",
             f"monomial: {rec.is_monomial}",
             f"special biserial: {rec.is_special_biserial}"]
    for v in rec.violations:
        lines.append(f"  violation: {v}")
    for rc in classes:
        extra = ""
        if rc.binomial_pair:
            extra = f" (binomial pair {rc.binomial_pair[0]}, {rc.binomial_pair[1]})"
        lines.append(f"relation {rc.generator}: {rc.kind}{extra}")
    data = {
        "dim": a.dim,
        "nilpotency": a.nilpotency,
        "vertices": list(a.quiver.vertices),
        "arrows": [list(x) for x in a.quiver.arrows],
        "relations": [str(g) for g in a.relations],
        "relation_classes": [{"generator": str(rc.generator), "kind": rc.kind,
                              "binomial_pair": [str(p) for p in rc.binomial_pair]
                              if rc.binomial_pair else None}
                             for rc in classes],
        "is_monomial": rec.is_monomial,
        "is_special_biserial": rec.is_special_biserial,
        "violations": rec.violations,
        "serialized": serialize_presentation(a),
    }
    return 0, data, lines


def cmd_pd(session, args) -> tuple[int, dict, list[str]]:
    m = _module(session, args.module)
    r = pd(m, args.cutoff)
    data = {"module": args.module, "pd": pd_payload(r)}
    return 0, data, [f"pd({args.module}) = {r}"]


def cmd_gldim(session, args) -> tuple[int, dict, list[str]]:
    r = gldim(session.algebra, args.cutoff)
    lines = [f"gldim = {r}"]
    per = {}
    for v in session.algebra.quiver.vertices:
        from .representations import standard_module

        rv = pd(standard_module(session.algebra, "S", v), args.cutoff)
        per[v] = pd_payload(rv)
        lines.append(f"  pd S({v}) = {rv}")
    data = {"gldim": pd_payload(r), "pd_simples": per}
    return 0, data, lines


def cmd_tau(session, args) -> tuple[int, dict, list[str]]:
    m = _module(session, args.module)
    t = ar_translate(m)
    dims = {v: d for v, d in t.dims.items() if d}
    data = {"module": args.module, "tau_dims": dims, "is_zero": t.is_zero()}
    return 0, data, [f"tau({args.module}) dimension vector: {dims or 0}"]


def cmd_tautilt(session, args) -> tuple[int, dict, list[str]]:
    summands = _summand_list(session, args.module)
    rep = is_tau_tilting(summands)
    lines = [f"summands: {len(summands)} (need {rep.required})",
             f"pairwise non-isomorphic: {rep.pairwise_non_iso}",
             f"each indecomposable: {rep.each_indecomposable}",
             f"tau-rigid: {rep.rigid}",
             f"verdict: {rep.verdict}"]
    data = {"module": args.module, "count": rep.count, "required": rep.required,
            "pairwise_non_iso": rep.pairwise_non_iso,
            "each_indecomposable": rep.each_indecomposable,
            "rigid": rep.rigid, "verdict": rep.verdict}
    return (0 if rep.verdict else 1), data, lines


def cmd_ann(session, args) -> tuple[int, dict, list[str]]:
    summands = _summand_list(session, args.module)
    t = direct_sum_all(summands)
    ann = annihilator(t)
    gens = ann.path_generators
    lines = [f"ann {args.module}: dim {ann.dim}, nilpotent {ann.nilpotent}"]
    rows = []
    if gens is None:
        lines.append("  not generated by paths")
    else:
        lines.append("  generators: " + (", ".join(str(p) for p in gens) if gens else "(zero ideal)"))
        for p in gens:
            if len(p) >= 2:
                wc = theorem_b_classify(session.algebra, ann, p)
                lines.append(f"  {p}: {wc}")
                rows.append({"path": str(p), "case": wc.kind,
                             "gamma": str(wc.gamma) if wc.gamma else None,
                             "relation": str(wc.relation) if wc.relation else None})
            else:
                rows.append({"path": str(p), "case": "length-one", "gamma": None,
                             "relation": None})
    data = {"module": args.module, "dim": ann.dim, "nilpotent": ann.nilpotent,
            "path_generators": [str(p) for p in gens] if gens is not None else None,
            "classification": rows}
    return 0, data, lines


def cmd_quotient(session, args) -> tuple[int, dict, list[str]]:
    summands = _summand_list(session, args.module)
    ann = annihilator(direct_sum_all(summands))
    qp = quotient_presentation(session.algebra, ann)
    ser = serialize_presentation(qp.quotient)
    lines = [f"A/ann({args.module}): dim {qp.quotient.dim}, "
             f"dropped arrows: {', '.join(qp.arrows_dropped) or '(none)'}",
             ser.rstrip()]
    data = {"module": args.module, "dropped": qp.arrows_dropped,
            "relations": [str(g) for g in qp.quotient.relations],
            "dim": qp.quotient.dim, "serialized": ser}
    return 0, data, lines


def cmd_endo(session, args) -> tuple[int, dict, list[str]]:
    summands = _summand_list(session, args.module)
    ep = end_presentation(summands)
    g = gldim_endo(summands, args.cutoff)
    lines = [f"End({args.module}): dim {ep.dim}, "
             f"{len(ep.extracted.quiver.arrows)} arrows, "
             f"{len(ep.extracted.relations)} relations",
             f"radical filtration: {ep.radical_filtration}",
             f"gldim End = {g}",
             serialize_presentation(ep.extracted).rstrip()]
    data = {"module": args.module, "dim": ep.dim,
            "arrows": [list(x) for x in ep.extracted.quiver.arrows],
            "relations": [str(x) for x in ep.extracted.relations],
            "radical_filtration": ep.radical_filtration,
            "gldim": pd_payload(g),
            "serialized": serialize_presentation(ep.extracted)}
    return 0, data, lines


def cmd_bounds(session, args) -> tuple[int, dict, list[str]]:
    summands = _summand_list(session, args.module)
    br = verify_bounds(session.algebra, summands, args.cutoff)
    items = {"theoremA": br.theorem_a, "theoremC": br.theorem_c,
             "theoremD": br.theorem_d, "sandwich": br.sandwich,
             "quotient_comparison": br.quotient_comparison}
    lines = []
    for k, item in items.items():
        lines.append(f"{k}: {item.status} ({item.detail})")
    lines.append(f"gldim A = {br.gldim_a}; gldim B = {br.gldim_b}; "
                 f"gldim A/ann T = {br.gldim_quotient}; "
                 f"pd_A(A/ann T) = {br.pd_a_quotient}; pd_A T = {br.pd_a_t}")
    data = {k: {"status": v.status, "detail": v.detail} for k, v in items.items()}
    data.update({"gldim_a": pd_payload(br.gldim_a), "gldim_b": pd_payload(br.gldim_b),
                 "gldim_quotient": pd_payload(br.gldim_quotient),
                 "pd_a_quotient": pd_payload(br.pd_a_quotient),
                 "pd_a_t": pd_payload(br.pd_a_t),
                 "ann_generators": [str(p) for p in br.ann_generators]
                 if br.ann_generators is not None else None})
    code = 0 if br.all_ok else 1
    return code, data, lines


def cmd_search(session, args) -> tuple[int, dict, list[str]]:
    results = search_tau_tilting_sb(session.algebra, limit=args.limit)
    lines = [f"tau-tilting modules found: {len(results)}"]
    payload = []
    for r in results:
        labels = [c.label for c in r]
        payload.append(labels)
        lines.append("  " + " + ".join(labels))
    return 0, {"count": len(results), "results": payload}, lines


def cmd_paper_suite(args) -> tuple[int, dict, list[str]]:
    wanted = args.case or list(CASE_IDS)
    unknown = [c for c in wanted if c not in CASE_IDS]
    lines = []
    for c in unknown:
        lines.append(f"warning: unknown case id {c!r}")
    wanted = [c for c in wanted if c in CASE_IDS]
    all_ok = True
    payload = []
    for cid in wanted:
        case = run_case(cid, cutoff=args.cutoff)
        status = "PASS" if case.passed else "FAIL"
        all_ok = all_ok and case.passed
        lines.append(f"{cid:8s} {status}  {case.description}")
        rows = []
        for r in case.rows:
            mark = "ok  " if r.passed else "FAIL"
            note = f"  [{r.note}]" if r.note else ""
            lines.append(f"  {mark} {r.name}: expected {r.expected}, got {r.actual}{note}")
            rows.append({"name": r.name, "passed": r.passed, "expected": r.expected,
                         "actual": r.actual, "note": r.note})
        payload.append({"case": cid, "passed": case.passed, "rows": rows})
    return (0 if all_ok else 1), {"cases": payload}, lines


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quivertau",
        description="workbench for tau-tilting data over bound quiver algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, module_arg=False):
        p.add_argument("file", help="session file path, or - for stdin")
        if module_arg:
            p.add_argument("module", help="name of a module defined in the session")
        p.add_argument("--cutoff", type=int, default=12)
        p.add_argument("--lmax", type=int, default=30)
        p.add_argument("--limit", type=int, default=64)
        p.add_argument("--format", choices=["text", "structured"], default="text")

    for name, needs_module in [("check", False), ("info", False), ("pd", True),
                               ("gldim", False), ("tau", True), ("tautilt", True),
                               ("ann", True), ("quotient", True), ("endo", True),
                               ("bounds", True), ("search", False)]:
        common(sub.add_parser(name), needs_module)
    ps = sub.add_parser("paper-suite")
    ps.add_argument("--case", action="append", default=None)
    ps.add_argument("--cutoff", type=int, default=12)
    ps.add_argument("--format", choices=["text", "structured"], default="text")
    return ap


_HANDLERS = {
    "check": cmd_check, "info": cmd_info, "pd": cmd_pd, "gldim": cmd_gldim,
    "tau": cmd_tau, "tautilt": cmd_tautilt, "ann": cmd_ann,
    "quotient": cmd_quotient, "endo": cmd_endo, "bounds": cmd_bounds,
    "search": cmd_search,
}


def run_command(argv: list[str]) -> tuple[int, str]:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return (2 if e.code else 0), ""
    try:
        if args.command == "paper-suite":
            code, data, lines = cmd_paper_suite(args)
        else:
            session = _load(args.file, args.lmax)
            code, data, lines = _HANDLERS[args.command](session, args)
    except (ParseError, PresentationError, FileNotFoundError) as e:
        return 2, f"error: {e}\n"
    except InternalConsistencyError as e:
        return 1, f"internal consistency error: {e}\n"
    data = {"schema": SCHEMA, "command": args.command, "exit_code": code, "result": data}
    if args.format == "structured":
        return code, canonical_dump(data)
    return code, "\n".join(lines) + "\n"


def main() -> None:
    code, text = run_command(sys.argv[1:])
    sys.stdout.write(text)
    raise SystemExit(code)


if __name__ == "__main__":
    main()
