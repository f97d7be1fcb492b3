"""Command-line front end.

Graphs are read as JSON from stdin or ``--input``; ``generate`` writes the
same format, so subcommands compose with pipes::

    layered-hilbert generate boolean 3 | layered-hilbert hilbert-b --json

Exit codes: 0 success, 1 domain error (invalid graph, violated hypothesis),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import generators
from .graph import (
    GraphError,
    graph_from_json,
    graph_to_json,
    is_uniform,
    level_window_subgraph,
    minimal_vertices,
    validate,
)
from .homology import is_cohen_macaulay, mobius, reduced_cohomology_dims
from .linalg import FieldSpec
from .oracle import b_graded_dims
from .series import (
    HypothesisError,
    HypothesisWarning,
    TruncatedSeries,
    hilbert_B,
    hilbert_B_low_degree,
    inv_hilbert_A,
    inv_hilbert_A_chain_count,
    numerically_koszul,
    series_inverse,
)


class DomainError(Exception):
    pass


def _dump(doc) -> str:
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)


def _field_arg(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", metavar="FILE", help="graph JSON (default: stdin)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--field", type=_field_arg, default=FieldSpec(), help="'q' (default) or 'p:PRIME'")
    common.add_argument("--both-fields", action="store_true",
                        help="also compute over a prime field (the --field prime, else 2) and compare")
    common.add_argument("--strict", action="store_true", help="treat violated hypotheses as errors")

    parser = argparse.ArgumentParser(prog="layered-hilbert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common], help="check the layered-graph invariants")
    sub.add_parser("uniform", parents=[common], help="uniformity test")
    for name, helptext in (("homology", "reduced cohomology of the graph poset or a window"),
                           ("mobius", "Mobius function of the graph poset or a window")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--vertex", help="restrict to the window below this vertex")
        p.add_argument("--window", type=int, help="window depth i (needs --vertex)")
    p = sub.add_parser("cm-check", parents=[common], help="Cohen-Macaulay test")
    p.add_argument("--intervals-hat", action="store_true",
                   help="also check intervals involving an adjoined bottom/top")
    sub.add_parser("hilbert-b", parents=[common], help="Hilbert series of B(G) from window cohomology")
    p = sub.add_parser("inv-hilbert-a", parents=[common], help="inverse Hilbert series of A(G)")
    p.add_argument("--route", choices=("cohomology", "chains", "both"), default="cohomology")
    p.add_argument("--max-degree", type=int, help="also print h(A) itself up to this degree")
    sub.add_parser("koszul", parents=[common], help="numerical Koszulity")
    p = sub.add_parser("oracle", parents=[common], help="dim B_n from the presentation")
    p.add_argument("--max-degree", type=int)
    sub.add_parser("report", parents=[common], help="full pipeline in one document")

    gen = sub.add_parser("generate", help="emit a graph from a named family")
    gsub = gen.add_subparsers(dest="family", required=True)
    g = gsub.add_parser("complete", help="complete layered graph, sizes top level first")
    g.add_argument("sizes", type=int, nargs="+")
    g = gsub.add_parser("boolean")
    g.add_argument("n", type=int)
    g = gsub.add_parser("cassidy-shelton")
    g.add_argument("--delete-edge", action="store_true", help="drop the edge (b3, c2)")
    g = gsub.add_parser("prescribed")
    g.add_argument("r", type=int)
    g.add_argument("s", type=int)
    g = gsub.add_parser("palindromic")
    g.add_argument("r", type=int)
    g = gsub.add_parser("random")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("sizes", type=int, nargs="+")
    return parser


def _read_graph(args):
    try:
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
    except OSError as exc:
        raise DomainError(str(exc)) from None
    return graph_from_json(text)


def _second_field(args) -> FieldSpec:
    return args.field if args.field.p is not None else FieldSpec(2)


def _require_valid(graph) -> None:
    bad = validate(graph)
    if bad:
        raise DomainError("invalid layered graph: " + "; ".join(bad))


def _target(args, graph):
    _require_valid(graph)
    if args.vertex is None:
        return graph
    i = graph.height + 1 if args.window is None else args.window
    return level_window_subgraph(graph, args.vertex, i)


def _series_doc(s: TruncatedSeries, caught) -> dict:
    doc = s.to_json()
    if caught:
        doc["warnings"] = caught
    return doc


def _run_with_warnings(fn, *a, strict=False):
    with warnings.catch_warnings(record=True) as rec:
        warnings.simplefilter("always", HypothesisWarning)
        out = fn(*a)
    msgs = [str(w.message) for w in rec if issubclass(w.category, HypothesisWarning)]
    if msgs and strict:
        raise DomainError(msgs[0])
    return out, msgs


def cmd_validate(args, graph, out):
    bad = validate(graph)
    if args.json:
        out.append(_dump({"valid": not bad, "violations": bad}))
    else:
        out.extend(bad or ["valid"])
    return 1 if bad else 0


def cmd_uniform(args, graph, out):
    _require_valid(graph)
    rep = is_uniform(graph)
    mins = minimal_vertices(graph)
    doc = {"uniform": rep.uniform, "failing_tails": list(rep.failing_tails),
           "minimal_vertices": list(mins.vertices), "minimal_all_level_zero": mins.all_level_zero,
           "unique_minimal": mins.unique}
    if args.json:
        out.append(_dump(doc))
    else:
        out.append("uniform" if rep.uniform else f"not uniform; failing tails: {', '.join(rep.failing_tails)}")
    return 0 if rep.uniform or not args.strict else 1


def cmd_homology(args, graph, out):
    target = _target(args, graph)
    betti = reduced_cohomology_dims(target, args.field)
    doc = betti.to_json()
    if args.both_fields:
        other = reduced_cohomology_dims(target, _second_field(args))
        doc = {"fields": [betti.to_json(), other.to_json()], "agree": betti.dims == other.dims}
    if args.json:
        out.append(_dump(doc))
    else:
        for tbl in ([betti] if not args.both_fields else [betti, other]):
            out.append(f"{tbl.field.label}: " + ", ".join(f"H~^{i}={d}" for i, d in sorted(tbl.dims.items())))
        if args.both_fields:
            out.append("fields agree" if doc["agree"] else "fields DISAGREE")
    return 0


def cmd_mobius(args, graph, out):
    mu = mobius(_target(args, graph))
    out.append(_dump({"mobius": mu}) if args.json else str(mu))
    return 0


def cmd_cm(args, graph, out):
    _require_valid(graph)
    rep = is_cohen_macaulay(graph, args.field, strict=args.intervals_hat)
    failing = [{"lower": x, "upper": y, "dims": {str(i): d for i, d in dims.items()}} for x, y, dims in rep.failing]
    if args.json:
        out.append(_dump({"cohen_macaulay": rep.cohen_macaulay, "failing": failing}))
    else:
        out.append("Cohen-Macaulay" if rep else "not Cohen-Macaulay")
        out.extend(f"  ({f['lower']}, {f['upper']}): {f['dims']}" for f in failing)
    return 0


def cmd_hilbert_b(args, graph, out):
    _require_valid(graph)
    hb, msgs = _run_with_warnings(hilbert_B, graph, args.field, strict=args.strict)
    doc = _series_doc(hb, msgs)
    if args.both_fields:
        other, _ = _run_with_warnings(hilbert_B, graph, _second_field(args))
        doc["other_field"] = {"field": _second_field(args).label, **other.to_json()}
        doc["fields_agree"] = other == hb
    if args.json:
        out.append(_dump(doc))
    else:
        out.append(f"h(B, t) = {hb}")
        out.extend(f"warning: {m}" for m in msgs)
    return 0


def cmd_inv_hilbert_a(args, graph, out):
    _require_valid(graph)
    doc = {}
    lines = []
    if args.route in ("cohomology", "both"):
        s, msgs = _run_with_warnings(inv_hilbert_A, graph, args.field, strict=args.strict)
        doc["cohomology"] = _series_doc(s, msgs)
        lines.append(f"h(A, t)^-1 = {s}")
        lines.extend(f"warning: {m}" for m in msgs)
        if args.max_degree is not None:
            hA = series_inverse(s.truncate(args.max_degree))
            doc["cohomology"]["hilbert_A"] = hA.to_json()
            lines.append(f"h(A, t) = {hA} + O(t^{args.max_degree + 1})")
    if args.route in ("chains", "both"):
        try:
            c = inv_hilbert_A_chain_count(graph)
        except HypothesisError as exc:
            raise DomainError(str(exc)) from None
        doc["chains"] = c.to_json()
        lines.append(f"h(A, t)^-1 = {c}  (chain count)")
    if args.route == "both":
        doc["agree"] = doc["cohomology"]["coeffs"] == doc["chains"]["coeffs"]
        lines.append("routes agree" if doc["agree"] else "routes DISAGREE")
    if args.json:
        out.append(_dump(doc if args.route == "both" else doc[args.route]))
    else:
        out.extend(lines)
    return 0


def cmd_koszul(args, graph, out):
    _require_valid(graph)
    try:
        rep = numerically_koszul(graph, args.field)
    except HypothesisError as exc:
        raise DomainError(str(exc)) from None
    if args.json:
        out.append(_dump(rep.to_json()))
    else:
        out.append("numerically Koszul" if rep.verdict else "not numerically Koszul")
        out.extend(f"  defect in degree {i}: {d}" for i, d in sorted(rep.defects.items()))
    return 0


def cmd_oracle(args, graph, out):
    _require_valid(graph)
    dims = b_graded_dims(graph, args.max_degree, args.field)
    hb, _ = _run_with_warnings(hilbert_B, graph, args.field)
    match = dims == list(hb.truncate(len(dims) - 1).coeffs)
    if args.json:
        out.append(_dump({"dims": dims, "matches_hilbert_B": match}))
    else:
        out.append("dim B_n: " + " ".join(map(str, dims)))
        out.append("matches hilbert_B" if match else "MISMATCH with hilbert_B")
    return 0 if match else 1


def build_report(graph, field: FieldSpec) -> dict:
    """Validate, test uniformity, compute both series, Koszulity and the oracle check."""
    doc: dict = {
        "graph": {"vertices": len(graph.vertices), "edges": len(graph.edges), "height": graph.height},
        "violations": validate(graph),
    }
    if doc["violations"]:
        return doc
    rep = is_uniform(graph)
    mins = minimal_vertices(graph)
    doc["uniform"] = {"uniform": rep.uniform, "failing_tails": list(rep.failing_tails)}
    doc["minimal_vertices"] = list(mins.vertices)
    hb, msgs = _run_with_warnings(hilbert_B, graph, field)
    doc["hilbert_B"] = _series_doc(hb, msgs)
    ia, msgs = _run_with_warnings(inv_hilbert_A, graph, field)
    doc["inv_hilbert_A"] = _series_doc(ia, msgs)
    if mins.unique and mins.all_level_zero:
        doc["inv_hilbert_A_chain_count"] = inv_hilbert_A_chain_count(graph).to_json()
        doc["routes_agree"] = doc["inv_hilbert_A_chain_count"]["coeffs"] == list(ia.coeffs)
    if rep.uniform:
        low = list(hilbert_B_low_degree(graph))
        doc["hilbert_B_low_degree"] = low
        doc["low_degree_agrees"] = low[: hb.truncation + 1] == list(hb.coeffs[:4])
    try:
        doc["koszul"] = numerically_koszul(graph, field).to_json()
    except HypothesisError as exc:
        doc["koszul"] = {"skipped": str(exc)}
    dims = b_graded_dims(graph, None, field)
    doc["oracle"] = {"dims": dims, "matches_hilbert_B": dims == list(hb.coeffs)}
    return doc


def cmd_report(args, graph, out):
    doc = build_report(graph, args.field)
    if args.json:
        out.append(_dump(doc))
    else:
        out.append(json.dumps(doc, indent=2, ensure_ascii=False))
    if doc["violations"]:
        return 1
    return 0 if doc["oracle"]["matches_hilbert_B"] else 1


def cmd_generate(args, out):
    f = args.family
    if f == "complete":
        g = generators.complete_layered(*args.sizes)
    elif f == "boolean":
        g = generators.boolean_graph(args.n)
    elif f == "cassidy-shelton":
        g = generators.cassidy_shelton(args.delete_edge)
    elif f == "prescribed":
        g = generators.prescribed_rs(args.r, args.s)
    elif f == "palindromic":
        g = generators.palindromic_graph(args.r)
    else:
        g = generators.random_uniform(args.seed, args.sizes)
    out.append(_dump(graph_to_json(g)))
    return 0


BOTH_FIELDS_COMMANDS = ("homology", "hilbert-b")

COMMANDS = {
    "validate": cmd_validate,
    "uniform": cmd_uniform,
    "homology": cmd_homology,
    "mobius": cmd_mobius,
    "cm-check": cmd_cm,
    "hilbert-b": cmd_hilbert_b,
    "inv-hilbert-a": cmd_inv_hilbert_a,
    "koszul": cmd_koszul,
    "oracle": cmd_oracle,
    "report": cmd_report,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "window", None) is not None and getattr(args, "vertex", None) is None:
        print("error: --window needs --vertex", file=stderr)
        return 2
    if getattr(args, "both_fields", False) and args.command not in BOTH_FIELDS_COMMANDS:
        print(f"error: --both-fields is not supported by {args.command}", file=stderr)
        return 2
    out: list[str] = []
    try:
        if args.command == "generate":
            code = cmd_generate(args, out)
        else:
            code = COMMANDS[args.command](args, _read_graph(args), out)
    except (DomainError, GraphError, HypothesisError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    for line in out:
        print(line, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
