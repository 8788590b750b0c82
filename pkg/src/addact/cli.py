"""Command-line front end.

Every command builds a report with the same key set (absent facts are null),
printed as JSON or as ``key: value`` lines.  Exit status: 0 success, 1 domain
error, 2 usage or file error.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import artin
from .artin import (
    DEFAULT_CAP,
    LocalAlgebra,
    embedding_dimension,
    hilbert_function,
    is_gorenstein,
    lift,
    socle,
)
from .construct import (
    add_variable_pair,
    ideal_membership,
    shrink_generators,
    shrunk_pair_with_result,
    two_actions,
)
from .errors import AddactError, FormatError, InvalidOrder
from .families import catalog6, census_entry, family_pair, family_presentation
from .fileformat import PresentationFile, load
from .geometry import LinearSubspace, essential_variables, verify_singular_subspace
from .hpair import (
    HPair,
    action_matrix,
    fixed_locus,
    hypersurface_equation,
    reduction,
    uniqueness_report,
)

REPORT_KEYS = (
    "command", "vars", "relations", "U", "complement",
    "dim", "hilbert", "socle_dim", "gorenstein", "nilpotency_degree", "embedding_dim",
    "nondegenerate", "unique_action", "equation", "degree", "action", "fixed_locus_dim",
    "member", "pairs", "certificates", "warnings",
)


def empty_report(command: str) -> dict:
    report = dict.fromkeys(REPORT_KEYS)
    report.update(command=command, certificates=[], warnings=[])
    return report


def _algebra_facts(A: LocalAlgebra) -> dict:
    return {
        "vars": list(A.gens),
        "relations": [str(r) for r in A.presentation.relations],
        "dim": A.dim,
        "hilbert": hilbert_function(A),
        "socle_dim": socle(A).dim,
        "gorenstein": is_gorenstein(A),
        "nilpotency_degree": A.nilpotency_degree,
        "embedding_dim": embedding_dimension(A),
    }


def pair_facts(H: HPair) -> dict:
    A = H.algebra
    facts = _algebra_facts(A)
    f = hypersurface_equation(H)
    uniq = uniqueness_report(H)
    M = action_matrix(H)
    facts.update(
        U=[str(lift(A, u)) for u in H.u_basis],
        complement=str(lift(A, H.complement)),
        nondegenerate=uniq.nondegenerate,
        unique_action=uniq.unique_action,
        equation=str(f),
        degree=f.degree(),
        action=[f"z{i}' = {M.format_row(i)}" for i in range(M.size)],
        fixed_locus_dim=fixed_locus(H).dim,
    )
    return facts


# ---------------------------------------------------------------- commands

def _single(path: str) -> PresentationFile:
    docs = load(path)
    if len(docs) != 1:
        raise FormatError(f"{path}: expected one document, found {len(docs)}")
    return docs[0]


def _pair(doc: PresentationFile, cap: int) -> HPair:
    if doc.U is None:
        raise FormatError("this command needs a 'U:' line in the input file")
    return doc.hpair(cap=cap)


def cmd_analyze(args, report):
    doc = _single(args.file)
    A = doc.algebra(args.max_degree)
    if doc.U is None:
        report.update(_algebra_facts(A))
    else:
        H = doc.hpair(A)
        report.update(pair_facts(H))
        if report["nondegenerate"] and essential_variables(hypersurface_equation(H)) != A.dim:
            report["warnings"].append("essential variable count disagrees with the algebra")


def cmd_equation(args, report):
    report.update(pair_facts(_pair(_single(args.file), args.max_degree)))


def cmd_action(args, report):
    report.update(pair_facts(_pair(_single(args.file), args.max_degree)))


def cmd_reduce(args, report):
    H = _pair(_single(args.file), args.max_degree)
    R = reduction(H)
    report.update(pair_facts(R.pair))
    report["pairs"] = [{"role": "original", "equation": str(hypersurface_equation(H)),
                        "ideal_dim": R.ideal.dim, "kept": list(R.kept)}]


def _pair_summary(role: str, H: HPair) -> dict:
    facts = pair_facts(H)
    keep = ("vars", "relations", "U", "complement", "dim", "hilbert", "embedding_dim", "equation")
    return {"role": role, **{k: facts[k] for k in keep}}


def cmd_two_actions(args, report):
    H = _pair(_single(args.file), args.max_degree)
    T = two_actions(H, args.order)
    report.update(pair_facts(H))
    report["pairs"] = [_pair_summary("core", T.core), _pair_summary("added-variable", T.first),
                       _pair_summary("shrunk-ideal", T.second)]
    report["certificates"] = [f"{T.certificate.verdict}: {T.certificate.reason}"]


def cmd_shrink(args, report):
    doc = _single(args.file)
    if doc.U is not None:
        H = doc.hpair(cap=args.max_degree)
        P, res = shrunk_pair_with_result(H, args.order)
        report.update(pair_facts(P))
    else:
        pres = doc.presentation(args.max_degree)
        res = shrink_generators(pres.relations, pres.gens, order=args.order, cap=pres.cap)
        report.update(_algebra_facts(artin.build_algebra(
            artin.Presentation(pres.gens, res.shrunk, pres.cap))))
    report["pairs"] = [{
        "role": "shrink",
        "distinguished": str(res.distinguished),
        "system": [str(f) for f in res.system],
        "dropped": [str(f) for f in res.dropped],
        "order": list(res.order),
        "passes": res.passes,
        "dims": [res.base_dim, res.shrunk_dim],
    }]


def cmd_addvar(args, report):
    report.update(pair_facts(add_variable_pair(_pair(_single(args.file), args.max_degree))))


def cmd_family(args, report):
    H = family_pair(args.n, args.d, args.max_degree)
    report.update(pair_facts(H))
    report["pairs"] = [{"role": "family", "n": args.n, "d": args.d,
                        "presentation": str(family_presentation(args.n, args.d))}]


def census_row(entry, seed: int, cap: int) -> dict:
    H = entry.pair(cap)
    f = hypersurface_equation(H)
    uniq = uniqueness_report(H)
    N = H.dim
    L = LinearSubspace.coordinate(N, entry.singular) if entry.singular else None
    sing = verify_singular_subspace(f, L, exhaustive=True, seed=seed)
    expected_verdict = ("normal-smooth" if not entry.singular
                        else "normal" if entry.normal else "not normal")
    checks = {
        "equation": str(f) == entry.equation,
        "degree": f.degree() == entry.degree,
        "gorenstein": is_gorenstein(H.algebra),
        "nondegenerate": uniq.nondegenerate,
        "unique_action": uniq.unique_action,
    }
    return {
        "name": entry.name,
        "equation": str(f),
        "degree": f.degree(),
        "match": all(checks.values()),
        "checks": checks,
        "singular_all_vanish": sing.all_vanish,
        "singular_verdict": sing.verdict,
        "expected_verdict": expected_verdict,
        "singular_samples": sing.samples,
        "singular_sample_failures": sing.sample_failures,
    }


def cmd_census(args, report):
    if args.file:
        entries = [census_entry(d) for d in load(args.file)]
    else:
        entries = catalog6()
    rows = [census_row(e, args.seed, args.max_degree) for e in entries]
    report["pairs"] = rows
    matched = sum(r["match"] for r in rows)
    report["certificates"] = [f"{matched}/{len(rows)} matches"]
    for r in rows:
        if r["singular_verdict"] != r["expected_verdict"]:
            report["warnings"].append(
                f"{r['name']}: stated singular locus gives '{r['singular_verdict']}', "
                f"table says '{r['expected_verdict']}'")
    return 0 if matched == len(rows) else 1


def cmd_member(args, report):
    doc = _single(args.file)
    pres = doc.presentation(args.max_degree)
    f = doc.poly(args.f)
    report.update(vars=list(pres.gens), relations=[str(r) for r in pres.relations],
                  member=ideal_membership(f, pres.relations, cap=pres.cap))


COMMANDS = {
    "analyze": cmd_analyze, "equation": cmd_equation, "action": cmd_action,
    "reduce": cmd_reduce, "two-actions": cmd_two_actions, "shrink": cmd_shrink,
    "addvar": cmd_addvar, "family": cmd_family, "census": cmd_census, "member": cmd_member,
}


# ---------------------------------------------------------------- output

def _text_value(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return ", ".join(_text_value(x) for x in v)
    if isinstance(v, dict):
        return "; ".join(f"{k}={_text_value(x)}" for k, x in v.items())
    return str(v)


def render_text(report: dict) -> str:
    cmd = report["command"]
    if cmd == "equation":
        return report["equation"] + "\n"
    lines = []
    for key in REPORT_KEYS:
        v = report[key]
        if v is None or v == [] and key != "warnings":
            continue
        if key in ("action", "pairs") or key == "warnings" and v:
            lines.append(f"{key}:")
            lines.extend(f"  {_text_value(x)}" for x in v)
        elif key == "warnings":
            continue
        else:
            lines.append(f"{key}: {_text_value(v)}")
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    return render_text(report)


def _order(text: str) -> tuple:
    try:
        return tuple(int(s) for s in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad permutation {text!r}") from exc


FILE_COMMANDS = (
    ("analyze", "algebra invariants, equation and action"),
    ("equation", "hypersurface equation only"),
    ("action", "matrix of the additive action"),
    ("reduce", "divide out the largest ideal inside U"),
    ("two-actions", "two inequivalent pairs with the same reduction"),
    ("shrink", "shrink the ideal by one distinguished relation"),
    ("addvar", "add a variable pair"),
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-degree", type=int, default=DEFAULT_CAP,
                        help="truncation cap for building algebras (default %(default)s)")
    common.add_argument("--seed", type=int, default=0, help="seed for point sampling")
    common.add_argument("--order", type=_order, default=None,
                        help="comma-separated permutation of the relation system for shrinking")

    parser = argparse.ArgumentParser(prog="addact", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in FILE_COMMANDS:
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file")
    p = sub.add_parser("family", parents=[common], help="pair from the (n, d) family")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p = sub.add_parser("census", parents=[common], help="check the dimension-six catalog")
    p.add_argument("file", nargs="?")
    p = sub.add_parser("member", parents=[common], help="ideal membership of f in the relations")
    p.add_argument("file")
    p.add_argument("f", help="polynomial in the file's variables")
    return parser


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0

    report = empty_report(args.command)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            status = COMMANDS[args.command](args, report) or 0
        report["warnings"].extend(str(w.message) for w in caught)
    except (FormatError, InvalidOrder, OSError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    except AddactError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    out.write(render(report, args.format))
    return status


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
