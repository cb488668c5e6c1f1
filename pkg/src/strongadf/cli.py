"""Command-line interface.

Exit status: 0 success, 1 a false verdict (check, credulous, witness,
conform), 2 usage or input error, 3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import adf as adfmod
from . import af as afmod
from . import oracle, strong
from .errors import AdfError, CapExceededError
from .interpretation import parse_interpretation
from .lattice import build_lattice

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2)


def _interp_json(v) -> dict:
    return {"literal": v.to_literal(), "set": v.to_set_notation(), "values": v.to_dict()}


def _load_adf(args):
    return adfmod.load_adf(_read(args.file), source=args.file)


def cmd_solve(args, out):
    framework = _load_adf(args)
    found = adfmod.enumerate_interpretations(framework, args.sem, cap=args.cap)
    if args.format == "json":
        print(_dump({"semantics": args.sem, "count": len(found),
                     "interpretations": [_interp_json(v) for v in found]}), file=out)
    else:
        for v in found:
            print(v.to_set_notation(), file=out)
    return EXIT_OK


def cmd_check(args, out):
    framework = _load_adf(args)
    v = parse_interpretation(args.interp, framework.arguments)
    verdict = adfmod.check(framework, v, args.sem)
    if args.format == "json":
        print(_dump({"semantics": args.sem, "interpretation": _interp_json(v), "verdict": verdict}), file=out)
    else:
        print("true" if verdict else "false", file=out)
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_credulous(args, out):
    framework = _load_adf(args)
    verdict, witness = adfmod.credulous(framework, args.arg, args.mode, args.sem, cap=args.cap)
    if args.format == "json":
        print(_dump({"argument": args.arg, "mode": args.mode, "semantics": args.sem, "verdict": verdict,
                     "witness": None if witness is None else _interp_json(witness)}), file=out)
    else:
        print("true" if verdict else "false", file=out)
        if witness is not None:
            print(f"witness: {witness.to_set_notation()}  ({witness.to_literal()})", file=out)
    return EXIT_OK if verdict else EXIT_FALSE


def _proof_lines(node, depth=0):
    chosen = ", ".join(node.chosen)
    excl = ", ".join(sorted(node.excluded))
    yield f"{'  ' * depth}{node.argument}: P={{{chosen}}} E={{{excl}}}"
    for child in node.support:
        yield from _proof_lines(child, depth + 1)


def _proof_json(node) -> dict:
    return {
        "argument": node.argument,
        "chosen": list(node.chosen),
        "excluded": sorted(node.excluded),
        "support": [_proof_json(c) for c in node.support],
    }


def cmd_witness(args, out):
    framework = _load_adf(args)
    v = parse_interpretation(args.interp, framework.arguments)
    if v[args.arg].value == "u":
        raise AdfError(f"argument {args.arg!r} is undecided in the given interpretation")
    ok, _ = strong.strongly_acceptable(framework, v, args.arg, v.decided())
    if not ok:
        if args.format == "json":
            print(_dump({"argument": args.arg, "strongly_justified": False}), file=out)
        else:
            print(f"{args.arg} is not strongly acceptable/deniable in {v.to_set_notation()}", file=out)
        return EXIT_FALSE
    w = strong.least_witness(framework, v, args.arg)
    level = strong.max_level(framework, v, w)
    S = w.sorted_ancestors()
    if args.format == "json":
        print(_dump({"argument": args.arg, "strongly_justified": True, "interpretation": _interp_json(v),
                     "least_set": S, "level": level, "proof": _proof_json(w.proof)}), file=out)
    else:
        print(f"S = {{{', '.join(S)}}}", file=out)
        print(f"level = {level}", file=out)
        for line in _proof_lines(w.proof):
            print(line, file=out)
    return EXIT_OK


def cmd_lattice(args, out):
    lat = build_lattice(_load_adf(args), cap=args.cap)
    if args.format == "json":
        print(_dump(lat.to_json()), file=out)
    elif args.format == "dot":
        out.write(lat.to_dot())
    else:
        for i, v in enumerate(lat.nodes):
            tag = " (bottom)" if i == lat.bottom else " (top)" if i == lat.top else ""
            print(f"{i}: {v.to_set_notation()}{tag}", file=out)
        for lo, hi in lat.cover_edges:
            print(f"{lo} < {hi}", file=out)
    return EXIT_OK


def cmd_links(args, out):
    framework = _load_adf(args)
    rows = [(b, a, kind.value) for (b, a), kind in adfmod.iter_links(framework)]
    if args.format == "json":
        print(_dump([{"from": b, "to": a, "type": t} for b, a, t in rows]), file=out)
    else:
        for b, a, t in rows:
            print(f"({b},{a}) {t}", file=out)
    return EXIT_OK


def cmd_af2adf(args, out):
    framework = afmod.load_af(_read(args.file), source=args.file)
    out.write(afmod.af_to_adf(framework).to_text())
    return EXIT_OK


def cmd_af_solve(args, out):
    framework = afmod.load_af(_read(args.file), source=args.file)
    if args.probe:
        report = afmod.conjecture_probe(framework, cap=args.cap)
        print(_dump(report.to_json()), file=out)
        return EXIT_OK
    if args.sem == "grd":
        exts = [afmod.grounded_extension(framework)]
    else:
        exts = afmod.enumerate_strongly_admissible_ext(framework, cap=args.cap)
    if args.format == "json":
        print(_dump({"semantics": args.sem,
                     "extensions": [[a for a in framework.arguments if a in e] for e in exts]}), file=out)
    else:
        for e in exts:
            print(afmod.format_extension(framework, e), file=out)
    return EXIT_OK


def cmd_conform(args, out):
    found = oracle.cross_validate(args.seed, args.count, max_args=args.max_args)
    for d in found:
        print(d.to_json(), file=out)
    hard = [d for d in found if not d.finding]
    print(f"conform: {args.count} samples, {len(hard)} discrepancies, "
          f"{len(found) - len(hard)} findings", file=sys.stderr)
    return EXIT_FALSE if hard else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strongadf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sems = [s.value for s in adfmod.Semantics]

    def add(name, func, help, file=True, formats=("text", "json")):
        p = sub.add_parser(name, help=help)
        if file:
            p.add_argument("file", help="input file ('-' for stdin)")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--cap", type=int, default=adfmod.DEFAULT_ENUM_CAP,
                       help="largest framework to enumerate (default %(default)s)")
        p.set_defaults(func=func)
        return p

    p = add("solve", cmd_solve, "enumerate all interpretations of a semantics")
    p.add_argument("--sem", choices=sems, required=True)
    p = add("check", cmd_check, "decide whether an interpretation belongs to a semantics")
    p.add_argument("--sem", choices=sems, required=True)
    p.add_argument("--interp", required=True, help="e.g. 'a=t,c=f' (omitted arguments are u)")
    p = add("credulous", cmd_credulous, "credulous acceptance/denial of one argument")
    p.add_argument("--sem", choices=sems, required=True)
    p.add_argument("--arg", required=True)
    p.add_argument("--mode", choices=("accept", "deny"), default="accept")
    p = add("witness", cmd_witness, "least ancestor set, proof tree and maximum level")
    p.add_argument("--interp", required=True)
    p.add_argument("--arg", required=True)
    add("lattice", cmd_lattice, "lattice of strongly admissible interpretations",
        formats=("text", "json", "dot"))
    add("links", cmd_links, "classify every link of the framework")
    add("af2adf", cmd_af2adf, "translate an AF (.af) into an ADF (.adf)", formats=("text",))
    p = add("af-solve", cmd_af_solve, "strongly admissible extensions of an AF")
    p.add_argument("--sem", choices=("sadm", "grd"), default="sadm")
    p.add_argument("--probe", action="store_true",
                   help="compare AF and ADF strong admissibility instead")
    p = add("conform", cmd_conform, "differential test against the reference deciders", file=False)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--max-args", type=int, default=5)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (AdfError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
