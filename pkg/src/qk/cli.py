"""Command-line interface: ``qk <subcommand> ...``.

Exit status is 0 when the question was answered (including a negative
classification), 1 on domain errors and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from typing import Optional, Sequence, TextIO

from qk import classify as cl
from qk import term
from qk.errors import QkError, TableFileError
from qk.finite import tablefile
from qk.finite.enumerate import MAX_LABELED, enumerate_structures
from qk.finite.library import bundled_library
from qk.finite.oracle import search_counterexample, search_space
from qk.finite.rack import AxiomReport, check_axioms, derived_operation, power_table
from qk.freealg import quandle_nf, rack_nf
from qk.group import GroupWord


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qk", description="Endofunctors of quandles and racks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("--json", action="store_true", help="machine-readable output")
        return s

    s = add("parse", "print the canonical form of a word")
    s.add_argument("expr")

    s = add("nf", "normal form in the free quandle or rack")
    s.add_argument("--theory", choices=("quandle", "rack"), required=True)
    s.add_argument("expr")

    s = add("classify", "decide whether a word is an endofunctor")
    s.add_argument("--theory", choices=("quandle", "rack"), required=True)
    s.add_argument("--trace", action="store_true", help="always print the relator trace")
    s.add_argument("expr")

    s = add("check", "check the axioms of a table file")
    s.add_argument("file")

    s = add("derive", "table of the operation a word induces on a structure")
    s.add_argument("expr")
    s.add_argument("file")
    s.add_argument("--out")

    s = add("power", "k-th power of every left multiplication")
    s.add_argument("file")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("--out")

    s = add("oracle", "search finite structures for a counterexample")
    s.add_argument("expr")
    s.add_argument("--theory", choices=("quandle", "rack"), required=True)
    s.add_argument("--max-size", type=int, default=MAX_LABELED)

    s = add("enum", "enumerate racks or quandles of a given size")
    s.add_argument("--theory", choices=("quandle", "rack"), required=True)
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--up-to-iso", action="store_true")
    s.add_argument("--emit", metavar="DIR")
    return p


# --- rendering -----------------------------------------------------------

def _tree_json(w: term.Word):
    if isinstance(w, term.Leaf):
        return {"gen": w.name}
    return {"op": w.op.symbol, "left": _tree_json(w.left), "right": _tree_json(w.right)}


def _gw_json(g: GroupWord) -> list[str]:
    return [str(a) for a in g]


def _table_lines(table) -> list[str]:
    return [" ".join(map(str, row)) for row in table]


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def _report_lines(report: AxiomReport) -> list[str]:
    lines = [f"rack: {_yes(report.is_rack)}, quandle: {_yes(report.is_quandle)}"]
    for w in (report.bijectivity, report.distributivity, report.idempotence):
        if w is not None:
            lines.append(f"witness: {w}")
    return lines


def _witness_json(w):
    if w is None:
        return None
    d = {"kind": type(w).__name__}
    d.update(vars(w))
    return d


def _report_json(report: AxiomReport) -> dict:
    return {
        "is_rack": report.is_rack,
        "is_quandle": report.is_quandle,
        "witness": _witness_json(report.witness),
        "bijectivity": _witness_json(report.bijectivity),
        "distributivity": _witness_json(report.distributivity),
        "idempotence": _witness_json(report.idempotence),
    }


def _trace_lines(t: cl.RefutationTrace) -> list[str]:
    return [
        f"w1: {t.w1}",
        f"w2: {t.w2}",
        f"relator: {t.relator}",
        f"cyclic reduction: {t.cyclically_reduced}",
        f"survivors: {' '.join(sorted(t.survivors)) or '(none)'}",
    ]


def _trace_json(t: cl.RefutationTrace) -> dict:
    return {
        "w1": _gw_json(t.w1),
        "w2": _gw_json(t.w2),
        "relator": _gw_json(t.relator),
        "cyclically_reduced": _gw_json(t.cyclically_reduced),
        "survivors": sorted(t.survivors),
        "reason": str(t.reason) if t.reason else None,
    }


def _classification_json(c) -> dict:
    if isinstance(c, cl.QuandlePower):
        return {"kind": "QuandlePower", "k": c.k}
    if isinstance(c, cl.RackPower):
        return {"kind": "RackPower", "k": c.k, "j": c.j}
    return {"kind": "NotEndofunctor", "reason": str(c.reason)}


# --- subcommands ---------------------------------------------------------

def cmd_parse(args, out):
    w = term.parse(args.expr)
    text = term.to_text(w)
    if args.json:
        return {"word": text, "size": term.size(w), "depth": term.depth(w), "tree": _tree_json(w)}
    out += [text, f"size: {term.size(w)}", f"depth: {term.depth(w)}"]


def cmd_nf(args, out):
    w = term.parse(args.expr)
    nf = quandle_nf(w) if args.theory == "quandle" else rack_nf(w)
    if args.json:
        return {"theory": args.theory, "word": term.to_text(w),
                "prefix": _gw_json(nf.prefix), "base": nf.base}
    out += [f"prefix: {nf.prefix}", f"base: {nf.base}"]


def cmd_classify(args, out):
    w = term.parse(args.expr)
    c = cl.classify(w, args.theory)
    trace = c.trace if isinstance(c, cl.NotEndofunctor) else cl.one_relator_test(w)
    if args.json:
        return {"theory": args.theory, "word": term.to_text(w),
                "classification": _classification_json(c), "trace": _trace_json(trace)}
    out.append(str(c))
    if args.trace or isinstance(c, cl.NotEndofunctor):
        out += _trace_lines(trace)


def cmd_check(args, out):
    with open(args.file, encoding="utf-8") as f:
        claimed, table = tablefile.parse_table_text(f.read())
    report = check_axioms(table)
    if args.json:
        result = {"file": args.file, "n": len(table), "claimed": claimed,
                  "claim_holds": report.satisfies(claimed), **_report_json(report)}
        out.append(json.dumps(result, indent=2, sort_keys=True))
    else:
        out += _report_lines(report)
    if not report.satisfies(claimed):
        raise TableFileError(
            f"header claims {claimed} but the table fails: {report.failing_witness(claimed)}"
        )


def cmd_derive(args, out):
    w = term.parse(args.expr)
    r = tablefile.load(args.file)
    table = derived_operation(r, w)
    report = check_axioms(table)
    if args.json:
        result = {"word": term.to_text(w), "structure": str(r),
                  "table": [list(row) for row in table], **_report_json(report)}
        out.append(json.dumps(result, indent=2, sort_keys=True))
    else:
        out += _table_lines(table) + _report_lines(report)
    if args.out:
        if not report.is_rack:
            raise TableFileError(f"derived table is not a rack ({report.witness}); not written")
        with open(args.out, "w", encoding="utf-8", newline="\n") as f:
            f.write(tablefile.dumps_table("quandle" if report.is_quandle else "rack", table))


def cmd_power(args, out):
    r = tablefile.load(args.file)
    p = power_table(r, args.k)
    if args.out:
        tablefile.dump(p, args.out)
    if args.json:
        return {"k": args.k, "theory": "quandle" if p.is_quandle else "rack",
                "table": [list(row) for row in p.table]}
    if not args.out:
        out.append(tablefile.dumps(p).rstrip("\n"))


def cmd_oracle(args, out):
    w = term.parse(args.expr)
    if args.max_size > MAX_LABELED:
        raise QkError(f"--max-size is limited to {MAX_LABELED}")
    lib = bundled_library()
    ce = search_counterexample(w, args.theory, lib, args.max_size)
    if ce is None:
        searched = sum(1 for _ in search_space(args.theory, lib, args.max_size))
        if args.json:
            return {"word": term.to_text(w), "theory": args.theory, "found": False,
                    "searched": searched}
        out.append(f"no counterexample among {searched} structures")
        return
    witness = ce.report.failing_witness(args.theory)
    if args.json:
        return {"word": term.to_text(w), "theory": args.theory, "found": True,
                "structure": str(ce.structure),
                "structure_table": [list(row) for row in ce.structure.table],
                "derived_table": [list(row) for row in ce.report.table],
                "witness": _witness_json(witness)}
    out.append(f"counterexample: {ce.structure}")
    out.append("derived table:")
    out += _table_lines(ce.report.table)
    out.append(f"witness: {witness}")


def cmd_enum(args, out):
    structures = enumerate_structures(args.theory, args.size, args.up_to_iso)
    written = []
    if args.emit:
        os.makedirs(args.emit, exist_ok=True)
        for i, r in enumerate(structures):
            path = os.path.join(args.emit, f"{args.theory}{args.size}_{i:03d}.{args.theory}")
            with open(path, "w", encoding="utf-8", newline="\n") as f:
                f.write(tablefile.dumps_table(args.theory, r.table))
            written.append(path)
    if args.json:
        return {"theory": args.theory, "n": args.size, "up_to_iso": args.up_to_iso,
                "count": len(structures), "tables": [[list(row) for row in r.table] for r in structures],
                "written": written}
    out.append(f"count: {len(structures)}")
    out += [f"wrote {p}" for p in written]


COMMANDS = {
    "parse": cmd_parse,
    "nf": cmd_nf,
    "classify": cmd_classify,
    "check": cmd_check,
    "derive": cmd_derive,
    "power": cmd_power,
    "oracle": cmd_oracle,
    "enum": cmd_enum,
}


def run(argv: Sequence[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(list(argv))
    except UsageError as exc:
        parser.print_usage(stderr)
        print(exc, file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 2

    out: list[str] = []
    try:
        result = COMMANDS[args.command](args, out)
        status = 0
    except (QkError, OSError) as exc:
        result = None
        status = 1
        err = exc
    if result is not None:
        out.append(json.dumps(result, indent=2, sort_keys=True))
    if out:
        stdout.write("\n".join(out) + "\n")
    if status:
        print(f"error: {type(err).__name__}: {err}", file=stderr)
    return status


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
