"""``cambrian`` command-line front end.

Exit codes: 0 success, 1 user error (bad group, word, file...), 2 verification failure.
"""
from __future__ import annotations

import argparse
import io
import sys as _sys

from .congruence import cambrian_congruence, forcing_poset
from .coxeter import CoxeterError, build_system
from .export import dumps_json, export_lattice, write_output
from .groups import catalan_formula, parse_group_spec
from .projections import InternalInvariantViolation, cambrian_lattice, pi_down, pi_up
from .sortable import (
    c_sorting_word,
    coxeter_elements,
    enumerate_sortables,
    format_word,
    is_sortable,
    make_coxeter_element,
    parse_word,
)
from .verify import verify_suite
from .weak_order import lattice_of

NAMING_NOTE = (
    "generators are numbered from 0: s0..s{last}. Sources numbering from 1 "
    "(s1..s{n}) map s_i to s{{i-1}}; B<n> puts the 4-edge on s0-s1, H<n> the 5-edge on s0-s1."
)


class UserError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(_sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _word_label(system, w: int) -> str:
    return format_word(system.reduced_word(w)) or "e"


def _add_group(p: argparse.ArgumentParser) -> None:
    p.add_argument("group", nargs="?", help="A<n>, B<n>, D<n>, H3, H4, F4, E6-E8 or I2(<m>)")
    p.add_argument("--matrix", metavar="PATH", help='JSON Coxeter matrix {"rank": n, "m": [[...]]}')
    p.add_argument("--max-order", type=int, default=20000, help="refuse groups larger than this (default 20000)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", "-o", metavar="PATH", help="write to a file instead of stdout")


def _add_c(p: argparse.ArgumentParser, all_c: bool = False) -> None:
    p.add_argument("-c", dest="coxeter", metavar="WORD", help="Coxeter element, e.g. s0,s1,s2 (default s0 s1 ... in order)")
    if all_c:
        p.add_argument("--all-c", action="store_true", help="every Coxeter element of W")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cambrian", description="Sortable elements, Cambrian congruences and lattices of finite Coxeter groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", help="group order, matrix and Coxeter elements")
    _add_group(p)

    p = sub.add_parser("sortables", help="list the c-sortable elements")
    _add_group(p)
    _add_c(p)
    p.add_argument("--count", action="store_true", help="print only how many there are")

    p = sub.add_parser("sorting-word", help="c-sorting word of an element")
    _add_group(p)
    _add_c(p)
    p.add_argument("-w", dest="word", required=True, metavar="WORD", help="element as a word, e.g. s1,s0")

    p = sub.add_parser("project", help="apply pi_down or pi_up")
    _add_group(p)
    _add_c(p)
    p.add_argument("-w", dest="word", required=True, metavar="WORD")
    side = p.add_mutually_exclusive_group()
    side.add_argument("--down", dest="direction", action="store_const", const="down", help="largest c-sortable below (default)")
    side.add_argument("--up", dest="direction", action="store_const", const="up", help="smallest c-antisortable above")

    p = sub.add_parser("congruence", help="classes of the Cambrian congruence")
    _add_group(p)
    _add_c(p)
    p.add_argument("--all-classes", action="store_true", help="include singleton classes")
    p.add_argument("--forcing", action="store_true", help="print the forcing order on join-irreducibles instead")

    p = sub.add_parser("lattice", help="export the Cambrian lattice (or the weak order) as DOT or JSON")
    p.add_argument("group", nargs="?")
    p.add_argument("--matrix", metavar="PATH")
    p.add_argument("--max-order", type=int, default=20000)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--output", "-o", metavar="PATH")
    _add_c(p)
    p.add_argument("--weak", action="store_true", help="export the whole weak order instead")

    p = sub.add_parser("catalan", help="count c-sortables and compare with the W-Catalan number")
    _add_group(p)
    _add_c(p, all_c=True)

    p = sub.add_parser("verify", help="run the exhaustive property suite")
    _add_group(p)
    _add_c(p, all_c=True)
    return parser


def _load(args):
    if args.group is None and args.matrix is None:
        raise UserError("give a group name or --matrix PATH")
    if args.group is not None and args.matrix is not None:
        raise UserError("give either a group name or --matrix, not both")
    matrix = parse_group_spec(args.group, args.matrix)
    return build_system(matrix, max_order=args.max_order)


def _context(args, system):
    if getattr(args, "coxeter", None) is None:
        return make_coxeter_element(system, range(system.rank))
    return make_coxeter_element(system, parse_word(args.coxeter))


def _element(args, system) -> int:
    return system.from_word(parse_word(args.word))


def _contexts(args, system):
    if getattr(args, "all_c", False):
        if args.coxeter is not None:
            raise UserError("-c and --all-c are exclusive")
        return coxeter_elements(system)
    return [_context(args, system)]


def _cmd_info(args, system, out):
    ctxs = coxeter_elements(system)
    n = system.rank
    doc = {
        "group": args.group or args.matrix,
        "rank": n,
        "matrix": system.matrix.to_json()["m"],
        "order": system.order,
        "reflections": system.num_reflections,
        "longest_element": format_word(system.reduced_word(system.longest_index)),
        "coxeter_elements": [str(c) for c in ctxs],
        "naming": NAMING_NOTE.format(last=n - 1, n=n),
    }
    if args.format == "json":
        out.write(dumps_json(doc) + "\n")
        return 0
    out.write(f"group: {doc['group']}\nrank: {n}\n")
    out.write("coxeter matrix:\n")
    for row in doc["matrix"]:
        out.write("  " + " ".join(f"{x:>2}" for x in row) + "\n")
    out.write(f"order: {system.order}\nreflections: {system.num_reflections}\n")
    out.write(f"longest element: {doc['longest_element']}\n")
    out.write(f"coxeter elements ({len(ctxs)}): {', '.join(doc['coxeter_elements'])}\n")
    out.write(f"naming: {doc['naming']}\n")
    return 0


def _cmd_sortables(args, system, out):
    ctx = _context(args, system)
    items = enumerate_sortables(ctx)
    if args.count:
        out.write(dumps_json(len(items)) + "\n" if args.format == "json" else f"{len(items)}\n")
        return 0
    words = [c_sorting_word(ctx, w) for w in items]
    if args.format == "json":
        out.write(dumps_json({"c": str(ctx), "sortables": [{"id": w, "word": sw.render(compact=True)} for w, sw in zip(items, words)]}) + "\n")
    else:
        for w, sw in zip(items, words):
            out.write(f"{w}\t{sw.render() or 'e'}\n")
    return 0


def _cmd_sorting_word(args, system, out):
    ctx = _context(args, system)
    w = _element(args, system)
    sw = c_sorting_word(ctx, w)
    ok = is_sortable(ctx, w)
    if args.format == "json":
        out.write(dumps_json({"id": w, "blocks": [list(b) for b in sw.blocks], "word": sw.render(compact=True), "sortable": ok}) + "\n")
    else:
        out.write(f"{sw.render() or 'e'}\n")
        out.write(f"c-sortable: {'yes' if ok else 'no'}\n")
    return 0


def _cmd_project(args, system, out):
    ctx = _context(args, system)
    w = _element(args, system)
    result = pi_up(ctx, w) if args.direction == "up" else pi_down(ctx, w)
    if args.format == "json":
        out.write(dumps_json({"id": result, "word": list(system.reduced_word(result))}) + "\n")
    else:
        out.write(_word_label(system, result) + "\n")
    return 0


def _cmd_congruence(args, system, out):
    ctx = _context(args, system)
    L = lattice_of(system)
    if args.forcing:
        poset = forcing_poset(L)
        if args.format == "json":
            out.write(dumps_json(poset.to_json()) + "\n")
        else:
            for b, (j1, _) in enumerate(poset.ji):
                below = [_word_label(system, j2) for a, (j2, _) in enumerate(poset.ji) if a != b and poset.leq[a, b]]
                out.write(f"{_word_label(system, j1)} forces: {' '.join(below) or '-'}\n")
        return 0
    part = cambrian_congruence(ctx)
    classes = part.classes if args.all_classes else part.nontrivial_classes()
    if args.format == "json":
        doc = part.to_json()
        doc["c"] = str(ctx)
        out.write(dumps_json(doc) + "\n")
    else:
        out.write(f"{len(part)} classes, {len(part.nontrivial_classes())} non-singleton\n")
        for members in classes:
            out.write("{" + ", ".join(_word_label(system, w) for w in members) + "}\n")
    return 0


def _cmd_lattice(args, system, out):
    if args.weak:
        data = export_lattice(lattice_of(system), args.format)
    else:
        data = export_lattice(cambrian_lattice(_context(args, system)), args.format)
    out.write(data.decode("utf-8"))
    return 0


def _cmd_catalan(args, system, out):
    ctxs = _contexts(args, system)
    counts = [(str(c), len(enumerate_sortables(c))) for c in ctxs]
    expected = catalan_formula(args.group) if args.group else None
    if args.format == "json":
        out.write(dumps_json({"counts": dict(counts), "catalan": expected}) + "\n")
    elif len(counts) == 1:
        out.write(f"{counts[0][1]}\n")
    else:
        for c, k in counts:
            out.write(f"{c}\t{k}\n")
    values = {k for _, k in counts}
    if len(values) > 1 or (expected is not None and values != {expected}):
        return 2
    return 0


def _cmd_verify(args, system, out):
    ctxs = _contexts(args, system)
    report = verify_suite(system, ctxs, name=args.group)
    if args.format == "json":
        out.write(dumps_json(report.to_json()) + "\n")
    else:
        out.write("\n".join(report.lines()) + "\n")
    return 0 if report.passed else 2


COMMANDS = {
    "info": _cmd_info,
    "sortables": _cmd_sortables,
    "sorting-word": _cmd_sorting_word,
    "project": _cmd_project,
    "congruence": _cmd_congruence,
    "lattice": _cmd_lattice,
    "catalan": _cmd_catalan,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    buffer = io.StringIO()
    try:
        system = _load(args)
        code = COMMANDS[args.command](args, system, buffer)
    except InternalInvariantViolation as exc:
        print(f"cambrian: verification failed: {exc}", file=_sys.stderr)
        return 2
    except (UserError, CoxeterError, ValueError, OSError) as exc:
        print(f"cambrian: error: {exc}", file=_sys.stderr)
        return 1
    try:
        write_output(buffer.getvalue().encode("utf-8"), args.output, _sys.stdout)
    except OSError as exc:
        print(f"cambrian: error: {exc}", file=_sys.stderr)
        return 1
    return code


if __name__ == "__main__":
    raise SystemExit(main())
