"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import Sequence

from . import measures
from .degree import Degree, Kind, NormPair
from .document import Document, DocumentError, Subject, degree_json, load, save
from .numbers import PlithogenicNumber, pn_add, pn_mul, pn_pow, pn_scale
from .ops import (
    AnyEvaluation,
    Evaluation,
    MultiEvaluation,
    Negation,
    Style,
    Variant,
    p_and,
    p_eq,
    p_leq,
    p_not,
    p_or,
    tuple_and,
    tuple_not,
    tuple_or,
)
from .schema import AttributeSchema, MultiAttributeSchema, split

EXIT_OK, EXIT_USAGE, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _floats(text: str) -> list[float]:
    from .document import _number

    try:
        return [_number(x, "list") for x in text.split(",") if x.strip()]
    except DocumentError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


# ---- helpers -------------------------------------------------------------


def _cells(ev: AnyEvaluation):
    """(attribute, value, contradiction, degree) for every attribute value."""
    parts = ev.parts if isinstance(ev, MultiEvaluation) else (ev,)
    for part in parts:
        s = part.schema
        for v, c, d in zip(s.values, s.contradictions, part.degrees):
            yield s.name, v, c, d


def _fmt_degree(d: Degree) -> str:
    if d.kind is Kind.FUZZY:
        return f"{d.t:.2f}"
    return "(" + ", ".join(f"{x:.2f}" for x in d.components()) + ")"


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(r[k]) for r in [header, *rows]) for k in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in [header, *rows]]
    return "\n".join(lines)


def _emit_evaluations(named: list[tuple[str, AnyEvaluation]], fmt: str, out) -> None:
    """Print one or more evaluations over the same value layout."""
    first = list(_cells(named[0][1]))
    if fmt == "rows":
        for label, ev in named:
            for attr, value, c, d in _cells(ev):
                row = {"row": label, "attribute": attr, "value": value, "contradiction": c, "degree": degree_json(d)}
                out.write(json.dumps(row) + "\n")
        return
    header = ["", *(f"{a}:{v}" for a, v, _, _ in first)]
    rows = [["c", *(f"{c:.2f}" for _, _, c, _ in first)]]
    for label, ev in named:
        rows.append([label, *(_fmt_degree(d) for _, _, _, d in _cells(ev))])
    out.write(_table(header, rows) + "\n")


def _pick(doc: Document, args) -> tuple[Subject, list[str]]:
    subject = doc.subject(args.subject)
    experts = args.experts or list(subject.experts)[: args.need]
    if len(experts) != args.need:
        raise DocumentError(f"subject {subject.name!r} needs {args.need} expert(s), found {experts}")
    for e in experts:
        subject.expert(e)
    return subject, experts


def _rename_schemas(ev: AnyEvaluation, suffix: str) -> AnyEvaluation:
    if isinstance(ev, MultiEvaluation):
        parts = tuple(_rename_schemas(p, suffix) for p in ev.parts)
        return MultiEvaluation(MultiAttributeSchema(ev.schema.name + suffix, tuple(p.schema for p in parts)), parts)
    return Evaluation(replace(ev.schema, name=ev.schema.name + suffix), ev.degrees)


def _register(doc: Document, ev: AnyEvaluation) -> None:
    for s in (*split(ev.schema), ev.schema):
        known = doc.schemas.get(s.name)
        if known is not None and known != s:
            raise DocumentError(f"schema {s.name!r} already exists with different content")
        doc.schemas[s.name] = s


def _store(doc: Document, subject: Subject, label: str, ev: AnyEvaluation, path) -> None:
    if path is None:
        return
    if ev.schema == subject.schema:
        subject.experts[label] = ev
    else:
        ev = _rename_schemas(ev, " (negated)")
        _register(doc, ev)
        name = f"{subject.name} ({label})"
        doc.subjects = [s for s in doc.subjects if s.name != name]
        doc.subjects.append(Subject(name, ev.schema, ev.kind, {label: ev}))
    save(doc, path)


# ---- commands ------------------------------------------------------------


def cmd_validate(args, out) -> int:
    load(args.document)
    return EXIT_OK


def _emit_point(label: str, point, degrees, fmt: str, out) -> None:
    if fmt == "rows":
        row = {"row": label, "point": list(point), "degrees": [degree_json(d) for d in degrees]}
        out.write(json.dumps(row) + "\n")
        return
    out.write(_table(["", *point], [[label, *(_fmt_degree(d) for d in degrees)]]) + "\n")


def _multi(ev: AnyEvaluation) -> MultiEvaluation:
    if not isinstance(ev, MultiEvaluation):
        raise DocumentError("--point needs a multi-attribute subject")
    return ev


def cmd_fuse(args, out) -> int:
    doc = load(args.document)
    subject, (x, y) = _pick(doc, args)
    if args.point:
        op = tuple_and if args.command == "and" else tuple_or
        a, b = _multi(subject.experts[x]), _multi(subject.experts[y])
        _emit_point(f"{x} {args.command} {y}", args.point, op(a, b, args.point, args.norm), args.format, out)
        return EXIT_OK
    op = p_and if args.command == "and" else p_or
    ev = op(subject.experts[x], subject.experts[y], args.norm)
    label = f"{x} {args.command} {y}"
    _emit_evaluations([(label, ev)], args.format, out)
    _store(doc, subject, label, ev, args.save)
    return EXIT_OK


def cmd_table(args, out) -> int:
    doc = load(args.document)
    subject, (x, y) = _pick(doc, args)
    a, b = subject.experts[x], subject.experts[y]
    named = [
        (x, a),
        (y, b),
        (f"{x} and {y}", p_and(a, b, args.norm)),
        (f"{x} or {y}", p_or(a, b, args.norm)),
    ]
    _emit_evaluations(named, args.format, out)
    return EXIT_OK


def cmd_not(args, out) -> int:
    doc = load(args.document)
    subject, (x,) = _pick(doc, args)
    if args.point:
        labels, degrees = tuple_not(_multi(subject.experts[x]), args.point)
        _emit_point(f"not {x}", labels, degrees, args.format, out)
        return EXIT_OK
    ev = p_not(subject.experts[x], args.form, args.variant)
    label = f"not {x}"
    _emit_evaluations([(label, ev)], args.format, out)
    _store(doc, subject, label, ev, args.save)
    return EXIT_OK


def cmd_compare(args, out) -> int:
    doc = load(args.document)
    subject, (x, y) = _pick(doc, args)
    test = p_leq if args.command == "leq" else p_eq
    result = test(subject.experts[x], subject.experts[y], args.style)
    if args.format == "rows":
        out.write(json.dumps({"relation": args.command, "style": args.style, "left": x, "right": y, "result": result}) + "\n")
    else:
        out.write(f"{str(result).lower()}\n")
    return EXIT_OK


def _fuzzy_vector(ev: AnyEvaluation, label: str) -> list[float]:
    if ev.kind is not Kind.FUZZY:
        raise DocumentError(f"measures need fuzzy degrees; expert {label!r} is {ev.kind.name.lower()}")
    return [d.t for _, _, _, d in _cells(ev)]


def cmd_distance(args, out) -> int:
    doc = load(args.document)
    subject, (x, y) = _pick(doc, args)
    fn = measures.MEASURES[args.measure]
    value = fn(_fuzzy_vector(subject.experts[x], x), _fuzzy_vector(subject.experts[y], y))
    if args.format == "rows":
        out.write(json.dumps({"measure": args.measure, "left": x, "right": y, "value": value}) + "\n")
    else:
        out.write(f"{value:.4f}\n")
    return EXIT_OK


def _number_from_doc(args, label: str) -> PlithogenicNumber:
    doc = load(args.document)
    subject = doc.subject(args.subject)
    if not isinstance(subject.schema, AttributeSchema):
        raise DocumentError("plithogenic numbers live on a single attribute")
    ev = subject.expert(label)
    return PlithogenicNumber(tuple(_fuzzy_vector(ev, label)), subject.schema.contradictions)


def cmd_number(args, out) -> int:
    needs_two = args.op in ("add", "mul")
    needs_lambda = args.op in ("scale", "pow")
    if needs_lambda and args.lam is None:
        raise UsageError(f"--lambda is required for {args.op}")
    if args.document is not None:
        labels = args.experts or list(load(args.document).subject(args.subject).experts)[: 2 if needs_two else 1]
        nums = [_number_from_doc(args, label) for label in labels]
    else:
        if args.c is None or args.a is None or (needs_two and args.b is None):
            raise UsageError("give a document, or --c and --a (and --b for add/mul)")
        nums = [PlithogenicNumber(tuple(args.a), tuple(args.c))]
        if needs_two:
            nums.append(PlithogenicNumber(tuple(args.b), tuple(args.c)))
    if needs_two and len(nums) != 2:
        raise UsageError(f"{args.op} needs two numbers")
    if args.op == "add":
        r = pn_add(*nums)
    elif args.op == "mul":
        r = pn_mul(*nums)
    elif args.op == "scale":
        r = pn_scale(args.lam, nums[0])
    else:
        r = pn_pow(nums[0], args.lam)
    if args.format == "rows":
        out.write(json.dumps({"op": args.op, "degrees": list(r.degrees), "contradictions": list(r.contradictions)}) + "\n")
    else:
        out.write(" ".join(f"{x:.4f}" for x in r.degrees) + "\n")
    return EXIT_OK


# ---- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="plitho", description="Plithogenic set, logic and probability operators.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, need: int, experts: bool = True):
        p.add_argument("document", help="JSON document with schemas and evaluations")
        p.add_argument("--subject", help="subject name (default: the only one)")
        if experts:
            p.add_argument("--experts", nargs=need, metavar="LABEL", help="expert labels (default: the first ones)")
        p.add_argument("--format", choices=["human", "rows"], default="human")
        p.set_defaults(need=need)

    p = sub.add_parser("validate", help="check a document")
    p.add_argument("document")
    p.set_defaults(run=cmd_validate)

    for name in ("and", "or"):
        p = sub.add_parser(name, help=f"plithogenic {'intersection' if name == 'and' else 'union'} of two experts")
        common(p, 2)
        p.add_argument("--norm", choices=[n.value for n in NormPair], default="product")
        p.add_argument("--point", nargs="+", metavar="VALUE", help="restrict to one tuple of a multi-attribute subject")
        p.add_argument("--save", metavar="PATH", help="write the document with the result added")
        p.set_defaults(run=cmd_fuse)

    p = sub.add_parser("table", help="both experts with their intersection and union")
    common(p, 2)
    p.add_argument("--norm", choices=[n.value for n in NormPair], default="product")
    p.set_defaults(run=cmd_table)

    p = sub.add_parser("not", help="negate one expert's evaluation")
    common(p, 1)
    p.add_argument("--form", choices=[f.value for f in Negation], default=Negation.ANTI_VALUE.value)
    p.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.SWAP.value)
    p.add_argument("--point", nargs="+", metavar="VALUE", help="anti-point of one tuple of a multi-attribute subject")
    p.add_argument("--save", metavar="PATH", help="write the document with the result added")
    p.set_defaults(run=cmd_not)

    for name in ("leq", "eq"):
        p = sub.add_parser(name, help="inclusion test" if name == "leq" else "equality test")
        common(p, 2)
        p.add_argument("--style", choices=[s.value for s in Style], default=Style.SIMPLE.value)
        p.set_defaults(run=cmd_compare)

    p = sub.add_parser("distance", help="distance or similarity of two fuzzy evaluations")
    common(p, 2)
    p.add_argument("--measure", choices=sorted(measures.MEASURES), default="hamming")
    p.set_defaults(run=cmd_distance)

    p = sub.add_parser("number", help="plithogenic number arithmetic")
    p.add_argument("document", nargs="?", help="document with a single-attribute fuzzy subject")
    p.add_argument("--subject")
    p.add_argument("--experts", nargs="+", metavar="LABEL")
    p.add_argument("--op", choices=["add", "mul", "scale", "pow"], required=True)
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--a", type=_floats, help="comma separated degrees")
    p.add_argument("--b", type=_floats)
    p.add_argument("--c", type=_floats, help="comma separated contradictions")
    p.add_argument("--format", choices=["human", "rows"], default="human")
    p.set_defaults(run=cmd_number)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args, out)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"plitho: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DocumentError, ValueError) as e:
        print(f"plitho: invalid: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
