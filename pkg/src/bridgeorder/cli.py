"""Command-line driver: ``bridgeorder <subcommand> ...``.

Knot arguments are either fractions ``p/q`` or words ``[2,-2,0,-2]``.  With
``--json`` every command prints JSON objects carrying ``"schema"``; list-like
commands (``partners``, ``oracle verify``) print one object per line.

Exit codes: 0 ok, 1 domain error, 2 usage error, 3 budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence, TextIO

from .bridge import TwoBridgeClass, knot_class, phi, phi_inverse_knot, phi_inverse_link
from .diagram import build_diagram, render
from .errors import BridgeOrderError, BudgetExhausted, NoUpperBound
from .oracle import sweep_pairs
from .order import (
    compare,
    construct_upper_bound,
    incomparable_partners,
    lower_bounds,
    minimal_std_form,
    shortest_lubs,
    std_forms,
    upper_bound_exists,
)
from .rational import eval_cf, even_expansion, format_fraction, format_word, parse_fraction, parse_word
from .words import check_expanded, class_of

SCHEMA = "bridgeorder/1"

__all__ = ["SCHEMA", "build_parser", "main"]


class UsageError(Exception):
    pass


# -- argument helpers ----------------------------------------------------------

def _word(text: str) -> tuple[int, ...]:
    try:
        w = parse_word(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return check_expanded(w)


def _knot(text: str) -> tuple[TwoBridgeClass, str]:
    """Resolve a knot argument; returns the class and the text as given."""
    text = text.strip()
    if text.startswith("["):
        w = _word(text)
        return phi(w), text
    try:
        f = parse_fraction(text)
    except BridgeOrderError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return knot_class(f), text


def _knot_json(k: TwoBridgeClass, given: str | None = None) -> dict:
    out = {"class": str(k), "p": k.p, "q": k.q, "kind": k.kind}
    if given is not None:
        out["input"] = given
    return out


def _label(k: TwoBridgeClass, given: str) -> str:
    return f"{given} = {k}" if given != str(k) else str(k)


class _Out:
    def __init__(self, stream: TextIO, as_json: bool, command: str) -> None:
        self.stream = stream
        self.json = as_json
        self.command = command

    def obj(self, payload: dict) -> None:
        payload = {"schema": SCHEMA, "command": self.command, **payload}
        self.stream.write(json.dumps(payload, sort_keys=True) + "\n")

    def text(self, line: str = "") -> None:
        self.stream.write(line + "\n")


# -- subcommands ---------------------------------------------------------------

def cmd_info(args, out: _Out) -> None:
    k, given = _knot(args.knot)
    if k.q == 1:
        classes = []
    elif k.is_knot:
        classes = [phi_inverse_knot(k)]
    else:
        classes = list(dict.fromkeys(phi_inverse_link(k)))
    exps = even_expansion(k.fraction()) if k.q > 1 else []
    if out.json:
        out.obj({
            "knot": _knot_json(k, given),
            "expansions": [{"r": e.integer_part, "word": list(e.word)} for e in exps],
            "word_classes": [list(c.canonical) for c in classes],
        })
        return
    out.text(f"{_label(k, given)}  ({k.kind})")
    for e in exps:
        out.text(f"  expansion  {e.integer_part} + {format_word(e.word)}")
    for c in classes:
        out.text(f"  word class {c}  (length {c.length})")


def cmd_word(args, out: _Out) -> None:
    k, given = _knot(args.fraction)
    if k.q == 1:
        words: list = [()]
    elif k.is_knot:
        words = [phi_inverse_knot(k).canonical]
    else:
        words = [c.canonical for c in dict.fromkeys(phi_inverse_link(k))]
    if out.json:
        out.obj({"knot": _knot_json(k, given), "words": [list(w) for w in words]})
        return
    out.text(_label(k, given))
    for w in words:
        out.text(f"  {format_word(w)}")


def cmd_knot(args, out: _Out) -> None:
    w = _word(args.word)
    k = phi(w)
    f = eval_cf(0, w)
    if out.json:
        out.obj({"word": list(w), "canonical_word": list(class_of(w).canonical),
                 "fraction": format_fraction(f), "knot": _knot_json(k)})
        return
    out.text(f"{format_word(w)} -> {format_fraction(f)} -> {k} ({k.kind})")


def cmd_compare(args, out: _Out) -> None:
    (k1, g1), (k2, g2) = _knot(args.k1), _knot(args.k2)
    rel = compare(k1, k2)
    if out.json:
        d = rel.to_dict()
        d["left"], d["right"] = _knot_json(k1, g1), _knot_json(k2, g2)
        out.obj(d)
        return
    out.text(f"{_label(k1, g1)}  {rel.relation}  {_label(k2, g2)}")
    if rel.witness is not None:
        w = rel.witness
        out.text(f"  tile {format_word(w.tile)} signs {list(w.signs)} connectors {list(w.connector_values)}")


def cmd_lower_bounds(args, out: _Out) -> None:
    k, given = _knot(args.knot)
    ks = lower_bounds(k, include_unknot=args.include_unknot)
    if out.json:
        out.obj({"knot": _knot_json(k, given), "lower_bounds": [_knot_json(x) for x in ks]})
        return
    out.text(f"lower bounds of {_label(k, given)}:")
    for x in ks:
        out.text(f"  {x}")


def cmd_upper_bound(args, out: _Out) -> None:
    pairs = [_knot(t) for t in args.knots]
    ks = [k for k, _ in pairs]
    cert = upper_bound_exists(ks[0], ks[1]) if len(ks) == 2 else None
    try:
        c = construct_upper_bound(ks)
    except NoUpperBound:
        c = None
    top = phi(c) if c else None
    variants = []
    if c is not None and cert is not None and cert.kind == "std-form":
        variants = [w for w in shortest_lubs(ks[0], ks[1]) if w != c]
    if out.json:
        payload = {
            "knots": [_knot_json(k, g) for k, g in pairs],
            "exists": c is not None,
            "witness": None if c is None else list(c),
            "witness_length": None if c is None else len(c),
            "fraction": None if c is None else format_fraction(eval_cf(0, c)),
            "bound": None if top is None else _knot_json(top),
        }
        if cert is not None:
            payload["certificate"] = cert.to_dict()
            payload["variants"] = [{"word": list(w), "fraction": format_fraction(eval_cf(0, w))}
                                   for w in variants]
        out.obj(payload)
        return
    names = ", ".join(_label(k, g) for k, g in pairs)
    if c is None:
        out.text(f"no upper bound for {{{names}}}")
        return
    out.text(f"upper bound for {{{names}}}: exists")
    out.text(f"  witness {format_word(c)} ({len(c)} entries)")
    out.text(f"  fraction {format_fraction(eval_cf(0, c))} -> {top}")
    for w in variants:
        out.text(f"  sign variant {format_word(w)} -> {format_fraction(eval_cf(0, w))}")


def cmd_lub(args, out: _Out) -> None:
    (k1, g1), (k2, g2) = _knot(args.k1), _knot(args.k2)
    rel = compare(k1, k2)
    if rel.relation != "incomparable":
        raise BridgeOrderError(f"{k1} and {k2} are comparable ({rel.relation}); "
                               "the larger one is the least upper bound")
    words = shortest_lubs(k1, k2)
    if out.json:
        out.obj({
            "knots": [_knot_json(k1, g1), _knot_json(k2, g2)],
            "lubs": [{"word": list(w), "fraction": format_fraction(eval_cf(0, w)),
                      "knot": _knot_json(phi(w))} for w in words],
        })
        return
    out.text(f"shortest upper bounds of {_label(k1, g1)} and {_label(k2, g2)}:")
    for w in words:
        out.text(f"  {format_word(w)} -> {phi(w)}")


def cmd_partners(args, out: _Out) -> None:
    k, given = _knot(args.knot)
    if args.q_max < 1:
        raise UsageError("--q-max must be at least 1")
    ks = incomparable_partners(k, args.q_max)
    for x in ks:
        if out.json:
            out.obj({"knot": _knot_json(k, given), "partner": _knot_json(x),
                     "word": list(phi_inverse_knot(x).canonical)})
        else:
            out.text(f"{x}  {phi_inverse_knot(x)}")


def cmd_stdform(args, out: _Out) -> None:
    w = _word(args.word)
    forms = std_forms(w)
    best = minimal_std_form(w)
    if out.json:
        out.obj({"word": list(w), "forms": [f.to_dict() for f in forms],
                 "minimal": None if best is None else best.to_dict()})
        return
    if not forms:
        out.text(f"{format_word(w)} has no standard form")
    for f in forms:
        tag = "  (minimal)" if f == best else ""
        out.text(f"e={format_word(f.e)} m={f.m} n={f.n} exponent={f.exponent}{tag}")


def cmd_diagram(args, out: _Out) -> None:
    d = build_diagram(_word(args.a), _word(args.b), _word(args.c))
    data = render(d, args.format)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    if out.json:
        out.obj({"output": args.output, "format": args.format, **d.summary()})
    elif not args.output:
        out.stream.write(data.decode("utf-8"))
    else:
        s = d.summary()
        out.text(f"wrote {args.output}: {s['vertical_traversals']} vertical, "
                 f"{s['horizontal_traversals']} horizontal traversals, "
                 f"{len(s['mixed_seams'])} mixed seams")


def cmd_oracle_verify(args, out: _Out) -> None:
    start = time.monotonic()
    total = bad = bounded = 0
    for row in sweep_pairs(args.max_len):
        total += 1
        bad += not row.agree
        bounded += row.oracle
        if out.json:
            out.obj({"row": row.to_dict()})
        elif not row.agree:
            out.text(f"DISAGREE {format_word(row.a)} {format_word(row.b)} "
                     f"theorem={row.theorem} oracle={row.oracle}")
        if args.budget is not None and time.monotonic() - start > args.budget:
            raise BudgetExhausted(f"sweep stopped after {total} pairs ({args.budget}s budget)")
    summary = {"pairs": total, "with_upper_bound": bounded, "disagreements": bad,
               "max_len": args.max_len}
    if out.json:
        out.obj({"summary": summary})
    else:
        out.text(f"{total} pairs, {bounded} with an upper bound, {bad} disagreements")
    if bad:
        raise BridgeOrderError(f"{bad} disagreements between theorem and oracle")


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="bridgeorder", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    add("info", cmd_info, "knot class, expansions and word classes").add_argument("knot")
    add("word", cmd_word, "word class(es) of a fraction").add_argument("fraction")
    add("knot", cmd_knot, "knot of a word").add_argument("word")
    sp = add("compare", cmd_compare, "compare two knots")
    sp.add_argument("k1")
    sp.add_argument("k2")
    sp = add("lower-bounds", cmd_lower_bounds, "all knots below a knot")
    sp.add_argument("knot")
    sp.add_argument("--include-unknot", action="store_true")
    sp = add("upper-bound", cmd_upper_bound, "decide and construct a common upper bound")
    sp.add_argument("knots", nargs="+")
    sp = add("lub", cmd_lub, "shortest least upper bounds of an incomparable pair")
    sp.add_argument("k1")
    sp.add_argument("k2")
    sp = add("partners", cmd_partners, "incomparable knots sharing an upper bound")
    sp.add_argument("knot")
    sp.add_argument("--q-max", type=int, required=True)
    add("stdform", cmd_stdform, "standard forms of a word").add_argument("word")
    sp = add("diagram", cmd_diagram, "draw a double parsing in the product of two tiles")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("c")
    sp.add_argument("--output", "-o")
    sp.add_argument("--format", choices=["svg", "ascii"], default="svg")

    osp = sub.add_parser("oracle", help="brute-force cross checks")
    osub = osp.add_subparsers(dest="oracle_command", required=True)
    vp = osub.add_parser("verify", parents=[common], help="theorem/oracle agreement sweep")
    vp.add_argument("--max-len", type=int, default=6)
    vp.add_argument("--budget", type=float, default=None, help="wall-clock seconds")
    vp.set_defaults(func=cmd_oracle_verify)
    return p


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
         stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    name = "oracle verify" if args.command == "oracle" else args.command
    out = _Out(stdout, getattr(args, "json", False), name)
    try:
        args.func(args, out)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return 2
    except BudgetExhausted as exc:
        stderr.write(f"budget exhausted: {exc}\n")
        return 3
    except BridgeOrderError as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
