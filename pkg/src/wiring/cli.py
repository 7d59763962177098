"""Command line interface.

Exit codes: 0 success (or "equal"), 1 any error, 2 "not equal" / oracle
disagreement / invalid diagram.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import smc
from .diagram import GENERAL, STRICT, DiagramError, InvalidDiagram, WiringDiagram
from .dot import export_dot
from .equality import canonicalize, is_equal
from .oracle import cross_check, random_cases
from .syntax import FrontendError, Signature, UnknownSymbol, compile, parse

OK, ERROR, DIFFERENT = 0, 1, 2


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1 so that 2 keeps meaning "not equal"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ERROR, f"{self.prog}: error: {message}\n")


def _load_program(path: str):
    try:
        source = Path(path).read_text()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}") from None
    return parse(source)


def _term(sig: Signature, terms: dict, name: str) -> smc.Morphism:
    if name not in terms:
        raise UnknownSymbol(f"no term named {name!r}")
    return compile(terms[name], sig)


def _load_diagram(path: str, mode: str = STRICT) -> WiringDiagram:
    try:
        return WiringDiagram.from_json(Path(path).read_text(), mode=mode)
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}") from None
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise CliError(f"{path}: malformed diagram JSON ({e})") from None
    except InvalidDiagram as e:
        raise CliError(f"{path}: {e}") from None


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _emit(args, report: dict, text: str) -> None:
    print(json.dumps(report, sort_keys=True) if args.json else text)


def cmd_parse(args) -> int:
    sig, terms = _load_program(args.file)
    report = {
        "objects": sig.objects,
        "generators": {g: {"dom": list(d), "cod": list(c)} for g, (d, c) in sig.generators.items()},
        "terms": {},
    }
    lines = [f"objects: {' '.join(sig.objects) or '-'}"]
    for g, (d, c) in sig.generators.items():
        lines.append(f"hom {g} : {' * '.join(d) or 'I'} -> {' * '.join(c) or 'I'}")
    for name in terms:
        m = _term(sig, terms, name)
        report["terms"][name] = {"dom": list(m.dom), "cod": list(m.cod), "boxes": len(m.diagram)}
        lines.append(f"term {name} : {' * '.join(m.dom) or 'I'} -> {' * '.join(m.cod) or 'I'}"
                     f" ({len(m.diagram)} boxes)")
    _emit(args, report, "\n".join(lines))
    return OK


def cmd_compose(args) -> int:
    sig, terms = _load_program(args.file)
    ms = [_term(sig, terms, t) for t in args.term]
    _write(smc.compose_all(ms).diagram.to_json(), args.output)
    return OK


def cmd_equal(args) -> int:
    if len(args.term) != 2:
        raise CliError("equal needs exactly two --term options")
    sig, terms = _load_program(args.file)
    a, b = (_term(sig, terms, t) for t in args.term)
    equal, mapping = is_equal(a.diagram, b.diagram, witness=True)
    report = {"equal": equal}
    text = "equal" if equal else "not equal"
    if args.witness and equal:
        report["witness"] = {str(k): v for k, v in sorted(mapping.items())}
        text += "\n" + "\n".join(f"{k} -> {v}" for k, v in sorted(mapping.items()))
    _emit(args, report, text)
    return OK if equal else DIFFERENT


def cmd_normalize(args) -> int:
    sig, terms = _load_program(args.file)
    _write(canonicalize(_term(sig, terms, args.term).diagram).to_json(), args.output)
    return OK


def cmd_render(args) -> int:
    sig, terms = _load_program(args.file)
    d = canonicalize(_term(sig, terms, args.term).diagram).diagram
    _write(export_dot(d), args.output)
    return OK


def cmd_validate(args) -> int:
    try:
        data = json.loads(Path(args.file).read_text())
        d = WiringDiagram.from_dict(data, mode=args.mode, check=False)
    except OSError as e:
        raise CliError(f"cannot read {args.file}: {e.strerror}") from None
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise CliError(f"{args.file}: malformed diagram JSON ({e})") from None
    except DiagramError as e:
        raise CliError(str(e)) from None
    report = d.validate(args.mode)
    print(json.dumps(report.to_dict(), sort_keys=True))
    return OK if report.ok else DIFFERENT


def cmd_oracle(args) -> int:
    if args.random:
        cases = random_cases(args.random, args.seed)
    else:
        if len(args.files) != 2 or args.at is None:
            raise CliError("oracle needs IN.json SUB.json --at I, or --random N")
        cases = [(_load_diagram(args.files[0]), args.at, _load_diagram(args.files[1]))]
    failures, total = [], 0
    for k, (host, i, sub) in enumerate(cases):
        total += 1
        if not 1 <= i <= len(host):
            raise CliError(f"--at {i} is not a box index of a diagram with {len(host)} boxes")
        if not cross_check(host, i, sub).agree:
            failures.append(k)
    report = {"cases": total, "failures": failures, "agree": not failures}
    text = f"{total - len(failures)}/{total} cases agree"
    _emit(args, report, text)
    return OK if not failures else DIFFERENT


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wiring", description="Wiring diagrams for free SMCs.")
    p.add_argument("--json", action="store_true", help="machine-readable reports")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, help):
        c = sub.add_parser(name, help=help)
        c.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        c.set_defaults(func=func)
        return c

    c = command("parse", cmd_parse, "typecheck a program and summarize it")
    c.add_argument("file")

    c = command("compose", cmd_compose, "compose terms in sequence and print the diagram JSON")
    c.add_argument("file")
    c.add_argument("--term", action="append", required=True)
    c.add_argument("-o", "--output")

    c = command("equal", cmd_equal, "decide equality of two terms (exit 0 equal, 2 not)")
    c.add_argument("file")
    c.add_argument("--term", action="append", required=True)
    c.add_argument("--witness", action="store_true", help="print the box bijection")

    c = command("normalize", cmd_normalize, "print the canonical JSON of a term")
    c.add_argument("file")
    c.add_argument("--term", required=True)
    c.add_argument("-o", "--output")

    c = command("render", cmd_render, "export a term as Graphviz DOT")
    c.add_argument("file")
    c.add_argument("--term", required=True)
    c.add_argument("-o", "--output")

    c = command("validate", cmd_validate, "check a diagram JSON file")
    c.add_argument("file")
    c.add_argument("--mode", choices=[STRICT, GENERAL], default=STRICT)

    c = command("oracle", cmd_oracle, "cross-check substitution against the span formula")
    c.add_argument("files", nargs="*", metavar="JSON")
    c.add_argument("--at", type=int, help="1-based inner box index of the host")
    c.add_argument("--random", type=int, metavar="N", help="check N random cases instead")
    c.add_argument("--seed", type=int, default=0)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, FrontendError, DiagramError) as e:
        if args.json:
            print(json.dumps({"error": str(e), "kind": type(e).__name__}))
        else:
            print(f"error: {e}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
