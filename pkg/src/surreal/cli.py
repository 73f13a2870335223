"""Command line front end: eval, repl, batch and check.

Exit codes: 0 ok, 1 a check reported a violation, 2 usage, parse or
evaluation error.
"""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .derivation import DerivationConfig
from .errors import ParseError, SurrealError
from .evaluator import Evaluator, default_hfield_report, default_sd_report
from .logatomic import Path
from .number import Number, expand
from .render import render_series
from .signseq import SignExpansion

EXIT_OK, EXIT_CHECK, EXIT_ERROR = 0, 1, 2
CORPORA = {"cross": "derive.txt", "commute": "commute.txt", "order": "order.txt"}


def corpus_lines(name: str):
    text = resources.files("surreal").joinpath("corpus", name).read_text(encoding="utf-8")
    return _command_lines(text)


def _command_lines(text: str):
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


# rendering -------------------------------------------------------------------------------

def _failed(value) -> bool:
    if isinstance(value, dict):
        return bool(value.get("violations")) or value.get("equal") is False
    return False


def to_jsonable(value, terms: int = 0):
    if isinstance(value, Number):
        out = {"type": "number", "value": str(value), "form": value.to_json()}
        if terms and not value.is_polynomial():
            out["preview"] = _preview(value, terms)
        return out
    if isinstance(value, SignExpansion):
        return {"type": "signexp", "value": str(value), "runs": value.to_json()}
    if isinstance(value, str):
        return {"type": "ordering", "value": value}
    if isinstance(value, list):
        return {"type": "paths", "paths": [p.to_json() if isinstance(p, Path) else p for p in value]}
    if isinstance(value, dict):
        return {"type": "report", **value}
    return {"type": type(value).__name__, "value": str(value)}


def _preview(x: Number, terms: int) -> str:
    got, done = expand(x, terms)
    return render_series(got) + ("" if done else " + ...")


def render_text(value, terms: int = 0) -> str:
    if isinstance(value, Number):
        text = str(value)
        if terms and not value.is_polynomial():
            text += "  ~  " + _preview(value, terms)
        return text
    if isinstance(value, list):
        lines = []
        for p in value:
            chain = " -> ".join(f"{c}*{m}" if c != 1 else str(m) for c, m in p.entries)
            tail = f" [{p.status}" + (f" {p.shape}" if p.shape else "") + (f": {p.reason}" if p.reason else "") + "]"
            lines.append(chain + tail)
        return "\n".join(lines) if lines else "(no paths)"
    if isinstance(value, dict):
        if "checks" in value:
            lines = [_check_line(c) for c in value["checks"]]
            lines.append(f"violations: {value['violations']}")
            return "\n".join(lines)
        return _check_line(value)
    return str(value)


def _check_line(c: dict) -> str:
    mark = "ok  " if c["equal"] else "FAIL"
    if "identity" in c:
        return f"{mark} {c['identity']}: {c['lhs']} | {c['rhs']}"
    if "expr" in c:
        return f"{mark} D(iota({c['expr']})) = iota(d/dx): {c['lhs']} | {c['rhs']}"
    return f"{mark} {c['f']} vs {c['g']}: surreal {c['surreal']}, transseries {c['transseries']}"


def error_record(exc: Exception, line: str = "") -> dict:
    pos = exc.position if isinstance(exc, ParseError) else getattr(exc, "info", {}).get("position")
    return {"error": getattr(exc, "code", type(exc).__name__), "message": str(exc), "position": pos, "input": line}


class Session:
    def __init__(self, args):
        cfg = DerivationConfig(args.depth_cap, args.branch_cap, args.term_cap)
        self.evaluator = Evaluator(cfg, cross_check=args.cross_check)
        self.fmt = args.format
        self.terms = args.terms
        self.errors: list = []
        self.failed = False

    def emit(self, value):
        if _failed(value):
            self.failed = True
        if self.fmt == "json":
            print(json.dumps(to_jsonable(value, self.terms)))
        else:
            print(render_text(value, self.terms))

    def run_line(self, line: str):
        try:
            value = self.evaluator.run(line)
        except (SurrealError, ZeroDivisionError, RecursionError) as exc:
            rec = error_record(exc, line)
            self.errors.append(rec)
            if self.fmt == "json":
                print(json.dumps(rec))
            else:
                where = "" if rec["position"] is None else f" at {rec['position']}"
                print(f"error {rec['error']}{where}: {rec['message']}", file=sys.stderr)
            return
        self.emit(value)

    def exit_code(self) -> int:
        if self.errors:
            return EXIT_ERROR
        return EXIT_CHECK if self.failed else EXIT_OK


# commands -------------------------------------------------------------------------------------

def cmd_eval(s: Session, args) -> int:
    for expr in args.expr:
        s.run_line(expr)
    return s.exit_code()


def cmd_repl(s: Session, args) -> int:
    interactive = sys.stdin.isatty()
    while True:
        if interactive:
            print("> ", end="", flush=True)
        line = sys.stdin.readline()
        if not line:
            break
        line = line.strip()
        if line in ("quit", "exit"):
            break
        if line and not line.startswith("#"):
            s.run_line(line)
    return EXIT_OK


def cmd_batch(s: Session, args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            lines = _command_lines(fh.read())
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    for line in lines:
        s.run_line(line)
    if s.errors and s.fmt == "json":
        print(json.dumps({"errors": s.errors}), file=sys.stderr)
    return s.exit_code()


def cmd_check(s: Session, args) -> int:
    if args.kind == "sd":
        s.emit(default_sd_report(s.evaluator.cfg))
    elif args.kind == "hfield":
        s.emit(default_hfield_report(s.evaluator.cfg))
    else:
        if args.file:
            with open(args.file, encoding="utf-8") as fh:
                lines = _command_lines(fh.read())
        else:
            lines = corpus_lines(CORPORA[args.kind])
        for line in lines:
            s.run_line(line)
    return s.exit_code()


def _flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommand copies must not overwrite flags given before the subcommand
    def d(value):
        return argparse.SUPPRESS if suppress else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--depth-cap", type=int, default=d(64), help="path and recursion depth cap")
    common.add_argument("--branch-cap", type=int, default=d(4096), help="maximum number of paths")
    common.add_argument("--term-cap", type=int, default=d(1024), help="maximum number of expanded terms")
    common.add_argument("--cross-check", action="store_true", default=d(False), help="compare D() with the recursive algorithm")
    common.add_argument("--format", choices=("text", "json"), default=d("text"))
    common.add_argument("--terms", type=int, default=d(0), help="expansion preview length for fractions")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _flags(suppress=True)
    parser = argparse.ArgumentParser(prog="surreal", description="Exact surreal arithmetic, exp/log and derivation.", parents=[_flags(suppress=False)])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("eval", parents=[common], help="evaluate expressions")
    p.add_argument("expr", nargs="+")
    p.set_defaults(func=cmd_eval)
    p = sub.add_parser("repl", parents=[common], help="read expressions from stdin")
    p.set_defaults(func=cmd_repl)
    p = sub.add_parser("batch", parents=[common], help="evaluate a file of expressions")
    p.add_argument("file")
    p.set_defaults(func=cmd_batch)
    p = sub.add_parser("check", parents=[common], help="run a property suite")
    p.add_argument("kind", choices=("sd", "hfield", "cross", "commute", "order"))
    p.add_argument("file", nargs="?", help="corpus file (cross, commute, order); defaults to the shipped corpus")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("depth_cap", "branch_cap", "term_cap"):
        if getattr(args, name) < 1:
            print(f"error: --{name.replace('_', '-')} must be at least 1", file=sys.stderr)
            return EXIT_ERROR
    return args.func(Session(args), args)


if __name__ == "__main__":
    sys.exit(main())
