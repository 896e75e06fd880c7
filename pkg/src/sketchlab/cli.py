"""Command line front end; a thin client over the service handlers.

Exit codes: 0 success, 1 domain failure (invalid document, no match,
refuted or inconclusive entailment, truncated saturation), 2 input
error (unparsable input, unknown names, bad flags).
"""

from __future__ import annotations

import argparse
import json
import sys

from .service import handlers
from .service.handlers import InputError


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _parse_state(text: str) -> dict[str, int]:
    state = {}
    if not text:
        return state
    for item in text.split(","):
        if "=" not in item:
            raise InputError(f"bad state entry {item!r}; expected name=value")
        name, _, value = item.partition("=")
        try:
            state[name.strip()] = int(value)
        except ValueError as exc:
            raise InputError(f"bad state value {value!r}") from exc
    return state


def _emit_json(result: dict) -> None:
    sys.stdout.write(json.dumps(result, indent=2, sort_keys=True,
                                ensure_ascii=False) + "\n")


def _emit_text(result: dict) -> None:
    lines = []
    if "lines" in result:
        lines.extend(result["lines"])
    else:
        for key, value in result.items():
            if key in ("ok", "spec", "element_map", "point_map",
                       "fraction", "steps", "trace", "problems"):
                continue
            lines.append(f"{key}: {value}")
        for name, found in result.get("problems", {}).items():
            for p in found:
                lines.append(f"{name}: {p}")
        if "steps" in result and isinstance(result["steps"], list):
            for step in result["steps"]:
                created = "; ".join(f"{p}: {', '.join(es)}"
                                    for p, es in step["created"].items())
                lines.append(f"step {step['index']}: {step['rule']}"
                             + (f"  [{created}]" if created else ""))
        if "spec" in result:
            spec = result["spec"]
            for point, elems in spec["carriers"].items():
                lines.append(f"{point}: " + ", ".join(elems))
    lines.append("ok" if result.get("ok") else "failed")
    sys.stdout.write("\n".join(lines) + "\n")


def _finish(result: dict, fmt: str) -> int:
    if fmt == "json":
        _emit_json(result)
    else:
        _emit_text(result)
    return 0 if result.get("ok") else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sketchlab",
        description="workbench for sketch-based logics and "
                    "state-effect reasoning")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_budget=True):
        p.add_argument("file", help="input document ('-' for stdin)")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--logic", default="eq",
                       help="builtin (eq, eq*, dec, mp) or a logic "
                            "declared in the document")
        if with_budget:
            p.add_argument("--budget", type=int, default=10000,
                           help="element budget for saturation")
            p.add_argument("--depth", type=int, default=4,
                           help="structural depth cap for saturation")

    p = sub.add_parser("check", help="validate every block of a document")
    p.add_argument("file")
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("saturate", help="close a spec under a logic's rules")
    common(p)
    p.add_argument("--spec", default=None, help="spec name in the document")

    p = sub.add_parser("prove", help="run the document's prove block")
    common(p, with_budget=False)
    p.add_argument("--spec", default=None, help="start spec name")

    p = sub.add_parser("entail", help="decide a morphism's entailment status")
    common(p)
    p.add_argument("--morphism", default=None,
                   help="morphism name in the document")

    p = sub.add_parser("translate",
                       help="translate a decorated spec to a plain or "
                            "state-passing one")
    p.add_argument("file")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--spec", default=None)
    p.add_argument("--via", choices=("far", "near"), default="far",
                   help="far forgets decorations; near threads the state")

    p = sub.add_parser("eval", help="evaluate a mini-language program")
    p.add_argument("file", help="program file ('-' for stdin)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--state", default="",
                   help="initial state, e.g. x=1,y=2")
    p.add_argument("--order", choices=("left", "right"), default="left",
                   help="argument evaluation order")
    p.add_argument("--modulus", type=int, default=2 ** 16)

    p = sub.add_parser("demo", help="run a built-in demonstration")
    p.add_argument("name", choices=("mp", "seqprod"))
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            return _finish(handlers.handle_check(_read(args.file)),
                           args.format)
        if args.command == "saturate":
            return _finish(handlers.handle_saturate(
                _read(args.file), spec=args.spec, logic=args.logic,
                budget=args.budget, depth=args.depth), args.format)
        if args.command == "prove":
            return _finish(handlers.handle_prove(
                _read(args.file), spec=args.spec, logic=args.logic),
                args.format)
        if args.command == "entail":
            return _finish(handlers.handle_entail(
                _read(args.file), morphism=args.morphism, logic=args.logic,
                budget=args.budget, depth=args.depth), args.format)
        if args.command == "translate":
            return _finish(handlers.handle_translate(
                _read(args.file), spec=args.spec, via=args.via), args.format)
        if args.command == "eval":
            return _finish(handlers.handle_eval(
                _read(args.file), state=_parse_state(args.state),
                order=args.order, modulus=args.modulus), args.format)
        if args.command == "demo":
            return _finish(handlers.handle_demo(args.name), args.format)
        if args.command == "serve":
            import uvicorn

            from .service.app import app
            uvicorn.run(app, host=args.host, port=args.port)
            return 0
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
