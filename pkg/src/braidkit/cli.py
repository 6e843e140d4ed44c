"""Command-line front end: a thin client over the service layer.

By default requests are handled in-process; with --server they are POSTed to
a running instance of the HTTP service instead.  Output is JSON on stdout,
one object per result (one per input line in batch mode).

Exit codes: 0 success, 1 property violation, 2 parse error, 3 domain error,
4 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .errors import BraidError, BudgetError, DomainError, ParseError
from .service import handlers, models

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_BUDGET = 4

_BRAID_COMMANDS = ("wp", "burau", "modular", "jones", "comb", "tl")

_HANDLERS: dict[str, Callable] = {
    "wp": handlers.handle_wp,
    "burau": handlers.handle_burau,
    "modular": handlers.handle_modular,
    "jones": handlers.handle_jones,
    "comb": handlers.handle_comb,
    "tl": handlers.handle_tl,
    "compare": handlers.handle_compare,
    "fuzz": handlers.handle_fuzz,
}

_PATHS = {
    "wp": "/wp",
    "burau": "/burau",
    "modular": "/modular",
    "jones": "/jones",
    "comb": "/comb",
    "tl": "/tl",
    "compare": "/compare",
    "fuzz": "/fuzz",
}


def _error_code(exc: BraidError) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, BudgetError):
        return EXIT_BUDGET
    if isinstance(exc, DomainError):
        return EXIT_DOMAIN
    return EXIT_VIOLATION


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, separators=(", ", ": ")) + "\n")


def _dispatch(command: str, request, server: str | None) -> dict:
    """Run a request in-process, or against a remote service when one is given."""
    if server is None:
        return _HANDLERS[command](request).model_dump()
    import httpx

    response = httpx.post(
        server.rstrip("/") + _PATHS[command], json=request.model_dump(), timeout=600.0
    )
    payload = response.json()
    if response.status_code != 200:
        code = payload.get("code", EXIT_VIOLATION)
        exc_type = {EXIT_PARSE: ParseError, EXIT_DOMAIN: DomainError, EXIT_BUDGET: BudgetError}
        raise exc_type.get(code, BraidError)(payload.get("message", "remote error"))
    return payload


def _split_batch_line(line: str) -> tuple[str, str | None]:
    if "#" in line:
        text, label = line.split("#", 1)
        return text.strip(), label.strip() or None
    return line.strip(), None


def _run_batch(command: str, path: str, n: int | None, server: str | None) -> int:
    worst = EXIT_OK
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text, label = _split_batch_line(raw)
            if not text and label is None and not raw.strip():
                continue
            head = {"line": lineno}
            if label is not None:
                head["label"] = label
            try:
                body = _dispatch(command, models.BraidRequest(text=text, n=n), server)
                _emit(head | body)
            except BraidError as exc:
                code = _error_code(exc)
                worst = max(worst, code)
                _emit(head | {"error": str(exc), "code": code})
    return worst


def _run_single(command: str, request, server: str | None) -> int:
    try:
        _emit(_dispatch(command, request, server))
    except BraidError as exc:
        code = _error_code(exc)
        _emit({"error": str(exc), "code": code})
        return code
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidkit",
        description="Exact braid-group computations; braids are whitespace-separated "
        'signed generator indices, optionally prefixed "n=<k>;".',
    )
    parser.add_argument("--server", help="URL of a running braidkit service", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_braid_command(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("braid", nargs="?", default=None, help="braid text")
        p.add_argument("--n", type=int, default=None, help="strand-count hint")
        p.add_argument("--file", default=None, help="batch file: one braid per line")
        return p

    add_braid_command("wp", "word problem: identity, purity, permutation, degree")
    add_braid_command("burau", "unreduced Burau matrix over Z[t, 1/t]")
    add_braid_command("modular", "SL(2,Z) image of a 3-strand braid")
    add_braid_command("jones", "bracket, writhe, normalized invariant, Jones polynomial")
    add_braid_command("comb", "combing coordinates and linking numbers of a pure braid")
    add_braid_command("tl", "Temperley-Lieb image and its trace")

    p = sub.add_parser("compare", help="compare two braids in a chosen order")
    p.add_argument("order", choices=["dehornoy", "pure"])
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--budget", type=int, default=10**6, help="handle-reduction step cap")
    p.add_argument("--truncation", type=int, default=16, help="Magnus degree cap")

    p = sub.add_parser("fuzz", help="randomized property suites")
    p.add_argument("kind", choices=["markov", "order"])
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--len-max", type=int, default=10)
    p.add_argument("--budget", type=int, default=10**6)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        uvicorn.run("braidkit.service.app:app", host=args.host, port=args.port)
        return EXIT_OK

    if args.command == "compare":
        request = models.CompareRequest(
            order=args.order,
            left=args.left,
            right=args.right,
            n=args.n,
            budget=args.budget,
            truncation=args.truncation,
        )
        return _run_single("compare", request, args.server)

    if args.command == "fuzz":
        request = models.FuzzRequest(
            kind=args.kind,
            trials=args.trials,
            seed=args.seed,
            n_max=args.n_max,
            len_max=args.len_max,
            budget=args.budget,
        )
        try:
            body = _dispatch("fuzz", request, args.server)
        except BraidError as exc:
            _emit({"error": str(exc), "code": _error_code(exc)})
            return _error_code(exc)
        _emit(body)
        return EXIT_OK if body["violations"] == 0 else EXIT_VIOLATION

    if args.file is not None:
        return _run_batch(args.command, args.file, args.n, args.server)
    request = models.BraidRequest(text=args.braid or "", n=args.n)
    return _run_single(args.command, request, args.server)


if __name__ == "__main__":
    sys.exit(main())
