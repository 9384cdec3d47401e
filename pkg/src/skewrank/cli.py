"""Command line client for the analysis jobs.

Jobs run in-process by default; with --server they are POSTed to a
running service instead, so scripts behave identically either way.  Exit
codes: 0 success, 1 invariant failure (a cross-check tripped), 2 input
error, 3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

import httpx
from pydantic import ValidationError

from .errors import CapExceeded, InputError, InvariantFailure

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_INPUT = 2
EXIT_CAP = 3

_STATUS_EXIT = {400: EXIT_INPUT, 422: EXIT_INPUT, 500: EXIT_INVARIANT}


def _make_client(server: str) -> httpx.Client:
    return httpx.Client(base_url=server, timeout=120.0)


def _load_spec(path: str) -> dict:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputSpecError(f"spec is not valid JSON: {exc}") from exc
    if not isinstance(spec, dict):
        raise InputSpecError("spec must be a JSON object")
    return spec


class InputSpecError(Exception):
    pass


def _post(server: str, path: str, body: dict):
    with _make_client(server) as client:
        resp = client.post(path, json=body)
    if resp.status_code == 200:
        return resp.text, EXIT_OK
    try:
        payload = resp.json()
    except ValueError:
        payload = {}
    detail = payload.get("detail", resp.text)
    error = payload.get("error", f"HTTP {resp.status_code}")
    code = payload.get("exit_code", _STATUS_EXIT.get(resp.status_code, EXIT_INPUT))
    print(f"{error}: {detail}", file=sys.stderr)
    return None, code


def _run_job(args, model_name: str, job_name: str, endpoint: str, body: dict):
    """Validate the body, then run in-process or against --server."""
    if getattr(args, "server", None):
        text, code = _post(args.server, endpoint, body)
        if text is None:
            return None, code
        return json.loads(text), EXIT_OK
    # import here so plain library use never pulls the service stack
    from .service import app as service_app
    from .service import models as service_models
    model = getattr(service_models, model_name)
    req = model.model_validate(body)
    job = getattr(service_app, job_name)
    return job(req), EXIT_OK


def _emit(obj, fmt: str, renderer) -> None:
    if fmt == "json":
        from .service.app import canonical_json
        print(canonical_json(obj))
    else:
        print(renderer(obj))


# ------------------------------------------------------------ text forms --

def _analyze_text(out: dict) -> str:
    lines = [f"length {out['n']}  dimension {out['k']}"]
    if "l_R" in out:
        lines.append(f"rank length {out['l_R']}  period length {out['l_P']}")
        if out.get("shift_lengths"):
            parts = [f"(a={s['a']}, r={s['r']}) -> {s['value']}"
                     for s in out["shift_lengths"]]
            lines.append("shift lengths: " + "; ".join(parts))
        sb = out.get("skew_bounds")
        if sb:
            att = {True: "yes", False: "no", None: "unknown"}[sb["attained"]]
            lines.append(f"twisted length in [{sb['lower']}, {sb['upper']}]"
                         f"  attained: {att}")
        if out.get("witness"):
            lines.append(f"witness length {out['witness']['length']}: "
                         + "; ".join(",".join(row)
                                     for row in out["witness"]["rows"]))
    if "degenerate" in out:
        lines.append("degenerate: " + ("yes" if out["degenerate"] else "no"))
        for item in out.get("criteria") or ():
            lines.append(f"  {item['id']}: {item['value']}")
    if out.get("singleton") is not None:
        bad = [e for e in out["singleton"] if not e["ok"]]
        lines.append("singleton bound: "
                     + ("all realizations ok" if not bad else f"VIOLATED {bad}"))
    return "\n".join(lines)


def _shorten_text(out: dict) -> str:
    lines = [
        f"{out['kind']} shortening: length {out['original_length']} -> "
        f"{out['length']}, dimension {out['k']}",
        f"generator closure: {out['generator_closure']}",
        f"check closure (modulus): {out['check_closure']}",
    ]
    for row in out["rows"]:
        lines.append("  [" + ", ".join(row) + "]")
    return "\n".join(lines)


def _sweep_text(out: dict) -> str:
    s = out["summary"]
    lines = [f"{s['codes']} codes, {s['degenerate']} rank degenerate"]
    for key in sorted(s["towers"]):
        t = s["towers"][key]
        lines.append(f"  {key}: {t['codes']} codes, {t['degenerate']} degenerate")
    return "\n".join(lines)


# ----------------------------------------------------------------- parse --

def _parse_grid(text: str) -> dict:
    """p,e,m,r,nlo[-nhi] -> GridEntry body."""
    parts = text.split(",")
    if len(parts) != 5:
        raise InputSpecError(
            f"grid must be p,e,m,r,nlo[-nhi], got {text!r}")
    try:
        p, e, m, r = (int(x) for x in parts[:4])
        if "-" in parts[4]:
            lo, hi = parts[4].split("-", 1)
            lengths = list(range(int(lo), int(hi) + 1))
        else:
            lengths = [int(parts[4])]
    except ValueError as exc:
        raise InputSpecError(f"bad grid {text!r}: {exc}") from exc
    return {"p": p, "e": e, "m": m, "r": r, "lengths": lengths}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewrank",
        description="rank-metric lengths of cyclic and twisted cyclic codes")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--server", metavar="URL",
                        help="POST to a running service instead of in-process")
    common.add_argument("--cap-enum", type=int, metavar="N",
                        help="word enumeration cap")

    pa = sub.add_parser("analyze", parents=[common],
                        help="full length and degeneracy report for one code")
    pa.add_argument("--spec", required=True, metavar="FILE",
                    help="JSON job file with tower and code ('-' for stdin)")
    pa.add_argument("--analysis", metavar="LIST",
                    help="comma list of lengths,degeneracy,singleton")
    pa.add_argument("--seed", type=int, default=None)
    pa.add_argument("--cap-ambient", type=int, metavar="N")

    ps = sub.add_parser("shorten", parents=[common],
                        help="rewrite a code in its rank length")
    ps.add_argument("--spec", required=True, metavar="FILE")
    ps.add_argument("--cap-ambient", type=int, metavar="N")

    pw = sub.add_parser("sweep", parents=[common],
                        help="analyze an exhaustive family of codes")
    pw.add_argument("--grid", action="append", metavar="SPEC",
                    help="p,e,m,r,nlo[-nhi]; repeatable; default built-in grids")

    pv = sub.add_parser("serve", help="run the HTTP service")
    pv.add_argument("--host", default="127.0.0.1")
    pv.add_argument("--port", type=int, default=8000)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except InputSpecError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValidationError as exc:
        print(f"invalid job: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InputError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvariantFailure as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except AssertionError as exc:
        print(f"internal cross-check failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


def _dispatch(args) -> int:
    if args.command == "serve":
        import uvicorn

        from .service.app import app
        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK

    if args.command == "analyze":
        body = _load_spec(args.spec)
        if args.analysis:
            body["analyses"] = [s.strip() for s in args.analysis.split(",")
                                if s.strip()]
        if args.seed is not None:
            body["seed"] = args.seed
        if args.cap_enum is not None:
            body["enum_cap"] = args.cap_enum
        if args.cap_ambient is not None:
            body["ambient_cap"] = args.cap_ambient
        out, code = _run_job(args, "AnalyzeRequest", "analyze_job",
                             "/analyze", body)
        if out is None:
            return code
        _emit(out, args.format, _analyze_text)
        return EXIT_OK

    if args.command == "shorten":
        body = _load_spec(args.spec)
        if args.cap_enum is not None:
            body["enum_cap"] = args.cap_enum
        if args.cap_ambient is not None:
            body["ambient_cap"] = args.cap_ambient
        out, code = _run_job(args, "ShortenRequest", "shorten_job",
                             "/shorten", body)
        if out is None:
            return code
        _emit(out, args.format, _shorten_text)
        return EXIT_OK

    # sweep
    body: dict = {}
    if args.grid:
        body["grids"] = [_parse_grid(g) for g in args.grid]
    if args.cap_enum is not None:
        body["enum_cap"] = args.cap_enum
    out, code = _run_job(args, "SweepRequest", "sweep_job", "/sweep", body)
    if out is None:
        return code
    _emit(out, args.format, _sweep_text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
