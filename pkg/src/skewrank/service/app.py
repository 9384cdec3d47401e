"""Analysis jobs and the FastAPI app exposing them.

The job functions at the top are pure: typed request in, JSON-ready dict
out.  The CLI calls them in-process; the HTTP layer below is a thin wrap
that maps the library's error taxonomy onto status codes and carries the
matching CLI exit code in the body.
"""
from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from .. import __version__
from ..code import LinearCode
from ..errors import (
    CapExceeded,
    InputError,
    InvariantFailure,
    NotCyclic,
    ZeroInput,
)
from ..gf import FieldTower, make_tower
from ..lengths import (
    analyze,
    shorten_pseudo_cyclic,
    shorten_pseudo_skew,
    singleton_audit,
)
from ..sweep import DEFAULT_CYCLIC_GRID, DEFAULT_SKEW_GRID, sweep, sweep_summary
from ..textio import (
    parse_cpoly,
    parse_lpoly,
    parse_matrix,
    render_cpoly,
    render_element,
    render_lpoly,
    render_matrix,
)
from .models import (
    AnalyzeRequest,
    CodeSpec,
    ShortenRequest,
    SweepRequest,
    TowerSpec,
)

# ------------------------------------------------------------------ jobs --

def build_tower(spec: TowerSpec, ambient_cap: int | None = None) -> FieldTower:
    kwargs = {}
    if ambient_cap is not None:
        kwargs["ambient_cap"] = ambient_cap
    if spec.modulus is not None:
        kwargs["modulus"] = tuple(spec.modulus)
    return make_tower(spec.p, spec.e, spec.m, spec.r, spec.n, **kwargs)


def build_code(K: FieldTower, spec: CodeSpec) -> LinearCode:
    n = K.n if spec.n is None else spec.n
    gen = spec.generator
    if gen.type == "conv_poly":
        if not isinstance(gen.data, str):
            raise ZeroInput("conv_poly data must be a polynomial text")
        return LinearCode.from_gpoly(K, parse_cpoly(K, gen.data), n)
    if gen.type == "lin_poly":
        if not isinstance(gen.data, str):
            raise ZeroInput("lin_poly data must be a polynomial text")
        return LinearCode.from_glpoly(K, parse_lpoly(K, K.r, gen.data), n)
    if gen.type == "matrix":
        if not isinstance(gen.data, list):
            raise ZeroInput("matrix data must be a list of rows")
        return LinearCode(K, parse_matrix(K, gen.data), n)
    # root_exponents
    if not isinstance(gen.data, list) or not all(
            isinstance(x, int) for x in gen.data):
        raise ZeroInput("root_exponents data must be a list of integers")
    return LinearCode.from_root_exponents(K, gen.data, n)


def analyze_job(req: AnalyzeRequest) -> dict:
    K = build_tower(req.tower, req.ambient_cap)
    C = build_code(K, req.code)
    wanted = set(req.analyses) if req.analyses else {"lengths", "degeneracy"}
    rep = analyze(C, req.enum_cap)
    out: dict = {"n": rep.n, "k": rep.k}
    if "lengths" in wanted:
        out["l_R"] = rep.rank_length
        out["l_P"] = rep.period_length
        out["rank_length_paths"] = dict(rep.rank_length_paths)
        out["period_length_paths"] = dict(rep.period_length_paths)
        out["shift_lengths"] = [
            {"a": render_element(K, a), "r": r, "value": v}
            for a, r, v in rep.shift_lengths]
        out["skew_bounds"] = {"lower": rep.skew_lower,
                              "upper": rep.skew_upper,
                              "attained": rep.skew_attained}
        out["witness"] = None if rep.witness is None else {
            "length": rep.witness.n,
            "rows": render_matrix(K, rep.witness.rows)}
    if "degeneracy" in wanted:
        out["degenerate"] = rep.degenerate
        out["criteria"] = [dict(item) for item in rep.criteria]
    if "singleton" in wanted:
        out["singleton"] = singleton_audit(C, rep, req.enum_cap)
    return out


def shorten_job(req: ShortenRequest) -> dict:
    K = build_tower(req.tower, req.ambient_cap)
    C = build_code(K, req.code)
    if C.is_cyclic:
        sh = shorten_pseudo_cyclic(C, req.enum_cap)
        return {
            "kind": "conv",
            "original_length": C.n,
            "length": sh.code.n,
            "k": sh.code.dim,
            "rows": render_matrix(K, sh.code.rows),
            "generator_closure": render_cpoly(K, sh.generator_closure),
            "check_closure": render_cpoly(K, sh.check_closure),
        }
    if K.r >= 1 and (K.r % K.m) in C.skew_orders():
        sh = shorten_pseudo_skew(C, req.enum_cap)
        return {
            "kind": "twisted",
            "original_length": C.n,
            "length": sh.code.n,
            "k": sh.code.dim,
            "rows": render_matrix(K, sh.code.rows),
            "generator_closure": render_lpoly(K, sh.generator_closure),
            "check_closure": render_lpoly(K, sh.check_closure),
        }
    raise NotCyclic("shortening needs a cyclic or twisted cyclic code")


def sweep_job(req: SweepRequest) -> dict:
    if req.grids is None:
        entries = DEFAULT_CYCLIC_GRID + DEFAULT_SKEW_GRID
    else:
        entries = tuple(
            (g.p, g.e, g.m, g.r, tuple(g.lengths)) for g in req.grids)
    records = sweep(entries, req.enum_cap)
    return {"records": records, "summary": sweep_summary(records)}


def canonical_json(obj) -> str:
    """One fixed serialization so identical jobs give identical bytes."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# ------------------------------------------------------------------- app --

app = FastAPI(title="skewrank", version=__version__)


def _canonical(obj) -> Response:
    return Response(content=canonical_json(obj), media_type="application/json")


@app.exception_handler(InputError)
async def _input_error(request: Request, exc: InputError):
    return JSONResponse(status_code=400, content={
        "error": type(exc).__name__, "detail": str(exc), "exit_code": 2})


@app.exception_handler(CapExceeded)
async def _cap_error(request: Request, exc: CapExceeded):
    return JSONResponse(status_code=400, content={
        "error": type(exc).__name__, "detail": str(exc), "exit_code": 3})


@app.exception_handler(InvariantFailure)
async def _invariant_error(request: Request, exc: InvariantFailure):
    return JSONResponse(status_code=500, content={
        "error": type(exc).__name__, "detail": str(exc), "exit_code": 1})


@app.get("/health")
async def health():
    return _canonical({"status": "ok", "version": __version__})


@app.post("/analyze")
async def analyze_endpoint(req: AnalyzeRequest):
    return _canonical(analyze_job(req))


@app.post("/shorten")
async def shorten_endpoint(req: ShortenRequest):
    return _canonical(shorten_job(req))


@app.post("/sweep")
async def sweep_endpoint(req: SweepRequest):
    return _canonical(sweep_job(req))
