"""HTTP front end: one route per core operation, all stateless.

Error mapping: malformed input (parse errors, out-of-range descriptions,
bad windows) → 400; domain preconditions (not a basis, not a subset, not a
member, empty set) → 422; an internal law failing to hold → 500, because
that means the implementation is wrong, not the request.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import __version__
from ..basis import analyze, essential_elements, order, remove_ok
from ..census import CensusConfig, run_census
from ..errors import InputError, LawViolation, PreconditionError
from ..essentia import essential_subsets, proof_trace, verify_essentiality
from ..oracle import brute_essential_subsets, empirical_order, sumset_window
from .models import (BruteSubsetsRequest, CensusRequest, EmpiricalOrderRequest,
                     ParsedSetResponse, PeriodicSetModel, RemoveRequest,
                     SetRequest, SumsetWindowRequest, VerifyRequest, as_core)


def create_app() -> FastAPI:
    app = FastAPI(title="addbasis", version=__version__,
                  description="Exact decision procedures for additive bases "
                              "given as eventually periodic integer sets.")

    @app.exception_handler(InputError)
    async def _input_error(request, exc: InputError):
        return JSONResponse(status_code=400,
                            content={"error": type(exc).__name__, "detail": str(exc)})

    @app.exception_handler(PreconditionError)
    async def _precondition_error(request, exc: PreconditionError):
        return JSONResponse(status_code=422,
                            content={"error": type(exc).__name__, "detail": str(exc)})

    @app.exception_handler(LawViolation)
    async def _law_violation(request, exc: LawViolation):
        return JSONResponse(status_code=500,
                            content={"error": "LawViolation", "detail": str(exc)})

    @app.get("/health")
    async def health():
        return {"status": "ok", "version": __version__}

    @app.post("/parse", response_model=ParsedSetResponse)
    async def parse(req: SetRequest):
        s = as_core(req.set)
        return ParsedSetResponse(
            set=PeriodicSetModel.from_core(s), text=str(s),
            is_finite=s.is_finite,
            min_element=None if s.is_empty else s.min_element())

    @app.post("/analyze")
    async def analyze_route(req: SetRequest):
        return analyze(as_core(req.set)).to_json_dict()

    @app.post("/order")
    async def order_route(req: SetRequest):
        return {"order": order(as_core(req.set))}

    @app.post("/essential-elements")
    async def essential_elements_route(req: SetRequest):
        return {"elements": list(essential_elements(as_core(req.set)))}

    @app.post("/essential-subsets")
    async def essential_subsets_route(req: SetRequest):
        return {"subsets": [es.to_json_dict()
                            for es in essential_subsets(as_core(req.set))]}

    @app.post("/verify")
    async def verify_route(req: VerifyRequest):
        return verify_essentiality(as_core(req.set), as_core(req.p)).to_json_dict()

    @app.post("/trace")
    async def trace_route(req: SetRequest):
        return proof_trace(as_core(req.set)).to_json_dict()

    @app.post("/remove-check")
    async def remove_check_route(req: RemoveRequest):
        s = as_core(req.set)
        return {"remove_ok": remove_ok(s, req.remove)}

    @app.post("/oracle/sumset-window")
    async def sumset_window_route(req: SumsetWindowRequest):
        s = as_core(req.set)
        return sumset_window(s, req.h, req.lo, req.hi).to_json_dict()

    @app.post("/oracle/empirical-order")
    async def empirical_order_route(req: EmpiricalOrderRequest):
        s = as_core(req.set)
        return empirical_order(s, req.h_max, req.lo, req.hi).to_json_dict()

    @app.post("/oracle/brute-essential-subsets")
    async def brute_route(req: BruteSubsetsRequest):
        s = as_core(req.set)
        subsets = brute_essential_subsets(s, pool=req.pool)
        return {"subsets": [list(p) for p in subsets]}

    @app.post("/census")
    async def census_route(req: CensusRequest):
        config = CensusConfig(trials=req.trials, seed=req.seed,
                              modulus_max=req.m_max, exceptional_max=req.e_max,
                              residue_density=req.density,
                              window=(req.window_lo, req.window_hi))
        return run_census(config).to_json_dict()

    return app
