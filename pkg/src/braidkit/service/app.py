"""FastAPI application exposing the braid engine.

Errors carry the same numeric codes the CLI uses as exit codes:
2 parse error, 3 domain error, 4 resource budget exceeded.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import BudgetError, DomainError, ParseError
from . import handlers, models

app = FastAPI(
    title="braidkit",
    version=__version__,
    description="Exact computation in Artin braid groups: word problems, "
    "representations, bracket/Jones invariants of closures, and orderings.",
)

_ERROR_CODES = {ParseError: 2, DomainError: 3, BudgetError: 4}


@app.exception_handler(ParseError)
@app.exception_handler(DomainError)
@app.exception_handler(BudgetError)
async def _braid_error_handler(request: Request, exc: Exception) -> JSONResponse:
    code = next(c for t, c in _ERROR_CODES.items() if isinstance(exc, t))
    return JSONResponse(status_code=400, content={"code": code, "message": str(exc)})


@app.get("/health", response_model=models.HealthResponse)
def health() -> models.HealthResponse:
    return models.HealthResponse(status="ok", version=__version__)


@app.post("/wp", response_model=models.WordProblemResponse)
def word_problem(req: models.BraidRequest) -> models.WordProblemResponse:
    return handlers.handle_wp(req)


@app.post("/compare", response_model=models.CompareResponse)
def compare(req: models.CompareRequest) -> models.CompareResponse:
    return handlers.handle_compare(req)


@app.post("/burau", response_model=models.BurauResponse)
def burau_matrix(req: models.BraidRequest) -> models.BurauResponse:
    return handlers.handle_burau(req)


@app.post("/modular", response_model=models.ModularResponse)
def modular_matrix(req: models.BraidRequest) -> models.ModularResponse:
    return handlers.handle_modular(req)


@app.post("/jones", response_model=models.JonesResponse)
def jones(req: models.BraidRequest) -> models.JonesResponse:
    return handlers.handle_jones(req)


@app.post("/comb", response_model=models.CombResponse)
def comb_coordinates(req: models.BraidRequest) -> models.CombResponse:
    return handlers.handle_comb(req)


@app.post("/tl", response_model=models.TLResponse)
def temperley_lieb_image(req: models.BraidRequest) -> models.TLResponse:
    return handlers.handle_tl(req)


@app.post("/fuzz", response_model=models.FuzzResponse)
def fuzz(req: models.FuzzRequest) -> models.FuzzResponse:
    return handlers.handle_fuzz(req)
