"""FastAPI wiring around the command handlers, with uniform error bodies."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import (
    ContextMismatch,
    DescentAlgebraError,
    InvalidSubset,
    RankCapExceeded,
    RankMismatch,
)
from . import handlers
from .schemas import (
    ClassTableRequest,
    ConstantsRequest,
    HealthResponse,
    InduceRequest,
    ParabolicTableRequest,
    RepsRequest,
    RestrictRequest,
    TableResponse,
    VerifyRequest,
    VerifyResponse,
)


def error_status(exc: DescentAlgebraError) -> tuple[int, dict]:
    """The (status, body) pair for a domain error; shared with the CLI."""
    if isinstance(exc, RankCapExceeded):
        return 400, {"code": "rank-cap-exceeded", "message": str(exc)}
    if isinstance(exc, (InvalidSubset, RankMismatch, ContextMismatch)):
        return 422, {"code": "invalid-request", "message": str(exc)}
    return 500, {"code": "invariant-violation", "message": str(exc)}


def create_app() -> FastAPI:
    app = FastAPI(
        title="descent-algebra",
        version=__version__,
        description="Exact tables and identity verifiers for coset-class "
        "descent algebras of symmetric groups.",
    )

    @app.exception_handler(DescentAlgebraError)
    async def _domain_error(request: Request, exc: DescentAlgebraError) -> JSONResponse:
        status, body = error_status(exc)
        return JSONResponse(status_code=status, content=body)

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return handlers.handle_health()

    @app.post("/reps", response_model=TableResponse, response_model_exclude_none=True)
    def reps(request: RepsRequest) -> TableResponse:
        return handlers.handle_reps(request)

    @app.post("/constants", response_model=TableResponse, response_model_exclude_none=True)
    def constants(request: ConstantsRequest) -> TableResponse:
        return handlers.handle_constants(request)

    @app.post("/class-table", response_model=TableResponse, response_model_exclude_none=True)
    def class_table(request: ClassTableRequest) -> TableResponse:
        return handlers.handle_class_table(request)

    @app.post("/parabolic-table", response_model=TableResponse, response_model_exclude_none=True)
    def parabolic_table(request: ParabolicTableRequest) -> TableResponse:
        return handlers.handle_parabolic_table(request)

    @app.post("/induce", response_model=TableResponse, response_model_exclude_none=True)
    def induce(request: InduceRequest) -> TableResponse:
        return handlers.handle_induce(request)

    @app.post("/restrict", response_model=TableResponse, response_model_exclude_none=True)
    def restrict(request: RestrictRequest) -> TableResponse:
        return handlers.handle_restrict(request)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(request: VerifyRequest) -> VerifyResponse:
        return handlers.handle_verify(request)

    return app


app = create_app()
