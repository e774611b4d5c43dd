"""FastAPI application exposing the toolkit as a stateless compute service."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import ContractError, MultresError
from . import handlers
from . import schemas as S


def create_app() -> FastAPI:
    app = FastAPI(
        title="multres",
        version=__version__,
        description=(
            "Exact multiplicity-locus computations: orders, Rees algebra "
            "singular loci and transforms, elimination algebras, local "
            "presentations, blow-up scripts, and plane-curve resolution."
        ),
    )

    @app.exception_handler(ContractError)
    async def contract_error(request: Request, exc: ContractError):
        return JSONResponse(
            status_code=400,
            content={"error": type(exc).__name__, "message": str(exc)},
        )

    @app.exception_handler(MultresError)
    async def internal_error(request: Request, exc: MultresError):
        return JSONResponse(
            status_code=500,
            content={"error": type(exc).__name__, "message": str(exc)},
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/order", response_model=S.OrderResponse)
    def order(req: S.OrderRequest):
        return handlers.handle_order(req)

    @app.post("/sing", response_model=S.SingResponse)
    def sing(req: S.SingRequest):
        return handlers.handle_sing(req)

    @app.post("/ord", response_model=S.OrdResponse)
    def ord_(req: S.OrdRequest):
        return handlers.handle_ord(req)

    @app.post("/permissible", response_model=S.PermissibleResponse)
    def permissible(req: S.PermissibleRequest):
        return handlers.handle_permissible(req)

    @app.post("/transform", response_model=S.TransformResponse)
    def transform(req: S.TransformRequest):
        return handlers.handle_transform(req)

    @app.post("/elim", response_model=S.ElimResponse)
    def elim(req: S.ElimRequest):
        return handlers.handle_elim(req)

    @app.post("/image-nfold", response_model=S.ImageNfoldResponse)
    def image_nfold(req: S.ElimRequest):
        return handlers.handle_image_nfold(req)

    @app.post("/presentation/attach", response_model=S.PresentationAttachResponse)
    def presentation_attach(req: S.PresentationAttachRequest):
        return handlers.handle_presentation_attach(req)

    @app.post("/presentation/test", response_model=S.PresentationTestResponse)
    def presentation_test(req: S.PresentationTestRequest):
        return handlers.handle_presentation_test(req)

    @app.post("/presentation/transform", response_model=S.PresentationTransformResponse)
    def presentation_transform(req: S.PresentationTransformRequest):
        return handlers.handle_presentation_transform(req)

    @app.post("/zariski", response_model=S.ZariskiResponse)
    def zariski(req: S.ZariskiRequest):
        return handlers.handle_zariski(req)

    @app.post("/run", response_model=S.RunResponse)
    def run(req: S.RunRequest):
        return handlers.handle_run(req)

    @app.post("/resolve-curve", response_model=S.ResolveCurveResponse)
    def resolve_curve(req: S.ResolveCurveRequest):
        return handlers.handle_resolve_curve(req)

    @app.post("/selftest", response_model=S.SelftestResponse)
    def selftest(req: S.SelftestRequest):
        return handlers.handle_selftest(req)

    return app


app = create_app()
