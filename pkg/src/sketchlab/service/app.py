"""HTTP front end: one endpoint per handler."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import handlers
from .handlers import InputError
from .schemas import (CheckRequest, EntailRequest, EvalRequest, ProveRequest,
                      SaturateRequest, TranslateRequest)


def create_app() -> FastAPI:
    app = FastAPI(title="sketchlab", version="1.0.0")

    def run(fn, *args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InputError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @app.get("/health")
    def health():
        return handlers.handle_health()

    @app.post("/check")
    def check(req: CheckRequest):
        return run(handlers.handle_check, req.document)

    @app.post("/saturate")
    def saturate(req: SaturateRequest):
        return run(handlers.handle_saturate, req.document, spec=req.spec,
                   logic=req.logic, budget=req.budget, depth=req.depth)

    @app.post("/prove")
    def prove(req: ProveRequest):
        return run(handlers.handle_prove, req.document, spec=req.spec,
                   logic=req.logic)

    @app.post("/entail")
    def entail(req: EntailRequest):
        return run(handlers.handle_entail, req.document,
                   morphism=req.morphism, logic=req.logic,
                   budget=req.budget, depth=req.depth)

    @app.post("/translate")
    def translate(req: TranslateRequest):
        return run(handlers.handle_translate, req.document, spec=req.spec,
                   via=req.via)

    @app.post("/eval")
    def eval_program(req: EvalRequest):
        return run(handlers.handle_eval, req.program, state=req.state,
                   order=req.order, modulus=req.modulus)

    @app.post("/demo/{name}")
    def demo(name: str):
        return run(handlers.handle_demo, name)

    return app


app = create_app()
