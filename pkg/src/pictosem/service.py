"""HTTP service exposing the analysis pipeline to thin clients.

All shared state (lexicon, dictionary, templates, default config) is
immutable after startup; request handling is pure, so identical requests
get byte-identical answers regardless of concurrency. Malformed requests
and domain errors answer with status 400 and an error body.
"""

from __future__ import annotations

import json
from typing import Optional, Sequence

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .analyzer import AnalyzerConfig, DEFAULT_CONFIG, analyze, scan_candidates
from .errors import PictosemError
from .lexicon import Lexicon, load_lexicon
from .network import to_canonical_json
from .realizer import (
    LemmaEntry,
    RealizationTemplate,
    load_dictionary,
    load_templates,
    realize,
)
from . import defaults


class AnalyzeRequest(BaseModel):
    sequence: list[str]
    threshold: Optional[float] = None
    locality: Optional[float] = None


def _merged_config(request: AnalyzeRequest, base: AnalyzerConfig) -> AnalyzerConfig:
    threshold = base.threshold if request.threshold is None else request.threshold
    locality = base.locality if request.locality is None else request.locality
    return AnalyzerConfig(
        threshold=threshold,
        locality=locality,
        distance_exponent=base.distance_exponent,
    )


def create_app(
    lexicon: Lexicon,
    dictionary: Sequence[LemmaEntry],
    templates: dict[str, RealizationTemplate],
    config: AnalyzerConfig = DEFAULT_CONFIG,
) -> FastAPI:
    app = FastAPI(title="pictosem", version="0.1.0")
    # the icon-board page is served separately; the API is read-only
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(RequestValidationError)
    async def malformed_request(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc.errors())})

    @app.exception_handler(PictosemError)
    async def domain_error(request: Request, exc: PictosemError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(ValueError)
    async def bad_value(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.get("/health")
    async def health():
        return {"status": "ok"}

    @app.get("/symbols")
    async def symbols():
        out = []
        for symbol_id, entry in lexicon.symbols.items():
            out.append(
                {
                    "id": symbol_id,
                    "gloss": entry.gloss,
                    "taxeme": entry.taxeme,
                    "domain": lexicon.taxemes[entry.taxeme].domain,
                    "predicative": entry.predicative,
                    "icon": entry.icon_ref,
                }
            )
        return out

    def run_analysis(request: AnalyzeRequest):
        merged = _merged_config(request, config)
        network = analyze(lexicon, request.sequence, merged)
        _, rejected = scan_candidates(lexicon, request.sequence, merged)
        try:
            sentence: Optional[str] = realize(network, dictionary, templates)
        except PictosemError:
            sentence = None
        return network, sentence, rejected

    @app.post("/analyze")
    async def analyze_endpoint(request: AnalyzeRequest):
        network, sentence, rejected = run_analysis(request)
        return {
            "network": json.loads(to_canonical_json(network)),
            "sentence": sentence,
            "rejected_candidates": [
                {
                    "head": c.predicate_pos,
                    "case": c.case_label,
                    "filler": c.filler_pos,
                    "value": c.damped_value,
                }
                for c in rejected
            ],
            "unattached": [v.pos for v in network.unattached()],
        }

    @app.post("/transfer")
    async def transfer_endpoint(request: AnalyzeRequest):
        merged = _merged_config(request, config)
        network = analyze(lexicon, request.sequence, merged)
        return {"sentence": realize(network, dictionary, templates)}

    return app


def app_from_environment() -> FastAPI:
    """App factory for `uvicorn pictosem.service:app_from_environment`."""
    lexicon = load_lexicon(defaults.resolve_lexicon_path())
    dictionary = load_dictionary(defaults.demo_dictionary_path())
    templates = load_templates(defaults.demo_templates_path())
    return create_app(lexicon, dictionary, templates)
