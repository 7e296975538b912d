"""Stateless HTTP facade exposing every pipeline stage.

All successful responses are rendered through the same canonical JSON writer
as the CLI, so the two surfaces agree byte for byte on identical input. The
only shared state is the immutable lexicon; requests carry everything else.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import __version__
from .classify import classify
from .errors import CiraError
from .formats import SUITE_FORMATS, render_suite, to_json
from .graph import build_graph, graph_to_wire
from .labeling import label, labels_to_wire
from .lexicon import CueLexicon
from .pipeline import pipeline_to_wire, run_pipeline
from .suite import generate_suite
from .text import tokenize

MAX_TEXT_LENGTH = 10_000

DEFAULT_PORT = 8080
DEFAULT_HOST = "127.0.0.1"


class _RequestRejected(Exception):
    def __init__(self, status: int, code: str, detail: str):
        self.status = status
        self.code = code
        self.detail = detail


def _json_response(doc, status: int = 200) -> Response:
    return Response(
        content=to_json(doc), status_code=status, media_type="application/json"
    )


async def _read_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception:
        raise _RequestRejected(400, "INVALID_JSON", "request body must be JSON") from None
    if not isinstance(body, dict) or not isinstance(body.get("text"), str):
        raise _RequestRejected(400, "MISSING_TEXT", "body must contain a 'text' string")
    text = body["text"]
    if not text.strip():
        raise _RequestRejected(400, "EMPTY_TEXT", "'text' must be non-empty")
    if len(text) > MAX_TEXT_LENGTH:
        raise _RequestRejected(
            413, "TEXT_TOO_LONG", f"'text' exceeds {MAX_TEXT_LENGTH} characters"
        )
    return body


async def _read_text(request: Request) -> str:
    body = await _read_body(request)
    return body["text"]


def create_app(lexicon: CueLexicon | None = None) -> FastAPI:
    lex = lexicon or CueLexicon.default()
    app = FastAPI(title="cira", version=__version__)

    origins = os.environ.get("CIRA_ALLOWED_ORIGINS", "*")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[o.strip() for o in origins.split(",") if o.strip()],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(_RequestRejected)
    async def _rejected(request: Request, exc: _RequestRejected):
        return _json_response({"error": exc.code, "detail": exc.detail}, exc.status)

    @app.exception_handler(CiraError)
    async def _pipeline_error(request: Request, exc: CiraError):
        # Stage preconditions (non-causal input and kin) map to 422.
        return _json_response({"error": exc.code, "detail": str(exc)}, 422)

    @app.get("/api/health")
    async def health():
        return _json_response({"status": "ok", "version": __version__})

    @app.post("/api/classify")
    async def classify_endpoint(request: Request):
        text = await _read_text(request)
        return _json_response(classify(tokenize(text), lex).to_wire())

    @app.post("/api/label")
    async def label_endpoint(request: Request):
        text = await _read_text(request)
        return _json_response(labels_to_wire(label(tokenize(text), lex)))

    @app.post("/api/graph")
    async def graph_endpoint(request: Request):
        text = await _read_text(request)
        return _json_response(graph_to_wire(build_graph(label(tokenize(text), lex))))

    @app.post("/api/testsuite")
    async def testsuite_endpoint(request: Request):
        body = await _read_body(request)
        fmt = body.get("format", "json")
        if fmt not in SUITE_FORMATS:
            raise _RequestRejected(
                400, "BAD_FORMAT", f"'format' must be one of {SUITE_FORMATS}"
            )
        suite = generate_suite(build_graph(label(tokenize(body["text"]), lex)))
        media = "application/json" if fmt == "json" else "text/plain; charset=utf-8"
        return Response(content=render_suite(suite, fmt), media_type=media)

    @app.post("/api/pipeline")
    async def pipeline_endpoint(request: Request):
        text = await _read_text(request)
        result = run_pipeline(text, lex)
        return _json_response(pipeline_to_wire(result))

    return app


def serve(
    host: str | None = None,
    port: int | None = None,
    lexicon: CueLexicon | None = None,
) -> None:
    """Run the service with uvicorn; host/port fall back to CIRA_HOST/CIRA_PORT."""
    import uvicorn

    resolved_host = host or os.environ.get("CIRA_HOST", DEFAULT_HOST)
    resolved_port = port if port is not None else int(
        os.environ.get("CIRA_PORT", str(DEFAULT_PORT))
    )
    uvicorn.run(create_app(lexicon), host=resolved_host, port=resolved_port)
