"""HTTP service exposing detection, rewriting, and reviewer feedback.

Assets live in one directory: <lang>.detoxmodel plus optional
parallel_<lang>.tsv and lexicon_<lang>.tsv per language. Model files are
watched by size and mtime and reloaded atomically when they change; requests
already in flight keep the snapshot they started with. Feedback goes to an
append-only JSONL log and is fsynced before the id is acknowledged.
"""

from __future__ import annotations

import datetime
import hashlib
import json
import os
import sys
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from fastapi import FastAPI, HTTPException
from fastapi.responses import HTMLResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field, model_validator

from .classify import TrainedModel, decision_score
from .corpus import load_lexicon, load_model, load_parallel_corpus
from .errors import DetoxError
from .rewrite import CorpusIndex, build_corpus_index, detoxify
from .types import LANGUAGES, Lexicon

MAX_TEXT_CHARS = 10_000
TOP_CONTRIBUTIONS = 10

_FALLBACK_PAGE = """<!doctype html>
<html><head><meta charset="utf-8"><title>textdetox</title></head>
<body><h1>textdetox service</h1>
<p>The API is up. No UI bundle is installed; POST to /api/v1/detox.</p>
</body></html>
"""


@dataclass(frozen=True)
class ModelBundle:
    """Immutable per-language snapshot served to requests."""

    language: str
    model: TrainedModel
    index: CorpusIndex
    lexicon: Lexicon
    model_path: Path
    file_sha256: str
    stamp: tuple[int, int]


def _load_bundle(assets_dir: Path, language: str) -> ModelBundle:
    model_path = assets_dir / f"{language}.detoxmodel"
    stat = model_path.stat()
    model = load_model(model_path)
    corpus_path = assets_dir / f"parallel_{language}.tsv"
    pairs = load_parallel_corpus(corpus_path, language) if corpus_path.exists() else []
    lexicon_path = assets_dir / f"lexicon_{language}.tsv"
    lexicon = (
        load_lexicon(lexicon_path, language)
        if lexicon_path.exists()
        else Lexicon(language, {})
    )
    digest = hashlib.sha256(model_path.read_bytes()).hexdigest()
    return ModelBundle(
        language=language,
        model=model,
        index=build_corpus_index(pairs, language),
        lexicon=lexicon,
        model_path=model_path,
        file_sha256=digest,
        stamp=(stat.st_mtime_ns, stat.st_size),
    )


class _FeedbackLog:
    """Append-only JSONL writer with monotonically increasing ids."""

    def __init__(self, path: Path):
        self.path = path
        self._lock = threading.Lock()
        self._next_id = self._scan_next_id()

    def _scan_next_id(self) -> int:
        if not self.path.exists():
            return 1
        last = 0
        for line in self.path.read_text(encoding="utf-8").splitlines():
            if not line.strip():
                continue
            try:
                record = json.loads(line)
                last = max(last, int(record.get("id", 0)))
            except (json.JSONDecodeError, TypeError, ValueError):
                continue
        return last + 1

    def append(self, record: dict) -> int:
        with self._lock:
            record_id = self._next_id
            self._next_id += 1
            stored = {"id": record_id, **record}
            line = json.dumps(stored, ensure_ascii=False, sort_keys=True)
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as handle:
                handle.write(line + "\n")
                handle.flush()
                os.fsync(handle.fileno())
            return record_id


class ServiceState:
    def __init__(self, assets_dir: Path, feedback_path: Path, strict_lookup: bool):
        self.assets_dir = assets_dir
        self.strict_lookup = strict_lookup
        self.bundles: dict[str, ModelBundle] = {}
        self.load_errors: dict[str, str] = {}
        self._reload_lock = threading.Lock()
        self.feedback = _FeedbackLog(feedback_path)
        for language in LANGUAGES:
            model_path = assets_dir / f"{language}.detoxmodel"
            if not model_path.exists():
                continue
            try:
                self.bundles[language] = _load_bundle(assets_dir, language)
            except DetoxError as exc:
                self.load_errors[language] = str(exc)

    def bundle(self, language: str) -> ModelBundle | None:
        """Current snapshot, reloading first when the file on disk moved on."""
        bundle = self.bundles.get(language)
        if bundle is None:
            return None
        try:
            stat = bundle.model_path.stat()
        except OSError:
            return bundle
        if (stat.st_mtime_ns, stat.st_size) == bundle.stamp:
            return bundle
        with self._reload_lock:
            bundle = self.bundles.get(language)
            if bundle is None:
                return None
            stat = bundle.model_path.stat()
            if (stat.st_mtime_ns, stat.st_size) == bundle.stamp:
                return bundle
            try:
                fresh = _load_bundle(self.assets_dir, language)
            except DetoxError as exc:
                print(
                    f"reload of {bundle.model_path} failed, keeping old model: {exc}",
                    file=sys.stderr,
                )
                return bundle
            self.bundles[language] = fresh
            return fresh


class DetoxRequest(BaseModel):
    text: str = Field(max_length=MAX_TEXT_CHARS)
    language: str


class TokenContribution(BaseModel):
    term: str
    weight: float
    value: float
    contribution: float


class DetoxResponse(BaseModel):
    label: Literal["TOXIC", "NON-TOXIC"]
    probability: float
    output_text: str
    method: str
    replaced_tokens: list[tuple[str, str]]
    token_contributions: list[TokenContribution]


class FeedbackRequest(BaseModel):
    language: Literal["xh", "yo"]
    input_text: str
    system_output: str
    verdict: Literal["accept", "wrong_label", "bad_rewrite"]
    corrected_text: str | None = None
    annotator_handle: str | None = None

    @model_validator(mode="after")
    def _require_correction(self):
        if self.verdict == "bad_rewrite" and not (self.corrected_text or "").strip():
            raise ValueError("verdict bad_rewrite requires corrected_text")
        return self


def _contributions(model: TrainedModel, text: str) -> list[TokenContribution]:
    _, features = decision_score(model, text)
    scored = []
    for idx, value in features.items():
        weight = float(model.weights[idx])
        if weight * value == 0.0:
            continue
        scored.append(
            TokenContribution(
                term=model.vocabulary.terms[idx],
                weight=weight,
                value=value,
                contribution=weight * value,
            )
        )
    scored.sort(key=lambda c: (-abs(c.contribution), c.term))
    return scored[:TOP_CONTRIBUTIONS]


def create_app(
    assets_dir: str | Path,
    feedback_path: str | Path | None = None,
    strict_lookup: bool = False,
    static_dir: str | Path | None = None,
) -> FastAPI:
    assets = Path(assets_dir)
    feedback = Path(feedback_path) if feedback_path else assets / "feedback.jsonl"
    state = ServiceState(assets, feedback, strict_lookup)
    app = FastAPI(title="textdetox", docs_url=None, redoc_url=None)
    app.state.detox = state

    @app.post("/api/v1/detox", response_model=DetoxResponse)
    def detox_endpoint(request: DetoxRequest) -> DetoxResponse:
        bundle = state.bundle(request.language)
        if bundle is None:
            raise HTTPException(
                status_code=404,
                detail=f"no model loaded for language {request.language!r}",
            )
        result = detoxify(
            request.text,
            bundle.model,
            bundle.index,
            bundle.lexicon,
            strict_lookup=state.strict_lookup,
        )
        return DetoxResponse(
            label="TOXIC" if result.label == 1 else "NON-TOXIC",
            probability=result.probability,
            output_text=result.output_text,
            method=result.method,
            replaced_tokens=list(result.replaced_tokens),
            token_contributions=_contributions(bundle.model, request.text),
        )

    @app.post("/api/v1/feedback")
    def feedback_endpoint(request: FeedbackRequest) -> dict:
        timestamp = (
            datetime.datetime.now(tz=datetime.timezone.utc)
            .strftime("%Y-%m-%dT%H:%M:%S.%fZ")
        )
        record_id = state.feedback.append(
            {"timestamp": timestamp, **request.model_dump(exclude_none=True)}
        )
        return {"id": record_id}

    @app.get("/api/v1/health")
    def health_endpoint() -> dict:
        versions = {}
        for language in sorted(state.bundles):
            bundle = state.bundle(language)
            versions[language] = {
                "file_sha256": bundle.file_sha256,
                "config_fingerprint": bundle.model.config_fingerprint,
                "trained_at": bundle.model.trained_at,
            }
        loaded = sorted(versions)
        status = "ok" if set(loaded) == set(LANGUAGES) else "degraded"
        return {"status": status, "models_loaded": loaded, "versions": versions}

    static = Path(static_dir) if static_dir else assets / "static"
    if static.is_dir():
        app.mount("/", StaticFiles(directory=static, html=True), name="ui")
    else:

        @app.get("/", response_class=HTMLResponse)
        def index() -> str:
            return _FALLBACK_PAGE

    return app


def run_server(
    assets_dir: str | Path,
    port: int = 8000,
    feedback_path: str | Path | None = None,
    strict_lookup: bool = False,
    host: str = "127.0.0.1",
) -> None:
    import uvicorn

    app = create_app(assets_dir, feedback_path, strict_lookup)
    uvicorn.run(app, host=host, port=port, log_level="warning")
