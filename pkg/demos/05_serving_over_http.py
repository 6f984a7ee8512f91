"""
Serving the pipeline over HTTP
==============================

The validation service wraps both per-language pipelines behind three
endpoints: POST /api/v1/detox (classify and rewrite), POST
/api/v1/feedback (append a reviewer verdict to a durable JSONL log), and
GET /api/v1/health (model versions and load status). This script trains
the two seed models into a temporary assets directory, boots the real
server in a subprocess, and talks to it with nothing but the standard
library.
"""

import json
import shutil
import socket
import subprocess
import sys
import tempfile
import time
import urllib.request
from pathlib import Path

from textdetox import (
    default_config,
    derive_labeled_set,
    load_parallel_corpus,
    save_model,
    train_fold,
)

DATA = Path(__file__).resolve().parent.parent / "data"


def call(port, path, payload=None):
    url = f"http://127.0.0.1:{port}{path}"
    data = json.dumps(payload).encode("utf-8") if payload is not None else None
    request = urllib.request.Request(
        url, data=data, headers={"Content-Type": "application/json"}
    )
    with urllib.request.urlopen(request, timeout=5) as response:
        return json.loads(response.read().decode("utf-8"))


assets = Path(tempfile.mkdtemp(prefix="detox-assets-"))
for language in ("xh", "yo"):
    pairs = load_parallel_corpus(DATA / f"parallel_{language}.tsv", language)
    examples = derive_labeled_set(pairs)
    model = train_fold(examples, list(range(len(examples))), default_config(language))
    save_model(model, assets / f"{language}.detoxmodel")
    shutil.copy(DATA / f"parallel_{language}.tsv", assets)
    shutil.copy(DATA / f"lexicon_{language}.tsv", assets)
print(f"assets directory: {assets}")

with socket.socket() as probe:
    probe.bind(("127.0.0.1", 0))
    port = probe.getsockname()[1]

server = subprocess.Popen(
    [sys.executable, "-m", "textdetox.cli", "serve", "--model", str(assets), "--port", str(port)]
)
try:
    for _ in range(50):
        try:
            health = call(port, "/api/v1/health")
            break
        except OSError:
            time.sleep(0.2)
    else:
        raise RuntimeError("server did not come up")

    print(f"health: {health['status']}, models {health['models_loaded']}")

    answer = call(
        port, "/api/v1/detox", {"text": "Kò sí ìrètí fún ọ.", "language": "yo"}
    )
    print(f"label:  {answer['label']} (p={answer['probability']:.3f})")
    print(f"rewrite via {answer['method']}: {answer['output_text']!r}")
    top = answer["token_contributions"][0]
    print(f"strongest signal: {top['term']!r} contributing {top['contribution']:.3f}")

    receipt = call(
        port,
        "/api/v1/feedback",
        {
            "language": "yo",
            "input_text": "Kò sí ìrètí fún ọ.",
            "system_output": answer["output_text"],
            "verdict": "accept",
        },
    )
    print(f"feedback stored with id {receipt['id']}")
    log = (assets / "feedback.jsonl").read_text(encoding="utf-8").strip()
    print(f"log line: {log}")
finally:
    server.terminate()
    server.wait(timeout=10)
    shutil.rmtree(assets)
