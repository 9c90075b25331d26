import json
import logging
import sys
import time
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

from pydantic import ValidationError

from neighborly.config import SCHEMA_VERSION
from neighborly.errors import SchemaError
from neighborly.models.certificate import Certificate, Claim, Coverage

logger = logging.getLogger(__name__)


class Stopwatch:
    """Wall-clock budget for a sweep."""

    def __init__(self, max_seconds: Optional[float] = None):
        self.started = time.monotonic()
        self.max_seconds = max_seconds

    @property
    def elapsed_ms(self) -> int:
        return int((time.monotonic() - self.started) * 1000)

    def expired(self) -> bool:
        return self.max_seconds is not None and time.monotonic() - self.started >= self.max_seconds


def make_certificate(
    claim: Claim,
    instance: Dict[str, Any],
    witness: Dict[str, Any],
    verified: bool,
    checked: int = 1,
    total: int = 1,
    seed: Optional[int] = None,
    stopwatch: Optional[Stopwatch] = None,
    summary: Optional[Dict[str, Any]] = None,
) -> Certificate:
    return Certificate(
        claim=claim,
        instance=instance,
        witness=witness,
        verified=verified and checked == total,
        coverage=Coverage(checked=checked, total=total),
        seed=seed,
        runtime_ms=stopwatch.elapsed_ms if stopwatch else 0,
        summary=summary or {},
    )


def certificate_to_json(certificate: Certificate) -> str:
    payload = certificate.model_dump(mode="json", by_alias=True)
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def certificate_from_json(line: str) -> Certificate:
    try:
        payload = json.loads(line)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"Certificate is not valid JSON: {exc}")
    if not isinstance(payload, dict):
        raise SchemaError("Certificate must be a JSON object")
    if payload.get("schema") != SCHEMA_VERSION:
        raise SchemaError(
            f"Unsupported certificate schema {payload.get('schema')!r}, expected {SCHEMA_VERSION!r}"
        )
    try:
        return Certificate.model_validate(payload)
    except ValidationError as exc:
        raise SchemaError(f"Certificate does not match schema {SCHEMA_VERSION}", {"errors": str(exc)})


def write_certificates(certificates: Iterable[Certificate], output: Optional[Path] = None) -> None:
    """Single writer: one JSON object per line, to a file or stdout."""
    lines = [certificate_to_json(c) for c in certificates]
    text = "\n".join(lines) + ("\n" if lines else "")
    if output is None or str(output) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    output.write_text(text)
    logger.info(f"Wrote {len(lines)} certificate(s) to {output}")


def read_certificates(path: Path) -> List[Certificate]:
    try:
        text = path.read_text()
    except OSError as exc:
        raise SchemaError(f"Cannot read certificate file {path}: {exc}")
    return [certificate_from_json(line) for line in text.splitlines() if line.strip()]


def exit_status(certificates: Iterable[Certificate]) -> int:
    """0 all verified, 1 some refuted, 2 some only partially covered."""
    certificates = list(certificates)
    if any(not c.complete for c in certificates):
        return 2
    if any(not c.verified for c in certificates):
        return 1
    return 0
