"""Readers for the input files the command line accepts.

Matrices are plain text (one line of ``+``/``-`` per row). Points, Gale
vectors, sign vectors and bound tables are JSON; rationals are ``"p/q"``
strings or integers.
"""

import json
import logging
from pathlib import Path
from typing import Any, Callable, Type, TypeVar

from pydantic import BaseModel, ValidationError

from neighborly.errors import InputError
from neighborly.models.bounds import BoundTable
from neighborly.models.geometry import GaleDiagram, PointConfig, SignVector
from neighborly.models.signs import SignMatrix

logger = logging.getLogger(__name__)

T = TypeVar("T")
M = TypeVar("M", bound=BaseModel)


def _read_text(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise InputError(f"Cannot read {path}: {exc}")


def _read_json(path: Path) -> Any:
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}")


def _build(path: Path, factory: Callable[[], T]) -> T:
    try:
        return factory()
    except ValidationError as exc:
        raise InputError(f"{path} does not describe a valid value", {"errors": str(exc)})


def parse_model(model: Type[M], payload: Any, what: str) -> M:
    """Validate a payload against a model, reporting failures as InputError."""
    try:
        return model.model_validate(payload)
    except ValidationError as exc:
        raise InputError(f"Invalid {what}", {"errors": str(exc)})


def _vector_list(path: Path, payload: Any) -> tuple:
    if not isinstance(payload, list) or not all(isinstance(v, list) for v in payload):
        raise InputError(f"{path} must hold a JSON array of arrays")
    return tuple(tuple(v) for v in payload)


def read_matrix(path: Path) -> SignMatrix:
    m = _build(path, lambda: SignMatrix.from_text(_read_text(path)))
    logger.debug(f"Read a {m.r}x{m.n} sign matrix from {path}")
    return m


def read_points(path: Path) -> PointConfig:
    vectors = _vector_list(path, _read_json(path))
    return _build(path, lambda: PointConfig(points=vectors))


def read_vectors(path: Path) -> GaleDiagram:
    vectors = _vector_list(path, _read_json(path))
    return _build(path, lambda: GaleDiagram(vectors=vectors))


def parse_signs(text: str) -> SignVector:
    """``"+-+"`` or a JSON array of +1/-1."""
    text = text.strip()
    if text.startswith("["):
        try:
            values = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"Malformed sign array: {exc}")
        if not isinstance(values, list) or any(not isinstance(v, int) for v in values):
            raise InputError("A sign array must hold integers")
        signs = tuple(values)
    else:
        if not text or any(ch not in "+-" for ch in text):
            raise InputError(f"Sign text must be a nonempty string of + and -, got {text!r}")
        signs = tuple(1 if ch == "+" else -1 for ch in text)
    try:
        return SignVector(signs=signs)
    except ValidationError as exc:
        raise InputError("Invalid sign vector", {"errors": str(exc)})


def read_signs(path: Path) -> SignVector:
    return parse_signs(_read_text(path))


def read_bound_table(path: Path) -> BoundTable:
    payload = _read_json(path)
    if isinstance(payload, list):
        payload = {"entries": payload}
    return parse_model(BoundTable, payload, f"bound table in {path}")


def write_points(path: Path, x: PointConfig) -> None:
    path.write_text(json.dumps(x.to_json()) + "\n")
