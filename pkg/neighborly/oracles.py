"""Sweeps that pit the travel criteria against circuit enumeration.

Two claims are checked over whole shapes of sign matrices (or a seeded
sample of them): the travel cyclicity verdict matches the brute-force
oracle, and the plain travels biject onto the acyclic reorientation
classes.
"""

import hashlib
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from neighborly.certificates import Stopwatch, make_certificate
from neighborly.config import case_budget, time_budget
from neighborly.errors import ConsistencyError, InputError
from neighborly.models.certificate import Certificate, Claim
from neighborly.models.signs import SignMatrix
from neighborly.models.travel import TravelKind
from neighborly.signs import (
    acyclic_reorientations_bruteforce,
    code_of,
    is_acyclic_bruteforce,
    matrix_from_code,
    reorient,
)
from neighborly.travels import (
    bottom_travel,
    is_cyclic_travel,
    plain_travels,
    top_travel,
    top_travel_is_cyclic,
    travel_to_reorientation,
)
from neighborly.utils.pool import chunked, parallel_map

logger = logging.getLogger(__name__)

CHUNK_SIZE = 512


def sweep_codes(
    r: int, n: int, mode: str, count: Optional[int], seed: Optional[int]
) -> Sequence[int]:
    """Matrix codes to visit: all of them, or a seeded uniform sample."""
    if r < 1 or n < 1:
        raise InputError("Rank and column count must be positive")
    bits = r * n
    if mode == "exhaustive":
        return range(1 << bits)
    if mode == "sampled":
        if count is None or seed is None:
            raise InputError("Sampled mode needs both --count and --seed")
        if bits > 62:
            raise InputError(f"Sampling supports at most 62 entries, got {bits}")
        rng = np.random.default_rng(seed)
        return [int(v) for v in rng.integers(0, 1 << bits, size=count, dtype=np.int64)]
    raise InputError(f"Unknown mode {mode!r}")


def _budgeted(codes: Sequence[int], max_cases: Optional[int]) -> Sequence[int]:
    limit = case_budget(max_cases)
    if limit is not None and limit < len(codes):
        logger.info(f"Case budget {limit} below {len(codes)} matrices; coverage will be partial")
        return codes[:limit]
    return codes


def mask_to_hex(flags: Sequence[bool]) -> str:
    value = 0
    for index, flag in enumerate(flags):
        if flag:
            value |= 1 << index
    return format(value, "x")


def hex_to_flags(text: str, count: int) -> List[bool]:
    value = int(text, 16)
    return [bool((value >> index) & 1) for index in range(count)]


# 1. Travel criterion against circuit enumeration

def _cyclicity_chunk(task: Tuple[int, int, Sequence[int]]) -> List[Tuple[int, bool, bool, bool]]:
    """(code, travel verdict, oracle verdict, travels consistent) per matrix."""
    r, n, codes = task
    results = []
    for code in codes:
        m = matrix_from_code(r, n, code)
        oracle = not is_acyclic_bruteforce(m)
        try:
            travel = is_cyclic_travel(m)
            consistent = True
        except ConsistencyError:
            travel = top_travel_is_cyclic(m)
            consistent = False
        results.append((code, travel, oracle, consistent))
    return results


def verify_prop_llom(
    r: int,
    n: int,
    mode: str = "exhaustive",
    count: Optional[int] = None,
    seed: Optional[int] = None,
    max_cases: Optional[int] = None,
    max_seconds: Optional[float] = None,
    workers: int = 1,
) -> Certificate:
    """Check the travel cyclicity verdict against circuit enumeration on every visited matrix.

    The witness is the travel verdict as a hex bitmask (bit t for the t-th
    visited matrix); replay recomputes the oracle and compares.
    """
    if n <= r:
        raise InputError(f"The travel criterion needs n >= r+1, got {r}x{n}")
    stopwatch = Stopwatch(time_budget(max_seconds))
    codes = sweep_codes(r, n, mode, count, seed)
    total = len(codes)
    codes = _budgeted(codes, max_cases)
    logger.info(f"prop-llom: checking {len(codes)} of {total} matrices of shape {r}x{n}")

    verdicts: List[bool] = []
    visited: List[int] = []
    disagreements: List[int] = []
    inconsistent: List[int] = []
    tasks = [(r, n, chunk) for chunk in chunked(codes, CHUNK_SIZE)]
    for results in parallel_map(_cyclicity_chunk, tasks, workers):
        for code, travel, oracle, consistent in results:
            visited.append(code)
            verdicts.append(travel)
            if travel != oracle:
                disagreements.append(code)
            if not consistent:
                inconsistent.append(code)
        if stopwatch.expired():
            logger.warning(f"Time budget reached after {len(visited)} matrices")
            break

    witness: Dict[str, Any] = {"cyclic_mask": mask_to_hex(verdicts), "disagreements": disagreements}
    if mode == "sampled":
        witness["codes"] = visited
    if disagreements:
        logger.error(f"prop-llom: {len(disagreements)} disagreements, first code {disagreements[0]}")
    return make_certificate(
        Claim.PROP_LLOM,
        {"r": r, "n": n, "mode": mode, "count": count if mode == "sampled" else None},
        witness,
        verified=not disagreements and not inconsistent,
        checked=len(visited),
        total=total,
        seed=seed if mode == "sampled" else None,
        stopwatch=stopwatch,
        summary={
            "matrices": len(visited),
            "cyclic": sum(verdicts),
            "acyclic": len(visited) - sum(verdicts),
            "disagreements": len(disagreements),
            "travel_inconsistencies": len(inconsistent),
        },
    )


# 2. Plain travels against acyclic reorientation classes

def reorientation_images(m: SignMatrix) -> List[Tuple[int, ...]]:
    return [travel_to_reorientation(m, t).columns for t in plain_travels(m)]


def images_digest(images_per_matrix: Sequence[Tuple[int, Sequence[Tuple[int, ...]]]]) -> str:
    digest = hashlib.sha256()
    for code, images in images_per_matrix:
        digest.update(f"{code}:{';'.join(','.join(map(str, s)) for s in images)}\n".encode())
    return digest.hexdigest()


def _bijection_chunk(task: Tuple[int, int, Sequence[int]]) -> List[Dict[str, Any]]:
    r, n, codes = task
    results = []
    for code in codes:
        m = matrix_from_code(r, n, code)
        images = reorientation_images(m)
        classes = {s.columns for s in acyclic_reorientations_bruteforce(m)}
        injective = len(set(images)) == len(images)
        acyclic = all(is_acyclic_bruteforce(reorient(m, s)) for s in images)
        results.append(
            {
                "code": code,
                "images": images,
                "travels": len(images),
                "classes": len(classes),
                "ok": injective and acyclic and set(images) == classes,
            }
        )
    return results


def verify_prop_pt(
    r: int,
    n: int,
    mode: str = "exhaustive",
    count: Optional[int] = None,
    seed: Optional[int] = None,
    max_cases: Optional[int] = None,
    max_seconds: Optional[float] = None,
    workers: int = 1,
) -> Certificate:
    """Plain travels map injectively onto the acyclic reorientation classes of every visited matrix."""
    stopwatch = Stopwatch(time_budget(max_seconds))
    codes = sweep_codes(r, n, mode, count, seed)
    total = len(codes)
    codes = _budgeted(codes, max_cases)
    logger.info(f"prop-pt: checking {len(codes)} of {total} matrices of shape {r}x{n}")

    recorded: List[Tuple[int, Sequence[Tuple[int, ...]]]] = []
    failures: List[int] = []
    travel_counts = set()
    class_counts = set()
    tasks = [(r, n, chunk) for chunk in chunked(codes, CHUNK_SIZE)]
    for results in parallel_map(_bijection_chunk, tasks, workers):
        for result in results:
            recorded.append((result["code"], result["images"]))
            travel_counts.add(result["travels"])
            class_counts.add(result["classes"])
            if not result["ok"]:
                failures.append(result["code"])
        if stopwatch.expired():
            logger.warning(f"Time budget reached after {len(recorded)} matrices")
            break

    witness: Dict[str, Any] = {
        "travel_counts": sorted(travel_counts),
        "class_counts": sorted(class_counts),
        "images_sha256": images_digest(recorded),
        "failures": failures,
    }
    if mode == "sampled":
        witness["codes"] = [code for code, _ in recorded]
    return make_certificate(
        Claim.PROP_PT,
        {"r": r, "n": n, "mode": mode, "count": count if mode == "sampled" else None},
        witness,
        verified=not failures and travel_counts == class_counts,
        checked=len(recorded),
        total=total,
        seed=seed if mode == "sampled" else None,
        stopwatch=stopwatch,
        summary={"matrices": len(recorded), "failures": len(failures)},
    )


# 3. Single matrices

def travel_certificate(m: SignMatrix, kind: TravelKind) -> Certificate:
    """Top or bottom travel with its verdict, or the plain travels with their reorientations."""
    stopwatch = Stopwatch()
    instance = {"matrix": m.to_text(), "kind": kind.value}
    if kind == TravelKind.PLAIN:
        travels = plain_travels(m)
        images = [travel_to_reorientation(m, t).columns for t in travels]
        acyclic = all(is_acyclic_bruteforce(reorient(m, s)) for s in images) if m.n > m.r else None
        return make_certificate(
            Claim.TRAVEL,
            instance,
            {"travels": [t.to_json() for t in travels], "reorientations": [list(s) for s in images]},
            verified=len(set(images)) == len(images) and acyclic is not False,
            stopwatch=stopwatch,
            summary={"travels": len(travels), "code": code_of(m)},
        )
    t = top_travel(m) if kind == TravelKind.TOP else bottom_travel(m)
    if m.n <= m.r:
        # fewer than r+1 columns: no circuits, so no verdict
        return make_certificate(
            Claim.TRAVEL,
            instance,
            {"travel": t.to_json(), "cyclic": None},
            verified=True,
            stopwatch=stopwatch,
            summary={"code": code_of(m), "criterion": False},
        )
    cyclic = is_cyclic_travel(m)
    return make_certificate(
        Claim.TRAVEL,
        instance,
        {"travel": t.to_json(), "cyclic": cyclic},
        verified=cyclic == (not is_acyclic_bruteforce(m)),
        stopwatch=stopwatch,
        summary={"code": code_of(m), "criterion": True},
    )
