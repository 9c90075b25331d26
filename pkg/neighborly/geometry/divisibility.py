"""Partition searches: k-divisibility and its s-block generalization.

A configuration is k-divisible when some partition of its labels keeps the
block hulls meeting after any k labels are deleted. Searches run over
partitions in a fixed order and report the first witness, so the result
does not depend on how chunks are spread over workers.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from neighborly.certificates import Stopwatch, make_certificate
from neighborly.config import NEIGHBORLY_PARTITION_CAP, case_budget, time_budget
from neighborly.errors import InputError
from neighborly.geometry.gale import gale_transform
from neighborly.geometry.hulls import common_point_coefficients, separating_hyperplane
from neighborly.geometry.points import moment_curve_points, require_general_position
from neighborly.models.certificate import Certificate, Claim
from neighborly.models.geometry import PointConfig
from neighborly.utils.pool import chunked, parallel_map
from neighborly.utils.rationals import format_rational, format_vector

logger = logging.getLogger(__name__)

Blocks = Tuple[Tuple[int, ...], ...]
Points = Tuple[Tuple[Fraction, ...], ...]

CHUNK_SIZE = 16


def bipartitions(n: int) -> Iterator[Blocks]:
    """Label 1 stays in the first block; the second grows by size, then lexicographically."""
    labels = tuple(range(1, n + 1))
    for size in range(1, n):
        for b in combinations(labels[1:], size):
            a = tuple(label for label in labels if label not in b)
            yield (a, b)


def bipartition_count(n: int) -> int:
    return 2 ** (n - 1) - 1


def set_partitions(n: int, s: int) -> Iterator[Blocks]:
    """Partitions of 1..n into exactly s nonempty blocks, as restricted-growth strings.

    Strings are produced in lexicographic order; block t holds the labels
    whose entry is t.
    """
    if s < 1 or s > n:
        return
    growth = [0] * n

    def extend(position: int, used: int) -> Iterator[Blocks]:
        if position == n:
            if used == s:
                yield tuple(
                    tuple(i + 1 for i in range(n) if growth[i] == t) for t in range(s)
                )
            return
        if used + (n - position) < s:
            return
        for value in range(min(used + 1, s)):
            growth[position] = value
            yield from extend(position + 1, max(used, value + 1))

    growth[0] = 0
    yield from extend(1, 1)


def stirling2(n: int, s: int) -> int:
    table = [[0] * (s + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, min(i, s) + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][s]


def _survivors(points: Points, block: Sequence[int], removed: Sequence[int]) -> List[Tuple[int, Tuple[Fraction, ...]]]:
    return [(label, points[label - 1]) for label in block if label not in removed]


def check_partition(points: Points, blocks: Blocks, k: int) -> Dict[str, Any]:
    """Try every k-removal; return coefficients for all of them or the first failure."""
    n = len(points)
    removals = []
    for removed in combinations(range(1, n + 1), k):
        survivors = [_survivors(points, block, removed) for block in blocks]
        coefficients = None
        if all(survivors):
            coefficients = common_point_coefficients([[p for _, p in side] for side in survivors])
        if coefficients is None:
            failure: Dict[str, Any] = {"blocks": [list(b) for b in blocks], "removed": list(removed)}
            if len(blocks) == 2:
                h = separating_hyperplane(
                    [p for _, p in survivors[0]], [p for _, p in survivors[1]], len(points[0])
                )
                if h is not None:
                    failure["normal"] = format_vector(h.normal)
                    failure["offset"] = format_rational(h.offset)
            return {"blocks": blocks, "failure": failure}
        removals.append(
            {
                "removed": list(removed),
                "coefficients": [format_vector(c) for c in coefficients],
            }
        )
    return {"blocks": blocks, "removals": removals}


def _check_chunk(task: Tuple[Points, Sequence[Blocks], int]) -> List[Dict[str, Any]]:
    points, partitions, k = task
    results = []
    for blocks in partitions:
        result = check_partition(points, blocks, k)
        results.append(result)
        if "removals" in result:
            break
    return results


def _search(
    x: PointConfig,
    partitions: Sequence[Blocks],
    k: int,
    stopwatch: Stopwatch,
    workers: int,
) -> Tuple[Optional[Dict[str, Any]], List[Dict[str, Any]], int, bool]:
    """Run the partition checks in order; (witness, failures, examined, stopped early)."""
    tasks = [(x.points, chunk, k) for chunk in chunked(partitions, CHUNK_SIZE)]
    failures: List[Dict[str, Any]] = []
    examined = 0
    for results in parallel_map(_check_chunk, tasks, workers):
        for result in results:
            examined += 1
            if "removals" in result:
                return result, failures, examined, False
            failures.append(result["failure"])
        if stopwatch.expired():
            logger.warning(f"Time budget reached after {examined} partitions")
            return None, failures, examined, True
    return None, failures, examined, False


def _take(partitions: Iterator[Blocks], limit: Optional[int]) -> Tuple[List[Blocks], bool]:
    taken: List[Blocks] = []
    for blocks in partitions:
        if limit is not None and len(taken) >= limit:
            return taken, True
        taken.append(blocks)
    return taken, False


def _divisibility_certificate(
    claim: Claim,
    x: PointConfig,
    instance: Dict[str, Any],
    partitions: Iterator[Blocks],
    total: int,
    k: int,
    max_cases: Optional[int],
    max_seconds: Optional[float],
    workers: int,
) -> Certificate:
    stopwatch = Stopwatch(time_budget(max_seconds))
    limit = case_budget(max_cases)
    selected, truncated = _take(partitions, limit)
    if truncated:
        logger.info(f"Case budget {limit} below {total} partitions; coverage may be partial")
    witness, failures, examined, stopped = _search(x, selected, k, stopwatch, workers)
    concluded = witness is not None or (not truncated and not stopped)
    payload: Dict[str, Any]
    if witness is not None:
        blocks = witness["blocks"]
        payload = {"blocks": [list(b) for b in blocks], "removals": witness["removals"]}
        logger.info(f"{claim.value}: witness {blocks} after {examined} partitions")
    else:
        payload = {"blocks": None, "refutations": failures}
        if concluded:
            logger.info(f"{claim.value}: all {examined} partitions refuted")
    return make_certificate(
        claim,
        instance,
        payload,
        verified=witness is not None,
        checked=examined,
        total=examined if concluded else total,
        stopwatch=stopwatch,
        summary={"partitions_examined": examined, "partitions_total": total, "divisible": witness is not None},
    )


def is_k_divisible(
    x: PointConfig,
    k: int,
    max_cases: Optional[int] = None,
    max_seconds: Optional[float] = None,
    workers: int = 1,
) -> Certificate:
    """Search the bipartitions for one whose hulls meet after every k-removal.

    A refuted certificate lists, for every bipartition, a removal that
    separates the sides together with the separating hyperplane.
    """
    if x.n < 2:
        raise InputError("Divisibility needs at least two points")
    if k < 0 or k > x.n:
        raise InputError(f"k must lie in [0, {x.n}], got {k}")
    require_general_position(x)
    instance = {"points": x.to_json(), "k": k}
    return _divisibility_certificate(
        Claim.K_DIVISIBLE, x, instance, bipartitions(x.n), bipartition_count(x.n), k,
        max_cases, max_seconds, workers,
    )


def is_s_k_divisible(
    x: PointConfig,
    s: int,
    k: int,
    cap: Optional[int] = None,
    max_seconds: Optional[float] = None,
    workers: int = 1,
) -> Certificate:
    """The s-block version: some partition into s blocks whose hulls share a point after any k-removal.

    Partitions beyond ``cap`` (default NEIGHBORLY_PARTITION_CAP) are not
    examined and the certificate is partial.
    """
    if s < 2 or s > x.n:
        raise InputError(f"s must lie in [2, {x.n}], got {s}")
    if k < 0 or k > x.n:
        raise InputError(f"k must lie in [0, {x.n}], got {k}")
    require_general_position(x)
    instance = {"points": x.to_json(), "k": k, "s": s}
    return _divisibility_certificate(
        Claim.S_K_DIVISIBLE, x, instance, set_partitions(x.n, s), stirling2(x.n, s), k,
        cap if cap is not None else NEIGHBORLY_PARTITION_CAP, max_seconds, workers,
    )


def radon_lower_bound_instance(
    d: int, k: int, reading: str = "shifted", params: Optional[Sequence[object]] = None
) -> PointConfig:
    """Gale vectors of (k+1)d+(k+2) moment-curve points.

    ``printed`` takes the points in R^(k(d+1)) and gives vectors in R^(d+1);
    ``shifted`` takes R^(k(d+1)+1) and gives vectors in R^d. The default
    parameters are 1..N; symmetric parameter sets can produce repeated
    vectors, so callers pass their own when general position matters.
    """
    if d < 1 or k < 1:
        raise InputError("d and k must be positive")
    count = (k + 1) * d + (k + 2)
    if reading == "printed":
        dimension = k * (d + 1)
    elif reading == "shifted":
        dimension = k * (d + 1) + 1
    else:
        raise InputError(f"Unknown reading {reading!r}; use 'printed' or 'shifted'")
    values = list(params) if params is not None else list(range(1, count + 1))
    if len(values) != count:
        raise InputError(f"Expected {count} parameters, got {len(values)}")
    g = gale_transform(moment_curve_points(dimension, values))
    logger.debug(f"Reading {reading}: {count} points in R^{dimension}, Gale vectors in R^{g.dim}")
    return PointConfig(points=g.vectors)
