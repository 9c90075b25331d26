"""Diagonal chessboard families and the small-reorientation search.

A family is fixed by its chessboard: every matrix with that board is
determined by its first row and first column. For each acyclic member the
search looks for the smallest set of columns whose reorientation is cyclic.
"""

import logging
from itertools import combinations
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np

from neighborly.certificates import Stopwatch, make_certificate
from neighborly.config import case_budget, time_budget
from neighborly.errors import ContractViolationError, InputError
from neighborly.models.certificate import Certificate, Claim
from neighborly.models.family import FamilyBoard, FamilyParams
from neighborly.models.signs import Chessboard, ReorientationSet, SignMatrix
from neighborly.signs import diagonal_sets, flip_mask, staircase_runs
from neighborly.travels import bottom_breakpoints, is_cyclic_rows, top_breakpoints
from neighborly.utils.pool import chunked, parallel_map

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]
Rows = Tuple[Tuple[int, ...], ...]
Shape = Tuple[Tuple[int, ...], Tuple[int, ...]]

CHUNK_SIZE = 2048


# 1. Boards

def formula_cells(p: FamilyParams) -> List[Cell]:
    """Black cells as given by the displayed case lists, unclipped."""
    cells: List[Cell] = []
    if p.k == 2:
        for i in range(1, p.r):
            cells.extend([(i, 2 * (i - 1) + 1), (i, 2 * i)])
        return cells
    if p.l is None:
        raise InputError("The general family needs a phase l")
    s = p.s
    assert s is not None
    for i in range(1, p.r):
        j = 2 * i - (-(-((i - 1) + p.l) // s))
        cells.append((i, j))
        if (i + s - p.l) % s != 0:
            cells.append((i, j + 1))
    return cells


def single_block_rows(p: FamilyParams) -> Tuple[int, ...]:
    if p.k == 2:
        return ()
    if p.l is None:
        raise InputError("The general family needs a phase l")
    s = p.s
    assert s is not None
    if not 1 <= p.l <= s:
        raise InputError(f"Phase l={p.l} outside 1..{s}")
    rows = [i for i in range(1, p.r) if (i - p.l) % s == 0][: p.k - 2]
    if len(rows) != p.k - 2:
        raise InputError(
            f"Only {len(rows)} rows in 1..{p.r - 1} are congruent to {p.l} mod {s}; "
            f"{p.k - 2} single blocks are needed",
            {"r": p.r, "k": p.k, "l": p.l},
        )
    return tuple(rows)


def build_board(p: FamilyParams, strict: bool = False) -> FamilyBoard:
    """The staircase board of a family.

    The default is the normalized staircase: rows of two black cells, with
    one-cell rows at the single-block rows, starting at (1,1) and ending at
    (r-1, n-1). ``strict`` uses the displayed formula instead and rejects it
    when it leaves the board or breaks the staircase.
    """
    if p.k > 2 and p.n < 2:
        raise InputError(f"k={p.k} is too large for rank {p.r}")
    singles = single_block_rows(p)
    rows, cols = p.r - 1, p.n - 1
    normalized: List[Cell] = []
    column = 1
    for i in range(1, p.r):
        width = 1 if i in singles else 2
        normalized.extend((i, column + t) for t in range(width))
        column += width
    raw = formula_cells(p)
    outside = [(i, j) for i, j in raw if not (1 <= j <= cols)]
    if set(raw) != set(normalized):
        logger.warning(
            f"Displayed formula for r={p.r}, k={p.k}, l={p.l} diverges from the staircase: "
            f"only in formula {sorted(set(raw) - set(normalized))}, "
            f"only in staircase {sorted(set(normalized) - set(raw))}"
        )
    if strict:
        if outside:
            raise InputError(f"Displayed formula leaves the board at {outside}", {"cells": outside})
        board = Chessboard.from_cells(rows, cols, raw)
        try:
            staircase_runs(board)
        except ContractViolationError as exc:
            raise InputError(f"Displayed formula is not a staircase: {exc.message}", exc.details)
    else:
        board = Chessboard.from_cells(rows, cols, normalized)
    family = FamilyBoard(params=p, board=board, single_rows=singles)
    logger.debug(f"Built board for r={p.r}, k={p.k}, l={p.l}:\n{board.to_text()}")
    return family


# 2. Realizations

def realization_bits(b: FamilyBoard) -> int:
    return b.r + b.n - 1


def realization_count(b: FamilyBoard) -> int:
    return 1 << realization_bits(b)


def realization_rows(black: Sequence[Sequence[bool]], r: int, n: int, code: int) -> Rows:
    """Complete a matrix from its first row (bits 0..n-1) and first column (bits n..n+r-2)."""
    first = [-1 if (code >> j) & 1 else 1 for j in range(n)]
    rows = [first]
    for i in range(1, r):
        previous = rows[-1]
        colors = black[i - 1]
        line = [-1 if (code >> (n + i - 1)) & 1 else 1]
        for j in range(n - 1):
            color = -1 if colors[j] else 1
            line.append(color * previous[j] * previous[j + 1] * line[j])
        rows.append(line)
    return tuple(tuple(row) for row in rows)


def realization_from_code(b: FamilyBoard, code: int) -> SignMatrix:
    if not 0 <= code < realization_count(b):
        raise InputError(f"Realization code {code} outside 0..{realization_count(b) - 1}")
    return SignMatrix(rows=realization_rows(b.board.black, b.r, b.n, code))


def enumerate_realizations(b: FamilyBoard) -> Iterator[SignMatrix]:
    for code in range(realization_count(b)):
        yield SignMatrix(rows=realization_rows(b.board.black, b.r, b.n, code))


def sample_realization_codes(b: FamilyBoard, count: int, seed: int) -> List[int]:
    """Uniform first row and first column from a seeded generator."""
    bits = realization_bits(b)
    if bits > 62:
        raise InputError(f"Sampling supports at most 62 free bits, this family has {bits}")
    rng = np.random.default_rng(seed)
    return [int(v) for v in rng.integers(0, 1 << bits, size=count, dtype=np.int64)]


# 3. Reorientation search

def min_cyclic_reorientation_rows(rows: Rows, budget: int) -> Optional[Tuple[int, ...]]:
    n = len(rows[0])
    if is_cyclic_rows(rows):
        return ()
    for size in range(1, min(budget, n) + 1):
        for columns in combinations(range(1, n + 1), size):
            if is_cyclic_rows(rows, flip_mask(n, columns)):
                return columns
    return None


def min_cyclic_reorientation(m: SignMatrix, budget: int) -> Optional[ReorientationSet]:
    """Smallest, then lexicographically first, S with |S| <= budget making m cyclic.

    None when no such set exists within the budget.
    """
    if budget < 0:
        raise InputError("The reorientation budget must be nonnegative")
    columns = min_cyclic_reorientation_rows(m.rows, budget)
    return None if columns is None else ReorientationSet.of(columns)


# 4. Shapes of acyclic members

def shape_of(rows: Rows) -> Shape:
    return top_breakpoints(rows), bottom_breakpoints(rows)


def format_shape(shape: Shape) -> str:
    top, bottom = shape
    return ",".join(map(str, top)) + "|" + ",".join(map(str, bottom))


def is_edge_shape(shape: Shape, n: int) -> bool:
    """A travel that never leaves its first row before the far edge."""
    top, bottom = shape
    return top[0] == n or bottom[0] == 1


def canonical_shape(shape: Shape, n: int, symmetric: bool) -> Shape:
    if not symmetric:
        return shape
    top, bottom = shape
    turned = (tuple(n + 1 - b for b in bottom), tuple(n + 1 - t for t in top))
    return min(shape, turned)


SHAPE_REDUCTION = (
    "edge shapes (first top breakpoint at n, or first bottom breakpoint at 1) are set aside; "
    "on a half-turn symmetric board (TT, BT) and (n+1-BT, n+1-TT) form one class"
)


def shape_witness(sized_shapes: Iterable[Tuple[Shape, int]], n: int, symmetric: bool) -> Dict[str, Any]:
    """Raw (TT, BT) shapes, the edge ones, and the interior classes with their largest |S|."""
    raw: Set[Shape] = set()
    members: Dict[Shape, Set[Shape]] = {}
    sizes: Dict[Shape, int] = {}
    for shape, size in sized_shapes:
        raw.add(shape)
        if is_edge_shape(shape, n):
            continue
        key = canonical_shape(shape, n, symmetric)
        members.setdefault(key, set()).add(shape)
        sizes[key] = max(sizes.get(key, 0), size)
    return {
        "raw": [format_shape(s) for s in sorted(raw)],
        "edge": [format_shape(s) for s in sorted(raw) if is_edge_shape(s, n)],
        "reduction": SHAPE_REDUCTION,
        "classes": {
            format_shape(key): {
                "members": [format_shape(s) for s in sorted(group)],
                "max_min_reorientation": sizes[key],
            }
            for key, group in sorted(members.items())
        },
    }


# 5. Family sweep

def _check_chunk(task: Tuple[Tuple[Tuple[bool, ...], ...], int, int, int, Sequence[int]]) -> Dict[str, Any]:
    black, r, n, budget, codes = task
    records = []
    failures = []
    for code in codes:
        rows = realization_rows(black, r, n, code)
        if is_cyclic_rows(rows):
            continue
        columns = min_cyclic_reorientation_rows(rows, budget)
        if columns is None:
            failures.append(code)
            continue
        records.append((code, columns, shape_of(rows)))
    return {"checked": len(codes), "records": records, "failures": failures}


def verify_lemma_family(
    p: FamilyParams,
    mode: str = "exhaustive",
    count: Optional[int] = None,
    seed: Optional[int] = None,
    strict: bool = False,
    max_cases: Optional[int] = None,
    max_seconds: Optional[float] = None,
    workers: int = 1,
) -> Certificate:
    """Check that every realization is cyclic or has a cyclic reorientation of size <= k."""
    stopwatch = Stopwatch(time_budget(max_seconds))
    b = build_board(p, strict=strict)
    if not p.satisfies_side_condition and p.k > 2:
        logger.warning(f"k={p.k} is outside 3..floor(r/2) for r={p.r}; the family is checked anyway")

    if mode == "exhaustive":
        codes: Sequence[int] = range(realization_count(b))
    elif mode == "sampled":
        if count is None or seed is None:
            raise InputError("Sampled mode needs both --count and --seed")
        codes = sample_realization_codes(b, count, seed)
    else:
        raise InputError(f"Unknown mode {mode!r}")
    total = len(codes)
    limit = case_budget(max_cases)
    if limit is not None and limit < total:
        logger.info(f"Case budget {limit} below {total} realizations; coverage will be partial")
        codes = codes[:limit]

    logger.info(f"Checking {len(codes)} of {total} realizations of CB(r={p.r}, n={p.n}, k={p.k}, l={p.l})")
    tasks = [(b.board.black, b.r, b.n, p.k, chunk) for chunk in chunked(codes, CHUNK_SIZE)]
    checked = 0
    records: List[Tuple[int, Tuple[int, ...], Shape]] = []
    failures: List[int] = []
    for result in parallel_map(_check_chunk, tasks, workers):
        checked += result["checked"]
        records.extend(result["records"])
        failures.extend(result["failures"])
        if stopwatch.expired():
            logger.warning(f"Time budget reached after {checked} realizations")
            break

    shapes = shape_witness(
        ((shape, len(columns)) for _, columns, shape in records), b.n, b.is_half_turn_symmetric()
    )
    classes = shapes["classes"]
    max_size = max((len(columns) for _, columns, _ in records), default=0)
    failures.sort()
    counterexample = None
    if failures:
        code = failures[0]
        counterexample = {"code": code, "matrix": realization_from_code(b, code).to_text()}
        logger.error(f"Realization {code} has no cyclic reorientation of size <= {p.k}")

    witness = {
        "reorientations": [[code, list(columns)] for code, columns, _ in sorted(records)],
        "counterexample": counterexample,
        "shapes": shapes,
    }
    summary = {
        "realizations": checked,
        "acyclic": len(records) + len(failures),
        "cyclic": checked - len(records) - len(failures),
        "max_min_reorientation": max_size,
        "raw_shape_count": len(shapes["raw"]),
        "edge_shape_count": len(shapes["edge"]),
        "interior_shape_count": len(classes),
        "interior_shapes_at_max": sum(1 for c in classes.values() if c["max_min_reorientation"] == max_size),
        "side_condition": p.satisfies_side_condition,
        "single_rows": list(b.single_rows),
        "black_cells": [list(c) for c in b.board.black_cells()],
    }
    instance = {
        "r": p.r,
        "k": p.k,
        "l": p.l,
        "n": p.n,
        "mode": mode,
        "count": count if mode == "sampled" else None,
        "strict": strict,
    }
    logger.info(
        f"{p.claim}: {checked}/{total} checked, {summary['acyclic']} acyclic, "
        f"max |S| = {max_size}, {len(shapes['raw'])} shapes ({len(classes)} interior classes)"
    )
    return make_certificate(
        Claim(p.claim),
        instance,
        witness,
        verified=not failures,
        checked=checked,
        total=total,
        seed=seed if mode == "sampled" else None,
        stopwatch=stopwatch,
        summary=summary,
    )


def board_certificate(p: FamilyParams, strict: bool = False) -> Certificate:
    """The `family build` output: the board, its diagonal sets and the raw formula comparison."""
    stopwatch = Stopwatch()
    b = build_board(p, strict=strict)
    upper, lower = diagonal_sets(b.board)
    cells = b.board.black_cells()
    raw = formula_cells(p)
    witness = {
        "black_cells": [list(c) for c in cells],
        "single_rows": list(b.single_rows),
        "upper_diagonal": [list(c) for c in sorted(upper)],
        "lower_diagonal": [list(c) for c in sorted(lower)],
    }
    summary = {
        "board": b.board.to_text().splitlines(),
        "formula_matches": set(raw) == set(cells),
        "formula_only": [list(c) for c in sorted(set(raw) - set(cells))],
        "side_condition": p.satisfies_side_condition,
    }
    instance = {"r": p.r, "k": p.k, "l": p.l, "n": p.n, "strict": strict}
    return make_certificate(
        Claim.FAMILY_BOARD,
        instance,
        witness,
        verified=len(cells) == p.n - 1,
        stopwatch=stopwatch,
        summary=summary,
    )
