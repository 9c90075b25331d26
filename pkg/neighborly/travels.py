"""Travels through a sign matrix and the travel-based cyclicity criterion.

A top travel starts at a[1][1] and runs right along constant signs; at the
first sign flip of a row it drops to the next row in the same column. It is
cyclic exactly when it gets stuck in row r before reaching column n. The
bottom travel is the same walk on the matrix turned by half a turn.
"""

import logging
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from neighborly.errors import ConsistencyError, InputError
from neighborly.models.signs import ReorientationSet, SignMatrix
from neighborly.models.travel import Segment, Travel, TravelKind
from neighborly.signs import rotate_half_turn

logger = logging.getLogger(__name__)

Rows = Sequence[Sequence[int]]
RawSegment = Tuple[int, int, int]


def walk_top(rows: Rows, mask: Optional[Sequence[int]] = None) -> Tuple[List[RawSegment], bool]:
    """Greedy top walk on raw rows; 1-based segments and the cyclic verdict.

    ``mask`` multiplies column j by mask[j-1], so a reorientation can be
    walked without building a new matrix.
    """
    r, n = len(rows), len(rows[0])
    segments: List[RawSegment] = []
    row, col = 0, 0
    while True:
        line = rows[row]
        if mask is None:
            value = line[col]
            j = col + 1
            while j < n and line[j] == value:
                j += 1
        else:
            value = line[col] * mask[col]
            j = col + 1
            while j < n and line[j] * mask[j] == value:
                j += 1
        if j >= n:
            segments.append((row + 1, col + 1, n))
            return segments, False
        if row == r - 1:
            segments.append((row + 1, col + 1, j))
            return segments, True
        segments.append((row + 1, col + 1, j + 1))
        row, col = row + 1, j


def is_cyclic_rows(rows: Rows, mask: Optional[Sequence[int]] = None) -> bool:
    """Top-travel verdict only, for the hot loops of the family sweeps."""
    r, n = len(rows), len(rows[0])
    row, col = 0, 0
    while True:
        line = rows[row]
        if mask is None:
            value = line[col]
            j = col + 1
            while j < n and line[j] == value:
                j += 1
        else:
            value = line[col] * mask[col]
            j = col + 1
            while j < n and line[j] * mask[j] == value:
                j += 1
        if j >= n:
            return False
        if row == r - 1:
            return True
        row, col = row + 1, j


def top_breakpoints(rows: Rows, mask: Optional[Sequence[int]] = None) -> Tuple[int, ...]:
    segments, _ = walk_top(rows, mask)
    return tuple(end for _, _, end in segments)


def bottom_breakpoints(rows: Rows, mask: Optional[Sequence[int]] = None) -> Tuple[int, ...]:
    n = len(rows[0])
    rotated = [list(reversed(line)) for line in reversed(rows)]
    rotated_mask = list(reversed(mask)) if mask is not None else None
    return tuple(n + 1 - b for b in top_breakpoints(rotated, rotated_mask))


def _segments_to_travel(kind: TravelKind, raw: List[RawSegment]) -> Travel:
    return Travel(
        kind=kind,
        segments=tuple(Segment(row=row, start=start, end=end) for row, start, end in raw),
    )


def top_travel(m: SignMatrix) -> Travel:
    raw, _ = walk_top(m.rows)
    return _segments_to_travel(TravelKind.TOP, raw)


def bottom_travel(m: SignMatrix) -> Travel:
    """Top travel of the half-turned matrix, mapped back: starts at a[r][n], runs left."""
    raw, _ = walk_top(rotate_half_turn(m).rows)
    mirrored = [(m.r + 1 - row, m.n + 1 - start, m.n + 1 - end) for row, start, end in raw]
    return _segments_to_travel(TravelKind.BOTTOM, mirrored)


def top_travel_is_cyclic(m: SignMatrix, t: Optional[Travel] = None) -> bool:
    t = t or top_travel(m)
    return t.last.row == m.r and t.last.end < m.n


def bottom_travel_is_cyclic(m: SignMatrix, t: Optional[Travel] = None) -> bool:
    t = t or bottom_travel(m)
    return t.last.row == 1 and t.last.end > 1


def is_cyclic_travel(m: SignMatrix) -> bool:
    if m.n <= m.r:
        raise InputError(f"The travel criterion needs n >= r+1, got a {m.r}x{m.n} matrix")
    top = top_travel_is_cyclic(m)
    bottom = bottom_travel_is_cyclic(m)
    if top != bottom:
        raise ConsistencyError(
            "Top and bottom travels disagree on cyclicity",
            {"matrix": m.to_text(), "top": top, "bottom": bottom},
        )
    return top


def plain_breakpoints(r: int, n: int) -> List[Tuple[int, ...]]:
    """Strictly increasing descents in 2..n, then a final n; at most r rows."""
    if n < 2:
        return []
    sequences = []
    for rows_visited in range(1, r + 1):
        for descents in combinations(range(2, n + 1), rows_visited - 1):
            sequences.append(tuple(descents) + (n,))
    return sorted(sequences)


def plain_travels(m: SignMatrix) -> List[Travel]:
    return [
        Travel.from_breakpoints(TravelKind.PLAIN, breakpoints, m.r, m.n)
        for breakpoints in plain_breakpoints(m.r, m.n)
    ]


def is_plain_breakpoints(breakpoints: Sequence[int], r: int, n: int) -> bool:
    if not breakpoints or len(breakpoints) > r or breakpoints[-1] != n:
        return False
    descents = list(breakpoints[:-1])
    if any(not 2 <= j <= n for j in descents):
        return False
    return all(b > a for a, b in zip(descents, descents[1:]))


def travel_to_reorientation(m: SignMatrix, t: Travel) -> ReorientationSet:
    """The acyclic reorientation whose top travel is t.

    Column 1 keeps its sign. Inside a segment every entry is made equal to
    the segment's first entry; at a descent the entry is made opposite, which
    forces the drop to the next row exactly there.
    """
    if t.kind == TravelKind.BOTTOM or not is_plain_breakpoints(t.breakpoints, m.r, m.n):
        raise InputError(
            f"Not a plain travel of a {m.r}x{m.n} matrix",
            {"travel": t.to_json()},
        )
    x = [0] * (m.n + 1)
    x[1] = 1
    last = len(t.segments) - 1
    for index, segment in enumerate(t.segments):
        line = m.rows[segment.row - 1]
        base = line[segment.start - 1] * x[segment.start]
        for j in range(segment.start + 1, segment.end + 1):
            x[j] = base * line[j - 1]
        if index != last:
            x[segment.end] = -base * line[segment.end - 1]
    return ReorientationSet.of(j for j in range(1, m.n + 1) if x[j] < 0)


def acyclic_reorientations(m: SignMatrix) -> List[ReorientationSet]:
    """Every acyclic reorientation class, read off the plain travels."""
    return [travel_to_reorientation(m, t) for t in plain_travels(m)]
