"""Exact hull predicates: intersection, separation and origin membership.

All predicates are feasibility questions handed to the exact simplex in
``neighborly.utils.exact_lp``. Vectors are tuples of ``Fraction``.
"""

import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from neighborly.errors import InputError
from neighborly.models.geometry import Hyperplane, Partition, PointConfig
from neighborly.utils.exact_lp import find_nonnegative_solution, join_free
from neighborly.utils.rationals import dot

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]
ONE = Fraction(1)
ZERO = Fraction(0)


def common_point_coefficients(blocks: Sequence[Sequence[Vector]]) -> Optional[List[List[Fraction]]]:
    """Convex coefficients per block whose combinations all coincide, or None.

    Variables are stacked block by block. Each block gets a row summing its
    coefficients to one; each later block is tied to the first coordinatewise.
    """
    if not blocks or any(not block for block in blocks):
        return None
    d = len(blocks[0][0])
    widths = [len(block) for block in blocks]
    total = sum(widths)
    offsets = [sum(widths[:t]) for t in range(len(blocks))]
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for t, block in enumerate(blocks):
        row = [ZERO] * total
        for i in range(len(block)):
            row[offsets[t] + i] = ONE
        rows.append(row)
        rhs.append(ONE)
    for t in range(1, len(blocks)):
        for coord in range(d):
            row = [ZERO] * total
            for i, point in enumerate(blocks[0]):
                row[i] = point[coord]
            for i, point in enumerate(blocks[t]):
                row[offsets[t] + i] = -point[coord]
            rows.append(row)
            rhs.append(ZERO)
    x = find_nonnegative_solution(rows, rhs)
    if x is None:
        return None
    return [x[offsets[t]:offsets[t] + widths[t]] for t in range(len(blocks))]


def meeting_coefficients(
    a: Sequence[Vector], b: Sequence[Vector]
) -> Optional[Tuple[List[Fraction], List[Fraction]]]:
    """(lambda, mu) with sum(lambda * a) == sum(mu * b), or None when the hulls are disjoint."""
    found = common_point_coefficients([a, b])
    if found is None:
        return None
    return found[0], found[1]


def partition_sides(
    x: PointConfig, part: Partition, removed: Iterable[int] = ()
) -> Tuple[List[Vector], List[Vector]]:
    """The points of each side that survive the removal."""
    gone = set(removed)
    unknown = gone - set(x.labels)
    if unknown or set(part.labels) - set(x.labels):
        raise InputError(f"Labels outside 1..{x.n}: {sorted(unknown | (set(part.labels) - set(x.labels)))}")
    return (
        [x.point(label) for label in part.a if label not in gone],
        [x.point(label) for label in part.b if label not in gone],
    )


def hulls_intersect(x: PointConfig, part: Partition, removed: Iterable[int] = ()) -> bool:
    """Whether the two sides still have meeting hulls after the removal; an emptied side never meets."""
    a, b = partition_sides(x, part, removed)
    return meeting_coefficients(a, b) is not None


def separating_hyperplane(
    a: Sequence[Vector], b: Sequence[Vector], d: Optional[int] = None
) -> Optional[Hyperplane]:
    """c, delta with c.p - delta >= 1 on a and c.q - delta <= -1 on b.

    Free variables are split into (plus, minus) pairs; one slack per point.
    ``d`` is the ambient dimension, needed only when both sides are empty.
    Returns None when no such hyperplane exists.
    """
    points = list(a) + list(b)
    if d is None:
        if not points:
            raise InputError("The dimension of two empty sides is unknown")
        d = len(points[0])
    if any(len(p) != d for p in points):
        raise InputError(f"Points of mixed dimension, expected {d}")
    if not points:
        return Hyperplane(normal=tuple(ZERO for _ in range(d)), offset=ZERO)
    free = 2 * (d + 1)
    width = free + len(points)
    rows: List[List[Fraction]] = []
    for i, p in enumerate(points):
        side = ONE if i < len(a) else -ONE
        row = [ZERO] * width
        for coord in range(d):
            row[2 * coord] = side * p[coord]
            row[2 * coord + 1] = -side * p[coord]
        row[2 * d] = -side
        row[2 * d + 1] = side
        row[free + i] = -ONE
        rows.append(row)
    x = find_nonnegative_solution(rows, [ONE] * len(rows))
    if x is None:
        return None
    values = join_free(x, 0, d + 1)
    return Hyperplane(normal=tuple(values[:d]), offset=values[d])


def separates(h: Hyperplane, a: Sequence[Vector], b: Sequence[Vector]) -> bool:
    if any(len(p) != len(h.normal) for p in list(a) + list(b)):
        return False
    return all(dot(h.normal, p) - h.offset >= 1 for p in a) and all(
        dot(h.normal, q) - h.offset <= -1 for q in b
    )


def zero_in_hull(vectors: Sequence[Vector], strict: bool = False) -> bool:
    """Whether the origin lies in conv(vectors); ``strict`` asks for the relative interior.

    The strict form looks for weights mu >= 0 with sum((mu_i + 1) v_i) == 0,
    a combination with every weight positive.
    """
    if not vectors:
        return False
    d = len(vectors[0])
    rows = [[v[coord] for v in vectors] for coord in range(d)]
    if strict:
        rhs = [-sum((v[coord] for v in vectors), ZERO) for coord in range(d)]
    else:
        rows.append([ONE] * len(vectors))
        rhs = [ZERO] * d + [ONE]
    return find_nonnegative_solution(rows, rhs) is not None
