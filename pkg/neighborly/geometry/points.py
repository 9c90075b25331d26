import logging
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Tuple

import numpy as np

from neighborly.errors import BudgetExceededError, InputError
from neighborly.models.geometry import PointConfig
from neighborly.utils.linalg import determinant, determinant_sign, lifted_rows
from neighborly.utils.rationals import parse_rational

logger = logging.getLogger(__name__)


def _lifted_subset(x: PointConfig, indices: Sequence[int]) -> List[List[Fraction]]:
    return lifted_rows([x.points[i] for i in indices])


def is_general_position(x: PointConfig) -> bool:
    """Every (d+1)-subset has a nonzero lifted determinant."""
    if x.n < x.d + 1:
        raise InputError(f"General position needs n >= d+1, got n={x.n}, d={x.d}")
    for subset in combinations(range(x.n), x.d + 1):
        if determinant(_lifted_subset(x, subset)) == 0:
            logger.debug(f"Points {[i + 1 for i in subset]} are affinely dependent")
            return False
    return True


def require_general_position(x: PointConfig, minimum: int = 0) -> None:
    if x.n < max(minimum, x.d + 1):
        raise InputError(f"Need at least {max(minimum, x.d + 1)} points in dimension {x.d}, got {x.n}")
    if not is_general_position(x):
        raise InputError("Points are not in general position")


def chirotope_signs(x: PointConfig) -> Tuple[int, ...]:
    """Signs of the lifted (d+1)-determinants, subsets in lexicographic order."""
    return tuple(
        determinant_sign(_lifted_subset(x, subset))
        for subset in combinations(range(x.n), x.d + 1)
    )


def moment_curve_points(d: int, params: Sequence[object]) -> PointConfig:
    """t -> (t, t^2, ..., t^d) for each parameter."""
    if d < 1:
        raise InputError("Dimension must be positive")
    values = [parse_rational(t) for t in params]
    if len(set(values)) != len(values):
        raise InputError("Moment curve parameters must be pairwise distinct")
    return PointConfig(points=tuple(tuple(t ** e for e in range(1, d + 1)) for t in values))


def random_config(n: int, d: int, seed: int, bound: int = 20, attempts: int = 200) -> PointConfig:
    """Seeded integer configuration in general position."""
    rng = np.random.default_rng(seed)
    for attempt in range(attempts):
        coords = rng.integers(-bound, bound + 1, size=(n, d))
        x = PointConfig(points=tuple(tuple(Fraction(int(v)) for v in row) for row in coords))
        if is_general_position(x):
            if attempt:
                logger.debug(f"Seed {seed}: general position after {attempt + 1} draws")
            return x
    raise BudgetExceededError(
        f"No general-position configuration of {n} points in dimension {d} after {attempts} draws"
    )


def perturb(x: PointConfig, seed: int, scale: Fraction = Fraction(1, 1000)) -> PointConfig:
    """Add seeded rational noise in [-scale, scale] to every coordinate.

    The result is not checked for general position; callers decide.
    """
    rng = np.random.default_rng(seed)
    steps = rng.integers(-1000, 1001, size=(x.n, x.d))
    return PointConfig(
        points=tuple(
            tuple(c + scale * Fraction(int(s), 1000) for c, s in zip(point, row))
            for point, row in zip(x.points, steps)
        )
    )


def affine_image(
    x: PointConfig, matrix: Sequence[Sequence[Fraction]], translation: Sequence[Fraction]
) -> PointConfig:
    if len(matrix) != x.d or any(len(row) != x.d for row in matrix) or len(translation) != x.d:
        raise InputError(f"Affine map must be {x.d}x{x.d} with a {x.d}-vector translation")
    if determinant(matrix) == 0:
        raise InputError("Affine map is singular")
    return PointConfig(
        points=tuple(
            tuple(
                sum((Fraction(a) * c for a, c in zip(row, point)), Fraction(0)) + Fraction(t)
                for row, t in zip(matrix, translation)
            )
            for point in x.points
        )
    )
