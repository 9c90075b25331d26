"""Gale transforms of point configurations.

The Gale diagram of n points in R^d is a basis of the space of affine
dependencies, read row by row: n vectors in R^(n-d-1).
"""

import logging
from fractions import Fraction
from typing import Dict, List

from neighborly.certificates import Stopwatch, make_certificate
from neighborly.errors import InputError
from neighborly.geometry.points import require_general_position
from neighborly.models.certificate import Certificate, Claim
from neighborly.models.geometry import GaleDiagram, Partition, PointConfig
from neighborly.utils.linalg import lifted_rows, mat_vec, nullspace, rank, transpose

logger = logging.getLogger(__name__)


def gale_transform(x: PointConfig) -> GaleDiagram:
    require_general_position(x, minimum=x.d + 2)
    basis = nullspace(lifted_rows(x.points))
    if len(basis) != x.n - x.d - 1:
        raise InputError(f"Kernel has dimension {len(basis)}, expected {x.n - x.d - 1}")
    return GaleDiagram(vectors=tuple(tuple(v[i] for v in basis) for i in range(x.n)))


def gale_invariants(x: PointConfig, g: GaleDiagram) -> Dict[str, object]:
    """Orthogonality to the lifted points, zero column sums, and rank."""
    lifted = lifted_rows(x.points)
    columns = transpose(g.vectors)
    orthogonal = all(all(v == 0 for v in mat_vec(lifted, column)) for column in columns)
    return {
        "orthogonal": orthogonal,
        "rank": rank(g.vectors),
        "expected_rank": x.n - x.d - 1,
        "valid": orthogonal and g.n == x.n and rank(g.vectors) == x.n - x.d - 1,
    }


def gale_inverse(g: GaleDiagram) -> PointConfig:
    """A configuration whose Gale diagram has the same column space as g.

    The lifted points span the orthogonal complement of g's columns; that
    space contains the all-ones vector, which becomes the lifting row.
    """
    n, m = g.n, g.dim
    d = n - m - 1
    if d < 1:
        raise InputError(f"{n} vectors in dimension {m} do not come from points in positive dimension")
    columns = transpose(g.vectors)
    if rank(g.vectors) != m:
        raise InputError("Gale vectors must span their space")
    if any(sum(column, Fraction(0)) != 0 for column in columns):
        raise InputError("Gale vectors must sum to zero")
    ones = tuple(Fraction(1) for _ in range(n))
    chosen: List[tuple] = [ones]
    for v in nullspace(columns):
        if len(chosen) == d + 1:
            break
        if rank(chosen + [v]) > len(chosen):
            chosen.append(v)
    if len(chosen) != d + 1:
        raise InputError("Could not complete the all-ones vector to a kernel basis")
    return PointConfig(points=tuple(tuple(chosen[t][i] for t in range(1, d + 1)) for i in range(n)))


def radon_partition(x: PointConfig) -> Partition:
    """The unique Radon partition of d+2 points, from the signs of the 1-dimensional diagram."""
    if x.n != x.d + 2:
        raise InputError(f"Radon partition needs exactly d+2 = {x.d + 2} points, got {x.n}")
    g = gale_transform(x)
    coefficients = [v[0] for v in g.vectors]
    first = coefficients[0] > 0
    a = tuple(i + 1 for i, c in enumerate(coefficients) if (c > 0) == first)
    b = tuple(i + 1 for i, c in enumerate(coefficients) if (c > 0) != first)
    return Partition(a=a, b=b)


def inverse_invariants(g: GaleDiagram, x: PointConfig) -> bool:
    """x's lifted rows are independent and orthogonal to g's columns, so the spaces match."""
    lifted = lifted_rows(x.points)
    if x.n != g.n or len(lifted) + g.dim != g.n:
        return False
    if rank(lifted) != len(lifted) or rank(g.vectors) != g.dim:
        return False
    return all(all(v == 0 for v in mat_vec(lifted, column)) for column in transpose(g.vectors))


def gale_certificate(x: PointConfig) -> Certificate:
    stopwatch = Stopwatch()
    g = gale_transform(x)
    checks = gale_invariants(x, g)
    summary: Dict[str, object] = {k: v for k, v in checks.items() if k != "valid"}
    if x.n == x.d + 2:
        part = radon_partition(x)
        summary["radon_partition"] = {"a": list(part.a), "b": list(part.b)}
    return make_certificate(
        Claim.GALE,
        {"points": x.to_json()},
        {"vectors": g.to_json()},
        verified=bool(checks["valid"]),
        stopwatch=stopwatch,
        summary=summary,
    )


def gale_inverse_certificate(g: GaleDiagram) -> Certificate:
    stopwatch = Stopwatch()
    x = gale_inverse(g)
    return make_certificate(
        Claim.GALE_INVERSE,
        {"vectors": g.to_json()},
        {"points": x.to_json()},
        verified=inverse_invariants(g, x),
        stopwatch=stopwatch,
        summary={"d": x.d, "n": x.n},
    )
