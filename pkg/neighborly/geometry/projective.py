"""Sign flips of Gale diagrams, permissible projective maps and neighbourliness.

Flipping a Gale vector's sign corresponds to sending its point across the
hyperplane at infinity of a projective map. Whether a k-set of points spans
a face is read off the Gale diagram: the origin must lie in the relative
interior of the hull of the remaining vectors.
"""

import logging
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, List, Optional, Tuple

from neighborly.certificates import Stopwatch, make_certificate
from neighborly.errors import InputError, NotRealizableError
from neighborly.geometry.gale import gale_transform
from neighborly.geometry.hulls import zero_in_hull
from neighborly.geometry.points import require_general_position
from neighborly.models.certificate import Certificate, Claim
from neighborly.models.geometry import GaleDiagram, PointConfig, ProjectiveMap, SignVector
from neighborly.models.signs import SignedCircuit
from neighborly.utils.exact_lp import find_nonnegative_solution, join_free
from neighborly.utils.linalg import determinant, lifted_rows, nullspace
from neighborly.utils.rationals import dot, sign_of

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


# 1. Origin membership after removals

def failing_removal(g: GaleDiagram, k: int, strict: bool = False) -> Optional[Tuple[int, ...]]:
    """First k-set of labels (lexicographic) whose removal leaves the origin outside the hull."""
    if k < 0 or k > g.n:
        raise InputError(f"k must lie in [0, {g.n}], got {k}")
    for removed in combinations(range(1, g.n + 1), k):
        rest = [v for label, v in enumerate(g.vectors, start=1) if label not in removed]
        if not zero_in_hull(rest, strict=strict):
            return removed
    return None


def zero_in_hull_complements(g: GaleDiagram, k: int, strict: bool = False) -> bool:
    return failing_removal(g, k, strict) is None


# 2. Sign flips

def sign_vectors(n: int) -> Iterator[SignVector]:
    """All sign vectors with first entry +1, lexicographic with +1 before -1."""
    for tail in product((1, -1), repeat=n - 1):
        yield SignVector(signs=(1,) + tail)


def find_sign_flip(g: GaleDiagram, k: int, strict: bool = True) -> Optional[SignVector]:
    """The first sign vector whose flipped diagram passes the origin test for every k-removal.

    ``strict`` uses relative interiors, the form under which the flipped
    configuration is k-neighbourly. None when no vector works.
    """
    for e in sign_vectors(g.n):
        if zero_in_hull_complements(g.flipped(e), k, strict):
            logger.debug(f"Sign flip {e.to_text()} works for k={k}")
            return e
    logger.info(f"No sign flip of the {g.n} Gale vectors works for k={k}")
    return None


# 3. Projective maps

def hyperplane_from_signs(x: PointConfig, e: SignVector) -> Tuple[Tuple[Fraction, ...], Fraction]:
    """(c, delta) with e_i * (<c, x_i> + delta) >= 1 for every point."""
    if e.n != x.n:
        raise InputError(f"Sign vector has {e.n} entries for {x.n} points")
    if len(set(e.signs)) == 1:
        return tuple(ZERO for _ in range(x.d)), Fraction(e.signs[0])
    d = x.d
    free = 2 * (d + 1)
    rows: List[List[Fraction]] = []
    for i, (point, eps) in enumerate(zip(x.points, e.signs)):
        row = [ZERO] * (free + x.n)
        for coord in range(d):
            row[2 * coord] = eps * point[coord]
            row[2 * coord + 1] = -eps * point[coord]
        row[2 * d] = Fraction(eps)
        row[2 * d + 1] = Fraction(-eps)
        row[free + i] = -ONE
        rows.append(row)
    solution = find_nonnegative_solution(rows, [ONE] * x.n)
    if solution is None:
        raise NotRealizableError(f"Sign pattern {e.to_text()} is not cut out by any hyperplane")
    values = join_free(solution, 0, d + 1)
    return tuple(values[:d]), values[d]


def projective_from_signs(x: PointConfig, e: SignVector) -> ProjectiveMap:
    """A regular map whose denominator has sign e_i at x_i.

    A is the identity. b is zero unless delta vanishes, when b = -c/<c,c>
    keeps the lifted matrix nonsingular.
    """
    c, delta = hyperplane_from_signs(x, e)
    identity = tuple(tuple(ONE if i == j else ZERO for j in range(x.d)) for i in range(x.d))
    if delta == 0:
        norm = dot(c, c)
        b = tuple(-v / norm for v in c)
    else:
        b = tuple(ZERO for _ in range(x.d))
    p = ProjectiveMap(A=identity, b=b, c=c, delta=delta)
    if determinant(p.lifted()) == 0:
        raise ArithmeticError("Constructed projective map is singular")
    return p


def find_realizable_flip(
    x: PointConfig, k: int, strict: bool = True, g: Optional[GaleDiagram] = None
) -> Optional[Tuple[SignVector, ProjectiveMap]]:
    """The first sign flip of x's Gale diagram that some projective map induces, with that map."""
    g = g or gale_transform(x)
    for e in sign_vectors(g.n):
        if not zero_in_hull_complements(g.flipped(e), k, strict):
            continue
        try:
            return e, projective_from_signs(x, e)
        except NotRealizableError:
            logger.debug(f"Sign flip {e.to_text()} works but no hyperplane induces it")
    return None


def denominators(p: ProjectiveMap, x: PointConfig) -> List[Fraction]:
    return [dot(p.c, point) + p.delta for point in x.points]


def is_permissible(p: ProjectiveMap, x: PointConfig) -> bool:
    return p.d == x.d and all(v != 0 for v in denominators(p, x))


def apply_projective(p: ProjectiveMap, x: PointConfig) -> PointConfig:
    if p.d != x.d:
        raise InputError(f"Map acts on R^{p.d}, points live in R^{x.d}")
    if determinant(p.lifted()) == 0:
        raise InputError("Projective map is not regular")
    if not is_permissible(p, x):
        raise InputError("Projective map sends a point to infinity")
    images = []
    for point, denominator in zip(x.points, denominators(p, x)):
        images.append(
            tuple((dot(row, point) + shift) / denominator for row, shift in zip(p.A, p.b))
        )
    return PointConfig(points=tuple(images))


# 4. Radon circuits and neighbourliness

def radon_circuits(x: PointConfig) -> List[SignedCircuit]:
    """Signed circuits on every (d+2)-subset, first sign normalized to +1."""
    require_general_position(x, minimum=x.d + 2)
    circuits = []
    for support in combinations(range(x.n), x.d + 2):
        kernel = nullspace(lifted_rows([x.points[i] for i in support]))
        if len(kernel) != 1:
            raise InputError(f"Points {[i + 1 for i in support]} do not carry a unique dependency")
        signs = [sign_of(v) for v in kernel[0]]
        if signs[0] < 0:
            signs = [-s for s in signs]
        circuits.append(SignedCircuit(support=tuple(i + 1 for i in support), signs=tuple(signs)))
    return circuits


def is_k_neighbourly(x: PointConfig, k: int, strict: bool = False) -> bool:
    """Every Radon circuit has at least k elements of each sign (k+1 when strict).

    The strict count is the one under which every k-set of points spans a face.
    """
    need = k + 1 if strict else k
    for circuit in radon_circuits(x):
        if len(circuit.positive) < need or len(circuit.negative) < need:
            logger.debug(f"Circuit on {circuit.support} has too few elements of one sign")
            return False
    return True


# 5. Certificates

def _circuit_rows(circuits: List[SignedCircuit]) -> List[List[object]]:
    return [[list(c.support), "".join("+" if s > 0 else "-" for s in c.signs)] for c in circuits]


def neighbourly_certificate(x: PointConfig, k: int, strict: bool = False) -> Certificate:
    stopwatch = Stopwatch()
    circuits = radon_circuits(x)
    need = k + 1 if strict else k
    short = [c for c in circuits if len(c.positive) < need or len(c.negative) < need]
    return make_certificate(
        Claim.K_NEIGHBOURLY,
        {"points": x.to_json(), "k": k, "strict": strict},
        {
            "circuits": _circuit_rows(circuits),
            "counterexample": _circuit_rows(short[:1])[0] if short else None,
        },
        verified=not short,
        stopwatch=stopwatch,
        summary={"circuits": len(circuits), "short_circuits": len(short)},
    )


def projective_certificate(x: PointConfig, e: SignVector) -> Certificate:
    """Build the map for e and apply it; a pattern no hyperplane cuts out is refuted."""
    stopwatch = Stopwatch()
    instance = {"points": x.to_json(), "signs": e.to_text()}
    try:
        p = projective_from_signs(x, e)
    except NotRealizableError as exc:
        logger.info(str(exc))
        return make_certificate(
            Claim.PROJECTIVE, instance, {"map": None, "image": None}, verified=False, stopwatch=stopwatch
        )
    signs = [sign_of(v) for v in denominators(p, x)]
    image = apply_projective(p, x)
    return make_certificate(
        Claim.PROJECTIVE,
        instance,
        {"map": p.to_json(), "image": image.to_json()},
        verified=tuple(signs) == e.signs,
        stopwatch=stopwatch,
        summary={"denominator_signs": SignVector(signs=tuple(signs)).to_text()},
    )


def sign_flip_certificate(x: PointConfig, k: int, strict: bool = True) -> Certificate:
    """Find a flip of x's Gale diagram that a projective map realizes, and check the image.

    Verified only when such a map exists and its image is k-neighbourly with
    the same strictness as the flip search. When no flip is realizable the
    witness keeps the first unrealizable flip, if any.
    """
    stopwatch = Stopwatch()
    g = gale_transform(x)
    instance = {"points": x.to_json(), "k": k, "strict": strict}
    found = find_realizable_flip(x, k, strict, g)
    if found is None:
        first = find_sign_flip(g, k, strict)
        return make_certificate(
            Claim.SIGN_FLIP,
            instance,
            {
                "vectors": g.to_json(),
                "signs": None,
                "map": None,
                "unrealized_flip": first.to_text() if first is not None else None,
            },
            verified=False,
            stopwatch=stopwatch,
            summary={"sign_vectors": 2 ** (g.n - 1), "realizable": False, "image_neighbourly": None},
        )
    e, p = found
    neighbourly = is_k_neighbourly(apply_projective(p, x), k, strict=strict)
    return make_certificate(
        Claim.SIGN_FLIP,
        instance,
        {"vectors": g.to_json(), "signs": e.to_text(), "map": p.to_json()},
        verified=neighbourly,
        stopwatch=stopwatch,
        summary={"realizable": True, "image_neighbourly": neighbourly},
    )
