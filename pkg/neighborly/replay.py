"""Re-verification of certificates from their embedded instance and witness.

Each claim has one replay function, registered with ``@replays``. A replay
checks the witness with the pure predicates and confirms that the recorded
verdict follows from it; it never repeats a search when the witness alone
settles the question. Malformed witnesses replay to False. Certificates
from a different schema raise SchemaError before any replay runs.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Dict, Iterator, List, Sequence, Tuple

from pydantic import ValidationError

from neighborly.bounds import derived_to_json, index_relations
from neighborly.config import SCHEMA_VERSION
from neighborly.errors import NotRealizableError, SchemaError, WorkbenchError
from neighborly.families import (
    board_certificate,
    build_board,
    min_cyclic_reorientation_rows,
    realization_count,
    realization_rows,
    sample_realization_codes,
    shape_of,
    shape_witness,
)
from neighborly.geometry.divisibility import bipartitions, set_partitions
from neighborly.geometry.gale import gale_invariants, gale_transform, inverse_invariants
from neighborly.geometry.hulls import common_point_coefficients, separates
from neighborly.geometry.projective import (
    apply_projective,
    denominators,
    find_realizable_flip,
    find_sign_flip,
    hyperplane_from_signs,
    is_k_neighbourly,
    neighbourly_certificate,
    zero_in_hull_complements,
)
from neighborly.models.bounds import BoundTable
from neighborly.models.certificate import Certificate, Claim
from neighborly.models.family import FamilyParams
from neighborly.models.geometry import GaleDiagram, Hyperplane, PointConfig, ProjectiveMap
from neighborly.models.signs import SignMatrix
from neighborly.models.travel import TravelKind
from neighborly.oracles import (
    hex_to_flags,
    images_digest,
    reorientation_images,
    sweep_codes,
    travel_certificate,
)
from neighborly.signs import (
    acyclic_reorientations_bruteforce,
    flip_mask,
    is_acyclic_bruteforce,
    matrix_from_code,
    reorient,
)
from neighborly.travels import is_cyclic_rows
from neighborly.utils.formats import parse_signs
from neighborly.utils.rationals import parse_rational, sign_of

logger = logging.getLogger(__name__)

Replayer = Callable[[Certificate], bool]

REPLAYERS: Dict[Claim, Replayer] = {}


def replays(claim: Claim) -> Callable[[Replayer], Replayer]:
    def register(fn: Replayer) -> Replayer:
        REPLAYERS[claim] = fn
        return fn

    return register


def replay(cert: Certificate) -> bool:
    if cert.schema_version != SCHEMA_VERSION:
        raise SchemaError(f"Cannot replay schema {cert.schema_version!r}")
    if cert.verified and not cert.complete:
        logger.warning(f"{cert.claim.value}: verified certificate with partial coverage")
        return False
    try:
        ok = REPLAYERS[cert.claim](cert)
    except SchemaError:
        raise
    except (WorkbenchError, ValidationError, KeyError, IndexError, TypeError, ValueError) as exc:
        logger.warning(f"{cert.claim.value}: malformed certificate ({exc})")
        return False
    if not ok:
        logger.warning(f"{cert.claim.value}: replay does not reproduce the certificate")
    return ok


def _visited_codes(cert: Certificate, codes: Sequence[int]) -> List[int]:
    """The first ``checked`` codes of the sweep; a sampled witness must list exactly these."""
    visited = list(codes[: cert.coverage.checked])
    if cert.coverage.total != len(codes):
        raise ValueError("coverage total does not match the instance")
    if "codes" in cert.witness and list(cert.witness["codes"]) != visited:
        raise ValueError("listed codes do not match the seeded sample")
    return visited


def _verdict(cert: Certificate, holds: bool) -> bool:
    """The recorded verdict, given what the witness shows; partial runs are never verified."""
    return cert.verified == (holds and cert.complete)


def _points(payload: Any) -> PointConfig:
    return PointConfig(points=tuple(tuple(p) for p in payload))


def _vectors(payload: Any) -> GaleDiagram:
    return GaleDiagram(vectors=tuple(tuple(v) for v in payload))


# 1. Matrix sweeps

@replays(Claim.PROP_LLOM)
def replay_prop_llom(cert: Certificate) -> bool:
    r, n = cert.instance["r"], cert.instance["n"]
    codes = _visited_codes(
        cert, sweep_codes(r, n, cert.instance["mode"], cert.instance.get("count"), cert.seed)
    )
    mask = cert.witness["cyclic_mask"]
    if int(mask, 16) >> len(codes):
        return False
    flags = hex_to_flags(mask, len(codes))
    disagreements = [
        code
        for code, flag in zip(codes, flags)
        if flag != (not is_acyclic_bruteforce(matrix_from_code(r, n, code)))
    ]
    return disagreements == list(cert.witness["disagreements"]) and _verdict(cert, not disagreements)


@replays(Claim.PROP_PT)
def replay_prop_pt(cert: Certificate) -> bool:
    r, n = cert.instance["r"], cert.instance["n"]
    codes = _visited_codes(
        cert, sweep_codes(r, n, cert.instance["mode"], cert.instance.get("count"), cert.seed)
    )
    recorded = []
    failures = []
    for code in codes:
        m = matrix_from_code(r, n, code)
        images = reorientation_images(m)
        recorded.append((code, images))
        classes = {s.columns for s in acyclic_reorientations_bruteforce(m)}
        if len(set(images)) != len(images) or set(images) != classes:
            failures.append(code)
        elif not all(is_acyclic_bruteforce(reorient(m, s)) for s in images):
            failures.append(code)
    return (
        images_digest(recorded) == cert.witness["images_sha256"]
        and failures == list(cert.witness["failures"])
        and _verdict(cert, not failures)
    )


@replays(Claim.TRAVEL)
def replay_travel(cert: Certificate) -> bool:
    m = SignMatrix.from_text(cert.instance["matrix"])
    fresh = travel_certificate(m, TravelKind(cert.instance["kind"]))
    return fresh.witness == cert.witness and fresh.verified == cert.verified


# 2. Families

def _family_params(cert: Certificate) -> FamilyParams:
    return FamilyParams(r=cert.instance["r"], k=cert.instance["k"], l=cert.instance.get("l"))


@replays(Claim.FAMILY_BOARD)
def replay_family_board(cert: Certificate) -> bool:
    fresh = board_certificate(_family_params(cert), strict=bool(cert.instance.get("strict")))
    return fresh.witness == cert.witness and fresh.verified == cert.verified


def replay_lemma(cert: Certificate) -> bool:
    """Listed reorientations must be small and cyclic; every unlisted realization must be cyclic."""
    p = _family_params(cert)
    b = build_board(p, strict=bool(cert.instance.get("strict")))
    if cert.instance["mode"] == "sampled":
        codes: Sequence[int] = sample_realization_codes(b, cert.instance["count"], cert.seed)
    else:
        codes = range(realization_count(b))
    visited = _visited_codes(cert, codes)
    listed = {int(code): tuple(columns) for code, columns in cert.witness["reorientations"]}
    counterexample = cert.witness.get("counterexample")
    sized_shapes = []
    for code in sorted(set(visited)):
        rows = realization_rows(b.board.black, b.r, b.n, code)
        if code in listed:
            columns = listed[code]
            if not columns or len(columns) > p.k:
                return False
            if not is_cyclic_rows(rows, flip_mask(b.n, columns)):
                return False
            sized_shapes.append((shape_of(rows), len(columns)))
        elif not is_cyclic_rows(rows):
            if counterexample is None or counterexample["code"] != code:
                return False
            if min_cyclic_reorientation_rows(rows, p.k) is not None:
                return False
    if set(listed) - set(visited):
        return False
    if cert.witness.get("shapes") != shape_witness(sized_shapes, b.n, b.is_half_turn_symmetric()):
        return False
    return _verdict(cert, counterexample is None)


REPLAYERS[Claim.LEMMA_LBASE] = replay_lemma
REPLAYERS[Claim.LEMMA_GENERAL] = replay_lemma


# 3. Geometry

@replays(Claim.GALE)
def replay_gale(cert: Certificate) -> bool:
    x = _points(cert.instance["points"])
    g = _vectors(cert.witness["vectors"])
    return bool(gale_invariants(x, g)["valid"]) == cert.verified


@replays(Claim.GALE_INVERSE)
def replay_gale_inverse(cert: Certificate) -> bool:
    g = _vectors(cert.instance["vectors"])
    x = _points(cert.witness["points"])
    return inverse_invariants(g, x) == cert.verified


def _partitions(cert: Certificate, n: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    if cert.claim == Claim.S_K_DIVISIBLE:
        return set_partitions(n, cert.instance["s"])
    return bipartitions(n)


def _check_divisible_witness(x: PointConfig, blocks: List[List[int]], k: int, removals: List[Dict[str, Any]]) -> bool:
    if sorted(label for block in blocks for label in block) != list(x.labels):
        return False
    expected = [list(r) for r in combinations(x.labels, k)]
    if [list(entry["removed"]) for entry in removals] != expected:
        return False
    for entry in removals:
        gone = set(entry["removed"])
        sides = [[x.point(label) for label in block if label not in gone] for block in blocks]
        coefficients = [[parse_rational(c) for c in row] for row in entry["coefficients"]]
        if len(coefficients) != len(sides):
            return False
        combined = []
        for side, weights in zip(sides, coefficients):
            if not side or len(weights) != len(side):
                return False
            if any(w < 0 for w in weights) or sum(weights, Fraction(0)) != 1:
                return False
            combined.append(
                tuple(sum((w * p[t] for w, p in zip(weights, side)), Fraction(0)) for t in range(x.d))
            )
        if any(point != combined[0] for point in combined[1:]):
            return False
    return True


def _check_refutation(x: PointConfig, refutation: Dict[str, Any], k: int) -> bool:
    removed = set(refutation["removed"])
    if len(removed) != k:
        return False
    sides = [[x.point(label) for label in block if label not in removed] for block in refutation["blocks"]]
    if len(sides) == 2:
        if "normal" not in refutation:
            return False
        h = Hyperplane(normal=tuple(refutation["normal"]), offset=refutation["offset"])
        return len(h.normal) == x.d and separates(h, sides[0], sides[1])
    if any(not side for side in sides):
        return True
    return common_point_coefficients(sides) is None


@replays(Claim.K_DIVISIBLE)
def replay_divisible(cert: Certificate) -> bool:
    x = _points(cert.instance["points"])
    k = cert.instance["k"]
    if cert.witness.get("blocks") is not None:
        return cert.verified and _check_divisible_witness(x, cert.witness["blocks"], k, cert.witness["removals"])
    refutations = cert.witness["refutations"]
    if len(refutations) != cert.coverage.checked:
        return False
    for blocks, refutation in zip(_partitions(cert, x.n), refutations):
        if [list(b) for b in blocks] != [list(b) for b in refutation["blocks"]]:
            return False
        if not _check_refutation(x, refutation, k):
            return False
    return not cert.verified


REPLAYERS[Claim.S_K_DIVISIBLE] = replay_divisible


@replays(Claim.K_NEIGHBOURLY)
def replay_neighbourly(cert: Certificate) -> bool:
    x = _points(cert.instance["points"])
    fresh = neighbourly_certificate(x, cert.instance["k"], bool(cert.instance.get("strict")))
    return fresh.witness == cert.witness and fresh.verified == cert.verified


def _map_matches(x: PointConfig, p: ProjectiveMap, signs: Sequence[int]) -> bool:
    return tuple(sign_of(v) for v in denominators(p, x)) == tuple(signs)


@replays(Claim.SIGN_FLIP)
def replay_sign_flip(cert: Certificate) -> bool:
    x = _points(cert.instance["points"])
    k, strict = cert.instance["k"], bool(cert.instance.get("strict", True))
    g = gale_transform(x)
    if g.to_json() != cert.witness["vectors"]:
        return False
    if cert.witness["signs"] is None:
        first = find_sign_flip(g, k, strict)
        return (
            not cert.verified
            and cert.witness.get("unrealized_flip") == (first.to_text() if first is not None else None)
            and find_realizable_flip(x, k, strict, g) is None
        )
    if cert.witness["map"] is None:
        return False
    e = parse_signs(cert.witness["signs"])
    if not zero_in_hull_complements(g.flipped(e), k, strict):
        return False
    p = ProjectiveMap.model_validate(cert.witness["map"])
    if not _map_matches(x, p, e.signs):
        return False
    return is_k_neighbourly(apply_projective(p, x), k, strict=strict) == cert.verified


@replays(Claim.PROJECTIVE)
def replay_projective(cert: Certificate) -> bool:
    x = _points(cert.instance["points"])
    e = parse_signs(cert.instance["signs"])
    if cert.witness["map"] is None:
        try:
            hyperplane_from_signs(x, e)
        except NotRealizableError:
            return not cert.verified
        return False
    p = ProjectiveMap.model_validate(cert.witness["map"])
    image = apply_projective(p, x)
    return (
        _map_matches(x, p, e.signs)
        and image.to_json() == cert.witness["image"]
        and cert.verified
    )


# 4. Bounds

@replays(Claim.BOUNDS)
def replay_bounds(cert: Certificate) -> bool:
    table = BoundTable.model_validate(cert.instance["table"])
    derived = derived_to_json(index_relations(table, cert.instance.get("max_d")))
    return derived == cert.witness["derived"] and cert.verified
