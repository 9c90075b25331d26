"""Index arithmetic between the projective, partition and Gale-side thresholds.

nu(d, k): largest n such that n general-position points in R^d map onto a
k-neighbourly polytope. lambda(d, k): smallest n forcing a k-divisible
configuration. mu(d, k): the Gale-side threshold, with mu(d+1, k) = lambda(d, k).
The relations used are

    nu(d, k)     = max { w : w >= lambda(w - d - 2, k) }
    lambda(d, k) <= w  whenever nu(w - d - 2, k) >= w

and every derived interval records the table entries it came from.
"""

import logging
from typing import Dict, List, Optional, Tuple

from neighborly.certificates import Stopwatch, make_certificate
from neighborly.errors import ConsistencyError, InputError
from neighborly.models.bounds import BoundFunction, BoundRecord, BoundTable, DerivedBound
from neighborly.models.certificate import Certificate, Claim

logger = logging.getLogger(__name__)

Key = Tuple[BoundFunction, int, int]


class Interval:
    """A mutable interval with the ids of the records behind each end."""

    def __init__(self):
        self.lower: Optional[int] = None
        self.upper: Optional[int] = None
        self.lower_from: Tuple[str, ...] = ()
        self.upper_from: Tuple[str, ...] = ()

    def tighten_lower(self, value: int, provenance: Tuple[str, ...]) -> None:
        if self.lower is None or value > self.lower:
            self.lower, self.lower_from = value, provenance

    def tighten_upper(self, value: int, provenance: Tuple[str, ...]) -> None:
        if self.upper is None or value < self.upper:
            self.upper, self.upper_from = value, provenance

    @property
    def consistent(self) -> bool:
        return self.lower is None or self.upper is None or self.lower <= self.upper

    def provenance(self) -> Tuple[str, ...]:
        return tuple(dict.fromkeys(self.lower_from + self.upper_from))


def _merge(intervals: Dict[Key, Interval], key: Key, lower: Optional[int], upper: Optional[int], provenance: Tuple[str, ...]) -> None:
    interval = intervals.setdefault(key, Interval())
    if lower is not None:
        interval.tighten_lower(lower, provenance)
    if upper is not None:
        interval.tighten_upper(upper, provenance)
    if not interval.consistent:
        function, d, k = key
        raise ConsistencyError(
            f"{function.value}({d},{k}) has lower bound {interval.lower} above upper bound {interval.upper}",
            {"provenance": list(interval.provenance())},
        )


def _lambda_key(record: BoundRecord) -> Key:
    """Where a record lands in the merged table: mu(d+1, k) is stored as lambda(d, k)."""
    if record.function == BoundFunction.MU:
        if record.d == 0:
            raise InputError(f"{record.ident}: mu(0, k) has no lambda counterpart")
        return (BoundFunction.LAMBDA, record.d - 1, record.k)
    return (record.function, record.d, record.k)


def index_relations(table: BoundTable, max_d: Optional[int] = None) -> List[DerivedBound]:
    """Merge the table and propagate bounds through the index relations.

    nu bounds are derived for d in 0..max_d (default: the largest index in
    the table). The nu upper bound assumes lambda is strictly increasing in d.
    """
    intervals: Dict[Key, Interval] = {}
    for record in table.entries:
        _merge(intervals, _lambda_key(record), record.lower, record.upper, (record.ident,))

    if max_d is None:
        max_d = max((d for _, d, _ in intervals), default=0)
    lambdas = {key: iv for key, iv in intervals.items() if key[0] == BoundFunction.LAMBDA}
    nus = {
        key: (iv.lower, iv.lower_from) for key, iv in intervals.items() if key[0] == BoundFunction.NU
    }
    ks = sorted({k for _, _, k in intervals})

    for k in ks:
        for d in range(max_d + 1):
            for (_, d_prime, k_prime), iv in sorted(lambdas.items()):
                if k_prime != k:
                    continue
                w = d_prime + d + 2
                if iv.upper is not None and iv.upper <= w:
                    _merge(intervals, (BoundFunction.NU, d, k), w, None, iv.upper_from)
                if iv.lower is not None and iv.lower > w:
                    _merge(intervals, (BoundFunction.NU, d, k), None, w - 1, iv.lower_from)

    for (_, d_nu, k), (nu_lower, nu_from) in sorted(nus.items()):
        if nu_lower is None:
            continue
        for d in range(0, nu_lower - d_nu - 1):
            _merge(intervals, (BoundFunction.LAMBDA, d, k), None, d_nu + d + 2, nu_from)

    derived = []
    for (function, d, k), iv in sorted(intervals.items(), key=lambda item: (item[0][0].value, item[0][1], item[0][2])):
        derived.append(
            DerivedBound(function=function, d=d, k=k, lower=iv.lower, upper=iv.upper, provenance=iv.provenance())
        )
        if function == BoundFunction.LAMBDA:
            derived.append(
                DerivedBound(
                    function=BoundFunction.MU, d=d + 1, k=k, lower=iv.lower, upper=iv.upper, provenance=iv.provenance()
                )
            )
    derived.sort(key=lambda b: (b.function.value, b.d, b.k))
    logger.info(f"Derived {len(derived)} bounds from {len(table.entries)} table entries")
    return derived


def theorem_bounds(d: int, k: int) -> Dict[str, Tuple[int, int]]:
    """The proved intervals: nu in [d + ceil(d/k) + 1, 2d - k], lambda in [2d + k + 1, (k+1)d + (k+2)]."""
    if k < 1 or d < 1:
        raise InputError("d and k must be positive")
    nu = (d + -(-d // k) + 1, 2 * d - k)
    if nu[0] > nu[1]:
        logger.warning(f"nu({d},{k}) interval [{nu[0]}, {nu[1]}] is empty; reported as stated")
    return {
        "nu": nu,
        "lambda": (2 * d + k + 1, (k + 1) * d + (k + 2)),
    }


def tverberg_bound(d: int, s: int, k: int) -> int:
    """Lower bound (k+1)((s-1)(d-1)+1) on the s-block partition threshold."""
    if d < 1 or s < 1 or k < 0:
        raise InputError("Need d >= 1, s >= 1, k >= 0")
    return (k + 1) * ((s - 1) * (d - 1) + 1)


def table_from_theorem(d_max: int, k: int) -> BoundTable:
    """Lambda upper bounds (k+1)d + (k+2) for d = 0..d_max, as a table."""
    return BoundTable(
        entries=[
            BoundRecord(function=BoundFunction.LAMBDA, d=d, k=k, upper=(k + 1) * d + (k + 2), source=f"partition-upper({d},{k})")
            for d in range(d_max + 1)
        ]
    )


def derived_to_json(bounds: List[DerivedBound]) -> List[dict]:
    return [b.model_dump(mode="json") for b in bounds]


def bounds_certificate(table: BoundTable, max_d: Optional[int] = None) -> Certificate:
    stopwatch = Stopwatch()
    derived = index_relations(table, max_d)
    return make_certificate(
        Claim.BOUNDS,
        {"table": table.model_dump(mode="json"), "max_d": max_d},
        {"derived": derived_to_json(derived)},
        verified=True,
        stopwatch=stopwatch,
        summary={"entries": len(table.entries), "derived": len(derived)},
    )
