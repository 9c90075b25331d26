from fractions import Fraction
from typing import Any, List, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from neighborly.utils.rationals import Rational, format_vector

GEOMETRY_CONFIG = ConfigDict(frozen=True, arbitrary_types_allowed=True)


def _check_vectors(vectors: Tuple[Tuple[Fraction, ...], ...]) -> Tuple[Tuple[Fraction, ...], ...]:
    if not vectors:
        raise ValueError("at least one vector is required")
    if len({len(v) for v in vectors}) != 1:
        raise ValueError("all vectors must have the same dimension")
    if len(vectors[0]) == 0:
        raise ValueError("vectors must have positive dimension")
    return vectors


class PointConfig(BaseModel):
    """Points x_1..x_n in R^d with exact rational coordinates."""

    model_config = GEOMETRY_CONFIG

    points: Tuple[Tuple[Rational, ...], ...]

    @field_validator("points")
    @classmethod
    def check_points(cls, points: Tuple[Tuple[Fraction, ...], ...]) -> Tuple[Tuple[Fraction, ...], ...]:
        return _check_vectors(points)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def d(self) -> int:
        return len(self.points[0])

    @property
    def labels(self) -> Tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def point(self, label: int) -> Tuple[Fraction, ...]:
        return self.points[label - 1]

    def to_json(self) -> List[List[str]]:
        return [format_vector(p) for p in self.points]

    @classmethod
    def of(cls, points: Any) -> "PointConfig":
        return cls(points=tuple(tuple(p) for p in points))


class GaleDiagram(BaseModel):
    """Vectors in R^(n-d-1), one per point of the source configuration."""

    model_config = GEOMETRY_CONFIG

    vectors: Tuple[Tuple[Rational, ...], ...]

    @field_validator("vectors")
    @classmethod
    def check_vectors(cls, vectors: Tuple[Tuple[Fraction, ...], ...]) -> Tuple[Tuple[Fraction, ...], ...]:
        return _check_vectors(vectors)

    @property
    def n(self) -> int:
        return len(self.vectors)

    @property
    def dim(self) -> int:
        return len(self.vectors[0])

    def flipped(self, signs: "SignVector") -> "GaleDiagram":
        return GaleDiagram(
            vectors=tuple(tuple(e * x for x in v) for e, v in zip(signs.signs, self.vectors))
        )

    def to_json(self) -> List[List[str]]:
        return [format_vector(v) for v in self.vectors]


class SignVector(BaseModel):
    model_config = ConfigDict(frozen=True)

    signs: Tuple[int, ...]

    @field_validator("signs")
    @classmethod
    def check_signs(cls, signs: Tuple[int, ...]) -> Tuple[int, ...]:
        if not signs:
            raise ValueError("empty sign vector")
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1 or -1")
        return signs

    @property
    def n(self) -> int:
        return len(self.signs)

    def to_text(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)


class ProjectiveMap(BaseModel):
    """P(x) = (A x + b) / (<c, x> + delta)."""

    model_config = GEOMETRY_CONFIG

    A: Tuple[Tuple[Rational, ...], ...]
    b: Tuple[Rational, ...]
    c: Tuple[Rational, ...]
    delta: Rational

    @model_validator(mode="after")
    def check_shapes(self) -> "ProjectiveMap":
        d = len(self.b)
        if len(self.A) != d or any(len(row) != d for row in self.A) or len(self.c) != d:
            raise ValueError("A must be d x d and b, c must have length d")
        return self

    @property
    def d(self) -> int:
        return len(self.b)

    def lifted(self) -> List[List[Fraction]]:
        rows = [list(row) + [self.b[i]] for i, row in enumerate(self.A)]
        rows.append(list(self.c) + [self.delta])
        return rows

    def to_json(self) -> dict:
        return self.model_dump(mode="json")


class Partition(BaseModel):
    """A bipartition of labels; A always holds label 1 when built by the search."""

    model_config = ConfigDict(frozen=True)

    a: Tuple[int, ...]
    b: Tuple[int, ...]

    @model_validator(mode="after")
    def check_blocks(self) -> "Partition":
        if not self.a or not self.b:
            raise ValueError("both sides of a partition must be nonempty")
        if set(self.a) & set(self.b):
            raise ValueError("partition sides must be disjoint")
        if list(self.a) != sorted(self.a) or list(self.b) != sorted(self.b):
            raise ValueError("partition sides must be sorted")
        return self

    @property
    def labels(self) -> Tuple[int, ...]:
        return tuple(sorted(self.a + self.b))


class Hyperplane(BaseModel):
    """{x : <normal, x> = offset}; A lies on the positive side."""

    model_config = GEOMETRY_CONFIG

    normal: Tuple[Rational, ...]
    offset: Rational
