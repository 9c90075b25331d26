from enum import Enum
from typing import Any, Dict, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from neighborly.errors import InputError


class TravelKind(str, Enum):
    PLAIN = "plain"
    TOP = "top"
    BOTTOM = "bottom"


class Segment(BaseModel):
    """Cells (row, start..end) of one row; bottom travels run right to left."""

    model_config = ConfigDict(frozen=True)

    row: int
    start: int
    end: int


class Travel(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: TravelKind
    segments: Tuple[Segment, ...]

    @model_validator(mode="after")
    def check_contiguous(self) -> "Travel":
        if not self.segments:
            raise ValueError("a travel visits at least one row")
        step = -1 if self.kind == TravelKind.BOTTOM else 1
        for previous, current in zip(self.segments, self.segments[1:]):
            if current.row != previous.row + step:
                raise ValueError("travel rows must be consecutive")
            if current.start != previous.end:
                raise ValueError("each segment starts at the previous segment's end column")
        for segment in self.segments:
            if self.kind == TravelKind.BOTTOM and segment.end > segment.start:
                raise ValueError("bottom travel segments run leftwards")
            if self.kind != TravelKind.BOTTOM and segment.end < segment.start:
                raise ValueError("top and plain travel segments run rightwards")
        return self

    @property
    def breakpoints(self) -> Tuple[int, ...]:
        return tuple(segment.end for segment in self.segments)

    @property
    def last(self) -> Segment:
        return self.segments[-1]

    def cells(self) -> List[Tuple[int, int]]:
        """Visited entries in travel order."""
        visited: List[Tuple[int, int]] = []
        for segment in self.segments:
            step = 1 if segment.end >= segment.start else -1
            visited.extend((segment.row, j) for j in range(segment.start, segment.end + step, step))
        return visited

    def to_json(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "breakpoints": list(self.breakpoints)}

    @classmethod
    def from_breakpoints(
        cls, kind: TravelKind, breakpoints: Sequence[int], r: int, n: int
    ) -> "Travel":
        if not breakpoints or len(breakpoints) > r:
            raise InputError(f"A travel on {r} rows needs 1..{r} breakpoints, got {len(breakpoints)}")
        segments = []
        if kind == TravelKind.BOTTOM:
            start, row = n, r
            for end in breakpoints:
                segments.append(Segment(row=row, start=start, end=end))
                start, row = end, row - 1
        else:
            start, row = 1, 1
            for end in breakpoints:
                segments.append(Segment(row=row, start=start, end=end))
                start, row = end, row + 1
        try:
            return cls(kind=kind, segments=tuple(segments))
        except ValueError as exc:
            raise InputError(f"Breakpoints {list(breakpoints)} do not form a {kind.value} travel: {exc}")

    @classmethod
    def from_json(cls, payload: Dict[str, Any], r: int, n: int) -> "Travel":
        try:
            kind = TravelKind(payload["kind"])
            breakpoints = [int(b) for b in payload["breakpoints"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"Malformed travel object: {exc}")
        return cls.from_breakpoints(kind, breakpoints, r, n)
