from enum import Enum
from typing import Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from neighborly.errors import InputError


class Color(str, Enum):
    BLACK = "black"
    WHITE = "white"


class SignMatrix(BaseModel):
    """An r x n matrix of +1/-1 entries, addressed 1-based."""

    model_config = ConfigDict(frozen=True)

    rows: Tuple[Tuple[int, ...], ...]

    @field_validator("rows")
    @classmethod
    def check_rows(cls, rows: Tuple[Tuple[int, ...], ...]) -> Tuple[Tuple[int, ...], ...]:
        if not rows or not rows[0]:
            raise ValueError("a sign matrix needs at least one row and one column")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ValueError("ragged sign matrix")
            if any(v not in (1, -1) for v in row):
                raise ValueError("entries must be +1 or -1")
        return rows

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.r and 1 <= j <= self.n):
            raise InputError(f"Entry ({i},{j}) outside a {self.r}x{self.n} matrix")
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(self.entry(i, j) for i in range(1, self.r + 1))

    def to_text(self) -> str:
        return "\n".join("".join("+" if v > 0 else "-" for v in row) for row in self.rows)

    @classmethod
    def from_text(cls, text: str) -> "SignMatrix":
        lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
        rows = []
        for number, line in enumerate(lines, start=1):
            if any(ch not in "+-" for ch in line):
                raise InputError(f"Line {number} of the matrix has characters other than + and -")
            rows.append(tuple(1 if ch == "+" else -1 for ch in line))
        if not rows:
            raise InputError("Empty matrix text")
        if len({len(row) for row in rows}) != 1:
            raise InputError("Ragged matrix text: all lines must have the same length")
        return cls(rows=tuple(rows))

    @classmethod
    def constant(cls, r: int, n: int, value: int = 1) -> "SignMatrix":
        return cls(rows=tuple(tuple([value] * n) for _ in range(r)))


class ReorientationSet(BaseModel):
    """A set S of columns to negate, kept sorted."""

    model_config = ConfigDict(frozen=True)

    columns: Tuple[int, ...] = ()

    @field_validator("columns")
    @classmethod
    def check_columns(cls, columns: Tuple[int, ...]) -> Tuple[int, ...]:
        if len(set(columns)) != len(columns):
            raise ValueError("reorientation columns must be distinct")
        if any(c < 1 for c in columns):
            raise ValueError("reorientation columns are 1-based")
        return tuple(sorted(columns))

    @classmethod
    def of(cls, columns: Iterable[int]) -> "ReorientationSet":
        return cls(columns=tuple(columns))

    def __len__(self) -> int:
        return len(self.columns)

    def __contains__(self, column: object) -> bool:
        return column in self.columns


class SignedCircuit(BaseModel):
    model_config = ConfigDict(frozen=True)

    support: Tuple[int, ...]
    signs: Tuple[int, ...]

    @model_validator(mode="after")
    def check_shape(self) -> "SignedCircuit":
        if len(self.support) != len(self.signs):
            raise ValueError("support and signs differ in length")
        if list(self.support) != sorted(set(self.support)):
            raise ValueError("support must be strictly increasing")
        return self

    @property
    def positive(self) -> Tuple[int, ...]:
        return tuple(e for e, s in zip(self.support, self.signs) if s > 0)

    @property
    def negative(self) -> Tuple[int, ...]:
        return tuple(e for e, s in zip(self.support, self.signs) if s < 0)

    def negated(self) -> "SignedCircuit":
        return SignedCircuit(support=self.support, signs=tuple(-s for s in self.signs))

    def is_uniform(self) -> bool:
        return len(set(self.signs)) == 1


class Chessboard(BaseModel):
    """The (r-1) x (n-1) board of 2x2 products; True marks a black cell."""

    model_config = ConfigDict(frozen=True)

    black: Tuple[Tuple[bool, ...], ...]

    @field_validator("black")
    @classmethod
    def check_board(cls, black: Tuple[Tuple[bool, ...], ...]) -> Tuple[Tuple[bool, ...], ...]:
        if not black or not black[0]:
            raise ValueError("a chessboard needs at least one cell")
        if len({len(row) for row in black}) != 1:
            raise ValueError("ragged chessboard")
        return black

    @property
    def rows(self) -> int:
        return len(self.black)

    @property
    def cols(self) -> int:
        return len(self.black[0])

    def is_black(self, i: int, j: int) -> bool:
        """Cells outside the board count as white."""
        if 1 <= i <= self.rows and 1 <= j <= self.cols:
            return self.black[i - 1][j - 1]
        return False

    def color(self, i: int, j: int) -> Color:
        return Color.BLACK if self.is_black(i, j) else Color.WHITE

    def black_cells(self) -> List[Tuple[int, int]]:
        return [
            (i + 1, j + 1)
            for i, row in enumerate(self.black)
            for j, cell in enumerate(row)
            if cell
        ]

    @classmethod
    def from_cells(cls, rows: int, cols: int, cells: Iterable[Tuple[int, int]]) -> "Chessboard":
        grid = [[False] * cols for _ in range(rows)]
        for i, j in cells:
            if not (1 <= i <= rows and 1 <= j <= cols):
                raise InputError(f"Cell ({i},{j}) outside a {rows}x{cols} board")
            grid[i - 1][j - 1] = True
        return cls(black=tuple(tuple(row) for row in grid))

    def to_text(self) -> str:
        return "\n".join("".join("#" if cell else "." for cell in row) for row in self.black)
