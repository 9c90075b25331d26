from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from neighborly.models.signs import Chessboard


class FamilyParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    r: int = Field(ge=2)
    k: int = Field(ge=2)
    l: Optional[int] = None

    @property
    def n(self) -> int:
        if self.k == 2:
            return 2 * (self.r - 1) + 1
        return 2 * (self.r - 1) - (self.k - 2) + 1

    @property
    def s(self) -> Optional[int]:
        """Period of the single-block rows (k >= 3 only)."""
        if self.k == 2:
            return None
        return -(-(self.r - 1) // (self.k - 2))

    @property
    def satisfies_side_condition(self) -> bool:
        """3 <= k <= floor(r/2), the range the general family is stated for."""
        return 3 <= self.k <= self.r // 2

    @property
    def claim(self) -> str:
        return "lemma-lbase" if self.k == 2 else "lemma-general"


class FamilyBoard(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: FamilyParams
    board: Chessboard
    single_rows: Tuple[int, ...] = ()

    @property
    def r(self) -> int:
        return self.params.r

    @property
    def n(self) -> int:
        return self.params.n

    def is_half_turn_symmetric(self) -> bool:
        cells = set(self.board.black_cells())
        return cells == {(self.r - i, self.n - j) for i, j in cells}
