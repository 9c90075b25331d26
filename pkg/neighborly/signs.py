"""Lawrence oriented matroids as +1/-1 matrices.

A rank-r Lawrence oriented matroid on n ordered elements is stored as the
r x n matrix of its r rank-one factors. Bases are increasing r-tuples of
columns, one per row, and circuits are the (r+1)-subsets of columns.
"""

import logging
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Set, Tuple, Union

from neighborly.errors import ContractViolationError, InputError
from neighborly.models.signs import Chessboard, ReorientationSet, SignedCircuit, SignMatrix

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]
ColumnsLike = Union[ReorientationSet, Iterable[int]]


def _columns(m: SignMatrix, s: ColumnsLike) -> Tuple[int, ...]:
    columns = s.columns if isinstance(s, ReorientationSet) else tuple(s)
    for j in columns:
        if not 1 <= j <= m.n:
            raise InputError(f"Column {j} outside 1..{m.n}")
    if len(set(columns)) != len(columns):
        raise InputError("Reorientation columns must be distinct")
    return columns


def flip_mask(n: int, columns: Iterable[int]) -> Tuple[int, ...]:
    """Per-column multipliers for a reorientation (1-based columns)."""
    mask = [1] * n
    for j in columns:
        mask[j - 1] = -1
    return tuple(mask)


def reorient(m: SignMatrix, s: ColumnsLike) -> SignMatrix:
    """Negate every entry of the columns in s."""
    mask = flip_mask(m.n, _columns(m, s))
    return SignMatrix(rows=tuple(tuple(v * f for v, f in zip(row, mask)) for row in m.rows))


def negate_row(m: SignMatrix, i: int) -> SignMatrix:
    if not 1 <= i <= m.r:
        raise InputError(f"Row {i} outside 1..{m.r}")
    rows = list(m.rows)
    rows[i - 1] = tuple(-v for v in rows[i - 1])
    return SignMatrix(rows=tuple(rows))


def rotate_half_turn(m: SignMatrix) -> SignMatrix:
    """Reverse both the row order and the column order."""
    return SignMatrix(rows=tuple(tuple(reversed(row)) for row in reversed(m.rows)))


def _check_increasing(m: SignMatrix, indices: Sequence[int], size: int, what: str) -> None:
    if len(indices) != size:
        raise InputError(f"A {what} of a rank-{m.r} matrix has {size} columns, got {len(indices)}")
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise InputError(f"{what.capitalize()} columns must be strictly increasing")
    if indices and not (1 <= indices[0] and indices[-1] <= m.n):
        raise InputError(f"{what.capitalize()} columns must lie in 1..{m.n}")


def chirotope(m: SignMatrix, basis: Sequence[int]) -> int:
    """Product of a[i][j_i] over the increasing basis j_1 < ... < j_r."""
    _check_increasing(m, basis, m.r, "basis")
    product = 1
    for i, j in enumerate(basis):
        product *= m.rows[i][j - 1]
    return product


def circuit_signs(m: SignMatrix, support: Sequence[int]) -> SignedCircuit:
    """Signed circuit on an (r+1)-subset of columns, in canonical form.

    Element i of the support gets (-1)^i times the chirotope of the support
    without it; the pair is then scaled so the first element is positive.
    """
    _check_increasing(m, support, m.r + 1, "circuit support")
    signs = []
    for i in range(1, len(support) + 1):
        rest = tuple(support[:i - 1]) + tuple(support[i:])
        signs.append((-1) ** i * chirotope(m, rest))
    if signs[0] < 0:
        signs = [-s for s in signs]
    return SignedCircuit(support=tuple(support), signs=tuple(signs))


def enumerate_circuits(m: SignMatrix) -> List[SignedCircuit]:
    if m.n <= m.r:
        return []
    return [circuit_signs(m, support) for support in combinations(range(1, m.n + 1), m.r + 1)]


def is_acyclic_bruteforce(m: SignMatrix) -> bool:
    """True iff no circuit (or its negation) is uniformly signed."""
    if m.n <= m.r:
        raise InputError(f"Acyclicity needs n >= r+1, got a {m.r}x{m.n} matrix")
    return not any(circuit.is_uniform() for circuit in enumerate_circuits(m))


def acyclic_reorientations_bruteforce(m: SignMatrix) -> List[ReorientationSet]:
    """Acyclic reorientation classes {S, complement}, each listed by the member avoiding column 1."""
    found = []
    for size in range(m.n):
        for columns in combinations(range(2, m.n + 1), size):
            if is_acyclic_bruteforce(reorient(m, columns)):
                found.append(ReorientationSet.of(columns))
    return found


def chessboard_of(m: SignMatrix) -> Chessboard:
    if m.r < 2 or m.n < 2:
        raise InputError(f"A chessboard needs r, n >= 2, got {m.r}x{m.n}")
    a = m.rows
    return Chessboard(
        black=tuple(
            tuple(a[i][j] * a[i][j + 1] * a[i + 1][j] * a[i + 1][j + 1] == -1 for j in range(m.n - 1))
            for i in range(m.r - 1)
        )
    )


def staircase_runs(b: Chessboard) -> List[Tuple[int, int]]:
    """Black run (first, last) of every board row, validating the staircase shape.

    Every row must hold one contiguous nonempty run, and each run must start
    one column after the previous row's run ends.
    """
    runs: List[Tuple[int, int]] = []
    for i in range(1, b.rows + 1):
        columns = [j for j in range(1, b.cols + 1) if b.is_black(i, j)]
        if not columns:
            raise ContractViolationError(f"Board row {i} has no black cell", {"row": i})
        first, last = columns[0], columns[-1]
        if last - first + 1 != len(columns):
            raise ContractViolationError(f"Board row {i} has a gap in its black run", {"row": i})
        if runs and first != runs[-1][1] + 1:
            raise ContractViolationError(
                f"Board row {i} starts at column {first}, expected {runs[-1][1] + 1}",
                {"row": i, "first": first},
            )
        runs.append((first, last))
    return runs


def diagonal_sets(b: Chessboard) -> Tuple[FrozenSet[Cell], FrozenSet[Cell]]:
    """Matrix entries touching the black diagonal from above (UD) and below (LD)."""
    staircase_runs(b)
    r, n = b.rows + 1, b.cols + 1
    upper: Set[Cell] = set()
    lower: Set[Cell] = set()
    for i in range(1, r + 1):
        for j in range(1, n + 1):
            if b.is_black(i, j) or b.is_black(i, j - 1):
                upper.add((i, j))
            if b.is_black(i - 1, j - 1) or b.is_black(i - 1, j):
                lower.add((i, j))
    return frozenset(upper), frozenset(lower)


def matrix_from_code(r: int, n: int, code: int) -> SignMatrix:
    """Bit (i-1)*n + (j-1) of code set means a[i][j] = -1."""
    return SignMatrix(rows=rows_from_code(r, n, code))


def rows_from_code(r: int, n: int, code: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(
        tuple(-1 if (code >> (i * n + j)) & 1 else 1 for j in range(n)) for i in range(r)
    )


def code_of(m: SignMatrix) -> int:
    code = 0
    for i, row in enumerate(m.rows):
        for j, v in enumerate(row):
            if v < 0:
                code |= 1 << (i * m.n + j)
    return code


def all_sign_matrices(r: int, n: int) -> Iterator[SignMatrix]:
    for code in range(1 << (r * n)):
        yield matrix_from_code(r, n, code)
