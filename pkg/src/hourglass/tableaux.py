"""Rectangular standard Young tableaux, promotion, and promotion permutations.

Entries are the numbers 1..n stored row-major, strictly increasing along
rows and columns.  Promotion permutations use representatives in {1,..,n}
for the congruence prom_i(T)(j) = a + j - 1 (mod n); the class is always
reduced into {1,..,n}, never 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .permutation import Permutation


@dataclass(frozen=True)
class RectTableau:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        r, d = self.rows, self.cols
        if r < 1 or d < 1:
            raise ValueError("tableau shape must be at least 1x1")
        if len(self.entries) != r or any(len(row) != d for row in self.entries):
            raise ValueError("entries do not match the declared shape")
        n = r * d
        if sorted(v for row in self.entries for v in row) != list(range(1, n + 1)):
            raise ValueError("entries must be exactly {1,..,n}")
        for row in self.entries:
            if any(row[j] >= row[j + 1] for j in range(d - 1)):
                raise ValueError("rows must strictly increase")
        for j in range(d):
            if any(self.entries[i][j] >= self.entries[i + 1][j] for i in range(r - 1)):
                raise ValueError("columns must strictly increase")

    @property
    def n(self) -> int:
        return self.rows * self.cols

    def column(self, j: int) -> tuple[int, ...]:
        """The j-th column (1-indexed)."""
        return tuple(row[j - 1] for row in self.entries)

    def transpose(self) -> "RectTableau":
        return RectTableau(
            self.cols, self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows))
                  for j in range(self.cols)),
        )

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [list(row) for row in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> "RectTableau":
        return cls(data["rows"], data["cols"],
                   tuple(tuple(row) for row in data["entries"]))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "RectTableau":
        return cls(len(rows), len(rows[0]), tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "RectTableau":
        r, d = len(cols[0]), len(cols)
        return cls(r, d, tuple(tuple(cols[j][i] for j in range(d)) for i in range(r)))


@dataclass(frozen=True)
class PromotionRecord:
    """Result of one promotion step.

    ``path`` lists the cells (1-indexed) whose entries slid, in slide order;
    it starts adjacent to (1,1) and ends at (rows, cols).
    ``row_crossing_values[i]`` (keys 1..rows-1) is the entry that moved from
    row i+1 up to row i; for rectangles every row boundary is crossed once.
    """
    result: RectTableau
    path: tuple[tuple[int, int], ...]
    row_crossing_values: dict[int, int]


def promotion(T: RectTableau) -> PromotionRecord:
    """Jeu de taquin promotion: delete 1, slide, refill with n, shift down."""
    r, d, n = T.rows, T.cols, T.n
    grid = [list(row) for row in T.entries]
    hole_i, hole_j = 0, 0
    path: list[tuple[int, int]] = []
    crossings: dict[int, int] = {}
    while True:
        right = grid[hole_i][hole_j + 1] if hole_j + 1 < d else None
        below = grid[hole_i + 1][hole_j] if hole_i + 1 < r else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            grid[hole_i][hole_j] = right
            hole_j += 1
        else:
            grid[hole_i][hole_j] = below
            crossings[hole_i + 1] = below
            hole_i += 1
        path.append((hole_i + 1, hole_j + 1))
    grid[hole_i][hole_j] = n + 1
    result = RectTableau(r, d, tuple(tuple(v - 1 for v in row) for row in grid))
    return PromotionRecord(result, tuple(path), crossings)


def promotion_power(T: RectTableau, k: int) -> RectTableau:
    for _ in range(k):
        T = promotion(T).result
    return T


def evacuation(T: RectTableau) -> RectTableau:
    """Schuetzenberger evacuation by iterated delete-min sliding.

    Repeatedly remove the smallest active entry, slide the hole outward,
    and record n+1-k in the vacated corner.
    """
    r, d, n = T.rows, T.cols, T.n
    grid = [list(row) for row in T.entries]
    active = [[True] * d for _ in range(r)]
    out = [[0] * d for _ in range(r)]
    for k in range(1, n + 1):
        # min active entry always sits at (0, 0)
        i, j = 0, 0
        while True:
            right = grid[i][j + 1] if j + 1 < d and active[i][j + 1] else None
            below = grid[i + 1][j] if i + 1 < r and active[i + 1][j] else None
            if right is None and below is None:
                break
            if below is None or (right is not None and right < below):
                grid[i][j] = right
                j += 1
            else:
                grid[i][j] = below
                i += 1
        active[i][j] = False
        out[i][j] = n + 1 - k
    return RectTableau(r, d, tuple(tuple(row) for row in out))


def prom_perm(T: RectTableau, i: int) -> Permutation:
    """The i-th promotion permutation, 1 <= i <= rows-1.

    prom_i(T)(j) = a + j - 1 reduced into {1,..,n}, where a is the value
    crossing from row i+1 to row i while promoting promotion^(j-1)(T).
    """
    if not 1 <= i <= T.rows - 1:
        raise ValueError(f"row index i={i} out of range 1..{T.rows - 1}")
    n = T.n
    images = []
    cur = T
    for j in range(1, n + 1):
        rec = promotion(cur)
        a = rec.row_crossing_values[i]
        images.append((a + j - 2) % n + 1)
        cur = rec.result
    return Permutation(images)


def prom_all(T: RectTableau) -> tuple[Permutation, ...]:
    """(prom_1(T), ..., prom_{r-1}(T)); empty for a single-row shape."""
    n = T.n
    runs: list[list[int]] = [[] for _ in range(T.rows - 1)]
    cur = T
    for j in range(1, n + 1):
        rec = promotion(cur)
        for i in range(1, T.rows):
            a = rec.row_crossing_values[i]
            runs[i - 1].append((a + j - 2) % n + 1)
        cur = rec.result
    return tuple(Permutation(run) for run in runs)


def prom1_via_matching(T: RectTableau) -> tuple[int, ...]:
    """(prom_1(T)(1), ..., prom_{r-1}(T)(1)) for a two-column tableau.

    Read off the noncrossing matching of T: the openers strictly between 1
    and its partner, then the closers strictly beyond the partner.
    """
    if T.cols != 2:
        raise ValueError("defined only for shape r x 2")
    from .matchings import matching_from_tableau

    M = matching_from_tableau(T)
    barrier = M.partner(1)
    openers = [x for x in range(2, barrier) if M.partner(x) > x]
    closers = [x for x in range(barrier + 1, M.n_points + 1) if M.partner(x) < x]
    return tuple(openers + closers)


def standard_tableaux(rows: int, cols: int) -> Iterator[RectTableau]:
    """All standard Young tableaux of the given rectangular shape."""
    r, d, n = rows, cols, rows * cols
    grid = [[0] * d for _ in range(r)]
    filled = [0] * r  # number of filled cells per row

    def place(v: int) -> Iterator[RectTableau]:
        if v > n:
            yield RectTableau(r, d, tuple(tuple(row) for row in grid))
            return
        for i in range(r):
            j = filled[i]
            if j < d and (i == 0 or filled[i - 1] > j):
                grid[i][j] = v
                filled[i] += 1
                yield from place(v + 1)
                filled[i] -= 1
        return

    yield from place(1)


def superstandard(rows: int, cols: int) -> RectTableau:
    """Filled left to right, then top to bottom."""
    it = iter(range(1, rows * cols + 1))
    return RectTableau(rows, cols,
                       tuple(tuple(next(it) for _ in range(cols)) for _ in range(rows)))


def column_superstandard(rows: int) -> RectTableau:
    """The r x 2 tableau with left column 1..r."""
    return RectTableau(rows, 2, tuple((i, rows + i) for i in range(1, rows + 1)))


def column_tableau(rows: int) -> RectTableau:
    """The unique tableau of shape r x 1."""
    return RectTableau(rows, 1, tuple((i,) for i in range(1, rows + 1)))
