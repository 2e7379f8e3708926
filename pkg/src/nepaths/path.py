"""Monotone northeastern lattice paths, validity against a shape, and exact counting.

Two independent counting routes live here on purpose: a memoized dynamic
program (count_paths / CountTable) and a naive depth-first enumeration
(enumerate_paths).  They share no counting logic so that each can serve as an
oracle for the other.
"""

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .shape import Point, Shape

ORACLE_LIMIT = 30

_STEP_DELTA = {"N": (-1, 0), "E": (0, 1)}

_PATH_RE = re.compile(r"\((\d+),(\d+)\):([NE]*)\Z")


class OracleScaleExceeded(RuntimeError):
    """A brute-force enumeration request is too large to run."""


@dataclass(frozen=True)
class Path:
    """A lattice path stored as its start vertex plus a string of N/E steps.

    Every vertex must have non-negative coordinates; construction rejects the
    first offending step.  Vertices are derived lazily and cached, so splitting
    and concatenation are index arithmetic over the step string.
    """

    start: Point
    steps: str = ""

    def __post_init__(self):
        object.__setattr__(self, "start", Point(*self.start))
        row, col = self.start
        if row < 0 or col < 0:
            raise ValueError(f"start {(row, col)} has a negative coordinate")
        for i, step in enumerate(self.steps):
            delta = _STEP_DELTA.get(step)
            if delta is None:
                raise ValueError(f"step {i + 1} is {step!r}, expected 'N' or 'E'")
            row += delta[0]
            col += delta[1]
            if row < 0 or col < 0:
                raise ValueError(f"step {i + 1} moves the path to {(row, col)}, off the grid")

    @cached_property
    def vertices(self) -> tuple[Point, ...]:
        pts = [self.start]
        row, col = self.start
        for step in self.steps:
            dr, dc = _STEP_DELTA[step]
            row += dr
            col += dc
            pts.append(Point(row, col))
        return tuple(pts)

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def end(self) -> Point:
        return self.vertices[-1]

    def vertex(self, t: int) -> Point:
        if not 0 <= t <= self.length:
            raise ValueError(f"vertex index {t} outside 0..{self.length}")
        return self.vertices[t]

    def index_of(self, v: Point) -> int:
        # col - row increases by exactly 1 per step, so a vertex pins its index
        t = (v.col - v.row) - (self.start.col - self.start.row)
        if 0 <= t <= self.length and self.vertices[t] == v:
            return t
        raise ValueError(f"vertex {tuple(v)} not on path {self}")

    def subpath(self, a: int, b: int) -> "Path":
        if not 0 <= a <= b <= self.length:
            raise ValueError(f"subpath bounds {a}..{b} outside 0..{self.length}")
        return Path(self.vertices[a], self.steps[a:b])

    def split(self, t: int) -> tuple["Path", "Path"]:
        return self.subpath(0, t), self.subpath(t, self.length)

    def concat(self, other: "Path") -> "Path":
        if other.start != self.end:
            raise ValueError(f"junction mismatch: {tuple(self.end)} != {tuple(other.start)}")
        return Path(self.start, self.steps + other.steps)

    @cached_property
    def _column_spans(self) -> dict[int, tuple[int, int]]:
        spans: dict[int, tuple[int, int]] = {}
        for row, col in self.vertices:
            lo, hi = spans.get(col, (row, row))
            spans[col] = (min(lo, row), max(hi, row))
        return spans

    @cached_property
    def _row_spans(self) -> dict[int, tuple[int, int]]:
        spans: dict[int, tuple[int, int]] = {}
        for row, col in self.vertices:
            lo, hi = spans.get(row, (col, col))
            spans[row] = (min(lo, col), max(hi, col))
        return spans

    def column_span(self, col: int) -> tuple[int, int]:
        """(exit_row, entry_row) at a column: northmost and southmost row occupied."""
        try:
            return self._column_spans[col]
        except KeyError:
            raise ValueError(f"column {col} outside span of {self}") from None

    def row_span(self, row: int) -> tuple[int, int]:
        """(enter_col, leave_col) at a row: westmost and eastmost column occupied."""
        try:
            return self._row_spans[row]
        except KeyError:
            raise ValueError(f"row {row} outside span of {self}") from None

    def __str__(self) -> str:
        return format_path(self)


def make_path(start: Point | tuple[int, int], steps: str | Iterable[str]) -> Path:
    """Validated Path from a start vertex and a step sequence over {N, E}."""
    if not isinstance(steps, str):
        steps = "".join(steps)
    return Path(Point(*start), steps)


def is_valid_path(shape: Shape, path: Path) -> bool:
    """True iff every vertex of the path stays out of the shape's interior."""
    parts = shape.parts
    k = len(parts)
    for row, col in path.vertices:
        if row < k and col < parts[row]:
            return False
    return True


def enumerate_paths(shape: Shape, m: int, n: int) -> list[Path]:
    """All valid paths from (m, 0) to (0, n), in lexicographic step order.

    Deliberately a naive depth-first search sharing no logic with the dynamic
    program, so the two can cross-check each other.  Refuses m + n above
    ORACLE_LIMIT.
    """
    if m < 0 or n < 0:
        raise ValueError(f"enumeration needs m, n >= 0, got ({m},{n})")
    if m + n > ORACLE_LIMIT:
        raise OracleScaleExceeded(f"oracle scale exceeded: m+n = {m + n} > {ORACLE_LIMIT}")
    minc = [shape.part(i + 1) for i in range(m + 1)]
    if minc[m] > 0 or n < minc[0]:
        return []
    out: list[Path] = []
    steps: list[str] = []

    def walk(row: int, col: int) -> None:
        if row == 0 and col == n:
            out.append(Path(Point(m, 0), "".join(steps)))
            return
        # 'E' < 'N', so try east first to emit lexicographic order
        if col < n and col + 1 >= minc[row]:
            steps.append("E")
            walk(row, col + 1)
            steps.pop()
        if row > 0 and col >= minc[row - 1]:
            steps.append("N")
            walk(row - 1, col)
            steps.pop()

    walk(m, 0)
    return out


class CountTable:
    """Memoized exact counts N(m, n) of valid paths from (m, 0) to (0, n).

    Counts are arbitrary-precision integers.  All public behaviour is that of a
    pure function of (shape, m, n); the memo is an internal detail.
    """

    def __init__(self, shape: Shape):
        self.shape = shape
        self._memo: dict[tuple[int, int], int] = {}

    def count(self, m: int, n: int) -> int:
        if m < 0 or n < 0:
            raise ValueError(f"counts need m, n >= 0, got ({m},{n})")
        if (m, n) not in self._memo:
            self._run_dp(m, n)
        return self._memo[(m, n)]

    def _run_dp(self, m: int, n: int) -> None:
        # column sweep from n down to 0, rows ascending; disallowed vertices count 0
        parts = self.shape.parts
        k = len(parts)
        minc = [parts[i] if i < k else 0 for i in range(m + 1)]
        east: list[int] | None = None
        for j in range(n, -1, -1):
            cur = [0] * (m + 1)
            for i in range(m + 1):
                if j >= minc[i]:
                    if east is None:
                        cur[i] = cur[i - 1] if i else 1
                    else:
                        cur[i] = (cur[i - 1] if i else 0) + east[i]
            east = cur
        assert east is not None
        for i in range(m + 1):
            self._memo[(i, n)] = east[i]


def count_paths(table: CountTable, m: int, n: int) -> int:
    """N(m, n) for the table's shape."""
    return table.count(m, n)


def common_vertices(p: Path, q: Path) -> list[tuple[int, int]]:
    """All shared vertices as (index into p, index into q), in traversal order.

    Shared vertices of two monotone paths form a chain, so the order is
    simultaneous for both paths.
    """
    q_index = {v: i for i, v in enumerate(q.vertices)}
    return [(i, q_index[v]) for i, v in enumerate(p.vertices) if v in q_index]


def column_interval(p: Path, col: int) -> tuple[int, int]:
    """(exit_row, entry_row) occupied by the path at a column; error outside the span."""
    return p.column_span(col)


def row_interval(p: Path, row: int) -> tuple[int, int]:
    """(enter_col, leave_col) occupied by the path at a row; error outside the span."""
    return p.row_span(row)


def parse_path(text: str) -> Path:
    """Parse the canonical "(row,col):NENE" syntax."""
    match = _PATH_RE.fullmatch(text.strip())
    if match is None:
        raise ValueError(f"invalid path {text!r}: expected \"(row,col):STEPS\" with steps over N/E")
    return Path(Point(int(match.group(1)), int(match.group(2))), match.group(3))


def format_path(p: Path) -> str:
    return f"({p.start.row},{p.start.col}):{p.steps}"


def path_to_json(p: Path) -> dict:
    """JSON object form: {"start": [row, col], "steps": "NENE"}."""
    return {"start": [p.start.row, p.start.col], "steps": p.steps}


def path_from_json(obj: dict) -> Path:
    return make_path(Point(obj["start"][0], obj["start"][1]), obj["steps"])
