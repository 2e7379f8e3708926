"""Ferrers shapes as grid obstacles: partitions, conjugation, allowed vertices."""

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple


class Point(NamedTuple):
    """Grid vertex; row counts units south of the top edge, col units east of the left edge."""

    row: int
    col: int


@dataclass(frozen=True)
class Shape:
    """Partition with weakly decreasing positive parts, anchored at the grid's northwest corner.

    Cell (r, c) of the diagram, 1-indexed, covers the unit square whose corner
    vertices are (r-1, c-1) and (r, c).  The empty shape is ``Shape()``.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"part {i + 1} is {p}; stored parts must be positive")
            if i and parts[i - 1] < p:
                raise ValueError(f"not weakly decreasing at index {i + 1}")

    def part(self, t: int) -> int:
        """Length of row t (1-indexed); 0 beyond the last row."""
        if t < 1:
            raise ValueError(f"row index must be >= 1, got {t}")
        return self.parts[t - 1] if t <= len(self.parts) else 0

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    @property
    def width(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def cell_count(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Shape":
        """Transpose of the diagram: part t of the result counts rows of length >= t."""
        return Shape(tuple(sum(1 for p in self.parts if p >= t) for t in range(1, self.width + 1)))

    def is_self_conjugate(self) -> bool:
        return self.conjugate() == self

    def __str__(self) -> str:
        return format_shape(self)


def make_shape(parts: Iterable[int]) -> Shape:
    """Build a Shape from raw user input.

    Trailing zeros are trimmed; negative entries and increases are rejected with
    a diagnostic naming the offending (1-based) index.
    """
    vals = list(parts)
    for i, p in enumerate(vals):
        if p < 0:
            raise ValueError(f"negative part at index {i + 1}")
        if i and vals[i - 1] < p:
            raise ValueError(f"not weakly decreasing at index {i + 1}")
    while vals and vals[-1] == 0:
        vals.pop()
    return Shape(tuple(vals))


def conjugate(shape: Shape) -> Shape:
    return shape.conjugate()


def is_self_conjugate(shape: Shape) -> bool:
    return shape.is_self_conjugate()


def vertex_allowed(shape: Shape, v: Point) -> bool:
    """True when v lies weakly southeast of the shape's staircase boundary.

    Paths may touch the staircase but never cross to its northwest side, so a
    vertex in row i is allowed exactly when its column is at least part(i + 1).
    Vertices strictly inside the diagram, or on its west/north border segments,
    are disallowed.
    """
    row, col = v
    return col >= shape.part(row + 1)


def parse_shape(text: str) -> Shape:
    """Parse the comma-separated syntax used by the CLI and JSON; "" and "0" mean empty."""
    body = text.strip()
    if body in ("", "0"):
        return Shape()
    try:
        vals = [int(tok.strip()) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"invalid shape {text!r}: parts must be comma-separated integers") from None
    return make_shape(vals)


def format_shape(shape: Shape) -> str:
    """Inverse of parse_shape; the empty shape prints as "0"."""
    return ",".join(str(p) for p in shape.parts) if shape.parts else "0"


def _partitions(total: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(1, min(total, max_part) + 1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def enumerate_shapes(max_cells: int) -> Iterator[Shape]:
    """All shapes with at most max_cells cells, by cell count then lexicographic parts."""
    if max_cells < 0:
        raise ValueError(f"max_cells must be >= 0, got {max_cells}")
    for cells in range(max_cells + 1):
        for parts in _partitions(cells, cells if cells else 1):
            yield Shape(parts)


def shapes_in_box(max_rows: int, max_cols: int) -> Iterator[Shape]:
    """All shapes fitting in a max_rows x max_cols box, in enumerate_shapes order."""
    for shape in enumerate_shapes(max_rows * max_cols):
        if shape.num_parts <= max_rows and shape.width <= max_cols:
            yield shape
