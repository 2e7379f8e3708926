"""Invertible cut-and-shift transformations on pairs of monotone lattice paths.

Three maps, each with a deterministic inverse:

* psi: swap tails at the first common vertex of a crossing pair.
* phi: cut at the first unit-vertical-distance pair, shift the prefixes one
  unit toward each other, swap suffixes.
* phibar: a double cut, vertical on the southwest side and horizontal on the
  northeast side, with unit shifts in all four directions.

Sign conventions, fixed module-wide: the vertical distance from p to q at a
shared column is q.row - p.row; the horizontal distance at a shared row is
p.col - q.col.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .path import Path, common_vertices, is_valid_path
from .shape import Point, Shape


class PathPair(NamedTuple):
    first: Path
    second: Path


@dataclass(frozen=True)
class CutPair:
    """Matched vertex pair found by a distance scan over two paths.

    A vertical cut shares a column and q_vertex.row - p_vertex.row equals the
    recorded distance; a horizontal cut shares a row and p_vertex.col -
    q_vertex.col equals it.
    """

    p_index: int
    q_index: int
    p_vertex: Point
    q_vertex: Point
    distance: int


_SHIFT_DELTA = {"north": (-1, 0), "south": (1, 0), "east": (0, 1), "west": (0, -1)}


def shift(p: Path, direction: str, amount: int = 1) -> Path:
    """Translate a whole path; steps are unchanged.  Errors on coordinate underflow."""
    if direction not in _SHIFT_DELTA:
        raise ValueError(f"unknown direction {direction!r}")
    if amount < 1:
        raise ValueError(f"shift amount must be positive, got {amount}")
    dr, dc = _SHIFT_DELTA[direction]
    # rows weakly decrease along a path and columns weakly increase, so the
    # minimum row sits at the end and the minimum column at the start
    if dr < 0 and p.end.row - amount < 0:
        raise ValueError(f"coordinate underflow: cannot move {p} north by {amount}")
    if dc < 0 and p.start.col - amount < 0:
        raise ValueError(f"coordinate underflow: cannot move {p} west by {amount}")
    return Path(Point(p.start.row + dr * amount, p.start.col + dc * amount), p.steps)


def first_vertical_pair(p: Path, q: Path, d: int) -> Optional[CutPair]:
    """First (most southwest) vertex pair of p and q at vertical distance d.

    Scans shared columns west to east; distances are evaluated over all
    same-column vertex pairs, not positionally synchronized traversal.  Within
    the first admissible column the southmost admissible p-vertex is chosen.
    Returns None when no column qualifies.
    """
    lo = max(p.start.col, q.start.col)
    hi = min(p.end.col, q.end.col)
    for j in range(lo, hi + 1):
        p_exit, p_entry = p.column_span(j)
        q_exit, q_entry = q.column_span(j)
        south = min(p_entry, q_entry - d)
        if max(p_exit, q_exit - d) <= south:
            pv = Point(south, j)
            qv = Point(south + d, j)
            return CutPair(p.index_of(pv), q.index_of(qv), pv, qv, d)
    return None


def last_horizontal_pair(p: Path, q: Path, h: int) -> Optional[CutPair]:
    """Last (most northeast) vertex pair of p and q at horizontal distance h.

    Mirror of first_vertical_pair under the transpose: scans shared rows north
    to south, i.e. the least row first, and within it picks the eastmost
    admissible p-vertex.  Returns None when no row qualifies.
    """
    lo = max(p.end.row, q.end.row)
    hi = min(p.start.row, q.start.row)
    for i in range(lo, hi + 1):
        p_enter, p_leave = p.row_span(i)
        q_enter, q_leave = q.row_span(i)
        east = min(p_leave, q_leave + h)
        if max(p_enter, q_enter + h) <= east:
            pv = Point(i, east)
            qv = Point(i, east - h)
            return CutPair(p.index_of(pv), q.index_of(qv), pv, qv, h)
    return None


def _require_valid(shape: Shape, p: Path, label: str) -> None:
    if not is_valid_path(shape, p):
        raise ValueError(f"{label} {p} enters the shape's interior")


def _require_corner_to_corner(p: Path, label: str) -> None:
    if p.start.col != 0 or p.end.row != 0:
        raise ValueError(f"{label} {p} must run from column 0 to row 0")


def _tail_swap(p: Path, q: Path) -> Optional[PathPair]:
    common = common_vertices(p, q)
    if not common:
        return None
    ip, iq = common[0]
    p1, p2 = p.split(ip)
    q1, q2 = q.split(iq)
    return PathPair(p1.concat(q2), q1.concat(p2))


def psi_forward(shape: Shape, p: Path, q: Path) -> PathPair:
    """Tail swap at the first common vertex.

    Domain: p from (m, 0) to (0, n+1) and q from (m+1, 0) to (0, n), both valid
    for the shape; such a pair always crosses.  The output pair runs from
    (m, 0) to (0, n) and from (m+1, 0) to (0, n+1), and applying the identical
    algorithm to it returns (p, q).
    """
    _require_corner_to_corner(p, "first path")
    _require_corner_to_corner(q, "second path")
    if q.start.row != p.start.row + 1 or p.end.col != q.end.col + 1:
        raise ValueError("endpoint mismatch: expected paths from (m,0) to (0,n+1) and (m+1,0) to (0,n)")
    _require_valid(shape, p, "first path")
    _require_valid(shape, q, "second path")
    out = _tail_swap(p, q)
    if out is None:
        raise ValueError("disjoint pair: the paths share no vertex")
    return out


def psi_inverse(shape: Shape, pair: PathPair) -> Optional[PathPair]:
    """Inverse tail swap; None when the pair does not cross (not in the image)."""
    first, second = pair
    _require_corner_to_corner(first, "first path")
    _require_corner_to_corner(second, "second path")
    if second.start.row != first.start.row + 1 or second.end.col != first.end.col + 1:
        raise ValueError("endpoint mismatch: expected paths from (m,0) to (0,n) and (m+1,0) to (0,n+1)")
    _require_valid(shape, first, "first path")
    _require_valid(shape, second, "second path")
    return _tail_swap(first, second)


def phi_forward(shape: Shape, p: Path, q: Path) -> PathPair:
    """Cut at the first unit vertical distance, shift prefixes, swap suffixes.

    Domain: p from (a, 0) to (0, b) and q from (a+2, 0) to (0, b), both valid.
    The vertical distance walks from 2 at the starts to 0 at the shared end
    column and moves by at most one per step, so the cut always exists.  Both
    outputs run from (a+1, 0) to (0, b).
    """
    _require_corner_to_corner(p, "first path")
    _require_corner_to_corner(q, "second path")
    if q.start.row != p.start.row + 2 or p.end.col != q.end.col:
        raise ValueError("endpoint mismatch: expected paths from (a,0) and (a+2,0) to the same (0,b)")
    _require_valid(shape, p, "first path")
    _require_valid(shape, q, "second path")
    cut = first_vertical_pair(p, q, 1)
    if cut is None:
        raise RuntimeError("no cut found: valid input pair has no unit vertical distance")
    p1, p2 = p.split(cut.p_index)
    q1, q2 = q.split(cut.q_index)
    out = PathPair(shift(p1, "south").concat(q2), shift(q1, "north").concat(p2))
    for label, path in zip(("first", "second"), out):
        if not is_valid_path(shape, path):
            raise RuntimeError(f"{label} output {path} enters the shape; scan invariant broken")
    return out


def phi_inverse(shape: Shape, pair: PathPair) -> Optional[PathPair]:
    """Inverse of phi_forward; None exactly when no vertex pair sits at vertical distance -1."""
    first, second = pair
    _require_corner_to_corner(first, "first path")
    _require_corner_to_corner(second, "second path")
    if first.start != second.start or first.end != second.end:
        raise ValueError("endpoint mismatch: expected two paths with identical endpoints")
    _require_valid(shape, first, "first path")
    _require_valid(shape, second, "second path")
    cut = first_vertical_pair(first, second, -1)
    if cut is None:
        return None
    f1, f2 = first.split(cut.p_index)
    g1, g2 = second.split(cut.q_index)
    out = PathPair(shift(f1, "north").concat(g2), shift(g1, "south").concat(f2))
    for label, path in zip(("first", "second"), out):
        if not is_valid_path(shape, path):
            raise RuntimeError(f"{label} preimage {path} enters the shape; image characterization broken")
    return out


def phibar_forward(shape: Shape, p: Path, q: Path) -> PathPair:
    """Double cut: first unit vertical pair, then last unit horizontal pair.

    Domain: p from (m-1, 0) to (0, n+1) and q from (m+1, 0) to (0, n-1) with
    m, n >= 1, both valid.  The middle pieces are swapped unshifted; the p
    prefix moves south, the p suffix west, and the q pieces the opposite way.
    Both outputs run from (m, 0) to (0, n).
    """
    _require_corner_to_corner(p, "first path")
    _require_corner_to_corner(q, "second path")
    if q.start.row != p.start.row + 2 or p.end.col != q.end.col + 2:
        raise ValueError(
            "endpoint mismatch: expected paths from (m-1,0) to (0,n+1) and (m+1,0) to (0,n-1)"
        )
    _require_valid(shape, p, "first path")
    _require_valid(shape, q, "second path")
    vcut = first_vertical_pair(p, q, 1)
    hcut = last_horizontal_pair(p, q, 1)
    if vcut is None or hcut is None:
        raise RuntimeError("no cut found: valid input pair is missing a unit-distance pair")
    if not (vcut.p_index < hcut.p_index and vcut.q_index < hcut.q_index):
        raise RuntimeError("cut ordering violated: vertical cut does not precede horizontal cut")
    p1 = p.subpath(0, vcut.p_index)
    p2 = p.subpath(vcut.p_index, hcut.p_index)
    p3 = p.subpath(hcut.p_index, p.length)
    q1 = q.subpath(0, vcut.q_index)
    q2 = q.subpath(vcut.q_index, hcut.q_index)
    q3 = q.subpath(hcut.q_index, q.length)
    out = PathPair(
        shift(p1, "south").concat(q2).concat(shift(p3, "west")),
        shift(q1, "north").concat(p2).concat(shift(q3, "east")),
    )
    for label, path in zip(("first", "second"), out):
        if not is_valid_path(shape, path):
            raise RuntimeError(f"{label} output {path} enters the shape; scan invariant broken")
    return out


def phibar_inverse(shape: Shape, pair: PathPair) -> Optional[PathPair]:
    """Inverse double cut; None when the pair is not in the image.

    Requires a vertical pair at distance -1 and a horizontal pair at distance
    -1 with the vertical cut strictly first on both paths; the four shifts are
    reversed.  A candidate whose reversed paths would enter the shape is
    likewise not in the image and yields None.
    """
    first, second = pair
    _require_corner_to_corner(first, "first path")
    _require_corner_to_corner(second, "second path")
    if first.start != second.start or first.end != second.end:
        raise ValueError("endpoint mismatch: expected two paths with identical endpoints")
    _require_valid(shape, first, "first path")
    _require_valid(shape, second, "second path")
    vcut = first_vertical_pair(first, second, -1)
    hcut = last_horizontal_pair(first, second, -1)
    if vcut is None or hcut is None:
        return None
    if not (vcut.p_index < hcut.p_index and vcut.q_index < hcut.q_index):
        return None
    f1 = first.subpath(0, vcut.p_index)
    f2 = first.subpath(vcut.p_index, hcut.p_index)
    f3 = first.subpath(hcut.p_index, first.length)
    g1 = second.subpath(0, vcut.q_index)
    g2 = second.subpath(vcut.q_index, hcut.q_index)
    g3 = second.subpath(hcut.q_index, second.length)
    out = PathPair(
        shift(f1, "north").concat(g2).concat(shift(f3, "east")),
        shift(g1, "south").concat(f2).concat(shift(g3, "west")),
    )
    if not (is_valid_path(shape, out.first) and is_valid_path(shape, out.second)):
        return None
    return out
