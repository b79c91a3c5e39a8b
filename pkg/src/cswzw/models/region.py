"""
Regions: finite unions of open coordinate boxes in adapted coordinates.

A box assigns an open interval (lo, hi) to every direction; None stands for
an unbounded end, or for the closed end of the direction's domain (a box
interval (None, 1) on the half-line r contains the boundary r = 0). On a
circle (None, None) is the full circle and lo > hi is an arc through 0.

Exact predicates work on the cell decomposition cut out by the box
endpoints: on each axis the cells alternate points and open intervals, and a
region is the set of cells its boxes cover.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import FrozenSet, List, Optional, Sequence, Tuple

from cswzw.models.arithmetic import format_rational, parse_rational
from cswzw.models.spaces import Direction, Space

Interval = Tuple[Optional[Fraction], Optional[Fraction]]
Box = Tuple[Interval, ...]
Cell = Tuple[str, Optional[Fraction], Optional[Fraction]]


def _in_open(cell: Cell, interval: Interval) -> bool:
    a, b = interval
    kind, c, d = cell
    if kind == 'pt':
        return (a is None or a < c) and (b is None or c < b)
    return (a is None or (c is not None and a <= c)) and (b is None or (d is not None and d <= b))


def cell_in_interval(cell: Cell, interval: Interval, direction: Direction) -> bool:
    a, b = interval
    if direction.is_circle and a is not None and b is not None and a > b:
        return _in_open(cell, (a, None)) or _in_open(cell, (None, b))
    return _in_open(cell, interval)


def cell_in_closed(cell: Cell, interval: Interval, direction: Direction) -> bool:
    # Closed interval [a, b]; None is unbounded
    a, b = interval
    if direction.is_circle and a is not None and b is not None and a > b:
        return cell_in_closed(cell, (a, None), direction) or cell_in_closed(cell, (None, b), direction)
    kind, c, d = cell
    if kind == 'pt':
        return (a is None or a <= c) and (b is None or c <= b)
    return (a is None or (c is not None and a <= c)) and (b is None or (d is not None and d <= b))


def _cut_points(direction: Direction, values) -> List[Fraction]:
    points = set()
    for v in values:
        if v is None:
            continue
        if direction.is_circle:
            v = v % 1
        points.add(v)
    lo, hi = direction.lo, direction.hi
    return sorted(p for p in points if (lo is None or p > lo) and (hi is None or p < hi))


def axis_cells(direction: Direction, values) -> List[Cell]:
    """Ordered cells of one axis for the given cut values."""
    points = _cut_points(direction, values)
    lo, hi = direction.lo, direction.hi
    cells: List[Cell] = []
    if lo is not None and (direction.lo_closed or direction.is_circle):
        cells.append(('pt', lo, lo))
    bounds = [lo] + points + [hi]
    for i in range(len(bounds) - 1):
        cells.append(('iv', bounds[i], bounds[i + 1]))
        if i + 1 < len(bounds) - 1:
            cells.append(('pt', bounds[i + 1], bounds[i + 1]))
    if hi is not None and direction.hi_closed:
        cells.append(('pt', hi, hi))
    return cells


def point_in_interval(x, interval: Interval, direction: Direction) -> bool:
    if direction.is_circle:
        x = x % 1
    return cell_in_interval(('pt', x, x), interval, direction)


def _parse_end(value) -> Optional[Fraction]:
    return None if value is None else parse_rational(value)


@dataclass(frozen=True)
class Region:
    space: Space
    boxes: Tuple[Box, ...]

    @classmethod
    def from_boxes(cls, space: Space, boxes: Sequence[Sequence[Tuple]]) -> 'Region':
        parsed = []
        for box in boxes:
            if len(box) != space.dim:
                raise ValueError(f"box {box!r} needs {space.dim} intervals")
            parsed.append(tuple((_parse_end(lo), _parse_end(hi)) for lo, hi in box))
        return cls(space, tuple(parsed))

    @classmethod
    def whole(cls, space: Space) -> 'Region':
        return cls(space, (tuple((None, None) for _ in range(space.dim)),))

    @classmethod
    def from_dict(cls, space: Space, data: Sequence[dict]) -> 'Region':
        boxes = []
        for box in data:
            boxes.append(tuple(tuple(box.get(name, [None, None])) for name in space.names))
        return cls.from_boxes(space, boxes)

    def to_dict(self) -> List[dict]:
        return [{name: [None if lo is None else format_rational(lo), None if hi is None else format_rational(hi)]
                 for name, (lo, hi) in zip(self.space.names, box)} for box in self.boxes]

    @property
    def is_empty_union(self) -> bool:
        return not self.boxes

    # ---- cells ----
    def cut_values(self, axis: int) -> List:
        return [v for box in self.boxes for v in box[axis]]

    def cells(self, extra: Sequence[Sequence] = None) -> List[List[Cell]]:
        extra = extra or [[] for _ in range(self.space.dim)]
        return [axis_cells(d, self.cut_values(a) + list(extra[a]))
                for a, d in enumerate(self.space.directions)]

    def covered(self, cells: List[List[Cell]]) -> FrozenSet[Tuple[int, ...]]:
        out = set()
        for box in self.boxes:
            per_axis = [[i for i, c in enumerate(axis)
                         if cell_in_interval(c, box[a], self.space.directions[a])]
                        for a, axis in enumerate(cells)]
            out.update(cartesian(*per_axis))
        return frozenset(out)

    def _common_cells(self, other: 'Region') -> List[List[Cell]]:
        return self.cells([other.cut_values(a) for a in range(self.space.dim)])

    def contains_point(self, point: Sequence) -> bool:
        return any(all(point_in_interval(x, iv, d) for x, iv, d in zip(point, box, self.space.directions))
                   for box in self.boxes)

    def is_subset(self, other: 'Region') -> bool:
        cells = self._common_cells(other)
        return self.covered(cells) <= other.covered(cells)

    def same_set(self, other: 'Region') -> bool:
        cells = self._common_cells(other)
        return self.covered(cells) == other.covered(cells)

    def intersects(self, other: 'Region') -> bool:
        cells = self._common_cells(other)
        return bool(self.covered(cells) & other.covered(cells))

    def covers_closed_box(self, box: Sequence[Interval]) -> bool:
        """Whether the closed box (None: unbounded) lies inside the region."""
        cells = self.cells([[v for v in iv] for iv in box])
        inside = [[i for i, c in enumerate(axis) if cell_in_closed(c, box[a], self.space.directions[a])]
                  for a, axis in enumerate(cells)]
        covered = self.covered(cells)
        return all(idx in covered for idx in cartesian(*inside))

    # ---- canonical form ----
    def canonical(self) -> Tuple[Tuple[Tuple, ...], FrozenSet[Tuple[int, ...]]]:
        """Minimal cut points per axis plus the covered cells; equal sets give equal keys."""
        cuts = [_cut_points(d, self.cut_values(a)) for a, d in enumerate(self.space.directions)]
        removed = True
        while removed:
            removed = False
            for axis in range(self.space.dim):
                for p in list(cuts[axis]):
                    trial = [list(c) for c in cuts]
                    trial[axis].remove(p)
                    if self._cover_signature(trial) == self._refined_signature(cuts, trial, axis, p):
                        cuts = trial
                        removed = True
                        break
        cells = [axis_cells(d, cuts[a]) for a, d in enumerate(self.space.directions)]
        return tuple(tuple(c) for c in cuts), self.covered(cells)

    def _cover_signature(self, cuts) -> FrozenSet:
        cells = [axis_cells(d, cuts[a]) for a, d in enumerate(self.space.directions)]
        return frozenset((tuple(cells[a][i] for a, i in enumerate(idx))) for idx in self.covered(cells))

    def _refined_signature(self, cuts, coarse, axis, p) -> FrozenSet:
        # Cover of the fine grid, mapped to coarse cells; None if p is a real seam
        fine = [axis_cells(d, cuts[a]) for a, d in enumerate(self.space.directions)]
        coarse_cells = axis_cells(self.space.directions[axis], coarse[axis])
        covered = self.covered(fine)
        mapped = {}
        for idx in cartesian(*[range(len(c)) for c in fine]):
            cell = fine[axis][idx[axis]]
            target = next(c for c in coarse_cells if _cell_within(cell, c))
            key = tuple(fine[a][i] if a != axis else target for a, i in enumerate(idx))
            mapped.setdefault(key, set()).add(idx in covered)
        if any(len(v) > 1 for v in mapped.values()):
            return None
        return frozenset(k for k, v in mapped.items() if True in v)

    def normalized(self) -> 'Region':
        """Drop boxes contained in another box and fuse boxes whose union is a box."""
        boxes = list(dict.fromkeys(self.boxes))
        changed = True
        while changed:
            changed = False
            for i in range(len(boxes)):
                for j in range(len(boxes)):
                    if i == j:
                        continue
                    fused = _fuse(boxes[i], boxes[j], self.space.directions)
                    if fused is not None:
                        boxes = [b for k, b in enumerate(boxes) if k not in (i, j)] + [fused]
                        changed = True
                        break
                if changed:
                    break
        return Region(self.space, tuple(sorted(boxes, key=_box_sort_key)))

    # ---- projections ----
    def project(self, axis: int, target: Space) -> 'Region':
        return Region(target, tuple(box[:axis] + box[axis + 1:] for box in self.boxes))

    @classmethod
    def preimage(cls, base_region: 'Region', total: Space, axis: int = 0) -> 'Region':
        return cls(total, tuple(box[:axis] + ((None, None),) + box[axis:] for box in base_region.boxes))

    def is_bounded(self) -> bool:
        for box in self.boxes:
            for (lo, hi), d in zip(box, self.space.directions):
                if d.is_circle:
                    continue
                if (lo is None and d.lo is None) or (hi is None and d.hi is None):
                    return False
        return True


def _cell_within(fine: Cell, coarse: Cell) -> bool:
    if coarse[0] == 'pt':
        return fine[0] == 'pt' and fine[1] == coarse[1]
    lo, hi = coarse[1], coarse[2]
    c = fine[1]
    d = fine[2]
    left_ok = lo is None or (c is not None and c >= lo and not (fine[0] == 'pt' and c == lo))
    right_ok = hi is None or (d is not None and d <= hi and not (fine[0] == 'pt' and d == hi))
    return left_ok and right_ok


def _interval_contains(outer: Interval, inner: Interval) -> bool:
    a, b = outer
    c, d = inner
    return (a is None or (c is not None and a <= c)) and (b is None or (d is not None and d <= b))


def _fuse(first: Box, second: Box, directions) -> Optional[Box]:
    if any(d.is_circle and iv[0] is not None and iv[1] is not None and iv[0] > iv[1]
           for box in (first, second) for iv, d in zip(box, directions)):
        return first if first == second else None
    if all(_interval_contains(a, b) for a, b in zip(first, second)):
        return first
    differing = [k for k, (a, b) in enumerate(zip(first, second)) if a != b]
    if len(differing) != 1:
        return None
    k = differing[0]
    (a, b), (c, d) = first[k], second[k]
    # overlapping open intervals fuse into one open interval
    lo_max = c if a is None else (a if c is None else max(a, c))
    hi_min = d if b is None else (b if d is None else min(b, d))
    if lo_max is not None and hi_min is not None and not lo_max < hi_min:
        return None
    lo = None if a is None or c is None else min(a, c)
    hi = None if b is None or d is None else max(b, d)
    return first[:k] + ((lo, hi),) + first[k + 1:]


def _box_sort_key(box: Box):
    return tuple((lo is not None, lo if lo is not None else 0, hi is not None, hi if hi is not None else 0)
                 for lo, hi in box)
