"""Brute-force geometric ground truth.

Tilings are built by first-empty-cell placement: scan row-major, and at
the first empty cell try every allowed rectangle whose top-left corner is
that cell. Each geometric tiling is produced exactly once.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

BlockPredicate = Callable[[int, int], bool]

MAX_CELLS = 30
MAX_CELLS_OVERRIDE = 36


class SizeGuardError(ValueError):
    """Raised instead of silently truncating an oversized enumeration."""


def allow_all(a: int, b: int) -> bool:
    return True


def allow_kl(k: int, l: int) -> BlockPredicate:
    """Blocks 1 x i (i <= k) and 2 x j (2 <= j <= l), either orientation."""

    def allow(a: int, b: int) -> bool:
        return (a == 1 and b <= k) or (a == 2 and 2 <= b <= l)

    allow.__name__ = f"allow_kl_{k}_{l}"
    return allow


def allow_one_row(parts) -> BlockPredicate:
    """Only 1 x p blocks with p in ``parts`` (no 2 x j blocks)."""
    parts = frozenset(parts)

    def allow(a: int, b: int) -> bool:
        return a == 1 and b in parts

    return allow


def _guard(m: int, n: int, override: bool):
    if m < 0 or n < 0:
        raise ValueError("negative dimensions")
    cap = MAX_CELLS_OVERRIDE if override else MAX_CELLS
    if m * n > cap:
        raise SizeGuardError(f"{m}x{n} grid exceeds the {cap}-cell guard")


@dataclass(frozen=True)
class Grid:
    """A complete or partial tiling: ``cells[r*cols + c]`` is a block id or -1."""

    rows: int
    cols: int
    cells: tuple[int, ...]

    def blocks(self) -> dict[int, tuple[int, int, int, int]]:
        """block id -> (top, left, height, width) of its bounding box."""
        boxes: dict[int, list[int]] = {}
        for idx, bid in enumerate(self.cells):
            if bid < 0:
                continue
            r, c = divmod(idx, self.cols)
            box = boxes.setdefault(bid, [r, c, r, c])
            box[0] = min(box[0], r)
            box[1] = min(box[1], c)
            box[2] = max(box[2], r)
            box[3] = max(box[3], c)
        return {b: (t, l, bt - t + 1, br - l + 1) for b, (t, l, bt, br) in boxes.items()}

    def is_complete(self) -> bool:
        return all(c >= 0 for c in self.cells)

    def is_well_formed(self) -> bool:
        """Every block id occupies exactly its bounding rectangle."""
        for bid, (t, l, h, w) in self.blocks().items():
            for r in range(t, t + h):
                for c in range(l, l + w):
                    if self.cells[r * self.cols + c] != bid:
                        return False
        return True

    def rectangles(self) -> frozenset[tuple[int, int, int, int]]:
        return frozenset(self.blocks().values())

    def is_row_symmetric(self) -> bool:
        """Invariant under reflection across the horizontal midline."""
        rects = self.rectangles()
        mirrored = frozenset((self.rows - t - h, l, h, w) for t, l, h, w in rects)
        return rects == mirrored

    def dump(self) -> str:
        return " ".join(str(c) for c in self.cells)


BlockMultiset = tuple[tuple[int, int], ...]


def canonical_multiset(g: Grid) -> BlockMultiset:
    """Sorted (min side, max side) pairs of a complete tiling."""
    if not g.is_complete():
        raise ValueError("grid is not completely tiled")
    return tuple(sorted((min(h, w), max(h, w)) for _, _, h, w in g.blocks().values()))


def _placements(m: int, n: int, allow: BlockPredicate):
    """Allowed (height, width) pairs that fit in an m x n box."""
    return [
        (h, w)
        for h in range(1, m + 1)
        for w in range(1, n + 1)
        if allow(min(h, w), max(h, w))
    ]


def enumerate_tilings(
    m: int, n: int, allow: BlockPredicate = allow_all, override: bool = False
) -> Iterator[Grid]:
    """Yield every tiling of the m x n grid by allowed rectangles once."""
    _guard(m, n, override)
    shapes = _placements(m, n, allow)
    cells = [-1] * (m * n)
    total = m * n

    def fits(r, c, h, w):
        if r + h > m or c + w > n:
            return False
        for rr in range(r, r + h):
            base = rr * n
            for cc in range(c, c + w):
                if cells[base + cc] >= 0:
                    return False
        return True

    def paint(r, c, h, w, value):
        for rr in range(r, r + h):
            base = rr * n
            for cc in range(c, c + w):
                cells[base + cc] = value

    def rec(start, next_id):
        idx = start
        while idx < total and cells[idx] >= 0:
            idx += 1
        if idx == total:
            yield Grid(m, n, tuple(cells))
            return
        r, c = divmod(idx, n)
        for h, w in shapes:
            if fits(r, c, h, w):
                paint(r, c, h, w, next_id)
                yield from rec(idx + 1, next_id + 1)
                paint(r, c, h, w, -1)

    yield from rec(0, 0)


# --------------------------------------------------------------------------
# multiset counting
# --------------------------------------------------------------------------

def _merge(block, multiset):
    return tuple(sorted(multiset + (block,)))


def _multiset_solver(m: int, n: int, shapes):
    """Memoized map: filled-cell bitmask -> set of multisets tiling the rest."""
    full = (1 << (m * n)) - 1
    rect_masks = {}
    for h, w in shapes:
        for r in range(m - h + 1):
            for c in range(n - w + 1):
                mask = 0
                for rr in range(r, r + h):
                    for cc in range(c, c + w):
                        mask |= 1 << (rr * n + cc)
                rect_masks[(r * n + c, h, w)] = mask

    @lru_cache(maxsize=None)
    def solve(filled: int) -> frozenset:
        if filled == full:
            return frozenset([()])
        free = ~filled & full
        idx = (free & -free).bit_length() - 1
        out = set()
        for h, w in shapes:
            rect = rect_masks.get((idx, h, w))
            if rect is None or rect & filled:
                continue
            block = (min(h, w), max(h, w))
            for rest in solve(filled | rect):
                out.add(_merge(block, rest))
        return frozenset(out)

    return solve, rect_masks


def _first_choice_worker(m, n, shapes, choices):
    solve, rect_masks = _multiset_solver(m, n, shapes)
    out = set()
    for h, w in choices:
        rect = rect_masks.get((0, h, w))
        if rect is None:
            continue
        for rest in solve(rect):
            out.add(_merge((min(h, w), max(h, w)), rest))
    return out


def multisets(
    m: int, n: int, allow: BlockPredicate = allow_all, override: bool = False, jobs: int = 1
) -> set[BlockMultiset]:
    """All distinct block multisets over complete tilings of m x n."""
    _guard(m, n, override)
    if m == 0 or n == 0:
        return {()}
    shapes = _placements(m, n, allow)
    if jobs <= 1:
        solve, _ = _multiset_solver(m, n, shapes)
        return set(solve(0))
    chunks = [shapes[i::jobs] for i in range(jobs)]
    out: set = set()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_first_choice_worker, [m] * jobs, [n] * jobs, [shapes] * jobs, chunks):
            out |= part
    return out


def count_multisets(
    m: int, n: int, allow: BlockPredicate = allow_all, override: bool = False, jobs: int = 1
) -> int:
    """p(m, n) restricted to ``allow``: distinct multisets that tile m x n."""
    return len(multisets(m, n, allow, override, jobs))


def count_multisets_by_tilings(
    m: int, n: int, allow: BlockPredicate = allow_all, override: bool = False
) -> int:
    """Same count, deduplicating the full tiling stream (slow, small grids)."""
    return len({canonical_multiset(g) for g in enumerate_tilings(m, n, allow, override)})


def count_symmetric_multisets(n: int, allow_one_by_two: bool = True, override: bool = False) -> int:
    """Multisets tiling 2 x n that admit a row-swap-symmetric arrangement.

    With ``allow_one_by_two=False`` multisets containing a 1 x 2 block are
    dropped (the S(n) variant); otherwise everything counts (T(n)).
    """
    _guard(2, n, override)
    if n == 0:
        return 1
    seen = set()
    for g in enumerate_tilings(2, n, allow_all, override):
        if not g.is_row_symmetric():
            continue
        ms = canonical_multiset(g)
        if not allow_one_by_two and (1, 2) in ms:
            continue
        seen.add(ms)
    return len(seen)
