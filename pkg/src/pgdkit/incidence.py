"""Finite incidence structures and their structural operators.

Points are the integers 0..v-1.  Blocks are stored as sorted tuples of
point indices; the block list itself is kept sorted lexicographically,
with repeated blocks allowed as repeated entries.  Two structures are
equal iff their canonical forms are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


class NotTactical(ValueError):
    """Block sizes or point degrees are not constant."""


class PointCountMismatch(ValueError):
    """Operands are defined on different point sets."""


@dataclass(frozen=True)
class IncidenceStructure:
    v: int
    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, v, blocks):
        if v < 1:
            raise ValueError("point count must be positive")
        canon = []
        for block in blocks:
            b = tuple(sorted(block))
            if any(b[i] == b[i + 1] for i in range(len(b) - 1)):
                raise ValueError(f"repeated point in block {block}")
            if b and (b[0] < 0 or b[-1] >= v):
                raise ValueError(f"point index out of range in block {block}")
            canon.append(b)
        canon.sort()
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "blocks", tuple(canon))

    @property
    def b(self):
        return len(self.blocks)

    def degrees(self):
        """Replication count of each point."""
        deg = [0] * self.v
        for block in self.blocks:
            for x in block:
                deg[x] += 1
        return deg

    def block_sizes(self):
        return sorted({len(block) for block in self.blocks})

    def incidence_matrix(self):
        """v x b 0/1 matrix; column j is the indicator of block j."""
        n = [[0] * self.b for _ in range(self.v)]
        for j, block in enumerate(self.blocks):
            for x in block:
                n[x][j] = 1
        return n

    def relabel(self, perm):
        """Apply the point permutation x -> perm[x]."""
        return IncidenceStructure(
            self.v, [[perm[x] for x in block] for block in self.blocks]
        )


@dataclass(frozen=True)
class TacticalParams:
    v: int
    b: int
    k: int
    r: int

    def __post_init__(self):
        if self.v * self.r != self.b * self.k:
            raise ValueError("vr = bk violated")


@dataclass(frozen=True)
class ConcurrenceMatrix:
    """Symmetric nonnegative-integer matrix with constant diagonal."""

    entries: tuple[tuple[int, ...], ...]

    def __init__(self, rows):
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        v = len(entries)
        if any(len(row) != v for row in entries):
            raise ValueError("matrix must be square")
        for i in range(v):
            for j in range(i, v):
                if entries[i][j] != entries[j][i]:
                    raise ValueError("matrix must be symmetric")
                if entries[i][j] < 0:
                    raise ValueError("entries must be nonnegative")
        if v and len({entries[i][i] for i in range(v)}) != 1:
            raise ValueError("diagonal must be constant")
        object.__setattr__(self, "entries", entries)

    @property
    def v(self):
        return len(self.entries)

    @property
    def r(self):
        return self.entries[0][0]

    def __getitem__(self, i):
        return self.entries[i]

    def row_sums(self):
        return [sum(row) for row in self.entries]

    def add(self, other):
        if self.v != other.v:
            raise PointCountMismatch("matrix sizes differ")
        return ConcurrenceMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def circulant_row(self):
        """Compressed first row [c_0..c_{v//2}] if circulant in this labeling, else None."""
        v = self.v
        first = self.entries[0]
        for i in range(v):
            for j in range(v):
                if self.entries[i][j] != first[(j - i) % v]:
                    return None
        return tuple(first[: v // 2 + 1])


def tactical_params(design: IncidenceStructure) -> TacticalParams:
    """Constant block size and replication, or NotTactical."""
    if design.b == 0:
        raise NotTactical("no blocks")
    sizes = {len(block) for block in design.blocks}
    if len(sizes) != 1:
        raise NotTactical(f"block sizes vary: {sorted(sizes)}")
    degs = set(design.degrees())
    if len(degs) != 1:
        raise NotTactical(f"point degrees vary: {sorted(degs)}")
    return TacticalParams(design.v, design.b, sizes.pop(), degs.pop())


def concurrence(design: IncidenceStructure) -> ConcurrenceMatrix:
    """Pairwise block-membership counts; diagonal is the replication r."""
    tactical_params(design)  # raises NotTactical otherwise
    v = design.v
    lam = [[0] * v for _ in range(v)]
    for block in design.blocks:
        for x in block:
            lam[x][x] += 1
        for x, y in combinations(block, 2):
            lam[x][y] += 1
            lam[y][x] += 1
    return ConcurrenceMatrix(lam)


def flag_count(design: IncidenceStructure, x: int, block_index: int) -> int:
    """Number of flags (y, A) with y in the given block and x in A."""
    if not 0 <= x < design.v:
        raise IndexError(f"point {x} out of range")
    if not 0 <= block_index < design.b:
        raise IndexError(f"block index {block_index} out of range")
    lam = concurrence(design)
    return sum(lam[x][y] for y in design.blocks[block_index])


def dual(design: IncidenceStructure) -> IncidenceStructure:
    """Swap the roles of points and blocks (transpose the incidence matrix)."""
    dual_blocks = [[] for _ in range(design.v)]
    for j, block in enumerate(design.blocks):
        for x in block:
            dual_blocks[x].append(j)
    return IncidenceStructure(max(design.b, 1), dual_blocks)


def complement(design: IncidenceStructure) -> IncidenceStructure:
    """Replace every block by its point-set complement."""
    full = set(range(design.v))
    return IncidenceStructure(
        design.v, [sorted(full.difference(block)) for block in design.blocks]
    )


def tensor_expand(design: IncidenceStructure, m: int, n: int) -> IncidenceStructure:
    """Replace each point by m clones and repeat every block n times.

    Clones of point p are mp..mp+m-1, so parameters transform as
    (mv, nb, mk, nr).
    """
    if m < 1 or n < 1:
        raise ValueError("tensor factors must be positive")
    blocks = []
    for block in design.blocks:
        big = [m * x + i for x in block for i in range(m)]
        blocks.extend([big] * n)
    return IncidenceStructure(m * design.v, blocks)


def multiset_union(d1: IncidenceStructure, d2: IncidenceStructure) -> IncidenceStructure:
    """Concatenate the block lists of two structures on the same point set."""
    if d1.v != d2.v:
        raise PointCountMismatch(f"point counts differ: {d1.v} != {d2.v}")
    return IncidenceStructure(d1.v, list(d1.blocks) + list(d2.blocks))
