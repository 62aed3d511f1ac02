"""Point-permutation isomorphism of incidence structures.

Backtracking with degree and concurrence-row invariants; instances here
are tiny (v <= 32), so no canonical-labeling machinery is needed.  The
same engine relabels a design to exhibit a prescribed circulant
concurrence row.
"""

from __future__ import annotations

from collections import Counter

from .errors import BudgetExhausted
from .incidence import IncidenceStructure, concurrence
from .spectra import CirculantRow

MAX_POINTS = 32
MAX_BLOCKS = 64


def _invariant(lam, deg, x):
    return (deg[x], tuple(sorted(lam[x])))


def is_isomorphic(d1: IncidenceStructure, d2: IncidenceStructure,
                  budget: int = 10**7, with_witness: bool = False):
    """True iff some point permutation maps d1's block multiset onto d2's.

    Deterministic: candidate images are tried in increasing order, so the
    witness returned (with with_witness=True) is the lexicographically
    least isomorphism.  Raises BudgetExhausted past the node budget.
    """
    for d in (d1, d2):
        if d.v > MAX_POINTS or d.b > MAX_BLOCKS:
            raise ValueError(f"instance too large (v <= {MAX_POINTS}, b <= {MAX_BLOCKS})")
    fail = (False, None) if with_witness else False
    if d1.v != d2.v or d1.b != d2.b:
        return fail
    if sorted(map(len, d1.blocks)) != sorted(map(len, d2.blocks)):
        return fail
    if d1.blocks == d2.blocks:
        return (True, tuple(range(d1.v))) if with_witness else True
    deg1, deg2 = d1.degrees(), d2.degrees()
    if sorted(deg1) != sorted(deg2):
        return fail
    try:
        lam1 = concurrence(d1).entries
        lam2 = concurrence(d2).entries
    except Exception:
        lam1 = lam2 = None

    v = d1.v
    if lam1 is not None:
        inv1 = [_invariant(lam1, deg1, x) for x in range(v)]
        inv2 = [_invariant(lam2, deg2, x) for x in range(v)]
        if Counter(inv1) != Counter(inv2):
            return fail
    blocks2 = Counter(d2.blocks)
    nodes = 0
    mapping = [-1] * v
    used = [False] * v

    def feasible(x, y):
        if deg1[x] != deg2[y]:
            return False
        if lam1 is not None:
            if inv1[x] != inv2[y]:
                return False
            for z in range(x):
                if lam1[x][z] != lam2[y][mapping[z]]:
                    return False
        return True

    def extend(x):
        nonlocal nodes
        if x == v:
            image = Counter(
                tuple(sorted(mapping[p] for p in block)) for block in d1.blocks
            )
            return image == blocks2
        for y in range(v):
            if used[y]:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExhausted(f"isomorphism search passed {budget} nodes")
            if not feasible(x, y):
                continue
            mapping[x] = y
            used[y] = True
            if extend(x + 1):
                return True
            used[y] = False
            mapping[x] = -1
        return False

    found = extend(0)
    if with_witness:
        return (found, tuple(mapping) if found else None)
    return found


def circulant_relabeling(design: IncidenceStructure, row: CirculantRow):
    """Permutation p with concurrence(design.relabel(p)) equal to the circulant
    of `row`, or None.

    p maps old point labels to circulant positions; the search fills
    positions 0, 1, 2, ... and is deterministic (lexicographically least
    in the position-to-point reading).
    """
    if design.v != row.v:
        return None
    lam = concurrence(design).entries
    v = row.v
    full = row.full_row()
    if lam[0][0] != full[0]:
        return None
    # every row of a circulant carries the same value multiset
    mult = Counter(full)
    if any(Counter(lam[x]) != mult for x in range(v)):
        return None
    position_of = [-1] * v  # point -> position
    point_at = [-1] * v  # position -> point

    def extend(pos):
        if pos == v:
            return True
        for x in range(v):
            if position_of[x] != -1:
                continue
            ok = True
            for prev in range(pos):
                y = point_at[prev]
                if lam[x][y] != full[(pos - prev) % v]:
                    ok = False
                    break
            if ok:
                position_of[x] = pos
                point_at[pos] = x
                if extend(pos + 1):
                    return True
                position_of[x] = -1
                point_at[pos] = -1
        return False

    if extend(0):
        return tuple(position_of)
    return None
