"""Exhaustive backtracking realization of concurrence matrices.

Given a target symmetric matrix C, decide whether some incidence
structure with b blocks of size k satisfies N N^T = C.  Blocks are
chosen in lexicographically nondecreasing order, and every block must
start at the smallest point whose degree is still unmet (all earlier
points are finished, so no later block may contain them).  The dominant
pruning signal is the triangular array of remaining pair budgets.

Unrealizable is reported only when the search space is exhausted within
budget; otherwise the outcome is BudgetExhausted.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .incidence import ConcurrenceMatrix, IncidenceStructure, concurrence
from .isomorphism import is_isomorphic
from .spectra import NonIntegral, exact_integer_spectrum

MODES = ("first", "all", "count")


@dataclass(frozen=True)
class SearchTask:
    target: ConcurrenceMatrix
    k: int
    b: int
    allow_repeats: bool = True
    mode: str = "first"
    budget_nodes: int = 10**7
    budget_seconds: float | None = None
    require_pgd: bool = False  # restrict blocks to two-valued flag counts

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.k < 1 or self.b < 1:
            raise ValueError("k and b must be positive")


@dataclass(frozen=True)
class Realized:
    witnesses: tuple[IncidenceStructure, ...]
    count: int
    nodes: int = 0

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Unrealizable:
    reason: str
    nodes: int = 0

    def __bool__(self):
        return False


@dataclass(frozen=True)
class BudgetExhausted:
    nodes: int
    elapsed: float
    max_depth: int
    witnesses: tuple[IncidenceStructure, ...] = field(default=())

    def __bool__(self):
        return False


def _pgd_block_bounds(task: SearchTask):
    """beta for the two-valued flag filter, or an Unrealizable reason.

    A realization that is a partial geometric design forces the flag sum
    through any block to the single value beta determined by the
    spectrum of the target (eigenvalues kr, n and possibly 0).
    """
    target, k = task.target, task.k
    v, r = target.v, target.r
    kr = k * r
    spec = exact_integer_spectrum(target)
    if isinstance(spec, NonIntegral):
        return None, "target spectrum is not integral"
    values = dict(spec.pairs)
    if values.get(kr) != 1:
        return None, f"eigenvalue kr = {kr} must be simple"
    middle = [val for val in values if val not in (kr, 0)]
    if len(middle) != 1:
        return None, "target spectrum is not of the form [kr, n, 0]"
    n = middle[0]
    if n <= 0:
        return None, "middle eigenvalue must be positive"
    if k * (kr - n) % v != 0:
        return None, "alpha = k(kr - n)/v is not an integer"
    alpha = k * (kr - n) // v
    if alpha < 0:
        return None, "alpha is negative"
    return n + alpha, None


def realize(task: SearchTask):
    """Run the depth-first search; outcome is Realized, Unrealizable, or
    BudgetExhausted.  Deterministic for a fixed node budget."""
    target = task.target
    v, k, b = target.v, task.k, task.b
    r = target.r
    if b * k != v * r:
        return Unrealizable(f"bk = {b * k} != vr = {v * r}")
    if any(s != r * k for s in target.row_sums()):
        return Unrealizable("row sums of the target must all equal rk")
    if k > v:
        return Unrealizable("block size exceeds point count")

    beta = None
    if task.require_pgd:
        beta, reason = _pgd_block_bounds(task)
        if beta is None:
            return Unrealizable(reason)

    lam = [list(row) for row in target.entries]
    for i in range(v):
        lam[i][i] = 0
    deg = [r] * v
    max_lam = max((x for row in lam for x in row), default=0)

    start = time.monotonic()
    deadline = start + task.budget_seconds if task.budget_seconds else None
    nodes = 0
    max_depth = 0
    solutions = []
    count = 0
    over_budget = False

    def subset_prune(b_rem):
        # counting bound over small point subsets T: with s = sum of
        # remaining degrees over T and every block taking at most
        # cap = min(k, |T|) points of T, the pair budget inside T must
        # fit between the convex min and max of sum C(|B ∩ T|, 2)
        cap2 = min(k, 2)
        for x in range(v):
            dx = deg[x]
            if dx > b_rem:
                return True
            lx = lam[x]
            for y in range(x + 1, v):
                if lx[y] > min(dx, deg[y]):
                    return True
        cap = min(k, 3)
        if cap < 2:
            return False
        for x in range(v):
            for y in range(x + 1, v):
                for z in range(y + 1, v):
                    budget = lam[x][y] + lam[x][z] + lam[y][z]
                    s = deg[x] + deg[y] + deg[z]
                    if b_rem == 0:
                        if budget or s:
                            return True
                        continue
                    if s > 3 * b_rem:
                        return True
                    if s > cap * b_rem:
                        return True
                    q, rem = divmod(s, b_rem)
                    low = rem * (q * (q + 1) // 2) + (b_rem - rem) * (q * (q - 1) // 2)
                    full, part = divmod(s, cap)
                    high = full * (cap * (cap - 1) // 2) + part * (part - 1) // 2
                    if not low <= budget <= high:
                        return True
        return False

    if subset_prune(b):
        return Unrealizable("pair budgets fail a counting bound", nodes=0)

    def candidates(p, lo):
        """Complete blocks through p, in lex order, >= lo (or > lo without
        repeats).  Members keep every pairwise remaining budget positive;
        with the flag filter, partial flag sums must stay completable."""
        found = []
        block = [p]
        if task.require_pgd:
            flag_sums = {p: r}

        def grow(last, tight):
            if len(block) == k:
                if task.require_pgd:
                    if any(flag_sums[x] != beta for x in block):
                        return
                    if k == 4:
                        lam0 = target.entries
                        a, bb, c, d = block
                        if (
                            lam0[a][bb] != lam0[c][d]
                            or lam0[a][c] != lam0[bb][d]
                            or lam0[a][d] != lam0[bb][c]
                        ):
                            return
                found.append(tuple(block))
                return
            pos = len(block)
            lower = last + 1
            if tight:
                lower = max(lower, lo[pos])
            for y in range(lower, v):
                if deg[y] == 0:
                    continue
                if any(lam[x][y] == 0 for x in block):
                    continue
                now_tight = tight and y == lo[pos]
                if task.require_pgd:
                    lam0 = target.entries
                    ok = True
                    add = r
                    left = k - pos - 1
                    for x in block:
                        t = flag_sums[x] + lam0[x][y]
                        if t > beta or t + left * max_lam < beta:
                            ok = False
                            break
                        add += lam0[x][y]
                    if ok and (add > beta or add + left * max_lam < beta):
                        ok = False
                    if not ok:
                        continue
                    for x in block:
                        flag_sums[x] += lam0[x][y]
                    flag_sums[y] = add
                block.append(y)
                grow(y, now_tight)
                block.pop()
                if task.require_pgd:
                    for x in block:
                        flag_sums[x] -= lam0[x][y]
                    del flag_sums[y]

        if lo is not None and lo[0] != p:
            lo = None  # previous block starts earlier; any p-block is larger
        grow(p, lo is not None)
        if lo is not None and not task.allow_repeats and found and found[0] == lo:
            found.pop(0)
        return found

    def apply_block(block):
        for i, x in enumerate(block):
            deg[x] -= 1
            for y in block[i + 1:]:
                lam[x][y] -= 1
                lam[y][x] -= 1

    def undo_block(block):
        for i, x in enumerate(block):
            deg[x] += 1
            for y in block[i + 1:]:
                lam[x][y] += 1
                lam[y][x] += 1

    def local_prune(block, b_rem):
        for x in block:
            if deg[x] > b_rem:
                return True
            lx = lam[x]
            dx = deg[x]
            for y in range(v):
                if lx[y] > min(dx, deg[y]):
                    return True
        return False

    def dfs(depth, prev, chosen):
        nonlocal nodes, max_depth, count, over_budget
        max_depth = max(max_depth, depth)
        b_rem = b - depth
        if b_rem == 0:
            # degrees and budgets are exactly consumed by the invariants
            count += 1
            if task.mode != "count":
                solutions.append(IncidenceStructure(v, chosen))
            return task.mode == "first"
        p = next((x for x in range(v) if deg[x] > 0), None)
        if p is None:
            return False  # blocks remain but no degree left: dead branch
        for block in candidates(p, prev):
            nodes += 1
            if nodes > task.budget_nodes:
                over_budget = True
                return True
            if deadline is not None and nodes % 1024 == 0:
                if time.monotonic() > deadline:
                    over_budget = True
                    return True
            apply_block(block)
            pruned = local_prune(block, b_rem - 1)
            if not pruned and nodes % 4096 == 0:
                pruned = subset_prune(b_rem - 1)
            if not pruned:
                chosen.append(block)
                stop = dfs(depth + 1, block, chosen)
                chosen.pop()
                if stop:
                    undo_block(block)
                    return True
            undo_block(block)
        return False

    dfs(0, None, [])
    elapsed = time.monotonic() - start
    if over_budget:
        return BudgetExhausted(nodes, elapsed, max_depth, tuple(solutions))
    if count == 0:
        return Unrealizable("search space exhausted", nodes=nodes)
    solutions.sort(key=lambda d: d.blocks)
    return Realized(tuple(solutions), count, nodes=nodes)


def verify_witness(design: IncidenceStructure, task: SearchTask) -> bool:
    """Independent re-check: block shape matches and N N^T equals the target."""
    if design.v != task.target.v or design.b != task.b:
        return False
    if any(len(block) != task.k for block in design.blocks):
        return False
    return concurrence(design).entries == task.target.entries


def count_up_to_iso(designs, budget: int = 10**7):
    """Isomorphism-class representatives (canonical-least), in input order
    of first appearance after canonical sorting."""
    classes = []  # (invariant key, representative)
    for design in sorted(designs, key=lambda d: d.blocks):
        lam = concurrence(design)
        key = (
            design.v,
            design.b,
            tuple(sorted(len(block) for block in design.blocks)),
            tuple(sorted(tuple(sorted(row)) for row in lam.entries)),
        )
        for existing_key, rep in classes:
            if existing_key == key and is_isomorphic(rep, design, budget=budget):
                break
        else:
            classes.append((key, design))
    return [rep for _, rep in classes]
