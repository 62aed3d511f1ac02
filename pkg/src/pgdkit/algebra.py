"""Partial geometric design recognition, parameters, and classification.

A tactical configuration is partial geometric when the flag count
s(x, B) = sum of concurrences from x into B takes a single value beta
on flags and a single value alpha on antiflags.  The derived quantities
n = beta - alpha and sigma = r(v-k)/n drive everything downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .incidence import (
    IncidenceStructure,
    NotTactical,
    concurrence,
    tactical_params,
)


class NotAFlag(ValueError):
    """The given point is not incident with the given block."""


@dataclass(frozen=True)
class PgdParams:
    v: int
    b: int
    k: int
    r: int
    alpha: int
    beta: int

    def __post_init__(self):
        if self.beta <= self.alpha:
            raise ValueError("beta must exceed alpha")
        if (self.v - self.k) * self.alpha + self.k * self.beta != self.k**2 * self.r:
            raise ValueError("(v-k) alpha + k beta = k^2 r violated")
        if self.r * (self.v - self.k) % self.n != 0:
            raise ValueError("sigma = r(v-k)/n is not an integer")
        if not 1 <= self.sigma <= self.v - 1:
            raise ValueError("sigma out of range")

    @property
    def n(self):
        return self.beta - self.alpha

    @property
    def sigma(self):
        return self.r * (self.v - self.k) // self.n

    @property
    def kr(self):
        return self.k * self.r

    @property
    def proper(self):
        return self.alpha > 0 and 3 <= self.k <= self.v - 3 and 3 <= self.r <= self.b - 3

    def as_tuple(self):
        return (self.v, self.b, self.k, self.r, self.alpha, self.beta)

    def __str__(self):
        return "PGD(%d, %d, %d, %d; %d, %d)" % self.as_tuple()


class NotPgd:
    """Verification failure carrying a witness point-block pair."""

    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness  # (point, block index) or None

    def __repr__(self):
        return f"NotPgd({self.reason!r}, witness={self.witness})"

    def __bool__(self):
        return False


class Infeasible:
    def __init__(self, reason):
        self.reason = reason

    def __repr__(self):
        return f"Infeasible({self.reason!r})"

    def __bool__(self):
        return False


def verify_pgd(design: IncidenceStructure):
    """PgdParams if the flag counts are two-valued, else NotPgd with a witness."""
    try:
        tac = tactical_params(design)
    except NotTactical as exc:
        return NotPgd(f"not tactical: {exc}")
    lam = concurrence(design)
    alpha = beta = None
    for j, block in enumerate(design.blocks):
        members = set(block)
        sums = [0] * design.v
        for y in block:
            row = lam[y]
            for x in range(design.v):
                sums[x] += row[x]
        for x in range(design.v):
            if x in members:
                if beta is None:
                    beta = sums[x]
                elif sums[x] != beta:
                    return NotPgd(f"flag count {sums[x]} != {beta}", witness=(x, j))
            else:
                if alpha is None:
                    alpha = sums[x]
                elif sums[x] != alpha:
                    return NotPgd(f"antiflag count {sums[x]} != {alpha}", witness=(x, j))
    if beta is None:
        return NotPgd("no flags at all")
    if alpha is None:
        return NotPgd("no antiflags: every block is the full point set")
    if beta <= alpha:
        return NotPgd(f"beta = {beta} does not exceed alpha = {alpha}")
    try:
        return PgdParams(tac.v, tac.b, tac.k, tac.r, alpha, beta)
    except ValueError as exc:
        return NotPgd(f"degenerate parameters: {exc}")


def derive_params(v: int, k: int, r: int, n: int):
    """Parameter tuple from (v, k, r, n), or Infeasible.

    alpha = k(kr - n)/v, beta = n + alpha, b = vr/k, sigma = r(v-k)/n must
    all be nonnegative integers; for alpha > 0 the bounds
    k + r <= n + alpha + 1 <= kr must hold (alpha = 0 forces n = kr).
    """
    if not (v > k >= 2 and r >= 1 and n >= 1):
        return Infeasible("need v > k >= 2, r >= 1, n >= 1")
    if (v * r) % k != 0:
        return Infeasible(f"b = vr/k = {v * r}/{k} is not an integer")
    b = v * r // k
    if k * (k * r - n) % v != 0:
        return Infeasible(f"alpha = k(kr-n)/v = {k * (k * r - n)}/{v} is not an integer")
    alpha = k * (k * r - n) // v
    if alpha < 0:
        return Infeasible("alpha is negative")
    if r * (v - k) % n != 0:
        return Infeasible(f"sigma = r(v-k)/n = {r * (v - k)}/{n} is not an integer")
    sigma = r * (v - k) // n
    if not 1 <= sigma <= v - 1:
        return Infeasible(f"sigma = {sigma} out of range")
    if alpha > 0 and not (k + r <= n + alpha + 1 <= k * r):
        return Infeasible("k + r <= n + alpha + 1 <= kr violated")
    return PgdParams(v, b, k, r, alpha, n + alpha)


def concurrence_type(design: IncidenceStructure, x: int, block_index: int):
    """Multiset of concurrences from x into its block, sorted descending."""
    block = design.blocks[block_index]
    if x not in block:
        raise NotAFlag(f"point {x} is not in block {block_index}")
    lam = concurrence(design)
    return tuple(sorted((lam[x][y] for y in block if y != x), reverse=True))


# ---------------------------------------------------------------------------
# family classification


@dataclass(frozen=True)
class TwoDesign:
    lam: int


@dataclass(frozen=True)
class TransversalDesign:
    lam: int
    k: int
    u: int


@dataclass(frozen=True)
class PartialGeometry:
    kappa: int
    rho: int
    tau: int


@dataclass(frozen=True)
class Spbibd:
    lam1: int
    lam2: int
    s: int
    t: int


@dataclass(frozen=True)
class GenericPgd:
    pass


@dataclass(frozen=True)
class NotPgdTag:
    pass


def tag_to_json(tag):
    name = type(tag).__name__
    fields = {f: getattr(tag, f) for f in getattr(tag, "__dataclass_fields__", {})}
    return {"family": name, **fields}


def _zero_relation_classes(lam, v):
    """Partition by the zero-concurrence relation, or None if not an equivalence."""
    classes = []
    seen = [False] * v
    for x in range(v):
        if seen[x]:
            continue
        cls = [y for y in range(v) if y == x or lam[x][y] == 0]
        for y in cls:
            if seen[y]:
                return None
            seen[y] = True
        for y, z in combinations(cls, 2):
            if lam[y][z] != 0:
                return None
        # no zero concurrence may leave the class
        for y in cls:
            for z in range(v):
                if z not in cls and lam[y][z] == 0:
                    return None
        classes.append(cls)
    return classes


def classify(design: IncidenceStructure):
    """List of family tags; [NotPgdTag()] when the structure is not a PGD.

    Tags are independent predicates, so one design may carry several
    (a transversal design is typically also an SPBIBD, a Steiner
    2-design is also a partial geometry).
    """
    params = verify_pgd(design)
    if isinstance(params, NotPgd):
        return [NotPgdTag()]
    lam = concurrence(design)
    v, k, r = params.v, params.k, params.r
    offdiag = sorted({lam[x][y] for x in range(v) for y in range(v) if x != y})
    tags = []

    if len(offdiag) == 1:
        tags.append(TwoDesign(offdiag[0]))

    classes = _zero_relation_classes(lam, v) if 0 in offdiag else None
    if classes is not None and len(classes) == k:
        sizes = {len(c) for c in classes}
        cross = {
            lam[x][y]
            for a, b in combinations(classes, 2)
            for x in a
            for y in b
        }
        meets_once = all(
            sum(1 for x in block if x in set(cls)) == 1
            for block in design.blocks
            for cls in classes
        )
        if len(sizes) == 1 and len(cross) == 1 and meets_once:
            tags.append(TransversalDesign(cross.pop(), k, sizes.pop()))

    if params.beta == r + k - 1:
        tags.append(PartialGeometry(k, r, params.alpha))

    if len(offdiag) == 2:
        lam1, lam2 = offdiag[1], offdiag[0]
        s = t = None
        constant = True
        for j, block in enumerate(design.blocks):
            members = set(block)
            for x in range(v):
                count = sum(1 for y in block if y != x and lam[x][y] == lam1)
                if x in members:
                    if s is None:
                        s = count
                    elif count != s:
                        constant = False
                else:
                    if t is None:
                        t = count
                    elif count != t:
                        constant = False
            if not constant:
                break
        if constant and s is not None and t is not None:
            tags.append(Spbibd(lam1, lam2, s, t))

    if not tags:
        tags.append(GenericPgd())
    return tags
