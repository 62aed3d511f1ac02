"""Concrete finite groups as Cayley tables, with integer group-ring arithmetic.

Elements are indices 0..v-1; index 0 is always the identity.  Built-in
constructors cover the groups used by the difference-set machinery:
cyclic groups, direct products, the quaternion group, the alternating
group on four letters, and dihedral groups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    table: tuple[tuple[int, ...], ...]  # table[a][b] = a*b
    names: tuple[str, ...] = field(default=None)

    def __post_init__(self):
        v = len(self.table)
        if any(len(row) != v for row in self.table):
            raise ValueError("Cayley table must be square")
        if self.names is None:
            object.__setattr__(self, "names", tuple(str(i) for i in range(v)))
        if [self.table[0][b] for b in range(v)] != list(range(v)):
            raise ValueError("element 0 must be a left identity")
        if [self.table[a][0] for a in range(v)] != list(range(v)):
            raise ValueError("element 0 must be a right identity")
        for a in range(v):
            if sorted(self.table[a]) != list(range(v)):
                raise ValueError(f"row {a} is not a permutation")
            if sorted(self.table[b][a] for b in range(v)) != list(range(v)):
                raise ValueError(f"column {a} is not a permutation")
        if v <= 24:  # associativity is O(v^3); only affordable at desk scale
            for a, b, c in product(range(v), repeat=3):
                if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                    raise ValueError(f"associativity fails at ({a}, {b}, {c})")

    @property
    def order(self):
        return len(self.table)

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        row = self.table[a]
        for b in range(self.order):
            if row[b] == 0:
                return b
        raise ValueError("no inverse found")  # unreachable for a valid table

    def inverse_table(self):
        return tuple(self.inv(a) for a in range(self.order))

    def element(self, name):
        return self.names.index(name)


def cyclic(m: int) -> FiniteGroup:
    table = tuple(tuple((a + b) % m for b in range(m)) for a in range(m))
    return FiniteGroup(f"Z{m}", table)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    pairs = [(a, b) for a in range(g.order) for b in range(h.order)]
    index = {p: i for i, p in enumerate(pairs)}
    table = tuple(
        tuple(index[(g.mul(a1, a2), h.mul(b1, b2))] for (a2, b2) in pairs)
        for (a1, b1) in pairs
    )
    names = tuple(f"({g.names[a]},{h.names[b]})" for a, b in pairs)
    return FiniteGroup(f"{g.name}x{h.name}", table, names)


def quaternion() -> FiniteGroup:
    """Q_8 with elements ordered 1, i, j, k, -1, -i, -j, -k."""
    names = ("1", "i", "j", "k", "-1", "-i", "-j", "-k")
    # represent x as (sign, unit): index = 4*sign + unit
    def mul(a, b):
        ua, sa = a % 4, a // 4
        ub, sb = b % 4, b // 4
        quat = {
            (0, 0): (0, 0), (0, 1): (1, 0), (0, 2): (2, 0), (0, 3): (3, 0),
            (1, 0): (1, 0), (1, 1): (0, 1), (1, 2): (3, 0), (1, 3): (2, 1),
            (2, 0): (2, 0), (2, 1): (3, 1), (2, 2): (0, 1), (2, 3): (1, 0),
            (3, 0): (3, 0), (3, 1): (2, 0), (3, 2): (1, 1), (3, 3): (0, 1),
        }
        unit, sign = quat[(ua, ub)]
        return ((sa + sb + sign) % 2) * 4 + unit

    table = tuple(tuple(mul(a, b) for b in range(8)) for a in range(8))
    return FiniteGroup("Q8", table, names)


def _perm_mul(p, q):
    # (p*q)(x) = p(q(x))
    return tuple(p[q[x]] for x in range(len(p)))


def _cycle_name(p):
    n = len(p)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        parts.append("(" + "".join(str(e + 1) for e in cyc) + ")")
    return "".join(parts) if parts else "e"


def alternating_4() -> FiniteGroup:
    """A_4 acting on {1, 2, 3, 4}; element names use 1-based cycle notation."""
    identity = (0, 1, 2, 3)
    elems = {identity}
    gens = [(1, 0, 3, 2), (1, 2, 0, 3)]  # (12)(34) and (123)
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _perm_mul(g, p)
                if q not in elems:
                    elems.add(q)
                    nxt.append(q)
        frontier = nxt
    ordered = [identity] + sorted(elems - {identity})
    index = {p: i for i, p in enumerate(ordered)}
    table = tuple(
        tuple(index[_perm_mul(a, b)] for b in ordered) for a in ordered
    )
    names = tuple(_cycle_name(p) for p in ordered)
    return FiniteGroup("A4", table, names)


def dihedral(m: int) -> FiniteGroup:
    """Dihedral group of order 2m: rotations r^i then reflections s r^i."""
    if m < 1:
        raise ValueError("need m >= 1")
    order = 2 * m

    def mul(a, b):
        fa, ia = divmod(a, m)
        fb, ib = divmod(b, m)
        if fa == 0:
            return fb * m + (ia + ib) % m if fb == 0 else m + (ib - ia) % m
        return m + (ia + ib) % m if fb == 0 else ((ib - ia) % m)

    table = tuple(tuple(mul(a, b) for b in range(order)) for a in range(order))
    return FiniteGroup(f"D{m}", table)


# ---------------------------------------------------------------------------
# group ring


class GroupRingElement:
    """Integer-coefficient element of the group ring ZG."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: FiniteGroup, coeffs):
        self.group = group
        self.coeffs = tuple(int(c) for c in coeffs)
        if len(self.coeffs) != group.order:
            raise ValueError("coefficient vector has wrong length")

    @classmethod
    def simple_quantity(cls, group, subset):
        coeffs = [0] * group.order
        for s in subset:
            coeffs[s] += 1
        return cls(group, coeffs)

    def inverse_support(self):
        """The image of this element under g -> g^(-1)."""
        out = [0] * self.group.order
        for g, c in enumerate(self.coeffs):
            out[self.group.inv(g)] += c
        return GroupRingElement(self.group, out)

    def __add__(self, other):
        return GroupRingElement(
            self.group, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.group, [other * c for c in self.coeffs])
        out = [0] * self.group.order
        mul = self.group.table
        for a, ca in enumerate(self.coeffs):
            if ca:
                for b, cb in enumerate(other.coeffs):
                    if cb:
                        out[mul[a][b]] += ca * cb
        return GroupRingElement(self.group, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return self.group is other.group and self.coeffs == other.coeffs


def delta(group: FiniteGroup, subset, g: int) -> int:
    """Difference count |{(s, t) in S x S : g = s t^(-1)}|."""
    members = list(subset)
    return sum(
        1 for s in members for t in members if group.mul(s, group.inv(t)) == g
    )


def delta_table(group: FiniteGroup, subset):
    """delta(g) for every g, in one pass."""
    out = [0] * group.order
    members = list(subset)
    for s in members:
        for t in members:
            out[group.mul(s, group.inv(t))] += 1
    return out


def is_pgds(group: FiniteGroup, subset):
    """(alpha, beta) if the subset is a partial geometric difference set, else None.

    Evaluates sum_{y in S} delta(x y^(-1)) for every x through the group
    ring cube S S^(-1) S and requires the value beta on S and alpha off S,
    plus the necessary divisibility k(v-k) = 0 mod (beta - alpha).
    """
    members = sorted(set(subset))
    k, v = len(members), group.order
    if not 2 <= k <= v:
        return None
    s = GroupRingElement.simple_quantity(group, members)
    cube = s * s.inverse_support() * s
    inside = {cube.coeffs[x] for x in members}
    outside = {cube.coeffs[x] for x in range(v) if x not in set(members)}
    if len(inside) != 1 or len(outside) > 1:
        return None
    beta = inside.pop()
    alpha = outside.pop() if outside else 0
    if beta <= alpha:
        return None
    if k * (v - k) % (beta - alpha) != 0:
        return None
    return (alpha, beta)


def is_pgdf(group: FiniteGroup, family):
    """(alpha, beta) if the family of k-subsets is a difference family, else None."""
    sets = [sorted(set(s)) for s in family]
    if not sets:
        return None
    k = len(sets[0])
    if any(len(s) != k for s in sets) or len({tuple(s) for s in sets}) != len(sets):
        return None
    v = group.order
    total = [0] * v
    for s in sets:
        for g, c in enumerate(delta_table(group, s)):
            total[g] += c
    inv = group.inverse_table()
    alpha = beta = None
    for s in sets:
        members = set(s)
        for x in range(v):
            acc = sum(total[group.mul(x, inv[y])] for y in s)
            if x in members:
                if beta is None:
                    beta = acc
                elif acc != beta:
                    return None
            else:
                if alpha is None:
                    alpha = acc
                elif acc != alpha:
                    return None
    if beta is None or alpha is None or beta <= alpha:
        return None
    return (alpha, beta)
