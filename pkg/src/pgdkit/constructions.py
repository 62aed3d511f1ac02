"""Constructions of partial geometric designs.

Sources covered: transversal designs (MOLS-based plus curated seeds),
difference-set developments in finite groups, strongly regular graph
neighborhoods, orbit selection under a prescribed automorphism group,
partial affine planes, symplectic generalized quadrangles, the cubic
Hamming-scheme fusion, the expanded pair-design family, and the
two-group grid design.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from . import seeds
from .algebra import NotPgd, verify_pgd
from .errors import (
    BudgetExhausted,
    NoConstructionPath,
    NotEligible,
    NotPgdf,
    NotPgds,
    NotSrg,
    UnsupportedScale,
)
from .groups import FiniteGroup, cyclic, direct_product, is_pgdf, is_pgds
from .incidence import IncidenceStructure, multiset_union


# ---------------------------------------------------------------------------
# transversal designs


def _is_prime(n):
    return n >= 2 and all(n % p for p in range(2, int(n**0.5) + 1))


_GF4_MUL = ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2))


def _latin_squares(u):
    """As many mutually orthogonal Latin squares of order u as we know."""
    if _is_prime(u):
        return [
            [[(a * x + y) % u for y in range(u)] for x in range(u)]
            for a in range(1, u)
        ]
    if u == 4:
        return [
            [[_GF4_MUL[a][x] ^ y for y in range(u)] for x in range(u)]
            for a in (1, 2, 3)
        ]
    # a single (cyclic) Latin square exists for every order
    return [[[(x + y) % u for y in range(u)] for x in range(u)]]


def transversal_design(k: int, u: int, lam: int = 1) -> IncidenceStructure:
    """TD_lam(k, u) on k contiguous groups of u points, group g = [gu, gu+u).

    lam = 1 uses k - 2 mutually orthogonal Latin squares; larger lam is
    assembled from lam copies of a TD_1 or from curated seeds combined
    as multiset unions (2a + 3b = lam).  Raises NoConstructionPath when
    neither route applies.
    """
    if k < 2 or u < 1 or lam < 1:
        raise ValueError("need k >= 2, u >= 1, lam >= 1")
    squares = _latin_squares(u)
    if k - 2 <= len(squares):
        base_blocks = []
        for x, y in product(range(u), repeat=2):
            block = [x, u + y]
            for i in range(k - 2):
                block.append((2 + i) * u + squares[i][x][y])
            base_blocks.append(block)
        return IncidenceStructure(k * u, base_blocks * lam)
    if lam >= 2:
        seed2 = seeds.TD_SEEDS.get((k, u, 2))
        seed3 = seeds.TD_SEEDS.get((k, u, 3))
        if seed2 and seed3:
            b = lam % 2
            a = (lam - 3 * b) // 2
            blocks = seed2 * a + seed3 * b
            return IncidenceStructure(k * u, blocks)
    raise NoConstructionPath(
        f"TD_{lam}({k}, {u}): insufficient Latin squares and no seed"
    )


# ---------------------------------------------------------------------------
# difference set developments


def develop(group: FiniteGroup, subset) -> IncidenceStructure:
    """Left-translate development {gS : g in G} of a difference set."""
    params = is_pgds(group, subset)
    if params is None:
        raise NotPgds(f"{sorted(subset)} is not a difference set in {group.name}")
    members = sorted(set(subset))
    blocks = [
        [group.mul(g, s) for s in members] for g in range(group.order)
    ]
    return IncidenceStructure(group.order, blocks)


def develop_family(group: FiniteGroup, family) -> IncidenceStructure:
    """Development of a difference family: all translates of all members."""
    params = is_pgdf(group, family)
    if params is None:
        raise NotPgdf(f"family is not a difference family in {group.name}")
    blocks = []
    for subset in family:
        members = sorted(set(subset))
        blocks.extend(
            [group.mul(g, s) for s in members] for g in range(group.order)
        )
    return IncidenceStructure(group.order, blocks)


def pgds_search(group: FiniteGroup, k: int, budget: int = 10**6):
    """All k-subsets that are difference sets, one per left-translation orbit.

    Representatives are the lexicographically least translates.
    """
    if group.order > 16:
        raise ValueError("search groups of order <= 16 only")
    found = []
    examined = 0
    for combo in combinations(range(group.order), k):
        examined += 1
        if examined > budget:
            raise BudgetExhausted(f"examined {budget} subsets")
        canonical = min(
            tuple(sorted(group.mul(g, s) for s in combo))
            for g in range(group.order)
        )
        if canonical != combo:
            continue
        if is_pgds(group, combo) is not None:
            found.append(combo)
    return found


def direct_product_lift(group: FiniteGroup, subset, m: int):
    """Lift a difference set S in G to S x Z_m in G x Z_m."""
    base = is_pgds(group, subset)
    if base is None:
        raise NotPgds(f"{sorted(subset)} is not a difference set in {group.name}")
    lifted_group = direct_product(group, cyclic(m))
    lifted_set = sorted(a * m + z for a in set(subset) for z in range(m))
    lifted = is_pgds(lifted_group, lifted_set)
    alpha, beta = base
    if lifted != (m * m * alpha, m * m * beta):
        raise NotPgds(f"lift of {sorted(subset)} failed its parameter check")
    return lifted_group, lifted_set


# ---------------------------------------------------------------------------
# strongly regular graphs


def srg_parameters(adjacency):
    """(v, k, nu, mu) of a strongly regular graph, or raise NotSrg."""
    a = [tuple(int(x) for x in row) for row in adjacency]
    v = len(a)
    if any(len(row) != v for row in a):
        raise NotSrg("adjacency matrix must be square")
    for i in range(v):
        if a[i][i] != 0:
            raise NotSrg("diagonal must be zero")
        for j in range(v):
            if a[i][j] not in (0, 1) or a[i][j] != a[j][i]:
                raise NotSrg("matrix must be symmetric 0/1")
    degrees = {sum(row) for row in a}
    if len(degrees) != 1:
        raise NotSrg("graph is not regular")
    k = degrees.pop()
    if k == 0 or k == v - 1:
        raise NotSrg("complete and empty graphs are excluded")
    nu = mu = None
    for i in range(v):
        for j in range(v):
            if i == j:
                continue
            common = sum(a[i][t] * a[j][t] for t in range(v))
            if a[i][j]:
                if nu is None:
                    nu = common
                elif common != nu:
                    raise NotSrg("common-neighbor count of adjacent pairs varies")
            else:
                if mu is None:
                    mu = common
                elif common != mu:
                    raise NotSrg("common-neighbor count of non-adjacent pairs varies")
    return v, k, nu, mu


def srg_neighborhood_design(adjacency) -> IncidenceStructure:
    """Design whose blocks are the vertex neighborhoods of an SRG.

    Eligible exactly when nu = mu or k = mu; raises NotEligible otherwise.
    """
    v, k, nu, mu = srg_parameters(adjacency)
    if nu != mu and k != mu:
        raise NotEligible(f"SRG({v}, {k}, {nu}, {mu}) has nu != mu and k != mu")
    blocks = [
        [x for x in range(v) if adjacency[vertex][x]] for vertex in range(v)
    ]
    return IncidenceStructure(v, blocks)


def complete_multipartite_srg(c: int, m: int):
    """Adjacency matrix of the complement of c disjoint copies of K_m."""
    if c < 2 or m < 2:
        raise ValueError("need c, m >= 2")
    v = c * m
    return [
        [1 if (i != j and i // m != j // m) else 0 for j in range(v)]
        for i in range(v)
    ]


def hamming_graph_adjacency(d: int, q: int):
    """Adjacency of H(d, q): words over a q-set, adjacent at Hamming distance 1."""
    points = list(product(range(q), repeat=d))
    v = len(points)
    return [
        [
            1 if sum(x != y for x, y in zip(points[i], points[j])) == 1 else 0
            for j in range(v)
        ]
        for i in range(v)
    ]


def petersen_adjacency():
    points = list(combinations(range(5), 2))
    return [
        [1 if not set(p) & set(q) else 0 for q in points] for p in points
    ]


# ---------------------------------------------------------------------------
# orbit selection with a prescribed automorphism group


@dataclass(frozen=True)
class OrbitSystem:
    v: int
    k: int
    generators: tuple[tuple[int, ...], ...]
    orbits: tuple[tuple[tuple[int, ...], ...], ...]
    matrix: tuple[tuple[int, ...], ...]  # L[i][t] = #{A in orbit i : t in A}


def orbit_system(generators, v: int, k: int) -> OrbitSystem:
    """Orbits of the generated permutation group on all k-subsets."""
    gens = [tuple(g) for g in generators]
    for g in gens:
        if sorted(g) != list(range(v)):
            raise ValueError(f"{g} is not a permutation of 0..{v - 1}")
    unseen = set(combinations(range(v), k))
    orbits = []
    while unseen:
        start = min(unseen)
        orbit = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for subset in frontier:
                for g in gens:
                    image = tuple(sorted(g[x] for x in subset))
                    if image not in orbit:
                        orbit.add(image)
                        nxt.append(image)
            frontier = nxt
        unseen -= orbit
        orbits.append(tuple(sorted(orbit)))
    orbits.sort(key=lambda orbit: orbit[0])
    matrix = tuple(
        tuple(sum(1 for a in orbit if t in a) for t in range(v))
        for orbit in orbits
    )
    return OrbitSystem(v, k, tuple(gens), tuple(orbits), matrix)


def orbit_profile_matrix(system: OrbitSystem, chosen, h: int):
    """The matrix M_h of intersection profiles against a representative of
    the h-th chosen orbit; independent of the representative up to column
    order.  Read-only companion to the selection criterion."""
    rep = system.orbits[chosen[h]][0]
    return [
        [
            sum(len(set(a) & set(rep)) for a in system.orbits[i] if t in a)
            for t in range(system.v)
        ]
        for i in chosen
    ]


def kramer_mesner(generators, v: int, k: int, r: int, budget: int = 10**6):
    """All PGDs with the prescribed automorphisms: block sets are unions
    z_i . O_i of orbits of k-subsets with z L = r 1 and two-valued flags.

    Enumerates bounded nonnegative integer solutions z (z_i <= r) and
    keeps the unions that verify as PGDs.
    """
    if v > 12:
        raise ValueError("orbit selection is desk-scale only (v <= 12)")
    system = orbit_system(generators, v, k)
    s = len(system.orbits)
    results = []
    nodes = 0

    def extend(i, remaining, z):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(f"orbit selection passed {budget} nodes")
        if i == s:
            if all(x == 0 for x in remaining):
                blocks = []
                for zi, orbit in zip(z, system.orbits):
                    blocks.extend(list(a) for a in orbit for _ in range(zi))
                design = IncidenceStructure(v, blocks)
                if not isinstance(verify_pgd(design), NotPgd):
                    results.append(design)
            return
        row = system.matrix[i]
        cap = min(
            (remaining[t] // row[t] for t in range(v) if row[t]), default=r
        )
        for zi in range(min(cap, r), -1, -1):
            extend(
                i + 1,
                [remaining[t] - zi * row[t] for t in range(v)],
                z + [zi],
            )

    extend(0, [r] * v, [])
    return sorted(results, key=lambda d: d.blocks)


# ---------------------------------------------------------------------------
# geometries


def affine_pg(q: int, l: int) -> IncidenceStructure:
    """Lines of l parallel classes of the affine plane of order q (q prime).

    Classes are the slope classes 0..q-1 followed by the vertical class;
    point (x, y) has index x + q y.  l = q + 1 gives the full plane.
    """
    if not _is_prime(q):
        raise ValueError("q must be prime")
    if not 2 <= l <= q + 1:
        raise ValueError("need 2 <= l <= q + 1")
    blocks = []
    for cls in range(l):
        if cls < q:  # lines y = cls*x + j
            for j in range(q):
                blocks.append([x + q * ((cls * x + j) % q) for x in range(q)])
        else:  # vertical lines x = j
            for j in range(q):
                blocks.append([j + q * y for y in range(q)])
    return IncidenceStructure(q * q, blocks)


def _normalize_vector(vec, q):
    lead = next((x for x in vec if x), 0)
    if lead == 0:
        return None
    inv = next(t for t in range(1, q) if (lead * t) % q == 1)
    return tuple((x * inv) % q for x in vec)


def symplectic_gq(q: int) -> IncidenceStructure:
    """Generalized quadrangle from the symplectic space of dimension 4.

    Points are the 1-dimensional subspaces of F_q^4, blocks the totally
    isotropic 2-dimensional subspaces under the fixed alternate form
    B(x, y) = x1 y3 - x3 y1 + x2 y4 - x4 y2; incidence is containment.
    """
    if q not in (2, 3):
        raise UnsupportedScale("implemented for q in {2, 3}")

    def form(x, y):
        return (x[0] * y[2] - x[2] * y[0] + x[1] * y[3] - x[3] * y[1]) % q

    points = sorted(
        {
            _normalize_vector(vec, q)
            for vec in product(range(q), repeat=4)
            if any(vec)
        }
    )
    index = {p: i for i, p in enumerate(points)}
    blocks = set()
    for i, u in enumerate(points):
        for j in range(i + 1, len(points)):
            w = points[j]
            if form(u, w) != 0:
                continue
            span = set()
            for a, b in product(range(q), repeat=2):
                vec = tuple((a * x + b * y) % q for x, y in zip(u, w))
                norm = _normalize_vector(vec, q)
                if norm is not None:
                    span.add(index[norm])
            blocks.add(tuple(sorted(span)))
    return IncidenceStructure(len(points), sorted(blocks))


def hamming_fusion(l: int = 1):
    """The three neighborhood designs of the cubic Hamming scheme on 27 points.

    Blocks are the spheres of Hamming distance 1, distance 2, and
    distance 3 together with the center.  Only the 27-point instance is
    materialized.
    """
    if l != 1:
        raise UnsupportedScale("only the 27-point instance is materialized")
    points = list(product(range(3), repeat=3))
    v = len(points)

    def dist(i, j):
        return sum(x != y for x, y in zip(points[i], points[j]))

    designs = []
    for selector in (
        lambda i, j: dist(i, j) == 1,
        lambda i, j: dist(i, j) == 2,
        lambda i, j: dist(i, j) == 3 or i == j,
    ):
        blocks = [
            [x for x in range(v) if selector(center, x)] for center in range(v)
        ]
        designs.append(IncidenceStructure(v, blocks))
    return tuple(designs)


def pair_design_base(v: int) -> IncidenceStructure:
    """All 2-subsets of v points."""
    if v < 2:
        raise ValueError("need v >= 2")
    return IncidenceStructure(v, [list(p) for p in combinations(range(v), 2)])


def pair_design_expanded(v: int) -> IncidenceStructure:
    """The pair design with every point doubled, labeled so that the
    concurrence matrix is the circulant [v-1, 1, ..., 1, v-1, 1, ..., 1]:
    the two clones of point a are a and a + v."""
    if v < 3:
        raise ValueError("need v >= 3")
    blocks = [[a, b, v + a, v + b] for a, b in combinations(range(v), 2)]
    return IncidenceStructure(2 * v, blocks)


def adhoc_grid_design(m: int) -> IncidenceStructure:
    """Two groups of m points; blocks drop one point from each group.

    Group one sits on even labels and group two on odd labels, which
    makes the concurrence matrix circulant as labeled.
    """
    if m < 3:
        raise ValueError("need m >= 3")
    blocks = []
    for i in range(m):
        for j in range(m):
            block = [2 * a for a in range(m) if a != i]
            block += [2 * b + 1 for b in range(m) if b != j]
            blocks.append(block)
    return IncidenceStructure(2 * m, blocks)


def union_of_transversal_designs(k, u, multiplicities) -> IncidenceStructure:
    """Multiset union of n_i copies of TD_i(k, u), i = 1, 2, 3, ..."""
    design = None
    for i, count in enumerate(multiplicities, start=1):
        for _ in range(count):
            piece = transversal_design(k, u, i)
            design = piece if design is None else multiset_union(design, piece)
    if design is None:
        raise ValueError("empty multiplicity vector")
    return design
