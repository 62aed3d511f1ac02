"""Enumeration of circulant rows that could be concurrence matrices.

For a fixed order v, block size k and multiplicity sigma, the spectrum
[kr^1, n^sigma, 0^(v-1-sigma)] assigns the value n or 0 to entire
divisor classes {j : gcd(j, v) = g}; inverting the discrete Fourier
transform through Ramanujan sums recovers the unique row with those
class values:

    c_i = (kr + n * sum of R_d(i) over the chosen classes) / v.

Rows survive when every c_i is a nonnegative integer and the parameter
tuple (alpha, beta, b, sigma) is itself integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .algebra import Infeasible, PgdParams, derive_params
from .spectra import (
    CirculantRow,
    ExactSpectrum,
    circulant_eigenvalues,
    divisor_classes,
    ramanujan_sum,
)

MAX_ORDER = 16


@dataclass(frozen=True)
class FeasibilityCase:
    v: int
    k: int
    r: int
    n: int
    sigma: int
    row: CirculantRow
    params: PgdParams
    primitive_row: CirculantRow  # gcd-reduced generator of the scaling ray
    scale: int  # row = scale * primitive_row
    minimal: bool  # no smaller multiple of the ray is feasible

    def expected_spectrum(self):
        kr = self.k * self.r
        pairs = [(kr, 1), (self.n, self.sigma)]
        if self.v - 1 - self.sigma > 0:
            pairs.append((0, self.v - 1 - self.sigma))
        return ExactSpectrum(pairs)


def _row_for_assignment(v, kr, n, chosen_ds):
    """The unique symmetric row whose class values are kr at j=0, n on the
    chosen divisor classes, and 0 elsewhere; None unless it is a
    nonnegative integer vector."""
    half = v // 2 + 1
    c = []
    for i in range(half):
        total = kr + n * sum(ramanujan_sum(d, i) for d in chosen_ds)
        value = Fraction(total, v)
        if value.denominator != 1 or value < 0:
            return None
        c.append(int(value))
    return tuple(c)


def _minimal_scale(v, k, r, n, g):
    """Smallest t with t | g such that the (r/g*t)-instance is feasible."""
    for t in range(1, g + 1):
        if g % t:
            continue
        scaled = derive_params(v, k, r * t // g, n * t // g)
        if not isinstance(scaled, Infeasible):
            return t
    return g


def feasible_rows(v, k, sigma, r_max, include_improper=False):
    """All FeasibilityCases with the given (v, k, sigma) and r <= r_max.

    Improper cases (alpha = 0, forced by n = kr) are suppressed unless
    include_improper is set.  Every returned row is re-certified against
    its expected exact spectrum.
    """
    if not 2 <= k <= v - 2:
        raise ValueError("need 2 <= k <= v - 2")
    if not 1 <= sigma <= v - 1:
        raise ValueError("need 1 <= sigma <= v - 1")
    if r_max < 1:
        raise ValueError("need r_max >= 1")
    nonzero = [(d, len(idx)) for d, idx in divisor_classes(v) if d > 1]
    assignments = [
        subset
        for size in range(1, len(nonzero) + 1)
        for subset in combinations(nonzero, size)
        if sum(mult for _, mult in subset) == sigma
    ]
    cases = []
    seen = set()
    for r in range(1, r_max + 1):
        if r * (v - k) % sigma:
            continue
        n = r * (v - k) // sigma
        params = derive_params(v, k, r, n)
        if isinstance(params, Infeasible):
            continue
        if params.alpha == 0 and not include_improper:
            continue
        for subset in assignments:
            c = _row_for_assignment(v, k * r, n, [d for d, _ in subset])
            if c is None or c[0] != r or c in seen:
                continue
            seen.add(c)
            row = CirculantRow(v, c)
            case = _build_case(v, k, r, n, sigma, row, params)
            if circulant_eigenvalues(row) != case.expected_spectrum():
                raise AssertionError(f"spectrum certification failed for {row}")
            cases.append(case)
    cases.sort(key=lambda case: (case.r, case.row.c))
    return cases


def _build_case(v, k, r, n, sigma, row, params):
    g = 0
    for x in row.c:
        g = gcd(g, x)
    primitive = CirculantRow(v, tuple(x // g for x in row.c))
    minimal_t = _minimal_scale(v, k, r, n, g)
    return FeasibilityCase(
        v=v, k=k, r=r, n=n, sigma=sigma, row=row, params=params,
        primitive_row=primitive, scale=g, minimal=(minimal_t == g),
    )


def order_scan(v, k_range, r_max, include_improper=False):
    """Exhaustive feasibility scan over sigma = 1..v-2 for each block size.

    sigma = v - 1 (no zero eigenvalue, the 2-design rows) is excluded:
    those families are classical and are not part of the circulant
    catalog.  Output is grouped by (k, sigma).
    """
    if v > MAX_ORDER:
        raise ValueError(f"order scan is desk-scale only (v <= {MAX_ORDER})")
    catalog = {}
    for k in k_range:
        for sigma in range(1, v - 1):
            cases = feasible_rows(v, k, sigma, r_max, include_improper)
            if cases:
                catalog[(k, sigma)] = cases
    return dict(sorted(catalog.items()))


# ---------------------------------------------------------------------------
# forced integrality relations


from functools import lru_cache


@lru_cache(maxsize=None)
def _cyclotomic(d):
    """Coefficients of the d-th cyclotomic polynomial, ascending."""
    poly = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in range(1, d):
        if d % e:
            continue
        phi_e = _cyclotomic(e)
        # exact polynomial division: poly /= phi_e
        out = [0] * (len(poly) - len(phi_e) + 1)
        rem = list(poly)
        for i in range(len(out) - 1, -1, -1):
            out[i] = rem[i + len(phi_e) - 1] // phi_e[-1]
            for j, coef in enumerate(phi_e):
                rem[i + j] -= out[i] * coef
        if any(rem):
            raise ArithmeticError("cyclotomic division left a remainder")
        poly = out
    return tuple(poly)


def integrality_constraints(v):
    """Linear relations among c_0..c_(v//2) forced by eigenvalue integrality.

    For each divisor d of v, reducing f(x) = sum c_full[i] x^i modulo the
    d-th cyclotomic polynomial must leave a constant; the coefficients of
    x^1..x^(phi(d)-1) give integer relations.  Returns a list of
    (d, relation) pairs where each relation is a coefficient vector over
    (c_0, ..., c_(v//2)); redundant and zero relations are dropped.
    """
    if v > MAX_ORDER:
        raise ValueError(f"desk scale only (v <= {MAX_ORDER})")
    half = v // 2 + 1
    relations = []
    for d in range(2, v + 1):
        if v % d:
            continue
        phi_d = _cyclotomic(d)
        deg = len(phi_d) - 1
        # symbolic coefficients: vector over c_0..c_half-1 per power of x
        sym = [[0] * half for _ in range(v)]
        for i in range(v):
            sym[i][i if i < half else v - i] += 1
        # reduce modulo phi_d (monic): x^(deg) = -(lower part)
        for power in range(v - 1, deg - 1, -1):
            vec = sym[power]
            if not any(vec):
                continue
            for j in range(deg):
                for t in range(half):
                    sym[power - deg + j][t] -= phi_d[j] * vec[t]
            sym[power] = [0] * half
        for power in range(1, deg):
            vec = tuple(sym[power])
            if any(vec):
                relations.append((d, vec))
    # drop scalar-multiple duplicates
    unique = []
    seen = set()
    for d, vec in relations:
        g = 0
        for x in vec:
            g = gcd(g, x)
        norm = tuple(x // g for x in vec)
        if norm[next(i for i, x in enumerate(norm) if x)] < 0:
            norm = tuple(-x for x in norm)
        if norm not in seen:
            seen.add(norm)
            unique.append((d, norm))
    return unique


def forced_equalities(v):
    """Pairs (i, j) with c_i = c_j forced by integrality, human-readable."""
    relations = integrality_constraints(v)
    pairs = []
    for _, vec in relations:
        support = [i for i, x in enumerate(vec) if x]
        if len(support) == 2:
            i, j = support
            if vec[i] + vec[j] == 0:
                pairs.append((i, j))
    return sorted(set(pairs))
