"""Exact integer spectra of circulant rows and concurrence matrices.

Everything here is integer or Fraction arithmetic; no floating point is
used anywhere.  Circulant eigenvalues are evaluated per divisor class
{j : gcd(j, v) = g} through Ramanujan sums, then certified with an
annihilating-polynomial check in the circulant convolution ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .incidence import ConcurrenceMatrix


class NonIntegral:
    """Sentinel result: the matrix has no all-integer spectrum."""

    def __init__(self, reason: str):
        self.reason = reason

    def __repr__(self):
        return f"NonIntegral({self.reason!r})"

    def __bool__(self):
        return False


class Fail:
    """Sentinel result of a failed spectral verification."""

    def __init__(self, reason: str):
        self.reason = reason

    def __repr__(self):
        return f"Fail({self.reason!r})"

    def __bool__(self):
        return False


@dataclass(frozen=True)
class CirculantRow:
    """Compressed symmetric first row [c_0 .. c_{v//2}] of a v x v circulant."""

    v: int
    c: tuple[int, ...]

    def __init__(self, v, c):
        c = tuple(int(x) for x in c)
        if v < 1:
            raise ValueError("order must be positive")
        if len(c) != v // 2 + 1:
            raise ValueError(f"expected {v // 2 + 1} entries for order {v}")
        if any(x < 0 for x in c):
            raise ValueError("entries must be nonnegative")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "c", c)

    def full_row(self):
        """Expand to the full first row via c_{v-i} = c_i."""
        return tuple(self.c[i] if i <= self.v // 2 else self.c[self.v - i]
                     for i in range(self.v))

    def to_matrix(self) -> ConcurrenceMatrix:
        row = self.full_row()
        return ConcurrenceMatrix(
            [[row[(j - i) % self.v] for j in range(self.v)] for i in range(self.v)]
        )

    def scale(self, l):
        return CirculantRow(self.v, tuple(l * x for x in self.c))

    def __str__(self):
        return f"{self.v}:" + ",".join(str(x) for x in self.c)


@dataclass(frozen=True)
class ExactSpectrum:
    """Integer eigenvalues with multiplicities, descending by eigenvalue."""

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs):
        merged = {}
        for value, mult in pairs:
            merged[int(value)] = merged.get(int(value), 0) + int(mult)
        if any(m <= 0 for m in merged.values()):
            raise ValueError("multiplicities must be positive")
        object.__setattr__(
            self, "pairs", tuple(sorted(merged.items(), key=lambda p: -p[0]))
        )

    @property
    def order(self):
        return sum(m for _, m in self.pairs)

    def multiplicity(self, value):
        return dict(self.pairs).get(value, 0)

    def __str__(self):
        return "[" + ", ".join(f"{val}^{m}" for val, m in self.pairs) + "]"


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius undefined for n < 1")
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return sum(1 for j in range(1, n + 1) if gcd(j, n) == 1)


@lru_cache(maxsize=None)
def ramanujan_sum(d: int, i: int) -> int:
    """Sum of exp(2 pi i j/d) over j coprime to d, via the Moebius formula."""
    g = gcd(i, d)
    return sum(e * moebius(d // e) for e in range(1, g + 1) if g % e == 0)


def divisor_classes(v: int):
    """Partition of 0..v-1 into classes {j : gcd(j, v) = g}, keyed by d = v/g.

    Returns a list of (d, indices) sorted by d; d = 1 is the class {0}.
    """
    classes = {}
    for j in range(v):
        d = v // gcd(j, v)
        classes.setdefault(d, []).append(j)
    return sorted(classes.items())


def circulant_class_values(row: CirculantRow):
    """Eigenvalue candidate per divisor class, as exact Fractions.

    On the class of d the common value of f(omega^j) is
    sum_i c_i R_d(i) / phi(d); it is the true eigenvalue whenever the
    whole spectrum is integral.
    """
    full = row.full_row()
    values = []
    for d, indices in divisor_classes(row.v):
        total = sum(c * ramanujan_sum(d, i) for i, c in enumerate(full))
        values.append((d, len(indices), Fraction(total, euler_phi(d))))
    return values


def _cyclic_convolve(a, b, v):
    out = [0] * v
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[(i + j) % v] += x * y
    return out


def circulant_eigenvalues(row: CirculantRow):
    """ExactSpectrum of the circulant matrix, or NonIntegral.

    The per-class Ramanujan values are certified by checking that the
    product of (C - value i) over the distinct candidate values is the
    zero matrix, computed in the circulant convolution ring.
    """
    v = row.v
    values = circulant_class_values(row)
    for d, _, val in values:
        if val.denominator != 1:
            return NonIntegral(f"class d={d} value {val} is not an integer")
    spectrum = {}
    for _, size, val in values:
        spectrum[int(val)] = spectrum.get(int(val), 0) + size
    # annihilating polynomial check: prod (C - val I) = 0
    poly = [1] + [0] * (v - 1)
    base = list(row.full_row())
    for val in spectrum:
        shifted = base.copy()
        shifted[0] -= val
        poly = _cyclic_convolve(poly, shifted, v)
    if any(poly):
        return NonIntegral("eigenvalues are not constant on a divisor class")
    return ExactSpectrum(spectrum.items())


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        row = out[i]
        for t in range(m):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(p):
                    row[j] += x * bt[j]
    return out


def power_sums(matrix: ConcurrenceMatrix, m_max: int):
    """Exact traces [tr(C^0), tr(C^1), ..., tr(C^m_max)]."""
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    v = matrix.v
    traces = [v]
    power = [list(r) for r in matrix.entries]
    for _ in range(m_max):
        traces.append(sum(power[i][i] for i in range(v)))
        if len(traces) <= m_max:
            power = mat_mul(power, [list(r) for r in matrix.entries])
    return traces


def verify_three_eigenvalues(matrix: ConcurrenceMatrix, kr: int, n: int):
    """Check Spec(C) = [kr^1, n^sigma, 0^(v-1-sigma)] exactly; return sigma.

    Verifies C (C - nI) (C - krI) = 0, then recovers sigma from
    tr(C) = kr + sigma n and tr(C^2) = kr^2 + sigma n^2.  Returns the
    multiplicity sigma on success and Fail otherwise.  Works for any
    symmetric nonnegative integer matrix, circulant or not; a two-value
    spectrum (a 2-design, where 0 does not occur) passes with
    sigma = v - 1.
    """
    v = matrix.v
    if n <= 0:
        return Fail("middle eigenvalue must be positive")
    a = [list(r) for r in matrix.entries]
    b = [[a[i][j] - (n if i == j else 0) for j in range(v)] for i in range(v)]
    c = [[a[i][j] - (kr if i == j else 0) for j in range(v)] for i in range(v)]
    product = mat_mul(mat_mul(a, b), c)
    if any(x for r in product for x in r):
        return Fail("C (C - nI) (C - krI) != 0")
    trace1 = sum(a[i][i] for i in range(v))
    trace2 = sum(sum(a[i][j] * a[j][i] for j in range(v)) for i in range(v))
    if (trace1 - kr) % n != 0:
        return Fail(f"tr(C) = {trace1} does not fit kr + sigma n")
    sigma = (trace1 - kr) // n
    if sigma < 0 or 1 + sigma > v:
        return Fail(f"multiplicity sigma = {sigma} out of range")
    if trace2 != kr * kr + sigma * n * n:
        return Fail(f"tr(C^2) = {trace2} does not match sigma = {sigma}")
    return sigma


def charpoly(matrix_rows):
    """Characteristic polynomial coefficients, exact (Faddeev-LeVerrier).

    Returns [a_0, ..., a_n] with p(x) = sum a_i x^i and a_n = 1.
    """
    n = len(matrix_rows)
    a = [[Fraction(x) for x in row] for row in matrix_rows]
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    for kk in range(1, n + 1):
        for i in range(n):
            m[i][i] += coeffs[-1]
        m = mat_mul(a, m)
        c = -sum(m[i][i] for i in range(n)) / kk
        coeffs.append(c)
    coeffs.reverse()  # now a_0 .. a_n with a_n = 1
    return coeffs


def exact_integer_spectrum(matrix: ConcurrenceMatrix):
    """ExactSpectrum of a symmetric integer matrix, or NonIntegral.

    Factors the exact characteristic polynomial over the integers by
    rational-root extraction; symmetric integer matrices have real
    spectra, so full splitting means an all-integer spectrum.
    """
    coeffs = charpoly([list(r) for r in matrix.entries])
    if any(c.denominator != 1 for c in coeffs):
        return NonIntegral("characteristic polynomial is not integral")
    poly = [int(c) for c in coeffs]
    # Gershgorin: every eigenvalue lies within the largest absolute row sum
    bound = max(sum(abs(x) for x in row) for row in matrix.entries)
    spectrum = {}
    remaining = poly
    while len(remaining) > 1:
        root = None
        for cand in sorted(range(-bound, bound + 1), key=lambda x: (abs(x), x)):
            acc = 0
            for c in reversed(remaining):
                acc = acc * cand + c
            if acc == 0:
                root = cand
                break
        if root is None:
            return NonIntegral("characteristic polynomial has a non-integer root")
        # synthetic division by (x - root)
        quotient = [0] * (len(remaining) - 1)
        acc = 0
        for i in range(len(remaining) - 1, 0, -1):
            acc = remaining[i] + acc * root
            quotient[i - 1] = acc
        spectrum[root] = spectrum.get(root, 0) + 1
        remaining = quotient
    return ExactSpectrum(spectrum.items())
