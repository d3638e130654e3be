"""Local h-polynomials and their expansion over uniform subdivisions.

The local h-polynomial of a triangulation of a simplex is the
alternating sum of the h-polynomials of its restrictions to the faces
of the base.  For a subdivision built uniformly (same face counts over
every base face of a given size, recorded in an FTriangle) that
polynomial decomposes into a fixed family ell_mkj with nonnegative
integer weights read off the inner triangulation alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import full_simplex, h_polynomial
from .perm import d_nkj, derangement_counts
from .poly import Poly, add, binom, mul, neg, normalize, power, scale, shift
from .triangulate import FTriangle, Triangulation, restriction


def _require_simplex_base(T: Triangulation) -> tuple[int, ...]:
    verts = T.base.vertices
    if T.base != full_simplex(verts):
        raise ValueError("the base complex must be a full simplex")
    return verts


def local_h(T: Triangulation) -> Poly:
    """Alternating sum of restriction h-polynomials over base faces."""
    verts = _require_simplex_base(T)
    n = len(verts)
    acc: Poly = ()
    for size in range(n + 1):
        for f in combinations(verts, size):
            h = h_polynomial(restriction(T, f).total, size)
            acc = add(acc, h if (n - size) % 2 == 0 else neg(h))
    return acc


def h_from_local(T: Triangulation) -> Poly:
    """Sum of local h-polynomials of all restrictions.

    Inverts :func:`local_h`; the result equals the h-polynomial of
    ``T.total``, which tests assert independently.
    """
    verts = _require_simplex_base(T)
    acc: Poly = ()
    for size in range(len(verts) + 1):
        for f in combinations(verts, size):
            acc = add(acc, local_h(restriction(T, f)))
    return acc


@dataclass(frozen=True)
class CoefficientMatrix:
    """Weights c_{k,j}, k + j <= n, of the uniform decomposition.

    ``rows[k]`` holds the values for j = 0..n-k.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} rows, got {len(self.rows)}")
        for k, row in enumerate(self.rows):
            if len(row) != self.n - k + 1:
                raise ValueError(f"row {k} must have {self.n - k + 1} entries")

    def c(self, k: int, j: int) -> int:
        if not (0 <= k and 0 <= j and k + j <= self.n):
            raise ValueError(f"need k, j >= 0 with k + j <= {self.n}")
        return self.rows[k][j]

    def entries(self) -> tuple[tuple[int, int, int], ...]:
        """Nonzero (k, j, value) triples in row-major order."""
        return tuple((k, j, v) for k, row in enumerate(self.rows)
                     for j, v in enumerate(row) if v)


def c_coefficients(G: Triangulation) -> CoefficientMatrix:
    """Decomposition weights of a triangulation of a simplex.

    c_{k,j} adds up the x^j coefficients of the local h-polynomials of
    the restrictions of ``G`` to all (n-k)-subsets of the base.
    """
    verts = _require_simplex_base(G)
    n = len(verts)
    rows = []
    for k in range(n + 1):
        row = [0] * (n - k + 1)
        for f in combinations(verts, n - k):
            ell = local_h(restriction(G, f))
            for j, coeff in enumerate(ell):
                row[j] += coeff
        rows.append(tuple(row))
    return CoefficientMatrix(n, tuple(rows))


def _h_row(F: FTriangle, j: int) -> Poly:
    """h-polynomial of the subdivided j-vertex simplex, from row j."""
    acc: Poly = ()
    for i in range(j + 1):
        acc = add(acc, scale(shift(power((1, -1), j - i), i), F.f(i, j)))
    return normalize(acc)


def p_poly(F: FTriangle, m: int, k: int) -> Poly:
    """Binomial transform of the h-polynomials of sizes m-k..m."""
    if not (0 <= k <= m <= F.n):
        raise ValueError(f"need 0 <= k <= m <= {F.n}, got k={k}, m={m}")
    acc: Poly = ()
    for i in range(k + 1):
        acc = add(acc, scale(mul(power((-1, 1), i), _h_row(F, m - i)),
                             binom(k, i)))
    return acc


def ell_mk(F: FTriangle, m: int, k: int) -> Poly:
    """Alternating version of :func:`p_poly` with the sign on the
    binomial instead of a power of x - 1; interpolates from the h-row
    at k = 0 down to the local h-polynomial at k = m."""
    if not (0 <= k <= m <= F.n):
        raise ValueError(f"need 0 <= k <= m <= {F.n}, got k={k}, m={m}")
    acc: Poly = ()
    for i in range(k + 1):
        acc = add(acc, scale(_h_row(F, m - i), (-1) ** i * binom(k, i)))
    return acc


def ell_mkj(F: FTriangle, m: int, k: int, j: int) -> Poly:
    """The two-parameter refinement; defined only for k + j <= m.

    Outside that range the defining sum still evaluates but stops
    satisfying the identities that make it useful, so it is an error.
    """
    if not (0 <= m <= F.n):
        raise ValueError(f"need 0 <= m <= {F.n}, got m={m}")
    if k < 0 or j < 0 or k + j > m:
        raise ValueError(f"need k, j >= 0 with k + j <= m, got k={k}, j={j}, m={m}")
    acc: Poly = ()
    for i in range(k + 1):
        acc = add(acc, scale(p_poly(F, m - i, j), (-1) ** i * binom(k, i)))
    return acc


def local_h_via_uniform(F: FTriangle, c: CoefficientMatrix) -> Poly:
    """Local h-polynomial of a uniform refinement, from weights alone.

    Combines ``ell_mkj(F, n, k, j)`` with the weights of the inner
    triangulation; equals ``local_h`` of the composed subdivision.
    """
    if c.n > F.n:
        raise ValueError(f"matrix size {c.n} exceeds triangle size {F.n}")
    acc: Poly = ()
    for k, j, value in c.entries():
        acc = add(acc, scale(ell_mkj(F, c.n, k, j), value))
    return acc


def second_sd_local_h(n: int) -> Poly:
    """Local h-polynomial of the twice barycentrically subdivided
    (n-1)-simplex, assembled from permutation statistics.

    Fixed-point-free permutations of the complementary set weight the
    position-refined d-polynomials; equals the direct computation on
    the built subdivision.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc: Poly = ()
    for k in range(n + 1):
        counts = derangement_counts(n - k)
        for j in range(n - k + 1):
            mult = binom(n, k) * (counts[j] if j < len(counts) else 0)
            if mult:
                acc = add(acc, scale(d_nkj(n, k, j), mult))
    return acc
