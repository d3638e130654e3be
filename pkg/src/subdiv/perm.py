"""Permutation and word statistics and their enumerating polynomials.

Permutations are tuples in one-line notation over [n], 1-indexed: w[i-1]
is the image of i. Enumerations over S_n are capped at n <= 10 (10! is a
few seconds of work; everything downstream needs n <= 8).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from .poly import Poly, normalize, power, veronese

MAX_ENUM_N = 10

Perm = tuple[int, ...]


def _check_perm(w: Perm) -> None:
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w!r}")


def _check_enum(n: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_ENUM_N:
        raise ValueError(f"enumeration over S_{n} exceeds the desk-scale bound {MAX_ENUM_N}")


def descents(w: Perm) -> int:
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def ascents(w: Perm) -> int:
    return sum(1 for i in range(len(w) - 1) if w[i] < w[i + 1])


def excedances(w: Perm) -> int:
    return sum(1 for i, v in enumerate(w, start=1) if v > i)


def fixed_points(w: Perm) -> frozenset[int]:
    return frozenset(i for i, v in enumerate(w, start=1) if v == i)


@dataclass(frozen=True)
class PermStats:
    des: int
    asc: int
    exc: int
    fix: frozenset[int]


def stats(w: Perm) -> PermStats:
    """Descent, ascent, excedance and fixed-point data of w."""
    _check_perm(w)
    return PermStats(descents(w), ascents(w), excedances(w), fixed_points(w))


def _counts_to_poly(counts: dict[int, int]) -> Poly:
    if not counts:
        return ()
    top = max(counts)
    return normalize(counts.get(i, 0) for i in range(top + 1))


@lru_cache(maxsize=None)
def eulerian(n: int) -> Poly:
    """The descent enumerator over S_n, with the empty product giving 1."""
    _check_enum(n)
    counts: dict[int, int] = {}
    for w in permutations(range(1, n + 1)):
        d = descents(w)
        counts[d] = counts.get(d, 0) + 1
    return _counts_to_poly(counts)


def p_nk(n: int, k: int) -> Poly:
    """Descent enumerator over permutations of [n+1] with first value k+1."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    _check_enum(n + 1)
    counts: dict[int, int] = {}
    rest = [v for v in range(1, n + 2) if v != k + 1]
    for tail in permutations(rest):
        d = descents((k + 1,) + tail)
        counts[d] = counts.get(d, 0) + 1
    return _counts_to_poly(counts)


def p_nk_via_excedance(n: int, k: int) -> Poly:
    """Excedance enumerator over permutations of [n+1] sending k+1 to 1."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    table = _sweep(n + 1)
    counts: dict[int, int] = {}
    for (maxfix, jpos, exc), cnt in table.items():
        if jpos == k + 1:
            counts[exc] = counts.get(exc, 0) + cnt
    return _counts_to_poly(counts)


@lru_cache(maxsize=None)
def _sweep(m: int) -> dict[tuple[int, int, int], int]:
    """One pass over S_m keyed by (max fixed point, position of value 1, exc).

    max fixed point is 0 for fixed-point-free permutations, so the
    constraint Fix(w) within [t] reads as maxfix <= t.
    """
    _check_enum(m)
    if m == 0:
        # The empty permutation: no fixed points, no value 1, no excedances.
        return {(0, 0, 0): 1}
    acc: dict[tuple[int, int, int], int] = {}
    for w in permutations(range(1, m + 1)):
        maxfix = 0
        exc = 0
        for i, v in enumerate(w, start=1):
            if v == i:
                maxfix = i
            elif v > i:
                exc += 1
        key = (maxfix, w.index(1) + 1, exc)
        acc[key] = acc.get(key, 0) + 1
    return acc


def d_nk(n: int, k: int) -> Poly:
    """Excedance enumerator over w in S_n with all fixed points in [n-k]."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    counts: dict[int, int] = {}
    for (maxfix, _, exc), cnt in _sweep(n).items():
        if maxfix <= n - k:
            counts[exc] = counts.get(exc, 0) + cnt
    return _counts_to_poly(counts)


def d_nkj(n: int, k: int, j: int) -> Poly:
    """Excedance enumerator over w in S_{n+1} with fixed points in
    [n+1-k] and value 1 in position j+1.

    Indices outside 0 <= k, j <= n are rejected; no convention is defined
    out there and silent extension would break the identities that hold
    in range.
    """
    if not (0 <= k <= n and 0 <= j <= n):
        raise ValueError(f"need 0 <= k, j <= n, got n={n}, k={k}, j={j}")
    counts: dict[int, int] = {}
    for (maxfix, jpos, exc), cnt in _sweep(n + 1).items():
        if jpos == j + 1 and maxfix <= n + 1 - k:
            counts[exc] = counts.get(exc, 0) + cnt
    return _counts_to_poly(counts)


def foata(w: Perm) -> Perm:
    """The fundamental transformation: write each cycle with its smallest
    element first, sort cycles by decreasing smallest element, erase the
    parentheses."""
    _check_perm(w)
    n = len(w)
    seen = [False] * (n + 1)
    cycles: list[list[int]] = []
    for start in range(1, n + 1):
        # First unvisited element of a cycle is its minimum.
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        v = w[start - 1]
        while v != start:
            cyc.append(v)
            seen[v] = True
            v = w[v - 1]
        cycles.append(cyc)
    cycles.sort(key=lambda c: -c[0])
    return tuple(v for cyc in cycles for v in cyc)


def bad_points(w: Perm) -> frozenset[int]:
    """Values w(j) where j is a left-to-right minimum position and either
    j is the last position or w(j) > w(j+1).

    The source definition garbles one index (it tests i where only j is
    in scope); this is the j reading, the one under which the fixed-point
    property of the fundamental transformation holds for all n <= 8.
    """
    _check_perm(w)
    n = len(w)
    out = set()
    cur_min = n + 1
    for idx in range(n):
        if w[idx] < cur_min:
            cur_min = w[idx]
            if idx == n - 1 or w[idx] > w[idx + 1]:
                out.add(w[idx])
    return frozenset(out)


def d_nk_via_bad_points(n: int, k: int) -> Poly:
    """Ascent enumerator over w in S_n whose bad points lie in [n-k]."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    _check_enum(n)
    counts: dict[int, int] = {}
    for w in permutations(range(1, n + 1)):
        if all(b <= n - k for b in bad_points(w)):
            a = ascents(w)
            counts[a] = counts.get(a, 0) + 1
    return _counts_to_poly(counts)


def derangement_counts(n: int) -> tuple[int, ...]:
    """Number of fixed-point-free permutations of [n] by excedance count.

    Returns (D_{n,0}, ..., D_{n,n-1}) for n >= 1 and (1,) for n = 0.
    """
    _check_enum(n)
    if n == 0:
        return (1,)
    out = [0] * n
    for (maxfix, _, exc), cnt in _sweep(n).items():
        if maxfix == 0:
            out[exc] += cnt
    return tuple(out)


def words(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """All maps {0..n-1} -> {0..r-1} with first letter 0."""
    if n < 1 or r < 1:
        raise ValueError("words need n >= 1 and r >= 1")
    for tail in product(range(r), repeat=n - 1):
        yield (0,) + tail


def word_ascents(w: tuple[int, ...]) -> int:
    return sum(1 for i in range(1, len(w)) if w[i - 1] < w[i])


def e_nr_words(n: int, r: int) -> Poly:
    counts: dict[int, int] = {}
    for w in words(n, r):
        a = word_ascents(w)
        counts[a] = counts.get(a, 0) + 1
    return _counts_to_poly(counts)


def e_nr_veronese(n: int, r: int) -> Poly:
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    return veronese(power((1,) * r, n), r, 0)


def E_nr(n: int, r: int) -> Poly:
    """h-polynomial of the r-fold edgewise subdivision of the simplex on
    n vertices, computed by word enumeration and cross-checked against
    the Veronese section route."""
    by_words = e_nr_words(n, r)
    by_sections = e_nr_veronese(n, r)
    if by_words != by_sections:
        raise AssertionError(
            f"word and Veronese routes disagree for E({n},{r}): "
            f"{by_words} vs {by_sections}"
        )
    return by_words
