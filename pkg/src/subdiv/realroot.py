"""Exact certificates for real-rootedness and interlacing.

Everything here runs over exact rational arithmetic: Sturm chains with
content-stripped integer entries, Yun's squarefree decomposition for
multiplicities, and bisection only down to isolating intervals whose
endpoints are certified non-roots.  No floating point is involved, so a
``True`` answer is a proof, not an estimate.

Interlacing follows the weak-alternation convention: ``f`` interlaces
``g`` when both are real-rooted, ``deg g - 1 <= deg f <= deg g``, and
their roots alternate ``... <= alpha_2 <= beta_2 <= alpha_1 <= beta_1``
(alphas are roots of ``f``, betas of ``g``, listed in decreasing order
with multiplicity).  The zero polynomial interlaces and is interlaced by
every real-rooted polynomial, and nonzero constants interlace every
polynomial of degree at most one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .poly import Poly, degree, derivative, eval_at, mul, normalize

_SCAN_LIMIT = 64  # integer root candidates probed before bisection


def _to_fractions(f: Poly) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in f)


def _int_primitive(f: Poly) -> Poly:
    """Clear denominators and strip content, keeping the sign."""
    if not f:
        return ()
    fr = _to_fractions(f)
    scale = math.lcm(*(c.denominator for c in fr))
    ints = [int(c * scale) for c in fr]
    content = math.gcd(*(abs(c) for c in ints))
    return tuple(c // content for c in ints)


def _pos_primitive(f: Poly) -> Poly:
    g = _int_primitive(f)
    if g and g[-1] < 0:
        g = tuple(-c for c in g)
    return g


def _divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in f]
    glead = Fraction(g[-1])
    dg = len(g) - 1
    q = [Fraction(0)] * max(0, len(r) - dg)
    while len(r) > dg:
        if r[-1] == 0:
            r.pop()
            continue
        k = len(r) - 1 - dg
        coef = r[-1] / glead
        q[k] = coef
        for i in range(dg):
            r[k + i] -= coef * Fraction(g[i])
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return normalize(q), normalize(r)


def _div_exact(f: Poly, g: Poly) -> Poly:
    q, r = _divmod(f, g)
    if r:
        raise ArithmeticError("division was expected to be exact")
    return q


def _gcd_monic(f: Poly, g: Poly) -> Poly:
    a, b = normalize(f), normalize(g)
    while b:
        a, b = b, _divmod(a, b)[1]
    if not a:
        return ()
    lead = Fraction(a[-1])
    return tuple(Fraction(c) / lead for c in a)


def squarefree_part(f: Poly) -> Poly:
    """Quotient of ``f`` by ``gcd(f, f')``, primitive with positive lead.

    Raises ``ValueError`` on the zero polynomial; the result has the
    same distinct roots as ``f``, each simple.
    """
    if not f:
        raise ValueError("the zero polynomial has no squarefree part")
    if degree(f) == 0:
        return (1,)
    g = _gcd_monic(f, derivative(f))
    return _pos_primitive(_div_exact(f, g))


@lru_cache(maxsize=8192)
def _yun_cached(f: Poly) -> tuple[tuple[Poly, int], ...]:
    fr = _to_fractions(f)
    g = _gcd_monic(fr, derivative(fr))
    if degree(g) == 0:
        return ((_pos_primitive(fr), 1),)
    b = _div_exact(fr, g)
    d = tuple(x - y for x, y in _pad(_div_exact(derivative(fr), g), derivative(b)))
    out: list[tuple[Poly, int]] = []
    i = 1
    while degree(b) > 0:
        a = _gcd_monic(b, normalize(d))
        if degree(a) > 0:
            out.append((_pos_primitive(a), i))
        b2 = _div_exact(b, a)
        c = _div_exact(normalize(d), a)
        b = b2
        d = tuple(x - y for x, y in _pad(c, derivative(b)))
        i += 1
    return tuple(out)


def _pad(f: Poly, g: Poly):
    n = max(len(f), len(g))
    fz = tuple(f) + (0,) * (n - len(f))
    gz = tuple(g) + (0,) * (n - len(g))
    return zip(fz, gz)


def yun_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree factors of ``f`` with multiplicities, ascending.

    Factors are primitive integer polynomials with positive leading
    coefficient and are pairwise coprime; their product with the stated
    multiplicities equals ``f`` up to a constant.  Constants decompose
    to an empty list.
    """
    if not f:
        raise ValueError("cannot decompose the zero polynomial")
    if degree(f) == 0:
        return []
    return list(_yun_cached(tuple(f)))


@lru_cache(maxsize=8192)
def sturm_chain(f: Poly) -> tuple[Poly, ...]:
    """Signed remainder chain of ``f``, content-stripped at each step."""
    p0 = _int_primitive(f)
    chain = [p0]
    p1 = _int_primitive(derivative(p0))
    while p1:
        chain.append(p1)
        rem = _divmod(chain[-2], chain[-1])[1]
        p1 = _int_primitive(tuple(-c for c in rem))
    return tuple(chain)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


_POS_INF = object()
_NEG_INF = object()


def _sign_at(p: Poly, x) -> int:
    if not p:
        return 0
    if x is _POS_INF:
        return _sign(p[-1])
    if x is _NEG_INF:
        s = _sign(p[-1])
        return -s if degree(p) % 2 else s
    return _sign(eval_at(p, x))


def _variations(chain, x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots(chain, a, b, cache) -> int:
    """Distinct roots of ``chain[0]`` in the open interval ``(a, b)``.

    Both endpoints must be non-roots of ``chain[0]``.
    """
    for x in (a, b):
        if x not in cache:
            cache[x] = _variations(chain, x)
    return cache[a] - cache[b]


def cauchy_bound(f: Poly) -> Fraction:
    """Strict bound: every root of ``f`` has absolute value below it."""
    if degree(f) < 1:
        return Fraction(1)
    fr = _to_fractions(f)
    return 1 + max(abs(c) for c in fr[:-1]) / abs(fr[-1])


def _deflate(p: Poly, c: Fraction) -> Poly:
    """Divide out a known root ``c``, returning a primitive quotient."""
    out = []
    acc = Fraction(0)
    for coeff in reversed(p):
        acc = acc * c + coeff
        out.append(acc)
    if out[-1] != 0:
        raise ArithmeticError("deflation point is not a root")
    return _int_primitive(tuple(reversed(out[:-1])))


def _isolate_squarefree(p: Poly):
    """Isolate the real roots of a squarefree primitive polynomial.

    Returns ``(intervals, exacts, p_final, chain)`` where ``exacts`` are
    rational roots found on the way, ``intervals`` are open intervals
    with one root of ``p_final`` each, and endpoints of the intervals
    are non-roots of the original ``p``.  Some real roots may go
    undetected only if ``p`` has nonreal roots; callers compare counts
    against the degree to certify real-rootedness.
    """
    exacts: list[Fraction] = []
    if p and p[0] == 0:
        exacts.append(Fraction(0))
        p = tuple(p[1:])
    bound = cauchy_bound(p)
    limit = min(int(bound), _SCAN_LIMIT)
    for c in range(1, limit + 1):
        for s in (c, -c):
            if degree(p) >= 1 and eval_at(p, s) == 0:
                exacts.append(Fraction(s))
                p = _deflate(p, Fraction(s))
    if degree(p) == 1:
        exacts.append(Fraction(-p[0], p[1]))
        p = (p[1],)
    if degree(p) < 1:
        return [], sorted(exacts), p, None

    while True:
        chain = sturm_chain(p)
        bound = cauchy_bound(p)
        cache: dict = {}
        total = _count_roots(chain, -bound, bound, cache)
        stack = [(-bound, bound, total)]
        out: list[tuple[Fraction, Fraction]] = []
        hit = None
        while stack:
            a, b, cnt = stack.pop()
            if cnt == 0:
                continue
            if cnt == 1:
                out.append((a, b))
                continue
            m = (a + b) / 2
            if eval_at(p, m) == 0:
                hit = m
                break
            left = _count_roots(chain, a, m, cache)
            stack.append((a, m, left))
            stack.append((m, b, cnt - left))
        if hit is None:
            break
        exacts.append(hit)
        p = _deflate(p, hit)
        if degree(p) == 1:
            exacts.append(Fraction(-p[0], p[1]))
            p = (p[1],)
        if degree(p) < 1:
            return [], sorted(exacts), p, None

    # Shrink intervals until neither interior nor endpoints meet a
    # previously extracted root; downstream Sturm counts of arbitrary
    # divisors of the original polynomial need root-free endpoints.
    avoid = set(exacts)
    cleaned = []
    for a, b in out:
        while (a in avoid or b in avoid or any(a < c < b for c in avoid)):
            t = (a + b) / 2
            while t in avoid:
                t = (a + t) / 2
            if eval_at(p, t) == 0:
                a = b = t
                break
            if _count_roots(chain, a, t, cache) == 1:
                b = t
            else:
                a = t
        if a == b:
            exacts.append(a)
        else:
            cleaned.append((a, b))
    return sorted(cleaned), sorted(exacts), p, chain


@dataclass(frozen=True)
class RootIsolation:
    """Disjoint intervals, one per distinct real root, with multiplicity.

    Entries are ``(lo, hi, mult)`` in increasing order; a rational root
    found exactly during isolation appears degenerate, ``lo == hi``.
    """

    intervals: tuple[tuple[Fraction, Fraction, int], ...]

    @property
    def exact_roots(self) -> tuple[Fraction, ...]:
        return tuple(lo for lo, hi, _ in self.intervals if lo == hi)

    def pretty(self) -> str:
        if not self.intervals:
            return "no real roots"
        parts = []
        for lo, hi, m in self.intervals:
            body = f"{lo}" if lo == hi else f"({lo}, {hi})"
            parts.append(body if m == 1 else f"{body} x{m}")
        return ", ".join(parts)


def is_real_rooted(f: Poly) -> bool:
    """True when every complex root of ``f`` is real.

    The zero polynomial and constants count as real-rooted.
    """
    return _is_real_rooted_cached(tuple(f))


@lru_cache(maxsize=8192)
def _is_real_rooted_cached(f: Poly) -> bool:
    if not f or degree(f) == 0:
        return True
    sf = squarefree_part(f)
    if degree(sf) < 1:
        return True
    chain = sturm_chain(sf)
    bound = cauchy_bound(sf)
    return _count_roots(chain, -bound, bound, {}) == degree(sf)


def isolate_roots(f: Poly) -> RootIsolation:
    """Certified isolation of all roots of a real-rooted polynomial.

    Raises ``ValueError`` for the zero polynomial and for polynomials
    with nonreal roots.
    """
    if not f:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if degree(f) == 0:
        return RootIsolation(())

    records = []
    for factor, mult in yun_decomposition(f):
        ivs, exs, pfin, chain = _isolate_squarefree(factor)
        if len(ivs) + len(exs) != degree(factor):
            raise ValueError("polynomial has nonreal roots")
        for lo, hi in ivs:
            records.append([lo, hi, mult, pfin, chain])
        for c in exs:
            records.append([c, c, mult, None, None])

    # Refine until intervals from different squarefree factors are
    # pairwise disjoint; factors are coprime, so roots never coincide.
    while True:
        records.sort(key=lambda r: (r[0], r[1]))
        clash = None
        for r1, r2 in zip(records, records[1:]):
            lo = max(r1[0], r2[0])
            hi = min(r1[1], r2[1])
            if lo < hi or (r1[0] == r1[1] and r1[0] > r2[0]) or (
                r2[0] == r2[1] and r1[0] < r2[0] < r1[1]
            ):
                clash = (r1, r2)
                break
        if clash is None:
            break
        r1, r2 = clash
        if r1[0] == r1[1]:
            r1, r2 = r2, r1  # split the interval, not the point
        if r2[0] == r2[1] and r1[0] < r2[0] < r1[1]:
            t = r2[0]
        else:
            if r2[1] - r2[0] > r1[1] - r1[0]:
                r1, r2 = r2, r1
            t = (r1[0] + r1[1]) / 2
        cache: dict = {}
        if eval_at(r1[3], t) == 0:
            r1[0] = r1[1] = t
        elif _count_roots(r1[4], r1[0], t, cache) == 1:
            r1[1] = t
        else:
            r1[0] = t

    return RootIsolation(tuple((r[0], r[1], r[2]) for r in records))


def _slots_of(sf: Poly):
    """Sorted distinct-root slots of a squarefree polynomial."""
    ivs, exs, _, _ = _isolate_squarefree(sf)
    slots = [(c, c) for c in exs] + [(a, b) for a, b in ivs]
    slots.sort(key=lambda s: (s[0] + s[1]) / 2)
    return slots


def _slot_multiplicities(f: Poly, slots) -> list[int]:
    """Root multiplicity of ``f`` inside each slot.

    Slot endpoints must avoid all roots of ``f``; slots built from a
    squarefree multiple of ``f`` satisfy that.
    """
    counts = [0] * len(slots)
    for factor, mult in yun_decomposition(f):
        if degree(factor) < 1:
            continue
        chain = sturm_chain(factor)
        cache: dict = {}
        for idx, (a, b) in enumerate(slots):
            if a == b:
                if eval_at(factor, a) == 0:
                    counts[idx] += mult
            elif _count_roots(chain, a, b, cache) == 1:
                counts[idx] += mult
    return counts


def _interlace_core(f: Poly, g: Poly) -> tuple[bool, str]:
    f, g = normalize(f), normalize(g)
    if not f or not g:
        other = f or g
        if not other:
            return True, "both polynomials are zero"
        if is_real_rooted(other):
            return True, "zero polynomial convention"
        return False, "the nonzero polynomial is not real-rooted"
    if not is_real_rooted(f):
        return False, "first polynomial is not real-rooted"
    if not is_real_rooted(g):
        return False, "second polynomial is not real-rooted"
    df, dg = degree(f), degree(g)
    if not (dg - 1 <= df <= dg):
        return False, f"degree {df} outside window [{dg - 1}, {dg}]"
    sf = squarefree_part(mul(f, g))
    if degree(sf) < 1:
        return True, "no roots to compare"
    slots = _slots_of(sf)
    mf = _slot_multiplicities(f, slots)
    mg = _slot_multiplicities(g, slots)
    if sum(mf) != df or sum(mg) != dg:
        raise AssertionError("root count mismatch during interlacing check")
    alphas = [i for i in reversed(range(len(slots))) for _ in range(mf[i])]
    betas = [i for i in reversed(range(len(slots))) for _ in range(mg[i])]
    for i, beta in enumerate(betas):
        if i < len(alphas) and alphas[i] > beta:
            return False, "root alternation fails"
        if i + 1 < len(betas) and betas[i + 1] > alphas[i]:
            return False, "root alternation fails"
    return True, "roots weakly alternate"


def interlaces(f: Poly, g: Poly) -> bool:
    """True when ``f`` interlaces ``g`` (``f`` below, ``g`` above)."""
    return _interlace_core(tuple(f), tuple(g))[0]


@dataclass(frozen=True)
class InterlaceReport:
    """Outcome of an interlacing test with isolation evidence."""

    ok: bool
    reason: str
    f_isolation: RootIsolation | None
    g_isolation: RootIsolation | None


def interlace_report(f: Poly, g: Poly) -> InterlaceReport:
    """Like ``interlaces`` but keeps the evidence for display."""
    f, g = normalize(f), normalize(g)
    ok, reason = _interlace_core(f, g)

    def iso(p: Poly) -> RootIsolation | None:
        if not p or not is_real_rooted(p):
            return None
        return isolate_roots(p)

    return InterlaceReport(ok, reason, iso(f), iso(g))


def is_interlacing_sequence(fs) -> bool:
    """True when ``f_i`` interlaces ``f_j`` for every ``i < j``.

    Sequences may contain zero polynomials; each nonzero entry must be
    real-rooted.
    """
    polys = [normalize(f) for f in fs]
    for p in polys:
        if p and not is_real_rooted(p):
            return False
    return all(
        interlaces(polys[i], polys[j])
        for i in range(len(polys))
        for j in range(i + 1, len(polys))
    )
