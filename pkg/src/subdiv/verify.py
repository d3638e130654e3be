"""Replayable verification suites over the package's main identities.

Each suite enumerates a deterministic family of cases, runs one pure
check per case, and returns a report whose case order depends only on
the parameters.  Cases are picklable tuples so suites can shard across
processes; results are merged by sorting on the case key, never by
completion order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .complexes import h_polynomial
from .localh import (
    c_coefficients,
    ell_mk,
    ell_mkj,
    h_from_local,
    local_h,
    local_h_via_uniform,
    p_poly,
    second_sd_local_h,
)
from .perm import (
    E_nr,
    ascents,
    bad_points,
    d_nk,
    d_nkj,
    eulerian,
    fixed_points,
    foata,
)
from .poly import (
    Poly,
    add,
    format_poly,
    mul,
    power,
    reverse,
    scale,
    shift,
    sub,
    veronese,
)
from .realroot import interlaces, is_interlacing_sequence, is_real_rooted
from .triangulate import (
    FTriangle,
    Triangulation,
    barycentric,
    compose,
    edgewise,
    f_triangle,
    identity,
    iterated_sd,
    random_triangulation,
    stellar,
    trivial,
    validate_triangulation,
)

DEFAULT_SEEDS = tuple(range(1, 21))
DEFAULT_NS = (2, 3, 4)
DEFAULT_STEPS = 6
DEFAULT_KINDS = ("sd", "esd:2", "esd:3")

COUNTEREXAMPLE = (0, 7, 42, 63, 42, 7)


@dataclass(frozen=True)
class CaseResult:
    """Outcome of one case; ``params`` doubles as the sort key."""

    params: tuple[tuple[str, object], ...]
    ok: bool
    detail: str

    @property
    def label(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.params) or "-"


@dataclass(frozen=True)
class VerifySuiteReport:
    suite: str
    cases: tuple[CaseResult, ...]
    seconds: float

    @property
    def cases_run(self) -> int:
        return len(self.cases)

    @property
    def failures(self) -> tuple[CaseResult, ...]:
        return tuple(c for c in self.cases if not c.ok)

    @property
    def ok(self) -> bool:
        return not self.failures


@lru_cache(maxsize=None)
def _triangle(kind: str, n: int) -> FTriangle:
    if kind == "sd":
        return f_triangle("barycentric", n)
    if kind.startswith("esd:"):
        return f_triangle("edgewise", n, r=int(kind.split(":", 1)[1]))
    raise ValueError(f"unknown subdivision kind {kind!r}")


def _refine(kind: str, T: Triangulation) -> Triangulation:
    if kind == "sd":
        return barycentric(T)
    if kind.startswith("esd:"):
        return edgewise(T, int(kind.split(":", 1)[1]))
    raise ValueError(f"unknown subdivision kind {kind!r}")


def _gamma(n: int, seed: int, steps_cap: int) -> tuple[Triangulation, int]:
    steps = seed % (steps_cap + 1)
    return random_triangulation(range(1, n + 1), steps, seed=seed), steps


def _structural(T: Triangulation, n: int, problems: list[str]) -> Poly:
    """Invariants every constructed subdivision of a simplex must obey.

    A triangulation that fails validation is reported and not computed
    with further; the remaining checks assume a sound carrier map.
    """
    try:
        validate_triangulation(T)
    except ValueError as err:
        problems.append(f"structure: {err}")
        return ()
    ell = local_h(T)
    if ell != reverse(ell, n):
        problems.append(f"local h not symmetric: {format_poly(ell)}")
    if any(c < 0 for c in ell):
        problems.append(f"local h has a negative coefficient: {format_poly(ell)}")
    if h_from_local(T) != h_polynomial(T.total, n):
        problems.append("restriction sum does not give back the h-polynomial")
    return ell


def _result(params: dict, problems: list[str], ok_detail: str) -> CaseResult:
    key = tuple(sorted(params.items()))
    if problems:
        return CaseResult(key, False, "; ".join(problems))
    return CaseResult(key, True, ok_detail)


def _case_thm_sd(params: dict) -> CaseResult:
    n, seed = params["n"], params["seed"]
    G, steps = _gamma(n, seed, params["steps"])
    T = barycentric(G)
    problems: list[str] = []
    ell = _structural(T, n, problems)
    if not is_real_rooted(ell):
        problems.append(f"not real-rooted: {format_poly(ell)}")
    elif not interlaces(eulerian(n), ell):
        problems.append(
            f"{format_poly(eulerian(n))} does not interlace {format_poly(ell)}")
    return _result(params, problems, f"steps={steps} ell={format_poly(ell)}")


def _case_thm_esd(params: dict) -> CaseResult:
    n, r, seed = params["n"], params["r"], params["seed"]
    G, steps = _gamma(n, seed, params["steps"])
    T = edgewise(G, r)
    problems: list[str] = []
    ell = _structural(T, n, problems)
    if not is_real_rooted(ell):
        problems.append(f"not real-rooted: {format_poly(ell)}")
    elif not interlaces(E_nr(n, r), ell):
        problems.append(
            f"{format_poly(E_nr(n, r))} does not interlace {format_poly(ell)}")
    return _result(params, problems, f"steps={steps} ell={format_poly(ell)}")


def _case_thm_uniform(params: dict) -> CaseResult:
    n, seed, kind = params["n"], params["seed"], params["kind"]
    G, steps = _gamma(n, seed, params["steps"])
    T = compose(_refine(kind, identity(G.total)), G)
    problems: list[str] = []
    direct = _structural(T, n, problems)
    expanded = local_h_via_uniform(_triangle(kind, n), c_coefficients(G))
    if direct != expanded:
        problems.append(
            f"direct {format_poly(direct)} != expansion {format_poly(expanded)}")
    return _result(params, problems, f"steps={steps} ell={format_poly(direct)}")


def _case_thm_dnkj(params: dict) -> CaseResult:
    n, k = params["n"], params["k"]
    seq = [d_nkj(n, k, j) for j in range(n + 1)]
    problems: list[str] = []
    if not is_interlacing_sequence(seq):
        problems.append("(d_nkj)_j is not an interlacing sequence")
    a_n = eulerian(n)
    for j in range(n - k + 1):
        if not interlaces(a_n, seq[j]):
            problems.append(
                f"{format_poly(a_n)} does not interlace j={j}: {format_poly(seq[j])}")
    return _result(params, problems, f"{n + 1} polynomials certified")


def _case_cor_sd(params: dict) -> CaseResult:
    n, k = params["n"], params["k"]
    T = iterated_sd(range(1, n + 1), k)
    problems: list[str] = []
    ell = _structural(T, n, problems)
    if not is_real_rooted(ell):
        problems.append(f"not real-rooted: {format_poly(ell)}")
    elif not interlaces(eulerian(n), ell):
        problems.append(
            f"{format_poly(eulerian(n))} does not interlace {format_poly(ell)}")
    return _result(params, problems, f"ell={format_poly(ell)}")


def _case_cor_2sd(params: dict) -> CaseResult:
    n = params["n"]
    from_stats = second_sd_local_h(n)
    direct = local_h(iterated_sd(range(1, n + 1), 2))
    problems: list[str] = []
    if from_stats != direct:
        problems.append(
            f"statistics {format_poly(from_stats)} != direct {format_poly(direct)}")
    if from_stats != reverse(from_stats, n):
        problems.append("not symmetric")
    if any(c < 0 for c in from_stats):
        problems.append("negative coefficient")
    return _result(params, problems, f"ell={format_poly(from_stats)}")


def _case_prop_lnkj(params: dict) -> CaseResult:
    kind, part = params["kind"], params["part"]
    size = params["size"]
    F = _triangle(kind, size)
    problems: list[str] = []
    xm1 = (-1, 1)
    for m in range(size + 1):
        for k in range(m + 1):
            for j in range(m - k + 1):
                val = ell_mkj(F, m, k, j)
                if part == "a" and any(c < 0 for c in val):
                    problems.append(f"(m,k,j)=({m},{k},{j}) negative: {format_poly(val)}")
                elif part == "b" and reverse(val, m) != ell_mkj(F, m, k, m - k - j):
                    problems.append(f"(m,k,j)=({m},{k},{j}) reversal fails")
                elif part == "c" and j == 0 and val != ell_mk(F, m, k):
                    problems.append(f"(m,k)=({m},{k}) j=0 specialization fails")
                elif part == "d" and k == 0 and val != p_poly(F, m, j):
                    problems.append(f"(m,j)=({m},{j}) k=0 specialization fails")
                elif part == "e" and j >= 1:
                    want = add(ell_mkj(F, m, k, j - 1),
                               mul(xm1, ell_mkj(F, m - 1, k, j - 1)))
                    if val != want:
                        problems.append(f"(m,k,j)=({m},{k},{j}) j-recurrence fails")
                elif part == "f" and k >= 1:
                    want = sub(ell_mkj(F, m, k - 1, j), ell_mkj(F, m - 1, k - 1, j))
                    if val != want:
                        problems.append(f"(m,k,j)=({m},{k},{j}) k-recurrence fails")
    return _result(params, problems[:4], f"all (m,k,j) with m<={size} pass")


def _refined_bad_point_counts(n: int) -> dict[tuple[int, int, int], int]:
    """Ascent counts of S_{n+1} bucketed by (max bad point, last value)."""
    counts: dict[tuple[int, int, int], int] = {}
    for w in permutations(range(1, n + 2)):
        bad = bad_points(w)
        key = (max(bad) if bad else 0, w[-1], ascents(w))
        counts[key] = counts.get(key, 0) + 1
    return counts


def _case_prop_dnkj(params: dict) -> CaseResult:
    n, part = params["n"], params["part"]
    problems: list[str] = []
    if part == "a":
        F = _triangle("sd", n)
        for k in range(n + 1):
            if ell_mk(F, n, k) != d_nk(n, k):
                problems.append(f"k={k}: ell_mk != d_nk")
    elif part == "b":
        F = _triangle("sd", n)
        for k in range(n + 1):
            for j in range(n - k + 1):
                if ell_mkj(F, n, k, j) != d_nkj(n, k, j):
                    problems.append(f"(k,j)=({k},{j}): ell_mkj != d_nkj")
    elif part == "c":
        buckets = _refined_bad_point_counts(n)
        for k in range(n + 1):
            for j in range(n + 1):
                coeffs: dict[int, int] = {}
                for (top, last, asc), cnt in buckets.items():
                    if top <= n + 1 - k and last == j + 1:
                        coeffs[asc] = coeffs.get(asc, 0) + cnt
                want: Poly = ()
                for asc, cnt in coeffs.items():
                    want = add(want, scale(shift((1,), asc), cnt))
                if d_nkj(n, k, j) != want:
                    problems.append(f"(k,j)=({k},{j}): bad-point route differs")
    elif part == "d" and n >= 1:
        for k in range(n):
            total: Poly = ()
            for j in range(n):
                total = add(total, d_nkj(n - 1, k, j))
            if not d_nkj(n, k, 0) == d_nk(n, k) == total:
                problems.append(f"k={k}: column sum identity fails")
    elif part == "e" and n >= 1:
        for k in range(1, n + 1):
            for j in range(n + 1):
                if j <= n - k:
                    want = sub(d_nkj(n, k - 1, j), d_nkj(n - 1, k - 1, j))
                elif j == n - k + 1:
                    want = d_nkj(n, k - 1, j)
                else:
                    want = sub(d_nkj(n, k - 1, j), d_nkj(n - 1, k - 1, j - 1))
                if d_nkj(n, k, j) != want:
                    problems.append(f"(k,j)=({k},{j}): case recurrence fails")
    elif part == "f":
        for k in range(1, n + 1):
            for j in range(n - k + 1, n + 1):
                low: Poly = ()
                high: Poly = ()
                for i in range(j):
                    low = add(low, d_nkj(n - 1, k - 1, i))
                for i in range(j, n):
                    high = add(high, d_nkj(n - 1, k - 1, i))
                if d_nkj(n, k, j) != add(shift(low, 1), high):
                    problems.append(f"(k,j)=({k},{j}): split sum fails")
    elif part == "g":
        for k in range(1, n + 1):
            if d_nkj(n, k, n) != shift(d_nk(n, k - 1), 1):
                problems.append(f"k={k}: top-j identity fails")
    return _result(params, problems[:4], "all indices pass")


def _case_prop_dnkj_rec(params: dict) -> CaseResult:
    n, part = params["n"], params["part"]
    problems: list[str] = []
    if part == "a":
        for k in range(n):
            rows = [d_nkj(n - 1, k, i) for i in range(n)]
            for j in range(n + 1):
                high: Poly = ()
                for i in range(j, n):
                    high = add(high, rows[i])
                if j <= n - k:
                    low: Poly = ()
                    for i in range(j):
                        low = add(low, rows[i])
                    want = add(shift(low, 1), high)
                else:
                    mid = rows[j - 1]
                    low = ()
                    for i in range(j - 1):
                        low = add(low, rows[i])
                    want = add(add(shift(low, 1), add(mid, shift(mid, 1))), high)
                if d_nkj(n, k, j) != want:
                    problems.append(f"(k,j)=({k},{j}): recurrence fails")
    elif part == "b":
        rows = [d_nkj(n - 1, n - 1, i) for i in range(n)]
        first: Poly = ()
        for i in range(1, n):
            first = add(first, rows[i])
        if d_nkj(n, n, 0) != first:
            problems.append("j=0 row fails")
        for j in range(1, n + 1):
            low = high = ()
            for i in range(j):
                low = add(low, rows[i])
            for i in range(j, n):
                high = add(high, rows[i])
            if d_nkj(n, n, j) != add(shift(low, 1), high):
                problems.append(f"j={j}: row fails")
    return _result(params, problems[:4], "all indices pass")


def _case_prop_esdr(params: dict) -> CaseResult:
    n, r = params["n"], params["r"]
    F = _triangle(f"esd:{r}", n)
    ones = (1,) * r
    positive = shift((1,) * (r - 1), 1) if r > 1 else ()
    problems: list[str] = []
    for k in range(n + 1):
        if p_poly(F, n, k) != veronese(shift(power(ones, n), k), r, 0):
            problems.append(f"k={k}: p formula fails")
        base = mul(power(ones, n - k), power(positive, k))
        if ell_mk(F, n, k) != veronese(base, r, 0):
            problems.append(f"k={k}: ell formula fails")
        for j in range(n - k + 1):
            if ell_mkj(F, n, k, j) != veronese(shift(base, j), r, 0):
                problems.append(f"(k,j)=({k},{j}): refined formula fails")
    return _result(params, problems[:4], "all three formula families pass")


def _case_esd_counterexample(params: dict) -> CaseResult:
    n = 6
    verts = tuple(range(1, n + 1))
    T = edgewise(stellar(trivial(verts), verts), 2)
    problems: list[str] = []
    ell = _structural(T, n, problems)
    if ell != COUNTEREXAMPLE:
        problems.append(f"unexpected value {format_poly(ell)}")
    if is_real_rooted(ell):
        problems.append("polynomial is real-rooted but must not be")
    return _result(params, problems, f"ell={format_poly(ell)} and not real-rooted")


def _case_foata(params: dict) -> CaseResult:
    n = params["n"]
    problems: list[str] = []
    checked = 0
    for w in permutations(range(1, n + 1)):
        v = foata(w)
        exc = sum(1 for i in range(1, n + 1) if w[i - 1] > i)
        if exc != ascents(v):
            problems.append(f"excedances of {w} != ascents of {v}")
        if set(fixed_points(w)) != set(bad_points(v)):
            problems.append(f"fixed points of {w} != bad points of {v}")
        if w.index(1) + 1 != v[-1]:
            problems.append(f"position of 1 in {w} != last value of {v}")
        if problems:
            break
        checked += 1
    return _result(params, problems, f"{checked} permutations checked")


def _cases_gamma_family(o, extra=lambda n: [{}]):
    out = []
    for n in o["ns"]:
        for seed in o["seeds"]:
            for added in extra(n):
                out.append({"n": n, "seed": seed, "steps": o["steps"], **added})
    return out


_SUITES = {
    "thm-sd": (
        "barycentric local h real-rooted and interlaced by the Eulerian polynomial",
        lambda o: _cases_gamma_family(o),
        _case_thm_sd,
    ),
    "thm-esd": (
        "edgewise local h real-rooted and interlaced by the word polynomial (r >= n)",
        lambda o: _cases_gamma_family(
            o, lambda n: [{"r": r} for r in (o["rs"] or (n, n + 1, n + 2))]),
        _case_thm_esd,
    ),
    "thm-uniform": (
        "local h of a uniform refinement equals its weighted expansion",
        lambda o: _cases_gamma_family(o, lambda n: [{"kind": k} for k in o["kinds"]]),
        _case_thm_uniform,
    ),
    "thm-dnkj": (
        "(d_nkj)_j interlacing sequences, interlaced by the Eulerian polynomial",
        lambda o: [{"n": n, "k": k}
                   for n in range(o["n_max"] + 1) for k in range(n + 1)],
        _case_thm_dnkj,
    ),
    "cor-sd": (
        "iterated barycentric local h real-rooted and Eulerian-interlaced",
        lambda o: [{"n": n, "k": k}
                   for n in range(1, o["n_max"] + 1)
                   for k in range(1, o["k_max"] + 1)],
        _case_cor_sd,
    ),
    "cor-2sd": (
        "second barycentric local h equals its permutation expansion",
        lambda o: [{"n": n} for n in range(o["n_max"] + 1)],
        _case_cor_2sd,
    ),
    "prop-lnkj": (
        "structure of the two-parameter family: positivity, reversal, recurrences",
        lambda o: [{"kind": kind, "size": 5 if kind.endswith(":3") else 6, "part": p}
                   for kind in o["kinds"] for p in "abcdef"],
        _case_prop_lnkj,
    ),
    "prop-dnkj": (
        "properties of the position-refined d-polynomials",
        lambda o: [{"n": n, "part": p}
                   for n in range(o["n_max"] + 1) for p in "abcdefg"],
        _case_prop_dnkj,
    ),
    "prop-dnkj-rec": (
        "row recurrences generating d_nkj from size n-1",
        lambda o: [{"n": n, "part": p}
                   for n in range(1, o["n_max"] + 1) for p in "ab"],
        _case_prop_dnkj_rec,
    ),
    "prop-esdr": (
        "closed dilation-count formulas for the edgewise families",
        lambda o: [{"n": n, "r": r}
                   for n in range(1, o["n_max"] + 1) for r in range(1, o["r_max"] + 1)],
        _case_prop_esdr,
    ),
    "esd-counterexample": (
        "the halved stellar simplex: exact value, not real-rooted",
        lambda o: [{"input": "esd_2(stellar simplex), n=6"}],
        _case_esd_counterexample,
    ),
    "foata": (
        "cycle-notation transform: excedances, fixed points, position of 1",
        lambda o: [{"n": n} for n in range(1, o["n_max"] + 1)],
        _case_foata,
    ),
}

SUITE_NAMES = tuple(_SUITES)

_DEFAULT_N_MAX = {
    "thm-dnkj": 6,
    "cor-sd": 4,
    "cor-2sd": 4,
    "prop-dnkj": 7,
    "prop-dnkj-rec": 7,
    "prop-esdr": 5,
    "foata": 8,
}


def suite_description(suite: str) -> str:
    return _SUITES[suite][0]


def _run_case(item: tuple[str, tuple[tuple[str, object], ...]]) -> CaseResult:
    suite, params = item
    try:
        return _SUITES[suite][2](dict(params))
    except Exception as err:  # a crashing case must not abort its siblings
        return CaseResult(params, False, f"raised {type(err).__name__}: {err}")


def run_suite(suite: str, *, ns=None, seeds=None, steps=None, rs=None,
              kinds=None, n_max=None, k_max=None, r_max=None,
              jobs: int = 1) -> VerifySuiteReport:
    """Run one named suite and return its sorted, deterministic report."""
    if suite not in _SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(_SUITES)}")
    options = {
        "ns": tuple(ns) if ns else DEFAULT_NS,
        "seeds": tuple(seeds) if seeds else DEFAULT_SEEDS,
        "steps": DEFAULT_STEPS if steps is None else steps,
        "rs": tuple(rs) if rs else None,
        "kinds": tuple(kinds) if kinds else DEFAULT_KINDS,
        "n_max": _DEFAULT_N_MAX.get(suite, 6) if n_max is None else n_max,
        "k_max": 2 if k_max is None else k_max,
        "r_max": 6 if r_max is None else r_max,
    }
    items = [(suite, tuple(sorted(case.items())))
             for case in _SUITES[suite][1](options)]
    start = time.perf_counter()
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_case, items))
    else:
        results = [_run_case(item) for item in items]
    results.sort(key=lambda c: tuple((k, repr(v)) for k, v in c.params))
    return VerifySuiteReport(suite, tuple(results), time.perf_counter() - start)
