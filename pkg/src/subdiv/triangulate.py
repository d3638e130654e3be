"""Triangulations of simplicial complexes with carrier bookkeeping.

A triangulation here is a refinement ``total`` of a ``base`` complex
together with a map sending each vertex of ``total`` to the smallest
base face containing it.  Carriers are what make restriction to a base
face meaningful, and they compose when subdivisions are stacked.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations
from typing import Iterable, Sequence

from .complexes import (
    Face,
    SchemaError,
    SimplicialComplex,
    complex_from_json,
    complex_to_json,
    face,
    from_facets,
    full_simplex,
)


@dataclass(frozen=True)
class Triangulation:
    """A geometric subdivision: ``total`` refines ``base``.

    ``vertex_carrier`` maps each vertex of ``total`` to the base face
    it sits inside.  The constructor trusts its arguments; use
    :func:`validate_triangulation` to check the structural rules.
    """

    base: SimplicialComplex
    total: SimplicialComplex
    vertex_carrier: dict[int, Face]


def carrier(T: Triangulation, G) -> Face:
    """Smallest base face containing the face ``G`` of ``T.total``."""
    g = face(G)
    if g not in T.total:
        raise ValueError(f"{g} is not a face of the triangulation")
    out: set[int] = set()
    for v in g:
        out.update(T.vertex_carrier[v])
    return tuple(sorted(out))


def trivial(vertices) -> Triangulation:
    """The simplex on ``vertices``, subdivided by doing nothing."""
    simplex = full_simplex(face(vertices))
    return Triangulation(simplex, simplex, {v: (v,) for v in simplex.vertices})


def identity(K: SimplicialComplex) -> Triangulation:
    """View a complex as the trivial subdivision of itself."""
    return Triangulation(K, K, {v: (v,) for v in K.vertices})


def restriction(T: Triangulation, F) -> Triangulation:
    """The induced triangulation of the base face ``F``."""
    f = face(F)
    if f not in T.base:
        raise ValueError(f"{f} is not a face of the base complex")
    inside = set(f)
    keep = {v for v, c in T.vertex_carrier.items() if set(c) <= inside}
    facets = [tuple(v for v in h if v in keep) for h in T.total.facets]
    labels = {v: s for v, s in T.total.labels.items() if v in keep}
    total = from_facets(facets, labels)
    carriers = {v: T.vertex_carrier[v] for v in total.vertices}
    return Triangulation(full_simplex(f), total, carriers)


def barycentric(T: Triangulation) -> Triangulation:
    """Barycentric subdivision of ``T.total``, still over ``T.base``.

    One fresh vertex per nonempty face, numbered in the canonical face
    order, so equal inputs give identical outputs.  Facets are the
    flags of faces inside each facet of ``T.total``.
    """
    old_faces = [g for g in T.total.faces() if g]
    vertex_of = {g: i for i, g in enumerate(old_faces, start=1)}
    facets = []
    for h in T.total.facets:
        for order in permutations(h):
            facets.append(tuple(vertex_of[tuple(sorted(order[:k]))]
                                for k in range(1, len(h) + 1)))
    if not facets:
        facets = [()] if not T.total.is_void else []
    labels = {i: "barycenter of {%s}" % ",".join(map(str, g))
              for g, i in vertex_of.items()}
    carriers = {vertex_of[g]: carrier(T, g) for g in old_faces}
    return Triangulation(T.base, from_facets(facets, labels), carriers)


def _edgewise_chains(m: int, r: int):
    """Maximal chains of the r-fold dilation of an (m-1)-simplex.

    A point is encoded by its partial-sum vector ``t`` with the last
    entry pinned to r.  Chains grow by bumping one free position at a
    time, legal while the vector stays nondecreasing.
    """
    if m == 0:
        return
    for start in combinations_with_replacement(range(r + 1), m - 1):
        stack = [(start + (r,), frozenset(range(m - 1)), (start + (r,),))]
        while stack:
            t, free, chain = stack.pop()
            if not free:
                yield chain
                continue
            for j in free:
                nxt = t[j + 1]
                if t[j] < nxt:
                    bumped = t[:j] + (t[j] + 1,) + t[j + 1:]
                    stack.append((bumped, free - {j}, chain + (bumped,)))


def edgewise(T: Triangulation, r: int, order: Sequence[int] | None = None) -> Triangulation:
    """The r-fold edgewise subdivision of ``T.total`` over ``T.base``.

    Vertices are the integer weightings of total vertices summing to r,
    supported on a face.  ``order`` fixes the linear order used to form
    partial sums; the default is increasing vertex id.  The resulting
    complex depends on the order, its face numbers do not.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    verts = T.total.vertices
    if order is None:
        order = verts
    order = tuple(order)
    if tuple(sorted(order)) != verts:
        raise ValueError("order must be a permutation of the total's vertices")
    position = {v: i for i, v in enumerate(order)}

    point_ids: dict[tuple[tuple[int, int], ...], int] = {}
    local_facets: list[tuple[tuple[tuple[int, int], ...], ...]] = []
    for h in T.total.facets:
        ordered = sorted(h, key=position.__getitem__)
        m = len(h)
        if m == 0:
            local_facets.append(())
            continue
        count = 0
        for chain in _edgewise_chains(m, r):
            points = []
            for t in chain:
                weights = tuple((ordered[i], t[i] - (t[i - 1] if i else 0))
                                for i in range(m) if t[i] > (t[i - 1] if i else 0))
                points.append(weights)
            local_facets.append(tuple(points))
            count += 1
        assert count == r ** (m - 1)

    for f in local_facets:
        for p in f:
            point_ids.setdefault(p, 0)
    for i, p in enumerate(sorted(point_ids), start=1):
        point_ids[p] = i

    facets = [tuple(point_ids[p] for p in f) for f in local_facets]
    labels = {i: " ".join(f"{v}^{c}" for v, c in p) for p, i in point_ids.items()}
    carriers = {point_ids[p]: carrier(T, [v for v, _ in p]) for p in point_ids}
    return Triangulation(T.base, from_facets(facets, labels), carriers)


def stellar(T: Triangulation, G) -> Triangulation:
    """Star the face ``G``: cone a fresh vertex over its link."""
    g = face(G)
    if len(g) < 2:
        raise ValueError("starring needs a face with at least two vertices")
    if g not in T.total:
        raise ValueError(f"{g} is not a face of the triangulation")
    fresh = max(T.total.vertices) + 1
    inside = set(g)
    facets: list[Face] = []
    for h in T.total.facets:
        if inside <= set(h):
            for drop in g:
                facets.append(tuple(sorted((set(h) - {drop}) | {fresh})))
        else:
            facets.append(h)
    labels = dict(T.total.labels)
    labels[fresh] = "apex of {%s}" % ",".join(map(str, g))
    carriers = dict(T.vertex_carrier)
    carriers[fresh] = carrier(T, g)
    return Triangulation(T.base, from_facets(facets, labels), carriers)


def compose(outer: Triangulation, inner: Triangulation) -> Triangulation:
    """Stack subdivisions: ``outer`` must triangulate ``inner.total``."""
    if outer.base != inner.total:
        raise ValueError("outer's base must equal inner's total")
    carriers = {v: carrier(inner, c) for v, c in outer.vertex_carrier.items()}
    return Triangulation(inner.base, outer.total, carriers)


def iterated_sd(vertices, k: int) -> Triangulation:
    """k-fold barycentric subdivision of the simplex on ``vertices``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    T = trivial(vertices)
    for _ in range(k):
        T = barycentric(T)
    return T


def random_triangulation(vertices, steps: int, seed: int) -> Triangulation:
    """Random stellar subdivisions of a simplex, reproducible by seed.

    Each step lists the faces with at least two vertices in canonical
    order and stars the one picked by ``Random(seed).randrange``.
    """
    rng = random.Random(seed)
    T = trivial(vertices)
    for _ in range(steps):
        eligible = [g for g in T.total.faces() if len(g) >= 2]
        if not eligible:
            break
        T = stellar(T, eligible[rng.randrange(len(eligible))])
    return T


class NotUniformError(ValueError):
    """Restriction face counts depend on more than dimension.

    ``witness`` holds two equal-sized base faces whose restrictions
    have different f-vectors.
    """

    def __init__(self, first: Face, second: Face, vectors):
        self.witness = (first, second)
        super().__init__(
            f"restrictions to {first} and {second} differ: "
            f"{vectors[0]} vs {vectors[1]}")


@dataclass(frozen=True)
class FTriangle:
    """Face counts of a uniform triangulation, one row per dimension.

    ``rows[j][i]`` counts the i-vertex faces in the subdivision of a
    j-vertex base face; row j has entries for i = 0..j.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} rows, got {len(self.rows)}")
        for j, row in enumerate(self.rows):
            if len(row) != j + 1:
                raise ValueError(f"row {j} must have {j + 1} entries")
            if row[0] != 1:
                raise ValueError(f"f(0,{j}) must be 1, got {row[0]}")
            if row[j] < 1:
                raise ValueError(f"f({j},{j}) must be positive, got {row[j]}")
            if j >= 1 and row[1] < j:
                raise ValueError(f"f(1,{j}) must be at least {j}, got {row[1]}")

    def f(self, i: int, j: int) -> int:
        if not 0 <= i <= j <= self.n:
            raise ValueError(f"need 0 <= i <= j <= {self.n}, got ({i}, {j})")
        return self.rows[j][i]


def f_triangle_of(T: Triangulation) -> FTriangle:
    """Face-count triangle of ``T``; raises NotUniformError if mixed.

    The base must be pure.  Row j is read off the restriction to any
    j-vertex base face after checking they all agree.
    """
    if not T.base.is_pure():
        raise ValueError("the base complex must be pure")
    n = T.base.dimension() + 1
    rows = []
    for j in range(n + 1):
        reference: tuple[int, ...] | None = None
        ref_face: Face = ()
        for f in T.base.faces():
            if len(f) != j:
                continue
            fv = restriction(T, f).total.f_vector()
            fv = fv + (0,) * (j + 1 - len(fv))
            if reference is None:
                reference, ref_face = fv, f
            elif fv != reference:
                raise NotUniformError(ref_face, f, (reference, fv))
        assert reference is not None
        rows.append(reference)
    return FTriangle(n, tuple(rows))


def f_triangle(kind: str, n: int, r: int | None = None) -> FTriangle:
    """Face-count triangle of a named subdivision of the n-simplex."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    base = trivial(range(1, n + 1))
    if kind == "trivial":
        return f_triangle_of(base)
    if kind == "barycentric":
        return f_triangle_of(barycentric(base))
    if kind == "edgewise":
        if r is None:
            raise ValueError("edgewise needs the parameter r")
        return f_triangle_of(edgewise(base, r))
    raise ValueError(f"unknown kind {kind!r}")


def validate_triangulation(T: Triangulation) -> None:
    """Check the structural rules; raises ValueError on the first hit."""
    if set(T.vertex_carrier) != set(T.total.vertices):
        raise ValueError("vertex_carrier keys must be exactly the total's vertices")
    for v, c in T.vertex_carrier.items():
        if c != face(c) or not c or c not in T.base:
            raise ValueError(f"carrier of {v} is not a nonempty base face: {c}")
    singles = sorted(c[0] for c in T.vertex_carrier.values() if len(c) == 1)
    if tuple(singles) != T.base.vertices:
        raise ValueError("base vertices and singleton carriers do not match up")
    for g in T.total.faces():
        spanned = set()
        for v in g:
            spanned.update(T.vertex_carrier[v])
        if tuple(sorted(spanned)) not in T.base:
            raise ValueError(f"face {g} is not carried by any base face")
    for f in T.base.faces():
        sub = restriction(T, f).total
        if sub.is_void or not sub.is_pure() or sub.dimension() != len(f) - 1:
            raise ValueError(f"restriction to {f} is not a triangulation of it")


def triangulation_to_json(T: Triangulation) -> dict:
    """Plain-dict form: base, total, and stringified carrier map."""
    return {
        "base": complex_to_json(T.base),
        "total": complex_to_json(T.total),
        "carrier": {str(v): list(c) for v, c in sorted(T.vertex_carrier.items())},
    }


def _nested_complex(obj, key: str) -> SimplicialComplex:
    try:
        return complex_from_json(obj[key])
    except SchemaError as err:
        raise SchemaError(f"/{key}{err.path}", err.message) from None


def triangulation_from_json(obj) -> Triangulation:
    """Parse and schema-check the wire form of a triangulation."""
    if not isinstance(obj, dict):
        raise SchemaError("", "expected an object")
    for key in ("base", "total", "carrier"):
        if key not in obj:
            raise SchemaError(f"/{key}", "missing required key")
    base = _nested_complex(obj, "base")
    total = _nested_complex(obj, "total")
    raw = obj["carrier"]
    if not isinstance(raw, dict):
        raise SchemaError("/carrier", "expected an object")
    carriers: dict[int, Face] = {}
    for k, val in raw.items():
        where = f"/carrier/{k}"
        try:
            v = int(k)
        except ValueError:
            raise SchemaError(where, "key must be an integer vertex id") from None
        if v not in total.vertices:
            raise SchemaError(where, f"{v} is not a vertex of the total complex")
        if not isinstance(val, list) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in val):
            raise SchemaError(where, "carrier must be a list of integers")
        c = face(val)
        if not c or c not in base:
            raise SchemaError(where, f"{c} is not a nonempty face of the base")
        carriers[v] = c
    missing = [v for v in total.vertices if v not in carriers]
    if missing:
        raise SchemaError("/carrier", f"missing carriers for vertices {missing}")
    return Triangulation(base, total, carriers)
