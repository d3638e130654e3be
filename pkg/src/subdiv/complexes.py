"""Finite abstract simplicial complexes over integer vertex ids.

A complex is stored by its inclusion-maximal faces; the full face list
is enumerated lazily and memoized.  Two degenerate complexes are kept
distinct on purpose: the void complex (no faces at all) and the empty
complex whose only face is the empty set.  The latter carries
h-polynomial 1 and shows up as the restriction of a subdivision to the
empty base face, so the distinction is load-bearing.
"""

from __future__ import annotations

from itertools import combinations

from .poly import Poly, add, binom, normalize, power, scale, shift

Face = tuple[int, ...]


def face(vertices) -> Face:
    """Sorted, deduplicated face from any iterable of vertex ids."""
    vs = set()
    for v in vertices:
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"vertex ids must be integers, got {v!r}")
        vs.add(v)
    return tuple(sorted(vs))


class SchemaError(ValueError):
    """Invalid JSON input; ``path`` is a JSON pointer to the offender."""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path or '<root>'}: {message}")


class SimplicialComplex:
    """Immutable complex determined by its facets.

    Use :func:`from_facets`; the constructor trusts its arguments.
    Labels are provenance strings for display only and do not take part
    in equality.
    """

    __slots__ = ("facets", "labels", "_faces", "_face_set")

    def __init__(self, facets: tuple[Face, ...], labels: dict[int, str]):
        self.facets = facets
        self.labels = labels
        self._faces: tuple[Face, ...] | None = None
        self._face_set: frozenset[Face] | None = None

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    def dimension(self) -> int:
        """Largest facet size minus one; -1 for empty, -2 for void."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def faces(self):
        """All faces in canonical order: by size, then lexicographic."""
        if self._faces is None:
            seen = {sub for f in self.facets for k in range(len(f) + 1)
                    for sub in combinations(f, k)}
            self._faces = tuple(sorted(seen, key=lambda g: (len(g), g)))
            self._face_set = frozenset(self._faces)
        return iter(self._faces)

    def __contains__(self, item) -> bool:
        if self._face_set is None:
            self.faces()
        return tuple(item) in self._face_set

    def f_vector(self) -> tuple[int, ...]:
        """(f_{-1}, f_0, ..., f_{dim}); the void complex gives ()."""
        if self.is_void:
            return ()
        counts = [0] * (self.dimension() + 2)
        for g in self.faces():
            counts[len(g)] += 1
        return tuple(counts)

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        if self.is_void:
            return "SimplicialComplex(void)"
        return f"SimplicialComplex({len(self.facets)} facets, dim {self.dimension()})"


def from_facets(facets, labels: dict[int, str] | None = None) -> SimplicialComplex:
    """Build a complex, dropping duplicate and dominated facets."""
    candidates = sorted({face(f) for f in facets}, key=len, reverse=True)
    kept: list[Face] = []
    dominators: list[set] = []  # kept facets strictly larger than the current one
    promoted = 0
    for f in candidates:
        while promoted < len(kept) and len(kept[promoted]) > len(f):
            dominators.append(set(kept[promoted]))
            promoted += 1
        fs = set(f)
        if not any(fs <= g for g in dominators):
            kept.append(f)
    kept.sort(key=lambda g: (len(g), g))
    labels = dict(labels) if labels else {}
    vertex_set = {v for f in kept for v in f}
    if not set(labels) <= vertex_set:
        raise ValueError("labels reference vertices outside the complex")
    return SimplicialComplex(tuple(kept), labels)


def full_simplex(vertices) -> SimplicialComplex:
    """The complex of all subsets of the given vertex set."""
    return from_facets([face(vertices)])


def h_polynomial(K: SimplicialComplex, n: int | None = None) -> Poly:
    """h-polynomial of ``K`` at ambient degree ``n``.

    Computes sum_i f_{i-1} x^i (1-x)^{n-i} with n defaulting to
    dim(K)+1.  An explicit larger n embeds a low-dimensional complex in
    an ambient formula; n below dim+1 is an error.  The void complex
    has h = 0, the empty complex h = 1.
    """
    if K.is_void:
        return ()
    fv = K.f_vector()
    if n is None:
        n = K.dimension() + 1
    if K.dimension() > n - 1:
        raise ValueError(f"complex of dimension {K.dimension()} needs n >= {K.dimension() + 1}")
    acc: Poly = ()
    for i, count in enumerate(fv):
        acc = add(acc, scale(shift(power((1, -1), n - i), i), count))
    return acc


def f_vector_from_h(h: Poly, n: int) -> tuple[int, ...]:
    """Invert :func:`h_polynomial`: recover (f_{-1}, ..., f_{n-1})."""
    h = normalize(h)
    out = []
    for i in range(n + 1):
        out.append(sum(binom(n - j, i - j) * h[j] for j in range(min(i, len(h) - 1) + 1)))
    return tuple(out)


def _maximal_cliques(vertices, adj):
    out = []

    def bron_kerbosch(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in list(p - adj[pivot]):
            bron_kerbosch(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    bron_kerbosch(frozenset(), set(vertices), set())
    return out


def is_flag(K: SimplicialComplex) -> bool:
    """True when every minimal nonface has exactly two vertices.

    Equivalently, K coincides with the clique complex of its own
    1-skeleton; checked by confirming every maximal clique is a face.
    """
    verts = K.vertices
    if not verts:
        return True
    adj = {v: set() for v in verts}
    for f in K.facets:
        for a, b in combinations(f, 2):
            adj[a].add(b)
            adj[b].add(a)
    for clique in _maximal_cliques(verts, adj):
        if len(clique) >= 3 and tuple(sorted(clique)) not in K:
            return False
    return True


def complex_to_json(K: SimplicialComplex) -> dict:
    out = {"vertices": list(K.vertices), "facets": [list(f) for f in K.facets]}
    if K.labels:
        out["labels"] = {str(v): K.labels[v] for v in sorted(K.labels)}
    return out


def _expect_int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(path, f"expected an integer, got {value!r}")
    return value


def complex_from_json(obj) -> SimplicialComplex:
    """Parse ``{"vertices": [int], "facets": [[int]]}`` with validation.

    Errors carry JSON-pointer paths.  The declared vertex list must
    equal the union of the facets: isolated vertices belong in facets
    of size one.
    """
    if not isinstance(obj, dict):
        raise SchemaError("", "expected an object")
    if "facets" not in obj:
        raise SchemaError("/facets", "missing required key")
    if "vertices" not in obj:
        raise SchemaError("/vertices", "missing required key")
    raw_vertices = obj["vertices"]
    if not isinstance(raw_vertices, list):
        raise SchemaError("/vertices", "expected a list")
    declared = {_expect_int(v, f"/vertices/{i}") for i, v in enumerate(raw_vertices)}
    raw_facets = obj["facets"]
    if not isinstance(raw_facets, list):
        raise SchemaError("/facets", "expected a list")
    facets = []
    for i, raw in enumerate(raw_facets):
        if not isinstance(raw, list):
            raise SchemaError(f"/facets/{i}", "expected a list of vertex ids")
        f = tuple(_expect_int(v, f"/facets/{i}/{j}") for j, v in enumerate(raw))
        if not set(f) <= declared:
            raise SchemaError(f"/facets/{i}", "facet uses undeclared vertices")
        facets.append(f)
    used = {v for f in facets for v in f}
    if used != declared:
        missing = sorted(declared - used)
        raise SchemaError("/vertices", f"vertices {missing} appear in no facet")
    labels = {}
    if "labels" in obj:
        raw_labels = obj["labels"]
        if not isinstance(raw_labels, dict):
            raise SchemaError("/labels", "expected an object")
        for key, val in raw_labels.items():
            try:
                v = int(key)
            except (TypeError, ValueError):
                raise SchemaError(f"/labels/{key}", "key is not a vertex id") from None
            if v not in declared:
                raise SchemaError(f"/labels/{key}", "label for unknown vertex")
            if not isinstance(val, str):
                raise SchemaError(f"/labels/{key}", "label must be a string")
            labels[v] = val
    return from_facets(facets, labels=labels)
