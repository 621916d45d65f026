"""Constructions of test complexes.

Canonical closed manifolds (simplex and cross-polytope boundaries, polygons,
the 7-vertex torus, the 6-vertex projective plane) plus operators (cone,
suspension, join, disjoint union, barycentric subdivision).  The two surface
triangulations validate themselves at build time instead of trusting a
transcribed facet list.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass

from .complexes import Face, SimplicialComplex
from .errors import ConstructionError, InputError
from .invariants import f_vector


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex: every proper nonempty subset of n+1 vertices."""
    if n < 1:
        raise InputError(f"simplex_boundary needs n >= 1, got {n}")
    labels = [str(i) for i in range(n + 1)]
    facets = list(itertools.combinations(range(n + 1), n))
    return SimplicialComplex.from_indexed_facets(facets, labels)


def cross_polytope_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-dimensional cross-polytope.

    Vertices p_i, m_i for i = 1..n; faces are the subsets containing no
    antipodal pair, so the facets pick one sign per axis.
    """
    if n < 1:
        raise InputError(f"cross_polytope_boundary needs n >= 1, got {n}")
    labels = []
    for i in range(1, n + 1):
        labels += [f"p{i}", f"m{i}"]
    facets = [
        tuple(sorted(2 * i + s for i, s in enumerate(signs)))
        for signs in itertools.product((0, 1), repeat=n)
    ]
    return SimplicialComplex.from_indexed_facets(facets, labels)


def polygon(n: int) -> SimplicialComplex:
    """Cycle on n vertices."""
    if n < 3:
        raise InputError(f"polygon needs n >= 3, got {n}")
    labels = [str(i) for i in range(n)]
    facets = [tuple(sorted((i, (i + 1) % n))) for i in range(n)]
    return SimplicialComplex.from_indexed_facets(facets, labels)


def _edge_facet_degrees(K: SimplicialComplex) -> Counter:
    degrees: Counter = Counter()
    for facet in K.facets:
        for e in itertools.combinations(facet, 2):
            degrees[e] += 1
    return degrees


def _is_single_cycle(K: SimplicialComplex, length: int) -> bool:
    # A single n-cycle: n vertices, n edges, every vertex of degree 2,
    # connected.
    if f_vector(K) != [length, length]:
        return False
    adj = defaultdict(set)
    for a, b in K.faces_of_dim(1):
        adj[a].add(b)
        adj[b].add(a)
    if len(adj) != length or any(len(nb) != 2 for nb in adj.values()):
        return False
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == length


def _validate_closed_surface(K, name, expected_f, cycle_len):
    if f_vector(K) != list(expected_f):
        raise ConstructionError(f"{name}: f-vector {f_vector(K)} != {list(expected_f)}")
    bad_edges = [e for e, c in _edge_facet_degrees(K).items() if c != 2]
    if bad_edges:
        raise ConstructionError(f"{name}: edge {bad_edges[0]} not in exactly 2 facets")
    for v in range(expected_f[0]):
        if not _is_single_cycle(K.link((v,)), cycle_len):
            raise ConstructionError(f"{name}: link of vertex {v} is not a {cycle_len}-cycle")


def torus7() -> SimplicialComplex:
    """The 7-vertex torus: facets {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    facets = [tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))) for i in range(7)]
    facets += [tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))) for i in range(7)]
    K = SimplicialComplex.from_indexed_facets(facets, [str(i) for i in range(7)])
    _validate_closed_surface(K, "torus7", (7, 21, 14), 6)
    return K


def _icosahedron_with_antipode():
    """A combinatorial icosahedron and its antipodal vertex involution.

    Vertex order: north pole 0, south pole 1, upper ring 2..6, lower ring
    7..11 (lower ring offset half a step).  The involution is found by
    search over the ring rotations rather than written down, and must map
    facets to facets with no vertex fixed and no vertex adjacent to its
    image.
    """
    north, south = 0, 1
    up = [2 + i for i in range(5)]
    lo = [7 + i for i in range(5)]
    facets = []
    for i in range(5):
        j = (i + 1) % 5
        facets.append((north, up[i], up[j]))
        facets.append((south, lo[i], lo[j]))
        facets.append((up[i], up[j], lo[i]))
        facets.append((up[j], lo[i], lo[j]))
    facet_set = {frozenset(f) for f in facets}
    edges = {frozenset(e) for f in facets for e in itertools.combinations(f, 2)}

    for k in range(5):
        for reflect in (False, True):
            a = {north: south, south: north}
            for i in range(5):
                target = (k - i) % 5 if reflect else (k + i) % 5
                a[up[i]] = lo[target]
                a[lo[target]] = up[i]
            if any(a[a[v]] != v or a[v] == v for v in a):
                continue
            if any(frozenset((v, a[v])) in edges for v in a):
                continue
            if all(frozenset(a[v] for v in f) in facet_set for f in facets):
                return facets, a
    raise ConstructionError("icosahedron: no antipodal involution found")


def projective_plane6() -> SimplicialComplex:
    """The 6-vertex projective plane, derived as the antipodal quotient of
    the icosahedron and validated structurally."""
    facets, antipode = _icosahedron_with_antipode()
    reps = sorted({min(v, antipode[v]) for v in antipode})
    cls = {v: reps.index(min(v, antipode[v])) for v in antipode}
    quotient = {tuple(sorted({cls[v] for v in f})) for f in facets}
    if any(len(f) != 3 for f in quotient):
        raise ConstructionError("projective_plane6: a facet collapsed under the quotient")
    if len(quotient) != 10:
        raise ConstructionError(f"projective_plane6: {len(quotient)} facets, expected 10")
    K = SimplicialComplex.from_indexed_facets(sorted(quotient), [str(i) for i in range(6)])
    _validate_closed_surface(K, "projective_plane6", (6, 15, 10), 5)
    return K


# -- operators ---------------------------------------------------------------


def _fresh_label(base: str, used: set[str]) -> str:
    label = base
    while label in used:
        label += "'"
    used.add(label)
    return label


def _merge_labels(A: SimplicialComplex, B: SimplicialComplex):
    labels = list(A.vertex_table.labels)
    used = set(labels)
    labels += [_fresh_label(lab, used) for lab in B.vertex_table.labels]
    return labels


def join(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes over disjoint copies of their vertex sets.

    A keeps its ids; B's ids shift up by A's vertex count, and colliding B
    labels take prime suffixes.
    """
    if A.is_empty():
        return B
    if B.is_empty():
        return A
    shift = len(A.vertex_table)
    # Shifted B ids all exceed A ids, so concatenation stays sorted.
    facets = [
        fa + tuple(v + shift for v in fb) for fa in A.facets for fb in B.facets
    ]
    return SimplicialComplex.from_indexed_facets(facets, _merge_labels(A, B))


def cone(K: SimplicialComplex) -> SimplicialComplex:
    """Join with a single new apex vertex."""
    return join(K, SimplicialComplex.from_facets([["apex"]]))


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    """Join with two new isolated vertices."""
    return join(K, SimplicialComplex.from_facets([["apex0"], ["apex1"]]))


def disjoint_union(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    """Disjoint union, relabeled the same way as join."""
    if A.is_empty():
        return B
    if B.is_empty():
        return A
    shift = len(A.vertex_table)
    facets = list(A.facets) + [tuple(v + shift for v in f) for f in B.facets]
    return SimplicialComplex.from_indexed_facets(facets, _merge_labels(A, B))


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset.

    One new vertex per nonempty face, labeled b{...} with the original ids;
    facets are the maximal chains, one per (facet, vertex ordering) pair.
    """
    if K.is_empty():
        return K
    face_ids: dict[Face, int] = {}
    labels = []
    for face in K.faces():
        face_ids[face] = len(labels)
        labels.append("b{" + ".".join(map(str, face)) + "}")
    facets = []
    for facet in K.facets:
        for perm in itertools.permutations(facet):
            chain = [tuple(sorted(perm[:j])) for j in range(1, len(perm) + 1)]
            facets.append(tuple(sorted(face_ids[c] for c in chain)))
    return SimplicialComplex.from_indexed_facets(facets, labels)


# -- named access for the CLI -------------------------------------------------


@dataclass(frozen=True)
class GeneratorSpec:
    """A generator invocation: name, integer params, nested complex args."""

    name: str
    params: tuple[int, ...] = ()
    args: tuple["GeneratorSpec", ...] = ()

    def to_expr(self) -> str:
        expr = self.name
        if self.params:
            expr += "".join(f":{p}" for p in self.params)
        if self.args:
            expr += "(" + ", ".join(a.to_expr() for a in self.args) + ")"
        return expr


# name -> (callable, int param count, complex arg count)
REGISTRY = {
    "simplex_boundary": (simplex_boundary, 1, 0),
    "cross_polytope_boundary": (cross_polytope_boundary, 1, 0),
    "polygon": (polygon, 1, 0),
    "torus7": (torus7, 0, 0),
    "projective_plane6": (projective_plane6, 0, 0),
    "cone": (cone, 0, 1),
    "suspension": (suspension, 0, 1),
    "join": (join, 0, 2),
    "disjoint_union": (disjoint_union, 0, 2),
    "barycentric_subdivision": (barycentric_subdivision, 0, 1),
}


def build(spec: GeneratorSpec) -> SimplicialComplex:
    """Evaluate a generator spec tree."""
    entry = REGISTRY.get(spec.name)
    if entry is None:
        raise InputError(f"unknown generator {spec.name!r}")
    fn, n_params, n_args = entry
    if len(spec.params) != n_params:
        raise InputError(
            f"{spec.name} takes {n_params} integer parameter(s), got {len(spec.params)}"
        )
    if len(spec.args) != n_args:
        raise InputError(
            f"{spec.name} takes {n_args} complex argument(s), got {len(spec.args)}"
        )
    return fn(*spec.params, *(build(a) for a in spec.args))
