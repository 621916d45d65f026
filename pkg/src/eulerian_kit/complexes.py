"""Finite abstract simplicial complexes.

A complex stores every nonempty face explicitly, bucketed by dimension.
Faces are tuples of dense vertex ids (strictly increasing); external string
labels are interned in first-appearance order, so identical input always
produces identical ids.  Instances are immutable after construction and safe
to share between threads.

Conventions: the empty complex has dimension -1; the empty face is a valid
tuple () but is never stored in a complex.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Iterable, Iterator, Sequence

from .errors import InputError
from .reports import CheckReport

# A face is a strictly increasing tuple of vertex ids.
Face = tuple[int, ...]


class VertexTable:
    """Bijection between external string labels and dense vertex ids 0..n-1."""

    __slots__ = ("_labels", "_index")

    def __init__(self, labels: Sequence[str]):
        self._labels = tuple(labels)
        self._index = {lab: i for i, lab in enumerate(self._labels)}
        if len(self._index) != len(self._labels):
            raise InputError("vertex labels must be unique")

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self._labels)

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def label(self, vid: int) -> str:
        return self._labels[vid]

    def id(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown vertex label {label!r}") from None

    def __contains__(self, label: str) -> bool:
        return label in self._index


def _check_label(label: str) -> str:
    if not isinstance(label, str) or not label:
        raise InputError(f"vertex label must be a nonempty string, got {label!r}")
    if any(ch.isspace() for ch in label):
        raise InputError(f"vertex label {label!r} contains whitespace")
    return label


class SimplicialComplex:
    """Downward-closed set of nonempty faces over a dense vertex range.

    Build instances with :meth:`from_facets` (string labels) or
    :meth:`from_indexed_facets` (pre-assigned dense ids).  Both compute the
    downward closure, absorb dominated input faces, and record the maximal
    faces.  All query methods are read-only.
    """

    __slots__ = ("_by_dim", "_facets", "_table", "_dim")

    def __init__(self, by_dim, facets, table):
        # Internal: use the from_* classmethods.
        self._by_dim: dict[int, frozenset[Face]] = by_dim
        self._facets: tuple[Face, ...] = facets
        self._table: VertexTable = table
        self._dim: int = max(by_dim) if by_dim else -1

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence[str]]) -> SimplicialComplex:
        """Build the downward closure of label-valued facets.

        Labels are interned in first-appearance order.  Empty rows are
        skipped; dominated and duplicate facets are absorbed silently.
        Raises InputError on a repeated label within one facet.
        """
        labels: list[str] = []
        index: dict[str, int] = {}
        id_facets: list[Face] = []
        for row in facets:
            if not row:
                continue
            ids = []
            for tok in row:
                _check_label(tok)
                vid = index.get(tok)
                if vid is None:
                    vid = len(labels)
                    index[tok] = vid
                    labels.append(tok)
                ids.append(vid)
            if len(set(ids)) != len(ids):
                raise InputError(f"facet {list(row)!r} repeats a vertex")
            id_facets.append(tuple(sorted(ids)))
        return cls.from_indexed_facets(id_facets, labels)

    @classmethod
    def from_indexed_facets(
        cls, facets: Iterable[Face], labels: Sequence[str]
    ) -> SimplicialComplex:
        """Build from facets given as sorted id tuples over range(len(labels)).

        Every vertex id must occur in some facet, so that the vertex table
        and the 0-faces agree.
        """
        table = VertexTable(labels)
        buckets: dict[int, set[Face]] = {}
        for f in facets:
            if not f:
                continue
            buckets.setdefault(len(f) - 1, set()).add(tuple(f))

        # Close downward one level at a time; level k is complete before we
        # descend, so each face is expanded exactly once.
        dominated: set[Face] = set()
        if buckets:
            for k in range(max(buckets), 0, -1):
                lower = buckets.setdefault(k - 1, set())
                for face in buckets.get(k, ()):
                    for i in range(len(face)):
                        sub = face[:i] + face[i + 1 :]
                        lower.add(sub)
                        dominated.add(sub)

        if len(buckets.get(0, ())) != len(table):
            raise InputError("every vertex in the table must occur in a face")

        maximal = sorted(
            (f for bucket in buckets.values() for f in bucket if f not in dominated),
            key=lambda f: (len(f), f),
        )
        by_dim = {k: frozenset(b) for k, b in buckets.items()}
        return cls(by_dim, tuple(maximal), table)

    # -- elementary queries -------------------------------------------------

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def facets(self) -> tuple[Face, ...]:
        """Maximal faces, sorted by (dimension, lexicographic)."""
        return self._facets

    @property
    def vertex_table(self) -> VertexTable:
        return self._table

    def is_empty(self) -> bool:
        return self._dim == -1

    def num_faces(self) -> int:
        return sum(len(b) for b in self._by_dim.values())

    def f_count(self, i: int) -> int:
        """Number of i-dimensional faces."""
        return len(self._by_dim.get(i, ()))

    def faces_of_dim(self, i: int) -> frozenset[Face]:
        return self._by_dim.get(i, frozenset())

    def faces(self) -> Iterator[Face]:
        """All faces in (dimension ascending, lexicographic) order."""
        for k in sorted(self._by_dim):
            yield from sorted(self._by_dim[k])

    def __contains__(self, face) -> bool:
        face = tuple(face)
        return face in self._by_dim.get(len(face) - 1, ())

    def labels_of(self, face: Face) -> tuple[str, ...]:
        return tuple(self._table.label(v) for v in face)

    def face_from_labels(self, labels: Iterable[str]) -> Face:
        """Translate a label collection into a sorted id tuple (not verified)."""
        return tuple(sorted(self._table.id(lab) for lab in labels))

    # -- subcomplex operations ----------------------------------------------

    def _require_member(self, face) -> Face:
        face = tuple(sorted(face))
        if not face:
            raise InputError("the empty face is not accepted here")
        if face not in self:
            if all(0 <= v < len(self._table) for v in face):
                shown = "{" + ",".join(self.labels_of(face)) + "}"
            else:
                shown = repr(face)
            raise InputError(f"{shown} is not a face of the complex")
        return face

    def _induced(self, id_facets: list[Face]) -> SimplicialComplex:
        # Dense relabeling that preserves the original id order, so labels
        # carry over deterministically.
        verts = sorted({v for f in id_facets for v in f})
        remap = {v: i for i, v in enumerate(verts)}
        labels = [self._table.label(v) for v in verts]
        return SimplicialComplex.from_indexed_facets(
            [tuple(remap[v] for v in f) for f in id_facets], labels
        )

    def link(self, face) -> SimplicialComplex:
        """Link of a nonempty face: all faces disjoint from it whose union
        with it lies in the complex."""
        face = self._require_member(face)
        sigma = set(face)
        link_facets = [
            tuple(v for v in f if v not in sigma)
            for f in self._facets
            if sigma.issubset(f)
        ]
        return self._induced([f for f in link_facets if f])

    def star(self, face) -> SimplicialComplex:
        """Closed star of a face: the closure of all faces containing it."""
        face = self._require_member(face)
        sigma = set(face)
        return self._induced([f for f in self._facets if sigma.issubset(f)])

    # -- structural predicates ----------------------------------------------

    def is_pure(self) -> bool:
        """True when all facets share the top dimension (vacuous if empty)."""
        return all(len(f) - 1 == self._dim for f in self._facets)

    def is_flag(self) -> CheckReport:
        """Check that every clique of the 1-skeleton is a face.

        Works level by level: once all cliques of size s are known to be
        faces, every clique of size s+1 extends a stored face by one
        adjacent vertex.  The first failure found this way is a minimal
        non-face clique, returned as the witness.
        """
        adj: dict[int, set[int]] = defaultdict(set)
        for a, b in self.faces_of_dim(1):
            adj[a].add(b)
            adj[b].add(a)

        size = 2
        while size <= len(self._table):
            found_larger = False
            for f in sorted(self.faces_of_dim(size - 1)):
                common = set.intersection(*(adj[v] for v in f)) if f else set()
                for v in sorted(common):
                    if v <= f[-1]:
                        continue
                    clique = f + (v,)
                    found_larger = True
                    if clique not in self:
                        return CheckReport(
                            kind="flag",
                            holds=False,
                            witness=clique,
                            values={"witness_labels": self.labels_of(clique)},
                        )
            if not found_larger:
                break
            size += 1
        return CheckReport(kind="flag", holds=True)

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex(dim={self._dim}, "
            f"vertices={len(self._table)}, faces={self.num_faces()})"
        )
