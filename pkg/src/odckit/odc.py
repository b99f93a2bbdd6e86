"""Orthogonal-double-cover machinery for Hamiltonian paths on Z_n.

An ODC of the complete graph K_n by a collection of n paths requires two
properties: every edge of K_n lies in exactly two member paths (double
cover), and every unordered pair of members shares exactly one edge
(orthogonality).  A terrace whose m same-length edge pairs realise every
canonical distance 1..m is a starter: its n translates form an ODC.

verify_odc counts every edge occurrence and every pairwise intersection
directly from the vertex data; nothing is inferred from how a collection was
produced.  The counting kernel is vectorised so that desk-scale sweeps over
hundreds of collections stay fast, but it remains a plain exhaustive count
and its report is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import pathcore
from .pathcore import VertexPath


def edge_distance(n: int, e1: Sequence[int], e2: Sequence[int]) -> int:
    """Canonical distance in [0, m] between two same-length edges of Z_n.

    The distance is the translate k with {x1+k, y1+k} == e2 or
    {x1-k, y1-k} == e2, canonicalised to min(k, n-k).  For odd n it is
    unique, and it is 0 exactly when the edges coincide.  Raises when the
    edges differ in length.
    """
    x1, y1 = e1
    x2, y2 = e2
    d1 = (y1 - x1) % n
    d2 = (y2 - x2) % n
    if d1 == 0 or d2 == 0:
        raise ValueError("edge endpoints must be distinct")
    if min(d1, n - d1) != min(d2, n - d2):
        raise ValueError(f"edges {tuple(e1)} and {tuple(e2)} differ in length")
    ks = set()
    k = (x2 - x1) % n
    if (y2 - y1) % n == k:
        ks.add(min(k, n - k))
    k = (y2 - x1) % n
    if (x2 - y1) % n == k:
        ks.add(min(k, n - k))
    if len(ks) != 1:
        # Unreachable for odd n with distinct endpoints; uniqueness is part
        # of the contract, so a violation is a defect.
        raise AssertionError(f"distance not unique for {tuple(e1)}, {tuple(e2)} in Z_{n}")
    return ks.pop()


@dataclass(frozen=True)
class DistanceProfile:
    """Distance realised by each length's edge pair in a terrace.

    assignment maps every canonical length occurring exactly twice to the
    canonical distance between its two edges.
    """

    n: int
    assignment: Mapping[int, int]


def is_odc_starter(path: VertexPath) -> tuple[bool, DistanceProfile | None]:
    """Starter test: a terrace whose pair distances are a bijection onto [1, m].

    Returns (False, None) when the path is not a terrace; otherwise the
    profile comes back whether or not the distance map is bijective.
    """
    ok, lengths = pathcore.is_terrace(path)
    if not ok:
        return False, None
    n = path.n
    vs = path.vertices
    assignment = {}
    for ell, ps in lengths.positions.items():
        i, j = ps
        assignment[ell] = edge_distance(n, (vs[i], vs[i + 1]), (vs[j], vs[j + 1]))
    profile = DistanceProfile(n, assignment)
    starter = sorted(assignment.values()) == list(range(1, path.m + 1))
    return starter, profile


def _starter_by_injectivity(path: VertexPath) -> bool:
    """Equivalent starter formulation: the m pair distances are pairwise distinct.

    A terrace has exactly m same-length pairs and distances lie in [1, m], so
    injectivity and bijectivity coincide; both routes are kept and must agree.
    """
    ok, lengths = pathcore.is_terrace(path)
    if not ok:
        return False
    vs = path.vertices
    seen = set()
    for ps in lengths.positions.values():
        i, j = ps
        k = edge_distance(path.n, (vs[i], vs[i + 1]), (vs[j], vs[j + 1]))
        if k in seen:
            return False
        seen.add(k)
    return True


class OdcCollection:
    """A candidate ODC: n paths on Z_n, one per row of an n x n matrix.

    Rows are validated as Hamiltonian paths at construction; the matrix is
    frozen afterwards.  VertexPath views of the rows are materialised lazily,
    so bulk verification never pays per-vertex object costs.
    """

    __slots__ = ("_n", "_matrix", "_paths")

    def __init__(self, paths: Iterable[VertexPath]):
        rows = tuple(paths)
        if not rows:
            raise ValueError("collection is empty")
        n = rows[0].n
        if any(p.n != n for p in rows):
            raise ValueError("collection mixes path orders")
        if len(rows) != n:
            raise ValueError(f"need exactly {n} paths of order {n}, got {len(rows)}")
        matrix = np.array([p.vertices for p in rows], dtype=np.int64)
        matrix.flags.writeable = False
        self._n = n
        self._matrix = matrix
        self._paths: tuple[VertexPath, ...] | None = rows

    @classmethod
    def from_rows(cls, matrix: np.ndarray) -> "OdcCollection":
        """Build from an n x n integer array whose rows are permutations of 0..n-1."""
        mat = np.ascontiguousarray(matrix, dtype=np.int64)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError(f"need a square path-per-row matrix, got shape {mat.shape}")
        n = mat.shape[0]
        if n < 3 or n % 2 == 0:
            raise ValueError(f"order must be odd and >= 3, got {n}")
        if not np.array_equal(np.sort(mat, axis=1), np.broadcast_to(np.arange(n), mat.shape)):
            raise ValueError(f"every row must be a permutation of 0..{n - 1}")
        return cls._trusted(n, mat)

    @classmethod
    def _trusted(cls, n: int, mat: np.ndarray) -> "OdcCollection":
        # rows already known to be Hamiltonian paths; skips the per-row check
        obj = object.__new__(cls)
        mat.flags.writeable = False
        obj._n = n
        obj._matrix = mat
        obj._paths = None
        return obj

    @property
    def n(self) -> int:
        return self._n

    @property
    def matrix(self) -> np.ndarray:
        """Read-only n x n matrix, one path per row."""
        return self._matrix

    @property
    def paths(self) -> tuple[VertexPath, ...]:
        if self._paths is None:
            self._paths = tuple(VertexPath(tuple(int(v) for v in row)) for row in self._matrix)
        return self._paths

    def __len__(self) -> int:
        return self._n

    def __getitem__(self, i: int) -> VertexPath:
        return self.paths[i]

    def __iter__(self):
        return iter(self.paths)


def translates(path: VertexPath) -> OdcCollection:
    """All n translates of a path, row t being the path plus t, for t = 0..n-1.

    The row ordering is part of the contract: published covers are reproduced
    row for row.
    """
    n = path.n
    base = np.asarray(path.vertices, dtype=np.int64)
    matrix = (base[None, :] + np.arange(n, dtype=np.int64)[:, None]) % n
    # translating a permutation of Z_n by a constant yields a permutation
    return OdcCollection._trusted(n, matrix)


@dataclass(frozen=True)
class Violation:
    """One counting violation: an edge not covered exactly twice, or a path
    pair not sharing exactly one edge."""

    kind: str  # "edge" or "pair"
    subject: tuple[int, int]  # edge endpoints, or the two path indices
    count: int


@dataclass(frozen=True)
class VerificationReport:
    double_cover_ok: bool
    orthogonality_ok: bool
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return self.double_cover_ok and self.orthogonality_ok


def _as_collection(c: OdcCollection | Sequence[VertexPath]) -> OdcCollection:
    return c if isinstance(c, OdcCollection) else OdcCollection(c)


def verify_odc(collection: OdcCollection | Sequence[VertexPath]) -> VerificationReport:
    """Exhaustively check the double-cover and orthogonality properties.

    Every edge of K_n must occur in exactly two member paths and every
    unordered pair of members must share exactly one edge.  All violations
    are reported, including uncovered edges (count 0) and disjoint path
    pairs, sorted by kind then subject.
    """
    coll = _as_collection(collection)
    n = coll.n
    mat = coll.matrix
    n_edges = n * (n - 1) // 2

    a = mat[:, :-1]
    b = mat[:, 1:]
    eid = np.minimum(a, b) * n + np.maximum(a, b)
    flat = eid.ravel()
    edge_counts = np.bincount(flat, minlength=n * n)
    double_ok = bool(
        np.count_nonzero(edge_counts) == n_edges and int(edge_counts.max()) == 2
    )

    # Pair intersections: each edge id's occurrences contribute one count per
    # unordered pair of owning rows.
    if double_ok:
        # Every id occurs exactly twice, so its owning pair {r1, r2} can be
        # recovered from the per-id row sum and sum of squares:
        # (r1-r2)^2 == 2*(r1^2+r2^2) - (r1+r2)^2.  Exact in float64 here.
        row_of = np.repeat(np.arange(n, dtype=np.int64), n - 1)
        rsum = np.bincount(flat, weights=row_of, minlength=n * n)
        rsumsq = np.bincount(flat, weights=row_of * row_of, minlength=n * n)
        covered = edge_counts == 2
        s = np.rint(rsum[covered]).astype(np.int64)
        q = np.rint(np.sqrt(2.0 * rsumsq[covered] - s.astype(np.float64) ** 2)).astype(np.int64)
        pair_ids = ((s - q) >> 1) * n + ((s + q) >> 1)
        pair_counts = np.bincount(pair_ids, minlength=n * n)
        # Total increments equal n_edges here, so full coverage means all 1.
        orth_ok = bool(np.count_nonzero(pair_counts) == n_edges)
    else:
        order = np.argsort(flat, kind="stable")
        rows = order // (n - 1)
        srt = flat[order]
        pair_counts = np.zeros(n * n, dtype=np.int64)
        boundaries = np.flatnonzero(np.diff(srt)) + 1
        start = 0
        for end in [*boundaries.tolist(), len(srt)]:
            owners = sorted(rows[start:end].tolist())
            for i in range(len(owners)):
                for j in range(i + 1, len(owners)):
                    pair_counts[owners[i] * n + owners[j]] += 1
            start = end
        xs, ys = np.triu_indices(n, 1)
        orth_ok = bool(np.all(pair_counts[xs * n + ys] == 1))

    violations: list[Violation] = []
    if not double_ok:
        xs, ys = np.triu_indices(n, 1)
        ids = xs * n + ys
        counts = edge_counts[ids]
        bad = counts != 2
        violations.extend(
            Violation("edge", (int(x), int(y)), int(c))
            for x, y, c in zip(xs[bad], ys[bad], counts[bad])
        )
    if not orth_ok:
        xs, ys = np.triu_indices(n, 1)
        ids = xs * n + ys
        counts = pair_counts[ids]
        bad = counts != 1
        violations.extend(
            Violation("pair", (int(x), int(y)), int(c))
            for x, y, c in zip(xs[bad], ys[bad], counts[bad])
        )
    return VerificationReport(double_ok, orth_ok, tuple(violations))
