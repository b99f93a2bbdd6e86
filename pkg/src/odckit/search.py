"""Exhaustive backtracking enumeration of ODC-starters for small odd n.

The tree fixes vertex 0 first and extends one unused vertex at a time in
ascending order, so results come out in a deterministic lexicographic order.
The default cut is sound: a third occurrence of any edge length can never
lead to a terrace.  Full-length survivors get the search's own distance
test, and everything emitted is re-verified through the odc module; a
disagreement between the two routes is a defect.

With canonicalisation on, exactly one representative per equivalence class
under translation and reversal is kept: the lexicographically least member
that starts at vertex 0.  Richer equivalences (multiplier maps, say) are
deliberately not quotiented.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass

from . import modnum, odc
from .construction import NotEligibleError, build_starter, eligibility_modulus
from .pathcore import VertexPath

DEFAULT_CEILING = 17


class PruneLevel(enum.Enum):
    NONE = "none"  # no cuts at all: every permutation is visited (oracle mode)
    LENGTHS = "lengths"  # cut on a third occurrence of an edge length
    DISTANCES = "distances"  # lengths cut plus duplicate-distance cut on completed pairs


@dataclass(frozen=True)
class SearchConfig:
    n: int
    canonicalize: bool = True
    limit: int | None = None
    ceiling: int = DEFAULT_CEILING
    prune: PruneLevel = PruneLevel.LENGTHS

    def __post_init__(self) -> None:
        if self.n % 2 == 0 or self.n < 3:
            raise ValueError(f"search order must be odd and >= 3, got {self.n}")
        if self.n > self.ceiling:
            raise ValueError(f"order {self.n} above the search ceiling {self.ceiling}")
        if self.limit is not None and self.limit < 1:
            raise ValueError(f"limit must be positive, got {self.limit}")


@dataclass(frozen=True)
class SearchResult:
    starters: tuple[VertexPath, ...]
    nodes_explored: int  # vertex placements performed, the fixed 0 included
    wall_time: float


def canonical_form(path: VertexPath) -> VertexPath:
    """Least representative of the path's translation/reversal class.

    Each class has exactly two members starting at vertex 0 (one per
    direction); the lexicographically smaller one is canonical.
    """
    n = path.n
    vs = path.vertices
    fwd = tuple((v - vs[0]) % n for v in vs)
    rev = tuple((v - vs[-1]) % n for v in reversed(vs))
    return VertexPath(min(fwd, rev))


def _canonical_tuple(vs: tuple[int, ...], n: int) -> tuple[int, ...]:
    last = vs[-1]
    rev = tuple((v - last) % n for v in reversed(vs))
    return min(vs, rev)


def _distance_test(vs: tuple[int, ...], n: int, m: int) -> bool:
    """The search's own starter test on a full-length path.

    Inline re-derivation, kept independent of the odc module on purpose:
    collect the two edge positions of every length, compute each pair's
    translate, and demand m distinct canonical distances.
    """
    first = [-1] * (m + 1)
    second = [-1] * (m + 1)
    for pos in range(n - 1):
        d = (vs[pos + 1] - vs[pos]) % n
        ell = d if 2 * d < n else n - d
        if first[ell] < 0:
            first[ell] = pos
        elif second[ell] < 0:
            second[ell] = pos
        else:
            return False
    seen = [False] * (m + 1)
    for ell in range(1, m + 1):
        i, j = first[ell], second[ell]
        if j < 0:
            return False
        a1, b1 = vs[i], vs[i + 1]
        a2, b2 = vs[j], vs[j + 1]
        k = (a2 - a1) % n
        if (b2 - b1) % n != k:
            k = (b2 - a1) % n
        if 2 * k > n:
            k = n - k
        if k == 0 or seen[k]:
            return False
        seen[k] = True
    return True


def enumerate_starters(cfg: SearchConfig) -> SearchResult:
    """Complete enumeration of the starters of Z_n with first vertex 0.

    Completeness holds for every prune level: the cuts only discard prefixes
    that cannot extend to a terrace (a length already used twice) or to a
    bijective distance map (a distance already taken by a completed pair).
    Every emitted path is re-verified via odc.is_odc_starter.
    """
    n = cfg.n
    m = (n - 1) // 2
    start = time.perf_counter()

    path = [0] * n
    depth = 1
    used = [False] * n
    used[0] = True
    counts = [0] * (m + 1)
    # Distance bookkeeping, active only for the DISTANCES cut.
    first_pos = [-1] * (m + 1)
    pair_dist = [0] * (m + 1)
    dist_used = [False] * (m + 1)

    prune_lengths = cfg.prune in (PruneLevel.LENGTHS, PruneLevel.DISTANCES)
    prune_distances = cfg.prune is PruneLevel.DISTANCES

    found: list[tuple[int, ...]] = []
    nodes = 1  # the fixed vertex 0
    limit_hit = False

    def emit() -> None:
        nonlocal limit_hit
        vs = tuple(path)
        if not _distance_test(vs, n, m):
            return
        if cfg.canonicalize and vs != _canonical_tuple(vs, n):
            return
        candidate = VertexPath(vs)
        ok, _ = odc.is_odc_starter(candidate)
        if not ok:
            raise RuntimeError(f"defect: search and odc starter tests disagree on {vs}")
        found.append(vs)
        if cfg.limit is not None and len(found) >= cfg.limit:
            limit_hit = True

    def dfs() -> None:
        nonlocal depth, nodes
        if depth == n:
            emit()
            return
        prev = path[depth - 1]
        for v in range(1, n):
            if used[v]:
                continue
            d = (v - prev) % n
            ell = d if 2 * d < n else n - d
            c = counts[ell]
            if prune_lengths and c == 2:
                continue
            k = 0
            if prune_distances and c == 1:
                p1 = first_pos[ell]
                a1, b1 = path[p1], path[p1 + 1]
                k = (prev - a1) % n
                if (v - b1) % n != k:
                    k = (v - a1) % n
                if 2 * k > n:
                    k = n - k
                if dist_used[k]:
                    continue
            used[v] = True
            path[depth] = v
            counts[ell] = c + 1
            if prune_distances:
                if c == 0:
                    first_pos[ell] = depth - 1
                elif c == 1:
                    pair_dist[ell] = k
                    dist_used[k] = True
            depth += 1
            nodes += 1
            dfs()
            depth -= 1
            if prune_distances:
                if c == 0:
                    first_pos[ell] = -1
                elif c == 1:
                    dist_used[pair_dist[ell]] = False
            counts[ell] = c
            used[v] = False
            if limit_hit:
                return

    dfs()
    starters = tuple(VertexPath(vs) for vs in found)
    return SearchResult(starters, nodes, time.perf_counter() - start)


@dataclass(frozen=True)
class ConstructionComparison:
    """Cross-check of constructed starters against exhaustive enumeration.

    hits lists, per primitive root of 2n+1, the constructed starter's
    canonical form and whether the search found it.  For ineligible n the
    search results stand alone and hits is empty.
    """

    n: int
    eligible: bool
    canonical_count: int
    nodes_explored: int
    hits: tuple[tuple[int, VertexPath, bool], ...]

    @property
    def all_found(self) -> bool | None:
        if not self.eligible:
            return None
        return all(found for _, _, found in self.hits)


def compare_with_construction(n: int, *, ceiling: int = DEFAULT_CEILING) -> ConstructionComparison:
    """Enumerate canonical starters and look up every constructed one.

    When 2n+1 is composite the construction side is skipped and no claim is
    made either way; search validity errors (even n, over the ceiling) still
    propagate.
    """
    result = enumerate_starters(SearchConfig(n=n, ceiling=ceiling))
    canon = {p.vertices for p in result.starters}
    try:
        p = eligibility_modulus(n)
    except NotEligibleError:
        return ConstructionComparison(n, False, len(canon), result.nodes_explored, ())
    hits = []
    for g in modnum.primitive_roots(p):
        starter = build_starter(n, g).terrace
        c = canonical_form(starter)
        hits.append((g, c, c.vertices in canon))
    return ConstructionComparison(n, True, len(canon), result.nodes_explored, tuple(hits))
