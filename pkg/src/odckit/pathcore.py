"""Hamiltonian paths on Z_n, edge lengths, terraces, and directed terraces.

Vertices are the residues 0..n-1 for odd n = 2m+1.  The length of the edge
{x, y} is the pair {y-x, x-y} of differences mod n, stored canonically as
min(d, n-d), which lies in [1, m].  A path is a terrace when every length
1..m occurs exactly twice among its n-1 edges.

Directed terraces live one level up, on Z_{2n}: an arrangement of all 2n
elements whose consecutive differences realise every non-zero element of
Z_{2n} exactly once.  It is symmetric when differences mirror to their
negatives around the centre, which forces the middle difference to be the
involution n.  The first half of a symmetric directed terrace, reduced mod n,
projects to a terrace for Z_n; that projection is what the discrete-log
construction rides on, and the test suite verifies the property instead of
trusting it.

Checks here recompute everything from the raw vertex data, so paths loaded
from fixture files need no trusted metadata.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class VertexPath:
    """A Hamiltonian path on Z_n: a permutation of 0..n-1 with n odd, n >= 3."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = tuple(int(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        n = len(vs)
        if n < 3 or n % 2 == 0:
            raise ValueError(f"path order must be odd and >= 3, got {n}")
        if set(vs) != set(range(n)):
            raise ValueError(f"vertices must be a permutation of 0..{n - 1}")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        """Half-order m with n = 2m+1; lengths and distances live in [1, m]."""
        return (len(self.vertices) - 1) // 2

    def translate(self, t: int) -> "VertexPath":
        """The path with t added to every vertex mod n."""
        n = self.n
        return VertexPath(tuple((v + t) % n for v in self.vertices))

    def reverse(self) -> "VertexPath":
        return VertexPath(tuple(reversed(self.vertices)))

    def edges(self) -> tuple[tuple[int, int], ...]:
        """The n-1 consecutive vertex pairs, in path order."""
        vs = self.vertices
        return tuple(zip(vs, vs[1:]))


def edge_length(n: int, x: int, y: int) -> int:
    """Canonical length min(d, n-d) of the edge {x, y} in Z_n, d = (y-x) mod n."""
    d = (y - x) % n
    if d == 0:
        raise ValueError("edge endpoints must be distinct")
    return min(d, n - d)


def edge_lengths(path: VertexPath) -> tuple[int, ...]:
    """Canonical lengths of the n-1 edges, in path order; each lies in [1, m]."""
    n = path.n
    vs = path.vertices
    out = []
    for a, b in zip(vs, vs[1:]):
        d = (b - a) % n
        out.append(d if 2 * d < n else n - d)
    return tuple(out)


@dataclass(frozen=True)
class LengthProfile:
    """Where each canonical edge length occurs along a path.

    positions maps a length to the 0-based edge positions realising it, in
    path order; counts is the induced multiplicity map.  The multiplicities
    always sum to n-1.
    """

    n: int
    positions: Mapping[int, tuple[int, ...]]

    @property
    def counts(self) -> dict[int, int]:
        return {ell: len(ps) for ell, ps in self.positions.items()}


def length_profile(path: VertexPath) -> LengthProfile:
    n = path.n
    vs = path.vertices
    positions: dict[int, list[int]] = {}
    prev = vs[0]
    for pos in range(n - 1):
        cur = vs[pos + 1]
        d = (cur - prev) % n
        if 2 * d > n:
            d = n - d
        positions.setdefault(d, []).append(pos)
        prev = cur
    return LengthProfile(n, {ell: tuple(ps) for ell, ps in sorted(positions.items())})


def is_terrace(path: VertexPath) -> tuple[bool, LengthProfile]:
    """Whether every length 1..m occurs exactly twice; the profile comes back either way."""
    profile = length_profile(path)
    counts = profile.counts
    ok = all(counts.get(ell) == 2 for ell in range(1, path.m + 1))
    return ok, profile


@dataclass(frozen=True)
class DirectedTerrace:
    """An arrangement of all elements of Z_{2n} with its difference sequence.

    entries must be a permutation of 0..2n-1 (2n even, at least 6); the
    sequencing holds the 2n-1 consecutive differences mod 2n.  Whether the
    arrangement is actually a (symmetric) directed terrace is decided by
    is_symmetric_directed_terrace, not by construction.
    """

    entries: tuple[int, ...]
    sequencing: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        es = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", es)
        k = len(es)
        if k < 6 or k % 2:
            raise ValueError(f"order must be even and >= 6, got {k}")
        if set(es) != set(range(k)):
            raise ValueError(f"entries must be a permutation of 0..{k - 1}")
        seq = tuple((es[i + 1] - es[i]) % k for i in range(k - 1))
        object.__setattr__(self, "sequencing", seq)

    @property
    def order(self) -> int:
        return len(self.entries)


def is_symmetric_directed_terrace(t: DirectedTerrace) -> bool:
    """Directed-terrace check plus the mirror symmetry of the sequencing.

    With order 2n and 1-based differences b_1..b_{2n-1}: every non-zero
    element of Z_{2n} must appear exactly once among the b_i, and
    b_i == -b_{2n-i} must hold for 1 <= i <= n-1.  Those conditions pin the
    centre difference b_n to the involution n, which is checked explicitly
    rather than assumed.
    """
    k = t.order
    n = k // 2
    if set(t.entries) != set(range(k)):
        return False
    b = t.sequencing
    if set(b) != set(range(1, k)):
        return False
    if b[n - 1] != n:
        return False
    return all(b[i - 1] == (-b[k - i - 1]) % k for i in range(1, n))


def project_to_half(t: DirectedTerrace) -> VertexPath:
    """First n entries of a symmetric directed terrace for Z_{2n}, reduced mod n.

    Raises unless the symmetric-directed-terrace check passes.  The result is
    a terrace for Z_n; the suite verifies that instead of trusting it here.
    """
    if not is_symmetric_directed_terrace(t):
        raise ValueError("not a symmetric directed terrace")
    n = t.order // 2
    return VertexPath(tuple(e % n for e in t.entries[:n]))


def parse_paths(text: str) -> list[VertexPath]:
    """Parse the one-path-per-line fixture format.

    Each line holds comma-separated vertex labels; blank lines and '#'
    comments (whole-line or trailing) are ignored.  Malformed lines raise
    ValueError naming the line number.
    """
    paths = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            vs = tuple(int(tok) for tok in body.split(","))
            paths.append(VertexPath(vs))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return paths


def format_path(path: VertexPath) -> str:
    """Fixture-format rendering: comma-separated vertex labels."""
    return ",".join(map(str, path.vertices))


def format_paths(paths: Iterable[VertexPath]) -> str:
    return "\n".join(format_path(p) for p in paths)


def path_from_values(values: Sequence[int]) -> VertexPath:
    """Convenience constructor from any integer sequence."""
    return VertexPath(tuple(values))
