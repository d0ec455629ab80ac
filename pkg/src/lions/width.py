"""Path decompositions: validation, exact (connected) pathwidth, properization.

Exact widths come from a dynamic program over vertex subsets computing the
vertex separation number, which equals pathwidth.  The optimal vertex ordering
v_1..v_n is turned into bags ``boundary(prefix_{i-1}) | {v_i}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import DecompositionError, DomainError, SizeGuardError
from .graph import Graph, _check, boundary, is_connected_set, members


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, bags: Iterable[Iterable[int]]) -> "PathDecomposition":
        return cls(tuple(frozenset(b) for b in bags))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def __len__(self):
        return len(self.bags)

    def is_proper(self) -> bool:
        return all(a - b and b - a and a & b for a, b in zip(self.bags, self.bags[1:]))

    def has_connected_prefixes(self, g: Graph) -> bool:
        seen: set[int] = set()
        for b in self.bags:
            seen |= b
            if not is_connected_set(g, seen):
                return False
        return True


class Violation(NamedTuple):
    condition: str  # "i" coverage, "ii" contiguity, "iii" edge coverage
    witness: object


def validate_decomposition(g: Graph, d: PathDecomposition) -> list[Violation]:
    """Check the three path decomposition conditions independently; empty list means valid."""
    for b in d.bags:
        _check(g, b)
    out = []
    covered = frozenset().union(*d.bags) if d.bags else frozenset()
    for v in range(g.n):
        if v not in covered:
            out.append(Violation("i", v))
    for v in sorted(covered):
        idx = [i for i, b in enumerate(d.bags) if v in b]
        if idx[-1] - idx[0] + 1 != len(idx):
            out.append(Violation("ii", v))
    for u, v in g.edges:
        if not any(u in b and v in b for b in d.bags):
            out.append(Violation("iii", (u, v)))
    return out


def _require_valid(g: Graph, d: PathDecomposition) -> None:
    bad = validate_decomposition(g, d)
    if bad:
        raise DecompositionError(f"invalid path decomposition: {bad[:3]}", bad)


def decomposition_from_ordering(g: Graph, order: Sequence[int]) -> PathDecomposition:
    placed: set[int] = set()
    bags = []
    for v in order:
        bags.append(boundary(g, placed) | {v})
        placed.add(v)
    return PathDecomposition(tuple(bags))


def vertex_separation(g: Graph, order: Sequence[int]) -> int:
    placed: set[int] = set()
    best = 0
    for v in order:
        placed.add(v)
        best = max(best, len(boundary(g, placed)))
    return best


def _boundary_size(masks, s: int) -> int:
    return sum(1 for v in members(s) if masks[v] & ~s)


def _separation_dp(g: Graph, connected_only: bool):
    n = g.n
    masks = g.masks
    size = 1 << n
    inf = n + 1
    best = [inf] * size
    conn = [False] * size if connected_only else None
    best[0] = 0
    for s in range(1, size):
        bsz = _boundary_size(masks, s)
        low = s & -s
        if s == low:
            best[s] = bsz
            if connected_only:
                conn[s] = True
            continue
        m = inf
        ok = False
        x = s
        while x:
            bit = x & -x
            x ^= bit
            rest = s ^ bit
            if connected_only:
                if not conn[rest] or not masks[bit.bit_length() - 1] & rest:
                    continue
                ok = True
            if best[rest] < m:
                m = best[rest]
        if connected_only:
            conn[s] = ok
            if not ok:
                continue
        best[s] = max(bsz, m)
    return best, conn


def _reconstruct(g: Graph, best, conn) -> list[int]:
    s = g.full_mask
    order = []
    while s:
        choice = None
        for v in members(s):
            rest = s ^ (1 << v)
            if rest and conn is not None and (not conn[rest] or not g.masks[v] & rest):
                continue
            if choice is None or best[rest] < best[s ^ (1 << choice)]:
                choice = v
        order.append(choice)
        s ^= 1 << choice
    return order[::-1]


def pathwidth_exact(g: Graph, *, max_n: int = 20) -> tuple[int, PathDecomposition]:
    """Exact pathwidth and a witness decomposition."""
    if g.n > max_n:
        raise SizeGuardError(f"n={g.n} exceeds the pathwidth guard {max_n}")
    if g.n == 0:
        return -1, PathDecomposition(())
    best, _ = _separation_dp(g, False)
    d = decomposition_from_ordering(g, _reconstruct(g, best, None))
    assert d.width == best[g.full_mask]
    return d.width, d


def connected_pathwidth_exact(g: Graph, *, max_n: int = 16) -> tuple[int, PathDecomposition]:
    """Exact connected pathwidth; every bag prefix of the witness induces a connected subgraph."""
    if not g.connected:
        raise DomainError("connected pathwidth needs a connected graph")
    if g.n > max_n:
        raise SizeGuardError(f"n={g.n} exceeds the connected pathwidth guard {max_n}")
    best, conn = _separation_dp(g, True)
    d = decomposition_from_ordering(g, _reconstruct(g, best, conn))
    assert d.width == best[g.full_mask]
    return d.width, d


def normalize_proper(g: Graph, d: PathDecomposition) -> PathDecomposition:
    """Absorb duplicate and nested neighbouring bags.

    For a valid decomposition the result is valid, has the same width, and
    consecutive bags differ both ways.  On a connected graph consecutive bags
    then also intersect; a violation of that is reported, not repaired.
    """
    _require_valid(g, d)
    bags = list(d.bags)
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(bags):
            a, b = bags[i], bags[i + 1]
            if a <= b:
                del bags[i]
                changed = True
            elif b <= a:
                del bags[i + 1]
                changed = True
            else:
                i += 1
    out = PathDecomposition(tuple(bags))
    if g.connected:
        for i, (a, b) in enumerate(zip(bags, bags[1:])):
            if not a & b:
                raise DecompositionError(f"bags {i} and {i + 1} are disjoint on a connected graph")
    return out


def connected_ordering(g: Graph, d: PathDecomposition) -> list[int]:
    """Vertex order following first bag appearance with every prefix connected.

    Requires a decomposition whose bag prefixes are connected.
    """
    _require_valid(g, d)
    if not d.has_connected_prefixes(g):
        raise DecompositionError("decomposition has a disconnected bag prefix")
    order: list[int] = []
    placed: set[int] = set()
    for bag in d.bags:
        pending = sorted(bag - placed)
        while pending:
            pick = next((v for v in pending if not placed or g.adjacency[v] & placed), None)
            if pick is None:
                raise DecompositionError("cannot extend a connected ordering")
            pending.remove(pick)
            placed.add(pick)
            order.append(pick)
    return order
