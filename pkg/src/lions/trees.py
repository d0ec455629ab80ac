"""Lion number and pathwidth of trees via the three-heavy-branches recursion.

Both quantities obey the same rule: a tree T has value >= k+1 (k >= 1) exactly
when some vertex v leaves three components of T - v with value >= k.  Rooted
subtrees are hash-consed by their sorted child ids, so isomorphic pieces share
one memo entry.

For a rooted tree R whose best child has value K the value of R is K or K+1.
It is K+1 iff three children reach K, or a child at value K contains the
unique "critical" vertex w with two children at K and the rest of R outside
w's subtree still reaches K.  The tree with w's subtree cut off is memoized
per rooted subtree, so each cut costs one rebuilt node.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .engine import Schedule, ScheduleBuilder
from .errors import DomainError
from .graph import Graph, shortest_path

LION = "lion"
PATHWIDTH = "pathwidth"

_NO_CRIT = object()


@dataclass(frozen=True)
class TreeCert:
    value: int
    witness_vertex: int | None = None


class _Forest:
    def __init__(self, mode: str):
        if mode not in (LION, PATHWIDTH):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.ids: dict[tuple[int, ...], int] = {}
        self.children: list[tuple[int, ...]] = []
        self.val: list[int] = []
        # () means the root itself; (child_id, rest) descends; _NO_CRIT when absent
        self.crit: list[object] = []
        self._cut: dict[int, int] = {}

    def intern(self, kids: Iterable[int]) -> int:
        key = tuple(sorted(kids))
        found = self.ids.get(key)
        if found is not None:
            return found
        idx = len(self.children)
        self.ids[key] = idx
        self.children.append(key)
        self.val.append(-1)
        self.crit.append(_NO_CRIT)
        self._evaluate(idx)
        return idx

    def _evaluate(self, idx: int) -> None:
        kids = self.children[idx]
        if not kids:
            self.val[idx] = 1 if self.mode == LION else 0
            return
        top = max(self.val[c] for c in kids)
        heavy = [c for c in kids if self.val[c] == top]
        if self.mode == PATHWIDTH and top == 0:
            self.val[idx] = 1
            return
        grows = False
        if len(heavy) >= 3:
            grows = True
        elif len(heavy) == 2:
            grows = any(self.crit[c] is not _NO_CRIT for c in heavy)
        elif self.crit[heavy[0]] is not _NO_CRIT:
            kids = list(kids)
            kids.remove(heavy[0])
            if self.crit[heavy[0]] != ():
                kids.append(self.cut(heavy[0]))
            grows = self.val[self.intern(kids)] >= top
        if grows:
            self.val[idx] = top + 1
            return
        self.val[idx] = top
        if len(heavy) == 2:
            self.crit[idx] = ()
        elif self.crit[heavy[0]] is not _NO_CRIT:
            self.crit[idx] = (heavy[0], self.crit[heavy[0]])

    def cut(self, idx: int) -> int:
        """Id of ``idx`` with the subtree of its critical vertex removed (memoized)."""
        done = self._cut.get(idx)
        if done is not None:
            return done
        child, rest = self.crit[idx]
        kids = list(self.children[idx])
        kids.remove(child)
        if rest != ():
            kids.append(self.cut(child))
        out = self._cut[idx] = self.intern(kids)
        return out


def _require_tree(t: Graph) -> None:
    if not t.is_tree:
        raise DomainError("input is not a tree")


class _Evaluator:
    """Values of every directed subtree D(x <- v) of a tree piece."""

    def __init__(self, mode: str):
        self.forest = _Forest(mode)

    def directed(self, t: Graph, piece: Iterable[int] | None = None):
        """Map (x, v) -> value of the component containing x in piece - v, for adjacent x, v."""
        f = self.forest
        allowed = frozenset(range(t.n)) if piece is None else frozenset(piece)
        root = min(allowed)
        parent = {root: None}
        order = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(t.adjacency[v]):
                if w in allowed and w not in parent:
                    parent[w] = v
                    order.append(w)
                    queue.append(w)
        if len(order) != len(allowed):
            raise DomainError("tree piece is not connected")
        kids = {v: [] for v in order}
        for v in order[1:]:
            kids[parent[v]].append(v)
        down: dict[int, int] = {}
        for v in reversed(order):
            down[v] = f.intern(down[c] for c in kids[v])
        up: dict[int, int] = {}
        for p in order:
            base = [down[c] for c in kids[p]]
            if parent[p] is not None:
                base.append(up[p])
            cache: dict[int, int] = {}
            for c in kids[p]:
                if down[c] not in cache:
                    rest = list(base)
                    rest.remove(down[c])
                    cache[down[c]] = f.intern(rest)
                up[c] = cache[down[c]]
        vals = {}
        for v in order[1:]:
            vals[(v, parent[v])] = f.val[down[v]]
            vals[(parent[v], v)] = f.val[up[v]]
        return vals, f.val[down[root]], order

    def certify(self, t: Graph, piece=None) -> TreeCert:
        vals, value, order = self.directed(t, piece)
        comps: dict[int, list[int]] = {v: [] for v in order}
        for (x, v), val in vals.items():
            comps[v].append(val)
        third = {}
        for v, cv in comps.items():
            cv.sort(reverse=True)
            third[v] = cv[2] if len(cv) >= 3 else 0
        best = max(third.values())
        if self.forest.mode == LION:
            check = 1 + best
            threshold = 2
        else:
            check = 1 + best if best >= 1 else (0 if len(order) == 1 else 1)
            threshold = 2
        if check != value:
            raise AssertionError(f"rooted recursion gave {value}, vertex scan gave {check}")
        witness = None
        if value >= threshold:
            witness = min(v for v in order if third[v] >= value - 1)
        return TreeCert(value, witness)


def tree_lion_number(t: Graph) -> TreeCert:
    """Lion number of a tree, with a vertex whose removal leaves three heavy branches when >= 2."""
    _require_tree(t)
    return _Evaluator(LION).certify(t)


def tree_pathwidth(t: Graph) -> TreeCert:
    """Pathwidth of a tree, with a three-heavy-branch vertex when >= 2."""
    _require_tree(t)
    return _Evaluator(PATHWIDTH).certify(t)


def directed_subtree_values(t: Graph, mode: str = LION) -> dict[tuple[int, int], int]:
    """Value of the component containing x of T - v, for every ordered adjacent pair (x, v)."""
    _require_tree(t)
    return _Evaluator(mode).directed(t)[0]


# --- constructive clearing --------------------------------------------------

def _spine(t: Graph, piece: frozenset[int], vals, value: int) -> list[int]:
    """Path whose hanging branches all have value < ``value``."""
    nbrs = {v: sorted(w for w in t.adjacency[v] if w in piece) for v in sorted(piece)}
    heavy = {v: [x for x in nbrs[v] if vals[(x, v)] >= value] for v in nbrs}
    start = next((v for v in nbrs if not heavy[v]), None)
    if start is not None:
        return [start]
    start = next((v for v in nbrs if len(heavy[v]) == 2), None)
    if start is None:
        start = next(v for v in nbrs if len(heavy[v]) == 1)

    def extend(prev, cur):
        out = [cur]
        while True:
            nxt = [x for x in heavy[cur] if x != prev]
            if not nxt:
                return out
            if len(nxt) > 1:
                raise AssertionError("three heavy branches inside a piece of lower value")
            prev, cur = cur, nxt[0]
            out.append(cur)

    sides = [extend(start, x) for x in heavy[start]]
    left = sides[0][::-1] if len(sides) == 2 else []
    right = sides[-1]
    return left + [start] + right


def _branch(t: Graph, piece: frozenset[int], x: int, v: int) -> frozenset[int]:
    seen = {x}
    queue = deque([x])
    while queue:
        a = queue.popleft()
        for b in t.adjacency[a]:
            if b in piece and b != v and b not in seen:
                seen.add(b)
                queue.append(b)
    return frozenset(seen)


def _clear(t, ev, builder, piece, value, team, entry):
    vals, got, _ = ev.directed(t, piece)
    assert got == value
    spine = _spine(t, piece, vals, value)
    route = shortest_path(t, entry, spine[0], piece | {entry})
    builder.walk_together(team, route)
    blocker, helpers = team[0], team[1:]
    for i, p in enumerate(spine):
        hanging = [x for x in sorted(t.adjacency[p])
                   if x in piece and (i == 0 or x != spine[i - 1])
                   and (i + 1 == len(spine) or x != spine[i + 1])]
        hanging.sort(key=lambda x: (-vals[(x, p)], x))
        for x in hanging:
            sub_value = vals[(x, p)]
            if sub_value >= value:
                raise AssertionError("hanging branch as heavy as the piece")
            sub = helpers[:sub_value]
            branch = _branch(t, piece, x, p)
            end = _clear(t, ev, builder, branch, sub_value, sub, p)
            builder.walk_together(sub, shortest_path(t, end, p, branch | {p}))
        if i + 1 < len(spine):
            builder.move({lion: spine[i + 1] for lion in team})
    return spine[-1]


def tree_clearing_strategy(t: Graph) -> Schedule:
    """Schedule clearing a tree with exactly its lion number of lions.

    A blocker walks a spine whose hanging branches are all lighter than the
    tree; the other lions clear each hanging branch recursively while the
    blocker seals it off, then rejoin the blocker.
    """
    _require_tree(t)
    ev = _Evaluator(LION)
    piece = frozenset(range(t.n))
    vals, value, _ = ev.directed(t, piece)
    start = _spine(t, piece, vals, value)[0]
    builder = ScheduleBuilder([start] * value)
    _clear(t, ev, builder, piece, value, list(range(value)), start)
    return builder.build(strategy="tree-spine", lions=value)
