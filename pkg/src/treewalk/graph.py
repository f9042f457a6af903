"""Core types: simple undirected graphs, rooted spanning trees, and leaf moves.

Two spanning trees rooted at the same vertex are considered adjacent when one
can be turned into the other by detaching a single leaf (never the root) and
reattaching it to another neighbor.  Both characterizations of that relation
live here: the edge-intersection test and the direct parent-map test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping


class GraphFormatError(ValueError):
    """Raised when a graph or tree description cannot be parsed."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``edges`` holds normalized (min, max) pairs; ``adj`` holds sorted neighbor
    tuples, so the construction order of the edge list never matters.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
        if n < 2:
            raise ValueError(f"need at least 2 vertices, got {n}")
        seen: set[tuple[int, int]] = set()
        lists: list[list[int]] = [[] for _ in range(n)]
        for u, v in edge_list:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = _norm(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(e)
            lists[u].append(v)
            lists[v].append(u)
        adj = tuple(tuple(sorted(xs)) for xs in lists)
        return cls(n, frozenset(seen), adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]


@dataclass(frozen=True)
class RootedSpanningTree:
    """Candidate spanning tree stored as a parent array rooted at ``root``.

    ``parents[root]`` is -1; every other slot names that vertex's parent.  The
    shape is checked here, but whether the parent map really is a spanning
    tree of a particular graph is the job of :func:`is_spanning_tree` (the
    array may encode a cycle, which that check rejects).
    """

    root: int
    parents: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.parents)
        if not 0 <= self.root < n:
            raise ValueError(f"root {self.root} out of range for {n} vertices")
        for v, p in enumerate(self.parents):
            if v == self.root:
                if p != -1:
                    raise ValueError(f"root {v} must have parent -1, got {p}")
            elif not 0 <= p < n or p == v:
                raise ValueError(f"vertex {v} has invalid parent {p}")

    @classmethod
    def from_parent_map(cls, root: int, parent_map: Mapping[int, int], n: int) -> RootedSpanningTree:
        if len(parent_map) != n - 1:
            raise ValueError(f"expected {n - 1} parent entries, got {len(parent_map)}")
        parents = [-1] * n
        for v, p in parent_map.items():
            if v == root:
                raise ValueError(f"root {root} may not have a parent entry")
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range")
            parents[v] = p
        return cls(root, tuple(parents))

    @property
    def n(self) -> int:
        return len(self.parents)

    def parent_of(self, v: int) -> int:
        return self.parents[v]

    def to_parent_map(self) -> dict[int, int]:
        return {v: p for v, p in enumerate(self.parents) if v != self.root}

    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(_norm(v, p) for v, p in enumerate(self.parents) if v != self.root)

    def child_counts(self) -> list[int]:
        counts = [0] * self.n
        for v, p in enumerate(self.parents):
            if v != self.root:
                counts[p] += 1
        return counts

    def is_leaf(self, v: int) -> bool:
        return all(p != v for w, p in enumerate(self.parents) if w != self.root)


@dataclass(frozen=True)
class LeafMove:
    """Detach ``vertex`` from ``old_parent`` and reattach it to ``new_parent``."""

    vertex: int
    old_parent: int
    new_parent: int

    def __post_init__(self) -> None:
        if self.new_parent == self.vertex:
            raise ValueError(f"vertex {self.vertex} cannot become its own parent")

    def reversed(self) -> LeafMove:
        return LeafMove(self.vertex, self.new_parent, self.old_parent)


def _tree_unchecked(root: int, parents: tuple[int, ...]) -> RootedSpanningTree:
    """Build a tree skipping shape validation; caller guarantees the invariants.

    Used on hot paths that snapshot thousands of intermediate trees derived
    from already-validated ones by single certified moves.
    """
    t = object.__new__(RootedSpanningTree)
    object.__setattr__(t, "root", root)
    object.__setattr__(t, "parents", parents)
    return t


def is_spanning_tree(g: Graph, t: RootedSpanningTree) -> bool:
    """True iff ``t`` is a spanning tree of ``g`` rooted at ``t.root``."""
    return spanning_tree_violation(g, t) is None


def spanning_tree_violation(g: Graph, t: RootedSpanningTree) -> str | None:
    """Diagnostic twin of :func:`is_spanning_tree`: first violated invariant or None."""
    n = g.n
    if t.n != n:
        return f"vertex count mismatch: tree has {t.n}, graph has {n}"
    parents = t.parents
    edges = g.edges
    for v in range(n):
        if v == t.root:
            continue
        p = parents[v]
        if ((v, p) if v < p else (p, v)) not in edges:
            return f"tree edge ({v}, {p}) is not a graph edge"
    # Every vertex must reach the root through the parent chain (no cycles).
    state = [0] * n  # 0 unknown, 1 reaches root, 2 on current chain
    state[t.root] = 1
    for v in range(n):
        if state[v]:
            continue
        chain = []
        u = v
        while state[u] == 0:
            state[u] = 2
            chain.append(u)
            u = parents[u]
        if state[u] == 2:
            return f"parent chain from vertex {v} loops back to {u}"
        for w in chain:
            state[w] = 1
    return None


def apply_leaf_move(t: RootedSpanningTree, move: LeafMove, g: Graph) -> RootedSpanningTree:
    """Apply one leaf move, validating every precondition.

    A move with new_parent == old_parent is permitted and returns an equal tree.
    """
    v = move.vertex
    if v == t.root:
        raise ValueError(f"cannot move the root vertex {v}")
    if not 0 <= v < t.n:
        raise ValueError(f"vertex {v} out of range")
    if t.parents[v] != move.old_parent:
        raise ValueError(
            f"old parent mismatch for vertex {v}: tree has {t.parents[v]}, move says {move.old_parent}"
        )
    if not t.is_leaf(v):
        raise ValueError(f"vertex {v} is not a leaf")
    if not g.has_edge(v, move.new_parent):
        raise ValueError(f"({v}, {move.new_parent}) is not a graph edge")
    parents = list(t.parents)
    parents[v] = move.new_parent
    result = RootedSpanningTree(t.root, tuple(parents))
    assert is_spanning_tree(g, result)
    return result


def _check_same_shape(t_a: RootedSpanningTree, t_b: RootedSpanningTree, a: int) -> None:
    if t_a.n != t_b.n:
        raise ValueError(f"trees over mismatched vertex sets ({t_a.n} vs {t_b.n})")
    if t_a.root != a or t_b.root != a:
        raise ValueError(f"both trees must be rooted at {a} (got {t_a.root}, {t_b.root})")


def trees_adjacent(t_a: RootedSpanningTree, t_b: RootedSpanningTree, a: int) -> bool:
    """Edge-intersection adjacency test.

    Adjacent means the common edges of the two trees contain a tree on n-1
    vertices that includes ``a``; identical trees pass trivially.  Any
    connected subgraph on n-1 vertices contains such a tree, so this reduces
    to: the component of ``a`` in the shared-edge graph has at least n-1
    vertices.  Computed with a union-find over the shared edges.
    """
    _check_same_shape(t_a, t_b, a)
    n = t_a.n
    pa, pb = t_a.parents, t_b.parents
    if pa == pb:
        return True
    ea = {(v * n + pa[v]) if v < pa[v] else (pa[v] * n + v) for v in range(n) if v != a}
    comp = list(range(n))
    for v in range(n):
        if v == a:
            continue
        p = pb[v]
        if ((v * n + p) if v < p else (p * n + v)) in ea:
            x = v
            while comp[x] != x:
                comp[x] = comp[comp[x]]
                x = comp[x]
            y = p
            while comp[y] != y:
                comp[y] = comp[comp[y]]
                y = comp[y]
            if x != y:
                comp[x] = y
    r = a
    while comp[r] != r:
        comp[r] = comp[comp[r]]
        r = comp[r]
    size = 0
    for v in range(n):
        x = v
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        if x == r:
            size += 1
    return size >= n - 1


def trees_adjacent_via_move(t_a: RootedSpanningTree, t_b: RootedSpanningTree, a: int) -> bool:
    """Parent-map adjacency test: equal trees, or exactly one leaf was rehung."""
    _check_same_shape(t_a, t_b, a)
    pa, pb = t_a.parents, t_b.parents
    if pa == pb:
        return True
    v = -1
    for w in range(t_a.n):
        if pa[w] != pb[w]:
            if v >= 0:
                return False
            v = w
    # v's children agree in both trees because every other parent entry agrees
    return v not in pa and v not in pb


def tree_from_edges(n: int, edge_list: Iterable[tuple[int, int]], root: int) -> RootedSpanningTree:
    """Orient an undirected tree edge list away from ``root``."""
    edges = list(edge_list)
    if len(edges) != n - 1:
        raise ValueError(f"expected {n - 1} edges, got {len(edges)}")
    lists: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        lists[u].append(v)
        lists[v].append(u)
    parents = [-1] * n
    seen = [False] * n
    seen[root] = True
    stack = [root]
    reached = 1
    while stack:
        u = stack.pop()
        for w in lists[u]:
            if not seen[w]:
                seen[w] = True
                parents[w] = u
                reached += 1
                stack.append(w)
    if reached != n:
        raise ValueError("edge list does not form a spanning tree")
    return RootedSpanningTree(root, tuple(parents))


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for idx, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((idx, line))
    return out


def _parse_ints(lineno: int, line: str, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphFormatError(f"line {lineno}: expected {count} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected {count} integers, got {line!r}") from None


def parse_graph(text: str) -> Graph:
    """Parse the graph file format: a header ``n m`` then m lines ``u v``.

    Lines starting with '#' and blank lines are skipped.  Errors name the
    offending line.
    """
    lines = _data_lines(text)
    if not lines:
        raise GraphFormatError("empty graph description")
    lineno, header = lines[0]
    n, m = _parse_ints(lineno, header, 2)
    if len(lines) - 1 < m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    if len(lines) - 1 > m:
        extra_lineno, extra = lines[1 + m]
        raise GraphFormatError(f"line {extra_lineno}: unexpected extra line {extra!r}")
    if n < 2:
        raise GraphFormatError(f"line {lineno}: need at least 2 vertices, got {n}")
    seen: set[tuple[int, int]] = set()
    edge_list = []
    for lineno, line in lines[1:]:
        u, v = _parse_ints(lineno, line, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        e = _norm(u, v)
        if e in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add(e)
        edge_list.append((u, v))
    return Graph.from_edges(n, edge_list)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_tree(text: str) -> RootedSpanningTree:
    """Parse the tree file format: a header ``n root`` then n-1 lines ``child parent``."""
    lines = _data_lines(text)
    if not lines:
        raise GraphFormatError("empty tree description")
    lineno, header = lines[0]
    n, root = _parse_ints(lineno, header, 2)
    if n < 2:
        raise GraphFormatError(f"line {lineno}: need at least 2 vertices, got {n}")
    if not 0 <= root < n:
        raise GraphFormatError(f"line {lineno}: root {root} out of range for n={n}")
    if len(lines) - 1 != n - 1:
        raise GraphFormatError(f"expected {n - 1} parent lines, found {len(lines) - 1}")
    parent_map: dict[int, int] = {}
    for lineno, line in lines[1:]:
        child, parent = _parse_ints(lineno, line, 2)
        if child == root:
            raise GraphFormatError(f"line {lineno}: root {root} may not have a parent")
        if not (0 <= child < n and 0 <= parent < n):
            raise GraphFormatError(f"line {lineno}: vertex out of range in {line!r}")
        if child in parent_map:
            raise GraphFormatError(f"line {lineno}: duplicate parent entry for vertex {child}")
        if child == parent:
            raise GraphFormatError(f"line {lineno}: vertex {child} cannot be its own parent")
        parent_map[child] = parent
    return RootedSpanningTree.from_parent_map(root, parent_map, n)


def format_tree(t: RootedSpanningTree) -> str:
    lines = [f"{t.n} {t.root}"]
    lines.extend(f"{v} {p}" for v, p in sorted(t.to_parent_map().items()))
    return "\n".join(lines) + "\n"
