"""Constructive walks between spanning trees under single-leaf moves.

Fix an st-numbering whose first vertex is the root a.  The canonical tree
hangs the last vertex from a and every other vertex from its highest-numbered
neighbor.  Any target tree is reached from the canonical tree by growing a
connected piece of the target one vertex per stage ("milestone" trees); each
stage temporarily pushes the not-yet-grown vertices down to their
lowest-numbered neighbors, absorbs one chosen boundary vertex, and restores
the rest.  Every vertex detached along the way is provably a leaf at that
moment; this module makes that claim a hard runtime check.

A walk between two arbitrary trees is the reversal of one canonical walk
concatenated with another, so its length is at most 2n(n-1) moves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .connectivity import NotBiconnectedError, STNumbering, is_biconnected, st_numbering
from .graph import (
    Graph,
    LeafMove,
    RootedSpanningTree,
    _tree_unchecked,
    is_spanning_tree,
    spanning_tree_violation,
    trees_adjacent,
)


class LeafClaimError(AssertionError):
    """A vertex scheduled for reattachment still had children.

    This cannot happen if the construction is correct; the check stays on in
    production builds because it certifies every emitted move.
    """

    def __init__(self, vertex: int, parents: tuple[int, ...]):
        self.vertex = vertex
        self.parents = parents
        super().__init__(f"vertex {vertex} is not a leaf in {parents}")


@dataclass(frozen=True)
class WalkSequence:
    """Trees visited plus the moves between them; ``moves[i]`` maps trees[i] to trees[i+1]."""

    trees: tuple[RootedSpanningTree, ...]
    moves: tuple[LeafMove, ...]

    @property
    def source(self) -> RootedSpanningTree:
        return self.trees[0]

    @property
    def target(self) -> RootedSpanningTree:
        return self.trees[-1]

    def __len__(self) -> int:
        return len(self.trees)

    def reverse(self) -> WalkSequence:
        return WalkSequence(
            tuple(reversed(self.trees)),
            tuple(m.reversed() for m in reversed(self.moves)),
        )


def _extreme_neighbors(g: Graph, num: STNumbering) -> tuple[list[int], list[int]]:
    """Per vertex, the neighbor with the lowest and the highest position."""
    lo = [0] * g.n
    hi = [0] * g.n
    for v in range(g.n):
        nbrs = g.adj[v]
        lo[v] = min(nbrs, key=num.position)
        hi[v] = max(nbrs, key=num.position)
    return lo, hi


def _milestone_parents(
    g: Graph,
    num: STNumbering,
    inside: set[int],
    target_parents: tuple[int, ...],
    hi: list[int],
) -> list[int]:
    """Parent array of the stage tree for ``inside``, given the highest-neighbor table."""
    root = num.order[0]
    last = num.order[-1]
    parents = [-1] * g.n
    for v in range(g.n):
        if v == root:
            continue
        if v in inside:
            parents[v] = target_parents[v]
        else:
            parents[v] = root if v == last else hi[v]
    return parents


def canonical_tree(g: Graph, num: STNumbering) -> RootedSpanningTree:
    """Last vertex hangs from the first; everyone else from their highest-positioned neighbor."""
    root = num.order[0]
    _, hi = _extreme_neighbors(g, num)
    parents = _milestone_parents(g, num, {root}, (), hi)
    result = RootedSpanningTree(root, tuple(parents))
    assert is_spanning_tree(g, result)
    return result


def milestone_tree(
    g: Graph, num: STNumbering, members: Iterable[int], t_prime: RootedSpanningTree
) -> RootedSpanningTree:
    """The stage tree: target structure on ``members``, canonical attachment outside."""
    root = num.order[0]
    inside = set(members)
    if root not in inside:
        raise ValueError("member set must contain the root")
    _, hi = _extreme_neighbors(g, num)
    parents = _milestone_parents(g, num, inside, t_prime.parents, hi)
    result = RootedSpanningTree(root, tuple(parents))
    assert is_spanning_tree(g, result)
    return result


def select_boundary_edge(
    t_prime: RootedSpanningTree, members: Iterable[int], num: STNumbering
) -> tuple[int, int]:
    """Pick the target-tree edge leaving ``members`` whose outside end sits highest.

    Returns (anchor, newcomer): anchor inside, newcomer outside.  The member
    set must induce a connected subtree of the target containing the root,
    which makes the anchor for the chosen newcomer unique.
    """
    inside = set(members)
    root = t_prime.root
    if root not in inside:
        raise ValueError("member set must contain the root")
    for v in inside:
        if v != root and t_prime.parents[v] not in inside:
            raise ValueError(f"member set is not connected in the target tree (vertex {v})")
    best_newcomer = -1
    best_anchor = -1
    for v in range(t_prime.n):
        if v == root:
            continue
        p = t_prime.parents[v]
        if p in inside and v not in inside:
            anchor, newcomer = p, v
        elif v in inside and p not in inside:
            anchor, newcomer = v, p
        else:
            continue
        if best_newcomer >= 0 and newcomer == best_newcomer:
            raise AssertionError(f"two boundary edges share outside vertex {newcomer}")
        if best_newcomer < 0 or num.position(newcomer) > num.position(best_newcomer):
            best_newcomer = newcomer
            best_anchor = anchor
    if best_newcomer < 0:
        raise ValueError("no boundary edge: member set already spans the tree")
    return best_anchor, best_newcomer


def gap_sequence(
    t_k: RootedSpanningTree,
    members: Iterable[int],
    t_prime: RootedSpanningTree,
    num: STNumbering,
    g: Graph,
    boundary: tuple[int, int] | None = None,
    ext: tuple[list[int], list[int]] | None = None,
) -> tuple[list[LeafMove], RootedSpanningTree]:
    """Advance one stage: from the tree for ``members`` to the tree for members + newcomer.

    First loop, ascending positions over outside vertices: everything before
    the newcomer drops to its lowest-positioned neighbor, then the newcomer
    attaches to its anchor and the loop stops.  Second loop, descending: the
    dropped vertices return to their highest-positioned neighbors.  Moves
    whose new parent equals the current parent are elided from the output.

    ``ext`` may carry the (lowest, highest) neighbor tables from
    :func:`_extreme_neighbors` to avoid recomputing them per stage.
    """
    inside = set(members)
    if boundary is None:
        boundary = select_boundary_edge(t_prime, inside, num)
    anchor, newcomer = boundary
    n = g.n
    root = t_k.root
    last = num.order[-1]
    lo, hi = ext if ext is not None else _extreme_neighbors(g, num)
    pos = num.positions
    parents = list(t_k.parents)
    kids = [0] * n
    for v in range(n):
        if v != root:
            kids[parents[v]] += 1
    moves: list[LeafMove] = []

    def reattach(v: int, new_parent: int) -> None:
        if kids[v]:
            raise LeafClaimError(v, tuple(parents))
        old_parent = parents[v]
        if new_parent != old_parent:
            parents[v] = new_parent
            kids[old_parent] -= 1
            kids[new_parent] += 1
            moves.append(LeafMove(v, old_parent, new_parent))

    dropped: list[int] = []
    for v in num.order:  # ascending positions
        if v in inside:
            continue
        if v == newcomer:
            reattach(v, anchor)
            break
        assert v != last, "only the newcomer may be the last-positioned vertex here"
        assert pos[lo[v]] < pos[v]
        reattach(v, lo[v])
        dropped.append(v)
    for v in reversed(dropped):
        reattach(v, hi[v])

    t_next = RootedSpanningTree(root, tuple(parents))
    assert t_next.parents == tuple(
        _milestone_parents(g, num, inside | {newcomer}, t_prime.parents, hi)
    )
    return moves, t_next


def walk_from_canonical(
    g: Graph, num: STNumbering, t_prime: RootedSpanningTree
) -> WalkSequence:
    """Walk from the canonical tree for ``num`` to ``t_prime`` in at most n(n-1) moves."""
    root = num.order[0]
    if t_prime.root != root:
        raise ValueError(f"target is rooted at {t_prime.root}, numbering starts at {root}")
    start = canonical_tree(g, num)
    if t_prime == start:
        return WalkSequence((start,), ())
    n = g.n
    ext = _extreme_neighbors(g, num)
    members = {root}
    trees = [start]
    all_moves: list[LeafMove] = []
    current = start
    parents = list(start.parents)
    for _ in range(n - 1):
        boundary = select_boundary_edge(t_prime, members, num)
        moves, current = gap_sequence(
            current, members, t_prime, num, g, boundary=boundary, ext=ext
        )
        for mv in moves:
            parents[mv.vertex] = mv.new_parent
            trees.append(_tree_unchecked(root, tuple(parents)))
        all_moves.extend(moves)
        members.add(boundary[1])
    assert trees[-1] == current == t_prime
    assert len(all_moves) <= n * (n - 1)
    return WalkSequence(tuple(trees), tuple(all_moves))


def walk(
    g: Graph, a: int, t: RootedSpanningTree, t_prime: RootedSpanningTree
) -> WalkSequence:
    """Walk between two spanning trees rooted at ``a`` via the canonical tree.

    The result starts exactly at ``t``, ends exactly at ``t_prime``, and
    contains at most 2n(n-1)+1 trees.
    """
    if t.root != a or t_prime.root != a:
        raise ValueError(f"both trees must be rooted at {a} (got {t.root}, {t_prime.root})")
    for name, tree in (("source", t), ("target", t_prime)):
        problem = spanning_tree_violation(g, tree)
        if problem is not None:
            raise ValueError(f"{name} tree invalid: {problem}")
    if t == t_prime:
        return WalkSequence((t,), ())
    if not is_biconnected(g):
        raise NotBiconnectedError("walks require a 2-vertex-connected graph")
    mate = min(g.adj[a])
    num = st_numbering(g, a, mate)
    to_t = walk_from_canonical(g, num, t)
    to_target = walk_from_canonical(g, num, t_prime)
    back = to_t.reverse()
    return WalkSequence(
        back.trees + to_target.trees[1:],
        back.moves + to_target.moves,
    )


@dataclass(frozen=True)
class WalkReport:
    """Outcome of :func:`verify_walk`; ``issues`` is empty exactly when the walk is valid."""

    tree_count: int
    move_count: int
    issues: tuple[str, ...]
    source_matches: bool | None
    target_matches: bool | None

    @property
    def ok(self) -> bool:
        return not self.issues

    def summary(self) -> str:
        lines = [f"trees: {self.tree_count}", f"moves: {self.move_count}"]
        if self.source_matches is not None:
            lines.append(f"source endpoint: {'ok' if self.source_matches else 'MISMATCH'}")
        if self.target_matches is not None:
            lines.append(f"target endpoint: {'ok' if self.target_matches else 'MISMATCH'}")
        lines.extend(self.issues)
        lines.append("result: PASS" if self.ok else "result: FAIL")
        return "\n".join(lines)


def _edge_codes(parents: tuple[int, ...], n: int) -> set[int]:
    """Undirected tree edges packed as small*n+large, for cheap set algebra."""
    return {
        (v * n + p) if v < p else (p * n + v) for v, p in enumerate(parents) if p >= 0
    }


def verify_walk(
    g: Graph,
    a: int,
    seq: WalkSequence,
    source: RootedSpanningTree | None = None,
    target: RootedSpanningTree | None = None,
) -> WalkReport:
    """Independently check a walk: tree validity, both adjacency tests per step,
    move consistency, and (when given) the declared endpoints.

    Tree validity is certified incrementally.  The first tree gets a full
    check; each later tree inherits validity when the step into it rehangs a
    single childless vertex along a graph edge, which cannot break acyclicity
    or coverage.  Any irregular step triggers a full re-check of the tree it
    leads to, so corrupted sequences are still diagnosed tree by tree.  The
    edge-intersection adjacency test maintains the running edge set across
    certified steps; against uncertified trees it falls back to the
    general-purpose checker on freshly built sets.
    """
    issues: list[str] = []
    trees: Sequence[RootedSpanningTree] = seq.trees
    if not trees:
        return WalkReport(0, len(seq.moves), ("empty sequence",), None, None)
    moves = seq.moves
    if len(moves) != len(trees) - 1:
        issues.append(f"move count {len(moves)} does not match {len(trees)} trees")
    n = g.n

    def full_check(idx: int, tree: RootedSpanningTree) -> bool:
        if tree.root != a:
            issues.append(f"tree {idx}: rooted at {tree.root}, expected {a}")
            return False
        problem = spanning_tree_violation(g, tree)
        if problem is not None:
            issues.append(f"tree {idx}: {problem}")
            return False
        return True

    prev = trees[0]
    certified = full_check(0, prev)
    prev_codes = _edge_codes(prev.parents, n) if certified else None
    for idx in range(len(trees) - 1):
        t_b = trees[idx + 1]
        pa, pb = prev.parents, t_b.parents
        same_shape = len(pa) == len(pb) and prev.root == a and t_b.root == a
        # Locate where the parent maps differ; v stays -1 for identical maps.
        # The declared move names a candidate position; a slice comparison
        # proves (never assumes) that it is the only difference.
        v = -1
        single = same_shape
        if same_shape and pa != pb:
            hint = moves[idx].vertex if idx < len(moves) else -1
            if (
                0 <= hint < len(pa)
                and pa[hint] != pb[hint]
                and pa[:hint] == pb[:hint]
                and pa[hint + 1 :] == pb[hint + 1 :]
            ):
                v = hint
            else:
                for w in range(len(pa)):
                    if pa[w] != pb[w]:
                        if v >= 0:
                            single = False
                            break
                        v = w
        # Leaf-move adjacency: equal maps, or one rehung vertex childless in both.
        move_ok = single and (v < 0 or (v not in pa and v not in pb))
        step_cert = (
            certified and move_ok and len(pb) == n and (v < 0 or g.has_edge(v, pb[v]))
        )
        if step_cert:
            # Certified trees have exactly the packed edges in prev_codes, so
            # the intersection size follows from two membership facts instead
            # of a rebuilt set: the rehang drops code c_old and gains c_new.
            if v < 0:
                adjacent = len(prev_codes) == n - 1
            else:
                c_old = (v * n + pa[v]) if v < pa[v] else (pa[v] * n + v)
                c_new = (v * n + pb[v]) if v < pb[v] else (pb[v] * n + v)
                shared = len(prev_codes) - 1 + (c_new in prev_codes)
                if shared == n - 1:
                    adjacent = True
                elif shared == n - 2:
                    # One tree edge was swapped out; the shared edges leave the
                    # walked-away side of that edge as a lone vertex exactly when
                    # its child endpoint had no children.
                    u, p = divmod(c_old, n)
                    x = u if pa[u] == p else p
                    adjacent = x not in pa
                else:
                    adjacent = False
                prev_codes.discard(c_old)
                prev_codes.add(c_new)
        else:
            try:
                adjacent = trees_adjacent(prev, t_b, a)
            except ValueError as exc:
                issues.append(f"step {idx}: {exc}")
                adjacent = None
            certified = full_check(idx + 1, t_b)
            prev_codes = _edge_codes(pb, n) if certified else None
        if adjacent is False:
            issues.append(f"step {idx}: not adjacent (intersection test)")
        if not move_ok:
            issues.append(f"step {idx}: not adjacent (leaf-move test)")
        if idx < len(moves) and same_shape:
            mv = moves[idx]
            if not 0 <= mv.vertex < len(pa):
                issues.append(f"step {idx}: move vertex {mv.vertex} out of range")
            else:
                if pa[mv.vertex] != mv.old_parent:
                    issues.append(f"step {idx}: move old parent disagrees with tree")
                applied = single and (
                    (v < 0 and mv.new_parent == pa[mv.vertex])
                    or (v == mv.vertex and mv.new_parent == pb[v])
                )
                if not applied:
                    issues.append(f"step {idx}: applying the move does not give the next tree")
        prev = t_b
    source_matches = None if source is None else trees[0] == source
    target_matches = None if target is None else trees[-1] == target
    if source_matches is False:
        issues.append("endpoint mismatch: first tree differs from declared source")
    if target_matches is False:
        issues.append("endpoint mismatch: last tree differs from declared target")
    return WalkReport(len(trees), len(seq.moves), tuple(issues), source_matches, target_matches)


def format_walk_moves(seq: WalkSequence) -> str:
    """Stream form of a walk: the initial tree, then one ``v old new`` line per move."""
    from .graph import format_tree

    parts = [format_tree(seq.trees[0])]
    parts.extend(f"{m.vertex} {m.old_parent} {m.new_parent}\n" for m in seq.moves)
    return "".join(parts)


def parse_walk_moves(text: str) -> WalkSequence:
    """Parse the stream form back into a sequence of trees.

    Moves are applied structurally; semantic problems (bad adjacency, stale
    old-parent fields) are left for :func:`verify_walk` to report.
    """
    from .graph import GraphFormatError, RootedSpanningTree as _Tree, _data_lines, _parse_ints

    lines = _data_lines(text)
    if not lines:
        raise GraphFormatError("empty walk description")
    lineno, header = lines[0]
    n, root = _parse_ints(lineno, header, 2)
    if n < 2 or not 0 <= root < n:
        raise GraphFormatError(f"line {lineno}: bad header {header!r}")
    if len(lines) - 1 < n - 1:
        raise GraphFormatError(f"expected {n - 1} parent lines, found {len(lines) - 1}")
    parents = [-1] * n
    seen: set[int] = set()
    for lineno, line in lines[1 : n]:
        child, parent = _parse_ints(lineno, line, 2)
        if child == root or not (0 <= child < n and 0 <= parent < n) or child == parent:
            raise GraphFormatError(f"line {lineno}: bad parent entry {line!r}")
        if child in seen:
            raise GraphFormatError(f"line {lineno}: duplicate parent entry for vertex {child}")
        seen.add(child)
        parents[child] = parent
    trees = [_Tree(root, tuple(parents))]
    moves: list[LeafMove] = []
    for lineno, line in lines[n:]:
        v, old, new = _parse_ints(lineno, line, 3)
        if v == root:
            raise GraphFormatError(f"line {lineno}: move targets the root vertex {v}")
        if not (0 <= v < n and 0 <= old < n and 0 <= new < n):
            raise GraphFormatError(f"line {lineno}: vertex out of range in {line!r}")
        try:
            mv = LeafMove(v, old, new)
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from None
        parents[v] = new
        moves.append(mv)
        trees.append(_Tree(root, tuple(parents)))
    return WalkSequence(tuple(trees), tuple(moves))
