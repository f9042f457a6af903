"""Connected two-part vertex partitions of biconnected graphs.

Given distinct anchors u1, u2 and a size n1, split the vertices into V1 (with
u1, size n1) and V2 (with u2) so that both parts induce connected subgraphs.
A prefix of an st-numbering induces a connected subgraph, and so does a
suffix, which turns the problem into choosing the right numbering.
"""

from __future__ import annotations

import logging

from .connectivity import NotBiconnectedError, is_biconnected, st_numbering
from .graph import Graph

log = logging.getLogger(__name__)


def _induced_connected(g: Graph, part: set[int]) -> bool:
    start = next(iter(part))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w in part and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(part)


def validate_partition2(
    g: Graph, v1: set[int], v2: set[int], u1: int, u2: int, n1: int
) -> str | None:
    """First problem with a claimed partition, or None if it is valid."""
    if v1 & v2:
        return f"parts overlap: {sorted(v1 & v2)}"
    if v1 | v2 != set(range(g.n)):
        return "parts do not cover every vertex"
    if len(v1) != n1:
        return f"first part has {len(v1)} vertices, expected {n1}"
    if u1 not in v1:
        return f"anchor {u1} missing from first part"
    if u2 not in v2:
        return f"anchor {u2} missing from second part"
    if not _induced_connected(g, v1):
        return "first part is not connected"
    if not _induced_connected(g, v2):
        return "second part is not connected"
    return None


def _partition2_impl(g: Graph, u1: int, u2: int, n1: int) -> tuple[set[int], set[int], str]:
    n = g.n
    if g.has_edge(u1, u2):
        num = st_numbering(g, u1, u2)
        return set(num.order[:n1]), set(num.order[n1:]), "direct-edge"
    num = st_numbering(g, u1, min(g.adj[u1]))
    if num.position(u2) > n1:
        return set(num.order[:n1]), set(num.order[n1:]), "from-first-anchor"
    num = st_numbering(g, u2, min(g.adj[u2]))
    if num.position(u1) > n - n1:
        return set(num.order[n - n1:]), set(num.order[:n - n1]), "from-second-anchor"
    # Always succeeds: number the graph plus a virtual (u1, u2) edge.  The
    # prefix/suffix connectivity argument only uses edges at interior
    # vertices, so the partition is valid in the original graph too.
    log.info("partition2 fallback engaged for u1=%d u2=%d n1=%d", u1, u2, n1)
    augmented = Graph.from_edges(n, sorted(g.edges | {(min(u1, u2), max(u1, u2))}))
    num = st_numbering(augmented, u1, u2)
    return set(num.order[:n1]), set(num.order[n1:]), "virtual-edge"


def partition2(g: Graph, u1: int, u2: int, n1: int) -> tuple[set[int], set[int]]:
    """Connected partition (V1, V2) with u1 in V1, u2 in V2, |V1| = n1."""
    v1, v2, _ = partition2_with_strategy(g, u1, u2, n1)
    return v1, v2


def partition2_with_strategy(
    g: Graph, u1: int, u2: int, n1: int
) -> tuple[set[int], set[int], str]:
    """Same as :func:`partition2` but also reports which strategy produced it."""
    if not is_biconnected(g):
        raise NotBiconnectedError("partition2 requires a 2-vertex-connected graph")
    if u1 == u2:
        raise ValueError("anchors must be distinct")
    if not (0 <= u1 < g.n and 0 <= u2 < g.n):
        raise ValueError("anchor out of range")
    if not 1 <= n1 <= g.n - 1:
        raise ValueError(f"n1 must be in [1, {g.n - 1}], got {n1}")
    v1, v2, strategy = _partition2_impl(g, u1, u2, n1)
    problem = validate_partition2(g, v1, v2, u1, u2, n1)
    if problem is not None:
        raise RuntimeError(f"internal error: produced partition invalid ({problem})")
    return v1, v2, strategy
