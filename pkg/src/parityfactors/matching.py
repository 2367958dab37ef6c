"""Maximum cardinality matching in general graphs.

:func:`maximum_matching` is Edmonds' blossom algorithm: repeated augmenting
path searches, one alternating tree at a time, with odd cycles shrunk by
relabelling their vertices to a common base. Each search is O(V + E) plus the
blossom relabelling, O(V^3) overall.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import SizeGuardError
from .graph import Edge, Graph


@dataclass(frozen=True)
class Matching:
    n: int
    edges: tuple[Edge, ...]

    @classmethod
    def from_mate(cls, mate: list[int]) -> Matching:
        return cls(len(mate), tuple((v, w) for v, w in enumerate(mate) if v < w))

    @property
    def size(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def mate(self) -> list[int]:
        """Partner of each vertex, ``-1`` when exposed."""
        out = [-1] * self.n
        for u, v in self.edges:
            out[u], out[v] = v, u
        return out

    def is_valid_for(self, g: Graph) -> bool:
        seen: set[int] = set()
        for u, v in self.edges:
            if u in seen or v in seen or not g.has_edge(u, v):
                return False
            seen.update((u, v))
        return True

    def is_perfect(self) -> bool:
        return 2 * len(self.edges) == self.n


def maximum_matching(g: Graph, initial: Iterable[Edge] | None = None) -> Matching:
    """Maximum cardinality matching of ``g``.

    ``initial`` may supply a valid starting matching (a warm start); otherwise
    a greedy one is built scanning vertices in ascending order. Exposed
    vertices are then processed in ascending order, so results are
    reproducible.
    """
    n = g.n
    adj = g.adj
    mate = [-1] * n
    if initial is None:
        for v in range(n):
            if mate[v] == -1:
                for w in adj[v]:
                    if mate[w] == -1:
                        mate[v], mate[w] = w, v
                        break
    else:
        for u, v in initial:
            if mate[u] != -1 or mate[v] != -1 or not g.has_edge(u, v):
                raise ValueError(f"initial edge ({u}, {v}) is not a valid matching edge")
            mate[u], mate[v] = v, u

    for root in range(n):
        if mate[root] == -1:
            _augment_from(root, adj, mate)
    return Matching.from_mate(mate)


def _augment_from(root: int, adj: tuple[tuple[int, ...], ...], mate: list[int]) -> bool:
    """Grow one alternating tree from exposed ``root``; augment ``mate`` in place
    and return True when an augmenting path is found."""
    # parent[w]: tree predecessor of w (set for odd vertices, and for even
    # vertices inside shrunk blossoms). base[x]: base of x's outermost blossom,
    # kept only for tree vertices; members[b] lists the vertices with base b.
    parent: dict[int, int] = {}
    base = {root: root}
    members = {root: [root]}
    even = {root}
    queue = [root]
    head = 0

    def lca(a: int, b: int) -> int:
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if a == root:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: set[int]) -> None:
        while base[v] != b:
            blossom.add(base[v])
            blossom.add(base[mate[v]])
            parent[v] = child
            child = mate[v]
            v = parent[child]

    while head < len(queue):
        v = queue[head]
        head += 1
        for w in adj[v]:
            if mate[v] == w or base[v] == base.get(w, w):
                continue
            if w in even:
                b = lca(v, w)
                blossom: set[int] = set()
                mark_path(v, b, w, blossom)
                mark_path(w, b, v, blossom)
                blossom.discard(b)
                into = members[b]
                for c in blossom:
                    for x in members.pop(c):
                        base[x] = b
                        into.append(x)
                        if x not in even:
                            even.add(x)
                            queue.append(x)
            elif w not in parent:
                parent[w] = v
                if mate[w] == -1:
                    while w != -1:
                        pv = parent[w]
                        nxt = mate[pv]
                        mate[w], mate[pv] = pv, w
                        w = nxt
                    return True
                x = mate[w]
                base[w], base[x] = w, x
                members[w], members[x] = [w], [x]
                even.add(x)
                queue.append(x)
    return False


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    return maximum_matching(g).is_perfect()


BRUTE_FORCE_MAX_EDGES = 24


def brute_force_maximum_matching(g: Graph, max_edges: int = BRUTE_FORCE_MAX_EDGES) -> Matching:
    """Largest matching found by enumerating every matching of ``g``.

    Branches on the lowest undecided vertex: leave it exposed, or pair it with
    each free higher neighbour. Guarded by ``max_edges``.
    """
    if g.m > max_edges:
        raise SizeGuardError(f"brute-force matching limited to {max_edges} edges, got {g.m}")
    n = g.n
    mate = [-1] * n
    best: list[int] = list(mate)
    best_size = 0

    def search(v: int, size: int) -> None:
        nonlocal best, best_size
        while v < n and mate[v] != -1:
            v += 1
        if v >= n:
            if size > best_size:
                best, best_size = list(mate), size
            return
        # upper bound: every remaining free vertex paired
        free = sum(1 for x in range(v, n) if mate[x] == -1)
        if size + free // 2 <= best_size:
            return
        for w in g.adj[v]:
            if w > v and mate[w] == -1:
                mate[v], mate[w] = w, v
                search(v + 1, size + 1)
                mate[v] = mate[w] = -1
        mate[v] = -2  # exposed for the rest of this branch
        search(v + 1, size)
        mate[v] = -1

    search(0, 0)
    return Matching.from_mate([m if m >= 0 else -1 for m in best])
