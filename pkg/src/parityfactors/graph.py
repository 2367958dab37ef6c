"""Immutable simple graphs on dense integer vertices, with parsers and generators."""

from __future__ import annotations

import random
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

Edge = tuple[int, int]


class GraphParseError(ValueError):
    """Raised when an edge-list or graph6 text cannot be decoded."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. n-1``.

    ``edges`` holds each edge once as ``(u, v)`` with ``u < v``, sorted.
    ``adj`` holds the sorted neighbour tuple of every vertex.
    Use :meth:`from_edges` to build one; the raw constructor trusts its input.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        normalized: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            normalized.add((u, v) if u < v else (v, u))
        return cls._trusted(n, sorted(normalized))

    @classmethod
    def _trusted(cls, n: int, sorted_edges: list[Edge]) -> Graph:
        # sorted_edges must be normalized (u < v), duplicate-free and sorted
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted_edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return cls(n, tuple(sorted_edges), tuple(tuple(sorted(x)) for x in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        a, b = (u, v) if len(self.adj[u]) <= len(self.adj[v]) else (v, u)
        return b in self.adj[a]

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def adjacency_masks(self) -> list[int]:
        """Neighbourhoods as integer bitmasks (bit ``u`` set when ``u`` is adjacent)."""
        masks = []
        for nb in self.adj:
            m = 0
            for u in nb:
                m |= 1 << u
            masks.append(m)
        return masks

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def edges_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    """Number of edges with one end in ``a`` and the other in ``b`` (disjoint sets)."""
    a, b = set(a), set(b)
    if a & b:
        raise ValueError(f"vertex sets overlap: {sorted(a & b)}")
    if len(a) > len(b):
        a, b = b, a
    return sum(1 for u in a for w in g.adj[u] if w in b)


def delete_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph ``G - X`` and the old-to-new index map of surviving vertices."""
    removed = set(removed)
    keep = [v for v in range(g.n) if v not in removed]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    # relabelling is monotone, so normalized order is preserved
    return Graph._trusted(len(keep), edges), index


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    parts = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        stack, part = [root], [root]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    part.append(w)
        parts.append(sorted(part))
    return parts


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


# --- generators -------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph._trusted(n, [])


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    return Graph._trusted(n, list(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def clique_minus_construction(n: int, t: int) -> tuple[Graph, list[int], list[int]]:
    """``K_n - E(K_t)``: a clique ``S`` on the first ``n - t`` vertices joined
    completely to an independent set ``T`` on the last ``t`` vertices.

    Returns ``(graph, S, T)``.
    """
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= n, got n={n}, t={t}")
    s = n - t
    edges = [(u, v) for u, v in combinations(range(n), 2) if u < s]
    return Graph._trusted(n, edges), list(range(s)), list(range(s, n))


def random_graph(n: int, p: Fraction | float | int | str, seed: int) -> Graph:
    """G(n, p) with pairs scanned in lexicographic order.

    ``p`` is converted to an exact fraction; each pair is kept when a uniform
    draw from ``range(denominator)`` falls below the numerator, so the result
    depends only on ``(n, p, seed)``.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    num, den = p.numerator, p.denominator
    edges = [pair for pair in combinations(range(n), 2) if rng.randrange(den) < num]
    return Graph._trusted(n, edges)


def all_graphs(n: int) -> Iterable[Graph]:
    """Every labelled simple graph on ``n`` vertices (``2 ** C(n, 2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph._trusted(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


# --- text formats -----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the ``"n m"`` header followed by ``m`` lines ``"u v"``.

    Duplicate or reversed pairs collapse to one edge. Blank lines are ignored.
    """
    lines = [(i, ln.split()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, parts) for i, parts in lines if parts]
    if not lines:
        raise GraphParseError("line 1: missing 'n m' header")
    lineno, header = lines[0]
    n, m = _ints(header, lineno, "header 'n m'")
    if n < 0 or m < 0:
        raise GraphParseError(f"line {lineno}: negative count in header")
    body = lines[1:]
    if len(body) != m:
        raise GraphParseError(
            f"line {lineno}: header declares {m} edges but {len(body)} edge lines follow"
        )
    edges = []
    for lineno, parts in body:
        u, v = _ints(parts, lineno, "edge 'u v'")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {lineno}: vertex out of range [0, {n})")
        if u == v:
            raise GraphParseError(f"line {lineno}: loop at vertex {u}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _ints(parts: list[str], lineno: int, what: str) -> tuple[int, int]:
    if len(parts) != 2:
        raise GraphParseError(f"line {lineno}: expected {what}, got {' '.join(parts)!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(f"line {lineno}: non-integer in {' '.join(parts)!r}") from None


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _g6_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph too large for graph6: n={n}")


def to_graph6(g: Graph) -> str:
    """graph6 encoding (no header, no trailing newline)."""
    bits = [0] * (g.n * (g.n - 1) // 2)
    for u, v in g.edges:
        # column-major upper triangle: pair (i, j), i < j, sits at j(j-1)/2 + i
        bits[v * (v - 1) // 2 + u] = 1
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _g6_size(g.n) + body


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line. Strict: bad characters, wrong length or nonzero
    padding bits are rejected."""
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[10:]
    if not data:
        raise GraphParseError("empty graph6 string")
    for pos, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"invalid graph6 character {ch!r} at position {pos}")
    vals = [ord(ch) - 63 for ch in data]
    if vals[0] != 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphParseError("truncated 8-byte graph6 size field")
        n, rest = _join6(vals[2:8]), vals[8:]
    else:
        if len(vals) < 4:
            raise GraphParseError("truncated 4-byte graph6 size field")
        n, rest = _join6(vals[1:4]), vals[4:]
    nbits = n * (n - 1) // 2
    expected = -(-nbits // 6)
    if len(rest) != expected:
        raise GraphParseError(
            f"graph6 body has {len(rest)} characters, expected {expected} for n={n}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if rest[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and rest[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise GraphParseError("nonzero padding bits in graph6 body")
    return Graph.from_edges(n, edges)


def _join6(vals: list[int]) -> int:
    out = 0
    for x in vals:
        out = out << 6 | x
    return out


def parse_graph(text: str, fmt: str = "edges") -> Graph:
    if fmt == "edges":
        return parse_edge_list(text)
    if fmt == "g6":
        return parse_graph6(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def format_graph(g: Graph, fmt: str = "edges") -> str:
    if fmt == "edges":
        return to_edge_list(g)
    if fmt == "g6":
        return to_graph6(g) + "\n"
    raise ValueError(f"unknown graph format {fmt!r}")
