"""Degree-constrained factors: f-factors and (g, f)-parity factors.

An f-factor is found through Tutte's gadget: every edge ``uv`` becomes a
linked pair of aux vertices ``e(u) - e(v)``, and every vertex ``v`` receives
``d(v) - f(v)`` core vertices adjacent to all its ``e(v)``. Perfect matchings
of the aux graph are exactly the f-factors: the cores absorb ``d(v) - f(v)``
of the ``e(v)``, so the remaining ``f(v)`` must be matched along their links,
and an edge belongs to the factor iff its link is matched.

Parity intervals ``g(v) <= d(v) <= f(v)`` reduce to exact targets by hanging
``(f(v) - g(v)) / 2`` triangles off ``v``; each triangle contributes 0 or 2.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .graph import Edge, Graph
from .errors import SizeGuardError
from .matching import maximum_matching


@dataclass(frozen=True)
class DegreeSpec:
    """Per-vertex bounds ``lower(v) <= d_F(v) <= upper(v)`` with ``d_F(v) = upper(v)`` mod 2."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lower", tuple(self.lower))
        object.__setattr__(self, "upper", tuple(self.upper))
        if len(self.lower) != len(self.upper):
            raise ValueError("lower and upper bounds differ in length")
        for v, (lo, hi) in enumerate(zip(self.lower, self.upper)):
            if lo < 0 or lo > hi:
                raise ValueError(f"vertex {v}: need 0 <= lower <= upper, got ({lo}, {hi})")
            if (hi - lo) % 2:
                raise ValueError(f"vertex {v}: lower {lo} and upper {hi} differ in parity")

    @classmethod
    def exact(cls, values: Sequence[int]) -> DegreeSpec:
        return cls(tuple(values), tuple(values))

    @classmethod
    def constant(cls, n: int, lower: int, upper: int | None = None) -> DegreeSpec:
        upper = lower if upper is None else upper
        return cls((lower,) * n, (upper,) * n)

    @property
    def n(self) -> int:
        return len(self.upper)

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    def check_size(self, g: Graph) -> None:
        if self.n != g.n:
            raise ValueError(f"degree spec has {self.n} entries, graph has {g.n} vertices")


def as_spec(f: DegreeSpec | Sequence[int]) -> DegreeSpec:
    return f if isinstance(f, DegreeSpec) else DegreeSpec.exact(f)


@dataclass(frozen=True)
class FactorSubgraph:
    n: int
    edges: tuple[Edge, ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> FactorSubgraph:
        return cls(n, tuple(sorted((u, v) if u < v else (v, u) for u, v in edges)))

    @property
    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def to_json(self) -> dict:
        return factor_json(self)


def factor_json(factor: FactorSubgraph | None) -> dict:
    if factor is None:
        return {"exists": False, "edges": [], "degrees": []}
    return {
        "exists": True,
        "edges": [list(e) for e in factor.edges],
        "degrees": factor.degrees,
    }


@dataclass
class FactorValidation:
    ok: bool
    # vertex -> human-readable reason
    bad_vertices: dict[int, str] = field(default_factory=dict)
    foreign_edges: list[Edge] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def validate_factor(
    g: Graph, spec: DegreeSpec | Sequence[int], factor: FactorSubgraph
) -> FactorValidation:
    spec = as_spec(spec)
    spec.check_size(g)
    foreign = [e for e in factor.edges if not g.has_edge(*e)]
    if len(set(factor.edges)) != len(factor.edges):
        foreign.extend(e for e in set(factor.edges) if factor.edges.count(e) > 1)
    bad = {}
    for v, d in enumerate(factor.degrees):
        lo, hi = spec.lower[v], spec.upper[v]
        if d < lo:
            bad[v] = f"degree {d} below lower bound {lo}"
        elif d > hi:
            bad[v] = f"degree {d} above upper bound {hi}"
        elif (d - hi) % 2:
            bad[v] = f"degree {d} has wrong parity (upper bound {hi})"
    return FactorValidation(not bad and not foreign, bad, foreign)


# --- f-factor gadget --------------------------------------------------------


@dataclass(frozen=True)
class Infeasible:
    """Marker: some vertex asks for more factor edges than it has."""

    vertices: tuple[int, ...]

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class GadgetGraph:
    """Aux graph of the f-factor reduction.

    Original edge ``i = (u, v)`` (``u < v``, in ``g.edges`` order) owns aux
    vertices ``2i = e(u)`` and ``2i + 1 = e(v)``; core vertices follow from
    ``2m`` on, ``core[v]`` listing those of ``v``.
    """

    original: Graph
    aux: Graph
    core: tuple[tuple[int, ...], ...]

    def link(self, i: int) -> Edge:
        return (2 * i, 2 * i + 1)

    def origin(self, aux_edge: Edge) -> Edge | None:
        """Original edge a link stands for, or None for internal (core) edges."""
        x, y = sorted(aux_edge)
        if y < 2 * self.original.m and x % 2 == 0 and y == x + 1:
            return self.original.edges[x // 2]
        return None

    def lift(self, matching_edges) -> FactorSubgraph:
        """Edges of ``original`` whose link is matched."""
        edges = self.original.edges
        picked = [edges[x // 2] for x, y in matching_edges if y == x + 1 and x % 2 == 0
                  and y < 2 * len(edges)]
        return FactorSubgraph.from_edges(self.original.n, picked)


def build_f_factor_gadget(g: Graph, f: DegreeSpec | Sequence[int]) -> GadgetGraph | Infeasible:
    spec = as_spec(f)
    spec.check_size(g)
    if not spec.is_exact:
        raise ValueError("f-factor gadget needs an exact degree spec")
    target = spec.upper
    over = tuple(v for v in g.vertices() if target[v] > g.degree(v))
    if over:
        return Infeasible(over)
    m = g.m
    ends: list[list[int]] = [[] for _ in range(g.n)]
    aux_edges = []
    for i, (u, v) in enumerate(g.edges):
        ends[u].append(2 * i)
        ends[v].append(2 * i + 1)
        aux_edges.append((2 * i, 2 * i + 1))
    nxt = 2 * m
    core = []
    for v in g.vertices():
        mine = tuple(range(nxt, nxt + g.degree(v) - target[v]))
        nxt += len(mine)
        core.append(mine)
        aux_edges.extend((x, c) for c in mine for x in ends[v])
    aux_edges.sort()
    return GadgetGraph(g, Graph._trusted(nxt, aux_edges), tuple(core))


def _greedy_partial_factor(g: Graph, target: Sequence[int]) -> list[Edge]:
    # Most constrained vertices first; each takes partners with the most
    # residual demand. Degrees never exceed target.
    residual = list(target)
    chosen = set()
    for v in sorted(g.vertices(), key=lambda x: (g.degree(x) - target[x], x)):
        while residual[v] > 0:
            best = -1
            for w in g.adj[v]:
                if residual[w] > 0 and (min(v, w), max(v, w)) not in chosen:
                    if best == -1 or residual[w] > residual[best]:
                        best = w
            if best == -1:
                break
            chosen.add((min(v, best), max(v, best)))
            residual[v] -= 1
            residual[best] -= 1
    return sorted(chosen)


def _warm_start(gadget: GadgetGraph, partial: list[Edge]) -> list[Edge]:
    g = gadget.original
    index = {e: i for i, e in enumerate(g.edges)}
    in_partial = [False] * g.m
    start = []
    for e in partial:
        i = index[e]
        in_partial[i] = True
        start.append(gadget.link(i))
    free_ends: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        if not in_partial[i]:
            free_ends[u].append(2 * i)
            free_ends[v].append(2 * i + 1)
    for v in g.vertices():
        # d(v) - d_partial(v) >= d(v) - f(v) = number of cores
        start.extend(zip(free_ends[v], gadget.core[v]))
    return start


def find_f_factor(
    g: Graph, f: DegreeSpec | Sequence[int], warm_start: bool = True
) -> FactorSubgraph | None:
    """An f-factor of ``g`` (``d_F(v) = f(v)`` for all ``v``), or None if none exists."""
    spec = as_spec(f)
    spec.check_size(g)
    if not spec.is_exact:
        raise ValueError("find_f_factor needs an exact degree spec")
    if sum(spec.upper) % 2:
        return None
    gadget = build_f_factor_gadget(g, spec)
    if isinstance(gadget, Infeasible):
        return None
    initial = _warm_start(gadget, _greedy_partial_factor(g, spec.upper)) if warm_start else None
    matching = maximum_matching(gadget.aux, initial)
    if not matching.is_perfect():
        return None
    factor = gadget.lift(matching.edges)
    check = validate_factor(g, spec, factor)
    if not check:
        raise AssertionError(f"gadget produced an invalid factor: {check}")
    return factor


# --- parity gadget ----------------------------------------------------------


@dataclass(frozen=True)
class ParityGadget:
    """``g`` with slack triangles attached; original vertices keep their indices.

    ``triangles`` lists ``(v, x, y)`` for every pair ``x, y`` hung off ``v``.
    """

    graph: Graph
    spec: DegreeSpec
    n_original: int
    triangles: tuple[tuple[int, int, int], ...]

    def restrict(self, factor: FactorSubgraph) -> FactorSubgraph:
        n = self.n_original
        return FactorSubgraph(n, tuple(e for e in factor.edges if e[1] < n))


def build_parity_gadget(g: Graph, spec: DegreeSpec) -> ParityGadget:
    spec.check_size(g)
    edges = list(g.edges)
    target = list(spec.upper)
    triangles = []
    nxt = g.n
    for v in g.vertices():
        for _ in range((spec.upper[v] - spec.lower[v]) // 2):
            x, y = nxt, nxt + 1
            nxt += 2
            edges.extend([(v, x), (v, y), (x, y)])
            target.extend([1, 1])
            triangles.append((v, x, y))
    graph = g if not triangles else Graph.from_edges(nxt, edges)
    return ParityGadget(graph, DegreeSpec.exact(target), g.n, tuple(triangles))


def find_parity_factor(g: Graph, spec: DegreeSpec) -> FactorSubgraph | None:
    """A (g, f)-parity factor: ``lower(v) <= d_F(v) <= upper(v)``, ``d_F(v) = upper(v)`` mod 2."""
    spec.check_size(g)
    gadget = build_parity_gadget(g, spec)
    exact = find_f_factor(gadget.graph, gadget.spec)
    if exact is None:
        return None
    factor = gadget.restrict(exact)
    check = validate_factor(g, spec, factor)
    if not check:
        raise AssertionError(f"parity gadget produced an invalid factor: {check}")
    return factor


# --- brute-force oracle -----------------------------------------------------

BRUTE_FORCE_MAX_EDGES = 22


def brute_force_factor(
    g: Graph, spec: DegreeSpec | Sequence[int], max_edges: int = BRUTE_FORCE_MAX_EDGES
) -> FactorSubgraph | None:
    """Lexicographically first edge subset satisfying ``spec``, by exhaustive search.

    Subsets are sorted tuples of ``g.edges`` compared lexicographically and
    visited in that order (depth-first, a subset before its extensions).
    Subtrees are cut only when no extension can satisfy the bounds, which
    leaves the first solution unchanged.
    """
    spec = as_spec(spec)
    spec.check_size(g)
    if g.m > max_edges:
        raise SizeGuardError(f"brute-force factor search limited to {max_edges} edges, got {g.m}")
    edges = g.edges
    lower, upper = spec.lower, spec.upper
    deg = [0] * g.n
    # remaining[k][v]: edges with index >= k incident to v
    remaining = [[0] * g.n for _ in range(len(edges) + 1)]
    for k in range(len(edges) - 1, -1, -1):
        remaining[k] = list(remaining[k + 1])
        u, v = edges[k]
        remaining[k][u] += 1
        remaining[k][v] += 1
    chosen: list[int] = []

    def satisfied() -> bool:
        return all(lower[v] <= deg[v] and (upper[v] - deg[v]) % 2 == 0 for v in range(g.n))

    def search(k: int) -> bool:
        # chosen is the current subset; extensions use edge indices >= k
        if satisfied():
            return True
        rem = remaining[k]
        if any(deg[v] + rem[v] < lower[v] for v in range(g.n)):
            return False
        for j in range(k, len(edges)):
            u, v = edges[j]
            if deg[u] < upper[u] and deg[v] < upper[v]:
                deg[u] += 1
                deg[v] += 1
                chosen.append(j)
                if search(j + 1):
                    return True
                chosen.pop()
                deg[u] -= 1
                deg[v] -= 1
        return False

    if search(0):
        return FactorSubgraph(g.n, tuple(edges[j] for j in chosen))
    return None
