"""Deficiency ``eta(S, T)`` and exhaustive checks of the Tutte and Niessen criteria.

For disjoint ``S, T``::

    eta(S, T) = w(S) - f(T) + sum_{x in T} d_{G-S}(x) - q(S, T; f)

where ``w = f`` for Tutte's f-factor theorem and ``w = g`` (the lower bound)
for Niessen's all-(g, f)-parity-factors theorem, and ``q`` counts components
``C`` of ``G - S - T`` with ``f(V(C)) + e_G(V(C), T)`` odd.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations, product

from .errors import SizeGuardError
from .factor import DegreeSpec, as_spec, find_f_factor
from .graph import Graph, connected_components, delete_vertices, edges_between

MAX_SCAN_VERTICES = 14
MAX_H_FUNCTIONS = 1 << 24


def _disjoint(S: Iterable[int], T: Iterable[int]) -> tuple[set[int], set[int]]:
    S, T = set(S), set(T)
    if S & T:
        raise ValueError(f"S and T overlap in {sorted(S & T)}")
    return S, T


def _upper(f: DegreeSpec | Sequence[int]) -> tuple[int, ...]:
    return f.upper if isinstance(f, DegreeSpec) else tuple(f)


def count_odd_components(
    g: Graph, S: Iterable[int], T: Iterable[int], f: DegreeSpec | Sequence[int]
) -> int:
    """Components ``C`` of ``G - S - T`` with ``f(V(C)) + e_G(V(C), T)`` odd."""
    S, T = _disjoint(S, T)
    f = _upper(f)
    rest, index = delete_vertices(g, S | T)
    back = {new: old for old, new in index.items()}
    q = 0
    for part in connected_components(rest):
        comp = [back[x] for x in part]
        if (sum(f[x] for x in comp) + edges_between(g, comp, T)) % 2:
            q += 1
    return q


def _eta(g: Graph, S, T, s_weight: Sequence[int], f: Sequence[int]) -> int:
    S, T = _disjoint(S, T)
    d_rest = sum(1 for x in T for y in g.adj[x] if y not in S)
    return (
        sum(s_weight[x] for x in S)
        - sum(f[x] for x in T)
        + d_rest
        - count_odd_components(g, S, T, f)
    )


def eta_tutte(g: Graph, S: Iterable[int], T: Iterable[int], f: DegreeSpec | Sequence[int]) -> int:
    """``f(S) - f(T) + d_{G-S}(T) - q(S, T; f)`` for an exact target ``f``."""
    f = _upper(f)
    return _eta(g, S, T, f, f)


def eta_niessen(g: Graph, S: Iterable[int], T: Iterable[int], spec: DegreeSpec) -> int:
    """``g(S) - f(T) + d_{G-S}(T) - q(S, T; f)`` with ``g, f`` the lower and upper bounds."""
    return _eta(g, S, T, spec.lower, spec.upper)


@dataclass(frozen=True)
class Witness:
    S: tuple[int, ...]
    T: tuple[int, ...]
    eta: int


@dataclass(frozen=True)
class CriterionReport:
    satisfied: bool
    witness: Witness | None
    pairs_examined: int
    min_eta: int

    def to_json(self) -> dict:
        w = self.witness
        return {
            "satisfied": self.satisfied,
            "witness": None if w is None else {"S": list(w.S), "T": list(w.T), "eta": w.eta},
            "min_eta": self.min_eta,
            "pairs_examined": self.pairs_examined,
        }


def _lex_subsets(pool: Sequence[int], max_size: int) -> Iterator[tuple[int, ...]]:
    # sorted tuples in lexicographic order: a subset precedes its extensions
    def rec(prefix: tuple[int, ...], start: int) -> Iterator[tuple[int, ...]]:
        yield prefix
        if len(prefix) < max_size:
            for i in range(start, len(pool)):
                yield from rec(prefix + (pool[i],), i + 1)

    return rec((), 0)


def disjoint_pairs(n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All ``3**n`` disjoint pairs ``(S, T)``, ordered by ``|S| + |T|``, then ``S``,
    then ``T`` (sorted tuples, lexicographic)."""
    verts = range(n)
    for k in range(n + 1):
        for S in _lex_subsets(verts, k):
            rest = [v for v in verts if v not in S]
            need = k - len(S)
            if need <= len(rest):
                for T in combinations(rest, need):
                    yield S, T


def _scan(
    g: Graph, s_weight: Sequence[int], f: Sequence[int], max_n: int, force: bool
) -> CriterionReport:
    n = g.n
    if n > max_n and not force:
        raise SizeGuardError(
            f"exhaustive (S, T) scan covers 3^n pairs; n={n} exceeds guard {max_n} (use force)"
        )
    adj = g.adjacency_masks()
    full = (1 << n) - 1
    f_odd = sum(1 << v for v in range(n) if f[v] % 2)
    best: Witness | None = None
    examined = 0
    for S, T in disjoint_pairs(n):
        examined += 1
        s_mask = 0
        for x in S:
            s_mask |= 1 << x
        t_mask = 0
        eta = 0
        for x in S:
            eta += s_weight[x]
        for x in T:
            t_mask |= 1 << x
            eta += (adj[x] & ~s_mask).bit_count() - f[x]
        rest = full & ~(s_mask | t_mask)
        while rest:
            low = rest & -rest
            comp, frontier = low, low
            while frontier:
                grown = 0
                while frontier:
                    bit = frontier & -frontier
                    frontier ^= bit
                    grown |= adj[bit.bit_length() - 1]
                frontier = grown & rest & ~comp
                comp |= frontier
            rest &= ~comp
            parity = (comp & f_odd).bit_count()
            c = comp
            while c:
                bit = c & -c
                c ^= bit
                parity += (adj[bit.bit_length() - 1] & t_mask).bit_count()
            if parity % 2:
                eta -= 1
        if best is None or eta < best.eta:
            best = Witness(S, T, eta)
    assert best is not None
    if best.eta >= 0:
        return CriterionReport(True, None, examined, best.eta)
    return CriterionReport(False, best, examined, best.eta)


def tutte_check(
    g: Graph, f: DegreeSpec | Sequence[int], max_n: int = MAX_SCAN_VERTICES, force: bool = False
) -> CriterionReport:
    """Scan every disjoint ``(S, T)`` for ``eta_tutte < 0``.

    The witness is the first pair reaching the minimum in :func:`disjoint_pairs`
    order. Satisfied iff ``g`` has an f-factor.
    """
    spec = as_spec(f)
    spec.check_size(g)
    return _scan(g, spec.upper, spec.upper, max_n, force)


def niessen_check(
    g: Graph, spec: DegreeSpec, max_n: int = MAX_SCAN_VERTICES, force: bool = False
) -> CriterionReport:
    """Scan every disjoint ``(S, T)`` for ``eta_niessen < 0``.

    Satisfied iff ``g`` has an h-factor for every ``h`` with
    ``lower <= h <= upper`` and ``h = upper`` mod 2.
    """
    spec.check_size(g)
    return _scan(g, spec.lower, spec.upper, max_n, force)


def check_ab(a: int, b: int) -> None:
    if a < 1:
        raise ValueError(f"a must be a positive integer, got {a}")
    if a > b:
        raise ValueError(f"need a <= b, got a={a}, b={b}")
    if (b - a) % 2:
        raise ValueError(f"need a = b (mod 2), got a={a}, b={b}")


def enumerate_h_functions(
    n: int, a: int, b: int, max_count: int = MAX_H_FUNCTIONS
) -> Iterator[tuple[int, ...]]:
    """Every ``h: V -> {a, a+2, ..., b}`` once, in lexicographic order."""
    if a > b or (b - a) % 2:
        raise ValueError(f"need a <= b and a = b (mod 2), got a={a}, b={b}")
    count = ((b - a) // 2 + 1) ** n
    if count > max_count:
        raise SizeGuardError(f"{count} h-functions exceed the guard of {max_count}")
    return product(range(a, b + 1, 2), repeat=n)


def has_all_parity_factors_exhaustive(
    g: Graph, a: int, b: int, max_count: int = MAX_H_FUNCTIONS
) -> tuple[bool, tuple[int, ...] | None]:
    """Try an h-factor for every admissible ``h``; return ``(True, None)`` or
    ``(False, first failing h)``."""
    check_ab(a, b)
    if b * g.n % 2:
        raise ValueError(f"b*n must be even for (a, b)-parity factors; b={b}, n={g.n}")
    for h in enumerate_h_functions(g.n, a, b, max_count):
        if find_f_factor(g, h) is None:
            return False, h
    return True, None
