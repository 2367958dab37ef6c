"""Degree-condition hypothesis checkers, the extremal K_n - E(K_t) family, and
seeded experiments around the degree threshold ``bn / (a + b)``.

Every threshold is compared in cross-multiplied integer form.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, NamedTuple

from .criteria import (
    check_ab,
    eta_niessen,
    has_all_parity_factors_exhaustive,
    niessen_check,
)
from .factor import DegreeSpec, find_f_factor
from .graph import Graph, clique_minus_construction, is_connected, random_graph


@dataclass(frozen=True)
class Condition:
    name: str
    holds: bool
    detail: str


@dataclass(frozen=True)
class HypothesisReport:
    theorem: str
    conditions: tuple[Condition, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.conditions)

    @property
    def failed(self) -> list[str]:
        return [c.name for c in self.conditions if not c.holds]

    def verdicts(self) -> dict[str, bool]:
        return {c.name: c.holds for c in self.conditions}

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "all_hold": self.all_hold,
            "failed": self.failed,
            "conditions": [
                {"name": c.name, "holds": c.holds, "detail": c.detail} for c in self.conditions
            ],
        }


def _min_nonadjacent_max_degree(g: Graph) -> tuple[int, tuple[int, int]] | None:
    """Smallest ``max(d(u), d(v))`` over nonadjacent pairs, with a pair attaining it."""
    deg = g.degrees()
    order = sorted(g.vertices(), key=lambda v: (deg[v], v))
    # scanning by ascending degree, the first vertex with a nonadjacent
    # predecessor gives the minimum
    for i, v in enumerate(order):
        nb = g.adj[v]
        for u in order[:i]:
            if u not in nb:
                return deg[v], (min(u, v), max(u, v))
    return None


def _pair_condition(g: Graph, numerator: int, denominator: int, name: str) -> Condition:
    # max(d(u), d(v)) * denominator >= numerator for every nonadjacent pair
    found = _min_nonadjacent_max_degree(g)
    if found is None:
        return Condition(name, True, "no nonadjacent pairs")
    d, (u, v) = found
    lhs = d * denominator
    rel = ">=" if lhs >= numerator else "<"
    return Condition(
        name,
        lhs >= numerator,
        f"min over nonadjacent pairs of max degree is {d} (pair {u},{v}): "
        f"{d}*{denominator}={lhs} {rel} {numerator}",
    )


def check_theorem14_hypotheses(g: Graph, a: int, b: int) -> HypothesisReport:
    """Hypotheses of the sufficient condition for all (a, b)-parity factors:
    ``a = b (mod 2)``, ``a < b``, ``na`` even, ``n >= 3(b+1)(a+b)``, connected,
    ``delta * a >= b^2 - b`` and ``max(d(u), d(v)) * (a+b) >= bn`` for every
    nonadjacent pair."""
    if a < 1:
        raise ValueError(f"a must be a positive integer, got {a}")
    n = g.n
    n_min = 3 * (b + 1) * (a + b)
    delta = g.min_degree()
    conds = [
        Condition("a_equiv_b_mod_2", (b - a) % 2 == 0, f"a={a}, b={b}"),
        Condition("a_less_than_b", a < b, f"a={a}, b={b}"),
        Condition("na_even", n * a % 2 == 0, f"n*a={n * a}"),
        Condition(
            "n_bound", n >= n_min, f"n={n} {'>=' if n >= n_min else '<'} 3(b+1)(a+b)={n_min}"
        ),
        Condition("connected", is_connected(g), f"n={n}"),
        Condition(
            "min_degree",
            delta * a >= b * b - b,
            f"delta*a={delta * a} {'>=' if delta * a >= b * b - b else '<'} b^2-b={b * b - b}",
        ),
        _pair_condition(g, b * n, a + b, "nonadjacent_max_degree"),
    ]
    return HypothesisReport("all_ab_parity_factors", tuple(conds))


def check_nishimura_hypotheses(g: Graph, k: int) -> HypothesisReport:
    """Hypotheses of the k-factor degree condition: ``k >= 3``, connected,
    ``n >= 4k - 3``, ``kn`` even, ``delta >= k`` and ``max(d(u), d(v)) >= n/2``
    for every nonadjacent pair."""
    n = g.n
    delta = g.min_degree()
    conds = [
        Condition("k_at_least_3", k >= 3, f"k={k}"),
        Condition("connected", is_connected(g), f"n={n}"),
        Condition("n_bound", n >= 4 * k - 3, f"n={n}, 4k-3={4 * k - 3}"),
        Condition("kn_even", k * n % 2 == 0, f"k*n={k * n}"),
        Condition("min_degree", delta >= k, f"delta={delta}, k={k}"),
        _pair_condition(g, n, 2, "nonadjacent_max_degree"),
    ]
    return HypothesisReport("k_factor", tuple(conds))


class RemarkInstance(NamedTuple):
    graph: Graph
    S: list[int]
    T: list[int]
    s: int
    t: int
    eta: int


def extremal_remark(n: int, a: int, b: int) -> RemarkInstance:
    """``K_n - E(K_t)`` with ``s = floor((bn - 1)/(a + b))`` clique vertices.

    Every nonadjacent pair has degree ``s < bn/(a+b)``, and the canonical split
    has ``eta = as - bt < 0``, so the graph lacks some (a, b)-parity factor.
    """
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")
    check_ab(a, b)
    s = (b * n - 1) // (a + b)
    t = n - s
    graph, S, T = clique_minus_construction(n, t)
    eta = a * s - b * t
    evaluated = eta_niessen(graph, S, T, DegreeSpec.constant(n, a, b))
    if evaluated != eta:
        raise AssertionError(f"closed form eta={eta} disagrees with evaluator eta={evaluated}")
    return RemarkInstance(graph, S, T, s, t, eta)


@dataclass
class ExperimentReport:
    kind: str
    seed: int
    trials: int
    params: dict[str, Any]
    failures: list[dict[str, Any]] = field(default_factory=list)
    rows: list[dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "seed": self.seed,
            "trials": self.trials,
            "params": self.params,
            "failures": self.failures,
        }
        if self.kind == "frontier":
            out["rows"] = self.rows
        return out


def _h_fails(args: tuple[Graph, tuple[int, ...]]) -> bool:
    g, h = args
    return find_f_factor(g, h) is None


def sample_h_and_verify(
    g: Graph,
    a: int,
    b: int,
    trials: int,
    seed: int,
    stratified: bool = True,
    instance: dict[str, Any] | None = None,
    workers: int = 1,
) -> ExperimentReport:
    """Look for an h-factor for ``trials`` random ``h`` (each ``h(v)`` uniform over
    ``{a, a+2, ..., b}``), plus ``h = a`` and ``h = b`` when ``stratified``."""
    check_ab(a, b)
    if b * g.n % 2:
        raise ValueError(f"b*n must be even for (a, b)-parity factors; b={b}, n={g.n}")
    rng = random.Random(seed)
    values = list(range(a, b + 1, 2))
    labelled: list[tuple[str | int, tuple[int, ...]]] = []
    if stratified:
        labelled.append(("all_a", (a,) * g.n))
        labelled.append(("all_b", (b,) * g.n))
    for i in range(trials):
        labelled.append((i, tuple(rng.choice(values) for _ in range(g.n))))
    jobs = [(g, h) for _, h in labelled]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(_h_fails, jobs, chunksize=4))
    else:
        verdicts = [_h_fails(job) for job in jobs]
    failures = [
        {"trial": label, "h": list(h)} for (label, h), bad in zip(labelled, verdicts) if bad
    ]
    params = {
        "a": a,
        "b": b,
        "instance": instance or {"construction": "input", "n": g.n, "m": g.m},
        "stratified": stratified,
        "checked": len(labelled),
    }
    return ExperimentReport("sample", seed, trials, params, failures)


FRONTIER_FAMILIES = ("remark", "remark-shift", "random")
_RANDOM_DENSITIES = (Fraction(1, 2), Fraction(2, 3), Fraction(3, 4), Fraction(5, 6))


def _decide_all_parity(
    g: Graph, a: int, b: int, trials: int, seed: int
) -> tuple[str, bool, Any]:
    """(method, conclusion, evidence) for "g has all (a, b)-parity factors"."""
    if b * g.n % 2:
        # every h has odd total, so no h-factor exists at all
        return "parity", False, {"reason": "b*n odd"}
    if g.n <= 8:
        ok, h = has_all_parity_factors_exhaustive(g, a, b)
        return "exhaustive_h", ok, None if ok else {"h": list(h)}
    if g.n <= 14:
        rep = niessen_check(g, DegreeSpec.constant(g.n, a, b))
        return "niessen_scan", rep.satisfied, rep.to_json()["witness"]
    rep = sample_h_and_verify(g, a, b, trials, seed)
    return "sampled", rep.ok, rep.failures[0] if rep.failures else None


def frontier_search(
    a: int,
    b: int,
    n_range: range,
    family: str = "remark",
    trials: int = 5,
    seed: int = 0,
    shift: int = 1,
) -> ExperimentReport:
    """Tabulate, per ``n``, hypotheses against the all-(a, b)-parity-factor
    conclusion on one instance family.

    Instances here are mostly below the ``n`` bound, so verdicts are
    exploratory: a failing row says nothing against the sufficient condition.
    """
    check_ab(a, b)
    if family not in FRONTIER_FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {FRONTIER_FAMILIES}")
    rng = random.Random(seed)
    report = ExperimentReport(
        "frontier",
        seed,
        trials,
        {"a": a, "b": b, "n_min": n_range.start, "n_max": n_range.stop - 1,
         "family": family, "shift": shift},
    )
    for n in n_range:
        for desc, g in _family_instances(family, n, a, b, trials, shift, rng):
            sub_seed = rng.getrandbits(63)
            method, conclusion, evidence = _decide_all_parity(g, a, b, trials, sub_seed)
            hyp = check_theorem14_hypotheses(g, a, b)
            degree_conditions = hyp.verdicts()
            row = {
                "n": n,
                "instance": desc,
                "method": method,
                "conclusion": conclusion,
                "evidence": evidence,
                "hypotheses": degree_conditions,
                "degree_conditions_hold": degree_conditions["min_degree"]
                and degree_conditions["nonadjacent_max_degree"],
                "all_hypotheses_hold": hyp.all_hold,
                "label": "exploration",
            }
            if method == "sampled":
                row["sample_seed"] = sub_seed
            report.rows.append(row)
            if not conclusion:
                report.failures.append({"instance": desc, "evidence": evidence})
    return report


def _family_instances(family, n, a, b, trials, shift, rng):
    s = (b * n - 1) // (a + b)
    if family == "remark":
        yield {"construction": "remark", "n": n, "a": a, "b": b}, extremal_remark(n, a, b).graph
    elif family == "remark-shift":
        s2 = s + shift
        if 0 <= s2 <= n:
            g = clique_minus_construction(n, n - s2)[0]
            yield {"construction": "clique-minus", "n": n, "t": n - s2, "s": s2}, g
    else:
        kept = 0
        for _ in range(20 * trials):
            if kept == trials:
                break
            p = rng.choice(_RANDOM_DENSITIES)
            gseed = rng.getrandbits(63)
            g = random_graph(n, p, gseed)
            verdicts = check_theorem14_hypotheses(g, a, b).verdicts()
            if verdicts["min_degree"] and verdicts["nonadjacent_max_degree"]:
                kept += 1
                yield {"construction": "random", "n": n, "p": str(p), "seed": gseed}, g
