"""Random small instances and brute-force cross-validation of oracles."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List

from .backends import ExplicitGameForm, JordanMap, MbScheme, PositionalStructure, VetoScheme
from .backends.explicit import is_tight
from .backends.jordan import brick_wall
from .core import OutcomeSet, Player, Preference
from .engine import certify_ne, lexsafe_ne
from .oracle import GameOracle, solve_pm1


def random_preference(rng: random.Random, p: int) -> Preference:
    order = list(range(p))
    rng.shuffle(order)
    return Preference(tuple(order))


def random_positional(rng: random.Random, mode: str = "msdggs", max_nonterminal: int = 8,
                      max_outdegree: int = 3, max_terminals: int = 4) -> PositionalStructure:
    """A random digraph game; a random tree from ``v0`` keeps most vertices reachable."""
    n_nt = rng.randint(1, max_nonterminal)
    n_t = rng.randint(0, max_terminals)
    names = [f"v{i}" for i in range(n_nt)] + [f"t{i}" for i in range(n_t)]
    vertices = [(f"v{i}", rng.choice("AB")) for i in range(n_nt)] + [(f"t{i}", "T") for i in range(n_t)]
    degree = [rng.randint(1, min(max_outdegree, len(names))) for _ in range(n_nt)]
    targets = [[] for _ in range(n_nt)]
    for k, name in enumerate(names[1:], start=1):
        parents = [i for i in range(min(k, n_nt)) if len(targets[i]) < degree[i]]
        if parents:
            targets[rng.choice(parents)].append(name)
    arcs = []
    for i in range(n_nt):
        extra = [v for v in names if v not in targets[i]]
        targets[i] += rng.sample(extra, degree[i] - len(targets[i]))
        rng.shuffle(targets[i])
        arcs += [(f"v{i}", v) for v in targets[i]]
    return PositionalStructure(vertices, arcs, "v0", mode)


def random_bargaining(rng: random.Random, max_items: int = 3) -> MbScheme:
    return MbScheme(rng.randint(1, max_items), rng.randint(1, max_items))


def random_veto(rng: random.Random, max_candidates: int = 5, max_resistance: int = 3) -> VetoScheme:
    while True:
        p = rng.randint(1, max_candidates)
        resistance = [rng.randint(1, max_resistance) for _ in range(p)]
        total = sum(resistance)
        if total >= 3:
            mu_a = rng.randint(1, total - 2)
            return VetoScheme(mu_a, total - 1 - mu_a, resistance)


def random_jordan(rng: random.Random, max_areas: int = 6, width: int = 4) -> JordanMap:
    """A random brick-wall map of at most ``max_areas`` areas."""
    while True:
        rows, used = [], 0
        for _ in range(rng.randint(1, 3)):
            banned = set(rows[-1]) if rows else set()
            free = [c for c in range(1, width) if c not in banned]
            cuts = sorted(rng.sample(free, rng.randint(0, min(2, len(free)))))
            rows.append(cuts)
            used += len(cuts) + 1
        if used <= max_areas:
            return brick_wall(rows, width)


def random_explicit(rng: random.Random, max_outcomes: int = 10, max_side: int = 4) -> ExplicitGameForm:
    """A random surjective matrix form."""
    while True:
        r, c = rng.randint(1, max_side), rng.randint(1, max_side)
        p = rng.randint(1, min(max_outcomes, r * c))
        cells = [[rng.randrange(p) for _ in range(c)] for _ in range(r)]
        if len({v for row in cells for v in row}) == p:
            return ExplicitGameForm(cells, p)


def random_tight_explicit(rng: random.Random, max_outcomes: int = 10, max_side: int = 4) -> ExplicitGameForm:
    while True:
        form = random_explicit(rng, max_outcomes, max_side)
        if is_tight(form):
            return form


GENERATORS = {
    "dggs": lambda rng: random_positional(rng, "dggs"),
    "msdggs": lambda rng: random_positional(rng, "msdggs"),
    "bargaining": random_bargaining,
    "veto": random_veto,
    "jordan": random_jordan,
}


@dataclass
class CheckReport:
    partitions: int = 0
    equilibria: int = 0
    max_lexmax_queries: int = 0
    max_complement_queries: int = 0
    problems: List[str] = field(default_factory=list)


def crosscheck(oracle: GameOracle, rng: random.Random, n_preferences: int = 20, limit: int = 8192,
               report: CheckReport = None) -> CheckReport:
    """Compare ``oracle`` against brute force on its expansion.

    Every partition must get the same winner as the explicit solver, with a
    witness whose expanded support lies on the winner's side; every lexsafe
    equilibrium for random preferences must be a Nash equilibrium of the
    expansion and respect the query budgets.
    """
    report = report or CheckReport()
    exp = oracle.expand(limit)
    form = exp.form
    p = oracle.n_outcomes
    for mask in range(1 << p):
        omega_a = OutcomeSet(p, mask)
        got = solve_pm1(oracle, omega_a)
        want = solve_pm1(form, omega_a)
        report.partitions += 1
        if got.winner is not want.winner:
            report.problems.append(f"{oracle.backend}: winner mismatch on {list(omega_a)}")
            continue
        if got.winner is Player.ALICE:
            support = form.row_support(exp.row_index(got.strategy.payload))
            ok = support <= omega_a
        else:
            support = form.col_support(exp.col_index(got.strategy.payload))
            ok = not (support & omega_a)
        if not ok:
            report.problems.append(f"{oracle.backend}: unsound witness on {list(omega_a)}")
    for _ in range(n_preferences):
        pa, pb = random_preference(rng, p), random_preference(rng, p)
        for player in Player:
            own, other = (pa, pb) if player is Player.ALICE else (pb, pa)
            ne = lexsafe_ne(oracle, own, other, player)
            report.equilibria += 1
            report.max_lexmax_queries = max(report.max_lexmax_queries, ne.lexmax_queries)
            report.max_complement_queries = max(report.max_complement_queries, ne.complement_queries)
            x, y = exp.row_index(ne.x_strategy.payload), exp.col_index(ne.y_strategy.payload)
            if not _is_nash(form, x, y, pa, pb):
                report.problems.append(f"{oracle.backend}: lexsafe pair ({x}, {y}) is not an equilibrium")
            if not certify_ne(ne, pa, pb):
                report.problems.append(f"{oracle.backend}: certification failed")
            if ne.lexmax_queries > p * (p + 3) // 2 or ne.complement_queries > 2 * p:
                report.problems.append(f"{oracle.backend}: query budget exceeded ({ne.lexmax_queries},"
                                       f" {ne.complement_queries}) for p={p}")
    return report


def _is_nash(form: ExplicitGameForm, x: int, y: int, pa: Preference, pb: Preference) -> bool:
    here = form.cells[x][y]
    rows, cols = form.shape
    if any(pa.prefers(form.cells[x2][y], here) for x2 in range(rows)):
        return False
    return not any(pb.prefers(form.cells[x][y2], here) for y2 in range(cols))


def selfcheck(seed: int = 0, instances: int = 10, n_preferences: int = 5) -> dict:
    """Cross-check ``instances`` random instances per backend; returns a summary."""
    rng = random.Random(seed)
    summary = {}
    for name, gen in GENERATORS.items():
        rep = CheckReport()
        for _ in range(instances):
            crosscheck(gen(rng), rng, n_preferences, report=rep)
        summary[name] = {"partitions": rep.partitions, "equilibria": rep.equilibria,
                         "problems": rep.problems}
    return summary
