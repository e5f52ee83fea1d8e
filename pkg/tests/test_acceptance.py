"""Acceptance suite; one ``criterion(n)`` marker per item, summarised at the end of the run.

Expected values come from the brute-force references in ``brute.py`` or from
the worked examples bundled as fixtures, never from the code under test.
"""

import functools
import itertools
import random
import time

import pytest

from lexsafe.backends import VetoScheme
from lexsafe.backends.bargaining import count_strategies
from lexsafe.backends.explicit import is_tight
from lexsafe.core import OutcomeSet, Player, Preference
from lexsafe.crosscheck import GENERATORS, random_preference, random_tight_explicit
from lexsafe.engine import certify_ne, lexmax_support, lexsafe_ne
from lexsafe.errors import InvalidInstance
from lexsafe.io import load_fixture
from lexsafe.oracle import solve_pm1

import brute

REFERENCE_FORMS = [f"g{i}" for i in range(1, 10)]
SUITE_INSTANCES = 200
SUITE_PREFERENCES = 20
SUITE_SEED = 20240


def form(name):
    return load_fixture(name).oracle


# criterion 1

@pytest.mark.criterion(1)
@pytest.mark.parametrize("name", REFERENCE_FORMS)
def test_reference_forms_tightness(name):
    expected = name in {"g1", "g2", "g3", "g4", "g5", "g6"}
    g = form(name)
    start = time.perf_counter()
    got = is_tight(g)
    elapsed = time.perf_counter() - start
    # independent check: every partition has a brute-force winner
    p = g.n_outcomes
    brute_tight = all(brute.pm1_winner(g.cells, set(s)) is not None
                      for r in range(p + 1) for s in itertools.combinations(range(p), r))
    assert got is expected and brute_tight is expected
    assert elapsed < 1.0


# criterion 2

A_PREF = Preference((2, 0, 1))
B_COMPLETIONS = [Preference((0, 2, 1)), Preference((2, 0, 1))]


@pytest.mark.criterion(2)
@pytest.mark.parametrize("pref_b", B_COMPLETIONS, ids=["w1-bottom", "w1-middle"])
def test_lexsafe_boxes_on_g1(pref_b):
    """Alice ranks w3 < w1 < w2; Bob only fixes w3 < w2, so both completions are run.

    The Alice box lands on w1 at (row 0, column 1) and the Bob box on w2 at
    (row 1, column 0), in 0-based indices. These outcomes match the worked
    example, but its prose attaches the two situations to the opposite boxes.
    We keep the box construction (Alice's box holds Alice's lexsafe row) and
    check the outcomes plus the Nash property against brute force.
    """
    g1 = form("g1")
    cells = g1.cells
    ne_a = lexsafe_ne(g1, A_PREF, pref_b, Player.ALICE)
    ne_b = lexsafe_ne(g1, pref_b, A_PREF, Player.BOB)
    assert (ne_a.x_strategy.payload, ne_a.y_strategy.payload, ne_a.ne_outcome) == (0, 1, 0)
    assert (ne_b.x_strategy.payload, ne_b.y_strategy.payload, ne_b.ne_outcome) == (1, 0, 1)
    nash = brute.nash_equilibria(cells, A_PREF.order, pref_b.order)
    assert (0, 1) in nash and (1, 0) in nash
    assert certify_ne(ne_a, A_PREF, pref_b) and certify_ne(ne_b, A_PREF, pref_b)

    # the pair of lexsafe strategies is not an equilibrium
    x_l = lexmax_support(g1, A_PREF).strategy.payload
    y_l = lexmax_support(g1.transpose(), pref_b).strategy.payload
    assert (x_l, y_l) == (0, 0)
    assert not brute.is_nash(cells, x_l, y_l, A_PREF.order, pref_b.order)


# criteria 3 and 5 share one run of the equivalence suite

@functools.lru_cache(maxsize=None)
def equivalence_suite(backend):
    rng = random.Random(f"{SUITE_SEED}-{backend}")
    gen = GENERATORS[backend]
    records = {"mismatches": [], "budgets": [], "instances": 0}
    start = time.perf_counter()
    for _ in range(SUITE_INSTANCES):
        oracle = gen(rng)
        exp = oracle.expand(8192)
        cells = exp.form.cells
        p = oracle.n_outcomes
        records["instances"] += 1
        for mask in range(1 << p):
            omega_a = OutcomeSet(p, mask)
            want = brute.pm1_winner(cells, set(omega_a))
            got = solve_pm1(oracle, omega_a)
            if got.winner.value != want:
                records["mismatches"].append(("pm1", repr(oracle), list(omega_a)))
        for _ in range(SUITE_PREFERENCES):
            pa, pb = random_preference(rng, p), random_preference(rng, p)
            for who in Player:
                own, other = (pa, pb) if who is Player.ALICE else (pb, pa)
                ne = lexsafe_ne(oracle, own, other, who)
                x, y = exp.row_index(ne.x_strategy.payload), exp.col_index(ne.y_strategy.payload)
                if not brute.is_nash(cells, x, y, pa.order, pb.order):
                    records["mismatches"].append(("nash", repr(oracle), pa.order, pb.order, who.value))
                records["budgets"].append((p, ne.lexmax_queries, ne.complement_queries))
    records["seconds"] = time.perf_counter() - start
    return records


@pytest.mark.criterion(3)
@pytest.mark.parametrize("backend", sorted(GENERATORS))
def test_oracle_equivalence(backend):
    res = equivalence_suite(backend)
    assert res["instances"] >= 200
    assert res["mismatches"] == []


@pytest.mark.criterion(3)
def test_equivalence_runtime():
    total = sum(equivalence_suite(b)["seconds"] for b in GENERATORS)
    assert total <= 300


@pytest.mark.criterion(5)
@pytest.mark.parametrize("backend", sorted(GENERATORS))
def test_query_budgets(backend):
    over = [(p, lq, cq) for p, lq, cq in equivalence_suite(backend)["budgets"]
            if lq > p * (p + 3) // 2 or cq > 2 * p]
    assert over == []


# criterion 4

def _tight_forms():
    rng = random.Random(4)
    forms = [form(f"g{i}") for i in range(1, 7)]
    forms += [random_tight_explicit(rng, max_outcomes=10) for _ in range(500)]
    return forms, rng


def _box_violations(g, pa, pb):
    problems = []
    for who in Player:
        own, other = (pa, pb) if who is Player.ALICE else (pb, pa)
        cells = g.cells if who is Player.ALICE else [list(c) for c in zip(*g.cells)]
        own_supports, other_supports = brute.rows(cells), brute.cols(cells)
        ne = lexsafe_ne(g, own, other, who)
        a_l, b_m, star = frozenset(ne.support_own), frozenset(ne.support_other), ne.ne_outcome
        best = max(brute.weight(s, own.order) for s in own_supports)
        if a_l not in own_supports or brute.weight(a_l, own.order) != best:
            problems.append((who.value, "not lexmax"))
        if any(s < a_l for s in own_supports):
            problems.append((who.value, "not inclusion-minimal"))
        if b_m not in other_supports or a_l & b_m != {star}:
            problems.append((who.value, "bad complement"))
        if any(own.prefers(w, star) for w in b_m - {star}):
            problems.append((who.value, "complement has a better outcome"))
    return problems


@pytest.mark.criterion(4)
def test_lexmax_and_complement_properties():
    forms, rng = _tight_forms()
    assert len(forms) == 506 and all(g.n_outcomes <= 10 for g in forms)
    violations = []
    for g in forms:
        for _ in range(3):
            pa, pb = random_preference(rng, g.n_outcomes), random_preference(rng, g.n_outcomes)
            violations += _box_violations(g, pa, pb)
    assert violations == []


# criterion 6

@pytest.mark.criterion(6)
@pytest.mark.parametrize("k,target", [(1, "g1"), (2, "g2"), (3, "g6")])
def test_positional_fixtures_expand_to_reference_forms(k, target):
    exp = form(f"gamma{k}").expand().form
    assert brute.equal_up_to_permutation(exp.to_labels(), form(target).to_labels())


def _monotone_maps(size, codomain):
    return [t for t in itertools.product(range(codomain), repeat=size)
            if all(a <= b for a, b in zip(t, t[1:]))]


@pytest.mark.criterion(6)
def test_bargaining_counts():
    for m in range(1, 10):
        for n in range(1, 11 - m):
            assert count_strategies(m, n) == (len(_monotone_maps(m, n)), len(_monotone_maps(n, m)), m * n)


@pytest.mark.criterion(6)
def test_veto_budget_identity_is_exact():
    for mu_a, mu_b in itertools.product(range(1, 5), repeat=2):
        for lam in itertools.chain.from_iterable(
                itertools.product(range(1, 5), repeat=k) for k in range(1, 4)):
            if mu_a + mu_b + 1 == sum(lam):
                VetoScheme(mu_a, mu_b, list(lam))
            else:
                with pytest.raises(InvalidInstance):
                    VetoScheme(mu_a, mu_b, list(lam))


# criterion 7

@pytest.mark.criterion(7)
def test_no_numeric_results_to_reproduce():
    """Nothing beyond the worked examples above has a reference value; the
    property-based checks in criteria 3 to 5 are the whole of it."""
    assert True


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
