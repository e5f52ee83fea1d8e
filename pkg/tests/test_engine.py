import random

import pytest

from lexsafe.backends import ExplicitGameForm
from lexsafe.backends.explicit import enumerate_ne
from lexsafe.core import OutcomeSet, Player, Preference
from lexsafe.crosscheck import random_tight_explicit
from lexsafe.engine import LexsafeNe, certify_ne, complement_edge, lexmax_support, lexsafe_ne
from lexsafe.errors import NotTight
from lexsafe.io import load_fixture

from brute import cols, lexmax, rows

A74 = Preference((2, 0, 1))      # w3 < w1 < w2
B74 = Preference((0, 2, 1))      # w1 < w3 < w2
ASC4 = Preference((0, 1, 2, 3))


def g(name):
    return load_fixture(name).oracle


def test_lexmax_support_g1():
    res = lexmax_support(g("g1"), A74)
    assert set(res.support) == {0} and res.strategy.payload == 0


def test_lexmax_support_single_strategy():
    form = ExplicitGameForm([[0, 1, 2]])
    assert set(lexmax_support(form, Preference((2, 1, 0))).support) == {0, 1, 2}


def test_lexmax_support_g2():
    res = lexmax_support(g("g2"), ASC4)
    assert set(res.support) == {2, 3} and res.strategy.payload == 1


def test_complement_edge_g1():
    res = complement_edge(g("g1"), OutcomeSet.of(3, [0]), 0, A74)
    assert set(res.support) == {0, 2} and res.strategy.payload == 1


def test_complement_edge_g2():
    g2 = g("g2")
    res = complement_edge(g2, OutcomeSet.of(4, [2, 3]), 3, ASC4)
    assert set(res.support) == {1, 3}
    assert set(g2.col_support(res.strategy.payload)) == {1, 3}


def test_complement_edge_contains_omega_star():
    g3 = g("g3")
    for order in [(0, 1, 2), (1, 2, 0), (2, 1, 0)]:
        pref = Preference(order)
        a_l = lexmax_support(g3, pref).support
        for star in a_l:
            b_m = complement_edge(g3, a_l, star, pref).support
            assert star in b_m


def test_lexsafe_ne_g1_both_players():
    g1 = g("g1")
    ne_a = lexsafe_ne(g1, A74, B74, Player.ALICE)
    assert (ne_a.x_strategy.payload, ne_a.y_strategy.payload, ne_a.ne_outcome) == (0, 1, 0)
    assert ne_a.x_strategy.player is Player.ALICE and ne_a.y_strategy.player is Player.BOB
    ne_b = lexsafe_ne(g1, B74, A74, Player.BOB)
    assert (ne_b.x_strategy.payload, ne_b.y_strategy.payload, ne_b.ne_outcome) == (1, 0, 1)
    assert set(ne_b.support_own) == {0, 1}
    assert sorted(enumerate_ne(g1, A74, B74)) == [(0, 1), (1, 0)]
    assert ne_b.own_strategy is ne_b.y_strategy


def test_forced_single_situation():
    form = ExplicitGameForm([[0]])
    ne = lexsafe_ne(form, Preference((0,)), Preference((0,)), Player.BOB)
    assert ne.ne_outcome == 0 and ne.x_strategy.payload == 0 == ne.y_strategy.payload


def test_certify_rejects_tampering():
    g3 = g("g3")
    pa, pb = Preference((0, 1, 2)), Preference((2, 0, 1))
    ne = lexsafe_ne(g3, pa, pb)
    assert certify_ne(ne, pa, pb)
    for other in ne.support_own:
        if other != ne.ne_outcome:
            bad = LexsafeNe(ne.player, ne.x_strategy, ne.y_strategy, ne.support_own,
                            ne.support_other, other, 0, 0)
            assert not certify_ne(bad, pa, pb)
    better = [w for w in range(3) if pa.prefers(w, ne.ne_outcome) and w not in ne.support_own]
    for w in better:
        bad = LexsafeNe(ne.player, ne.x_strategy, ne.y_strategy, ne.support_own,
                        ne.support_other.add(w), ne.ne_outcome, 0, 0)
        assert not certify_ne(bad, pa, pb)


def test_both_lexsafe_pair_is_not_an_equilibrium():
    g1 = g("g1")
    x = lexsafe_ne(g1, A74, B74, Player.ALICE).x_strategy.payload
    y = lexsafe_ne(g1, B74, A74, Player.BOB).y_strategy.payload
    assert (x, y) == (0, 0)
    assert (x, y) not in enumerate_ne(g1, A74, B74)


def test_not_tight_propagates():
    with pytest.raises(NotTight):
        lexsafe_ne(g("g7"), Preference((0, 1)), Preference((1, 0)))


def test_dichotomy_gives_the_same_support():
    rng = random.Random(7)
    for _ in range(200):
        form = random_tight_explicit(rng, max_outcomes=8)
        order = list(range(form.n_outcomes))
        rng.shuffle(order)
        pref = Preference(tuple(order))
        lin, dic = lexmax_support(form, pref), lexmax_support(form, pref, dichotomy=True)
        assert lin.support == dic.support
        assert set(lin.support) == lexmax(rows(form.cells), pref.order)


def test_simplicity_and_minimality_on_fixtures():
    rng = random.Random(3)
    for name in ["g1", "g2", "g3", "g4", "g5", "g6"]:
        form = g(name)
        p = form.n_outcomes
        for _ in range(10):
            pa = Preference(tuple(rng.sample(range(p), p)))
            pb = Preference(tuple(rng.sample(range(p), p)))
            for who in Player:
                own, other = (pa, pb) if who is Player.ALICE else (pb, pa)
                ne = lexsafe_ne(form, own, other, who)
                sx = form.row_support(ne.x_strategy.payload)
                sy = form.col_support(ne.y_strategy.payload)
                assert set(sx & sy) == {ne.ne_outcome}
                supports = rows(form.cells) if who is Player.ALICE else cols(form.cells)
                own_support = frozenset(ne.support_own)
                assert not any(s < own_support for s in supports)
