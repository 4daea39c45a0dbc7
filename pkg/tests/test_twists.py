"""Twist rules, composite monodromies, Stallings image tables."""

import itertools

import pytest
from hypothesis import given, strategies as st

from handlecalc.surfaces import FiberSurface, beta_word
from handlecalc.twists import (
    MonodromySpec,
    UnsupportedTwistError,
    apply_monodromy,
    apply_twist,
    chain_twist_rule,
    mirror,
    piece_monodromy,
    stallings_monodromy,
    stallings_rules,
    ta3_power,
    two_bridge_monodromy,
)
from handlecalc.words import alpha, concat, handle_letters, handle_occurrences, invert, parse_word

S11 = FiberSurface(1, 1)
S21 = FiberSurface(2, 1)
S31 = FiberSurface(3, 1)

eps_strategy = st.integers(1, 5).flatmap(
    lambda k: st.tuples(*[st.sampled_from((1, -1))] * (2 * k))
)


def test_twist_rule_basic_cases():
    t2 = chain_twist_rule(2, 1, S11)
    assert apply_twist(t2, (alpha(1),)) == parse_word("a1 a2' a1")
    t1_inv = chain_twist_rule(1, -1, S11)
    assert apply_twist(t1_inv, (alpha(0),)) == parse_word("a1")
    # letters away from the twist are fixed
    t5 = chain_twist_rule(5, 1, S31)
    assert apply_twist(t5, (alpha(1),)) == (alpha(1),)


def test_twist_rule_all_four_clauses():
    s = FiberSurface(2, 1)
    for j in range(1, 5):
        plus, minus = chain_twist_rule(j, 1, s), chain_twist_rule(j, -1, s)
        assert apply_twist(plus, (alpha(j - 1),)) == (alpha(j - 1), alpha(j, -1), alpha(j - 1))
        assert apply_twist(plus, (alpha(j),)) == (alpha(j - 1),)
        assert apply_twist(minus, (alpha(j - 1),)) == (alpha(j),)
        assert apply_twist(minus, (alpha(j),)) == (alpha(j), alpha(j - 1, -1), alpha(j))


def test_twist_rule_range_checks():
    with pytest.raises(ValueError):
        chain_twist_rule(3, 1, S11)  # only a1, a2 exist at g=1
    with pytest.raises(ValueError):
        chain_twist_rule(0, 1, S11)
    rule = chain_twist_rule(1, 1, S11)
    with pytest.raises(ValueError):
        apply_twist(rule, (alpha(9),))  # letter outside the surface alphabet


def test_inverse_rule_property():
    for g in (1, 2, 3):
        s = FiberSurface(g, 1)
        for j in range(1, 2 * g + 1):
            plus, minus = chain_twist_rule(j, 1, s), chain_twist_rule(j, -1, s)
            for i in range(0, 2 * g + 1):
                w = (alpha(i),)
                assert apply_twist(minus, apply_twist(plus, w)) == w
                assert apply_twist(plus, apply_twist(minus, w)) == w


def test_rule_table_satisfies_braid_relations():
    # Independent consistency oracle: as endomorphisms on letter words the
    # chain twists must commute at distance >= 2 and satisfy the braid
    # relation on neighbours.
    s = FiberSurface(3, 1)

    def t(j, w):
        return apply_twist(chain_twist_rule(j, 1, s), w)

    letters = [(alpha(k),) for k in range(0, 7)]
    for i in range(1, 7):
        for j in range(1, 7):
            if abs(i - j) >= 2:
                for w in letters:
                    assert t(i, t(j, w)) == t(j, t(i, w))
    for i in range(1, 6):
        for w in letters:
            assert t(i, t(i + 1, t(i, w))) == t(i + 1, t(i, t(i + 1, w)))


def test_apply_monodromy_displayed_cases():
    s = S11
    assert apply_monodromy(piece_monodromy((1, 1)), (alpha(0),), s) == parse_word("a0 a1' a0")
    assert apply_monodromy(piece_monodromy((-1, -1)), (alpha(0),), s) == parse_word("a1")
    w = parse_word("a0' a1 a2' a1")
    assert apply_monodromy(MonodromySpec(()), w, s) == w


def test_monodromy_orders():
    # Fibration monodromy applies t_{a1} first; the piece monodromy the reverse.
    phi_k = two_bridge_monodromy((1, -1))
    assert [(str(c), e) for c, e in phi_k.twists] == [("a1", 1), ("a2", -1)]
    assert phi_k.serialize() == "a1 a2^-1"
    assert phi_k.composition_str() == "t_a2^-1 t_a1"
    phi = piece_monodromy((1, -1))
    assert [(str(c), e) for c, e in phi.twists] == [("a2", -1), ("a1", 1)]
    with pytest.raises(ValueError):
        two_bridge_monodromy(())
    with pytest.raises(ValueError):
        two_bridge_monodromy((1, -1, 1))
    with pytest.raises(ValueError):
        two_bridge_monodromy((2, 1))


def test_mirror():
    assert mirror((1, 1)) == (-1, -1)
    assert mirror((1, -1)) == (-1, 1)
    eps = (1, -1, 1, 1)
    assert mirror(mirror(eps)) == eps


def test_stallings_monodromy_serialization():
    assert stallings_monodromy(3).serialize() == "a1^-1 a2^-1 b2 a4 a3^3"
    assert stallings_monodromy(-1).composition_str() == "t_a3^-1 t_a4 t_b2 t_a2^-1 t_a1^-1"
    assert stallings_monodromy(0).serialize() == "a1^-1 a2^-1 b2 a4"
    with pytest.raises(UnsupportedTwistError):
        apply_monodromy(stallings_monodromy(1), (alpha(0),), S21)


def test_ta3_images():
    assert ta3_power((alpha(3),), 1) == (alpha(2),)
    assert ta3_power((alpha(2),), 1) == parse_word("a2 a3' a2")
    assert ta3_power((alpha(3),), -1) == parse_word("a3 a2' a3")
    assert ta3_power((alpha(2),), -1) == (alpha(3),)
    assert ta3_power((alpha(2),), 2) == parse_word("a2 a3' a2 a3' a2")


def test_ta3_power_length_law():
    # |t^m(a2)| = 2m+1 for m >= 1; for m <= -1 direct iteration gives
    # 2|m|-1 (the first inverse power lands on the single letter a3).
    for m in range(1, 7):
        assert len(ta3_power((alpha(2),), m)) == 2 * m + 1
    for m in range(-6, 0):
        assert len(ta3_power((alpha(2),), m)) == 2 * abs(m) - 1
    assert ta3_power((alpha(2),), 0) == (alpha(2),)


def test_ta3_fixes_a3_a2inv():
    # a3 * a2^-1 is invariant under every power (the slide results rely on it).
    w = (alpha(3), alpha(2, -1))
    for m in range(-5, 6):
        assert ta3_power(w, m) == w


def test_stallings_phi0_b4():
    table = stallings_rules(0)
    b4, b3 = beta_word(4, S21), beta_word(3, S21)
    expected = concat(b4, invert(b3), b4, (alpha(5),))
    assert table.phi_b_word(4, S21) == expected


def test_stallings_phi_m_heads_match_displayed_decompositions():
    from handlecalc.surfaces import eta_word, tilde_alpha_word

    m = 2
    table = stallings_rules(m)
    eta = eta_word()
    t = ta3_power((alpha(3),), m)
    assert table.phi_b_word(0, S21) == concat(
        eta, t, ta3_power((alpha(2, -1),), m), tilde_alpha_word(S21)
    )
    assert table.phi_b_word(1, S21) == concat(eta, t, beta_word(0, S21), (alpha(8),))
    assert table.phi_b_word(2, S21) == concat(eta, t, beta_word(1, S21), (alpha(7),))
    assert table.phi_b_word(3, S21) == concat(eta, t, beta_word(4, S21), (alpha(6),))


def test_image_closure_exhaustive_small():
    # The image of alpha_i is a word over alpha_0..alpha_{i+1} crossing
    # alpha_{i+1} once; exhaustive for g <= 2.
    for k in (1, 2):
        for eps in itertools.product((1, -1), repeat=2 * k):
            phi = piece_monodromy(eps)
            s = FiberSurface(k, 1)
            for i in range(2 * k):
                w = apply_monodromy(phi, (alpha(i),), s)
                assert handle_letters(w) <= set(range(1, i + 2))
                assert handle_occurrences(w, i + 1) == 1


@given(eps_strategy)
def test_image_closure_random(eps):
    g = len(eps) // 2
    phi = piece_monodromy(eps)
    s = FiberSurface(g, 1)
    for i in range(2 * g):
        w = apply_monodromy(phi, (alpha(i),), s)
        assert handle_letters(w) <= set(range(1, i + 2))
        assert handle_occurrences(w, i + 1) == 1


@given(eps_strategy)
def test_prefix_claim(eps):
    # Applying only the twists a_k..a_1 (a_k first) to alpha_k stays
    # inside alpha_0..alpha_k, for every prefix length k.
    from handlecalc.surfaces import CurveId

    g = len(eps) // 2
    s = FiberSurface(g, 1)
    for k in range(1, 2 * g + 1):
        twists = tuple((CurveId("a", j), eps[j - 1]) for j in range(k, 0, -1))
        w = apply_monodromy(MonodromySpec(twists), (alpha(k),), s)
        assert handle_letters(w) <= set(range(1, k + 1))


@given(eps_strategy, st.integers(0, 10))
def test_monodromy_round_trip(eps, i):
    g = len(eps) // 2
    i = i % (2 * g + 1)
    s = FiberSurface(g, 1)
    phi = two_bridge_monodromy(eps)
    w = apply_monodromy(phi.inverse(), apply_monodromy(phi, (alpha(i),), s), s)
    assert w == (alpha(i),)
