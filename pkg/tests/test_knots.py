"""Knot catalog: continued fractions, D-notation, equivalence, parsing."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from handlecalc.knots import (
    ConwayForm,
    DForm,
    KnotFraction,
    KnotSpecError,
    StallingsKnot,
    TwoBridgeKnot,
    continued_fraction,
    conway_to_d,
    d_to_conway,
    equivalent,
    genus_of,
    is_fibered,
    isotopic_d,
    parse_knot_spec,
    plat_braid_word,
)


def fraction_oracle(coeffs):
    """Independent continued-fraction evaluation with Fraction arithmetic."""
    value = Fraction(coeffs[-1])
    for n in reversed(coeffs[:-1]):
        value = n + 1 / value
    return value


def test_continued_fraction_examples():
    assert fraction_oracle((2, -2)) == Fraction(3, 2)
    f = continued_fraction(ConwayForm((2, -2)))
    assert (f.p, f.q) == (3, 2)
    assert fraction_oracle((2, 2)) == Fraction(5, 2)
    f = continued_fraction(ConwayForm((2, 2)))
    assert (f.p, f.q) == (5, 2)
    f = continued_fraction(ConwayForm((3,)))
    assert (f.p, f.q) == (3, 1)


def test_continued_fraction_sign_normalization():
    f = continued_fraction(ConwayForm((-3,)))
    assert (f.p, f.q) == (3, -1)


def test_continued_fraction_errors():
    with pytest.raises(KnotSpecError):
        continued_fraction(ConwayForm((1, -1)))  # 1 + 1/(-1) = 0
    with pytest.raises(KnotSpecError):
        continued_fraction(ConwayForm((2,)))  # even p: a link
    with pytest.raises(KnotSpecError):
        ConwayForm(())


def test_d_to_conway():
    assert d_to_conway(DForm((1, 1))).coefficients == (2, -2)
    assert d_to_conway(DForm((1, -1))).coefficients == (2, 2)
    assert d_to_conway(DForm((1, -1, 1, 1))).coefficients == (2, 2, 2, -2)
    with pytest.raises(KnotSpecError):
        DForm((1, 1, 1))


def test_conway_to_d_round_trip():
    for entries in ((1, 1), (1, -1, 2, 3), (-2, 1)):
        d = DForm(entries)
        assert conway_to_d(d_to_conway(d)) == d
    assert conway_to_d(ConwayForm((2, 1))) is None
    assert conway_to_d(ConwayForm((3, -2))) is None
    assert conway_to_d(ConwayForm((2, -2, 2))) is None


def test_is_fibered():
    assert is_fibered(DForm((1, -1)))
    assert not is_fibered(DForm((2, 1)))


def test_equivalent():
    assert equivalent(KnotFraction(5, 2), KnotFraction(5, 3))  # 2*3 = 6 = 1 mod 5
    assert equivalent(KnotFraction(3, 1), KnotFraction(3, 1))
    assert not equivalent(KnotFraction(5, 2), KnotFraction(7, 2))


def test_isotopic_d():
    assert isotopic_d(DForm((1, -1, 1, 1)), DForm((1, 1, -1, 1)))
    assert isotopic_d(DForm((1, 1)), DForm((1, 1)))
    assert not isotopic_d(DForm((1, 1)), DForm((1, -1)))
    with pytest.raises(KnotSpecError):
        isotopic_d(DForm((2, 1)), DForm((1, 1)))


def test_genus():
    assert genus_of(DForm((1, 1))) == 1
    assert genus_of(DForm((1, -1, 1, 1))) == 2
    assert StallingsKnot(3).genus == 2


def test_all_positive_forms_are_knots():
    # p comes out odd for every all-positive form up to k = 6 (knot, not link).
    for k in range(1, 7):
        f = continued_fraction(d_to_conway(DForm((1,) * (2 * k))))
        assert f.p % 2 == 1
        assert f == KnotFraction(f.p, f.q)  # lowest terms, p odd positive


def test_fraction_matches_oracle_on_fibered_forms():
    for k in (1, 2, 3):
        for eps in itertools.product((1, -1), repeat=2 * k):
            conway = d_to_conway(DForm(eps))
            try:
                f = continued_fraction(conway)
            except KnotSpecError:
                continue  # a degenerate evaluation, rejected either way
            oracle = fraction_oracle(conway.coefficients)
            assert Fraction(f.p, f.q) in (oracle, -oracle)
            assert f.p == abs(oracle.numerator)


def test_isotopic_implies_equivalent():
    # Reversal isotopy gives equal fractions or mirror-mod-p partners.
    for k in (1, 2, 3, 4):
        for eps in itertools.product((1, -1), repeat=2 * k):
            rev = tuple(reversed(eps))
            assert isotopic_d(DForm(eps), DForm(rev))
            try:
                f1 = continued_fraction(d_to_conway(DForm(eps)))
                f2 = continued_fraction(d_to_conway(DForm(rev)))
            except KnotSpecError:
                continue
            assert equivalent(f1, f2)


@given(st.integers(1, 250), st.integers(-499, 499), st.integers(-499, 499))
def test_equivalent_reflexive_symmetric(half_p, q1, q2):
    from math import gcd

    p = 2 * half_p + 1
    if gcd(p, q1) != 1 or gcd(p, q2) != 1:
        return
    f1, f2 = KnotFraction(p, q1), KnotFraction(p, q2)
    assert equivalent(f1, f1)
    assert equivalent(f1, f2) == equivalent(f2, f1)


def test_plat_braid_word():
    # Odd k: sigma_2^{n1} sigma_1^{-n2} ... sigma_2^{nk}.
    assert plat_braid_word(ConwayForm((3,))) == (2, 2, 2)
    assert plat_braid_word(ConwayForm((2, -2, 1))) == (2, 2, 1, 1, 2)
    # Even k carries the closing adjustment.
    assert plat_braid_word(ConwayForm((2, 2)), closing_sign=1) == (2, 2, -1, 2)
    assert plat_braid_word(ConwayForm((2, 2)), closing_sign=-1) == (2, 2, -1, -1, -1, -2)


def test_parse_knot_spec():
    k = parse_knot_spec("twobridge:+,-,+,+")
    assert isinstance(k, TwoBridgeKnot) and k.eps == (1, -1, 1, 1)
    assert k.genus == 2
    k = parse_knot_spec("conway:2,-2")
    assert k.eps == (1, 1)
    assert str(k.fraction()) == "3/2"
    k = parse_knot_spec("conway:2,1")
    assert not k.is_fibered
    with pytest.raises(KnotSpecError):
        k.monodromy()
    k = parse_knot_spec("stallings:m=-4")
    assert isinstance(k, StallingsKnot) and k.m == -4
    for bad in ("twobridge:+,2", "conway:x", "stallings:m=a", "nope:1", "twobridge"):
        with pytest.raises(KnotSpecError):
            parse_knot_spec(bad)


def test_spec_round_trip():
    for spec in ("twobridge:+,-", "stallings:m=3"):
        assert parse_knot_spec(spec).spec_str() == spec


def test_monodromy_of_parsed_knot():
    k = parse_knot_spec("twobridge:+,+")
    assert k.monodromy().composition_str() == "t_a2 t_a1"
    k = parse_knot_spec("stallings:m=-1")
    assert k.monodromy().composition_str() == "t_a3^-1 t_a4 t_b2 t_a2^-1 t_a1^-1"
