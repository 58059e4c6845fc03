"""Factorized Schur elements: x-to-v normalization, structural validation,
essential monomials, and the a/A invariants against a brute-force Laurent
expansion."""

from fractions import Fraction
from math import lcm

import pytest

from heckeblocks.cyclo import CycInt, RootOfUnity
from heckeblocks.schur import (
    BadPrimeArgument,
    CharLabel,
    SchurDataError,
    SchurFactorX,
    a_and_A,
    essential_hyperplanes,
    essential_monomials,
    generic_singleton,
    normalize_x_to_v,
    specialize,
    validate,
    value_at_one,
)
from heckeblocks.store import load_group

REPRESENTATIVES = ("phi{1,0}", "phi{2,9}'", "phi{3,6}")

# The published essential-hyperplane lists, frozen here as the oracle.
# G7 slot order: a0 a1 b0 b1 b2 c0 c1 c2.
PRINTED_G7 = {
    (0, 0, 0, 0, 0, 0, 1, -1),
    (0, 0, 0, 0, 0, 1, -1, 0),
    (0, 0, 0, 0, 0, 1, 0, -1),
    (0, 0, 0, 1, -1, 0, 0, 0),
    (0, 0, 1, -1, 0, 0, 0, 0),
    (0, 0, 1, 0, -1, 0, 0, 0),
    (1, -1, -2, 1, 1, -2, 1, 1),
    (1, -1, -2, 1, 1, 1, -2, 1),
    (1, -1, -2, 1, 1, 1, 1, -2),
    (1, -1, -1, -1, 2, -1, -1, 2),
    (1, -1, -1, -1, 2, -1, 2, -1),
    (1, -1, 2, -1, -1, -1, 2, -1),
    (1, -1, 2, -1, -1, 2, -1, -1),
}
# G6 slot order: a0 a1 c0 c1 c2.  The published list; the G7 list restricts
# onto it by zeroing the middle (b) orbit.
PRINTED_G6 = {
    (0, 0, 0, 1, -1),
    (0, 0, 1, -1, 0),
    (0, 0, 1, 0, -1),
    (1, -1, -2, 1, 1),
    (1, -1, 1, -2, 1),
    (1, -1, 1, 1, -2),
    (1, -1, -1, -1, 2),
    (1, -1, -1, 2, -1),
    (1, -1, 2, -1, -1),
    (1, -1, -1, 1, 0),
    (1, -1, 0, -1, 1),
    (1, -1, 1, 0, -1),
    (1, -1, -1, 0, 1),
    (1, -1, 0, 1, -1),
    (1, -1, 1, -1, 0),
    (1, -1, 0, 0, 0),
}


@pytest.fixture(scope="module")
def g7():
    return load_group("G7")


@pytest.fixture(scope="module")
def g4():
    return load_group("G4")


def rep_elements(g7):
    return [g7.schur_elements[CharLabel.parse(n)] for n in REPRESENTATIVES]


def restrict_b_to_zero(normal):
    return (normal[0], normal[1], normal[5], normal[6], normal[7])


# ---------------------------------------------------------------------------
# normalization output is structurally sound and has the right value at v=1
# ---------------------------------------------------------------------------


def test_representatives_validate_cleanly(g7):
    for s in rep_elements(g7):
        assert validate(g7, s) == []


def test_value_at_one_is_group_order_over_degree(g7):
    for s in rep_elements(g7):
        expected = g7.group_order // s.char.degree
        assert value_at_one(g7, s) == CycInt.rational(expected)


def test_monomials_are_primitive_sign_canonical_zero_sum(g7):
    for s in rep_elements(g7):
        for fac in s.factors:
            assert fac.psi.root.order >= 2
            for rng in g7.orbit_ranges():
                assert sum(fac.monomial[i] for i in rng) == 0


# ---------------------------------------------------------------------------
# extracted hyperplanes lie in the published lists with the right primes
# ---------------------------------------------------------------------------


def test_extracted_hyperplanes_subset_of_published(g7):
    for s in rep_elements(g7):
        for p in (2, 3):
            for normal in essential_monomials(s, p):
                restricted = restrict_b_to_zero(normal)
                assert normal in PRINTED_G7 or (
                    any(restricted) and restricted in PRINTED_G6
                ), (s.char.render(), p, normal)


def test_difference_hyperplanes_exactly_three_essential(g7):
    for s in rep_elements(g7):
        three = essential_monomials(s, 3)
        two = essential_monomials(s, 2)
        for normal in three | two:
            is_difference = normal[0] == normal[1] == 0
            if is_difference:
                assert normal in three and normal not in two, normal
            else:
                assert normal in two and normal not in three, normal


def test_expected_essential_sets_for_each_representative(g7):
    a_diff = (1, -1, 0, 0, 0, 0, 0, 0)
    bc_diffs = {
        (0, 0, 1, -1, 0, 0, 0, 0),
        (0, 0, 1, 0, -1, 0, 0, 0),
        (0, 0, 0, 0, 0, 1, -1, 0),
        (0, 0, 0, 0, 0, 1, 0, -1),
    }
    s1, s2, s3 = rep_elements(g7)
    assert essential_monomials(s1, 2) == {
        a_diff,
        (1, -1, 1, -1, 0, 1, 0, -1),
        (1, -1, 1, 0, -1, 1, -1, 0),
        (1, -1, 2, -1, -1, 2, -1, -1),
    }
    assert essential_monomials(s1, 3) == bc_diffs
    assert essential_monomials(s2, 2) == {
        (1, -1, -2, 1, 1, -2, 1, 1),
        (1, -1, 0, -1, 1, 0, 1, -1),
        (1, -1, 0, 1, -1, 0, -1, 1),
        (1, -1, 2, -1, -1, 2, -1, -1),
    }
    assert essential_monomials(s2, 3) == bc_diffs
    assert essential_monomials(s3, 2) == {
        a_diff,
        (1, -1, -1, -1, 2, -1, 2, -1),
        (1, -1, -1, 2, -1, -1, -1, 2),
        (1, -1, 2, -1, -1, 2, -1, -1),
    }
    assert essential_monomials(s3, 3) == set()


def test_trivial_character_is_generic_singleton(g7):
    s = g7.schur_elements[CharLabel.parse("phi{1,0}")]
    for p in (2, 3):
        assert generic_singleton(g7, s, p)


# ---------------------------------------------------------------------------
# essential_hyperplanes: table fallback and the bad-prime error
# ---------------------------------------------------------------------------


def test_essential_hyperplanes_from_tables(g4):
    assert essential_hyperplanes(g4, 3) == [
        (0, 1, -1), (1, -1, 0), (1, 0, -1),
    ]
    all_six = essential_hyperplanes(g4, 0)
    assert set(all_six) == {
        (0, 1, -1), (1, -1, 0), (1, 0, -1),
        (2, -1, -1), (1, -2, 1), (1, 1, -2),
    }
    assert essential_hyperplanes(g4, 2) == all_six


def test_bad_prime_raises_verbatim_message(g4):
    with pytest.raises(BadPrimeArgument) as err:
        essential_hyperplanes(g4, 5)
    assert str(err.value) == "The number p should divide the order of the group"


# ---------------------------------------------------------------------------
# a/A invariants against a brute-force Laurent expansion
# ---------------------------------------------------------------------------


def laurent_expand(g, sp):
    """Expand a specialized Schur element as {y-power: CycInt} by multiplying
    out every factor Psi(y^delta) = prod (y^delta - zeta_d^s)."""
    big = lcm(g.field_conductor,
              *(psi.root.order for psi, _, _ in sp.terms)) if sp.terms else (
        g.field_conductor)
    poly = {sp.y_power: sp.psi_coeff.lift(lcm(sp.psi_coeff.conductor, big))}
    for psi, delta, mult in sp.terms:
        d = psi.root.order
        for _ in range(mult):
            for s in psi.orbit():
                root = CycInt.zeta(d, s).lift(big)
                nxt = {}
                for power, c in poly.items():
                    hi = nxt.get(power + delta, CycInt.rational(0)) + c
                    nxt[power + delta] = hi
                    lo = nxt.get(power, CycInt.rational(0)) - c * root
                    nxt[power] = lo
                poly = {k: v for k, v in nxt.items() if not v.is_zero()}
    return poly


@pytest.mark.parametrize("n", [
    (0, 1, 2, 0, 1, 2, 0, 1),
    (1, 0, 0, 0, 0, 0, 0, 0),
    (2, -1, 1, 0, -1, 3, -2, -1),
])
def test_a_and_A_match_laurent_expansion(g7, n):
    for s in rep_elements(g7):
        sp = specialize(g7, s, n)
        poly = laurent_expand(g7, sp)
        assert poly, "specialized element expanded to zero"
        a, big_a = a_and_A(g7, sp)
        assert a == Fraction(min(poly), g7.mu_order)
        assert big_a == Fraction(max(poly), g7.mu_order)


def test_specialization_at_zero_recovers_group_order_over_degree(g7):
    n = (0,) * 8
    for s in rep_elements(g7):
        sp = specialize(g7, s, n)
        assert sp.terms == ()
        assert sp.psi_coeff == CycInt.rational(g7.group_order // s.char.degree)
        assert a_and_A(g7, sp) == (Fraction(0), Fraction(0))


# ---------------------------------------------------------------------------
# data-entry error detection in normalize_x_to_v
# ---------------------------------------------------------------------------


def test_root_order_one_factor_is_rejected(g7):
    # Phi_2(x_a0 / x_a1) has the root of unity part zeta_2, so tau = 1 shows
    # up in the root set: forbidden.
    bad = SchurFactorX(2, (1, -1, 0, 0, 0, 0, 0, 0))
    with pytest.raises(SchurDataError):
        normalize_x_to_v(g7, CharLabel(1, 0), CycInt.rational(1),
                         (0,) * 8, [bad])


def test_trivial_monomial_is_rejected(g7):
    bad = SchurFactorX(2, (0, 0, 0, 0, 0, 0, 0, 0))
    with pytest.raises(SchurDataError):
        normalize_x_to_v(g7, CharLabel(1, 0), CycInt.rational(1),
                         (0,) * 8, [bad])


def test_wrong_radical_twist_is_rejected(g7):
    # the cube-root factors of the degree-3 representative with the wrong
    # branch twist leave a coefficient outside Z[zeta_12]
    factors = [SchurFactorX(1, (-1, 1, 0, 0, 0, 0, 0, 0))]
    for j in range(3):
        for k in range(3):
            num = (1, -1) + tuple(-1 + 3 * (i == j) for i in range(3)) \
                + tuple(-1 + 3 * (i == k) for i in range(3))
            factors.append(SchurFactorX(1, num, 3, RootOfUnity.of(9, 1)))
    with pytest.raises(SchurDataError):
        normalize_x_to_v(g7, CharLabel(3, 6), CycInt.rational(3),
                         (0,) * 8, factors)
