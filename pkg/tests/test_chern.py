from dataclasses import replace
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from helixlab.chern import (ChernCharacter, FanoPreset, canonical_twist, from_coordinates,
                            hrr_euler, line_bundle, line_bundle_obstruction, to_coordinates,
                            twist, validate_preset)
from helixlab.errors import HelixlabError, NoSolution, NotInLattice
from helixlab.lattice import euler_pair

O = ChernCharacter(1, 0, 0, 0)
SPINOR = ChernCharacter(2, -1, 0, F(1, 6))

P3_GRAM = ((1, 4, 10, 20), (0, 1, 4, 10), (0, 0, 1, 4), (0, 0, 0, 1))
Q3_GRAM = ((1, 4, 16, 40), (0, 1, 5, 14), (0, 0, 1, 5), (0, 0, 0, 1))


def test_chern_character_coerces_to_exact_types():
    x = ChernCharacter(1, 2, "1/2", 3)
    assert x.b == F(1, 2) and isinstance(x.c, F)
    with pytest.raises(HelixlabError):
        ChernCharacter(1, 0, 0.5, 0)
    with pytest.raises(HelixlabError):
        ChernCharacter(F(1, 2), 0, 0, 0)


@pytest.mark.parametrize("name,expected", [("p3", 4), ("q3", 5), ("v5", 7), ("v22", 14)])
def test_hrr_chi_O_O1(name, expected, request):
    V = request.getfixturevalue(name)
    O1 = line_bundle(V.d, 1)
    assert hrr_euler(V, O, O1) == expected
    assert oracles.pair(name, 1, oracles.t) == expected
    assert hrr_euler(V, O, O) == 1


def test_hrr_spinor_self_pairing(q3):
    assert hrr_euler(q3, SPINOR, SPINOR) == 1


def test_spinor_character_from_spinor_sequence():
    assert oracles.t_to_chern("q3", oracles.SPINOR) == tuple(SPINOR)


@pytest.mark.parametrize("name,gram", [("p3", P3_GRAM), ("q3", Q3_GRAM)])
def test_preset_gram_matches_ring_oracle(name, gram, request):
    V = request.getfixturevalue(name)
    t = oracles.t
    classes = [1, t, t ** 2, t ** 3] if name == "p3" else [oracles.SPINOR, 1, t, t ** 2]
    oracle_gram = tuple(tuple(int(oracles.pair(name, x, y)) for y in classes) for x in classes)
    assert oracle_gram == gram
    assert V.gram == gram
    assert tuple(tuple(hrr_euler(V, x, y) for y in V.basis_ch) for x in V.basis_ch) == gram


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
chern_chars = st.builds(ChernCharacter, st.integers(-6, 6), st.integers(-6, 6), rationals, rationals)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["p3", "q3", "v5", "v22"]), chern_chars, chern_chars)
def test_hrr_matches_ring_oracle(name, x, y):
    from helixlab import load_preset
    V = load_preset(name)
    expected = oracles.pair(name, oracles.chern_to_t(name, *x), oracles.chern_to_t(name, *y))
    assert hrr_euler(V, x, y) == expected


def test_twist_examples(p3, q3):
    assert twist(p3, O, 1) == ChernCharacter(1, 1, F(1, 2), F(1, 6))
    assert twist(p3, SPINOR, 0) == SPINOR
    S1 = twist(q3, SPINOR, 1)
    assert S1 == ChernCharacter(2, 1, 0, F(-1, 6))
    assert SPINOR + S1 == ChernCharacter(4, 0, 0, 0)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["p3", "q3", "v5", "v22"]), chern_chars, st.integers(-5, 5))
def test_twist_matches_series_oracle(name, x, m):
    from helixlab import load_preset
    V = load_preset(name)
    expected = oracles.t_to_chern(name, oracles.chern_to_t(name, *x) * oracles.t ** m)
    assert tuple(twist(V, x, m)) == expected


@given(chern_chars, st.integers(-8, 8), st.integers(-8, 8))
def test_twist_is_a_group_action(x, m1, m2):
    V = FanoPreset("toy", d=5, k=2)
    assert twist(V, twist(V, x, m1), m2) == twist(V, x, m1 + m2)


def test_canonical_twist_examples(p3):
    assert canonical_twist(p3, O, "by_K") == ChernCharacter(1, -4, 8, F(-32, 3))
    assert hrr_euler(p3, O, canonical_twist(p3, O, "by_K")) == -1
    # chi(O(-4)) on P^3 = (-3)(-2)(-1)/6
    assert F(-3 * -2 * -1, 6) == -1
    assert canonical_twist(p3, canonical_twist(p3, SPINOR, "by_K"), "by_minus_K") == SPINOR
    with pytest.raises(HelixlabError):
        canonical_twist(p3, O, "sideways")


@given(st.sampled_from([(1, 4), (2, 3), (5, 2), (22, 1)]), chern_chars, chern_chars)
def test_serre_antisymmetry_chern_level(dk, x, y):
    V = FanoPreset("toy", d=dk[0], k=dk[1])
    assert hrr_euler(V, x, canonical_twist(V, y, "by_K")) == -hrr_euler(V, y, x)


def test_to_coordinates_examples(p3):
    assert to_coordinates(p3, line_bundle(1, 1)) == (0, 1, 0, 0)
    omega1 = ChernCharacter(3, -1, F(-1, 2), F(-1, 6))
    assert to_coordinates(p3, omega1) == (4, -1, 0, 0)
    assert to_coordinates(p3, line_bundle(1, 4)) == (-1, 4, -6, 4)
    # Koszul: sum (-1)^i C(4,i) [O(4-i)] = 0
    koszul = [1, -4, 6, -4, 1]
    total = ChernCharacter(0, 0, 0, 0)
    for i, c in enumerate(koszul):
        total = total + line_bundle(1, 4 - i).scale(c)
    assert total == ChernCharacter(0, 0, 0, 0)


def test_to_coordinates_errors(p3):
    with pytest.raises(NotInLattice):
        to_coordinates(p3, ChernCharacter(0, 0, 0, F(1, 2)))
    partial = FanoPreset("partial", d=1, k=4, gram=((1, 4, 10), (0, 1, 4), (0, 0, 1)),
                         basis_ch=p3.basis_ch[:3])
    with pytest.raises(NoSolution):
        to_coordinates(partial, ChernCharacter(0, 0, 0, 1))
    with pytest.raises(HelixlabError):
        to_coordinates(FanoPreset("bare", d=5, k=2), O)


@given(st.sampled_from(["p3", "q3"]), st.tuples(*[st.integers(-30, 30)] * 4),
       st.tuples(*[st.integers(-30, 30)] * 4))
def test_consistency_bridge(name, xi, eta):
    from helixlab import load_preset
    V = load_preset(name)
    x, y = from_coordinates(V, xi), from_coordinates(V, eta)
    assert x.is_integral()
    assert to_coordinates(V, x) == xi
    assert euler_pair(V.gram_form, xi, eta) == hrr_euler(V, x, y)


@given(st.sampled_from([(1, 4), (2, 3), (5, 2), (22, 1)]))
def test_todd_forces_chi_O_equal_one(dk):
    V = FanoPreset("toy", d=dk[0], k=dk[1])
    assert V.tau3 == 1 and (24 % V.k) == 0
    assert hrr_euler(V, O, O) == 1


def test_validate_shipped_presets(p3, q3, v5, v22):
    for V in (p3, q3, v5, v22):
        assert validate_preset(V).valid, validate_preset(V).violations
        assert (V.b2, V.b3) == (1, 0)
    assert (p3.d, p3.k, q3.d, q3.k, v5.d, v5.k, v22.d, v22.k) == (1, 4, 2, 3, 5, 2, 22, 1)


def test_validate_detects_perturbed_gram(p3):
    rows = [list(r) for r in p3.gram]
    rows[0][1] += 1
    bad = replace(p3, gram=tuple(tuple(r) for r in rows))
    verdict = validate_preset(bad)
    assert not verdict.valid
    assert any("mismatch at (1,2)" in v for v in verdict.violations)
    assert len(verdict.violations) == 1


def test_validate_detects_shape_and_hypotheses(p3):
    rows = [list(r) for r in p3.gram]
    rows[1][0] = 3
    rows[2][2] = 2
    bad = replace(p3, gram=tuple(tuple(r) for r in rows), b2=2, k=5)
    text = " | ".join(validate_preset(bad).violations)
    for needle in ("below the diagonal", "diagonal (3,3)", "b2 = 2", "index k = 5"):
        assert needle in text


def test_line_bundle_obstruction(p3):
    assert line_bundle_obstruction(p3, line_bundle(1, 3)) is None
    assert line_bundle_obstruction(p3, -line_bundle(1, -2)) is None
    assert line_bundle_obstruction(p3, SPINOR) is None
    assert "not ch(O(0))" in line_bundle_obstruction(p3, ChernCharacter(1, 0, 0, -1))
