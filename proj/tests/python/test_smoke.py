"""Smoke tests for the gcq python module.

Needs PYTHONPATH to include <build>/python (ctest sets this); values below
are either hand-checked or compared against the module's own gcd oracle.
"""

import random

import pytest

import gcq


# ---------------------------------------------------------------- fields


def test_field_properties():
    F = gcq.Field(9)
    assert (F.q, F.p, F.e) == (9, 3, 2)
    assert F.modulus == 10  # x^2 + 1, encoded 1*9 + 0*3 + 1
    assert "q=9" in repr(F)


def test_canonical_moduli():
    assert gcq.Field(4).modulus == 7
    assert gcq.Field(8).modulus == 11
    assert gcq.Field(16).modulus == 19
    assert gcq.Field(27).modulus == 34


def test_prime_field_arithmetic():
    F = gcq.Field(7)
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(3) == 4
    assert F.pow(3, 6) == 1


def test_extension_field_arithmetic():
    F = gcq.Field(4)
    assert F.mul(2, 2) == 3  # x * x = x + 1 mod x^2 + x + 1
    for a in range(4):
        coords = F.coords(a)
        assert len(coords) == F.e
        assert all(c < F.p for c in coords)
        assert F.from_coords(coords) == a


def test_field_errors():
    with pytest.raises(gcq.Error):
        gcq.Field(6)  # not a prime power
    with pytest.raises(gcq.Error):
        gcq.Field(7).inv(0)


# ---------------------------------------------------------- minimal period


def test_min_period_worked_examples():
    F3 = gcq.Field(3)
    F2 = gcq.Field(2)
    assert gcq.min_period(F3, [1, 2, 0]) == 2
    assert gcq.min_period(F2, [1, 0, 1, 1]) == 4
    assert gcq.min_period(F2, [0, 0, 0, 0]) == 0
    assert gcq.min_period(F3, [2, 2, 2]) == 1  # constant


def test_min_period_matches_oracle():
    rng = random.Random(42)
    for q in (2, 3, 4, 9):
        F = gcq.Field(q)
        N = q * q
        for _ in range(50):
            block = [rng.randrange(q) for _ in range(N)]
            assert gcq.min_period(F, block) == gcq.mp_oracle(F, block)


def test_shortcut_changes_nothing():
    rng = random.Random(7)
    F = gcq.Field(5)
    for _ in range(25):
        block = [rng.randrange(5) for _ in range(25)]
        with_shortcut = gcq.min_period(F, block)
        without = gcq.min_period(F, block, use_shortcut=False)
        assert with_shortcut == without


def test_block_length_must_be_power_of_q():
    with pytest.raises(gcq.Error):
        gcq.min_period(gcq.Field(3), [1, 2])
    with pytest.raises(gcq.Error):
        gcq.min_period(gcq.Field(3), [1, 2, 3])  # element out of range


def test_paper_literal_discrepancy():
    F = gcq.Field(3)
    assert gcq.paper_literal_min_period(F, [1, 2, 0]) == 1
    assert gcq.mp_oracle(F, [1, 2, 0]) == 2
    # over GF(2) the published recurrence is exact
    rng = random.Random(3)
    F2 = gcq.Field(2)
    for _ in range(100):
        block = [rng.randrange(2) for _ in range(16)]
        assert gcq.paper_literal_min_period(F2, block) == gcq.mp_oracle(F2, block)


def test_trace_structure():
    F = gcq.Field(3)
    t = gcq.min_period_trace(F, [1, 2, 0, 1, 2, 0, 1, 2, 0], use_shortcut=False)
    assert t["value"] == t["base_value"] + sum(l["contribution"] for l in t["levels"])
    assert len(t["levels"]) <= 2
    assert t["ops"]["polynomial_divisions"] == 0
    assert t["ops"]["field_inversions"] == 0
    assert t["levels"][0]["N"] == 9


# ------------------------------------------------------------ multiplicity


def test_multiplicity_examples():
    F2 = gcq.Field(2)
    # (x - 1)^3 = x^3 + x^2 + x + 1 over GF(2)
    assert gcq.multiplicity(F2, [1, 1, 1, 1]) == 3
    assert gcq.multiplicity(F2, [1]) == 0
    with pytest.raises(gcq.Error):
        gcq.multiplicity(F2, [])  # zero polynomial


def test_planted_multiplicity_round_trip():
    for q in (2, 3, 9):
        F = gcq.Field(q)
        for m in (0, 1, 5, 17):
            coeffs = gcq.planted_instance(F, m, m + 10, seed=1000 + m)
            assert gcq.multiplicity(F, coeffs) == m
            assert gcq.multiplicity_oracle(F, coeffs) == m


def test_minimal_polynomial():
    F3 = gcq.Field(3)
    assert gcq.minimal_polynomial(F3, [1, 1, 1]) == [2, 1]  # x - 1
    block = [1, 0, 1, 1]
    mu = gcq.minimal_polynomial(gcq.Field(2), block)
    assert len(mu) - 1 == gcq.min_period(gcq.Field(2), block)


# ------------------------------------------------------------- binary path


def test_binary_equivalence():
    rng = random.Random(11)
    F2 = gcq.Field(2)
    assert gcq.min_period_binary([1, 0, 1, 1]) == 4
    for nbits in (1, 2, 64, 128, 1024):
        for _ in range(10):
            bits = [rng.randrange(2) for _ in range(nbits)]
            assert gcq.min_period_binary(bits) == gcq.min_period(F2, bits)
            if any(bits):
                assert gcq.multiplicity_binary(bits) == gcq.multiplicity(F2, bits)
    with pytest.raises(gcq.Error):
        gcq.min_period_binary([0, 2, 0, 0])
    with pytest.raises(gcq.Error):
        gcq.min_period_binary([1, 1, 1])  # not a power of two


# ------------------------------------------------------------------- misc


def test_binomial_mod_p():
    assert gcq.binomial_mod_p(6, 3, 3) == 2
    assert gcq.binomial_mod_p(4, 2, 2) == 0
    assert gcq.binomial_mod_p(3, 5, 7) == 0  # k > i


def test_discrepancy_search_corrected_clean():
    rep = gcq.discrepancy_search(gcq.Field(3), 1)
    assert rep["passed"] is True
    assert rep["cases"] == 27
    assert rep["algorithm"] == "corrected"
    assert rep["mismatches"] == []


def test_discrepancy_search_literal_fails():
    rep = gcq.discrepancy_search(gcq.Field(3), 1, algorithm="paper-literal")
    assert rep["passed"] is False
    bad = {tuple(m["block"]) for m in rep["mismatches"]}
    assert (1, 2, 0) in bad
    entry = next(m for m in rep["mismatches"] if tuple(m["block"]) == (1, 2, 0))
    assert (entry["expected"], entry["got"]) == (2, 1)


def test_discrepancy_search_random_deterministic():
    a = gcq.discrepancy_search(gcq.Field(4), 2, mode="random", seed=5, count=200)
    b = gcq.discrepancy_search(gcq.Field(4), 2, mode="random", seed=5, count=200)
    assert a["cases"] == b["cases"] == 200
    assert a["mismatches"] == b["mismatches"] == []


def test_discrepancy_search_budget():
    with pytest.raises(gcq.Error):
        gcq.discrepancy_search(gcq.Field(3), 3, budget=10)
    with pytest.raises(ValueError):
        gcq.discrepancy_search(gcq.Field(3), 1, mode="sideways")
