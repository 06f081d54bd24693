"""Baby Verma modules and central characters."""
from fractions import Fraction

import pytest

from chered.multipoly import MPoly, canon_scalar
from chered.reflgrp import (ParamVector, build_group, character_table,
                            fake_degree, param_convert)
from chered.cherednik import euler_element, named_center_generators
from chered.verma import (build_baby_verma, coinvariant_basis,
                          graded_character_eM, omega, omega_euler_closed_form,
                          omega_table)


def test_coinvariant_basis_dimensions():
    for spec in ("cyclic:2", "cyclic:4", "b2"):
        W = build_group(spec)
        cb = coinvariant_basis(W)
        assert len(cb.monomials) == W.order()
    W = build_group("b2")
    cb = coinvariant_basis(W)
    assert cb.degree_counts() == {0: 1, 1: 2, 2: 2, 3: 2, 4: 1}


def test_module_dimensions():
    W = build_group("b2")
    for chi in character_table(W):
        mod = build_baby_verma(W, chi)
        assert mod.dim == W.order() * chi.degree


def _poly(expr_vars):
    a, b = MPoly.var("A"), MPoly.var("B")
    return expr_vars(a, b)


def test_omega_table_b2():
    """The central characters of (eu, eu', eu'', delta) on each character."""
    W = build_group("b2")
    table = omega_table(W)
    A, B = MPoly.var("A"), MPoly.var("B")
    zero = MPoly.zero()
    expected = {
        "1": (-2 * (B + A), zero, zero, 2 * B * (B + A)),
        "eps_s": (-2 * (B - A), zero, zero, 2 * B * (B - A)),
        "eps_t": (2 * (B - A), zero, zero, 2 * B * (B - A)),
        "eps": (2 * (B + A), zero, zero, 2 * B * (B + A)),
        "chi": (zero, zero, zero, zero),
    }
    for name, (v_eu, v_eu1, v_eu2, v_delta) in expected.items():
        row = table[name]
        assert row["eu"] == v_eu, name
        assert row["eu'"] == v_eu1, name
        assert row["eu''"] == v_eu2, name
        assert row["delta"] == v_delta, name
        # the embedded invariants act by zero on every baby Verma module
        for gen in ("sigma", "pi", "Sigma", "Pi"):
            assert row[gen].is_zero(), (name, gen)


@pytest.mark.parametrize("spec", ("cyclic:2", "cyclic:3", "cyclic:4",
                                  "cyclic:5", "cyclic:6", "b2"))
def test_omega_euler_closed_form(spec):
    W = build_group(spec)
    eu = euler_element(W)
    for chi in character_table(W):
        assert omega(eu, chi, check_nilpotent=True) == \
            omega_euler_closed_form(W, chi)


@pytest.mark.parametrize("d", (2, 3, 4, 5, 6))
def test_omega_euler_cyclic_is_d_K_minus_i(d):
    import random
    rng = random.Random(d * 31 + 7)
    W = build_group(f"cyclic:{d}")
    eu = euler_element(W)
    cvals = {f"C{i}": Fraction(rng.randint(-5, 5)) for i in range(1, d)}
    pv = ParamVector.make(W, "C", cvals)
    kmap = param_convert(W, pv, "K").as_dict()
    for i, chi in enumerate(character_table(W)):
        val = omega(eu, chi, check_nilpotent=False).substitute(cvals)
        expected = canon_scalar(d * kmap[f"K{(-i) % d}"])
        assert canon_scalar(val.constant_value()) == expected, (d, i)


def test_nilpotency_certificates_delta():
    W = build_group("b2")
    delta = named_center_generators(W)["delta"]
    for chi in character_table(W):
        omega(delta, chi, check_nilpotent=True)  # raises on failure


def test_graded_character_matches_fake_degree():
    for spec in ("cyclic:3", "cyclic:5", "b2"):
        W = build_group(spec)
        for chi in character_table(W):
            assert graded_character_eM(W, chi) == fake_degree(W, chi), \
                (spec, chi.name)


def test_omega_requires_scalar_action():
    # a non-central element has no central character; the trace-average is
    # still computable, but the nilpotency certificate must reject it
    from chered.cherednik import PBWElement
    W = build_group("b2")
    chars = character_table(W)
    s = PBWElement.group_gen(W, W.index_of("s"))
    with pytest.raises(ArithmeticError):
        omega(s, chars[4], check_nilpotent=True)
