"""Galois-group certificate for the Euler minimal polynomial and the
geometry of the rank-1 center variety."""
import random
from fractions import Fraction

import pytest

from chered.galois import (b2_galois_certificate, rank1_disc_report,
                           rank1_ramification_test, rank1_singular_test)


def test_b2_certificate_passes():
    cert = b2_galois_certificate()
    assert cert["pass"] is True
    assert cert["group"] == "W4'"
    assert "certificate-consistent" in cert["identification"]
    assert len(cert["steps"]) == 3
    s1, s2, s3 = cert["steps"]
    assert s1["constant_term_is_marker_square"] is True
    assert s1["root_squares_to_disc"] is True
    assert s2["pass"] is True
    assert s3["direct_equals_target"] is True
    assert s3["factorized_equals_target"] is True
    assert s3["is_square"] is False


def test_rank1_disc_report_runs():
    rep = rank1_disc_report(3)
    assert rep["d"] == 3
    assert isinstance(rep["discriminant"], str) and rep["discriminant"]
    assert isinstance(rep["is_square"], bool)


def test_singular_examples():
    # origin of the quadric cone xy = e^2 (d = 2, K = 0)
    rep = rank1_singular_test(2, (0, 0), 0, 0, 0)
    assert rep["singular"] is True
    # smooth point with x != 0
    rep = rank1_singular_test(2, (1, -1), 1, 5, 3)
    assert rep["singular"] is False
    # x = y = 0 but e a simple root of the product: still smooth
    rep = rank1_singular_test(2, (1, -1), 0, 0, 2)
    assert rep["singular"] is False
    assert "factor d" in rep["notes"]


def test_ramification_examples():
    # K = 0: F_p(t) = t^d - x y; e = 0 over x y = 0 is totally ramified
    rep = rank1_ramification_test(3, (0, 0, 0), 0, 4, 0)
    assert rep["ramified"] is True
    # distinct d K_j: simple root, unramified
    rep = rank1_ramification_test(2, (-1, 1), 0, 0, 2)
    assert rep["ramified"] is False
    # double point of t^2 - x y at e = 1 over x y = 1... not on variety:
    rep = rank1_ramification_test(2, (0, 0), 1, 1, 1)
    assert rep["ramified"] is False


def test_off_variety_raises():
    with pytest.raises(ValueError):
        rank1_singular_test(2, (0, 0), 1, 1, 3)
    with pytest.raises(ValueError):
        rank1_ramification_test(2, (0, 0), 1, 1, 3)
    with pytest.raises(ValueError):
        rank1_singular_test(2, (1, 1), 0, 0, 2)  # K-values must sum to 0


def test_singular_matches_closed_description_random():
    rng = random.Random(555)
    for _ in range(40):
        d = rng.randint(2, 4)
        ks = [Fraction(rng.randint(-2, 2)) for _ in range(d - 1)]
        ks.append(-sum(ks))
        e = d * ks[rng.randrange(d)] if rng.random() < 0.7 else \
            Fraction(rng.randint(-6, 6))
        # choose x, y on the variety
        val = Fraction(1)
        for k in ks:
            val *= e - d * k
        if val == 0:
            x, y = Fraction(0), Fraction(rng.randint(-3, 3))
            if rng.random() < 0.5:
                x, y = y, x
            if rng.random() < 0.5:
                x = y = Fraction(0)
        else:
            x, y = Fraction(1), val
        rep = rank1_singular_test(d, ks, x, y, e)
        multiple_root = sum(1 for k in ks if d * k == e) >= 2
        assert rep["singular"] == (x == 0 and y == 0 and multiple_root), \
            (d, ks, x, y, e)
