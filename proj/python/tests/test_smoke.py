import math

import numpy as np
import pytest

import orlicz_radii as orad


def test_phi_constants():
    phi = orad.Phi("power:p=2")
    assert phi(0.5) == pytest.approx(0.25)
    assert phi.half_inverse == pytest.approx(math.sqrt(0.5), abs=1e-12)
    assert phi.slab_radius == pytest.approx(1.0, abs=1e-12)
    assert len(orad.default_phis()) == 6
    with pytest.raises(ValueError):
        orad.Phi("power:p=0.5")


def test_lp_support():
    phi = orad.Phi("power:p=3")
    assert orad.orlicz_support(1.0, 2.0, phi) == pytest.approx((1 + 8) ** (1 / 3), rel=1e-12)


def test_segment_sum():
    a = orad.segment(np.array([-1.0, 0.0]), np.array([1.0, 0.0]))
    b = orad.segment(np.array([0.0, -1.0]), np.array([0.0, 1.0]))
    s = orad.OrliczSum(a, b, orad.Phi("power:p=1"))
    u = np.array([1.0, 1.0]) / math.sqrt(2)
    assert s.support(u) == pytest.approx(math.sqrt(2), abs=1e-12)
    table = s.support_table(np.eye(2))
    assert np.allclose(table, [1.0, 1.0])
    assert orad.circumradius(s) == pytest.approx(math.sqrt(2), abs=1e-8)


def test_body_radii():
    cube = orad.Body.from_vertices(np.array([[x, y, z] for x in (-1, 1) for y in (-2, 2) for z in (-3, 3)], float).T)
    assert cube.dimension == 3
    assert orad.width(cube) == pytest.approx(2.0)
    assert orad.circumradius(cube) == pytest.approx(math.sqrt(14))
    rep = orad.outer_radius(cube, 2, starts=8, max_iters=40)
    assert rep["value"] == pytest.approx(math.sqrt(5), abs=1e-6)
    assert rep["frame"].shape == (3, 2)
    outer, inner = orad.radii(cube, starts=8, max_iters=40)
    assert outer == sorted(outer)
    assert inner == sorted(inner, reverse=True)


def test_verify_phi_family():
    rows = orad.verify(claims=["phi-class"], dims=[2])
    assert rows and all(r["status"] == "pass" for r in rows)
