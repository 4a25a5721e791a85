import numpy as np
import pytest

from diracpol import BoxBasis, ConfigError, PotentialSpec, evaluate_potential, validate_spec


def test_inside_well_vector():
    spec = PotentialSpec(depth_vector=2.0, depth_scalar=0.0, width=2.0)
    assert evaluate_potential(spec, 0.0) == (-2.0, 0.0)


def test_outside_support():
    spec = PotentialSpec(depth_vector=2.0, depth_scalar=0.0, width=2.0)
    assert evaluate_potential(spec, 1.5) == (0.0, 0.0)


def test_scalar_coupling_inside_well():
    spec = PotentialSpec(depth_vector=0.0, depth_scalar=1.0, width=4.0)
    assert evaluate_potential(spec, -1.0) == (0.0, -1.0)


def test_parity_and_support():
    spec = PotentialSpec(depth_vector=1.3, depth_scalar=0.4, width=2.0)
    x = np.linspace(-5, 5, 1001)
    v, s = evaluate_potential(spec, x)
    np.testing.assert_array_equal(v, v[::-1])
    np.testing.assert_array_equal(s, s[::-1])
    outside = np.abs(x) > 1.0
    assert np.all(v[outside] == 0.0)
    assert np.all(s[outside] == 0.0)


@pytest.mark.parametrize("kwargs", [
    {"width": 0.0},
    {"width": -1.0},
    {"depth_vector": -0.5},
    {"depth_scalar": -0.5},
    {"shape": "gaussian"},
])
def test_invalid_specs_rejected(kwargs):
    with pytest.raises(ConfigError):
        PotentialSpec(**kwargs)


def test_validate_ok_no_warnings():
    report = validate_spec(PotentialSpec(depth_vector=1.0, width=2.0),
                           BoxBasis(box_length=20.0, modes=10))
    assert report.ok and not report.warnings


def test_validate_well_wider_than_box():
    report = validate_spec(PotentialSpec(depth_vector=1.0, width=2.0),
                           BoxBasis(box_length=1.0, modes=10))
    assert not report.ok
    assert any("box" in e for e in report.errors)


def test_validate_supercriticality_warning():
    report = validate_spec(PotentialSpec(depth_vector=2.5, width=2.0),
                           BoxBasis(box_length=20.0, modes=10))
    assert report.ok
    assert any("supercritical" in w for w in report.warnings)


def test_validate_confinement_warning():
    report = validate_spec(PotentialSpec(depth_vector=1.0, width=12.0),
                           BoxBasis(box_length=20.0, modes=10))
    assert report.ok
    assert any("half the box" in w for w in report.warnings)
