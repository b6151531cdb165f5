import dataclasses
import math
import pickle

import pytest

from sclife.core import CONSTANTS, NIOBIUM, DomainError, Material, validate_material


def test_constants_match_reference_digits():
    assert CONSTANTS.mu0 == 4e-7 * math.pi
    assert CONSTANTS.hbar == 1.054571817e-34
    assert CONSTANTS.kB == 1.380649e-23
    assert all(c > 0 for c in CONSTANTS)


def test_valid_material_passes_unchanged():
    m = Material(tc=9.25, sigma_n=2e8, lambda_l0=35e-9, delta0_ratio=1.764, dynes_gamma_ratio=0)
    assert validate_material(m) is m
    assert validate_material(validate_material(m)) == m


@pytest.mark.parametrize(
    "field, value",
    [
        ("tc", -1.0),
        ("lambda_l0", 0.0),
        ("sigma_n", 0.0),
        ("delta0_ratio", 0.0),
        ("dynes_gamma_ratio", -0.1),
        ("tc", math.nan),
        ("sigma_n", math.inf),
    ],
)
def test_invalid_field_is_named(field, value):
    bad = dataclasses.replace(NIOBIUM, **{field: value})
    with pytest.raises(DomainError) as info:
        validate_material(bad)
    assert info.value.field == field


def test_first_violated_field_reported():
    bad = Material(tc=-1, sigma_n=-1, lambda_l0=0)
    with pytest.raises(DomainError, match="^tc"):
        validate_material(bad)


def test_domain_error_pickles():
    err = pickle.loads(pickle.dumps(DomainError("omega", "must be positive")))
    assert err.field == "omega"
    assert str(err) == "omega: must be positive"


def test_niobium_defaults():
    assert NIOBIUM.tc == 9.25
    assert NIOBIUM.lambda_l0 == 35e-9
    assert NIOBIUM.delta0_ratio == 1.764
    assert NIOBIUM.dynes_gamma_ratio == 0.0
