import pytest

from sullivan_kit.catalog import catalog_get
from sullivan_kit.catalog.hermitian import (
    HermitianFamily,
    cross_check,
    hermitian_betti,
    orthogonal_degrees,
    periodicity_verdict,
    poincare_betti,
    symplectic_degrees,
)
from sullivan_kit.errors import InapplicableError


@pytest.mark.parametrize(
    "family, deviation",
    [
        (HermitianFamily.M1, 4),
        (HermitianFamily.M2, 6),
        (HermitianFamily.M3, 6),
        (HermitianFamily.M5, 8),
        (HermitianFamily.M6, 10),
    ],
)
def test_tabulated_families_deviate(family, deviation, config):
    table = hermitian_betti(family, config)
    assert not table.passes_periodicity
    assert table.first_deviation == deviation
    assert table.entries[deviation] == 2
    assert cross_check(table)


def test_quadrics_pass_the_filter(config):
    table = hermitian_betti("M4", config, n=12)
    assert table.passes_periodicity
    assert table.first_deviation is None
    assert table.entries == {2: 1, 4: 1, 6: 1, 8: 1, 10: 1}
    assert cross_check(table)


def test_grassmannian_poincare_polynomial():
    # Gr(2, 4) has Poincaré polynomial 1 + t^2 + 2t^4 + t^6 + t^8
    betti = poincare_betti(HermitianFamily.M1, {"p": 2, "q": 2}, upto=8)
    assert [betti[d] for d in range(0, 9, 2)] == [1, 1, 2, 1, 1]


def test_parameters_are_checked(config):
    with pytest.raises(InapplicableError):
        hermitian_betti("M1", config, p=1, q=3)
    with pytest.raises(InapplicableError):
        hermitian_betti("M2", config, n=3)
    with pytest.raises(InapplicableError):
        hermitian_betti("M5", config, n=3)


def test_group_degrees():
    assert orthogonal_degrees(8) == [3, 7, 11, 7]
    assert orthogonal_degrees(7) == [3, 7, 11]
    assert symplectic_degrees(3) == [3, 7, 11]


def test_periodicity_verdict():
    assert periodicity_verdict({2: 1, 4: 1, 6: 1, 8: 1, 10: 1}) == (True, None)
    assert periodicity_verdict({2: 1, 4: 0}) == (False, 4)


def test_catalog_access():
    entry = catalog_get("hermitian", family="M5")
    assert entry.model.family is HermitianFamily.M5
    assert entry.model.first_deviation == 8
