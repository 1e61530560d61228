import pytest

from relsym.dimensions import (
    dim_via_decomposition,
    dim_via_inner_product,
    dim_via_orbit_sum,
    dimension_report,
    is_nonvanishing,
    rank_verification_applies,
)
from relsym.partitions import enumerate_partitions, gamma_size


def test_orbit_sum_examples():
    assert dim_via_orbit_sum(3, 2, (2, 1)) == 4
    assert dim_via_orbit_sum(3, 2, (3,)) == 2
    assert dim_via_orbit_sum(3, 2, (1, 1, 1)) == 0


def test_inner_product_examples():
    assert dim_via_inner_product(3, 2, (2, 1)) == 4
    assert dim_via_inner_product(2, 2, (1, 1)) == 1
    for m in (1, 3, 5):
        assert dim_via_inner_product(m, 0, (m,)) == 1


def test_decomposition_examples():
    assert dim_via_decomposition(3, 2, (2, 1)) == 4
    assert dim_via_decomposition(3, 3, (1, 1, 1)) == 1
    assert dim_via_decomposition(4, 1, (2, 2)) == 0


def test_argument_validation():
    with pytest.raises(ValueError):
        dim_via_orbit_sum(4, 2, (2, 1))
    with pytest.raises(ValueError):
        dim_via_inner_product(3, -1, (2, 1))


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("d", range(0, 7))
def test_triple_agreement_small(m, d):
    for pi in enumerate_partitions(m):
        a = dim_via_orbit_sum(m, d, pi)
        b = dim_via_inner_product(m, d, pi)
        c = dim_via_decomposition(m, d, pi)
        assert a == b == c


@pytest.mark.parametrize("m", range(1, 8))
@pytest.mark.parametrize("d", range(0, 11))
def test_full_space_partition(m, d):
    total = sum(dim_via_inner_product(m, d, pi) for pi in enumerate_partitions(m))
    assert total == gamma_size(m, d)


def test_nonvanishing_examples():
    assert is_nonvanishing(3, 2, (1, 1, 1)) == (False, None)
    assert is_nonvanishing(3, 3, (1, 1, 1)) == (True, (2, 1, 0))
    assert is_nonvanishing(5, 1, (4, 1)) == (True, (1, 0, 0, 0, 0))


@pytest.mark.parametrize("m", range(1, 8))
def test_sign_character_threshold(m):
    sign = (1,) * m
    threshold = m * (m - 1) // 2
    for d in range(0, threshold + 3):
        nonzero, witness = is_nonvanishing(m, d, sign)
        assert nonzero == (d >= threshold)
        assert (witness is not None) == nonzero


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("d", range(0, 7))
def test_nonvanishing_matches_positivity(m, d):
    for pi in enumerate_partitions(m):
        nonzero, witness = is_nonvanishing(m, d, pi)
        assert nonzero == (dim_via_orbit_sum(m, d, pi) > 0)
        if witness is not None:
            assert sum(witness) == d and len(witness) == m


def test_dimension_report_fields():
    report = dimension_report(3, 2, (2, 1), verify_rank=True)
    assert report.dimension == 4
    assert report.dim_orbit_sum == report.dim_inner_product == report.dim_decomposition == 4
    assert report.rank_dimension == 4
    assert report.nonvanishing_witness == (2, 0, 0)

    vanished = dimension_report(3, 2, (1, 1, 1), verify_rank=True)
    assert vanished.dimension == 0
    assert vanished.rank_dimension == 0
    assert vanished.nonvanishing_witness is None


def test_rank_verification_window():
    assert rank_verification_applies(3, 2)
    assert rank_verification_applies(5, 6)
    assert not rank_verification_applies(6, 2)
    assert not rank_verification_applies(5, 40)


def test_report_without_rank():
    report = dimension_report(6, 3, (4, 2))
    assert report.rank_dimension is None
    assert report.dimension == report.dim_orbit_sum
