from fractions import Fraction

import pytest

from kronstab.partitions import dim_gl, partitions_of
from kronstab.plethysm import (
    DegreeCapError,
    plethysm_coeff,
    plethysm_powersum,
    powersum_to_schur,
    schur_to_powersum,
)

from oracles import plethysm_oracle


def test_schur_powersum_round_trip():
    for n in range(1, 7):
        for lam in partitions_of(n):
            back = powersum_to_schur(schur_to_powersum(lam))
            assert back.as_dict() == {lam: Fraction(1)}


def test_against_weight_multiset_oracle():
    for la in range(1, 7):
        for lb in range(1, 7):
            if la * lb > 6:
                continue
            for lam in partitions_of(la):
                for mu in partitions_of(lb):
                    for nu in partitions_of(la * lb):
                        assert plethysm_coeff(lam, mu, nu) == plethysm_oracle(
                            lam, mu, nu
                        )


def test_symmetric_square_of_inner_shape():
    # composing a one-row outer shape of size d with mu always contains
    # the stretched shape d*mu exactly once
    for d in range(1, 4):
        for size in range(1, 5):
            for mu in partitions_of(size):
                target = tuple(d * p for p in mu)
                assert plethysm_coeff((d,), mu, target) == 1


def test_single_row_target_vanishes_for_tall_inner():
    for d in range(1, 4):
        for size in range(2, 5):
            for mu in partitions_of(size):
                if len(mu) < 2:
                    continue
                assert plethysm_coeff((d,), mu, (d * size,)) == 0


def test_dimension_consistency():
    for lam, mu in (((2,), (2,)), ((1, 1), (2, 1)), ((2,), (2, 2)), ((2, 1), (2,))):
        deg = sum(lam) * sum(mu)
        assert deg <= 8
        comp = plethysm_powersum(schur_to_powersum(lam), schur_to_powersum(mu))
        schur = powersum_to_schur(comp)
        for n in range(1, 4):
            total = sum(c * dim_gl(nu, n) for nu, c in schur.coeffs)
            assert total == dim_gl(lam, dim_gl(mu, n))


def test_size_mismatch_is_zero():
    assert plethysm_coeff((2,), (2,), (3,)) == 0


def test_degree_cap():
    with pytest.raises(DegreeCapError):
        plethysm_coeff((5,), (5,), (25,))
