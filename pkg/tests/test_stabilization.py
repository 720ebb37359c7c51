import pytest

from kronstab.bounds import bound_D1, bound_D2
from kronstab.fixtures import TABLE_1, TABLE_2
from kronstab.stabilization import (
    DIRECTIONS,
    CertificateViolationError,
    StabilizationQuery,
    d_real,
    empirical_scan,
    sequence_term,
)

ONE_BOX = DIRECTIONS["murnaghan"]
SQUARES = DIRECTIONS["squares"]

# cheap reference rows (small degrees): index -> expected d_real
CHEAP_1 = {1: 3, 3: 4, 7: 3, 8: 0, 9: 1}
CHEAP_2 = {4: 3, 6: 2, 9: 1, 10: 0, 11: 1}


def test_sequence_term_examples():
    assert sequence_term(((1,), (1,), (1,)), ONE_BOX, 4) == 1
    assert sequence_term(((1, 1), (2,), (2,)), ONE_BOX, 0) == 0
    row1 = TABLE_1.rows[0].triple
    limit = sequence_term(row1, ONE_BOX, 5)
    for d in (6, 7):
        assert sequence_term(row1, ONE_BOX, d) == limit


def test_certified_index_on_cheap_rows():
    for idx, expected in CHEAP_1.items():
        triple = TABLE_1.rows[idx].triple
        bound = bound_D1(*triple)
        res = d_real(triple, ONE_BOX, bound)
        assert res.d_real == expected
        assert res.d_real <= bound
    for idx, expected in CHEAP_2.items():
        triple = TABLE_2.rows[idx].triple
        bound = bound_D2(*triple)
        res = d_real(triple, SQUARES, bound)
        assert res.d_real == expected


def test_sequence_invariants():
    triple = TABLE_1.rows[1].triple
    res = d_real(triple, ONE_BOX, bound_D1(*triple))
    assert res.horizon == len(res.sequence) - 1
    assert all(v == res.limit for v in res.sequence[res.d_real:])
    if res.d_real > 0:
        assert res.sequence[res.d_real - 1] != res.limit


def test_margin_independence():
    for idx in (1, 7, 8, 9):
        triple = TABLE_1.rows[idx].triple
        bound = bound_D1(*triple)
        values = {
            d_real(triple, ONE_BOX, bound, margin=m).d_real
            for m in range(5)
        }
        assert len(values) == 1


def test_shift_consistency():
    # adding one box to every first row translates the index by at most 1
    for idx in (1, 3, 7, 8, 9):
        lam, mu, nu = TABLE_1.rows[idx].triple
        bound = bound_D1(lam, mu, nu)
        base_res = d_real((lam, mu, nu), ONE_BOX, bound)
        shifted = tuple(
            (p[0] + 1,) + p[1:] for p in (lam, mu, nu)
        )
        shifted_bound = bound_D1(*shifted)
        shifted_res = d_real(shifted, ONE_BOX, max(shifted_bound, bound))
        assert abs(base_res.d_real - shifted_res.d_real) <= 1


def test_certificate_violation_detected():
    # bound 0 is not sound for this triple: the sequence still moves
    triple = TABLE_1.rows[1].triple
    with pytest.raises(CertificateViolationError):
        d_real(triple, ONE_BOX, 0, margin=3)


def test_query_wrapper():
    triple = TABLE_2.rows[10].triple
    q = StabilizationQuery(triple, SQUARES, bound_D2(*triple), certificate="D2")
    res = q.evaluate()
    assert res.certified and res.certificate == "D2"
    assert res.d_real == 0


def test_empirical_scan_is_labeled():
    res = empirical_scan(((2, 1), (2, 1), (2, 1)), ((2,), (1, 1), (1, 1)), 4)
    assert not res.certified
    assert res.certificate.startswith("empirical")
    assert len(res.sequence) == 5


def test_invalid_inputs():
    with pytest.raises(ValueError):
        d_real(((1,), (1,), (1,)), ONE_BOX, -1)
    with pytest.raises(ValueError):
        empirical_scan(((1,), (1,), (1,)), ONE_BOX, -2)
