"""Extending-aggregate search and the cloning extension step."""

from __future__ import annotations

import pytest

from symconf.bdc import shift_truncate, split
from symconf.construct import bose_ruler, ruzsa_ruler
from symconf.errors import ExtensionUnavailable, InvalidAggregate
from symconf.extend import EAggregate, extend_chain, extend_once, find_aggregate
from symconf.matrix import from_ruler, reduce, verify
from symconf.ruler import Ruler, SearchStatus

FANO = from_ruler(Ruler((0, 1, 3)), 7).dense()
BOSE4_15_4 = split(from_ruler(bose_ruler(4), 15), 5).dense()


# -- find_aggregate -----------------------------------------------------------


def test_fano_admits_no_aggregate():
    # deficiency 0: every two lines meet, so no disjoint line pair exists
    assert find_aggregate(FANO).status is SearchStatus.NOT_FOUND


def test_k2_matrix_always_has_aggregate():
    m = reduce(FANO, 1)  # 7_2
    res = find_aggregate(m)
    assert res.found
    assert len(res.aggregate.rows) == 1


def test_bose_split_has_aggregate():
    res = find_aggregate(BOSE4_15_4)
    assert res.found
    agg = res.aggregate
    assert len(agg.rows) == 3 and len(agg.cols) == 3
    for u, r in enumerate(agg.rows):
        assert BOSE4_15_4.entry(r, agg.cols[agg.pi[u]]) == 1


def test_find_aggregate_respects_exclusions():
    base = find_aggregate(BOSE4_15_4).aggregate
    res = find_aggregate(BOSE4_15_4, exclude_rows=set(base.rows))
    assert res.found
    assert not set(res.aggregate.rows) & set(base.rows)


def test_find_aggregate_budget_verdict():
    res = find_aggregate(BOSE4_15_4, budget=1)
    assert res.status in (SearchStatus.BUDGET_EXCEEDED, SearchStatus.FOUND)
    res0 = find_aggregate(FANO, budget=10**9)
    assert res0.status is SearchStatus.NOT_FOUND


# -- extend_once ---------------------------------------------------------------


def test_extend_once_grows_bose_start():
    agg = find_aggregate(BOSE4_15_4).aggregate
    out = extend_once(BOSE4_15_4, agg)
    rep = verify(out)
    assert (rep.v, rep.k) == (16, 4)
    # new row carries the aggregate's columns plus the new point
    assert out.rows[-1] == (1 << 15) + sum(1 << c for c in agg.cols)
    assert out.rows[-1].bit_count() == 4


def test_extend_once_rejects_corrupt_aggregate():
    agg = find_aggregate(BOSE4_15_4).aggregate
    bad = EAggregate(agg.rows, agg.cols, tuple(reversed(agg.pi)))
    with pytest.raises(InvalidAggregate):
        extend_once(BOSE4_15_4, bad)
    with pytest.raises(InvalidAggregate):
        extend_once(BOSE4_15_4, EAggregate(agg.rows[:2], agg.cols, agg.pi))


# -- extend_chain ----------------------------------------------------------------


def test_chain_zero_is_identity():
    assert extend_chain(BOSE4_15_4, 0) is BOSE4_15_4


def test_chain_through_twenty():
    current = BOSE4_15_4
    for theta in range(1, 6):
        out = extend_chain(BOSE4_15_4, theta)
        rep = verify(out)
        assert (rep.v, rep.k) == (15 + theta, 4)
        current = out
    assert verify(current).v == 20


def test_chain_unavailable_on_fano():
    with pytest.raises(ExtensionUnavailable) as exc:
        extend_chain(FANO, 1)
    assert exc.value.step == 1


def test_chain_disjointness_of_consumed_indices():
    # replay the chain step by step and record the consumed index sets
    used_rows: set[int] = set()
    used_cols: set[int] = set()
    current = BOSE4_15_4
    for _ in range(5):
        res = find_aggregate(current, exclude_rows=used_rows, exclude_cols=used_cols)
        assert res.found
        agg = res.aggregate
        assert not set(agg.rows) & used_rows
        assert not set(agg.cols) & used_cols
        used_rows |= set(agg.rows)
        used_cols |= set(agg.cols)
        current = extend_once(current, agg)
    assert verify(current).v == 20


@pytest.mark.parametrize("q,c", [(4, 3), (4, 5), (5, 4), (5, 6), (7, 4), (7, 7)])
def test_corollary_chain_lengths_bose(q, c):
    # start with block weight vector (0, 1, ..., 1): d = q - 1, t = q + 1
    b = split(from_ruler(bose_ruler(q), q * q - 1), q + 1)
    start = shift_truncate(b, b.weight_vector.index(0), c)
    m = start.dense()
    theta = c + 1
    out = extend_chain(m, theta)
    rep = verify(out)
    assert (rep.v, rep.k) == (c * (q - 1) + theta, c - 1)


@pytest.mark.parametrize("p,c", [(5, 3), (5, 4), (7, 4), (7, 6)])
def test_corollary_chain_lengths_ruzsa(p, c):
    # all-ones weight vector: t = p - 1 blocks of size d = p
    b = split(from_ruler(ruzsa_ruler(p), p * p - p), p - 1)
    assert set(b.weight_vector) == {1}
    start = shift_truncate(b, 0, c)
    out = extend_chain(start.dense(), c + 1)
    rep = verify(out)
    assert (rep.v, rep.k) == (c * p + c + 1, c)


def test_every_intermediate_of_a_chain_verifies():
    current = BOSE4_15_4
    used_rows: set[int] = set()
    used_cols: set[int] = set()
    for step in range(5):
        res = find_aggregate(current, exclude_rows=used_rows, exclude_cols=used_cols)
        agg = res.aggregate
        used_rows |= set(agg.rows)
        used_cols |= set(agg.cols)
        current = extend_once(current, agg)  # re-verifies internally
        assert verify(current).v == 16 + step
