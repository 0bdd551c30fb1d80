import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given, settings

from roughlattice.approx import (
    ApproxContext,
    RoughSet,
    all_subsets,
    frame_correspondence,
    lower,
    lower_inv,
    lower_sweep,
    rough_pair,
    upper,
    upper_inv,
    upper_sweep,
)
from roughlattice.errors import EnumerationCapError, UniverseMismatchError
from roughlattice.relation import Relation, SubsetMask, Universe
from tests import oracle
from tests.strategies import quasiorders, relations, subsets_of


@st.composite
def relation_with_sets(draw, relation_strategy=None, count=2):
    r = draw(relations() if relation_strategy is None else relation_strategy)
    return (r,) + tuple(draw(subsets_of(r.size)) for _ in range(count))


def _mask(n, indices):
    return SubsetMask.from_indices(n, indices)


def test_fork_rough_pairs(fork_ctx):
    assert rough_pair(fork_ctx, _mask(3, [1])) == RoughSet(_mask(3, [1]), _mask(3, [0, 1]))
    assert rough_pair(fork_ctx, _mask(3, [1, 2])) == RoughSet(_mask(3, [1, 2]), _mask(3, [0, 1, 2]))
    assert upper_inv(fork_ctx, _mask(3, [0])) == _mask(3, [0, 1, 2])
    assert lower_inv(fork_ctx, _mask(3, [0, 1])) == _mask(3, [0, 1])


def test_rough_set_format(fork):
    element = rough_pair(ApproxContext.of(fork), _mask(3, [1]))
    assert element.format() == "({1},{0,1})"
    assert element.format(Universe(("a", "b", "c"))) == "({b},{a,b})"


def test_rough_set_rejects_mixed_sizes():
    with pytest.raises(UniverseMismatchError):
        RoughSet(SubsetMask.empty(2), SubsetMask.empty(3))


def test_operator_rejects_foreign_subset(fork_ctx):
    with pytest.raises(UniverseMismatchError):
        lower(fork_ctx, SubsetMask.full(4))


@settings(max_examples=500)
@given(relation_with_sets(count=1))
def test_operators_match_oracle(case):
    r, x = case
    ctx = ApproxContext.of(r)
    pairs, n, xs = set(r.pairs()), r.size, set(x)
    assert set(lower(ctx, x)) == oracle.naive_lower(n, pairs, xs)
    assert set(upper(ctx, x)) == oracle.naive_upper(n, pairs, xs)
    assert set(lower_inv(ctx, x)) == oracle.naive_lower_inv(n, pairs, xs)
    assert set(upper_inv(ctx, x)) == oracle.naive_upper_inv(n, pairs, xs)


@settings(max_examples=500)
@given(relation_with_sets())
def test_duality_and_distribution(case):
    r, x, y = case
    ctx = ApproxContext.of(r)
    assert lower(ctx, x.complement()) == upper(ctx, x).complement()
    assert lower_inv(ctx, x.complement()) == upper_inv(ctx, x).complement()
    assert lower(ctx, x & y) == lower(ctx, x) & lower(ctx, y)
    assert upper(ctx, x | y) == upper(ctx, x) | upper(ctx, y)
    assert lower_inv(ctx, x & y) == lower_inv(ctx, x) & lower_inv(ctx, y)
    assert upper_inv(ctx, x | y) == upper_inv(ctx, x) | upper_inv(ctx, y)


@settings(max_examples=500)
@given(relation_with_sets())
def test_galois_connections(case):
    r, x, y = case
    ctx = ApproxContext.of(r)
    assert upper(ctx, x).issubset(y) == x.issubset(lower_inv(ctx, y))
    assert upper_inv(ctx, x).issubset(y) == x.issubset(lower(ctx, y))


@settings(max_examples=500)
@given(relation_with_sets(quasiorders(), count=1))
def test_quasiorder_idempotence(case):
    r, x = case
    ctx = ApproxContext.of(r)
    for op in (lower, upper, lower_inv, upper_inv):
        assert op(ctx, op(ctx, x)) == op(ctx, x)
    assert lower(ctx, x).issubset(x) and x.issubset(upper(ctx, x))


@settings(max_examples=500)
@given(relations())
def test_frame_correspondence_agrees(r):
    report = frame_correspondence(r)
    assert [row.name for row in report.rows] == ["left_total", "reflexive", "symmetric", "transitive"]
    assert all(row.agrees for row in report.rows)


def test_frame_correspondence_values(vee):
    report = frame_correspondence(vee)
    assert report.row("reflexive").relational
    assert report.row("transitive").approximational
    assert not report.row("symmetric").relational


def test_frame_correspondence_cap():
    with pytest.raises(EnumerationCapError):
        frame_correspondence(Relation.identity(Universe.of_size(5)), cap=4)


@given(relations())
def test_sweeps_match_scalar_operators(r):
    ctx = ApproxContext.of(r)
    xs = all_subsets(r.size)
    lo, up = lower_sweep(r.rows, xs), upper_sweep(r.rows, xs)
    for bits in range(1 << r.size):
        x = SubsetMask(r.size, bits)
        assert int(lo[bits]) == lower(ctx, x).bits
        assert int(up[bits]) == upper(ctx, x).bits
    assert lo.dtype == np.int64


@settings(max_examples=500)
@given(relation_with_sets(quasiorders(), count=1))
def test_mixed_operators_fix_each_other(case):
    r, x = case
    ctx = ApproxContext.of(r)
    assert lower_inv(ctx, upper(ctx, x)) == upper(ctx, x)
    assert lower(ctx, upper_inv(ctx, x)) == upper_inv(ctx, x)
    assert upper_inv(ctx, lower(ctx, x)) == lower(ctx, x)
    assert upper(ctx, lower_inv(ctx, x)) == lower_inv(ctx, x)


@settings(max_examples=500)
@given(relation_with_sets())
def test_operators_are_monotone(case):
    r, x, z = case
    y = x | z
    ctx = ApproxContext.of(r)
    for op in (lower, upper, lower_inv, upper_inv):
        assert op(ctx, x).issubset(op(ctx, y))
