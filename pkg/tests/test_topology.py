import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from roughlattice.approx import ApproxContext, lower, lower_inv, upper, upper_inv
from roughlattice.errors import EnumerationCapError, NotAQuasiorderError, TopologyKindError
from roughlattice.relation import Relation, SubsetMask, Universe, inverse
from roughlattice.topology import (
    TopologyKind,
    closure_op,
    enumerate_opens,
    interior,
    is_open,
    neighbourhood,
    quasiorder_of,
    topology_down,
    topology_up,
)
from tests.strategies import quasiorders, subsets_of


def test_fork_up_base(fork):
    t = topology_up(fork)
    assert t.kind is TopologyKind.UP
    assert [member.indices() for member in t.base] == [[1], [2], [0, 1, 2]]
    assert neighbourhood(t, SubsetMask.from_indices(3, [0])) == SubsetMask.full(3)


def test_fork_opens(fork):
    opens = [x.indices() for x in enumerate_opens(topology_up(fork))]
    assert opens == [[], [1], [2], [1, 2], [0, 1, 2]]


def test_requires_quasiorder():
    r = Relation.from_pairs(Universe.of_size(2), [(0, 1)])
    with pytest.raises(NotAQuasiorderError):
        topology_up(r)


def test_down_topology_has_no_specialisation_order(fork):
    with pytest.raises(TopologyKindError):
        quasiorder_of(topology_down(fork))


def test_enumerate_opens_cap(fork):
    with pytest.raises(EnumerationCapError):
        enumerate_opens(topology_up(fork), cap=2)


@given(quasiorders(max_size=7))
def test_specialisation_order_round_trip(r):
    assert quasiorder_of(topology_up(r)) == r
    assert quasiorder_of(topology_up(inverse(r))) == inverse(r)


@settings(max_examples=300)
@given(st.data())
def test_interior_and_closure_are_approximations(data):
    r = data.draw(quasiorders())
    x = data.draw(subsets_of(r.size))
    ctx = ApproxContext.of(r)
    up, down = topology_up(r), topology_down(r)
    assert interior(up, x) == lower(ctx, x)
    assert closure_op(up, x) == upper(ctx, x)
    assert interior(down, x) == lower_inv(ctx, x)
    assert closure_op(down, x) == upper_inv(ctx, x)
    assert is_open(up, x) == is_open(down, x.complement())


@given(quasiorders())
def test_opens_are_fixed_points_of_lower(r):
    ctx = ApproxContext.of(r)
    expected = [
        SubsetMask(r.size, bits)
        for bits in range(1 << r.size)
        if lower(ctx, SubsetMask(r.size, bits)) == SubsetMask(r.size, bits)
    ]
    assert enumerate_opens(topology_up(r)) == expected


@settings(max_examples=200)
@given(quasiorders(max_size=5))
def test_opens_form_a_topology(r):
    for t in (topology_up(r), topology_down(r)):
        opens = set(enumerate_opens(t))
        assert SubsetMask.empty(r.size) in opens and SubsetMask.full(r.size) in opens
        for a in opens:
            for b in opens:
                assert a | b in opens
                assert a & b in opens
        assert all(is_open(t, member) for member in t.base)


@given(quasiorders(max_size=6))
def test_base_is_irredundant(r):
    for t in (topology_up(r), topology_down(r)):
        opens = enumerate_opens(t)
        assert len(set(t.base)) == len(t.base)
        for member in t.base:
            inside = SubsetMask.empty(r.size)
            for o in opens:
                if o.issubset(member) and o != member:
                    inside = inside | o
            assert inside != member


@given(quasiorders(max_size=6))
def test_up_and_down_topologies_are_dual(r):
    up, down = topology_up(r), topology_down(r)
    assert down.base == topology_up(inverse(r)).base
    up_opens = enumerate_opens(up)
    assert sorted(o.complement().bits for o in up_opens) == [o.bits for o in enumerate_opens(down)]


@settings(max_examples=300)
@given(st.data())
def test_neighbourhood_is_a_closure(data):
    r = data.draw(quasiorders())
    x = data.draw(subsets_of(r.size))
    z = data.draw(subsets_of(r.size))
    y = x | z
    for t in (topology_up(r), topology_down(r)):
        hull = neighbourhood(t, x)
        assert x.issubset(hull)
        assert hull.issubset(neighbourhood(t, y))
        assert neighbourhood(t, hull) == hull
        assert is_open(t, hull)


@given(quasiorders(max_size=6))
def test_neighbourhood_fixes_opens(r):
    for t in (topology_up(r), topology_down(r)):
        for o in enumerate_opens(t):
            assert neighbourhood(t, o) == o
