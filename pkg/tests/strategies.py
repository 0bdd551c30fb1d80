"""Hypothesis strategies for relations and subsets."""
import hypothesis.strategies as st

from roughlattice.relation import Relation, SubsetMask, Universe
from tests.oracle import naive_reflexive_transitive_closure


def _relation(n, pairs):
    return Relation.from_pairs(Universe.of_size(n), sorted(pairs))


@st.composite
def relations(draw, min_size=1, max_size=6):
    n = draw(st.integers(min_size, max_size))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    return Relation(Universe.of_size(n), tuple(rows))


@st.composite
def quasiorders(draw, min_size=1, max_size=6):
    r = draw(relations(min_size, max_size))
    return _relation(r.size, naive_reflexive_transitive_closure(r.size, set(r.pairs())))


@st.composite
def equivalences(draw, min_size=1, max_size=10):
    n = draw(st.integers(min_size, max_size))
    labels = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    return _relation(n, {(x, y) for x in range(n) for y in range(n) if labels[x] == labels[y]})


@st.composite
def partial_orders(draw, min_size=1, max_size=7):
    n = draw(st.integers(min_size, max_size))
    order = draw(st.permutations(range(n)))
    edges = {
        (order[i], order[j])
        for i in range(n)
        for j in range(i + 1, n)
        if draw(st.booleans())
    }
    return _relation(n, naive_reflexive_transitive_closure(n, edges))


@st.composite
def multi_component_quasiorders(draw, max_size=10):
    """Quasiorders built from at least two independent pieces."""
    sizes = draw(st.lists(st.integers(1, 4), min_size=2, max_size=3).filter(lambda s: sum(s) <= max_size))
    n = sum(sizes)
    places = draw(st.permutations(range(n)))
    pairs = set()
    offset = 0
    for size in sizes:
        piece = draw(quasiorders(size, size))
        pairs |= {(places[offset + x], places[offset + y]) for x, y in piece.pairs()}
        offset += size
    return _relation(n, pairs)


def subsets_of(n):
    return st.integers(0, (1 << n) - 1).map(lambda bits: SubsetMask(n, bits))


def v_shaped_poset(bottoms: int, extra: int) -> Relation:
    """``bottoms`` minimal points under one common top, plus ``extra`` isolated points."""
    n = bottoms + 1 + extra
    pairs = {(x, x) for x in range(n)} | {(x, bottoms) for x in range(bottoms)}
    return _relation(n, pairs)
