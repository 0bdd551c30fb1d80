"""The lattice of rough sets of a quasiorder.

Meets and joins are taken coordinatewise. ``witness_meet`` and
``witness_join`` build, for any finite family of subsets, a single subset
whose rough set is that coordinatewise meet (join), so the result is a
member of RS without enumerating anything. Both rely on splitting a
successor-closed set into two disjoint cofinal parts, done here
constructively: a set is cofinal in a finite quasiordered ground set iff it
meets every maximal class, so taking two distinct points of each maximal
class is enough.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from roughlattice.approx import (
    ApproxContext,
    RoughSet,
    all_subsets,
    gather_bits,
    lower,
    lower_sweep,
    spread_bits,
    upper,
    upper_sweep,
)
from roughlattice.config import ENUMERATION_CAP, REALIZABILITY_SEARCH_CAP, UNIVERSE_CAP
from roughlattice.errors import (
    CofinalSplitError,
    ComponentError,
    EnumerationCapError,
    UniverseMismatchError,
    WitnessConstructionError,
)
from roughlattice.relation import SubsetMask, Universe, require_quasiorder

LOGGER = logging.getLogger(__name__)


def ensure_quasiorder(ctx: ApproxContext) -> None:
    if not ctx.report.quasiorder:
        require_quasiorder(ctx.relation)


@dataclass(frozen=True)
class RsLattice:
    universe: Universe
    within: SubsetMask
    elements: Tuple[RoughSet, ...]
    representatives: Tuple[SubsetMask, ...]
    bottom: RoughSet
    top: RoughSet

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item: RoughSet) -> bool:
        return item in self.positions

    @cached_property
    def positions(self) -> Dict[RoughSet, int]:
        return {element: i for i, element in enumerate(self.elements)}

    def index(self, element: RoughSet) -> int:
        return self.positions[element]

    def representative(self, element: RoughSet) -> SubsetMask:
        return self.representatives[self.positions[element]]

    @cached_property
    def order_matrix(self) -> np.ndarray:
        """``order_matrix[i, j]`` is true iff elements[i] <= elements[j]."""
        positions = self.within.indices()
        lo = np.array([gather_bits(e.lower.bits, positions) for e in self.elements], dtype=np.int64)
        up = np.array([gather_bits(e.upper.bits, positions) for e in self.elements], dtype=np.int64)
        matrix = ((lo[:, None] & ~lo[None, :]) == 0) & ((up[:, None] & ~up[None, :]) == 0)
        matrix.setflags(write=False)
        return matrix

    def cover_edges(self) -> List[Tuple[int, int]]:
        """Hasse diagram edges (i, j): elements[j] covers elements[i]."""
        strict = self.order_matrix & ~np.eye(len(self), dtype=bool)
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self)))
        graph.add_edges_from(zip(*(axis.tolist() for axis in np.nonzero(strict))))
        return sorted(nx.transitive_reduction(graph).edges())


def enumerate_rs(ctx: ApproxContext, cap: Optional[int] = None, within: Optional[SubsetMask] = None) -> RsLattice:
    """Rough sets of all subsets of ``within`` (default: the whole universe).

    ``within`` must be closed under successors, e.g. a connected component;
    the result is then the rough-set lattice of the relation restricted to
    ``within``. The sweep runs on local indices, so only |within| is capped.
    """
    ensure_quasiorder(ctx)
    cap = min(ENUMERATION_CAP if cap is None else cap, UNIVERSE_CAP)
    n = ctx.size
    within = SubsetMask.full(n) if within is None else within
    ctx.check(within)
    positions = within.indices()
    rows = ctx.relation.rows
    leaking = [a for a in positions if rows[a] & ~within.bits]
    if leaking:
        raise ComponentError(f"{within.format()} is not closed under successors of {leaking[0]}")
    m = len(positions)
    if m > cap:
        raise EnumerationCapError(m, cap)

    local_rows = [gather_bits(rows[a], positions) for a in positions]
    xs = all_subsets(m)
    lo = lower_sweep(local_rows, xs)
    up = upper_sweep(local_rows, xs)
    keys, first = np.unique((lo << m) | up, return_index=True)
    mask = (1 << m) - 1
    found = sorted(
        (
            (
                RoughSet(
                    SubsetMask(n, spread_bits(key >> m, positions)),
                    SubsetMask(n, spread_bits(key & mask, positions)),
                ),
                SubsetMask(n, spread_bits(rep, positions)),
            )
            for key, rep in zip(keys.tolist(), xs[first].tolist())
        ),
        key=lambda item: item[0].sort_key,
    )
    LOGGER.debug("swept %d subsets into %d rough sets", len(xs), len(found))
    return RsLattice(
        universe=ctx.relation.universe,
        within=within,
        elements=tuple(element for element, _ in found),
        representatives=tuple(rep for _, rep in found),
        bottom=RoughSet(SubsetMask.empty(n), SubsetMask.empty(n)),
        top=RoughSet(within, within),
    )


def leq(a: RoughSet, b: RoughSet) -> bool:
    return a.lower.issubset(b.lower) and a.upper.issubset(b.upper)


def _check_family(ctx: ApproxContext, family: Sequence) -> None:
    if not family:
        raise ValueError("family must be nonempty")
    for member in family:
        size = member.universe_size
        if size != ctx.size:
            raise UniverseMismatchError(ctx.size, size, "family member")


def meet_family(ctx: ApproxContext, family: Sequence[RoughSet]) -> RoughSet:
    _check_family(ctx, family)
    lo, up = family[0].lower, family[0].upper
    for member in family[1:]:
        lo, up = lo & member.lower, up & member.upper
    return RoughSet(lo, up)


def join_family(ctx: ApproxContext, family: Sequence[RoughSet]) -> RoughSet:
    _check_family(ctx, family)
    lo, up = family[0].lower, family[0].upper
    for member in family[1:]:
        lo, up = lo | member.lower, up | member.upper
    return RoughSet(lo, up)


@dataclass(frozen=True)
class CofinalSplit:
    ground: SubsetMask
    part_a: SubsetMask
    part_b: SubsetMask


def is_cofinal(ctx: ApproxContext, x: SubsetMask, ground: SubsetMask) -> bool:
    """``x`` lies in ``ground`` and every element of ``ground`` has a successor in ``x``."""
    return x.issubset(ground) and ground.issubset(upper(ctx, x))


def _maximal_classes(ctx: ApproxContext, ground: SubsetMask) -> List[List[int]]:
    """Maximal strongly connected classes of the relation restricted to ``ground``."""
    graph = nx.DiGraph()
    graph.add_nodes_from(ground)
    for x in ground:
        graph.add_edges_from((x, y) for y in ctx.relation.successors(x) & ground if y != x)
    condensed = nx.condensation(graph)
    classes = sorted(
        sorted(condensed.nodes[node]["members"]) for node in condensed if condensed.out_degree(node) == 0
    )
    LOGGER.debug("ground %s has maximal classes %s", ground.format(), classes)
    return classes


def _check_successor_counts(ctx: ApproxContext, ground: SubsetMask, k: int) -> None:
    for x in ground:
        if len(ctx.relation.successors(x) & ground) < k:
            raise CofinalSplitError(x, f"fewer than {k} successors inside the ground set")


def cofinal_split(ctx: ApproxContext, ground: SubsetMask) -> CofinalSplit:
    """Two disjoint subsets of ``ground``, each cofinal in it."""
    ensure_quasiorder(ctx)
    ctx.check(ground)
    n = ctx.size
    for x in ground:
        if not ctx.relation.successors(x).issubset(ground):
            raise CofinalSplitError(x, "successors leave the ground set")
    _check_successor_counts(ctx, ground, 2)

    a_bits = b_bits = 0
    for members in _maximal_classes(ctx, ground):
        a_bits |= 1 << members[0]
        b_bits |= 1 << members[1]
    return CofinalSplit(ground, SubsetMask(n, a_bits), SubsetMask(n, b_bits))


def cofinal_partition(ctx: ApproxContext, ground: SubsetMask, k: int) -> List[SubsetMask]:
    """Partition ``ground`` into ``k`` cofinal parts.

    Possible iff every element has at least ``k`` successors inside
    ``ground``. Part i (i >= 1) takes the i-th smallest point of every
    maximal class; part 0 takes everything else.
    """
    ensure_quasiorder(ctx)
    ctx.check(ground)
    if k < 1:
        raise ValueError("k must be at least 1")
    _check_successor_counts(ctx, ground, k)
    n = ctx.size
    parts = [0] * k
    for members in _maximal_classes(ctx, ground):
        for i in range(1, k):
            parts[i] |= 1 << members[i]
    taken = 0
    for bits in parts[1:]:
        taken |= bits
    parts[0] = ground.bits & ~taken
    return [SubsetMask(n, bits) for bits in parts]


def _checked_split(ctx: ApproxContext, ground: SubsetMask) -> CofinalSplit:
    split = cofinal_split(ctx, ground)
    if not split.part_a.isdisjoint(split.part_b) or not (
        is_cofinal(ctx, split.part_a, ground) and is_cofinal(ctx, split.part_b, ground)
    ):
        raise WitnessConstructionError(f"cofinal split of {ground.format()} is invalid: {split}")
    return split


def _check_two_successors(ctx: ApproxContext, region: SubsetMask, name: str) -> None:
    for a in region:
        if len(ctx.relation.successors(a)) < 2:
            raise WitnessConstructionError(f"element {a} of {name} has fewer than two successors")


def witness_meet(ctx: ApproxContext, subsets: Sequence[SubsetMask]) -> SubsetMask:
    """A set W whose rough set is the coordinatewise meet of the rough sets of ``subsets``."""
    ensure_quasiorder(ctx)
    _check_family(ctx, subsets)
    common = subsets[0]
    common_upper = upper(ctx, subsets[0])
    for x in subsets[1:]:
        common = common & x
        common_upper = common_upper & upper(ctx, x)
    z = common_upper - upper(ctx, common)
    _check_two_successors(ctx, z, "Z")
    split = _checked_split(ctx, lower(ctx, z))
    w = common | (z - split.part_a)
    LOGGER.debug("witness_meet: Z=%s A=%s W=%s", z.format(), split.part_a.format(), w.format())
    return w


def witness_join(ctx: ApproxContext, subsets: Sequence[SubsetMask]) -> SubsetMask:
    """A set V whose rough set is the coordinatewise join of the rough sets of ``subsets``."""
    ensure_quasiorder(ctx)
    _check_family(ctx, subsets)
    everything = subsets[0]
    lowers = lower(ctx, subsets[0])
    for x in subsets[1:]:
        everything = everything | x
        lowers = lowers | lower(ctx, x)
    reach = upper(ctx, everything)
    s = reach - lowers
    _check_two_successors(ctx, s, "S")
    h = SubsetMask.from_indices(ctx.size, (a for a in s if not ctx.relation.successors(a).issubset(reach)))
    split = _checked_split(ctx, lower(ctx, s))
    v = lowers | h | split.part_a
    LOGGER.debug("witness_join: S=%s H=%s A=%s V=%s", s.format(), h.format(), split.part_a.format(), v.format())
    return v


def is_realizable(ctx: ApproxContext, pair: RoughSet, cap: Optional[int] = None) -> Optional[SubsetMask]:
    """Some X with rough set ``pair``, searched between pair.lower and pair.upper, or None."""
    cap = REALIZABILITY_SEARCH_CAP if cap is None else cap
    ctx.check(pair.lower)
    ctx.check(pair.upper)
    if not pair.lower.issubset(pair.upper):
        return None
    free = (pair.upper - pair.lower).indices()
    if len(free) > cap:
        raise EnumerationCapError(len(free), cap, "search region")
    # candidates are pair.lower | S, S a local pattern over the free points
    base = pair.lower.bits
    free_bits = pair.upper.bits & ~base
    codes = all_subsets(len(free))
    ok = np.ones(len(codes), dtype=bool)
    for a, row in enumerate(ctx.relation.rows):
        rest = row & ~base
        if rest & ~free_bits:
            in_lower = False
        else:
            need = gather_bits(rest, free)
            in_lower = (codes & need) == need
        if row & base:
            in_upper = True
        else:
            in_upper = (codes & gather_bits(row & free_bits, free)) != 0
        ok &= in_lower == bool(base >> a & 1)
        ok &= in_upper == bool(pair.upper.bits >> a & 1)
        if not ok.any():
            return None
    hits = np.flatnonzero(ok)
    return SubsetMask(ctx.size, base | spread_bits(int(hits[0]), free))


def self_dual_map(lattice: RsLattice) -> List[int]:
    """Index permutation of A(X) -> A(X^c) (complement taken inside ``lattice.within``)."""
    within = lattice.within
    return [
        lattice.index(RoughSet(within - element.upper, within - element.lower)) for element in lattice.elements
    ]
