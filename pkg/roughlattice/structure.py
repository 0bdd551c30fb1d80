"""Global structure of RS: component decomposition, direct indecomposability
and the Stone property.

RS is a Stone lattice exactly when ``compose(inverse(R), R)`` equals the
smallest equivalence containing R; ``is_stone`` decides this on the relation
without enumerating RS.
"""
import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

from roughlattice.approx import ApproxContext, RoughSet
from roughlattice.complement import pseudocomplement
from roughlattice.config import ENUMERATION_CAP
from roughlattice.errors import ComponentError, NotAnEquivalenceError, NotAPartialOrderError, UniverseMismatchError
from roughlattice.lattice import RsLattice, enumerate_rs, join_family
from roughlattice.relation import (
    ComponentPartition,
    Relation,
    SubsetMask,
    compose,
    connected_components,
    equivalence_join,
    inverse,
    properties,
    require_quasiorder,
)

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class StoneWitness:
    point: int
    composed: SubsetMask  # (R^-1 o R)(point)
    joined: SubsetMask  # smallest equivalence containing R, at point


class StoneVerdict(NamedTuple):
    holds: bool
    witness: Optional[StoneWitness]


class EquivalenceShape(NamedTuple):
    singletons: int
    larger: int

    @property
    def predicted_size(self) -> int:
        return 2 ** self.singletons * 3 ** self.larger


@dataclass(frozen=True)
class StructureReport:
    components: ComponentPartition
    per_component_rs_size: Tuple[Optional[int], ...]
    is_stone: bool
    stone_witness: Optional[StoneWitness]
    is_directly_indecomposable: bool
    equivalence_shape: Optional[EquivalenceShape]
    down_directed_components: Optional[Tuple[bool, ...]]


def is_stone(r: Relation) -> StoneVerdict:
    require_quasiorder(r)
    composed = compose(inverse(r), r)
    joined = equivalence_join(r)
    for x in range(r.size):
        if composed.rows[x] != joined.rows[x]:
            witness = StoneWitness(x, composed.successors(x), joined.successors(x))
            LOGGER.debug("not Stone at %d: %s != %s", x, witness.composed.format(), witness.joined.format())
            return StoneVerdict(False, witness)
    return StoneVerdict(True, None)


def component_of(partition: ComponentPartition, mask: SubsetMask) -> Optional[SubsetMask]:
    """The component holding all of a nonempty ``mask``, or None."""
    for block in partition.blocks:
        if mask and mask.issubset(block):
            return block
    return None


def restrict_rough(a: RoughSet, c: SubsetMask, components: ComponentPartition) -> RoughSet:
    if c not in components.blocks:
        raise ComponentError(f"{c.format()} is not a connected component")
    return RoughSet(a.lower & c, a.upper & c)


def combine_rough(parts: Sequence[Tuple[SubsetMask, RoughSet]]) -> RoughSet:
    if not parts:
        raise ComponentError("nothing to combine")
    n = parts[0][0].universe_size
    covered = lower = upper = 0
    for component, part in parts:
        if component.universe_size != n or part.universe_size != n:
            raise UniverseMismatchError(n, part.universe_size, "component part")
        if component.bits & covered:
            raise ComponentError(f"component {component.format()} overlaps another part")
        if not (part.lower.issubset(component) and part.upper.issubset(component)):
            raise ComponentError(f"{part.format()} is not a rough set on {component.format()}")
        covered |= component.bits
        lower |= part.lower.bits
        upper |= part.upper.bits
    if covered != (1 << n) - 1:
        raise ComponentError("components do not cover the universe")
    return RoughSet(SubsetMask(n, lower), SubsetMask(n, upper))


def equivalence_shape(r: Relation) -> EquivalenceShape:
    if not properties(r).equivalence:
        raise NotAnEquivalenceError("equivalence_shape needs an equivalence relation")
    blocks = connected_components(r).blocks
    singletons = sum(1 for block in blocks if len(block) == 1)
    return EquivalenceShape(singletons, len(blocks) - singletons)


def down_directed_check(r: Relation) -> List[Tuple[SubsetMask, bool]]:
    """For each component: do any two of its points have a common lower bound?"""
    if not properties(r).partial_order:
        raise NotAPartialOrderError("down_directed_check needs a partial order")
    below = inverse(r).rows
    result = []
    for block in connected_components(r).blocks:
        points = block.indices()
        directed = all(below[a] & below[b] for i, a in enumerate(points) for b in points[i + 1:])
        result.append((block, directed))
    return result


def verify_stone_by_enumeration(ctx: ApproxContext, lattice: RsLattice) -> bool:
    """Check x* v x** = top on every enumerated element."""
    for element in lattice.elements:
        star = pseudocomplement(ctx, element)
        if join_family(ctx, [star, pseudocomplement(ctx, star)]) != lattice.top:
            LOGGER.info("x* v x** misses top at %s", element.format())
            return False
    return True


def analyze(r: Relation, cap: Optional[int] = None) -> StructureReport:
    require_quasiorder(r)
    cap = ENUMERATION_CAP if cap is None else cap
    ctx = ApproxContext.of(r)
    partition = ctx.components
    sizes = []
    for block in partition.blocks:
        if len(block) > cap:
            sizes.append(None)
        else:
            sizes.append(len(enumerate_rs(ctx, cap=cap, within=block)))
    verdict = is_stone(r)
    report = ctx.report
    return StructureReport(
        components=partition,
        per_component_rs_size=tuple(sizes),
        is_stone=verdict.holds,
        stone_witness=verdict.witness,
        is_directly_indecomposable=len(partition) == 1,
        equivalence_shape=equivalence_shape(r) if report.equivalence else None,
        down_directed_components=(
            tuple(flag for _, flag in down_directed_check(r)) if report.partial_order else None
        ),
    )
