"""Completely join- and meet-irreducible rough sets and decompositions into them.

J has two generator families:

  SINGLETON_UPPER x:  (empty, upper({x}))                  for x with |R(x)| >= 2
  NEIGHBOURHOOD x:    (R(x), upper(R(x)))                   for every x

and M is the image of J under the de Morgan map.
"""
import enum
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from roughlattice.approx import ApproxContext, RoughSet, upper, upper_inv
from roughlattice.complement import de_morgan
from roughlattice.lattice import ensure_quasiorder
from roughlattice.relation import SubsetMask

LOGGER = logging.getLogger(__name__)


class OriginKind(enum.Enum):
    SINGLETON_UPPER = "singleton_upper"
    NEIGHBOURHOOD = "neighbourhood"


@dataclass(frozen=True)
class Origin:
    kind: OriginKind
    point: int


@dataclass(frozen=True)
class IrreducibleCatalog:
    join_irr: Tuple[RoughSet, ...]
    meet_irr: Tuple[RoughSet, ...]
    origin: Tuple[Origin, ...]  # aligned with join_irr

    def origin_of(self, element: RoughSet) -> Origin:
        return self.origin[self.join_irr.index(element)]


def _singleton_upper(ctx: ApproxContext, x: int) -> RoughSet:
    n = ctx.size
    return RoughSet(SubsetMask.empty(n), upper(ctx, SubsetMask.from_indices(n, [x])))


def _neighbourhood(ctx: ApproxContext, x: int) -> RoughSet:
    around = upper_inv(ctx, SubsetMask.from_indices(ctx.size, [x]))
    return RoughSet(around, upper(ctx, around))


def _generators(ctx: ApproxContext) -> List[Tuple[RoughSet, Origin]]:
    rows = ctx.relation.rows
    generated = [
        (_singleton_upper(ctx, x), Origin(OriginKind.SINGLETON_UPPER, x))
        for x in range(ctx.size)
        if rows[x].bit_count() >= 2
    ]
    generated += [(_neighbourhood(ctx, x), Origin(OriginKind.NEIGHBOURHOOD, x)) for x in range(ctx.size)]
    return generated


def join_irreducibles(ctx: ApproxContext) -> IrreducibleCatalog:
    ensure_quasiorder(ctx)
    first: Dict[RoughSet, Origin] = {}
    for element, origin in _generators(ctx):
        first.setdefault(element, origin)
    join_irr = tuple(sorted(first, key=lambda element: element.sort_key))
    meet_irr = tuple(sorted((de_morgan(ctx, e) for e in join_irr), key=lambda element: element.sort_key))
    LOGGER.debug("%d join-irreducible rough sets", len(join_irr))
    return IrreducibleCatalog(join_irr, meet_irr, tuple(first[element] for element in join_irr))


def meet_irreducibles(ctx: ApproxContext) -> List[RoughSet]:
    return list(join_irreducibles(ctx).meet_irr)


def join_decomposition(ctx: ApproxContext, x: SubsetMask) -> List[RoughSet]:
    """Members of J whose join is the rough set of ``x``.

    The family depends on ``x`` itself; only its join is determined by the
    rough set of ``x``. For the empty set the family is empty.
    """
    ensure_quasiorder(ctx)
    ctx.check(x)
    family = [_singleton_upper(ctx, y) for y in x if ctx.relation.rows[y].bit_count() >= 2]
    for y in range(ctx.size):
        if ctx.relation.successors(y).issubset(x):
            family.append(_neighbourhood(ctx, y))
    return list(dict.fromkeys(family))


def meet_decomposition(ctx: ApproxContext, x: SubsetMask) -> List[RoughSet]:
    """Members of M whose meet is the rough set of ``x``."""
    return [de_morgan(ctx, element) for element in join_decomposition(ctx, x.complement())]
