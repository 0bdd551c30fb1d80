"""De Morgan map, pseudocomplement and dual pseudocomplement on RS.

    de_morgan(A(X))             = A(X^c) = (upper(X)^c, lower(X)^c)
    pseudocomplement(A(X))      = A(upper_inv(upper(X))^c)
    dual_pseudocomplement(A(X)) = A(lower_inv(lower(X))^c)

The pseudocomplement depends on the upper component only and the dual one on
the lower component only, so neither needs a representative subset.
An element is complemented iff it is exact iff its lower component is a union
of connected components.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional

import pandas as pd

from roughlattice.approx import ApproxContext, RoughSet, lower_inv, rough_pair, upper_inv
from roughlattice.lattice import RsLattice, enumerate_rs, join_family, meet_family
from roughlattice.relation import SubsetMask

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComplementReport:
    element: RoughSet
    de_morgan: RoughSet
    pseudo: RoughSet
    dual_pseudo: RoughSet
    is_exact: bool
    is_complemented: bool


def de_morgan(ctx: ApproxContext, a: RoughSet) -> RoughSet:
    ctx.check(a.lower)
    return RoughSet(a.upper.complement(), a.lower.complement())


def pseudocomplement(ctx: ApproxContext, a: RoughSet) -> RoughSet:
    return rough_pair(ctx, upper_inv(ctx, a.upper).complement())


def dual_pseudocomplement(ctx: ApproxContext, a: RoughSet) -> RoughSet:
    return rough_pair(ctx, lower_inv(ctx, a.lower).complement())


def is_exact(ctx: ApproxContext, a: RoughSet) -> bool:
    ctx.check(a.lower)
    return a.lower == a.upper


def _is_union_of_components(ctx: ApproxContext, x: SubsetMask) -> bool:
    return all(block.issubset(x) or block.isdisjoint(x) for block in ctx.components.blocks)


def is_complemented_in_rs(
    ctx: ApproxContext, a: RoughSet, method: str = "criterion", cap: Optional[int] = None
) -> bool:
    """Whether ``a`` has a complement in RS.

    ``method="criterion"`` decides it from the components (polynomial);
    ``method="enumerate"`` searches the enumerated lattice for a complement.
    """
    if method == "criterion":
        return is_exact(ctx, a) and _is_union_of_components(ctx, a.lower)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    lattice = enumerate_rs(ctx, cap=cap)
    return any(
        meet_family(ctx, [a, b]) == lattice.bottom and join_family(ctx, [a, b]) == lattice.top
        for b in lattice.elements
    )


def complemented_elements(ctx: ApproxContext) -> List[RoughSet]:
    """Every complemented element of RS: one exact pair per union of components."""
    blocks = ctx.components.blocks
    n = ctx.size
    result = []
    for chosen in itertools.product((False, True), repeat=len(blocks)):
        bits = 0
        for block, take in zip(blocks, chosen):
            if take:
                bits |= block.bits
        mask = SubsetMask(n, bits)
        result.append(RoughSet(mask, mask))
    return sorted(result, key=lambda element: element.sort_key)


def complement_report(ctx: ApproxContext, a: RoughSet) -> ComplementReport:
    return ComplementReport(
        element=a,
        de_morgan=de_morgan(ctx, a),
        pseudo=pseudocomplement(ctx, a),
        dual_pseudo=dual_pseudocomplement(ctx, a),
        is_exact=is_exact(ctx, a),
        is_complemented=is_complemented_in_rs(ctx, a),
    )


def complement_table(ctx: ApproxContext, lattice: RsLattice) -> pd.DataFrame:
    """One row per lattice element with its three complements, in canonical order."""
    universe = ctx.relation.universe
    data = []
    for element in lattice.elements:
        report = complement_report(ctx, element)
        data.append({
            "Element": element.format(universe),
            "De Morgan": report.de_morgan.format(universe),
            "Pseudocomplement": report.pseudo.format(universe),
            "Dual pseudocomplement": report.dual_pseudo.format(universe),
            "Exact": report.is_exact,
            "Complemented": report.is_complemented,
        })
    LOGGER.debug("complement table with %d rows", len(data))
    return pd.DataFrame(data)
