"""Alexandrov topologies of a quasiorder, kept as their smallest base.

``UP`` is the topology of R-up-closed sets (interior = lower, closure =
upper); ``DOWN`` is the topology of down-closed sets (interior = lower_inv,
closure = upper_inv). The two are dual: X is open in one iff its complement
is open in the other.
"""
import enum
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Tuple

from roughlattice.config import ENUMERATION_CAP
from roughlattice.errors import EnumerationCapError, TopologyKindError
from roughlattice.relation import Relation, SubsetMask, Universe, inverse, require_quasiorder

LOGGER = logging.getLogger(__name__)


class TopologyKind(enum.Enum):
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class AlexandrovTopology:
    universe: Universe
    base: Tuple[SubsetMask, ...]
    kind: TopologyKind

    @cached_property
    def point_neighbourhoods(self) -> Tuple[SubsetMask, ...]:
        """N(x) for each point: the intersection of the base members containing x."""
        n = self.universe.size
        result = []
        for x in range(n):
            bits = (1 << n) - 1
            for member in self.base:
                if x in member:
                    bits &= member.bits
            result.append(SubsetMask(n, bits))
        return tuple(result)


def _from_rows(universe: Universe, rows, kind: TopologyKind) -> AlexandrovTopology:
    base = tuple(SubsetMask(universe.size, bits) for bits in sorted(set(rows)))
    return AlexandrovTopology(universe, base, kind)


def topology_up(r: Relation) -> AlexandrovTopology:
    require_quasiorder(r)
    return _from_rows(r.universe, r.rows, TopologyKind.UP)


def topology_down(r: Relation) -> AlexandrovTopology:
    require_quasiorder(r)
    return _from_rows(r.universe, inverse(r).rows, TopologyKind.DOWN)


def neighbourhood(t: AlexandrovTopology, x: SubsetMask) -> SubsetMask:
    """Smallest open set containing ``x``."""
    bits = 0
    for p in x:
        bits |= t.point_neighbourhoods[p].bits
    return SubsetMask(t.universe.size, bits)


def is_open(t: AlexandrovTopology, x: SubsetMask) -> bool:
    return neighbourhood(t, x) == x


def interior(t: AlexandrovTopology, x: SubsetMask) -> SubsetMask:
    bits = 0
    for p, n_p in enumerate(t.point_neighbourhoods):
        if n_p.issubset(x):
            bits |= 1 << p
    return SubsetMask(t.universe.size, bits)


def closure_op(t: AlexandrovTopology, x: SubsetMask) -> SubsetMask:
    return interior(t, x.complement()).complement()


def quasiorder_of(t: AlexandrovTopology) -> Relation:
    """The specialisation quasiorder: x R y iff y lies in N(x)."""
    if t.kind is not TopologyKind.UP:
        raise TopologyKindError("the quasiorder is read off the up-set topology; got a down-set topology")
    return Relation(t.universe, tuple(n_p.bits for n_p in t.point_neighbourhoods))


def enumerate_opens(t: AlexandrovTopology, cap: Optional[int] = None) -> List[SubsetMask]:
    cap = ENUMERATION_CAP if cap is None else cap
    if t.universe.size > cap:
        raise EnumerationCapError(t.universe.size, cap)
    opens = {0}
    for member in t.base:
        opens |= {bits | member.bits for bits in opens}
    LOGGER.debug("%s topology on %d points has %d open sets", t.kind.value, t.universe.size, len(opens))
    return [SubsetMask(t.universe.size, bits) for bits in sorted(opens)]
