"""Rough approximation operators.

With ``R(a)`` the successor set of ``a``:

    lower(X)     = {a : R(a) is a subset of X}
    upper(X)     = {a : R(a) meets X}
    lower_inv(X) / upper_inv(X): the same with respect to the inverse relation.

Each operator is one sweep over the successor masks. The ``*_sweep``
functions evaluate an operator on a whole numpy array of subset bit patterns
at once and back every exhaustive check in the package.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence

import numpy as np

from roughlattice.config import FRAME_CHECK_CAP
from roughlattice.errors import EnumerationCapError, UniverseMismatchError
from roughlattice.relation import (
    ComponentPartition,
    PropertyReport,
    Relation,
    SubsetMask,
    connected_components,
    inverse,
    properties,
)

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class RoughSet:
    lower: SubsetMask
    upper: SubsetMask

    def __post_init__(self):
        if self.lower.universe_size != self.upper.universe_size:
            raise UniverseMismatchError(self.lower.universe_size, self.upper.universe_size, "upper component")

    @property
    def universe_size(self) -> int:
        return self.lower.universe_size

    @property
    def sort_key(self):
        return (self.lower.bits, self.upper.bits)

    def format(self, universe=None) -> str:
        return f"({self.lower.format(universe)},{self.upper.format(universe)})"


@dataclass(frozen=True)
class ApproxContext:
    relation: Relation
    inv: Relation

    @classmethod
    def of(cls, relation: Relation) -> "ApproxContext":
        return cls(relation, inverse(relation))

    @property
    def size(self) -> int:
        return self.relation.size

    @cached_property
    def report(self) -> PropertyReport:
        return properties(self.relation)

    @cached_property
    def components(self) -> ComponentPartition:
        return connected_components(self.relation)

    def check(self, x: SubsetMask) -> None:
        if x.universe_size != self.size:
            raise UniverseMismatchError(self.size, x.universe_size, "subset")


def _lower(rows: Sequence[int], size: int, bits: int) -> SubsetMask:
    outside = ~bits
    result = 0
    for a, row in enumerate(rows):
        if row & outside == 0:
            result |= 1 << a
    return SubsetMask(size, result)


def _upper(rows: Sequence[int], size: int, bits: int) -> SubsetMask:
    result = 0
    for a, row in enumerate(rows):
        if row & bits:
            result |= 1 << a
    return SubsetMask(size, result)


def lower(ctx: ApproxContext, x: SubsetMask) -> SubsetMask:
    ctx.check(x)
    return _lower(ctx.relation.rows, ctx.size, x.bits)


def upper(ctx: ApproxContext, x: SubsetMask) -> SubsetMask:
    ctx.check(x)
    return _upper(ctx.relation.rows, ctx.size, x.bits)


def lower_inv(ctx: ApproxContext, x: SubsetMask) -> SubsetMask:
    ctx.check(x)
    return _lower(ctx.inv.rows, ctx.size, x.bits)


def upper_inv(ctx: ApproxContext, x: SubsetMask) -> SubsetMask:
    ctx.check(x)
    return _upper(ctx.inv.rows, ctx.size, x.bits)


def rough_pair(ctx: ApproxContext, x: SubsetMask) -> RoughSet:
    return RoughSet(lower(ctx, x), upper(ctx, x))


def lower_sweep(rows: Sequence[int], xs: np.ndarray) -> np.ndarray:
    """Lower approximation of every bit pattern in ``xs`` (int64 array)."""
    result = np.zeros_like(xs)
    for a, row in enumerate(rows):
        row = np.int64(row)
        result |= ((xs & row) == row).astype(np.int64) << a
    return result


def upper_sweep(rows: Sequence[int], xs: np.ndarray) -> np.ndarray:
    """Upper approximation of every bit pattern in ``xs`` (int64 array)."""
    result = np.zeros_like(xs)
    for a, row in enumerate(rows):
        result |= ((xs & np.int64(row)) != 0).astype(np.int64) << a
    return result


def gather_bits(bits: int, positions: Sequence[int]) -> int:
    """Bits of ``bits`` at ``positions``, packed so that positions[j] becomes bit j."""
    local = 0
    for j, pos in enumerate(positions):
        if bits >> pos & 1:
            local |= 1 << j
    return local


def spread_bits(local: int, positions: Sequence[int]) -> int:
    """Inverse of ``gather_bits``: bit j goes back to positions[j]."""
    bits = 0
    for j, pos in enumerate(positions):
        if local >> j & 1:
            bits |= 1 << pos
    return bits


def all_subsets(size: int) -> np.ndarray:
    return np.arange(1 << size, dtype=np.int64)


@dataclass(frozen=True)
class CorrespondenceRow:
    name: str
    relational: bool
    approximational: bool

    @property
    def agrees(self) -> bool:
        return self.relational == self.approximational


@dataclass(frozen=True)
class CorrespondenceReport:
    rows: List[CorrespondenceRow]

    def row(self, name: str) -> CorrespondenceRow:
        return next(r for r in self.rows if r.name == name)


def frame_correspondence(r: Relation, cap: Optional[int] = None) -> CorrespondenceReport:
    """Each frame property decided on the relation and, independently, over all subsets."""
    cap = FRAME_CHECK_CAP if cap is None else cap
    if r.size > cap:
        raise EnumerationCapError(r.size, cap)
    report = properties(r)
    xs = all_subsets(r.size)
    lo = lower_sweep(r.rows, xs)
    up = upper_sweep(r.rows, xs)

    def included(small: np.ndarray, big: np.ndarray) -> bool:
        return bool(((small & ~big) == 0).all())

    rows = [
        CorrespondenceRow("left_total", report.left_total, included(lo, up)),
        CorrespondenceRow("reflexive", report.reflexive, included(xs, up)),
        CorrespondenceRow("symmetric", report.symmetric, included(xs, lower_sweep(r.rows, up))),
        CorrespondenceRow("transitive", report.transitive, included(upper_sweep(r.rows, up), up)),
    ]
    for row in rows:
        if not row.agrees:
            LOGGER.warning("frame correspondence %s disagrees: %s", row.name, row)
    return CorrespondenceReport(rows)
