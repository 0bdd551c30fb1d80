"""Finite universes, subset bit-masks and binary relations.

A relation is stored as one successor mask per element: ``rows[x]`` is the
integer whose bit ``y`` is set iff ``(x, y)`` is in the relation. Composition
follows the left-to-right convention

    (x, z) in compose(s, t)  <=>  there is y with (x, y) in s and (y, z) in t,

so that ``compose(inverse(r), r)(x)`` is the set reached by first stepping
backwards and then forwards along ``r``.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Tuple

import numpy as np

from roughlattice.errors import NotAQuasiorderError, RoughLatticeError, UniverseMismatchError

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Universe:
    names: Tuple[str, ...]

    def __post_init__(self):
        names = tuple(str(name) for name in self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise RoughLatticeError("a universe needs at least one element")
        seen = set()
        for name in names:
            if name in seen:
                raise RoughLatticeError(f"duplicate element name {name!r}")
            seen.add(name)

    @classmethod
    def of_size(cls, size: int) -> "Universe":
        """Universe whose element names are the decimal indices."""
        return cls(tuple(str(i) for i in range(size)))

    @property
    def size(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)


@dataclass(frozen=True)
class SubsetMask:
    """A subset of ``{0, ..., universe_size - 1}``; bit i stands for element i."""

    universe_size: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.universe_size:
            raise UniverseMismatchError(self.universe_size, self.bits.bit_length(), "bit pattern")

    @classmethod
    def empty(cls, size: int) -> "SubsetMask":
        return cls(size, 0)

    @classmethod
    def full(cls, size: int) -> "SubsetMask":
        return cls(size, (1 << size) - 1)

    @classmethod
    def from_indices(cls, size: int, indices: Iterable[int]) -> "SubsetMask":
        bits = 0
        for i in indices:
            if not 0 <= i < size:
                raise UniverseMismatchError(size, i + 1, f"element index {i}")
            bits |= 1 << i
        return cls(size, bits)

    def _check(self, other: "SubsetMask") -> None:
        if other.universe_size != self.universe_size:
            raise UniverseMismatchError(self.universe_size, other.universe_size, "subset")

    def __and__(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.universe_size, self.bits & other.bits)

    def __or__(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.universe_size, self.bits | other.bits)

    def __sub__(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.universe_size, self.bits & ~other.bits)

    def complement(self) -> "SubsetMask":
        return SubsetMask(self.universe_size, ~self.bits & ((1 << self.universe_size) - 1))

    def issubset(self, other: "SubsetMask") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: "SubsetMask") -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.universe_size and bool(self.bits >> index & 1)

    def __iter__(self) -> Iterator[int]:
        bits, index = self.bits, 0
        while bits:
            if bits & 1:
                yield index
            bits >>= 1
            index += 1

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def indices(self) -> List[int]:
        return list(self)

    def format(self, universe: Optional[Universe] = None) -> str:
        """Brace notation, e.g. ``{0,2}`` or ``{a,c}`` with element names."""
        if universe is None:
            return "{" + ",".join(str(i) for i in self) + "}"
        return "{" + ",".join(universe.names[i] for i in self) + "}"


@dataclass(frozen=True)
class Relation:
    universe: Universe
    rows: Tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = self.universe.size
        if len(rows) != n:
            raise UniverseMismatchError(n, len(rows), "relation row count")
        for row in rows:
            if row < 0 or row >> n:
                raise UniverseMismatchError(n, row.bit_length(), "relation row")

    @classmethod
    def from_pairs(cls, universe: Universe, pairs: Iterable[Tuple[int, int]]) -> "Relation":
        n = universe.size
        rows = [0] * n
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise UniverseMismatchError(n, max(x, y) + 1, f"pair ({x},{y})")
            rows[x] |= 1 << y
        return cls(universe, tuple(rows))

    @classmethod
    def identity(cls, universe: Universe) -> "Relation":
        return cls(universe, tuple(1 << x for x in range(universe.size)))

    @classmethod
    def full(cls, universe: Universe) -> "Relation":
        return cls(universe, ((1 << universe.size) - 1,) * universe.size)

    @classmethod
    def from_matrix(cls, universe: Universe, matrix: np.ndarray) -> "Relation":
        """Build from a square boolean matrix, ``matrix[x, y]`` true iff x R y."""
        matrix = np.asarray(matrix, dtype=bool)
        n = universe.size
        if matrix.shape != (n, n):
            raise UniverseMismatchError(n, matrix.shape[0], "matrix")
        packed = np.packbits(matrix, axis=1, bitorder="little")
        return cls(universe, tuple(int.from_bytes(row.tobytes(), "little") for row in packed))

    @property
    def size(self) -> int:
        return self.universe.size

    @cached_property
    def matrix(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        n = self.size
        raw = np.array([list(row.to_bytes((n + 7) // 8, "little")) for row in self.rows], dtype=np.uint8)
        matrix = np.unpackbits(raw, axis=1, count=n, bitorder="little").astype(bool)
        matrix.setflags(write=False)
        return matrix

    def successors(self, x: int) -> SubsetMask:
        return SubsetMask(self.size, self.rows[x])

    def contains(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def pairs(self) -> List[Tuple[int, int]]:
        return [(x, y) for x in range(self.size) for y in self.successors(x)]

    def issubset(self, other: "Relation") -> bool:
        _check_same_universe(self, other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def __len__(self) -> int:
        return sum(row.bit_count() for row in self.rows)


@dataclass(frozen=True)
class ComponentPartition:
    blocks: Tuple[SubsetMask, ...]
    block_of: Tuple[int, ...]

    def __post_init__(self):
        seen = 0
        for index, block in enumerate(self.blocks):
            if not block or block.bits & seen:
                raise RoughLatticeError("components must be nonempty and pairwise disjoint")
            seen |= block.bits
            if any(self.block_of[x] != index for x in block):
                raise RoughLatticeError("block_of disagrees with blocks")
        if self.blocks and seen != (1 << self.blocks[0].universe_size) - 1:
            raise RoughLatticeError("components must cover the universe")

    def __len__(self) -> int:
        return len(self.blocks)

    def block_containing(self, x: int) -> SubsetMask:
        return self.blocks[self.block_of[x]]


@dataclass(frozen=True)
class PropertyReport:
    reflexive: bool
    symmetric: bool
    transitive: bool
    left_total: bool
    antisymmetric: bool
    quasiorder: bool
    partial_order: bool
    equivalence: bool


def _check_same_universe(s: Relation, t: Relation) -> None:
    if s.universe != t.universe:
        raise UniverseMismatchError(s.size, t.size, "relation universe")


def inverse(r: Relation) -> Relation:
    rows = [0] * r.size
    for x, row in enumerate(r.rows):
        bit = 1 << x
        for y in SubsetMask(r.size, row):
            rows[y] |= bit
    return Relation(r.universe, tuple(rows))


def union(s: Relation, t: Relation) -> Relation:
    _check_same_universe(s, t)
    return Relation(s.universe, tuple(a | b for a, b in zip(s.rows, t.rows)))


def _bool_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.int64) @ b.astype(np.int64)) > 0


def compose(s: Relation, t: Relation) -> Relation:
    """Relational product, left to right: first ``s``, then ``t``."""
    _check_same_universe(s, t)
    return Relation.from_matrix(s.universe, _bool_product(s.matrix, t.matrix))


def transitive_closure(r: Relation) -> Relation:
    """Smallest transitive relation containing ``r``, by iterated squaring."""
    current = np.array(r.matrix)
    rounds = 0
    while True:
        rounds += 1
        squared = current | _bool_product(current, current)
        if np.array_equal(squared, current):
            break
        current = squared
    LOGGER.debug("transitive closure of %d pairs settled after %d rounds", len(r), rounds)
    return Relation.from_matrix(r.universe, current)


def reflexive_transitive_closure(r: Relation) -> Relation:
    return transitive_closure(union(r, Relation.identity(r.universe)))


def equivalence_join(r: Relation) -> Relation:
    """Smallest equivalence containing ``r`` (identity added explicitly)."""
    return reflexive_transitive_closure(union(r, inverse(r)))


def properties(r: Relation) -> PropertyReport:
    m = r.matrix
    reflexive = bool(m.diagonal().all())
    symmetric = bool((m == m.T).all())
    transitive = not bool((_bool_product(m, m) & ~m).any())
    left_total = bool(m.any(axis=1).all())
    antisymmetric = not bool((m & m.T & ~np.eye(r.size, dtype=bool)).any())
    quasiorder = reflexive and transitive
    return PropertyReport(
        reflexive=reflexive,
        symmetric=symmetric,
        transitive=transitive,
        left_total=left_total,
        antisymmetric=antisymmetric,
        quasiorder=quasiorder,
        partial_order=quasiorder and antisymmetric,
        equivalence=quasiorder and symmetric,
    )


def quasiorder_violation(r: Relation) -> Optional[Tuple[Tuple[int, int], str]]:
    """First missing pair that keeps ``r`` from being a quasiorder, with the reason."""
    for x in range(r.size):
        if not r.contains(x, x):
            return (x, x), "not reflexive"
    for x in range(r.size):
        for y in r.successors(x):
            missing = r.rows[y] & ~r.rows[x]
            if missing:
                z = (missing & -missing).bit_length() - 1
                return (x, z), f"not transitive via {y}"
    return None


def require_quasiorder(r: Relation) -> None:
    violation = quasiorder_violation(r)
    if violation is not None:
        pair, reason = violation
        raise NotAQuasiorderError(pair, reason)


def connected_components(r: Relation) -> ComponentPartition:
    """Classes of ``equivalence_join(r)``, ordered by their least element."""
    joined = equivalence_join(r)
    blocks: List[SubsetMask] = []
    block_of = [-1] * r.size
    for x in range(r.size):
        if block_of[x] >= 0:
            continue
        block = joined.successors(x)
        for y in block:
            block_of[y] = len(blocks)
        blocks.append(block)
    LOGGER.debug("relation on %d elements has %d connected components", r.size, len(blocks))
    return ComponentPartition(tuple(blocks), tuple(block_of))
