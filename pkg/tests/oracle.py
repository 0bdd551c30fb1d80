"""Naive reference implementations used to cross-check the package.

Everything here works on plain Python sets: a relation is a set of pairs over
``range(n)``, a subset is a frozenset and a rough set is a (lower, upper)
pair of frozensets. Nothing is imported from ``roughlattice``.
"""
import itertools
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

Pair = Tuple[int, int]
Rough = Tuple[FrozenSet[int], FrozenSet[int]]


def successors(pairs: Set[Pair], a: int) -> Set[int]:
    return {y for x, y in pairs if x == a}


def flip(pairs: Set[Pair]) -> Set[Pair]:
    return {(y, x) for x, y in pairs}


def naive_lower(n: int, pairs: Set[Pair], xs: Iterable[int]) -> FrozenSet[int]:
    xs = set(xs)
    return frozenset(a for a in range(n) if successors(pairs, a) <= xs)


def naive_upper(n: int, pairs: Set[Pair], xs: Iterable[int]) -> FrozenSet[int]:
    xs = set(xs)
    return frozenset(a for a in range(n) if successors(pairs, a) & xs)


def naive_lower_inv(n: int, pairs: Set[Pair], xs: Iterable[int]) -> FrozenSet[int]:
    return naive_lower(n, flip(pairs), xs)


def naive_upper_inv(n: int, pairs: Set[Pair], xs: Iterable[int]) -> FrozenSet[int]:
    return naive_upper(n, flip(pairs), xs)


def naive_compose(s: Set[Pair], t: Set[Pair]) -> Set[Pair]:
    return {(x, z) for x, y in s for y2, z in t if y == y2}


def naive_transitive_closure(n: int, pairs: Set[Pair]) -> Set[Pair]:
    reach = [[(x, y) in pairs for y in range(n)] for x in range(n)]
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    return {(i, j) for i in range(n) for j in range(n) if reach[i][j]}


def naive_reflexive_transitive_closure(n: int, pairs: Set[Pair]) -> Set[Pair]:
    return naive_transitive_closure(n, set(pairs) | {(x, x) for x in range(n)})


def naive_components(n: int, pairs: Set[Pair]) -> List[FrozenSet[int]]:
    linked = naive_reflexive_transitive_closure(n, set(pairs) | flip(pairs))
    blocks: List[FrozenSet[int]] = []
    for x in range(n):
        block = frozenset(successors(linked, x))
        if block not in blocks:
            blocks.append(block)
    return blocks


def subsets(ground: Iterable[int]) -> List[FrozenSet[int]]:
    ground = sorted(ground)
    return [
        frozenset(combo) for k in range(len(ground) + 1) for combo in itertools.combinations(ground, k)
    ]


def naive_rough(n: int, pairs: Set[Pair], xs: Iterable[int]) -> Rough:
    xs = frozenset(xs)
    return naive_lower(n, pairs, xs), naive_upper(n, pairs, xs)


ORACLE_CAP = 8


def brute_rs(n: int, pairs: Set[Pair]) -> Set[Rough]:
    if n > ORACLE_CAP:
        raise ValueError(f"brute force is limited to {ORACLE_CAP} elements, got {n}")
    return {naive_rough(n, pairs, xs) for xs in subsets(range(n))}


def leq(a: Rough, b: Rough) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def meet(a: Rough, b: Rough) -> Rough:
    return a[0] & b[0], a[1] & b[1]


def join(a: Rough, b: Rough) -> Rough:
    return a[0] | b[0], a[1] | b[1]


def _greatest(candidates: List[Rough]) -> Optional[Rough]:
    # a finite set has a greatest element iff its union pair belongs to it
    lower = frozenset().union(*(a[0] for a in candidates))
    upper = frozenset().union(*(a[1] for a in candidates))
    return (lower, upper) if (lower, upper) in candidates else None


def _least(candidates: List[Rough]) -> Optional[Rough]:
    lower = frozenset.intersection(*(a[0] for a in candidates))
    upper = frozenset.intersection(*(a[1] for a in candidates))
    return (lower, upper) if (lower, upper) in candidates else None


def brute_pseudo(rs: Set[Rough], a: Rough) -> Optional[Rough]:
    """Greatest b with a ^ b = bottom, or None if there is no greatest one."""
    zero = bottom(rs)
    return _greatest([b for b in rs if meet(a, b) == zero])


def brute_dual_pseudo(rs: Set[Rough], a: Rough) -> Optional[Rough]:
    one = top(rs)
    return _least([b for b in rs if join(a, b) == one])


def brute_complemented(rs: Set[Rough], a: Rough) -> bool:
    zero, one = bottom(rs), top(rs)
    return any(meet(a, b) == zero and join(a, b) == one for b in rs)


def brute_join_irr(rs: Set[Rough]) -> Set[Rough]:
    """Elements that differ from the join of everything strictly below them."""
    zero = bottom(rs)
    result = set()
    for a in rs:
        below = [b for b in rs if leq(b, a) and b != a]
        acc = zero
        for b in below:
            acc = join(acc, b)
        if acc != a:
            result.add(a)
    return result


def brute_meet_irr(rs: Set[Rough]) -> Set[Rough]:
    one = top(rs)
    result = set()
    for a in rs:
        above = [b for b in rs if leq(a, b) and b != a]
        acc = one
        for b in above:
            acc = meet(acc, b)
        if acc != a:
            result.add(a)
    return result


def brute_is_stone(rs: Set[Rough]) -> bool:
    one = top(rs)
    for a in rs:
        star = brute_pseudo(rs, a)
        if star is None or join(star, brute_pseudo(rs, star)) != one:
            return False
    return True


def naive_down_directed(n: int, pairs: Set[Pair]) -> bool:
    """Every two points of each component have a common lower bound."""
    below: Dict[int, Set[int]] = {x: {y for y in range(n) if (y, x) in pairs} for x in range(n)}
    for block in naive_components(n, pairs):
        for a, b in itertools.combinations(sorted(block), 2):
            if not below[a] & below[b]:
                return False
    return True


def bottom(rs: Set[Rough]) -> Rough:
    return _least(list(rs))


def top(rs: Set[Rough]) -> Rough:
    return _greatest(list(rs))
