"""Resolving sets: representations, twin classes, exact and greedy metric dimension."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import Disconnected, EmptyW, IndexOutOfRange, TooLarge, TooSmall
from .graph import DistanceMatrix, Graph, distance_matrix, is_connected

DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class ResolvingResult:
    dim: int
    basis: tuple[int, ...]
    method: str
    certificate: dict[int, tuple[int, ...]] = field(compare=False, repr=False)
    checks: int = field(default=0, compare=False)


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[tuple[int, ...], ...]


def _check_ids(D: DistanceMatrix, ids: Iterable[int]) -> None:
    for v in ids:
        if not 0 <= v < D.order:
            raise IndexOutOfRange(f"vertex {v} outside 0..{D.order - 1}")


def representation(D: DistanceMatrix, v: int, W: Sequence[int]) -> tuple[int, ...]:
    """Distances from ``v`` to each vertex of ``W``, in ``W``'s order."""
    if not W:
        raise EmptyW("representation needs a nonempty W")
    _check_ids(D, [v, *W])
    row = D[v]
    return tuple(row[w] for w in W)


def is_resolving(D: DistanceMatrix, W: Iterable[int]) -> bool:
    W = list(W)
    if not W:
        raise EmptyW("is_resolving needs a nonempty W")
    _check_ids(D, W)
    vectors = sorted(tuple(D[w][v] for w in W) for v in range(D.order))
    return all(a != b for a, b in zip(vectors, vectors[1:]))


def are_twins(D: DistanceMatrix, u: int, v: int) -> bool:
    du, dv = D[u], D[v]
    return all(du[x] == dv[x] for x in range(D.order) if x != u and x != v)


def twin_classes(D: DistanceMatrix) -> TwinPartition:
    """Maximal classes of mutually twin vertices, each sorted, ordered by first member."""
    classes: list[list[int]] = []
    for v in range(D.order):
        for cls in classes:
            if are_twins(D, cls[0], v):
                # twinness is an equivalence; a partial match would mean a bug upstream
                if not all(are_twins(D, u, v) for u in cls[1:]):
                    raise AssertionError(f"twin relation not transitive at vertex {v}")
                cls.append(v)
                break
        else:
            classes.append([v])
    return TwinPartition(tuple(tuple(c) for c in classes))


def twin_lower_bound(P: TwinPartition) -> int:
    return sum(len(c) - 1 for c in P.classes)


def _certificate(D: DistanceMatrix, basis: Sequence[int]) -> dict[int, tuple[int, ...]]:
    return {v: tuple(D[w][v] for w in basis) for v in range(D.order)}


def _scan(rows, radix, codes, free, r, firsts):
    """Lexicographically first r-subset of ``free`` that separates every code.

    Only subsets whose first element is ``free[i]`` for some i in ``firsts``
    are visited. Returns (subset or None, number of subsets checked).
    """
    n = len(codes)
    m = len(free)
    checks = 0

    def extend(start, depth, codes):
        nonlocal checks
        if depth == r:
            checks += 1
            return () if len(set(codes)) == n else None
        for i in range(start, m - (r - depth) + 1):
            col = rows[free[i]]
            found = extend(i + 1, depth + 1, [c * radix + x for c, x in zip(codes, col)])
            if found is not None:
                return (free[i],) + found
        return None

    if r == 0:
        checks += 1
        return (() if len(set(codes)) == n else None), checks
    for i in firsts:
        if i > m - r:
            break
        col = rows[free[i]]
        found = extend(i + 1, 1, [c * radix + x for c, x in zip(codes, col)])
        if found is not None:
            return (free[i],) + found, checks
    return None, checks


def _scan_task(args):
    return _scan(*args)


def _ensure_searchable(g: Graph) -> DistanceMatrix:
    if g.order < 2:
        raise TooSmall("metric dimension needs order >= 2")
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    return distance_matrix(g)


def exact_metric_dimension(
    g: Graph,
    *,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    prune: bool = True,
) -> ResolvingResult:
    """Minimum resolving set by exhaustive search over sizes in ascending order.

    The returned basis is the lexicographically smallest minimum resolving
    set. With ``prune`` the search starts at the twin lower bound and, inside
    every twin class, only lets the highest-id member vary: the others are
    forced, because swapping twins is an automorphism and the smallest
    basis always takes a class's lowest ids first. ``prune=False`` is the
    plain enumeration of all subsets and serves as an oracle.

    Raises TooLarge when the next size level would push the number of
    subset checks past ``budget``.
    """
    D = _ensure_searchable(g)
    n = D.order
    rows = D.d
    radix = D.diameter + 1

    if prune:
        classes = twin_classes(D).classes
        forced = sorted(v for c in classes for v in c[:-1])
        free = sorted(c[-1] for c in classes)
    else:
        forced, free = [], list(range(n))
    codes = [0] * n
    for w in forced:
        codes = [c * radix + x for c, x in zip(codes, rows[w])]

    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    checks = 0
    try:
        for k in range(max(1, len(forced)), n):
            r = k - len(forced)
            projected = math.comb(len(free), r)
            if checks + projected > budget:
                raise TooLarge(
                    f"size {k} needs up to {projected} more subset checks; budget {budget} "
                    f"already has {checks} spent"
                )
            if pool is None or r == 0:
                found, spent = _scan(rows, radix, codes, free, r, range(len(free)))
                hits = [] if found is None else [found]
                checks += spent
            else:
                slices = [range(j, len(free), jobs) for j in range(jobs)]
                results = list(pool.map(_scan_task, [(rows, radix, codes, free, r, s) for s in slices]))
                hits = [f for f, _ in results if f is not None]
                checks += sum(s for _, s in results)
            if hits:
                basis = tuple(sorted(forced + list(min(hits))))
                return ResolvingResult(k, basis, "exact", _certificate(D, basis), checks)
    finally:
        if pool is not None:
            pool.shutdown()
    raise AssertionError("any order-1 vertices resolve a connected graph")


def greedy_resolving_set(g: Graph) -> ResolvingResult:
    """Pair-covering greedy: add the vertex separating the most unresolved pairs.

    Ties go to the lowest vertex id. Always returns a resolving set, with no
    optimality guarantee.
    """
    D = _ensure_searchable(g)
    n = D.order
    classes = [list(range(n))]
    chosen: list[int] = []
    while any(len(c) > 1 for c in classes):
        best, best_gain = -1, 0
        for w in range(n):
            row = D[w]
            gain = 0
            for c in classes:
                if len(c) < 2:
                    continue
                sizes: dict[int, int] = {}
                for v in c:
                    sizes[row[v]] = sizes.get(row[v], 0) + 1
                gain += len(c) * (len(c) - 1) // 2 - sum(s * (s - 1) // 2 for s in sizes.values())
            if gain > best_gain:
                best, best_gain = w, gain
        chosen.append(best)
        row = D[best]
        refined = []
        for c in classes:
            parts: dict[int, list[int]] = {}
            for v in c:
                parts.setdefault(row[v], []).append(v)
            refined.extend(parts.values())
        classes = refined
    basis = tuple(sorted(chosen))
    return ResolvingResult(len(basis), basis, "greedy", _certificate(D, basis))


def naive_metric_dimension(g: Graph) -> ResolvingResult:
    """Reference enumeration with no pruning, independent of the search kernel."""
    D = _ensure_searchable(g)
    for k in range(1, D.order):
        for W in combinations(range(D.order), k):
            if is_resolving(D, W):
                return ResolvingResult(k, W, "exact", _certificate(D, W))
    raise AssertionError("unreachable for connected graphs of order >= 2")
