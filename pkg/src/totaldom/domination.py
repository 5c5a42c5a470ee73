"""Exact minimum dominating-set and total-dominating-set solvers.

Both problems reduce to minimum cover by neighborhoods: a set S dominates
when the closed neighborhoods of its members cover V, and totally dominates
when the open neighborhoods do. The two strategies are

* exhaustive: subsets in (cardinality, lexicographic) order, so the first
  hit is minimum and the reported witness is canonical, and
* branch and bound: branch on the lowest-indexed uncovered vertex over the
  vertices able to cover it, seeded with a greedy incumbent and pruned with
  the counting lower bound |S| + ceil(uncovered / max residual coverage).

A solve is pure: same graph and config, same result, bit for bit.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Sequence

from .errors import ResourceExhausted
from .graph import Graph
from .vertexset import VertexSet


class Strategy(str, Enum):
    EXHAUSTIVE = "exhaustive"
    BRANCH_AND_BOUND = "bnb"


@dataclass(frozen=True)
class SolverConfig:
    strategy: Strategy = Strategy.BRANCH_AND_BOUND
    node_limit: int | None = None
    time_limit: float | None = None  # seconds

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


@dataclass(frozen=True)
class SolverStats:
    subsets_examined: int = 0
    branch_nodes: int = 0
    elapsed_seconds: float = 0.0


@dataclass(frozen=True)
class DominationResult:
    value: int
    witness: VertexSet
    stats: SolverStats


DEFAULT_CONFIG = SolverConfig()


# -- predicates ----------------------------------------------------------------


def is_dominating(g: Graph, s: VertexSet) -> bool:
    """True iff every vertex is in s or adjacent to a member of s."""
    covered = s.mask
    m = s.mask
    while m:
        low = m & -m
        covered |= g.adj_masks[low.bit_length() - 1]
        m ^= low
    return covered == g.full_mask


def is_total_dominating(g: Graph, s: VertexSet) -> bool:
    """True iff every vertex (members of s included) has a neighbor in s."""
    covered = 0
    m = s.mask
    while m:
        low = m & -m
        covered |= g.adj_masks[low.bit_length() - 1]
        m ^= low
    return covered == g.full_mask


# -- cover-search core ---------------------------------------------------------


def _exhaustive_min_cover(
    cover: Sequence[int],
    n: int,
    node_limit: int | None,
    deadline: float | None,
) -> tuple[int, int, int]:
    """Minimum k and lexicographically least k-subset whose covers union to V.

    Returns (value, witness_mask, subsets_examined). Requires a cover to
    exist (the n-subset must work).
    """
    full = (1 << n) - 1
    examined = 0
    for k in range(1, n + 1):
        for subset in combinations(range(n), k):
            examined += 1
            if node_limit is not None and examined > node_limit:
                raise ResourceExhausted(f"subset limit {node_limit} exceeded")
            if deadline is not None and examined % 4096 == 0:
                if time.perf_counter() > deadline:
                    raise ResourceExhausted("time limit exceeded")
            u = 0
            for v in subset:
                u |= cover[v]
            if u == full:
                mask = 0
                for v in subset:
                    mask |= 1 << v
                return k, mask, examined
    raise AssertionError("no cover exists; caller must pre-check coverability")


def _greedy_cover(cover: Sequence[int], n: int) -> int:
    """Greedy cover mask: repeatedly take the lowest-indexed vertex covering
    the most still-uncovered vertices."""
    full = (1 << n) - 1
    chosen = 0
    covered = 0
    while covered != full:
        best_v = -1
        best_gain = 0
        for v in range(n):
            if chosen >> v & 1:
                continue
            gain = (cover[v] & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_v = v
        if best_v < 0:
            raise AssertionError("uncoverable vertex; caller must pre-check")
        chosen |= 1 << best_v
        covered |= cover[best_v]
    return chosen


def _bnb_min_cover(
    cover: Sequence[int],
    n: int,
    seed_mask: int,
    lower_bound: int,
    node_limit: int | None,
    deadline: float | None,
    prune: bool = True,
) -> tuple[int, int, int]:
    """Branch-and-bound minimum cover. Returns (value, witness_mask, nodes).

    ``seed_mask`` must be a valid cover (the incumbent); ``lower_bound`` a
    proven global lower bound, used only for an early exit.
    """
    full = (1 << n) - 1
    best_mask = seed_mask
    best_value = seed_mask.bit_count()
    nodes = 0
    if best_value <= lower_bound:
        return best_value, best_mask, nodes

    def recurse(chosen: int, covered: int, size: int) -> None:
        nonlocal best_mask, best_value, nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise ResourceExhausted(f"node limit {node_limit} exceeded")
        if deadline is not None and nodes % 256 == 0:
            if time.perf_counter() > deadline:
                raise ResourceExhausted("time limit exceeded")

        # propagate forced choices: an uncovered vertex with one candidate
        while True:
            if covered == full:
                if size < best_value:
                    best_value = size
                    best_mask = chosen
                return
            if size + 1 >= best_value:
                return
            unc = full & ~covered
            forced = -1
            m = unc
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                cands = cover[v] & ~chosen
                if cands == 0:
                    return  # v can never be covered on this branch
                if cands & (cands - 1) == 0:
                    forced = cands.bit_length() - 1
                    break
            if forced < 0:
                break
            chosen |= 1 << forced
            covered |= cover[forced]
            size += 1

        unc = full & ~covered
        if prune:
            max_gain = 0
            m = full & ~chosen
            while m:
                low = m & -m
                gain = (cover[low.bit_length() - 1] & unc).bit_count()
                if gain > max_gain:
                    max_gain = gain
                m ^= low
            if max_gain == 0:
                return
            if size + -(-unc.bit_count() // max_gain) >= best_value:
                return

        v = (unc & -unc).bit_length() - 1
        cands = cover[v] & ~chosen
        order = []
        m = cands
        while m:
            low = m & -m
            u = low.bit_length() - 1
            order.append(((cover[u] & unc).bit_count(), u))
            m ^= low
        order.sort(key=lambda item: (-item[0], item[1]))
        for _, u in order:
            recurse(chosen | (1 << u), covered | cover[u], size + 1)

    recurse(0, 0, 0)
    return best_value, best_mask, nodes


def _solve_min_cover(
    cover: Sequence[int],
    n: int,
    config: SolverConfig,
    greedy_seed: int,
    lower_bound: int,
) -> tuple[int, int, SolverStats]:
    deadline = None
    if config.time_limit is not None:
        deadline = time.perf_counter() + config.time_limit
    t0 = time.perf_counter()
    if config.strategy is Strategy.EXHAUSTIVE:
        value, mask, examined = _exhaustive_min_cover(
            cover, n, config.node_limit, deadline
        )
        stats = SolverStats(
            subsets_examined=examined,
            elapsed_seconds=time.perf_counter() - t0,
        )
    else:
        value, mask, nodes = _bnb_min_cover(
            cover, n, greedy_seed, lower_bound, config.node_limit, deadline
        )
        stats = SolverStats(
            branch_nodes=nodes,
            elapsed_seconds=time.perf_counter() - t0,
        )
    return value, mask, stats


# -- public solvers ------------------------------------------------------------


def gamma(g: Graph, config: SolverConfig | None = None) -> DominationResult:
    """Exact domination number with a canonical optimal witness."""
    config = config or DEFAULT_CONFIG
    closed = [a | (1 << v) for v, a in enumerate(g.adj_masks)]
    seed = _greedy_cover(closed, g.n)
    lb = -(-g.n // (max(g.degrees()) + 1))
    value, mask, stats = _solve_min_cover(closed, g.n, config, seed, lb)
    return DominationResult(value, VertexSet(g.n, mask), stats)


def gamma_t(g: Graph, config: SolverConfig | None = None) -> DominationResult | None:
    """Exact total domination number, or None if an isolated vertex makes it
    undefined."""
    config = config or DEFAULT_CONFIG
    if g.isolated_mask():
        return None
    seed = greedy_total_dominating(g)
    assert seed is not None
    # n >= 2 here: a 1-vertex graph is all isolated
    lb = max(2, -(-g.n // max(g.degrees())))
    value, mask, stats = _solve_min_cover(
        g.adj_masks, g.n, config, seed.mask, lb
    )
    return DominationResult(value, VertexSet(g.n, mask), stats)


def greedy_total_dominating(g: Graph) -> VertexSet | None:
    """Valid (not necessarily minimum) total dominating set, greedily built.

    None when an isolated vertex exists. Cover phase takes the vertex with
    most uncovered open-neighborhood gain (lowest index on ties); a repair
    pass then gives any member without a neighbor in S its lowest neighbor.
    """
    if g.isolated_mask():
        return None
    chosen = _greedy_cover(g.adj_masks, g.n)
    m = chosen
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        if g.adj_masks[v] & chosen == 0:
            chosen |= g.adj_masks[v] & -g.adj_masks[v]
    return VertexSet(g.n, chosen)
