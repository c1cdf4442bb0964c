"""Exhaustive witness search for squares of closed neighborhood ideals.

A witness for an ideal I on n variables is a monomial f outside I whose
product with every variable lands inside I; its existence is what the
decision procedures certify.  For the square of a squarefree ideal only
squarefree candidates matter, so candidates are vertex subsets U and the
membership tests reduce to bitmask subset checks against precomputed
pairs of generator supports:

* x_U lies in the square exactly when two disjoint generator supports
  fit inside U;
* x_v * x_U (v in U) lies in the square exactly when two generator
  supports overlapping precisely at v fit inside U (or v is its own
  closed neighborhood);
* x_v * x_U (v outside U) lies in the square exactly when a disjoint
  pair of supports fits inside U once v is added.

Constraint propagation first pins vertices that can never, or must
always, occur in a witness; the remaining free subsets are scanned in
Gray-code order so each step flips a single bit.  Every produced witness
is re-verified through the monomial-ideal arithmetic, a code path the
scan itself never touches.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExceededError
from .graphs import Graph, VertexSet, _mask_members
from .monomials import Monomial, MonomialIdeal, closed_neighborhood_ideal

__all__ = [
    "SearchStats",
    "Witness",
    "find_witness",
    "find_square_witness",
    "all_square_witnesses",
    "DEFAULT_BUDGET",
    "EXHAUSTIVE_LIMIT",
]

DEFAULT_BUDGET = 1 << 22
EXHAUSTIVE_LIMIT = 20

_CHUNK = 1 << 15


@dataclass(frozen=True)
class SearchStats:
    """Candidate counts for one search: scanned vs. discarded up front."""

    examined: int
    pruned: int


@dataclass(frozen=True)
class Witness:
    """Monomial certifying that every variable multiplies into the ideal."""

    monomial: Monomial
    stats: SearchStats

    def support(self) -> VertexSet:
        return self.monomial.support()


@dataclass(frozen=True)
class _ScanSetup:
    n: int
    full: int
    disjoint_unions: tuple[int, ...]
    checks: tuple[tuple[int, tuple[int, ...], tuple[int, ...]], ...]
    forced: int
    excluded: int
    free_bits: tuple[int, ...]
    contradiction: bool


def _minimal_masks(masks) -> list[int]:
    distinct = sorted(set(masks))
    return [m for m in distinct
            if not any(o != m and o & m == o for o in distinct)]


def _prepare(graph: Graph) -> _ScanSetup:
    n = graph.n
    full = (1 << n) - 1
    adj = graph.adjacency_masks
    gens = _minimal_masks(adj[i] | (1 << i) for i in range(n))

    disjoint: list[int] = []
    ins: list[list[int]] = [[] for _ in range(n)]
    outs: list[list[int]] = [[] for _ in range(n)]
    for a, b in itertools.combinations(gens, 2):
        meet = a & b
        if meet == 0:
            disjoint.append(a | b)
        elif meet.bit_count() == 1:
            ins[meet.bit_length() - 1].append(a | b)
    for g in gens:
        if g.bit_count() == 1:
            ins[g.bit_length() - 1].append(g)  # x_v^2 divides x_v * x_U once v is in U
    for d in disjoint:
        rest = d
        while rest:
            low = rest & -rest
            outs[low.bit_length() - 1].append(d ^ low)
            rest ^= low

    forced = 0
    excluded = 0
    contradiction = False
    changed = True
    while changed and not contradiction:
        changed = False
        for v in range(n):
            bit = 1 << v
            has_in = any(blk & excluded == 0 for blk in ins[v])
            has_out = any(blk & excluded == 0 for blk in outs[v])
            if not has_in and not has_out:
                contradiction = True
                break
            if not has_in and not excluded & bit:
                excluded |= bit
                changed = True
            if not has_out and not forced & bit:
                forced |= bit
                changed = True
    if forced & excluded:
        contradiction = True
    if not contradiction and any(d & ~forced == 0 for d in disjoint):
        # every candidate would contain two disjoint supports outright
        contradiction = True

    checks = []
    for v in range(n):
        usable_in = sorted((blk for blk in ins[v] if blk & excluded == 0),
                           key=lambda m: (m.bit_count(), m))
        usable_out = sorted((blk for blk in outs[v] if blk & excluded == 0),
                            key=lambda m: (m.bit_count(), m))
        checks.append((1 << v, tuple(usable_in), tuple(usable_out)))

    free_bits = tuple(1 << v for v in range(n) if not (forced | excluded) >> v & 1)
    return _ScanSetup(n, full, tuple(disjoint), tuple(checks),
                      forced, excluded, free_bits, contradiction)


def _spread_gray(setup: _ScanSetup, idx: int) -> int:
    g = idx ^ (idx >> 1)
    mask = setup.forced
    for t, bit in enumerate(setup.free_bits):
        if g >> t & 1:
            mask |= bit
    return mask


def _scan_chunk(setup: _ScanSetup, lo: int, hi: int) -> list[int]:
    full = setup.full
    checks = setup.checks
    disjoint = setup.disjoint_unions
    free = setup.free_bits
    found: list[int] = []
    u = _spread_gray(setup, lo)
    idx = lo
    while True:
        not_u = u ^ full
        for bit, ins, outs in checks:
            for blk in (ins if u & bit else outs):
                if not blk & not_u:
                    break
            else:
                break
        else:
            for d in disjoint:
                if not d & not_u:
                    break
            else:
                found.append(u)
        idx += 1
        if idx >= hi:
            return found
        u ^= free[(idx & -idx).bit_length() - 1]


def _scan(setup: _ScanSetup, threads: int) -> list[int]:
    count = 1 << len(setup.free_bits)
    if threads <= 1 or count <= _CHUNK:
        return _scan_chunk(setup, 0, count)
    bounds = list(range(0, count, _CHUNK)) + [count]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(lambda i: _scan_chunk(setup, bounds[i], bounds[i + 1]),
                         range(len(bounds) - 1))
        return [u for part in parts for u in part]


def _support_key(mask: int):
    return (mask.bit_count(), _mask_members(mask))


def _verify_square_witness(square: MonomialIdeal, mask: int) -> Monomial:
    """Re-check a candidate purely through monomial arithmetic."""
    n = square.n
    f = Monomial.from_support(_mask_members(mask), n)
    if square.contains(f):
        raise RuntimeError(f"internal: witness candidate {f} lies in the ideal")
    for i in range(1, n + 1):
        if not square.contains(f * Monomial.variable(i, n)):
            raise RuntimeError(f"internal: witness candidate {f} misses variable x{i}")
    return f


def _square_stats(setup: _ScanSetup) -> SearchStats:
    scanned = 0 if setup.contradiction else 1 << len(setup.free_bits)
    return SearchStats(examined=scanned, pruned=(1 << setup.n) - scanned)


def find_square_witness(graph: Graph, *, budget: int = DEFAULT_BUDGET,
                        threads: int = 1) -> Witness | None:
    """Smallest witness for the square of the graph's closed neighborhood ideal.

    "Smallest" means fewest variables, then the lexicographically least
    support.  Returns None when the exhaustive scan proves there is no
    witness; raises BudgetExceededError when the candidate space is
    larger than ``budget``.
    """
    setup = _prepare(graph)
    stats = _square_stats(setup)
    if setup.contradiction:
        return None
    if 1 << len(setup.free_bits) > budget:
        raise BudgetExceededError(
            f"2^{len(setup.free_bits)} candidates exceed budget {budget}")
    found = _scan(setup, threads)
    if not found:
        return None
    best = min(found, key=_support_key)
    square = closed_neighborhood_ideal(graph).power(2)
    return Witness(_verify_square_witness(square, best), stats)


def all_square_witnesses(graph: Graph, *, limit: int = EXHAUSTIVE_LIMIT,
                         threads: int = 1) -> list[Witness]:
    """Every witness for the square of the closed neighborhood ideal, in canonical order."""
    if graph.n > limit:
        raise BudgetExceededError(f"{graph.n} vertices exceed the exhaustive limit {limit}")
    setup = _prepare(graph)
    stats = _square_stats(setup)
    if setup.contradiction:
        return []
    found = sorted(_scan(setup, threads), key=_support_key)
    if not found:
        return []
    square = closed_neighborhood_ideal(graph).power(2)
    return [Witness(_verify_square_witness(square, mask), stats) for mask in found]


def find_witness(ideal: MonomialIdeal, *, budget: int = DEFAULT_BUDGET) -> Witness | None:
    """Smallest witness for an arbitrary nonzero monomial ideal.

    Witnesses only occur with each exponent strictly below the largest
    exponent of that variable among the minimal generators, so the scan
    runs over exactly that box.  Exponential in general; the box size is
    capped by ``budget``.
    """
    if ideal.is_zero():
        raise ValueError("the zero ideal has no witnesses")
    n = ideal.n
    rho = [ideal.max_exponent(i) for i in range(1, n + 1)]
    if any(r == 0 for r in rho):
        # a variable absent from every generator can never multiply into the ideal
        return None
    return _box_scan(ideal, rho, budget)


def _box_scan(ideal: MonomialIdeal, rho: list[int], budget: int) -> Witness | None:
    n = ideal.n
    size = 1
    for r in rho:
        size *= max(r, 1)
    if size > budget:
        raise BudgetExceededError(f"{size} candidates exceed budget {budget}")
    variables = [Monomial.variable(i, n) for i in range(1, n + 1)]
    best: Monomial | None = None
    for exps in itertools.product(*(range(max(r, 1)) for r in rho)):
        f = Monomial(exps)
        if ideal.contains(f):
            continue
        if all(ideal.contains(f * x) for x in variables):
            if best is None or f.sort_key() < best.sort_key():
                best = f
    stats = SearchStats(examined=size, pruned=0)
    return Witness(best, stats) if best is not None else None
