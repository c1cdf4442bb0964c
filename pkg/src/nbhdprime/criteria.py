"""Certificate-based decision procedures.

The question decided here: does every variable multiply some fixed
monomial into the square of the graph's closed neighborhood ideal?
Equivalently, is the full variable ideal a colon ideal of that square.
Two routes answer it:

* BRUTE delegates to the exhaustive subset scan in :mod:`.witness`;
* CRITERIA reasons structurally: for diameter at most 2 the answer is
  exactly vertex diameter-2-criticality, and for diameter 3..6 it is the
  existence of a cover set C of the far-pair hypergraph satisfying three
  conditions (below).  Diameter above 6 is always negative, as is
  disconnection.

The far-pair hypergraph has one edge N[u] | N[v] per pair of vertices at
distance >= 3.  A subset C certifies a positive answer when

1. C meets every hypergraph edge,
2. every i in C owns an edge meeting C only in i, and
3. every j outside C has neighbors j1, j2 whose closed neighborhoods
   avoid C entirely and intersect exactly in {j}.

When both routes run they must agree; a mismatch aborts loudly.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from .errors import BudgetExceededError
from .graphs import INFINITE, Graph, VertexSet, _mask_members
from .monomials import Monomial
from .witness import (DEFAULT_BUDGET, SearchStats, Witness, find_square_witness)

__all__ = [
    "Verdict",
    "Method",
    "Obstruction",
    "Hypergraph",
    "Certificate",
    "ConditionReport",
    "Decision",
    "Prediction",
    "far_pair_hypergraph",
    "check_certificate_conditions",
    "find_certificate",
    "verify_certificate",
    "interior",
    "SupportStructureReport",
    "support_structure_report",
    "decide",
    "predict_cycle",
    "predict_cubic_circulant",
    "predict_kneser",
]


class Verdict(str, Enum):
    YES = "YES"
    NO = "NO"
    INDETERMINATE = "INDETERMINATE"


class Method(str, Enum):
    BRUTE = "BRUTE"
    CRITERIA = "CRITERIA"
    BOTH = "BOTH"


class Obstruction(str, Enum):
    DISCONNECTED = "DISCONNECTED"
    NOT_CRITICAL = "NOT_CRITICAL"
    DIAM_GT_6 = "DIAM_GT_6"
    NO_CERTIFICATE = "NO_CERTIFICATE"
    NO_WITNESS = "NO_WITNESS"


@dataclass(frozen=True)
class Hypergraph:
    """Deduplicated edge sets over the vertex universe {1..n}."""

    n: int
    edges: tuple[VertexSet, ...]


def _closed_masks(graph: Graph) -> list[int]:
    return [graph.adjacency_masks[i] | (1 << i) for i in range(graph.n)]


def far_pair_hypergraph(graph: Graph) -> Hypergraph:
    """One edge N[u] | N[v] per unordered pair at distance >= 3 (as a set).

    Empty exactly when the diameter is at most 2.  Requires connectivity.
    """
    if not graph.is_connected():
        raise ValueError("the far-pair hypergraph needs a connected graph")
    n = graph.n
    nb = _closed_masks(graph)
    ball2 = [nb[i] | _union_over(nb, nb[i]) for i in range(n)]
    edge_masks = set()
    for u in range(n):
        far = ~ball2[u] & ((1 << n) - 1) & ~((1 << (u + 1)) - 1)
        while far:
            low = far & -far
            v = low.bit_length() - 1
            edge_masks.add(nb[u] | nb[v])
            far ^= low
    ordered = sorted(edge_masks, key=lambda m: (m.bit_count(), _mask_members(m)))
    return Hypergraph(n, tuple(VertexSet(m, n) for m in ordered))


def _union_over(nb: list[int], mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= nb[low.bit_length() - 1]
        mask ^= low
    return out


@dataclass(frozen=True)
class Certificate:
    """Cover set C plus the per-vertex evidence making it checkable on its own.

    ``private_edges`` pairs each member i of C with a hypergraph edge
    meeting C only in i; ``outside_pairs`` gives, for each vertex j
    outside C, neighbors (j1, j2) whose closed neighborhoods avoid C and
    meet exactly in {j}.
    """

    vertices: VertexSet
    private_edges: tuple[tuple[int, VertexSet], ...]
    outside_pairs: tuple[tuple[int, int, int], ...]


@dataclass
class ConditionReport:
    """Outcome of the three certificate conditions for one candidate set."""

    cover_ok: bool
    private_ok: bool
    outside_ok: bool
    uncovered_edge: VertexSet | None = None
    unprivate_vertex: int | None = None
    unpaired_vertex: int | None = None
    private_edges: tuple[tuple[int, VertexSet], ...] = ()
    outside_pairs: tuple[tuple[int, int, int], ...] = ()

    @property
    def ok(self) -> bool:
        return self.cover_ok and self.private_ok and self.outside_ok


def _neighbor_pairs(graph: Graph) -> list[list[tuple[int, int, int]]]:
    """For each vertex j, the pairs (j1, j2, N[j1]|N[j2]) with N[j1] & N[j2] == {j}."""
    n = graph.n
    nb = _closed_masks(graph)
    out: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for j in range(n):
        nbrs = _mask_members(graph.adjacency_masks[j])
        for a, b in itertools.combinations(nbrs, 2):
            if nb[a - 1] & nb[b - 1] == 1 << j:
                out[j].append((a, b, nb[a - 1] | nb[b - 1]))
    return out


def check_certificate_conditions(graph: Graph, hypergraph: Hypergraph,
                                 cover: VertexSet, *, debug: bool = False) -> ConditionReport:
    """Evaluate the three certificate conditions for an arbitrary candidate set.

    With ``debug`` each reported neighbor pair is cross-checked against the
    distance formulation: distance 2 in the graph, at least 3 once the
    shared vertex is removed.
    """
    if graph.diameter() < 3:
        raise ValueError("certificate conditions apply only from diameter 3 up")
    n = graph.n
    c_mask = cover.bits
    edge_masks = [e.bits for e in hypergraph.edges]

    report = ConditionReport(cover_ok=True, private_ok=True, outside_ok=True)
    for e in edge_masks:
        if e & c_mask == 0:
            report.cover_ok = False
            report.uncovered_edge = VertexSet(e, n)
            break

    private = []
    for i in _mask_members(c_mask):
        bit = 1 << (i - 1)
        for e in edge_masks:
            if e & c_mask == bit:
                private.append((i, VertexSet(e, n)))
                break
        else:
            report.private_ok = False
            report.unprivate_vertex = i
            break
    if report.private_ok:
        report.private_edges = tuple(private)

    pairs = _neighbor_pairs(graph)
    chosen = []
    for j in _mask_members(~c_mask & ((1 << n) - 1)):
        for a, b, union in pairs[j - 1]:
            if union & c_mask == 0:
                chosen.append((j, a, b))
                break
        else:
            report.outside_ok = False
            report.unpaired_vertex = j
            break
    if report.outside_ok:
        report.outside_pairs = tuple(chosen)

    if debug:
        _debug_check_pairs(graph, report.outside_pairs)
    return report


def _debug_check_pairs(graph: Graph, outside_pairs):
    for j, a, b in outside_pairs:
        if graph.distance(a, b) != 2:
            raise RuntimeError(f"internal: pair ({a},{b}) for {j} not at distance 2")
        reduced, labels = graph.delete_vertex(j)
        pos = {old: new + 1 for new, old in enumerate(labels)}
        if reduced.distance(pos[a], pos[b]) < 3:
            raise RuntimeError(f"internal: pair ({a},{b}) stays close without {j}")


def find_certificate(graph: Graph, *, budget: int = DEFAULT_BUDGET,
                     threads: int = 1) -> Certificate | None:
    """Smallest certificate set, or None when no subset satisfies the conditions.

    Candidates are enumerated by increasing size and lexicographically
    within a size, so the first hit is canonical.  Two sound reductions
    shrink the space: members need a private edge, hence must lie in some
    hypergraph edge; vertices with no eligible neighbor pair can never
    stay outside the set, hence are forced in.
    """
    if not graph.is_connected():
        raise ValueError("certificate search needs a connected graph")
    if graph.diameter() < 3:
        raise ValueError("certificate search applies only from diameter 3 up")
    n = graph.n
    hypergraph = far_pair_hypergraph(graph)
    edge_masks = [e.bits for e in hypergraph.edges]
    pool_mask = 0
    for e in edge_masks:
        pool_mask |= e
    pairs = _neighbor_pairs(graph)
    forced = 0
    for j in range(n):
        if not pairs[j]:
            forced |= 1 << j
    if forced & ~pool_mask:
        return None  # a forced member cannot own a private edge
    free_labels = _mask_members(pool_mask & ~forced)
    forced_labels = _mask_members(forced)

    examined = 0
    for size in range(len(forced_labels), n + 1):
        k = size - len(forced_labels)
        if k > len(free_labels):
            break
        candidates = sorted(tuple(sorted(forced_labels + combo))
                            for combo in itertools.combinations(free_labels, k))
        examined += len(candidates)
        if examined > budget:
            raise BudgetExceededError(f"certificate search exceeded budget {budget}")
        hit = _first_valid(candidates, edge_masks, pairs, n, threads)
        if hit is not None:
            cover = VertexSet.of(hit, n)
            report = check_certificate_conditions(graph, hypergraph, cover)
            if not report.ok:
                raise RuntimeError("internal: candidate passed the scan but fails re-checking")
            return Certificate(cover, report.private_edges, report.outside_pairs)
    return None


def _candidate_ok(c_labels, edge_masks, pairs, n) -> bool:
    c_mask = 0
    for v in c_labels:
        c_mask |= 1 << (v - 1)
    for e in edge_masks:
        if e & c_mask == 0:
            return False
    for v in c_labels:
        bit = 1 << (v - 1)
        if not any(e & c_mask == bit for e in edge_masks):
            return False
    outside = ~c_mask & ((1 << n) - 1)
    while outside:
        low = outside & -outside
        j = low.bit_length() - 1
        if not any(union & c_mask == 0 for _, _, union in pairs[j]):
            return False
        outside ^= low
    return True


def _first_valid(candidates, edge_masks, pairs, n, threads):
    if threads <= 1 or len(candidates) < 1024:
        for c in candidates:
            if _candidate_ok(c, edge_masks, pairs, n):
                return c
        return None
    step = -(-len(candidates) // (threads * 4))
    chunks = [candidates[i:i + step] for i in range(0, len(candidates), step)]

    def first_in(chunk):
        for c in chunk:
            if _candidate_ok(c, edge_masks, pairs, n):
                return c
        return None

    with ThreadPoolExecutor(max_workers=threads) as pool:
        for hit in pool.map(first_in, chunks):
            if hit is not None:
                return hit
    return None


def verify_certificate(graph: Graph, certificate: Certificate) -> bool:
    """Re-check a certificate from its own evidence (plus the hypergraph edges)."""
    hypergraph = far_pair_hypergraph(graph)
    c_mask = certificate.vertices.bits
    n = graph.n
    nb = _closed_masks(graph)
    if any(e.bits & c_mask == 0 for e in hypergraph.edges):
        return False
    listed = {i for i, _ in certificate.private_edges}
    if listed != set(certificate.vertices.members()):
        return False
    for i, e in certificate.private_edges:
        if e not in hypergraph.edges or e.bits & c_mask != 1 << (i - 1):
            return False
    paired = {j for j, _, _ in certificate.outside_pairs}
    if paired != set(VertexSet(~c_mask & ((1 << n) - 1), n).members()):
        return False
    for j, a, b in certificate.outside_pairs:
        if not (graph.has_edge(j, a) and graph.has_edge(j, b)):
            return False
        if nb[a - 1] & nb[b - 1] != 1 << (j - 1):
            return False
        if (nb[a - 1] | nb[b - 1]) & c_mask:
            return False
    return True


# -- structural reporting -----------------------------------------------------


def interior(graph: Graph, region) -> VertexSet:
    """Members of the region whose whole closed neighborhood stays inside it."""
    if not isinstance(region, VertexSet):
        region = VertexSet.of(region, graph.n)
    nb = _closed_masks(graph)
    bits = 0
    rest = region.bits
    while rest:
        low = rest & -rest
        if nb[low.bit_length() - 1] & ~region.bits == 0:
            bits |= low
        rest ^= low
    return VertexSet(bits, graph.n)


@dataclass(frozen=True)
class SupportStructureReport:
    """Structural facts every witness support must exhibit."""

    interior_set: VertexSet
    nonempty: bool
    pairwise_close: bool
    has_cycle: bool

    @property
    def ok(self) -> bool:
        return self.nonempty and self.pairwise_close and self.has_cycle


def support_structure_report(graph: Graph, support) -> SupportStructureReport:
    """Check a support set: nonempty interior, interior pairwise within distance 2,
    and a cycle inside the subgraph induced on the interior."""
    if not isinstance(support, VertexSet):
        support = VertexSet.of(support, graph.n)
    inner = interior(graph, support)
    if not inner:
        return SupportStructureReport(inner, False, True, False)
    members = inner.members()
    close = all(graph.distance(u, v) <= 2
                for u, v in itertools.combinations(members, 2))
    sub, _ = graph.induced_subgraph(inner)
    return SupportStructureReport(inner, True, close, sub.contains_cycle())


# -- the decision -------------------------------------------------------------


@dataclass(frozen=True)
class Decision:
    """Verdict plus whatever evidence the route that produced it can offer."""

    verdict: Verdict
    method: Method
    diameter: int | float
    obstruction: Obstruction | None = None
    witness: Monomial | None = None
    certificate: Certificate | None = None
    search: SearchStats | None = None
    degenerate: bool = False


def decide(graph: Graph, method: Method = Method.BOTH, *,
           budget: int = DEFAULT_BUDGET, threads: int = 1) -> Decision:
    """Decide whether the square of the closed neighborhood ideal admits a witness.

    ``BRUTE`` searches exhaustively, ``CRITERIA`` applies the structural
    characterizations, ``BOTH`` runs the two and insists they agree.
    """
    if method == Method.BRUTE:
        decision = _decide_brute(graph, budget, threads)
    elif method == Method.CRITERIA:
        decision = _decide_criteria(graph, budget, threads)
    else:
        decision = _merge(graph, _decide_criteria(graph, budget, threads),
                          _decide_brute(graph, budget, threads))
    if decision.verdict == Verdict.YES and decision.diameter > 6:
        raise RuntimeError("internal: affirmative verdict with diameter above 6")
    return decision


def _decide_brute(graph: Graph, budget: int, threads: int) -> Decision:
    diam = graph.diameter()
    try:
        witness = find_square_witness(graph, budget=budget, threads=threads)
    except BudgetExceededError:
        return Decision(Verdict.INDETERMINATE, Method.BRUTE, diam)
    if witness is None:
        return Decision(Verdict.NO, Method.BRUTE, diam, obstruction=Obstruction.NO_WITNESS)
    return Decision(Verdict.YES, Method.BRUTE, diam,
                    witness=witness.monomial, search=witness.stats)


def _decide_criteria(graph: Graph, budget: int, threads: int) -> Decision:
    n = graph.n
    if n == 1:
        # single vertex: x1 itself is a witness, outside the diameter-2 criterion
        return Decision(Verdict.YES, Method.CRITERIA, 0,
                        witness=Monomial.variable(1, 1), degenerate=True)
    if not graph.is_connected():
        return Decision(Verdict.NO, Method.CRITERIA, INFINITE,
                        obstruction=Obstruction.DISCONNECTED)
    diam = graph.diameter()
    if diam <= 2:
        if graph.is_vertex_diameter_critical(2):
            return Decision(Verdict.YES, Method.CRITERIA, diam,
                            witness=Monomial.from_support(VertexSet.full(n), n))
        return Decision(Verdict.NO, Method.CRITERIA, diam,
                        obstruction=Obstruction.NOT_CRITICAL)
    if diam > 6:
        return Decision(Verdict.NO, Method.CRITERIA, diam,
                        obstruction=Obstruction.DIAM_GT_6)
    try:
        certificate = find_certificate(graph, budget=budget, threads=threads)
    except BudgetExceededError:
        return Decision(Verdict.INDETERMINATE, Method.CRITERIA, diam)
    if certificate is None:
        return Decision(Verdict.NO, Method.CRITERIA, diam,
                        obstruction=Obstruction.NO_CERTIFICATE)
    implied = Monomial.from_support(certificate.vertices.complement(), n)
    return Decision(Verdict.YES, Method.CRITERIA, diam,
                    witness=implied, certificate=certificate)


def _merge(graph: Graph, by_criteria: Decision, by_brute: Decision) -> Decision:
    if by_criteria.verdict == Verdict.INDETERMINATE:
        return by_brute
    if by_brute.verdict == Verdict.INDETERMINATE:
        return by_criteria
    if by_criteria.verdict != by_brute.verdict:
        raise RuntimeError(
            f"internal: routes disagree on a graph with {graph.n} vertices: "
            f"criteria={by_criteria.verdict.value} brute={by_brute.verdict.value}")
    return Decision(by_criteria.verdict, Method.BOTH, by_criteria.diameter,
                    obstruction=by_criteria.obstruction,
                    witness=by_brute.witness or by_criteria.witness,
                    certificate=by_criteria.certificate,
                    search=by_brute.search,
                    degenerate=by_criteria.degenerate)


# -- closed-form family predictions -------------------------------------------


@dataclass(frozen=True)
class Prediction:
    """Closed-form verdict for a graph family member."""

    verdict: Verdict
    conjectural: bool = False
    note: str = ""


def predict_cycle(n: int) -> Prediction:
    """Cycles admit a witness only at n = 5."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if n == 5:
        return Prediction(Verdict.YES)
    if n <= 4:
        return Prediction(Verdict.NO, note="not vertex diameter-2-critical")
    if n // 2 > 6:
        return Prediction(Verdict.NO, note="diameter above 6")
    return Prediction(Verdict.NO, note="no certificate set exists")


def predict_cubic_circulant(n: int, strides) -> Prediction:
    """Among cubic circulants, only the 8-vertex one with strides {1,4} qualifies.

    Valid inputs are the cubic forms: strides {1, n/2}, or {2, n/2} with
    n/2 odd for connectivity.
    """
    strides = frozenset(strides)
    if n < 4 or n % 2:
        raise ValueError("a cubic circulant has an even vertex count >= 4")
    half = n // 2
    if strides == {1, half}:
        pass
    elif strides == {2, half}:
        if half % 2 == 0:
            return Prediction(Verdict.NO, note="disconnected")
    else:
        raise ValueError(f"strides {set(strides)} do not give a cubic circulant on {n} vertices")
    if n == 8 and strides == {1, 4}:
        return Prediction(Verdict.YES)
    if half <= 4:
        return Prediction(Verdict.NO, note="not vertex diameter-2-critical")
    return Prediction(Verdict.NO, note="no certificate set exists")


def predict_kneser(n: int, k: int) -> Prediction:
    """Disjointness graphs on k-subsets of an n-set.

    Proven for n >= 3k-1 (affirmative exactly at n = 3k-1 with k >= 2)
    and for the disconnected range n <= 2k; the remaining band is only
    conjectured negative and is flagged as such.
    """
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    if n >= 3 * k - 1:
        if k >= 2 and n == 3 * k - 1:
            return Prediction(Verdict.YES)
        return Prediction(Verdict.NO, note="not vertex diameter-2-critical")
    if n <= 2 * k:
        return Prediction(Verdict.NO, note="disconnected")
    return Prediction(Verdict.NO, conjectural=True, note="conjectured only; unproven range")
