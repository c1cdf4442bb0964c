"""Exact monomials and monomial ideals with minimal generating sets.

A monomial is an exponent vector over the variables x_1..x_n.  Ideals
keep their generators divisibility-minimal and in one fixed order
(ascending total degree, then supports favoring low variable indices),
so equal ideals print identically and comparisons are plain equality.
All operations are pure; the coefficient field never enters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import BudgetExceededError
from .graphs import Graph, VertexSet

__all__ = [
    "Monomial",
    "MonomialIdeal",
    "minimalize",
    "parse_monomial",
    "closed_neighborhood_ideal",
    "edge_ideal",
    "graph_from_edge_ideal",
]

# Cap on pairwise generator products formed by one ideal multiplication.
DEFAULT_PRODUCT_BUDGET = 250_000

_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Monomial:
    """Monomial as a tuple of nonnegative exponents, one per variable."""

    exps: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise ValueError("exponents must be nonnegative")

    @classmethod
    def unit(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int) -> "Monomial":
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside 1..{n}")
        return cls(tuple(1 if j == i - 1 else 0 for j in range(n)))

    @classmethod
    def from_support(cls, labels, n: int) -> "Monomial":
        """Squarefree monomial whose variables are exactly the given labels."""
        if isinstance(labels, VertexSet):
            labels = labels.members()
        exps = [0] * n
        for v in labels:
            if not 1 <= v <= n:
                raise ValueError(f"variable index {v} outside 1..{n}")
            exps[v - 1] = 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exps)

    def degree(self) -> int:
        return sum(self.exps)

    def degree_of(self, i: int) -> int:
        """Exponent of x_i (1-based)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} outside 1..{self.n}")
        return self.exps[i - 1]

    def support(self) -> VertexSet:
        bits = 0
        for j, e in enumerate(self.exps):
            if e:
                bits |= 1 << j
        return VertexSet(bits, self.n)

    def is_unit(self) -> bool:
        return all(e == 0 for e in self.exps)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check_ambient(other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: "Monomial") -> bool:
        self._check_ambient(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def colon_by(self, f: "Monomial") -> "Monomial":
        """self / gcd(self, f): drop from each exponent what f already covers."""
        self._check_ambient(f)
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exps, f.exps)))

    def sort_key(self):
        """Canonical order: total degree, then low-index-heavy supports first."""
        return (sum(self.exps), tuple(-e for e in self.exps))

    def _check_ambient(self, other: "Monomial"):
        if len(self.exps) != len(other.exps):
            raise ValueError(f"ambient mismatch: {len(self.exps)} vs {len(other.exps)} variables")

    def __str__(self) -> str:
        parts = []
        for j, e in enumerate(self.exps):
            if e == 1:
                parts.append(f"x{j + 1}")
            elif e > 1:
                parts.append(f"x{j + 1}^{e}")
        return "*".join(parts) if parts else "1"


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse "x1*x3^2*x7" (or "1" for the unit) into a monomial on n variables."""
    text = text.strip()
    if text == "1":
        return Monomial.unit(n)
    exps = [0] * n
    for factor in text.split("*"):
        m = _FACTOR_RE.match(factor.strip())
        if not m:
            raise ValueError(f"bad factor {factor!r} in monomial {text!r}")
        i = int(m.group(1))
        e = int(m.group(2)) if m.group(2) else 1
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside x1..x{n} in {text!r}")
        if e < 1:
            raise ValueError(f"exponent of x{i} must be positive in {text!r}")
        if exps[i - 1]:
            raise ValueError(f"variable x{i} repeated in {text!r}")
        exps[i - 1] = e
    return Monomial(tuple(exps))


def _minimal_sorted(raw, n: int) -> tuple[Monomial, ...]:
    """Divisibility-minimal elements of ``raw``, canonically sorted."""
    seen = set()
    items = []
    for f in raw:
        if f.n != n:
            raise ValueError(f"monomial on {f.n} variables in an ambient of {n}")
        if f.exps not in seen:
            seen.add(f.exps)
            items.append(f)
    items.sort(key=Monomial.sort_key)
    kept: list[Monomial] = []
    for f in items:
        # previously kept monomials have degree <= deg(f); only they can divide f
        if not any(g.divides(f) for g in kept):
            kept.append(f)
    return tuple(kept)


class MonomialIdeal:
    """Monomial ideal via its unique minimal monomial generating set."""

    __slots__ = ("n", "gens")

    def __init__(self, n: int, generators=()):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", _minimal_sorted(generators, n))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def __eq__(self, other) -> bool:
        return (isinstance(other, MonomialIdeal)
                and self.n == other.n and self.gens == other.gens)

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __repr__(self) -> str:
        inside = ", ".join(str(g) for g in self.gens) or "0"
        return f"MonomialIdeal({inside}; n={self.n})"

    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, f: Monomial) -> bool:
        if f.n != self.n:
            raise ValueError(f"ambient mismatch: {f.n} vs {self.n}")
        return any(g.divides(f) for g in self.gens)

    def product(self, other: "MonomialIdeal", *,
                budget: int = DEFAULT_PRODUCT_BUDGET) -> "MonomialIdeal":
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: {self.n} vs {other.n}")
        if len(self.gens) * len(other.gens) > budget:
            raise BudgetExceededError(
                f"{len(self.gens)} x {len(other.gens)} generator products exceed budget {budget}")
        return MonomialIdeal(self.n, (g * h for g in self.gens for h in other.gens))

    def power(self, t: int, *, budget: int = DEFAULT_PRODUCT_BUDGET) -> "MonomialIdeal":
        if t < 1:
            raise ValueError("power exponent must be >= 1")
        out = self
        for _ in range(t - 1):
            out = out.product(self, budget=budget)
        return out

    def colon(self, f: Monomial) -> "MonomialIdeal":
        """All h with h*f in the ideal: generated by g/gcd(g, f) over generators g."""
        if f.n != self.n:
            raise ValueError(f"ambient mismatch: {f.n} vs {self.n}")
        return MonomialIdeal(self.n, (g.colon_by(f) for g in self.gens))

    def is_maximal_ideal(self) -> bool:
        """True iff the generators are exactly x_1, ..., x_n."""
        return self.gens == tuple(Monomial.variable(i, self.n) for i in range(1, self.n + 1))

    def max_exponent(self, i: int) -> int:
        """Largest exponent of x_i over the minimal generators (0 if absent)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} outside 1..{self.n}")
        return max((g.exps[i - 1] for g in self.gens), default=0)

    def to_text(self) -> str:
        return "\n".join(str(g) for g in self.gens) + ("\n" if self.gens else "")

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> "MonomialIdeal":
        """Parse one monomial per line; '#' comments and blank lines are ignored.

        When n is omitted it is inferred as the largest variable index used.
        """
        lines = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                lines.append(line)
        if n is None:
            top = 0
            for line in lines:
                for m in re.finditer(r"x(\d+)", line):
                    top = max(top, int(m.group(1)))
            if top == 0 and any(line != "1" for line in lines):
                raise ValueError("cannot infer the variable count from an empty ideal")
            n = top
        return cls(n, (parse_monomial(line, n) for line in lines))


def minimalize(raw, n: int) -> MonomialIdeal:
    """Ideal generated by the given monomials, reduced to minimal generators."""
    return MonomialIdeal(n, raw)


# -- ideals attached to graphs -------------------------------------------------


def closed_neighborhood_ideal(graph: Graph) -> MonomialIdeal:
    """Ideal generated by the products of the variables over each closed neighborhood."""
    n = graph.n
    gens = (Monomial.from_support(graph.closed_neighborhood(v), n)
            for v in range(1, n + 1))
    return MonomialIdeal(n, gens)


def edge_ideal(graph: Graph) -> MonomialIdeal:
    """Ideal generated by x_u * x_v over the edges of the graph."""
    n = graph.n
    return MonomialIdeal(n, (Monomial.from_support((u, v), n) for u, v in graph.edges()))


def graph_from_edge_ideal(generators, n: int | None = None) -> Graph:
    """Inverse of :func:`edge_ideal`; each generator must be squarefree of degree 2."""
    if isinstance(generators, MonomialIdeal):
        if n is None:
            n = generators.n
        elif n != generators.n:
            raise ValueError(f"ambient mismatch: {generators.n} vs {n}")
        generators = generators.gens
    else:
        generators = tuple(generators)
        if n is None:
            if not generators:
                raise ValueError("cannot infer the vertex count from no generators")
            n = generators[0].n
    edges = []
    for g in generators:
        if g.n != n:
            raise ValueError(f"monomial on {g.n} variables in an ambient of {n}")
        if not g.is_squarefree() or g.degree() != 2:
            raise ValueError(f"generator {g} is not a product of two distinct variables")
        edges.append(g.support().members())
    return Graph.from_edge_list(n, edges)
