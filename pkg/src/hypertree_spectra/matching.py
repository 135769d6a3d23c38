"""Exact matching counts and the matching polynomial.

Counts m(H, k) of k-matchings are computed with the edge-deletion
recurrence m(H, k) = m(H \\ e, k) + m(H - V(e), k - 1), splitting on a
pendent edge whenever the input is acyclic so both branches stay
hyperforests and memoize by canonical code.  Everything is arbitrary
precision; the brute-force subset enumerator is kept as an independent
oracle.

The matching polynomial of a hypergraph of order n is
phi(H, x) = sum_k (-1)^k m(H, k) x^(n - k r), of degree n, so hypergraphs
of equal order always get equal-degree polynomials and deletion
identities line up exponent by exponent without manual shifting.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .hypergraph import (
    Hypergraph,
    canonical_code,
    connected_components,
    delete_edge,
    delete_edge_closed,
    is_acyclic,
    restrict,
    validate,
)

BRUTE_FORCE_EDGE_LIMIT = 25

# append-only, immutable values: concurrent readers always see value semantics
_cache: dict = {}


def clear_matching_cache() -> None:
    _cache.clear()


@dataclass(frozen=True)
class MatchingProfile:
    """Counts (m(H,0), ..., m(H,nu)) with nu the matching number."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if not self.counts or self.counts[0] != 1:
            raise ValueError("counts must start with m(H,0) = 1")
        if self.counts[-1] < 1:
            raise ValueError("trailing count must be positive")

    @property
    def nu(self) -> int:
        return len(self.counts) - 1


@dataclass
class MatchPoly:
    """phi(H, x) stored exactly as exponent -> integer coefficient."""

    n: int
    r: int
    coeffs: dict[int, int]

    def __post_init__(self):
        self.coeffs = {e: c for e, c in self.coeffs.items() if c != 0}
        if self.coeffs.get(self.n) != 1:
            raise ValueError("leading term must be x^n with coefficient 1")
        for e, c in self.coeffs.items():
            if e < 0 or e > self.n or (self.n - e) % self.r:
                raise ValueError(f"exponent {e} not congruent to n mod r")
            k = (self.n - e) // self.r
            if (c > 0) != (k % 2 == 0):
                raise ValueError("signs must alternate with k")

    @property
    def nu(self) -> int:
        return max((self.n - e) // self.r for e in self.coeffs)

    def counts(self) -> tuple[int, ...]:
        return tuple(abs(self.coeffs.get(self.n - k * self.r, 0)) for k in range(self.nu + 1))

    def evaluate(self, x):
        """Exact for int/Fraction arguments, float otherwise."""
        return sum(c * x**e for e, c in self.coeffs.items())

    def z_coeffs(self) -> list[int]:
        """Coefficients of p(z) with phi(H, x) = x^(n - nu*r) * p(x^r), ascending."""
        nu = self.nu
        cnt = self.counts()
        return [(-1) ** (nu - j) * cnt[nu - j] for j in range(nu + 1)]

    def to_json_dict(self) -> dict:
        coeffs = {str(e): str(self.coeffs[e]) for e in sorted(self.coeffs, reverse=True)}
        return {"n": self.n, "r": self.r, "coeffs": coeffs}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "MatchPoly":
        coeffs = {int(e): int(c) for e, c in data["coeffs"].items()}
        return cls(int(data["n"]), int(data["r"]), coeffs)

    @classmethod
    def from_json(cls, text: str) -> "MatchPoly":
        return cls.from_json_dict(json.loads(text))


def _convolve(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _pendent_edge(H: Hypergraph) -> tuple[int, ...]:
    deg = [0] * H.n
    for e in H.edges:
        for v in e:
            deg[v] += 1
    for e in H.edges:
        if sum(1 for v in e if deg[v] == 1) == len(e) - 1:
            return e
    return H.edges[0]


def _counts(H: Hypergraph) -> tuple[int, ...]:
    if H.m == 0:
        return (1,)
    if H.m == 1:
        return (1, 1)
    comps = connected_components(H)
    if len(comps) > 1:
        total = (1,)
        for comp in comps:
            if len(comp) == 1:
                continue
            total = _convolve(total, _counts(restrict(H, comp).hypergraph))
        return total
    acyclic = is_acyclic(H)
    key = (b"F", canonical_code(H)) if acyclic else (b"X", H.r, H.n, H.edges)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    e = _pendent_edge(H) if acyclic else H.edges[0]
    skip = _counts(delete_edge(H, e))
    take = _counts(delete_edge_closed(H, e).hypergraph)
    out = list(skip) + [0] * max(0, len(take) + 1 - len(skip))
    for k, c in enumerate(take):
        out[k + 1] += c
    result = tuple(out)
    _cache[key] = result
    return result


def matching_counts(H: Hypergraph) -> MatchingProfile:
    """Exact k-matching counts for every k up to the matching number."""
    report = validate(H)
    if not (report.uniform and report.linear):
        raise ValueError(f"invalid hypergraph: {'; '.join(report.violations)}")
    return MatchingProfile(_counts(H))


def matching_number(H: Hypergraph) -> int:
    return matching_counts(H).nu


def matching_polynomial(H: Hypergraph) -> MatchPoly:
    profile = matching_counts(H)
    coeffs = {H.n - k * H.r: (-1) ** k * c for k, c in enumerate(profile.counts)}
    return MatchPoly(H.n, H.r, coeffs)


def brute_force_counts(H: Hypergraph) -> MatchingProfile:
    """Independent oracle: enumerate pairwise-disjoint edge subsets by size.

    The search walks every matching exactly once (subsets already sharing
    a vertex are abandoned), so it touches none of the recurrence code.
    """
    if H.m > BRUTE_FORCE_EDGE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_EDGE_LIMIT} edges")
    masks = [0] * H.m
    for i, e in enumerate(H.edges):
        for v in e:
            masks[i] |= 1 << v
    counts = [0] * (H.m + 1)
    counts[0] = 1

    def walk(start: int, used: int, size: int) -> None:
        for j in range(start, H.m):
            if masks[j] & used:
                continue
            counts[size + 1] += 1
            walk(j + 1, used | masks[j], size + 1)

    walk(0, 0, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return MatchingProfile(tuple(counts))
