"""Named hypertree families and the closed-form extremal bounds.

The extremal family: given m edges, a target matching size k, and edge
size r, write k - 1 = (r-1) q + s with 0 <= s < r - 1 and
l = m - (q r + s + 1).  The maximizer A(m, k, r) is the loaded star
S((r-1)^(q), s, 0^(l)): a hyperstar on q + 1 + l edges with r - 1
pendent edges attached to each of q star edges and s attached to one
more.  Its spectral radius is (1/(1 - alpha0))^(1/r) where alpha0 is the
maximum root in (0, 1) of

    x^(r-1) * (1/(1-x) - x^(-s) - l) = q,

which specializes, for hypertrees with a perfect matching, to
r x^r = (m - 1)(1 - x).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .hypergraph import Hypergraph, single_edge
from .matching import matching_number


class InfeasibleParameters(ValueError):
    """No hypertree with these (m, k, r) exists; nothing to bound."""


@dataclass(frozen=True)
class ExtremalParams:
    m: int
    k: int
    r: int
    q: int
    s: int
    l: int
    feasible: bool


@dataclass(frozen=True)
class BoundResult:
    alpha0: float
    rho: float


@dataclass(frozen=True)
class CompositionVector:
    """Non-increasing nonnegative integer vector with a cap: member of A^c_(a,b)."""

    entries: tuple[int, ...]
    cap: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if any(e < 0 for e in self.entries):
            raise ValueError("entries must be nonnegative")
        if any(a < b for a, b in zip(self.entries, self.entries[1:])):
            raise ValueError("entries must be non-increasing")
        if self.entries and self.cap < self.entries[0]:
            raise ValueError(f"cap {self.cap} below largest entry {self.entries[0]}")

    @property
    def total(self) -> int:
        return sum(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def _entry_list(pendants: Union[CompositionVector, Sequence[int]]) -> list[int]:
    if isinstance(pendants, CompositionVector):
        return list(pendants.entries)
    return [int(a) for a in pendants]


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def hyperstar(m: int, r: int) -> Hypergraph:
    """S_m^r: m edges pairwise intersecting exactly in the center vertex 0."""
    if m < 1:
        raise ValueError("a hyperstar needs at least one edge")
    if r < 2:
        raise ValueError("edge size must be at least 2")
    edges = []
    for i in range(m):
        base = 1 + i * (r - 1)
        edges.append((0, *range(base, base + r - 1)))
    return Hypergraph(r, m * (r - 1) + 1, tuple(edges))


def _attach_pendent(edges: list[tuple[int, ...]], n: int, v: int, r: int) -> int:
    """Append a pendent edge at v using fresh vertex ids; returns the new n."""
    edges.append((v, *range(n, n + r - 1)))
    return n + r - 1


def build_S(pendants: Union[CompositionVector, Sequence[int]], r: int) -> Hypergraph:
    """S(a_1, ..., a_b): hyperstar on b edges with a_i pendent edges on edge i.

    Pendants are attached at the lowest-id core vertices of their star
    edge; any choice of distinct core vertices gives an isomorphic result,
    so the deterministic pick only pins the labeling.
    """
    a = _entry_list(pendants)
    if not a:
        raise ValueError("need at least one star edge")
    if any(x < 0 for x in a):
        raise ValueError("pendant counts must be nonnegative")
    if any(x > r - 1 for x in a):
        raise ValueError(f"an edge has only {r - 1} core vertices for pendants")
    star = hyperstar(len(a), r)
    edges = list(star.edges)
    n = star.n
    for i, count in enumerate(a):
        base = 1 + i * (r - 1)
        for t in range(count):
            n = _attach_pendent(edges, n, base + t, r)
    return Hypergraph(r, n, tuple(edges))


def build_Ra(a: int, r: int) -> Hypergraph:
    """R_a: one central edge with a pendent edges on a of its vertices."""
    if not 1 <= a <= r:
        raise ValueError(f"need 1 <= a <= {r}")
    H = single_edge(r)
    edges = list(H.edges)
    n = H.n
    for v in range(a):
        n = _attach_pendent(edges, n, v, r)
    return Hypergraph(r, n, tuple(edges))


def build_Tva(T: Hypergraph, v: int, a: int) -> Hypergraph:
    """T(v; a): glue R_a to T by identifying a free core vertex of its
    central edge with v.  a = 0 degenerates to a bare pendent edge at v."""
    T.check_vertex(v)
    if not 0 <= a <= T.r - 1:
        raise ValueError(f"need 0 <= a <= {T.r - 1} so the central edge keeps a free core vertex")
    r = T.r
    edges = list(T.edges)
    n = T.n
    central = (v, *range(n, n + r - 1))
    attach_points = central[1 : 1 + a]
    edges.append(central)
    n += r - 1
    for u in attach_points:
        n = _attach_pendent(edges, n, u, r)
    return Hypergraph(r, n, tuple(edges))


def build_Tvab(T: Hypergraph, v: int, a: int, b: int) -> Hypergraph:
    """T(v; a, b): two R-gadgets glued at the same vertex of T."""
    return build_Tva(build_Tva(T, v, b), v, a)


# ---------------------------------------------------------------------------
# extremal parameters and the family A(m, k, r)
# ---------------------------------------------------------------------------


def extremal_params(m: int, k: int, r: int) -> ExtremalParams:
    """Euclidean split k-1 = (r-1)q + s plus l = m - (qr + s + 1).

    Feasibility needs l >= 0 and kr <= m(r-1) + 1 (a k-matching occupies
    kr distinct vertices); the s > 0, l = 0 corner is exactly the
    vertex-count violation.  Infeasibility is reported, never raised.
    """
    if r < 2:
        raise ValueError("edge size must be at least 2")
    if not m >= k >= 1:
        raise ValueError("need m >= k >= 1")
    q, s = divmod(k - 1, r - 1)
    l = m - (q * r + s + 1)
    feasible = l >= 0 and k * r <= m * (r - 1) + 1
    return ExtremalParams(m=m, k=k, r=r, q=q, s=s, l=l, feasible=feasible)


def build_A(m: int, k: int, r: int) -> Hypergraph:
    """The extremal hypertree A(m, k, r) = S((r-1)^(q), s, 0^(l))."""
    p = extremal_params(m, k, r)
    if not p.feasible:
        raise InfeasibleParameters(f"no hypertree with m={m}, k={k}, r={r}")
    composition = [r - 1] * p.q + [p.s] + [0] * p.l
    composition.sort(reverse=True)
    H = build_S(composition, r)
    assert H.m == m, "edge count drifted"
    assert matching_number(H) == k, "matching number drifted"
    return H


# ---------------------------------------------------------------------------
# closed-form bounds
# ---------------------------------------------------------------------------


class BracketingError(RuntimeError):
    """Root bracketing failed; carries the scanned points for diagnosis."""

    def __init__(self, message: str, trace: list[tuple[float, float]]):
        super().__init__(message)
        self.trace = trace


def _bisect_newton(g, dg, neg_end: float, pos_end: float, width: float = 1e-14) -> float:
    """Locate the crossing on a bracket with g(neg_end) <= 0 < g(pos_end).

    Plain bisection down to `width`, then a few Newton steps confined to
    the bracket; the endpoints may arrive in either order.
    """
    a, b = neg_end, pos_end
    while abs(b - a) > width:
        mid = (a + b) / 2
        if g(mid) > 0:
            b = mid
        else:
            a = mid
    lo, hi = min(a, b), max(a, b)
    x = (a + b) / 2
    for _ in range(4):
        d = dg(x)
        if d == 0:
            break
        step = g(x) / d
        nxt = x - step
        if not lo - width <= nxt <= hi + width:
            break
        x = nxt
        if abs(step) < 1e-16:
            break
    return x


def _certify_maximum_root(g, alpha0: float, grid: int = 10**4) -> None:
    """Check g keeps one sign on (alpha0, 1): no larger root was missed."""
    gap = 1.0 - alpha0
    bad = []
    for i in range(1, grid):
        pt = alpha0 + gap * i / grid
        if pt >= 1.0:
            break
        if g(pt) <= 0:
            bad.append((pt, g(pt)))
    if bad:
        raise BracketingError(
            f"sign change above alpha0={alpha0!r}; not the maximum root", bad
        )


def rho_bound(m: int, k: int, r: int) -> BoundResult:
    """Closed-form spectral-radius bound for hypertrees with a k-matching.

    alpha0 is the maximum root in (0, 1) of
    g(a) = a^(r-1) (1/(1-a) - a^(-s) - l) - q, found by scanning a
    geometric grid down from 1 (where g -> +inf) for the sign change
    nearest 1, then bisecting.  rho = (1/(1-alpha0))^(1/r).
    """
    p = extremal_params(m, k, r)
    if not p.feasible:
        raise InfeasibleParameters(f"no hypertree with m={m}, k={k}, r={r}")
    q, s, l = p.q, p.s, p.l
    if q == 0 and s == 0 and l == 0:
        return BoundResult(alpha0=0.0, rho=1.0)

    def g(a: float) -> float:
        recip = 1.0 if s == 0 else a**-s
        return a ** (r - 1) * (1.0 / (1.0 - a) - recip - l) - q

    def dg(a: float) -> float:
        out = (r - 1) * a ** (r - 2) / (1.0 - a) + a ** (r - 1) / (1.0 - a) ** 2
        out -= (r - 1 - s) * a ** (r - 2 - s)
        out -= l * (r - 1) * a ** (r - 2)
        return out

    # geometric grid covering (0, 1) densely near both ends, scanned from 1
    alphas = []
    delta = 1e-12
    while delta < 1.0:
        alphas.append(1.0 - delta)
        delta *= 2
    while alphas[-1] > 1e-15:
        alphas.append(alphas[-1] / 2)
    trace = []
    prev = None
    bracket = None
    for alpha in alphas:
        val = g(alpha)
        trace.append((alpha, val))
        if val <= 0:
            bracket = (alpha, prev)
            break
        prev = alpha
    if bracket is None or bracket[1] is None:
        raise BracketingError(
            f"no sign change of the bound equation in (0, 1) for m={m}, k={k}, r={r}",
            trace,
        )
    alpha0 = _bisect_newton(g, dg, bracket[0], bracket[1])
    _certify_maximum_root(g, alpha0)
    return BoundResult(alpha0=alpha0, rho=(1.0 / (1.0 - alpha0)) ** (1.0 / r))


def perfect_matching_bound(m: int, r: int) -> BoundResult:
    """Bound specialization when the matching is perfect (kr = m(r-1) + 1).

    alpha0 is the maximum root in (0, 1) of r a^r = (m-1)(1-a); the left
    side increases and the right side decreases, so the root is unique.
    """
    n = m * (r - 1) + 1
    if n % r:
        raise InfeasibleParameters(
            f"m={m}, r={r}: perfect matching needs r | m(r-1)+1 (n={n})"
        )
    if m == 1:
        return BoundResult(alpha0=0.0, rho=1.0)

    def g(a: float) -> float:
        return (m - 1) * (1.0 - a) - r * a**r

    def dg(a: float) -> float:
        return -(m - 1) - r * r * a ** (r - 1)

    alpha0 = _bisect_newton(g, dg, neg_end=1.0, pos_end=0.0)
    return BoundResult(alpha0=alpha0, rho=(1.0 / (1.0 - alpha0)) ** (1.0 / r))
