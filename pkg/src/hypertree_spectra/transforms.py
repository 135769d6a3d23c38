"""Hypertree rewrites, the matching-polynomial order, and majorization.

Edge-moving replaces chosen edges e_i by (e_i \\ {v_i}) | {u}; when the
principal eigenvector satisfies x_u >= max x_{v_i} the spectral radius
strictly grows.  Edge-releasing a non-pendent edge e at u moves every
edge adjacent to e but missing u over to u (any choice of u in e gives
isomorphic output, so u is pinned to e's lowest vertex id).

For hyperforests of equal order, T1 precedes T2 when
phi(T1, x) >= phi(T2, x) for every x >= rho(T1), strictly when the
difference also misses zero at x = rho(T1).  Both questions are decided
exactly: substituting z = x^r turns the difference into an integer
polynomial D(z), rho(T1)^r is isolated by Sturm bisection, vanishing of
D there is a gcd computation, and the sign of D beyond is read off
rational sample points between its isolated roots.  No verdict ever
rests on floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import polynomials as poly
from .constructions import CompositionVector
from .hypergraph import (
    Hypergraph,
    is_acyclic,
    is_pendent_edge,
    validate,
)
from .matching import matching_counts

Vector = Union[CompositionVector, Sequence[int]]

PRECEDES_STRICT = "precedes_strict"
PRECEDES_WEAK = "precedes_weak"
SUCCEEDS_STRICT = "succeeds_strict"
SUCCEEDS_WEAK = "succeeds_weak"
EQUAL_POLY = "equal_poly"
INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class OrderRelation:
    tag: str
    witness: dict


# ---------------------------------------------------------------------------
# edge rewrites
# ---------------------------------------------------------------------------


def move_edges(
    H: Hypergraph, u: int, moves: Iterable[tuple[Iterable[int], int]]
) -> Hypergraph:
    """Move each (edge, vertex) pair to u: e_i becomes (e_i - {v_i}) + {u}.

    Requires u outside every moved edge and v_i inside its edge; the
    rewritten hypergraph must stay linear (and free of duplicate edges),
    otherwise the move is rejected.
    """
    H.check_vertex(u)
    move_list = []
    seen = set()
    for e, v in moves:
        t = H.edge_tuple(e)
        if t in seen:
            raise ValueError(f"edge {t} moved twice")
        seen.add(t)
        if u in t:
            raise ValueError(f"target vertex {u} already lies in {t}")
        if v not in t:
            raise ValueError(f"vertex {v} not in edge {t}")
        move_list.append((t, v))
    if not move_list:
        return H
    edges = [e for e in H.edges if e not in seen]
    for t, v in move_list:
        edges.append(tuple(sorted((set(t) - {v}) | {u})))
    result = Hypergraph(H.r, H.n, tuple(edges))
    report = validate(result)
    if not report.linear:
        raise ValueError(f"move produces a non-linear hypergraph: {report.violations[0]}")
    return result


def edge_release(H: Hypergraph, e: Iterable[int]) -> Hypergraph:
    """Release a non-pendent edge: pull its neighbors through one vertex.

    u is e's lowest vertex id; every edge adjacent to e but not containing
    u is moved from its shared vertex to u.  Rejected for pendent edges
    (there is nothing to release).
    """
    report = validate(H)
    if not (report.uniform and report.linear and report.acyclic):
        raise ValueError("edge release is defined on linear hyperforests")
    t = H.edge_tuple(e)
    if is_pendent_edge(H, t):
        raise ValueError(f"edge {t} is pendent; releasing it is a no-op by definition")
    u = t[0]
    members = set(t)
    moves = []
    for other in H.edges:
        if other == t or u in other:
            continue
        shared = members.intersection(other)
        if shared:
            moves.append((other, min(shared)))
    return move_edges(H, u, moves)


# ---------------------------------------------------------------------------
# exact ordering of hyperforests
# ---------------------------------------------------------------------------


def _z_poly(counts: tuple[int, ...]) -> list[int]:
    nu = len(counts) - 1
    return [(-1) ** (nu - j) * counts[nu - j] for j in range(nu + 1)]


def _top_root_marker(p: list[int]) -> tuple:
    """Largest real root of p as ('point', q) or ('interval', a, b).

    Degree-zero p (an edgeless hyperforest) pins the boundary at z = 0.
    """
    if poly.degree(p) <= 0:
        return ("point", Fraction(0))
    marker = poly.largest_real_root(p)
    if marker is None:
        raise RuntimeError("matching polynomial lost its real root")
    return marker


def _deflate_rational_root(p: list[int], q: Fraction) -> tuple[list, int]:
    """Divide out (z - q) as often as it divides p; returns (quotient, multiplicity)."""
    mult = 0
    current = [Fraction(c) for c in p]
    while poly.evaluate(current, q) == 0 and poly.degree(current) >= 1:
        current = poly.div_rem(current, [-q, Fraction(1)])[0]
        mult += 1
    return current, mult


def _dominates_from(p1: list[int], D: list[int], trailing_exp: int) -> tuple[bool, bool, dict]:
    """Decide whether the difference stays >= 0 on [rho1, infinity).

    Works in z = x^r: z1 is the top root of p1 and the difference in x is
    x^trailing_exp * D(x^r).  Returns (weak, boundary_vanishes, witness);
    the witness records the boundary interval, whether the difference
    vanishes at rho1, and the sign samples between the isolated roots of
    D beyond the boundary.
    """
    witness: dict = {}
    D = poly.trim(D)
    if not D:
        raise ValueError("zero difference escaped the equality check")
    if D[-1] < 0:
        witness["leading_sign"] = -1
        return False, False, witness
    witness["leading_sign"] = 1

    marker = _top_root_marker(p1)
    if marker[0] == "point":
        z1 = marker[1]
        witness["boundary"] = [str(z1), str(z1)]
        effective, mult = _deflate_rational_root(D, z1)
        boundary_vanishes = mult > 0
        # at rho1 = 0 the x^trailing_exp factor can force the vanishing
        if z1 == 0 and trailing_exp > 0:
            boundary_vanishes = True
        effective = poly.primitive(effective)
        start = z1
    else:
        lo, hi = marker[1], marker[2]
        # D(z1) = 0 exactly when gcd(p1, D) has a root in the isolating
        # interval of z1 (any root of the gcd inside it must be z1 itself)
        g = poly.poly_gcd(p1, D)
        if poly.degree(g) >= 1:
            gchain = poly.sturm_chain(g)
            boundary_vanishes = poly.count_real_roots(gchain, lo, hi) >= 1
        else:
            boundary_vanishes = False
        # shrink (lo, hi] until it holds no root of D besides possibly z1,
        # with endpoints avoiding the roots of both polynomials
        p1f = [Fraction(c) for c in p1]
        Df = [Fraction(c) for c in D]
        chain_p1 = poly.sturm_chain(p1)
        chain_D = poly.sturm_chain(D)
        want = 1 if boundary_vanishes else 0
        while True:
            if poly.evaluate(Df, lo) != 0 and poly.evaluate(Df, hi) != 0:
                if poly.count_real_roots(chain_D, lo, hi) == want:
                    break
            mid = poly.pick_nonroot([p1f, Df], lo, hi)
            if poly.count_real_roots(chain_p1, mid, hi) == 1:
                lo = mid
            else:
                hi = mid
        witness["boundary"] = [str(lo), str(hi)]
        effective = D
        start = hi
    witness["boundary_vanishes"] = boundary_vanishes

    effective = poly.trim(effective)
    if poly.degree(effective) <= 0:
        weak = bool(effective) and effective[-1] > 0
        witness["samples"] = [[str(start), 1 if weak else -1]]
        return weak, boundary_vanishes, witness

    bound = poly.cauchy_bound(effective) + 1
    if start >= bound:
        bound = start + 1
    markers = poly.isolate_real_roots(effective, lo=start, hi=bound)
    eff_f = [Fraction(c) for c in effective]
    # one sample per gap between consecutive roots of `effective`:
    # `start` covers the gap before the first root, an interval marker's
    # right endpoint covers the gap after its root, and a rational root
    # gets an interior point before whatever comes next
    gap_points: list[Fraction] = [start]
    for i, mk in enumerate(markers):
        if mk[0] == "interval":
            gap_points.append(mk[2])
        else:
            nxt = markers[i + 1][1] if i + 1 < len(markers) else bound
            gap_points.append(poly.pick_nonroot([eff_f], mk[1], nxt))
    samples = []
    weak = True
    for pt in gap_points:
        sign = 1 if poly.evaluate(eff_f, pt) > 0 else -1
        samples.append([str(pt), sign])
        if sign < 0:
            weak = False
    witness["samples"] = samples
    witness["roots_above"] = len(markers)
    return weak, boundary_vanishes, witness


def compare_order(T1: Hypergraph, T2: Hypergraph) -> OrderRelation:
    """Exact order verdict between two hyperforests of the same order.

    precedes_* means T1 comes earlier (so rho(T1) <= rho(T2), strictly
    for precedes_strict); the ordering is only defined for equal n and r.
    """
    if T1.r != T2.r:
        raise ValueError(f"edge sizes differ: {T1.r} vs {T2.r}")
    if T1.n != T2.n:
        raise ValueError(f"orders differ: {T1.n} vs {T2.n}; the ordering needs equal order")
    for T in (T1, T2):
        if not is_acyclic(T):
            raise ValueError("both arguments must be hyperforests")
    c1 = matching_counts(T1).counts
    c2 = matching_counts(T2).counts
    if c1 == c2:
        return OrderRelation(EQUAL_POLY, {})
    p1, p2 = _z_poly(c1), _z_poly(c2)
    nu = max(len(c1), len(c2)) - 1
    trailing = T1.n - nu * T1.r
    D = poly.sub(
        poly.mul_xpow(p1, nu - (len(c1) - 1)),
        poly.mul_xpow(p2, nu - (len(c2) - 1)),
    )
    weak12, vanish12, wit12 = _dominates_from(p1, D, trailing)
    if weak12:
        tag = PRECEDES_WEAK if vanish12 else PRECEDES_STRICT
        return OrderRelation(tag, wit12)
    weak21, vanish21, wit21 = _dominates_from(p2, poly.neg(D), trailing)
    if weak21:
        tag = SUCCEEDS_WEAK if vanish21 else SUCCEEDS_STRICT
        return OrderRelation(tag, wit21)
    return OrderRelation(INCOMPARABLE, {"forward": wit12, "backward": wit21})


# ---------------------------------------------------------------------------
# majorization
# ---------------------------------------------------------------------------


def _as_entries(pi: Vector) -> tuple[int, ...]:
    if isinstance(pi, CompositionVector):
        return pi.entries
    entries = tuple(int(x) for x in pi)
    if any(x < 0 for x in entries):
        raise ValueError("entries must be nonnegative")
    if any(a < b for a, b in zip(entries, entries[1:])):
        raise ValueError("entries must be non-increasing")
    return entries


def _cap_of(pi: Vector, other: Vector) -> int:
    caps = [p.cap for p in (pi, other) if isinstance(p, CompositionVector)]
    if caps:
        return max(caps)
    entries = _as_entries(pi) + _as_entries(other)
    return max(entries) if entries else 0


def is_majorized(pi: Vector, pi_prime: Vector) -> bool:
    """Prefix-sum dominance with equal totals, on non-increasing vectors."""
    a = _as_entries(pi)
    b = _as_entries(pi_prime)
    if len(a) != len(b):
        raise ValueError(f"lengths differ: {len(a)} vs {len(b)}")
    run_a = run_b = 0
    for x, y in zip(a[:-1], b[:-1]):
        run_a += x
        run_b += y
        if run_a > run_b:
            return False
    return sum(a) == sum(b)


def majorization_step(pi: Vector, pi_prime: Vector) -> CompositionVector:
    """One constructive step from pi_prime toward pi.

    With p the smallest index where pi exceeds pi_prime and q the largest
    earlier index where it falls short, move one unit from position q to
    position p.  The result stays non-increasing, sits strictly between
    the two vectors in the majorization order, and cuts the L1 distance
    to pi by exactly 2.
    """
    a = _as_entries(pi)
    b = _as_entries(pi_prime)
    if a == b:
        raise ValueError("vectors are equal; no step to take")
    if not is_majorized(pi, pi_prime):
        raise ValueError("first vector must be majorized by the second")
    p = next(i for i in range(len(a)) if a[i] > b[i])
    q = max(i for i in range(p) if a[i] < b[i])
    out = list(b)
    out[q] -= 1
    out[p] += 1
    return CompositionVector(tuple(out), cap=_cap_of(pi, pi_prime))


def majorization_chain(pi: Vector, pi_prime: Vector) -> list[CompositionVector]:
    """Walk from pi_prime down to pi, one two-coordinate unit move at a time.

    The chain starts at pi_prime, ends at pi, has length
    L1(pi, pi_prime)/2 + 1, and each adjacent pair is majorization-related.
    """
    a = _as_entries(pi)
    if not is_majorized(pi, pi_prime):
        raise ValueError("first vector must be majorized by the second")
    cap = _cap_of(pi, pi_prime)
    current = CompositionVector(_as_entries(pi_prime), cap=cap)
    chain = [current]
    while current.entries != a:
        current = majorization_step(a, current)
        chain.append(current)
    return chain
