"""Spectral radius of the adjacency tensor, by two independent routes.

The adjacency tensor of an r-uniform hypergraph has entries 1/(r-1)! on
the index tuples of each edge, so applying it to a vector never needs
the tensor itself:

    (A x)_i = sum over edges e containing i of prod_{j in e, j != i} x_j

because the (r-1)! orderings of an edge cancel the 1/(r-1)! weight.

Route one is shifted nonnegative-tensor power iteration on B = A + I
(diagonal shift sigma = 1 forces convergence on bipartite-flavored
structures), with the Collatz-Wielandt bracket
min_i (Bx)_i / x_i^(r-1) <= rho(B) <= max_i (...) driving the stopping
rule.  Route two, for hyperforests, reads rho off the matching
polynomial: substituting z = x^r turns phi into x^(n-nu*r) p(z), and rho
is the r-th root of the largest real root of p, located by exact Sturm
isolation plus a final Newton polish.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import polynomials as poly
from .hypergraph import (
    Hypergraph,
    connected_components,
    is_acyclic,
    restrict,
    validate,
)
from .matching import matching_counts

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 10**6


class PowerIterationError(RuntimeError):
    """Raised when the bracket fails to close; carries the last bracket."""

    def __init__(self, message: str, bracket: tuple[float, float], iterations: int):
        super().__init__(message)
        self.bracket = bracket
        self.iterations = iterations


@dataclass
class SpectralResult:
    rho: float
    method: str
    eigenvector: Optional[np.ndarray] = None
    residual: Optional[float] = None
    iterations: int = 0


def _require_uniform_linear(H: Hypergraph) -> None:
    report = validate(H)
    if not (report.uniform and report.linear):
        raise ValueError(f"invalid hypergraph: {'; '.join(report.violations)}")


def apply_adjacency(H: Hypergraph, x) -> np.ndarray:
    """Evaluate (A x) without materializing the tensor."""
    x = np.asarray(x, dtype=float)
    if x.shape != (H.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({H.n},)")
    out = np.zeros(H.n)
    if H.m == 0:
        return out
    E = np.array(H.edges, dtype=int)
    X = x[E]
    r = E.shape[1]
    prefix = np.ones_like(X)
    suffix = np.ones_like(X)
    for j in range(1, r):
        prefix[:, j] = prefix[:, j - 1] * X[:, j - 1]
        suffix[:, r - 1 - j] = suffix[:, r - j] * X[:, r - j]
    np.add.at(out, E, prefix * suffix)
    return out


def residual(H: Hypergraph, lam: float, x) -> float:
    """Max-norm defect of the eigen-equation, max_i |(Ax)_i - lam x_i^(r-1)|."""
    x = np.asarray(x, dtype=float)
    if x.shape != (H.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({H.n},)")
    if not np.any(x):
        raise ValueError("eigenvector must be nonzero")
    return float(np.max(np.abs(apply_adjacency(H, x) - lam * x ** (H.r - 1))))


def _power_connected(
    H: Hypergraph,
    tol: float,
    max_iter: int,
    collect_brackets: Optional[list] = None,
) -> SpectralResult:
    n, r = H.n, H.r
    if H.m == 0:
        x = np.full(n, n ** (-1.0 / r))
        return SpectralResult(0.0, "power", eigenvector=x, residual=0.0, iterations=0)
    x = np.full(n, n ** (-1.0 / r))
    shift = 1.0
    for it in range(1, max_iter + 1):
        y = apply_adjacency(H, x) + x ** (r - 1)
        ratios = y / x ** (r - 1)
        lo = float(ratios.min())
        hi = float(ratios.max())
        if collect_brackets is not None:
            collect_brackets.append((lo - shift, hi - shift))
        if hi - lo <= tol:
            rho = (lo + hi) / 2 - shift
            return SpectralResult(
                rho,
                "power",
                eigenvector=x,
                residual=residual(H, rho, x),
                iterations=it,
            )
        x = y ** (1.0 / (r - 1))
        x = x / (np.sum(x**r)) ** (1.0 / r)
    raise PowerIterationError(
        f"bracket width {hi - lo:.3e} above tol {tol:.3e} after {max_iter} iterations",
        (lo - shift, hi - shift),
        max_iter,
    )


def spectral_radius_power(
    H: Hypergraph,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    collect_brackets: Optional[list] = None,
) -> SpectralResult:
    """Shifted power iteration; connectivity gives weak irreducibility.

    Disconnected input is handled component by component, returning the
    maximum rho with the winning component's eigenvector embedded (zeros
    elsewhere keep the global residual exact).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    _require_uniform_linear(H)
    if H.n == 0:
        raise ValueError("empty hypergraph has no spectrum")
    comps = connected_components(H)
    if len(comps) == 1:
        return _power_connected(H, tol, max_iter, collect_brackets)
    best: Optional[SpectralResult] = None
    best_comp: Optional[list[int]] = None
    iterations = 0
    for comp in comps:
        sub = restrict(H, comp).hypergraph
        res = _power_connected(sub, tol, max_iter, collect_brackets)
        iterations += res.iterations
        if best is None or res.rho > best.rho:
            best, best_comp = res, comp
    x = np.zeros(H.n)
    x[np.array(best_comp, dtype=int)] = best.eigenvector
    rho = best.rho
    return SpectralResult(
        rho,
        "power",
        eigenvector=x,
        residual=residual(H, rho, x),
        iterations=iterations,
    )


def spectral_radius_polyroot(H: Hypergraph, with_residual: bool = False) -> SpectralResult:
    """rho of a hyperforest as the r-th root of the top root of p(z).

    The eigenvector field is left empty; pass with_residual=True to
    recompute the defect against the power-method vector.
    """
    _require_uniform_linear(H)
    if not is_acyclic(H):
        raise ValueError("polynomial-root method requires a hyperforest")
    if H.n == 0:
        raise ValueError("empty hypergraph has no spectrum")
    profile = matching_counts(H)
    nu = profile.nu
    if nu == 0:
        result = SpectralResult(0.0, "polyroot")
    else:
        pz = [(-1) ** (nu - j) * profile.counts[nu - j] for j in range(nu + 1)]
        marker = poly.largest_real_root(pz)
        if marker is None:
            raise RuntimeError("matching polynomial with no real root in z")
        if marker[0] == "point":
            steps = 0
            z = float(marker[1])
        else:
            target = Fraction(1, 10**14)
            steps = 0
            w = marker[2] - marker[1]
            while w > target:
                w /= 2
                steps += 1
            refined = poly.refine_isolating(pz, marker[1], marker[2], target)
            if refined[0] == "point":
                z = float(refined[1])
            else:
                a, b = refined[1], refined[2]
                z = float((a + b) / 2)
                fp = [float(c) for c in pz]
                fd = [float(c) for c in poly.derivative(pz)]
                dfz = poly.evaluate(fd, z)
                if dfz != 0.0:
                    newton = poly.evaluate(fp, z) / dfz
                    if abs(newton) <= float(b - a):
                        z -= newton
        result = SpectralResult(z ** (1.0 / H.r), "polyroot", iterations=steps)
    if with_residual:
        power = spectral_radius_power(H)
        result.residual = residual(H, result.rho, power.eigenvector)
    return result
