"""Spectral radius computation and the comparison rules built on it.

The engine is a shifted power iteration: iterate (A+I)x from the all-ones
vector and stop once the infinity-norm residual ||Ax - rho x||_inf of the
max-normalized iterate drops to `tol`. The +I shift costs nothing and makes
bipartite inputs (where A alone has a -rho eigenvalue of equal modulus)
converge; the reported rho is always the Rayleigh quotient of A itself.

All strict comparisons between computed spectral radii go through
`certify_strict`: a difference only counts as a strict inequality when it
clears 10*(tol_a + tol_b); anything smaller is reported indeterminate, never
silently rounded into a conclusion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, induced_subgraph

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 10 ** 6


class DisconnectedGraphError(ValueError):
    """spectral_radius only accepts connected graphs."""


class ConvergenceError(RuntimeError):
    def __init__(self, iterations: int, residual: float, tol: float):
        super().__init__(
            f"power iteration hit the {iterations}-iteration cap at "
            f"residual {residual:.3e} (tol {tol:.1e})")
        self.iterations = iterations
        self.residual = residual
        self.tol = tol


@dataclass(frozen=True, eq=False)
class SpectralResult:
    """rho plus its max-normalized Perron vector and convergence data."""

    rho: float
    vector: np.ndarray
    residual: float
    iterations: int


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, row in enumerate(g.adj):
        if row:
            a[u, list(row)] = 1.0
    return a


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL,
                    max_iterations: int = MAX_ITERATIONS) -> SpectralResult:
    """Largest adjacency eigenvalue of a connected graph, with Perron vector.

    Deterministic: fixed start vector, fixed update, no randomness. Raises
    DisconnectedGraphError on disconnected input and ConvergenceError if the
    residual has not reached `tol` within `max_iterations` steps.
    """
    if g.n < 1:
        raise ValueError("spectral radius needs at least one vertex")
    if not g.is_connected():
        raise DisconnectedGraphError(
            f"graph with {g.n} vertices is not connected")
    a = adjacency_matrix(g)
    x = np.ones(g.n)
    rho = 0.0
    resid = math.inf
    for it in range(1, max_iterations + 1):
        z = a @ x
        rho = float(x @ z) / float(x @ x)
        resid = float(np.max(np.abs(z - rho * x)))
        if resid <= tol:
            return SpectralResult(rho, x, resid, it)
        y = z + x
        x = y / y.max()
    raise ConvergenceError(max_iterations, resid, tol)


def spectral_radius_any(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Spectral radius of a possibly disconnected graph (max over components)."""
    best = 0.0
    for comp in g.components():
        sub = induced_subgraph(g, comp)
        best = max(best, spectral_radius(sub, tol).rho)
    return best


def rayleigh_quotient(g: Graph, x: np.ndarray) -> float:
    """x'Ax / x'x  =  2 * sum over edges of x_u x_v, over sum of squares."""
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise ValueError(f"vector has shape {x.shape}, graph has {g.n} vertices")
    denom = float(x @ x)
    if denom == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector is undefined")
    num = 0.0
    for u, row in enumerate(g.adj):
        xu = x[u]
        for v in row:
            if v > u:
                num += xu * x[v]
    return 2.0 * num / denom


# --- closed forms ------------------------------------------------------------


def rho_path(n: int) -> float:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return 2.0 * math.cos(math.pi / (n + 1))


def rho_cycle(n: int) -> float:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return 2.0


def rho_complete(n: int) -> float:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return float(n - 1)


def rho_complete_bipartite(a: int, b: int) -> float:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs a, b >= 1")
    return math.sqrt(a * b)


_CLOSED_FORMS = {
    "path": rho_path,
    "cycle": rho_cycle,
    "complete": rho_complete,
    "complete_bipartite": rho_complete_bipartite,
}


def closed_form_rho(family: str, *params: int) -> float:
    """Exact rho for path / cycle / complete / complete_bipartite."""
    try:
        fn = _CLOSED_FORMS[family]
    except KeyError:
        raise ValueError(
            f"no closed form for {family!r}; have {sorted(_CLOSED_FORMS)}"
        ) from None
    return fn(*params)


# --- strictness and surgery ---------------------------------------------------


def certify_strict(diff: float, tol_a: float, tol_b: float) -> str:
    """Classify a computed difference as a strict inequality.

    'certified' needs diff > 10*(tol_a+tol_b); the mirror image is
    'violated'; the band in between is 'indeterminate'.
    """
    margin = 10.0 * (tol_a + tol_b)
    if diff > margin:
        return "certified"
    if diff < -margin:
        return "violated"
    return "indeterminate"


@dataclass(frozen=True)
class SurgeryReport:
    rho_g: float
    rho_gp: float
    rayleigh_gp: float      # Rayleigh quotient of G' at G's Perron vector
    surgery_margin: float   # rayleigh_gp - rho_g: > 0 proves rho(G') > rho(G)
    variational_gap: float  # rho_gp - rayleigh_gp: >= 0 up to tolerance
    bound_holds: bool


def surgery_compare(g: Graph, gp: Graph,
                    tol: float = DEFAULT_TOL) -> SurgeryReport:
    """Evaluate an edge-surgery comparison through the variational principle.

    Plugs the Perron vector x of G into G' : rho(G') >= x'A(G')x / x'x holds
    for any nonzero x, so `bound_holds` failing beyond tolerance would mean a
    computation bug, not a property of the graphs. When the surgery margin
    (the Rayleigh quotient minus rho(G)) is positive, rho(G') > rho(G) follows
    with no further computation.
    """
    if g.n != gp.n:
        raise ValueError(f"vertex counts differ: {g.n} vs {gp.n}")
    res = spectral_radius(g, tol)
    rq = rayleigh_quotient(gp, res.vector)
    rho_gp = spectral_radius_any(gp, tol)
    slack = 10.0 * (tol + tol)
    return SurgeryReport(
        rho_g=res.rho,
        rho_gp=rho_gp,
        rayleigh_gp=rq,
        surgery_margin=rq - res.rho,
        variational_gap=rho_gp - rq,
        bound_holds=rho_gp >= rq - slack,
    )
