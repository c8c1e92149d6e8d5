"""Ground truth the solver cannot contaminate: seeded random graph
generation, exhaustive enumeration of small graphs, and an exact
characteristic-polynomial eigenvalue oracle.

The oracle path is pure integer/rational arithmetic (Faddeev-LeVerrier for
the polynomial, Yun square-free factoring for multiplicities, Sturm chains
plus bisection for the roots). Its only approximation is the final bisection
width, so agreement with the floating-point solver is a real cross-check and
not a tautology.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .graphs import Graph, connected_components, graph_from_edges, is_pseudo_connected

__all__ = [
    "RETRY_CAP",
    "MAX_ENUM_VERTICES",
    "MAX_ORACLE_ORDER",
    "GenerationError",
    "OracleError",
    "GeneratorConfig",
    "random_graph",
    "enumerate_graphs",
    "charpoly_eigenvalues",
]

RETRY_CAP = 10_000
MAX_ENUM_VERTICES = 5
MAX_ORACLE_ORDER = 6

_REQUIREMENTS = ("none", "connected", "pseudo_connected")


class GenerationError(RuntimeError):
    """Rejection sampling hit the retry cap without meeting the constraint."""


class OracleError(RuntimeError):
    """The exact-arithmetic oracle could not certify a complete root set."""


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters for one random draw.

    Each unordered vertex pair becomes an edge with probability ``p_edge``
    and each vertex gets a self-loop with probability ``p_loop``,
    independently. ``require`` optionally rejects draws until the named
    predicate holds: "none", "connected", or "pseudo_connected".
    """

    n: int
    p_edge: float
    p_loop: float
    seed: int
    require: str = "none"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least 1 vertex, got {self.n}")
        for name, p in (("p_edge", self.p_edge), ("p_loop", self.p_loop)):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.require not in _REQUIREMENTS:
            raise ValueError(
                f"require must be one of {_REQUIREMENTS}, got {self.require!r}"
            )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "p_edge": self.p_edge,
            "p_loop": self.p_loop,
            "seed": self.seed,
            "require": self.require,
        }


def _meets(g: Graph, require: str) -> bool:
    if require == "connected":
        return connected_components(g).count == 1
    if require == "pseudo_connected":
        return is_pseudo_connected(g)
    return True


def random_graph(cfg: GeneratorConfig) -> Graph:
    """Draw one graph per ``cfg``, deterministically in the seed.

    Draws are rejected and retried until the ``require`` predicate holds;
    after ``RETRY_CAP`` rejected draws a :class:`GenerationError` is raised
    with the config embedded for reproduction.
    """
    rng = np.random.default_rng(cfg.seed)
    pairs = [(i, j) for i in range(1, cfg.n + 1) for j in range(i + 1, cfg.n + 1)]
    for _ in range(RETRY_CAP):
        pair_draws = rng.random(len(pairs))
        loop_draws = rng.random(cfg.n)
        edges: list[tuple[int, int]] = [
            pair for pair, u in zip(pairs, pair_draws) if u < cfg.p_edge
        ]
        edges.extend((v, v) for v in range(1, cfg.n + 1) if loop_draws[v - 1] < cfg.p_loop)
        g = graph_from_edges(cfg.n, edges)
        if _meets(g, cfg.require):
            return g
    raise GenerationError(
        f"no draw met {cfg.require!r} within {RETRY_CAP} attempts: "
        + json.dumps(cfg.to_json_dict())
    )


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Yield every labeled undirected graph with loops on n vertices.

    There are 2^(n(n+1)/2) of them (one bit per vertex pair, loops included),
    emitted in a fixed order: the candidate edges are sorted
    lexicographically and bit k of the counter toggles candidate k.
    """
    if n < 1:
        raise ValueError(f"need at least 1 vertex, got {n}")
    if n > MAX_ENUM_VERTICES:
        raise ValueError(
            f"enumeration is capped at {MAX_ENUM_VERTICES} vertices "
            f"(2^(n(n+1)/2) graphs), got n={n}"
        )
    candidates = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    for mask in range(1 << len(candidates)):
        edges = [e for k, e in enumerate(candidates) if mask >> k & 1]
        yield graph_from_edges(n, edges)


# --- exact polynomial arithmetic (ascending coefficient lists of Fraction) ---


def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _degree(p: list[Fraction]) -> int:
    return len(p) - 1


def _derivative(p: list[Fraction]) -> list[Fraction]:
    if len(p) == 1:
        return [Fraction(0)]
    return _trim([k * c for k, c in enumerate(p)][1:])


def _eval(p: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if b == [Fraction(0)]:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    qlen = len(a) - len(b) + 1
    if qlen <= 0:
        return [Fraction(0)], _trim(rem)
    quot = [Fraction(0)] * qlen
    lead = b[-1]
    for k in range(qlen - 1, -1, -1):
        coeff = rem[k + len(b) - 1] / lead
        quot[k] = coeff
        if coeff:
            for i, bc in enumerate(b):
                rem[k + i] -= coeff * bc
    return _trim(quot), _trim(rem)


def _exact_div(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    quot, rem = _divmod(a, b)
    if rem != [Fraction(0)]:
        raise OracleError("polynomial division expected to be exact was not")
    return quot


def _monic_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b != [Fraction(0)]:
        _, r = _divmod(a, b)
        a, b = b, r
    if a == [Fraction(0)]:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def _square_free_factors(p: list[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Yun's decomposition: pairwise-coprime square-free monic factors f_k
    with p = prod f_k^k (constant factors dropped)."""
    dp = _derivative(p)
    g = _monic_gcd(p, dp)
    if _degree(g) == 0:
        return [(p, 1)]
    b = _exact_div(p, g)
    c = _exact_div(dp, g)
    d = _trim([ci - bi for ci, bi in _zip_pad(c, _derivative(b))])
    factors: list[tuple[list[Fraction], int]] = []
    k = 1
    while _degree(b) > 0:
        f = _monic_gcd(b, d)
        if _degree(f) > 0:
            factors.append((f, k))
        b = _exact_div(b, f)
        c = _exact_div(d, f)
        d = _trim([ci - bi for ci, bi in _zip_pad(c, _derivative(b))])
        k += 1
    return factors


def _zip_pad(a: list[Fraction], b: list[Fraction]) -> Iterator[tuple[Fraction, Fraction]]:
    width = max(len(a), len(b))
    za = a + [Fraction(0)] * (width - len(a))
    zb = b + [Fraction(0)] * (width - len(b))
    return zip(za, zb)


def _sturm_chain(f: list[Fraction]) -> list[list[Fraction]]:
    chain = [f, _derivative(f)]
    while _degree(chain[-1]) > 0:
        _, r = _divmod(chain[-2], chain[-1])
        if r == [Fraction(0)]:
            break
        chain.append([-c for c in r])
    return chain


def _variations(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = []
    for poly in chain:
        v = _eval(poly, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots(chain: list[list[Fraction]], lo: Fraction, hi: Fraction) -> int:
    return _variations(chain, lo) - _variations(chain, hi)


def _isolate_roots(
    f: list[Fraction], lo: Fraction, hi: Fraction
) -> list[tuple[Fraction, Fraction]]:
    """Intervals each holding exactly one root of square-free f, which must
    not vanish at any rational point probed (callers strip rational roots
    first, so every evaluation has a definite sign)."""
    chain = _sturm_chain(f)
    found: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, _count_roots(chain, lo, hi))]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            found.append((a, b))
            continue
        mid = (a + b) / 2
        left = _count_roots(chain, a, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, k - left))
    return found


def _bisect_root(f: list[Fraction], lo: Fraction, hi: Fraction, tol: float) -> float:
    sign_lo = 1 if _eval(f, lo) > 0 else -1
    a, b = lo, hi
    while b - a > tol:
        mid = (a + b) / 2
        v = _eval(f, mid)
        if v == 0:
            return float(mid)
        if (1 if v > 0 else -1) == sign_lo:
            a = mid
        else:
            b = mid
    return float((a + b) / 2)


def _charpoly(entries: list[list[int]]) -> list[Fraction]:
    """Coefficients of det(xI - M), ascending, by Faddeev-LeVerrier."""
    n = len(entries)
    m = [[Fraction(v) for v in row] for row in entries]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    work = [row[:] for row in m]
    for k in range(1, n + 1):
        if k > 1:
            shifted = [row[:] for row in work]
            for i in range(n):
                shifted[i][i] += coeffs[n - k + 1]
            work = [
                [sum(m[i][t] * shifted[t][j] for t in range(n)) for j in range(n)]
                for i in range(n)
            ]
        trace = sum(work[i][i] for i in range(n))
        coeffs[n - k] = -trace / k
    for c in coeffs:
        if c.denominator != 1:
            raise OracleError("characteristic polynomial came out non-integral")
    return coeffs


def _as_integer_matrix(m) -> list[list[int]]:
    arr = np.asarray(m)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if not np.array_equal(arr, arr.T):
        raise ValueError("matrix is not symmetric")
    out: list[list[int]] = []
    for row in arr.tolist():
        ints = []
        for v in row:
            if v != int(v):
                raise ValueError(f"matrix entries must be integers, got {v!r}")
            ints.append(int(v))
        out.append(ints)
    return out


def charpoly_eigenvalues(m, tol: float = 1e-12) -> list[float]:
    """All eigenvalues of a small symmetric integer matrix, with multiplicity,
    ascending, via exact characteristic-polynomial root isolation.

    Multiplicities come from square-free factoring, rational roots are
    recovered exactly (a monic integer polynomial has only integer rational
    roots), and the remaining roots are bisected to ``tol`` inside the
    bracket [-1, 2n+2] that covers every graph Laplacian of order n. A root
    outside the bracket (possible for general symmetric input, never for a
    Laplacian) raises :class:`OracleError`.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    entries = _as_integer_matrix(m)
    n = len(entries)
    if n > MAX_ORACLE_ORDER:
        raise ValueError(f"oracle is capped at order {MAX_ORACLE_ORDER}, got {n}")
    poly = _charpoly(entries)
    lo, hi = Fraction(-1), Fraction(2 * n + 2)
    roots: list[float] = []
    for factor, mult in _square_free_factors(poly):
        remaining = factor
        # integer roots first, removed exactly, so later evaluations at
        # rational points can never hit zero
        for k in range(-1, 2 * n + 3):
            if _degree(remaining) == 0:
                break
            candidate = Fraction(k)
            if _eval(remaining, candidate) == 0:
                if not lo < candidate <= hi and candidate != lo:
                    raise OracleError(
                        f"root {k} falls outside the bracket [{lo}, {hi}]"
                    )
                roots.extend([float(k)] * mult)
                remaining = _exact_div(
                    remaining, [Fraction(-k), Fraction(1)]
                )
        if _degree(remaining) == 0:
            continue
        intervals = _isolate_roots(remaining, lo, hi)
        if len(intervals) != _degree(remaining):
            raise OracleError(
                f"isolated {len(intervals)} roots of a degree-{_degree(remaining)} "
                f"factor inside [{lo}, {hi}]; some root lies outside the bracket"
            )
        for a, b in intervals:
            roots.extend([_bisect_root(remaining, a, b, tol)] * mult)
    if len(roots) != n:
        raise OracleError(
            f"recovered {len(roots)} of {n} eigenvalues inside [{lo}, {hi}]"
        )
    return sorted(roots)
