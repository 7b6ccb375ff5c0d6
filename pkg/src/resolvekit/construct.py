"""Upper-bound constructions, each returning a re-verified certificate.

* :func:`extend_plus_one` adds one point at the cost of ``floor(k/2) + 1``
  subsets;
* :func:`compose_robust` takes the disjoint union of two robust blocks;
* :func:`from_regular_graph` turns a k-regular graph of girth >= 2k+1 into a
  robust certificate on its edges;
* :func:`johnson3_certificate` builds the 13q-point, 8q-subset family for
  k = 3 from an explicit hypergraph;
* :func:`upper_bound_certificate` chains the above for arbitrary m.

Every builder runs the verifier before returning; a failure there is a bug
and raises :class:`ConstructionError`.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .bounds import upper_bound_value
from .core import Certificate
from .errors import ConstructionError, HypothesisViolated, InvalidParameters, PreconditionError, UnsupportedK
from .graphs import SimpleGraph, girth, moore_bound, random_regular
from .io import load_fixture, load_graph
from .verify import is_robust, is_separating


def _checked(cert: Certificate, robust: bool = False) -> Certificate:
    ok = is_robust(cert) if robust else is_separating(cert)
    if not ok:
        raise ConstructionError(f"construction produced a non-{'robust' if robust else 'separating'} family")
    return cert


def extend_plus_one(cert: Certificate, alpha_index: int = 0) -> Certificate:
    """Separating family for ``m + 1`` points from one for ``m`` points.

    With ``alpha = sets[alpha_index] = {d_1 < ... < d_k}`` the new subsets are
    ``{m+1} | (alpha - {d_i})`` for ``i = 1 .. floor(k/2) + 1``.
    """
    m, k = cert.m, cert.k
    if k < 2 or m < 2 * k - 1:
        raise HypothesisViolated(f"extension needs k >= 2 and m >= 2k-1, got m={m}, k={k}")
    if not 0 <= alpha_index < len(cert):
        raise InvalidParameters(f"alpha_index {alpha_index} out of range for {len(cert)} subsets")
    alpha = cert.sets[alpha_index].members
    new = [sorted(set(alpha) - {d}) + [m + 1] for d in alpha[: k // 2 + 1]]
    return _checked(Certificate.from_lists(m + 1, k, cert.as_lists() + new))


def compose_robust(c1: Certificate, c2: Certificate) -> Certificate:
    """Disjoint union: ``c2``'s points are shifted by ``c1.m``."""
    if c1.k != c2.k:
        raise PreconditionError(f"blocks have different k: {c1.k} vs {c2.k}")
    k = c1.k
    if c1.m <= k or c2.m <= k:
        raise PreconditionError("each block needs more than k points")
    if not (is_robust(c1) and is_robust(c2)):
        raise PreconditionError("both blocks must be robust separating")
    shifted = [[x + c1.m for x in s] for s in c2.as_lists()]
    return _checked(Certificate.from_lists(c1.m + c2.m, k, c1.as_lists() + shifted), robust=True)


def from_regular_graph(g: SimpleGraph, k: int) -> Certificate:
    """Points are the edges of ``g``; each vertex contributes its incident edges."""
    if g.regular_degree() != k:
        raise PreconditionError(f"graph is not {k}-regular")
    gg = girth(g)
    if gg < 2 * k + 1:
        raise PreconditionError(f"girth {gg} < 2k+1 = {2 * k + 1}")
    index = g.edge_index()
    sets = [sorted(index[(min(v, w), max(v, w))] for w in g.neighbours(v)) for v in range(1, g.vertex_count + 1)]
    return _checked(Certificate.from_lists(len(g.edges), k, sets), robust=True)


def find_regular_high_girth(k: int, max_vertices: int, seed: int = 0,
                            attempts: int = 200) -> SimpleGraph | None:
    """A k-regular graph of girth >= 2k+1 with at most ``max_vertices`` vertices.

    For k = 3 this is the shipped McGee graph.  Otherwise random pairing-model
    graphs are tried for each admissible vertex count from the Moore bound up.
    """
    if k < 3:
        raise InvalidParameters(f"need k >= 3, got {k}")
    if k == 3:
        g = load_graph("mcgee")
        return g if g.vertex_count <= max_vertices else None
    rng = random.Random(seed)
    for n in range(moore_bound(k, 2 * k + 1), max_vertices + 1):
        if n * k % 2:
            continue
        for _ in range(attempts):
            g = random_regular(n, k, rng)
            if g is not None and girth(g) >= 2 * k + 1:
                return g
    return None


# --- the k = 3 hypergraph family ------------------------------------------

def _hypergraph(q: int) -> tuple[list[str], list[tuple[str, ...]]]:
    """Vertices and hyperedges (size 1, then 2, then 3) for ``q >= 2``.

    A-vertices: L1..L(2q+2), RRi and RRbi for i = 1..2q-1; B-vertices:
    R1..R(2q).  With p = q - 2 the size-2 hyperedges are p paths
    L-R-R-L, one such path with an extra R-R edge, one L-R edge and one L-L
    edge; the size-3 hyperedges are 2q-1 of type AAB, one ABB and 2q AAA
    triples partitioning A, the last arranged according to q mod 3.
    """
    p = q - 2
    L = [f"L{i}" for i in range(1, 2 * q + 3)]
    RR = [f"RR{i}" for i in range(1, 2 * p + 4)]
    RRb = [f"RRb{i}" for i in range(1, 2 * p + 4)]
    R = [f"R{i}" for i in range(1, 2 * q + 1)]
    l = lambda i: f"L{i}"  # noqa: E731
    r = lambda i: f"R{i}"  # noqa: E731
    rr = lambda i: f"RR{i}"  # noqa: E731
    rb = lambda i: f"RRb{i}"  # noqa: E731

    A = L + RR + RRb
    edges: list[tuple[str, ...]] = [(a,) for a in A]

    for i in range(1, p + 2):  # p ordinary paths and the distinguished one
        edges += [(l(2 * i - 1), r(2 * i - 1)), (r(2 * i - 1), r(2 * i)), (r(2 * i), l(2 * i))]
    edges += [(r(2 * p + 2), r(2 * p + 3)), (l(2 * p + 3), r(2 * p + 4)), (l(2 * p + 4), l(2 * p + 5))]

    edges += [(r(i), rr(i), rb(i)) for i in range(1, 2 * p + 2)]
    edges += [(r(2 * p + 3), rr(2 * p + 2), rb(2 * p + 2)), (r(2 * p + 4), rr(2 * p + 3), rb(2 * p + 3))]
    edges.append((l(2 * p + 6), r(2 * p + 4), r(2 * p + 3)))

    def chunk(seq):
        assert len(seq) % 3 == 0
        return [tuple(seq[i:i + 3]) for i in range(0, len(seq), 3)]

    last = (l(2 * p + 6), rb(2 * p + 3), rb(2 * p + 2))
    if q % 3 == 0:
        red = chunk([l(i) for i in range(1, 2 * p + 5)])
        seq = [l(2 * p + 5)]
        for s in range(1, 2 * p, 3):
            seq += [rr(s), rr(s + 1), rb(s), rb(s + 1), rr(s + 2), rb(s + 2)]
        seq += [rr(2 * p + 2), rr(2 * p + 3)]
        red += chunk(seq) + [last]
    elif q % 3 == 1:
        red = chunk([l(i) for i in range(1, 2 * p + 6)])
        red += chunk([rr(i) for i in range(1, 2 * p)]) + chunk([rb(i) for i in range(1, 2 * p)])
        red += [(rr(2 * p), rr(2 * p + 1), rr(2 * p + 3)), (rb(2 * p), rb(2 * p + 1), rr(2 * p + 2)), last]
    else:
        red = chunk([l(i) for i in range(1, 2 * p + 4)])
        red += [(l(2 * p + 4), rr(1), rr(2)), (l(2 * p + 5), rb(1), rr(3))]
        seq = [rb(2), rb(3)]
        for s in range(4, 2 * p + 2, 3):
            seq += [rr(s), rb(s), rr(s + 1), rr(s + 2), rb(s + 1), rb(s + 2)]
        seq.append(l(2 * p + 6))
        red += chunk(seq)
    edges += red
    return A + R, edges


def hypergraph_certificate(q: int) -> Certificate:
    """Certificate of the hypergraph: points = hyperedges, subsets = vertices."""
    vertices, edges = _hypergraph(q)
    incident: dict[str, list[int]] = {v: [] for v in vertices}
    for point, e in enumerate(edges, start=1):
        for v in e:
            incident[v].append(point)
    bad = [v for v, pts in incident.items() if len(pts) != 3]
    if bad:
        raise ConstructionError(f"vertices not in exactly 3 hyperedges: {bad}")
    return Certificate.from_lists(len(edges), 3, [incident[v] for v in vertices])


@lru_cache(maxsize=None)
def johnson3_certificate(q: int) -> Certificate:
    """Separating family of size ``8q`` for the 3-subsets of ``13q`` points."""
    if q < 1:
        raise InvalidParameters(f"need q >= 1, got {q}")
    if q == 1:
        cert = load_fixture("example1")
    elif q == 2:
        cert = load_fixture("johnson3_q2")
    else:
        cert = hypergraph_certificate(q)
    if (cert.m, len(cert)) != (13 * q, 8 * q):
        raise ConstructionError(f"wrong shape for q={q}: m={cert.m}, size={len(cert)}")
    return _checked(cert)


# --- the combined pipeline ---------------------------------------------------

def _extend_to(cert: Certificate, m: int) -> Certificate:
    while cert.m < m:
        cert = extend_plus_one(cert)
    return cert


EXACT_MAX_M = 9  # exact search is instant up to here for k = 3


@lru_cache(maxsize=None)
def _small_exact(m: int) -> Certificate:
    from .search import sigma_exact

    return sigma_exact(m, 3)[1]


def upper_bound_certificate(m: int, k: int) -> Certificate:
    """The smallest certificate among the available routes for ``(m, k)``.

    Routes: robust blocks (the 9-point block and, for general k, a girth
    graph block) composed and then extended; for k = 3 also the 13q-point
    family plus extensions; for m < 13 the exact minimum for min(m, 9) points, extended.
    """
    if k < 3:
        raise InvalidParameters(f"need k >= 3, got {k}")
    if m < 2 * k - 1:
        raise HypothesisViolated(f"need m >= 2k-1, got m={m}, k={k}")
    candidates: list[Certificate] = []
    if k == 3:
        if m < 13:
            candidates.append(_extend_to(_small_exact(min(m, EXACT_MAX_M)), m))
        else:
            candidates.append(_extend_to(johnson3_certificate(m // 13), m))
        blocks = [load_fixture("block9_robust"), from_regular_graph(load_graph("mcgee"), 3)]
    else:
        g = find_regular_high_girth(k, max_vertices=2 * moore_bound(k, 2 * k + 1), attempts=2)
        if g is None:
            raise UnsupportedK(f"no k-regular graph of girth >= {2 * k + 1} found for k={k}")
        blocks = [from_regular_graph(g, k)]
    for block in blocks:
        reps = m // block.m
        if reps == 0:
            continue
        cert = block
        for _ in range(reps - 1):
            cert = compose_robust(cert, block)
        candidates.append(_extend_to(cert, m))
    if not candidates:
        raise UnsupportedK(f"no construction available for m={m}, k={k}")
    best = min(candidates, key=len)
    if len(best) > upper_bound_value(m, k):
        raise ConstructionError(f"certificate of size {len(best)} exceeds the proven bound")
    return best


__all__ = [
    "extend_plus_one", "compose_robust", "from_regular_graph", "find_regular_high_girth",
    "hypergraph_certificate", "johnson3_certificate", "upper_bound_certificate",
]
