"""Exact separating / robust-separating checks with counterexample extraction.

All checks compute the full signature table of a size class and look for
repeated rows with one sort, never by pairwise comparison.
"""

from __future__ import annotations

import numpy as np

from .core import Certificate, incidence_matrix, signature_matrix, subset_array
from .errors import HypothesisViolated

Pair = tuple[tuple[int, ...], tuple[int, ...]]


def _groups(sigs: np.ndarray) -> list[np.ndarray]:
    """Index groups (ascending) of identical rows, only groups of size >= 2."""
    if sigs.shape[0] < 2:
        return []
    if sigs.shape[1] == 0:
        return [np.arange(sigs.shape[0])]
    _, inverse, counts = np.unique(sigs, axis=0, return_inverse=True, return_counts=True)
    inverse = inverse.reshape(-1)
    if counts.max() < 2:
        return []
    order = np.argsort(inverse, kind="stable")
    bounds = np.cumsum(counts)[:-1]
    return [g for g in np.split(order, bounds) if len(g) > 1]


def _injective(sigs: np.ndarray) -> bool:
    if sigs.shape[0] < 2:
        return True
    if sigs.shape[1] == 0:
        return False
    return np.unique(sigs, axis=0).shape[0] == sigs.shape[0]


def _class_sigs(entries: np.ndarray, m: int, size: int) -> tuple[np.ndarray, np.ndarray]:
    subsets = subset_array(m, size)
    return subsets, signature_matrix(entries, subsets)


def _below_k_pool(entries: np.ndarray, m: int, k: int):
    """All subsets of size < k, ordered by size then lexicographically."""
    parts = [_class_sigs(entries, m, i) for i in range(min(k, m + 1))]
    sizes = np.concatenate([np.full(p[0].shape[0], i) for i, p in enumerate(parts)])
    sigs = np.concatenate([p[1] for p in parts], axis=0)
    members = [row for p in parts for row in p[0]]
    return members, sizes, sigs


def _as_points(row: np.ndarray) -> tuple[int, ...]:
    return tuple(int(x) + 1 for x in row)


def is_separating(cert: Certificate) -> bool:
    if cert.m < cert.k:
        return True
    entries = incidence_matrix(cert).entries
    _, sigs = _class_sigs(entries, cert.m, cert.k)
    return _injective(sigs)


def is_separating_rows(cert: Certificate) -> bool:
    """Row-sum criterion: every size class ``i <= k`` has distinct row sums.

    Only equivalent to :func:`is_separating` when ``m >= 2k - 1``; outside that
    range a :class:`HypothesisViolated` is raised instead of an answer.
    """
    if cert.m < 2 * cert.k - 1:
        raise HypothesisViolated(f"row criterion needs m >= 2k-1, got m={cert.m}, k={cert.k}")
    entries = incidence_matrix(cert).entries
    return all(_injective(_class_sigs(entries, cert.m, i)[1]) for i in range(cert.k + 1))


def is_robust(cert: Certificate) -> bool:
    if not is_separating(cert):
        return False
    entries = incidence_matrix(cert).entries
    _, _, sigs = _below_k_pool(entries, cert.m, cert.k)
    return _injective(sigs)


def witness_unseparated(cert: Certificate, robust_mode: bool = False) -> Pair | None:
    """A pair of distinct subsets with equal signatures, or ``None``.

    Equal-size classes are scanned first, smallest size first (sizes ``0..k``
    in robust mode, only ``k`` otherwise); in robust mode mixed-size pairs
    below ``k`` come last.  Within a class the pair is lexicographically first.
    """
    m, k = cert.m, cert.k
    entries = incidence_matrix(cert).entries
    sizes = range(min(k, m) + 1) if robust_mode else ([k] if k <= m else [])
    for size in sizes:
        subsets, sigs = _class_sigs(entries, m, size)
        groups = _groups(sigs)
        if groups:
            best = min(groups, key=lambda g: (g[0], g[1]))
            return _as_points(subsets[best[0]]), _as_points(subsets[best[1]])
    if not robust_mode:
        return None
    members, pool_sizes, sigs = _below_k_pool(entries, m, k)
    best_pair = None
    for g in _groups(sigs):
        a = g[0]
        other = g[pool_sizes[g] != pool_sizes[a]]
        if other.size and (best_pair is None or (a, other[0]) < best_pair):
            best_pair = (a, other[0])
    if best_pair is None:
        return None
    return _as_points(members[best_pair[0]]), _as_points(members[best_pair[1]])
