"""Minimum separating and robust separating sets for the Johnson action.

Exact search is an iterative-deepening decision procedure over
lexicographically increasing families whose first member is fixed to
``{1..k}`` (the point relabelling action is transitive on k-subsets).  For
larger instances a seeded hill-climbing search finds certificates without
proving minimality.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .bounds import start_bound, upper_bound_value
from .core import Certificate, subset_array
from .errors import BudgetExhausted, InvalidParameters
from .refine import NodeBudgetExceeded, RefinementSearch
from .verify import is_robust, is_separating

log = logging.getLogger(__name__)


def _check(m: int, k: int) -> None:
    if not 1 <= k <= m:
        raise InvalidParameters(f"need m >= k >= 1, got m={m}, k={k}")


@lru_cache(maxsize=32)
def _universe(m: int, k: int, robust: bool) -> tuple[np.ndarray, np.ndarray]:
    """Label matrix (candidates x universe) of intersection sizes, plus tags.

    The universe is the k-subsets, followed in robust mode by every subset of
    size < k.  Tags keep the two pools apart: a k-subset and a smaller subset
    may share a signature.
    """
    cands = subset_array(m, k)
    sizes = [k] + (list(range(k)) if robust else [])
    inc = np.zeros((len(cands), m), dtype=np.int64)
    np.put_along_axis(inc, cands, 1, axis=1)
    blocks, tags = [], []
    for size in sizes:
        pool = subset_array(m, size)
        pool_inc = np.zeros((len(pool), m), dtype=np.int64)
        if size:
            np.put_along_axis(pool_inc, pool, 1, axis=1)
        blocks.append(inc @ pool_inc.T)
        tags.append(np.full(len(pool), 0 if size == k else 1, dtype=np.int64))
    labels = np.concatenate(blocks, axis=1)
    labels.flags.writeable = False
    return labels, np.concatenate(tags)


class _OrbitMinFilter:
    """Admissible next picks under the symmetry of the chosen prefix.

    The permutations of ``[m]`` fixing every chosen subset setwise are the
    products of symmetric groups on the cells of the Venn partition of the
    points.  Each k-subset is only tried if it is the lexicographically least
    in its orbit, i.e. if it meets every cell in an initial segment of that
    cell.  Every family can be moved (cell by cell, pick by pick) onto one
    whose increasing enumeration passes this filter, and the lexicographically
    first minimum family already does, so minimum values and canonical
    witnesses are unchanged.
    """

    def __init__(self, m: int, k: int):
        self.m = m
        self.cands = subset_array(m, k)
        self.inc = np.zeros((len(self.cands), m), dtype=np.int64)
        np.put_along_axis(self.inc, self.cands, 1, axis=1)
        self._cache: dict[tuple[int, ...], np.ndarray] = {}

    def __call__(self, path: list[int]) -> np.ndarray:
        key = tuple(path)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        cell = np.zeros(self.m, dtype=np.int64)
        for c in path:
            cell = np.unique(cell * 2 + self.inc[c], return_inverse=True)[1].reshape(-1)
        rank = np.zeros(self.m, dtype=np.int64)
        seen: dict[int, int] = {}
        for pt, lab in enumerate(cell.tolist()):
            rank[pt] = seen.get(lab, 0)
            seen[lab] = rank[pt] + 1
        cz, rz = cell[self.cands], rank[self.cands]
        ok = np.ones(len(self.cands), dtype=bool)
        for j in range(cz.shape[1]):
            before = (cz[:, :j] == cz[:, [j]]).sum(axis=1)
            ok &= rz[:, j] == before
        if len(self._cache) < 4096:
            self._cache[key] = ok
        return ok


def _engine(m: int, k: int, robust: bool, budget: int | None) -> RefinementSearch:
    labels, tags = _universe(m, k, robust)
    return RefinementSearch(labels, tags, budget=budget, allowed=_OrbitMinFilter(m, k))


def _certificate(m: int, k: int, picks: list[int]) -> Certificate:
    cands = subset_array(m, k)
    return Certificate.from_lists(m, k, ((cands[i] + 1).tolist() for i in picks))


def _subtree(args):
    m, k, robust, t, second, budget = args
    engine = _engine(m, k, robust, budget)
    try:
        return engine.find(t, (0, second)), engine.nodes
    except NodeBudgetExceeded:
        return "budget", engine.nodes


def exists_of_size(m: int, k: int, t: int, robust_mode: bool = False,
                   budget: int | None = None, threads: int = 1) -> Certificate | None:
    """A verified certificate of size exactly ``t``, or ``None`` if none exists.

    The answer is the lexicographically first such family (as a list of
    indices into the lexicographic k-subset order), also with ``threads > 1``:
    subtrees are searched in parallel but accepted in order.  With a node
    ``budget`` (per worker when parallel) :class:`BudgetExhausted` is raised
    instead of an inconclusive answer.
    """
    _check(m, k)
    if t < 0:
        raise InvalidParameters(f"target size must be >= 0, got {t}")
    engine = _engine(m, k, robust_mode, budget)
    if t == 0 or engine.size == 1:
        picks = engine.find(t, ())
    elif threads <= 1:
        try:
            picks = engine.find(t, (0,))
        except NodeBudgetExceeded:
            raise BudgetExhausted(f"node budget {budget} exhausted at t={t}") from None
    else:
        picks = _parallel(engine, m, k, robust_mode, t, budget, threads)
    if picks is None:
        return None
    cert = _certificate(m, k, picks)
    ok = is_robust(cert) if robust_mode else is_separating(cert)
    assert ok, "search returned an unverified family"
    return cert


def _parallel(engine, m, k, robust, t, budget, threads):
    codes, p = engine.start([0])
    engine._path = [0]
    if p == engine.size:
        return engine.find(t, (0,))
    if t == 1:
        return None
    seconds = engine.children(codes, p, 1, t - 1)
    jobs = [(m, k, robust, t, s, budget) for s in seconds]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for picks, _ in pool.map(_subtree, jobs):
            if picks == "budget":
                raise BudgetExhausted(f"node budget {budget} exhausted at t={t}")
            if picks is not None:
                return picks
    return None


def sigma_exact(m: int, k: int, robust_mode: bool = False, budget: int | None = None,
                threads: int = 1) -> tuple[int, Certificate]:
    """Least size of a (robust) separating family, with the canonical witness.

    Deepening starts from the proven lower bound; ``budget`` caps the total
    number of search nodes over all depths.
    """
    _check(m, k)
    t = start_bound(m, k)
    spent = 0
    while True:
        remaining = None if budget is None else budget - spent
        try:
            if threads > 1:
                cert = exists_of_size(m, k, t, robust_mode, remaining, threads)
            else:
                engine = _engine(m, k, robust_mode, remaining)
                try:
                    picks = engine.find(t, (0,) if t and engine.size > 1 else ())
                finally:
                    spent += engine.nodes
                cert = None if picks is None else _certificate(m, k, picks)
        except (BudgetExhausted, NodeBudgetExceeded):
            upper = None
            if not robust_mode and k >= 3 and m >= 2 * k - 1:
                upper = upper_bound_value(m, k)
            raise BudgetExhausted(
                f"budget exhausted while deciding size {t} for m={m}, k={k}", lower=t, upper=upper
            ) from None
        log.debug("m=%d k=%d robust=%s t=%d -> %s", m, k, robust_mode, t, cert is not None)
        if cert is not None:
            ok = is_robust(cert) if robust_mode else is_separating(cert)
            assert ok, "search returned an unverified family"
            return t, cert
        t += 1


def local_search(m: int, k: int, t: int, robust_mode: bool = False, seed: int = 0,
                 iterations: int = 100_000, patience: int = 5_000,
                 proposals: int = 8) -> Certificate | None:
    """Seeded hill climbing over size-``t`` families.

    Cost is ``sum over signature classes of (size - 1)``; each step tries
    ``proposals`` single-member replacements and keeps the best one if it does
    not increase the cost.  After ``patience`` steps without improvement the
    state restarts from a fresh random family.  Signatures are compared via
    random 64-bit linear hashes: distinct hashes imply distinct signatures, so
    a zero-cost state is always a genuine certificate (and is re-verified).
    """
    _check(m, k)
    labels, tags = _universe(m, k, robust_mode)
    n_cands, size = labels.shape
    if t > n_cands:
        return None
    rng = np.random.default_rng(seed)
    weights = rng.integers(1, 2**63, size=t, dtype=np.uint64) | np.uint64(1)
    offset = tags.astype(np.uint64) * np.uint64(rng.integers(1, 2**63))
    lab = labels.astype(np.uint64)

    def cost_of(codes):
        return size - len(np.unique(codes))

    def fresh():
        chosen = rng.choice(n_cands, size=t, replace=False)
        codes = offset + (lab[chosen] * weights[:, None]).sum(axis=0)
        return list(chosen), codes

    chosen, codes = fresh()
    cost = cost_of(codes)
    best_cost, stale = cost, 0
    for _ in range(iterations):
        if cost == 0:
            break
        best_move = None
        for _ in range(proposals):
            j = int(rng.integers(t))
            new = int(rng.integers(n_cands))
            if new in chosen:
                continue
            cand_codes = codes + (lab[new] - lab[chosen[j]]) * weights[j]
            c = cost_of(cand_codes)
            if best_move is None or c < best_move[0]:
                best_move = (c, j, new, cand_codes)
        if best_move is not None and best_move[0] <= cost:
            cost, j, new, codes = best_move
            chosen[j] = new
        if cost < best_cost:
            best_cost, stale = cost, 0
        else:
            stale += 1
            if stale > patience:
                chosen, codes = fresh()
                cost = cost_of(codes)
                best_cost, stale = cost, 0
    if cost != 0:
        return None
    cert = _certificate(m, k, sorted(chosen))
    ok = is_robust(cert) if robust_mode else is_separating(cert)
    return cert if ok else None


@dataclass(frozen=True)
class IrredundantResult:
    sizes: frozenset[int]
    complete: bool
    examined: int


def irredundant_from_labels(labels: np.ndarray, tags: np.ndarray | None, limit: int) -> IrredundantResult:
    """Sizes of irredundant separating families over an explicit label matrix.

    Families are examined in order of increasing size; ``limit`` caps how many
    are examined (the result is then flagged incomplete).
    """
    engine = RefinementSearch(labels, tags)
    n = engine.n_cands
    examined, found = 0, set()

    def separates(family) -> bool:
        codes, p = engine.start(list(family))
        return p == engine.size

    for s in range(n + 1):
        for fam in combinations(range(n), s):
            if examined >= limit:
                return IrredundantResult(frozenset(found), False, examined)
            examined += 1
            if not separates(fam):
                continue
            if all(not separates(fam[:i] + fam[i + 1:]) for i in range(s)):
                found.add(s)
    return IrredundantResult(frozenset(found), True, examined)


def irredundant_sizes(m: int, k: int, limit: int = 1 << 16) -> IrredundantResult:
    _check(m, k)
    labels, _ = _universe(m, k, False)
    return irredundant_from_labels(labels, None, limit)


def random_relabel(cert: Certificate, rng: random.Random) -> Certificate:
    perm = list(range(1, cert.m + 1))
    rng.shuffle(perm)
    return cert.relabel(perm)


__all__ = [
    "exists_of_size", "sigma_exact", "local_search", "irredundant_sizes",
    "irredundant_from_labels", "IrredundantResult", "random_relabel",
]
