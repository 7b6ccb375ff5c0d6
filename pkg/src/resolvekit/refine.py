"""Depth-first partition-refinement search shared by the Johnson and the
permutation-group solvers.

A *universe* of ``N`` items is to be split into singletons by choosing
candidates.  Candidate ``c`` induces the labelling ``labels[c]`` of the
universe (a stabilizer-orbit partition); a family of candidates separates the
universe iff the meet of its labellings is discrete.  The current meet is kept
as a compact code vector and refined incrementally.

Two pruning rules, both evaluated for all children of a node at once:

* block capacity: after the child, each block can still split into at most
  ``radix ** remaining`` parts, so ``sum(min(|block|, radix**remaining))``
  must reach ``N``;
* gain: a candidate ``b`` can add at most
  ``h(b, P) = sum over blocks B of (|B| - largest label class inside B)``
  parts to any refinement of the partition ``P``, and ``h`` only shrinks as
  ``P`` is refined.  So a child with ``p`` parts survives only if
  ``p + (sum of the largest remaining-many h values) >= N``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np


class NodeBudgetExceeded(Exception):
    pass


def compact(codes: np.ndarray) -> tuple[np.ndarray, int]:
    uniq, inverse = np.unique(codes, return_inverse=True)
    return inverse.reshape(-1).astype(np.int64), len(uniq)


@dataclass
class RefinementSearch:
    labels: np.ndarray  # (C, N) non-negative ints
    initial: np.ndarray | None = None  # (N,) starting classes, e.g. size tags
    budget: int | None = None
    # optional symmetry filter: chosen prefix -> boolean mask of admissible next picks
    allowed: Callable[[list[int]], np.ndarray] | None = None
    nodes: int = field(default=0, init=False)

    def __post_init__(self) -> None:
        self.labels = np.ascontiguousarray(self.labels, dtype=np.int64)
        self.n_cands, self.size = self.labels.shape
        self.radix = int(self.labels.max(initial=0)) + 1
        if self.initial is None:
            self.initial = np.zeros(self.size, dtype=np.int64)
        self.initial = np.asarray(self.initial, dtype=np.int64)

    def start(self, fixed: list[int]) -> tuple[np.ndarray, int]:
        codes, p = compact(self.initial)
        for c in fixed:
            codes, p = compact(codes * self.radix + self.labels[c])
        return codes, p

    def find(self, t: int, fixed: tuple[int, ...] = ()) -> list[int] | None:
        """Lexicographically first increasing family of size ``t`` extending
        ``fixed`` whose meet is discrete, or ``None`` if there is none.

        Raises :class:`NodeBudgetExceeded` when the node budget runs out.
        """
        fixed = list(fixed)
        if len(fixed) > t:
            return None
        codes, p = self.start(fixed)
        if p == self.size:
            return self._pad(fixed, t)
        if len(fixed) == t:
            return None
        first = fixed[-1] + 1 if fixed else 0
        self._path = list(fixed)
        found = self._dfs(codes, p, first, t - len(fixed))
        return None if found is None else fixed + found

    def children(self, codes: np.ndarray, p: int, first: int, r: int) -> list[int]:
        """Candidates ``c >= first`` that survive both prunes as the next pick."""
        hi = self.n_cands - r + 1
        if first >= hi:
            return []
        # later picks may come from anywhere in [first, n_cands), so the gain
        # values are computed over that whole range; children stop at ``hi``
        end = hi if r == 1 else self.n_cands
        nc = end - first
        width = p * self.radix
        child = codes[None, :] * self.radix + self.labels[first:end]
        keyed = child + (np.arange(nc, dtype=np.int64) * width)[:, None]
        uniq, counts = np.unique(keyed.ravel(), return_counts=True)
        row = uniq // width
        parts = np.bincount(row, minlength=nc)
        cands = np.arange(first, hi)
        keep = np.ones(hi - first, dtype=bool)
        if self.allowed is not None:
            keep = self.allowed(getattr(self, "_path", []))[first:hi]
        if r == 1:
            return cands[keep & (parts[: hi - first] == self.size)].tolist()

        rest = r - 1
        cap = self.radix ** rest if rest < 40 else self.size
        capacity = np.bincount(row, weights=np.minimum(counts, cap), minlength=nc)
        parent = uniq // self.radix
        starts = np.flatnonzero(np.r_[True, parent[1:] != parent[:-1]])
        largest = np.maximum.reduceat(counts, starts)
        h = self.size - np.bincount(parent[starts] // p, weights=largest, minlength=nc)
        if rest >= nc:
            top = h.sum()
        else:
            top = np.partition(h, nc - rest)[nc - rest:].sum()
        k = hi - first
        ok = keep & (capacity[:k] >= self.size) & (parts[:k] + top >= self.size)
        return cands[ok].tolist()

    def _dfs(self, codes: np.ndarray, p: int, first: int, r: int) -> list[int] | None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise NodeBudgetExceeded
        for c in self.children(codes, p, first, r):
            if r == 1:
                return [c]
            child, cp = compact(codes * self.radix + self.labels[c])
            if cp == self.size:
                return self._pad([c], r)
            self._path.append(c)
            found = self._dfs(child, cp, c + 1, r - 1)
            self._path.pop()
            if found is not None:
                return [c] + found
        return None

    def _pad(self, picked: list[int], t: int) -> list[int] | None:
        """Extend an already separating family to exactly ``t`` members."""
        nxt = (picked[-1] if picked else -1) + 1
        need = t - len(picked)
        if nxt + need > self.n_cands:
            return None
        return picked + list(range(nxt, nxt + need))
