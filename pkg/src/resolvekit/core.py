"""Ground representations: k-subsets, certificates, the incidence matrix and
row-weight profiles.

Points are 1-indexed everywhere in the public surface.  Internally the
incidence matrix is a dense ``uint8`` array whose row ``i`` belongs to point
``i + 1`` and whose column ``s`` belongs to ``cert.sets[s]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidParameters


@dataclass(frozen=True, order=True)
class KSubset:
    ground_size: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(int(x) for x in self.members)
        object.__setattr__(self, "members", members)
        if self.ground_size < 1:
            raise InvalidParameters(f"ground size must be positive, got {self.ground_size}")
        if not members:
            raise InvalidParameters("a k-subset needs at least one member")
        if any(b <= a for a, b in zip(members, members[1:])):
            raise InvalidParameters(f"members must be strictly increasing: {members}")
        if members[0] < 1 or members[-1] > self.ground_size:
            raise InvalidParameters(f"members {members} outside 1..{self.ground_size}")

    @property
    def k(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, point: object) -> bool:
        return point in self.members

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class Certificate:
    """An ordered family of distinct k-subsets of ``{1..m}``."""

    m: int
    k: int
    sets: tuple[KSubset, ...]

    def __post_init__(self) -> None:
        if self.m < 1 or self.k < 1:
            raise InvalidParameters(f"need m, k >= 1, got m={self.m}, k={self.k}")
        sets = tuple(self.sets)
        object.__setattr__(self, "sets", sets)
        for s in sets:
            if s.ground_size != self.m:
                raise InvalidParameters(f"subset {s} has ground size {s.ground_size}, expected {self.m}")
            if s.k != self.k:
                raise InvalidParameters(f"subset {s} has {s.k} elements, expected {self.k}")
        if len(set(sets)) != len(sets):
            raise InvalidParameters("duplicate subsets in certificate")

    @classmethod
    def from_lists(cls, m: int, k: int, lists: Iterable[Iterable[int]]) -> Certificate:
        return cls(m, k, tuple(KSubset(m, tuple(sorted(s))) for s in lists))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def as_lists(self) -> list[list[int]]:
        return [list(s.members) for s in self.sets]

    def sorted(self) -> Certificate:
        return Certificate(self.m, self.k, tuple(sorted(self.sets)))

    def relabel(self, perm: Sequence[int]) -> Certificate:
        """Apply a point relabelling; ``perm[i - 1]`` is the new name of point ``i``."""
        if sorted(perm) != list(range(1, self.m + 1)):
            raise InvalidParameters("relabelling must be a permutation of 1..m")
        return Certificate.from_lists(self.m, self.k, ([perm[x - 1] for x in s] for s in self.sets))

    def __str__(self) -> str:
        return f"Certificate(m={self.m}, k={self.k}, [{', '.join(map(str, self.sets))}])"


@dataclass(frozen=True)
class IncidenceMatrix:
    entries: np.ndarray  # shape (m, ell), 0/1

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def row_weights(self) -> np.ndarray:
        return self.entries.sum(axis=1, dtype=np.int64)

    def column_sums(self) -> np.ndarray:
        return self.entries.sum(axis=0, dtype=np.int64)

    def support(self, point: int) -> frozenset[int]:
        """Column positions (0-based) of the subsets containing ``point``."""
        return frozenset(np.flatnonzero(self.entries[point - 1]).tolist())


@dataclass(frozen=True)
class WeightProfile:
    d: tuple[int, ...]  # d[x] = number of rows of weight x, x = 0..ell
    classes: tuple[tuple[int, ...], ...]  # classes[x] = points of weight x

    def __getitem__(self, x: int) -> int:
        return self.d[x] if 0 <= x < len(self.d) else 0

    def total_points(self) -> int:
        return sum(self.d)

    def total_incidences(self) -> int:
        return sum(x * dx for x, dx in enumerate(self.d))


def enumerate_ksubsets(m: int, k: int) -> list[KSubset]:
    """All k-subsets of ``{1..m}`` in lexicographic order."""
    if k < 1 or k > m:
        raise InvalidParameters(f"need 1 <= k <= m, got m={m}, k={k}")
    return [KSubset(m, tuple(c)) for c in combinations(range(1, m + 1), k)]


@lru_cache(maxsize=64)
def subset_array(m: int, size: int) -> np.ndarray:
    """0-based member array of every ``size``-subset of ``[m]``, lexicographic.

    Shape ``(C(m, size), size)``; the empty subset gives one row of width 0.
    """
    n = comb(m, size)
    if size == 0:
        return np.zeros((1, 0), dtype=np.int64)
    arr = np.fromiter(
        (x for c in combinations(range(m), size) for x in c), dtype=np.int64, count=n * size
    ).reshape(n, size)
    arr.flags.writeable = False
    return arr


def incidence_matrix(cert: Certificate) -> IncidenceMatrix:
    mat = np.zeros((cert.m, len(cert)), dtype=np.uint8)
    for col, s in enumerate(cert.sets):
        mat[np.asarray(s.members) - 1, col] = 1
    return IncidenceMatrix(mat)


def signature(cert: Certificate, omega: Iterable[int]) -> tuple[int, ...]:
    """Intersection sizes ``|omega & s|`` for every ``s`` in the certificate."""
    omega = frozenset(omega)
    bad = [x for x in omega if not 1 <= x <= cert.m]
    if bad:
        raise InvalidParameters(f"points {sorted(bad)} outside 1..{cert.m}")
    return tuple(len(omega.intersection(s.members)) for s in cert.sets)


def signature_matrix(mat: IncidenceMatrix | np.ndarray, subsets: np.ndarray) -> np.ndarray:
    """Row sums of ``mat`` over each row of ``subsets`` (0-based point arrays)."""
    entries = mat.entries if isinstance(mat, IncidenceMatrix) else mat
    if subsets.shape[1] == 0:
        return np.zeros((subsets.shape[0], entries.shape[1]), dtype=np.int16)
    return entries[subsets].sum(axis=1, dtype=np.int16)


def weight_profile(mat: IncidenceMatrix) -> WeightProfile:
    weights = mat.row_weights()
    ell = mat.cols
    d = np.bincount(weights, minlength=ell + 1)
    classes = tuple(tuple((np.flatnonzero(weights == x) + 1).tolist()) for x in range(ell + 1))
    return WeightProfile(tuple(int(v) for v in d), classes)
