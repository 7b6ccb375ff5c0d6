"""Orbit dimension of finite permutation groups.

Stabilizer orbits are read off the orbitals (G-orbits on ordered pairs):
for a point w, the G_w-orbit of b is the set of c with (w, c) in the orbital
of (w, b).  Orbitals are the connected components of the graph on pairs
whose edges are (a, b) -> (a^g, b^g) for the generators g, so no stabilizer
generators are ever needed.  Full element enumeration is only used where an
explicit order cap applies (base checks and the extremal-structure verifier).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import comb

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .core import subset_array
from .errors import BudgetExhausted, CapacityError, InvalidParameters, PreconditionError
from .refine import NodeBudgetExceeded, RefinementSearch
from .search import IrredundantResult, irredundant_from_labels

DEFAULT_ORDER_CAP = 10**6
DEFAULT_DEGREE_CAP = 5000


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}``; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidParameters(f"not a permutation of 1..{len(images)}: {images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def from_cycles(cls, n: int, *cycles: tuple[int, ...]) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    def __call__(self, point: int) -> int:
        return self.images[point - 1]


@dataclass(frozen=True, eq=False)
class PermGroup:
    degree: int
    generators: tuple[Permutation, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        gens = tuple(g if isinstance(g, Permutation) else Permutation(tuple(g)) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if self.degree < 1:
            raise InvalidParameters(f"degree must be positive, got {self.degree}")
        if not gens:
            raise InvalidParameters("a group needs at least one generator")
        if any(g.degree != self.degree for g in gens):
            raise InvalidParameters("all generators must have the group's degree")

    @cached_property
    def gen_array(self) -> np.ndarray:
        """0-based images, one row per generator."""
        return np.array([g.images for g in self.generators], dtype=np.int64) - 1

    @cached_property
    def orbitals(self) -> np.ndarray:
        """``n x n`` array: entry (a, b) is the id of the orbital containing (a+1, b+1)."""
        n = self.degree
        pairs = np.arange(n * n)
        a, b = np.divmod(pairs, n)
        rows, cols = [], []
        for g in self.gen_array:
            rows.append(pairs)
            cols.append(g[a] * n + g[b])
        rows, cols = np.concatenate(rows), np.concatenate(cols)
        graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n * n, n * n))
        _, labels = connected_components(graph, directed=True, connection="weak")
        return labels.reshape(n, n)

    @cached_property
    def point_orbits(self) -> np.ndarray:
        n = self.degree
        rows = np.tile(np.arange(n), len(self.generators))
        cols = self.gen_array.ravel()
        graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
        return connected_components(graph, directed=True, connection="weak")[1]

    def is_transitive(self) -> bool:
        return bool((self.point_orbits == self.point_orbits[0]).all())

    def elements(self, order_cap: int = DEFAULT_ORDER_CAP) -> np.ndarray:
        """All elements as 0-based image rows (identity first), by closure."""
        n = self.degree
        ident = tuple(range(n))
        seen = {ident}
        order = [ident]
        frontier = [np.arange(n)]
        gens = self.gen_array
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = g[x]  # apply x then g
                    key = tuple(y.tolist())
                    if key not in seen:
                        seen.add(key)
                        order.append(key)
                        nxt.append(y)
                        if len(order) > order_cap:
                            raise CapacityError(f"group order exceeds cap {order_cap}")
            frontier = nxt
        return np.array(order, dtype=np.int64).reshape(len(order), n)


@dataclass(frozen=True)
class Partition:
    """Canonical partition of ``{1..n}``: blocks sorted internally and by minimum."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted(tuple(sorted(int(x) for x in b)) for b in self.blocks))
        object.__setattr__(self, "blocks", blocks)
        flat = [x for b in blocks for x in b]
        if any(not b for b in blocks) or sorted(flat) != list(range(1, len(flat) + 1)):
            raise InvalidParameters(f"blocks do not partition 1..{len(flat)}: {blocks}")

    @classmethod
    def from_labels(cls, labels) -> "Partition":
        groups: dict[int, list[int]] = {}
        for i, lab in enumerate(np.asarray(labels).tolist(), start=1):
            groups.setdefault(lab, []).append(i)
        return cls(tuple(tuple(v) for v in groups.values()))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def labels(self) -> np.ndarray:
        out = np.empty(self.n, dtype=np.int64)
        for j, b in enumerate(self.blocks):
            out[np.array(b) - 1] = j
        return out

    def is_discrete(self) -> bool:
        return len(self.blocks) == self.n

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, b)) for b in self.blocks)


def _point(G: PermGroup, w: int) -> int:
    if not 1 <= w <= G.degree:
        raise InvalidParameters(f"point {w} outside 1..{G.degree}")
    return w - 1


def orbital_partition(G: PermGroup, w: int) -> Partition:
    """Orbits of the stabilizer of ``w``."""
    return Partition.from_labels(G.orbitals[_point(G, w)])


def partition_meet(p1: Partition, p2: Partition) -> Partition:
    if p1.n != p2.n:
        raise InvalidParameters(f"ground sizes differ: {p1.n} vs {p2.n}")
    return Partition.from_labels(p1.labels() * len(p2) + p2.labels())


def rank(G: PermGroup) -> int:
    if not G.is_transitive():
        raise PreconditionError("rank is defined for transitive groups only")
    return len(np.unique(G.orbitals[0]))


def is_separating_group(G: PermGroup, S) -> bool:
    pts = [_point(G, w) for w in S]
    if not pts:
        return G.degree == 1
    rows = G.orbitals[pts]
    return np.unique(rows.T, axis=0).shape[0] == G.degree


def sigma_group(G: PermGroup, budget: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Least size of a separating point set and the lexicographically first one.

    For transitive groups the first point is fixed to 1.
    """
    n = G.degree
    engine = RefinementSearch(G.orbitals, budget=budget)
    fix = (0,) if G.is_transitive() and n > 1 else ()
    spent = 0
    for t in range(n + 1):
        engine.budget = None if budget is None else budget - spent
        engine.nodes = 0
        try:
            picks = engine.find(t, fix if t else ())
        except NodeBudgetExceeded:
            upper = n - rank(G) + 1 if G.is_transitive() and n > 1 else max(n - 1, 0)
            raise BudgetExhausted(f"budget exhausted at size {t}", lower=t, upper=upper) from None
        spent += engine.nodes
        if picks is not None:
            witness = tuple(p + 1 for p in picks)
            assert is_separating_group(G, witness)
            return t, witness
    raise AssertionError("the full point set always separates")  # pragma: no cover


def is_base(G: PermGroup, S, order_cap: int = DEFAULT_ORDER_CAP) -> bool:
    pts = np.array([_point(G, w) for w in S], dtype=np.int64)
    elems = G.elements(order_cap)
    fixing = (elems[:, pts] == pts).all(axis=1) if len(pts) else np.ones(len(elems), bool)
    return int(fixing.sum()) == 1  # only the identity


def _rank_of_action(perms: np.ndarray, size: int) -> int:
    """Number of orbits on ordered pairs of the group generated by ``perms``."""
    pairs = np.arange(size * size)
    a, b = np.divmod(pairs, size)
    rows = np.tile(pairs, len(perms) + 1)
    cols = np.concatenate([pairs] + [g[a] * size + g[b] for g in perms])
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size * size,) * 2)
    return connected_components(graph, directed=True, connection="weak")[0]


@dataclass
class ExtremalReport:
    n: int
    r: int
    sigma: int
    witness: tuple[int, ...]
    extremal: bool
    regular: bool
    blocks: Partition | None = None
    checks: dict[str, bool] = field(default_factory=dict)
    note: str = ""

    def passed(self) -> bool:
        return all(self.checks.values())

    def as_lines(self) -> list[str]:
        lines = [
            f"n: {self.n}", f"rank: {self.r}", f"sigma: {self.sigma}",
            f"witness: {' '.join(map(str, self.witness))}",
            f"extremal (sigma == n - r + 1): {str(self.extremal).lower()}",
            f"regular: {str(self.regular).lower()}",
        ]
        if self.blocks is not None:
            lines.append(f"blocks: {self.blocks}")
        lines += [f"check {k}: {'pass' if v else 'fail'}" for k, v in self.checks.items()]
        if self.note:
            lines.append(f"note: {self.note}")
        return lines


def verify_extremal_structure(G: PermGroup, budget: int | None = None,
                              order_cap: int = DEFAULT_ORDER_CAP) -> ExtremalReport:
    """Check the block structure forced on transitive groups with sigma = n - r + 1.

    The candidate block system is the orbit partition of the subgroup
    generated by all point stabilizers.  Three checks are reported: it has
    ``r - 1`` blocks; G acts regularly on the blocks; each block's setwise
    stabilizer is 2-transitive on the block.
    """
    n, r = G.degree, rank(G)
    sigma, witness = sigma_group(G, budget)
    regular = r == n
    rep = ExtremalReport(n=n, r=r, sigma=sigma, witness=witness,
                         extremal=sigma == n - r + 1, regular=regular)
    if regular:
        rep.note = "regular group: excluded from the block-structure statement"
        return rep
    if not rep.extremal:
        rep.note = "not extremal: no block structure is implied"
        return rep

    elems = G.elements(order_cap)
    ident = np.arange(n)
    has_fixed = (elems == ident).any(axis=1)
    stab = elems[has_fixed]
    rows = np.tile(ident, len(stab))
    graph = coo_matrix((np.ones(len(rows), np.int8), (rows, stab.ravel())), shape=(n, n))
    _, comp = connected_components(graph, directed=True, connection="weak")
    blocks = Partition.from_labels(comp)
    rep.blocks = blocks
    nb = len(blocks)
    rep.checks["block-count == r-1"] = nb == r - 1

    lab = blocks.labels()
    # induced action on blocks: block of image of the block's first point
    firsts = np.array([b[0] - 1 for b in blocks.blocks])
    induced = lab[elems[:, firsts]]
    consistent = all(
        (lab[elems[:, np.array(b) - 1]] == induced[:, [j]]).all() for j, b in enumerate(blocks.blocks)
    )
    induced_group = np.unique(induced, axis=0)
    transitive = len(np.unique(induced[:, 0])) == nb
    rep.checks["regular-on-blocks"] = consistent and transitive and len(induced_group) == nb

    two_trans = True
    for j, b in enumerate(blocks.blocks):
        pts = np.array(b) - 1
        setwise = elems[(induced[:, j] == j)]
        local = np.searchsorted(pts, setwise[:, pts])
        if len(b) > 1 and _rank_of_action(local, len(b)) != 2:
            two_trans = False
    rep.checks["block-stabilizer-2-transitive"] = two_trans
    return rep


def irredundant_group_sizes(G: PermGroup, cap: int = 1 << 16) -> IrredundantResult:
    return irredundant_from_labels(G.orbitals, None, cap)


def johnson_action(m: int, k: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> PermGroup:
    """Sym(m) acting on lexicographically indexed k-subsets."""
    if not 1 <= k < m:
        raise InvalidParameters(f"need 1 <= k < m, got m={m}, k={k}")
    n = comb(m, k)
    if n > degree_cap:
        raise CapacityError(f"degree C({m},{k})={n} exceeds cap {degree_cap}")
    subs = subset_array(m, k)
    index = {tuple(row): i for i, row in enumerate(subs.tolist())}
    gens = []
    for point_map in ([1, 0] + list(range(2, m)), [(i + 1) % m for i in range(m)]):
        pm = np.array(point_map)
        images = [index[tuple(sorted(pm[row]))] + 1 for row in subs]
        gens.append(Permutation(tuple(images)))
    return PermGroup(n, tuple(gens), name=f"J({m},{k})")


# --- small catalog ----------------------------------------------------------

def cyclic_group(n: int) -> PermGroup:
    return PermGroup(n, (Permutation.from_cycles(n, tuple(range(1, n + 1))),), name=f"C{n}")


def dihedral_group(n: int) -> PermGroup:
    if n < 3:
        raise InvalidParameters("dihedral groups need n >= 3")
    rot = Permutation.from_cycles(n, tuple(range(1, n + 1)))
    refl = Permutation(tuple([1] + list(range(n, 1, -1))))
    return PermGroup(n, (rot, refl), name=f"D{2 * n}")


def symmetric_group(n: int) -> PermGroup:
    if n < 2:
        return PermGroup(n, (Permutation(tuple(range(1, n + 1))),), name=f"S{n}")
    gens = (Permutation.from_cycles(n, (1, 2)), Permutation.from_cycles(n, tuple(range(1, n + 1))))
    return PermGroup(n, gens, name=f"S{n}")


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        raise InvalidParameters("alternating groups need n >= 3")
    long = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
    gens = (Permutation.from_cycles(n, (1, 2, 3)), Permutation.from_cycles(n, long))
    return PermGroup(n, gens, name=f"A{n}")


def catalog(max_degree: int = 8) -> list[PermGroup]:
    out = []
    for n in range(3, max_degree + 1):
        out += [cyclic_group(n), dihedral_group(n), symmetric_group(n), alternating_group(n)]
    return out


__all__ = [
    "Permutation", "PermGroup", "Partition", "ExtremalReport",
    "orbital_partition", "partition_meet", "rank", "is_separating_group", "sigma_group",
    "is_base", "verify_extremal_structure", "irredundant_group_sizes", "johnson_action",
    "cyclic_group", "dihedral_group", "symmetric_group", "alternating_group", "catalog",
    "DEFAULT_ORDER_CAP",
]
