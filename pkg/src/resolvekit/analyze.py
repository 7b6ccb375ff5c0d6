"""Structural decomposition of a certificate and the constraints every
separating certificate must satisfy.

Columns are referred to by their 0-based position in ``cert.sets``.  The
decomposition follows the weight classes of the incidence matrix: weight-1
rows mark the columns ``A``, weight-2 rows are the edges of an auxiliary
graph on the columns, weight-3 rows are triples classified by how many of
their columns lie in ``A``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .core import Certificate, WeightProfile, incidence_matrix, weight_profile

PASS, FAIL, SKIP = "pass", "fail", "skipped"


@dataclass(frozen=True)
class AnalysisReport:
    profile: WeightProfile
    A: frozenset[int]
    B: frozenset[int]
    gamma_edges: frozenset[frozenset[int]]
    duplicate_weight2: int
    eAA: int
    eAB: int
    eBB: int
    B1: frozenset[int]
    B0: frozenset[int]
    eB0B0: int
    eB0B1: int
    eB1B1: int
    triples: tuple[int, int, int, int]  # AAA, AAB, ABB, BBB
    row_supports: tuple[frozenset[int], ...] = field(repr=False)

    def neighbours(self, col: int) -> set[int]:
        return {x for e in self.gamma_edges if col in e for x in e if x != col}

    def as_dict(self) -> dict[str, int]:
        d = {f"d{x}": v for x, v in enumerate(self.profile.d) if v or x <= 3}
        d.update(
            A=len(self.A), B=len(self.B), B0=len(self.B0), B1=len(self.B1),
            eAA=self.eAA, eAB=self.eAB, eBB=self.eBB,
            eB0B0=self.eB0B0, eB0B1=self.eB0B1, eB1B1=self.eB1B1,
            duplicate_weight2=self.duplicate_weight2,
            eAAA=self.triples[0], eAAB=self.triples[1], eABB=self.triples[2], eBBB=self.triples[3],
        )
        return d


def analyze_certificate(cert: Certificate) -> AnalysisReport:
    mat = incidence_matrix(cert)
    profile = weight_profile(mat)
    supports = tuple(mat.support(i) for i in range(1, cert.m + 1))
    ell = len(cert)

    A = frozenset(c for s in supports if len(s) == 1 for c in s)
    B = frozenset(range(ell)) - A

    w2 = [s for s in supports if len(s) == 2]
    edges = frozenset(w2)
    eAA = sum(1 for e in edges if e <= A)
    eBB = sum(1 for e in edges if e <= B)
    eAB = len(edges) - eAA - eBB

    B1 = frozenset(b for e in edges if len(e & A) == 1 for b in e & B)
    B0 = B - B1

    def count_within(X, Y):
        if X is Y:
            return sum(1 for e in edges if e <= X)
        return sum(1 for e in edges if len(e & X) == 1 and len(e & Y) == 1)

    triples = [0, 0, 0, 0]
    for s in supports:
        if len(s) == 3:
            triples[3 - len(s & A)] += 1

    return AnalysisReport(
        profile=profile, A=A, B=B, gamma_edges=edges,
        duplicate_weight2=len(w2) - len(edges),
        eAA=eAA, eAB=eAB, eBB=eBB, B1=B1, B0=B0,
        eB0B0=count_within(B0, B0), eB0B1=count_within(B0, B1), eB1B1=count_within(B1, B1),
        triples=tuple(triples), row_supports=supports,
    )


def _b1_paths(rep: AnalysisReport) -> bool:
    """True if the graph induced on B has a 2-path b1 - b - b3 with b1, b3 in B1."""
    for mid in rep.B:
        nb = [x for x in rep.neighbours(mid) if x in rep.B1]
        if len(nb) >= 2:
            return True
    return False


def constraint_report(cert: Certificate, rep: AnalysisReport | None = None) -> dict[str, str]:
    """Evaluate every structural constraint: label -> pass / fail / skipped (reason).

    A constraint whose argument compares sums of ``i`` rows is only a theorem
    when ``i <= k`` and either ``i == k`` or ``m >= k + i`` (room to pad both
    sides to k-subsets); otherwise it is skipped.  The inequalities of the
    refined cubic analysis are stated for ``k = 3`` only.
    """
    rep = rep or analyze_certificate(cert)
    m, k, ell = cert.m, cert.k, len(cert)
    d = rep.profile
    out: dict[str, str] = {}

    def put(label: str, ok: bool, needs: tuple[int, ...] = (1,), only_k3: bool = False) -> None:
        if only_k3 and k != 3:
            out[label] = f"{SKIP} (k != 3)"
        elif max(needs) > k:
            out[label] = f"{SKIP} (needs row sums of {max(needs)} rows, k = {k})"
        elif any(i < k and m < k + i for i in needs):
            out[label] = f"{SKIP} (m < k + {min(needs)})"
        else:
            out[label] = PASS if ok else FAIL

    supports = rep.row_supports
    put("d0<=1", d[0] <= 1)
    w1 = [s for s in supports if len(s) == 1]
    put("distinct-weight1-rows", len(set(w1)) == len(w1))
    put("distinct-rows", len(set(supports)) == len(supports))
    valency = Counter(x for e in rep.gamma_edges for x in e)
    put("gamma-valency<=k", max(valency.values(), default=0) <= k)
    put("eAA<=1", rep.eAA <= 1, needs=(3,))
    a_nbrs = Counter(b for e in rep.gamma_edges if len(e & rep.A) == 1 for b in e & rep.B)
    put("B-at-most-one-A-neighbour", max(a_nbrs.values(), default=0) <= 1, needs=(2,))
    aaa = [s for s in supports if len(s) == 3 and s <= rep.A]
    put("AAA-disjoint", all(not (x & y) for x, y in combinations(aaa, 2)), needs=(2,))
    aab_per_b = Counter(b for s in supports if len(s) == 3 and len(s & rep.A) == 2 for b in s & rep.B)
    put("AAB-at-most-one-per-B", max(aab_per_b.values(), default=0) <= 1, needs=(3,))
    # 2*d2 <= 2 + (k+1)(ell - d1)
    put("d2-bound", 2 * d[2] <= 2 + (k + 1) * (ell - d[1]), needs=(2, 3))

    put("eAB==|B1|", rep.eAB == len(rep.B1), needs=(2,))
    put("B-degree-count", 2 * rep.eBB <= 3 * len(rep.B0) + 2 * len(rep.B1), needs=(2, 3), only_k3=True)
    put("no-B1-path", not _b1_paths(rep), needs=(3,), only_k3=True)
    # ell >= (3m-4)/5 + |B0|/10, ell >= (3m-4)/5 + |B1|/10, ell >= (4m-6)/7 + 2 d1/21
    put("ell-bound-B0", 10 * ell >= 2 * (3 * m - 4) + len(rep.B0), needs=(1, 2, 3), only_k3=True)
    put("ell-bound-B1", 10 * ell >= 2 * (3 * m - 4) + len(rep.B1), needs=(1, 2, 3), only_k3=True)
    put("ell-bound-d1", 21 * ell >= 3 * (4 * m - 6) + 2 * d[1], needs=(1, 2, 3), only_k3=True)
    return out


def check_structural_constraints(cert: Certificate) -> list[str]:
    """Labels of violated constraints; empty for every separating certificate."""
    return [label for label, status in constraint_report(cert).items() if status == FAIL]
