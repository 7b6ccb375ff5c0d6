"""Regenerate the shipped data fixtures (except the local-search q=2 block).

    python scripts/make_fixtures.py
"""

from __future__ import annotations

from pathlib import Path

from resolvekit.core import Certificate
from resolvekit.graphs import SimpleGraph
from resolvekit.groups import catalog, johnson_action
from resolvekit.io import certificate_digest, format_certificate, format_graph, format_group

DATA = Path(__file__).resolve().parents[1] / "src" / "resolvekit" / "data"

EXAMPLE1 = [[2, 11, 13], [1, 6, 10], [1, 5, 8], [4, 5, 13],
            [7, 10, 12], [3, 12, 13], [2, 9, 12], [5, 6, 7]]
BLOCK9 = [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 6, 8], [1, 6, 9], [2, 6, 7]]


def lcf(n: int, shifts: list[int], repeats: int) -> SimpleGraph:
    edges = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    pattern = shifts * repeats
    for i, s in enumerate(pattern):
        j = (i + s) % n
        edges.add((min(i, j), max(i, j)))
    return SimpleGraph(n, tuple((u + 1, v + 1) for u, v in edges))


def petersen() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return SimpleGraph(10, tuple((u + 1, v + 1) for u, v in outer + inner + spokes))


def main() -> None:
    (DATA / "groups").mkdir(parents=True, exist_ok=True)
    for name, sets, m, note in [
        ("example1", EXAMPLE1, 13, "separating 8-set for the 3-subsets of a 13-set"),
        ("block9_robust", BLOCK9, 9, "robust separating 6-set for the 3-subsets of a 9-set"),
    ]:
        cert = Certificate.from_lists(m, 3, sets)
        (DATA / f"{name}.cert").write_text(
            format_certificate(cert, [note, f"sha256: {certificate_digest(cert)}"]))
    (DATA / "mcgee.adj").write_text(format_graph(lcf(24, [12, 7, -7], 8), ["McGee graph, LCF [12,7,-7]^8"]))
    (DATA / "petersen.adj").write_text(format_graph(petersen(), ["Petersen graph"]))
    for G in catalog(8) + [johnson_action(4, 2), johnson_action(5, 2), johnson_action(5, 3),
                           johnson_action(6, 3)]:
        name = G.name.replace("(", "_").replace(",", "_").replace(")", "")
        (DATA / "groups" / f"{name}.grp").write_text(format_group(G, [G.name]))


if __name__ == "__main__":
    main()
