"""Regenerate the stored 16-subset certificate for 26 points (k = 3).

    python scripts/make_q2_fixture.py
"""

from __future__ import annotations

from pathlib import Path

from resolvekit.io import certificate_digest, format_certificate
from resolvekit.search import local_search
from resolvekit.verify import is_separating

SEED, ITERATIONS = 0, 200_000
OUT = Path(__file__).resolve().parents[1] / "src" / "resolvekit" / "data" / "johnson3_q2.cert"


def main() -> None:
    cert = local_search(26, 3, 16, seed=SEED, iterations=ITERATIONS)
    assert cert is not None and is_separating(cert)
    OUT.write_text(format_certificate(cert, [
        "separating 16-set for the 3-subsets of a 26-set",
        f"provenance: resolvekit.search.local_search(26, 3, 16, seed={SEED}, iterations={ITERATIONS})",
        f"sha256: {certificate_digest(cert)}",
    ]))


if __name__ == "__main__":
    main()
