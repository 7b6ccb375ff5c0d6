"""Text formats for certificates, permutation groups and graphs.

Certificate: first line ``m k l``, then ``l`` lines of ``k`` increasing
1-indexed points.  Group: first line ``n g``, then ``g`` lines of ``n``
images (position ``i`` holds the image of ``i``).  Graph: first line ``n``,
then ``n`` lines listing the (1-indexed) neighbours of vertex ``i``.  In all
three, lines starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

import hashlib
import os
from pathlib import Path
from typing import Iterable

from .core import Certificate
from .errors import InvalidParameters

DATA_ENV = "RESOLVEKIT_DATA"


def data_dir() -> Path:
    override = os.environ.get(DATA_ENV)
    return Path(override) if override else Path(__file__).with_name("data")


def _content_lines(text: str) -> list[list[int]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append([int(tok) for tok in line.split()])
        except ValueError:
            raise InvalidParameters(f"line {lineno}: expected integers, got {raw!r}") from None
    return out


def _comments(text: str) -> list[str]:
    return [ln.strip()[1:].strip() for ln in text.splitlines() if ln.strip().startswith("#")]


def parse_certificate(text: str) -> Certificate:
    lines = _content_lines(text)
    if not lines or len(lines[0]) != 3:
        raise InvalidParameters("certificate header must be 'm k l'")
    m, k, ell = lines[0]
    body = lines[1:]
    if len(body) != ell:
        raise InvalidParameters(f"header announces {ell} subsets, found {len(body)}")
    for row in body:
        if len(row) != k:
            raise InvalidParameters(f"subset {row} does not have {k} members")
    return Certificate.from_lists(m, k, body)


def format_certificate(cert: Certificate, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{cert.m} {cert.k} {len(cert)}")
    lines += [" ".join(map(str, s.members)) for s in cert.sets]
    return "\n".join(lines) + "\n"


def certificate_digest(cert: Certificate) -> str:
    """SHA-256 of the comment-free text form."""
    return hashlib.sha256(format_certificate(cert).encode()).hexdigest()


def read_certificate(path: str | os.PathLike) -> Certificate:
    return parse_certificate(Path(path).read_text())


def write_certificate(path: str | os.PathLike, cert: Certificate, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_certificate(cert, comments))


def load_fixture(name: str, verify_digest: bool = True) -> Certificate:
    """Load ``<data>/<name>.cert``; a ``# sha256: ...`` comment, if present, is checked."""
    text = (data_dir() / f"{name}.cert").read_text()
    cert = parse_certificate(text)
    if verify_digest:
        for c in _comments(text):
            if c.startswith("sha256:"):
                want = c.split(":", 1)[1].strip()
                if certificate_digest(cert) != want:
                    raise InvalidParameters(f"fixture {name}: digest mismatch")
    return cert


def parse_group(text: str):
    from .groups import Permutation, PermGroup

    lines = _content_lines(text)
    if not lines or len(lines[0]) != 2:
        raise InvalidParameters("group header must be 'n g'")
    n, g = lines[0]
    body = lines[1:]
    if len(body) != g or g < 1:
        raise InvalidParameters(f"header announces {g} generators, found {len(body)}")
    for row in body:
        if len(row) != n:
            raise InvalidParameters(f"generator {row} does not have {n} images")
    return PermGroup(n, tuple(Permutation(tuple(r)) for r in body))


def format_group(G, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{G.degree} {len(G.generators)}")
    lines += [" ".join(map(str, p.images)) for p in G.generators]
    return "\n".join(lines) + "\n"


def read_group(path: str | os.PathLike):
    G = parse_group(Path(path).read_text())
    object.__setattr__(G, "name", Path(path).stem)
    return G


def parse_graph(text: str):
    from .graphs import SimpleGraph

    lines = _content_lines(text)
    if not lines or len(lines[0]) != 1:
        raise InvalidParameters("graph header must be the vertex count")
    n = lines[0][0]
    body = lines[1:]
    if len(body) != n:
        raise InvalidParameters(f"header announces {n} vertices, found {len(body)} adjacency lines")
    edges = set()
    for u, nbrs in enumerate(body, start=1):
        for v in nbrs:
            edges.add((min(u, v), max(u, v)))
    g = SimpleGraph.from_edges(n, edges)
    for u, nbrs in enumerate(body, start=1):
        if sorted(nbrs) != sorted(g.neighbours(u)):
            raise InvalidParameters(f"adjacency of vertex {u} is not symmetric")
    return g


def format_graph(g, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(str(g.vertex_count))
    lines += [" ".join(map(str, g.neighbours(v))) for v in range(1, g.vertex_count + 1)]
    return "\n".join(lines) + "\n"


def load_graph(name: str):
    return parse_graph((data_dir() / f"{name}.adj").read_text())


__all__ = [
    "data_dir", "parse_certificate", "format_certificate", "certificate_digest",
    "read_certificate", "write_certificate", "load_fixture", "parse_group", "format_group",
    "read_group", "parse_graph", "format_graph", "load_graph", "DATA_ENV",
]
