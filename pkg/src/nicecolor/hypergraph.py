"""The avoidance multi-hypergraph of a tuple instance.

Vertices are the tuple indices; element e of the alphabet contributes one
hyperedge holding exactly the vertices whose tuple avoids e.  Each tuple
avoids m - k elements, so every vertex has degree m - k; edges may repeat and
may be empty.  A nice c-coloring of the tuples is the same thing as a vertex
coloring in which every edge carries all c colors ("polychromatic"); for
c = 2 that is a proper 2-coloring (no monochromatic edge).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Coloring, TupleSet
from .general import solve_general
from .triple2 import color_2_triples


class DegreeMismatch(ValueError):
    """The hypergraph is not the avoidance graph of any k-tuple instance."""


@dataclass(frozen=True)
class MultiHypergraph:
    """Vertices 0..n_vertices-1; each edge a strictly increasing vertex tuple."""

    n_vertices: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n_vertices < 0:
            raise ValueError("negative vertex count")
        for edge in self.edges:
            prev = -1
            for v in edge:
                if v <= prev:
                    raise ValueError(f"edge {edge} is not strictly increasing")
                if v >= self.n_vertices:
                    raise ValueError(f"vertex {v} out of range")
                prev = v

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class VertexColoring:
    """A total assignment of colors 0..c-1 to vertices."""

    c: int
    assignment: dict[int, int]


def to_hypergraph(ts: TupleSet) -> MultiHypergraph:
    """The avoidance hypergraph: edge e-1 holds the indices avoiding e."""
    edges = []
    for e in range(1, ts.m + 1):
        edges.append(tuple(i for i, t in enumerate(ts.tuples) if e not in t))
    return MultiHypergraph(ts.n, tuple(edges))


def from_hypergraph(h: MultiHypergraph, k: int) -> TupleSet:
    """Invert to_hypergraph: vertex v becomes the tuple of edges missing v.

    Requires every vertex to have degree exactly m - k (DegreeMismatch
    otherwise).  An edge holding every vertex also fails: its element would
    occur in no tuple, which no normalized instance produces.
    """
    if h.n_vertices < 1:
        raise DegreeMismatch("need at least one vertex")
    m = h.m
    degree = [0] * h.n_vertices
    for edge in h.edges:
        if len(edge) == h.n_vertices:
            raise DegreeMismatch(
                f"edge {edge} contains every vertex; its element would occur in no tuple")
        for v in edge:
            degree[v] += 1
    for v, d in enumerate(degree):
        if d != m - k:
            raise DegreeMismatch(
                f"vertex {v} has degree {d}, expected m - k = {m - k}")
    membership = [set(edge) for edge in h.edges]
    tuples = []
    for v in range(h.n_vertices):
        tuples.append(tuple(e + 1 for e in range(m) if v not in membership[e]))
    return TupleSet(k, m, tuple(tuples))


def is_proper(h: MultiHypergraph, vc: VertexColoring) -> bool:
    """No monochromatic edge; edges of size < 2 always fail."""
    for edge in h.edges:
        if len(edge) < 2:
            return False
        colors = {vc.assignment[v] for v in edge}
        if len(colors) < 2:
            return False
    return True


def is_polychromatic(h: MultiHypergraph, vc: VertexColoring) -> bool:
    """Every edge carries all c colors."""
    want = set(range(vc.c))
    for edge in h.edges:
        if {vc.assignment[v] for v in edge} != want:
            return False
    return True


def min_edge_size(h: MultiHypergraph) -> int:
    return min((len(e) for e in h.edges), default=0)


def is_triangle_free(h: MultiHypergraph) -> bool:
    """No three vertices pairwise joined by edges of size exactly 2."""
    pairs = {edge for edge in h.edges if len(edge) == 2}
    adjacent: dict[int, set[int]] = {}
    for a, b in pairs:
        adjacent.setdefault(a, set()).add(b)
        adjacent.setdefault(b, set()).add(a)
    for a, b in pairs:
        if adjacent[a] & adjacent[b]:
            return False
    return True


def _vertex_coloring(col: Coloring) -> VertexColoring:
    return VertexColoring(col.c, dict(col.assignment))


def proper_2colorable(h: MultiHypergraph, k: int = 3) -> VertexColoring | None:
    """A proper 2-coloring of a degree-(m-3) avoidance hypergraph, or None.

    Answered on the tuple side: translate back to triples and 2-color them.
    For six or more vertices a proper 2-coloring exists exactly when every
    edge has size at least 2 and no triangle of size-2 edges occurs; smaller
    instances are decided exhaustively by the triple path.
    """
    ts = from_hypergraph(h, k)
    col = color_2_triples(ts)
    return None if col is None else _vertex_coloring(col)


def polychromatic_c_colorable(h: MultiHypergraph, c: int, k: int) -> VertexColoring | None:
    """A polychromatic c-coloring via the tuple-side solver, or None."""
    ts = from_hypergraph(h, k)
    col = solve_general(ts, c)
    return None if col is None else _vertex_coloring(col)


def parse_hypergraph(text: str) -> MultiHypergraph:
    """Parse the text format: a "n m" header, then one edge line per edge.

    Vertex ids are 1-based and whitespace separated; an empty line is an
    empty edge; lines starting with '#' are comments.  Exactly m edge lines
    must follow the header (trailing blank lines are ignored).
    """
    lines = [line for line in text.splitlines() if not line.lstrip().startswith("#")]
    at = 0
    while at < len(lines) and not lines[at].strip():
        at += 1
    if at == len(lines):
        raise ValueError("missing header line")
    header = lines[at].split()
    at += 1
    if len(header) != 2:
        raise ValueError(f"header must be 'n m', got {lines[at - 1]!r}")
    n, m = int(header[0]), int(header[1])
    edges = []
    while len(edges) < m:
        if at == len(lines):
            raise ValueError(f"expected {m} edges, found {len(edges)}")
        raw = lines[at].split()
        at += 1
        vertices = sorted(int(tok) for tok in raw)
        if len(set(vertices)) != len(vertices):
            raise ValueError(f"edge {raw} repeats a vertex")
        if vertices and (vertices[0] < 1 or vertices[-1] > n):
            raise ValueError(f"edge {raw} mentions a vertex outside 1..{n}")
        edges.append(tuple(v - 1 for v in vertices))
    for line in lines[at:]:
        if line.strip():
            raise ValueError(f"unexpected content after the last edge: {line!r}")
    return MultiHypergraph(n, tuple(edges))


def render_hypergraph(h: MultiHypergraph) -> str:
    """Render the text format; inverse of parse_hypergraph."""
    lines = [f"{h.n_vertices} {h.m}"]
    for edge in h.edges:
        lines.append(" ".join(str(v + 1) for v in edge))
    return "\n".join(lines) + "\n"


def infer_k(h: MultiHypergraph) -> int:
    """The k for which the degree law m - k can hold, from vertex 0's degree."""
    if h.n_vertices < 1:
        raise DegreeMismatch("need at least one vertex")
    degree = sum(1 for edge in h.edges if 0 in edge)
    k = h.m - degree
    if k < 1:
        raise DegreeMismatch(f"vertex 0 has degree {degree} out of {h.m} edges")
    return k
