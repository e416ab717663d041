"""Replacement dynamics of a diagonal binary quadratic form.

The form f(x, y) = C*x^2 + D*y^2 acts on a vector by replacing one chosen
coordinate with the value f(x, y).  A word over {'L', 'R'} prescribes which
coordinate is replaced at each step ('L' = first, 'R' = second), applied
left to right.  A vector is periodic of type t when the full word returns
it to itself and no proper prefix of the word already does.

The scalar arithmetic is generic: coordinates may be Fractions or elements
of a number field (anything supporting +, *, and exact equality), so orbits
can be followed over any exact coefficient domain.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Form",
    "replace_step",
    "apply_type",
    "apply_type_trace",
    "is_periodic_of_type",
    "OrbitGraph",
    "orbit_graph",
    "graph_to_dot",
]


@dataclass(frozen=True)
class Form:
    """The diagonal form f(x, y) = C*x^2 + D*y^2 with exact coefficients."""

    C: Fraction
    D: Fraction

    def __post_init__(self):
        object.__setattr__(self, "C", Fraction(self.C))
        object.__setattr__(self, "D", Fraction(self.D))

    def value(self, v):
        x, y = v
        return self.C * (x * x) + self.D * (y * y)

    def __str__(self):
        return f"f(x,y) = {self.C}*x^2 + {self.D}*y^2"


def replace_step(form, v, letter):
    """One replacement move: substitute f(v) for the chosen coordinate."""
    x, y = v
    w = form.value(v)
    if letter == "L":
        return (w, y)
    if letter == "R":
        return (x, w)
    raise ValueError(f"letter must be 'L' or 'R', got {letter!r}")


def apply_type(form, v, word):
    """Apply a whole word left to right."""
    for letter in word:
        v = replace_step(form, v, letter)
    return v


def apply_type_trace(form, v, word):
    """All intermediate vectors: [v, after t1, after t1 t2, ...]."""
    out = [v]
    for letter in word:
        v = replace_step(form, v, letter)
        out.append(v)
    return out


def is_periodic_of_type(form, v, word):
    """True when word returns v to itself and no proper prefix already does."""
    if not word:
        raise ValueError("the empty word has no period type")
    cur = v
    for i, letter in enumerate(word):
        cur = replace_step(form, cur, letter)
        if cur == v and i + 1 < len(word):
            return False
    return cur == v


@dataclass
class OrbitGraph:
    """Directed orbit graph: vertices reached from the start by both moves.

    `edges` holds (source index, letter, target index).  When the vertex
    budget is exhausted the expansion stops and `truncated` is set; edges
    into vertices beyond the budget are not recorded.
    """

    vertices: list
    edges: list
    truncated: bool

    def index_of(self, v):
        return self.vertices.index(v)


def orbit_graph(form, v, max_vertices=256):
    """Breadth-first orbit exploration with exact deduplication."""
    if max_vertices < 1:
        raise ValueError("max_vertices must be positive")
    index = {v: 0}
    vertices = [v]
    edges = []
    truncated = False
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for letter in ("L", "R"):
            w = replace_step(form, vertices[i], letter)
            j = index.get(w)
            if j is None:
                if len(vertices) >= max_vertices:
                    truncated = True
                    continue
                j = len(vertices)
                index[w] = j
                vertices.append(w)
                queue.append(j)
            edges.append((i, letter, j))
    return OrbitGraph(vertices=vertices, edges=edges, truncated=truncated)


def _vertex_label(v):
    x, y = v
    return f"({x}, {y})"


def graph_to_dot(graph, name="orbit"):
    """Graphviz DOT text for an orbit graph (L edges solid, R edges dashed)."""
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  node [shape=box, fontsize=10];']
    for i, v in enumerate(graph.vertices):
        lines.append(f'  v{i} [label="{_vertex_label(v)}"];')
    for i, letter, j in graph.edges:
        style = "solid" if letter == "L" else "dashed"
        lines.append(f'  v{i} -> v{j} [label="{letter}", style={style}];')
    if graph.truncated:
        lines.append('  trunc [label="(truncated)", shape=plaintext];')
    lines.append("}")
    return "\n".join(lines) + "\n"
