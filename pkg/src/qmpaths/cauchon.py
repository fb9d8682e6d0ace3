"""Cauchon diagrams and their directed path graphs.

A diagram is an m x n grid with each square black or white; it is a Cauchon
diagram when every black square has all squares to its left black or all
squares above it black.  The associated graph has a white vertex per white
square, a row vertex per row and a column vertex per column, with edges
running west between consecutive white squares of a row, south between
consecutive white squares of a column, from each row vertex to the
easternmost white square of its row, and from the southernmost white square
of each column to that column vertex.  All edges point west or south, so the
graph is a planar DAG in its grid embedding.

Paths from row vertices to column vertices carry quantum-torus weights read
off their turns: direction changes horizontal-to-vertical contribute t_{i,j},
vertical-to-horizontal contribute t_{i,j}^{-1}, taken in path order.  The
restricted family gamma(t; i, j) keeps the paths whose
vertical-to-horizontal turns all sit at coordinates <= the t-th smallest
coordinate (r, s).
"""

from __future__ import annotations

from dataclasses import dataclass

from .torus import (
    Coord,
    Shape,
    TorusElement,
    mono_key,
    t_gen,
    torus_product,
)

# vertices are tagged tuples; tags sort 'c' < 'r' < 'w' but ordering is only
# used to make enumeration orders canonical
Vertex = tuple


def white_vertex(i: int, j: int) -> Vertex:
    return ("w", i, j)


def row_vertex(i: int) -> Vertex:
    return ("r", i)


def col_vertex(j: int) -> Vertex:
    return ("c", j)


def is_white(v: Vertex) -> bool:
    return v[0] == "w"


def vertex_str(v: Vertex) -> str:
    if v[0] == "w":
        return f"({v[1]},{v[2]})"
    return f"{'row' if v[0] == 'r' else 'col'} {v[1]}"


# ---------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class Diagram:
    """A black/white coloring of the m x n grid."""

    shape: Shape
    black: frozenset

    def __post_init__(self):
        for coord in self.black:
            self.shape.check_coord(coord)

    @classmethod
    def of(cls, shape: Shape, black=()) -> "Diagram":
        return cls(shape, frozenset(black))

    @classmethod
    def all_white(cls, shape: Shape) -> "Diagram":
        return cls(shape, frozenset())

    @classmethod
    def all_black(cls, shape: Shape) -> "Diagram":
        return cls(shape, frozenset(shape.coords()))

    def is_black(self, coord: Coord) -> bool:
        return coord in self.black

    def is_white(self, coord: Coord) -> bool:
        return self.shape.contains(coord) and coord not in self.black

    # -- text / json form: '#' black, '.' white ------------------------------

    def to_text(self) -> str:
        return "\n".join(
            "".join(
                "#" if (i, j) in self.black else "."
                for j in range(1, self.shape.n + 1)
            )
            for i in range(1, self.shape.m + 1)
        )

    def to_inline(self) -> str:
        return self.to_text().replace("\n", "/")

    @classmethod
    def from_text(cls, text: str, relaxed: bool = False) -> "Diagram":
        rows = [r for r in text.replace("/", "\n").split() if r]
        if not rows:
            raise ValueError("empty diagram text")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("ragged diagram rows")
        bad = sorted(set("".join(rows)) - set("#."))
        if bad:
            raise ValueError(f"diagram characters must be '#' or '.', got {bad}")
        shape = Shape(len(rows), n, relaxed=relaxed)
        black = frozenset(
            (i + 1, j + 1)
            for i, row in enumerate(rows)
            for j, ch in enumerate(row)
            if ch == "#"
        )
        return cls(shape, black)

    def to_json(self) -> dict:
        return {
            "m": self.shape.m,
            "n": self.shape.n,
            "black": sorted([i, j] for i, j in self.black),
        }

    @classmethod
    def from_json(cls, data, relaxed: bool = False) -> "Diagram":
        shape = Shape(data["m"], data["n"], relaxed=relaxed)
        return cls(shape, frozenset((i, j) for i, j in data["black"]))


def cauchon_violations(d: Diagram) -> list:
    """Black squares with a white square above and a white square to the left."""
    out = []
    for (i, j) in sorted(d.black):
        left_ok = all((i, jj) in d.black for jj in range(1, j))
        above_ok = all((ii, j) in d.black for ii in range(1, i))
        if not (left_ok or above_ok):
            out.append((i, j))
    return out


def is_cauchon(d: Diagram) -> bool:
    return not cauchon_violations(d)


def enumerate_cauchon_diagrams(shape: Shape):
    """All Cauchon diagrams on the shape, each once.

    Backtracks row by row; a candidate row is valid when each of its black
    squares either extends a black prefix of the row or sits under an
    all-black column so far.  Diagrams are emitted in increasing order of
    their row-major 0/1 pattern (white = 0).
    """
    m, n = shape.m, shape.n
    row_patterns = []
    for bits in range(1 << n):
        row = tuple((bits >> (n - 1 - j)) & 1 for j in range(n))
        row_patterns.append(row)
    row_patterns.sort()

    def valid(row, col_allblack):
        for j, b in enumerate(row):
            if b and not col_allblack[j]:
                if not all(row[jj] for jj in range(j)):
                    return False
        return True

    def rec(i, rows, col_allblack):
        if i == m:
            black = frozenset(
                (ri + 1, j + 1)
                for ri, row in enumerate(rows)
                for j, b in enumerate(row)
                if b
            )
            yield Diagram(shape, black)
            return
        for row in row_patterns:
            if valid(row, col_allblack):
                nxt = tuple(a and bool(b) for a, b in zip(col_allblack, row))
                yield from rec(i + 1, rows + [row], nxt)

    yield from rec(0, [], tuple([True] * n))


# ---------------------------------------------------------------------------
# graphs


class CauchonGraph:
    """The directed grid graph of a Cauchon diagram, with its grid embedding."""

    def __init__(self, diagram: Diagram):
        bad = cauchon_violations(diagram)
        if bad:
            raise ValueError(
                f"not a Cauchon diagram: violating black square at {bad[0]}"
            )
        self.diagram = diagram
        self.shape = diagram.shape
        m, n = self.shape.m, self.shape.n
        whites = [c for c in self.shape.coords() if c not in diagram.black]
        self.whites = frozenset(whites)
        out: dict[Vertex, list] = {}

        def add(u, v):
            out.setdefault(u, []).append(v)

        # west and south edges between nearest white squares
        for (i, j) in whites:
            for jj in range(j - 1, 0, -1):
                if (i, jj) in self.whites:
                    add(white_vertex(i, j), white_vertex(i, jj))
                    break
            for ii in range(i + 1, m + 1):
                if (ii, j) in self.whites:
                    add(white_vertex(i, j), white_vertex(ii, j))
                    break
        # row terminals: row vertex -> easternmost white square of the row
        for i in range(1, m + 1):
            for j in range(n, 0, -1):
                if (i, j) in self.whites:
                    add(row_vertex(i), white_vertex(i, j))
                    break
        # column terminals: southernmost white square of the column -> col vertex
        for j in range(1, n + 1):
            for i in range(m, 0, -1):
                if (i, j) in self.whites:
                    add(white_vertex(i, j), col_vertex(j))
                    break
        self.out = {u: tuple(sorted(vs)) for u, vs in out.items()}
        self._gamma_cache: dict = {}
        self._vdps_cache: dict = {}

    def out_edges(self, v: Vertex) -> tuple:
        return self.out.get(v, ())

    def edges(self):
        return sorted((u, v) for u, vs in self.out.items() for v in vs)

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return v in self.out.get(u, ())

    def edge_dir(self, u: Vertex, v: Vertex) -> str:
        """'h' for westward edges, 'v' for southward ones."""
        if not self.has_edge(u, v):
            raise ValueError(f"no edge {vertex_str(u)} -> {vertex_str(v)}")
        if u[0] == "r" or (u[0] == "w" and v[0] == "w" and u[1] == v[1]):
            return "h"
        return "v"

    def is_path(self, path) -> bool:
        if len(path) < 2 or len(set(path)) != len(path):
            return False
        return all(self.has_edge(u, v) for u, v in zip(path, path[1:]))


def build_graph(d: Diagram) -> CauchonGraph:
    return CauchonGraph(d)


# ---------------------------------------------------------------------------
# paths, turns, weights


def path_turns(g: CauchonGraph, path) -> list:
    """Turns along a path: (coord, 'gamma'|'mirror') per direction change.

    'gamma' is horizontal-in/vertical-out, 'mirror' the reflected L
    (vertical-in/horizontal-out).
    """
    turns = []
    for prev, v, nxt in zip(path, path[1:], path[2:]):
        if not is_white(v):
            continue
        din = g.edge_dir(prev, v)
        dout = g.edge_dir(v, nxt)
        if din == "h" and dout == "v":
            turns.append(((v[1], v[2]), "gamma"))
        elif din == "v" and dout == "h":
            turns.append(((v[1], v[2]), "mirror"))
    return turns


def path_in_gamma(g: CauchonGraph, path, rs: Coord) -> bool:
    """No reflected-L turn at a coordinate strictly greater than rs."""
    return all(
        kind != "mirror" or coord <= rs for coord, kind in path_turns(g, path)
    )


def enumerate_gamma(g: CauchonGraph, t: int, i: int, j: int):
    """All paths from row vertex i to column vertex j whose reflected-L turns
    sit at coordinates <= the t-th smallest coordinate.

    Emitted in lexicographic order of their vertex sequences; cached per
    (threshold coordinate, i, j).
    """
    rs = g.shape.threshold_coord(t)
    key = (rs, i, j)
    hit = g._gamma_cache.get(key)
    if hit is not None:
        return hit
    if not 1 <= i <= g.shape.m or not 1 <= j <= g.shape.n:
        raise ValueError("row or column index out of range")
    target = col_vertex(j)
    start = row_vertex(i)
    paths = []
    stack = [(start,)]
    # DFS over the DAG; out-neighbor lists are sorted, and a stack that pushes
    # in reverse-sorted order pops candidates in lexicographic order
    while stack:
        path = stack.pop()
        v = path[-1]
        if v == target:
            paths.append(path)
            continue
        for w in reversed(g.out_edges(v)):
            if w[0] == "c" and w != target:
                continue
            if len(path) >= 2 and is_white(v):
                din = g.edge_dir(path[-2], v)
                dout = g.edge_dir(v, w)
                if din == "v" and dout == "h" and (v[1], v[2]) > rs:
                    continue
            stack.append(path + (w,))
    paths = tuple(paths)
    g._gamma_cache[key] = paths
    return paths


def enumerate_paths_between(g: CauchonGraph, src: Vertex, dst: Vertex):
    """All directed paths src -> dst, unrestricted (used by the test suite)."""
    paths = []
    stack = [(src,)]
    while stack:
        path = stack.pop()
        v = path[-1]
        if v == dst:
            paths.append(path)
            continue
        for w in reversed(g.out_edges(v)):
            stack.append(path + (w,))
    return tuple(paths)


def path_weight(g: CauchonGraph, path) -> TorusElement:
    """Weight of a row-to-column path: the alternating turn product."""
    if not g.is_path(path):
        raise ValueError("not a path in this graph")
    if path[0][0] != "r" or path[-1][0] != "c":
        raise ValueError("weights are defined for row-to-column paths")
    factors = []
    sign = 1
    for coord, kind in path_turns(g, path):
        factors.append(t_gen(g.shape, *coord, e=sign))
        sign = -sign
    return torus_product(g.shape, factors)


def path_weight_by_edges(g: CauchonGraph, path) -> TorusElement:
    """Weight as the product of edge weights.

    Horizontal white-to-white edges (i,j)->(i,j') weigh t_{i,j}^{-1} t_{i,j'},
    row-terminal edges weigh t_{i,j}, vertical and column-terminal edges weigh
    1.  Defined for any path; agrees with the turn product on row-to-column
    paths.
    """
    if not g.is_path(path):
        raise ValueError("not a path in this graph")
    factors = []
    for u, v in zip(path, path[1:]):
        if u[0] == "r":
            factors.append(t_gen(g.shape, v[1], v[2]))
        elif v[0] == "w" and g.edge_dir(u, v) == "h":
            factors.append(
                t_gen(g.shape, u[1], u[2], e=-1) * t_gen(g.shape, v[1], v[2])
            )
    return torus_product(g.shape, factors)


def generator(g: CauchonGraph, t: int, i: int, j: int) -> TorusElement:
    """Path-sum image of the (i, j) generator: sum of weights over gamma."""
    total = TorusElement.zero(g.shape)
    for path in enumerate_gamma(g, t, i, j):
        total = total + path_weight(g, path)
    return total


def generator_matrix(g: CauchonGraph, t: int) -> tuple:
    return tuple(
        tuple(generator(g, t, i, j) for j in range(1, g.shape.n + 1))
        for i in range(1, g.shape.m + 1)
    )


# ---------------------------------------------------------------------------
# vertex-disjoint path systems


def enumerate_vdps(g: CauchonGraph, t: int, I, J):
    """All vertex-disjoint systems (P_1, ..., P_k), P_r from row I[r] to
    column J[r], each path in the t-restricted family.

    Deterministic order: lexicographic in the per-index path enumeration
    order.  Requires |I| == |J| >= 1.
    """
    I = tuple(I)
    J = tuple(J)
    if len(I) != len(J):
        raise ValueError("row and column index sets must have equal size")
    if not I:
        raise ValueError("index sets must be nonempty")
    rs = g.shape.threshold_coord(t)
    key = (rs, I, J)
    hit = g._vdps_cache.get(key)
    if hit is not None:
        return hit
    choices = [enumerate_gamma(g, t, i, j) for i, j in zip(I, J)]
    systems = []

    def rec(idx, used, acc):
        if idx == len(choices):
            systems.append(tuple(acc))
            return
        for path in choices[idx]:
            pset = set(path)
            if used & pset:
                continue
            acc.append(path)
            rec(idx + 1, used | pset, acc)
            acc.pop()

    rec(0, frozenset(), [])
    systems = tuple(systems)
    g._vdps_cache[key] = systems
    return systems


def vdps_exists(g: CauchonGraph, t: int, I, J) -> bool:
    """Early-exit variant of enumerate_vdps."""
    I = tuple(I)
    J = tuple(J)
    if len(I) != len(J) or not I:
        raise ValueError("row and column index sets must match and be nonempty")
    rs = g.shape.threshold_coord(t)
    if (rs, I, J) in g._vdps_cache:
        return bool(g._vdps_cache[(rs, I, J)])
    choices = [enumerate_gamma(g, t, i, j) for i, j in zip(I, J)]

    def rec(idx, used):
        if idx == len(choices):
            return True
        for path in choices[idx]:
            pset = set(path)
            if used & pset:
                continue
            if rec(idx + 1, used | pset):
                return True
        return False

    return rec(0, frozenset())


def system_weight(g: CauchonGraph, system) -> TorusElement:
    """Product of the member path weights, in system order."""
    return torus_product(g.shape, (path_weight(g, p) for p in system))


def system_turn_key(g: CauchonGraph, system):
    """Exponent matrix of the system weight: +1 per gamma turn, -1 per
    reflected-L turn, over all member paths."""
    items = []
    for p in system:
        for coord, kind in path_turns(g, p):
            items.append((*coord, 1 if kind == "gamma" else -1))
    return mono_key(items)


# ---------------------------------------------------------------------------
# upper / lower path combinations


def _split_segments(p, q):
    """Common vertices of p and q (in order) and the segments between them."""
    qset = set(q)
    common = [v for v in p if v in qset]
    qcommon = [v for v in q if v in set(p)]
    if common != qcommon:
        raise ValueError("paths traverse their common vertices in different orders")
    pi = {v: k for k, v in enumerate(p)}
    qi = {v: k for k, v in enumerate(q)}
    segs = []
    for a, b in zip(common, common[1:]):
        segs.append((p[pi[a] : pi[b] + 1], q[qi[a] : qi[b] + 1]))
    return common, segs


def _combine(g: CauchonGraph, p, q, upper: bool):
    if p[0] != q[0] or p[-1] != q[-1]:
        raise ValueError("paths must share their start and end vertices")
    if p == q:
        return p
    out = [p[0]]
    for pseg, qseg in _split_segments(p, q)[1]:
        if pseg == qseg:
            out.extend(pseg[1:])
            continue
        # distinct segments leave their start by perpendicular edges; the one
        # leaving horizontally stays above the other
        p_above = g.edge_dir(pseg[0], pseg[1]) == "h"
        take = pseg if (p_above == upper) else qseg
        out.extend(take[1:])
    out = tuple(out)
    if not g.is_path(out):
        raise AssertionError("combined walk is not a path (bug)")
    return out


def path_u(g: CauchonGraph, p, q):
    """Upper combination: between consecutive common vertices, follow
    whichever path leaves by the horizontal edge."""
    return _combine(g, p, q, upper=True)


def path_l(g: CauchonGraph, p, q):
    """Lower combination (vertical-first segments win)."""
    return _combine(g, p, q, upper=False)


def _vdps_envelope(g: CauchonGraph, t: int, I, J, upper: bool):
    systems = enumerate_vdps(g, t, I, J)
    if not systems:
        raise ValueError("empty path family has no supremum or infimum")
    combine = path_u if upper else path_l
    best = systems[0]
    for sys_ in systems[1:]:
        best = tuple(combine(g, b, p) for b, p in zip(best, sys_))
    # the envelope must be a member fixed point and vertex-disjoint
    used = set()
    for p in best:
        pset = set(p)
        if used & pset:
            raise AssertionError("envelope system is not vertex-disjoint (bug)")
        used |= pset
    rs = g.shape.threshold_coord(t)
    for p in best:
        if not path_in_gamma(g, p, rs):
            raise AssertionError("envelope left the restricted family (bug)")
    for sys_ in systems:
        for b, p in zip(best, sys_):
            if combine(g, b, p) != b:
                raise AssertionError("envelope is not a fixed point (bug)")
    return best


def vdps_supremum(g: CauchonGraph, t: int, I, J):
    """The componentwise upper-envelope system of the family."""
    return _vdps_envelope(g, t, I, J, upper=True)


def vdps_infimum(g: CauchonGraph, t: int, I, J):
    return _vdps_envelope(g, t, I, J, upper=False)


# ---------------------------------------------------------------------------
# export


def export_dot(g: CauchonGraph) -> str:
    """Deterministic DOT text with grid positions from the embedding."""
    m, n = g.shape.m, g.shape.n
    lines = [
        "digraph cauchon {",
        '  graph [label="{}x{} diagram {}"];'.format(
            m, n, g.diagram.to_inline()
        ),
        "  node [shape=circle, width=0.25, fixedsize=true];",
    ]

    def node_id(v):
        return f"w_{v[1]}_{v[2]}" if v[0] == "w" else f"{v[0]}_{v[1]}"

    for (i, j) in sorted(g.whites):
        lines.append(
            f'  w_{i}_{j} [label="{i},{j}", pos="{j},{-i}!"];'
        )
    for i in range(1, m + 1):
        lines.append(f'  r_{i} [label="r{i}", pos="{n + 1},{-i}!"];')
    for j in range(1, n + 1):
        lines.append(f'  c_{j} [label="c{j}", pos="{j},{-(m + 1)}!"];')
    for u, v in g.edges():
        lines.append(f"  {node_id(u)} -> {node_id(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
