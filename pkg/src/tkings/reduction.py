"""The exists-forall triangle problem and its reduction to counting kings.

Given a tripartite graph on parts A, B, C we build a tournament in which a
copy of ``a`` is a king exactly when every A-C edge at ``a`` closes a
triangle through B.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegreeConditionError, InvalidInstanceError, ParseError, UnsupportedSizeError
from .generators import all_kings_tournament, derive_seed
from .search import find_k_kings_matmul
from .tournament import Tournament, rows_from_matrix

HEADER = "tripartite v1"


@dataclass(frozen=True)
class TripartiteGraph:
    """Edges are 0-based index pairs within each part: ab=(a, b), bc=(b, c), ac=(a, c)."""

    size_a: int
    size_b: int
    size_c: int
    ab: frozenset[tuple[int, int]]
    bc: frozenset[tuple[int, int]]
    ac: frozenset[tuple[int, int]]

    @classmethod
    def build(cls, sizes, ab, bc, ac, *, validate=True) -> "TripartiteGraph":
        g = cls(*sizes, frozenset(map(tuple, ab)), frozenset(map(tuple, bc)), frozenset(map(tuple, ac)))
        if validate:
            g.validate()
        return g

    @property
    def sizes(self) -> tuple[int, int, int]:
        return self.size_a, self.size_b, self.size_c

    @property
    def n(self) -> int:
        return self.size_a + self.size_b + self.size_c

    def validate(self) -> None:
        na, nb, nc = self.sizes
        if min(self.sizes) < 1:
            raise InvalidInstanceError(f"every part needs at least one vertex, got sizes {self.sizes}")
        for name, edges, (lim1, lim2) in (
            ("ab", self.ab, (na, nb)),
            ("bc", self.bc, (nb, nc)),
            ("ac", self.ac, (na, nc)),
        ):
            for i, j in edges:
                if not (0 <= i < lim1 and 0 <= j < lim2):
                    raise InvalidInstanceError(f"{name} edge ({i}, {j}) out of range")
        _check_degrees(self)


def _check_degrees(g: TripartiteGraph) -> None:
    # every vertex needs a neighbour in each of the two other parts
    checks = (
        ("a", g.size_a, {i for i, _ in g.ab}, "B"),
        ("a", g.size_a, {i for i, _ in g.ac}, "C"),
        ("b", g.size_b, {j for _, j in g.ab}, "A"),
        ("b", g.size_b, {j for j, _ in g.bc}, "C"),
        ("c", g.size_c, {l for _, l in g.bc}, "B"),
        ("c", g.size_c, {l for _, l in g.ac}, "A"),
    )
    for prefix, size, covered, other in checks:
        for x in range(size):
            if x not in covered:
                name = f"{prefix}{x}"
                raise DegreeConditionError(f"vertex {name} has no neighbour in {other}", vertex=name)


@dataclass(frozen=True)
class EAFAnswer:
    verdict: bool
    witnesses: frozenset[int]


def brute_force_eaf(g: TripartiteGraph) -> EAFAnswer:
    """Witnesses are the a in A whose every A-C edge lies on a triangle."""
    g.validate()
    witnesses = set()
    for a in range(g.size_a):
        ok = True
        for c in range(g.size_c):
            if (a, c) not in g.ac:
                continue
            if not any((a, b) in g.ab and (b, c) in g.bc for b in range(g.size_b)):
                ok = False
                break
        if ok:
            witnesses.add(a)
    return EAFAnswer(bool(witnesses), frozenset(witnesses))


@dataclass(frozen=True)
class KingInstance:
    """Vertex layout: A_T, then A_T', B_T, C_T, then x1, x2."""

    t: Tournament
    graph: TripartiteGraph

    @property
    def A(self) -> range:
        return range(0, self.graph.size_a)

    @property
    def A_prime(self) -> range:
        na = self.graph.size_a
        return range(na, 2 * na)

    @property
    def B(self) -> range:
        start = 2 * self.graph.size_a
        return range(start, start + self.graph.size_b)

    @property
    def C(self) -> range:
        start = 2 * self.graph.size_a + self.graph.size_b
        return range(start, start + self.graph.size_c)

    @property
    def x1(self) -> int:
        return self.t.n - 2

    @property
    def x2(self) -> int:
        return self.t.n - 1

    @property
    def threshold(self) -> int:
        """Number of kings reached iff at least one A_T vertex is a king."""
        return self.graph.size_b + self.graph.size_c + 3


def _check_part_size(name: str, size: int) -> None:
    if size in (2, 4):
        raise UnsupportedSizeError(
            f"part {name} has {size} vertices; no all-kings tournament exists on {size} vertices"
        )


def build_king_instance(g: TripartiteGraph, seed: int = 0, literal: bool = False) -> KingInstance:
    """Tournament on 2|A| + |B| + |C| + 2 vertices whose A_T kings are the witnesses.

    By default the edge between x1 and x2 is oriented x1 -> x2.  With
    ``literal=True`` it is x2 -> x1; then a C vertex adjacent to all of B
    loses to every in-neighbour of x2 and is not a king (witnesses are
    unaffected, but the king count no longer equals |B| + |C| + 2 + |W|).
    """
    g.validate()
    na, nb, nc = g.sizes
    for name, size in zip("ABC", g.sizes):
        _check_part_size(name, size)
    n = 2 * na + nb + nc + 2
    A = slice(0, na)
    Ap = slice(na, 2 * na)
    B = slice(2 * na, 2 * na + nb)
    C = slice(2 * na + nb, 2 * na + nb + nc)
    x1, x2 = n - 2, n - 1
    m = np.zeros((n, n), dtype=bool)
    for idx, (part, size) in enumerate(((A, na), (Ap, na), (B, nb), (C, nc))):
        m[part, part] = all_kings_tournament(size, derive_seed(seed, idx)).matrix()

    ab = np.zeros((na, nb), dtype=bool)
    for i, j in g.ab:
        ab[i, j] = True
    bc = np.zeros((nb, nc), dtype=bool)
    for j, l in g.bc:
        bc[j, l] = True
    ca = np.zeros((nc, na), dtype=bool)
    for i, l in g.ac:
        ca[l, i] = True

    # edge-dependent orientations: present edge one way, absent edge the other
    m[A, B] = ab
    m[B, A] = ~ab.T
    m[B, C] = bc
    m[C, B] = ~bc.T
    m[C, Ap] = ca
    m[Ap, C] = ~ca.T
    eye = np.eye(na, dtype=bool)
    m[A, Ap] = eye
    m[Ap, A] = ~eye
    # fixed orientations
    m[C, A] = True
    m[B, Ap] = True
    m[x1, Ap] = True
    m[x1, B] = True
    m[x2, A] = True
    m[x2, C] = True
    m[x2, Ap] = True
    m[B, x2] = True
    if literal:
        m[x2, x1] = True
    else:
        m[x1, x2] = True
    m[A, x1] = True
    m[C, x1] = True
    return KingInstance(Tournament(rows_from_matrix(m)), g)


def solve_eaf_via_kings(g: TripartiteGraph, seed: int = 0, literal: bool = False) -> EAFAnswer:
    inst = build_king_instance(g, seed, literal)
    kings = find_k_kings_matmul(inst.t, inst.t.n).kings
    a_range = inst.A
    witnesses = frozenset(v - a_range.start for v in kings if v in a_range)
    return EAFAnswer(bool(witnesses), witnesses)


def random_tripartite(sizes: tuple[int, int, int], p, seed: int, max_tries: int = 1000) -> TripartiteGraph:
    """Random instance, resampled until the degree condition holds.

    ``p`` is one edge probability, or a triple ``(p_ab, p_bc, p_ac)``.
    """
    rng = np.random.default_rng(seed)
    na, nb, nc = sizes
    p_ab, p_bc, p_ac = (p, p, p) if np.isscalar(p) else p
    for _ in range(max_tries):
        ab = np.argwhere(rng.random((na, nb)) < p_ab)
        bc = np.argwhere(rng.random((nb, nc)) < p_bc)
        ac = np.argwhere(rng.random((na, nc)) < p_ac)
        g = TripartiteGraph.build(
            sizes,
            [tuple(map(int, e)) for e in ab],
            [tuple(map(int, e)) for e in bc],
            [tuple(map(int, e)) for e in ac],
            validate=False,
        )
        try:
            g.validate()
        except InvalidInstanceError:
            continue
        return g
    raise RuntimeError(f"no valid tripartite graph with sizes {sizes} and p={p} after {max_tries} tries")


def matched_graph(size: int, complete_ac: bool = False) -> TripartiteGraph:
    """a_i - b_i - c_i matchings; A-C either matched too or complete."""
    r = range(size)
    ac = [(i, l) for i in r for l in r] if complete_ac else [(i, i) for i in r]
    return TripartiteGraph.build((size, size, size), [(i, i) for i in r], [(i, i) for i in r], ac)


# -- text format ----------------------------------------------------------


def serialize_tripartite(g: TripartiteGraph) -> str:
    lines = [HEADER, "sizes={},{},{}".format(*g.sizes)]
    for tag, edges in (("ab", g.ab), ("bc", g.bc), ("ac", g.ac)):
        lines.extend(f"{tag} {i} {j}" for i, j in sorted(edges))
    return "\n".join(lines) + "\n"


def parse_tripartite(text: str) -> TripartiteGraph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != HEADER:
        raise ParseError(f"expected {HEADER!r}", line=1)
    if len(lines) < 2 or not lines[1].startswith("sizes="):
        raise ParseError("expected 'sizes=<a>,<b>,<c>'", line=2)
    try:
        sizes = tuple(int(x) for x in lines[1][len("sizes="):].split(","))
    except ValueError:
        raise ParseError("sizes must be three integers", line=2) from None
    if len(sizes) != 3 or min(sizes) < 1:
        raise ParseError("sizes must be three positive integers", line=2)
    na, nb, nc = sizes
    limits = {"ab": (na, nb), "bc": (nb, nc), "ac": (na, nc)}
    edges: dict[str, set] = {"ab": set(), "bc": set(), "ac": set()}
    for lineno, line in enumerate(lines[2:], start=3):
        parts = line.split(" ")
        if len(parts) != 3 or parts[0] not in edges:
            raise ParseError(f"expected '<ab|bc|ac> <i> <j>', got {line!r}", line=lineno)
        tag = parts[0]
        try:
            i, j = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"non-integer index in {line!r}", line=lineno) from None
        lim1, lim2 = limits[tag]
        if not (0 <= i < lim1 and 0 <= j < lim2):
            raise ParseError(f"{tag} edge ({i}, {j}) out of range for sizes {sizes}", line=lineno)
        if (i, j) in edges[tag]:
            raise ParseError(f"duplicate {tag} edge ({i}, {j})", line=lineno)
        edges[tag].add((i, j))
    g = TripartiteGraph.build(sizes, edges["ab"], edges["bc"], edges["ac"], validate=False)
    _check_degrees(g)
    return g
