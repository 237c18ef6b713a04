"""Tournament representation, king predicates and the text file format.

A tournament on ``n`` vertices is stored as ``n`` Python integers used as
bitsets: bit ``j`` of ``rows[i]`` is set iff the edge is oriented ``i -> j``.
Row-wise AND/OR therefore run word-parallel, which is all the boolean matrix
square needs.
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DiagonalError,
    HeaderError,
    InvalidQueryError,
    InvalidSizeError,
    ParseError,
    RowLengthError,
    SymmetryError,
)

HEADER = "tournament v1"

# Re-validate tournaments produced by flip_edge/induced (tests switch this on).
CHECKED = os.environ.get("TKINGS_CHECKED", "") not in ("", "0")


def iter_bits(mask: int):
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def rows_from_matrix(matrix) -> tuple[int, ...]:
    """Pack a square 0/1 matrix into row bitsets (bit j of row i = matrix[i, j])."""
    m = np.asarray(matrix, dtype=bool)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidSizeError(f"expected a square matrix, got shape {m.shape}")
    packed = np.packbits(m, axis=1, bitorder="little")
    return tuple(int.from_bytes(r.tobytes(), "little") for r in packed)


def matrix_from_rows(rows: Sequence[int], n: int) -> np.ndarray:
    nbytes = (n + 7) // 8
    buf = b"".join(r.to_bytes(nbytes, "little") for r in rows)
    packed = np.frombuffer(buf, dtype=np.uint8).reshape(len(rows), nbytes)
    return np.unpackbits(packed, axis=1, count=n, bitorder="little").astype(bool)


def _first_violation(m: np.ndarray):
    """Return ("diagonal", i, i) / ("symmetry", i, j) for the first broken invariant."""
    n = m.shape[0]
    diag = np.flatnonzero(np.diagonal(m))
    if diag.size:
        i = int(diag[0])
        return "diagonal", i, i
    bad = (m == m.T) & ~np.eye(n, dtype=bool)
    if bad.any():
        i, j = (int(x) for x in np.argwhere(bad)[0])
        return "symmetry", i, j
    return None


class Tournament:
    """Immutable tournament on vertices ``0 .. n-1``."""

    __slots__ = ("n", "_rows", "_full")

    def __init__(self, rows: Sequence[int], *, validate: bool = True):
        rows = tuple(int(r) for r in rows)
        n = len(rows)
        if n < 1:
            raise InvalidSizeError("a tournament needs at least one vertex")
        self.n = n
        self._rows = rows
        self._full = (1 << n) - 1
        if validate:
            self.check()

    @classmethod
    def from_matrix(cls, matrix) -> "Tournament":
        return cls(rows_from_matrix(matrix))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Tournament":
        """Build from a list of directed edges ``(u, v)`` meaning ``u -> v``."""
        if n < 1:
            raise InvalidSizeError("a tournament needs at least one vertex")
        rows = [0] * n
        for u, v in edges:
            rows[u] |= 1 << v
        return cls(rows)

    def check(self) -> None:
        """Raise ValueError unless the diagonal is empty and every pair has one edge."""
        n = self.n
        for i, r in enumerate(self._rows):
            if r >> n:
                raise ValueError(f"row {i} has bits beyond vertex {n - 1}")
        found = _first_violation(self.matrix())
        if found is not None:
            kind, i, j = found
            if kind == "diagonal":
                raise ValueError(f"self-loop at vertex {i}")
            raise ValueError(f"pair ({i}, {j}) is not oriented exactly once")

    # -- basic access -----------------------------------------------------

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def matrix(self) -> np.ndarray:
        return matrix_from_rows(self._rows, self.n)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidQueryError(f"vertex {v} out of range for n={self.n}")

    def _check_pair(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise InvalidQueryError(f"query on identical vertices ({u}, {u})")

    def beats(self, u: int, v: int) -> bool:
        """True iff the edge between u and v is oriented u -> v."""
        self._check_pair(u, v)
        return bool(self._rows[u] >> v & 1)

    # Tournaments answer queries directly, so finders accept them as oracles.
    query = beats

    def orient(self, u: int, v: int) -> tuple[int, int]:
        """The edge between u and v as a ``(tail, head)`` pair."""
        return (u, v) if self.beats(u, v) else (v, u)

    def out_mask(self, v: int) -> int:
        return self._rows[v]

    def in_mask(self, v: int) -> int:
        return self._full ^ self._rows[v] ^ (1 << v)

    def out_neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(iter_bits(self._rows[v]))

    def in_neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(iter_bits(self.in_mask(v)))

    def out_degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def out_degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    # -- kings ------------------------------------------------------------

    def reaches_within_two(self, u: int, v: int) -> bool:
        """True iff u -> v, or u -> w -> v for some w."""
        self._check_pair(u, v)
        row = self._rows[u]
        return bool(row >> v & 1) or bool(row & self.in_mask(v))

    def is_king(self, v: int) -> bool:
        self._check_vertex(v)
        return all(self.reaches_within_two(v, u) for u in range(self.n) if u != v)

    def two_step_rows(self) -> list[int]:
        """Rows of the boolean matrix M OR M*M."""
        rows = self._rows
        out = []
        for r in rows:
            acc = r
            for j in iter_bits(r):
                acc |= rows[j]
            out.append(acc)
        return out

    def all_kings(self) -> tuple[int, ...]:
        full = self._full
        return tuple(
            i for i, r in enumerate(self.two_step_rows()) if r | (1 << i) == full
        )

    # -- derived tournaments ---------------------------------------------

    def flip_edge(self, u: int, v: int) -> "Tournament":
        self._check_pair(u, v)
        rows = list(self._rows)
        bu, bv = 1 << u, 1 << v
        rows[u] ^= bv
        rows[v] ^= bu
        return Tournament(rows, validate=CHECKED)

    def induced(self, vertices: Sequence[int]) -> "Tournament":
        """Copy of the sub-tournament on ``vertices``, relabelled 0..len-1 in order."""
        vs = list(vertices)
        rows = []
        for i, u in enumerate(vs):
            ru = self._rows[u]
            r = 0
            for j, w in enumerate(vs):
                if ru >> w & 1:
                    r |= 1 << j
            rows.append(r)
        return Tournament(rows, validate=CHECKED)

    # -- dunder -----------------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tournament):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Tournament(n={self.n})"


# -- module-level helpers mirroring the methods --------------------------


def is_king(t: Tournament, v: int) -> bool:
    return t.is_king(v)


def all_kings(t: Tournament) -> tuple[int, ...]:
    return t.all_kings()


def reaches_within_two(t: Tournament, u: int, v: int) -> bool:
    return t.reaches_within_two(u, v)


def flip_edge(t: Tournament, u: int, v: int) -> Tournament:
    return t.flip_edge(u, v)


# -- text format ----------------------------------------------------------


def serialize(t: Tournament) -> str:
    n = t.n
    lines = [HEADER, f"n={n}"]
    lines.extend(format(r, f"0{n}b")[::-1] for r in t.rows)
    return "\n".join(lines) + "\n"


def parse(text: str) -> Tournament:
    """Parse the ``tournament v1`` format, validating both tournament invariants."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != HEADER:
        raise HeaderError(f"expected {HEADER!r}", line=1)
    if len(lines) < 2 or not lines[1].startswith("n="):
        raise HeaderError("expected 'n=<decimal>'", line=2)
    digits = lines[1][2:]
    if not digits.isdigit() or not digits.isascii():
        raise HeaderError(f"bad vertex count {digits!r}", line=2)
    n = int(digits)
    if n < 1:
        raise HeaderError("vertex count must be at least 1", line=2)
    body = lines[2:]
    if len(body) != n:
        raise RowLengthError(f"expected {n} rows, found {len(body)}", line=min(len(lines), 2 + n) + 1)
    for i, row in enumerate(body):
        lineno = i + 3
        if len(row) != n:
            raise RowLengthError(f"expected {n} characters, found {len(row)}", line=lineno)
        bad = row.strip("01")
        if bad or not row.isascii():
            col = next(c for c, ch in enumerate(row) if ch not in "01") + 1
            raise ParseError(f"unexpected character {row[col - 1]!r}", line=lineno, column=col)
    m = np.frombuffer("".join(body).encode("ascii"), dtype=np.uint8).reshape(n, n) == ord("1")
    found = _first_violation(m)
    if found is not None:
        kind, i, j = found
        if kind == "diagonal":
            raise DiagonalError("diagonal entry must be 0", line=i + 3, column=i + 1)
        if m[i, j]:
            msg = f"edge ({i}, {j}) is claimed by both rows {i} and {j}"
        else:
            msg = f"pair ({i}, {j}) has no orientation"
        raise SymmetryError(msg, line=i + 3, column=j + 1)
    return Tournament(rows_from_matrix(m), validate=False)
