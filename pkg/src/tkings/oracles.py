"""Edge-query gateways for the query model.

Every finder talks to an object exposing ``n`` and ``query(u, v) -> bool``
(True iff ``u -> v``).  A bare :class:`~tkings.tournament.Tournament` works,
:class:`CountingOracle` adds query accounting, and :class:`AdversaryOracle`
answers adaptively without any tournament behind it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidQueryError
from .tournament import Tournament, rows_from_matrix


@dataclass(frozen=True)
class QueryStats:
    total: int = 0
    distinct: int = 0


class CountingOracle:
    """Wraps a tournament and tallies total and distinct queries.

    ``total`` counts every call; ``distinct`` counts unordered pairs seen for
    the first time, which is the decision-tree cost.
    """

    def __init__(self, source: Tournament):
        self.source = source
        self.n = source.n
        self.total_queries = 0
        self.seen: set[int] = set()

    @property
    def distinct_queries(self) -> int:
        return len(self.seen)

    @property
    def stats(self) -> QueryStats:
        return QueryStats(self.total_queries, len(self.seen))

    def query(self, u: int, v: int) -> bool:
        n = self.n
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise InvalidQueryError(f"invalid query ({u}, {v}) for n={n}")
        self.total_queries += 1
        self.seen.add(u * n + v if u < v else v * n + u)
        return bool(self.source.rows[u] >> v & 1)


def counting_query(oracle: CountingOracle, u: int, v: int) -> bool:
    return oracle.query(u, v)


class AdversaryOracle:
    """Adaptive adversary that commits answers on demand by out-degree.

    A fresh pair ``(u, v)`` is oriented ``v -> u`` when u currently has the
    larger committed out-degree, and ``u -> v`` otherwise (ties included).
    Answers are memoised, so a pair is never answered two ways.
    """

    def __init__(self, n: int):
        if n < 1:
            raise InvalidQueryError("adversary needs at least one vertex")
        self.n = n
        self.committed: dict[int, bool] = {}  # key lo*n+hi -> lo beats hi
        self.outdeg = [0] * n
        self.total_queries = 0

    @property
    def distinct_queries(self) -> int:
        return len(self.committed)

    @property
    def stats(self) -> QueryStats:
        return QueryStats(self.total_queries, len(self.committed))

    def query(self, u: int, v: int) -> bool:
        n = self.n
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise InvalidQueryError(f"invalid query ({u}, {v}) for n={n}")
        self.total_queries += 1
        lo, hi = (u, v) if u < v else (v, u)
        key = lo * n + hi
        lo_wins = self.committed.get(key)
        if lo_wins is None:
            outdeg = self.outdeg
            if outdeg[u] > outdeg[v]:
                winner = v
            else:
                winner = u
            outdeg[winner] += 1
            lo_wins = winner == lo
            self.committed[key] = lo_wins
        return lo_wins if u == lo else not lo_wins

    def complete(self) -> Tournament:
        """Fill every open pair, in lexicographic order, with the same rule.

        The adversary itself is left untouched, so query statistics still
        describe only what the algorithm asked.
        """
        n = self.n
        committed = self.committed
        outdeg = list(self.outdeg)
        m = [bytearray(n) for _ in range(n)]
        for i in range(n):
            row_i = m[i]
            base = i * n
            for j in range(i + 1, n):
                key = base + j
                i_wins = committed.get(key)
                if i_wins is None:
                    if outdeg[i] > outdeg[j]:
                        i_wins = False
                        outdeg[j] += 1
                    else:
                        i_wins = True
                        outdeg[i] += 1
                if i_wins:
                    row_i[j] = 1
                else:
                    m[j][i] = 1
        matrix = np.frombuffer(b"".join(m), dtype=np.uint8).reshape(n, n)
        return Tournament(rows_from_matrix(matrix), validate=False)


def adversary_query(adversary: AdversaryOracle, u: int, v: int) -> bool:
    return adversary.query(u, v)
