"""King-finding algorithms.

The query-model finders (``find_king_*`` and ``find_up_to_three_kings``) only
touch the input through ``oracle.query(u, v)``.  The k-kings algorithms work
in the RAM model on a full :class:`Tournament`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import ConfigError, InvalidKError
from .oracles import CountingOracle, QueryStats
from .tournament import Tournament

UNIQUE_KING = "unique-king"
FOUND_K = "found-k"
FEWER_THAN_K = "fewer-than-k"


@dataclass(frozen=True)
class SearchResult:
    algorithm: str
    kings: tuple[int, ...]
    stats: QueryStats
    certificate: str | None = None
    k: int = 1

    def record(self, n: int) -> dict:
        return {
            "algorithm": self.algorithm,
            "n": n,
            "k": self.k,
            "kings": sorted(self.kings),
            "certificate": self.certificate,
            "queries_total": self.stats.total,
            "queries_distinct": self.stats.distinct,
        }


@dataclass
class SubgraphView:
    """A tournament (or oracle) restricted to ``vertices``; never copies edges."""

    base: object
    vertices: list[int]

    def __len__(self) -> int:
        return len(self.vertices)


def _stats(oracle) -> QueryStats:
    stats = getattr(oracle, "stats", None)
    return stats if stats is not None else QueryStats()


def _live(oracle, vertices) -> list[int]:
    if isinstance(vertices, SubgraphView):
        return list(vertices.vertices)
    return list(range(oracle.n)) if vertices is None else list(vertices)


# -- single-king finders on a live vertex list -----------------------------


def randomized_king(oracle, live: list[int], rng: np.random.Generator, sizes: list[int] | None = None) -> int:
    """Random pivot, keep its in-neighbourhood, repeat. Partitions ``live`` in place."""
    size = len(live)
    query = oracle.query
    while True:
        if sizes is not None:
            sizes.append(size)
        v = live[int(rng.integers(size))]
        j = 0
        for idx in range(size):
            w = live[idx]
            if w != v and not query(v, w):
                live[idx], live[j] = live[j], w
                j += 1
        if j == 0:
            return v
        size = j


def max_outdegree_king(oracle, live: Sequence[int]) -> int:
    """Query every pair of ``live``; return the max out-degree vertex (lowest id on ties)."""
    query = oracle.query
    outdeg = dict.fromkeys(live, 0)
    for i, u in enumerate(live):
        for w in live[i + 1:]:
            if query(u, w):
                outdeg[u] += 1
            else:
                outdeg[w] += 1
    return min(live, key=lambda x: (-outdeg[x], x))


def sample_size(N: int) -> int:
    """ceil(2 * sqrt(N)), capped at N."""
    return min(N, math.isqrt(4 * N - 1) + 1)


def deterministic_king(oracle, live: Sequence[int], levels: list[tuple[int, int]] | None = None) -> int:
    """Pivot on a high out-degree vertex of a ~2*sqrt(N) sample, recurse on its in-neighbours.

    ``levels`` receives one ``(live size, pairs queried)`` entry per round.
    """
    query = oracle.query
    live = list(live)
    while True:
        N = len(live)
        if N <= 4:
            if levels is not None:
                levels.append((N, N * (N - 1) // 2))
            return max_outdegree_king(oracle, live)
        c = sample_size(N)
        sample = live[:c]
        outdeg = dict.fromkeys(sample, 0)
        won: dict[tuple[int, int], bool] = {}
        for i, u in enumerate(sample):
            for w in sample[i + 1:]:
                r = query(u, w)
                won[u, w] = r
                outdeg[u if r else w] += 1
        v = min(sample, key=lambda x: (-outdeg[x], x))
        nxt = []
        for w in live:
            if w == v:
                continue
            if (v, w) in won:
                v_wins = won[v, w]
            elif (w, v) in won:
                v_wins = not won[w, v]
            else:
                v_wins = query(v, w)
            if not v_wins:
                nxt.append(w)
        if levels is not None:
            levels.append((N, c * (c - 1) // 2 + N - c))
        if not nxt:
            return v
        live = nxt


# -- public finders ---------------------------------------------------------


def find_king_randomized(oracle, rng=None, vertices=None, sizes: list[int] | None = None) -> SearchResult:
    """Zero-error randomized finder; about 2n queries in expectation."""
    rng = np.random.default_rng(rng)
    v = randomized_king(oracle, _live(oracle, vertices), rng, sizes)
    return SearchResult("rand", (v,), _stats(oracle), FOUND_K)


def find_king_max_outdegree(oracle, vertices=None) -> SearchResult:
    v = max_outdegree_king(oracle, _live(oracle, vertices))
    return SearchResult("maxdeg", (v,), _stats(oracle), FOUND_K)


def find_king_deterministic(oracle, vertices=None, levels=None) -> SearchResult:
    v = deterministic_king(oracle, _live(oracle, vertices), levels)
    return SearchResult("det", (v,), _stats(oracle), FOUND_K)


def _single_finder(single_finder, rng) -> Callable[[object, list[int]], int]:
    if callable(single_finder):
        return single_finder
    if single_finder == "det":
        return deterministic_king
    if single_finder == "rand":
        gen = np.random.default_rng(rng)
        return lambda oracle, live: randomized_king(oracle, live, gen)
    raise ConfigError(f"unknown single-king finder {single_finder!r}")


def find_up_to_three_kings(oracle, single_finder="rand", rng=None) -> SearchResult:
    """One king, or three distinct kings found by chaining pivots.

    Returns a single king with certificate ``unique-king`` when the first
    king beats everybody (then no other king exists).
    """
    find = _single_finder(single_finder, rng)
    query = oracle.query
    n = oracle.n
    name = "three" if single_finder in ("rand", None) or callable(single_finder) else "three-" + single_finder

    def in_neighbors(v):
        return [w for w in range(n) if w != v and not query(v, w)]

    k1 = find(oracle, list(range(n)))
    losers_to_k1 = in_neighbors(k1)
    if not losers_to_k1:
        return SearchResult(name, (k1,), _stats(oracle), UNIQUE_KING, 3)
    k2 = find(oracle, losers_to_k1)
    k3 = find(oracle, in_neighbors(k2))
    return SearchResult(name, (k1, k2, k3), _stats(oracle), FOUND_K, 3)


def _check_k(t: Tournament, k: int) -> None:
    if not 1 <= k <= t.n:
        raise InvalidKError(f"k must lie in [1, {t.n}], got {k}")


def find_k_kings_quadratic(
    t: Tournament,
    k: int,
    single_finder="det",
    rng=None,
    on_round: Callable[[list[int], list[int]], None] | None = None,
) -> SearchResult:
    """Grow a king set K; kings of the candidates reaching all of K within two steps are kings.

    Query statistics cover the single-king searches; the candidate filter
    reads rows directly.  ``on_round(K, candidates)`` is called after every
    round.
    """
    _check_k(t, k)
    find = _single_finder(single_finder, rng)
    oracle = CountingOracle(t)
    rows = t.rows
    kings: list[int] = []
    cand = list(range(t.n))
    while len(kings) < k and cand:
        v = find(oracle, cand)
        kings.append(v)
        bit = 1 << v
        into_v = t.in_mask(v)
        cand = [u for u in cand if u != v and (rows[u] & bit or rows[u] & into_v)]
        if on_round is not None:
            on_round(list(kings), list(cand))
    cert = FOUND_K if len(kings) == k else FEWER_THAN_K
    return SearchResult("kn2", tuple(kings), oracle.stats, cert, k)


def find_k_kings_matmul(t: Tournament, k: int) -> SearchResult:
    """The k lowest-index rows of M OR M*M that cover every other vertex."""
    _check_k(t, k)
    full = (1 << t.n) - 1
    kings = []
    for i, r in enumerate(t.two_step_rows()):
        if r | (1 << i) == full:
            kings.append(i)
            if len(kings) == k:
                break
    pairs = t.n * (t.n - 1) // 2
    cert = FOUND_K if len(kings) == k else FEWER_THAN_K
    return SearchResult("matmul", tuple(kings), QueryStats(pairs, pairs), cert, k)


ALGORITHMS = ("rand", "maxdeg", "det", "three", "three-det", "kn2", "matmul")


def run_algorithm(name: str, source, k: int = 1, seed: int = 0) -> SearchResult:
    """Dispatch by algorithm id.

    ``source`` is a Tournament for every algorithm; query-model algorithms
    also accept any oracle (e.g. an AdversaryOracle), and wrap a bare
    Tournament in a CountingOracle so statistics are populated.
    """
    if name not in ALGORITHMS:
        raise ConfigError(f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHMS)}")
    if name in ("kn2", "matmul"):
        if not isinstance(source, Tournament):
            raise ConfigError(f"{name} needs the full tournament, not a query oracle")
        if name == "kn2":
            return find_k_kings_quadratic(source, k)
        return find_k_kings_matmul(source, k)
    oracle = CountingOracle(source) if isinstance(source, Tournament) else source
    if name == "rand":
        return find_king_randomized(oracle, seed)
    if name == "maxdeg":
        return find_king_max_outdegree(oracle)
    if name == "det":
        return find_king_deterministic(oracle)
    if name == "three":
        return find_up_to_three_kings(oracle, "rand", seed)
    return find_up_to_three_kings(oracle, "det")
