"""Independent oracles shared by the test modules.

These deliberately avoid the bitset machinery in ``tkings.tournament``: they
walk the definition of a king with plain ``beats`` lookups.
"""

from itertools import combinations

from tkings.tournament import Tournament

CRITERIA: list[tuple[str, bool, str]] = []


def record(criterion: str, ok: bool, detail: str = "") -> None:
    CRITERIA.append((criterion, ok, detail))


def brute_is_king(t: Tournament, v: int) -> bool:
    n = t.n
    for u in range(n):
        if u == v or t.beats(v, u):
            continue
        if not any(t.beats(v, w) and t.beats(w, u) for w in range(n) if w not in (u, v)):
            return False
    return True


def brute_kings(t: Tournament) -> set[int]:
    return {v for v in range(t.n) if brute_is_king(t, v)}


def tournament_from_mask(n: int, mask: int) -> Tournament:
    """Bit p of ``mask`` orients the p-th pair (i < j, lexicographic) as i -> j."""
    rows = [0] * n
    for p, (i, j) in enumerate(combinations(range(n), 2)):
        if mask >> p & 1:
            rows[i] |= 1 << j
        else:
            rows[j] |= 1 << i
    return Tournament(rows, validate=False)


def all_tournaments(n: int):
    pairs = n * (n - 1) // 2
    for mask in range(1 << pairs):
        yield tournament_from_mask(n, mask)
