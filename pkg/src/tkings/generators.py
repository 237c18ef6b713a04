"""Seeded tournament constructions, including the sensitive three-king instance.

All generators are pure functions of their arguments: the same parameters and
seed always give the same tournament, bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidKError, InvalidSizeError, UnsupportedSizeError
from .tournament import Tournament, rows_from_matrix

MAX_REJECTION_ATTEMPTS = 1000


def derive_seed(seed: int, *keys: int) -> int:
    """Stable 64-bit child seed for ``(seed, *keys)``."""
    ss = np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, *map(int, keys)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def _check_all_kings_size(m: int) -> None:
    if m in (0, 2, 4) or m < 0:
        why = {
            0: "an empty vertex set has no tournament",
            2: "on 2 vertices the loser cannot reach the winner",
            4: "every 4-vertex tournament has at most three kings",
        }.get(m, "size must be positive")
        raise UnsupportedSizeError(f"no all-kings tournament on {m} vertices: {why}")


def random_tournament(n: int, seed: int) -> Tournament:
    """Orient every pair ``i < j`` by an independent fair coin."""
    if n < 1:
        raise InvalidSizeError(f"n must be at least 1, got {n}")
    rng = np.random.default_rng(seed)
    coins = rng.integers(0, 2, size=(n, n), dtype=np.uint8).astype(bool)
    upper = np.triu(coins, 1)
    m = upper | np.tril(~upper.T, -1)
    return Tournament(rows_from_matrix(m), validate=False)


def transitive_tournament(n: int) -> Tournament:
    """Vertex i beats j exactly when i < j."""
    if n < 1:
        raise InvalidSizeError(f"n must be at least 1, got {n}")
    full = (1 << n) - 1
    return Tournament([full ^ ((1 << (i + 1)) - 1) for i in range(n)], validate=False)


def cycle3() -> Tournament:
    return Tournament.from_edges(3, [(0, 1), (1, 2), (2, 0)])


def all_kings_tournament(m: int, seed: int) -> Tournament:
    """A tournament on ``m`` vertices in which every vertex is a king.

    Sizes 1 and 3 are fixed; larger sizes are found by rejection sampling
    random tournaments.
    """
    _check_all_kings_size(m)
    if m == 1:
        return Tournament([0])
    if m == 3:
        return cycle3()
    for attempt in range(MAX_REJECTION_ATTEMPTS):
        t = random_tournament(m, derive_seed(seed, attempt))
        if len(t.all_kings()) == m:
            return t
    raise RuntimeError(
        f"no all-kings tournament on {m} vertices after {MAX_REJECTION_ATTEMPTS} attempts"
    )


@dataclass(frozen=True)
class HardInstance:
    """Three cyclic kings plus parts A, B, C whose members are all donkeys.

    Vertex layout: kings 0, 1, 2, then A, B and C as consecutive blocks of
    ``m`` vertices.
    """

    t: Tournament
    m: int
    kings: tuple[int, int, int] = (0, 1, 2)

    @property
    def A(self) -> range:
        return range(3, 3 + self.m)

    @property
    def B(self) -> range:
        return range(3 + self.m, 3 + 2 * self.m)

    @property
    def C(self) -> range:
        return range(3 + 2 * self.m, 3 + 3 * self.m)

    @property
    def parts(self) -> dict[str, range]:
        return {"A": self.A, "B": self.B, "C": self.C}

    def part_of(self, v: int) -> str:
        for name, r in self.parts.items():
            if v in r:
                return name
        return f"k{self.kings.index(v) + 1}"

    def partners(self, v: int) -> range:
        """Vertices whose edge to donkey ``v`` promotes it when flipped."""
        return {"A": self.C, "B": self.A, "C": self.B}[self.part_of(v)]

    def manifest(self) -> str:
        lines = [f"part=k{i + 1}:{k}..{k}" for i, k in enumerate(self.kings)]
        lines += [f"part={name}:{r.start}..{r.stop - 1}" for name, r in self.parts.items()]
        return "\n".join(lines) + "\n"


def hard_instance(m: int, seed: int) -> HardInstance:
    """Build the 3m+3 vertex instance with exactly three kings."""
    _check_all_kings_size(m)
    n = 3 * m + 3
    mat = np.zeros((n, n), dtype=bool)
    k1, k2, k3 = 0, 1, 2
    mat[k1, k2] = mat[k2, k3] = mat[k3, k1] = True
    A = slice(3, 3 + m)
    B = slice(3 + m, 3 + 2 * m)
    C = slice(3 + 2 * m, n)
    for idx, part in enumerate((A, B, C)):
        sub = all_kings_tournament(m, derive_seed(seed, idx)).matrix()
        mat[part, part] = sub
    mat[A, B] = True
    mat[B, C] = True
    mat[C, A] = True
    # each part beats exactly one king and loses to the other two
    mat[A, k1] = True
    mat[k2, A] = mat[k3, A] = True
    mat[B, k2] = True
    mat[k1, B] = mat[k3, B] = True
    mat[C, k3] = True
    mat[k1, C] = mat[k2, C] = True
    return HardInstance(Tournament(rows_from_matrix(mat)), m)


@dataclass(frozen=True)
class DeltaSample:
    t: Tournament
    base: HardInstance
    chosen: tuple[int, ...]
    flipped: tuple[tuple[int, int], ...] = field(default=())

    @property
    def expected_kings(self) -> tuple[int, ...]:
        return tuple(sorted((*self.base.kings, *self.chosen)))

    def manifest(self) -> str:
        text = self.base.manifest()
        text += "chosen=" + ",".join(map(str, self.chosen)) + "\n"
        text += "".join(f"flip={u},{v}\n" for u, v in self.flipped)
        return text


def delta_sample(m: int, k: int, seed: int) -> DeltaSample:
    """Promote ``k - 3`` distinct random donkeys by one random cross-edge flip each."""
    _check_all_kings_size(m)
    if not 4 <= k <= 3 * m + 3:
        raise InvalidKError(f"k must lie in [4, {3 * m + 3}] for m={m}, got {k}")
    base = hard_instance(m, derive_seed(seed, 0))
    rng = np.random.default_rng(derive_seed(seed, 1))
    donkeys = np.arange(3, 3 * m + 3)
    chosen = tuple(int(v) for v in rng.choice(donkeys, size=k - 3, replace=False))
    t = base.t
    flipped = []
    for v in chosen:
        partners = base.partners(v)
        w = int(partners[int(rng.integers(len(partners)))])
        t = t.flip_edge(v, w)
        flipped.append((v, w) if v < w else (w, v))
    return DeltaSample(t, base, chosen, tuple(flipped))
