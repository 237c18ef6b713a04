import numpy as np
import pytest

from helpers import brute_kings
from tkings.errors import InvalidKError, InvalidSizeError, UnsupportedSizeError
from tkings.generators import (
    all_kings_tournament,
    cycle3,
    delta_sample,
    derive_seed,
    hard_instance,
    random_tournament,
    transitive_tournament,
)
from tkings.tournament import serialize


class TestRandom:
    def test_single_vertex(self):
        t = random_tournament(1, 123)
        assert t.n == 1 and t.all_kings() == (0,)

    def test_deterministic(self):
        assert serialize(random_tournament(8, 7)) == serialize(random_tournament(8, 7))
        assert random_tournament(8, 7) != random_tournament(8, 8)

    def test_zero(self):
        with pytest.raises(InvalidSizeError):
            random_tournament(0, 1)

    def test_mostly_kings_at_200(self):
        fractions = [len(random_tournament(200, s).all_kings()) / 200 for s in range(50)]
        assert np.mean(fractions) >= 0.99

    def test_fair_coins(self):
        t = random_tournament(300, 5)
        edges = sum(t.out_degrees())
        assert edges == 300 * 299 // 2
        upper = np.triu(t.matrix(), 1).sum()
        assert abs(upper / edges - 0.5) < 0.02


class TestTransitive:
    def test_rows(self):
        assert serialize(transitive_tournament(3)).split("\n")[2:5] == ["011", "001", "000"]

    @pytest.mark.parametrize("n", [1, 2, 5, 33, 70])
    def test_single_king_and_degrees(self, n):
        t = transitive_tournament(n)
        assert t.all_kings() == (0,)
        assert t.out_degrees() == [n - 1 - i for i in range(n)]

    def test_zero(self):
        with pytest.raises(InvalidSizeError):
            transitive_tournament(0)


class TestAllKings:
    def test_three_is_cycle(self):
        assert all_kings_tournament(3, 99) == cycle3()

    @pytest.mark.parametrize("m", [0, 2, 4])
    def test_unsupported(self, m):
        with pytest.raises(UnsupportedSizeError, match=str(m)):
            all_kings_tournament(m, 0)

    @pytest.mark.parametrize("m", [1, 5, 6, 7, 9, 13])
    def test_all_are_kings(self, m):
        t = all_kings_tournament(m, 1)
        assert len(t.all_kings()) == m
        assert brute_kings(t) == set(range(m))

    def test_deterministic(self):
        assert all_kings_tournament(9, 4) == all_kings_tournament(9, 4)


class TestHardInstance:
    @pytest.mark.parametrize("m", [1, 3, 5, 6])
    def test_structure(self, m):
        h = hard_instance(m, 2)
        t = h.t
        assert t.n == 3 * m + 3
        k1, k2, k3 = h.kings
        assert t.beats(k1, k2) and t.beats(k2, k3) and t.beats(k3, k1)
        for a in h.A:
            assert t.beats(a, k1) and t.beats(k2, a) and t.beats(k3, a)
            assert all(t.beats(a, b) for b in h.B)
            assert all(t.beats(c, a) for c in h.C)
        for b in h.B:
            assert t.beats(b, k2) and t.beats(k1, b) and t.beats(k3, b)
            assert all(t.beats(b, c) for c in h.C)
        for c in h.C:
            assert t.beats(c, k3) and t.beats(k1, c) and t.beats(k2, c)
        for part in (h.A, h.B, h.C):
            assert len(t.induced(list(part)).all_kings()) == m
        assert brute_kings(t) == {k1, k2, k3}

    def test_m1(self):
        h = hard_instance(1, 0)
        assert h.t.n == 6
        assert brute_kings(h.t) == {0, 1, 2}

    def test_m5_a_cannot_reach_k3(self):
        h = hard_instance(5, 0)
        assert set(h.t.all_kings()) == set(h.kings)
        for a in h.A:
            assert not h.t.reaches_within_two(a, h.kings[2])
        for b in h.B:
            assert not h.t.reaches_within_two(b, h.kings[0])
        for c in h.C:
            assert not h.t.reaches_within_two(c, h.kings[1])

    def test_m5_every_ac_flip_promotes(self):
        h = hard_instance(5, 0)
        for a in h.A:
            for c in h.C:
                assert brute_kings(h.t.flip_edge(a, c)) == {0, 1, 2, a}

    @pytest.mark.parametrize("m", [1, 5, 7])
    def test_every_donkey_has_promoting_flip(self, m):
        h = hard_instance(m, 3)
        rng = np.random.default_rng(m)
        for v in range(3, h.t.n):
            partners = list(h.partners(v))
            w = partners[int(rng.integers(len(partners)))] if m > 1 else partners[0]
            assert v in h.t.flip_edge(v, w).all_kings()

    def test_unsupported(self):
        with pytest.raises(UnsupportedSizeError):
            hard_instance(4, 0)

    def test_manifest(self):
        text = hard_instance(5, 0).manifest()
        assert text.splitlines() == [
            "part=k1:0..0",
            "part=k2:1..1",
            "part=k3:2..2",
            "part=A:3..7",
            "part=B:8..12",
            "part=C:13..17",
        ]

    def test_deterministic(self):
        assert hard_instance(6, 11).t == hard_instance(6, 11).t


class TestDelta:
    def test_k4_single_flip(self):
        for seed in range(10):
            d = delta_sample(5, 4, seed)
            assert len(d.chosen) == 1 and len(d.flipped) == 1
            assert brute_kings(d.t) == {0, 1, 2, d.chosen[0]}

    @pytest.mark.parametrize("k", [3, 2, 19])
    def test_bad_k(self, k):
        with pytest.raises(InvalidKError):
            delta_sample(5, k, 0)

    def test_max_k(self):
        d = delta_sample(1, 6, 0)
        assert sorted(d.chosen) == [3, 4, 5]
        assert brute_kings(d.t) == set(range(6))

    def test_flips_cross_right_parts(self):
        for seed in range(20):
            d = delta_sample(5, 10, seed)
            h = d.base
            assert len(set(d.chosen)) == 7
            assert all(3 <= v < h.t.n for v in d.chosen)
            for v, (x, y) in zip(d.chosen, d.flipped):
                w = y if x == v else x
                assert v in (x, y)
                assert w in h.partners(v)
                assert d.t.beats(v, w) and h.t.beats(w, v)

    def test_k7_hundred_seeds(self):
        for seed in range(100):
            d = delta_sample(5, 7, seed)
            assert set(d.t.all_kings()) == set(d.expected_kings)
        # non-interference spot check by brute force
        d = delta_sample(5, 7, 0)
        assert brute_kings(d.t) == set(d.expected_kings)

    def test_deterministic(self):
        a, b = delta_sample(7, 8, 42), delta_sample(7, 8, 42)
        assert a.t == b.t and a.chosen == b.chosen and a.flipped == b.flipped


def test_derive_seed_stable():
    assert derive_seed(1, 2, 3) == derive_seed(1, 2, 3)
    assert derive_seed(1, 2, 3) != derive_seed(1, 3, 2)
    assert 0 <= derive_seed(2**64 - 1, 0) < 2**64
