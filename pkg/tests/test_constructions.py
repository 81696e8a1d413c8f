import random

import pytest

from discpf import constructions as C
from discpf.errors import NotAGroup, NotMonic
from discpf.exact_linalg import IntMatrix, det
from discpf.ring_core import FramedRing, change_basis, discriminant, gram_matrix, lambda_rep, make_unital
from discpf.stickelberger import discriminant_pfaffian


class TestQuadratic:
    def test_sqrt_values(self):
        assert discriminant(C.sqrt_ring(5)) == 20
        assert discriminant(C.sqrt_ring(0)) == 0
        assert discriminant(C.sqrt_ring(-1)) == -4

    @pytest.mark.parametrize("d", range(-10, 11))
    def test_sqrt_is_4d(self, d):
        assert discriminant(C.sqrt_ring(d)) == 4 * d

    def test_disc_b2_minus_4c(self):
        for b in range(-10, 11):
            for c in range(-10, 11):
                assert discriminant(C.quadratic_ring(b, c)) == b * b - 4 * c

    def test_eisenstein(self):
        assert discriminant(C.quadratic_ring(1, 1)) == -3

    def test_relation_convention(self):
        # e^2 = b e - c
        ring = C.quadratic_ring(3, 7)
        assert ring.mul((0, 1), (0, 1)) == (-7, 3)

    def test_sqrt_substitution(self):
        for d in (-3, 2, 11):
            assert C.quadratic_ring(0, -d) == C.sqrt_ring(d)

    def test_dpf_is_b(self):
        assert discriminant_pfaffian(gram_matrix(C.quadratic_ring(3, 1))) == 3
        for b in range(-10, 11):
            assert discriminant_pfaffian(gram_matrix(C.quadratic_ring(b, 4))) == b


class TestMonogenic:
    def test_matches_quadratic(self):
        assert C.monogenic_ring([5, -2, 1]) == C.quadratic_ring(2, 5)

    def test_cubic(self):
        assert discriminant(C.monogenic_ring([-1, -1, 0, 1])) == -23

    def test_cubic_formula(self):
        # x^3 + p x + q has discriminant -4p^3 - 27q^2
        for p in range(-4, 5):
            for q in range(-4, 5):
                assert discriminant(C.monogenic_ring([q, p, 0, 1])) == -4 * p**3 - 27 * q**2

    def test_linear(self):
        for a in (-3, 0, 4):
            ring = C.monogenic_ring([-a, 1])
            assert ring.rank == 1 and discriminant(ring) == 1

    def test_x_acts_as_companion(self):
        coeffs = [2, -3, 0, 5, 1]
        ring = C.monogenic_ring(coeffs)
        lam = lambda_rep(ring, (0, 1, 0, 0))
        n = 4
        companion = IntMatrix(
            [[int(i == j + 1) if j < n - 1 else -coeffs[i] for j in range(n)] for i in range(n)]
        )
        assert lam == companion

    @pytest.mark.parametrize("coeffs", [[1, 2], [1], [], [3, 0, 2]])
    def test_non_monic(self, coeffs):
        with pytest.raises(NotMonic):
            C.monogenic_ring(coeffs)


class TestMatrixRing:
    @pytest.mark.parametrize("m,expected", [(1, 1), (2, -16), (3, -19683)])
    def test_disc(self, m, expected):
        assert expected == (-1) ** (m * (m - 1) // 2) * m ** (m * m)
        assert discriminant(C.matrix_ring(m)) == expected

    def test_not_unital_framing(self):
        ring = C.matrix_ring(2)
        assert ring.one_coords == (1, 0, 0, 1)
        assert not ring.unital
        assert C.matrix_ring(1).unital

    def test_row_major_units(self):
        ring = C.matrix_ring(2)
        # E12 * E21 = E11, E21 * E12 = E22
        assert ring.mul((0, 1, 0, 0), (0, 0, 1, 0)) == (1, 0, 0, 0)
        assert ring.mul((0, 0, 1, 0), (0, 1, 0, 0)) == (0, 0, 0, 1)

    def test_bad_size(self):
        with pytest.raises(ValueError):
            C.matrix_ring(0)


class TestHurwitz:
    def test_relations(self):
        h = C.hurwitz_quaternions()
        one, i, j, w = (h.basis(k) for k in range(4))
        neg_one = (-1, 0, 0, 0)
        assert h.mul(i, i) == neg_one and h.mul(j, j) == neg_one
        assert h.mul(i, j) == (1, -1, -1, 2)
        assert h.mul(i, w) == (0, -1, -1, 1)
        # w^2 + w + 1 = 0
        assert h.add(h.add(h.mul(w, w), w), one) == (0, 0, 0, 0)

    def test_disc(self):
        assert discriminant(C.hurwitz_quaternions()) == -64


class TestDirectProduct:
    def test_z_times_z(self):
        z = C.group_ring(C.cyclic_cayley(1))
        zz = C.direct_product(z, z)
        assert discriminant(zz) == 1
        unital, _ = make_unital(zz)
        assert gram_matrix(unital)[0, 0] == 2 and discriminant(unital) == 1
        # basis (1, (0, 1)) spelled out
        explicit = change_basis(zz, IntMatrix([[1, 0], [1, 1]]))
        assert explicit.unital
        assert gram_matrix(explicit) == IntMatrix([[2, 1], [1, 1]])

    def test_hurwitz_times_sqrt5(self):
        ring = C.direct_product(C.hurwitz_quaternions(), C.sqrt_ring(5))
        assert ring.rank == 6
        assert discriminant(ring) == -1280

    def test_product_rule(self):
        rng = random.Random(2024)
        for _ in range(100):
            a = C.random_ring(rng.randrange(10**9), max_rank=6)
            b = C.random_ring(rng.randrange(10**9), max_rank=6)
            assert discriminant(C.direct_product(a, b)) == discriminant(a) * discriminant(b)


class TestGroups:
    def test_trivial(self):
        ring = C.group_ring(C.NAMED_GROUPS["trivial"]())
        assert ring.rank == 1 and discriminant(ring) == 1

    def test_c2(self):
        ring = C.group_ring(C.cyclic_cayley(2))
        assert gram_matrix(ring) == IntMatrix([[2, 0], [0, 2]])
        assert discriminant(ring) == 4

    def test_c3_congruence(self):
        assert discriminant(C.group_ring(C.cyclic_cayley(3))) % 4 in (0, 1)

    def test_group_ring_gram_is_order_times_inverse_pairing(self):
        # t(g, h) = |G| if gh = 1 else 0, so disc = +-|G|^|G|
        for name, make in C.NAMED_GROUPS.items():
            table = make()
            m = len(table)
            d = discriminant(C.group_ring(table))
            assert abs(d) == m**m, name
            assert d % 4 in (0, 1), name

    @pytest.mark.parametrize(
        "table",
        [
            [],
            [[0, 1], [1]],
            [[0, 1], [0, 1]],
            # Latin square, no identity: x * y = -x - y mod 3
            [[0, 2, 1], [2, 1, 0], [1, 0, 2]],
            # Latin square with identity but not associative (order 5 loop)
            [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]],
        ],
    )
    def test_not_groups(self, table):
        with pytest.raises(NotAGroup):
            C.group_ring(table)

    def test_named_groups_are_groups(self):
        orders = {name: len(make()) for name, make in C.NAMED_GROUPS.items()}
        assert orders["S3"] == 6 and orders["D4"] == 8 and orders["Q8"] == 8
        for make in C.NAMED_GROUPS.values():
            C.check_group(make())

    def test_nonabelian(self):
        for name in ("S3", "D4", "Q8"):
            t = C.NAMED_GROUPS[name]()
            assert any(t[g][h] != t[h][g] for g in range(len(t)) for h in range(len(t)))


class TestRandom:
    def test_deterministic(self):
        assert C.random_ring(42) == C.random_ring(42)
        assert C.random_ring(42, rebase=False) == C.random_ring(42, rebase=False)

    def test_rebase_preserves_disc(self):
        for seed in range(200):
            raw = C.random_ring(seed, rebase=False)
            assert discriminant(C.random_ring(seed)) == discriminant(raw)

    def test_valid_and_congruent(self):
        ranks = set()
        for seed in range(300):
            ring = C.random_ring(seed)
            assert isinstance(ring, FramedRing)
            assert 1 <= ring.rank <= 12
            assert discriminant(ring) % 4 in (0, 1)
            ranks.add(ring.rank)
        assert len(ranks) >= 8

    def test_max_rank_respected(self):
        for seed in range(100):
            assert C.random_ring(seed, max_rank=3).rank <= 3
        with pytest.raises(ValueError):
            C.random_ring(1, max_rank=0)

    def test_random_unimodular(self):
        rng = random.Random(0)
        for n in range(1, 9):
            for _ in range(20):
                assert det(C.random_unimodular(rng, n)) in (1, -1)

    def test_random_unimodular_rebasing_is_a_ring_isomorphism(self):
        rng = random.Random(1)
        ring = C.hurwitz_quaternions()
        for _ in range(10):
            q = C.random_unimodular(rng, 4)
            assert discriminant(change_basis(ring, q)) == -64
