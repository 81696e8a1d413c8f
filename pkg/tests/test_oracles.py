import random

import pytest

from discpf import oracles
from discpf.constructions import random_tracelike
from discpf.errors import DimensionMismatch, NotSkewSymmetric, NotSquare, TooLarge
from discpf.exact_linalg import IntMatrix, det, pfaffian
from discpf.selftest import random_matrix, random_skew
from discpf.stickelberger import is_tracelike, split_even_diagonal, symmetrize

HURWITZ_GRAM = IntMatrix([[4, 0, 0, -2], [0, -4, 0, -2], [0, 0, -4, -2], [-2, -2, -2, -2]])


class TestLeibniz:
    def test_values(self):
        assert oracles.det_by_permutations(IntMatrix.identity(5)) == 1
        assert oracles.det_by_permutations(HURWITZ_GRAM) == -64

    def test_random_6x6(self, rng):
        for _ in range(10):
            M = random_matrix(rng, 6)
            assert oracles.det_by_permutations(M) == det(M)

    def test_guards(self):
        with pytest.raises(TooLarge):
            oracles.det_by_permutations(IntMatrix.identity(oracles.MAX_LEIBNIZ + 1))
        with pytest.raises(NotSquare):
            oracles.det_by_permutations(IntMatrix([[1, 2]]))


class TestLaplace:
    def test_values(self):
        assert oracles.det_by_minors(IntMatrix([])) == 1
        assert oracles.det_by_minors(HURWITZ_GRAM) == -64
        assert oracles.det_by_minors(IntMatrix([[0, 1], [1, 0]])) == -1

    @pytest.mark.parametrize("n", range(1, 8))
    def test_matches_leibniz(self, rng, n):
        for _ in range(10):
            M = random_matrix(rng, n)
            assert oracles.det_by_minors(M) == oracles.det_by_permutations(M)

    def test_guard(self):
        with pytest.raises(TooLarge):
            oracles.det_by_minors(IntMatrix.identity(oracles.MAX_LAPLACE + 1))


class TestMatchings:
    def test_counts(self):
        # (n - 1)!! perfect matchings
        assert [len(list(oracles.perfect_matchings(range(n)))) for n in (0, 2, 4, 6, 8)] == [1, 1, 3, 15, 105]
        assert list(oracles.perfect_matchings(range(3))) == []

    def test_crossings(self):
        assert oracles.crossings([(0, 2), (1, 3)]) == 1
        assert oracles.crossings([(0, 1), (2, 3)]) == 0
        assert oracles.crossings([(0, 3), (1, 2)]) == 0

    def test_anchor(self):
        assert oracles.pfaffian_by_matchings(IntMatrix([[0, 1], [-1, 0]])) == 1

    def test_square_is_det(self, rng):
        for _ in range(20):
            S = random_skew(rng, 6)
            assert oracles.pfaffian_by_matchings(S) ** 2 == oracles.det_by_permutations(S)

    def test_random_8x8(self, rng):
        for _ in range(20):
            S = random_skew(rng, 8)
            assert oracles.pfaffian_by_matchings(S) == pfaffian(S)

    def test_odd(self):
        assert oracles.pfaffian_by_matchings(random_skew(random.Random(1), 5)) == 0

    def test_guards(self):
        with pytest.raises(NotSkewSymmetric):
            oracles.pfaffian_by_matchings(IntMatrix([[0, 1], [1, 0]]))
        with pytest.raises(TooLarge):
            oracles.pfaffian_by_matchings(IntMatrix.zeros(oracles.MAX_MATCHING + 2))


class TestDpfEnumeration:
    def test_n3(self):
        B = IntMatrix([[0, 2, 3], [0, 0, 5], [0, 0, 0]])
        assert oracles.dpf_by_enumeration(B) == (11, 2)

    def test_n4_units(self):
        assert oracles.dpf_by_enumeration(IntMatrix([[1] * 4] * 4)) == (4, 4)

    def test_n1_empty_product(self):
        assert oracles.dpf_by_enumeration(IntMatrix([[9]])) == (1, 1)

    def test_guard(self):
        with pytest.raises(TooLarge):
            oracles.dpf_by_enumeration(IntMatrix.zeros(oracles.MAX_DPF_ENUM + 1))


class TestStembridge:
    def test_zero_second(self, rng):
        for n in (2, 4, 6):
            S = random_skew(rng, n)
            assert oracles.stembridge_split_check(S, IntMatrix.zeros(n))

    def test_random_pairs(self, rng):
        for n in (2, 4, 6):
            for _ in range(20):
                assert oracles.stembridge_split_check(random_skew(rng, n), random_skew(rng, n))

    def test_mod2_skew_inputs(self, rng):
        # symmetric matrices with even diagonal are skew mod 2
        for _ in range(20):
            a = random_matrix(rng, 4)
            b = random_matrix(rng, 4)
            assert oracles.stembridge_split_check(a + a.T, b + b.T)

    def test_pair_from_tracelike(self, rng):
        for n in (4, 8):
            for _ in range(10):
                B = random_tracelike(rng, n)
                Bp, Bpp = oracles.stembridge_pair(B)
                assert oracles.stembridge_split_check(Bp, Bpp)
                # B' + B'' agrees with U - U^T mod 2 off the diagonal
                U = split_even_diagonal(symmetrize(is_tracelike(B)))
                S = U - U.T
                total = Bp + Bpp
                assert all(
                    (total[i, j] - S[i, j]) % 2 == 0 for i in range(n) for j in range(n) if i != j
                )

    def test_guards(self):
        with pytest.raises(DimensionMismatch):
            oracles.stembridge_split_check(IntMatrix.zeros(3), IntMatrix.zeros(3))
        with pytest.raises(DimensionMismatch):
            oracles.stembridge_split_check(IntMatrix.zeros(2), IntMatrix.zeros(4))
        with pytest.raises(NotSkewSymmetric):
            oracles.stembridge_split_check(IntMatrix([[1, 0], [0, 0]]), IntMatrix.zeros(2))
        with pytest.raises(TooLarge):
            oracles.stembridge_split_check(IntMatrix.zeros(10), IntMatrix.zeros(10))


class TestUut:
    def test_zero(self):
        assert oracles.uut_identity_check(IntMatrix.zeros(4))

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_random(self, rng, n):
        for _ in range(30):
            assert oracles.uut_identity_check(random_matrix(rng, n))

    def test_odd_rejected(self):
        with pytest.raises(DimensionMismatch):
            oracles.uut_identity_check(IntMatrix.zeros(3))


def test_remark_counterexamples():
    cases = oracles.remark_counterexamples()
    assert [(m.n_rows, d, r) for m, d, r in cases] == [(1, 2, 2), (2, -1, 3), (3, -2, 2)]
    for m, d, r in cases:
        assert m.is_symmetric()
        assert all(m[i, i] % 2 == 0 for i in range(m.n_rows))
        assert m.n_rows % 4
        assert oracles.det_by_permutations(m) == d and d % 4 == r
        assert r not in (0, 1)
