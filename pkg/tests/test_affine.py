import random
from itertools import combinations

import pytest

from affcells import affine
from affcells.affine import (
    AffinePermutation,
    Root,
    Side,
    act_on_root,
    bruhat_ball,
    bruhat_leq,
    identity,
    min_coset_rep,
    min_double_coset_rep,
    quad_minimum,
    reflection,
    simple_reflection,
    translation,
)
from affcells.errors import BadIndices, NotMonomialPermutation, PeriodMismatch
from affcells.laurent import LaurentMatrix, LaurentPoly
from affcells.sampling import random_window


def kappa_11():
    # diag(t, t^-1), window (-1, 4)
    return AffinePermutation((-1, 4))


class TestWindowMatrix:
    def test_identity_roundtrip(self):
        for n in (1, 2, 5):
            assert affine.from_matrix(LaurentMatrix.identity(n)) == identity(n)

    def test_s0_window(self):
        m = LaurentMatrix([[LaurentPoly.zero(), LaurentPoly.t(-1)],
                           [LaurentPoly.t(1), LaurentPoly.zero()]])
        assert affine.from_matrix(m) == AffinePermutation((0, 3))
        assert simple_reflection(2, 0).to_matrix() == m

    def test_diagonal_translation(self):
        m = LaurentMatrix.diagonal([LaurentPoly.t(1), LaurentPoly.t(-1)])
        assert affine.from_matrix(m) == kappa_11()

    def test_rejects_bad_shapes(self):
        with pytest.raises(NotMonomialPermutation):
            affine.from_matrix(LaurentMatrix([[LaurentPoly.one(), LaurentPoly.one()],
                                              [LaurentPoly.zero(), LaurentPoly.one()]]))
        with pytest.raises(NotMonomialPermutation):
            affine.from_matrix(LaurentMatrix.diagonal([LaurentPoly.t(1), LaurentPoly.one()]))

    def test_roundtrip_random(self):
        rng = random.Random(2)
        for _ in range(25):
            w = random_window(rng, rng.randint(2, 5))
            assert affine.from_matrix(w.to_matrix()) == w


class TestCompose:
    def test_identity_neutral(self):
        rng = random.Random(3)
        for _ in range(10):
            w = random_window(rng, 4)
            assert identity(4) * w == w
            assert w * identity(4) == w

    def test_simple_involution(self):
        for n in (2, 3, 4):
            for i in range(n):
                s = simple_reflection(n, i)
                assert s * s == identity(n)

    def test_factorization_instance(self):
        assert simple_reflection(2, 1) * kappa_11() == AffinePermutation((0, 3))

    def test_matches_matrix_product(self):
        rng = random.Random(4)
        for _ in range(10):
            u, v = random_window(rng, 3), random_window(rng, 3)
            assert (u * v).to_matrix() == u.to_matrix() * v.to_matrix()

    def test_period_mismatch(self):
        with pytest.raises(PeriodMismatch):
            identity(2) * identity(3)

    def test_inverse(self):
        rng = random.Random(5)
        for _ in range(20):
            w = random_window(rng, rng.randint(2, 6))
            assert w * w.inverse() == identity(w.n)
            assert w.inverse() * w == identity(w.n)


class TestLength:
    def test_identity(self):
        assert identity(3).length() == 0
        assert identity(3).length_oracle() == 0

    def test_kappa_11(self):
        assert kappa_11().length() == 2

    def test_simple(self):
        assert simple_reflection(2, 0).length_oracle() == 1

    def test_window_example(self):
        assert AffinePermutation((-2, 2, 6)).length_oracle() == 4
        assert AffinePermutation((-2, 2, 6)).length() == 4

    def test_formula_matches_oracle_random(self):
        rng = random.Random(6)
        for _ in range(60):
            w = random_window(rng, rng.randint(2, 6), spread=4)
            assert w.length() == w.length_oracle()

    def test_step_by_one(self):
        rng = random.Random(7)
        for _ in range(15):
            w = random_window(rng, 4)
            for i in range(4):
                assert abs((w * simple_reflection(4, i)).length() - w.length()) == 1


def _reduced_word(w):
    word = []
    cur = w
    while not cur.is_identity():
        i = next(i for i in range(cur.n) if cur.right_descent(i))
        word.append(i)
        cur = cur * simple_reflection(cur.n, i)
    word.reverse()
    return word


def _subword_oracle(v, w):
    word = _reduced_word(w)
    lv = v.length()
    if lv == 0:
        return True
    for subset in combinations(range(len(word)), lv):
        prod = identity(v.n)
        for idx in subset:
            prod = prod * simple_reflection(v.n, word[idx])
        if prod == v:
            return True
    return False


class TestBruhat:
    def test_identity_below_all(self):
        rng = random.Random(8)
        for _ in range(10):
            w = random_window(rng, 3)
            assert bruhat_leq(identity(3), w)

    def test_s0_below_kappa(self):
        assert bruhat_leq(simple_reflection(2, 0), kappa_11())

    def test_incomparable_length_two(self):
        s0, s1 = simple_reflection(2, 0), simple_reflection(2, 1)
        assert not bruhat_leq(s1 * s0, s0 * s1)
        assert not bruhat_leq(s0 * s1, s1 * s0)

    def test_against_subword_oracle(self):
        ball = bruhat_ball(3, 4)
        for v in ball:
            for w in ball:
                assert bruhat_leq(v, w) == _subword_oracle(v, w)


class TestCosets:
    def test_parabolic_elements_reduce_to_identity(self):
        # any product of generators from J reduces to e
        J = {1, 2}
        w = simple_reflection(4, 1) * simple_reflection(4, 2) * simple_reflection(4, 1)
        assert min_coset_rep(w, J, Side.RIGHT) == identity(4)
        assert min_coset_rep(w, J, Side.LEFT) == identity(4)

    def test_length_additivity(self):
        rng = random.Random(9)
        for _ in range(20):
            n = rng.randint(2, 5)
            w = random_window(rng, n)
            J = frozenset(rng.sample(range(n), rng.randint(1, n - 1)))
            rep = min_coset_rep(w, J, Side.RIGHT)
            tail = rep.inverse() * w
            assert w.length() == rep.length() + tail.length()
            # the discarded part lies in the parabolic
            assert min_coset_rep(tail, J, Side.RIGHT) == identity(n)

    def test_divisor_example(self):
        # min rep of the antidiagonal element for blocks (2,1): the matrix
        # t E_{2,1} + E_{3,2} + t^-1 E_{1,3}
        m = LaurentMatrix.from_entries(3, {
            (2, 1): LaurentPoly.t(1), (3, 2): LaurentPoly.one(), (1, 3): LaurentPoly.t(-1)})
        expected = affine.from_matrix(m)
        v = AffinePermutation((3, -1, 4))
        assert min_coset_rep(v, {1}, Side.RIGHT) == expected

    def test_double_coset_rep(self):
        tau = kappa_11()
        assert min_double_coset_rep(tau, {1}) == AffinePermutation((0, 3))


class TestTranslations:
    def test_finite_decomposition(self):
        s1 = simple_reflection(3, 1)
        sigma, q = affine.decompose_translation(s1)
        assert sigma == s1 and q == (0, 0, 0)

    def test_diagonal_orders(self):
        sigma, q = affine.decompose_translation(translation(2, (-1, 1)))
        assert sigma == identity(2) and q == (-1, 1)
        sigma, q = affine.decompose_translation(kappa_11())
        assert sigma == identity(2) and q == (1, -1)

    def test_recompose(self):
        rng = random.Random(10)
        for _ in range(20):
            w = random_window(rng, 4)
            sigma, q = affine.decompose_translation(w)
            assert sigma * translation(4, q) == w


class TestReflections:
    def test_adjacent(self):
        assert reflection(4, 1, 2).window == (2, 1, 3, 4)

    def test_s0(self):
        assert simple_reflection(2, 0).window == (0, 3)

    def test_long_transposition(self):
        assert reflection(3, 1, 3).window == (3, 2, 1)

    def test_bad_indices(self):
        with pytest.raises(BadIndices):
            reflection(3, 2, 2)
        with pytest.raises(BadIndices):
            simple_reflection(3, 3)


class TestRoots:
    def test_identity_action(self):
        alpha = Root(1, 3, 4)
        assert act_on_root(identity(4), alpha) == alpha

    def test_translation_action_shifts_by_delta(self):
        # diag(t^-1, t) sends (1,2) to (1,2) - 2 delta = (1, -2), a negative
        # root, matching the inversion count of the translation
        tau = translation(2, (-1, 1))
        assert act_on_root(tau, Root(1, 2, 2)) == Root(1, -2, 2)
        assert not act_on_root(tau, Root(1, 2, 2)).positive

    def test_s0_on_highest_root(self):
        got = act_on_root(simple_reflection(2, 0), Root(1, 2, 2))
        assert got == Root(2, 5, 2)

    def test_sign_matches_length_direction(self):
        rng = random.Random(11)
        for _ in range(30):
            n = rng.randint(2, 5)
            w = random_window(rng, n)
            a = rng.randint(1, n - 1)
            b = rng.randint(a + 1, n)
            pos = act_on_root(w, Root(a, b, n)).positive
            assert pos == ((w * reflection(n, a, b)).length() > w.length())


class TestQuadMinimum:
    def test_identity_case1(self):
        res = quad_minimum(identity(3), 1, 2)
        assert res.case == 1
        assert res.minimum == identity(3)

    def test_translation_case2(self):
        # diag(t, t^-1): orders differ, sigma is trivial, so the minimum is
        # the left-reduced element s_1 w = (0, 3)
        res = quad_minimum(kappa_11(), 1, 2)
        assert res.case == 2
        assert res.minimum == AffinePermutation((0, 3))

    def test_inverse_translation_case2(self):
        res = quad_minimum(kappa_11().inverse(), 1, 2)
        assert res.case == 2
        assert res.minimum == AffinePermutation((0, 3))

    def test_chains_certified_by_bruhat(self):
        for w in bruhat_ball(3, 4):
            for a, b in ((1, 2), (1, 3), (2, 3)):
                res = quad_minimum(w, a, b)
                for chain in res.chains:
                    assert chain[0] == res.minimum
                    for x, y in zip(chain, chain[1:]):
                        assert x.length() < y.length()
                        assert bruhat_leq(x, y)
                if res.case == 2:
                    assert len({x.window for c in res.chains for x in c}) == 4
