import random

import pytest

from affcells import affine
from affcells.affine import AffinePermutation
from affcells.cells import (
    beta,
    iwahori_cell,
    mv_flag,
    parabolic_cell,
    phi_map,
    phi_point,
    psi_map,
)
from affcells.constructions import (
    finite_subset,
    kappa_bundle,
    parabolic_subset,
    richardson_element,
)
from affcells.errors import (
    NotInNilradical,
    NotMaximalParabolic,
    NotNilpotent,
    NotUnimodular,
)
from affcells.lattices import Lattice, quotient_dim
from affcells.laurent import LaurentMatrix, LaurentPoly
from affcells.partitions import Composition
from affcells.sampling import (
    random_iwahori,
    random_nilradical,
    random_sl,
    random_window,
)

t = LaurentPoly.t


def deformation(lam):
    z = richardson_element(lam)
    return LaurentMatrix.identity(lam.n) - z.scale_t(-1)


class TestIwahoriCell:
    def test_monomial_matrices_locate_themselves(self):
        rng = random.Random(23)
        for _ in range(30):
            w = random_window(rng, rng.randint(1, 5))
            assert iwahori_cell(w.to_matrix()) == w

    def test_dense_nilpotent_small(self):
        assert iwahori_cell(deformation(Composition((1, 1)))) == AffinePermutation((0, 3))

    def test_invariance_under_iwahori_factors(self):
        rng = random.Random(29)
        for n in (2, 3, 4, 5):
            w = random_window(rng, n, spread=2)
            m = w.to_matrix()
            base = iwahori_cell(m)
            for _ in range(20):
                b1 = random_iwahori(rng, n)
                b2 = random_iwahori(rng, n)
                assert iwahori_cell(b1 * m * b2) == base

    def test_rejects_nonunit(self):
        with pytest.raises(NotUnimodular):
            iwahori_cell(LaurentMatrix.diagonal([t(1), LaurentPoly.one()]))
        with pytest.raises(NotUnimodular):
            iwahori_cell(LaurentMatrix.diagonal([t(1) + 1, LaurentPoly.one()]))


class TestParabolicCell:
    def test_identity(self):
        assert parabolic_cell(LaurentMatrix.identity(3), {1, 2}) == affine.identity(3)

    def test_dense_point_hits_kappa(self):
        from affcells.constructions import decompose_varpi, lift_finite

        for lam in (Composition((1, 1)), Composition((2, 1)), Composition((1, 2))):
            bundle = kappa_bundle(lam)
            w_g, _ = decompose_varpi(lam)
            a = lift_finite(w_g.inverse())
            point = phi_point(a, richardson_element(lam))
            assert parabolic_cell(point, parabolic_subset(lam)) == bundle.kappa

    def test_grassmannian_cell_of_dense_nilpotent(self):
        # the cell of 1 - t^-1 Z is bounded by the translation attached to
        # the Jordan type, with equality of spherical double cosets
        for lam in (Composition((1, 1)), Composition((2, 1)), Composition((2, 2))):
            bundle = kappa_bundle(lam)
            cell = parabolic_cell(deformation(lam), finite_subset(lam.n))
            assert affine.bruhat_leq(cell, bundle.tau_q)
            assert affine.min_double_coset_rep(cell, finite_subset(lam.n)) == \
                affine.min_double_coset_rep(bundle.tau_q, finite_subset(lam.n))


class TestPhi:
    def test_base_point(self):
        lam = Composition((2, 1))
        point, flag = phi_map(LaurentMatrix.identity(3), LaurentMatrix.zero(3), lam)
        assert point == LaurentMatrix.identity(3)
        expected = []
        for i in range(lam.r + 1):
            diag = [t(-1) if j < lam.d[i] else LaurentPoly.one() for j in range(3)]
            expected.append(Lattice.from_basis(LaurentMatrix.diagonal(diag)))
        assert flag.lattices == tuple(expected)

    def test_point_formula(self):
        lam = Composition((2, 1))
        point, _ = phi_map(LaurentMatrix.identity(3), richardson_element(lam), lam)
        assert point == deformation(lam)

    def test_step_dimensions(self):
        lam = Composition((2, 1))
        _, flag = phi_map(LaurentMatrix.identity(3), richardson_element(lam), lam)
        assert quotient_dim(flag.lattices[1], flag.lattices[0]) == 2

    def test_equivariance_classes(self):
        from affcells.laurent import invert
        from affcells.sampling import random_parabolic

        rng = random.Random(31)
        lam = Composition((2, 2))
        for _ in range(5):
            g = random_sl(rng, 4)
            x = random_nilradical(rng, lam)
            p = random_parabolic(rng, lam)
            _, flag = phi_map(g, x, lam)
            _, flag2 = phi_map(g * p, invert(p) * x * p, lam)
            assert flag == flag2

    def test_rejects_bad_inputs(self):
        lam = Composition((2, 1))
        low = LaurentMatrix.from_entries(3, {(3, 1): LaurentPoly.one()})
        with pytest.raises(NotInNilradical):
            phi_map(LaurentMatrix.identity(3), low, lam)
        not_sl = LaurentMatrix.diagonal([LaurentPoly.constant(2),
                                         LaurentPoly.one(), LaurentPoly.one()])
        with pytest.raises(NotUnimodular):
            phi_map(not_sl, LaurentMatrix.zero(3), lam)


class TestPsi:
    def test_zero(self):
        point, lat = psi_map(LaurentMatrix.zero(3))
        assert point == LaurentMatrix.identity(3)
        assert lat == Lattice.standard(3)

    def test_dense_nilpotent_lattice(self):
        z = richardson_element(Composition((1, 1)))
        _, lat = psi_map(z)
        expected = Lattice.from_basis(
            LaurentMatrix([[LaurentPoly.one(), -t(-1)], [LaurentPoly.zero(), LaurentPoly.one()]])
        )
        assert lat == expected

    def test_equivariance(self):
        from affcells.sampling import random_conjugate_frame

        rng = random.Random(37)
        z = richardson_element(Composition((2, 1)))
        for _ in range(5):
            g, ginv = random_conjugate_frame(rng, 3)
            _, lat = psi_map(g * z * ginv)
            assert lat == psi_map(z)[1].transformed(g)

    def test_rejects_non_nilpotent(self):
        with pytest.raises(NotNilpotent):
            psi_map(LaurentMatrix.identity(2))


class TestMvFlag:
    def test_base_point(self):
        lam = Composition((1, 1))
        flags = mv_flag(LaurentMatrix.zero(2), lam)
        for i in range(lam.r + 1):
            diag = [t(-1) if j < lam.d[i] else LaurentPoly.one() for j in range(2)]
            assert flags[i] == Lattice.from_basis(LaurentMatrix.diagonal(diag))
        # top lattice is t^-1 V[t]
        assert flags[-1] == Lattice.standard(2).scaled(-1)

    def test_agrees_with_phi_for_two_steps(self):
        lam = Composition((1, 1))
        z = richardson_element(lam)
        _, flag = phi_map(LaurentMatrix.identity(2), z, lam)
        assert beta(mv_flag(z, lam), lam) == flag

    def test_beta_needs_two_steps(self):
        lam = Composition((1, 1, 1))
        flags = mv_flag(LaurentMatrix.zero(3), lam)
        with pytest.raises(NotMaximalParabolic):
            beta(flags, lam)

    def test_rejects_flag_violation(self):
        lam = Composition((1, 1))
        # E_{1,2} does not carry F_1 = <e_1 + e_2> into 0 for the frame below
        frame = LaurentMatrix([[LaurentPoly.one(), LaurentPoly.zero()],
                               [LaurentPoly.one(), LaurentPoly.one()]])
        x = LaurentMatrix.from_entries(2, {(1, 2): LaurentPoly.one()})
        with pytest.raises(NotInNilradical):
            mv_flag(x, lam, frame=frame)
