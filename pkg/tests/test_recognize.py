import random
from fractions import Fraction as F

import pytest

from levelone import (
    Algebra,
    CanonicalForm,
    NotNu,
    Tag,
    alpha_of,
    apply_basis_change,
    construct,
    derived_subspace,
    random_algebra,
    random_invertible_matrix,
    recognize,
)
from levelone.linalg import char_poly, mat_identity
from levelone.poly import poly_mul, poly_pow


def canon(tag, n, alpha=None):
    return construct(CanonicalForm(tag, n, alpha))


def moved(tag, n, alpha=None, seed=0):
    rng = random.Random(seed)
    return apply_basis_change(canon(tag, n, alpha), random_invertible_matrix(n, rng))


ALL_FORMS = [
    (Tag.ABELIAN, None),
    (Tag.P_MINUS, None),
    (Tag.P_PLUS, None),
    (Tag.N3_MINUS, None),
    (Tag.N3_PLUS, None),
    (Tag.LAMBDA2, None),
    (Tag.NU, F(0)),
    (Tag.NU, F(1)),
    (Tag.NU, F(1, 2)),
    (Tag.NU, F(2, 3)),
    (Tag.NU, F(-3)),
]


class TestExamples:
    def test_lambda2_after_change(self):
        a = moved(Tag.LAMBDA2, 4, seed=5)
        res = recognize(a)
        assert res.form == CanonicalForm(Tag.LAMBDA2, 4)

    def test_nu_two_dimensional_large_scalar(self):
        res = recognize(canon(Tag.NU, 2, F(5)))
        assert res.form == CanonicalForm(Tag.NU, 2, F(5))

    def test_pminus_identity_iso(self):
        res = recognize(canon(Tag.P_MINUS, 4))
        assert res.form == CanonicalForm(Tag.P_MINUS, 4)
        assert [list(r) for r in res.iso] == mat_identity(4)

    def test_n3minus_after_change(self):
        res = recognize(moved(Tag.N3_MINUS, 4, seed=3))
        assert res.form == CanonicalForm(Tag.N3_MINUS, 4)

    def test_not_canonical_generic_tensor(self):
        a = random_algebra(3, 0.7, seed=19, nonabelian=True)
        res = recognize(a)
        assert not res.recognized
        assert res.reason


class TestAlpha:
    def test_nu_zero(self):
        assert alpha_of(canon(Tag.NU, 3, F(0))) == 0

    def test_alpha_survives_basis_change_with_eigen_oracle(self):
        alpha = F(2, 3)
        a = moved(Tag.NU, 4, alpha, seed=11)
        assert alpha_of(a) == alpha
        # oracle: the idempotent's left action has char poly (x-1)(x-alpha)^3
        res = recognize(a)
        iso = [list(r) for r in res.iso]
        back = apply_basis_change(a, iso)
        e = tuple(F(1) if i == 0 else F(0) for i in range(4))
        left = back.left_mult_matrix(e)
        want = poly_mul({1: F(1), 0: F(-1)}, poly_pow({1: F(1), 0: -alpha}, 3))
        assert char_poly(left) == want

    def test_commutative_half_routes_to_nu(self):
        a = canon(Tag.NU, 2, F(1, 2))
        assert derived_subspace(a).dim == 2  # not 1: cannot be lambda2
        res = recognize(a)
        assert res.form == CanonicalForm(Tag.NU, 2, F(1, 2))

    def test_alpha_of_rejects_others(self):
        with pytest.raises(NotNu):
            alpha_of(canon(Tag.LAMBDA2, 3))


class TestRoundTrip:
    @pytest.mark.parametrize("tag,alpha", ALL_FORMS)
    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_recognition_round_trip(self, tag, alpha, n):
        from levelone.errors import BadDimension

        try:
            form = CanonicalForm(tag, n, alpha)
        except BadDimension:
            return
        base = construct(form)
        for seed in range(6):
            rng = random.Random(seed)
            a = apply_basis_change(base, random_invertible_matrix(n, rng))
            res = recognize(a)
            assert res.form == form, res.reason
            if res.iso is not None:
                assert apply_basis_change(a, [list(r) for r in res.iso]) == base

    @pytest.mark.parametrize("tag,alpha", ALL_FORMS)
    def test_iso_soundness_at_dim_four(self, tag, alpha):
        from levelone.errors import BadDimension

        try:
            form = CanonicalForm(tag, 4, alpha)
        except BadDimension:
            return
        a = moved(tag, 4, alpha, seed=23)
        res = recognize(a)
        assert res.form == form
        if res.iso is not None:
            assert apply_basis_change(a, [list(r) for r in res.iso]) == construct(form)


class TestSeparation:
    def test_tags_are_pairwise_distinguished(self):
        n = 4
        outcomes = {}
        for tag, alpha in ALL_FORMS:
            outcomes[(tag, alpha)] = recognize(canon(tag, n, alpha)).form
        forms = list(outcomes.values())
        assert len(set(forms)) == len(forms)

    def test_nu_scalars_are_strict_invariants(self):
        a = recognize(canon(Tag.NU, 3, F(2, 3))).form
        b = recognize(canon(Tag.NU, 3, F(1, 3))).form  # the opposite algebra
        assert a != b

    def test_flag_cross_checks(self):
        for tag, alpha in ALL_FORMS:
            for n in (3, 4):
                a = moved(tag, n, alpha, seed=7)
                res = recognize(a)
                if res.form is None:
                    continue
                if res.form.tag in (Tag.P_MINUS, Tag.P_PLUS, Tag.NU):
                    assert not a.is_nilpotent()
                if res.form.tag in (Tag.N3_MINUS, Tag.N3_PLUS, Tag.LAMBDA2):
                    assert a.is_nilpotent()


class TestClosureLevelCases:
    def test_anisotropic_symmetric_form_has_no_rational_iso(self):
        # e1*e1 = e3, e2*e2 = e3: the form x^2 + y^2 never vanishes over Q
        a = Algebra.from_entries(3, {(2, 0, 0): F(1), (2, 1, 1): F(1)})
        res = recognize(a)
        assert res.form == CanonicalForm(Tag.N3_PLUS, 3)
        assert res.iso is None
        assert "closure" in res.reason

    def test_isotropic_symmetric_form_gets_an_iso(self):
        # e1*e1 = e3, e2*e2 = -e3: x^2 - y^2 vanishes at (1, 1)
        a = Algebra.from_entries(3, {(2, 0, 0): F(1), (2, 1, 1): F(-1)})
        res = recognize(a)
        assert res.form == CanonicalForm(Tag.N3_PLUS, 3)
        assert res.iso is not None
        assert apply_basis_change(a, [list(r) for r in res.iso]) == canon(Tag.N3_PLUS, 3)

    def test_scaled_square_still_gets_lambda2_iso(self):
        # e1*e1 = 2*e2: no square root needed, the image of e2 is free
        a = Algebra.from_entries(2, {(1, 0, 0): F(2)})
        res = recognize(a)
        assert res.form == CanonicalForm(Tag.LAMBDA2, 2)
        assert apply_basis_change(a, [list(r) for r in res.iso]) == canon(Tag.LAMBDA2, 2)

    def test_rank_four_skew_form_is_not_canonical(self):
        # e1*e2 = e5 = -e2*e1, e3*e4 = e5 = -e4*e3
        a = Algebra.from_entries(
            5,
            {
                (4, 0, 1): F(1),
                (4, 1, 0): F(-1),
                (4, 2, 3): F(1),
                (4, 3, 2): F(-1),
            },
        )
        res = recognize(a)
        assert not res.recognized
        assert "rank" in res.reason
