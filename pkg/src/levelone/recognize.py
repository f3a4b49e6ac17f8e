"""Recognition of the canonical algebras with explicit isomorphisms.

``recognize`` decides whether an algebra is isomorphic to one of the
canonical forms and, where the normalization closes over Q, returns the
rational matrix realizing the isomorphism.  The procedures are the natural
ones: images of scaled complement vectors for the scalar-action algebras,
hyperbolic pairs of the induced bilinear form for the one-dimensional-square
algebras, and an idempotent with prescribed left/right spectra for the
nu family.

One case is decided only up to isomorphism over the algebraic closure: a
commutative algebra whose rank-2 symmetric product form has no rational
isotropic vector (e.g. the form x^2 + y^2) is reported with the n3plus tag
but without an iso matrix, since none exists over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import linalg
from .algebra import (
    Algebra,
    Subspace,
    derived_subspace,
    deterministic_candidates,
    extend_basis,
    product_form,
    proportionality,
    rebase,
    subspace_product,
    unit_vector,
    vec_add,
    vec_is_zero,
    vec_scale,
)
from .canonical import CanonicalForm, Tag, construct
from .errors import NotNu

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class RecognitionResult:
    form: CanonicalForm | None
    iso: tuple | None = None  # rational matrix as row tuples, when available
    reason: str | None = None

    @property
    def recognized(self) -> bool:
        return self.form is not None


def _recognized(form: CanonicalForm, iso: list | None, reason: str | None = None):
    frozen = tuple(tuple(row) for row in iso) if iso is not None else None
    return RecognitionResult(form, frozen, reason)


def _not_canonical(reason: str) -> RecognitionResult:
    return RecognitionResult(None, None, reason)


def recognize(a: Algebra) -> RecognitionResult:
    n = a.dim
    if a.is_abelian():
        return _recognized(CanonicalForm(Tag.ABELIAN, n), linalg.mat_identity(n))
    square = derived_subspace(a)
    d2 = square.dim
    annihilates = (
        subspace_product(a, Subspace.full(n), square).dim == 0
        and subspace_product(a, square, Subspace.full(n)).dim == 0
    )
    if a.is_anticommutative():
        if d2 == 1 and annihilates:
            b = product_form(a, square)
            r = linalg.rank(b)
            if r == 2 and n >= 3:
                return _check_basis(a, _skew_pair_basis(a, b), Tag.N3_MINUS)
            return _not_canonical(f"skew product form has rank {r}, need 2")
        if d2 == n - 1 and subspace_product(a, square, square).dim == 0:
            return _scalar_line_path(a, square, Tag.P_MINUS)
        return _not_canonical(
            f"anticommutative with dim A^2 = {d2}: matches no canonical form"
        )
    if a.is_commutative():
        if d2 == 1 and annihilates:
            b = product_form(a, square)
            r = linalg.rank(b)
            if r == 1:
                return _check_basis(a, _rank_one_basis(a, b), Tag.LAMBDA2)
            if r == 2 and n >= 3:
                return _symmetric_pair_path(a, b)
            return _not_canonical(
                f"symmetric product form has rank {r} in dimension {n}"
            )
        if d2 == n - 1 and n >= 2:
            if subspace_product(a, square, square).dim != 0:
                return _not_canonical("A^2 * A^2 != 0")
            return _scalar_line_path(a, square, Tag.P_PLUS)
    return _try_nu(a)


def alpha_of(a: Algebra) -> Fraction:
    """The scalar of the nu family, a basis-change invariant."""
    res = recognize(a)
    if res.form is None or res.form.tag is not Tag.NU:
        raise NotNu(f"algebra is not of nu type: {res.reason or res.form.describe()}")
    if res.form.alpha is None:
        raise NotNu("the 1-dimensional idempotent algebra carries no scalar")
    return res.form.alpha


# -- shared helpers ------------------------------------------------------


def _check_basis(a: Algebra, basis: list, tag: Tag, alpha=None) -> RecognitionResult:
    """Rebase and compare against the canonical table; iso on success."""
    n = a.dim
    form = CanonicalForm(tag, n, alpha)
    rebased, m = rebase(a, basis)
    if rebased == construct(form):
        return _recognized(form, m)
    return _not_canonical(
        f"normalized table does not match {form.describe()}"
    )


def _form_value(b: list, x: Vector, y: Vector) -> Fraction:
    total = ZERO
    for i, xi in enumerate(x):
        if xi:
            row = b[i]
            for j, yj in enumerate(y):
                if yj and row[j]:
                    total += xi * row[j] * yj
    return total


# -- one-dimensional-square paths ----------------------------------------


def _skew_pair_basis(a: Algebra, b: list) -> list:
    """Basis (u, v, u*v, radical...) with form value 1 on the leading pair."""
    n = a.dim
    i, j = next(
        (i, j) for i in range(n) for j in range(n) if b[i][j]
    )
    u = unit_vector(n, i)
    v = vec_scale(unit_vector(n, j), 1 / b[i][j])
    b3 = a.product(u, v)
    radical = linalg.nullspace(b)
    return extend_basis(n, [u, v, b3], pool=radical)


def _rank_one_basis(a: Algebra, b: list) -> list:
    """Basis (u, u*u, radical...); u*u is free, so no square roots appear."""
    n = a.dim
    i = next(i for i in range(n) if b[i][i])
    u = unit_vector(n, i)
    b2 = a.product(u, u)
    radical = linalg.nullspace(b)
    return extend_basis(n, [u, b2], pool=radical)


def _sqrt_fraction(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _symmetric_pair_path(a: Algebra, b: list) -> RecognitionResult:
    """Rank-2 symmetric form: hyperbolic pair over Q when one exists."""
    n = a.dim
    pair = next(
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if b[i][i] * b[j][j] - b[i][j] * b[i][j]
    )
    i, j = pair
    u, v = unit_vector(n, i), unit_vector(n, j)
    p, q, r = b[i][i], b[i][j], b[j][j]
    if p == 0:
        w = u
    elif r == 0:
        w = v
    else:
        root = _sqrt_fraction(q * q - p * r)
        if root is None:
            form = CanonicalForm(Tag.N3_PLUS, n)
            return _recognized(
                form,
                None,
                "recognized over the algebraic closure only: the rank-2 "
                "symmetric form has no rational isotropic vector",
            )
        w = vec_add(vec_scale(u, (-q + root) / p), v)
    partner = u if _form_value(b, w, u) else v
    v1 = vec_scale(partner, 1 / _form_value(b, w, partner))
    v2 = vec_add(v1, vec_scale(w, -_form_value(b, v1, v1) / 2))
    b3 = a.product(w, v2)
    radical = linalg.nullspace(b)
    basis = extend_basis(n, [w, v2, b3], pool=radical)
    return _check_basis(a, basis, Tag.N3_PLUS)


# -- scalar-action path (p+ and p-) --------------------------------------


def _scalar_line_path(a: Algebra, square: Subspace, tag: Tag) -> RecognitionResult:
    n = a.dim
    x = next(unit_vector(n, i) for i in range(n) if not square.contains(unit_vector(n, i)))
    v0 = square.basis[0]
    c = proportionality(a.product(x, v0), v0)
    if not c:
        return _not_canonical(
            "left multiplication by a complement vector is not a nonzero scalar on A^2"
        )
    for v in square.basis[1:]:
        if a.product(x, v) != vec_scale(v, c):
            return _not_canonical(
                "left multiplication by a complement vector is not scalar on A^2"
            )
    if tag is Tag.P_PLUS:
        # remove the square of x, which lives in A^2 and is killed by A^2*A^2 = 0
        s = a.product(x, x)
        x = vec_add(x, vec_scale(s, Fraction(-1, 2) / c))
    basis = [vec_scale(x, 1 / c)] + list(square.basis)
    return _check_basis(a, basis, tag)


# -- the nu family --------------------------------------------------------


def _try_nu(a: Algebra) -> RecognitionResult:
    n = a.dim
    found = None
    for x in deterministic_candidates(n):
        sq = a.product(x, x)
        if not vec_is_zero(sq):
            c = proportionality(sq, x)
            if c is None:
                return _not_canonical("found x with x*x outside the line of x")
            found = (x, c)
            break
    if found is None:
        return _not_canonical("no vector with a nonzero square in the sweep")
    x, c = found
    e = vec_scale(x, 1 / c)
    if n == 1:
        return _check_basis(a, [e], Tag.NU)
    left = a.left_mult_matrix(e)
    right = a.right_mult_matrix(e)
    alpha = (linalg.mat_trace(left) - 1) / (n - 1)
    # exact spectrum check: char(left) = (x - 1)(x - alpha)^(n-1)
    expected = {1: ONE, 0: -ONE}
    factor = {1: ONE, 0: -alpha} if alpha else {1: ONE}
    from .poly import poly_mul, poly_pow

    if linalg.char_poly(left) != poly_mul(expected, poly_pow(factor, n - 1)):
        return _not_canonical(
            "left multiplication by the idempotent has the wrong spectrum"
        )
    rows = []
    for idx in range(n):
        rows.append([left[idx][j] - (alpha if idx == j else ZERO) for j in range(n)])
    beta = 1 - alpha
    for idx in range(n):
        rows.append([right[idx][j] - (beta if idx == j else ZERO) for j in range(n)])
    eigen = linalg.nullspace(rows)
    if len(eigen) != n - 1:
        return _not_canonical(
            f"joint eigenspace of the idempotent actions has dimension "
            f"{len(eigen)}, need {n - 1}"
        )
    basis = extend_basis(n, [e], pool=eigen)
    return _check_basis(a, basis, Tag.NU, alpha)
