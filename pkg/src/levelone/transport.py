"""The parametric basis-change action over Q(t) and exact t -> 0 limits.

A parametric family is an n x n matrix g over Q(t) that is invertible over
the function field (its determinant may well vanish or blow up at t = 0).
Transporting an algebra by g gives structure constants in Q(t); when every
entry has non-negative valuation the entrywise limit at t = 0 exists and is
again an algebra.  A Witness packages a family with a claimed limit, and
``verify_degeneration`` checks the claim bit-exactly.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Algebra
from .canonical import CanonicalForm, construct
from .errors import DimensionMismatch, NoLimit, PoleAtZero, SingularFamily
from .poly import (
    FE_ONE,
    FE_ZERO,
    FieldElement,
    POLY_ONE,
    poly_add,
    poly_exact_div,
    poly_lcm,
    poly_mul,
    poly_ord,
    poly_scale,
)

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class ParamMatrix:
    """n x n matrix over Q(t); column j holds the image of basis vector j."""

    dim: int
    entries: tuple  # tuple of row tuples of FieldElement

    def __post_init__(self):
        if len(self.entries) != self.dim or any(
            len(row) != self.dim for row in self.entries
        ):
            raise DimensionMismatch("entry grid does not match dim")

    @classmethod
    def identity(cls, n: int) -> "ParamMatrix":
        return cls(
            n,
            tuple(
                tuple(FE_ONE if i == j else FE_ZERO for j in range(n))
                for i in range(n)
            ),
        )

    @classmethod
    def diagonal_powers(cls, exponents) -> "ParamMatrix":
        """diag(t^e1, ..., t^en)."""
        exps = list(exponents)
        n = len(exps)
        return cls(
            n,
            tuple(
                tuple(
                    FieldElement.t_power(exps[i]) if i == j else FE_ZERO
                    for j in range(n)
                )
                for i in range(n)
            ),
        )

    @classmethod
    def from_rational(cls, m: list) -> "ParamMatrix":
        n = len(m)
        return cls(
            n, tuple(tuple(FieldElement.constant(v) for v in row) for row in m)
        )

    def __matmul__(self, other: "ParamMatrix") -> "ParamMatrix":
        if self.dim != other.dim:
            raise DimensionMismatch("matrix dimensions differ")
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = FE_ZERO
                for k in range(n):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return ParamMatrix(n, tuple(rows))

    def det(self) -> FieldElement:
        """Determinant in Q(t) by fraction-field elimination."""
        n = self.dim
        work = [list(row) for row in self.entries]
        det = FE_ONE
        for col in range(n):
            pivot = _pick_pivot(work, col)
            if pivot is None:
                return FE_ZERO
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            lead = work[col][col]
            det = det * lead
            inv = lead.inverse()
            for r in range(col + 1, n):
                f = work[r][col]
                if f:
                    f = f * inv
                    work[r] = [
                        x - f * y if y else x for x, y in zip(work[r], work[col])
                    ]
        return det

    def eval_at(self, t0: Fraction) -> list:
        """Specialize to a rational matrix; raises PoleAtPoint on a pole."""
        return [[e.eval_at(t0) for e in row] for row in self.entries]


def _pick_pivot(work: list, col: int):
    """Nonzero entry of minimal combined num+den degree, ties row-major."""
    best = None
    best_weight = None
    for r in range(col, len(work)):
        e = work[r][col]
        if e:
            w = e.degree_weight()
            if best_weight is None or w < best_weight:
                best, best_weight = r, w
    return best


def invert(g: ParamMatrix) -> ParamMatrix:
    """Exact inverse over Q(t); raises SingularFamily when det = 0."""
    n = g.dim
    work = [
        list(row) + [FE_ONE if i == j else FE_ZERO for j in range(n)]
        for i, row in enumerate(g.entries)
    ]
    for col in range(n):
        pivot = _pick_pivot(work, col)
        if pivot is None:
            raise SingularFamily("family matrix is singular over Q(t)")
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
        inv = work[col][col].inverse()
        work[col] = [x * inv if x else x for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y if y else x for x, y in zip(work[r], work[col])]
    return ParamMatrix(n, tuple(tuple(row[n:]) for row in work))


@dataclass(frozen=True)
class ParamAlgebra:
    """Structure tensor with entries in Q(t)."""

    dim: int
    constants: tuple  # constants[k][i][j], FieldElement

    def eval_at(self, t0: Fraction) -> Algebra:
        n = self.dim
        return Algebra(
            n,
            tuple(
                tuple(
                    tuple(self.constants[k][i][j].eval_at(t0) for j in range(n))
                    for i in range(n)
                )
                for k in range(n)
            ),
        )


def embed_algebra(a: Algebra) -> ParamAlgebra:
    """View a rational tensor as a constant parametric tensor."""
    n = a.dim
    return ParamAlgebra(
        n,
        tuple(
            tuple(
                tuple(FieldElement.constant(a.constants[k][i][j]) for j in range(n))
                for i in range(n)
            )
            for k in range(n)
        ),
    )


def _clear_denominators(entries) -> tuple[list, dict]:
    """Write a FieldElement grid as (polynomial grid, common denominator)."""
    common = dict(POLY_ONE)
    for row in entries:
        for e in row:
            if e.num and e.den != POLY_ONE and e.den != common:
                common = poly_lcm(common, e.den)
    cleared = []
    for row in entries:
        out = []
        for e in row:
            if not e.num:
                out.append({})
            elif e.den == common:
                out.append(dict(e.num))
            else:
                out.append(poly_mul(e.num, poly_exact_div(common, e.den)))
        cleared.append(out)
    return cleared, common


def _transport_raw(a: Algebra, g: ParamMatrix) -> tuple[list, dict]:
    """Transported tensor as (numerator polynomials, shared denominator).

    c'[k][i][j] = sum g[k][r] c[r][s][t] ginv[s][i] ginv[t][j]; all the
    entries share the denominator dg * dinv^2, and no gcd is taken here so
    limits can be read off cheaply.
    """
    if a.dim != g.dim:
        raise DimensionMismatch("algebra and family dimensions differ")
    n = a.dim
    ginv = invert(g)
    p, dg = _clear_denominators(g.entries)
    q, dq = _clear_denominators(ginv.entries)
    by_st = defaultdict(list)
    for r, s, t, v in a._nnz:
        by_st[(s, t)].append((r, v))
    mid = [[[{} for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for (s, t), hits in by_st.items():
        outer = [
            [poly_mul(q[s][i], q[t][j]) if q[s][i] and q[t][j] else {} for j in range(n)]
            for i in range(n)
        ]
        for r, v in hits:
            plane = mid[r]
            for i in range(n):
                row = outer[i]
                plane_i = plane[i]
                for j in range(n):
                    if row[j]:
                        plane_i[j] = poly_add(plane_i[j], poly_scale(row[j], v))
    num = [[[{} for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for r in range(n):
            pk = p[k][r]
            if not pk:
                continue
            plane = mid[r]
            out_k = num[k]
            for i in range(n):
                plane_i = plane[i]
                out_ki = out_k[i]
                for j in range(n):
                    if plane_i[j]:
                        out_ki[j] = poly_add(out_ki[j], poly_mul(pk, plane_i[j]))
    den = poly_mul(dg, poly_mul(dq, dq))
    return num, den


def transport(a: Algebra, g: ParamMatrix) -> ParamAlgebra:
    """The transported tensor over Q(t), every entry fully reduced."""
    num, den = _transport_raw(a, g)
    n = a.dim
    return ParamAlgebra(
        n,
        tuple(
            tuple(
                tuple(FieldElement(num[k][i][j], dict(den)) for j in range(n))
                for i in range(n)
            )
            for k in range(n)
        ),
    )


def limit_at_zero(pa: ParamAlgebra) -> Algebra:
    """Entrywise limit at t = 0; raises NoLimit listing poles (1-based)."""
    n = pa.dim
    bad = []
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                try:
                    table[k][i][j] = pa.constants[k][i][j].eval_at_zero()
                except PoleAtZero:
                    bad.append((k + 1, i + 1, j + 1))
    if bad:
        raise NoLimit(bad)
    return Algebra(n, tuple(tuple(tuple(r) for r in p) for p in table))


def transport_limit(a: Algebra, g: ParamMatrix) -> Algebra:
    """limit_at_zero(transport(a, g)) computed without per-entry reduction.

    Valuations are representation independent, so the limit can be read off
    the un-reduced numerator/denominator pair directly.
    """
    num, den = _transport_raw(a, g)
    vd = poly_ord(den)
    n = a.dim
    bad = []
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                nm = num[k][i][j]
                if not nm:
                    continue
                vn = poly_ord(nm)
                if vn < vd:
                    bad.append((k + 1, i + 1, j + 1))
                elif vn == vd:
                    table[k][i][j] = nm[vn] / den[vd]
    if bad:
        raise NoLimit(bad)
    return Algebra(n, tuple(tuple(tuple(r) for r in p) for p in table))


@dataclass(frozen=True)
class Witness:
    """A checkable degeneration certificate: family, claimed target, trace."""

    family: ParamMatrix
    target: CanonicalForm
    branch_trace: tuple = ()


@dataclass
class Report:
    passed: bool
    limit: Algebra | None
    diagnostics: list

    def summary(self) -> str:
        head = "PASS" if self.passed else "FAIL"
        if self.diagnostics:
            return f"{head}: " + "; ".join(self.diagnostics)
        return head


def verify_degeneration(a: Algebra, w: Witness, up_to_iso: bool = False) -> Report:
    """Check that the witness family carries ``a`` onto its target at t = 0.

    With ``up_to_iso`` the limit only has to be recognized as the target
    form; otherwise the tensors must agree entrywise.  A missing limit is a
    failing report, not an exception.
    """
    if a.dim != w.family.dim:
        raise DimensionMismatch("algebra and family dimensions differ")
    if a.dim != w.target.dim:
        raise DimensionMismatch("algebra and target dimensions differ")
    try:
        limit = transport_limit(a, w.family)
    except NoLimit as exc:
        return Report(False, None, [str(exc)])
    if up_to_iso:
        from .recognize import recognize  # deferred: recognize sits above transport

        res = recognize(limit)
        if res.form is None:
            return Report(False, limit, [f"limit not canonical: {res.reason}"])
        if res.form != w.target:
            return Report(
                False,
                limit,
                [f"limit recognized as {res.form.describe()}, "
                 f"wanted {w.target.describe()}"],
            )
        return Report(True, limit, [])
    target = construct(w.target)
    if limit == target:
        return Report(True, limit, [])
    diffs = []
    for k in range(a.dim):
        for i in range(a.dim):
            for j in range(a.dim):
                got = limit.constants[k][i][j]
                want = target.constants[k][i][j]
                if got != want:
                    diffs.append(f"entry ({k + 1},{i + 1},{j + 1}): {got} != {want}")
                if len(diffs) >= 6:
                    break
    return Report(False, limit, diffs)


def random_family(n: int, pole_bound: int, seed: int) -> ParamMatrix:
    """Seed-deterministic sparse Laurent family with det != 0.

    Entries draw one or two monomials with exponents in
    [-pole_bound, pole_bound] and small rational coefficients; the matrix is
    redrawn until it is invertible over Q(t).
    """
    if pole_bound < 0:
        raise ValueError("pole_bound must be >= 0")
    rng = random.Random(seed)
    while True:
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if rng.random() < 0.65:
                    lp: dict[int, Fraction] = {}
                    for _ in range(rng.randint(1, 2)):
                        e = rng.randint(-pole_bound, pole_bound)
                        c = Fraction(
                            rng.choice((1, -1)) * rng.randint(1, 3), rng.randint(1, 2)
                        )
                        s = lp.get(e, ZERO) + c
                        if s:
                            lp[e] = s
                        else:
                            lp.pop(e, None)
                    row.append(FieldElement.from_laurent(lp))
                else:
                    row.append(FE_ZERO)
            rows.append(tuple(row))
        pm = ParamMatrix(n, tuple(rows))
        if pm.det():
            return pm
