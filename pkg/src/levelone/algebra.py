"""Structure-constant algebras over Q.

An algebra of dimension n is the dense tensor c[k][i][j]: the coefficient of
basis vector k in the product of basis vectors i and j (0-based internally;
interchange formats are 1-based).  Any tensor is a valid algebra, products
are bilinear by construction.  Vectors are tuples of Fractions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import DimensionMismatch, SingularMatrix

ZERO = Fraction(0)
ONE = Fraction(1)

Vector = tuple


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(x: Vector, c: Fraction) -> Vector:
    return tuple(c * a for a in x)


def vec_is_zero(x: Vector) -> bool:
    return not any(x)


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def proportionality(p: Vector, v: Vector) -> Fraction | None:
    """The scalar c with p = c*v, or None; v must be nonzero."""
    pivot = next(i for i, x in enumerate(v) if x)
    c = p[pivot] / v[pivot]
    if all(x == c * y for x, y in zip(p, v)):
        return c
    return None


@dataclass(frozen=True)
class Algebra:
    """Immutable algebra given by its structure tensor."""

    dim: int
    constants: tuple  # constants[k][i][j], all Fraction
    _nnz: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise DimensionMismatch("dimension must be positive")
        table = tuple(
            tuple(tuple(Fraction(v) for v in row) for row in plane)
            for plane in self.constants
        )
        if len(table) != n or any(
            len(plane) != n or any(len(row) != n for row in plane) for plane in table
        ):
            raise DimensionMismatch("structure tensor shape does not match dim")
        object.__setattr__(self, "constants", table)
        nnz = tuple(
            (k, i, j, table[k][i][j])
            for k in range(n)
            for i in range(n)
            for j in range(n)
            if table[k][i][j]
        )
        object.__setattr__(self, "_nnz", nnz)

    @classmethod
    def zero(cls, n: int) -> "Algebra":
        row = tuple(ZERO for _ in range(n))
        plane = tuple(row for _ in range(n))
        return cls(n, tuple(plane for _ in range(n)))

    @classmethod
    def from_entries(cls, n: int, entries: dict) -> "Algebra":
        """Build from {(k, i, j): coeff} with 0-based indices."""
        table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (k, i, j), v in entries.items():
            table[k][i][j] = Fraction(v)
        return cls(n, tuple(tuple(tuple(r) for r in p) for p in table))

    # -- products -----------------------------------------------------
    def product(self, x: Vector, y: Vector) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("vector length does not match algebra dimension")
        out = [ZERO] * self.dim
        for k, i, j, v in self._nnz:
            xi = x[i]
            if xi:
                yj = y[j]
                if yj:
                    out[k] += v * xi * yj
        return tuple(out)

    def left_mult_matrix(self, x: Vector) -> list:
        """Matrix of v -> x * v."""
        cols = [self.product(x, unit_vector(self.dim, j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def right_mult_matrix(self, x: Vector) -> list:
        """Matrix of v -> v * x."""
        cols = [self.product(unit_vector(self.dim, j), x) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    # -- predicates -----------------------------------------------------
    def is_abelian(self) -> bool:
        return not self._nnz

    def is_commutative(self) -> bool:
        c = self.constants
        n = self.dim
        return all(
            c[k][i][j] == c[k][j][i]
            for k in range(n)
            for i in range(n)
            for j in range(i + 1, n)
        )

    def is_anticommutative(self) -> bool:
        """Skew tensor; over Q this is the same as x*x = 0 for every x."""
        c = self.constants
        n = self.dim
        return all(
            c[k][i][j] == -c[k][j][i]
            for k in range(n)
            for i in range(n)
            for j in range(i, n)
        )

    def is_nilpotent(self) -> bool:
        powers = ideal_powers(self)
        return powers[-1].dim == 0


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^n held in reduced row echelon form.

    The canonical basis makes equality of subspaces plain dataclass equality.
    """

    ambient: int
    basis: tuple  # rref rows, tuple of coordinate tuples
    pivots: tuple = field(default=(), compare=False)

    @classmethod
    def span(cls, ambient: int, vectors) -> "Subspace":
        rows, pivots = linalg.rref([list(v) for v in vectors])
        return cls(ambient, tuple(tuple(r) for r in rows), tuple(pivots))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, (), ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls.span(ambient, [unit_vector(ambient, i) for i in range(ambient)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Vector) -> bool:
        res = linalg.reduce_against([list(r) for r in self.basis], list(self.pivots), v)
        return not any(res)

    def join(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise DimensionMismatch("ambient dimensions differ")
        return Subspace.span(self.ambient, list(self.basis) + list(other.basis))


def subspace_product(a: Algebra, u: Subspace, w: Subspace) -> Subspace:
    """span{ x*y : x in basis(u), y in basis(w) }; exact since products are bilinear."""
    if u.ambient != a.dim or w.ambient != a.dim:
        raise DimensionMismatch("subspace ambient dimension does not match algebra")
    vectors = [a.product(x, y) for x in u.basis for y in w.basis]
    return Subspace.span(a.dim, vectors)


def ideal_powers(a: Algebra) -> list:
    """[A^1, ..., A^(n+1)] under A^m = sum of A^p * A^q with p + q = m.

    The ladder is decreasing, so A^(n+1) = 0 is equivalent to nilpotency.
    """
    n = a.dim
    powers = [Subspace.full(n)]
    for m in range(2, n + 2):
        acc = Subspace.zero(n)
        for p in range(1, m):
            q = m - p
            acc = acc.join(subspace_product(a, powers[p - 1], powers[q - 1]))
        powers.append(acc)
        if acc.dim == 0:
            while len(powers) < n + 1:
                powers.append(acc)
            break
    return powers


def derived_subspace(a: Algebra) -> Subspace:
    """A^2: the span of all products."""
    full = Subspace.full(a.dim)
    return subspace_product(a, full, full)


@dataclass(frozen=True)
class InvariantVector:
    """Basis-change invariants used to separate the canonical algebras."""

    dim: int
    power_dims: tuple  # dim A^2, dim A^3, ... truncated at stabilization
    commutative: bool
    anticommutative: bool
    nilpotent: bool
    sym_rank: int | None = None  # only when dim A^2 = 1
    skew_rank: int | None = None


def product_form(a: Algebra, square: Subspace) -> list:
    """When dim A^2 = 1 write e_i * e_j = B[i][j] * z for the spanning z."""
    z = square.basis[0]
    pivot = next(i for i, v in enumerate(z) if v)
    n = a.dim
    b = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            p = a.product(unit_vector(n, i), unit_vector(n, j))
            b[i][j] = p[pivot] / z[pivot]
    return b


def invariant_vector(a: Algebra) -> InvariantVector:
    powers = ideal_powers(a)
    dims = [s.dim for s in powers[1:]]
    trimmed: list[int] = []
    for k, d in enumerate(dims):
        trimmed.append(d)
        if d == 0 or (k > 0 and dims[k - 1] == d):
            break
    sym_rank = skew_rank = None
    if dims[0] == 1:
        b = product_form(a, powers[1])
        n = a.dim
        sym = [[b[i][j] + b[j][i] for j in range(n)] for i in range(n)]
        skew = [[b[i][j] - b[j][i] for j in range(n)] for i in range(n)]
        sym_rank = linalg.rank(sym)
        skew_rank = linalg.rank(skew)
    return InvariantVector(
        dim=a.dim,
        power_dims=tuple(trimmed),
        commutative=a.is_commutative(),
        anticommutative=a.is_anticommutative(),
        nilpotent=powers[-1].dim == 0,
        sym_rank=sym_rank,
        skew_rank=skew_rank,
    )


def apply_basis_change(a: Algebra, g: list) -> Algebra:
    """Transport the tensor by an invertible rational matrix g.

    The result is the isomorphic algebra with products
    (x, y) -> g(a(g^-1 x, g^-1 y)); entry formula
    c'[k][i][j] = sum g[k][r] c[r][s][t] ginv[s][i] ginv[t][j].
    """
    n = a.dim
    if len(g) != n or any(len(row) != n for row in g):
        raise DimensionMismatch("matrix size does not match algebra dimension")
    ginv = linalg.mat_inverse(g)  # raises SingularMatrix
    mid = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for r, s, t, v in a._nnz:
        row_s = ginv[s]
        row_t = ginv[t]
        plane = mid[r]
        for i in range(n):
            gs = row_s[i]
            if gs:
                vg = v * gs
                plane_i = plane[i]
                for j in range(n):
                    gt = row_t[j]
                    if gt:
                        plane_i[j] += vg * gt
    out = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for k in range(n):
        grow = g[k]
        out_k = out[k]
        for r in range(n):
            c = grow[r]
            if c:
                plane = mid[r]
                for i in range(n):
                    plane_i = plane[i]
                    out_ki = out_k[i]
                    for j in range(n):
                        if plane_i[j]:
                            out_ki[j] += c * plane_i[j]
    return Algebra(n, tuple(tuple(tuple(r) for r in p) for p in out))


def rebase(a: Algebra, basis: list) -> tuple[Algebra, list]:
    """Express the algebra in the given basis (columns of the new frame).

    Returns (algebra in the new coordinates, the matrix that realizes it),
    i.e. apply_basis_change(a, m) with m the inverse of the frame matrix.
    """
    n = a.dim
    frame = [[basis[j][i] for j in range(n)] for i in range(n)]
    try:
        m = linalg.mat_inverse(frame)
    except SingularMatrix:
        raise SingularMatrix("proposed basis is linearly dependent")
    return apply_basis_change(a, m), m


def extend_basis(a_dim: int, vectors: list, pool: list | None = None) -> list:
    """Complete independent vectors to a full basis.

    Candidates are drawn greedily from ``pool`` (standard basis vectors by
    default) in order, so the completion is deterministic.  Raises when the
    pool cannot reach full rank.
    """
    chosen: list[Vector] = []
    rows: list[list] = []
    pivots: list[int] = []

    def try_add(v: Vector) -> bool:
        res = list(linalg.reduce_against(rows, pivots, v))
        lead = next((i for i, c in enumerate(res) if c), None)
        if lead is None:
            return False
        rows.append([c / res[lead] for c in res])
        pivots.append(lead)
        chosen.append(tuple(v))
        return True

    for v in vectors:
        if not try_add(v):
            raise SingularMatrix("seed vectors are linearly dependent")
    if pool is None:
        pool = [unit_vector(a_dim, i) for i in range(a_dim)]
    for v in pool:
        if len(chosen) == a_dim:
            break
        try_add(v)
    if len(chosen) != a_dim:
        raise SingularMatrix("candidate pool does not complete the basis")
    return chosen


def deterministic_candidates(n: int) -> list:
    """Standard basis vectors followed by all pairwise sums e_i + e_j (i < j)."""
    basis = [unit_vector(n, i) for i in range(n)]
    sums = [vec_add(basis[i], basis[j]) for i in range(n) for j in range(i + 1, n)]
    return basis + sums


def random_algebra(
    n: int, density: float, seed: int, nonabelian: bool = False
) -> Algebra:
    """Seed-deterministic sparse random tensor with small rational entries.

    Each entry is nonzero with probability ``density``; values have
    numerators in [-9, 9] and denominators in [1, 4].  With ``nonabelian``
    the sample is redrawn until some entry is nonzero.
    """
    if n < 1 or not 0 <= density <= 1:
        raise ValueError("need n >= 1 and 0 <= density <= 1")
    rng = random.Random(seed)
    while True:
        entries = {}
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    if rng.random() < density:
                        num = rng.choice((1, -1)) * rng.randint(1, 9)
                        entries[(k, i, j)] = Fraction(num, rng.randint(1, 4))
        if entries or not nonabelian:
            return Algebra.from_entries(n, entries)


def random_invertible_matrix(n: int, rng: random.Random, bound: int = 3) -> list:
    """Random invertible rational matrix, built as L * U * P so no rejection loop."""
    lower = [
        [
            ONE
            if i == j
            else (Fraction(rng.randint(-bound, bound)) if i > j else ZERO)
            for j in range(n)
        ]
        for i in range(n)
    ]
    upper = [
        [
            Fraction(rng.choice((1, -1)) * rng.randint(1, bound))
            if i == j
            else (Fraction(rng.randint(-bound, bound)) if i < j else ZERO)
            for j in range(n)
        ]
        for i in range(n)
    ]
    perm = list(range(n))
    rng.shuffle(perm)
    pmat = [[ONE if perm[i] == j else ZERO for j in range(n)] for i in range(n)]
    return linalg.mat_mul(linalg.mat_mul(lower, upper), pmat)
