"""Hochschild homology and cohomology of a bimodule via the bar complexes.

This is the package's brute-force route: the chain spaces are B tensor the
n-fold tensor power of the algebra (homology) or maps from that tensor power
to B (cohomology), on the monomial tensor basis, indexed in mixed radix with
the B coordinate fastest.  Differentials are assembled entry by entry from
the cached structure-constant table, handed to ChainComplexWindow (which
re-verifies composition-zero), and dimensions are read off per degree.

The boundary of b tensor lambda_1 ... lambda_n is
    b lambda_1 (x) lambda_2 ... + sum_i (-1)^i b (x) ... lambda_i lambda_{i+1} ...
    + (-1)^n lambda_n b (x) lambda_1 ... lambda_{n-1},
and the coboundary of f takes lambda_1 ... lambda_{n+1} to
    lambda_1 f(lambda_2 ...) + sum_i (-1)^i f(... lambda_i lambda_{i+1} ...)
    + (-1)^{n+1} f(lambda_1 ... lambda_n) lambda_{n+1}.

Space sizes grow as (dim B) (dim A)^n, so requests carry an element budget;
exceeding it raises BudgetExceeded naming the first unaffordable degree.
"""

from dataclasses import dataclass

from .qci_algebra import Bimodule
from .sparse_linalg import ChainComplexWindow, SparseMatrix

DEFAULT_BUDGET = 5_000_000


class BudgetExceeded(Exception):
    """A requested degree needs more basis elements than the budget allows."""

    def __init__(self, degree, needed, budget):
        self.degree = degree
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"degree {degree} needs {needed} basis elements, budget is {budget}")


@dataclass(frozen=True)
class BarWindowRequest:
    """A finite window of Hochschild dimensions to compute.

    direction is "homology" or "cohomology"; the budget caps the dimension
    (dim B) * (dim A)^(n+1) of the largest chain space a degree-n value needs.
    """

    coefficients: Bimodule
    n_max: int
    direction: str
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.n_max < 0:
            raise ValueError("n_max must be non-negative")
        if self.direction not in ("homology", "cohomology"):
            raise ValueError(f"unknown direction {self.direction!r}")

    @property
    def algebra(self):
        return self.coefficients.algebra


def _check_budget(B, n_max, budget):
    dim_a = B.algebra.dim
    for n in range(n_max + 1):
        needed = B.dim * dim_a ** (n + 1)
        if needed > budget:
            raise BudgetExceeded(n, needed, budget)


def _tuple_index_decode(idx, dim_a, n):
    out = []
    for _ in range(n):
        out.append(idx % dim_a)
        idx //= dim_a
    return out


def boundary_matrix(B, n):
    """The n-th homology boundary, mapping degree n to degree n - 1."""
    A = B.algebra
    field = B.field
    dim_a, dim_b = A.dim, B.dim
    table = A.structure_constants()
    minus_one = field.neg(field.one)
    entries = {}

    def acc(row, col, val):
        cur = field.add(entries.get((row, col), field.zero), val)
        if cur == field.zero:
            entries.pop((row, col), None)
        else:
            entries[(row, col)] = cur

    last_sign = field.one if n % 2 == 0 else minus_one
    for tup_idx in range(dim_a ** n):
        tup = _tuple_index_decode(tup_idx, dim_a, n)
        tail_idx = tup_idx // dim_a
        head_idx = tup_idx % (dim_a ** (n - 1))
        # inner products lambda_i lambda_{i+1}, positions i = 1..n-1
        inner = []
        weight = 1
        for i in range(1, n):
            hit = table.get((tup[i - 1], tup[i]))
            if hit is not None:
                coeff, prod = hit
                sign = field.one if i % 2 == 0 else minus_one
                # the two merged slots i-1, i collapse into one slot
                low = tup_idx % weight
                high = tup_idx // (weight * dim_a * dim_a)
                new_idx = low + prod * weight + high * weight * dim_a
                inner.append((field.mul(sign, coeff), new_idx))
            weight *= dim_a
        right_col = B.right_monomial(tup[0])
        left_col = B.left_monomial(tup[-1])
        for beta in range(dim_b):
            col = beta + dim_b * tup_idx
            for row_b, v in right_col[beta].items():
                acc(row_b + dim_b * tail_idx, col, v)
            for v, new_idx in inner:
                acc(beta + dim_b * new_idx, col, v)
            for row_b, v in left_col[beta].items():
                acc(row_b + dim_b * head_idx, col, field.mul(last_sign, v))
    return SparseMatrix.from_dict(field, dim_b * dim_a ** (n - 1),
                                  dim_b * dim_a ** n, entries)


def coboundary_matrix(B, n):
    """The n-th cohomology coboundary, mapping cochain degree n to n + 1."""
    A = B.algebra
    field = B.field
    dim_a, dim_b = A.dim, B.dim
    minus_one = field.neg(field.one)
    factorizations = {}
    for (s, t), (coeff, r) in A.structure_constants().items():
        factorizations.setdefault(r, []).append((s, t, coeff))
    entries = {}

    def acc(row, col, val):
        cur = field.add(entries.get((row, col), field.zero), val)
        if cur == field.zero:
            entries.pop((row, col), None)
        else:
            entries[(row, col)] = cur

    last_sign = field.one if (n + 1) % 2 == 0 else minus_one
    top_weight = dim_a ** n
    for tup_idx in range(dim_a ** n):
        tup = _tuple_index_decode(tup_idx, dim_a, n)
        # splitting slot i of the argument tuple, positions i = 1..n
        splits = []
        weight = 1
        for i in range(1, n + 1):
            low = tup_idx % weight
            high = tup_idx // (weight * dim_a)
            sign = field.one if i % 2 == 0 else minus_one
            for s, t, coeff in factorizations.get(tup[i - 1], ()):
                new_idx = low + s * weight + t * weight * dim_a \
                    + high * weight * dim_a * dim_a
                splits.append((field.mul(sign, coeff), new_idx))
            weight *= dim_a
        for beta in range(dim_b):
            col = beta + dim_b * tup_idx
            for m0 in range(dim_a):
                row_idx = m0 + dim_a * tup_idx
                for row_b, v in B.left_monomial(m0)[beta].items():
                    acc(row_b + dim_b * row_idx, col, v)
                row_idx = tup_idx + top_weight * m0
                for row_b, v in B.right_monomial(m0)[beta].items():
                    acc(row_b + dim_b * row_idx, col, field.mul(last_sign, v))
            for v, new_idx in splits:
                acc(beta + dim_b * new_idx, col, v)
    return SparseMatrix.from_dict(field, dim_b * dim_a ** (n + 1),
                                  dim_b * dim_a ** n, entries)


def homology_window(B, n_max, budget=DEFAULT_BUDGET):
    """ChainComplexWindow whose interior degrees 0..n_max give HH_n(A, B)."""
    _check_budget(B, n_max, budget)
    A = B.algebra
    degrees = list(range(n_max + 1, -2, -1))
    spaces = {n: B.dim * A.dim ** n for n in range(n_max + 2)}
    spaces[-1] = 0
    maps = {n: boundary_matrix(B, n) for n in range(1, n_max + 2)}
    maps[0] = SparseMatrix(B.field, 0, spaces[0], [])
    return ChainComplexWindow(degrees, spaces, maps)


class CohomologyWindow:
    """Cochain window relabeled into homological convention.

    Cochain degree n is stored at chain degree (n_max + 1) - n, so the
    composition-zero check of ChainComplexWindow applies verbatim and every
    requested cohomological degree 0..n_max is interior.
    """

    def __init__(self, B, n_max, budget=DEFAULT_BUDGET):
        _check_budget(B, n_max, budget)
        A = B.algebra
        self.n_max = n_max
        hi = n_max + 2
        degrees = list(range(hi, -1, -1))
        spaces = {hi: 0}
        for n in range(n_max + 2):
            spaces[hi - 1 - n] = B.dim * A.dim ** n
        maps = {hi: SparseMatrix(B.field, spaces[hi - 1], 0, [])}
        for n in range(n_max + 1):
            maps[hi - 1 - n] = coboundary_matrix(B, n)
        self.window = ChainComplexWindow(degrees, spaces, maps)

    def cohomology_dim(self, n):
        if not 0 <= n <= self.n_max:
            raise ValueError(f"cohomological degree {n} outside window")
        return self.window.homology_dim(self.n_max + 1 - n)


def hh_homology_dims(req):
    """Hochschild homology dimensions for degrees 0..n_max."""
    if req.direction != "homology":
        raise ValueError("request direction must be homology")
    window = homology_window(req.coefficients, req.n_max, req.budget)
    return [window.homology_dim(n) for n in range(req.n_max + 1)]


def hh_cohomology_dims(req):
    """Hochschild cohomology dimensions for degrees 0..n_max."""
    if req.direction != "cohomology":
        raise ValueError("request direction must be cohomology")
    window = CohomologyWindow(req.coefficients, req.n_max, req.budget)
    return [window.cohomology_dim(n) for n in range(req.n_max + 1)]
