"""Finite-dimensional quantum complete intersections and their bimodules.

An algebra here is generated by x_1, ..., x_c subject to x_i^{a_i} = 0 and
x_i x_j = q_ij x_j x_i, with a_i >= 2 and q_ii = 1, q_ij q_ji = 1.  The
monomials x_c^{e_c} ... x_1^{e_1} with 0 <= e_w < a_w form a basis, indexed in
mixed radix with e_1 fastest.  Special cases: exterior algebras (all a_i = 2,
off-diagonal q = -1) and commutative truncated polynomial rings (all q = 1).

Bimodules are encoded by the action matrices of the generators on a chosen
basis; the left actions form an algebra homomorphism, the right actions an
antihomomorphism, and the two sides commute.  Diagonal twists (automorphisms
scaling each generator) give the twisted bimodules used throughout, and the
linear dual of a bimodule transposes the actions and exchanges the sides.
"""

from math import prod

from .exact_field import scalar_pow


# ---------------------------------------------------------------------------
# small column-sparse matrices: a matrix is a list of columns, each a dict
# row -> nonzero scalar.  Dimensions are tiny (<= dim A <= a few dozen), so
# clarity beats cleverness here.
# ---------------------------------------------------------------------------

def mat_zero(dim):
    return [dict() for _ in range(dim)]


def mat_identity(field, dim):
    return [{j: field.one} for j in range(dim)]


def mat_apply(field, cols, vec):
    """Apply the matrix to a dict vector, dropping cancellations."""
    out = {}
    for j, coeff in vec.items():
        for i, mij in cols[j].items():
            val = field.add(out.get(i, field.zero), field.mul(mij, coeff))
            if val == field.zero:
                out.pop(i, None)
            else:
                out[i] = val
    return out


def mat_mul(field, left, right):
    return [mat_apply(field, left, col) for col in right]


def mat_pow(field, cols, n):
    result = mat_identity(field, len(cols))
    for _ in range(n):
        result = mat_mul(field, cols, result)
    return result


def mat_scale(field, scalar, cols):
    if scalar == field.zero:
        return mat_zero(len(cols))
    return [{i: field.mul(scalar, v) for i, v in col.items()} for col in cols]


def mat_transpose(dim_rows, cols):
    out = [dict() for _ in range(dim_rows)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            out[i][j] = v
    return out


def mat_eq(a, b):
    return a == b


def mat_is_zero(cols):
    return all(not col for col in cols)


# ---------------------------------------------------------------------------
# the algebra
# ---------------------------------------------------------------------------

class QciAlgebra:
    """A quantum complete intersection with exact scalar arithmetic."""

    def __init__(self, field, exponents, q):
        exponents = tuple(exponents)
        if not exponents:
            raise ValueError("at least one generator is required")
        for w, a in enumerate(exponents):
            if not isinstance(a, int) or a < 2:
                raise ValueError(f"exponent a[{w}] must be an integer >= 2, got {a!r}")
        c = len(exponents)
        q = tuple(tuple(row) for row in q)
        if len(q) != c or any(len(row) != c for row in q):
            raise ValueError(f"commutation matrix must be {c}x{c}")
        one = field.one
        for i in range(c):
            if q[i][i] != one:
                raise ValueError(f"q[{i}][{i}] must be 1")
            for j in range(c):
                if q[i][j] == field.zero:
                    raise ValueError(f"q[{i}][{j}] must be a unit")
                if field.mul(q[i][j], q[j][i]) != one:
                    raise ValueError(f"q[{i}][{j}] * q[{j}][{i}] must be 1")
        self.field = field
        self.exponents = exponents
        self.c = c
        self.q = q
        self.dim = prod(exponents)
        # radix weights for the monomial index, e_1 fastest
        self._weights = []
        w = 1
        for a in exponents:
            self._weights.append(w)
            w *= a
        self._exps_cache = [self._index_to_exps(i) for i in range(self.dim)]
        self._struct = None

    # -- monomial indexing ---------------------------------------------------

    def monomial_index(self, exps):
        assert len(exps) == self.c
        idx = 0
        for e, a, w in zip(exps, self.exponents, self._weights):
            assert 0 <= e < a
            idx += e * w
        return idx

    def _index_to_exps(self, idx):
        exps = []
        for a in self.exponents:
            exps.append(idx % a)
            idx //= a
        return tuple(exps)

    def monomial_exps(self, idx):
        return self._exps_cache[idx]

    def monomials(self):
        return list(self._exps_cache)

    @property
    def unit_index(self):
        return 0

    @property
    def top_index(self):
        """Index of the socle monomial x_c^{a_c-1} ... x_1^{a_1-1}."""
        return self.dim - 1

    def generator_exps(self, w):
        """Exponent tuple of x_w (1-based generator number)."""
        return tuple(1 if v == w - 1 else 0 for v in range(self.c))

    def generator_index(self, w):
        return self.monomial_index(self.generator_exps(w))

    # -- products ------------------------------------------------------------

    def multiply_monomials(self, exps1, exps2):
        """Normal form of the product of two basis monomials.

        Returns (coefficient, exponent tuple) or None when a power x_w^{a_w}
        appears.  The product word is bubble-reordered into descending
        generator order, each transposition x_u x_w -> q_uw x_w x_u (u < w)
        contributing its commutation scalar.
        """
        word = []
        for w in range(self.c, 0, -1):
            word.extend([w] * exps1[w - 1])
        start = len(word)
        for w in range(self.c, 0, -1):
            word.extend([w] * exps2[w - 1])
        field = self.field
        coeff = field.one
        # only letters of the second factor can be out of order
        for k in range(start, len(word)):
            g = word[k]
            pos = k
            while pos > 0 and word[pos - 1] < g:
                coeff = field.mul(coeff, self.q[word[pos - 1] - 1][g - 1])
                word[pos] = word[pos - 1]
                pos -= 1
            word[pos] = g
        exps = [0] * self.c
        for g in word:
            exps[g - 1] += 1
        for e, a in zip(exps, self.exponents):
            if e >= a:
                return None
        return coeff, tuple(exps)

    def structure_constants(self):
        """Cached basis-product table {(i, j): (coeff, k)}; zeros omitted."""
        if self._struct is None:
            table = {}
            for i in range(self.dim):
                ei = self._exps_cache[i]
                for j in range(self.dim):
                    res = self.multiply_monomials(ei, self._exps_cache[j])
                    if res is not None:
                        table[(i, j)] = (res[0], self.monomial_index(res[1]))
            self._struct = table
        return self._struct

    def multiply(self, u, v):
        """Product of two elements given as dicts {monomial index: coeff}."""
        field = self.field
        table = self.structure_constants()
        out = {}
        for i, ci in u.items():
            for j, cj in v.items():
                hit = table.get((i, j))
                if hit is None:
                    continue
                coeff, k = hit
                val = field.add(out.get(k, field.zero),
                                field.mul(field.mul(ci, cj), coeff))
                if val == field.zero:
                    out.pop(k, None)
                else:
                    out[k] = val
        return out

    # -- Frobenius structure ---------------------------------------------------

    def frobenius_functional(self, u):
        """Coefficient of the socle monomial in the element u."""
        return u.get(self.top_index, self.field.zero)

    def nakayama(self, k=1):
        """Diagonal twist scalars of the k-th power of the Nakayama map.

        The automorphism scales x_w by the product of q_iw^{a_i - 1} over all
        generators i; powers (including negative ones) scale accordingly.
        """
        field = self.field
        alphas = []
        for w in range(self.c):
            alpha = field.one
            for i in range(self.c):
                alpha = field.mul(alpha, scalar_pow(field, self.q[i][w],
                                                    self.exponents[i] - 1))
            alphas.append(scalar_pow(field, alpha, k))
        return tuple(alphas)

    # -- diagonal twists -------------------------------------------------------

    def identity_twist(self):
        return tuple(self.field.one for _ in range(self.c))

    def validate_twist(self, f):
        if len(f) != self.c:
            raise ValueError(f"twist needs {self.c} scalars")
        for w, alpha in enumerate(f):
            if alpha == self.field.zero:
                raise ValueError(f"twist scalar {w} must be a unit")

    def twist_compose(self, f, g):
        return tuple(self.field.mul(a, b) for a, b in zip(f, g))

    def twist_inverse(self, f):
        return tuple(self.field.inv(a) for a in f)

    def twist_pow(self, f, k):
        return tuple(scalar_pow(self.field, a, k) for a in f)

    def twist_apply(self, f, exps):
        """Scalar by which the twist acts on a monomial with these exponents."""
        value = self.field.one
        for alpha, e in zip(f, exps):
            value = self.field.mul(value, scalar_pow(self.field, alpha, e))
        return value

    # -- classification helpers (used for closed-form routing) -----------------

    def is_commutative(self):
        one = self.field.one
        return all(v == one for row in self.q for v in row)

    def is_exterior(self):
        minus_one = self.field.neg(self.field.one)
        if any(a != 2 for a in self.exponents):
            return False
        return all(self.q[i][j] == minus_one
                   for i in range(self.c) for j in range(self.c) if i != j)

    def has_equal_exponents(self):
        return len(set(self.exponents)) == 1

    def describe(self):
        field = self.field
        return {
            "field": repr(field),
            "exponents": list(self.exponents),
            "q": [[field.to_str(v) for v in row] for row in self.q],
        }

    def __repr__(self):
        return f"QciAlgebra({self.field!r}, exponents={self.exponents})"


def exterior_algebra(field, c):
    """Exterior algebra on c generators: all exponents 2, off-diagonal q = -1."""
    minus_one = field.neg(field.one)
    q = [[field.one if i == j else minus_one for j in range(c)] for i in range(c)]
    return QciAlgebra(field, (2,) * c, q)


def truncated_polynomial_algebra(field, exponents):
    """Commutative complete intersection k[x_1..x_c]/(x_w^{a_w})."""
    c = len(exponents)
    q = [[field.one for _ in range(c)] for _ in range(c)]
    return QciAlgebra(field, exponents, q)


def codim2_algebra(field, a, b, q12):
    """Two generators, x^a = y^b = 0 and x y = q y x."""
    q = [[field.one, q12], [field.inv(q12), field.one]]
    return QciAlgebra(field, (a, b), q)


# ---------------------------------------------------------------------------
# bimodules
# ---------------------------------------------------------------------------

class Bimodule:
    """A finite-dimensional bimodule given by generator action matrices.

    ``left[w]`` is the matrix of the left action of x_{w+1}, ``right[w]`` of
    the right action, both as column-sparse matrices on a basis of size
    ``dim``.  Construction verifies the defining relations: left powers and
    right powers vanish at the algebra's exponents, left actions q-commute,
    right actions q-commute contravariantly, and the two sides commute.
    """

    def __init__(self, algebra, left, right, label="", check=True):
        self.algebra = algebra
        self.field = algebra.field
        self.left = [list(m) for m in left]
        self.right = [list(m) for m in right]
        if len(self.left) != algebra.c or len(self.right) != algebra.c:
            raise ValueError("one action matrix per generator and side required")
        dims = {len(m) for m in self.left} | {len(m) for m in self.right}
        if len(dims) != 1:
            raise ValueError("action matrices must share one dimension")
        self.dim = dims.pop()
        self.label = label
        self._left_mono = {}
        self._right_mono = {}
        if check:
            self.validate()

    def validate(self):
        field = self.field
        A = self.algebra
        for w in range(A.c):
            if not mat_is_zero(mat_pow(field, self.left[w], A.exponents[w])):
                raise ValueError(f"left action of generator {w} does not nilpote "
                                 f"at exponent {A.exponents[w]}")
            if not mat_is_zero(mat_pow(field, self.right[w], A.exponents[w])):
                raise ValueError(f"right action of generator {w} does not nilpote "
                                 f"at exponent {A.exponents[w]}")
        for i in range(A.c):
            for j in range(A.c):
                if i != j:
                    lhs = mat_mul(field, self.left[i], self.left[j])
                    rhs = mat_scale(field, A.q[i][j],
                                    mat_mul(field, self.left[j], self.left[i]))
                    if not mat_eq(lhs, rhs):
                        raise ValueError(f"left actions {i},{j} violate the "
                                         "commutation relation")
                    lhs = mat_mul(field, self.right[j], self.right[i])
                    rhs = mat_scale(field, A.q[i][j],
                                    mat_mul(field, self.right[i], self.right[j]))
                    if not mat_eq(lhs, rhs):
                        raise ValueError(f"right actions {i},{j} violate the "
                                         "commutation relation")
                lhs = mat_mul(field, self.left[i], self.right[j])
                rhs = mat_mul(field, self.right[j], self.left[i])
                if not mat_eq(lhs, rhs):
                    raise ValueError(f"left action {i} and right action {j} "
                                     "do not commute")

    # monomial actions: the left action is a homomorphism, so a normal-form
    # monomial acts by L_c^{e_c} ... L_1^{e_1}; on the right the factors apply
    # in word order, giving R_1^{e_1} ... R_c^{e_c}.

    def left_monomial(self, mono_idx):
        cols = self._left_mono.get(mono_idx)
        if cols is None:
            exps = self.algebra.monomial_exps(mono_idx)
            cols = mat_identity(self.field, self.dim)
            for w in range(self.algebra.c):
                for _ in range(exps[w]):
                    cols = mat_mul(self.field, self.left[w], cols)
            self._left_mono[mono_idx] = cols
        return cols

    def right_monomial(self, mono_idx):
        cols = self._right_mono.get(mono_idx)
        if cols is None:
            exps = self.algebra.monomial_exps(mono_idx)
            cols = mat_identity(self.field, self.dim)
            for w in range(self.algebra.c - 1, -1, -1):
                for _ in range(exps[w]):
                    cols = mat_mul(self.field, self.right[w], cols)
            self._right_mono[mono_idx] = cols
        return cols

    def left_apply(self, element, vec):
        """Left action of an algebra element (dict) on a module vector (dict)."""
        out = {}
        field = self.field
        for mono, coeff in element.items():
            part = mat_apply(field, self.left_monomial(mono), vec)
            for i, v in part.items():
                val = field.add(out.get(i, field.zero), field.mul(coeff, v))
                if val == field.zero:
                    out.pop(i, None)
                else:
                    out[i] = val
        return out

    def right_apply(self, vec, element):
        out = {}
        field = self.field
        for mono, coeff in element.items():
            part = mat_apply(field, self.right_monomial(mono), vec)
            for i, v in part.items():
                val = field.add(out.get(i, field.zero), field.mul(coeff, v))
                if val == field.zero:
                    out.pop(i, None)
                else:
                    out[i] = val
        return out

    def equal_actions(self, other):
        return (self.dim == other.dim
                and all(mat_eq(a, b) for a, b in zip(self.left, other.left))
                and all(mat_eq(a, b) for a, b in zip(self.right, other.right)))

    def __repr__(self):
        tag = f" {self.label}" if self.label else ""
        return f"Bimodule(dim={self.dim}{tag})"


def twisted_bimodule(algebra, f=None, g=None, label=None):
    """The algebra itself, left action twisted by f and right action by g.

    f and g are diagonal twists (tuples of unit scalars per generator); None
    means the identity.  With both identities this is the regular bimodule.
    """
    A = algebra
    field = A.field
    if f is None:
        f = A.identity_twist()
    if g is None:
        g = A.identity_twist()
    A.validate_twist(f)
    A.validate_twist(g)
    table = A.structure_constants()
    left, right = [], []
    for w in range(1, A.c + 1):
        gi = A.generator_index(w)
        lcols, rcols = [dict() for _ in range(A.dim)], [dict() for _ in range(A.dim)]
        for j in range(A.dim):
            hit = table.get((gi, j))
            if hit is not None:
                coeff, k = hit
                val = field.mul(f[w - 1], coeff)
                if val != field.zero:
                    lcols[j][k] = val
            hit = table.get((j, gi))
            if hit is not None:
                coeff, k = hit
                val = field.mul(g[w - 1], coeff)
                if val != field.zero:
                    rcols[j][k] = val
        left.append(lcols)
        right.append(rcols)
    if label is None:
        label = "regular"
        if any(v != field.one for v in f) or any(v != field.one for v in g):
            label = "twisted"
    return Bimodule(A, left, right, label=label)


def regular_bimodule(algebra):
    return twisted_bimodule(algebra, None, None, label="regular")


def dual_bimodule(B, label=None):
    """The linear dual: actions transposed, sides exchanged."""
    field = B.field
    left = [mat_transpose(B.dim, m) for m in B.right]
    right = [mat_transpose(B.dim, m) for m in B.left]
    if label is None:
        label = f"dual({B.label})" if B.label else "dual"
    return Bimodule(B.algebra, left, right, label=label)


def retwist(B, f=None, g=None, label=None):
    """Scale the left action by a diagonal twist f and the right by g."""
    A = B.algebra
    field = B.field
    if f is None:
        f = A.identity_twist()
    if g is None:
        g = A.identity_twist()
    A.validate_twist(f)
    A.validate_twist(g)
    left = [mat_scale(field, f[w], B.left[w]) for w in range(A.c)]
    right = [mat_scale(field, g[w], B.right[w]) for w in range(A.c)]
    if label is None:
        label = f"retwist({B.label})" if B.label else "retwist"
    return Bimodule(A, left, right, label=label)
