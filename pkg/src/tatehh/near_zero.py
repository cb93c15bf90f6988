"""The socle-crossing segment of a complete bimodule resolution.

Over the enveloping algebra (products (u (x) v)(u' (x) v') = uu' (x) v'v) the
element

    s = sum over exponent tuples i of
        (prod_{u<v} q_uv^{-i_v (a_u - i_u - 1)}) x^i (x) x^{a-1-i}

right-multiplies the free rank-one module into itself with image the socle
line, and the map f sends the w-th free generator to right multiplication by
1 (x) x_w - x_w (x) 1.  ``check_exactness_claim`` verifies exactly the two
facts this hinges on: f followed by s is zero, and the dim A shifted copies
(x^j (x) 1) s are linearly independent.

Tensoring the segment with a one-sided diagonal twist of the algebra yields a
three-term window whose middle homology is the degree-0 stable Hochschild
dimension.  Its two maps are built twice, by independent routes:

  * literally, from the published coefficient formulas (d_1 has the single
    output coefficient alpha_w prod_{i>=w} q_wi^{u_i} - prod_{j<=w} q_jw^{u_j},
    d_0 kills every monomial except 1, which it sends to the socle monomial
    scaled by prod_w (1 + alpha_w + ... + alpha_w^{a_w - 1}));
  * structurally, as the induced right action of 1 (x) x_w - x_w (x) 1 and of
    s on the twisted bimodule.

The two routes must agree entrywise; tests enforce that, construction here
does not collapse them.
"""

from .exact_field import scalar_pow
from .sparse_linalg import ChainComplexWindow, SparseMatrix

# ---------------------------------------------------------------------------
# elements of the enveloping algebra: dicts {pair index: scalar}, the pair
# (left monomial l, right monomial r) indexed as l + dim A * r
# ---------------------------------------------------------------------------


def env_dim(A):
    return A.dim * A.dim


def env_index(A, left, right):
    return left + A.dim * right


def env_pair(A, idx):
    return idx % A.dim, idx // A.dim


def env_multiply(A, u, v):
    """Product in A (x) A-opposite: (u1 (x) u2)(v1 (x) v2) = u1 v1 (x) v2 u2."""
    field = A.field
    table = A.structure_constants()
    out = {}
    for iu, cu in u.items():
        l1, r1 = env_pair(A, iu)
        for iv, cv in v.items():
            l2, r2 = env_pair(A, iv)
            left = table.get((l1, l2))
            if left is None:
                continue
            right = table.get((r2, r1))
            if right is None:
                continue
            coeff = field.mul(field.mul(cu, cv),
                              field.mul(left[0], right[0]))
            key = env_index(A, left[1], right[1])
            acc = field.add(out.get(key, field.zero), coeff)
            if acc == field.zero:
                out.pop(key, None)
            else:
                out[key] = acc
    return out


def generator_difference(A, t):
    """The element 1 (x) x_t - x_t (x) 1 (t is 1-based)."""
    g = A.generator_index(t)
    one = A.field.one
    return {env_index(A, 0, g): one,
            env_index(A, g, 0): A.field.neg(one)}


def build_s(A):
    """The socle-crossing element s, with one term per basis monomial."""
    field = A.field
    out = {}
    for idx in range(A.dim):
        exps = A.monomial_exps(idx)
        coeff = field.one
        for u in range(A.c):
            for v in range(u + 1, A.c):
                power = -exps[v] * (A.exponents[u] - exps[u] - 1)
                coeff = field.mul(coeff, scalar_pow(field, A.q[u][v], power))
        partner = tuple(a - e - 1 for a, e in zip(A.exponents, exps))
        out[env_index(A, idx, A.monomial_index(partner))] = coeff
    return out


def check_exactness_claim(A):
    """Whether f then s vanishes and the shifted copies of s are independent.

    Returns a plain boolean; False means the construction does not behave as
    published for this algebra, which the callers treat as an alarm.
    """
    s = build_s(A)
    for t in range(1, A.c + 1):
        if env_multiply(A, generator_difference(A, t), s):
            return False
    field = A.field
    entries = {}
    for j in range(A.dim):
        shifted = env_multiply(A, {env_index(A, j, 0): field.one}, s)
        for idx, coeff in shifted.items():
            entries[(j, idx)] = coeff
    copies = SparseMatrix.from_dict(field, A.dim, env_dim(A), entries)
    return copies.rank() == A.dim


# ---------------------------------------------------------------------------
# the degree-0 window for a left-twisted bimodule
# ---------------------------------------------------------------------------


def d1_matrix(A, psi):
    """Literal first map: domain has c blocks of monomials, block w for the
    w-th free generator; single output per basis vector."""
    A.validate_twist(psi)
    field = A.field
    entries = {}
    for w in range(1, A.c + 1):
        for idx in range(A.dim):
            exps = A.monomial_exps(idx)
            if exps[w - 1] + 1 == A.exponents[w - 1]:
                continue
            left = psi[w - 1]
            for i in range(w - 1, A.c):
                left = field.mul(left, scalar_pow(field, A.q[w - 1][i], exps[i]))
            right = field.one
            for j in range(w):
                right = field.mul(right, scalar_pow(field, A.q[j][w - 1], exps[j]))
            coeff = field.sub(left, right)
            if coeff == field.zero:
                continue
            target = list(exps)
            target[w - 1] += 1
            entries[(A.monomial_index(tuple(target)),
                     idx + A.dim * (w - 1))] = coeff
    return SparseMatrix.from_dict(field, A.dim, A.dim * A.c, entries)


def d0_matrix(A, psi):
    """Literal zeroth map: kills every monomial except 1, which goes to the
    socle monomial scaled by the product of twist geometric sums."""
    A.validate_twist(psi)
    field = A.field
    total = field.one
    for w in range(A.c):
        geo = field.zero
        power = field.one
        for _ in range(A.exponents[w]):
            geo = field.add(geo, power)
            power = field.mul(power, psi[w])
        total = field.mul(total, geo)
    entries = {}
    if total != field.zero:
        entries[(A.top_index, 0)] = total
    return SparseMatrix.from_dict(field, A.dim, A.dim, entries)


def _twisted_right_env_action(A, psi, element):
    """Matrix of b -> b . element on the psi-left-twisted algebra.

    The right action of l (x) r multiplies b by r on the left through the
    twist and by l on the right: b . (l (x) r) = psi(r) (r b l).
    """
    field = A.field
    table = A.structure_constants()
    entries = {}
    for key, coeff in element.items():
        l, r = env_pair(A, key)
        chi = A.twist_apply(psi, A.monomial_exps(r))
        for b in range(A.dim):
            first = table.get((r, b))
            if first is None:
                continue
            second = table.get((first[1], l))
            if second is None:
                continue
            value = field.mul(field.mul(coeff, chi),
                              field.mul(first[0], second[0]))
            pos = (second[1], b)
            acc = field.add(entries.get(pos, field.zero), value)
            if acc == field.zero:
                entries.pop(pos, None)
            else:
                entries[pos] = acc
    return entries


def d0_matrix_via_s(A, psi):
    """Structural zeroth map: the right action of s."""
    A.validate_twist(psi)
    return SparseMatrix.from_dict(A.field, A.dim, A.dim,
                                  _twisted_right_env_action(A, psi, build_s(A)))


def d1_matrix_via_f(A, psi):
    """Structural first map: block w is the right action of
    1 (x) x_w - x_w (x) 1."""
    A.validate_twist(psi)
    entries = {}
    for w in range(1, A.c + 1):
        block = _twisted_right_env_action(A, psi, generator_difference(A, w))
        for (i, b), v in block.items():
            entries[(i, b + A.dim * (w - 1))] = v
    return SparseMatrix.from_dict(A.field, A.dim, A.dim * A.c, entries)


def zeromaps_window(A, psi):
    """Three-term window (A^c, A, A) with the literal maps; middle homology
    is the degree-0 stable dimension for the psi-left-twisted coefficients."""
    d1 = d1_matrix(A, psi)
    d0 = d0_matrix(A, psi)
    return ChainComplexWindow([1, 0, -1],
                              {1: A.dim * A.c, 0: A.dim, -1: A.dim},
                              {1: d1, 0: d0})


def tate_hh0(A, psi):
    """Degree-0 stable Hochschild dimension with psi-left-twisted coefficients."""
    return zeromaps_window(A, psi).homology_dim(0)
