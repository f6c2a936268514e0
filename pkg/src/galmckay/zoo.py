"""Concrete group constructors.

Everything the condition checks need is built here as a permutation
group: Suzuki groups on their ovoids, the small linear and unitary
groups on vectors or projective points, the order-168 affine normalizer
model, and the abstract torus-normalizer models with their complement
actions.  Matrix work happens only inside the constructors; groups that
support a field automorphism carry the realizing permutation as
provenance.
"""

from __future__ import annotations

from math import gcd

from .groups import (
    FiniteGroup, GroupError, GroupMap, compose, inverse, identity_perm,
    perm_order, perm_pow,
)


class ZooError(ValueError):
    pass


# -- small finite fields ---------------------------------------------------

_MODULI = {
    (2, 1): [0, 1],          # placeholder, prime field
    (2, 2): [1, 1, 1],       # x^2 + x + 1
    (2, 3): [1, 1, 0, 1],    # x^3 + x + 1
    (2, 5): [1, 0, 1, 0, 0, 1],  # x^5 + x^2 + 1
    (3, 2): [1, 0, 1],       # x^2 + 1
}


class FiniteField:
    """GF(p^k) with elements encoded as integers 0 .. p^k - 1 (base-p digits)."""

    def __init__(self, p, k):
        if (p, k) not in _MODULI and k != 1:
            raise ZooError("no modulus on file for GF(%d^%d)" % (p, k))
        self.p = p
        self.k = k
        self.q = p ** k
        self._mul = None
        if k == 1:
            return
        mod = _MODULI[(p, k)]
        q = self.q
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            da = self._digits(a)
            for b in range(a, q):
                db = self._digits(b)
                prod = [0] * (2 * k - 1)
                for i, x in enumerate(da):
                    for j, y in enumerate(db):
                        prod[i + j] = (prod[i + j] + x * y) % p
                for d in range(2 * k - 2, k - 1, -1):
                    c = prod[d]
                    if c:
                        prod[d] = 0
                        for i in range(k):
                            prod[d - k + i] = (prod[d - k + i] - c * mod[i]) % p
                v = self._undigits(prod[:k])
                mul[a][b] = v
                mul[b][a] = v
        self._mul = mul

    def _digits(self, a):
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, ds):
        v = 0
        for d in reversed(ds):
            v = v * self.p + d
        return v

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        return self._mul[a][b]

    def pow(self, a, n):
        if n == 0:
            return 1
        if a == 0:
            return 0
        n %= self.q - 1
        acc = 1
        base = a
        while n:
            if n & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            n >>= 1
        return acc

    def inv(self, a):
        if a == 0:
            raise ZooError("field inverse of zero")
        return self.pow(a, self.q - 2)

    def frob(self, a):
        return self.pow(a, self.p)

    def generator(self):
        """Smallest multiplicative generator."""
        for g in range(1, self.q):
            seen = set()
            x = 1
            for _ in range(self.q - 1):
                x = self.mul(x, g)
                seen.add(x)
            if len(seen) == self.q - 1:
                return g
        raise ZooError("no field generator found")  # pragma: no cover


# -- Suzuki groups ---------------------------------------------------------

def suzuki_group(f: int) -> FiniteGroup:
    """Sz(2^(2f+1)) on its ovoid of q^4 + 1 points (q^2 = 2^(2f+1))."""
    if f < 1:
        raise ZooError("f must be >= 1")
    k = 2 * f + 1
    F = FiniteField(2, k)
    q2 = F.q
    e_theta = 2 ** (f + 1)          # x^theta = x^(2^(f+1)); theta^2 = frobenius^1 doubling

    def theta(x):
        return F.pow(x, e_theta)

    npts = q2 * q2 + 1
    INF = 0

    def pt(x, y):
        return 1 + x * q2 + y

    def xy(i):
        i -= 1
        return divmod(i, q2)

    def translation(a, b):
        perm = [0] * npts
        perm[INF] = INF
        ta = theta(a)
        for x in range(q2):
            xa = F.add(x, a)
            base = F.add(b, F.mul(x, ta))
            for y in range(q2):
                perm[pt(x, y)] = pt(xa, F.add(y, base))
        return tuple(perm)

    def torus(lam):
        perm = [0] * npts
        perm[INF] = INF
        lt = F.mul(lam, theta(lam))
        for x in range(q2):
            lx = F.mul(lam, x)
            for y in range(q2):
                perm[pt(x, y)] = pt(lx, F.mul(lt, y))
        return tuple(perm)

    def involution():
        perm = [0] * npts
        perm[INF] = pt(0, 0)
        perm[pt(0, 0)] = INF
        for x in range(q2):
            for y in range(q2):
                if x == 0 and y == 0:
                    continue
                d = F.add(F.add(F.mul(F.mul(x, x), theta(x)),
                                F.mul(x, y)), theta(y))
                if d == 0:
                    raise ZooError("norm form vanishes off the origin")
                di = F.inv(d)
                perm[pt(x, y)] = pt(F.mul(y, di), F.mul(x, di))
        return tuple(perm)

    lam = F.generator()
    gens = [translation(1, 0), translation(0, 1), torus(lam), involution()]
    G = FiniteGroup(npts, gens, name="Sz(%d)" % q2)
    want = q2 * q2 * (q2 * q2 + 1) * (q2 - 1)
    if G.order != want:
        raise ZooError("Suzuki construction has order %d, want %d"
                       % (G.order, want))
    frob = [0] * npts
    frob[INF] = INF
    for x in range(q2):
        for y in range(q2):
            frob[pt(x, y)] = pt(F.frob(x), F.frob(y))
    G.frobenius_perm = tuple(frob)
    G.frobenius_order = k
    return G


# -- PSL2(8) and the order-168 affine model --------------------------------

def psl2_8() -> FiniteGroup:
    """PSL2(8) = SL2(8) on the 9 points of the projective line over F8."""
    F = FiniteField(2, 3)
    q = 8
    INF = q  # points 0..7 are field elements, 8 is infinity

    def moebius_perm(fn):
        perm = [0] * (q + 1)
        for i in range(q + 1):
            perm[i] = fn(i)
        return tuple(perm)

    def shift(i):
        return INF if i == INF else F.add(i, 1)

    lam = F.generator()

    def scale(i):
        return INF if i == INF else F.mul(lam, i)

    def invert(i):
        if i == INF:
            return 0
        if i == 0:
            return INF
        return F.inv(i)

    gens = [moebius_perm(shift), moebius_perm(scale), moebius_perm(invert)]
    G = FiniteGroup(q + 1, gens, name="PSL2(8)")
    if G.order != 504:
        raise ZooError("PSL2(8) construction has order %d" % G.order)
    frob = tuple(INF if i == INF else F.frob(i) for i in range(q + 1))
    G.frobenius_perm = frob
    G.frobenius_order = 3
    return G


def agl18_normalizer() -> FiniteGroup:
    """The order-168 group (C2^3 x| C7) x| C3: AGammaL(1,8) on 8 points."""
    F = FiniteField(2, 3)
    lam = F.generator()
    add1 = tuple(F.add(x, 1) for x in range(8))
    mul = tuple(F.mul(lam, x) for x in range(8))
    frob = tuple(F.frob(x) for x in range(8))
    G = FiniteGroup(8, [add1, mul, frob], name="AGL18.3")
    if G.order != 168:
        raise ZooError("affine normalizer has order %d" % G.order)
    G.frobenius_perm = frob
    G.frobenius_order = 3
    return G


# -- unitary and linear groups ---------------------------------------------

def _mat_mul(F, A, B):
    return tuple(tuple(
        _dot(F, A[i], tuple(B[t][j] for t in range(3)))
        for j in range(3)) for i in range(3))


def _dot(F, row, col):
    s = 0
    for x, y in zip(row, col):
        s = F.add(s, F.mul(x, y))
    return s


def _mat_det(F, A):
    s = 0
    for (i, j, k, sign) in ((0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1),
                            (2, 1, 0, -1), (1, 0, 2, -1), (0, 2, 1, -1)):
        t = F.mul(F.mul(A[0][i], A[1][j]), A[2][k])
        s = F.add(s, t if sign > 0 else F.neg(t))
    return s


def _is_unitary(F, A):
    """A^T J conj(A) = J for the antidiagonal form J."""
    J = ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    Ac = tuple(tuple(F.frob(x) for x in row) for row in A)
    At = tuple(tuple(A[j][i] for j in range(3)) for i in range(3))
    return _mat_mul(F, _mat_mul(F, At, J), Ac) == J


def _vec_apply(F, A, v):
    return tuple(_dot(F, row, v) for row in A)


def _su3_matrices(F):
    """Generators of SU3 over F (p^2 elements): triangular + diagonal +
    antidiagonal unitary matrices of determinant 1, found by search."""
    q = F.q
    one = 1
    found = []
    # upper unitriangular
    for a in range(q):
        for b in range(q):
            for c in range(q):
                A = ((one, a, b), (0, one, c), (0, 0, one))
                if _is_unitary(F, A) and _mat_det(F, A) == one:
                    found.append(A)
    # lower unitriangular
    for a in range(q):
        for b in range(q):
            for c in range(q):
                A = ((one, 0, 0), (a, one, 0), (b, c, one))
                if _is_unitary(F, A) and _mat_det(F, A) == one:
                    found.append(A)
    # diagonal
    for a in range(1, q):
        for b in range(1, q):
            for c in range(1, q):
                A = ((a, 0, 0), (0, b, 0), (0, 0, c))
                if _is_unitary(F, A) and _mat_det(F, A) == one:
                    found.append(A)
    # antidiagonal (Weyl representatives)
    for a in range(1, q):
        for b in range(1, q):
            for c in range(1, q):
                A = ((0, 0, a), (0, b, 0), (c, 0, 0))
                if _is_unitary(F, A) and _mat_det(F, A) == one:
                    found.append(A)
    if not found:
        raise ZooError("no unitary matrices found")  # pragma: no cover
    return found


def _vector_perm_group(F, mats, name):
    """Action on nonzero vectors of F^3."""
    q = F.q
    vecs = [(a, b, c) for a in range(q) for b in range(q) for c in range(q)
            if (a, b, c) != (0, 0, 0)]
    index = {v: i for i, v in enumerate(vecs)}
    gens = []
    for A in mats:
        gens.append(tuple(index[_vec_apply(F, A, v)] for v in vecs))
    frob = tuple(index[tuple(F.frob(x) for x in v)] for v in vecs)
    return FiniteGroup(len(vecs), gens, name=name), frob


def _projective_points(F, isotropic_only=False):
    q = F.q
    pts = []
    for a in range(q):
        for b in range(q):
            pts.append((1, a, b))
    for a in range(q):
        pts.append((0, 1, a))
    pts.append((0, 0, 1))
    if isotropic_only:
        def herm(v):
            # v^T J conj(v) for antidiagonal J
            s = F.add(F.mul(v[0], F.frob(v[2])), F.mul(v[2], F.frob(v[0])))
            return F.add(s, F.mul(v[1], F.frob(v[1])))
        pts = [v for v in pts if herm(v) == 0]
    return pts


def _normalize_proj(F, v):
    for x in v:
        if x != 0:
            xi = F.inv(x)
            return tuple(F.mul(xi, y) for y in v)
    raise ZooError("zero vector")  # pragma: no cover


def _projective_perm_group(F, mats, name, isotropic_only=False):
    pts = _projective_points(F, isotropic_only)
    pts = [_normalize_proj(F, v) for v in pts]
    index = {v: i for i, v in enumerate(pts)}
    gens = []
    for A in mats:
        gens.append(tuple(index[_normalize_proj(F, _vec_apply(F, A, v))]
                          for v in pts))
    frob = tuple(index[_normalize_proj(F, tuple(F.frob(x) for x in v))]
                 for v in pts)
    return FiniteGroup(len(pts), gens, name=name), frob


def _sl3_matrices(F):
    gens = []
    lam = F.generator() if F.q > 2 else 1
    for (i, j) in ((0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)):
        for val in {1, lam}:
            A = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
            A[i][j] = val
            gens.append(tuple(tuple(r) for r in A))
    return gens


def small_group(tag: str) -> FiniteGroup:
    """Concrete groups by tag; orders are checked on construction."""
    if tag == "psl2_8":
        return psl2_8()
    if tag == "su3_2":
        F = FiniteField(2, 2)
        G, frob = _vector_perm_group(F, _su3_matrices(F), "SU3(2)")
        if G.order != 216:
            raise ZooError("SU3(2) has order %d" % G.order)
        G.frobenius_perm = frob
        G.frobenius_order = 2
        return G
    if tag == "su3_2_ext":
        F = FiniteField(2, 2)
        G, frob = _vector_perm_group(F, _su3_matrices(F), "SU3(2)")
        H = FiniteGroup(G.degree, list(G.generators) + [frob],
                        name="SU3(2).2")
        if H.order != 432:
            raise ZooError("SU3(2).2 has order %d" % H.order)
        H.base_subgroup = G
        return H
    if tag == "su3_3":
        F = FiniteField(3, 2)
        G, frob = _projective_perm_group(F, _su3_matrices(F), "SU3(3)",
                                         isotropic_only=True)
        if G.order != 6048:
            raise ZooError("SU3(3) has order %d" % G.order)
        G.frobenius_perm = frob
        G.frobenius_order = 2
        return G
    if tag == "g2_2":
        F = FiniteField(3, 2)
        G, frob = _projective_perm_group(F, _su3_matrices(F), "SU3(3)",
                                         isotropic_only=True)
        H = FiniteGroup(G.degree, list(G.generators) + [frob], name="G2(2)")
        if H.order != 12096:
            raise ZooError("G2(2) has order %d" % H.order)
        H.base_subgroup = G
        return H
    if tag == "sl3_4":
        F = FiniteField(2, 2)
        G, frob = _vector_perm_group(F, _sl3_matrices(F), "SL3(4)")
        if G.order != 60480:
            raise ZooError("SL3(4) has order %d" % G.order)
        G.frobenius_perm = frob
        G.frobenius_order = 2
        return G
    if tag == "psl3_4":
        F = FiniteField(2, 2)
        G, frob = _projective_perm_group(F, _sl3_matrices(F), "PSL3(4)")
        if G.order != 20160:
            raise ZooError("PSL3(4) has order %d" % G.order)
        G.frobenius_perm = frob
        G.frobenius_order = 2
        return G
    raise ZooError("unknown group tag %r" % tag)


def field_automorphism(G: FiniteGroup):
    """Automorphism induced by the field map, as (GroupMap, realizer perm)."""
    r = getattr(G, "frobenius_perm", None)
    if r is None:
        raise ZooError("group %s has no field-automorphism provenance"
                       % G.name)
    images = [compose(compose(inverse(r), s), r) for s in G.generators]
    a = GroupMap(G, G, images, kind="automorphism", check=False)
    return a, r


# -- torus-normalizer models (Tables of Sylow torus normalizers) -----------

class TorusNormalizerSpec:
    """Model local group T x| W together with its building data."""

    def __init__(self, family, f, row, torus_orders, complement_tag,
                 group, torus_gens, complement_gens):
        self.family = family
        self.f = f
        self.row = row
        self.torus_orders = tuple(torus_orders)
        self.complement_tag = complement_tag
        self.group = group
        self.torus_gens = tuple(torus_gens)
        self.complement_gens = tuple(complement_gens)

    @property
    def torus_order(self):
        n = 1
        for t in self.torus_orders:
            n *= t
        return n

    def torus_subgroup(self) -> FiniteGroup:
        return FiniteGroup(self.group.degree, self.torus_gens,
                           name="T-" + self.row, cap=self.group.cap)

    def __repr__(self):
        return "TorusNormalizerSpec(%s f=%d row=%s T=%s W=%s)" % (
            self.family, self.f, self.row, self.torus_orders,
            self.complement_tag)


def _cyclic_model(n, mult, k, family, f, row, tag):
    """C_n x| C_k with the complement acting by x -> mult*x."""
    mult %= n
    if gcd(mult, n) != 1:
        raise ZooError("multiplier %d not invertible mod %d" % (mult, n))
    o = 1
    m = mult
    while m != 1:
        m = (m * mult) % n
        o += 1
    if o != k:
        raise ZooError("number-theoretic inconsistency: multiplier %d has "
                       "order %d mod %d, need %d" % (mult, o, n, k))
    t = tuple((i + 1) % n for i in range(n))
    w = tuple((mult * i) % n for i in range(n))
    G = FiniteGroup(n, [t, w], name="%s-%s" % (family, row))
    if G.order != n * k:
        raise ZooError("cyclic model has order %d, want %d"
                       % (G.order, n * k))
    return TorusNormalizerSpec(family, f, row, [n], tag, G, [t], [w])


def _matrix_complement_model(d, mats, want_order, family, f, row, tag):
    """(Z_d)^2 x| W with W given by 2x2 matrices mod d."""
    npts = d * d

    def pt(x, y):
        return x * d + y

    t1 = tuple(pt((x + 1) % d, y) for x in range(d) for y in range(d))
    t2 = tuple(pt(x, (y + 1) % d) for x in range(d) for y in range(d))
    wgens = []
    for M in mats:
        (a, b), (c, e) = M
        wgens.append(tuple(pt((a * x + b * y) % d, (c * x + e * y) % d)
                           for x in range(d) for y in range(d)))
    W = FiniteGroup(npts, wgens, name="W")
    if W.order != want_order:
        raise ZooError("complement for row %s has order %d, want %d"
                       % (row, W.order, want_order))
    G = FiniteGroup(npts, [t1, t2] + wgens,
                    name="%s-%s" % (family, row))
    if G.order != npts * want_order:
        raise ZooError("torus normalizer for row %s has order %d, want %d"
                       % (row, G.order, npts * want_order))
    return TorusNormalizerSpec(family, f, row, [d, d], tag, G,
                               [t1, t2], wgens)


def _sqrt_mod(a, d):
    a %= d
    for s in range(d):
        if (s * s) % d == a:
            return s
    return None


def _d16_mats(d):
    s = _sqrt_mod(2, d)
    if s is None:
        raise ZooError("number-theoretic inconsistency: no sqrt of 2 mod %d"
                       % d)
    si = pow(s, -1, d)
    rot = ((si % d, (-si) % d), (si % d, si % d))      # rotation by pi/4
    refl = ((1, 0), (0, d - 1))
    return [rot, refl]


def _mat2_pow(A, k, d):
    R = ((1, 0), (0, 1))
    for _ in range(k):
        R = _mat2_mul(R, A, d)
    return R


def _mat2_closure(gens, d, cap=2000):
    I2 = ((1, 0), (0, 1))
    seen = {I2}
    frontier = [I2]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = _mat2_mul(x, g, d)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
                if len(seen) > cap:
                    return None
    return seen


def _mat2_order(A, d):
    I2 = ((1, 0), (0, 1))
    o = 1
    X = A
    while X != I2:
        X = _mat2_mul(X, A, d)
        o += 1
        if o > 4 * d * d * d * d:
            raise ZooError("matrix order diverges")  # pragma: no cover
    return o


# element-order multiset of GL2(3): identity, 13 involutions, 8 of order
# 3, the 6 order-4 elements of the quaternion Sylow piece, 8 of order 6
# and 12 of order 8
_GL23_ORDERS = tuple(sorted([1] + [2] * 13 + [3] * 8 + [4] * 6
                            + [6] * 8 + [8] * 12))


def _gl23_mats(d):
    """GL2(3) of order 48 inside GL2(Z_d), by deterministic search:
    the first order-8 element plus an order-3 partner whose closure has
    order 48 and the GL2(3) element-order multiset."""
    from itertools import product
    I2 = ((1, 0), (0, 1))
    units = []
    for a, b, c, e in product(range(d), repeat=4):
        if gcd((a * e - b * c) % d, d) == 1:
            units.append(((a, b), (c, e)))
    e8 = [A for A in units
          if _mat2_pow(A, 8, d) == I2 and _mat2_pow(A, 4, d) != I2]
    e3 = [A for A in units if _mat2_pow(A, 3, d) == I2 and A != I2]
    if not e8:
        raise ZooError("no order-8 element in GL2(Z_%d)" % d)
    A = e8[0]
    for B in e3:
        cl = _mat2_closure([A, B], d, cap=48)
        if cl is not None and len(cl) == 48 and \
                tuple(sorted(_mat2_order(X, d) for X in cl)) == _GL23_ORDERS:
            return [A, B]
    raise ZooError("no GL2(3) complement found inside GL2(Z_%d)" % d)


def _mat2_mul(A, B, d):
    return tuple(tuple(sum(A[r][t] * B[t][c] for t in range(2)) % d
                       for c in range(2)) for r in range(2))


def _st8_mats(d):
    """The order-96 complex reflection group inside GL2(Z_d): generated by
    two order-4 reflections s, t with sts = tst; needs i with i^2 = -1."""
    i4 = None
    for s in range(d):
        if (s * s) % d == d - 1:
            i4 = s
            break
    if i4 is None:
        raise ZooError("number-theoretic inconsistency: no 4th root of "
                       "unity mod %d" % d)
    s_mat = ((i4, 0), (0, 1))
    # search deterministically for the second braid generator
    for a in range(d):
        for b in range(d):
            for c in range(d):
                for e in range(d):
                    t_mat = ((a, b), (c, e))
                    if (a + e) % d != (1 + i4) % d:
                        continue
                    if (a * e - b * c) % d != i4:
                        continue
                    sts = _mat2_mul(_mat2_mul(s_mat, t_mat, d), s_mat, d)
                    tst = _mat2_mul(_mat2_mul(t_mat, s_mat, d), t_mat, d)
                    if sts != tst:
                        continue
                    if b == 0 and c == 0:
                        continue
                    return [s_mat, t_mat]
    raise ZooError("no braid partner found mod %d" % d)


def _poly_values_2b2(f):
    q2 = 2 ** (2 * f + 1)
    r = 2 ** (f + 1)
    return q2, r


def _poly_values_2g2(f):
    q2 = 3 ** (2 * f + 1)
    r = 3 ** (f + 1)
    return q2, r


def torus_rows(family: str, f: int):
    """Row label -> (torus orders, complement tag, builder thunk)."""
    if family == "2B2":
        q2, r = _poly_values_2b2(f)
        return {
            "q2-1": ([q2 - 1], "C2",
                     lambda: _cyclic_model(q2 - 1, -1, 2, family, f,
                                           "q2-1", "C2")),
            "q2+r+1": ([q2 + r + 1], "C4",
                       lambda: _cyclic_model(q2 + r + 1, q2, 4, family, f,
                                             "q2+r+1", "C4")),
            "q2-r+1": ([q2 - r + 1], "C4",
                       lambda: _cyclic_model(q2 - r + 1, q2, 4, family, f,
                                             "q2-r+1", "C4")),
        }
    if family == "2G2":
        q2, r = _poly_values_2g2(f)
        half = (q2 + 1) // 2
        return {
            "q2-1": ([q2 - 1], "C2",
                     lambda: _cyclic_model(q2 - 1, -1, 2, family, f,
                                           "q2-1", "C2")),
            "q2+r+1": ([q2 + r + 1], "C6",
                       lambda: _cyclic_model(q2 + r + 1, q2, 6, family, f,
                                             "q2+r+1", "C6")),
            "q2-r+1": ([q2 - r + 1], "C6",
                       lambda: _cyclic_model(q2 - r + 1, q2, 6, family, f,
                                             "q2-r+1", "C6")),
            "(q2+1)/2x2": ([half, 2], "C6",
                           lambda: _ree_half_model(half, family, f)),
        }
    if family == "2F4":
        q2, r = _poly_values_2b2(f)
        t3 = q2 ** 2 - q2 + 1
        t4p = q2 ** 2 + 2 ** (3 * f + 2) + q2 + r + 1
        t4m = q2 ** 2 - 2 ** (3 * f + 2) + q2 - r + 1
        return {
            "(q2-1)^2": ([q2 - 1, q2 - 1], "D16",
                         lambda: _matrix_complement_model(
                             q2 - 1, _d16_mats(q2 - 1), 16, family, f,
                             "(q2-1)^2", "D16")),
            "(q2+1)^2": ([q2 + 1, q2 + 1], "GL2(3)",
                         lambda: _matrix_complement_model(
                             q2 + 1, _gl23_mats(q2 + 1), 48, family, f,
                             "(q2+1)^2", "GL2(3)")),
            "(q2+r+1)^2": ([q2 + r + 1] * 2, "ST8",
                           lambda: _matrix_complement_model(
                               q2 + r + 1, _st8_mats(q2 + r + 1), 96,
                               family, f, "(q2+r+1)^2", "ST8")),
            "(q2-r+1)^2": ([q2 - r + 1] * 2, "ST8",
                           lambda: _matrix_complement_model(
                               q2 - r + 1, _st8_mats(q2 - r + 1), 96,
                               family, f, "(q2-r+1)^2", "ST8")),
            "q4-q2+1": ([t3], "C6",
                        lambda: _cyclic_model(t3, q2, 6, family, f,
                                              "q4-q2+1", "C6")),
            "t4+": ([t4p], "C12",
                    lambda: _cyclic_model(t4p, q2, 12, family, f,
                                          "t4+", "C12")),
            "t4-": ([t4m], "C12",
                    lambda: _cyclic_model(t4m, q2, 12, family, f,
                                          "t4-", "C12")),
        }
    raise ZooError("unknown family %r" % family)


def _ree_half_model(half, family, f):
    """(C_half x C2) x| C6 with T = C2 x C2 x C_odd.

    half is even with odd part m; the C3 part of C6 cycles the three
    involutions of the 2-torsion C2 x C2 and acts by an order-3 multiplier
    on C_m, the C2 part inverts C_m.
    """
    if half % 2:
        raise ZooError("expected even torus half-order, got %d" % half)
    m = half // 2
    mult3 = None
    for c in range(2, m):
        if gcd(c, m) == 1 and (c ** 3) % m == 1 and c != 1:
            mult3 = c
            break
    if mult3 is None:
        raise ZooError("number-theoretic inconsistency: no order-3 "
                       "multiplier mod %d" % m)
    # points: (a, b, x) with a, b in Z2, x in Z_m
    npts = 4 * m

    def pt(a, b, x):
        return (a * 2 + b) * m + x

    ga = tuple(pt(1 - a, b, x) for a in range(2) for b in range(2)
               for x in range(m))
    gb = tuple(pt(a, 1 - b, x) for a in range(2) for b in range(2)
               for x in range(m))
    gx = tuple(pt(a, b, (x + 1) % m) for a in range(2) for b in range(2)
               for x in range(m))
    # order 3: (a,b) -> (b, a+b) mod 2, x -> mult3 * x
    w3 = tuple(pt(b, (a + b) % 2, (mult3 * x) % m)
               for a in range(2) for b in range(2) for x in range(m))
    # order 2: invert the odd part
    w2 = tuple(pt(a, b, (-x) % m) for a in range(2) for b in range(2)
               for x in range(m))
    G = FiniteGroup(npts, [ga, gb, gx, w3, w2],
                    name="%s-(q2+1)/2x2" % family)
    if G.order != npts * 6:
        raise ZooError("Ree half model has order %d, want %d"
                       % (G.order, npts * 6))
    return TorusNormalizerSpec(family, f, "(q2+1)/2x2", [2, 2, m], "C6",
                               G, [ga, gb, gx], [w3, w2])


def torus_normalizer(family: str, f: int, p: int) -> TorusNormalizerSpec:
    """The torus-normalizer model for the row whose torus order p divides."""
    rows = torus_rows(family, f)
    matches = []
    for label, (orders, tag, build) in rows.items():
        n = 1
        for t in orders:
            n *= t
        if n % p == 0:
            matches.append((label, build))
    if not matches:
        raise ZooError("prime %d divides no torus order for %s at f=%d"
                       % (p, family, f))
    # a prime can divide several rows only through shared small factors;
    # prefer the row where p divides an odd cyclotomic-value factor
    label, build = matches[0]
    return build()
