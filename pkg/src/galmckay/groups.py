"""Permutation-group kernel.

Groups are generated by permutations stored as tuples (point i maps to
p[i]).  Composition is left-to-right: compose(p, q) applies p first.
Order and membership for large groups go through a stabilizer chain
(sympy's implementation); conjugacy classes, power maps, Sylow
subgroups and normalizers are computed here on a full element
enumeration, which is capped.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, lcm

from sympy.combinatorics import Permutation, PermutationGroup

ENUMERATION_CAP = 20_000_000


class GroupError(ValueError):
    pass


class GroupTooLargeError(GroupError):
    pass


# -- permutation helpers ---------------------------------------------------

def identity_perm(degree: int) -> tuple:
    return tuple(range(degree))


def compose(p: tuple, q: tuple) -> tuple:
    """Apply p, then q."""
    return tuple(map(q.__getitem__, p))


def inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def conjugate(x: tuple, g: tuple) -> tuple:
    """g^-1 x g (x conjugated by g)."""
    gi = inverse(g)
    return compose(compose(gi, x), g)


def perm_order(p: tuple) -> int:
    n = len(p)
    seen = [False] * n
    o = 1
    for i in range(n):
        if not seen[i]:
            ln = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                ln += 1
            o = lcm(o, ln)
    return o


def perm_pow(p: tuple, k: int) -> tuple:
    n = len(p)
    if k < 0:
        return perm_pow(inverse(p), -k)
    acc = identity_perm(n)
    base = p
    while k:
        if k & 1:
            acc = compose(acc, base)
        base = compose(base, base)
        k >>= 1
    return acc


def is_perm(p, degree) -> bool:
    return len(p) == degree and sorted(p) == list(range(degree))


# -- conjugacy class record ------------------------------------------------

class ConjClass:
    __slots__ = ("rep", "size", "element_order", "indices")

    def __init__(self, rep, size, element_order, indices):
        self.rep = rep
        self.size = size
        self.element_order = element_order
        self.indices = indices  # tuple of element indices, sorted

    def __repr__(self):
        return "ConjClass(order=%d, size=%d)" % (self.element_order, self.size)


class FiniteGroup:
    """Permutation group with cached enumeration and class data."""

    def __init__(self, degree, generators, name="G", cap=ENUMERATION_CAP):
        gens = []
        ident = identity_perm(degree)
        for g in generators:
            g = tuple(g)
            if not is_perm(g, degree):
                raise GroupError("bad generator for degree %d: %r" % (degree, g))
            if g != ident and g not in gens:
                gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self.cap = cap
        self._order = None
        self._elements = None
        self._index = None
        self._parents = None
        self._classes = None
        self._class_of = None
        self._sympy = None

    # -- order & membership ----------------------------------------------

    def _sympy_group(self):
        if self._sympy is None:
            if not self.generators:
                self._sympy = PermutationGroup(
                    Permutation(list(range(self.degree))))
            else:
                self._sympy = PermutationGroup(
                    [Permutation(list(g)) for g in self.generators])
        return self._sympy

    @property
    def order(self) -> int:
        if self._order is None:
            if not self.generators:
                self._order = 1
            else:
                self._order = int(self._sympy_group().order())
        return self._order

    def __contains__(self, p) -> bool:
        p = tuple(p)
        if self._index is not None:
            return p in self._index
        if p == identity_perm(self.degree):
            return True
        if not self.generators:
            return False
        return self._sympy_group().contains(Permutation(list(p)), strict=True)

    def __len__(self):
        return self.order

    # -- enumeration ------------------------------------------------------

    def _enumerate(self):
        if self._elements is not None:
            return
        if self.order > self.cap:
            raise GroupTooLargeError(
                "group of order %d too large for enumeration (cap %d)"
                % (self.order, self.cap))
        ident = identity_perm(self.degree)
        elements = [ident]
        index = {ident: 0}
        parents = [(-1, -1)]
        gens = self.generators
        head = 0
        while head < len(elements):
            e = elements[head]
            for gi, g in enumerate(gens):
                ne = compose(e, g)
                if ne not in index:
                    index[ne] = len(elements)
                    elements.append(ne)
                    parents.append((head, gi))
            head += 1
        assert len(elements) == self.order
        self._elements = elements
        self._index = index
        self._parents = parents

    @property
    def elements(self) -> list:
        self._enumerate()
        return self._elements

    @property
    def element_index(self) -> dict:
        self._enumerate()
        return self._index

    @property
    def parents(self) -> list:
        """(parent element index, generator index) per element; BFS words."""
        self._enumerate()
        return self._parents

    # -- conjugacy classes -------------------------------------------------

    def _compute_classes(self):
        if self._classes is not None:
            return
        self._enumerate()
        elements = self._elements
        index = self._index
        n = len(elements)
        gen_pairs = [(inverse(g), g) for g in self.generators]
        class_of = [-1] * n
        raw = []
        for start in range(n):
            if class_of[start] >= 0:
                continue
            cid = len(raw)
            class_of[start] = cid
            orbit = [start]
            head = 0
            while head < len(orbit):
                x = elements[orbit[head]]
                for gi, g in gen_pairs:
                    y = compose(compose(gi, x), g)
                    yi = index[y]
                    if class_of[yi] < 0:
                        class_of[yi] = cid
                        orbit.append(yi)
                head += 1
            orbit.sort()
            raw.append(orbit)
        # deterministic ordering: element order, class size, minimal index
        keyed = []
        for orbit in raw:
            rep = elements[orbit[0]]
            keyed.append((perm_order(rep), len(orbit), orbit[0], orbit))
        keyed.sort(key=lambda t: t[:3])
        classes = []
        new_class_of = [-1] * n
        for cid, (eo, size, mi, orbit) in enumerate(keyed):
            classes.append(ConjClass(elements[mi], size, eo, tuple(orbit)))
            for i in orbit:
                new_class_of[i] = cid
        self._classes = classes
        self._class_of = new_class_of

    @property
    def conjugacy_classes(self) -> list:
        self._compute_classes()
        return self._classes

    @property
    def class_of(self) -> list:
        """element index -> class index."""
        self._compute_classes()
        return self._class_of

    def class_of_element(self, p) -> int:
        self._compute_classes()
        return self._class_of[self._index[tuple(p)]]

    def power_map(self, c: int, k: int) -> int:
        """Class index of g^k for g in class c."""
        rep = self.conjugacy_classes[c].rep
        return self.class_of_element(perm_pow(rep, k))

    @property
    def exponent(self) -> int:
        m = 1
        for cl in self.conjugacy_classes:
            m = lcm(m, cl.element_order)
        return m

    def centralizer_order(self, c: int) -> int:
        return self.order // self.conjugacy_classes[c].size

    # -- subgroups ---------------------------------------------------------

    def subgroup(self, gens, name=None) -> "FiniteGroup":
        for g in gens:
            if tuple(g) not in self:
                raise GroupError("generator not in group")
        return FiniteGroup(self.degree, gens, name or self.name + "-sub",
                           cap=self.cap)

    def sylow_subgroup(self, p: int) -> "FiniteGroup":
        if self.order % p:
            raise GroupError("%d does not divide group order %d"
                             % (p, self.order))
        target = 1
        o = self.order
        while o % p == 0:
            target *= p
            o //= p
        gens: list = []
        P = self.subgroup(gens, name="P")
        while P.order < target:
            N = self if not gens else self.normalizer(P)
            grew = False
            for x in N.elements:
                o = perm_order(x)
                m = o
                while m % p == 0:
                    m //= p
                y = perm_pow(x, m)  # p-part of x
                if y != identity_perm(self.degree) and y not in P:
                    gens.append(y)
                    P = self.subgroup(gens, name="P")
                    grew = True
                    break
            if not grew:
                raise GroupError("Sylow saturation failed")  # pragma: no cover
        return P

    def normalizer(self, H: "FiniteGroup") -> "FiniteGroup":
        """N_G(H) via orbit-stabilizer on the conjugates of H."""
        if H.degree != self.degree:
            raise GroupError("degree mismatch")
        base = frozenset(H.elements)
        ident = identity_perm(self.degree)
        orbit = {base: ident}
        queue = [base]
        stab = set()
        while queue:
            S = queue.pop(0)
            t = orbit[S]
            for g in self.generators:
                gi = inverse(g)
                Sg = frozenset(compose(compose(gi, x), g) for x in S)
                u = orbit.get(Sg)
                if u is None:
                    orbit[Sg] = compose(t, g)
                    queue.append(Sg)
                else:
                    sch = compose(compose(t, g), inverse(u))
                    if sch != ident:
                        stab.add(sch)
        N = FiniteGroup(self.degree, sorted(stab),
                        name="N_%s" % (H.name,), cap=self.cap)
        assert self.order % (N.order or 1) == 0
        assert N.order * len(orbit) == self.order
        return N

    def __repr__(self):
        return "FiniteGroup(%s, degree=%d, gens=%d)" % (
            self.name, self.degree, len(self.generators))


# -- homomorphisms ---------------------------------------------------------

class GroupMap:
    """Map between groups given by generator images, checked elementwise."""

    def __init__(self, source: FiniteGroup, target: FiniteGroup, images,
                 kind="homomorphism", check=True):
        images = [tuple(g) for g in images]
        if len(images) != len(source.generators):
            raise GroupError("need one image per generator")
        for g in images:
            if g not in target:
                raise GroupError("image not in target group")
        self.source = source
        self.target = target
        self.images = tuple(images)
        self.kind = kind
        self._table = None
        if check:
            self._check()

    @property
    def table(self) -> list:
        """Target element per source element index."""
        if self._table is None:
            src = self.source
            tbl = [None] * src.order
            tbl[0] = identity_perm(self.target.degree)
            for i in range(1, src.order):
                pi, gi = src.parents[i]
                tbl[i] = compose(tbl[pi], self.images[gi])
            self._table = tbl
        return self._table

    def _check(self):
        src = self.source
        tbl = self.table
        index = src.element_index
        for i, e in enumerate(src.elements):
            for gi, g in enumerate(src.generators):
                k = index[compose(e, g)]
                if compose(tbl[i], self.images[gi]) != tbl[k]:
                    raise GroupError("generator images do not define a "
                                     "homomorphism")
        if self.kind == "automorphism":
            if self.source is not self.target and \
                    (self.source.degree != self.target.degree or
                     self.source.order != self.target.order):
                raise GroupError("automorphism endpoints differ")
            if len(set(tbl)) != src.order:
                raise GroupError("map is not bijective")

    def apply(self, elem) -> tuple:
        return self.table[self.source.element_index[tuple(elem)]]

    def index_map(self) -> tuple:
        """Permutation of element indices (automorphisms only)."""
        idx = self.source.element_index
        return tuple(idx[t] for t in self.table)

    def compose_with(self, other: "GroupMap") -> "GroupMap":
        """self then other."""
        if other.source is not self.target:
            raise GroupError("maps not composable")
        imgs = [other.apply(t) for t in self.images]
        return GroupMap(self.source, other.target, imgs, kind=self.kind,
                        check=False)

    def is_identity(self) -> bool:
        return all(t == e for t, e in zip(self.table, self.source.elements))

    def map_order(self) -> int:
        acc = self
        o = 1
        while not acc.is_identity():
            acc = acc.compose_with(self)
            o += 1
            if o > self.source.order:
                raise GroupError("not an automorphism of finite order")
        return o

    def is_inner(self) -> bool:
        for g in self.source.elements:
            if all(conjugate(s, g) == im
                   for s, im in zip(self.source.generators, self.images)):
                return True
        return False


def identity_map(G: FiniteGroup) -> GroupMap:
    return GroupMap(G, G, G.generators, kind="automorphism", check=False)


def induced_class_permutation(G: FiniteGroup, a: GroupMap) -> tuple:
    """Permutation of class indices induced by the automorphism a."""
    return tuple(G.class_of_element(a.apply(cl.rep))
                 for cl in G.conjugacy_classes)


# -- semidirect products ---------------------------------------------------

class SemidirectProduct:
    """G ⋊ C_k with an embedding of G and the complement generator.

    `embed` sends an element of G to the corresponding permutation of the
    product group; `comp_gen` is the distinguished generator of the cyclic
    complement.  Conjugation by comp_gen induces the defining automorphism.
    """

    def __init__(self, group, base, embed, comp_gen, k):
        self.group = group
        self.base = base
        self.embed = embed
        self.comp_gen = comp_gen
        self.k = k

    def embedded_subgroup(self) -> FiniteGroup:
        gens = [self.embed(g) for g in self.base.generators]
        return FiniteGroup(self.group.degree, gens,
                           name=self.base.name + "-in-" + self.group.name,
                           cap=self.group.cap)


def semidirect_product(G: FiniteGroup, a: GroupMap, k: int,
                       realizer=None) -> SemidirectProduct:
    """Build G ⋊ <c> with c of order k acting by the automorphism a.

    The convention is c^-1 g c = a(g).  With a realizer permutation r on
    the same points (r^k = 1, conjugation by r inducing a on G) the
    product lives on the same point set; otherwise a right-regular action
    on pairs (element of G, power of c) is used.
    """
    if k < 1:
        raise GroupError("k must be positive")
    acc = a
    for _ in range(k - 1):
        acc = acc.compose_with(a)
    if not acc.is_identity():
        raise GroupError("automorphism^k is not the identity")

    if realizer is not None:
        r = tuple(realizer)
        if perm_pow(r, k) != identity_perm(G.degree):
            raise GroupError("realizer^k is not the identity")
        for s, im in zip(G.generators, a.images):
            if conjugate(s, r) != im:
                raise GroupError("realizer does not induce the automorphism")
        H = FiniteGroup(G.degree, list(G.generators) + [r],
                        name=G.name + ".%d" % k, cap=G.cap)
        if H.order != k * G.order:
            raise GroupError("realizer lies in the group or has extra order "
                             "(got %d, want %d)" % (H.order, k * G.order))
        return SemidirectProduct(H, G, lambda g: tuple(g), r, k)

    # abstract construction on pairs (x, u), x in G, u in Z_k,
    # with (x, u)(g, v) = (x * a^-u(g), u + v)
    n = G.order
    idx = G.element_index
    amap = a.index_map()
    ainv = inverse(amap)
    apow = [tuple(range(n))]
    for _ in range(k - 1):
        apow.append(compose(apow[-1], ainv))

    def point(i, u):
        return i * k + u

    def right_mult_perm(g):
        gidx = idx[g]
        out = [0] * (n * k)
        for u in range(k):
            gu = G.elements[apow[u][gidx]]
            for i in range(n):
                ne = idx[compose(G.elements[i], gu)]
                out[point(i, u)] = point(ne, u)
        return tuple(out)

    gens = []
    for g in G.generators:
        gens.append(right_mult_perm(g))
    c_perm = [0] * (n * k)
    for i in range(n):
        for u in range(k):
            c_perm[point(i, u)] = point(i, (u + 1) % k)
    gens.append(tuple(c_perm))
    H = FiniteGroup(n * k, gens, name=G.name + ":%d" % k)
    if H.order != n * k:
        raise GroupError("semidirect product has wrong order")  # pragma: no cover

    def embed(g):
        return right_mult_perm(tuple(g))

    return SemidirectProduct(H, G, embed, tuple(c_perm), k)


# -- small standard groups (used by tests and local models) ----------------

def cyclic_group(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup(1, [], name="C1")
    return FiniteGroup(n, [tuple((i + 1) % n for i in range(n))],
                       name="C%d" % n)


def symmetric_group(n: int) -> FiniteGroup:
    if n < 2:
        return FiniteGroup(max(n, 1), [], name="S%d" % n)
    cyc = tuple(list(range(1, n)) + [0])
    tr = tuple([1, 0] + list(range(2, n)))
    return FiniteGroup(n, [cyc, tr], name="S%d" % n)
