"""Character extensions to cyclic semidirect products and invariance tests.

Given a group M, a cyclic group A = <a> of automorphisms, and a character
psi of M, the stabilizer A_psi is cyclic and psi extends to M x| A_psi in
exactly |A_psi| ways (Gallagher).  This module enumerates the extensions
by brute restriction matching and searches for one fixed by every pair
(a^j, sigma) in the joint stabilizer of psi, where sigma runs over a
group of Galois automorphisms.
"""

from .cyclo import ONE, ZERO
from .groups import (
    FiniteGroup, GroupMap, SemidirectProduct,
    conjugate, perm_pow, identity_perm, identity_map,
    semidirect_product, induced_class_permutation,
)
from .chartab import (
    CharacterTable, ClassFunction, dixon_schneider, induce, inner_product,
)
from .galois import GaloisElement, act_on_table


class ExtendError(Exception):
    pass


def _action_class_perms(table, action, k):
    """Class permutation of M induced by a^j for j = 0..k-1."""
    M = table.group
    perms = [tuple(range(len(table.classes)))]
    acc = action
    for _ in range(k - 1):
        perms.append(induced_class_permutation(M, acc))
        acc = acc.compose_with(action)
    if not acc.is_identity():
        raise ExtendError("action does not have order dividing %d" % k)
    return perms


def _apply_class_perm(values, cperm):
    """Values of chi composed with the automorphism whose class map is cperm."""
    return tuple(values[c] for c in cperm)


class ExtensionSet:
    """All extensions of one character to M x| A_psi."""

    def __init__(self, base_table, base_row, action, k, d, product,
                 table, fusion, rows):
        self.base_table = base_table
        self.base_row = base_row
        self.action = action
        self.k = k
        self.d = d
        self.a_psi_order = k // d
        self.product = product
        self.table = table
        self.fusion = tuple(fusion)
        self.rows = tuple(rows)


class ExtensionWitness:
    """One extension together with its joint-stabilizer invariance report."""

    def __init__(self, extension_set, extension_row, invariance):
        self.extension_set = extension_set
        self.base_row = extension_set.base_row
        self.extension_row = extension_row
        self.invariance = tuple(invariance)
        self.invariant = all(ok for _, _, ok in self.invariance)


def find_extensions(table: CharacterTable, action: GroupMap, k: int,
                    row: int, realizer=None, cache=None) -> ExtensionSet:
    """All rows of Irr(M x| A_psi) restricting to table.rows[row].

    An optional cache dict (private to one (table, action, k) triple)
    stores the semidirect product and its table per stabilizer index d.
    """
    M = table.group
    if action.source is not M or action.target is not M:
        raise ExtendError("action is not an automorphism of the table group")
    psi = table.rows[row]
    cperms = _action_class_perms(table, action, k)
    d = next(j for j in range(1, k + 1)
             if k % j == 0
             and _apply_class_perm(psi.values, cperms[j % k]) == psi.values)
    q = k // d
    if q == 1:
        product = SemidirectProduct(M, M, lambda g: tuple(g),
                                    identity_perm(M.degree), 1)
        fusion = tuple(range(len(table.classes)))
        return ExtensionSet(table, row, action, k, d, product, table,
                            fusion, (row,))
    if cache is not None and d in cache:
        product, big, fusion = cache[d]
    else:
        act_d = action
        for _ in range(d - 1):
            act_d = act_d.compose_with(action)
        r_d = perm_pow(tuple(realizer), d) if realizer is not None else None
        product = semidirect_product(M, act_d, q, realizer=r_d)
        big = dixon_schneider(product.group)
        fusion = tuple(product.group.class_of_element(product.embed(cl.rep))
                       for cl in table.classes)
        if cache is not None:
            cache[d] = (product, big, fusion)
    rows = []
    for i, chi in enumerate(big.rows):
        if all(chi.values[fusion[c]] == psi.values[c]
               for c in range(len(table.classes))):
            rows.append(i)
    if len(rows) != q:
        raise ExtendError("Gallagher count violated: %d extensions, "
                          "expected %d" % (len(rows), q))
    return ExtensionSet(table, row, action, k, d, product, big, fusion, rows)


def joint_stabilizer(table: CharacterTable, action: GroupMap, k: int,
                     row: int, H) -> list:
    """Pairs (j, sigma) with psi composed with a^j then sigma equal to psi."""
    psi = table.rows[row]
    cperms = _action_class_perms(table, action, k)
    pairs = []
    for j in range(k):
        moved = _apply_class_perm(psi.values, cperms[j])
        for sigma in H:
            if all(sigma.apply(v) == w
                   for v, w in zip(moved, psi.values)):
                pairs.append((j, sigma))
    return pairs


def _gamma_row_perm(ext: ExtensionSet, j: int, realizer=None):
    """Row permutation of the extension table induced by a^j."""
    Gt = ext.product.group
    nrows = len(ext.table.rows)
    if j % ext.k == 0:
        return tuple(range(nrows))
    if ext.a_psi_order == 1 and Gt is ext.base_table.group:
        M = ext.base_table.group
        cperms = _action_class_perms(ext.base_table, ext.action, ext.k)
        cperm = cperms[j % ext.k]
    elif realizer is not None:
        rj = perm_pow(tuple(realizer), j)
        imgs = [conjugate(g, rj) for g in Gt.generators]
        gmap = GroupMap(Gt, Gt, imgs, kind="automorphism")
        cperm = induced_class_permutation(Gt, gmap)
    else:
        # abstract product: generators are the embedded base generators
        # followed by the complement generator, which the action fixes
        acc = identity_map(ext.base_table.group)
        for _ in range(j):
            acc = acc.compose_with(ext.action)
        imgs = [ext.product.embed(acc.apply(g))
                for g in ext.base_table.group.generators]
        imgs.append(ext.product.comp_gen)
        gmap = GroupMap(Gt, Gt, imgs, kind="automorphism")
        cperm = induced_class_permutation(Gt, gmap)
    perm = []
    for chi in ext.table.rows:
        image = ClassFunction(Gt, _apply_class_perm(chi.values, cperm))
        perm.append(ext.table.row_index(image))
    return tuple(perm)


def invariant_extension_exists(table: CharacterTable, action: GroupMap,
                               k: int, row: int, H, realizer=None,
                               cache=None):
    """Search the extensions of a row for a joint-stabilizer-fixed one.

    Returns an ExtensionWitness; .invariant reports success.  The Galois
    group H must have modulus divisible by the extension table exponent.
    """
    ext = find_extensions(table, action, k, row, realizer=realizer,
                          cache=cache)
    pairs = joint_stabilizer(table, action, k, row, H)
    shared = cache if cache is not None else {}
    reports = []
    for i in ext.rows:
        report = []
        for j, sigma in pairs:
            gk = ("gamma", ext.d, j)
            sk = ("sigma", ext.d, sigma.b)
            if gk not in shared:
                shared[gk] = _gamma_row_perm(ext, j, realizer=realizer)
            if sk not in shared:
                shared[sk] = act_on_table(ext.table, sigma)
            image = shared[sk][shared[gk][i]]
            report.append((j, sigma.b, image == i))
        reports.append(report)
        if all(ok for _, _, ok in report):
            return ExtensionWitness(ext, i, report)
    return ExtensionWitness(ext, ext.rows[0], reports[0])


def unique_multiplicity_one_extension(ext: ExtensionSet, X: FiniteGroup,
                                      tau_hat: ClassFunction) -> int:
    """The unique extension row occurring once in an induced character.

    X is a subgroup of the extension product group carrying tau_hat, an
    invariant extension of a character below the base row.  Exactly one
    member of ext.rows may occur in the induction, with multiplicity one.
    """
    Gt = ext.product.group
    if tau_hat.group is not X:
        raise ExtendError("tau_hat is not a class function on X")
    ind = induce(Gt, X, tau_hat)
    hits = []
    for i in ext.rows:
        ip = inner_product(ind, ext.table.rows[i])
        if ip != ZERO:
            hits.append((i, ip))
    if len(hits) != 1 or hits[0][1] != ONE:
        raise ExtendError("induced character does not single out one "
                          "extension with multiplicity one")
    return hits[0][0]
