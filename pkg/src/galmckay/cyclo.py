"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in a canonical basis built as the tensor product of
power bases of the prime-power subfields: for n = prod p^a, a basis
monomial is a product of zeta_{p^a}^c with 0 <= c < phi(p^a).  Forbidden
exponents are rewritten with the relation

    zeta^{(p-1)p^(a-1)} = -(1 + zeta^{p^(a-1)} + ... + zeta^{(p-2)p^(a-1)}),

and the order is always reduced to the minimal n' | n containing the
element, so two values are equal iff their representations coincide.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable


class CycloError(ValueError):
    pass


class CycloDivisionError(CycloError):
    """Division by the zero cyclotomic."""


def _factor_prime_powers(n: int) -> tuple[tuple[int, int], ...]:
    """Return ((p, a), ...) with p ascending and n = prod p^a."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            a = 0
            while n % d == 0:
                n //= d
                a += 1
            out.append((d, a))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def _phi_pp(p: int, a: int) -> int:
    return p ** a - p ** (a - 1)


class Cyclotomic:
    """Immutable exact element of some Q(zeta_n), kept in canonical form."""

    __slots__ = ("pps", "coeffs", "_hash")

    def __init__(self, pps, coeffs, _normalized=False):
        # pps: tuple of (p, a); coeffs: dict key-tuple -> Fraction
        if not _normalized:
            pps, coeffs = _normalize(pps, coeffs)
        object.__setattr__(self, "pps", pps)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Cyclotomic is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def order(self) -> int:
        n = 1
        for p, a in self.pps:
            n *= p ** a
        return n

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return not self.pps

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise CycloError("not a rational value: %r" % (self,))
        return self.coeffs.get((), Fraction(0))

    def is_integer(self) -> bool:
        return self.is_rational() and self.rational_value().denominator == 1

    def integer_value(self) -> int:
        v = self.rational_value()
        if v.denominator != 1:
            raise CycloError("not an integer: %r" % (self,))
        return v.numerator

    def is_real(self) -> bool:
        return self.conj() == self

    # -- construction helpers --------------------------------------------

    @staticmethod
    def from_rational(v) -> "Cyclotomic":
        v = Fraction(v)
        if v == 0:
            return Cyclotomic((), {}, _normalized=True)
        return Cyclotomic((), {(): v}, _normalized=True)

    @staticmethod
    def root(n: int, e: int = 1) -> "Cyclotomic":
        """Canonical form of zeta_n^e."""
        if n < 1:
            raise CycloError("order must be positive")
        e %= n
        pps = _factor_prime_powers(n)
        # zeta_n^e = prod_i zeta_{q_i}^{e * inv(n/q_i, q_i)} by CRT
        key = []
        for p, a in pps:
            q = p ** a
            key.append((e * pow(n // q, -1, q)) % q)
        return Cyclotomic(pps, {tuple(key): Fraction(1)})

    # -- arithmetic -------------------------------------------------------

    def _embed(self, pps: tuple[tuple[int, int], ...]) -> dict:
        """Coefficients re-keyed for the (finer) prime-power list `pps`."""
        if pps == self.pps:
            return dict(self.coeffs)
        mine = dict(self.pps)
        out = {}
        for key, c in self.coeffs.items():
            nk = []
            for (p, a) in pps:
                if p in mine:
                    old_a = mine[p]
                    c_old = key[[q for q, _ in self.pps].index(p)]
                    nk.append(c_old * p ** (a - old_a))
                else:
                    nk.append(0)
            out[tuple(nk)] = c
        return out

    def _common(self, other: "Cyclotomic"):
        ps = {}
        for p, a in self.pps:
            ps[p] = max(ps.get(p, 0), a)
        for p, a in other.pps:
            ps[p] = max(ps.get(p, 0), a)
        pps = tuple(sorted(ps.items()))
        return pps, self._embed(pps), other._embed(pps)

    def __add__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        pps, a, b = self._common(other)
        for key, c in b.items():
            c2 = a.get(key, Fraction(0)) + c
            if c2:
                a[key] = c2
            else:
                a.pop(key, None)
        return Cyclotomic(pps, a)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.pps, {k: -c for k, c in self.coeffs.items()},
                          _normalized=True)

    def __sub__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_cyclo(other) + (-self)

    def __mul__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.is_rational():
            v = self.rational_value()
            return Cyclotomic(other.pps,
                              {k: c * v for k, c in other.coeffs.items()})
        if other.is_rational():
            return other * self
        pps, a, b = self._common(other)
        qs = [p ** e for p, e in pps]
        acc: dict = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                key = tuple((x + y) % q for x, y, q in zip(ka, kb, qs))
                c = acc.get(key)
                acc[key] = ca * cb if c is None else c + ca * cb
        return Cyclotomic(pps, acc)

    __rmul__ = __mul__

    def inv(self) -> "Cyclotomic":
        if self.is_zero():
            raise CycloDivisionError("division by zero cyclotomic")
        if self.is_rational():
            return Cyclotomic.from_rational(1 / self.rational_value())
        n = self.order
        prod = ONE
        for b in range(2, n):
            if gcd(b, n) == 1:
                prod = prod * self.galois(b)
        norm = (self * prod).rational_value()
        return prod * Fraction(1, 1) * Cyclotomic.from_rational(Fraction(1) / norm)

    def __truediv__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return _as_cyclo(other) * self.inv()

    # -- Galois action ----------------------------------------------------

    def galois(self, b: int) -> "Cyclotomic":
        """Image under sigma_b: zeta_n -> zeta_n^b; needs gcd(b, n) = 1."""
        n = self.order
        b %= n if n > 1 else 1
        if n > 1 and gcd(b, n) != 1:
            raise CycloError("galois exponent %d not coprime to order %d" % (b, n))
        if self.is_rational():
            return self
        out = {}
        for key, c in self.coeffs.items():
            nk = tuple((b * x) % (p ** a) for x, (p, a) in zip(key, self.pps))
            out[nk] = out.get(nk, Fraction(0)) + c
        return Cyclotomic(self.pps, out)

    def conj(self) -> "Cyclotomic":
        n = self.order
        return self.galois(n - 1 if n > 1 else 0)

    # -- comparisons / export ---------------------------------------------

    def __eq__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return self.pps == other.pps and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.pps, tuple(sorted(self.coeffs.items()))))
            object.__setattr__(self, "_hash", h)
        return h

    def terms(self) -> list[tuple[int, Fraction]]:
        """[(exponent e, coefficient)] with zeta_n^e, exponents ascending."""
        n = self.order
        out = []
        for key, c in self.coeffs.items():
            e = 0
            for x, (p, a) in zip(key, self.pps):
                e = (e + x * (n // p ** a)) % n
            out.append((e, c))
        out.sort()
        return out

    def approx(self) -> complex:
        n = self.order
        return sum(float(c) * cmath.exp(2j * cmath.pi * e / n)
                   for e, c in self.terms()) if self.coeffs else 0j

    def __repr__(self):
        if self.is_zero():
            return "Cyc(0)"
        n = self.order
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(str(c))
            else:
                parts.append("%s*z%d^%d" % (c, n, e))
        return "Cyc(" + " + ".join(parts) + ")"

    def serialize(self) -> dict:
        return {"order": self.order,
                "terms": [[e, c.numerator, c.denominator] for e, c in self.terms()]}

    @staticmethod
    def deserialize(doc: dict) -> "Cyclotomic":
        n = doc["order"]
        acc = ZERO
        for e, num, den in doc["terms"]:
            acc = acc + Cyclotomic.root(n, e) * Fraction(num, den)
        return acc


def _normalize(pps, coeffs):
    """Basis-reduce all keys, drop zeros, shrink to the minimal order."""
    pps = tuple(pps)
    # 1. rewrite forbidden exponents into the power basis
    reduced: dict = {}
    work = list(coeffs.items())
    while work:
        key, c = work.pop()
        if not c:
            continue
        for i, (p, a) in enumerate(pps):
            phi = _phi_pp(p, a)
            if key[i] >= phi:
                step = p ** (a - 1)
                v = key[i] % step
                # zeta^{v + (p-1)step} = -sum_t zeta^{v + t*step}
                for t in range(p - 1):
                    nk = list(key)
                    nk[i] = v + t * step
                    work.append((tuple(nk), -c))
                break
        else:
            c2 = reduced.get(key, Fraction(0)) + c
            if c2:
                reduced[key] = c2
            else:
                reduced.pop(key, None)

    # 2. shrink each prime-power part as far as possible
    pps = list(pps)
    changed = True
    while changed and reduced:
        changed = False
        for i in range(len(pps)):
            p, a = pps[i]
            if a >= 2:
                if all(k[i] % p == 0 for k in reduced):
                    pps[i] = (p, a - 1)
                    nxt = {}
                    for k, c in reduced.items():
                        nk = list(k)
                        nk[i] = k[i] // p
                        nxt[tuple(nk)] = c
                    reduced = nxt
                    changed = True
            else:
                if all(k[i] == 0 for k in reduced):
                    del pps[i]
                    reduced = {k[:i] + k[i + 1:]: c for k, c in reduced.items()}
                    changed = True
            if changed:
                break
    if not reduced:
        return (), {}
    # drop exhausted prime entries when coeffs became empty handled above
    return tuple(pps), reduced


def _as_cyclo(v):
    if isinstance(v, Cyclotomic):
        return v
    if isinstance(v, (int, Fraction)):
        return Cyclotomic.from_rational(v)
    return NotImplemented


ZERO = Cyclotomic.from_rational(0)
ONE = Cyclotomic.from_rational(1)


# -- module-level API ------------------------------------------------------

def make_root(n: int, e: int = 1) -> Cyclotomic:
    return Cyclotomic.root(n, e)


def rational(v) -> Cyclotomic:
    return Cyclotomic.from_rational(v)


def add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a + b


def mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a * b


def neg(a: Cyclotomic) -> Cyclotomic:
    return -a


def inv(a: Cyclotomic) -> Cyclotomic:
    return a.inv()


def galois_apply(a: Cyclotomic, b: int) -> Cyclotomic:
    return a.galois(b)


def conj(a: Cyclotomic) -> Cyclotomic:
    return a.conj()


def is_rational(a: Cyclotomic) -> bool:
    return a.is_rational()


def is_real(a: Cyclotomic) -> bool:
    return a.is_real()


def approx_complex(a: Cyclotomic) -> complex:
    return a.approx()


def sum_cyclo(values: Iterable[Cyclotomic]) -> Cyclotomic:
    acc = ZERO
    for v in values:
        acc = acc + v
    return acc


__all__ = [
    "Cyclotomic", "CycloError", "CycloDivisionError", "ZERO", "ONE",
    "make_root", "rational", "add", "mul", "neg", "inv", "galois_apply",
    "conj", "is_rational", "is_real", "approx_complex", "sum_cyclo",
]
