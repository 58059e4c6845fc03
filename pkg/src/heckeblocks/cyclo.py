"""Exact arithmetic in cyclotomic integer rings Z[zeta_N].

Elements are kept in the power basis 1, zeta_N, ..., zeta_N^(phi(N)-1),
reduced modulo the N-th cyclotomic polynomial.  Mixed-conductor arithmetic
lifts both operands to the least common multiple conductor first.

The module also provides roots of unity in exponent form, K-cyclotomic
polynomials (minimal polynomials of roots of unity over a cyclotomic field
K = Q(zeta_m), stored as a Galois orbit of root exponents), and handles for
prime ideals of Z[zeta_N] above a rational prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

import sympy
from sympy import Poly, Symbol
from sympy.polys.specialpolys import cyclotomic_poly

__all__ = [
    "CycInt",
    "RootOfUnity",
    "KCyclotomic",
    "PrimeIdealHandle",
    "euler_phi",
    "prime_handle",
    "in_prime_ideal",
    "cyclotomic_value_at_one",
    "kcyc_degree_and_value",
    "is_p_essential_factor",
]

_T = Symbol("T")


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return int(sympy.totient(n))


@lru_cache(maxsize=None)
def _phi_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree."""
    return tuple(int(c) for c in Poly(cyclotomic_poly(n, _T), _T).all_coeffs()[::-1])


def _reduce_mod_phi(coeffs: list[int], n: int) -> tuple[int, ...]:
    """Remainder of a coefficient list (ascending) modulo the monic Phi_n."""
    phi = _phi_coeffs(n)
    deg = len(phi) - 1
    work = list(coeffs)
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            for j, pc in enumerate(phi):
                work[i - deg + j] -= c * pc
    work = work[:deg]
    work += [0] * (deg - len(work))
    return tuple(work)


class CycInt:
    """An element of Z[zeta_N] in the reduced power basis."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        coeffs = list(int(c) for c in coeffs)
        deg = euler_phi(conductor)
        if len(coeffs) != deg:
            coeffs = list(_reduce_mod_phi(coeffs, conductor))
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *a):  # immutable
        raise AttributeError("CycInt is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(r: int) -> "CycInt":
        return CycInt(1, (int(r),))

    @staticmethod
    def zeta(order: int, exponent: int = 1) -> "CycInt":
        exponent %= order
        coeffs = [0] * (order)
        coeffs[exponent] = 1
        return CycInt(order, _reduce_mod_phi(coeffs, order))

    # -- representation ----------------------------------------------------

    def lift(self, conductor: int) -> "CycInt":
        """Rewrite in Z[zeta_M] for a multiple M of the current conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError("can only lift to a multiple of the conductor")
        step = conductor // self.conductor
        out = [0] * conductor
        for i, c in enumerate(self.coeffs):
            if c:
                out[(i * step) % conductor] += c
        return CycInt(conductor, _reduce_mod_phi(out, conductor))

    def descend(self, conductor: int) -> "CycInt":
        """Rewrite in Z[zeta_m] for a divisor m of the conductor.

        Fails if the element does not actually lie in the smaller ring.
        """
        if conductor == self.conductor:
            return self
        if self.conductor % conductor:
            raise ValueError("can only descend to a divisor of the conductor")
        sol = _descend_solve(conductor, self.conductor, self.coeffs)
        if sol is None:
            raise ValueError(
                f"element of Z[zeta_{self.conductor}] is not in Z[zeta_{conductor}]"
            )
        return CycInt(conductor, sol)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_rational():
            raise ValueError("not a rational integer")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(value) -> "CycInt":
        if isinstance(value, CycInt):
            return value
        if isinstance(value, int):
            return CycInt.rational(value)
        return NotImplemented

    def _pair(self, other: "CycInt"):
        n = lcm(self.conductor, other.conductor)
        return self.lift(n), other.lift(n), n

    def __add__(self, other):
        other = CycInt._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, n = self._pair(other)
        return CycInt(n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = CycInt._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = CycInt._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, n = self._pair(other)
        prod = [0] * (2 * len(a.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycInt(n, _reduce_mod_phi(prod, n))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined in Z[zeta_N]")
        result = CycInt.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div_int(self, d: int) -> "CycInt":
        """Exact division by a rational integer; error when inexact."""
        if d == 0:
            raise ZeroDivisionError
        if any(c % d for c in self.coeffs):
            raise ValueError(f"inexact division by {d}")
        return CycInt(self.conductor, tuple(c // d for c in self.coeffs))

    def galois_conjugate(self, t: int) -> "CycInt":
        """Image under zeta_N -> zeta_N^t, gcd(t, N) = 1."""
        n = self.conductor
        if gcd(t, n) != 1:
            raise ValueError("t must be coprime to the conductor")
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            if c:
                out[(i * t) % n] += c
        return CycInt(n, _reduce_mod_phi(out, n))

    # -- norm ---------------------------------------------------------------

    def norm(self) -> int:
        """Field norm over Q, as the resultant Res(Phi_N, a(T))."""
        if self.conductor == 1:
            return self.coeffs[0]
        if self.is_zero():
            return 0
        phi = Poly(_phi_coeffs(self.conductor)[::-1], _T)
        f = Poly(self.coeffs[::-1], _T)
        return int(phi.resultant(f))

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        other = CycInt._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, _ = self._pair(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # mixed-conductor equality makes hashing unreliable

    def __repr__(self):
        return f"CycInt({self.conductor}, {list(self.coeffs)})"


@lru_cache(maxsize=None)
def _lift_matrix(m: int, n: int):
    """Columns: power basis of Z[zeta_m] written in the basis of Z[zeta_n]."""
    cols = []
    for i in range(euler_phi(m)):
        cols.append(CycInt.zeta(m, i).lift(n).coeffs)
    return sympy.Matrix(list(zip(*cols)))


def _descend_solve(m: int, n: int, coeffs) -> tuple[int, ...] | None:
    mat = _lift_matrix(m, n)
    rhs = sympy.Matrix(list(coeffs))
    try:
        sol = mat.solve_least_squares(rhs) if mat.rows != mat.cols else mat.solve(rhs)
    except Exception:
        return None
    if mat * sol != rhs:
        return None
    out = []
    for v in sol:
        if v != int(v):
            return None
        out.append(int(v))
    return tuple(out)


@dataclass(frozen=True)
class RootOfUnity:
    """zeta_order^exponent in lowest terms: gcd(exponent, order) = 1."""

    order: int
    exponent: int

    @staticmethod
    def of(order: int, exponent: int) -> "RootOfUnity":
        """Canonical (primitive) form of zeta_order^exponent."""
        if order < 1:
            raise ValueError("order must be positive")
        exponent %= order
        g = gcd(exponent, order)
        if exponent == 0:
            return RootOfUnity(1, 0)
        return RootOfUnity(order // g, exponent // g)

    @staticmethod
    def one() -> "RootOfUnity":
        return RootOfUnity(1, 0)

    def __post_init__(self):
        if self.order < 1 or not (0 <= self.exponent < max(self.order, 1)):
            raise ValueError("root of unity not in canonical form")
        if self.order > 1 and gcd(self.exponent, self.order) != 1:
            raise ValueError("root of unity not in canonical form")

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        n = lcm(self.order, other.order)
        e = self.exponent * (n // self.order) + other.exponent * (n // other.order)
        return RootOfUnity.of(n, e)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity.of(self.order, self.exponent * k)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity.of(self.order, -self.exponent)

    def is_one(self) -> bool:
        return self.order == 1

    def as_cycint(self) -> CycInt:
        return CycInt.zeta(self.order, self.exponent)


@lru_cache(maxsize=None)
def _orbit_multipliers(m: int, d: int) -> tuple[int, ...]:
    """{t mod d : t in (Z/L)^x, t = 1 mod m}, L = lcm(m, d)."""
    big = lcm(m, d)
    return tuple(sorted({t % d for t in range(1, big + 1)
                         if gcd(t, big) == 1 and t % m == 1 % m}))


@dataclass(frozen=True)
class KCyclotomic:
    """Minimal polynomial over K = Q(zeta_m) of a root of unity of order >= 2.

    Represented by the field conductor and the root; the polynomial is
    Psi(T) = prod over the Galois orbit O of the root of (T - zeta_d^s).
    The root is normalised to the least exponent in its orbit.
    """

    field_conductor: int
    root: RootOfUnity

    @staticmethod
    def of(field_conductor: int, root: RootOfUnity) -> "KCyclotomic":
        if root.order < 2:
            raise ValueError("root order must be at least 2 (Phi_1 never appears)")
        d = root.order
        orbit = {root.exponent * t % d for t in _orbit_multipliers(field_conductor, d)}
        return KCyclotomic(field_conductor, RootOfUnity(d, min(orbit)))

    def orbit(self) -> tuple[int, ...]:
        d = self.root.order
        mults = _orbit_multipliers(self.field_conductor, d)
        return tuple(sorted({self.root.exponent * t % d for t in mults}))

    @property
    def degree(self) -> int:
        return len(self.orbit())

    def value_at_one(self) -> CycInt:
        """Psi(1) = prod_{s in O} (1 - zeta_d^s), as an element of Z[zeta_m]."""
        m, d = self.field_conductor, self.root.order
        big = lcm(m, d)
        acc = CycInt.rational(1)
        for s in self.orbit():
            acc = acc * (CycInt.rational(1) - CycInt.zeta(d, s).lift(big))
        return acc.descend(m)

    def inverse_root(self) -> "KCyclotomic":
        """The K-cyclotomic polynomial whose roots are the inverses."""
        return KCyclotomic.of(self.field_conductor, self.root.inverse())


def kcyc_degree_and_value(psi: KCyclotomic) -> tuple[int, CycInt]:
    return psi.degree, psi.value_at_one()


@dataclass(frozen=True)
class PrimeIdealHandle:
    """One prime ideal of Z[zeta_N] over p, named by an irreducible factor
    of Phi_N over the p-element field (lexicographically least)."""

    rational_prime: int
    conductor: int
    local_factor: tuple[int, ...]  # ascending coefficients, monic, in [0, p)


@lru_cache(maxsize=None)
def prime_handle(p: int, conductor: int) -> PrimeIdealHandle:
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    if conductor == 1:
        # Degenerate convention: membership reduces to divisibility by p.
        return PrimeIdealHandle(p, 1, (0, 1))
    poly = Poly(cyclotomic_poly(conductor, _T), _T, modulus=p)
    factors = []
    for fac, _mult in poly.factor_list()[1]:
        coeffs = [int(c) % p for c in fac.all_coeffs()[::-1]]
        factors.append(tuple(coeffs))
    return PrimeIdealHandle(p, conductor, min(factors))


def _poly_rem_mod_p(coeffs: list[int], divisor: tuple[int, ...], p: int) -> list[int]:
    """Remainder of coeffs (ascending) by a monic divisor over GF(p)."""
    work = [c % p for c in coeffs]
    deg = len(divisor) - 1
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            for j in range(deg + 1):
                work[i - deg + j] = (work[i - deg + j] - c * divisor[j]) % p
    return work[:deg]


def in_prime_ideal(a: CycInt, h: PrimeIdealHandle) -> bool:
    a = a.lift(lcm(a.conductor, h.conductor))
    if a.conductor != h.conductor:
        raise ValueError("conductor of the element must divide the handle's")
    rem = _poly_rem_mod_p(list(a.coeffs), h.local_factor, h.rational_prime)
    return all(c == 0 for c in rem)


@lru_cache(maxsize=None)
def cyclotomic_value_at_one(n: int) -> int:
    """Phi_n(1) for n >= 2: p when n is a power of the prime p, else 1."""
    if n < 2:
        raise ValueError("n must be at least 2")
    primes = sympy.factorint(n)
    if len(primes) == 1:
        return next(iter(primes))
    return 1


def is_p_essential_factor(psi: KCyclotomic, p: int) -> bool:
    """Whether p divides the norm of Psi(1).

    Fast path: the conjugates of Psi(1) multiply to a power of Phi_d(1),
    so the answer only depends on whether the root order is a power of p.
    """
    d = psi.root.order
    while d % p == 0:
        d //= p
    return d == 1
