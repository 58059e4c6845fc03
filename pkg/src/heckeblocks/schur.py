"""Factorized Schur elements of cyclotomic Hecke algebras.

A Schur element is stored in the canonical *v-form*

    s_chi(v) = xi * v^lead * prod_i Psi_i(M_i)^mult_i

where xi lies in Z[zeta_m], lead and the monomials M_i are integer exponent
vectors over the parameter slots, and each Psi_i is a K-cyclotomic
polynomial.  Database entry happens in the *x-form* printed in the
literature (products of cyclotomic polynomials of parameter monomials,
possibly involving radicals); normalize_x_to_v performs the change of
variables x_(C,j) = zeta_{e_C}^j * v_(C,j)^mu and splits every factor into
K-irreducible pieces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

import sympy

from .cyclo import (
    CycInt,
    KCyclotomic,
    RootOfUnity,
    euler_phi,
    is_p_essential_factor,
)
from .lattice import IntVector, primitive_part

__all__ = [
    "CharLabel",
    "GroupDatum",
    "SchurFactorX",
    "SchurFactorV",
    "SchurElement",
    "SpecializedSchur",
    "SchurDataError",
    "BadPrimeArgument",
    "sign_canonical",
    "normalize_x_to_v",
    "validate",
    "value_at_one",
    "essential_monomials",
    "essential_hyperplanes",
    "specialize",
    "a_and_A",
    "bad_primes",
    "generic_singleton",
]


class SchurDataError(ValueError):
    """A database entry violates the structure theory (bad twist, bad orbit,
    or a cyclotomic factor degenerating to root order 1)."""


class BadPrimeArgument(ValueError):
    """Raised when a prime argument does not divide the group order."""


@dataclass(frozen=True, order=True)
class CharLabel:
    """An irreducible character phi_{d,b}, disambiguated by 0-3 primes."""

    degree: int
    b_invariant: int
    prime_marks: int = 0

    def render(self) -> str:
        return f"phi{{{self.degree},{self.b_invariant}}}" + "'" * self.prime_marks

    @staticmethod
    def parse(text: str) -> "CharLabel":
        body = text.strip()
        marks = len(body) - len(body.rstrip("'"))
        body = body.rstrip("'")
        if not (body.startswith("phi{") and body.endswith("}")):
            raise ValueError(f"bad character label: {text!r}")
        d, b = body[4:-1].split(",")
        return CharLabel(int(d), int(b), marks)

    def __str__(self) -> str:
        return self.render()


@dataclass
class GroupDatum:
    """Static data of one complex reflection group and its Hecke algebra.

    Slots are indexed by (orbit, j) pairs flattened in orbit order; display
    letters run a, b, c, ... with subscripts 0 .. e_C - 1.
    """

    name: str
    field_conductor: int
    mu_order: int
    group_order: int
    orbits: tuple[tuple[str, int], ...]
    characters: tuple[CharLabel, ...]
    schur_elements: dict | None = None  # CharLabel -> SchurElement
    character_table: object | None = None  # groupblocks.CharacterTable
    hyperplane_tables: tuple | None = None  # engine.HyperplaneTable, ...
    clifford_links: tuple = ()

    def __post_init__(self):
        if len(set(self.characters)) != len(self.characters):
            raise ValueError("character labels must be unique")

    @property
    def slot_count(self) -> int:
        return sum(e for _, e in self.orbits)

    def slots(self) -> list[tuple[int, int]]:
        return [(ci, j) for ci, (_, e) in enumerate(self.orbits) for j in range(e)]

    def slot_names(self) -> list[str]:
        return [f"{letter}{j}" for letter, e in self.orbits for j in range(e)]

    def orbit_ranges(self) -> list[range]:
        out, start = [], 0
        for _, e in self.orbits:
            out.append(range(start, start + e))
            start += e
        return out

    def char_index(self, label: CharLabel) -> int:
        return self.characters.index(label)


@dataclass(frozen=True)
class SchurFactorX:
    """One printed factor Phi_n(monomial) in the parameters x_(C,j).

    The monomial is exps_numerator / exps_denominator; a denominator q > 1
    encodes radicals such as r = sqrt(...).  The branch of the radical is
    fixed by an explicit root-of-unity twist (default +1)."""

    cyc_index: int
    exps_numerator: IntVector
    exps_denominator: int = 1
    twist: RootOfUnity = RootOfUnity.one()


@dataclass(frozen=True)
class SchurFactorV:
    """Psi(M)^mult with Psi K-cyclotomic and M a primitive monomial whose
    exponents sum to zero over every orbit."""

    psi: KCyclotomic
    monomial: IntVector
    mult: int = 1


@dataclass
class SchurElement:
    char: CharLabel
    xi: CycInt
    lead: IntVector
    factors: tuple[SchurFactorV, ...]


@dataclass
class SpecializedSchur:
    """A Schur element after u_(C,j) -> y^(n_(C,j)): a Laurent polynomial

    psi_coeff * y^y_power * prod Psi_i(y^delta_i)^mult_i  with delta_i != 0.
    """

    psi_coeff: CycInt
    y_power: int
    terms: tuple[tuple[KCyclotomic, int, int], ...]  # (psi, delta, mult)


def sign_canonical(v: IntVector) -> IntVector:
    """Flip the sign so the first nonzero coordinate is positive."""
    for x in v:
        if x > 0:
            return tuple(v)
        if x < 0:
            return tuple(-y for y in v)
    return tuple(v)


def _orbit_sums(g: GroupDatum, v: IntVector) -> list[int]:
    return [sum(v[i] for i in rng) for rng in g.orbit_ranges()]


def _slot_root(g: GroupDatum, slot: int, q: int) -> RootOfUnity:
    """The root-of-unity part of x_(C,j)^(1/q): zeta_(q e_C)^j."""
    ci, j = g.slots()[slot]
    e = g.orbits[ci][1]
    return RootOfUnity.of(q * e, j)


def normalize_x_to_v(
    g: GroupDatum,
    char: CharLabel,
    coeff: CycInt,
    lead_x: IntVector,
    factors: list[SchurFactorX],
    lead_den: int = 1,
) -> SchurElement:
    """Convert a printed x-form Schur element to canonical v-form."""
    mu = g.mu_order
    m = g.field_conductor
    nslots = g.slot_count

    xi = coeff
    # leading monomial: x^lead contributes a unit and v^(mu*lead/lead_den)
    if any((mu * c) % lead_den for c in lead_x):
        raise SchurDataError("leading monomial has non-integral v-exponents")
    lead = [mu * c // lead_den for c in lead_x]
    lead_twist = RootOfUnity.one()
    for slot, c in enumerate(lead_x):
        if c:
            lead_twist = lead_twist * (_slot_root(g, slot, lead_den) ** c)
    xi = xi * lead_twist.as_cycint()

    collected: dict[tuple[KCyclotomic, IntVector], int] = {}
    for fac in factors:
        n, q, w = fac.cyc_index, fac.exps_denominator, fac.exps_numerator
        if len(w) != nslots:
            raise SchurDataError("factor exponent vector has wrong length")
        if any((mu * c) % q for c in w):
            raise SchurDataError("factor has non-integral v-exponents")
        b = tuple(mu * c // q for c in w)
        b_prim, content = primitive_part(b)
        if content == 0:
            raise SchurDataError("factor with trivial monomial")
        rho = fac.twist
        for slot, c in enumerate(w):
            if c:
                rho = rho * (_slot_root(g, slot, q) ** c)
        # Phi_n(rho * T^content) = rho^phi(n) * prod_(tau in S) (T - tau)
        xi = xi * (rho.as_cycint() ** euler_phi(n))
        big = content * lcm(n, rho.order)
        roots = []
        for k in range(big):
            tau = RootOfUnity.of(big, k)
            if (rho * tau**content).order == n:
                roots.append(tau)
        if len(roots) != content * euler_phi(n):
            raise AssertionError("root-set enumeration miscounted")
        if any(t.is_one() for t in roots):
            raise SchurDataError(
                "factor produces a component of root order 1 (data-entry error)"
            )
        remaining = set(roots)
        while remaining:
            tau = min(remaining, key=lambda t: (t.order, t.exponent))
            psi = KCyclotomic.of(m, tau)
            orbit = {RootOfUnity.of(tau.order, s) for s in psi.orbit()}
            if not orbit <= remaining:
                raise SchurDataError("Galois orbit leaves the root set")
            remaining -= orbit
            psi, mono, unit, shift = _canonical_factor(psi, b_prim)
            xi = xi * unit
            lead = [a + s for a, s in zip(lead, shift)]
            key = (psi, mono)
            collected[key] = collected.get(key, 0) + 1

    try:
        xi = xi.lift(lcm(xi.conductor, m)).descend(m)
    except ValueError as exc:
        raise SchurDataError(
            f"unit coefficient does not lie in Z[zeta_{m}]; "
            "check the radical twists"
        ) from exc
    out = tuple(
        SchurFactorV(psi, mono, mult) for (psi, mono), mult in sorted(
            collected.items(), key=lambda kv: (kv[0][1], kv[0][0].root.order,
                                               kv[0][0].root.exponent)
        )
    )
    return SchurElement(char, xi, tuple(lead), out)


def _canonical_factor(psi: KCyclotomic, mono: IntVector):
    """Flip a factor to the sign-canonical monomial.

    Psi(M) = (-1)^deg * zeta_d^(sum of root exponents) * M^deg * Psi~(M^-1)
    where Psi~ has the inverse roots; the unit goes to xi and M^deg to lead.
    """
    if sign_canonical(mono) == tuple(mono):
        return psi, tuple(mono), CycInt.rational(1), (0,) * len(mono)
    deg = psi.degree
    d = psi.root.order
    unit = CycInt.zeta(d, sum(psi.orbit()) % d) * CycInt.rational((-1) ** deg)
    shift = tuple(deg * c for c in mono)
    return (
        psi.inverse_root(),
        tuple(-c for c in mono),
        unit,
        shift,
    )


def value_at_one(g: GroupDatum, s: SchurElement) -> CycInt:
    acc = s.xi
    for fac in s.factors:
        acc = acc * fac.psi.value_at_one() ** fac.mult
    return acc


def validate(g: GroupDatum, s: SchurElement) -> list[str]:
    """All structural invariants plus the value-at-one sanity check.

    Returns human-readable violations; an empty list means the entry is
    consistent."""
    bad: list[str] = []
    if len(s.lead) != g.slot_count:
        bad.append("leading exponent vector has wrong length")
        return bad
    for ci, total in enumerate(_orbit_sums(g, s.lead)):
        if total:
            bad.append(f"leading exponents do not sum to zero on orbit {ci}")
    for fac in s.factors:
        prim, content = primitive_part(fac.monomial)
        if content != 1:
            bad.append(f"monomial {fac.monomial} is not primitive")
        if any(_orbit_sums(g, fac.monomial)):
            bad.append(f"monomial {fac.monomial} has nonzero orbit sums")
        if fac.psi.root.order < 2:
            bad.append("factor of root order 1")
        if fac.mult < 1:
            bad.append("non-positive multiplicity")
        if fac.psi.field_conductor != g.field_conductor:
            bad.append("factor defined over the wrong field")
    val = value_at_one(g, s)
    expected, rem = divmod(g.group_order, s.char.degree)
    if rem:
        bad.append("character degree does not divide the group order")
    elif not (val.is_rational() and val.as_int() == expected):
        bad.append(
            f"value at v=1 is {val}, expected {expected} for {s.char.render()}"
        )
    return bad


def essential_monomials(s: SchurElement, p: int) -> set[IntVector]:
    """Sign-canonical primitive monomials of the p-essential factors."""
    return {
        sign_canonical(fac.monomial)
        for fac in s.factors
        if is_p_essential_factor(fac.psi, p)
    }


def _primes_dividing(n: int) -> list[int]:
    return sorted(sympy.factorint(n))


def essential_hyperplanes(g: GroupDatum, p: int) -> list[IntVector]:
    """Normals of the p-essential hyperplanes (p = 0: all bad primes).

    Prefers the full Schur payload; falls back to stored hyperplane tables.
    """
    if p != 0:
        if not sympy.isprime(p) or g.group_order % p:
            raise BadPrimeArgument("The number p should divide the order of the group")
        primes = [p]
    else:
        primes = _primes_dividing(g.group_order)
    normals: set[IntVector] = set()
    have_full_schur = g.schur_elements is not None and all(
        c in g.schur_elements for c in g.characters
    )
    if have_full_schur:
        for c in g.characters:
            for q in primes:
                normals |= essential_monomials(g.schur_elements[c], q)
    elif g.hyperplane_tables is not None:
        for table in g.hyperplane_tables:
            if table.normal is None:
                continue
            if p == 0 or p in table.primes:
                normals.add(sign_canonical(table.normal))
    else:
        raise ValueError(
            f"no Schur payload or hyperplane tables stored for {g.name}"
        )
    return sorted(normals)


def specialize(g: GroupDatum, s: SchurElement, n: IntVector) -> SpecializedSchur:
    """Image of the Schur element under u_(C,j) -> y^(n_(C,j))."""
    if len(n) != g.slot_count:
        raise ValueError("specialization vector has wrong length")
    coeff = s.xi
    y_power = sum(a * b for a, b in zip(s.lead, n))
    terms = []
    for fac in s.factors:
        delta = sum(a * b for a, b in zip(fac.monomial, n))
        if delta == 0:
            coeff = coeff * fac.psi.value_at_one() ** fac.mult
        else:
            terms.append((fac.psi, delta, fac.mult))
    return SpecializedSchur(coeff, y_power, tuple(terms))


def a_and_A(g: GroupDatum, sp: SpecializedSchur) -> tuple[Fraction, Fraction]:
    """Valuation and degree of the specialized element in the x-scale
    (y = x^(1/mu))."""
    val = sp.y_power
    deg = sp.y_power
    for psi, delta, mult in sp.terms:
        span = mult * psi.degree * delta
        if delta < 0:
            val += span
        else:
            deg += span
    return Fraction(val, g.mu_order), Fraction(deg, g.mu_order)


def bad_primes(g: GroupDatum, n: IntVector) -> set[int]:
    """Primes p with some specialized coefficient psi_chi in a prime above p."""
    if g.schur_elements is None or not all(
        c in g.schur_elements for c in g.characters
    ):
        raise ValueError(f"full Schur payload required for {g.name}")
    out: set[int] = set()
    for c in g.characters:
        sp = specialize(g, g.schur_elements[c], n)
        nrm = abs(sp.psi_coeff.norm())
        out |= set(sympy.factorint(nrm))
    return out


def generic_singleton(
    g: GroupDatum,
    s: SchurElement,
    p: int,
    hyperplane: IntVector | None = None,
) -> bool:
    """Whether the character stays alone in its block: its Schur element
    avoids the relevant prime ideal(s)."""
    if abs(s.xi.norm()) % p == 0:
        return False
    if hyperplane is None:
        return True
    return sign_canonical(hyperplane) not in essential_monomials(s, p)
