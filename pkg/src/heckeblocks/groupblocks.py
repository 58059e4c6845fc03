"""p-blocks of the underlying finite group from its character table.

Two characters lie in the same p-block when their central characters agree
modulo a prime ideal above p; it suffices to test one deterministic prime
ideal and close the resulting partition under the Galois action on the
table rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cyclo import CycInt, in_prime_ideal, prime_handle

__all__ = ["CharacterTable", "Partition", "central_character", "p_blocks",
           "galois_close"]


@dataclass(frozen=True)
class Partition:
    """A set partition of the 1-based character index set, in canonical
    form: each part sorted, parts ordered by least element."""

    parts: tuple[tuple[int, ...], ...]

    @staticmethod
    def of(parts, size: int) -> "Partition":
        canon = tuple(sorted((tuple(sorted(set(p))) for p in parts if p),
                             key=lambda part: part[0]))
        seen: list[int] = []
        for part in canon:
            seen.extend(part)
        if sorted(seen) != list(range(1, size + 1)):
            raise ValueError(f"parts do not partition 1..{size}: {parts}")
        return Partition(canon)

    @staticmethod
    def singletons(size: int) -> "Partition":
        return Partition(tuple((i,) for i in range(1, size + 1)))

    @property
    def size(self) -> int:
        return sum(len(p) for p in self.parts)

    def part_of(self, index: int) -> tuple[int, ...]:
        for part in self.parts:
            if index in part:
                return part
        raise KeyError(index)

    def as_lists(self) -> list[list[int]]:
        return [list(p) for p in self.parts]

    def permuted(self, perm: dict[int, int]) -> "Partition":
        return Partition.of(
            [[perm[i] for i in part] for part in self.parts], self.size
        )


@dataclass(frozen=True)
class CharacterTable:
    """Ordinary character table; rows follow GroupDatum.characters."""

    conductor: int
    class_sizes: tuple[int, ...]
    values: tuple[tuple[CycInt, ...], ...]
    class_order_labels: tuple[str, ...] | None = None

    @property
    def group_order(self) -> int:
        return sum(self.class_sizes)

    @property
    def n_chars(self) -> int:
        return len(self.values)

    def degree(self, chi: int) -> int:
        return self.values[chi][0].as_int()


def central_character(t: CharacterTable, chi_index: int, class_index: int) -> CycInt:
    """omega_chi(class sum) = |C| * chi(g) / chi(1), an algebraic integer."""
    val = t.values[chi_index][class_index] * t.class_sizes[class_index]
    deg = t.degree(chi_index)
    try:
        return val.exact_div_int(deg)
    except ValueError as exc:
        raise ValueError(
            f"corrupt table: central character not integral at row "
            f"{chi_index}, class {class_index}"
        ) from exc


def _row_permutations(t: CharacterTable) -> list[dict[int, int]]:
    """1-based row permutations induced by Gal(Q(zeta_N)/Q)."""
    n = t.conductor
    rows = {tuple(v.lift(n).coeffs for v in row): i
            for i, row in enumerate(t.values)}
    perms = []
    for sigma in range(1, n + 1):
        if gcd(sigma, n) != 1:
            continue
        perm = {}
        for i, row in enumerate(t.values):
            key = tuple(_conj(v, sigma, n).coeffs for v in row)
            if key not in rows:
                raise ValueError("corrupt table: Galois image row not found")
            perm[i + 1] = rows[key] + 1
        perms.append(perm)
    return perms


def _conj(v: CycInt, sigma: int, n: int) -> CycInt:
    return v.lift(n).galois_conjugate(sigma)


def galois_close(t: CharacterTable, pi: Partition) -> Partition:
    """Coarsest coarsening of pi stable under the Galois row permutations."""
    from .engine import join  # local import to avoid a cycle

    perms = _row_permutations(t)
    current = pi
    while True:
        images = [current.permuted(perm) for perm in perms]
        closed = join([current, *images])
        if closed == current:
            return current
        current = closed


def p_blocks(t: CharacterTable, p: int) -> Partition:
    """Blocks of the p-modular group algebra via central-character
    congruences at one prime ideal above p, then Galois closure."""
    if t.group_order % p:
        return Partition.singletons(t.n_chars)
    handle = prime_handle(p, t.conductor)
    groups: list[tuple[list[CycInt], list[int]]] = []
    for chi in range(t.n_chars):
        omegas = [central_character(t, chi, c) for c in range(len(t.class_sizes))]
        for ref, members in groups:
            if all(in_prime_ideal(a - b, handle) for a, b in zip(omegas, ref)):
                members.append(chi + 1)
                break
        else:
            groups.append((omegas, [chi + 1]))
    rough = Partition.of([members for _, members in groups], t.n_chars)
    return galois_close(t, rough)
