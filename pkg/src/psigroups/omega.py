"""Element-order invariants of p-groups: exponent, omega sets and subgroups,
the full omega filtration, and the brute-force element-order sum psi."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .groups import FiniteGroup, NotPGroupError, Subgroup, closure, power_map


@dataclass(frozen=True)
class OmegaLevel:
    """Sizes at one filtration level: the solution set of x^(p^i) = 1 and the
    subgroup it generates."""

    set_size: int
    subgroup_size: int

    @property
    def set_is_subgroup(self) -> bool:
        return self.set_size == self.subgroup_size


@dataclass(frozen=True)
class OmegaFiltration:
    """Per-level omega data for a p-group of order ``order`` and exponent p^m.

    ``levels[i]`` covers level i for i = 0..m; level 0 is the trivial
    subgroup, level m is the whole group.
    """

    p: int
    m: int
    order: int
    levels: tuple[OmegaLevel, ...]

    def __post_init__(self):
        if len(self.levels) != self.m + 1:
            raise ValueError(f"expected {self.m + 1} levels, got {len(self.levels)}")
        if self.levels[0].set_size != 1 or self.levels[0].subgroup_size != 1:
            raise ValueError("level 0 must be the trivial subgroup")
        if self.levels[-1].subgroup_size != self.order:
            raise ValueError("top level must be the whole group")
        for lo, hi in zip(self.levels, self.levels[1:]):
            if lo.set_size > hi.set_size or lo.subgroup_size > hi.subgroup_size:
                raise ValueError("omega levels must be non-decreasing")
        for level in self.levels:
            if level.set_size > level.subgroup_size:
                raise ValueError("omega set cannot exceed its generated subgroup")
        if self.all_levels_closed:
            # strict chain up to the whole group when every set is closed
            for i, (lo, hi) in enumerate(zip(self.levels, self.levels[1:])):
                if lo.subgroup_size >= hi.subgroup_size and hi.subgroup_size < self.order:
                    raise ValueError(f"omega chain stalls at level {i + 1}")

    @property
    def all_levels_closed(self) -> bool:
        return all(level.set_is_subgroup for level in self.levels)

    @property
    def subgroup_sizes(self) -> tuple[int, ...]:
        return tuple(level.subgroup_size for level in self.levels)

    @property
    def set_sizes(self) -> tuple[int, ...]:
        return tuple(level.set_size for level in self.levels)

    def subgroup_size_at(self, i: int) -> int:
        """|Omega_i|, extended by |G| above the top level."""
        return self.levels[min(i, self.m)].subgroup_size


def prime_of(group: FiniteGroup) -> int:
    """The prime p with |G| = p^n; error if |G| is not a prime power or is 1."""
    n = group.order
    if n == 1:
        raise NotPGroupError("trivial group has no determined prime")
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        p = n
    m = n
    while m % p == 0:
        m //= p
    if m != 1:
        raise NotPGroupError(f"group order {n} is not a prime power")
    return p


def exponent(group: FiniteGroup) -> int:
    """Least common multiple of all element orders."""
    return math.lcm(*(int(v) for v in np.unique(group.element_orders)))


def exponent_log(group: FiniteGroup) -> tuple[int, int]:
    """(p, m) with exp(G) = p^m for a p-group G."""
    p = prime_of(group)
    e = exponent(group)
    m = 0
    while p**m < e:
        m += 1
    return p, m


def omega_set(group: FiniteGroup, i: int) -> tuple[int, ...]:
    """All element indices x with x^(p^i) = identity, ascending."""
    if i < 0:
        raise ValueError("omega level must be nonnegative")
    p = prime_of(group)
    hits = np.flatnonzero(power_map(group, p**i) == 0)
    return tuple(int(x) for x in hits)


def omega_subgroup(group: FiniteGroup, i: int) -> Subgroup:
    """The subgroup generated by the level-i omega set."""
    return closure(group, omega_set(group, i))


def omega_filtration(group: FiniteGroup) -> OmegaFiltration:
    """Set and subgroup sizes at every level 0..m, where exp(G) = p^m."""
    p, m = exponent_log(group)
    levels = []
    for i in range(m + 1):
        members = omega_set(group, i)
        generated = closure(group, members)
        levels.append(OmegaLevel(set_size=len(members), subgroup_size=len(generated)))
    return OmegaFiltration(p=p, m=m, order=group.order, levels=tuple(levels))


def psi_brute(group: FiniteGroup) -> int:
    """Sum of the orders of all elements, summed exactly."""
    return int(group.element_orders.sum())


def psi_subset(group: FiniteGroup, indices) -> int:
    """Sum of element orders over a subset of indices."""
    idx = np.asarray(list(indices), dtype=np.int64)
    if idx.size == 0:
        return 0
    if idx.min() < 0 or idx.max() >= group.order:
        raise IndexError(f"subset index out of range for order {group.order}")
    return int(group.element_orders[idx].sum())
