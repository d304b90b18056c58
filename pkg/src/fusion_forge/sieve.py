"""Exact arithmetic sieve for codegree lists and dimension types.

A fusion ring of rank 1 + p*n with a fixed-point-free basis automorphism of
prime order p and all-integer codegrees has codegree multiset
{F} + {f_1: p} + ... + {f_n: p}, where F is the global dimension. The
reciprocal-sum constraint then reads

    1/(p*F) + 1/f_1 + ... + 1/f_n = 1/p.

This module enumerates all integer solutions (Egyptian-fraction search over
exact rationals), expands each into candidate orbit dimension types
(1 + p * sum d_j^2 = F), and prunes candidates with arithmetic rules whose
soundness rests on structure theory of integral fusion rings. Every firing
is recorded; all rules can be switched off for monotonicity audits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_RULES = (
    "two-value",
    "trivial-action",
    "stabilizer-divisor",
    "two-distinct-codegrees",
    "closed-prefix",
)


@dataclass(frozen=True)
class CodegreeList:
    """One solution (F; f_1..f_n): global dimension plus orbit codegrees.

    orbit_values is stored descending; each value occurs p times in the
    codegree multiset of an actual ring, the global dimension once.
    """

    prime: int
    global_dim: int
    orbit_values: tuple

    def __post_init__(self):
        object.__setattr__(self, "orbit_values", tuple(self.orbit_values))
        total = Fraction(1, self.prime * self.global_dim)
        for value in self.orbit_values:
            total += Fraction(1, value)
        assert total == Fraction(1, self.prime), (
            f"reciprocal identity fails for {self}")
        assert self.orbit_values == tuple(
            sorted(self.orbit_values, reverse=True))

    @property
    def rank(self):
        return 1 + self.prime * len(self.orbit_values)

    def multiset(self):
        """Full codegree multiset, descending: {F: 1} + {f_j: p each}."""
        values = [self.global_dim]
        for value in self.orbit_values:
            values.extend([value] * self.prime)
        return tuple(sorted(values, reverse=True))


def codegree_lists(rank, prime):
    """All codegree lists at the given rank, ascending by (F, values).

    Constraints: each orbit value exceeds p and is at most F, F = 1 mod p,
    everything odd when p = 2, and the reciprocal identity holds exactly.
    The upper search bound at each slot is inclusive, so greedy-boundary
    solutions are kept.
    """
    if rank < 1 or rank % prime != 1:
        raise ValueError(f"rank {rank} is not 1 mod {prime}")
    orbits = (rank - 1) // prime
    found = []

    def leaf_global_dim(remaining, last_value):
        if remaining <= 0:
            return None
        inv = Fraction(1, prime) / remaining
        if inv.denominator != 1:
            return None
        global_dim = int(inv)
        if global_dim < last_value or global_dim % prime != 1:
            return None
        if prime == 2 and global_dim % 2 == 0:
            return None
        return global_dim

    def extend(values, remaining, slots):
        if slots == 0:
            global_dim = leaf_global_dim(remaining, values[-1] if values else 1)
            if global_dim is not None:
                found.append(CodegreeList(
                    prime=prime, global_dim=global_dim,
                    orbit_values=tuple(sorted(values, reverse=True))))
            return
        low = max(prime + 1,
                  values[-1] if values else 0,
                  int(1 / remaining) + 1)
        high = int((slots + Fraction(1, prime)) / remaining)
        for value in range(low, high + 1):
            if prime == 2 and value % 2 == 0:
                continue
            extend(values + [value], remaining - Fraction(1, value), slots - 1)

    extend([], Fraction(1, prime), orbits)
    return tuple(sorted(found, key=lambda c: (c.global_dim, c.orbit_values)))


def dimension_types(global_dim, orbits, prime):
    """All ascending tuples (d_1 <= ... <= d_n) with 1 + p*sum d^2 = F."""
    if (global_dim - 1) % prime != 0:
        raise ValueError(f"{global_dim} is not 1 mod {prime}")
    target = (global_dim - 1) // prime
    out = []

    def extend(prefix, minimum, remaining, slots):
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        d = minimum
        while d * d * slots <= remaining:
            extend(prefix + [d], d, remaining - d * d, slots - 1)
            d += 1

    extend([], 1, target, orbits)
    return tuple(sorted(out))


@dataclass(frozen=True)
class Candidate:
    """A codegree list paired with one of its orbit dimension types.

    The two tuples are independent data: orbit_values describes character
    orbits, orbit_dims describes basis orbits. No cross-pairing is implied.
    """

    prime: int
    global_dim: int
    orbit_values: tuple  # descending
    orbit_dims: tuple    # ascending

    @property
    def rank(self):
        return 1 + self.prime * len(self.orbit_dims)

    def codegree_multiset(self):
        values = [self.global_dim]
        for value in self.orbit_values:
            values.extend([value] * self.prime)
        return tuple(sorted(values, reverse=True))

    def basis_dims(self):
        """Per-basis-element dims: unit first, then orbit blocks ascending."""
        dims = [1]
        for d in self.orbit_dims:
            dims.extend([d] * self.prime)
        return tuple(dims)


def candidates(rank, prime):
    out = []
    for clist in codegree_lists(rank, prime):
        for dims in dimension_types(clist.global_dim,
                                    len(clist.orbit_values), prime):
            out.append(Candidate(prime=prime, global_dim=clist.global_dim,
                                 orbit_values=clist.orbit_values,
                                 orbit_dims=dims))
    return tuple(sorted(
        out, key=lambda c: (c.global_dim, c.orbit_values, c.orbit_dims)))


@dataclass(frozen=True)
class PruneEvent:
    candidate: Candidate
    rule: str
    detail: str


def _prime_power_factors(n):
    factors = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            power = 1
            while n % q == 0:
                n //= q
                power *= q
            factors.append(power)
        q += 1
    if n > 1:
        factors.append(n)
    return tuple(factors)


def group_order_feasible(order, prime):
    """Whether a group of this order can carry a fixed-point-free
    automorphism of the given prime order: every full prime-power factor
    must be 1 mod p (necessary by orbit counting on each invariant Sylow
    subgroup of the forced nilpotent group; sufficient via multiplicative
    scaling on elementary abelian factors)."""
    if order == 1:
        return True
    return all(qa % prime == 1 for qa in _prime_power_factors(order))


def _trivial_action_certificate(prime, unit_orbits, noninvertible_counts):
    """Invertibles provably act trivially on every noninvertible basis
    element: a nontrivial action would create an orbit of size dividing
    |G| and > 1 inside some dimension class of p*count elements, which the
    gcd condition forbids."""
    group_order = 1 + prime * unit_orbits
    return all(math.gcd(group_order, prime * count) == 1
               for count in noninvertible_counts.values())


def _prefix_feasible(prefix_dims, prime):
    """Feasibility of a dim-closed orbit-dim prefix as a standalone ring.

    Returns (feasible, reason). Three decidable shapes; anything with three
    or more distinct noninvertible dimension classes is left open.
    """
    distinct = sorted(set(prefix_dims))
    unit_orbits = prefix_dims.count(1)
    group_order = 1 + prime * unit_orbits
    if distinct == [1]:
        if not group_order_feasible(group_order, prime):
            return False, (f"no group of order {group_order} admits a "
                           f"fixed-point-free automorphism of order {prime}")
        return True, ""
    if 1 not in distinct and len(distinct) <= 2:
        return False, ("closed subring with no invertibles beyond the unit "
                       "and at most two dimension values")
    if 1 in distinct and len(distinct) == 2:
        d = distinct[1]
        counts = {d: prefix_dims.count(d)}
        if not _trivial_action_certificate(prime, unit_orbits, counts):
            return True, ""  # not certified; stay silent
        if group_order % d != 0:
            return False, (f"dimension {d} does not divide the invertible "
                           f"group order {group_order}")
        if unit_orbits == 1:
            if prime == 2:
                if d != 3:
                    return False, "closed two-class subring at p=2 needs d=3"
            elif (prime + 1) & prime == 0:  # Mersenne prime
                if d * d < group_order:
                    return False, (f"d^2 = {d * d} cannot cover the unit "
                                   f"group order {group_order}")
            else:
                return False, ("closed two-class subring impossible for a "
                               "non-Mersenne odd prime")
    return True, ""


def prune_candidate(candidate, rules=DEFAULT_RULES):
    """First pruning rule that rejects the candidate, or None.

    Rules:
    - two-value: no dim-1 orbit and at most two distinct orbit dims
      (every integral ring with dims in {1, a, b} has a nontrivial
      invertible group).
    - trivial-action: with certified trivial invertible-group action, the
      group order must appear as a codegree with multiplicity >= |G| - 1.
    - stabilizer-divisor: same certificate, single noninvertible dim d:
      d must divide |G| (from d^2 = |G| + k*d).
    - two-distinct-codegrees: no ring has exactly two distinct codegree
      values with the global dimension occurring once.
    - closed-prefix: a dim-closed proper prefix (certified by
      max(prefix)^2 < min(excluded)) must itself be feasible.
    """
    p = candidate.prime
    dims = candidate.orbit_dims
    unit_orbits = dims.count(1)
    group_order = 1 + p * unit_orbits
    noninvertible = {}
    for d in dims:
        if d > 1:
            noninvertible[d] = noninvertible.get(d, 0) + 1

    if "two-value" in rules:
        if unit_orbits == 0 and len(set(dims)) <= 2:
            return PruneEvent(candidate, "two-value",
                              f"orbit dims {dims} have no unit orbit and "
                              f"{len(set(dims))} distinct value(s)")

    certified = (noninvertible and unit_orbits > 0 and
                 _trivial_action_certificate(p, unit_orbits, noninvertible))

    if "trivial-action" in rules and certified:
        multiset = candidate.codegree_multiset()
        mult = multiset.count(group_order)
        if mult < group_order - 1:
            return PruneEvent(
                candidate, "trivial-action",
                f"codegree {group_order} has multiplicity {mult} < "
                f"{group_order - 1}")

    if "stabilizer-divisor" in rules and certified and len(noninvertible) == 1:
        d = next(iter(noninvertible))
        if group_order % d != 0:
            return PruneEvent(
                candidate, "stabilizer-divisor",
                f"dimension {d} does not divide invertible group order "
                f"{group_order}")

    if "two-distinct-codegrees" in rules:
        multiset = candidate.codegree_multiset()
        if (len(set(multiset)) == 2
                and multiset.count(candidate.global_dim) == 1):
            return PruneEvent(
                candidate, "two-distinct-codegrees",
                "two distinct codegree values with the global dimension "
                "occurring once")

    if "closed-prefix" in rules:
        for cut in range(1, len(dims)):
            prefix = dims[:cut]
            top = max(prefix)
            if top * top >= dims[cut]:
                continue  # not certified dim-closed
            feasible, reason = _prefix_feasible(prefix, p)
            if not feasible:
                note = ("" if candidate.rank <= 8
                        else " [prefix rule applied above rank 8]")
                return PruneEvent(
                    candidate, "closed-prefix",
                    f"dim-closed prefix {prefix}: {reason}{note}")

    return None


@dataclass(frozen=True)
class SieveResult:
    rank: int
    prime: int
    lists: tuple
    candidates: tuple
    survivors: tuple
    pruned: tuple  # PruneEvent per rejected candidate


def sieve(rank, prime, rules=DEFAULT_RULES):
    """Enumerate, pair, and prune; returns every stage for inspection."""
    lists = codegree_lists(rank, prime)
    cands = candidates(rank, prime)
    survivors, events = [], []
    for candidate in cands:
        event = prune_candidate(candidate, rules)
        if event is None:
            survivors.append(candidate)
        else:
            events.append(event)
    return SieveResult(rank=rank, prime=prime, lists=lists,
                       candidates=cands, survivors=tuple(survivors),
                       pruned=tuple(events))
