"""Basis symmetries: automorphisms, antiautomorphisms, fixed-point-free maps.

A basis automorphism is a permutation of the basis fixing the unit whose
linear extension preserves multiplication: c[i][j][k] = c[p(i)][p(j)][p(k)].
An antiautomorphism reverses factors instead. Both are found by depth-first
search over images, pruning with dimension classes, the forced rule
p(dual(x)) = dual(p(x)), and partial structure-constant comparison; every
leaf is re-verified against the full tensor before being reported.

The conformance suite re-checks, on a concrete (ring, symmetry, prime)
triple, the arithmetic facts that hold for any fusion ring with a
fixed-point-free basis automorphism of prime order and integer codegrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from fusion_forge.dims import (
    fp_dimensions,
    identify_group,
    is_commutative,
    pointed_part,
)
from fusion_forge.spectral import character_table, codegree_profile

CHARACTER_TOLERANCE = 1e-6


@dataclass(frozen=True)
class BasisMap:
    """A verified basis symmetry with its cycle data."""

    perm: tuple
    kind: str  # "automorphism" | "antiautomorphism"
    order: int
    fixed_points: tuple
    orbits: tuple

    def apply(self, i):
        return self.perm[i]

    @property
    def is_fixed_point_free(self):
        return self.fixed_points == (0,)


def _cycle_data(perm):
    n = len(perm)
    seen = [False] * n
    orbits = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        cur = perm[start]
        while cur != start:
            orbit.append(cur)
            seen[cur] = True
            cur = perm[cur]
        orbits.append(tuple(orbit))
    orbits.sort(key=lambda o: o[0])
    order = math.lcm(*(len(o) for o in orbits))
    fixed = tuple(i for i in range(n) if perm[i] == i)
    return order, fixed, tuple(orbits)


def is_basis_automorphism(ring, perm):
    r, t = ring.rank, ring.table
    if perm[0] != 0:
        return False
    return all(
        t[i][j][k] == t[perm[i]][perm[j]][perm[k]]
        for i in range(r) for j in range(r) for k in range(r)
    )


def is_basis_antiautomorphism(ring, perm):
    r, t = ring.rank, ring.table
    if perm[0] != 0:
        return False
    return all(
        t[i][j][k] == t[perm[j]][perm[i]][perm[k]]
        for i in range(r) for j in range(r) for k in range(r)
    )


def basis_map(ring, perm, kind):
    """Wrap a permutation as a verified BasisMap; raises if it is not one."""
    perm = tuple(perm)
    if kind == "automorphism":
        ok = is_basis_automorphism(ring, perm)
    elif kind == "antiautomorphism":
        ok = is_basis_antiautomorphism(ring, perm)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if not ok:
        raise ValueError(f"{perm} is not a basis {kind}")
    order, fixed, orbits = _cycle_data(perm)
    return BasisMap(perm=perm, kind=kind, order=order,
                    fixed_points=fixed, orbits=orbits)


def _dimension_classes(ring):
    """Indices grouped by dimension; exact when integral, else rounded."""
    data = fp_dimensions(ring)
    if data.integral:
        keys = data.dims_exact
    else:
        keys = tuple(round(d, 9) for d in data.dims)
    classes = {}
    for i, key in enumerate(keys):
        classes.setdefault(key, []).append(i)
    return {i: tuple(classes[k]) for k in classes for i in classes[k]}


def _search_maps(ring, reverse):
    """All basis (anti)automorphisms by pruned DFS over images."""
    r = ring.rank
    table = ring.table
    star = ring.duality
    same_class = _dimension_classes(ring)
    images = [None] * r
    images[0] = 0
    used = [False] * r
    used[0] = True
    found = []

    def partial_ok(assigned):
        # Compare c[a][b] against the image fiber (factors swapped when
        # searching antiautomorphisms) wherever both are pinned, and as a
        # multiset on the not-yet-pinned remainder.
        for a in assigned:
            for b in assigned:
                src = table[a][b]
                if reverse:
                    dst = table[images[b]][images[a]]
                else:
                    dst = table[images[a]][images[b]]
                rest_src, rest_dst = [], []
                for k in range(r):
                    if images[k] is not None:
                        if src[k] != dst[images[k]]:
                            return False
                    else:
                        rest_src.append(src[k])
                for k in range(r):
                    if k not in image_set:
                        rest_dst.append(dst[k])
                if sorted(rest_src) != sorted(rest_dst):
                    return False
        return True

    image_set = {0}
    todo = sorted(range(1, r), key=lambda i: (len(same_class[i]), i))

    def extend(pos):
        if pos == len(todo):
            perm = tuple(images)
            ok = (is_basis_antiautomorphism(ring, perm) if reverse
                  else is_basis_automorphism(ring, perm))
            if ok:
                found.append(perm)
            return
        i = todo[pos]
        if images[i] is not None:
            extend(pos + 1)
            return
        for j in same_class[i]:
            if used[j]:
                continue
            # p(dual(i)) = dual(p(i)) is forced for both kinds.
            di, dj = star[i], star[j]
            if di == i:
                if dj != j:
                    continue
                forced = [(i, j)]
            elif images[di] is not None:
                if images[di] != dj:
                    continue
                forced = [(i, j)]
            else:
                if dj == j or used[dj] or dj not in same_class[di]:
                    continue
                forced = [(i, j), (di, dj)]
            for a, b in forced:
                images[a] = b
                used[b] = True
                image_set.add(b)
            assigned = [a for a in range(r) if images[a] is not None]
            if partial_ok(assigned):
                extend(pos + 1)
            for a, b in reversed(forced):
                images[a] = None
                used[b] = False
                image_set.discard(b)
        return

    extend(0)
    return sorted(set(found))


def _assert_group_closure(perms, rank):
    as_set = set(perms)
    assert tuple(range(rank)) in as_set, "identity missing from automorphism set"
    for p in perms:
        inverse = [0] * rank
        for i, v in enumerate(p):
            inverse[v] = i
        assert tuple(inverse) in as_set, "automorphism set not closed under inverse"
        for q in perms:
            composed = tuple(p[q[i]] for i in range(rank))
            assert composed in as_set, "automorphism set not closed under composition"


def automorphism_group(ring):
    """Every basis automorphism, verified, sorted, closure-checked."""
    perms = _search_maps(ring, reverse=False)
    _assert_group_closure(perms, ring.rank)
    return tuple(basis_map(ring, p, "automorphism") for p in perms)


def antiautomorphisms(ring):
    """Every basis antiautomorphism (equals the automorphisms when the ring
    is commutative)."""
    perms = _search_maps(ring, reverse=True)
    return tuple(basis_map(ring, p, "antiautomorphism") for p in perms)


def fixed_point_free(ring, prime=None):
    """Basis automorphisms of prime order whose only fixed point is the unit.

    With prime=None every prime order is admitted; otherwise only maps of
    exactly that order are returned.
    """
    if prime is not None and not _is_prime(prime):
        raise ValueError(f"{prime} is not prime")
    out = []
    for amap in automorphism_group(ring):
        if amap.fixed_points != (0,):
            continue
        if prime is None:
            if not _is_prime(amap.order):
                continue
        elif amap.order != prime:
            continue
        out.append(amap)
    return tuple(out)


def _is_prime(n):
    if n < 2:
        return False
    for q in range(2, int(n**0.5) + 1):
        if n % q == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Conformance suite
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConformanceEntry:
    name: str
    ok: object  # True/False, or None for a reported-only observation
    detail: str = ""

    def __str__(self):
        if self.ok is None:
            return f"{self.name}: reported ({self.detail})"
        return f"{self.name}: {'ok' if self.ok else 'FAIL'}" + (
            f" ({self.detail})" if self.detail else "")


@dataclass(frozen=True)
class ConformanceReport:
    entries: tuple

    @property
    def ok(self):
        return all(e.ok for e in self.entries if e.ok is not None)

    def __str__(self):
        return "\n".join(str(e) for e in self.entries)


def conformance_suite(ring, symmetry, prime):
    """Arithmetic facts that must hold for a ring with a fixed-point-free
    basis automorphism of prime order and integer codegrees.

    Checked: (a) integer dims with global dimension = 1 mod p; (b) rank = 1
    mod p; (c) after removing one copy of the global dimension, codegree
    multiplicities are divisible by p; (d) the Frobenius-Perron character is
    the unique character fixed by the symmetry (commutative rings, numeric);
    (e) for p = 2 on a commutative ring: the symmetry is duality, every
    codegree is odd, and codegree 3 (resp. 5) forces pointed part C3
    (resp. C5). For noncommutative rings, whether duality is the unique
    fixed-point-free involution is reported but not asserted.
    """
    if not isinstance(symmetry, BasisMap):
        raise ValueError("symmetry must be a verified BasisMap")
    if symmetry.order != prime or not _is_prime(prime):
        raise ValueError(f"symmetry order {symmetry.order} is not the prime {prime}")
    if not symmetry.is_fixed_point_free:
        raise ValueError("symmetry is not fixed-point-free")
    entries = []
    data = fp_dimensions(ring)
    if data.integral:
        entries.append(ConformanceEntry(
            "integral-global-dim", data.global_dim_exact % prime == 1,
            f"global dimension {data.global_dim_exact} mod {prime} = "
            f"{data.global_dim_exact % prime}"))
    else:
        entries.append(ConformanceEntry(
            "integral-global-dim", False, "dimensions are not integers"))

    entries.append(ConformanceEntry(
        "rank-mod-p", ring.rank % prime == 1,
        f"rank {ring.rank} mod {prime} = {ring.rank % prime}"))

    profile = codegree_profile(ring)
    if not profile.all_integer:
        entries.append(ConformanceEntry(
            "codegree-orbit-multiplicities", False,
            "codegrees are not all integers"))
    else:
        counts = {}
        for value, mult in profile.integer_roots:
            counts[value] = mult
        global_dim = data.global_dim_exact if data.integral else None
        ok = global_dim in counts
        detail_parts = []
        if ok:
            counts[global_dim] -= 1
            for value, mult in sorted(counts.items()):
                if mult % prime != 0:
                    ok = False
                    detail_parts.append(f"{value} has multiplicity {mult}")
        entries.append(ConformanceEntry(
            "codegree-orbit-multiplicities", ok,
            "; ".join(detail_parts) if detail_parts else
            "all non-global multiplicities divisible by p"))

    commutative = is_commutative(ring)
    if commutative:
        table = character_table(ring)
        fixed_rows = 0
        for row in table.rows:
            moved = tuple(row[symmetry.perm[i]] for i in range(ring.rank))
            if max(abs(a - b) for a, b in zip(moved, row)) < CHARACTER_TOLERANCE:
                fixed_rows += 1
        entries.append(ConformanceEntry(
            "unique-fixed-character", fixed_rows == 1,
            f"{fixed_rows} character(s) fixed by the symmetry"))
    else:
        entries.append(ConformanceEntry(
            "unique-fixed-character", None, "ring is not commutative; skipped"))

    if prime == 2 and commutative:
        entries.append(ConformanceEntry(
            "involution-is-duality", symmetry.perm == ring.duality,
            "fixed-point-free involution must be the duality map"))
        if profile.all_integer:
            odd = all(v % 2 == 1 for v, _ in profile.integer_roots)
            entries.append(ConformanceEntry(
                "codegrees-odd", odd, "every integer codegree is odd"))
            values = {v for v, _ in profile.integer_roots}
            if 3 in values:
                sub, _ = pointed_part(ring)
                entries.append(ConformanceEntry(
                    "codegree-3-pointed-part",
                    identify_group(sub) == "C3",
                    f"pointed part is {identify_group(sub)}"))
            if 5 in values:
                sub, _ = pointed_part(ring)
                entries.append(ConformanceEntry(
                    "codegree-5-pointed-part",
                    identify_group(sub) == "C5",
                    f"pointed part is {identify_group(sub)}"))
    if not commutative:
        involutions = [m for m in fixed_point_free(ring, prime=2)]
        entries.append(ConformanceEntry(
            "duality-unique-fpf-involution", None,
            f"{len(involutions)} fixed-point-free involution(s); "
            f"duality {'is' if any(m.perm == ring.duality for m in involutions) else 'is not'} among them"))
    return ConformanceReport(tuple(entries))
