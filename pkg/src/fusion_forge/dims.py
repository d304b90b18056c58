"""Frobenius-Perron dimensions, invertible elements, and pointed subrings.

Numeric dimensions come from power iteration on the positive matrix
M[k][j] = sum_i c_{ij}^k (the regular representation of the sum of all basis
elements), normalized so the unit has dimension 1. Integrality is never
decided numerically: the rounded vector is certified by checking the exact
integer eigenvector equations sum_k c_{ij}^k d_k = d_i d_j for every (i, j),
which by Perron-Frobenius uniqueness either all hold or the dimensions are
not integers.

Invertibility is also exact: b_i is invertible iff b_i b_{i*} = b_0 on the
nose, read straight off the table. The pointed subring (all invertibles) is
rebuilt as a FusionRing and its group is identified by order statistics for
orders up to 64.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from fusion_forge.ring import FusionRing, validate

POWER_TOLERANCE = 1e-12
POWER_MAX_ITERATIONS = 100_000


@dataclass(frozen=True)
class DimensionData:
    """Numeric and (when certified) exact dimension data for one ring.

    dims/global_dim are floating point, always present. dims_exact and
    global_dim_exact are populated only when the exact integer certificate
    holds; integral reports that certificate, not a rounding heuristic.
    """

    dims: tuple
    global_dim: float
    integral: bool
    dims_exact: tuple = None
    global_dim_exact: int = None
    iterations: int = 0


def _sum_matrix(ring):
    r = ring.rank
    return [
        [sum(ring.table[i][j][k] for i in range(r)) for j in range(r)]
        for k in range(r)
    ]


def fp_dimensions(ring):
    """Dimension vector by power iteration, with exact integrality check."""
    r = ring.rank
    if r == 1:
        return DimensionData(dims=(1.0,), global_dim=1.0, integral=True,
                             dims_exact=(1,), global_dim_exact=1, iterations=0)
    m = _sum_matrix(ring)
    v = [1.0] * r
    iterations = 0
    while True:
        iterations += 1
        w = [sum(m[k][j] * v[j] for j in range(r)) for k in range(r)]
        scale = w[0]
        if scale <= 0:
            raise ArithmeticError("power iteration lost positivity; ring is not valid")
        w = [x / scale for x in w]
        drift = max(abs(a - b) for a, b in zip(w, v))
        v = w
        if drift < POWER_TOLERANCE:
            break
        if iterations >= POWER_MAX_ITERATIONS:
            raise ArithmeticError(
                f"power iteration did not converge in {POWER_MAX_ITERATIONS} steps"
            )
    global_dim = sum(x * x for x in v)

    candidate = [round(x) for x in v]
    integral = all(x >= 1 for x in candidate) and candidate[0] == 1
    if integral:
        for i in range(r):
            for j in range(r):
                if sum(ring.table[i][j][k] * candidate[k] for k in range(r)) \
                        != candidate[i] * candidate[j]:
                    integral = False
                    break
            if not integral:
                break
    if integral:
        exact = tuple(candidate)
        return DimensionData(dims=tuple(v), global_dim=global_dim, integral=True,
                             dims_exact=exact,
                             global_dim_exact=sum(x * x for x in exact),
                             iterations=iterations)
    return DimensionData(dims=tuple(v), global_dim=global_dim, integral=False,
                         iterations=iterations)


def is_invertible(ring, i):
    """Exact: b_i is invertible iff b_i b_{i*} = b_0 with no other terms."""
    star = ring.duality[i]
    fiber = ring.table[i][star]
    return fiber[0] == 1 and all(fiber[k] == 0 for k in range(1, ring.rank))


def invertible_indices(ring):
    return tuple(i for i in range(ring.rank) if is_invertible(ring, i))


def is_commutative(ring):
    r = ring.rank
    return all(
        ring.table[i][j] == ring.table[j][i]
        for i in range(r) for j in range(i + 1, r)
    )


def stabilizer(ring, x):
    """Invertible indices g with b_g b_x = b_x.

    Uses c_{g,x}^x = 1 and cross-checks the equivalent coefficient
    c_{x,x*}^g (they are equal in any valid ring by the cyclic and duality
    identities); a mismatch raises, signaling an invalid table.
    """
    star_x = ring.duality[x]
    members = []
    for g in invertible_indices(ring):
        direct = ring.table[g][x][x]
        paired = ring.table[x][star_x][g]
        if direct != paired:
            raise ArithmeticError(
                f"stabilizer cross-check failed at g={g}, x={x}: "
                f"c[g][x][x]={direct} but c[x][x*][g]={paired}"
            )
        if direct == 1:
            members.append(g)
    return tuple(members)


def pointed_part(ring):
    """The subring spanned by invertibles, as (FusionRing, index tuple).

    The invertibles are closed under multiplication and duality; their table
    is a Latin square (group multiplication). Both facts are asserted, and
    the extracted subring is re-validated.
    """
    indices = invertible_indices(ring)
    n = len(indices)
    position = {idx: t for t, idx in enumerate(indices)}
    for i in indices:
        assert ring.duality[i] in position, "invertibles not closed under duality"
    table = []
    for i in indices:
        plane = []
        for j in indices:
            fiber = ring.table[i][j]
            support = [k for k in range(ring.rank) if fiber[k] != 0]
            assert len(support) == 1 and fiber[support[0]] == 1 and \
                support[0] in position, \
                f"product of invertibles {i},{j} is not a single invertible"
            plane.append(tuple(1 if t == position[support[0]] else 0 for t in range(n)))
        table.append(tuple(plane))
    sub = FusionRing(
        rank=n,
        duality=tuple(position[ring.duality[i]] for i in indices),
        table=tuple(table),
    )
    # Latin square check: left and right multiplications are bijections.
    product = [[sub.table[a][b].index(1) for b in range(n)] for a in range(n)]
    for a in range(n):
        assert sorted(product[a]) == list(range(n)), "group row not a permutation"
        assert sorted(product[b][a] for b in range(n)) == list(range(n)), \
            "group column not a permutation"
    report = validate(sub)
    assert report.ok, f"pointed part fails validation:\n{report}"
    return sub, indices


# ---------------------------------------------------------------------------
# Group identification for pointed rings (order <= 64)
# ---------------------------------------------------------------------------


def _group_product_table(ring):
    n = ring.rank
    for i in range(n):
        for j in range(n):
            if sum(ring.table[i][j]) != 1 or max(ring.table[i][j]) != 1:
                raise ValueError("ring is not pointed (a basis product is not a single element)")
    return [[ring.table[i][j].index(1) for j in range(n)] for i in range(n)]


def _element_orders(product):
    n = len(product)
    orders = []
    for g in range(n):
        power, order = g, 1
        while power != 0:
            power = product[g][power]
            order += 1
            if order > n:
                raise ValueError("element order exceeds group order; not a group table")
        orders.append(order)
    return orders


def _abelian_groups_of_order(n):
    """All abelian groups of order n as tuples of prime-power cyclic factors."""
    factors = {}
    m, p = n, 2
    while m > 1:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
        if p * p > m and m > 1:
            factors[m] = factors.get(m, 0) + 1
            break

    def partitions(k):
        if k == 0:
            yield ()
            return
        for first in range(k, 0, -1):
            for rest in partitions(k - first):
                if not rest or rest[0] <= first:
                    yield (first,) + rest

    per_prime = []
    for p, e in sorted(factors.items()):
        per_prime.append([(p, part) for part in partitions(e)])
    for combo in itertools.product(*per_prime):
        cyclic = []
        for p, part in combo:
            cyclic.extend(p**e for e in part)
        yield tuple(sorted(cyclic))


def _abelian_order_multiset(cyclic_factors):
    counts = {}
    for element in itertools.product(*(range(c) for c in cyclic_factors)):
        order = 1
        for c, x in zip(cyclic_factors, element):
            if x:
                order = math.lcm(order, c // math.gcd(c, x))
        counts[order] = counts.get(order, 0) + 1
    return counts


def _invariant_factors(cyclic_factors):
    """Convert prime-power factor list to invariant factor form d_1 | d_2 | ..."""
    by_prime = {}
    for c in cyclic_factors:
        p = min(q for q in range(2, c + 1) if c % q == 0)
        by_prime.setdefault(p, []).append(c)
    for p in by_prime:
        by_prime[p].sort(reverse=True)
    depth = max(len(v) for v in by_prime.values())
    invariants = []
    for level in range(depth):
        d = 1
        for p, powers in by_prime.items():
            if level < len(powers):
                d *= powers[level]
        invariants.append(d)
    return sorted(invariants)


def identify_group(ring):
    """Name the group of a pointed ring, for orders up to 64.

    Abelian groups are pinned exactly by their element-order statistics and
    reported in invariant factor form ("C6", "C2 x C4"). Nonabelian groups
    get a coarse but honest label with order and exponent.
    """
    n = ring.rank
    if n > 64:
        raise ValueError(f"group identification supports order <= 64, got {n}")
    if n == 1:
        _group_product_table(ring)
        return "C1"
    product = _group_product_table(ring)
    orders = _element_orders(product)
    exponent = math.lcm(*orders)
    abelian = all(product[i][j] == product[j][i] for i in range(n) for j in range(n))
    if not abelian:
        return f"nonabelian group of order {n}, exponent {exponent}"
    counts = {}
    for o in orders:
        counts[o] = counts.get(o, 0) + 1
    matches = [
        factors for factors in _abelian_groups_of_order(n)
        if _abelian_order_multiset(factors) == counts
    ]
    assert len(matches) == 1, f"order statistics matched {len(matches)} abelian groups"
    invariants = _invariant_factors(matches[0])
    return " x ".join(f"C{d}" for d in invariants)
