"""Built-in rings: group rings, worked examples, and transcribed fixtures.

Two sources feed the catalog. Parametric families (group rings, the rank-4
near-square family `d5_family`) are constructed in code. Individual rings
whose tables were transcribed from printed matrices ship as JSON documents
in the public interchange format under fixtures/ and are cross-verified on
first load: every fixture must pass the full axiom validator, and its
dimension vector must match the registry exactly (or be certified
non-integral where expected). A failed cross-check is a packaging bug and
raises immediately.
"""

from __future__ import annotations

import itertools
import json
from importlib import resources

from fusion_forge.dims import fp_dimensions
from fusion_forge.ring import FusionRing, ring_from_dict, validate


def group_ring(product, name=None):
    """Fusion ring of a finite group given its multiplication table.

    product[i][j] is the index of the product of elements i and j; index 0
    must be the identity. Duality is inversion. The table is checked to be
    a Latin square with two-sided identity before the ring is built.
    """
    n = len(product)
    for i in range(n):
        if len(product[i]) != n:
            raise ValueError("product table is not square")
        if product[0][i] != i or product[i][0] != i:
            raise ValueError("index 0 is not a two-sided identity")
        if sorted(product[i]) != list(range(n)):
            raise ValueError(f"row {i} is not a permutation")
        if sorted(product[j][i] for j in range(n)) != list(range(n)):
            raise ValueError(f"column {i} is not a permutation")
    duality = [None] * n
    for i in range(n):
        for j in range(n):
            if product[i][j] == 0:
                duality[i] = j
    table = tuple(
        tuple(
            tuple(1 if k == product[i][j] else 0 for k in range(n))
            for j in range(n)
        )
        for i in range(n)
    )
    return FusionRing(rank=n, duality=tuple(duality), table=table, name=name)


def abelian_group_ring(orders, name=None):
    """Group ring of a direct product of cyclic groups of the given orders."""
    elements = list(itertools.product(*(range(m) for m in orders)))
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    product = [
        [index[tuple((a + b) % m for a, b, m in zip(x, y, orders))] for y in elements]
        for x in elements
    ]
    return group_ring(product, name=name)


def fibonacci_ring():
    """Rank 2, b1*b1 = 1 + b1; the smallest non-integral example."""
    return FusionRing(
        rank=2, duality=(0, 1),
        table=(((1, 0), (0, 1)), ((0, 1), (1, 1))),
        name="Fib",
    )


def trivial_ring():
    return FusionRing(rank=1, duality=(0,), table=(((1,),),), name="trivial")


def d5_family(a, sign):
    """Rank-4 self-dual family with off-parameter e = a + sign.

    For a = 0, sign = +1 this is the character ring of the dihedral group of
    order 10 (dims 1, 2, 2, 1); a = 1, sign = -1 is the square of the
    Fibonacci ring. a = 0, sign = -1 produces a -1 entry and is not a valid
    ring (callers that need its spectral data use the raw matrices).
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    if a < 0:
        raise ValueError("a must be nonnegative")
    e = a + sign
    products = {
        (1, 1): {0: 1, 1: a, 2: e, 3: e},
        (1, 2): {1: e, 2: e, 3: a},
        (1, 3): {1: e, 2: a, 3: a},
        (2, 2): {0: 1, 1: e, 2: a, 3: e},
        (2, 3): {1: a, 2: e, 3: a},
        (3, 3): {0: 1, 1: a, 2: a, 3: a},
    }
    table = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for j in range(4):
        table[0][j][j] = 1
        table[j][0][j] = 1
    for (i, j), fiber in products.items():
        for k, v in fiber.items():
            table[i][j][k] = v
            table[j][i][k] = v
    return FusionRing(rank=4, duality=(0, 1, 2, 3), table=table,
                      name=f"D5family(a={a}, sign={'+' if sign > 0 else '-'})")


def d5_family_matrices(a, sign):
    """Multiplication matrices of the d5 family, even when entries go negative."""
    ring = d5_family(a, sign)
    r = ring.rank
    return tuple(
        tuple(tuple(ring.table[i][j][k] for j in range(r)) for k in range(r))
        for i in range(r)
    )


def _load_fixture(filename):
    path = resources.files("fusion_forge").joinpath("fixtures", filename)
    return json.loads(path.read_text())


def ehaag_matrix():
    """An 8x8 fusion matrix (from an extended-Haagerup-related ring) whose
    basis element does not commute with its dual: M M^T != M^T M."""
    doc = _load_fixture("ehaag_matrix.json")
    return tuple(tuple(row) for row in doc["matrix"])


# name -> (source, expected exact dims or None for certified-non-integral)
_REGISTRY = {
    "trivial": (trivial_ring, (1,)),
    "Fib": (fibonacci_ring, None),
    "ZC2": (lambda: abelian_group_ring((2,), name="ZC2"), (1,) * 2),
    "ZC3": (lambda: abelian_group_ring((3,), name="ZC3"), (1,) * 3),
    "ZC5": (lambda: abelian_group_ring((5,), name="ZC5"), (1,) * 5),
    "ZC7": (lambda: abelian_group_ring((7,), name="ZC7"), (1,) * 7),
    "ZC2x2": (lambda: abelian_group_ring((2, 2), name="ZC2x2"), (1,) * 4),
    "ZC2x2x2": (lambda: abelian_group_ring((2, 2, 2), name="ZC2x2x2"), (1,) * 8),
    "oddex": ("oddex.json", (1, 1, 2, 3)),
    "R_C7xC3": ("R_C7xC3.json", (1, 1, 1, 3, 3)),
    "R_C13xC3": ("R_C13xC3.json", (1, 1, 1, 3, 3, 3, 3)),
    "R_C11xC5": ("R_C11xC5.json", (1, 1, 1, 1, 1, 5, 5)),
    "S2": ("S2.json", (1, 1, 1, 1, 2, 2, 2)),
    "S4": ("S4.json", (1, 1, 1, 1, 4, 4, 4)),
}

_CACHE = {}


def builtin_names():
    return tuple(sorted(_REGISTRY))


def builtin(name):
    """Load a catalog ring by name, cross-verifying it on first use."""
    if name not in _REGISTRY:
        raise ValueError(f"unknown catalog ring {name!r}; known: {builtin_names()}")
    if name in _CACHE:
        return _CACHE[name]
    source, expected_dims = _REGISTRY[name]
    if callable(source):
        ring = source()
    else:
        ring = ring_from_dict(_load_fixture(source))
    report = validate(ring)
    if not report.ok:
        raise AssertionError(f"catalog ring {name} fails validation:\n{report}")
    data = fp_dimensions(ring)
    if expected_dims is None:
        if data.integral:
            raise AssertionError(f"catalog ring {name} unexpectedly has integer dims")
    elif data.dims_exact != tuple(expected_dims):
        raise AssertionError(
            f"catalog ring {name} dims {data.dims_exact} != expected {tuple(expected_dims)}"
        )
    _CACHE[name] = ring
    return ring


def all_builtins():
    return {name: builtin(name) for name in builtin_names()}
