"""Shared inline fixtures for the test suite.

The matrices here are independent transcriptions used as oracles; the catalog
module ships its own copies as JSON fixtures, and test_catalog checks the two
agree. Matrices are written as displayed (rows indexed by the output basis
element, columns by the right factor), so table[i][j][k] = M_i[k][j].
"""

from fusion_forge.ring import FusionRing

# Rank-4 commutative ring with dims 1,1,2,3 and every element self-dual.
ODDEX_MATRICES = (
    (
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
    ),
    (
        (0, 1, 0, 0),
        (1, 0, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
    ),
    (
        (0, 0, 1, 0),
        (0, 0, 1, 0),
        (1, 1, 1, 0),
        (0, 0, 0, 2),
    ),
    (
        (0, 0, 0, 1),
        (0, 0, 0, 1),
        (0, 0, 0, 2),
        (1, 1, 2, 1),
    ),
)


def table_from_matrices(matrices):
    """Convert displayed multiplication matrices to a structure tensor."""
    rank = len(matrices)
    return tuple(
        tuple(tuple(matrices[i][k][j] for k in range(rank)) for j in range(rank))
        for i in range(rank)
    )


def oddex_ring():
    return FusionRing(
        rank=4,
        duality=(0, 1, 2, 3),
        table=table_from_matrices(ODDEX_MATRICES),
        name="oddex",
    )


def trivial_ring():
    return FusionRing(rank=1, duality=(0,), table=(((1,),),), name="trivial")


def cyclic_group_ring(n):
    """Group ring of the cyclic group of order n, duality by inversion."""
    table = tuple(
        tuple(
            tuple(1 if k == (i + j) % n else 0 for k in range(n))
            for j in range(n)
        )
        for i in range(n)
    )
    duality = tuple((-i) % n for i in range(n))
    return FusionRing(rank=n, duality=duality, table=table, name=f"ZC{n}")


def mutate_entry(ring, i, j, k, delta):
    """Copy of the ring with one tensor entry shifted by delta."""
    table = [[list(fiber) for fiber in plane] for plane in ring.table]
    table[i][j][k] += delta
    return FusionRing(ring.rank, ring.duality, table, name=None)


def s3_product_table():
    """Multiplication table of the symmetric group on 3 letters."""
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):
        return tuple(p[q[i]] for i in range(3))

    return [[index[compose(p, q)] for q in perms] for p in perms]


def poly_multiply(*factors):
    """Multiply polynomials given as coefficient tuples, highest degree first."""
    result = (1,)
    for factor in factors:
        out = [0] * (len(result) + len(factor) - 1)
        for i, a in enumerate(result):
            for j, b in enumerate(factor):
                out[i + j] += a * b
        result = tuple(out)
    return result
