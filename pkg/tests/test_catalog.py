"""Catalog rings: cross-verification, displayed-matrix agreement, families."""

import pytest

from fusion_forge.catalog import (
    abelian_group_ring,
    all_builtins,
    builtin,
    builtin_names,
    d5_family,
    d5_family_matrices,
    ehaag_matrix,
    group_ring,
)
from fusion_forge.dims import fp_dimensions, identify_group, pointed_part
from fusion_forge.ring import multiplication_matrices, multiplication_matrix, validate
from helpers import oddex_ring, s3_product_table


def matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][m] * b[m][j] for m in range(n)) for j in range(n))
        for i in range(n)
    )


class TestBuiltins:
    def test_all_builtins_validate(self):
        for name, ring in all_builtins().items():
            assert validate(ring).ok, name

    def test_known_names(self):
        names = builtin_names()
        for expected in ("trivial", "Fib", "oddex", "ZC3", "ZC2x2", "ZC2x2x2",
                         "R_C7xC3", "R_C13xC3", "R_C11xC5", "S2", "S4"):
            assert expected in names

    def test_unknown_name_raises(self):
        with pytest.raises(ValueError, match="unknown catalog ring"):
            builtin("nope")

    def test_oddex_matches_independent_transcription(self):
        assert builtin("oddex") == oddex_ring()

    def test_global_dims(self):
        expected = {
            "trivial": 1, "ZC2": 2, "ZC3": 3, "ZC5": 5, "ZC7": 7,
            "ZC2x2": 4, "ZC2x2x2": 8, "oddex": 15,
            "R_C7xC3": 21, "R_C13xC3": 39, "R_C11xC5": 55, "S2": 16, "S4": 52,
        }
        for name, want in expected.items():
            data = fp_dimensions(builtin(name))
            assert data.global_dim_exact == want, name

    def test_regular_representation_identity_rank_le_8(self):
        # N_i N_j = sum_k c_{ij}^k N_k over every catalog ring of rank <= 8.
        for name, ring in all_builtins().items():
            if ring.rank > 8:
                continue
            mats = multiplication_matrices(ring)
            r = ring.rank
            for i in range(r):
                for j in range(r):
                    want = tuple(
                        tuple(
                            sum(ring.table[i][j][k] * mats[k][a][b] for k in range(r))
                            for b in range(r)
                        )
                        for a in range(r)
                    )
                    assert matmul(mats[i], mats[j]) == want, (name, i, j)


class TestDisplayedMatrices:
    def test_c13_ring_displayed_matrices(self):
        # The two printed matrices for the rank-7, global-dimension-39 ring.
        # The second one is the corrected form: the printed version has its
        # two middle rows swapped, which contradicts commutativity against
        # the transpose of the first matrix.
        ring = builtin("R_C13xC3")
        assert multiplication_matrix(ring, 3) == (
            (0, 0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, 1, 0, 0),
            (1, 1, 1, 0, 0, 1, 1),
            (0, 0, 0, 2, 0, 1, 0),
            (0, 0, 0, 0, 1, 1, 1),
            (0, 0, 0, 1, 1, 0, 1),
        )
        assert multiplication_matrix(ring, 5) == (
            (0, 0, 0, 0, 0, 0, 1),
            (0, 0, 0, 0, 0, 0, 1),
            (0, 0, 0, 0, 0, 0, 1),
            (0, 0, 0, 1, 0, 1, 1),
            (0, 0, 0, 1, 1, 0, 1),
            (1, 1, 1, 1, 1, 0, 0),
            (0, 0, 0, 0, 1, 2, 0),
        )

    def test_c7_ring_displayed_matrix(self):
        assert multiplication_matrix(builtin("R_C7xC3"), 3) == (
            (0, 0, 0, 0, 1),
            (0, 0, 0, 0, 1),
            (0, 0, 0, 0, 1),
            (1, 1, 1, 1, 1),
            (0, 0, 0, 2, 1),
        )

    def test_s2_s4_displayed_matrices(self):
        assert multiplication_matrix(builtin("S2"), 4) == (
            (0, 0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, 1, 0, 0),
            (1, 1, 1, 1, 0, 0, 0),
            (0, 0, 0, 0, 0, 0, 2),
            (0, 0, 0, 0, 0, 2, 0),
        )
        assert multiplication_matrix(builtin("S4"), 4) == (
            (0, 0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, 1, 0, 0),
            (1, 1, 1, 1, 0, 1, 2),
            (0, 0, 0, 0, 1, 2, 1),
            (0, 0, 0, 0, 2, 1, 1),
        )

    def test_c11_ring_displayed_matrix(self):
        assert multiplication_matrix(builtin("R_C11xC5"), 5) == (
            (0, 0, 0, 0, 0, 0, 1),
            (0, 0, 0, 0, 0, 0, 1),
            (0, 0, 0, 0, 0, 0, 1),
            (0, 0, 0, 0, 0, 0, 1),
            (0, 0, 0, 0, 0, 0, 1),
            (1, 1, 1, 1, 1, 2, 2),
            (0, 0, 0, 0, 0, 3, 2),
        )


class TestPointedParts:
    def test_pointed_part_groups(self):
        expected = {
            "R_C7xC3": "C3", "R_C13xC3": "C3", "R_C11xC5": "C5",
            "S2": "C2 x C2", "S4": "C2 x C2",
            "ZC2x2": "C2 x C2", "ZC2x2x2": "C2 x C2 x C2", "ZC7": "C7",
            "oddex": "C2",
        }
        for name, group in expected.items():
            sub, _ = pointed_part(builtin(name))
            assert identify_group(sub) == group, name


class TestGroupRingConstructor:
    def test_nonabelian_group_ring(self):
        # Symmetric group on 3 letters via its multiplication table.
        ring = group_ring(s3_product_table(), name="ZS3")
        assert validate(ring).ok
        assert identify_group(ring) == "nonabelian group of order 6, exponent 6"

    def test_bad_tables_rejected(self):
        with pytest.raises(ValueError, match="identity"):
            group_ring([[1, 0], [0, 1]])
        with pytest.raises(ValueError, match="permutation"):
            group_ring([[0, 1], [1, 1]])

    def test_abelian_constructor_orders(self):
        ring = abelian_group_ring((2, 3), name="ZC6")
        assert validate(ring).ok
        assert identify_group(ring) == "C6"


class TestD5Family:
    def test_valid_members_validate(self):
        for a in range(4):
            for sign in (+1, -1):
                ring = d5_family(a, sign)
                report = validate(ring)
                if a == 0 and sign == -1:
                    assert not report.ok  # -1 entries
                    broken = {c.name for c in report.failures()}
                    assert "nonnegativity" in broken
                else:
                    assert report.ok, (a, sign)

    def test_dihedral_member_dims(self):
        data = fp_dimensions(d5_family(0, +1))
        assert data.integral
        assert data.dims_exact == (1, 2, 2, 1)
        assert data.global_dim_exact == 10

    def test_fib_square_member(self):
        data = fp_dimensions(d5_family(1, -1))
        assert not data.integral
        golden = (1 + 5**0.5) / 2
        assert data.global_dim == pytest.approx((1 + golden**2) ** 2, abs=1e-6)

    def test_matrices_expose_negative_entries(self):
        mats = d5_family_matrices(0, -1)
        assert min(min(min(row) for row in m) for m in mats) == -1


class TestEhaagMatrix:
    def test_shape_and_noncommuting_transpose(self):
        m = ehaag_matrix()
        assert len(m) == 8 and all(len(row) == 8 for row in m)
        mt = tuple(zip(*m))
        assert matmul(m, mt) != matmul(mt, m)
