"""Tests for basis symmetry search and the conformance suite.

Expected automorphism group orders are classical group-theory facts,
derived by hand: a group ring's basis automorphisms are exactly the group
automorphisms, Aut(C2^2) = GL(2,2) of order 6, Aut(C2^3) = GL(3,2) of
order 168, Aut(C5) and Aut(C7) are cyclic of orders 4 and 6, and
Aut(S3) = Inn(S3) of order 6.
"""

from helpers import cyclic_group_ring, oddex_ring, s3_product_table

from fusion_forge.catalog import builtin, group_ring
from fusion_forge.symmetry import (
    BasisMap,
    antiautomorphisms,
    automorphism_group,
    basis_map,
    conformance_suite,
    fixed_point_free,
    is_basis_antiautomorphism,
    is_basis_automorphism,
)

COMMUTATIVE_BUILTINS = (
    "trivial", "Fib", "ZC2", "ZC3", "ZC5", "ZC7", "ZC2x2", "ZC2x2x2",
    "oddex", "R_C7xC3", "R_C13xC3", "R_C11xC5", "S2", "S4",
)

# The classification targets, with the prime order of the symmetry each
# ring is expected to admit.
TARGET_PRIMES = (
    ("ZC3", 2),
    ("ZC2x2", 3),
    ("ZC5", 2),
    ("R_C7xC3", 2),
    ("ZC7", 2),
    ("ZC7", 3),
    ("S2", 3),
    ("R_C13xC3", 2),
    ("S4", 3),
    ("R_C11xC5", 2),
    ("ZC2x2x2", 7),
)


def test_klein_four_automorphism_group_order():
    assert len(automorphism_group(builtin("ZC2x2"))) == 6


def test_elementary_abelian_eight_automorphism_group_order():
    assert len(automorphism_group(builtin("ZC2x2x2"))) == 168


def test_elementary_abelian_eight_has_order_seven_fpf():
    maps = fixed_point_free(builtin("ZC2x2x2"), prime=7)
    assert maps
    for m in maps:
        assert m.order == 7
        assert m.fixed_points == (0,)
        assert len(m.orbits) == 2  # the unit plus one 7-cycle


def test_oddex_automorphism_group_is_trivial():
    maps = automorphism_group(oddex_ring())
    assert len(maps) == 1
    assert maps[0].perm == (0, 1, 2, 3)
    assert fixed_point_free(oddex_ring()) == ()


def test_fibonacci_automorphism_group_is_trivial():
    maps = automorphism_group(builtin("Fib"))
    assert len(maps) == 1
    assert fixed_point_free(builtin("Fib")) == ()


def test_cyclic_three_inversion_is_the_unique_fpf():
    ring = cyclic_group_ring(3)
    maps = fixed_point_free(ring, prime=2)
    assert len(maps) == 1
    assert maps[0].perm == ring.duality == (0, 2, 1)


def test_cyclic_five_automorphisms():
    ring = cyclic_group_ring(5)
    assert len(automorphism_group(ring)) == 4
    maps = fixed_point_free(ring)
    assert len(maps) == 1
    assert maps[0].perm == ring.duality


def test_cyclic_seven_automorphisms_by_order():
    ring = cyclic_group_ring(7)
    group = automorphism_group(ring)
    assert len(group) == 6
    assert len(fixed_point_free(ring, prime=2)) == 1
    order_three = fixed_point_free(ring, prime=3)
    assert len(order_three) == 2
    # g -> g^2 and g -> g^4 are the order-three maps; both avoid fixed points.
    assert {m.perm for m in order_three} == {
        tuple((2 * i) % 7 for i in range(7)),
        tuple((4 * i) % 7 for i in range(7)),
    }
    assert len(fixed_point_free(ring)) == 3


def test_cycle_data_of_cyclic_seven_inversion():
    ring = cyclic_group_ring(7)
    m = basis_map(ring, ring.duality, "automorphism")
    assert m.order == 2
    assert m.fixed_points == (0,)
    assert m.orbits == ((0,), (1, 6), (2, 5), (3, 4))
    assert m.is_fixed_point_free


def test_basis_map_rejects_non_automorphism():
    ring = cyclic_group_ring(4)
    try:
        basis_map(ring, (0, 2, 1, 3), "automorphism")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
    try:
        basis_map(ring, (0, 1, 2, 3), "rotation")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


def test_symmetric_group_ring_automorphisms_and_antiautomorphisms():
    ring = group_ring(s3_product_table(), name="ZS3")
    group = automorphism_group(ring)
    assert len(group) == 6
    anti = antiautomorphisms(ring)
    assert len(anti) == 6
    auto_perms = {m.perm for m in group}
    anti_perms = {m.perm for m in anti}
    # A map that reverses products on a nonabelian group never preserves them.
    assert not auto_perms & anti_perms
    inversion = ring.duality
    assert is_basis_antiautomorphism(ring, inversion)
    assert not is_basis_automorphism(ring, inversion)
    assert inversion in anti_perms


def test_commutative_rings_have_matching_reversed_maps():
    for name in ("oddex", "R_C7xC3", "ZC2x2", "Fib"):
        ring = builtin(name)
        auto = {m.perm for m in automorphism_group(ring)}
        anti = {m.perm for m in antiautomorphisms(ring)}
        assert auto == anti, name


def test_fpf_involutions_are_always_duality():
    for name in COMMUTATIVE_BUILTINS:
        ring = builtin(name)
        for m in fixed_point_free(ring, prime=2):
            assert m.perm == ring.duality, name


def test_self_dual_rings_admit_no_fpf_involution():
    # Every basis element self-dual forces the duality map to be the
    # identity, so no fixed-point-free involution can exist.
    for name in ("oddex", "S2", "S4", "ZC2x2", "ZC2x2x2", "Fib"):
        ring = builtin(name)
        assert ring.duality == tuple(range(ring.rank)), name
        assert fixed_point_free(ring, prime=2) == (), name


def test_duality_is_fpf_for_cross_paired_catalog_rings():
    for name in ("ZC3", "ZC5", "ZC7", "R_C7xC3", "R_C13xC3", "R_C11xC5"):
        ring = builtin(name)
        perms = {m.perm for m in fixed_point_free(ring, prime=2)}
        assert ring.duality in perms, name


def test_each_target_admits_its_expected_symmetry():
    for name, prime in TARGET_PRIMES:
        ring = builtin(name)
        maps = fixed_point_free(ring, prime=prime)
        assert maps, (name, prime)


def test_conformance_suite_passes_on_every_target():
    for name, prime in TARGET_PRIMES:
        ring = builtin(name)
        for m in fixed_point_free(ring, prime=prime):
            report = conformance_suite(ring, m, prime)
            assert report.ok, f"{name} p={prime}\n{report}"


def test_conformance_entry_names_cover_the_involution_checks():
    ring = builtin("R_C7xC3")
    m = fixed_point_free(ring, prime=2)[0]
    report = conformance_suite(ring, m, 2)
    names = [e.name for e in report.entries]
    assert "integral-global-dim" in names
    assert "rank-mod-p" in names
    assert "codegree-orbit-multiplicities" in names
    assert "unique-fixed-character" in names
    assert "involution-is-duality" in names
    assert "codegrees-odd" in names
    assert "codegree-3-pointed-part" in names
    by_name = {e.name: e for e in report.entries}
    assert by_name["codegree-3-pointed-part"].detail == "pointed part is C3"


def test_conformance_flags_pointed_part_for_codegree_five():
    ring = builtin("R_C11xC5")
    m = fixed_point_free(ring, prime=2)[0]
    report = conformance_suite(ring, m, 2)
    by_name = {e.name: e for e in report.entries}
    assert by_name["codegree-5-pointed-part"].ok
    assert by_name["codegree-5-pointed-part"].detail == "pointed part is C5"


def test_conformance_rejects_bad_inputs():
    ring = builtin("ZC2x2")
    identity = basis_map(ring, (0, 1, 2, 3), "automorphism")
    order_three = fixed_point_free(ring, prime=3)[0]
    for bad_call in (
        lambda: conformance_suite(ring, identity, 2),      # not fixed-point-free
        lambda: conformance_suite(ring, order_three, 2),   # order mismatch
        lambda: conformance_suite(ring, (0, 1, 2, 3), 2),  # not a BasisMap
    ):
        try:
            bad_call()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")


def test_conformance_report_renders_lines():
    ring = builtin("ZC3")
    m = fixed_point_free(ring, prime=2)[0]
    report = conformance_suite(ring, m, 2)
    text = str(report)
    assert "integral-global-dim: ok" in text
    assert "rank-mod-p: ok" in text


def test_group_ring_automorphisms_preserve_unit_and_orders():
    ring = builtin("ZC2x2x2")
    for m in automorphism_group(ring):
        assert m.perm[0] == 0
        assert isinstance(m, BasisMap)
        assert m.kind == "automorphism"
