"""Exact integer model of a fusion ring and its defining axioms.

A fusion ring here is a finite basis b_0 .. b_{r-1} with b_0 the unit,
structure constants c[i][j][k] (the coefficient of b_k in b_i * b_j) stored
as a dense integer tensor, and an involutive basis permutation i -> i*
(duality). Construction checks shapes only and raises StructureError on
malformed input; `validate` checks the ring axioms one at a time and reports
the first counterexample for each violated one, so callers can distinguish
"not even a tensor of the right shape" from "a well-shaped tensor that fails
an axiom".

Everything in this module is exact integer arithmetic on plain python ints.
Numeric linear algebra (dimensions, characters) lives in sibling modules.
Ranks are expected to stay small (tables are dense, rank <= 12 or so).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


class StructureError(ValueError):
    """Malformed ring data: wrong shapes, types, or permutations.

    Distinct from axiom failures, which `validate` reports without raising.
    """


# Structure constants must stay well inside machine range; documents are
# rejected at parse time if any entry needs more than 32 bits.
MAX_ENTRY = 2**31 - 1


def _as_int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise StructureError(f"{what} must be an integer, got {value!r}")
    return value


def _normalize_table(table, rank):
    if len(table) != rank:
        raise StructureError(f"table has {len(table)} rows, expected rank {rank}")
    rows = []
    for i, plane in enumerate(table):
        if len(plane) != rank:
            raise StructureError(f"table[{i}] has {len(plane)} rows, expected {rank}")
        cols = []
        for j, fiber in enumerate(plane):
            if len(fiber) != rank:
                raise StructureError(
                    f"table[{i}][{j}] has {len(fiber)} entries, expected {rank}"
                )
            cols.append(tuple(_as_int(v, f"table[{i}][{j}][{k}]") for k, v in enumerate(fiber)))
        rows.append(tuple(cols))
    return tuple(rows)


def _normalize_duality(duality, rank):
    if len(duality) != rank:
        raise StructureError(f"duality has length {len(duality)}, expected rank {rank}")
    perm = tuple(_as_int(v, f"duality[{i}]") for i, v in enumerate(duality))
    if sorted(perm) != list(range(rank)):
        raise StructureError(f"duality {perm} is not a permutation of 0..{rank - 1}")
    for i, star in enumerate(perm):
        if perm[star] != i:
            raise StructureError(f"duality is not involutive at index {i}")
    return perm


@dataclass(frozen=True)
class FusionRing:
    """Immutable fusion ring data: rank, duality permutation, structure tensor.

    table[i][j][k] is the coefficient of b_k in b_i * b_j. The name and labels
    are cosmetic and excluded from equality.
    """

    rank: int
    duality: tuple
    table: tuple
    name: str = field(default=None, compare=False)
    labels: tuple = field(default=None, compare=False)

    def __post_init__(self):
        rank = _as_int(self.rank, "rank")
        if rank < 1:
            raise StructureError(f"rank must be >= 1, got {rank}")
        object.__setattr__(self, "duality", _normalize_duality(self.duality, rank))
        object.__setattr__(self, "table", _normalize_table(self.table, rank))
        if self.name is not None and not isinstance(self.name, str):
            raise StructureError("name must be a string when present")
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != rank or not all(isinstance(s, str) for s in labels):
                raise StructureError("labels must be one string per basis element")
            object.__setattr__(self, "labels", labels)

    def c(self, i, j, k):
        """Structure constant c_{ij}^k."""
        return self.table[i][j][k]

    def dual(self, i):
        return self.duality[i]

    def with_name(self, name):
        return FusionRing(self.rank, self.duality, self.table, name=name, labels=self.labels)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a single axiom check.

    counterexample holds the first offending index tuple, or None when the
    check passed; detail is a short human-readable explanation.
    """

    name: str
    ok: bool
    counterexample: tuple = None
    detail: str = ""

    def __str__(self):
        status = "ok" if self.ok else "FAIL"
        tail = f" at {self.counterexample}: {self.detail}" if not self.ok else ""
        return f"{self.name}: {status}{tail}"


@dataclass(frozen=True)
class ValidationReport:
    """One CheckResult per ring axiom, in a fixed order."""

    checks: tuple

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)


def _check_nonnegative(ring):
    for i in range(ring.rank):
        for j in range(ring.rank):
            for k in range(ring.rank):
                if ring.table[i][j][k] < 0:
                    return CheckResult(
                        "nonnegativity", False, (i, j, k),
                        f"entry {ring.table[i][j][k]} is negative",
                    )
    return CheckResult("nonnegativity", True)


def _check_unit(ring, side):
    r = ring.rank
    for j in range(r):
        for k in range(r):
            got = ring.table[0][j][k] if side == "left" else ring.table[j][0][k]
            want = 1 if j == k else 0
            if got != want:
                where = (0, j, k) if side == "left" else (j, 0, k)
                return CheckResult(
                    f"unit-{side}", False, where,
                    f"unit row entry is {got}, expected {want}",
                )
    return CheckResult(f"unit-{side}", True)


def _check_duality_pairing(ring):
    r = ring.rank
    for i in range(r):
        for j in range(r):
            want = 1 if j == ring.duality[i] else 0
            got = ring.table[i][j][0]
            if got != want:
                return CheckResult(
                    "duality-pairing", False, (i, j, 0),
                    f"c[{i}][{j}][0] = {got}, expected {want} (dual of {i} is {ring.duality[i]})",
                )
    return CheckResult("duality-pairing", True)


def _check_cyclic(ring):
    r, star = ring.rank, ring.duality
    for i in range(r):
        for j in range(r):
            for k in range(r):
                a = ring.table[i][j][k]
                b = ring.table[j][star[k]][star[i]]
                if a != b:
                    return CheckResult(
                        "cyclic-invariance", False, (i, j, k),
                        f"c[{i}][{j}][{k}] = {a} but c[{j}][{star[k]}][{star[i]}] = {b}",
                    )
    return CheckResult("cyclic-invariance", True)


def _check_duality_antiautomorphism(ring):
    r, star = ring.rank, ring.duality
    for i in range(r):
        for j in range(r):
            for k in range(r):
                a = ring.table[i][j][k]
                b = ring.table[star[j]][star[i]][star[k]]
                if a != b:
                    return CheckResult(
                        "duality-antiautomorphism", False, (i, j, k),
                        f"c[{i}][{j}][{k}] = {a} but c[{star[j]}][{star[i]}][{star[k]}] = {b}",
                    )
    return CheckResult("duality-antiautomorphism", True)


def associativity_defect(table, rank, i, j, k, l):
    """lhs - rhs of the associativity equation at (i, j, k, l).

    lhs expands (b_i b_j) b_k and rhs expands b_i (b_j b_k), both reading the
    coefficient of b_l. Zero means the equation holds at this quadruple.
    """
    lhs = sum(table[i][j][m] * table[m][k][l] for m in range(rank))
    rhs = sum(table[j][k][m] * table[i][m][l] for m in range(rank))
    return lhs - rhs


def _check_associativity(ring):
    r = ring.rank
    for i in range(r):
        for j in range(r):
            for k in range(r):
                for l in range(r):
                    d = associativity_defect(ring.table, r, i, j, k, l)
                    if d != 0:
                        return CheckResult(
                            "associativity", False, (i, j, k, l),
                            f"(b{i} b{j}) b{k} and b{i} (b{j} b{k}) differ by {d} at b{l}",
                        )
    return CheckResult("associativity", True)


def validate(ring):
    """Check every fusion ring axiom; never raises on axiom failure.

    Returns a ValidationReport with one entry per axiom. Checks run in a fixed
    order and all of them run even after a failure, so a report shows every
    broken axiom at once (each with its first counterexample).
    """
    checks = (
        _check_nonnegative(ring),
        _check_unit(ring, "left"),
        _check_unit(ring, "right"),
        _check_duality_pairing(ring),
        _check_cyclic(ring),
        _check_duality_antiautomorphism(ring),
        _check_associativity(ring),
    )
    return ValidationReport(checks)


def multiplication_matrix(ring, i):
    """Matrix of left multiplication by b_i: entry [k][j] is c_{ij}^k.

    Column j holds the coordinates of b_i * b_j in the basis. For a valid
    ring the matrix of the dual index is the transpose; that identity is a
    consequence of the axioms and is asserted here as a sanity check, so this
    function should only be called on rings that pass `validate`.
    """
    r = ring.rank
    mat = tuple(tuple(ring.table[i][j][k] for j in range(r)) for k in range(r))
    if i == 0:
        assert all(mat[k][j] == (1 if k == j else 0) for k in range(r) for j in range(r)), \
            "unit matrix is not the identity; run validate() first"
    star = ring.duality[i]
    dual_mat = tuple(tuple(ring.table[star][j][k] for j in range(r)) for k in range(r))
    assert all(
        dual_mat[k][j] == mat[j][k] for k in range(r) for j in range(r)
    ), "dual multiplication matrix is not the transpose; run validate() first"
    return mat


def multiplication_matrices(ring):
    """All multiplication matrices, indexed like the basis."""
    return tuple(multiplication_matrix(ring, i) for i in range(ring.rank))


# ---------------------------------------------------------------------------
# JSON interchange
#
# Document layout:
#   {"name": optional str, "rank": int, "duality": [int]*rank,
#    "table": [[[int]]] with table[i][j][k]}
# Structural problems (shapes, types, oversized entries, duplicate keys)
# raise StructureError; axiom failures are validate()'s job.
# ---------------------------------------------------------------------------

_ALLOWED_KEYS = {"name", "rank", "duality", "table", "labels"}


def _reject_duplicate_keys(pairs):
    seen = set()
    for key, _ in pairs:
        if key in seen:
            raise StructureError(f"duplicate key {key!r} in ring document")
        seen.add(key)
    return dict(pairs)


def ring_from_dict(doc):
    """Build a FusionRing from a parsed JSON document, checking structure."""
    if not isinstance(doc, dict):
        raise StructureError("ring document must be a JSON object")
    unknown = set(doc) - _ALLOWED_KEYS
    if unknown:
        raise StructureError(f"unknown keys in ring document: {sorted(unknown)}")
    for key in ("rank", "duality", "table"):
        if key not in doc:
            raise StructureError(f"ring document is missing {key!r}")
    rank = _as_int(doc["rank"], "rank")
    if rank < 1:
        raise StructureError(f"rank must be >= 1, got {rank}")
    duality = doc["duality"]
    table = doc["table"]
    if not isinstance(duality, (list, tuple)):
        raise StructureError("duality must be an array")
    if not isinstance(table, (list, tuple)):
        raise StructureError("table must be an array")
    for i, plane in enumerate(table):
        if not isinstance(plane, (list, tuple)):
            raise StructureError(f"table[{i}] must be an array")
        for j, fiber in enumerate(plane):
            if not isinstance(fiber, (list, tuple)):
                raise StructureError(f"table[{i}][{j}] must be an array")
            for k, v in enumerate(fiber):
                _as_int(v, f"table[{i}][{j}][{k}]")
                if abs(v) > MAX_ENTRY:
                    raise StructureError(
                        f"table[{i}][{j}][{k}] = {v} does not fit in 32 bits"
                    )
    name = doc.get("name")
    labels = doc.get("labels")
    return FusionRing(rank, tuple(duality), table, name=name,
                      labels=tuple(labels) if labels is not None else None)


def ring_from_json(text):
    """Parse the JSON interchange form of a ring. Raises StructureError."""
    try:
        doc = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise StructureError(f"invalid JSON: {exc}") from exc
    return ring_from_dict(doc)


def ring_to_dict(ring):
    doc = {
        "rank": ring.rank,
        "duality": list(ring.duality),
        "table": [[list(fiber) for fiber in plane] for plane in ring.table],
    }
    if ring.name is not None:
        doc["name"] = ring.name
    if ring.labels is not None:
        doc["labels"] = list(ring.labels)
    return doc


def ring_to_json(ring):
    """Serialize a ring; parse(emit(ring)) round-trips exactly."""
    return json.dumps(ring_to_dict(ring), indent=2, sort_keys=True) + "\n"
