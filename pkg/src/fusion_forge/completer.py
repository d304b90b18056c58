"""Exhaustive completion of sieve candidates into explicit fusion tables.

A candidate fixes a prime p, a codegree multiset, and one dimension per
basis orbit. This module searches for every fusion table realizing the
candidate together with a basis automorphism of order p that moves every
nontrivial basis element in p-cycles.

The search uses a fixed basis layout: element 0 is the unit, and orbit o
(dimensions ascending) occupies indices 1 + o*p .. (o+1)*p, shifted
cyclically by the automorphism phi. Structure constants are grouped into
symmetry classes: two cells share a class when one is reached from the
other by commutativity, the cyclic coefficient identity, the duality
antiautomorphism, or the phi shift. Assuming commutativity is safe at
these sizes because a noncommutative fusion ring admitting a
fixed-point-free automorphism of prime order has rank at least 11, above
everything this module is asked to search.

Pruning during the depth-first search is exact integer arithmetic:

  * row sums: sum_k c_{ij}^k d_k = d_i d_j for every row (i, j);
  * invertible rows are one-hot, so cells whose output dimension cannot
    match are pinned to zero before the search starts;
  * the trace identity: the squares of all structure constants sum to the
    codegree total (the trace of the Gram matrix sum_i N_i N_i^T), with
    exact equality required of a finished table;
  * diagonal caps: every diagonal Gram entry is at most the largest
    codegree, because the Gram matrix is positive semidefinite.

Associativity is enforced in one of two modes. "incremental" evaluates an
associativity equation as soon as every cell in it is pinned, cutting the
tree early. "leaf" defers associativity entirely and logs each finished
table that fails, together with a witness quadruple, so near-misses can be
exhibited instead of dying invisibly mid-search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from math import isqrt
from time import perf_counter

from .dims import fp_dimensions
from .ring import FusionRing, multiplication_matrices, validate
from .sieve import Candidate
from .spectral import codegree_profile_from_matrices

ASSOC_MODES = ("incremental", "leaf")

# canonical_form enumerates dimension-preserving relabelings, which is
# factorial in the largest dimension class; past rank 9 that is no longer a
# sane default and callers should bring their own invariant.
CANONICAL_MAX_RANK = 9


def orbit_layout(prime, orbit_dims):
    """Basis dimensions and the automorphism permutation of the layout.

    Index 0 is the unit; orbit o occupies 1 + o*prime .. (o+1)*prime and phi
    shifts each orbit one step cyclically, fixing only the unit.
    """
    if prime < 2:
        raise ValueError(f"prime must be at least 2, got {prime}")
    dims = [1]
    phi = [0]
    for o, d in enumerate(orbit_dims):
        if d < 1:
            raise ValueError(f"orbit dimension must be positive, got {d}")
        base = 1 + o * prime
        dims.extend([d] * prime)
        phi.extend(base + (t + 1) % prime for t in range(prime))
    return tuple(dims), tuple(phi)


def _orbit_pairings(orbit_dims):
    """Involutions on the orbit set that preserve orbit dimension."""
    out = []

    def extend(remaining, pairs):
        if not remaining:
            out.append(tuple(pairs))
            return
        o = remaining[0]
        extend(remaining[1:], pairs + [(o, o)])
        for other in remaining[1:]:
            if orbit_dims[other] == orbit_dims[o]:
                rest = [x for x in remaining[1:] if x != other]
                extend(rest, pairs + [(o, other)])

    extend(list(range(len(orbit_dims))), [])
    return tuple(out)


def duality_candidates(prime, orbit_dims):
    """Every duality permutation the layout needs to consider.

    The duality commutes with any basis automorphism, so it acts on whole
    phi-orbits. For order 2 the ring is commutative (rank below 11) and its
    unique fixed-point-free involution is the duality itself, so tau = phi
    is forced. For odd order, an involution commuting with a p-cycle fixes
    a self-paired orbit pointwise, and a cross-paired orbit of equal
    dimension can be matched index to index after choosing orbit
    representatives, which the canonical-form dedup makes harmless.
    """
    dims, phi = orbit_layout(prime, orbit_dims)
    if not orbit_dims:
        return ((0,),)
    if prime == 2:
        return (phi,)
    rank = len(dims)
    out = []
    for pairing in _orbit_pairings(orbit_dims):
        tau = [0] * rank
        for a, b in pairing:
            for t in range(prime):
                tau[1 + a * prime + t] = 1 + b * prime + t
                tau[1 + b * prime + t] = 1 + a * prime + t
        out.append(tuple(tau))
    return tuple(out)


def canonical_form(ring):
    """Minimal flattened table over dimension-preserving relabelings.

    The unit stays at index 0; all other basis elements may be permuted
    within their dimension class. Two rings of rank <= 9 are isomorphic as
    based rings exactly when their canonical forms are equal.
    """
    r = ring.rank
    if r > CANONICAL_MAX_RANK:
        raise ValueError(
            f"canonical_form enumerates relabelings exhaustively and is "
            f"limited to rank <= {CANONICAL_MAX_RANK}, got rank {r}"
        )
    data = fp_dimensions(ring)
    if data.integral:
        keys = data.dims_exact
    else:
        keys = tuple(round(x, 9) for x in data.dims)
    blocks = [
        tuple(i for i in range(r) if keys[i] == key)
        for key in sorted(set(keys))
    ]
    assert blocks[0][0] == 0, "unit must sit in the lowest dimension class"
    choices = [tuple((0,) + p for p in permutations(blocks[0][1:]))]
    choices.extend(tuple(permutations(block)) for block in blocks[1:])
    table = ring.table
    axes = range(r)
    best = None
    for combo in product(*choices):
        sigma = [x for group in combo for x in group]
        flat = tuple(
            table[sigma[a]][sigma[b]][sigma[c]]
            for a in axes for b in axes for c in axes
        )
        if best is None or flat < best:
            best = flat
    return best


@dataclass(frozen=True)
class AssociativityFailure:
    """A finished table whose only defect is associativity.

    witness is a quadruple (i, j, k, l) where expanding (b_i b_j) b_k and
    b_i (b_j b_k) disagree on the coefficient of b_l.
    """

    table: tuple
    witness: tuple


@dataclass
class SearchStats:
    """Counters accumulated across every duality candidate of one search."""

    nodes: int = 0
    forced_zero: int = 0
    dead_ends: int = 0
    budget_rejections: int = 0
    assoc_rejections: int = 0
    codegree_rejections: int = 0
    leaves: int = 0
    tables: int = 0
    rings_found: int = 0
    duplicates: int = 0
    duality_candidates: int = 0
    seconds: float = 0.0


@dataclass(frozen=True)
class CompletionResult:
    """Outcome of completing one candidate: rings, logged failures, stats."""

    candidate: Candidate
    assoc_mode: str
    rings: tuple
    failures: tuple
    stats: SearchStats = field(compare=False)


class _Search:
    """Depth-first completion for one candidate and one duality."""

    def __init__(self, candidate, tau, assoc_mode, stats, rings, failures, seen):
        self.cand = candidate
        self.mode = assoc_mode
        self.stats = stats
        self.rings = rings
        self.failures = failures
        self.seen = seen
        self.r = r = candidate.rank
        self.dims, self.phi = orbit_layout(candidate.prime, candidate.orbit_dims)
        self.tau = tau
        self._build_classes()
        self._build_rows()
        self._build_quads()
        multiset = candidate.codegree_multiset()
        self.s_max = sum(multiset) - (3 * r - 2)
        self.akk_max = candidate.global_dim - 2
        assert self.s_max >= 0 and self.akk_max >= 0
        self.values = [None] * self.n_classes
        self.n_unassigned = self.n_classes
        self.ssum = 0
        self.akk = [0] * r

    # -- static structure ---------------------------------------------------

    def _build_classes(self):
        r, tau, phi, dims = self.r, self.tau, self.phi, self.dims
        cls_of = {}
        cells_by_class = []
        for cell in product(range(1, r), repeat=3):
            if cell in cls_of:
                continue
            seen_cells = {cell}
            stack = [cell]
            while stack:
                i, j, k = stack.pop()
                for img in (
                    (j, i, k),
                    (j, tau[k], tau[i]),
                    (tau[j], tau[i], tau[k]),
                    (phi[i], phi[j], phi[k]),
                ):
                    if img not in seen_cells:
                        seen_cells.add(img)
                        stack.append(img)
            cid = len(cells_by_class)
            members = tuple(sorted(seen_cells))
            cells_by_class.append(members)
            for member in members:
                cls_of[member] = cid
        self.cls_of = cls_of
        self.n_classes = len(cells_by_class)
        self.cls_size = [len(cells) for cells in cells_by_class]
        kcnt = []
        forced = []
        for cells in cells_by_class:
            counts = {}
            for i, j, k in cells:
                counts[k] = counts.get(k, 0) + 1
            kcnt.append(tuple(sorted(counts.items())))
            forced.append(any(
                (dims[i] == 1 and dims[k] != dims[j])
                or (dims[j] == 1 and dims[k] != dims[i])
                for i, j, k in cells
            ))
        self.cls_kcnt = kcnt
        self.cls_forced = forced

    def _build_rows(self):
        r, tau, dims = self.r, self.tau, self.dims
        row_slack = []
        row_classes = []
        cls_rows = [{} for _ in range(self.n_classes)]
        for i in range(1, r):
            for j in range(i, r):
                rid = len(row_slack)
                row_slack.append(dims[i] * dims[j] - (1 if j == tau[i] else 0))
                weights = {}
                for k in range(1, r):
                    cid = self.cls_of[(i, j, k)]
                    weights[cid] = weights.get(cid, 0) + dims[k]
                row_classes.append(tuple(sorted(weights)))
                for cid, w in weights.items():
                    cls_rows[cid][rid] = w
        self.row_slack = row_slack
        self.row_left = [len(cids) for cids in row_classes]
        self.row_classes = row_classes
        self.cls_rows = [tuple(sorted(d.items())) for d in cls_rows]

    def _build_quads(self):
        r, tau, phi, cls_of = self.r, self.tau, self.phi, self.cls_of
        pows = [tuple(range(r))]
        for _ in range(self.cand.prime - 1):
            pows.append(tuple(phi[x] for x in pows[-1]))
        q_ijkl = []
        q_const = []
        q_terms_l = []
        q_terms_r = []
        q_deps = []
        inner = range(1, r)
        for quad in product(inner, repeat=4):
            if min(tuple(pw[x] for x in quad) for pw in pows) != quad:
                continue
            i, j, k, l = quad
            const = ((1 if j == tau[i] else 0) * (1 if k == l else 0)
                     - (1 if k == tau[j] else 0) * (1 if i == l else 0))
            tl = tuple((cls_of[(i, j, m)], cls_of[(m, k, l)]) for m in inner)
            tr = tuple((cls_of[(j, k, m)], cls_of[(i, m, l)]) for m in inner)
            deps = set()
            for a, b in tl:
                deps.add(a)
                deps.add(b)
            for a, b in tr:
                deps.add(a)
                deps.add(b)
            q_ijkl.append(quad)
            q_const.append(const)
            q_terms_l.append(tl)
            q_terms_r.append(tr)
            q_deps.append(tuple(sorted(deps)))
        self.q_ijkl = q_ijkl
        self.q_const = q_const
        self.q_terms_l = q_terms_l
        self.q_terms_r = q_terms_r
        if self.mode == "incremental":
            self.pending = [len(deps) for deps in q_deps]
            cls_quads = [[] for _ in range(self.n_classes)]
            for qid, deps in enumerate(q_deps):
                for cid in deps:
                    cls_quads[cid].append(qid)
            self.cls_quads = [tuple(qs) for qs in cls_quads]
        else:
            self.pending = []
            self.cls_quads = [()] * self.n_classes

    # -- dynamic state ------------------------------------------------------

    def _apply(self, pairs):
        """Assign classes (plus the zero-fill cascade); reversible via frame."""
        frame = []
        ok = True
        queue = list(pairs)
        fired = []
        while queue:
            cid, value = queue.pop()
            if self.values[cid] is not None:
                continue
            self.values[cid] = value
            frame.append((cid, value))
            self.n_unassigned -= 1
            sq = value * value
            self.ssum += sq * self.cls_size[cid]
            if self.ssum > self.s_max:
                ok = False
            for k, cnt in self.cls_kcnt[cid]:
                self.akk[k] += sq * cnt
                if self.akk[k] > self.akk_max:
                    ok = False
            for rid, w in self.cls_rows[cid]:
                self.row_slack[rid] -= value * w
                self.row_left[rid] -= 1
                slack = self.row_slack[rid]
                if slack < 0:
                    ok = False
                elif self.row_left[rid] == 0:
                    if slack != 0:
                        ok = False
                elif slack == 0:
                    for other in self.row_classes[rid]:
                        if self.values[other] is None:
                            queue.append((other, 0))
            for qid in self.cls_quads[cid]:
                self.pending[qid] -= 1
                if self.pending[qid] == 0:
                    fired.append(qid)
            if not ok:
                break
        if ok:
            for qid in fired:
                if self._defect(qid) != 0:
                    self.stats.assoc_rejections += 1
                    ok = False
                    break
        self.stats.forced_zero += max(0, len(frame) - len(pairs))
        return frame, ok

    def _undo(self, frame):
        for cid, value in reversed(frame):
            for qid in self.cls_quads[cid]:
                self.pending[qid] += 1
            for rid, w in self.cls_rows[cid]:
                self.row_slack[rid] += value * w
                self.row_left[rid] += 1
            sq = value * value
            for k, cnt in self.cls_kcnt[cid]:
                self.akk[k] -= sq * cnt
            self.ssum -= sq * self.cls_size[cid]
            self.values[cid] = None
            self.n_unassigned += 1

    def _defect(self, qid):
        values = self.values
        total = self.q_const[qid]
        for a, b in self.q_terms_l[qid]:
            total += values[a] * values[b]
        for a, b in self.q_terms_r[qid]:
            total -= values[a] * values[b]
        return total

    def _cap(self, cid):
        cap = isqrt((self.s_max - self.ssum) // self.cls_size[cid])
        for k, cnt in self.cls_kcnt[cid]:
            x = isqrt((self.akk_max - self.akk[k]) // cnt)
            if x < cap:
                cap = x
        for rid, w in self.cls_rows[cid]:
            x = self.row_slack[rid] // w
            if x < cap:
                cap = x
        return cap

    def _select(self):
        best = None
        for cid in range(self.n_classes):
            if self.values[cid] is None:
                entry = (self._cap(cid), cid)
                if best is None or entry < best:
                    best = entry
                    if entry[0] == 0:
                        break
        return best

    # -- search -------------------------------------------------------------

    def run(self):
        pre = [(cid, 0) for cid in range(self.n_classes) if self.cls_forced[cid]]
        frame, ok = self._apply(pre)
        if ok:
            self._dfs()
        else:
            self.stats.dead_ends += 1
        self._undo(frame)

    def _dfs(self):
        if self.n_unassigned == 0:
            self._leaf()
            return
        cap, cid = self._select()
        for value in range(cap, -1, -1):
            self.stats.nodes += 1
            frame, ok = self._apply([(cid, value)])
            if ok:
                self._dfs()
            else:
                self.stats.dead_ends += 1
            self._undo(frame)

    def _leaf(self):
        self.stats.leaves += 1
        if self.ssum != self.s_max:
            self.stats.budget_rejections += 1
            return
        if self.mode == "leaf":
            for qid in range(len(self.q_ijkl)):
                if self._defect(qid) != 0:
                    self.stats.assoc_rejections += 1
                    self.failures.append(AssociativityFailure(
                        table=self._table(), witness=self.q_ijkl[qid]))
                    return
        else:
            assert not any(self.pending), "associativity counters out of sync"
        self.stats.tables += 1
        self._emit()

    def _table(self):
        r, tau, cls_of, values = self.r, self.tau, self.cls_of, self.values
        planes = []
        for i in range(r):
            plane = []
            for j in range(r):
                fiber = [0] * r
                if i == 0:
                    fiber[j] = 1
                elif j == 0:
                    fiber[i] = 1
                else:
                    fiber[0] = 1 if j == tau[i] else 0
                    for k in range(1, r):
                        fiber[k] = values[cls_of[(i, j, k)]]
                plane.append(tuple(fiber))
            planes.append(tuple(plane))
        return tuple(planes)

    def _emit(self):
        ring = FusionRing(self.r, self.tau, self._table())
        report = validate(ring)
        assert report.ok, f"search produced an invalid table:\n{report}"
        profile = codegree_profile_from_matrices(multiplication_matrices(ring))
        if (not profile.all_integer
                or tuple(profile.multiset()) != self.cand.codegree_multiset()):
            self.stats.codegree_rejections += 1
            return
        phi, table = self.phi, ring.table
        assert all(
            table[phi[i]][phi[j]][phi[k]] == table[i][j][k]
            for i in range(self.r) for j in range(self.r) for k in range(self.r)
        ), "layout automorphism broken by construction"
        key = canonical_form(ring)
        if key in self.seen:
            self.stats.duplicates += 1
            return
        self.seen.add(key)
        self.rings.append(ring)
        self.stats.rings_found += 1


def complete(candidate, assoc_mode="incremental"):
    """Search every table realizing the candidate; returns a CompletionResult.

    Rings in the result are pairwise nonisomorphic (canonical-form dedup) and
    each passes full validation, has exactly the candidate's codegree
    multiset, and admits the layout automorphism. In "leaf" mode, failures
    additionally holds every trace-exact table that fell only to
    associativity, each with a witness quadruple.
    """
    if not isinstance(candidate, Candidate):
        raise ValueError(f"expected a sieve Candidate, got {candidate!r}")
    if assoc_mode not in ASSOC_MODES:
        raise ValueError(f"assoc_mode must be one of {ASSOC_MODES}, got {assoc_mode!r}")
    start = perf_counter()
    stats = SearchStats()
    rings = []
    failures = []
    seen = set()
    if candidate.orbit_dims:
        taus = duality_candidates(candidate.prime, candidate.orbit_dims)
        stats.duality_candidates = len(taus)
        for tau in taus:
            _Search(candidate, tau, assoc_mode, stats, rings, failures, seen).run()
    stats.seconds = perf_counter() - start
    return CompletionResult(candidate=candidate, assoc_mode=assoc_mode,
                            rings=tuple(rings), failures=tuple(failures),
                            stats=stats)
