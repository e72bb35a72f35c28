"""The complex of ℓ-zero-sumfree subsets of Z/n.

A subset S of Z/n is a face of Δ_{n,ℓ} when no multiset of exactly ℓ
elements of S (repetition allowed) sums to 0 mod n.  Two independent
constructions are provided:

* ``build_complex`` — the (n,ℓ)-congruent (NLC) partition pipeline: the
  minimal non-faces are {0} together with the inclusion-minimal supports of
  partitions of a positive multiple of n into exactly ℓ parts, each ≤ n-1;
  the facets are the maximal sets containing none of them.
* ``brute_force_complex`` — a full 2^n subset scan against the reachability
  face test, kept as the ground-truth oracle (n ≤ 24).
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import CapacityError, SimplicialComplex, _mask_of, _minimal_masks, _vertices_of
from .partitions import enumerate_partitions

BUILD_CAP = 64
BRUTE_FORCE_CAP = 24
FACET_COUNT_CAP = 4096


@dataclass(frozen=True)
class ZsfParams:
    """Parameters (n, ell) with 0 < ell < n."""

    n: int
    ell: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if not 0 < self.ell < self.n:
            raise ValueError(f"ell must satisfy 0 < ell < n, got ell={self.ell}, n={self.n}")


def is_face(params: ZsfParams, members) -> bool:
    """True when no multiset of exactly `ell` elements of `members` sums to 0 mod n.

    Layered reachability: R_0 = {0}, R_{t+1} = R_t + members; face iff
    0 ∉ R_ell.  Cost O(ell · n · |members|) bit operations.
    """
    n, ell = params.n, params.ell
    s = sorted(set(int(x) for x in members))
    if any(x < 0 or x >= n for x in s):
        raise ValueError(f"members must be residues in 0..{n - 1}")
    full = (1 << n) - 1
    reach = 1
    for _ in range(ell):
        nxt = 0
        for x in s:
            nxt |= (reach << x) | (reach >> (n - x))
        reach = nxt & full
        if reach == full:
            return False
    return not reach & 1


def enumerate_nlc(params: ZsfParams) -> list[frozenset]:
    """Underlying sets of all (n,ℓ)-congruent partitions, zero-padded, deduplicated.

    For every m with 0 ≤ m ≤ (n-1)·ell // n, each partition of m·n into at
    most `ell` parts, all ≤ n-1, contributes the set of its distinct parts;
    a partition with fewer than `ell` parts picks up the element 0 (padding
    with zeros is what makes the count exactly `ell`).  Exponential in n; for
    large parameters use `minimal_nonfaces` directly.
    """
    n, ell = params.n, params.ell
    found: set[frozenset] = set()
    for m in range((n - 1) * ell // n + 1):
        for parts in enumerate_partitions(m * n, ell, n - 1):
            members = set(parts)
            if len(parts) < ell:
                members.add(0)
            found.add(frozenset(members))
    return sorted(found, key=lambda s: (len(s), tuple(sorted(s))))


def minimal_nonfaces(params: ZsfParams) -> list[frozenset]:
    """Inclusion-minimal sets among the zero-padded NLC supports.

    These are exactly the minimal non-faces of Δ_{n,ℓ}.  {0} is always one
    (the all-zero multiset), and it absorbs every padded support, so the rest
    are the minimal supports of partitions of a multiple of n into exactly
    `ell` parts ≤ n-1.  Those are searched support-first: a depth-first walk
    over supports in 1..n-1, reusing the reachability layers of `is_face` and
    pruning every branch that already contains a non-face.
    """
    n, ell = params.n, params.ell
    full = (1 << n) - 1
    candidates: list[int] = []

    def rotated(r: int, shift: int) -> int:
        return ((r << shift) | (r >> (n - shift))) & full if shift else r

    # reach[t] = residues reachable as sums of exactly t elements of the
    # current support (repetition allowed, elements optional).
    def walk(support_mask: int, size: int, last: int, reach: list[int]) -> None:
        for v in range(last + 1, n):
            # sums that use j copies of v on top of sums avoiding v
            top = 0
            for j in range(ell + 1):
                r = reach[ell - j]
                if r:
                    top |= rotated(r, (j * v) % n)
            child = support_mask | (1 << v)
            if top & 1:
                candidates.append(child)
                continue
            if size + 1 < ell:
                child_reach = [0] * (ell + 1)
                for t in range(ell + 1):
                    acc = 0
                    for j in range(t + 1):
                        r = reach[t - j]
                        if r:
                            acc |= rotated(r, (j * v) % n)
                    child_reach[t] = acc
                walk(child, size + 1, v, child_reach)

    reach0 = [0] * (ell + 1)
    reach0[0] = 1
    walk(0, 0, 0, reach0)
    masks = [1] + _minimal_masks(candidates)  # {0} first, then the rest
    sets = [frozenset(_vertices_of(m)) for m in masks]
    return sorted(sets, key=lambda s: (len(s), tuple(sorted(s))))


def _maximal_nonface_free(supported: list[int], edges: list[int]) -> list[int]:
    """Maximal subsets of `supported` containing none of the `edges`.

    Depth-first search in ascending vertex order; a branch is cut when
    everything it can still reach lies inside an already-found facet.
    """
    edges_at: dict[int, list[int]] = {v: [] for v in supported}
    for e in edges:
        for v in _vertices_of(e):
            edges_at[v].append(e)
    found: list[int] = []

    def addable(mask: int, v: int) -> bool:
        mv = mask | (1 << v)
        return all(e & ~mv for e in edges_at[v])

    def dfs(mask: int, cand: list[int]) -> None:
        horizon = mask
        for v in cand:
            horizon |= 1 << v
        for f in found:
            if horizon | f == f:
                return
        if not cand:
            if all((mask >> v) & 1 or not addable(mask, v) for v in supported):
                if len(found) >= FACET_COUNT_CAP:
                    raise CapacityError(
                        f"the complex has more than {FACET_COUNT_CAP} facets"
                    )
                found.append(mask)
            return
        for i, v in enumerate(cand):
            child = mask | (1 << v)
            dfs(child, [u for u in cand[i + 1:] if addable(child, u)])

    dfs(0, list(supported))
    return found


def build_complex(params: ZsfParams) -> SimplicialComplex:
    """Δ_{n,ℓ} via the NLC pipeline: minimal non-faces, then maximal avoiding sets.

    Raises CapacityError for n > 64 or when the facet count passes
    FACET_COUNT_CAP (degenerate near-independent instances such as ℓ = 2
    with large even n have exponentially many facets).
    """
    n = params.n
    if n > BUILD_CAP:
        raise CapacityError(f"build_complex supports n ≤ {BUILD_CAP}, got {n}")
    mnf = minimal_nonfaces(params)
    killed = {next(iter(s)) for s in mnf if len(s) == 1}
    supported = [v for v in range(1, n) if v not in killed]
    edges = [_mask_of(s) for s in mnf if len(s) >= 2]
    if not supported:
        return SimplicialComplex(range(n), [frozenset()])
    facets = _maximal_nonface_free(supported, edges)
    return SimplicialComplex(range(n), [frozenset(_vertices_of(m)) for m in facets])


def brute_force_complex(params: ZsfParams) -> SimplicialComplex:
    """Δ_{n,ℓ} by scanning all 2^n subsets with the face test (oracle, n ≤ 24).

    The scan evaluates the same layered reachability as `is_face`, vectorized
    over blocks of subsets; maximal faces are then kept.
    """
    import numpy as np

    n, ell = params.n, params.ell
    if n > BRUTE_FORCE_CAP:
        raise CapacityError(f"brute_force_complex supports n ≤ {BRUTE_FORCE_CAP}, got {n}")
    size = 1 << n
    chunk = 1 << 20
    full = np.uint64((1 << n) - 1)
    one = np.uint64(1)
    face = np.zeros(size, dtype=bool)
    for start in range(0, size, chunk):
        stop = min(start + chunk, size)
        idx = np.arange(start, stop, dtype=np.uint64)
        reach = np.ones(stop - start, dtype=np.uint64)
        for _ in range(ell):
            nxt = np.zeros_like(reach)
            for x in range(n):
                sel = ((idx >> np.uint64(x)) & one).astype(bool)
                if not sel.any():
                    continue
                r = reach[sel]
                if x:
                    r = ((r << np.uint64(x)) | (r >> np.uint64(n - x))) & full
                nxt[sel] |= r
            reach = nxt
        face[start:stop] = (reach & one) == 0
    maximal_masks: list[int] = []
    for start in range(0, size, chunk):
        stop = min(start + chunk, size)
        ids = np.arange(start, stop, dtype=np.int64)
        m = face[start:stop].copy()
        for v in range(n):
            has = ((ids >> v) & 1).astype(bool)
            m &= has | ~face[ids | (1 << v)]
        maximal_masks.extend(int(i) for i in np.nonzero(m)[0] + start)
    facets = [frozenset(_vertices_of(m)) for m in maximal_masks]
    if not facets:
        facets = [frozenset()]
    return SimplicialComplex(range(n), facets)
