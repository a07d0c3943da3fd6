"""Degree complexes and exact reduced simplicial homology.

The degree complex of an ideal I at an integer vector a collects the
variable subsets F (containing the negative support of a) whose localization
misses x^a; its reduced homology over a field computes the graded pieces of
local cohomology, which is what the depth engine minimizes over.

Conventions: the void complex (no faces at all) has all reduced homology
zero; the empty-face complex {()} has a one-dimensional reduced homology in
degree -1.  Both count as connected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .ideals import (
    Decomposition,
    Exponents,
    MonomialIdeal,
    PreconditionError,
    contains_monomial,
    expand_pseudo_components,
)

DegreePoint = tuple[int, ...]


def negative_support(a: DegreePoint) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(a) if e < 0)


def nonnegative_part(a: DegreePoint) -> Exponents:
    return tuple(max(e, 0) for e in a)


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet description of a simplicial complex on an index vertex set.

    ``facets`` empty means the void complex; a single empty facet means the
    complex whose only face is the empty set.
    """

    vertices: frozenset[int]
    facets: frozenset[frozenset[int]]

    @classmethod
    def from_faces(cls, faces, vertices=None) -> "SimplicialComplex":
        face_sets = [frozenset(f) for f in faces]
        maximal = [
            f
            for f in face_sets
            if not any(f < other for other in face_sets)
        ]
        facets = frozenset(maximal)
        if vertices is None:
            vertices = frozenset().union(*facets) if facets else frozenset()
        return cls(frozenset(vertices), facets)

    @property
    def is_void(self) -> bool:
        return not self.facets

    def faces(self) -> set[tuple[int, ...]]:
        """All faces (as sorted tuples), including the empty face if nonvoid."""
        out: set[tuple[int, ...]] = set()
        for facet in self.facets:
            elems = sorted(facet)
            for size in range(len(elems) + 1):
                out.update(itertools.combinations(elems, size))
        return out

    def __repr__(self):
        if self.is_void:
            return "SimplicialComplex(void)"
        shown = sorted(tuple(sorted(f)) for f in self.facets)
        return f"SimplicialComplex<{shown}>"


def _facet_key(facets) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(f)) for f in facets))


def degree_complex(ideal: MonomialIdeal, a: DegreePoint) -> SimplicialComplex:
    """The degree complex of I at a, from the definition.

    A subset F containing the negative support G of a gives the face F - G
    when x^a stays outside the localization inverting the F variables, i.e.
    when no generator divides x^a on the coordinates outside F.  Faces are
    the subsets avoiding every "excess set" {i : g_i > a_i} - G, so facets
    are complements of minimal transversals of those sets.
    """
    if ideal.is_zero or ideal.is_unit:
        raise PreconditionError("degree complex needs a proper nonzero ideal")
    n = ideal.ring.n
    if len(a) != n:
        raise ValueError(f"vector {a} has length {len(a)}, expected {n}")
    g_neg = negative_support(a)
    free = [i for i in range(n) if i not in g_neg]
    nonfaces = set()
    for g in ideal.gens:
        excess = frozenset(i for i in free if g[i] > a[i])
        if not excess:
            return SimplicialComplex(frozenset(range(n)), frozenset())
        nonfaces.add(excess)
    facets = _facets_from_nonfaces(frozenset(nonfaces), tuple(free))
    return SimplicialComplex(frozenset(range(n)), facets)


@lru_cache(maxsize=65536)
def _facets_from_nonfaces(
    nonfaces: frozenset[frozenset[int]], free: tuple[int, ...]
) -> frozenset[frozenset[int]]:
    """Maximal subsets of ``free`` containing none of the given nonfaces.

    Complements of minimal hitting sets, found by brute force over subset
    sizes (the vertex counts here are small).
    """
    minimal_nf = [
        nf for nf in nonfaces if not any(other < nf for other in nonfaces)
    ]
    hitting: list[frozenset[int]] = []
    for size in range(0, len(free) + 1):
        for cand in itertools.combinations(free, size):
            cset = frozenset(cand)
            if any(prev <= cset for prev in hitting):
                continue
            if all(cset & nf for nf in minimal_nf):
                hitting.append(cset)
    free_set = frozenset(free)
    return frozenset(free_set - h for h in hitting)


def degree_complex_unmixed(
    decomposition: Decomposition, a: DegreePoint
) -> SimplicialComplex:
    """Degree complex of the intersection ideal, from the facet criterion.

    For an unmixed ideal the facets are exactly the complements F of the
    component supports with G_a contained in F and x^(a+) outside the
    component.  Complete-intersection pseudo-components are expanded to
    their minimal primes first.
    """
    decomposition = expand_pseudo_components(decomposition)
    n = decomposition.ring.n
    if len(a) != n:
        raise ValueError(f"vector {a} has length {len(a)}, expected {n}")
    g_neg = negative_support(a)
    a_plus = nonnegative_part(a)
    facets = []
    for comp in decomposition.components:
        if comp.support & g_neg:
            continue
        if not contains_monomial(comp.ideal, a_plus):
            facets.append(frozenset(range(n)) - comp.support - g_neg)
    return SimplicialComplex(frozenset(range(n)), frozenset(facets))


def is_connected(complex_: SimplicialComplex) -> bool:
    """Connectivity of the facet union; void and {()} count as connected."""
    return _connected_facets(complex_.facets)


def _rank_fraction(rows: list[list[int]]) -> int:
    matrix = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(matrix[0]) if matrix else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = 1 / matrix[rank][col]
        matrix[rank] = [x * inv for x in matrix[rank]]
        for r in range(len(matrix)):
            if r != rank and matrix[r][col]:
                f = matrix[r][col]
                matrix[r] = [x - f * y for x, y in zip(matrix[r], matrix[rank])]
        rank += 1
        if rank == len(matrix):
            break
    return rank


class _EntryGrowth(Exception):
    pass


def _rank_int64(matrix, char: int) -> int:
    """Exact rank by fraction-free (Bareiss) elimination in int64.

    Raises _EntryGrowth before any overflow could occur; the caller falls
    back to rational elimination.  With char > 0 the elimination runs mod
    char instead (entries stay below char, no growth).
    """
    import numpy as np

    m = matrix.copy()
    n_rows, n_cols = m.shape
    rank = 0
    prev = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        nz = np.flatnonzero(m[rank:, col])
        if nz.size == 0:
            continue
        pivot_row = rank + int(nz[0])
        if pivot_row != rank:
            m[[rank, pivot_row]] = m[[pivot_row, rank]]
        pivot = int(m[rank, col])
        below = m[rank + 1 :]
        if below.size:
            if char:
                inv = pow(pivot, -1, char)
                factors = (below[:, col] * inv) % char
                below = (below - factors[:, None] * m[rank]) % char
                m[rank + 1 :] = below
            else:
                if max(abs(pivot), int(np.abs(below).max(initial=0)),
                       int(np.abs(m[rank]).max(initial=0))) > 1 << 30:
                    raise _EntryGrowth
                updated = below * pivot - np.outer(below[:, col], m[rank])
                m[rank + 1 :] = updated // prev
                prev = pivot
        rank += 1
    return rank


def _boundary_rank(
    faces_low: tuple[tuple[int, ...], ...],
    faces_high: tuple[tuple[int, ...], ...],
    char: int,
) -> int:
    """Rank of the boundary map from the span of faces_high to faces_low."""
    if not faces_low or not faces_high:
        return 0
    import numpy as np

    index = {f: i for i, f in enumerate(faces_low)}
    matrix = np.zeros((len(faces_high), len(faces_low)), dtype=np.int64)
    for r, face in enumerate(faces_high):
        for k in range(len(face)):
            sub = face[:k] + face[k + 1 :]
            matrix[r, index[sub]] = 1 if k % 2 == 0 else -1
    if char:
        return _rank_int64(matrix % char, char)
    try:
        return _rank_int64(matrix, 0)
    except _EntryGrowth:
        return _rank_fraction(matrix.tolist())


def _canonical_facets(facets) -> tuple[tuple[int, ...], ...]:
    """Relabel vertices by sorted order so translated complexes share caches."""
    facet_sets = [tuple(sorted(f)) for f in facets]
    verts = sorted({v for f in facet_sets for v in f})
    relabel = {v: i for i, v in enumerate(verts)}
    return tuple(sorted(tuple(relabel[v] for v in f) for f in facet_sets))


class _Homology:
    """Lazy reduced homology of one facet list: faces and boundary ranks are
    computed per dimension on first use and cached, so ascending-degree
    queries touch exactly the matrices they need."""

    __slots__ = ("facets", "char", "top", "is_cone", "_faces", "_ranks", "_connected")

    def __init__(self, facets: tuple[tuple[int, ...], ...], char: int):
        self.facets = facets
        self.char = char
        self.top = max((len(f) for f in facets), default=0) - 1
        common = set(facets[0]) if facets else set()
        for f in facets[1:]:
            common &= set(f)
        self.is_cone = bool(common)
        self._faces: dict[int, tuple] = {}
        self._ranks: dict[int, int] = {}
        self._connected: bool | None = None

    def faces(self, d: int) -> tuple[tuple[int, ...], ...]:
        if d == -1:
            return ((),)
        if d < -1 or d > self.top:
            return ()
        got = self._faces.get(d)
        if got is None:
            pool: set[tuple[int, ...]] = set()
            for f in self.facets:
                pool.update(itertools.combinations(f, d + 1))
            got = tuple(sorted(pool))
            self._faces[d] = got
        return got

    def rank(self, d: int) -> int:
        if d < 0 or d > self.top:
            return 0
        got = self._ranks.get(d)
        if got is None:
            got = _boundary_rank(self.faces(d - 1), self.faces(d), self.char)
            self._ranks[d] = got
        return got

    def h(self, j: int) -> int:
        """Dimension of reduced homology in degree j - 1."""
        d = j - 1
        if d < -1 or d > self.top:
            return 0
        return len(self.faces(d)) - self.rank(d) - self.rank(d + 1)

    def connected(self) -> bool:
        if self._connected is None:
            self._connected = _connected_facets(self.facets)
        return self._connected

    def has(self, j: int) -> bool:
        """Whether reduced homology in degree j - 1 is nonzero (fast paths first)."""
        if self.is_cone or j < 0 or j - 1 > self.top:
            return False
        if j == 1:
            return not self.connected()
        return self.h(j) != 0


_HOMOLOGY_CACHE: dict[tuple, _Homology] = {}


def _homology_state(canonical: tuple[tuple[int, ...], ...], char: int) -> _Homology:
    key = (canonical, char)
    state = _HOMOLOGY_CACHE.get(key)
    if state is None:
        state = _Homology(canonical, char)
        _HOMOLOGY_CACHE[key] = state
        if len(_HOMOLOGY_CACHE) > 200_000:
            _HOMOLOGY_CACHE.clear()
    return state


def _connected_facets(facets) -> bool:
    nonempty = [f for f in facets if f]
    if len(nonempty) <= 1:
        return True
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for facet in nonempty:
        verts = sorted(facet)
        for v in verts:
            parent.setdefault(v, v)
        for v in verts[1:]:
            parent[find(verts[0])] = find(v)
    return len({find(v) for v in parent}) == 1


def homology_nonzero_in_degree(facets, char: int, j: int) -> bool:
    """Whether the complex has nonzero reduced homology in degree j - 1."""
    canonical = _canonical_facets(facets)
    if not canonical:
        return False
    return _homology_state(canonical, char).has(j)


def reduced_homology_dims(
    complex_: SimplicialComplex, field_char: int = 0
) -> tuple[int, ...]:
    """Reduced homology dimensions over the field, indexed from degree -1.

    Returns () for the void complex (all reduced homology vanishes).
    """
    if field_char < 0 or field_char == 1:
        raise ValueError(f"field characteristic must be 0 or a prime, got {field_char}")
    canonical = _canonical_facets(complex_.facets)
    if not canonical:
        return ()
    state = _homology_state(canonical, field_char)
    return tuple(state.h(j) for j in range(0, state.top + 2))


def homology_min_j(facets, char: int = 0, cap: int | None = None) -> int | None:
    """Least j >= 0 with nonzero reduced homology in degree j-1, else None."""
    canonical = _canonical_facets(facets)
    if not canonical:
        return None
    state = _homology_state(canonical, char)
    limit = state.top + 1 if cap is None else min(cap, state.top + 1)
    for j in range(0, limit + 1):
        if state.has(j):
            return j
    return None


def euler_characteristic(complex_: SimplicialComplex) -> int:
    """Reduced Euler characteristic: alternating face count including the empty face."""
    total = 0
    for face in complex_.faces():
        total += -1 if len(face) % 2 == 0 else 1
    return total
