"""Depth of monomial quotient rings from degree complex homology.

Depth is the least |G| + j over integer vectors a (G = negative support) and
j >= 0 such that the degree complex at a has nonzero reduced homology in
degree j - 1.  The minimum is taken over a finite candidate grid: the
complex only depends on which coordinates are negative and on comparisons
against generator exponents, so per coordinate it suffices to test -1, 0 and
the exponent thresholds.  For powers of a fixed ideal the thresholds are
sums of generator exponents, enumerated without expanding the power.

For decompositions the engine never builds complexes pointwise: membership
of the candidate monomials in each component power is tabulated (a boolean
grid per component, filled by a subtract-a-generator recursion), candidate
points are grouped by their pattern of missed components, and homology is
evaluated once per realized pattern.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .complexes import (
    SimplicialComplex,
    _canonical_facets,
    _facets_from_nonfaces,
    homology_nonzero_in_degree,
    is_connected,
)
from .ideals import (
    Decomposition,
    Exponents,
    MonomialIdeal,
    PreconditionError,
    PrimaryComponent,
    Ring,
    expand_pseudo_components,
    make_ideal,
    minimalize,
    saturate_maximal,
)

# Hard cap on any materialized candidate grid; exceeding it signals an input
# far outside desk scale rather than something to silently grind through.
_GRID_CELL_LIMIT = 80_000_000


@dataclass(frozen=True)
class DepthReport:
    """A computed depth with its witnessing degree point.

    ``witness_point`` is the integer vector a and ``witness_j`` the homology
    degree offset: depth = |negative support| + j, and the degree complex at
    the witness has nonzero reduced homology in degree j - 1.
    ``box_sizes`` counts the candidate values per coordinate (including the
    shared negative representative).
    """

    depth: int
    witness_point: tuple[int, ...]
    witness_j: int
    box_sizes: tuple[int, ...]

    @property
    def box_points(self) -> int:
        total = 1
        for s in self.box_sizes:
            total *= s
        return total


def _sums_up_to(values: set[int], t: int) -> set[int]:
    """All sums of at most t elements (with repetition) from ``values``."""
    acc = {0}
    positive = sorted(v for v in values if v > 0)
    for _ in range(t):
        new = {a + v for a in acc for v in positive} - acc
        if not new:
            break
        acc |= new
    return acc


# ---------------------------------------------------------------------------
# General path: arbitrary monomial ideals, complexes computed per point.
# ---------------------------------------------------------------------------


def _general_grids(ideal: MonomialIdeal, margin: int) -> list[list[int]]:
    grids = []
    for i in range(ideal.ring.n):
        vals = {0} | {g[i] for g in ideal.gens if g[i] > 0}
        top = max(vals)
        vals |= {top + k for k in range(1, margin + 1)}
        grids.append(sorted(vals))
    return grids


def _depth_general(ideal: MonomialIdeal, char: int, margin: int) -> DepthReport:
    if ideal.is_zero or ideal.is_unit:
        raise PreconditionError("depth needs a proper nonzero ideal")
    n = ideal.ring.n
    grids = _general_grids(ideal, margin)
    box_sizes = tuple(len(g) + 1 for g in grids)

    level_cache: dict[int, dict[tuple, tuple[int, ...]]] = {}

    def level_data(level: int) -> dict[tuple, tuple[int, ...]]:
        """Distinct canonical complexes at this negative-support size, with one
        representative candidate point each."""
        got = level_cache.get(level)
        if got is not None:
            return got
        distinct: dict[tuple, tuple[int, ...]] = {}
        for gset in itertools.combinations(range(n), level):
            free = [i for i in range(n) if i not in gset]
            for point in itertools.product(*(grids[i] for i in free)):
                a = [-1] * n
                for i, v in zip(free, point):
                    a[i] = v
                nonfaces = set()
                member = False
                for g in ideal.gens:
                    excess = frozenset(i for i in free if g[i] > a[i])
                    if not excess:
                        member = True
                        break
                    nonfaces.add(excess)
                if member:
                    continue
                facets = _facets_from_nonfaces(frozenset(nonfaces), tuple(free))
                key = _canonical_facets(facets)
                distinct.setdefault(key, tuple(a))
        level_cache[level] = distinct
        return distinct

    # Depth is at most dim R/I <= n - 1; search by value |G| + j so no
    # homology is ever computed beyond the answer.
    for value in range(n):
        for level in range(min(value, n) + 1):
            j = value - level
            for key, point in level_data(level).items():
                if key and homology_nonzero_in_degree(key, char, j):
                    return DepthReport(value, point, j, box_sizes)
    raise AssertionError("no homology witness found; candidate grid argument violated")


# ---------------------------------------------------------------------------
# Table path: decompositions, membership tabulated per component power.
# ---------------------------------------------------------------------------


@dataclass
class _EngineComponent:
    support: frozenset[int]
    axes: tuple[int, ...]
    table: np.ndarray  # bool, True where the candidate monomial lies in the power


def _engine_grids(
    ring: Ring, components, t: int, margin: int
) -> list[np.ndarray]:
    per_coord: list[set[int]] = [{0} for _ in range(ring.n)]
    for comp in components:
        for i in comp.support:
            exps = {g[i] for g in comp.ideal.gens}
            per_coord[i] |= _sums_up_to(exps, t)
    grids = []
    for vals in per_coord:
        top = max(vals)
        vals = vals | {top + k for k in range(1, margin + 1)}
        grids.append(np.array(sorted(vals), dtype=np.int64))
    return grids


def _component_table(
    comp: PrimaryComponent, grids: list[np.ndarray], t: int
) -> _EngineComponent:
    axes = tuple(sorted(comp.support))
    shape = tuple(len(grids[i]) for i in axes)
    cells = 1
    for s in shape:
        cells *= s
    if cells > _GRID_CELL_LIMIT:
        raise PreconditionError(
            f"candidate grid for a component has {cells} cells; beyond desk scale"
        )
    gen_maps = []
    for g in comp.ideal.gens:
        maps = []
        valid = np.ones(shape, dtype=bool)
        for pos, i in enumerate(axes):
            vals = grids[i]
            idx = np.searchsorted(vals, vals - g[i], side="right") - 1
            maps.append(np.maximum(idx, 0))
            mask_shape = [1] * len(axes)
            mask_shape[pos] = len(vals)
            valid &= (idx >= 0).reshape(mask_shape)
        gen_maps.append((maps, valid))
    member = np.ones(shape, dtype=bool)
    for _ in range(t):
        nxt = np.zeros(shape, dtype=bool)
        for maps, valid in gen_maps:
            nxt |= member[np.ix_(*maps)] & valid
        member = nxt
    return _EngineComponent(comp.support, axes, member)


def _clusters(eligible: list[int], comps: list[_EngineComponent]) -> list[list[int]]:
    """Group component indices sharing axes; clusters are independent."""
    parent = {i: i for i in eligible}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_axis: dict[int, int] = {}
    for i in eligible:
        for ax in comps[i].axes:
            if ax in by_axis:
                parent[find(by_axis[ax])] = find(i)
            else:
                by_axis[ax] = i
    groups: dict[int, list[int]] = {}
    for i in eligible:
        groups.setdefault(find(i), []).append(i)
    return [sorted(g) for g in sorted(groups.values())]


def _cluster_capabilities(
    cluster: list[int], comps: list[_EngineComponent], grids: list[np.ndarray]
):
    """Per cluster: shared axes, and per component its reduced miss/member arrays.

    Axes used by a single component are reduced away immediately (any over
    the private directions); what remains is broadcast onto the grid of the
    axes shared inside the cluster.
    """
    axis_use: dict[int, int] = {}
    for i in cluster:
        for ax in comps[i].axes:
            axis_use[ax] = axis_use.get(ax, 0) + 1
    shared = sorted(ax for ax, k in axis_use.items() if k >= 2)
    shared_shape = tuple(len(grids[ax]) for ax in shared)
    cells = 1
    for s in shared_shape:
        cells *= s
    if cells > _GRID_CELL_LIMIT:
        raise PreconditionError(
            f"shared candidate grid has {cells} cells; beyond desk scale"
        )
    reduced = []
    for i in cluster:
        comp = comps[i]
        private = tuple(
            pos for pos, ax in enumerate(comp.axes) if ax not in shared
        )
        table = comp.table
        member_any = table.any(axis=private) if private else table
        miss_any = (~table).any(axis=private) if private else ~table
        own_shared = [ax for ax in comp.axes if ax in shared]
        shape = [1] * len(shared)
        for ax, size in zip(own_shared, member_any.shape):
            shape[shared.index(ax)] = size
        reduced.append(
            (i, member_any.reshape(shape), miss_any.reshape(shape))
        )
    return shared, shared_shape, reduced


def _cluster_patterns(
    cluster: list[int], comps: list[_EngineComponent], grids: list[np.ndarray]
) -> list[frozenset[int]]:
    """All realizable miss-patterns within one cluster, sorted for determinism."""
    shared, shared_shape, reduced = _cluster_capabilities(cluster, comps, grids)
    code = np.zeros(shared_shape, dtype=np.int64)
    if len(cluster) > 31:
        raise PreconditionError("more than 31 interacting components; beyond desk scale")
    for pos, (_, member_any, miss_any) in enumerate(reduced):
        code = code + (miss_any.astype(np.int64) << (2 * pos))
        code = code + (member_any.astype(np.int64) << (2 * pos + 1))
    patterns: set[frozenset[int]] = set()
    for cap in np.unique(code):
        cap = int(cap)
        options = []
        for pos, (idx, _, _) in enumerate(reduced):
            can_miss = bool(cap & (1 << (2 * pos)))
            can_member = bool(cap & (1 << (2 * pos + 1)))
            opts = []
            if can_miss:
                opts.append((idx,))
            if can_member:
                opts.append(())
            options.append(opts)
        for combo in itertools.product(*options):
            patterns.add(frozenset(itertools.chain.from_iterable(combo)))
    return sorted(patterns, key=lambda p: (len(p), sorted(p)))


def _witness_for_pattern(
    ring: Ring,
    comps: list[_EngineComponent],
    grids: list[np.ndarray],
    gset: tuple[int, ...],
    eligible: list[int],
    pattern: frozenset[int],
) -> tuple[int, ...]:
    """A candidate vector realizing the pattern (missing exactly the listed components)."""
    a = [0] * ring.n
    for i in gset:
        a[i] = -1
    for cluster in _clusters(eligible, comps):
        shared, shared_shape, reduced = _cluster_capabilities(cluster, comps, grids)
        cond = np.ones(shared_shape, dtype=bool)
        for idx, member_any, miss_any in reduced:
            cond = cond & (miss_any if idx in pattern else member_any)
        cell = np.argwhere(cond)
        if cell.size == 0 and cond.ndim == 0 and bool(cond):
            chosen: tuple[int, ...] = ()
        elif cell.size == 0:
            raise AssertionError("winning pattern is not realizable; engine bug")
        else:
            chosen = tuple(int(x) for x in cell[0])
        for pos, ax in enumerate(shared):
            a[ax] = int(grids[ax][chosen[pos]])
        for idx in cluster:
            comp = comps[idx]
            want = idx not in pattern
            slicer = []
            private_axes = []
            for pos, ax in enumerate(comp.axes):
                if ax in shared:
                    slicer.append(chosen[shared.index(ax)])
                else:
                    slicer.append(slice(None))
                    private_axes.append(ax)
            sub = comp.table[tuple(slicer)]
            if private_axes:
                hit = np.argwhere(np.asarray(sub) == want)
                if hit.size == 0:
                    raise AssertionError("winning pattern is not realizable; engine bug")
                for ax, k in zip(private_axes, hit[0]):
                    a[ax] = int(grids[ax][int(k)])
    return tuple(a)


def _engine_scan(
    ring: Ring,
    components: tuple[PrimaryComponent, ...],
    t: int,
    char: int,
    margin: int,
) -> DepthReport:
    n = ring.n
    grids = _engine_grids(ring, components, t, margin)
    comps = [_component_table(c, grids, t) for c in components]
    full = frozenset(range(n))
    box_sizes = tuple(len(g) + 1 for g in grids)

    level_cache: dict[int, list] = {}

    def level_data(level: int) -> list:
        """Realized (negative support, pattern) pairs with canonical facet keys."""
        got = level_cache.get(level)
        if got is not None:
            return got
        entries = []
        for gset in itertools.combinations(range(n), level):
            gfro = frozenset(gset)
            eligible = [i for i, c in enumerate(comps) if not (c.support & gfro)]
            if not eligible:
                continue
            cluster_sets = [
                _cluster_patterns(cl, comps, grids)
                for cl in _clusters(eligible, comps)
            ]
            for combo in itertools.product(*cluster_sets):
                pattern = frozenset(itertools.chain.from_iterable(combo))
                if not pattern:
                    continue
                facets = frozenset(full - comps[i].support - gfro for i in pattern)
                entries.append(
                    (gset, eligible, pattern, _canonical_facets(facets))
                )
        level_cache[level] = entries
        return entries

    # Depth is at most dim R/I <= n - 1; scanning by value |G| + j computes
    # homology only up to the answer's degree.
    for value in range(n):
        for level in range(min(value, n) + 1):
            j = value - level
            for gset, eligible, pattern, key in level_data(level):
                if key and homology_nonzero_in_degree(key, char, j):
                    point = _witness_for_pattern(
                        ring, comps, grids, gset, eligible, pattern
                    )
                    return DepthReport(value, point, j, box_sizes)
    raise AssertionError("no homology witness found; candidate grid argument violated")


def _engine_connected_level0(
    ring: Ring, components: tuple[PrimaryComponent, ...], t: int, char: int
) -> bool:
    """Whether every degree complex at a non-negative candidate is connected."""
    n = ring.n
    grids = _engine_grids(ring, components, t, 0)
    comps = [_component_table(c, grids, t) for c in components]
    full = frozenset(range(n))
    eligible = list(range(len(comps)))
    cluster_sets = [
        _cluster_patterns(cl, comps, grids) for cl in _clusters(eligible, comps)
    ]
    for combo in itertools.product(*cluster_sets):
        pattern = frozenset(itertools.chain.from_iterable(combo))
        if not pattern:
            continue
        facets = frozenset(full - comps[i].support for i in pattern)
        if not is_connected(SimplicialComplex(full, facets)):
            return False
    return True


# ---------------------------------------------------------------------------
# Public operations.
# ---------------------------------------------------------------------------


def depth(
    obj: MonomialIdeal | Decomposition, field_char: int = 0, box_margin: int = 0
) -> DepthReport:
    """Depth of R modulo the ideal (or the intersection of a decomposition)."""
    if isinstance(obj, Decomposition):
        expanded = expand_pseudo_components(obj)
        return _engine_scan(
            expanded.ring, expanded.components, 1, field_char, box_margin
        )
    return _depth_general(obj, field_char, box_margin)


def depth_of_symbolic_power(
    decomposition: Decomposition,
    t: int,
    field_char: int = 0,
    box_margin: int = 0,
) -> DepthReport:
    """Depth report for the t-th symbolic power, without expanding it."""
    if t < 1:
        raise PreconditionError(f"symbolic power index must be >= 1, got {t}")
    expanded = expand_pseudo_components(decomposition)
    return _engine_scan(expanded.ring, expanded.components, t, field_char, box_margin)


def symbolic_depth_function(
    decomposition: Decomposition,
    t_max: int,
    field_char: int = 0,
    box_margin: int = 0,
    jobs: int = 1,
) -> list[int]:
    """Depths of the symbolic powers for t = 1..t_max."""
    if t_max < 1:
        raise PreconditionError(f"t_max must be >= 1, got {t_max}")
    ts = range(1, t_max + 1)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(
                pool.map(
                    lambda t: depth_of_symbolic_power(
                        decomposition, t, field_char, box_margin
                    ),
                    ts,
                )
            )
    else:
        reports = [
            depth_of_symbolic_power(decomposition, t, field_char, box_margin)
            for t in ts
        ]
    return [r.depth for r in reports]


def _contract_ideal(ideal: MonomialIdeal, j: int) -> MonomialIdeal:
    """Image of I R[x_j^-1] in the ring without x_j (drop the coordinate)."""
    small = Ring(tuple(n for k, n in enumerate(ideal.ring.names) if k != j))
    gens = (g[:j] + g[j + 1 :] for g in ideal.gens)
    return make_ideal(small, gens)


def depth_at_least_1(obj: MonomialIdeal | Decomposition) -> bool:
    """Depth >= 1: the maximal ideal is not associated.

    For a plain ideal this is saturation-stability; a decomposition is
    unmixed by construction, so it is saturated iff no component is primary
    to the maximal ideal.
    """
    if isinstance(obj, Decomposition):
        expanded = expand_pseudo_components(obj)
        full = frozenset(range(expanded.ring.n))
        return all(c.support != full for c in expanded.components)
    if obj.is_zero or obj.is_unit:
        raise PreconditionError("depth needs a proper nonzero ideal")
    return saturate_maximal(obj) == obj


def depth_at_least_2(
    obj: MonomialIdeal | Decomposition, field_char: int = 0, t: int = 1
) -> bool:
    """Depth >= 2 via the three-part criterion.

    (i) depth >= 1; (ii) each one-variable contraction has depth >= 1 in its
    smaller ring; (iii) every degree complex at a non-negative vector is
    connected.  For a decomposition, ``t`` selects the symbolic power
    without expanding it.
    """
    if isinstance(obj, Decomposition):
        if not depth_at_least_1(obj):
            return False
        expanded = expand_pseudo_components(obj)
        n = expanded.ring.n
        for j in range(n):
            survivors = [c for c in expanded.components if j not in c.support]
            if not survivors:
                continue
            small_full = frozenset(range(n - 1))
            shifted = {
                frozenset(i if i < j else i - 1 for i in c.support)
                for c in survivors
            }
            if small_full in shifted:
                return False
        return _engine_connected_level0(
            expanded.ring, expanded.components, t, field_char
        )
    if t != 1:
        raise PreconditionError("symbolic power index needs a decomposition")

    if not depth_at_least_1(obj):
        return False
    n = obj.ring.n
    for j in range(n):
        contracted = _contract_ideal(obj, j)
        if contracted.is_unit:
            continue
        if contracted.is_zero:
            continue
        if saturate_maximal(contracted) != contracted:
            return False
    grids = _general_grids(obj, 0)
    for point in itertools.product(*grids):
        nonfaces = set()
        member = False
        for g in obj.gens:
            excess = frozenset(i for i in range(n) if g[i] > point[i])
            if not excess:
                member = True
                break
            nonfaces.add(excess)
        if member:
            continue
        facets = _facets_from_nonfaces(frozenset(nonfaces), tuple(range(n)))
        if not is_connected(SimplicialComplex(frozenset(range(n)), facets)):
            return False
    return True
