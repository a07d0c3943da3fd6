"""Exact arithmetic on monomial ideals represented by minimal generating sets.

A monomial is an exponent vector (a tuple of non-negative ints of the ring's
length); an ideal is the divisibility antichain of its minimal generators,
kept sorted so that every operation is deterministic.  Symbolic powers are
computed from an explicit primary decomposition: the t-th symbolic power of
an unmixed ideal is the intersection of the t-th powers of its components.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

Exponents = tuple[int, ...]


class RingMismatchError(ValueError):
    """Operands live in different ambient rings."""


class PreconditionError(ValueError):
    """A mathematical precondition failed (zero/unit ideal, bad parameter...)."""


@dataclass(frozen=True)
class Ring:
    """Ambient polynomial ring: just a tuple of distinct variable names."""

    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise ValueError("ring needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names: {self.names}")
        object.__setattr__(self, "names", tuple(self.names))

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def __repr__(self):
        return f"Ring({','.join(self.names)})"


def divides(g: Exponents, a: Exponents) -> bool:
    """Componentwise g <= a, i.e. x^g divides x^a."""
    return all(gi <= ai for gi, ai in zip(g, a))


def minimalize(vectors) -> tuple[Exponents, ...]:
    """Reduce a collection of exponent vectors to its divisibility antichain.

    A proper divisor has strictly smaller total degree, so sorting by degree
    lets each vector be checked against the ones already kept.  Large inputs
    (intersections and high powers produce thousands of candidates) go
    through a vectorized dominance check.
    """
    ordered = sorted(set(vectors), key=lambda v: (sum(v), v))
    if len(ordered) > 400:
        return _minimalize_bulk(ordered)
    kept: list[Exponents] = []
    for v in ordered:
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    return tuple(sorted(kept))


def _minimalize_bulk(ordered: list[Exponents]) -> tuple[Exponents, ...]:
    import numpy as np

    arr = np.array(ordered, dtype=np.int64)
    kept_rows = np.empty_like(arr)
    count = 0
    for row in arr:
        if count == 0 or not (kept_rows[:count] <= row).all(axis=1).any():
            kept_rows[count] = row
            count += 1
    return tuple(sorted(tuple(int(x) for x in row) for row in kept_rows[:count]))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its sorted minimal generating set.

    Empty ``gens`` is the zero ideal; the all-zero vector alone is the unit
    ideal.  Construct through :func:`make_ideal`, which minimalizes.
    """

    ring: Ring
    gens: tuple[Exponents, ...]

    def __post_init__(self):
        n = self.ring.n
        for g in self.gens:
            if len(g) != n:
                raise ValueError(f"generator {g} has length {len(g)}, expected {n}")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in generator {g}")
        object.__setattr__(self, "gens", tuple(tuple(g) for g in self.gens))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def max_exponents(self) -> Exponents:
        """Per-coordinate maximum over the minimal generators (0 if zero ideal)."""
        if self.is_zero:
            return (0,) * self.ring.n
        return tuple(max(g[i] for g in self.gens) for i in range(self.ring.n))

    def support(self) -> frozenset[int]:
        """Indices of variables occurring in some minimal generator."""
        return frozenset(i for g in self.gens for i in range(len(g)) if g[i] > 0)

    def __repr__(self):
        if self.is_zero:
            return "MonomialIdeal(0)"
        terms = ", ".join(format_monomial(self.ring, g) for g in self.gens)
        return f"MonomialIdeal({terms})"


def format_monomial(ring: Ring, a: Exponents) -> str:
    parts = []
    for name, e in zip(ring.names, a):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def make_ideal(ring: Ring, raw_gens) -> MonomialIdeal:
    """Build the ideal generated by ``raw_gens``, minimalizing to an antichain."""
    return MonomialIdeal(ring, minimalize(tuple(g) for g in raw_gens))


def zero_ideal(ring: Ring) -> MonomialIdeal:
    return MonomialIdeal(ring, ())


def unit_ideal(ring: Ring) -> MonomialIdeal:
    return MonomialIdeal(ring, ((0,) * ring.n,))


def _check_same_ring(*ideals: MonomialIdeal) -> Ring:
    ring = ideals[0].ring
    for other in ideals[1:]:
        if other.ring != ring:
            raise RingMismatchError(f"{other.ring} != {ring}")
    return ring


def contains_monomial(ideal: MonomialIdeal, a: Exponents) -> bool:
    """x^a lies in the ideal iff some minimal generator divides it."""
    if len(a) != ideal.ring.n:
        raise ValueError(f"vector {a} has length {len(a)}, expected {ideal.ring.n}")
    return any(divides(g, a) for g in ideal.gens)


def ideal_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    ring = _check_same_ring(*ideals)
    return make_ideal(ring, itertools.chain.from_iterable(i.gens for i in ideals))


def ideal_product(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    ring = _check_same_ring(left, right)
    prods = (
        tuple(x + y for x, y in zip(g, h))
        for g in left.gens
        for h in right.gens
    )
    return make_ideal(ring, prods)


def intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise componentwise max (lcm of generators)."""
    ring = _check_same_ring(*ideals)
    result = ideals[0]
    for other in ideals[1:]:
        if result.is_zero or other.is_zero:
            return zero_ideal(ring)
        lcms = (
            tuple(max(x, y) for x, y in zip(g, h))
            for g in result.gens
            for h in other.gens
        )
        result = make_ideal(ring, lcms)
    return result


def power(ideal: MonomialIdeal, t: int) -> MonomialIdeal:
    """t-th ordinary power by iterated product with intermediate minimalization."""
    if t < 1:
        raise PreconditionError(f"power exponent must be >= 1, got {t}")
    result = ideal
    for _ in range(t - 1):
        result = ideal_product(result, ideal)
    return result


def colon_by_variable(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    """Colon ideal I : x_i, dropping one from coordinate i of each generator."""
    if ideal.is_unit:
        raise PreconditionError("colon of the unit ideal")
    shifted = (
        tuple(max(e - 1, 0) if j == i else e for j, e in enumerate(g))
        for g in ideal.gens
    )
    return make_ideal(ideal.ring, shifted)


def saturate_maximal(ideal: MonomialIdeal) -> MonomialIdeal:
    """Saturation I : m^infinity, iterating the intersection of variable colons."""
    if ideal.is_unit:
        raise PreconditionError("saturation of the unit ideal")
    if ideal.is_zero:
        return ideal
    current = ideal
    while True:
        step = intersect(*(colon_by_variable(current, i) for i in range(ideal.ring.n)))
        if step == current:
            return current
        current = step
        if current.is_unit:
            return current


def ideal_contained_in(inner: MonomialIdeal, outer: MonomialIdeal) -> bool:
    """True iff every minimal generator of ``inner`` is a member of ``outer``."""
    _check_same_ring(inner, outer)
    return all(contains_monomial(outer, g) for g in inner.gens)


def containment_witness(inner: MonomialIdeal, outer: MonomialIdeal) -> Exponents | None:
    """A minimal generator of ``inner`` outside ``outer``, or None if contained."""
    _check_same_ring(inner, outer)
    for g in inner.gens:
        if not contains_monomial(outer, g):
            return g
    return None


@dataclass(frozen=True)
class PrimaryComponent:
    """A primary monomial ideal with variable-generated radical.

    ``support`` lists the variables generating the radical prime; the ideal's
    generators live on the support and include a pure power of each support
    variable.  ``complete_intersection`` marks the one exception: a squarefree
    ideal generated by a monomial regular sequence (pairwise disjoint
    supports), whose t-th symbolic power equals its ordinary power.  Such a
    pseudo-component stands for the bundle of its minimal primes.
    """

    support: frozenset[int]
    ideal: MonomialIdeal
    complete_intersection: bool = False

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))
        ideal = self.ideal
        if ideal.is_zero or ideal.is_unit:
            raise PreconditionError("component ideal must be proper and nonzero")
        if not self.support:
            raise PreconditionError("component support is empty")
        if ideal.support() - self.support:
            raise PreconditionError(
                "component generators use variables outside the support"
            )
        if self.complete_intersection:
            if not ideal.is_squarefree:
                raise PreconditionError(
                    "complete-intersection component must be squarefree"
                )
            supports = [frozenset(i for i, e in enumerate(g) if e) for g in ideal.gens]
            for s1, s2 in itertools.combinations(supports, 2):
                if s1 & s2:
                    raise PreconditionError(
                        "complete-intersection generators must have disjoint supports"
                    )
            if frozenset().union(*supports) != self.support:
                raise PreconditionError("support must equal the union of generator supports")
        else:
            for i in self.support:
                if not any(
                    g[i] > 0 and all(e == 0 for j, e in enumerate(g) if j != i)
                    for g in ideal.gens
                ):
                    raise PreconditionError(
                        f"no pure power of variable {i} in the component; not primary"
                    )


@dataclass(frozen=True)
class Decomposition:
    """An unmixed monomial ideal, born as an intersection of primary components.

    Supports of genuine primary components are pairwise incomparable, so the
    intersection is unmixed and the components are exactly the primary parts
    at the minimal primes.  Complete-intersection pseudo-components are exempt
    from the incomparability check (they abbreviate several primes at once).
    """

    ring: Ring
    components: tuple[PrimaryComponent, ...]

    def __post_init__(self):
        if not self.components:
            raise PreconditionError("decomposition needs at least one component")
        object.__setattr__(self, "components", tuple(self.components))
        for comp in self.components:
            if comp.ideal.ring != self.ring:
                raise RingMismatchError("component ring differs from decomposition ring")
        strict = [c for c in self.components if not c.complete_intersection]
        for c1, c2 in itertools.combinations(strict, 2):
            if c1.support <= c2.support or c2.support <= c1.support:
                raise PreconditionError(
                    f"comparable component supports {set(c1.support)}, {set(c2.support)}"
                )

    def intersection(self) -> MonomialIdeal:
        """The represented ideal itself."""
        return intersect(*(c.ideal for c in self.components))


def symbolic_power(decomposition: Decomposition, t: int) -> MonomialIdeal:
    """t-th symbolic power: intersection of the t-th powers of the components."""
    if t < 1:
        raise PreconditionError(f"symbolic power exponent must be >= 1, got {t}")
    return intersect(*(power(c.ideal, t) for c in decomposition.components))


def component_powers(decomposition: Decomposition, s: int) -> Decomposition:
    """The decomposition of the s-th symbolic power (componentwise powers)."""
    if s < 1:
        raise PreconditionError(f"power must be >= 1, got {s}")
    comps = tuple(
        PrimaryComponent(c.support, power(c.ideal, s), c.complete_intersection)
        for c in decomposition.components
    )
    return Decomposition(decomposition.ring, comps)


def prime_component(ring: Ring, support) -> PrimaryComponent:
    """The prime generated by the given variables, as a component."""
    support = frozenset(support)
    gens = []
    for i in sorted(support):
        vec = [0] * ring.n
        vec[i] = 1
        gens.append(tuple(vec))
    return PrimaryComponent(support, make_ideal(ring, gens))


def minimal_primes_squarefree(ideal: MonomialIdeal) -> Decomposition:
    """Decompose a squarefree monomial ideal into its minimal primes.

    The minimal primes correspond to the minimal vertex covers of the
    generator supports; candidates are enumerated over subsets of the
    variables that actually occur.
    """
    if ideal.is_zero or ideal.is_unit:
        raise PreconditionError("need a proper nonzero ideal")
    if not ideal.is_squarefree:
        raise PreconditionError("ideal is not squarefree")
    used = sorted(ideal.support())
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in ideal.gens]
    covers: list[frozenset[int]] = []
    for size in range(1, len(used) + 1):
        for cand in itertools.combinations(used, size):
            cset = frozenset(cand)
            if any(prev <= cset for prev in covers):
                continue
            if all(cset & s for s in supports):
                covers.append(cset)
    covers.sort(key=sorted)
    return Decomposition(
        ideal.ring, tuple(prime_component(ideal.ring, c) for c in covers)
    )


def expand_pseudo_components(decomposition: Decomposition) -> Decomposition:
    """Replace complete-intersection pseudo-components by their minimal primes.

    Exact because for a squarefree monomial complete intersection the
    symbolic and ordinary powers agree, so the t-th power of the
    pseudo-component equals the intersection of the t-th powers of its
    primes.
    """
    if not any(c.complete_intersection for c in decomposition.components):
        return decomposition
    comps: list[PrimaryComponent] = []
    for comp in decomposition.components:
        if comp.complete_intersection:
            comps.extend(minimal_primes_squarefree(comp.ideal).components)
        else:
            comps.append(comp)
    return Decomposition(decomposition.ring, tuple(comps))


def extend_ideal(ideal: MonomialIdeal, ring: Ring, offset: int) -> MonomialIdeal:
    """Re-embed an ideal into a larger ring, shifting variables by ``offset``."""
    n = ring.n
    gens = []
    for g in ideal.gens:
        vec = [0] * n
        vec[offset : offset + len(g)] = g
        gens.append(tuple(vec))
    return MonomialIdeal(ring, tuple(sorted(gens)))


def tensor(left: Decomposition, right: Decomposition) -> Decomposition:
    """Decomposition of the product ideal on two disjoint variable blocks.

    On disjoint blocks the product equals the intersection, so the components
    of the product are simply the components of both factors, re-embedded.
    """
    if set(left.ring.names) & set(right.ring.names):
        raise RingMismatchError("variable blocks overlap; rename before taking products")
    ring = Ring(left.ring.names + right.ring.names)
    off = left.ring.n
    comps = [
        PrimaryComponent(c.support, extend_ideal(c.ideal, ring, 0), c.complete_intersection)
        for c in left.components
    ] + [
        PrimaryComponent(
            frozenset(i + off for i in c.support),
            extend_ideal(c.ideal, ring, off),
            c.complete_intersection,
        )
        for c in right.components
    ]
    return Decomposition(ring, tuple(comps))
