"""Exact membership oracles for powers and integral closures of monomial ideals.

For an ideal I with generator exponent matrix M (one column per generator),
``nu(a, I)`` maximizes |v| over non-negative integer vectors v with
v.M <= a, and ``nu_star`` is its rational relaxation.  x^a lies in I^t iff
nu >= t, and in the integral closure of I^t iff nu_star >= t; the closure
itself is the set of lattice points of the Newton polyhedron.  All
arithmetic is over ints and Fractions: no floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .ideals import (
    Decomposition,
    Exponents,
    MonomialIdeal,
    PreconditionError,
    contains_monomial,
    intersect,
    make_ideal,
    power,
)


@dataclass(frozen=True)
class NuValue:
    """An optimum |v| together with an attaining witness vector."""

    value: int | Fraction
    witness: tuple


def _check_oracle_input(a: Exponents, ideal: MonomialIdeal):
    if ideal.is_zero or ideal.is_unit:
        raise PreconditionError("membership oracle needs a proper nonzero ideal")
    if len(a) != ideal.ring.n:
        raise ValueError(f"vector {a} has length {len(a)}, expected {ideal.ring.n}")
    if any(e < 0 for e in a):
        raise ValueError(f"negative exponent in {a}")


def _pure_power_layout(ideal: MonomialIdeal) -> list[tuple[int, int]] | None:
    """(variable, exponent) per generator if each is a pure power, else None.

    Minimality guarantees the variables are distinct, so the integer program
    splits into independent floor divisions.
    """
    layout = []
    for g in ideal.gens:
        nz = [(i, e) for i, e in enumerate(g) if e]
        if len(nz) != 1:
            return None
        layout.append(nz[0])
    return layout


def nu(a: Exponents, ideal: MonomialIdeal) -> NuValue:
    """Exact integer optimum: max |v| over v in N^m with v.M <= a."""
    _check_oracle_input(a, ideal)
    gens = ideal.gens

    layout = _pure_power_layout(ideal)
    if layout is not None:
        witness = tuple(a[i] // e for i, e in layout)
        return NuValue(sum(witness), witness)

    if len(gens) == 1:
        g = gens[0]
        val = min(a[i] // g[i] for i in range(len(g)) if g[i])
        return NuValue(val, (val,))

    memo: dict[Exponents, tuple[int, int | None]] = {}

    def best(b: Exponents) -> int:
        entry = memo.get(b)
        if entry is not None:
            return entry[0]
        best_val, best_gen = 0, None
        for idx, g in enumerate(gens):
            if all(gi <= bi for gi, bi in zip(g, b)):
                val = 1 + best(tuple(bi - gi for bi, gi in zip(b, g)))
                if val > best_val:
                    best_val, best_gen = val, idx
        memo[b] = (best_val, best_gen)
        return best_val

    value = best(tuple(a))
    witness = [0] * len(gens)
    point = tuple(a)
    while True:
        _, gen_idx = memo[point]
        if gen_idx is None:
            break
        witness[gen_idx] += 1
        point = tuple(bi - gi for bi, gi in zip(point, gens[gen_idx]))
    return NuValue(value, tuple(witness))


def _simplex_max(columns: list[Exponents], bounds: Exponents) -> tuple[Fraction, list[Fraction]]:
    """Maximize sum(v) subject to v >= 0 and, per row i, sum_j v_j*columns[j][i] <= bounds[i].

    Dense tableau simplex over Fractions with Bland's pivoting rule, which
    cannot cycle.  The origin is feasible (bounds >= 0) and every column has
    a positive entry, so the optimum is attained at a vertex.
    """
    m = len(columns)
    n = len(bounds)
    # Tableau rows: [A | I | b]; objective: maximize sum of the first m vars.
    tab = [
        [Fraction(columns[j][i]) for j in range(m)]
        + [Fraction(1) if k == i else Fraction(0) for k in range(n)]
        + [Fraction(bounds[i])]
        for i in range(n)
    ]
    # Reduced costs for nonbasic structural variables; slacks start basic.
    cost = [Fraction(1)] * m + [Fraction(0)] * n + [Fraction(0)]
    basis = list(range(m, m + n))

    while True:
        enter = next((j for j in range(m + n) if cost[j] > 0), None)
        if enter is None:
            break
        ratio, leave = None, None
        for i in range(n):
            coeff = tab[i][enter]
            if coeff > 0:
                r = tab[i][-1] / coeff
                if ratio is None or r < ratio or (r == ratio and basis[i] < basis[leave]):
                    ratio, leave = r, i
        if leave is None:
            raise AssertionError("unbounded membership program; ideal invariants violated")
        pivot = tab[leave][enter]
        tab[leave] = [x / pivot for x in tab[leave]]
        for i in range(n):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        if cost[enter]:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, tab[leave])]
        basis[leave] = enter

    solution = [Fraction(0)] * (m + n)
    for i, var in enumerate(basis):
        solution[var] = tab[i][-1]
    return -cost[-1], solution[:m]


def nu_star(a: Exponents, ideal: MonomialIdeal) -> NuValue:
    """Exact rational optimum of the relaxation, attained at a polyhedron vertex."""
    _check_oracle_input(a, ideal)
    layout = _pure_power_layout(ideal)
    if layout is not None:
        witness = tuple(Fraction(a[i], e) for i, e in layout)
        return NuValue(sum(witness), witness)
    value, witness = _simplex_max(list(ideal.gens), tuple(a))
    return NuValue(value, tuple(witness))


def in_power(a: Exponents, ideal: MonomialIdeal, t: int) -> bool:
    """x^a in I^t, decided without expanding the power."""
    if t < 1:
        raise PreconditionError(f"power must be >= 1, got {t}")
    return nu(a, ideal).value >= t


def in_closure_of_power(a: Exponents, ideal: MonomialIdeal, t: int) -> bool:
    """x^a in the integral closure of I^t."""
    if t < 1:
        raise PreconditionError(f"power must be >= 1, got {t}")
    return nu_star(a, ideal).value >= t


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Monomials of the Newton polyhedron of I, as a minimal generating set.

    Any minimal generator of the closure is bounded per coordinate by the
    maximum generator exponent: above that, dropping one from the coordinate
    stays inside the polyhedron, contradicting minimality.  So a box search
    with the rational oracle suffices.
    """
    if ideal.is_zero or ideal.is_unit:
        raise PreconditionError("integral closure needs a proper nonzero ideal")
    box = ideal.max_exponents()
    members = []
    for a in itertools.product(*(range(b + 1) for b in box)):
        if contains_monomial(ideal, a) or nu_star(a, ideal).value >= 1:
            members.append(a)
    return make_ideal(ideal.ring, members)


def is_integrally_closed(ideal: MonomialIdeal) -> bool:
    if ideal.is_zero or ideal.is_unit:
        raise PreconditionError("closedness test needs a proper nonzero ideal")
    return integral_closure(ideal) == ideal


def closure_filtration(decomposition: Decomposition, t: int) -> MonomialIdeal:
    """Intersection of the integral closures of the t-th component powers.

    Sandwiched between the t-th symbolic power and beyond its closure:
    I^(t) <= closure(I^(t)) <= result.
    """
    if t < 1:
        raise PreconditionError(f"filtration index must be >= 1, got {t}")
    return intersect(
        *(integral_closure(power(c.ideal, t)) for c in decomposition.components)
    )
