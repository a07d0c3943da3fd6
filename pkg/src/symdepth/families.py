"""Parameterized ideal families with known symbolic depth behavior.

Each family is an M/P/Q triple of primary ideals in k[x,y,z] (radicals
(x,y,z), (x,y) and (z) respectively); the assembled five-variable ideal
M * (P,u) * (Q,v) (as an intersection) has symbolic depth 2 at exactly the
exponents t with M^t contained in P^t + Q^t, and 1 elsewhere.  Choosing the
triples appropriately realizes the jump functions used as building blocks:

* ``typeA``   depth 1,...,1,2,2,...        (jump at t = m)
* ``typeB``   depth 1,...,1,2,1,1,...      (single 2 at t = m)
* ``typeC``   depth 2 exactly at t = d mod m, periodically

plus the six-variable squarefree family ``thm28`` whose depth drops exactly
on the exponent set E(s), and the five-variable ``example6`` with depth
2,1,2,2,...
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .ideals import (
    Decomposition,
    Exponents,
    MonomialIdeal,
    PreconditionError,
    PrimaryComponent,
    Ring,
    extend_ideal,
    format_monomial,
    ideal_contained_in,
    ideal_sum,
    make_ideal,
    minimal_primes_squarefree,
    power,
    prime_component,
)
from .membership import nu

RING_XYZ = Ring(("x", "y", "z"))
RING_XYZUV = Ring(("x", "y", "z", "u", "v"))


@dataclass(frozen=True)
class MPQTriple:
    """Primary triple in k[x,y,z] with radicals (x,y,z), (x,y), (z).

    ``M`` etc. are the expanded ideals; the base/multiplicity pairs record
    M = m_base^m_mult so that powers of M can be enumerated as products of
    the few base generators instead of expanding M^t.
    """

    M: MonomialIdeal
    P: MonomialIdeal
    Q: MonomialIdeal
    m_base: MonomialIdeal
    m_mult: int
    p_base: MonomialIdeal
    p_mult: int
    q_base: MonomialIdeal
    q_mult: int

    def __post_init__(self):
        for ideal in (self.M, self.P, self.Q):
            if ideal.ring != RING_XYZ:
                raise PreconditionError("triple ideals must live in k[x,y,z]")
        if self.M.support() != {0, 1, 2} or not _has_pure_powers(self.M, (0, 1, 2)):
            raise PreconditionError("radical of M must be (x,y,z)")
        if self.P.support() != {0, 1} or not _has_pure_powers(self.P, (0, 1)):
            raise PreconditionError("radical of P must be (x,y)")
        if self.Q.support() != {2}:
            raise PreconditionError("radical of Q must be (z)")

    @classmethod
    def from_bases(
        cls,
        m_base: MonomialIdeal,
        m_mult: int,
        p_base: MonomialIdeal,
        p_mult: int,
        q_base: MonomialIdeal,
        q_mult: int,
    ) -> "MPQTriple":
        return cls(
            power(m_base, m_mult),
            power(p_base, p_mult),
            power(q_base, q_mult),
            m_base,
            m_mult,
            p_base,
            p_mult,
            q_base,
            q_mult,
        )

    @classmethod
    def from_ideals(
        cls, m: MonomialIdeal, p: MonomialIdeal, q: MonomialIdeal
    ) -> "MPQTriple":
        return cls(m, p, q, m, 1, p, 1, q, 1)

    def raised(self, k: int) -> "MPQTriple":
        """The triple (M^k, P^k, Q^k); power containments rescale by k."""
        if k < 1:
            raise PreconditionError(f"power must be >= 1, got {k}")
        return MPQTriple.from_bases(
            self.m_base,
            self.m_mult * k,
            self.p_base,
            self.p_mult * k,
            self.q_base,
            self.q_mult * k,
        )


def _has_pure_powers(ideal: MonomialIdeal, coords) -> bool:
    for i in coords:
        if not any(
            g[i] > 0 and all(e == 0 for j, e in enumerate(g) if j != i)
            for g in ideal.gens
        ):
            return False
    return True


def _xyz(*gens) -> MonomialIdeal:
    return make_ideal(RING_XYZ, gens)


def type_a_triple(m: int) -> MPQTriple:
    """Monotone family: depth jumps from 1 to 2 at t = m and stays there."""
    if m < 2:
        raise PreconditionError(f"typeA needs m >= 2, got {m}")
    return MPQTriple.from_bases(
        _xyz((2 * m - 2, 0, 0), (0, m, 0), (0, 0, 2 * m)),
        2,
        _xyz((2 * m - 1, 0, 0), (0, 2 * m - 1, 0)),
        1,
        _xyz((0, 0, 1)),
        1,
    )


def type_b_triple(m: int) -> MPQTriple:
    """One-bump family: depth 2 exactly at t = m."""
    if m < 1:
        raise PreconditionError(f"typeB needs m >= 1, got {m}")
    return MPQTriple.from_bases(
        _xyz((2 * m, 0, 0), (0, 2 * m, 0), (1, m - 1, 1), (0, 0, 2 * m)),
        2,
        _xyz((m, 0, 0), (0, m, 0)),
        1,
        _xyz((0, 0, 2 * m + 2)),
        1,
    )


def type_c0_triple(m: int) -> MPQTriple:
    """Periodic family: depth 2 exactly at multiples of m."""
    if m < 2:
        raise PreconditionError(f"typeC with d = 0 needs m >= 2, got {m}")
    return MPQTriple.from_bases(
        _xyz((2 * m - 2, 0, 0), (0, m, 0), (0, 0, m)),
        2,
        _xyz((2 * m - 1, 0, 0), (0, 2 * m - 1, 0)),
        1,
        _xyz((0, 0, 1)),
        1,
    )


def _periodic_core_triple(m: int, d: int) -> MPQTriple:
    """Containment holds exactly at t = d mod m; needs sqrt(m/2) <= d <= m/2."""
    if not (m >= 4 and d >= 2 and 2 * d <= m and 2 * d * d >= m):
        raise AssertionError(
            f"periodic core parameters (m={m}, d={d}) out of range; construction bug"
        )
    return MPQTriple.from_bases(
        _xyz(
            (2 * m + 1 - d, 0, 0),
            (0, m + 2 * d - 1, 0),
            (0, 0, m + 2 * d - 1),
            (1, m - 1, 1),
        ),
        2,
        _xyz((2 * m, 0, 0), (0, 2 * m, 0)),
        1,
        _xyz((0, 0, 2)),
        1,
    )


def type_c_triple(m: int, d: int) -> MPQTriple:
    """Periodic family: depth 2 exactly at t = d (mod m).

    For 0 < d <= m/2 the core construction is applied after scaling both
    parameters by c = max(ceil(m/(2d^2)), 2), then the triple is raised to
    the c-th power; for d > m/2 the (m, m-d) triple raised to the (m-1)-th
    power flips the residue.
    """
    if m < 2 or not (0 <= d < m):
        raise PreconditionError(f"typeC needs m >= 2 and 0 <= d < m, got ({m}, {d})")
    if d == 0:
        return type_c0_triple(m)
    if 2 * d <= m:
        c = max(-(-m // (2 * d * d)), 2)
        return _periodic_core_triple(c * m, c * d).raised(c)
    return type_c_triple(m, m - d).raised(m - 1)


def example6_triple() -> MPQTriple:
    """Five-variable family with symbolic depth 2,1,2,2,2,... (dip at t = 2)."""
    return MPQTriple.from_bases(
        _xyz((7, 0, 0), (0, 7, 0), (2, 2, 1), (0, 0, 5)),
        2,
        _xyz((7, 0, 0), (0, 7, 0)),
        1,
        _xyz((0, 0, 2)),
        1,
    )


def _compositions(total: int, parts: int) -> np.ndarray:
    """All length-``parts`` non-negative integer vectors summing to ``total``."""
    if parts == 1:
        return np.array([[total]], dtype=np.int64)
    if parts == 2:
        left = np.arange(total + 1, dtype=np.int64)
        return np.stack([left, total - left], axis=1)
    if parts == 3:
        a, b = np.meshgrid(
            np.arange(total + 1, dtype=np.int64),
            np.arange(total + 1, dtype=np.int64),
            indexing="ij",
        )
        keep = (a + b) <= total
        a, b = a[keep], b[keep]
        return np.stack([a, b, total - a - b], axis=1)
    if parts == 4:
        rows = []
        for first in range(total + 1):
            rest = _compositions(total - first, 3)
            block = np.empty((len(rest), 4), dtype=np.int64)
            block[:, 0] = first
            block[:, 1:] = rest
            rows.append(block)
        return np.concatenate(rows, axis=0)
    combos = itertools.combinations(range(total + parts - 1), parts - 1)
    out = []
    for bars in combos:
        prev, row = -1, []
        for b in bars:
            row.append(b - prev - 1)
            prev = b
        row.append(total + parts - 2 - prev)
        out.append(row)
    return np.array(out, dtype=np.int64)


def _noncontained_mask(triple: MPQTriple, t: int) -> tuple[np.ndarray, np.ndarray]:
    """Generators of M^t (as exponent rows) and the mask of those outside P^t + Q^t.

    Generators of M^t are enumerated as products of the base generators; a
    monomial lies in the sum of two monomial ideals iff it lies in one of
    them.  Membership in Q^t is a single divisibility (Q is principal);
    membership in P^t is two floor divisions when P is generated by pure
    powers, else the general integer oracle.
    """
    if t < 1:
        raise PreconditionError(f"power must be >= 1, got {t}")
    base = np.array(triple.m_base.gens, dtype=np.int64)
    combos = _compositions(triple.m_mult * t, len(base))
    exps = combos @ base

    q_gen = np.array(triple.q_base.gens[0], dtype=np.int64)
    in_q = np.all(exps >= q_gen * (triple.q_mult * t), axis=1)

    p_pure = [
        next((i, e) for i, e in enumerate(g) if e) for g in triple.p_base.gens
    ] if all(sum(1 for e in g if e) == 1 for g in triple.p_base.gens) else None
    if p_pure is not None:
        counts = sum(exps[:, i] // e for i, e in p_pure)
        in_p = counts >= triple.p_mult * t
    else:
        need = triple.p_mult * t
        in_p = np.array(
            [nu(tuple(int(x) for x in row), triple.p_base).value >= need for row in exps],
            dtype=bool,
        )
    return exps, ~(in_p | in_q)


def mpq_containment(triple: MPQTriple, t: int) -> Exponents | None:
    """First generator of M^t outside P^t + Q^t, or None when contained."""
    exps, outside = _noncontained_mask(triple, t)
    if not outside.any():
        return None
    return tuple(int(x) for x in exps[int(np.argmax(outside))])


def mpq_noncontained(triple: MPQTriple, t: int) -> list[Exponents]:
    """All generators of M^t outside P^t + Q^t, sorted and deduplicated."""
    exps, outside = _noncontained_mask(triple, t)
    return sorted({tuple(int(x) for x in row) for row in exps[outside]})


def mpq_depth(triple: MPQTriple, t: int) -> int:
    """Symbolic depth of the assembled five-variable ideal at exponent t (1 or 2)."""
    return 2 if mpq_containment(triple, t) is None else 1


def assemble_mpq(triple: MPQTriple) -> Decomposition:
    """The five-variable decomposition M * (P,u) * (Q,v) in k[x,y,z,u,v]."""
    ring = RING_XYZUV
    m_ext = extend_ideal(triple.M, ring, 0)
    p_ext = make_ideal(
        ring, list(extend_ideal(triple.P, ring, 0).gens) + [(0, 0, 0, 1, 0)]
    )
    q_ext = make_ideal(
        ring, list(extend_ideal(triple.Q, ring, 0).gens) + [(0, 0, 0, 0, 1)]
    )
    return Decomposition(
        ring,
        (
            PrimaryComponent(frozenset({0, 1, 2}), m_ext),
            PrimaryComponent(frozenset({0, 1, 3}), p_ext),
            PrimaryComponent(frozenset({2, 4}), q_ext),
        ),
    )


def in_E(s: int, t: int) -> bool:
    """Membership in E(s), the union of the intervals [i(s-1)+1, is]."""
    if s < 1 or t < 1:
        raise PreconditionError(f"need s, t >= 1, got ({s}, {t})")
    return any(i * (s - 1) + 1 <= t <= i * s for i in range(1, t + 1))


def thm28_ring(s: int) -> Ring:
    return Ring(
        tuple(
            f"x{i}_{j}"
            for i in range(1, s + 1)
            for j in range(1, s)
        )
    )


def _thm28_row_supports(s: int) -> list[frozenset[int]]:
    return [
        frozenset(range((i - 1) * (s - 1), i * (s - 1))) for i in range(1, s + 1)
    ]


def thm28_Q(s: int) -> MonomialIdeal:
    """The complete intersection (f_1,...,f_s), f_i the product of row i."""
    ring = thm28_ring(s)
    gens = []
    for row in _thm28_row_supports(s):
        vec = [0] * ring.n
        for i in row:
            vec[i] = 1
        gens.append(tuple(vec))
    return make_ideal(ring, gens)


def thm28_ideal(s: int, expand_ci: bool = False) -> Decomposition:
    """Squarefree six-or-more-variable family with depth dips exactly on E(s).

    The decomposition has one prime per variable row plus the complete
    intersection Q: by default Q stays a single pseudo-component (its
    symbolic powers are its ordinary powers); ``expand_ci`` replaces it by
    its (s-1)^s selector primes, the slow but fully primary form.
    """
    if s < 3:
        raise PreconditionError(f"thm28 needs s >= 3, got {s}")
    ring = thm28_ring(s)
    comps = [prime_component(ring, row) for row in _thm28_row_supports(s)]
    q = thm28_Q(s)
    if expand_ci:
        comps.extend(minimal_primes_squarefree(q).components)
    else:
        comps.append(
            PrimaryComponent(frozenset(range(ring.n)), q, complete_intersection=True)
        )
    return Decomposition(ring, tuple(comps))


def claim1_containment(s: int, t: int) -> bool:
    """Whether Q^t lies in P_1^t + ... + P_s^t; equivalent to t not in E(s)."""
    if s < 3 or t < 1:
        raise PreconditionError(f"need s >= 3 and t >= 1, got ({s}, {t})")
    ring = thm28_ring(s)
    q_power = power(thm28_Q(s), t)
    primes_sum = ideal_sum(
        *(power(prime_component(ring, row).ideal, t) for row in _thm28_row_supports(s))
    )
    return ideal_contained_in(q_power, primes_sum)


def describe_witness(ring: Ring, a: Exponents) -> str:
    return format_monomial(ring, a)
