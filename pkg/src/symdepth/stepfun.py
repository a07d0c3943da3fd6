"""Asymptotically periodic step functions and their realization recipes.

A step function is a finite prefix followed by a repeating period, indexed
from t = 1.  The algebra has two closed operations, star(f, g) = f + g - 1
and overline(f) = f - 1 (the latter only when f stays >= 2).  Every positive
asymptotically periodic function decomposes into a star/overline expression
over four base families: the monotone jump A(m), the one-bump B(m), the
periodic bump C(m, d) and constants.  Each base is realizable by a concrete
monomial ideal family, so a recipe doubles as a construction plan.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .families import (
    MPQTriple,
    assemble_mpq,
    example6_triple,
    type_a_triple,
    type_b_triple,
    type_c_triple,
)
from .ideals import (
    Decomposition,
    PreconditionError,
    PrimaryComponent,
    Ring,
    make_ideal,
    tensor,
)


@dataclass(frozen=True)
class StepFunction:
    """value(t) = prefix[t-1] for t <= len(prefix), then the period repeats.

    Canonical form: the period has minimal length and the prefix absorbs
    nothing the period already provides (trailing prefix entries matching
    the rotated period are stripped).  Values are non-negative integers;
    the algebra's operations keep their own positivity preconditions.
    """

    prefix: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        prefix = tuple(int(v) for v in self.prefix)
        period = tuple(int(v) for v in self.period)
        if not period:
            raise ValueError("period must be nonempty")
        if any(v < 0 for v in prefix + period):
            raise ValueError("step function values must be non-negative")
        for d in range(1, len(period)):
            if len(period) % d == 0 and period == period[:d] * (len(period) // d):
                period = period[:d]
                break
        while prefix and prefix[-1] == period[-1]:
            prefix = prefix[:-1]
            period = period[-1:] + period[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "period", period)

    def value(self, t: int) -> int:
        if t < 1:
            raise ValueError(f"step functions are indexed from t = 1, got {t}")
        if t <= len(self.prefix):
            return self.prefix[t - 1]
        return self.period[(t - len(self.prefix) - 1) % len(self.period)]

    def values(self, t_max: int) -> tuple[int, ...]:
        return tuple(self.value(t) for t in range(1, t_max + 1))

    def min_value(self) -> int:
        return min(self.prefix + self.period)

    def max_value(self) -> int:
        return max(self.prefix + self.period)

    @property
    def is_positive(self) -> bool:
        return self.min_value() >= 1

    def __repr__(self):
        pre = ",".join(map(str, self.prefix))
        per = ",".join(map(str, self.period))
        return f"StepFunction({pre};{per})"

    def text(self) -> str:
        """The prefix;period syntax, e.g. '2;1,2' for 2,1,2,1,2,..."""
        pre = ",".join(map(str, self.prefix))
        per = ",".join(map(str, self.period))
        return f"{pre};{per}"


def parse_step_function(text: str) -> StepFunction:
    """Parse 'prefix;period' with comma-separated integers (prefix may be empty)."""
    if ";" not in text:
        raise ValueError(f"expected 'prefix;period', got {text!r}")
    pre_txt, per_txt = text.split(";", 1)
    try:
        prefix = tuple(int(v) for v in pre_txt.split(",") if v.strip() != "")
        period = tuple(int(v) for v in per_txt.split(",") if v.strip() != "")
    except ValueError as exc:
        raise ValueError(f"bad integer in step function {text!r}") from exc
    if not period:
        raise ValueError(f"period part of {text!r} is empty")
    return StepFunction(prefix, period)


def constant(c: int) -> StepFunction:
    return StepFunction((), (c,))


def _pointwise(f: StepFunction, g: StepFunction, op) -> StepFunction:
    pre_len = max(len(f.prefix), len(g.prefix))
    per_len = _lcm(len(f.period), len(g.period))
    vals = [op(f.value(t), g.value(t)) for t in range(1, pre_len + per_len + 1)]
    return StepFunction(tuple(vals[:pre_len]), tuple(vals[pre_len:]))


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a // gcd(a, b) * b


def star(f: StepFunction, g: StepFunction) -> StepFunction:
    """Pointwise f + g - 1 (closed on positive functions)."""
    return _pointwise(f, g, lambda x, y: x + y - 1)


def overline(f: StepFunction) -> StepFunction:
    """Pointwise f - 1; requires min value >= 2."""
    if f.min_value() < 2:
        raise PreconditionError(f"overline needs min value >= 2, got {f.min_value()}")
    return StepFunction(
        tuple(v - 1 for v in f.prefix), tuple(v - 1 for v in f.period)
    )


# ---------------------------------------------------------------------------
# Recipes.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BaseA:
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise PreconditionError(f"A base needs m >= 2, got {self.m}")


@dataclass(frozen=True)
class BaseB:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise PreconditionError(f"B base needs m >= 1, got {self.m}")


@dataclass(frozen=True)
class BaseC:
    m: int
    d: int

    def __post_init__(self):
        if self.m < 2 or not 0 <= self.d < self.m:
            raise PreconditionError(f"C base needs m >= 2, 0 <= d < m, got {self}")


@dataclass(frozen=True)
class Const:
    c: int

    def __post_init__(self):
        if self.c < 1:
            raise PreconditionError(f"constant base needs c >= 1, got {self.c}")


@dataclass(frozen=True)
class Star:
    left: "Recipe"
    right: "Recipe"


@dataclass(frozen=True)
class Overline:
    child: "Recipe"


Recipe = BaseA | BaseB | BaseC | Const | Star | Overline


def base_eval(node: Recipe) -> StepFunction:
    """The step function a base node stands for (A/B/C/Const only)."""
    if isinstance(node, BaseA):
        return StepFunction((1,) * (node.m - 1), (2,))
    if isinstance(node, BaseB):
        return StepFunction((1,) * (node.m - 1) + (2,), (1,))
    if isinstance(node, BaseC):
        block = [1] * node.m
        block[(node.d - 1) % node.m] = 2
        return StepFunction((), tuple(block))
    if isinstance(node, Const):
        return constant(node.c)
    raise TypeError(f"not a base node: {node}")


def evaluate(node: Recipe) -> StepFunction:
    """Exact step function of a recipe tree."""
    if isinstance(node, Star):
        return star(evaluate(node.left), evaluate(node.right))
    if isinstance(node, Overline):
        child = evaluate(node.child)
        return overline(child)
    return base_eval(node)


def recipe_text(node: Recipe) -> str:
    """Nested s-expression rendering of a recipe."""
    if isinstance(node, BaseA):
        return f"(A {node.m})"
    if isinstance(node, BaseB):
        return f"(B {node.m})"
    if isinstance(node, BaseC):
        return f"(C {node.m} {node.d})"
    if isinstance(node, Const):
        return f"(const {node.c})"
    if isinstance(node, Star):
        return f"(star {recipe_text(node.left)} {recipe_text(node.right)})"
    return f"(overline {recipe_text(node.child)})"


def _star_fold(nodes: list[Recipe]) -> Recipe:
    out = nodes[0]
    for node in nodes[1:]:
        out = Star(out, node)
    return out


def _layer_pieces(layer: StepFunction) -> list[Recipe] | None:
    """Direct base lift when the 0-1 layer already has a basic shape."""
    pre, per = layer.prefix, layer.period
    if per == (1,) and all(v == 0 for v in pre):
        # 0,...,0,1,1,...: monotone; all-ones maps to a constant
        return [Const(2)] if not pre else [BaseA(len(pre) + 1)]
    if per == (0,) and sum(pre) == 1:
        return [BaseB(pre.index(1) + 1)]
    if not pre and sum(per) == 1:
        m = len(per)
        return [Const(2)] if m == 1 else [BaseC(m, (per.index(1) + 1) % m)]
    return None


def decompose(f: StepFunction) -> Recipe:
    """A recipe evaluating exactly to f, for positive asymptotically periodic f.

    f - 1 is sliced into 0-1 layers; a layer of basic shape lifts to a base
    node directly, and a general layer splits into a periodic part, its
    complement below a cutoff s, and the prefix part, each a sum of basic
    0-1 functions.  Lifting every piece, star-folding, and applying one
    overline per layer reassembles f.
    """
    if not f.is_positive:
        raise PreconditionError("only positive functions decompose")
    height = f.max_value() - 1
    layer_lifts: list[Recipe] = []
    for j in range(1, height + 1):
        layer = _pointwise(f, constant(j), lambda x, thr: 1 if x - 1 >= thr else 0)
        if layer.max_value() == 0:
            continue
        direct = _layer_pieces(layer)
        if direct is not None:
            layer_lifts.append(_star_fold(direct))
            continue
        c = len(layer.period)
        k = len(layer.prefix)
        s = c * ((k + c - 1) // c) if k else c
        while not any(layer.value(u) == 1 for u in range(1, s + 1)):
            s += c
        pieces: list[Recipe] = []
        # The periodic part agrees with the layer beyond s; since s is a
        # multiple of c its block needs no rotation.
        tail_block = tuple(layer.value(s + i) for i in range(1, c + 1))
        if any(tail_block):
            if c == 1:
                pieces.append(Const(2))
            else:
                for r in range(1, c + 1):
                    if tail_block[r - 1] == 1:
                        pieces.append(BaseC(c, r % c))

        def phi1(u: int) -> int:
            return tail_block[(u - 1) % c]

        pieces.append(BaseA(s + 1))
        for u in range(1, s + 1):
            if phi1(u) == 0:
                pieces.append(BaseB(u))
        for u in range(1, s + 1):
            if layer.value(u) == 1:
                pieces.append(BaseB(u))
        layer_lifts.append(Overline(_star_fold(pieces)))
    if not layer_lifts:
        return Const(1)
    return _star_fold(layer_lifts)


def pd_report(node: Recipe, n_ambient: int) -> StepFunction:
    """Projective dimension profile in an ambient ring with n variables.

    pd(t) = n_ambient - depth(t) - 1, valid when n_ambient exceeds the
    maximum depth value.
    """
    values = evaluate(node)
    if n_ambient < values.max_value() + 1:
        raise PreconditionError(
            f"ambient ring needs at least {values.max_value() + 1} variables"
        )
    return StepFunction(
        tuple(n_ambient - v - 1 for v in values.prefix),
        tuple(n_ambient - v - 1 for v in values.period),
    )


# ---------------------------------------------------------------------------
# Realization plans.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RealizationStep:
    """One node of a realization plan.

    ``kind`` is one of family / principal / product / reduction.  Concrete
    steps carry a decomposition whose symbolic depth function must equal
    ``concrete_depths``; reduction steps are symbolic (generic hyperplane
    sections, not computable here) and carry none.  ``target`` is the
    function the recipe node itself stands for.
    """

    kind: str
    recipe: Recipe
    target: StepFunction
    verifiable: bool
    decomposition: Decomposition | None
    concrete_depths: StepFunction | None
    reductions: int
    children: tuple["RealizationStep", ...]
    note: str


_COUNTER = itertools.count()


def _fresh_names(base_names: tuple[str, ...]) -> Ring:
    tag = next(_COUNTER)
    return Ring(tuple(f"{n}{tag}" for n in base_names))


def _relabel(decomposition: Decomposition) -> Decomposition:
    ring = _fresh_names(decomposition.ring.names)
    comps = tuple(
        PrimaryComponent(
            c.support,
            make_ideal(ring, c.ideal.gens),
            c.complete_intersection,
        )
        for c in decomposition.components
    )
    return Decomposition(ring, comps)


def _family_step(node: Recipe, triple: MPQTriple, label: str) -> RealizationStep:
    target = base_eval(node)
    return RealizationStep(
        kind="family",
        recipe=node,
        target=target,
        verifiable=True,
        decomposition=_relabel(assemble_mpq(triple)),
        concrete_depths=target,
        reductions=0,
        children=(),
        note=label,
    )


def realize(node: Recipe) -> RealizationStep:
    """Build the realization plan for a recipe.

    Bases map to their ideal families and constants to a principal ideal in
    c + 1 variables.  A star maps to the product of the children's ideals on
    disjoint variable blocks (depth adds plus one) followed by two symbolic
    reductions; an overline is one symbolic reduction.  A node stays
    verifiable only while no reduction occurs below it.
    """
    if isinstance(node, BaseA):
        return _family_step(node, type_a_triple(node.m), f"typeA m={node.m}")
    if isinstance(node, BaseB):
        return _family_step(node, type_b_triple(node.m), f"typeB m={node.m}")
    if isinstance(node, BaseC):
        return _family_step(
            node, type_c_triple(node.m, node.d), f"typeC m={node.m} d={node.d}"
        )
    if isinstance(node, Const):
        ring = _fresh_names(tuple(f"w{k}" for k in range(node.c + 1)))
        gen = tuple([1] + [0] * node.c)
        decomposition = Decomposition(
            ring,
            (PrimaryComponent(frozenset({0}), make_ideal(ring, [gen])),),
        )
        target = base_eval(node)
        return RealizationStep(
            kind="principal",
            recipe=node,
            target=target,
            verifiable=True,
            decomposition=decomposition,
            concrete_depths=target,
            reductions=0,
            children=(),
            note=f"principal ideal in {node.c + 1} variables",
        )
    if isinstance(node, Overline):
        child = realize(node.child)
        return RealizationStep(
            kind="reduction",
            recipe=node,
            target=evaluate(node),
            verifiable=False,
            decomposition=None,
            concrete_depths=None,
            reductions=1,
            children=(child,),
            note="one symbolic hyperplane reduction",
        )
    if isinstance(node, Star):
        left, right = realize(node.left), realize(node.right)
        target = evaluate(node)
        if left.verifiable and right.verifiable:
            product = tensor(left.decomposition, right.decomposition)
            product_depths = _pointwise(
                left.target, right.target, lambda x, y: x + y + 1
            )
            product_step = RealizationStep(
                kind="product",
                recipe=node,
                target=product_depths,
                verifiable=True,
                decomposition=product,
                concrete_depths=product_depths,
                reductions=0,
                children=(left, right),
                note="disjoint-variable product (depth adds plus one)",
            )
        else:
            product_step = RealizationStep(
                kind="product",
                recipe=node,
                target=target,
                verifiable=False,
                decomposition=None,
                concrete_depths=None,
                reductions=0,
                children=(left, right),
                note="disjoint-variable product (children not concrete)",
            )
        return RealizationStep(
            kind="reduction",
            recipe=node,
            target=target,
            verifiable=False,
            decomposition=None,
            concrete_depths=None,
            reductions=2,
            children=(product_step,),
            note="two symbolic hyperplane reductions after the product",
        )
    raise TypeError(f"not a recipe node: {node}")


def symbolic_depth_check_nodes(
    step: RealizationStep, t_max: int
) -> list[tuple[str, tuple[int, ...], tuple[int, ...]]]:
    """Engine-check every concrete plan node up to t_max.

    Returns (label, expected depths, engine depths) per verifiable node; the
    expected values come from the plan arithmetic, the engine values from the
    degree complex machinery on the node's decomposition.
    """
    from .depth import symbolic_depth_function

    results = []
    if step.verifiable and step.decomposition is not None:
        expected = step.concrete_depths.values(t_max)
        computed = tuple(symbolic_depth_function(step.decomposition, t_max))
        results.append((f"{recipe_text(step.recipe)} [{step.kind}]", expected, computed))
    for child in step.children:
        results.extend(symbolic_depth_check_nodes(child, t_max))
    return results


def plan_lines(step: RealizationStep, indent: int = 0) -> list[str]:
    """Human-readable rendering of a realization plan."""
    pad = "  " * indent
    flag = "concrete" if step.verifiable else "SYMBOLIC"
    head = f"{pad}{recipe_text(step.recipe)} [{step.kind}, {flag}] -> {step.target.text()}"
    if step.kind == "reduction":
        head += f"  ({step.note})"
    elif step.note:
        head += f"  ({step.note})"
    lines = [head]
    for child in step.children:
        lines.extend(plan_lines(child, indent + 1))
    return lines
