"""Depth functions of symbolic powers of monomial ideals.

Exact-arithmetic toolkit: monomial ideal algebra, integer/rational
membership oracles for powers and integral closures, degree complexes with
reduced homology, a depth engine over finite candidate grids, the
parameterized ideal families with prescribed symbolic depth behavior, and
the step-function algebra that decomposes any asymptotically periodic
positive function into realizable building blocks.
"""

from .complexes import (
    DegreePoint,
    SimplicialComplex,
    degree_complex,
    degree_complex_unmixed,
    euler_characteristic,
    is_connected,
    negative_support,
    nonnegative_part,
    reduced_homology_dims,
)
from .depth import (
    DepthReport,
    depth,
    depth_at_least_1,
    depth_at_least_2,
    depth_of_symbolic_power,
    symbolic_depth_function,
)
from .families import (
    MPQTriple,
    assemble_mpq,
    claim1_containment,
    example6_triple,
    in_E,
    mpq_containment,
    mpq_depth,
    mpq_noncontained,
    thm28_Q,
    thm28_ideal,
    type_a_triple,
    type_b_triple,
    type_c0_triple,
    type_c_triple,
)
from .ideals import (
    Decomposition,
    Exponents,
    MonomialIdeal,
    PreconditionError,
    PrimaryComponent,
    Ring,
    RingMismatchError,
    colon_by_variable,
    component_powers,
    contains_monomial,
    divides,
    expand_pseudo_components,
    extend_ideal,
    format_monomial,
    ideal_contained_in,
    ideal_product,
    ideal_sum,
    intersect,
    make_ideal,
    minimal_primes_squarefree,
    minimalize,
    power,
    prime_component,
    saturate_maximal,
    symbolic_power,
    tensor,
    unit_ideal,
    zero_ideal,
)
from .membership import (
    NuValue,
    closure_filtration,
    in_closure_of_power,
    in_power,
    integral_closure,
    is_integrally_closed,
    nu,
    nu_star,
)
from .stepfun import (
    BaseA,
    BaseB,
    BaseC,
    Const,
    Overline,
    Recipe,
    Star,
    StepFunction,
    base_eval,
    decompose,
    evaluate,
    overline,
    parse_step_function,
    pd_report,
    realize,
    recipe_text,
    star,
)

__version__ = "0.1.0"
