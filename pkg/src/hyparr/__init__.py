"""Exact homotopy invariants of complex hyperplane arrangement complements.

All values are immutable and all operations are pure functions of their
arguments, so everything here is safe to share across threads.
"""

from .arrangement import (
    Arrangement,
    CircuitList,
    CollinearityData,
    LinearForm,
    boolean_arrangement,
    braid_arrangement,
    circuits,
    cone,
    decone,
    load_arrangement,
    parse_arrangement,
    rank,
    rank2_flats,
    rank_deficit,
)
from .chain_complex import (
    MinimalChainComplex,
    PresentationMatrix,
    Resolution,
    hattori_model,
    kunneth_product,
    pi_p_resolution,
    skeleton_presentation,
    torus_complex,
    verify_complex,
    wedge_complex,
)
from .connectivity import ConnectivityReport, coinvariants_rank, connectivity
from .errors import (
    BudgetError,
    InputError,
    MinorCapExceeded,
    NotHypersolvableError,
    SearchBudgetExceeded,
    WorkBoundExceeded,
)
from .fitting import (
    FittingIdeal,
    HilbertFunction,
    char_variety_membership,
    coker_dim_at,
    fitting_ideal,
    hilbert_function,
    monomial_substitution,
    variety_membership,
)
from .gaussian import GaussianRational, parse_gaussian
from .graphs import (
    CycleSet,
    Graph,
    chromatic_polynomial,
    four_cycles,
    graphic_arrangement,
    hypersolvable_graph_series,
    is_chordal,
    poincare_from_chromatic,
    solvable_graph_extension,
    supersolvable_series,
    triangle_free_report,
)
from .hypersolvable import (
    CompositionSeries,
    ExtensionVerdict,
    collinear_point,
    composition_series,
    is_supersolvable,
    search_composition_series,
    solvable_extension,
)
from .laurent import LaurentPoly
from .orlik_solomon import (
    GradedDims,
    NbcBasis,
    broken_circuits,
    kernel_rank,
    nbc_basis,
    poincare_polynomial,
    quadratic_os_dims,
)
from .polynomials import IntPolynomial

__version__ = "0.1.0"
