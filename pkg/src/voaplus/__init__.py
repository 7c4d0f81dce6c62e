"""voaplus: exact-arithmetic degree-2 algebras of rootless rank-2 even lattices.

Lattice validation and shells, the degree-2 algebra with its invariant form,
an exact quadratic-system solver, idempotent and Virasoro classification,
adjoint spectra, and finite automorphism groups.
"""

from .algebra import (
    AlgebraElement,
    Degree2Algebra,
    algebra_from_json,
    algebra_to_json,
    build,
    conjugate,
    form_eval,
    identity_element,
    orthogonal_square,
    pair_tensor,
    pq_split,
    product,
    v_element,
    vector_square,
    virasoro_element,
)
from .autgroup import (
    KIND_TYPE1_NORM116,
    KIND_VIRASORO_HALF,
    AutGroupResult,
    DistinguishedSet,
    aut_group,
    dihedral_check,
    distinguished_set,
)
from .classify import (
    IdempotentRecord,
    VirasoroEnumeration,
    VirasoroRecord,
    distinguished_type0,
    enumerate_idempotents,
    enumerate_virasoro,
    proper_summand_set,
    proper_summands,
    sum_analysis,
    type0_family_description,
)
from .errors import (
    AlgebraMismatch,
    DegreeTooHigh,
    DependentBasis,
    HasRoots,
    InfiniteFamily,
    NotEven,
    NotPositiveDefinite,
    NotSymmetric,
    ParseError,
    SpanFailure,
    TooManyVariables,
    VoaplusError,
    WrongCase,
)
from .lattice import (
    Lattice2,
    LatticeClass,
    Shell,
    index_determinant_check,
    lagrange_gauss,
    shell,
    validate,
)
from .lattice import classify as classify_lattice
from .polysolve import (
    Poly,
    PolySystem,
    SolveVerdict,
    eliminant,
    groebner,
    idempotent_system,
    rational_box_solutions,
    rational_roots,
    solve,
    virasoro_system,
)
from .spectra import AdSpectrum, ad_matrix, ad_spectrum, charpoly

__all__ = [name for name in dir() if not name.startswith("_")]
