"""Minimal cellular resolutions of monomial ideals via discrete Morse matchings."""
from ._kernels import BACKEND
from .catalog import (
    assemble_matching,
    assemble_with_reports,
    catalog,
    fiber_matching,
    match_complex,
    restrict_to_J,
    search_matching,
)
from .fibers import delta_of_fiber, lift_matching, phi, phi_inverse, strip_fiber
from .monomial import (
    LcmLattice,
    Monomial,
    MonomialIdeal,
    artinian_reduction,
    label_of_subset,
    lcm_lattice,
    lcm_monomials,
    parse_monomial,
    scarf_complex,
)
from .morse import (
    BettiTable,
    Matching,
    MorseComplex,
    betti_from_matching,
    check_matching,
    critical_vertices,
    find_cycle,
    morse_complex,
    precedes,
    verify_bw,
)
from .oracle import minimal_betti, reduced_homology, upper_koszul
from .simplicial import SimplicialComplex
from .twogen import (
    algorithm1_matching,
    betti_and_cm_type,
    critical_closed_form,
    explicit_matching,
    is_admissible,
    is_level,
    p_partition,
    scarf_structure,
)

__version__ = "0.1.0"
