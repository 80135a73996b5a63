"""Exact-arithmetic toolkit for cyclic coverings of surfaces of general type.

Subpackages by theme:

- :mod:`plurican.f2geom`: points, hyperplanes and point sets of PG(k-1, F2)
- :mod:`plurican.glgroup`: GL(k, F2) enumeration, orbits and canonical forms
- :mod:`plurican.evenclass`: census of totally even 8-point sets in PG(3, F2)
- :mod:`plurican.invariants`: covering invariants, canonical-map degrees,
  moduli dimensions, and the catalogue of base surfaces
- :mod:`plurican.torsion`: finite abelian torsion groups, covering counts and
  component bounds
- :mod:`plurican.arrangements`: exact line arrangements over Q and Q(omega)
- :mod:`plurican.cli`: the ``plurican`` command
"""

from .errors import DomainError, HypothesisError, MalformedInputError, ValidationError
from .f2geom import (
    F2Point,
    Hyperplane,
    PointSet,
    all_hyperplanes,
    all_points,
    hyperplane_profile,
    incident,
    is_totally_even,
)
from .glgroup import F2Matrix, OrbitCensus, act, canonical_form, enumerate_gl, orbit_census
from .evenclass import (
    EvenSetTag,
    EvenSetType,
    classify_type,
    enumerate_totally_even,
    verify_lemma_ev,
)
from .invariants import (
    CATALOG,
    CatalogEntry,
    CoveringParams,
    SurfaceInvariants,
    branch_curve_genus,
    catalog_entry,
    composed_canonical_degree,
    covering_invariants,
    generic_pluricanonical_smooth,
    h0_K_plus_C,
    k2_from_heavy_points,
    moduli_dimension,
    moduli_dimension_lower_bound,
    pg_of_double_cover_pg0,
)
from .torsion import (
    AutAction,
    FiniteAbelianGroup,
    cnew_component_count,
    covering_count,
    cplus_total,
    is_divisible,
    orbit_count,
    theorem_mod_component_bound,
    tor_d_order,
)
from .arrangements import (
    ExactScalar,
    LabeledArrangement,
    ProjLine,
    analyze_extension,
    check_campedelli,
    compute_incidences,
)

__version__ = "0.1.0"
