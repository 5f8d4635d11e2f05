"""Exact representation volumes of Seifert fibered and graph 3-manifolds.

The package computes, entirely in rational arithmetic, the finite set of
volumes of representations of a closed Seifert fibered space into the
identity component of the isometry group of the SL2R-tilde geometry,
together with witness certificates, the closed-form volume values of
one-edged graph manifolds, leading-order Dehn-filling volume estimates
for a Seifert piece glued to a hyperbolic piece, and the value-level
Chern-Simons calculus (volume conversions, the cs* invariant and its
shift, solid-torus, transport and gluing rules).

The enumeration kernels run on a compiled extension when it is available
and fall back to pure Python otherwise; `repvol._backend.ACTIVE` names
the backend in use.  The `repvol` command line exposes the same
operations over a small JSON file format.
"""

from ._backend import ACTIVE as active_kernel_backend
from .chern_simons import (
    BoundaryHolonomy,
    CsStar,
    cs_star,
    cs_star_multiply,
    hyperbolic_volume_from_cs,
    path_cs_transport,
    seifert_cs_from_volume,
    shift_half_alpha,
    shift_half_beta,
    solid_torus_cs_star,
)
from .gluing import (
    ERROR_ORDER_NOTE,
    CoveringParameters,
    FillingEstimate,
    GluingMatrix,
    HyperbolicPieceData,
    additivity,
    case_ii_pipeline,
    dehn_filling_volume_estimate,
    filling_admissible,
    geodesic_length_leading,
    graph_volume_values,
)
from .rep_volumes import (
    FOUR_PI_SQUARED,
    AdmissibleTuple,
    RepresentationCertificate,
    VolumeValue,
    brute_force_volume_set,
    ehn_admissible,
    enumerate_volume_set,
    max_volume,
    volume_of_tuple,
)
from .seifert_core import (
    GeometryClass,
    Rational,
    SeifertInvariants,
    classify_geometry,
    euler_number,
    normalize,
    orbifold_euler_characteristic,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "active_kernel_backend",
    "Rational",
    "SeifertInvariants",
    "GeometryClass",
    "euler_number",
    "orbifold_euler_characteristic",
    "normalize",
    "classify_geometry",
    "FOUR_PI_SQUARED",
    "AdmissibleTuple",
    "VolumeValue",
    "RepresentationCertificate",
    "ehn_admissible",
    "volume_of_tuple",
    "enumerate_volume_set",
    "max_volume",
    "brute_force_volume_set",
    "GluingMatrix",
    "ERROR_ORDER_NOTE",
    "CoveringParameters",
    "HyperbolicPieceData",
    "FillingEstimate",
    "graph_volume_values",
    "case_ii_pipeline",
    "additivity",
    "geodesic_length_leading",
    "dehn_filling_volume_estimate",
    "filling_admissible",
    "BoundaryHolonomy",
    "CsStar",
    "seifert_cs_from_volume",
    "hyperbolic_volume_from_cs",
    "cs_star",
    "shift_half_alpha",
    "shift_half_beta",
    "solid_torus_cs_star",
    "path_cs_transport",
    "cs_star_multiply",
]
