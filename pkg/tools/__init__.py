"""
MONOCLE Tools Package
MONOchromatic Connectivity Lab & Extractors toolkit
"""

from .errors import (
    DomainError,
    FormatError,
    InvariantBreach,
    MonocleError,
    ParameterError,
    PreconditionError,
    ResourceLimitError,
    UnsupportedOrderError,
)
from .graph_core import (
    ColouredBipartiteGraph,
    ColouredCompleteGraph,
    CutCertificate,
    SubgraphWitness,
    certify_intersect,
    closure_addvtx,
    is_k_connected,
    largest_component_order,
    peel_low_degree,
    verify_witness,
    vertex_connectivity,
)
from .algebra import build_affine_plane, build_field, decompose_hamilton_paths
from .constructions import (
    CONSTRUCTIONS,
    construct_affine,
    construct_bg,
    construct_bipartite_modular,
    construct_hamzero,
)
from .extract_two import extract_degs, extract_thm21k
from .extract_general import (
    extract_bip_component,
    extract_mader,
    extract_r11,
    extract_r1kbip,
    extract_thm_r1k,
)
from .extract_three import extract_31kbip, extract_thm31k
from .bounds import bipartite_bounds, theorem_bounds
from .oracle import adversarial_search, exact_M, exact_M_by_colour
from .ecg_format import parse, read_colouring, serialise, write_colouring

__all__ = [
    'MonocleError',
    'DomainError',
    'ParameterError',
    'UnsupportedOrderError',
    'PreconditionError',
    'ResourceLimitError',
    'FormatError',
    'InvariantBreach',
    'ColouredCompleteGraph',
    'ColouredBipartiteGraph',
    'CutCertificate',
    'SubgraphWitness',
    'is_k_connected',
    'vertex_connectivity',
    'peel_low_degree',
    'closure_addvtx',
    'certify_intersect',
    'verify_witness',
    'build_field',
    'build_affine_plane',
    'decompose_hamilton_paths',
    'CONSTRUCTIONS',
    'construct_bg',
    'construct_affine',
    'construct_hamzero',
    'construct_bipartite_modular',
    'extract_degs',
    'extract_thm21k',
    'extract_mader',
    'extract_bip_component',
    'extract_r11',
    'extract_r1kbip',
    'extract_thm_r1k',
    'extract_31kbip',
    'extract_thm31k',
    'theorem_bounds',
    'largest_component_order',
    'bipartite_bounds',
    'exact_M',
    'exact_M_by_colour',
    'adversarial_search',
    'parse',
    'serialise',
    'read_colouring',
    'write_colouring',
]
