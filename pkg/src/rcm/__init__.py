"""Monochromatic connected clique matchings in 2-coloured complete graphs."""

from .certificate import Certificate, format_certificate, parse_certificate
from .colouring import (
    BLUE,
    RED,
    CliquePacking,
    Colour,
    ColouredCompleteGraph,
    build_colouring,
    colour_components,
    find_clique,
    greedy_clique_packing,
    is_monochromatic_clique,
    parse,
    serialize,
)
from .extremal import BurrParams, burr_colouring, burr_lower_bound, perturb, random_colouring, theorem_bound
from .finder import StructureViolation, find_connected_clique_matching
from .oracle import decide, max_connected_packing, ramsey_connected_exact, verify_certificate

__version__ = "0.1.0"
